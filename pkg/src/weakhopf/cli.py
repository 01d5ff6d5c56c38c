"""Batch front end: validate presentations, build products, run the cleft
reconstruction, check equivalences and evaluate expressions.

Exit codes: 0 when every report entry passes, 1 when a check fails, 2 on
parse/shape errors.  Reports are deterministic: the timing field is written
as 0 unless --timing is given, so identical inputs give identical bytes.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
import time
from typing import Optional

from .algebra import StructureError
from .bialgebra import (
    build_env,
    check_antipode,
    check_bialgebra_axioms,
    projection_identity_suite,
)
from .cleft import (
    FactorizationFailed,
    cleaving_check,
    cleft_to_crossed_iso,
    comodule_algebra_report,
    crossed_to_cleft,
    extension_check,
    reconstruct,
)
from .crossed import (
    HypothesisFailed,
    PreconditionFailed,
    build_crossed_product,
    check_weak_module_algebra,
    cocycle_report,
    crossed_product_law_suite,
    gamma_inverse,
    invert_cocycle,
    module_algebra_suite,
    twisting,
)
from .equivalence import NotAnEquivalence, equivalence_from_phi, phi_from_iso
from .ir import ParseError, SideMismatchError, UnknownNameError, WordTypeError, check_identity_text, evaluate, parse_expr
from .linalg import ShapeError
from .presentation import (
    PresentationError,
    PresentationFile,
    dump_json,
    linmap_to_json,
    load_presentation,
    presentation_to_json,
    report_to_json,
    sha256_file,
)
from .report import VerdictReport

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_BAD_INPUT = 2


def corpus_dir() -> str:
    override = os.environ.get("WEAKHOPF_CORPUS")
    if override:
        return override
    return os.path.join(os.path.dirname(__file__), "corpus")


def load_corpus_identities() -> dict:
    path = os.path.join(corpus_dir(), "identities.json")
    with open(path, "r", encoding="utf-8") as fh:
        return json.load(fh)["contexts"]


def _write_report(args, path: str, report: VerdictReport, pres: PresentationFile, started: float):
    millis = int((time.monotonic() - started) * 1000) if args.timing else 0
    out = report_to_json(report, pres.field, sha256_file(path), millis)
    target = args.report or (path + ".report.json")
    dump_json(out, target)
    return target


def _finish(args, path, report, pres, started) -> int:
    target = _write_report(args, path, report, pres, started)
    print(report.summary())
    for v in report.failures():
        print(f"  FAIL {v.check_id}" + (f" at (row {v.witness.row}, col {v.witness.col})" if v.witness else ""))
    print(f"report: {target}")
    return EXIT_OK if report.all_pass else EXIT_CHECK_FAILED


def cmd_validate(args) -> int:
    started = time.monotonic()
    pres = load_presentation(args.path, args.field)
    H = pres.bialgebra()
    report = VerdictReport("validate")
    report.extend(check_bialgebra_axioms(H), prefix="axiom.")
    if H.antipode is not None:
        report.extend(check_antipode(H), prefix="antipode.")
    report.extend(projection_identity_suite(H), prefix="projection.")
    return _finish(args, args.path, report, pres, started)


def _build_product(pres: PresentationFile, args):
    m = pres.measure(getattr(args, "measure", None))
    data = pres.cocycle(m, getattr(args, "cocycle", None))
    return m, data


def cmd_build(args) -> int:
    started = time.monotonic()
    pres = load_presentation(args.path, args.field)
    m, data = _build_product(pres, args)
    report = VerdictReport("build")
    report.extend(check_weak_module_algebra(m), prefix="wma.")
    _, tw = twisting(m)
    report.extend(tw, prefix="twisting.")
    report.extend(cocycle_report(m, data), prefix="cocycle.")
    try:
        E = build_crossed_product(m, data)
    except HypothesisFailed as exc:
        report.add_fail("build." + exc.check_id, witness=exc.witness)
        _finish(args, args.path, report, pres, started)
        print(f"hypothesis failed: {exc.check_id}")
        return EXIT_CHECK_FAILED
    report.add_pass("build.completed", note=f"E_dim {E.E_dim}")
    report.extend(crossed_product_law_suite(E), prefix="law.")
    report.extend(module_algebra_suite(E), prefix="module.")
    out_path = args.out or (args.path + ".built.json")
    gens = {
        "iE": E.i,
        "pE": E.p,
        "muE": E.mu_E,
        "etaE": E.eta_E,
        "nu": E.nu,
        "jnu": E.j_nu,
        "gam": E.gamma,
        "dE": E.delta_E,
    }
    dump_json(presentation_to_json(pres.field, gens, roles={"built": {"E_dim": E.E_dim}}), out_path)
    code = _finish(args, args.path, report, pres, started)
    print(f"product: {out_path}")
    return code


def cmd_cleft(args) -> int:
    started = time.monotonic()
    pres = load_presentation(args.path, args.field)
    report = VerdictReport("cleft")
    if pres.has_role("extension") and pres.has_role("cleaving"):
        X = pres.extension()
        c = pres.cleaving()
        report.extend(comodule_algebra_report(X.comodule), prefix="comodule.")
        report.extend(extension_check(X), prefix="extension.")
        report.extend(cleaving_check(X, c), prefix="cleaving.")
    else:
        m, data = _build_product(pres, args)
        try:
            E = build_crossed_product(m, data)
        except HypothesisFailed as exc:
            report.add_fail("build." + exc.check_id, witness=exc.witness)
            return _finish(args, args.path, report, pres, started)
        finv, inv_report = invert_cocycle(m, data)
        report.extend(inv_report, prefix="inverse.")
        if finv is None:
            return _finish(args, args.path, report, pres, started)
        _, gi_report = gamma_inverse(E, finv)
        report.extend(gi_report, prefix="integral.")
    return _finish(args, args.path, report, pres, started)


def cmd_reconstruct(args) -> int:
    started = time.monotonic()
    pres = load_presentation(args.path, args.field)
    report = VerdictReport("reconstruct")
    original = None
    if pres.has_role("extension") and pres.has_role("cleaving"):
        X = pres.extension()
        c = pres.cleaving()
    else:
        m, data = _build_product(pres, args)
        original = (m.rho, data.f)
        try:
            E = build_crossed_product(m, data)
        except HypothesisFailed as exc:
            report.add_fail("build." + exc.check_id, witness=exc.witness)
            return _finish(args, args.path, report, pres, started)
        finv, inv_report = invert_cocycle(m, data)
        if finv is None:
            report.extend(inv_report, prefix="inverse.")
            return _finish(args, args.path, report, pres, started)
        gaminv, _ = gamma_inverse(E, finv)
        X, c = crossed_to_cleft(E, gaminv)
    try:
        iso, rec_report = cleft_to_crossed_iso(X, c)
    except FactorizationFailed as exc:
        report.add_fail("factorization", note=str(exc))
        return _finish(args, args.path, report, pres, started)
    report.extend(rec_report)
    if original is not None:
        recon, _ = reconstruct(X, c)
        report.add_equality("recovered_rho_matches", recon.rho, original[0])
        report.add_equality("recovered_f_matches", recon.f, original[1])
    return _finish(args, args.path, report, pres, started)


def cmd_equiv(args) -> int:
    started = time.monotonic()
    pres = load_presentation(args.path, args.field)
    m, data = _build_product(pres, args)
    E = build_crossed_product(m, data)
    phi = pres.phi(args.phi)
    Phi, report = equivalence_from_phi(E, E, phi)
    if Phi is not None:
        try:
            back = phi_from_iso(E, E, Phi)
            report.add_equality("phi_round_trip", back, phi)
        except NotAnEquivalence as exc:
            report.add_fail("phi_round_trip", note=exc.check_id)
    return _finish(args, args.path, report, pres, started)


_EVAL_LEVELS = ("raw", "bialgebra", "measure", "cocycle", "crossed", "crossed_inverse", "cleft")
_CONTEXT_LEVEL = {
    "bialgebra": "bialgebra",
    "hopf": "bialgebra",
    "measure": "measure",
    "cocycle": "cocycle",
    "equivalence": "crossed",
    "crossed": "crossed",
    "crossed_inverse": "crossed_inverse",
    "cleft": "cleft",
}


def _eval_env(pres: PresentationFile, level: str = "raw"):
    """Environment for evaluation, enriched with derived generators.

    Levels build on each other: the bialgebra level adds the projections,
    the measure level the twisting data, the cocycle level the unit powers,
    the crossed level the built product (plus primed/phi data when present),
    the inverse level the cocycle and integral inverses, and the cleft level
    the reconstruction maps.
    """
    if level == "raw":
        objects = {name: ob.dim for name, ob in pres.objects.items()}
        return build_env(pres.field, objects, dict(pres.generators))
    H = pres.bialgebra()
    extra = dict(pres.generators)
    if level == "bialgebra":
        return H.base_env(extra=extra)
    m = pres.measure()
    if level == "measure":
        return m.derived_env(extra=extra)
    data = pres.cocycle(m)
    if level == "cocycle":
        return data.env(extra=extra)
    E = build_crossed_product(m, data)
    if level == "crossed":
        if pres.has_role("phi"):
            extra.update(
                {
                    "rhop": m.rho,
                    "chip": m.chi,
                    "nup": data.nu,
                    "fp": data.f,
                    "u1p": m.u(1),
                }
            )
        return E.env(extra=extra)
    finv, _ = invert_cocycle(m, data)
    if finv is None:
        raise PresentationError("the cocycle is not invertible; no inverse context")
    gaminv, _ = gamma_inverse(E, finv)
    if level == "crossed_inverse":
        extra.update({"finv": finv, "gaminv": gaminv})
        return E.env(extra=extra)
    from .cleft import decomposition
    from .crossed import eval_text
    from . import identities as ids

    X, cl = crossed_to_cleft(E, gaminv)
    decomp, _ = decomposition(X, cl)
    bindings = {
        "gamB": cl.gamma,
        "gamBinv": cl.gamma_inv,
        "q": decomp.q,
        "p": decomp.p,
        "w": decomp.w,
        "wt": decomp.w_tilde,
        "Ups": decomp.upsilon,
    }
    env0 = X.env(extra=bindings)
    sigma = eval_text(ids.SIGMA_EXPR, env0)
    sigma_inv = eval_text(ids.SIGMA_INV_EXPR, env0)
    bindings.update({"sig": sigma, "siginv": sigma_inv})
    bindings.update(extra)
    return X.env(extra=bindings)


def cmd_eval(args) -> int:
    pres = load_presentation(args.sig, args.field)
    level = None
    if args.key:
        contexts = load_corpus_identities()
        found = None
        for context, block in contexts.items():
            if args.key in block:
                found = block[args.key]
                level = _CONTEXT_LEVEL.get(context, "raw")
                break
        if found is None:
            print(f"unknown corpus identity {args.key!r}", file=sys.stderr)
            return EXIT_BAD_INPUT
        lhs, rhs = found["lhs"], found["rhs"]
    else:
        lhs, rhs = args.lhs, args.rhs
    if level is None:
        env, err = None, None
        for lv in _EVAL_LEVELS:
            try:
                candidate = _eval_env(pres, lv)
                for text in filter(None, (lhs, rhs, args.expr)):
                    parse_expr(text, candidate.sig)
                env = candidate
                break
            except UnknownNameError as exc:
                err = exc
            except PresentationError:
                break
        if env is None:
            raise err if err is not None else PresentationError("no usable context")
    else:
        env = _eval_env(pres, level)
    if lhs and rhs:
        verdict = check_identity_text(lhs, rhs, env)
        if verdict.passed:
            print("IDENTITY: pass")
            return EXIT_OK
        w = verdict.witness
        print(
            f"IDENTITY: fail at (row {w.row}, col {w.col}):"
            f" {pres.field.format(w.lhs)} != {pres.field.format(w.rhs)}"
        )
        return EXIT_CHECK_FAILED
    m = evaluate(parse_expr(args.expr, env.sig), env)
    print(json.dumps(linmap_to_json(m), indent=2))
    return EXIT_OK


def main(argv: Optional[list] = None) -> int:
    parser = argparse.ArgumentParser(
        prog="weakhopf",
        description="exact verification of weak bialgebra, crossed product and cleft extension laws",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, with_path=True):
        if with_path:
            p.add_argument("path", help="presentation file (JSON)")
        p.add_argument("--field", help="override the field: rational | prime:P")
        p.add_argument("--report", help="report output path")
        p.add_argument("--timing", action="store_true", help="record real timing in the report")

    p = sub.add_parser("validate", help="check bialgebra/antipode/projection laws")
    common(p)
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("build", help="build the crossed product and run its law suites")
    common(p)
    p.add_argument("--measure", help="generator name of the measure (default from roles)")
    p.add_argument("--cocycle", help="generator name of the cocycle (default from roles)")
    p.add_argument("--out", help="output path for the built product")
    p.set_defaults(func=cmd_build)

    p = sub.add_parser("cleft", help="verify cleftness (of a file or of a built product)")
    common(p)
    p.add_argument("--measure", help="generator name of the measure")
    p.add_argument("--cocycle", help="generator name of the cocycle")
    p.set_defaults(func=cmd_cleft)

    p = sub.add_parser("reconstruct", help="recover measure and cocycle from cleft data")
    common(p)
    p.add_argument("--measure", help="generator name of the measure")
    p.add_argument("--cocycle", help="generator name of the cocycle")
    p.set_defaults(func=cmd_reconstruct)

    p = sub.add_parser("equiv", help="check an equivalence datum phi")
    common(p)
    p.add_argument("--measure", help="generator name of the measure")
    p.add_argument("--cocycle", help="generator name of the cocycle")
    p.add_argument("--phi", help="generator name of phi (default from roles)")
    p.set_defaults(func=cmd_equiv)

    p = sub.add_parser("eval", help="evaluate an expression or check an identity")
    p.add_argument("--sig", required=True, help="presentation file supplying the generators")
    p.add_argument("--expr", help="expression to evaluate")
    p.add_argument("--lhs", help="left side of an identity")
    p.add_argument("--rhs", help="right side of an identity")
    p.add_argument("--key", help="corpus identity id to check")
    p.add_argument("--field", help="override the field: rational | prime:P")
    p.set_defaults(func=cmd_eval)

    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (PresentationError, ParseError, UnknownNameError, WordTypeError,
            SideMismatchError, ShapeError, StructureError, NotAnEquivalence,
            FactorizationFailed, PreconditionFailed) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BAD_INPUT


if __name__ == "__main__":
    sys.exit(main())
