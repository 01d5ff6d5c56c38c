"""Weak bialgebras and weak Hopf algebras presented by structure constants."""
from __future__ import annotations

from typing import Optional

from . import identities as ids
from .algebra import AlgebraData, CoalgebraData, StructureError
from .fields import Field
from .ir import Env, Signature, parse_expr, evaluate, run_identity_table
from .linalg import LinMap, Obj, compose, identity, tensor_product
from .report import VerdictReport


class InvalidStructure(StructureError):
    def __init__(self, report: VerdictReport):
        fail = report.first_failure()
        super().__init__(f"structure axioms fail: {fail.check_id if fail else '?'}")
        self.report = report


def build_env(field: Field, objects: dict, bindings: dict) -> Env:
    """Assemble a signature and environment from name -> LinMap bindings.

    Generator types are read off the bound matrices, which must use objects
    named consistently with ``objects``.
    """
    gens = {}
    for name, m in bindings.items():
        gens[name] = (tuple(ob.name for ob in m.dom), tuple(ob.name for ob in m.cod))
    sig = Signature(objects=dict(objects), generators=gens)
    return Env(sig, field, bindings)


class WeakBialgebra:
    """Carrier H with multiplication, unit, comultiplication and counit
    subject to the weak compatibility axioms; the four source/target
    projections are computed once and cached."""

    def __init__(self, algebra: AlgebraData, coalgebra: CoalgebraData):
        if algebra.obj != coalgebra.obj:
            raise StructureError("algebra and coalgebra must share the carrier")
        if algebra.field != coalgebra.field:
            raise StructureError("algebra and coalgebra must share the field")
        self.algebra = algebra
        self.coalgebra = coalgebra
        self._projections: dict[str, LinMap] = {}
        self._env: Optional[Env] = None

    # -- constructors ------------------------------------------------------

    @classmethod
    def unchecked(cls, field, obj, mu, eta, delta, eps) -> "WeakBialgebra":
        return cls(AlgebraData(field, obj, mu, eta), CoalgebraData(field, obj, delta, eps))

    @classmethod
    def checked(cls, field, obj, mu, eta, delta, eps) -> "WeakBialgebra":
        cand = cls.unchecked(field, obj, mu, eta, delta, eps)
        report = check_bialgebra_axioms(cand)
        if not report.all_pass:
            raise InvalidStructure(report)
        return cand

    # -- accessors ----------------------------------------------------------

    @property
    def field(self) -> Field:
        return self.algebra.field

    @property
    def obj(self) -> Obj:
        return self.algebra.obj

    @property
    def dim(self) -> int:
        return self.algebra.dim

    @property
    def mu(self) -> LinMap:
        return self.algebra.mu

    @property
    def eta(self) -> LinMap:
        return self.algebra.eta

    @property
    def delta(self) -> LinMap:
        return self.coalgebra.delta

    @property
    def eps(self) -> LinMap:
        return self.coalgebra.eps

    @property
    def antipode(self) -> Optional[LinMap]:
        return None

    def base_env(self, extra: Optional[dict] = None) -> Env:
        """Environment binding mu, eta, Delta, eps and the projections."""
        bindings = {
            "mu": self.mu,
            "eta": self.eta,
            "Delta": self.delta,
            "eps": self.eps,
            "piL": self.projection("L"),
            "piR": self.projection("R"),
            "piLb": self.projection("Lbar"),
            "piRb": self.projection("Rbar"),
        }
        s = self.antipode
        if s is not None:
            bindings["S"] = s
        if extra:
            bindings.update(extra)
        objects = {self.obj.name: self.obj.dim}
        for m in bindings.values():
            for ob in (*m.dom, *m.cod):
                objects.setdefault(ob.name, ob.dim)
        return build_env(self.field, objects, bindings)

    def projection(self, kind: str) -> LinMap:
        """One of the four projections; kind in {L, R, Lbar, Rbar}."""
        key = {"L": "piL", "R": "piR", "Lbar": "piLb", "Rbar": "piRb"}[kind]
        if key not in self._projections:
            env = build_env(
                self.field,
                {self.obj.name: self.obj.dim},
                {"mu": self.mu, "eta": self.eta, "Delta": self.delta, "eps": self.eps},
            )
            for name, src in ids.PROJECTION_FORMULAS.items():
                self._projections[name] = evaluate(parse_expr(src, env.sig), env)
        return self._projections[key]


class WeakHopfAlgebra(WeakBialgebra):
    def __init__(self, algebra: AlgebraData, coalgebra: CoalgebraData, antipode: LinMap):
        super().__init__(algebra, coalgebra)
        ob = algebra.obj
        if antipode.dom != (ob,) or antipode.cod != (ob,):
            raise StructureError("antipode must be an endomorphism of the carrier")
        self._antipode = antipode

    @property
    def antipode(self) -> LinMap:
        return self._antipode

    @classmethod
    def unchecked(cls, field, obj, mu, eta, delta, eps, antipode) -> "WeakHopfAlgebra":
        return cls(
            AlgebraData(field, obj, mu, eta), CoalgebraData(field, obj, delta, eps), antipode
        )

    @classmethod
    def checked(cls, field, obj, mu, eta, delta, eps, antipode) -> "WeakHopfAlgebra":
        cand = cls.unchecked(field, obj, mu, eta, delta, eps, antipode)
        report = check_bialgebra_axioms(cand)
        if not report.all_pass:
            raise InvalidStructure(report)
        report = check_antipode(cand)
        if not report.all_pass:
            raise InvalidStructure(report)
        return cand

    def without_antipode(self) -> WeakBialgebra:
        return WeakBialgebra(self.algebra, self.coalgebra)


# --------------------------------------------------------------------------
# Validation suites
# --------------------------------------------------------------------------

def projection(H: WeakBialgebra, kind: str) -> LinMap:
    """Matrix of the chosen source/target projection; kind in
    {L, R, Lbar, Rbar}.  Cached on the carrier."""
    return H.projection(kind)


def check_bialgebra_axioms(H: WeakBialgebra) -> VerdictReport:
    """Associativity, unit, coassociativity, counit and the three weak
    compatibility axioms, one verdict per equality."""
    env = build_env(
        H.field,
        {H.obj.name: H.obj.dim},
        {"mu": H.mu, "eta": H.eta, "Delta": H.delta, "eps": H.eps},
    )
    report = VerdictReport("bialgebra axioms")
    run_identity_table(ids.BIALGEBRA_AXIOMS, env, report)
    return report


def projection_identity_suite(H: WeakBialgebra, antipode: Optional[LinMap] = None) -> VerdictReport:
    """All recorded identities among the four projections; the antipode
    block is skipped when no antipode is available."""
    report = VerdictReport("projection identities")
    env = H.base_env()
    run_identity_table(ids.PROJECTION_BASICS, env, report)
    run_identity_table(ids.PROJECTION_IDENTITIES, env, report)
    s = antipode if antipode is not None else H.antipode
    if s is None:
        for check_id, _, _ in ids.ANTIPODE_PROJECTION_IDENTITIES:
            report.add_skipped(check_id, note="no antipode")
        return report
    env = H.base_env(extra={"S": s})
    run_identity_table(ids.ANTIPODE_PROJECTION_IDENTITIES, env, report)
    return report


def check_antipode(H: WeakHopfAlgebra) -> VerdictReport:
    """The three antipode axioms plus the derived unit/counit invariance and
    anti(co)multiplicativity."""
    env = H.base_env()
    report = VerdictReport("antipode axioms")
    run_identity_table(ids.ANTIPODE_AXIOMS, env, report)
    return report


def base_subalgebra(H: WeakBialgebra, side: str) -> tuple[AlgebraData, LinMap, LinMap]:
    """Split the chosen projection and install the induced unital algebra on
    its image; the inclusion is verified to be an algebra morphism."""
    from .linalg import split_idempotent

    if side not in ("L", "R"):
        raise ValueError("side must be 'L' or 'R'")
    proj_map = H.projection(side)
    rank, inj, proj = split_idempotent(proj_map, name=f"H{side}")
    mu_sub = compose(proj, compose(H.mu, tensor_product(inj, inj)))
    eta_sub = compose(proj, H.eta)
    sub = AlgebraData.checked(H.field, inj.dom[0], mu_sub, eta_sub)
    if compose(inj, mu_sub) != compose(H.mu, tensor_product(inj, inj)):
        raise StructureError("inclusion of the base subalgebra is not multiplicative")
    if compose(inj, eta_sub) != H.eta:
        raise StructureError("inclusion of the base subalgebra is not unitary")
    return sub, inj, proj
