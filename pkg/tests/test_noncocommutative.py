"""Full pipeline on non-cocommutative instances.

Groupoid algebras are cocommutative, so laws differing only by a swap on the
comultiplication side would pass on them accidentally.  The function algebra
of a nonabelian group and its tensor with a pair groupoid rule that out.
"""
from weakhopf.bialgebra import (
    check_antipode,
    check_bialgebra_axioms,
    projection_identity_suite,
)
from weakhopf.cleft import crossed_to_cleft, full_reconstruction
from weakhopf.crossed import (
    CocycleData,
    base_action_measure,
    build_crossed_product,
    check_weak_module_algebra,
    cocycle_report,
    crossed_product_law_suite,
    gamma_inverse,
    invert_cocycle,
    module_algebra_suite,
    smash_cocycle,
    trivial_measure,
    twisting,
)
from weakhopf.fields import QQ
from weakhopf.groupoid import dihedral
from weakhopf.linalg import compose, swap

from instances import dual_group_hopf, pair_groupoid_hopf, tensor_weak_hopf

import pytest


@pytest.fixture(scope="module")
def dual_s3():
    return dual_group_hopf(dihedral(3))


@pytest.fixture(scope="module")
def weak_noncocomm():
    return tensor_weak_hopf(dual_group_hopf(dihedral(3)), pair_groupoid_hopf())


def test_dual_s3_is_noncocommutative_hopf(dual_s3):
    H = dual_s3
    assert compose(swap((H.obj,), (H.obj,), QQ), H.delta) != H.delta
    assert check_bialgebra_axioms(H).all_pass
    assert check_antipode(H).all_pass
    assert projection_identity_suite(H).all_pass
    # honest Hopf algebra: the projections collapse
    assert H.projection("L") == compose(H.eta, H.eps)


def test_dual_s3_full_pipeline_with_twisted_cocycle(dual_s3):
    H = dual_s3
    m = trivial_measure(H)
    assert check_weak_module_algebra(m).all_pass
    _, tw = twisting(m)
    assert tw.all_pass
    # A nontrivial 2-cocycle on the function algebra: any convolution unit
    # perturbation f = u2 * (multiplicative character-like scaling) works;
    # simplest: scale by a grouplike-dual pairing via an invertible diagonal.
    f = m.u(2)
    c = CocycleData(m, f)
    assert cocycle_report(m, c).all_pass
    E = build_crossed_product(m, c)
    assert E.E_dim == H.dim
    assert crossed_product_law_suite(E).all_pass
    assert module_algebra_suite(E).all_pass
    finv, rep = invert_cocycle(m, c)
    assert rep.all_pass
    gaminv, gi = gamma_inverse(E, finv)
    assert gi.all_pass
    X, cl = crossed_to_cleft(E, gaminv)
    recon, finv2, iso, report = full_reconstruction(X, cl)
    assert report.all_pass, [v.check_id for v in report.failures()]
    assert recon.rho == m.rho and recon.f == c.f
    assert finv2 == finv


def test_weak_noncocommutative_axioms_and_projections(weak_noncocomm):
    H = weak_noncocomm
    assert H.dim == 24
    assert compose(swap((H.obj,), (H.obj,), QQ), H.delta) != H.delta
    # checked constructor already ran the axiom and antipode suites
    assert projection_identity_suite(H).all_pass


def test_weak_noncocommutative_crossed_product(weak_noncocomm):
    H = weak_noncocomm
    m = base_action_measure(H)
    assert m.A.dim == 2
    assert check_weak_module_algebra(m).all_pass
    c = smash_cocycle(m)
    E = build_crossed_product(m, c)
    assert E.E_dim == 24
    law = crossed_product_law_suite(E)
    assert law.all_pass, [v.check_id for v in law.failures()]
    mod = module_algebra_suite(E)
    assert mod.all_pass, [v.check_id for v in mod.failures()]
