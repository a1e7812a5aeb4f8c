import pytest

from coconvex.cones import co_scale, make_coconvex, make_cone
from coconvex.errors import CoconvexError, InvalidTruncation
from coconvex.forms import co_volume_polynomial, make_coconvex_family
from coconvex.lift import (
    combination_threshold,
    default_lift_samples,
    lift,
    lifted_body,
    lifted_body_materialized,
    lifted_volume_polynomial,
    recovered_base_polynomial,
    sector_constant,
    verify_identity_Q,
    verify_identity_V,
    verify_signature_argument,
)
from coconvex.polynomial import HomogeneousPolynomial
from coconvex.polytope import convex_hull, volume
from coconvex.rational import Rat


@pytest.fixture
def triangle_lift(corner_triangle):
    return lift(make_coconvex_family([corner_triangle]))


@pytest.fixture
def pair_lift(corner_triangle):
    fam = make_coconvex_family([corner_triangle, co_scale(2, corner_triangle)])
    return lift(fam)


@pytest.fixture
def simplex_lift(corner_simplex):
    return lift(make_coconvex_family([corner_simplex]))


def test_lift_window_and_marked(triangle_lift):
    assert triangle_lift.xi == (1, 1)
    assert triangle_lift.t0 == 1
    assert triangle_lift.t1 == 3
    assert triangle_lift.lifted_marked == ()


def test_lift_marked_levels(simplex_lift):
    # base marked vector (1,) paired with the mid-window level 2
    assert simplex_lift.lifted_marked == (((1,), 2),)


def test_lift_rejects_bad_functional(corner_triangle):
    fam = make_coconvex_family([corner_triangle])
    with pytest.raises(InvalidTruncation):
        lift(fam, xi=(1, -1))


def test_sector_constant(triangle_lift, simplex_lift):
    assert sector_constant(triangle_lift) == Rat(1, 2)
    assert sector_constant(simplex_lift) == Rat(1, 6)


def test_lifted_body_is_the_trapezoid(triangle_lift):
    body = lifted_body(triangle_lift, (1,), 3)
    assert set(body.vertices) == {(0, 1), (0, 3), (1, 0), (3, 0)}
    assert volume(body) == 4


def test_lifted_body_checks_cutoff(triangle_lift):
    with pytest.raises(InvalidTruncation):
        lifted_body(triangle_lift, (1,), 1)
    with pytest.raises(InvalidTruncation):
        lifted_body(triangle_lift, (3,), 3)  # threshold scales with lam
    with pytest.raises(CoconvexError):
        lifted_body(triangle_lift, (0,), 3)


def test_combination_threshold_scales(pair_lift):
    assert combination_threshold(pair_lift, (1, 1)) == 3
    assert combination_threshold(pair_lift, (2, 1)) == 4


def test_materialized_route_agrees(triangle_lift, pair_lift):
    for lf, lam, t in (
        (triangle_lift, (1,), 3),
        (triangle_lift, (2,), Rat(7, 2)),
        (pair_lift, (1, 1), 4),
        (pair_lift, (1, 2), 8),
    ):
        assert lifted_body_materialized(lf, lam, t) == lifted_body(lf, lam, t)


def test_lifted_volume_polynomial_triangle(triangle_lift):
    P = lifted_volume_polynomial(triangle_lift)
    assert P.coeffs == {(0, 2): Rat(1, 2), (2, 0): Rat(-1, 2)}


def test_lifted_volume_polynomial_pair(pair_lift):
    P = lifted_volume_polynomial(pair_lift)
    # cutoff volume minus the base polynomial at the sample used in the report
    assert P.evaluate((1, 1, 4)) == Rat(8) - Rat(9, 2)


def test_recovered_base_polynomial(pair_lift):
    base = recovered_base_polynomial(pair_lift)
    assert base == co_volume_polynomial(pair_lift.base)


def test_recovered_base_rejects_mixed_terms(triangle_lift):
    tampered = HomogeneousPolynomial(2, 2, {(0, 2): Rat(1, 2), (1, 1): 1})
    with pytest.raises(CoconvexError):
        recovered_base_polynomial(triangle_lift, tampered)
    missing_top = HomogeneousPolynomial(2, 2, {(2, 0): Rat(-1, 2)})
    with pytest.raises(CoconvexError):
        recovered_base_polynomial(triangle_lift, missing_top)


def test_default_samples_are_valid(pair_lift):
    samples = default_lift_samples(pair_lift)
    assert len(samples) == 5
    for lam, t in samples:
        assert Rat(t) > combination_threshold(pair_lift, lam)


def test_identity_V(triangle_lift, pair_lift, simplex_lift):
    for lf in (triangle_lift, pair_lift, simplex_lift):
        report = verify_identity_V(lf)
        assert report == {
            "identity": "V",
            "status": "ok",
            "samples": report["samples"],
            "counterexample": None,
        }
        assert report["samples"] >= 5


def test_identity_V_detects_wrong_base(triangle_lift):
    wrong = HomogeneousPolynomial(1, 2, {(2,): Rat(1, 3)})
    report = verify_identity_V(triangle_lift, base_poly=wrong)
    assert report["status"] == "fail"
    ce = report["counterexample"]
    assert set(ce) == {"lam", "t", "lifted_volume", "cutoff_minus_covolume"}


def test_identity_Q(triangle_lift, pair_lift, simplex_lift):
    for lf in (triangle_lift, pair_lift, simplex_lift):
        report = verify_identity_Q(lf)
        assert report["status"] == "ok"
        assert report["counterexample"] is None


def test_identity_Q_detects_tampering(triangle_lift):
    tampered = HomogeneousPolynomial(2, 2, {(0, 2): Rat(1, 2), (2, 0): Rat(1, 2)})
    report = verify_identity_Q(triangle_lift, lifted_poly=tampered)
    assert report["status"] == "fail"
    entries = report["counterexample"]["entries"]
    assert entries and all(set(e) == {"row", "col", "got", "expected"} for e in entries)


def test_signature_argument(triangle_lift, pair_lift, simplex_lift):
    for lf in (triangle_lift, pair_lift, simplex_lift):
        report = verify_signature_argument(lf)
        assert report["status"] == "ok"
        assert report["samples"] == 4


def test_signature_argument_detects_tampering(pair_lift):
    # flip only the base block so the lifted form gains a positive square
    good = lifted_volume_polynomial(pair_lift)
    flipped = {e: (-c if e[-1] == 0 else c) for e, c in good.coeffs.items()}
    tampered = HomogeneousPolynomial(good.nvars, good.degree, flipped)
    report = verify_signature_argument(pair_lift, lifted_poly=tampered)
    assert report["status"] == "fail"
    assert "lifted_form_one_positive" in report["counterexample"]["failed"]


def test_lift_on_slanted_cone():
    cone = make_cone([(1, 0), (1, 2)])
    K = convex_hull([(1, 0), (1, 2)], rays=cone.rays)
    fam = make_coconvex_family([make_coconvex(cone, K)])
    lf = lift(fam)
    for name, verify in (
        ("V", verify_identity_V),
        ("Q", verify_identity_Q),
        ("sig", verify_signature_argument),
    ):
        assert verify(lf)["status"] == "ok", name
