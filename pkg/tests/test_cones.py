import pytest

from coconvex.cones import (
    Truncation,
    co_scale,
    co_sum,
    co_volume,
    cone_polyhedron,
    make_coconvex,
    make_cone,
    synthesize_truncation,
    truncation_threshold,
)
from coconvex.errors import (
    ComplementNotCompact,
    ComplementNotInCone,
    ConeMismatch,
    DimensionMismatch,
    EmptyInterior,
    InvalidTruncation,
    NotFullDimensional,
    NotStrictlyConvex,
)
from coconvex.polytope import convex_hull, volume
from coconvex.rational import Rat


def test_make_cone_canonicalizes(quadrant):
    assert quadrant.dim == 2
    assert quadrant.rays == ((0, 1), (1, 0))
    assert all(sum(x * r for x, r in zip(quadrant.xi, ray)) > 0 for ray in quadrant.rays)


def test_make_cone_drops_redundant_rays():
    cone = make_cone([(1, 0), (1, 1), (0, 1), (2, 2)])
    assert cone.rays == ((0, 1), (1, 0))


def test_make_cone_scales_rational_rays(quadrant):
    assert make_cone([(Rat(1, 2), 0), (0, 3)]) == quadrant


def test_make_cone_rejects_bad_input():
    with pytest.raises(NotFullDimensional):
        make_cone([])
    with pytest.raises(NotFullDimensional):
        make_cone([(1, 2)])  # spans a line, not the plane
    with pytest.raises(NotStrictlyConvex):
        make_cone([(1, 0), (-1, 0), (0, 1)])
    with pytest.raises(NotStrictlyConvex):
        make_cone([(0, 0), (1, 0)])
    with pytest.raises(DimensionMismatch):
        make_cone([(1, 0), (0, 1, 0)])


def test_cone_polyhedron(quadrant):
    P = cone_polyhedron(quadrant)
    assert P.vertices == ((0, 0),)
    assert P.rays == quadrant.rays


def test_corner_triangle_volume(corner_triangle):
    assert co_volume(corner_triangle) == Rat(1, 2)


def test_co_volume_is_truncation_independent(corner_triangle):
    for t in (3, 5, 100, Rat(3, 2)):
        trunc = Truncation(corner_triangle.cone.xi, t)
        assert co_volume(corner_triangle, trunc) == Rat(1, 2)


def test_co_volume_accepts_other_functionals(corner_triangle):
    assert co_volume(corner_triangle, Truncation((3, 1), 9)) == Rat(1, 2)


def test_truncation_threshold(corner_triangle):
    assert truncation_threshold(corner_triangle.complement, (1, 1)) == 1
    trunc = synthesize_truncation(corner_triangle)
    assert Rat(trunc.t) > 1


def test_truncation_validation(corner_triangle):
    with pytest.raises(InvalidTruncation):
        co_volume(corner_triangle, Truncation((1, 1), 1))  # at the threshold
    with pytest.raises(InvalidTruncation):
        co_volume(corner_triangle, Truncation((1, -1), 5))  # negative on a ray
    with pytest.raises(DimensionMismatch):
        co_volume(corner_triangle, Truncation((1, 1, 1), 5))


def test_corner_simplex_volume(corner_simplex):
    assert co_volume(corner_simplex) == Rat(1, 6)


def test_square_base_pyramid_region():
    cone = make_cone([(1, 0, 1), (-1, 0, 1), (0, 1, 1), (0, -1, 1)])
    K = convex_hull(
        [(1, 0, 1), (-1, 0, 1), (0, 1, 1), (0, -1, 1)], rays=cone.rays
    )
    body = make_coconvex(cone, K)
    assert co_volume(body) == Rat(2, 3)


def test_slanted_cone_body():
    cone = make_cone([(1, 0), (1, 2)])
    K = convex_hull([(1, 0), (1, 2)], rays=cone.rays)
    body = make_coconvex(cone, K)
    assert co_volume(body) == 1


def test_facet_parallel_to_cone_boundary_is_rejected():
    # the halfspace 2x - y >= 1 runs parallel to the ray (1, 2), leaving an
    # unbounded sliver between the cut and the cone boundary
    cone = make_cone([(1, 0), (1, 2)])
    K = convex_hull([(1, 0), (1, 1)], rays=cone.rays)
    with pytest.raises(ComplementNotCompact):
        make_coconvex(cone, K)


def test_complement_outside_cone_is_rejected(quadrant):
    K = convex_hull([(-1, 0), (0, 1)], rays=quadrant.rays)
    with pytest.raises(ComplementNotInCone):
        make_coconvex(quadrant, K)


def test_wrong_recession_cone_is_rejected(quadrant):
    K = convex_hull([(1, 1)], rays=[(1, 0)])
    with pytest.raises(ComplementNotCompact):
        make_coconvex(quadrant, K)


def test_zero_region_is_rejected(quadrant):
    with pytest.raises(EmptyInterior):
        make_coconvex(quadrant, cone_polyhedron(quadrant))


def test_dimension_mismatch_is_rejected(quadrant):
    K = convex_hull([(1, 0, 0)], rays=[(1, 0, 0), (0, 1, 0), (0, 0, 1)])
    with pytest.raises(DimensionMismatch):
        make_coconvex(quadrant, K)


def test_co_scale_homogeneity(corner_triangle):
    assert co_volume(co_scale(2, corner_triangle)) == 2
    assert co_volume(co_scale(Rat(1, 2), corner_triangle)) == Rat(1, 8)


def test_co_scale_requires_positive_factor(corner_triangle):
    with pytest.raises(Exception):
        co_scale(0, corner_triangle)


def test_co_sum_doubles_the_triangle(corner_triangle):
    double = co_sum(corner_triangle, corner_triangle)
    assert set(double.complement.vertices) == {(0, 2), (2, 0)}
    assert co_volume(double) == 2
    assert co_volume(double) == co_volume(co_scale(2, corner_triangle))


def test_co_sum_in_three_dimensions(corner_simplex):
    double = co_sum(corner_simplex, corner_simplex)
    assert co_volume(double) == Rat(8, 6)


def test_co_sum_requires_shared_cone(corner_triangle):
    other_cone = make_cone([(1, 0), (1, 1)])
    K = convex_hull([(1, 0), (2, 2)], rays=other_cone.rays)
    other = make_coconvex(other_cone, K)
    with pytest.raises(ConeMismatch):
        co_sum(corner_triangle, other)


def test_region_volume_matches_direct_difference(corner_triangle):
    # same value through an unrelated slicing of the region: the region is
    # the standard unit triangle, so integrate its horizontal slices
    slices = sum(Rat(1 - Rat(k, 100), 1) for k in range(100)) / 100
    # Riemann sums bracket 1/2; the exact co_volume must sit between them
    upper = slices
    lower = slices - Rat(1, 100)
    assert lower < co_volume(corner_triangle) < upper
