"""Volume polynomials, mixed volumes, and the bilinear forms built from them.

A convex family is a finite list of generator bodies; the positive orthant of
coefficient vectors maps to Minkowski combinations.  A coconvex family does
the same with complements added inside one shared cone.  Both give a
homogeneous degree-d volume polynomial, and applying directional derivatives
for the family's marked coefficient vectors (all but two of the d slots)
leaves a quadratic whose matrix is the object of every inequality here.

Matrix conventions, fixed once: with chain = the marked-derivative cascade of
the volume polynomial,

    B = (1/d!) * hessian(chain)      so B[i][j] pairs basis directions,
    Q = (2/d!) * hessian(chain)      the quadratic form's matrix, Q = 2B,

and the form value at u is u^T B u, which equals the chain polynomial at u
rescaled by 2/d!.  Signatures of B and Q agree since they differ by a
positive factor.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import reduce
from math import factorial

from .cones import Cone, CoconvexBody, co_volume, make_coconvex
from .errors import (
    CoconvexError,
    ConeMismatch,
    DimensionMismatch,
    EmptyInput,
    UnboundedPolyhedron,
)
from .polynomial import (
    HomogeneousPolynomial,
    default_grid,
    fit_homogeneous,
    hessian_matrix,
    monomial_exponents,
    multinomial,
)
from .polytope import Polyhedron, affine_dimension, minkowski_sum, volume
from .rational import Rat, ZERO


@dataclass(frozen=True)
class ConvexFamily:
    """Generator bodies plus marked coefficient vectors (one per derivative slot)."""

    dim: int
    generators: tuple[Polyhedron, ...]
    marked: tuple[tuple, ...]


@dataclass(frozen=True)
class CoconvexFamily:
    cone: Cone
    generators: tuple[CoconvexBody, ...]
    marked: tuple[tuple, ...]

    @property
    def dim(self) -> int:
        return self.cone.dim


def _checked_marked(marked, n: int, d: int):
    if d < 2:
        raise DimensionMismatch("families need ambient dimension at least 2")
    if marked is None:
        marked = [(1,) * n] * (d - 2)
    marked = tuple(tuple(Rat(x) for x in v) for v in marked)
    if len(marked) != d - 2:
        raise DimensionMismatch(f"need exactly {d - 2} marked vectors, got {len(marked)}")
    for v in marked:
        if len(v) != n:
            raise DimensionMismatch("marked vector length differs from generator count")
        if any(x <= 0 for x in v):
            raise CoconvexError("marked vectors must have strictly positive entries")
    return marked


def make_convex_family(generators, marked=None) -> ConvexFamily:
    generators = tuple(generators)
    if not generators:
        raise EmptyInput("family needs at least one generator")
    d = generators[0].dim
    for P in generators:
        if P.dim != d:
            raise DimensionMismatch("generators of mixed ambient dimension")
        if P.rays:
            raise UnboundedPolyhedron("generators must be bounded")
        if affine_dimension(P) != d:
            raise DimensionMismatch("generators must be full-dimensional")
    return ConvexFamily(d, generators, _checked_marked(marked, len(generators), d))


def make_coconvex_family(generators, marked=None) -> CoconvexFamily:
    generators = tuple(generators)
    if not generators:
        raise EmptyInput("family needs at least one generator")
    cone = generators[0].cone
    for A in generators:
        if A.cone != cone:
            raise ConeMismatch("all generators must share one cone")
    return CoconvexFamily(cone, generators, _checked_marked(marked, len(generators), cone.dim))


def mixed_volume(bodies):
    """Fully polarized volume of d bodies in dimension d.

    Inclusion-exclusion over Minkowski subset sums; partial sums are built
    incrementally so each one is assembled exactly once.
    """
    bodies = tuple(bodies)
    if not bodies:
        raise EmptyInput("mixed volume of nothing")
    d = bodies[0].dim
    if len(bodies) != d:
        raise DimensionMismatch(f"need exactly {d} bodies in dimension {d}")
    for P in bodies:
        if P.dim != d:
            raise DimensionMismatch("body of wrong ambient dimension")
        if P.rays:
            raise UnboundedPolyhedron("mixed volume needs bounded bodies")
        if P.is_empty:
            raise EmptyInput("mixed volume of an empty body")
    if all(P == bodies[0] for P in bodies[1:]):
        return volume(bodies[0])
    total = ZERO
    sums: dict[int, Polyhedron] = {}
    for mask in range(1, 1 << d):
        low = mask & -mask
        rest = mask ^ low
        part = bodies[low.bit_length() - 1]
        body = part if not rest else minkowski_sum(sums[rest], part)
        sums[mask] = body
        if (d - mask.bit_count()) % 2:
            total = total - volume(body)
        else:
            total = total + volume(body)
    return total / factorial(d)


def combination_body(fam: ConvexFamily, lam) -> Polyhedron:
    """Minkowski combination with nonnegative coefficients (zeros skip)."""
    lam = [Rat(x) for x in lam]
    if len(lam) != len(fam.generators):
        raise DimensionMismatch("coefficient vector length differs from generator count")
    if any(x < 0 for x in lam) or all(x == 0 for x in lam):
        raise CoconvexError("coefficients must be nonnegative with at least one positive")
    parts = [gen.scale(x) for gen, x in zip(fam.generators, lam) if x != 0]
    return reduce(minkowski_sum, parts)


def volume_polynomial(fam: ConvexFamily) -> HomogeneousPolynomial:
    """Degree-d homogeneous polynomial whose value at positive lam is the
    volume of the lam-combination; coefficients come from mixed volumes."""
    n = len(fam.generators)
    coeffs = {}
    for exps in monomial_exponents(n, fam.dim):
        picked = []
        for gen, e in zip(fam.generators, exps):
            picked.extend([gen] * e)
        mv = mixed_volume(picked)
        if mv != 0:
            coeffs[exps] = multinomial(exps) * mv
    return HomogeneousPolynomial(n, fam.dim, coeffs)


def volume_polynomial_interpolated(fam: ConvexFamily) -> HomogeneousPolynomial:
    """Same polynomial, independent route: exact fit of combination volumes
    on an integer grid.  Kept separate from the polarization route on
    purpose so the two can be compared."""
    n = len(fam.generators)
    return fit_homogeneous(
        n, fam.dim, default_grid(n, fam.dim), lambda p: volume(combination_body(fam, p))
    )


def co_combination_body(fam: CoconvexFamily, lam) -> CoconvexBody:
    """Coconvex combination with strictly positive coefficients; the result
    is revalidated, so invalid combinations fail loudly."""
    lam = [Rat(x) for x in lam]
    if len(lam) != len(fam.generators):
        raise DimensionMismatch("coefficient vector length differs from generator count")
    if any(x <= 0 for x in lam):
        raise CoconvexError("coconvex combinations need strictly positive coefficients")
    parts = [gen.complement.scale(x) for gen, x in zip(fam.generators, lam)]
    return make_coconvex(fam.cone, reduce(minkowski_sum, parts))


def co_volume_polynomial(fam: CoconvexFamily) -> HomogeneousPolynomial:
    """Degree-d polynomial matching the carved-out volume of every positive
    combination, recovered by exact interpolation on an integer grid.

    The lift machinery recovers the same polynomial from truncated convex
    volumes; the verification layer asserts the two routes agree.
    """
    n = len(fam.generators)
    return fit_homogeneous(
        n,
        fam.dim,
        default_grid(n, fam.dim),
        lambda p: co_volume(co_combination_body(fam, p)),
    )


def derivative_chain(P: HomogeneousPolynomial, directions) -> HomogeneousPolynomial:
    for v in directions:
        P = P.directional(v)
    return P


def polynomial_af_forms(P: HomogeneousPolynomial, marked):
    """(B, Q) matrices of a degree-d volume polynomial with d-2 marked vectors."""
    marked = tuple(tuple(Rat(x) for x in v) for v in marked)
    if len(marked) != P.degree - 2:
        raise DimensionMismatch(f"need exactly {P.degree - 2} marked vectors")
    for v in marked:
        if len(v) != P.nvars:
            raise DimensionMismatch("marked vector length differs from variable count")
    chain = derivative_chain(P, marked)
    hess = hessian_matrix(chain)
    unit = Rat(1, factorial(P.degree))
    b = tuple(tuple(h * unit for h in row) for row in hess)
    q = tuple(tuple(h * 2 * unit for h in row) for row in hess)
    return b, q


def af_form(fam: ConvexFamily):
    """(B, Q) of a convex family: derivative cascade for the marked vectors,
    then the hessian of the leftover quadratic, scaled by 1/d! and 2/d!."""
    return polynomial_af_forms(volume_polynomial(fam), fam.marked)


def co_af_form(fam: CoconvexFamily):
    """(B, Q) of a coconvex family, same cascade over the carved-out volume."""
    return polynomial_af_forms(co_volume_polynomial(fam), fam.marked)


def form_apply(matrix, u, v):
    """Bilinear pairing u^T M v with exact rationals."""
    n = len(matrix)
    if len(u) != n or len(v) != n:
        raise DimensionMismatch("vector length differs from matrix size")
    total = ZERO
    for i in range(n):
        ui = Rat(u[i])
        if ui == 0:
            continue
        row = matrix[i]
        for j in range(n):
            vj = Rat(v[j])
            if vj != 0:
                total = total + ui * row[j] * vj
    return total


def cs_check(B, u, v) -> bool:
    """B(u,v)^2 <= B(u,u) B(v,v), the direction nonnegative forms satisfy."""
    return form_apply(B, u, v) ** 2 <= form_apply(B, u, u) * form_apply(B, v, v)


def reversed_cs_check(B, u, v) -> bool:
    """B(u,v)^2 >= B(u,u) B(v,v); needs B(v,v) > 0, the signature-(1,l) setting."""
    qv = form_apply(B, v, v)
    if qv <= 0:
        raise CoconvexError("reversed comparison needs a vector with positive form value")
    return form_apply(B, u, v) ** 2 >= form_apply(B, u, u) * qv


def reversed_bm_check(P: HomogeneousPolynomial, u, v, t) -> bool:
    """Convexity of the d-th root of the carved-out volume along [u, v] at
    parameter t, decided by exact root-sum comparison."""
    from .rational import compare_root_sum

    t = Rat(t)
    if t < 0 or t > 1:
        raise CoconvexError("interpolation parameter must lie in [0, 1]")
    u = tuple(Rat(x) for x in u)
    v = tuple(Rat(x) for x in v)
    mid = tuple(t * a + (1 - t) * b for a, b in zip(u, v))
    terms = [(t, P.evaluate(u)), (1 - t, P.evaluate(v)), (Rat(-1), P.evaluate(mid))]
    return compare_root_sum(terms, P.degree) >= 0


def generalized_rbm_check(P: HomogeneousPolynomial, directions, u, v) -> bool:
    """Midpoint convexity of the (d-k)-th root of a k-fold derivative cascade.

    A negative cascade value at a sampled point counts as a failure: the
    claimed convex root function would not even be real there.
    """
    from .rational import compare_root_sum

    W = derivative_chain(P, tuple(tuple(Rat(x) for x in w) for w in directions))
    deg = W.degree
    if deg < 1:
        raise DimensionMismatch("cascade went below degree one")
    u = tuple(Rat(x) for x in u)
    v = tuple(Rat(x) for x in v)
    mid = tuple((a + b) / 2 for a, b in zip(u, v))
    wu, wv, wm = W.evaluate(u), W.evaluate(v), W.evaluate(mid)
    if wu < 0 or wv < 0 or wm < 0:
        return False
    if deg == 1:
        return 2 * wm <= wu + wv
    half = Rat(1, 2)
    return compare_root_sum([(half, wu), (half, wv), (Rat(-1), wm)], deg) >= 0


def mink1_check(P: HomogeneousPolynomial, u, v) -> bool:
    """((1/d!) L_u L_v^(d-1) P)^d <= P(u) P(v)^(d-1), all rational."""
    d = P.degree
    chain = derivative_chain(P, (u,) + (v,) * (d - 1))
    val = chain.constant() / factorial(d)
    return val**d <= P.evaluate(u) * P.evaluate(v) ** (d - 1)


def mink2_check(P: HomogeneousPolynomial, u, v) -> bool:
    """With every marked vector set to u: B(u,v)^2 <= P(u) B(v,v)."""
    B, _ = polynomial_af_forms(P, (tuple(u),) * (P.degree - 2))
    return form_apply(B, u, v) ** 2 <= P.evaluate(u) * form_apply(B, v, v)
