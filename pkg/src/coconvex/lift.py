"""Lifting a coconvex family to a convex one, and the bridge identities.

For a coconvex family over cone C with positivity functional xi, each
combination body leaves a bounded region between the cone and its
complement.  Cutting the cone at level t and removing that region gives a
genuine convex polytope: the lifted body at (lam, t).  Lifted bodies form a
convex family in one extra variable, and two exact identities tie the two
families together:

    (V)  vol(lifted body at (lam, t)) = c * t^d - covol(lam)
    (Q)  lifted quadratic matrix      = blockdiag(-base quadratic, 2 c')

with c the volume of the unit cone sector and c' = c times the product of
the marked levels.  The verifiers below compute both sides through
independent code paths and compare exactly; the signature bookkeeping that
turns (Q) into nonnegativity of the base form is checked last.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import reduce

from .cones import cone_polyhedron, truncation_threshold
from .errors import CoconvexError, InvalidTruncation
from .forms import (
    CoconvexFamily,
    co_volume_polynomial,
    polynomial_af_forms,
)
from .linalg import dot
from .polynomial import (
    HomogeneousPolynomial,
    Signature,
    fit_homogeneous,
    signature,
    tensor_grid,
)
from .polytope import (
    Halfspace,
    Polyhedron,
    clip,
    dd_convert,
    dd_convert_back,
    minkowski_sum,
    volume,
)
from .rational import Rat, rat_str


@dataclass(frozen=True)
class LiftedFamily:
    """Coconvex base plus the cutoff data that makes lifted bodies convex.

    t0 dominates the complement thresholds of every generator; marked levels
    sit strictly between t0 and t1.  Combinations with large coefficients
    push their own thresholds past t0, so sample validity is re-checked per
    (lam, t) rather than assumed from the window.
    """

    base: CoconvexFamily
    xi: tuple[int, ...]
    t0: object
    t1: object
    lifted_marked: tuple


def lift(fam: CoconvexFamily, xi=None) -> LiftedFamily:
    """Build the lifted family: cutoff functional, window, marked levels."""
    xi = tuple(xi) if xi is not None else fam.cone.xi
    if any(dot(xi, r) <= 0 for r in fam.cone.rays):
        raise InvalidTruncation("functional is not positive on every cone ray")
    t0 = max(truncation_threshold(g.complement, xi) for g in fam.generators)
    t1 = t0 + 2
    s = t0 + 1
    return LiftedFamily(fam, xi, t0, t1, tuple((v, s) for v in fam.marked))


def sector_constant(lf: LiftedFamily):
    """Volume of the cone sector at level 1; homogeneity gives c * t^d."""
    return volume(clip(cone_polyhedron(lf.base.cone), Halfspace.make(lf.xi, 1)))


def _positive_coefficients(lf: LiftedFamily, lam):
    lam = tuple(Rat(x) for x in lam)
    if len(lam) != len(lf.base.generators):
        raise CoconvexError("coefficient vector length differs from generator count")
    if any(x <= 0 for x in lam):
        raise CoconvexError("lifted bodies need strictly positive coefficients")
    return lam


def _combination_complement(lf: LiftedFamily, lam) -> Polyhedron:
    parts = [g.complement.scale(x) for g, x in zip(lf.base.generators, lam)]
    return reduce(minkowski_sum, parts)


def combination_threshold(lf: LiftedFamily, lam):
    """Largest xi-value over the combination complement's vertices; any
    strictly larger cutoff is valid for this lam."""
    lam = _positive_coefficients(lf, lam)
    return truncation_threshold(_combination_complement(lf, lam), lf.xi)


def lifted_body(lf: LiftedFamily, lam, t) -> Polyhedron:
    """The convex body at (lam, t): combination complement cut at level t."""
    lam = _positive_coefficients(lf, lam)
    t = Rat(t)
    K = _combination_complement(lf, lam)
    if t <= truncation_threshold(K, lf.xi):
        raise InvalidTruncation("cutoff does not clear the combination's vertices")
    return clip(K, Halfspace.make(lf.xi, t))


def lifted_body_materialized(lf: LiftedFamily, lam, t) -> Polyhedron:
    """Independent construction of the same body by facet intersection.

    Joins the facet systems of the cone sector and of the combination
    complement and converts back to vertices.  Agreement with lifted_body
    doubles as a convexity certificate for the region the cut leaves behind.
    """
    lam = _positive_coefficients(lf, lam)
    t = Rat(t)
    K = _combination_complement(lf, lam)
    if t <= truncation_threshold(K, lf.xi):
        raise InvalidTruncation("cutoff does not clear the combination's vertices")
    sector = clip(cone_polyhedron(lf.base.cone), Halfspace.make(lf.xi, t))
    halfspaces = sorted(set(dd_convert(sector)) | set(dd_convert(K)),
                        key=lambda h: (h.normal, h.bound))
    return dd_convert_back(tuple(halfspaces), lf.base.cone.dim)


def lifted_volume_polynomial(lf: LiftedFamily) -> HomogeneousPolynomial:
    """Volume of the lifted body as a homogeneous degree-d polynomial in
    (lam_1..lam_n, t), recovered by exact interpolation.

    The t-axis of the grid starts above every threshold reachable with
    lam-coordinates up to d+1, so all evaluations are valid bodies.
    """
    n = len(lf.base.generators)
    d = lf.base.dim
    per_gen = [truncation_threshold(g.complement, lf.xi) for g in lf.base.generators]
    floor_t = 1 + (d + 1) * sum(per_gen)
    axes = [range(1, d + 2)] * n + [[floor_t + k for k in range(d + 1)]]
    complements: dict[tuple, Polyhedron] = {}

    def value(point):
        lam, t = point[:n], point[n]
        if lam not in complements:
            complements[lam] = _combination_complement(lf, [Rat(x) for x in lam])
        return volume(clip(complements[lam], Halfspace.make(lf.xi, t)))

    return fit_homogeneous(n + 1, d, tensor_grid(axes), value)


def recovered_base_polynomial(
    lf: LiftedFamily, lifted_poly: HomogeneousPolynomial | None = None
) -> HomogeneousPolynomial:
    """Read the base volume polynomial off the lifted one.

    The lifted polynomial must be exactly c * t^d minus a t-free part; any
    other shape falsifies identity (V) and raises.
    """
    Pa = lifted_poly if lifted_poly is not None else lifted_volume_polynomial(lf)
    c = sector_constant(lf)
    n = len(lf.base.generators)
    d = lf.base.dim
    out = {}
    seen_pure = False
    for exps, coef in Pa.coeffs.items():
        base_exps, te = exps[:-1], exps[-1]
        if te == 0:
            out[base_exps] = -coef
        elif te == d:
            seen_pure = True
            if coef != c:
                raise CoconvexError(
                    f"pure cutoff term has coefficient {coef}, sector constant is {c}"
                )
        else:
            raise CoconvexError(f"mixed term {exps} should not appear in a lifted volume")
    if not seen_pure and c != 0:
        raise CoconvexError("pure cutoff term missing from the lifted volume")
    return HomogeneousPolynomial(n, d, out)


def default_lift_samples(lf: LiftedFamily, count: int = 5):
    """Deterministic (lam, t) samples, each valid for its own combination."""
    n = len(lf.base.generators)
    out = []
    for j in range(count):
        lam = [1] * n
        if j:
            lam[(j - 1) % n] += 1 + (j - 1) // n
        lam = tuple(lam)
        t = combination_threshold(lf, lam) + 1 + (j % 2)
        out.append((lam, t))
    return out


def verify_identity_V(lf: LiftedFamily, samples=None, base_poly=None) -> dict:
    """Check vol(lifted body) = c * t^d - covol(lam) at every sample.

    The left side is a direct polytope volume; the right side evaluates the
    interpolated base polynomial.  First mismatch is reported in full.
    """
    if base_poly is None:
        base_poly = co_volume_polynomial(lf.base)
    c = sector_constant(lf)
    d = lf.base.dim
    if samples is None:
        samples = default_lift_samples(lf)
    checked = 0
    counterexample = None
    for lam, t in samples:
        lam = _positive_coefficients(lf, lam)
        t = Rat(t)
        lhs = volume(lifted_body(lf, lam, t))
        rhs = c * t**d - base_poly.evaluate(lam)
        checked += 1
        if lhs != rhs:
            counterexample = {
                "lam": [rat_str(x) for x in lam],
                "t": rat_str(t),
                "lifted_volume": rat_str(lhs),
                "cutoff_minus_covolume": rat_str(rhs),
            }
            break
    return {
        "identity": "V",
        "status": "fail" if counterexample else "ok",
        "samples": checked,
        "counterexample": counterexample,
    }


def _lifted_quadratic(lf: LiftedFamily, lifted_poly=None):
    Pa = lifted_poly if lifted_poly is not None else lifted_volume_polynomial(lf)
    vectors = [tuple(v) + (s,) for v, s in lf.lifted_marked]
    return polynomial_af_forms(Pa, vectors)


def verify_identity_Q(lf: LiftedFamily, lifted_poly=None, base_poly=None) -> dict:
    """Entry-wise check of the block shape of the lifted quadratic matrix:
    the base block is the negated base quadratic, the cutoff block is 2c',
    and the two never mix."""
    if base_poly is None:
        base_poly = co_volume_polynomial(lf.base)
    _, q_lift = _lifted_quadratic(lf, lifted_poly)
    _, q_base = polynomial_af_forms(base_poly, lf.base.marked)
    c = sector_constant(lf)
    cp = c
    for _, s in lf.lifted_marked:
        cp = cp * s
    n = len(lf.base.generators)
    mismatches = []
    for i in range(n + 1):
        for j in range(n + 1):
            if i < n and j < n:
                want = -q_base[i][j]
            elif i == n and j == n:
                want = 2 * cp
            else:
                want = Rat(0)
            got = q_lift[i][j]
            if got != want:
                mismatches.append(
                    {"row": i, "col": j, "got": rat_str(got), "expected": rat_str(want)}
                )
    return {
        "identity": "Q",
        "status": "fail" if mismatches else "ok",
        "samples": (n + 1) ** 2,
        "counterexample": {"entries": mismatches} if mismatches else None,
    }


def _combine(a: Signature, b: Signature) -> Signature:
    return Signature(a.pos + b.pos, a.neg + b.neg, a.zero + b.zero)


def verify_signature_argument(lf: LiftedFamily, lifted_poly=None, base_poly=None) -> dict:
    """Signature bookkeeping: the lifted form has exactly one positive
    square, the cutoff block contributes (1,0), the rest is the negated base
    form, and additivity over the disjoint variable split forces the base
    form to have no negative squares."""
    if base_poly is None:
        base_poly = co_volume_polynomial(lf.base)
    _, q_lift = _lifted_quadratic(lf, lifted_poly)
    _, q_base = polynomial_af_forms(base_poly, lf.base.marked)
    c = sector_constant(lf)
    cp = c
    for _, s in lf.lifted_marked:
        cp = cp * s
    sig_lift = signature(q_lift)
    sig_sector = signature(((2 * cp,),))
    sig_negated = signature(tuple(tuple(-x for x in row) for row in q_base))
    sig_base = signature(q_base)
    relations = [
        ("lifted_form_one_positive", sig_lift.pos == 1),
        ("sector_block_positive", sig_sector.astuple() == (1, 0, 0)),
        ("additivity", sig_lift == _combine(sig_sector, sig_negated)),
        ("base_form_nonnegative", sig_base.neg == 0),
    ]
    failed = [name for name, ok in relations if not ok]
    counterexample = None
    if failed:
        counterexample = {
            "failed": failed,
            "lifted": list(sig_lift.astuple()),
            "sector": list(sig_sector.astuple()),
            "base_negated": list(sig_negated.astuple()),
            "base": list(sig_base.astuple()),
        }
    return {
        "identity": "signature",
        "status": "fail" if failed else "ok",
        "samples": len(relations),
        "counterexample": counterexample,
    }
