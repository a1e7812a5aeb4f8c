"""Strictly convex cones and the coconvex bodies carved out of them.

A coconvex body is the closure of C minus K, where C is a full-dimensional
strictly convex polyhedral cone and K is a convex set inside C whose
recession cone is all of C.  The body itself is never materialized as a
single convex object; it is carried as the (cone, complement) pair and
measured through truncations: co_volume(A) = vol(C cut at level t) minus
vol(K cut at level t) for any level t clearing the complement's vertices.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .dd import cone_extreme_rays
from .errors import (
    ComplementNotCompact,
    ComplementNotInCone,
    ConeMismatch,
    DimensionMismatch,
    EmptyInterior,
    InvalidTruncation,
    NotFullDimensional,
    NotStrictlyConvex,
)
from .linalg import dot, primitive_integer, rank
from .polytope import (
    Halfspace,
    Polyhedron,
    clip,
    contains,
    convex_hull,
    dd_convert,
    minkowski_sum,
    volume,
)
from .rational import Rat, ZERO


@dataclass(frozen=True)
class Cone:
    """Full-dimensional strictly convex cone with a positivity certificate.

    xi is an integer functional with xi . r > 0 for every ray, which
    witnesses strict convexity and makes every truncation {xi <= t} bounded.
    """

    dim: int
    rays: tuple[tuple[int, ...], ...]
    xi: tuple[int, ...]


@dataclass(frozen=True)
class Truncation:
    """Cutoff data: the sublevel set {x : xi . x <= t}."""

    xi: tuple[int, ...]
    t: object  # rational level

    def halfspace(self) -> Halfspace:
        return Halfspace.make(self.xi, self.t)


@dataclass(frozen=True)
class CoconvexBody:
    """closure(cone minus complement), stored as the pair itself."""

    cone: Cone
    complement: Polyhedron


def make_cone(rays) -> Cone:
    """Validate and canonicalize a cone from ray generators.

    The certificate functional is the sum of the dual cone's extreme ray
    generators, which is interior to the dual exactly when the cone is
    strictly convex and full-dimensional.
    """
    rays = list(rays)
    if not rays:
        raise NotFullDimensional("a cone needs at least one ray")
    dim = len(rays[0])
    prim = []
    for r in rays:
        if len(r) != dim:
            raise DimensionMismatch("ray of wrong length")
        p = primitive_integer(r)
        if all(c == 0 for c in p):
            raise NotStrictlyConvex("zero vector is not a ray")
        prim.append(p)
    dual_rays, dual_lin = cone_extreme_rays(prim, dim)
    xi = [0] * dim
    for y in dual_rays:
        for j in range(dim):
            xi[j] += y[j]
    xi = primitive_integer(xi)
    if any(dot(xi, r) <= 0 for r in prim):
        raise NotStrictlyConvex("cone contains a line")
    if dual_lin:
        raise NotFullDimensional("rays do not span the ambient space")
    rows = list(dual_rays)
    canonical, lin = cone_extreme_rays(rows, dim)
    if lin:
        raise AssertionError("dual of a full-dimensional pointed cone degenerated")
    return Cone(dim, tuple(canonical), xi)


@lru_cache(maxsize=None)
def cone_polyhedron(cone: Cone) -> Polyhedron:
    """The cone as a V-form polyhedron with apex at the origin."""
    return convex_hull([(0,) * cone.dim], rays=cone.rays)


def dual_interior_functionals(cone: Cone):
    """Extreme ray generators of the dual cone; any strictly positive
    combination of all of them is positive on the cone minus the origin."""
    rays, lin = cone_extreme_rays(cone.rays, cone.dim)
    if lin:
        raise NotFullDimensional("rays do not span the ambient space")
    return tuple(rays)


def truncation_threshold(complement: Polyhedron, xi) -> Rat:
    """Largest xi-value over the complement's vertices.

    Every point of the carved-out region has xi-value at most this level,
    so any strictly larger cutoff captures the whole region.
    """
    return max(Rat(dot(xi, v)) for v in complement.vertices)


def synthesize_truncation(body: "CoconvexBody", xi=None) -> Truncation:
    xi = tuple(xi) if xi is not None else body.cone.xi
    return Truncation(xi, truncation_threshold(body.complement, xi) + 1)


def _check_truncation(body: CoconvexBody, trunc: Truncation) -> None:
    if len(trunc.xi) != body.cone.dim:
        raise DimensionMismatch("truncation functional of wrong length")
    if any(dot(trunc.xi, r) <= 0 for r in body.cone.rays):
        raise InvalidTruncation("functional is not positive on every cone ray")
    if Rat(trunc.t) <= truncation_threshold(body.complement, trunc.xi):
        raise InvalidTruncation("cutoff does not clear the complement's vertices")


def _region_volume(cone: Cone, complement: Polyhedron, trunc: Truncation):
    cut = trunc.halfspace()
    return volume(clip(cone_polyhedron(cone), cut)) - volume(clip(complement, cut))


def make_coconvex(cone: Cone, complement: Polyhedron) -> CoconvexBody:
    """Validate the (cone, complement) pair as a genuine coconvex body.

    Checks, in order: the complement sits inside the cone; its recession
    cone is the whole cone; every cone ray eventually enters the
    complement, which certifies the carved-out region is bounded; and the
    region has positive volume.
    """
    if complement.dim != cone.dim:
        raise DimensionMismatch("cone and complement dimensions differ")
    if not contains(cone_polyhedron(cone), complement):
        raise ComplementNotInCone("complement is not contained in the cone")
    if complement.rays != cone.rays:
        raise ComplementNotCompact("recession cone of the complement differs from the cone")
    for h in dd_convert(complement):
        for r in cone.rays:
            pairing = dot(h.normal, r)
            if pairing > 0 or (pairing == 0 and h.bound < 0):
                raise ComplementNotCompact(
                    "a cone ray never enters the complement; the region is unbounded"
                )
    body = CoconvexBody(cone, complement)
    if _region_volume(cone, complement, synthesize_truncation(body)) == 0:
        raise EmptyInterior("region between cone and complement has volume zero")
    return body


def co_volume(body: CoconvexBody, trunc: Truncation | None = None):
    """Exact volume of the carved-out region, independent of the truncation."""
    if trunc is None:
        trunc = synthesize_truncation(body)
    else:
        _check_truncation(body, trunc)
    return _region_volume(body.cone, body.complement, trunc)


def co_scale(factor, body: CoconvexBody) -> CoconvexBody:
    """Dilate by a positive rational; the cone is unchanged and validity
    is preserved, so the scaled pair is assembled directly."""
    return CoconvexBody(body.cone, body.complement.scale(factor))


def co_sum(a: CoconvexBody, b: CoconvexBody) -> CoconvexBody:
    """Coconvex addition: Minkowski-add the complements over a shared cone,
    then revalidate everything."""
    if a.cone != b.cone:
        raise ConeMismatch("coconvex addition needs one shared cone")
    return make_coconvex(a.cone, minkowski_sum(a.complement, b.complement))
