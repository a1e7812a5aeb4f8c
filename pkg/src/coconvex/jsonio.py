"""JSON wire formats for every value the CLI reads or writes.

Scalars travel as strings "p/q" (or "p" for integers) so nothing is ever
rounded.  Geometry is rebuilt through the validating constructors on load,
which keeps canonical-form invariants true for data from any source.
"""

from __future__ import annotations

import json

from .cones import Cone, CoconvexBody, make_cone, make_coconvex
from .errors import CoconvexError
from .forms import (
    CoconvexFamily,
    ConvexFamily,
    make_coconvex_family,
    make_convex_family,
)
from .polynomial import HomogeneousPolynomial, Signature
from .polytope import Polyhedron, convex_hull
from .rational import Rat, rat, rat_str


def _field(obj, key, what):
    try:
        return obj[key]
    except (KeyError, TypeError):
        raise CoconvexError(f"{what} needs a {key!r} field") from None


def rational_to_json(x) -> str:
    return rat_str(Rat(x))


def vector_to_json(v):
    return [rational_to_json(x) for x in v]


def vector_from_json(v):
    return tuple(rat(x) for x in v)


def polyhedron_to_json(P: Polyhedron) -> dict:
    return {
        "dim": P.dim,
        "vertices": [vector_to_json(v) for v in P.vertices],
        "rays": [list(r) for r in P.rays],
    }


def polyhedron_from_json(obj: dict) -> Polyhedron:
    dim = int(_field(obj, "dim", "polyhedron"))
    vertices = [vector_from_json(v) for v in obj.get("vertices", [])]
    rays = [vector_from_json(r) for r in obj.get("rays", [])]
    if not vertices:
        if rays:
            raise CoconvexError("rays without vertices do not describe a polyhedron")
        return Polyhedron.empty(dim)
    return convex_hull(vertices, rays=rays)


def cone_to_json(c: Cone) -> dict:
    return {"rays": [list(r) for r in c.rays], "xi": list(c.xi)}


def cone_from_json(obj: dict) -> Cone:
    # the stored xi is advisory; the constructor recomputes the canonical one
    return make_cone([vector_from_json(r) for r in _field(obj, "rays", "cone")])


def coconvex_to_json(b: CoconvexBody) -> dict:
    return {"cone": cone_to_json(b.cone), "complement": polyhedron_to_json(b.complement)}


def coconvex_from_json(obj: dict) -> CoconvexBody:
    return make_coconvex(
        cone_from_json(_field(obj, "cone", "coconvex body")),
        polyhedron_from_json(_field(obj, "complement", "coconvex body")),
    )


def convex_family_to_json(f: ConvexFamily) -> dict:
    return {
        "dim": f.dim,
        "generators": [polyhedron_to_json(g) for g in f.generators],
        "marked": [vector_to_json(v) for v in f.marked],
    }


def convex_family_from_json(obj: dict) -> ConvexFamily:
    gens = [polyhedron_from_json(g) for g in _field(obj, "generators", "convex family")]
    marked = [vector_from_json(v) for v in obj["marked"]] if "marked" in obj else None
    return make_convex_family(gens, marked)


def coconvex_family_to_json(f: CoconvexFamily) -> dict:
    return {
        "cone": cone_to_json(f.cone),
        "generators": [polyhedron_to_json(g.complement) for g in f.generators],
        "marked": [vector_to_json(v) for v in f.marked],
    }


def coconvex_family_from_json(obj: dict) -> CoconvexFamily:
    cone = cone_from_json(_field(obj, "cone", "coconvex family"))
    gens = [
        make_coconvex(cone, polyhedron_from_json(g))
        for g in _field(obj, "generators", "coconvex family")
    ]
    marked = [vector_from_json(v) for v in obj["marked"]] if "marked" in obj else None
    return make_coconvex_family(gens, marked)


def polynomial_to_json(P: HomogeneousPolynomial) -> dict:
    return {
        "nvars": P.nvars,
        "degree": P.degree,
        "terms": [
            {"exp": list(exps), "coeff": rational_to_json(c)}
            for exps, c in sorted(P.coeffs.items(), reverse=True)
        ],
    }


def polynomial_from_json(obj: dict) -> HomogeneousPolynomial:
    coeffs = {
        tuple(int(e) for e in _field(t, "exp", "polynomial term")): rat(
            _field(t, "coeff", "polynomial term")
        )
        for t in _field(obj, "terms", "polynomial")
    }
    return HomogeneousPolynomial(
        int(_field(obj, "nvars", "polynomial")), int(_field(obj, "degree", "polynomial")), coeffs
    )


def form_to_json(matrix) -> dict:
    return {"n": len(matrix), "rows": [[rational_to_json(x) for x in row] for row in matrix]}


def form_from_json(obj: dict):
    n = int(_field(obj, "n", "matrix"))
    rows = tuple(tuple(rat(x) for x in row) for row in _field(obj, "rows", "matrix"))
    if len(rows) != n or any(len(r) != n for r in rows):
        raise CoconvexError("matrix rows do not match the declared size")
    return rows


def signature_to_json(s: Signature) -> dict:
    return {"pos": s.pos, "neg": s.neg, "zero": s.zero}


def dump_json(obj) -> str:
    """Deterministic rendering: sorted keys, fixed indentation."""
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"


def read_json_file(path: str):
    with open(path, encoding="utf-8") as fh:
        return json.load(fh)


def write_json_file(path: str, obj) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(dump_json(obj))
