"""Homogeneous polynomials with exact coefficients, plus quadratic-form tools.

Everything here is rational end to end: interpolation solves an exact linear
system, and the inertia of a symmetric matrix comes from congruence
reduction, so signatures carry no numerical error.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from math import factorial

from .errors import DimensionMismatch, EmptyInput
from .linalg import independent_row_indices, solve_square
from .rational import Rat, ZERO


def monomial_exponents(nvars: int, degree: int):
    """Exponent tuples of the given total degree, in lexicographic order."""
    if nvars <= 0:
        raise EmptyInput("need at least one variable")
    if nvars == 1:
        yield (degree,)
        return
    for first in range(degree, -1, -1):
        for rest in monomial_exponents(nvars - 1, degree - first):
            yield (first,) + rest


def multinomial(exponents) -> int:
    out = factorial(sum(exponents))
    for e in exponents:
        out //= factorial(e)
    return out


class HomogeneousPolynomial:
    """Polynomial whose monomials all share one total degree.

    Coefficients live in a dict keyed by exponent tuple; zero coefficients
    are dropped on construction so equality is plain dict equality.
    """

    def __init__(self, nvars: int, degree: int, coeffs=None):
        if nvars <= 0 or degree < 0:
            raise EmptyInput("need nvars >= 1 and degree >= 0")
        self.nvars = nvars
        self.degree = degree
        clean = {}
        for exps, c in (coeffs or {}).items():
            exps = tuple(exps)
            c = Rat(c)
            if c == 0:
                continue
            if len(exps) != nvars or any(e < 0 for e in exps) or sum(exps) != degree:
                raise DimensionMismatch(f"exponent tuple {exps} does not fit")
            clean[exps] = c
        self.coeffs = clean

    def __eq__(self, other):
        return (
            isinstance(other, HomogeneousPolynomial)
            and self.nvars == other.nvars
            and self.degree == other.degree
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        return hash((self.nvars, self.degree, tuple(sorted(self.coeffs.items()))))

    def __repr__(self):
        terms = ", ".join(f"{exps}: {c}" for exps, c in sorted(self.coeffs.items(), reverse=True))
        return f"HomogeneousPolynomial({self.nvars}, {self.degree}, {{{terms}}})"

    def is_zero(self) -> bool:
        return not self.coeffs

    def evaluate(self, point):
        if len(point) != self.nvars:
            raise DimensionMismatch("point has the wrong number of coordinates")
        pt = [Rat(x) for x in point]
        total = ZERO
        for exps, c in self.coeffs.items():
            term = c
            for x, e in zip(pt, exps):
                if e:
                    term = term * x**e
            total = total + term
        return total

    def partial(self, index: int) -> "HomogeneousPolynomial":
        """Partial derivative in one variable; degree drops by one."""
        if not 0 <= index < self.nvars:
            raise DimensionMismatch("no such variable")
        if self.degree == 0:
            return HomogeneousPolynomial(self.nvars, 0)
        out = {}
        for exps, c in self.coeffs.items():
            e = exps[index]
            if e == 0:
                continue
            dropped = exps[:index] + (e - 1,) + exps[index + 1 :]
            out[dropped] = out.get(dropped, ZERO) + c * e
        return HomogeneousPolynomial(self.nvars, self.degree - 1, out)

    def directional(self, vector) -> "HomogeneousPolynomial":
        """Derivative along a constant direction in the variable space."""
        if len(vector) != self.nvars:
            raise DimensionMismatch("direction has the wrong number of coordinates")
        out = HomogeneousPolynomial(self.nvars, max(self.degree - 1, 0))
        for i, v in enumerate(vector):
            v = Rat(v)
            if v != 0:
                out = out + self.partial(i).scale(v)
        return out

    def constant(self):
        """The value of a degree-zero polynomial."""
        if self.degree != 0:
            raise DimensionMismatch("polynomial is not constant")
        return self.coeffs.get((0,) * self.nvars, ZERO)

    def scale(self, factor) -> "HomogeneousPolynomial":
        factor = Rat(factor)
        return HomogeneousPolynomial(
            self.nvars, self.degree, {e: c * factor for e, c in self.coeffs.items()}
        )

    def __add__(self, other):
        if self.nvars != other.nvars or self.degree != other.degree:
            raise DimensionMismatch("cannot add polynomials of different shape")
        out = dict(self.coeffs)
        for e, c in other.coeffs.items():
            out[e] = out.get(e, ZERO) + c
        return HomogeneousPolynomial(self.nvars, self.degree, out)

    def __sub__(self, other):
        return self + other.scale(-1)

    def __neg__(self):
        return self.scale(-1)


def tensor_grid(axes):
    """Cartesian product of per-variable value lists, in axis order."""
    return [tuple(p) for p in product(*axes)]


def default_grid(nvars: int, degree: int, start: int = 1):
    """Grid with degree+1 consecutive integer values on every axis, which
    pins down any polynomial of per-variable degree at most `degree`."""
    return tensor_grid([range(start, start + degree + 1)] * nvars)


def fit_homogeneous(nvars: int, degree: int, points, value_fn) -> HomogeneousPolynomial:
    """Recover the homogeneous polynomial matching value_fn on a grid.

    Rows of the monomial evaluation matrix are selected greedily until it
    is invertible; value_fn runs only at the selected points, which matters
    when each evaluation is a full volume computation.
    """
    monomials = list(monomial_exponents(nvars, degree))
    points = list(points)
    rows = []
    for p in points:
        if len(p) != nvars:
            raise DimensionMismatch("grid point has the wrong number of coordinates")
        pt = [Rat(x) for x in p]
        row = []
        for exps in monomials:
            term = Rat(1)
            for x, e in zip(pt, exps):
                if e:
                    term = term * x**e
            row.append(term)
        rows.append(row)
    idx = independent_row_indices(rows, len(monomials), limit=len(monomials))
    if len(idx) < len(monomials):
        raise ArithmeticError("candidate points cannot determine the polynomial")
    matrix = [rows[i] for i in idx]
    rhs = [Rat(value_fn(points[i])) for i in idx]
    sol = solve_square(matrix, rhs)
    return HomogeneousPolynomial(nvars, degree, dict(zip(monomials, sol)))


def hessian_matrix(poly: HomogeneousPolynomial):
    """Matrix of second partials of a quadratic; entries are rationals."""
    if poly.degree != 2:
        raise DimensionMismatch("hessian needs a quadratic")
    n = poly.nvars
    firsts = [poly.partial(i) for i in range(n)]
    return tuple(tuple(firsts[i].partial(j).constant() for j in range(n)) for i in range(n))


@dataclass(frozen=True)
class Signature:
    """Inertia of a symmetric form: positive, negative, and null counts."""

    pos: int
    neg: int
    zero: int

    def astuple(self):
        return (self.pos, self.neg, self.zero)


def signature(matrix) -> Signature:
    """Inertia of a symmetric rational matrix by congruence reduction.

    Diagonalizes M as S M S^T with exact row and column operations, so the
    counts are those guaranteed by Sylvester's law, free of rounding.
    """
    n = len(matrix)
    m = [[Rat(x) for x in row] for row in matrix]
    for row in m:
        if len(row) != n:
            raise DimensionMismatch("matrix is not square")
    for i in range(n):
        for j in range(i):
            if m[i][j] != m[j][i]:
                raise DimensionMismatch("matrix is not symmetric")

    def swap(a, b):
        m[a], m[b] = m[b], m[a]
        for row in m:
            row[a], row[b] = row[b], row[a]

    pos = neg = zero = 0
    for k in range(n):
        if m[k][k] == 0:
            diag = next((i for i in range(k + 1, n) if m[i][i] != 0), None)
            if diag is not None:
                swap(k, diag)
            else:
                spot = next(
                    (
                        (i, j)
                        for i in range(k, n)
                        for j in range(i + 1, n)
                        if m[i][j] != 0
                    ),
                    None,
                )
                if spot is None:
                    zero += n - k
                    break
                i, j = spot
                # fold variable j into i; the diagonal entry becomes 2 m[i][j]
                for col in range(n):
                    m[i][col] = m[i][col] + m[j][col]
                for row in m:
                    row[i] = row[i] + row[j]
                if i != k:
                    swap(k, i)
        p = m[k][k]
        if p > 0:
            pos += 1
        else:
            neg += 1
        for i in range(k + 1, n):
            if m[i][k] == 0:
                continue
            f = m[i][k] / p
            for col in range(n):
                m[i][col] = m[i][col] - f * m[k][col]
            for row in m:
                row[i] = row[i] - f * row[k]
    return Signature(pos, neg, zero)
