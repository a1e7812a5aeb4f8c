import math

import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from coconvex.polynomial import (
    HomogeneousPolynomial,
    Signature,
    default_grid,
    fit_homogeneous,
    hessian_matrix,
    monomial_exponents,
    multinomial,
    signature,
    tensor_grid,
)
from coconvex.rational import Rat


def test_monomial_exponents_count_and_order():
    exps = list(monomial_exponents(2, 3))
    assert exps == [(3, 0), (2, 1), (1, 2), (0, 3)]
    # stars and bars count for three variables
    assert len(list(monomial_exponents(3, 4))) == math.comb(6, 2)
    assert all(sum(e) == 4 for e in monomial_exponents(3, 4))


def test_multinomial():
    assert multinomial((3, 0)) == 1
    assert multinomial((2, 1)) == 3
    assert multinomial((1, 1, 1)) == 6
    assert multinomial((2, 2)) == 6


@pytest.fixture
def quadratic():
    # x^2 + 5xy + 6y^2 = (x + 2y)(x + 3y)
    return HomogeneousPolynomial(2, 2, {(2, 0): 1, (1, 1): 5, (0, 2): 6})


def test_evaluate(quadratic):
    assert quadratic.evaluate((1, 0)) == 1
    assert quadratic.evaluate((1, 1)) == 12
    assert quadratic.evaluate((Rat(1, 2), Rat(1, 3))) == Rat(1, 4) + Rat(5, 6) + Rat(6, 9)


def test_zero_coefficients_are_dropped():
    P = HomogeneousPolynomial(2, 2, {(2, 0): 0, (1, 1): 1})
    assert (2, 0) not in P.coeffs
    assert not P.is_zero()
    assert HomogeneousPolynomial(2, 2).is_zero()


def test_partial_derivatives(quadratic):
    px = quadratic.partial(0)
    assert px.coeffs == {(1, 0): Rat(2), (0, 1): Rat(5)}
    py = quadratic.partial(1)
    assert py.coeffs == {(1, 0): Rat(5), (0, 1): Rat(12)}
    assert px.partial(0).constant() == 2


def test_partial_to_degree_zero():
    lin = HomogeneousPolynomial(2, 1, {(1, 0): 3, (0, 1): 4})
    assert lin.partial(0).constant() == 3
    assert lin.partial(0).partial(1).is_zero()


def test_directional_derivative(quadratic):
    d = quadratic.directional((1, 1))
    # (d/dx + d/dy) applied once
    assert d.coeffs == {(1, 0): Rat(7), (0, 1): Rat(17)}


def test_arithmetic(quadratic):
    s = quadratic + quadratic
    assert s.coeffs[(1, 1)] == 10
    assert (s - quadratic) == quadratic
    assert (-quadratic).coeffs[(0, 2)] == -6
    assert quadratic.scale(Rat(1, 2)).coeffs[(1, 1)] == Rat(5, 2)


def test_euler_identity(quadratic):
    # sum x_i dP/dx_i = deg * P for homogeneous P, checked at sample points
    for point in ((1, 2), (3, -1), (Rat(1, 3), Rat(2, 5))):
        lhs = sum(point[i] * quadratic.partial(i).evaluate(point) for i in range(2))
        assert lhs == 2 * quadratic.evaluate(point)


def test_tensor_and_default_grids():
    assert tensor_grid([[1, 2], [5]]) == [(1, 5), (2, 5)]
    grid = default_grid(2, 2)
    assert len(grid) == 9
    assert grid[0] == (1, 1)


def test_fit_recovers_known_polynomial(quadratic):
    fitted = fit_homogeneous(2, 2, default_grid(2, 2), quadratic.evaluate)
    assert fitted == quadratic


def test_fit_three_variables():
    target = HomogeneousPolynomial(3, 3, {(1, 1, 1): 6, (3, 0, 0): 1, (0, 2, 1): -2})
    fitted = fit_homogeneous(3, 3, default_grid(3, 3), target.evaluate)
    assert fitted == target


def test_fit_needs_enough_points():
    with pytest.raises(ArithmeticError):
        fit_homogeneous(2, 2, [(1, 1), (2, 2)], lambda p: 0)


def test_hessian(quadratic):
    H = hessian_matrix(quadratic)
    assert H == ((Rat(2), Rat(5)), (Rat(5), Rat(12)))


def test_hessian_rejects_wrong_degree():
    cubic = HomogeneousPolynomial(1, 3, {(3,): 1})
    with pytest.raises(ValueError):
        hessian_matrix(cubic)


def test_signature_known_matrices():
    assert signature(((1, 0), (0, -1))).astuple() == (1, 1, 0)
    assert signature(((0, 1), (1, 0))).astuple() == (1, 1, 0)
    assert signature(((0, 0), (0, 0))).astuple() == (0, 0, 2)
    assert signature(((2, 4), (4, 8))).astuple() == (1, 0, 1)
    assert signature(((2, 0, 0), (0, 0, 3), (0, 3, 0))).astuple() == (2, 1, 0)


def test_signature_rational_entries():
    M = ((Rat(1, 2), Rat(1, 3)), (Rat(1, 3), Rat(1, 4)))
    # det = 1/8 - 1/9 > 0 and trace > 0, so positive definite
    assert signature(M).astuple() == (2, 0, 0)


def test_signature_rejects_asymmetric():
    with pytest.raises(ValueError):
        signature(((1, 2), (3, 4)))


def test_signature_dataclass():
    s = Signature(1, 2, 3)
    assert s.astuple() == (1, 2, 3)


entry = st.integers(-4, 4)


@st.composite
def symmetric3(draw):
    a, b, c = draw(entry), draw(entry), draw(entry)
    d, e, f = draw(entry), draw(entry), draw(entry)
    return ((a, b, c), (b, d, e), (c, e, f))


def _det3(rows):
    return (
        rows[0][0] * (rows[1][1] * rows[2][2] - rows[1][2] * rows[2][1])
        - rows[0][1] * (rows[1][0] * rows[2][2] - rows[1][2] * rows[2][0])
        + rows[0][2] * (rows[1][0] * rows[2][1] - rows[1][1] * rows[2][0])
    )


@given(symmetric3(), st.lists(st.lists(entry, min_size=3, max_size=3), min_size=3, max_size=3))
@settings(deadline=None, max_examples=60)
def test_signature_is_congruence_invariant(M, S):
    # inertia is preserved under M -> S^T M S for invertible S
    assume(_det3(S) != 0)
    n = 3
    SM = [[sum(S[k][i] * M[k][j] for k in range(n)) for j in range(n)] for i in range(n)]
    SMS = tuple(
        tuple(sum(SM[i][k] * S[k][j] for k in range(n)) for j in range(n)) for i in range(n)
    )
    assert signature(SMS).astuple() == signature(M).astuple()


@given(symmetric3())
@settings(deadline=None, max_examples=60)
def test_signature_counts_sum_to_dimension(M):
    s = signature(M)
    assert s.pos + s.neg + s.zero == 3
