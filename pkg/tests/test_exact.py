import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from qflab.exact import (
    InconsistentSystemError,
    MissingParameterError,
    Poly,
    RowSpace,
    invert_matrix,
    mat_mul,
    matrix_rank,
    nullspace,
    parse_poly,
    rat,
    rat_str,
    solve_linear,
)
from oracles import dense_solve

PARAMS = ("a1", "a2", "a3")


def poly_of(mapping):
    return Poly.from_map(PARAMS, {tuple(m): Fraction(c) for m, c in mapping.items()})


st_rational = st.builds(
    Fraction,
    st.integers(min_value=-30, max_value=30),
    st.integers(min_value=1, max_value=12),
)

st_mono = st.tuples(*[st.integers(min_value=0, max_value=3)] * len(PARAMS))

st_poly = st.dictionaries(st_mono, st_rational, max_size=5).map(
    lambda d: Poly.from_map(PARAMS, d)
)


def test_rat_str_roundtrip():
    assert rat_str(Fraction(3, 4)) == "3/4"
    assert rat_str(Fraction(-5)) == "-5"
    assert rat("3/4") == Fraction(3, 4)


def test_constant_rational_addition():
    half = Poly.const(PARAMS, Fraction(1, 2))
    third = Poly.const(PARAMS, Fraction(1, 3))
    assert (half + third).constant_value() == Fraction(5, 6)


def test_distributivity_example():
    a1 = Poly.variable(PARAMS, "a1")
    a2 = Poly.variable(PARAMS, "a2")
    assert (a1 + a2) * a1 == a1 * a1 + a1 * a2


def test_eval_example():
    a1 = Poly.variable(PARAMS, "a1")
    p = a1 * a1 + 2
    assert p.evaluate({"a1": Fraction(3)}) == 11
    assert Poly.zero(PARAMS).evaluate({}) == 0


def test_eval_missing_parameter():
    p = Poly.variable(PARAMS, "a2")
    with pytest.raises(MissingParameterError):
        p.evaluate({"a1": Fraction(1)})


def test_universe_mismatch_rejected():
    p = Poly.variable(PARAMS, "a1")
    q = Poly.variable(("b1",), "b1")
    with pytest.raises(ValueError):
        _ = p + q


@given(st_poly, st_poly, st_poly)
@settings(max_examples=60, deadline=None)
def test_ring_axioms(p, q, r):
    assert (p + q) + r == p + (q + r)
    assert p + q == q + p
    assert (p * q) * r == p * (q * r)
    assert p * (q + r) == p * q + p * r
    assert (p - p).is_zero()


@given(st_poly)
@settings(max_examples=60, deadline=None)
def test_string_roundtrip(p):
    assert parse_poly(str(p), PARAMS) == p


def test_canonical_form_is_sorted_and_sparse():
    p = poly_of({(1, 0, 0): 1, (0, 0, 0): 2, (2, 1, 0): 3, (0, 1, 0): 0})
    degrees = [sum(m) for m, _ in p.terms]
    assert degrees == sorted(degrees, reverse=True)
    assert all(c != 0 for _, c in p.terms)
    assert str(p) == "3*a1^2*a2 + a1 + 2"


# --- linear algebra ---------------------------------------------------------


def test_identity_solution():
    sol = solve_linear([[1, 0], [0, 1]], [Fraction(5), Fraction(-2, 3)])
    assert sol.particular == (Fraction(5), Fraction(-2, 3))
    assert sol.kernel == ()


def test_zero_matrix_kernel():
    sol = solve_linear([[0, 0], [0, 0]], [0, 0])
    assert len(sol.kernel) == 2


def test_inconsistent_raises():
    with pytest.raises(InconsistentSystemError):
        solve_linear([[1, 1], [1, 1]], [1, 2])


@given(
    st.lists(
        st.lists(st.integers(min_value=-6, max_value=6), min_size=7, max_size=7),
        min_size=5,
        max_size=5,
    ),
    st.lists(st.integers(min_value=-6, max_value=6), min_size=5, max_size=5),
)
@settings(max_examples=60, deadline=None)
def test_solver_matches_dense_oracle(matrix, rhs):
    expected = dense_solve(matrix, rhs)
    if expected is None:
        with pytest.raises(InconsistentSystemError):
            solve_linear(matrix, rhs)
        return
    sol = solve_linear(matrix, rhs)
    # same kernel dimension and an exactly satisfied particular solution
    assert len(sol.kernel) == len(expected[1])
    for row, b in zip(matrix, rhs):
        assert sum(Fraction(c) * x for c, x in zip(row, sol.particular)) == b
        for k in sol.kernel:
            assert sum(Fraction(c) * x for c, x in zip(row, k)) == 0


@given(
    st.lists(
        st.lists(st.integers(min_value=-5, max_value=5), min_size=6, max_size=6),
        min_size=3,
        max_size=8,
    )
)
@settings(max_examples=60, deadline=None)
def test_rank_nullity(matrix):
    ncols = 6
    assert matrix_rank(matrix) + len(nullspace(matrix)) == ncols


def test_sparse_input_agrees_with_dense():
    dense = [[0, 2, 0, 1], [1, 0, 0, -1], [1, 2, 0, 0]]
    sparse = [{1: 2, 3: 1}, {0: 1, 3: -1}, {0: 1, 1: 2}]
    assert matrix_rank(dense) == matrix_rank(sparse, ncols=4)
    assert sorted(nullspace(dense)) == sorted(nullspace(sparse, ncols=4))


def test_invert_matrix_roundtrip():
    rng = random.Random(7)
    for _ in range(10):
        n = rng.randint(1, 5)
        m = [[Fraction(rng.randint(-4, 4)) for _ in range(n)] for _ in range(n)]
        try:
            inv = invert_matrix(m)
        except Exception:
            continue
        assert mat_mul(m, inv) == [[Fraction(1 if i == j else 0) for j in range(n)] for i in range(n)]


def test_rowspace_rref_deterministic():
    s = RowSpace(4)
    assert s.add([0, 1, 1, 0])
    assert s.add([1, 1, 0, 0])
    assert not s.add([1, 2, 1, 0])
    assert s.pivots == [0, 1]
    assert s.rows[0][0] == 1 and s.rows[0][1] == 0
    assert s.contains([2, 3, 1, 0])
    assert not s.contains([0, 0, 0, 1])
