"""Structure-constant Lie algebras over Q with optional polynomial parameters.

An algebra stores only the brackets [X_i, X_j] with i < j; the rest follows
by antisymmetry.  Coefficients are Poly values over the algebra's declared
parameter universe, so a single representation covers both concrete algebras
and parametric families.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from qflab.exact import (
    Poly,
    QflabError,
    SingularMatrixError,
    invert_matrix,
    rat,
)


class DimensionMismatchError(QflabError):
    pass


class ShiftOutOfRangeError(QflabError):
    pass


BracketTable = dict  # {(i, j): {k: Poly}} with i < j


class Algebra:
    """An anticommutative algebra given by exact structure constants.

    Immutable by convention: no method mutates an instance, all operations
    return fresh algebras.  Equality is structural equality of the canonical
    constant table (plus dimension and parameter universe).
    """

    def __init__(self, dim: int, table: Mapping | None = None,
                 params: Sequence[str] = (), labels: Sequence[str] | None = None):
        if dim < 0:
            raise ValueError("dimension must be nonnegative")
        self.dim = dim
        self.params = tuple(params)
        self.labels = tuple(labels) if labels is not None else tuple(f"X{i}" for i in range(dim))
        if len(self.labels) != dim:
            raise ValueError("label count does not match dimension")
        normalized: BracketTable = {}
        for (i, j), targets in (table or {}).items():
            if not (0 <= i < j < dim):
                raise ValueError(f"bracket indices ({i},{j}) out of range for i<j<{dim}")
            entry = {}
            for k, coeff in targets.items():
                if not 0 <= k < dim:
                    raise ValueError(f"target index {k} out of range")
                poly = coeff if isinstance(coeff, Poly) else Poly.const(self.params, coeff)
                if poly.params != self.params:
                    raise ValueError("coefficient parameter universe does not match the algebra")
                if not poly.is_zero():
                    entry[k] = poly
            if entry:
                normalized[(i, j)] = entry
        self._table = normalized

    # -- canonical views -----------------------------------------------------

    def canonical(self):
        return (
            self.dim,
            self.params,
            tuple(
                (i, j, tuple(sorted(targets.items())))
                for (i, j), targets in sorted(self._table.items())
            ),
        )

    def __eq__(self, other):
        return isinstance(other, Algebra) and self.canonical() == other.canonical()

    def __hash__(self):
        return hash(self.canonical())

    def __repr__(self):
        return f"Algebra(dim={self.dim}, brackets={len(self._table)}, params={self.params})"

    def brackets(self) -> Iterable[tuple[int, int, dict]]:
        for (i, j), targets in sorted(self._table.items()):
            yield i, j, dict(targets)

    def table(self) -> BracketTable:
        return {pair: dict(targets) for pair, targets in self._table.items()}

    def bracket_of(self, i: int, j: int) -> dict:
        """Signed bracket of two basis elements as {target: Poly}."""
        if i == j:
            return {}
        if i < j:
            return dict(self._table.get((i, j), {}))
        return {k: -c for k, c in self._table.get((j, i), {}).items()}

    def coeff(self, i: int, j: int, k: int) -> Poly:
        return self.bracket_of(i, j).get(k, Poly.zero(self.params))

    # -- parameter handling --------------------------------------------------

    def specialize(self, assignment: Mapping[str, Fraction]) -> "Algebra":
        """Substitute rationals for every parameter; result has an empty universe."""
        if not self.params:
            return self
        table = {}
        for (i, j), targets in self._table.items():
            entry = {}
            for k, poly in targets.items():
                value = poly.evaluate(assignment)
                if value != 0:
                    entry[k] = value
            if entry:
                table[(i, j)] = entry
        return Algebra(self.dim, table, params=(), labels=self.labels)

    def rational_table(self) -> dict:
        """Constant table as plain Fractions; requires an empty parameter universe."""
        out = {}
        for (i, j), targets in self._table.items():
            out[(i, j)] = {k: poly.constant_value() for k, poly in targets.items()}
        return out


def abelian(dim: int, params: Sequence[str] = ()) -> Algebra:
    return Algebra(dim, {}, params=params)


# ---------------------------------------------------------------------------
# Bracket evaluation and the Jacobi report
# ---------------------------------------------------------------------------


def bracket(algebra: Algebra, x: Sequence, y: Sequence) -> list[Poly]:
    """Bilinear extension of the constant table to coefficient vectors."""
    if len(x) != algebra.dim or len(y) != algebra.dim:
        raise DimensionMismatchError(
            f"expected vectors of length {algebra.dim}, got {len(x)} and {len(y)}"
        )
    coerce = lambda v: v if isinstance(v, Poly) else Poly.const(algebra.params, v)
    xs = [coerce(v) for v in x]
    ys = [coerce(v) for v in y]
    out = [Poly.zero(algebra.params) for _ in range(algebra.dim)]
    for (i, j), targets in algebra._table.items():
        w = xs[i] * ys[j] - xs[j] * ys[i]
        if w.is_zero():
            continue
        for k, c in targets.items():
            out[k] = out[k] + w * c
    return out


def rational_bracket(table: Mapping, n: int, u: Sequence[Fraction], v: Sequence[Fraction]) -> list[Fraction]:
    """Fast bracket for concrete algebras on Fraction coordinate vectors."""
    out = [Fraction(0)] * n
    for (i, j), targets in table.items():
        w = u[i] * v[j] - u[j] * v[i]
        if w == 0:
            continue
        for k, c in targets.items():
            out[k] += w * c
    return out


class JacobiReport:
    """Nonzero residuals of the Jacobi identity, keyed by basis triple i<j<k."""

    def __init__(self, dim: int, residuals: Mapping):
        self.dim = dim
        self.residuals = {triple: dict(components) for triple, components in residuals.items()}

    @property
    def ok(self) -> bool:
        return not self.residuals

    def __len__(self):
        return len(self.residuals)

    def lines(self) -> list[str]:
        out = []
        for (i, j, k), components in sorted(self.residuals.items()):
            for b, poly in sorted(components.items()):
                out.append(f"J(X{i},X{j},X{k})[X{b}] = {poly}")
        return out

    def __repr__(self):
        return "JacobiReport(ok)" if self.ok else f"JacobiReport({len(self.residuals)} bad triples)"


def jacobi_check(algebra: Algebra) -> JacobiReport:
    """Residuals [[Xi,Xj],Xk] + [[Xj,Xk],Xi] + [[Xk,Xi],Xj] for all i<j<k.

    An empty report means the Jacobi identity holds identically in the
    parameters.  Triples not of the form i<j<k are forced by antisymmetry.
    """
    n = algebra.dim
    residuals = {}
    if not algebra.params:
        table = algebra.rational_table()
        signed = _signed_lookup(table)
        zero = Fraction(0)
        for i in range(n):
            for j in range(i + 1, n):
                for k in range(j + 1, n):
                    acc: dict[int, Fraction] = {}
                    _acc_rational(acc, signed(i, j), signed, k)
                    _acc_rational(acc, signed(j, k), signed, i)
                    _acc_rational(acc, signed(k, i), signed, j)
                    acc = {b: c for b, c in acc.items() if c != zero}
                    if acc:
                        residuals[(i, j, k)] = {
                            b: Poly.const((), c) for b, c in acc.items()
                        }
        return JacobiReport(n, residuals)
    for i in range(n):
        for j in range(i + 1, n):
            for k in range(j + 1, n):
                acc: dict[int, Poly] = {}
                _acc_poly(acc, algebra.bracket_of(i, j), algebra, k)
                _acc_poly(acc, algebra.bracket_of(j, k), algebra, i)
                _acc_poly(acc, algebra.bracket_of(k, i), algebra, j)
                acc = {b: p for b, p in acc.items() if not p.is_zero()}
                if acc:
                    residuals[(i, j, k)] = acc
    return JacobiReport(n, residuals)


def _signed_lookup(table):
    def signed(u, v):
        if u == v:
            return {}
        if u < v:
            return table.get((u, v), {})
        return {k: -c for k, c in table.get((v, u), {}).items()}

    return signed


def _acc_rational(acc, inner, signed, outer):
    for m, c in inner.items():
        for b, d in signed(m, outer).items():
            acc[b] = acc.get(b, Fraction(0)) + c * d


def _acc_poly(acc, inner, algebra, outer):
    for m, c in inner.items():
        for b, d in algebra.bracket_of(m, outer).items():
            prod = c * d
            if b in acc:
                acc[b] = acc[b] + prod
            else:
                acc[b] = prod


# ---------------------------------------------------------------------------
# Constructions
# ---------------------------------------------------------------------------


def change_of_basis(algebra: Algebra, P: Sequence[Sequence[Fraction]]) -> Algebra:
    """Rewrite the algebra in the basis Y_i = sum_j P[i][j] X_j.

    P must be exactly invertible.  Jacobi validity, lower-central-series
    dimensions and the derivation algebra dimension are all preserved.
    """
    n = algebra.dim
    if len(P) != n or any(len(row) != n for row in P):
        raise DimensionMismatchError("change-of-basis matrix has wrong shape")
    rows = [[rat(x) for x in row] for row in P]
    inverse = invert_matrix(rows)  # raises SingularMatrixError
    table: BracketTable = {}
    for a in range(n):
        for b in range(a + 1, n):
            v = bracket(algebra, rows[a], rows[b])  # old coordinates, Poly entries
            entry = {}
            for t in range(n):
                coeff = Poly.zero(algebra.params)
                for jj in range(n):
                    c = inverse[jj][t]
                    if c != 0 and not v[jj].is_zero():
                        coeff = coeff + v[jj] * c
                if not coeff.is_zero():
                    entry[t] = coeff
            if entry:
                table[(a, b)] = entry
    return Algebra(n, table, params=algebra.params, labels=algebra.labels)


def direct_sum(a: Algebra, b: Algebra) -> Algebra:
    """Block sum; brackets between the two blocks vanish."""
    if a.params == b.params:
        params = a.params
        lift_a = lift_b = lambda p: p
    elif not b.params:
        params = a.params
        lift_a = lambda p: p
        lift_b = lambda p: p.lift(params)
    elif not a.params:
        params = b.params
        lift_a = lambda p: p.lift(params)
        lift_b = lambda p: p
    else:
        if set(a.params) & set(b.params):
            raise ValueError("parameter universes overlap but differ")
        params = a.params + b.params
        lift_a = lambda p: p.lift(params)
        lift_b = lambda p: p.lift(params)
    table: BracketTable = {}
    for (i, j), targets in a._table.items():
        table[(i, j)] = {k: lift_a(c) for k, c in targets.items()}
    off = a.dim
    for (i, j), targets in b._table.items():
        table[(i + off, j + off)] = {k + off: lift_b(c) for k, c in targets.items()}
    return Algebra(a.dim + b.dim, table, params=params)


def chain_indices(algebra: Algebra) -> list[int]:
    """Longest run 1, 2, ... along which [X0, X_i] = X_{i+1} exactly."""
    one = Poly.const(algebra.params, 1)
    chain = [1] if algebra.dim > 1 else []
    i = 1
    while i + 1 < algebra.dim:
        entry = algebra.bracket_of(0, i)
        if entry == {i + 1: one}:
            chain.append(i + 1)
            i += 1
        else:
            break
    return chain


def extend_by_shift(algebra: Algebra, shift: int) -> Algebra:
    """Append a generator acting on the canonical chain by an index shift.

    The new element Y (last basis index) satisfies [X_i, Y] = X_{i+shift} for
    every chain index i with i + shift still on the chain.  For shifts past
    the chain length every appended bracket vanishes and the result is the
    plain direct sum with a one-dimensional center summand.
    """
    if shift < 2:
        raise ShiftOutOfRangeError(f"shift must be at least 2, got {shift}")
    chain = set(chain_indices(algebra))
    n = algebra.dim + 1
    new = n - 1
    table = {pair: dict(targets) for pair, targets in algebra._table.items()}
    one = Poly.const(algebra.params, 1)
    for i in sorted(chain):
        if i + shift in chain:
            table[(i, new)] = {i + shift: one}
    return Algebra(n, table, params=algebra.params)
