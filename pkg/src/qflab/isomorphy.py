"""Explicit change-of-variable procedures and an invariant fingerprint.

The fingerprint packages basis-independent invariants (type vector, series
dimensions, center and derivation-algebra dimensions) plus two documented
basis-dependent extensions used to split ties inside the naturally graded
catalog.  Fingerprint matching replaces general isomorphism testing; on the
finite catalog it is made sufficient by the separation property checked in
the test suite.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Sequence

from qflab import catalog
from qflab.exact import RowSpace, rat
from qflab.gradation import gr, lower_central_series, type_of
from qflab.liealg import Algebra, change_of_basis, rational_bracket
from qflab.derivations import derivation_dim, diagonal_derivations


# ---------------------------------------------------------------------------
# The parameter-elimination isomorphism from Cn onto Qn
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class CnTransform:
    source: Algebra
    image: Algebra
    stages: tuple  # change-of-basis matrices, applied left to right
    composed: tuple  # product matrix equal to the chained application

    def matches_qn(self) -> bool:
        return self.image == catalog.generate(catalog.spec_for("Qn", self.source.dim))


def cn_to_qn_transform(n: int, alphas: Sequence) -> CnTransform:
    """Eliminate the parameters of Cn(alpha) by explicit changes of variable.

    Stage j substitutes Y_i -> Y_i + (c_j/2) Y_{i+2j} for i = 1..n-2-2j with
    c_j the current coefficient in slot j, which cancels that slot.  The
    stage also pollutes slot 2j with a term quadratic in c_j, so a single
    pass in ascending j (the slot-1 stage first) clears everything, whereas
    a descending pass does not.  A final sign flip on the last basis vector
    lands exactly on Qn's table (the Cn convention carries the opposite sign
    on its symplectic-style pairs).
    """
    if n < 6 or n % 2 != 0:
        raise catalog.InvalidParametersError("n must be even and at least 6")
    m = n // 2
    alphas = tuple(rat(a) for a in alphas)
    if len(alphas) != m - 2:
        raise catalog.InvalidParametersError(f"expected {m - 2} alpha values, got {len(alphas)}")
    spec = catalog.spec_for("Cn", n, alphas=alphas)
    source = catalog.generate(spec)
    current = source
    stages = []
    composed = [[Fraction(1 if i == j else 0) for j in range(n)] for i in range(n)]
    for j in range(1, m - 1):
        # read the current coefficient of a_j from the bracket
        # [Y_1, Y_{n-2j-2}] = (-1)^{1+1} a_j Y_{n-1}
        coeff = current.bracket_of(1, n - 2 * j - 2).get(n - 1)
        value = coeff.constant_value() if coeff is not None else Fraction(0)
        P = [[Fraction(1 if a == b else 0) for b in range(n)] for a in range(n)]
        for i in range(1, n - 1 - 2 * j):
            P[i][i + 2 * j] = value / 2
        current = change_of_basis(current, P)
        stages.append(tuple(tuple(row) for row in P))
        composed = _mat_mul(P, composed)
    flip = [[Fraction(1 if a == b else 0) for b in range(n)] for a in range(n)]
    flip[n - 1][n - 1] = Fraction(-1)
    current = change_of_basis(current, flip)
    stages.append(tuple(tuple(row) for row in flip))
    composed = _mat_mul(flip, composed)
    return CnTransform(source, current, tuple(stages),
                       tuple(tuple(row) for row in composed))


def _mat_mul(a, b):
    n = len(a)
    return [[sum(a[i][k] * b[k][j] for k in range(n)) for j in range(n)] for i in range(n)]


# ---------------------------------------------------------------------------
# Fingerprints
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Fingerprint:
    """Deterministic invariant record; equal fingerprints are a necessary
    condition for isomorphism.

    Every component is basis-independent except ``rank_in_adapted_basis``,
    which is computed in the basis the algebra is handed over in and is
    meaningful only for catalog-adapted (or canonical homogeneous) bases.
    """

    dim: int
    type_vector: tuple[int, ...]
    lcs_dims: tuple[int, ...]
    derived_dims: tuple[int, ...]
    center_dim: int
    der_dim: int
    centralizer_g2_dim: int
    centralizer_g3_dim: int
    rank_in_adapted_basis: int

    def base_key(self):
        return (self.dim, self.type_vector, self.lcs_dims, self.derived_dims,
                self.center_dim, self.der_dim)

    def full_key(self):
        return self.base_key() + (self.centralizer_g2_dim, self.centralizer_g3_dim,
                                  self.rank_in_adapted_basis)


def _center_dim(table, n: int) -> int:
    # center = kernel of x -> ad(x), assembled as one stacked exact system
    from qflab.exact import nullspace

    unit = [[Fraction(1 if i == j else 0) for j in range(n)] for i in range(n)]
    stacked = []
    for j in range(n):
        for coord in range(n):
            row = {}
            for x in range(n):
                w = rational_bracket(table, n, unit[x], unit[j])
                if w[coord]:
                    row[x] = w[coord]
            if row:
                stacked.append(row)
    return len(nullspace(stacked, ncols=n)) if stacked else n


def _centralizer_dim(algebra: Algebra, vectors) -> int:
    n = algebra.dim
    table = algebra.rational_table()
    from qflab.exact import nullspace

    unit = [[Fraction(1 if i == j else 0) for j in range(n)] for i in range(n)]
    stacked = []
    for v in vectors:
        for coord in range(n):
            row = {}
            for x in range(n):
                w = rational_bracket(table, n, unit[x], list(v))
                if w[coord]:
                    row[x] = w[coord]
            if row:
                stacked.append(row)
    return len(nullspace(stacked, ncols=n)) if stacked else n


def _derived_dims(algebra: Algebra) -> tuple[int, ...]:
    n = algebra.dim
    table = algebra.rational_table()
    current = [[Fraction(1 if i == j else 0) for j in range(n)] for i in range(n)]
    dims = [n]
    while True:
        nxt = RowSpace(n)
        vs = [list(v) for v in current]
        for a in range(len(vs)):
            for b in range(a + 1, len(vs)):
                w = rational_bracket(table, n, vs[a], vs[b])
                if any(x != 0 for x in w):
                    nxt.add(w)
        dims.append(nxt.dim)
        if nxt.dim == 0 or nxt.dim == len(current):
            return tuple(dims)
        current = [list(row) for row in nxt.basis()]


def fingerprint(algebra: Algebra, assignment: Mapping[str, Fraction] | None = None) -> Fingerprint:
    concrete = algebra.specialize(assignment) if algebra.params else algebra
    filtration = lower_central_series(concrete)
    info = type_of(concrete)
    table = concrete.rational_table()
    ideals = filtration.ideals
    g2 = ideals[1] if len(ideals) > 1 else ()
    g3 = ideals[2] if len(ideals) > 2 else ()
    return Fingerprint(
        dim=concrete.dim,
        type_vector=info.type_vector.p,
        lcs_dims=filtration.dims,
        derived_dims=_derived_dims(concrete),
        center_dim=_center_dim(table, concrete.dim),
        der_dim=derivation_dim(concrete),
        centralizer_g2_dim=_centralizer_dim(concrete, g2),
        centralizer_g3_dim=_centralizer_dim(concrete, g3),
        rank_in_adapted_basis=diagonal_derivations(concrete)[1],
    )


# ---------------------------------------------------------------------------
# gr-class identification within the naturally graded catalog
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ClassifyResult:
    match: catalog.FamilySpec | None
    candidates: tuple[str, ...]  # canonical strings of near misses

    @property
    def classified(self) -> bool:
        return self.match is not None


_FINGERPRINT_CACHE: dict[str, Fingerprint] = {}


def catalog_fingerprint(spec: catalog.FamilySpec) -> Fingerprint:
    key = spec.canonical()
    if key not in _FINGERPRINT_CACHE:
        _FINGERPRINT_CACHE[key] = fingerprint(catalog.generate(spec))
    return _FINGERPRINT_CACHE[key]


def classify_gr(algebra: Algebra, assignment: Mapping[str, Fraction] | None = None) -> ClassifyResult:
    """Identify gr(algebra) among the naturally graded quasi-filiform catalog.

    Matches on the basis-independent fingerprint components first; when
    several catalog entries collide there, refines with the documented
    extensions (centralizer of g_2, then the diagonal-derivation dimension,
    both computed in canonical homogeneous bases on each side).
    """
    graded = gr(algebra, assignment)
    fp = fingerprint(graded.algebra)
    candidates = catalog.prop4_entries(graded.algebra.dim)
    base_hits = [s for s in candidates if catalog_fingerprint(s).base_key() == fp.base_key()]
    if len(base_hits) == 1:
        return ClassifyResult(base_hits[0], ())
    hits = [s for s in base_hits if catalog_fingerprint(s).full_key() == fp.full_key()]
    if len(hits) == 1:
        return ClassifyResult(hits[0], tuple(s.canonical() for s in base_hits))
    return ClassifyResult(None, tuple(s.canonical() for s in (hits or base_hits)))
