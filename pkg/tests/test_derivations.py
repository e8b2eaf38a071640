import random
from fractions import Fraction

import pytest

from qflab import catalog
from qflab.derivations import (
    admits_diagonal,
    commutator,
    derivation_dim,
    derivation_space,
    diagonal_derivations,
    is_derivation,
    rank_in_basis,
    verify_claimed_weights,
)
from qflab.exact import RowSpace
from qflab.liealg import abelian, change_of_basis
from oracles import dense_derivation_dim


def gen(token, n, **kw):
    return catalog.generate(catalog.spec_for(token, n, **kw))


def rational_table(a):
    return {pair: {k: c.constant_value() for k, c in t.items()}
            for pair, t in a.table().items()}


def test_abelian_derivations():
    basis, dim = derivation_space(abelian(4))
    assert dim == 16
    _, diag_dim = diagonal_derivations(abelian(5))
    assert diag_dim == 5


def test_one_dimensional_degenerate():
    assert derivation_dim(abelian(1)) == 1
    assert rank_in_basis(abelian(1)) == 1


def test_der_l4_matches_dense_oracle():
    a = gen("Ln", 4)
    assert derivation_dim(a) == dense_derivation_dim(rational_table(a), 4)


def test_der_small_catalog_matches_oracle():
    for token, kw in (("Qn", dict(n=6)), ("Tn3", dict(n=6)), ("Lnr", dict(n=5, r=3)),
                      ("LsumC", dict(n=5)), ("LarrC", dict(n=6, l=2))):
        a = catalog.generate(catalog.spec_for(token, **kw))
        assert derivation_dim(a) == dense_derivation_dim(rational_table(a), a.dim)


def test_every_basis_element_satisfies_leibniz():
    a = gen("Qnr", 9, r=3)
    basis, dim = derivation_space(a)
    assert dim == derivation_dim(a)
    for d in basis:
        assert is_derivation(a, d)


def test_derivation_space_closed_under_commutator():
    a = gen("Tn3", 6)
    basis, _ = derivation_space(a)
    for i in range(len(basis)):
        for j in range(i + 1, len(basis)):
            assert is_derivation(a, commutator(basis[i], basis[j]))


def test_diagonal_dim_at_most_der_dim():
    for token, kw in (("Lnr", dict(n=7, r=3)), ("E73", dict(n=7)), ("QarrCc", dict(n=7))):
        a = catalog.generate(catalog.spec_for(token, **kw))
        assert diagonal_derivations(a)[1] <= derivation_dim(a)


def test_ln_weight_space_is_expected_span():
    n = 7
    a = gen("Ln", n)
    basis, dim = diagonal_derivations(a)
    assert dim == 2
    # claimed span: (1, 0, 1, 2, ..., n-2) from l0 and (0, 1, 1, ..., 1) from l1
    w0 = [Fraction(1), Fraction(0)] + [Fraction(i - 1) for i in range(2, n)]
    w1 = [Fraction(0)] + [Fraction(1)] * (n - 1)
    space = RowSpace(n, basis)
    assert space.contains(w0) and space.contains(w1)
    claimed = RowSpace(n, [w0, w1])
    assert all(claimed.contains(list(v)) for v in basis)


def test_e953_contains_printed_diagonal():
    a = gen("E953", 9)
    w = [Fraction(c) for c in (1, 1, 2, 3, 4, 5, 6, 7, 5)]
    assert admits_diagonal(a, w)
    basis, dim = diagonal_derivations(a)
    assert dim == 1
    assert RowSpace(9, basis).contains(w)


def test_rank_examples():
    assert rank_in_basis(gen("LsumC", 9)) == 3
    assert rank_in_basis(gen("E73", 7)) == 1
    # the Cn basis is not adapted: the diagonal family there is only
    # one-dimensional, the true rank 2 is witnessed through the Qn image
    from qflab.isomorphy import cn_to_qn_transform

    t = cn_to_qn_transform(8, [Fraction(1, 2), Fraction(3)])
    assert rank_in_basis(t.source) == 1
    assert rank_in_basis(t.image) == 2 == rank_in_basis(gen("Qn", 8))


def test_rank_invariant_under_monomial_basis_change():
    rng = random.Random(23)
    a = gen("Qnr", 9, r=5)
    base_rank = rank_in_basis(a)
    for _ in range(6):
        perm = list(range(9))
        rng.shuffle(perm)
        p = [[Fraction(0)] * 9 for _ in range(9)]
        for i, target in enumerate(perm):
            p[i][target] = Fraction(rng.choice([1, 2, 3, -1, 5]))
        moved = change_of_basis(a, p)
        assert rank_in_basis(moved) == base_rank


def test_weight_audit_passes_normalized():
    for token, kw in (("Lnr", dict(n=9, r=5)), ("Cnrk", dict(n=9, r=5, k=3)),
                      ("QarrCb", dict(n=9, l=3)), ("Gnrk", dict(n=9, r=5, k=2)),
                      ("Ln", dict(n=8)), ("Bnk", dict(n=8, k=3))):
        audit = verify_claimed_weights(catalog.spec_for(token, **kw))
        assert audit.ok, audit.lines()


def test_weight_audit_detects_bsumc_exponent():
    spec = catalog.spec_for("BsumC", 9, k=2)
    assert verify_claimed_weights(spec).ok
    bad = verify_claimed_weights(spec, misprint=True)
    assert not bad.ok
    # every violated bracket is a superdiagonal one landing a step short
    assert all(str(delta) == "l0" for _, delta in bad.violations)


def test_weight_audit_detects_shift_variant():
    for token in ("LarrC", "AarrC"):
        spec = catalog.spec_for(token, 9, l=3, **({"k": 2} if token == "AarrC" else {}))
        assert verify_claimed_weights(spec).ok
        assert not verify_claimed_weights(spec, misprint=True).ok


def test_weight_audit_detects_diagonal_misprints():
    for token, kw in (("QarrCb", dict(n=9, l=3)), ("QarrCc", dict(n=9))):
        spec = catalog.spec_for(token, **kw)
        assert verify_claimed_weights(spec).ok
        assert not verify_claimed_weights(spec, misprint=True).ok


def test_weight_audit_rejects_unknown_misprint():
    with pytest.raises(catalog.InvalidParametersError):
        verify_claimed_weights(catalog.spec_for("Lnr", 9, r=5), misprint=True)


def test_weights_unknown_for_cn():
    with pytest.raises(catalog.UnknownFamilyError):
        catalog.claimed_weights(catalog.spec_for("Cn", 8))
