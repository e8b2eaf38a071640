import random
from fractions import Fraction

import pytest

from qflab import catalog
from qflab.catalog import spec_for
from qflab.isomorphy import (
    catalog_fingerprint,
    classify_gr,
    cn_to_qn_transform,
    fingerprint,
)
from qflab.liealg import change_of_basis, jacobi_check
from oracles import dense_derivation_dim, naive_lcs_dims


def gen(token, n, **kw):
    return catalog.generate(spec_for(token, n, **kw))


def test_cn_alpha_zero_needs_only_the_sign_flip():
    t = cn_to_qn_transform(8, [0, 0])
    # all elimination stages are the identity, the sign normalization remains
    identity = tuple(tuple(Fraction(1 if i == j else 0) for j in range(8)) for i in range(8))
    assert all(stage == identity for stage in t.stages[:-1])
    assert t.matches_qn()


def test_cn_transform_matches_qn_exactly():
    rng = random.Random(41)
    for n in (6, 8, 10):
        for _ in range(3):
            alphas = [Fraction(rng.randint(-8, 8), rng.randint(1, 8)) for _ in range(n // 2 - 2)]
            t = cn_to_qn_transform(n, alphas)
            assert t.matches_qn(), (n, alphas)
            assert jacobi_check(t.source).ok


def test_cn_transform_stage_count_and_composition():
    t = cn_to_qn_transform(10, [1, 2, 3])
    assert len(t.stages) == 4  # three eliminations plus the sign flip
    # the composed matrix reproduces the chained change of basis
    assert change_of_basis(t.source, t.composed) == t.image


def test_cn_transform_rejects_bad_input():
    with pytest.raises(catalog.InvalidParametersError):
        cn_to_qn_transform(7, [1])
    with pytest.raises(catalog.InvalidParametersError):
        cn_to_qn_transform(8, [1])  # needs 2 values


def test_fingerprint_base_invariant_under_basis_change():
    from test_liealg import random_unimodular

    rng = random.Random(4)
    a = gen("Qnr", 9, r=5)
    fp = fingerprint(a)
    for _ in range(4):
        moved = change_of_basis(a, random_unimodular(9, rng))
        assert fingerprint(moved).base_key() == fp.base_key()


def test_fingerprint_separates_l73_q73():
    fa = fingerprint(gen("Lnr", 7, r=3))
    fb = fingerprint(gen("Qnr", 7, r=3))
    assert fa.base_key() != fb.base_key()
    # cross-checked against the independent brute-force oracles
    for algebra, fp in ((gen("Lnr", 7, r=3), fa), (gen("Qnr", 7, r=3), fb)):
        table = {pair: {k: c.constant_value() for k, c in t.items()}
                 for pair, t in algebra.table().items()}
        assert list(fp.lcs_dims) == naive_lcs_dims(table, 7)
        assert fp.der_dim == dense_derivation_dim(table, 7)


def test_fingerprint_cn_matches_qn():
    fc = fingerprint(gen("Cn", 6, alphas=[Fraction(3, 2)]))
    fq = fingerprint(gen("Qn", 6))
    assert fc.base_key() == fq.base_key()


def test_e_family_pairwise_distinct():
    keys = [catalog_fingerprint(spec_for(t, 9)).full_key() for t in ("E951", "E952", "E953")]
    assert len(set(keys)) == 3


def test_classify_examples():
    res = classify_gr(gen("Dnrk", 9, r=3, k=2))
    assert res.match == spec_for("Lnr", 9, r=3)
    res = classify_gr(gen("QarrCc", 9))
    assert res.match == spec_for("QsumC", 9)
    res = classify_gr(gen("E953", 9))
    assert res.match == spec_for("E953", 9)


def test_classify_fixes_prop4_entries():
    for n in (7, 8, 9):
        for spec in catalog.prop4_entries(n):
            res = classify_gr(catalog.generate(spec))
            assert res.match == spec, (spec.canonical(), res)


def test_classify_survives_basis_change():
    from test_liealg import random_unimodular

    rng = random.Random(8)
    a = gen("Cnrk", 9, r=5, k=3, alphas=[Fraction(1), Fraction(1)])
    moved = change_of_basis(a, random_unimodular(9, rng))
    res = classify_gr(moved)
    assert res.match == spec_for("Lnr", 9, r=5)


def test_classify_unclassified_for_filiform():
    # a filiform algebra matches nothing in the quasi-filiform catalog
    res = classify_gr(gen("Ln", 8))
    assert not res.classified


def test_prop4_separation_gate_to_17():
    # the fingerprint must separate the naturally graded catalog at every
    # fixed dimension; this is the gate that makes fingerprint matching a
    # sufficient classifier on the catalog
    for n in range(4, 18):
        seen = {}
        for spec in catalog.prop4_entries(n):
            key = catalog_fingerprint(spec).full_key()
            assert key not in seen, (spec.canonical(), seen[key])
            seen[key] = spec.canonical()
