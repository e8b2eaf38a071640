from fractions import Fraction

import pytest

from qflab import catalog
from qflab.catalog import FamilySpec, InvalidParametersError, UnknownFamilyError, aij_table, spec_for
from qflab.exact import Poly
from qflab.liealg import jacobi_check


def gen(token, n, **kw):
    return catalog.generate(spec_for(token, n, **kw))


def table_of(algebra):
    return {pair: {k: str(c) for k, c in t.items()} for pair, t in algebra.table().items()}


def test_q6_exact_table():
    assert table_of(gen("Qn", 6)) == {
        (0, 1): {2: "1"}, (0, 2): {3: "1"}, (0, 3): {4: "1"},
        (1, 4): {5: "1"}, (2, 3): {5: "-1"},
    }


def test_e73_exact_table():
    assert table_of(gen("E73", 7)) == {
        (0, 1): {2: "1"}, (0, 2): {3: "1"}, (0, 3): {4: "1"}, (0, 4): {5: "1"},
        (0, 6): {4: "1"}, (1, 2): {6: "1"}, (1, 3): {4: "1"}, (1, 4): {5: "1"},
        (2, 6): {5: "-1"},
    }


def test_tn4_small_table():
    assert table_of(gen("Tn4", 7)) == {
        (0, 1): {2: "1"}, (0, 2): {3: "1"},
        (0, 4): {5: "1"}, (0, 6): {4: "1"},
        (1, 2): {6: "1"}, (1, 3): {4: "1"}, (2, 3): {5: "1"},
    }


def test_invalid_ranges_rejected():
    with pytest.raises(InvalidParametersError):
        gen("Lnr", 9, r=4)  # r must be odd
    with pytest.raises(InvalidParametersError):
        gen("Qn", 7)  # n must be even
    with pytest.raises(InvalidParametersError):
        gen("Ank", 9, k=8)  # k <= n-3
    with pytest.raises(InvalidParametersError):
        gen("Gnrk", 9, r=4, k=2)  # r pinned to n-4
    with pytest.raises(InvalidParametersError):
        gen("Lnr", 9)  # r required
    with pytest.raises(UnknownFamilyError):
        catalog.family_def("Znrk")


def test_alpha_count_validation():
    with pytest.raises(InvalidParametersError):
        gen("Ank", 9, k=2, alphas=[1, 2])  # expects 3 values
    assert gen("Ank", 9, k=2, alphas=[1, 2, 3]).params == ()


def test_aij_seed_values():
    t = aij_table(7, 4)
    a1 = Poly.variable(t.params, "a1")
    a2 = Poly.variable(t.params, "a2")
    a3 = Poly.variable(t.params, "a3")
    for i in range(1, 4):
        assert t.get(i, i) == Poly.zero(t.params)
        assert t.get(i, i + 1) == Poly.variable(t.params, f"a{i}")
    # unrolled by hand through a_{i,j+1} = a_{i,j} - a_{i+1,j}:
    assert t.get(1, 3) == a1
    assert t.get(1, 4) == a1 - a2
    assert t.get(2, 4) == a2
    assert t.get(1, 5) == a1 - 2 * a2 + 0 * a3
    assert t.get(2, 5) == a2 - a3
    assert t.get(1, 6) == (a1 - 2 * a2) - (a2 - a3)  # = a1 - 3 a2 + a3
    # zero outside the declared range
    assert t.get(3, 5) == Poly.zero(t.params)


def test_aij_recurrence_on_imposed_shells():
    t = aij_table(9, 5)
    for (i, j) in list(t.values):
        if i + j <= t.range_bound - 1:
            assert t.get(i, j) == t.get(i + 1, j) + t.get(i, j + 1)


def test_aij_antisymmetric_accessor():
    t = aij_table(6, 3)
    assert t.get(3, 1) == -t.get(1, 3)


def test_parametric_alpha_line_consistency():
    # the superdiagonal of the a-table must reproduce the alpha brackets
    # [Y_i, Y_{i+1}] = a_i Y_{2i+k}
    a = gen("Ank", 9, k=3)
    assert a.bracket_of(1, 2) == {5: Poly.variable(("a1", "a2"), "a1")}
    assert a.bracket_of(2, 3) == {7: Poly.variable(("a1", "a2"), "a2")}


def test_lnr_constraints_empty():
    for n, r in ((7, 3), (9, 5), (12, 3)):
        cs = catalog.extract_constraints(spec_for("Lnr", n, r=r))
        assert cs.generators == ()


def test_constraints_quadratic_bound():
    for token, kw in (("Ank", dict(n=11, k=2)), ("Cnrk", dict(n=10, r=3, k=2)),
                      ("Hnrk", dict(n=10, k=2, r=7))):
        cs = catalog.extract_constraints(spec_for(token, **kw))
        assert all(g.total_degree() <= 2 for g in cs.generators)


def test_a92_constraint_and_solution():
    # single generator computed by hand:
    #   -2 a1 a3 + 3 a2^2 - a2 a3   (from J(Y1,Y2,Y3))
    cs = catalog.extract_constraints(spec_for("Ank", 9, k=2))
    assert len(cs.generators) == 1
    assert str(cs.generators[0]) == "2*a1*a3 - 3*a2^2 + a2*a3"
    assert cs.is_satisfied_by([1, 1, 1])
    assert not cs.is_satisfied_by([1, 1, 2])
    # substituting a solution point makes every Jacobi residual vanish
    a = gen("Ank", 9, k=2, alphas=[1, 1, 1])
    assert jacobi_check(a).ok


def test_alpha_zero_valid_on_sound_at_zero_domain():
    # the all-zero assignment is a Lie point wherever no generator carries a
    # constant term; that covers the direct sums and deformations without a
    # long tail of extension brackets
    for token, kw in (("Ank", dict(n=12, k=2)), ("Bnk", dict(n=10, k=3)),
                      ("AsumC", dict(n=9, k=2)), ("BsumC", dict(n=9, k=2)),
                      ("Cnrk", dict(n=9, r=3, k=3)), ("Enrk", dict(n=9, r=3, k=2)),
                      ("Hnrk", dict(n=10, k=3, r=7)), ("Gnrk", dict(n=9, r=5, k=3))):
        cs = catalog.extract_constraints(spec_for(token, **kw))
        assert cs.vanishes_at_zero(), (token, kw)
        zero = [Fraction(0)] * catalog.alpha_count(spec_for(token, **kw))
        assert jacobi_check(catalog.generate(spec_for(token, **kw).with_alphas(zero))).ok


def test_alpha_zero_exceptions_are_real_and_solvable():
    # documented exception: a long extension tail (Cnrk/Enrk) or the k = 2
    # conditional bracket (Gnrk) forces relations with a constant term, so
    # alpha = 0 is not a Lie point although nonzero solutions exist
    for token, kw in (("Cnrk", dict(n=10, r=3, k=2)), ("Gnrk", dict(n=9, r=5, k=2))):
        spec = spec_for(token, **kw)
        cs = catalog.extract_constraints(spec)
        assert not cs.vanishes_at_zero()
        alphas = catalog.sample_alphas(spec)
        assert alphas is not None and any(alphas)
        assert jacobi_check(catalog.generate(spec.with_alphas(alphas))).ok


def test_g_misprint_variant_breaks_jacobi_by_constant():
    # the known-bad deep coefficient line (n-2-i)/2 leaves a constant
    # Jacobi residual, detected symbolically
    spec = spec_for("Gnrk", 9, r=5, k=3)
    good = catalog.extract_constraints(spec)
    assert good.vanishes_at_zero()
    bad = catalog.extract_constraints(spec, misprint=True)
    assert bad.has_constant_generator()


def test_dnrk_soundness_boundary():
    # inside the printed k range only the maximal k closes as a Lie algebra
    assert catalog.is_sound(spec_for("Dnrk", 9, r=3, k=2))
    assert not catalog.is_sound(spec_for("Dnrk", 9, r=3, k=1))
    assert not catalog.is_sound(spec_for("Dnrk", 9, r=5, k=1))
    assert jacobi_check(gen("Dnrk", 9, r=3, k=2)).ok
    assert not jacobi_check(gen("Dnrk", 9, r=3, k=1)).ok


def test_fnrk_unrealizable():
    # every printed tuple violates the Jacobi identity; the support admits no
    # Lie algebra with a nonzero extension at all (see the family notes)
    specs = list(catalog.valid_tuples("Fnrk", 13))
    assert specs  # the printed range is nonempty ...
    assert list(catalog.sound_tuples("Fnrk", 13)) == []  # ... but nothing is sound
    for spec in specs:
        assert not jacobi_check(catalog.generate(spec)).ok


def test_fnrk_obstruction_certificate():
    # generic coefficients on the F support at (n,r,k) = (9,3,1): Jacobi
    # forces e1 = e2, d alternating, and then d*e = 0, so either the deep
    # pairs or the extension must vanish
    params = ("c1", "d1", "d2", "d3", "e1", "e2")
    v = lambda s: Poly.variable(params, s)
    from qflab.liealg import Algebra

    table = {
        (0, 1): {2: 1}, (0, 2): {3: 1}, (0, 3): {4: 1}, (0, 4): {5: 1}, (0, 5): {6: 1},
        (1, 2): {8: v("c1")},
        (1, 6): {7: v("d1")}, (2, 5): {7: v("d2")}, (3, 4): {7: v("d3")},
        (1, 8): {5: v("e1")}, (2, 8): {6: v("e2")},
    }
    report = jacobi_check(Algebra(9, table, params=params))
    gens = {str(p) for comp in report.residuals.values() for p in comp.values()}
    assert gens == {"-d1*e2 + d2*e1", "-e1 + e2", "d1 + d2", "d2 + d3"}


def test_qarr_parity_soundness():
    assert catalog.is_sound(spec_for("QarrCa", 9, l=3))
    assert not catalog.is_sound(spec_for("QarrCa", 9, l=2))
    assert not jacobi_check(gen("QarrCa", 9, l=2)).ok
    assert jacobi_check(gen("QarrCa", 9, l=5)).ok
    assert not jacobi_check(gen("QarrCb", 9, l=4)).ok


def test_canonical_strings():
    assert spec_for("Lnr", 9, r=5).canonical() == "Lnr(n=9,r=5)"
    s = spec_for("Ank", 8, k=3, alphas=[1, 0])
    assert s.canonical() == "Ank(n=8,k=3,alpha=[1,0])"
    assert spec_for("Gnrk", 9, r=5, k=2).canonical() == "Gnrk(n=9,r=5,k=2)"


def test_prop4_entries_inventory():
    at9 = {s.canonical() for s in catalog.prop4_entries(9)}
    assert at9 == {
        "LsumC(n=9)", "QsumC(n=9)", "Lnr(n=9,r=3)", "Lnr(n=9,r=5)", "Lnr(n=9,r=7)",
        "Qnr(n=9,r=3)", "Qnr(n=9,r=5)", "Tn4(n=9)",
        "E951(n=9)", "E952(n=9)", "E953(n=9)",
    }
    at7 = {s.canonical() for s in catalog.prop4_entries(7)}
    assert "E73(n=7)" in at7 and "Tn4(n=7)" in at7
    assert all(s.family != "Tn3" for s in catalog.prop4_entries(7))


def test_cn_is_lie_for_random_alphas():
    import random

    rng = random.Random(9)
    for n in (6, 8, 10):
        alphas = [Fraction(rng.randint(-6, 6), rng.randint(1, 6)) for _ in range(n // 2 - 2)]
        assert jacobi_check(gen("Cn", n, alphas=alphas)).ok


def test_generate_declared_class():
    for token, kw, filiform in (("Ln", dict(n=9), True), ("Ank", dict(n=9, k=4), True),
                                ("Qn", dict(n=10), True), ("Bnk", dict(n=10, k=5), True)):
        spec = spec_for(token, **kw)
        alphas = catalog.sample_alphas(spec)
        concrete = spec.with_alphas(alphas) if alphas else spec
        from qflab.gradation import type_of

        info = type_of(catalog.generate(concrete))
        assert info.filiform == filiform
    for token, kw, r in (("Lnr", dict(n=9, r=5), 5), ("Qnr", dict(n=9, r=3), 3),
                         ("Tn4", dict(n=9), 5), ("Tn3", dict(n=8), 5),
                         ("LsumC", dict(n=8), 1), ("QsumC", dict(n=9), 1)):
        from qflab.gradation import type_of

        info = type_of(catalog.generate(spec_for(token, **kw)))
        assert info.quasifiliform and info.r_index == r


def test_misprint_flag_rejected_without_variant():
    with pytest.raises(InvalidParametersError):
        catalog.generate(spec_for("Lnr", 9, r=5), misprint=True)


def test_residuals_evaluate_to_zero_at_solution_point():
    # evaluating every symbolic Jacobi residual of A_9^2 at a solution of the
    # extracted constraint set gives exactly zero
    report = jacobi_check(gen("Ank", 9, k=2))
    assignment = {"a1": Fraction(1), "a2": Fraction(1), "a3": Fraction(1)}
    residuals = [p for comp in report.residuals.values() for p in comp.values()]
    assert residuals  # symbolically nonzero ...
    assert all(p.evaluate(assignment) == 0 for p in residuals)  # ... zero at the point


def test_token_partition_consistency():
    parametric = {"Ank", "Bnk", "Cn", "AsumC", "BsumC", "AarrC", "BarrCa",
                  "BarrCc", "Cnrk", "Enrk", "Gnrk", "Hnrk"}
    for token in catalog.all_family_tokens():
        spec = next(iter(catalog.valid_tuples(token, 13)))
        count = catalog.alpha_count(spec)
        assert (count > 0) == (token in parametric), token
        assert (token in catalog.NONPARAMETRIC_TOKENS) == (token not in parametric)
