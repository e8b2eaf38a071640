#!/usr/bin/env python3
"""Reproduce the computational findings about the circulating family tables.

Prints, with exact certificates:
  1. the weight-audit failures of the known-bad variants (shifted extension
     target, off-by-one alpha exponent, two bad diagonals);
  2. the constant Jacobi residual of the bad deep-coefficient variant of the
     Gnrk family;
  3. the soundness boundary of Dnrk (only r = 3 with maximal k survives);
  4. the unrealizability of Fnrk (generic-coefficient obstruction);
  5. the rank-partition discrepancy for BarrCc.
"""

from fractions import Fraction

from qflab import catalog
from qflab.catalog import spec_for
from qflab.derivations import rank_in_basis, verify_claimed_weights
from qflab.exact import Poly
from qflab.liealg import Algebra, jacobi_check


def section(title):
    print()
    print("=" * 72)
    print(title)
    print("=" * 72)


def main():
    section("1. misprinted variants caught by the weight audit")
    for spec, flag in ((spec_for("LarrC", 9, l=3), "shifted extension target"),
                       (spec_for("BsumC", 9, k=2), "alpha exponent off by one"),
                       (spec_for("QarrCb", 9, l=3), "stray symbol in the diagonal"),
                       (spec_for("QarrCc", 9), "product instead of a sum in the diagonal")):
        audit = verify_claimed_weights(spec, misprint=True)
        print(f"{spec.canonical():24s} [{flag}] -> {len(audit.violations)} violated brackets")
        for line in audit.lines()[:2]:
            print("    " + line)

    section("2. the bad deep-coefficient line of Gnrk")
    bad = catalog.extract_constraints(spec_for("Gnrk", 9, r=5, k=3), misprint=True)
    consts = [g for g in bad.generators if g.is_constant()]
    print("constant Jacobi generators of the variant:", [str(g) for g in consts])
    good = catalog.extract_constraints(spec_for("Gnrk", 9, r=5, k=3))
    print("generators of the corrected table:", [str(g) for g in good.generators] or "(none)")

    section("3. Dnrk soundness boundary")
    for n in range(7, 14):
        rows = []
        for spec in catalog.valid_tuples("Dnrk", n):
            if spec.n != n:
                continue
            ok = jacobi_check(catalog.generate(spec)).ok
            rows.append(f"r={spec.r},k={spec.k}:{'ok' if ok else 'X'}")
        print(f"n={n}: " + "  ".join(rows))

    section("4. Fnrk cannot close as a Lie algebra")
    params = ("c1", "d1", "d2", "d3", "e1", "e2")
    v = lambda s: Poly.variable(params, s)
    support = Algebra(9, {
        (0, 1): {2: 1}, (0, 2): {3: 1}, (0, 3): {4: 1}, (0, 4): {5: 1}, (0, 5): {6: 1},
        (1, 2): {8: v("c1")},
        (1, 6): {7: v("d1")}, (2, 5): {7: v("d2")}, (3, 4): {7: v("d3")},
        (1, 8): {5: v("e1")}, (2, 8): {6: v("e2")},
    }, params=params)
    gens = sorted({str(p) for comp in jacobi_check(support).residuals.values()
                   for p in comp.values()})
    print("generic-support Jacobi ideal at (n,r,k)=(9,3,1):", gens)
    print("=> e1 = e2, d alternating, then d*e = 0: extension and deep pairs")
    print("   cannot coexist; every printed tuple fails jacobi_check:")
    fails = sum(1 for s in catalog.valid_tuples("Fnrk", 13)
                if not jacobi_check(catalog.generate(s)).ok)
    total = len(list(catalog.valid_tuples("Fnrk", 13)))
    print(f"   {fails}/{total} printed tuples up to n=13 fail (all of them)")

    section("5. the BarrCc rank discrepancy")
    for n, k in ((7, 2), (9, 3), (11, 4)):
        spec = spec_for("BarrCc", n, k=k)
        alphas = catalog.sample_alphas(spec)
        algebra = catalog.generate(spec.with_alphas(alphas))
        print(f"{spec.canonical():20s} alpha={list(map(str, alphas))} "
              f"rank_in_basis={rank_in_basis(algebra)} (published partition: 2)")
    print("any nonzero alpha bracket pins w1 = k*w0; the diagonal family is")
    print("one-dimensional with pairwise distinct eigenvalues, so the torus is")
    print("exactly that family and the true rank is 1")


if __name__ == "__main__":
    main()
