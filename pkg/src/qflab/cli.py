"""Command-line front end and the JSON algebra document format.

Exit codes: 0 on success / verified, 1 on a verification failure, 2 on a
usage error.  All numeric output is exact (fraction strings); documents are
UTF-8 JSON with sorted keys so identical invocations are byte-identical.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction

from qflab import catalog
from qflab.derivations import derivation_space, rank_in_basis, verify_claimed_weights
from qflab.exact import QflabError, parse_poly, rat, rat_str
from qflab.gradation import NonNilpotentError, gr, lower_central_series, type_of
from qflab.isomorphy import classify_gr, cn_to_qn_transform
from qflab.liealg import Algebra, jacobi_check


class UsageError(QflabError):
    pass


# ---------------------------------------------------------------------------
# Algebra documents
# ---------------------------------------------------------------------------


def algebra_to_doc(algebra: Algebra, family: str | None = None) -> dict:
    brackets = []
    for i, j, targets in algebra.brackets():
        terms = [{"k": k, "coeff": str(poly)} for k, poly in sorted(targets.items())]
        brackets.append({"i": i, "j": j, "terms": terms})
    doc = {"dim": algebra.dim, "params": list(algebra.params), "brackets": brackets}
    if family is not None:
        doc["metadata"] = {"family": family}
    return doc


def doc_to_algebra(doc: dict) -> Algebra:
    try:
        dim = int(doc["dim"])
        params = tuple(str(p) for p in doc.get("params", []))
        table = {}
        for entry in doc.get("brackets", []):
            i, j = int(entry["i"]), int(entry["j"])
            targets = {}
            for term in entry["terms"]:
                targets[int(term["k"])] = parse_poly(str(term["coeff"]), params)
            table[(i, j)] = targets
    except (KeyError, TypeError, ValueError) as exc:
        raise UsageError(f"malformed algebra document: {exc}") from exc
    return Algebra(dim, table, params=params)


def dump_doc(doc: dict) -> str:
    return json.dumps(doc, sort_keys=True, indent=2) + "\n"


def _write_output(text: str, path: str | None) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8") as handle:
            handle.write(text)


def _load_algebra(path: str) -> Algebra:
    try:
        with open(path, "r", encoding="utf-8") as handle:
            doc = json.load(handle)
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise UsageError(f"{path} is not valid JSON: {exc}") from exc
    return doc_to_algebra(doc)


def _require_concrete(algebra: Algebra, what: str) -> Algebra:
    if algebra.params:
        raise UsageError(
            f"{what} needs concrete structure constants; regenerate the file "
            f"with --alpha to substitute values for {', '.join(algebra.params)}"
        )
    return algebra


# ---------------------------------------------------------------------------
# Argument handling
# ---------------------------------------------------------------------------


def _parse_alphas(text: str) -> tuple[Fraction, ...]:
    try:
        return tuple(rat(chunk) for chunk in text.split(",") if chunk.strip() != "")
    except (ValueError, ZeroDivisionError, TypeError) as exc:
        raise UsageError(f"cannot parse alpha list {text!r}: {exc}") from exc


def _spec_from_args(args) -> catalog.FamilySpec:
    alpha = getattr(args, "alpha", None)
    alphas = _parse_alphas(alpha) if alpha is not None else None
    spec = catalog.spec_for(args.family, args.n, r=args.r, k=args.k, l=args.l, alphas=alphas)
    catalog.validate_spec(spec)
    return spec


def _add_family_arguments(parser: argparse.ArgumentParser, with_alpha: bool = True) -> None:
    parser.add_argument("family", choices=sorted(catalog.all_family_tokens()),
                        help="family token")
    parser.add_argument("--n", type=int, required=True, help="algebra dimension")
    parser.add_argument("--r", type=int, default=None)
    parser.add_argument("--k", type=int, default=None)
    parser.add_argument("--l", type=int, default=None)
    if with_alpha:
        parser.add_argument("--alpha", default=None,
                            help="comma separated rationals, e.g. 1,1/2")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qflab",
        description="Exact computations with filiform and quasi-filiform "
                    "nilpotent Lie algebras.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="generate a catalog algebra as a JSON document")
    _add_family_arguments(p)
    p.add_argument("-o", "--output", default=None, help="output file (default stdout)")

    p = sub.add_parser("jacobi", help="verify the Jacobi identity of a document")
    p.add_argument("file")

    p = sub.add_parser("series", help="lower central series, type and predicates")
    p.add_argument("file")

    p = sub.add_parser("gr", help="associated graded algebra of a document")
    p.add_argument("file")
    p.add_argument("-o", "--output", default=None)

    p = sub.add_parser("derivations", help="basis of the derivation algebra")
    p.add_argument("file")

    p = sub.add_parser("rank", help="diagonal-derivation dimension in the given basis")
    p.add_argument("file")

    p = sub.add_parser("classify", help="identify gr(A) within the naturally graded catalog")
    p.add_argument("file")

    p = sub.add_parser("constraints", help="Jacobi constraints of a parametric family")
    _add_family_arguments(p, with_alpha=False)

    p = sub.add_parser("iso-cn", help="transform Cn(alpha) onto Qn and print the stages")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--alpha", default="", help="comma separated rationals")

    p = sub.add_parser("sweep", help="run the verification matrix over the catalog")
    p.add_argument("--families", default="all", help="comma separated tokens or 'all'")
    p.add_argument("--n-max", type=int, default=11)

    p = sub.add_parser("weights", help="audit the claimed diagonal of a family")
    _add_family_arguments(p, with_alpha=False)
    p.add_argument("--misprint", action="store_true",
                   help="audit the documented known-bad variant instead")

    return parser


# ---------------------------------------------------------------------------
# Subcommand implementations
# ---------------------------------------------------------------------------


def _cmd_gen(args) -> int:
    spec = _spec_from_args(args)
    algebra = catalog.generate(spec)
    _write_output(dump_doc(algebra_to_doc(algebra, family=spec.canonical())), args.output)
    return 0


def _cmd_jacobi(args) -> int:
    report = jacobi_check(_load_algebra(args.file))
    if report.ok:
        print("JACOBI OK")
        return 0
    print(f"JACOBI FAIL ({len(report)} bad triples)")
    for line in report.lines():
        print("  " + line)
    return 1


def _cmd_series(args) -> int:
    algebra = _require_concrete(_load_algebra(args.file), "series")
    try:
        filtration = lower_central_series(algebra)
    except NonNilpotentError as exc:
        print(f"NOT NILPOTENT (series stabilizes at dimension {exc.stabilized_dim})")
        return 1
    info = type_of(algebra)
    print("dims " + " ".join(str(d) for d in filtration.dims))
    print(f"type {info.type_vector}")
    print(f"nilindex {info.nilindex}")
    print(f"filiform {'yes' if info.filiform else 'no'}")
    print(f"quasifiliform {'yes' if info.quasifiliform else 'no'}"
          + (f" (r={info.r_index})" if info.quasifiliform else ""))
    return 0


def _cmd_gr(args) -> int:
    algebra = _require_concrete(_load_algebra(args.file), "gr")
    graded = gr(algebra)
    doc = algebra_to_doc(graded.algebra)
    doc["metadata"] = {"weights": list(graded.weights)}
    _write_output(dump_doc(doc), args.output)
    return 0


def _cmd_derivations(args) -> int:
    algebra = _require_concrete(_load_algebra(args.file), "derivations")
    basis, dim = derivation_space(algebra)
    print(f"dimension {dim}")
    for idx, matrix in enumerate(basis):
        print(f"D{idx}:")
        for row in matrix:
            print("  " + " ".join(rat_str(x) for x in row))
    return 0


def _cmd_rank(args) -> int:
    algebra = _require_concrete(_load_algebra(args.file), "rank")
    print(rank_in_basis(algebra))
    return 0


def _cmd_classify(args) -> int:
    algebra = _require_concrete(_load_algebra(args.file), "classify")
    result = classify_gr(algebra)
    if result.classified:
        print(result.match.canonical())
        return 0
    print("UNCLASSIFIED" + (f" (near: {', '.join(result.candidates)})" if result.candidates else ""))
    return 1


def _cmd_constraints(args) -> int:
    spec = _spec_from_args(args)
    constraints = catalog.extract_constraints(spec)
    if not constraints.generators:
        print("(none)")
        return 0
    for g in constraints.generators:
        print(str(g))
    return 0


def _cmd_iso_cn(args) -> int:
    result = cn_to_qn_transform(args.n, _parse_alphas(args.alpha))
    for idx, stage in enumerate(result.stages):
        print(f"stage {idx}:")
        for row in stage:
            print("  " + " ".join(rat_str(x) for x in row))
    equal = result.matches_qn()
    print(f"EQUAL Q_{args.n}" if equal else f"DIFFERS FROM Q_{args.n}")
    return 0 if equal else 1


def _cmd_weights(args) -> int:
    spec = _spec_from_args(args)
    audit = verify_claimed_weights(spec, misprint=args.misprint)
    if audit.ok:
        print("WEIGHTS OK")
        return 0
    print(f"WEIGHTS FAIL ({len(audit.violations)} brackets)")
    for line in audit.lines():
        print("  " + line)
    return 1


def _cmd_sweep(args) -> int:
    n_cap = os.environ.get("QFLAB_NMAX")
    n_max = args.n_max if n_cap is None else min(args.n_max, int(n_cap))
    if args.families == "all":
        tokens = list(catalog.all_family_tokens())
    else:
        tokens = [t.strip() for t in args.families.split(",") if t.strip()]
        for t in tokens:
            catalog.family_def(t)  # raises UnknownFamilyError on bad tokens
    failures = 0
    print(f"sweep n_max={n_max}")
    print(f"{'spec':40s} {'jacobi':8s} {'rank':12s} {'weights':8s} {'gr-class':24s}")
    for token in tokens:
        specs = catalog.sample_specs(token, n_max)
        for spec in specs:
            algebra = catalog.generate(spec)
            ok_j = jacobi_check(algebra).ok
            rank = rank_in_basis(algebra)
            expected_rank = catalog.expected_rank(spec)
            ok_r = rank == expected_rank
            try:
                ok_w = verify_claimed_weights(spec).ok
                weights_cell = "OK" if ok_w else "FAIL"
            except catalog.UnknownFamilyError:
                ok_w = True
                weights_cell = "-"
            gr_cell, ok_g = "-", True
            target = catalog.natural_gr_class(spec)
            if target is not None and catalog.generate(target).dim == algebra.dim:
                result = classify_gr(algebra)
                got = result.match.canonical() if result.classified else "UNCLASSIFIED"
                ok_g = got == target.canonical()
                gr_cell = got if ok_g else f"{got}!={target.canonical()}"
            ok = ok_j and ok_r and ok_w and ok_g
            failures += 0 if ok else 1
            print(f"{spec.canonical():40s} {'OK' if ok_j else 'FAIL':8s} "
                  f"{f'{rank}({expected_rank})':12s} {weights_cell:8s} {gr_cell:24s}")
    print(f"SWEEP {'OK' if failures == 0 else f'FAIL ({failures} rows)'}")
    return 0 if failures == 0 else 1


_COMMANDS = {
    "gen": _cmd_gen,
    "jacobi": _cmd_jacobi,
    "series": _cmd_series,
    "gr": _cmd_gr,
    "derivations": _cmd_derivations,
    "rank": _cmd_rank,
    "classify": _cmd_classify,
    "constraints": _cmd_constraints,
    "iso-cn": _cmd_iso_cn,
    "sweep": _cmd_sweep,
    "weights": _cmd_weights,
}


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if exc.code else 0
    try:
        return _COMMANDS[args.command](args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 2
    except (catalog.InvalidParametersError, catalog.UnknownFamilyError) as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 2
    except QflabError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
