"""Command-line front end.

Subcommands: analyze, rf, generic, relations, closure, verify. Every command
emits an output document {schema_version, command, payload}; --format picks
the rendering (text by default, json for scripting). The two renderings carry
identical payload data.

Exit codes:
  0  success (for `generic`: the semigroup is generic; for `verify`: no
     unexpected failure)
  1  semantic negative (`generic`: not generic; `verify`: a claim failed
     outside the pre-registered fixtures)
  2  invalid generators (gcd != 1, non-positive entries) or usage errors
  3  invalid --pf selection (not a pseudo-Frobenius number), or no PF
     elements are available for the request
  4  verify configuration errors (bad config file, unknown claim,
     oversized grid)
  5  RF enumeration exceeds the --max-rf safety cap
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import verifier
from .errors import (
    ArfrfError,
    GridTooLarge,
    NotNumerical,
    NotPseudoFrobenius,
    TooManyMatrices,
    UnknownClaim,
)
from .lattice import (
    is_generic,
    kernel_lattice,
    lattice_index,
    rf_difference_lattice,
    rf_relations,
)
from .rfmatrix import (
    check_sign_conjecture,
    determinant,
    find_frobenius_det_witness,
    rf_matrices,
    rf_matrix_count,
)
from .semigroup import NumericalSemigroup, from_generators

SCHEMA_VERSION = "1"


# ---------------------------------------------------------------------------
# rendering


def render_monomial(exponents) -> str:
    """x1^a*x2^b style; unit exponents suppressed, factors in index order."""
    parts = []
    for i, a in enumerate(exponents, start=1):
        if a == 1:
            parts.append(f"x{i}")
        elif a > 1:
            parts.append(f"x{i}^{a}")
    return "*".join(parts) if parts else "1"


def render_binomial(binomial) -> str:
    return f"{render_monomial(binomial.plus)} - {render_monomial(binomial.minus)}"


def format_matrix(rows) -> list[str]:
    width = max(len(str(x)) for row in rows for x in row)
    return ["  ".join(f"{x:>{width}}" for x in row) for row in rows]


def _emit(doc: dict, fmt: str, lines: list[str], out=None) -> None:
    out = out or sys.stdout
    if fmt == "json":
        print(json.dumps(doc, sort_keys=True), file=out)
    else:
        for line in lines:
            print(line, file=out)


def _document(args_list, payload) -> dict:
    return {"schema_version": SCHEMA_VERSION, "command": args_list, "payload": payload}


# ---------------------------------------------------------------------------
# payload builders


def semigroup_payload(sg: NumericalSemigroup) -> dict:
    pf = sg.pseudo_frobenius()
    return {
        "generators": list(sg.generators),
        "multiplicity": sg.multiplicity,
        "embedding_dimension": sg.embedding_dimension,
        "frobenius": sg.frobenius,
        "conductor": sg.conductor,
        "genus": sg.genus(),
        "apery": list(sg.apery_table),
        "pseudo_frobenius": list(pf.elements),
        "type": pf.type_count,
        "is_med": sg.is_med(),
        "is_arf": sg.is_arf(),
    }


def semigroup_lines(payload: dict) -> list[str]:
    return [
        f"S = <{', '.join(map(str, payload['generators']))}>",
        f"multiplicity m        : {payload['multiplicity']}",
        f"embedding dimension e : {payload['embedding_dimension']}",
        f"frobenius F           : {payload['frobenius']}",
        f"conductor c           : {payload['conductor']}",
        f"genus (gap count)     : {payload['genus']}",
        f"apery set (mod m)     : {' '.join(map(str, payload['apery']))}",
        f"pseudo-frobenius      : {' '.join(map(str, payload['pseudo_frobenius'])) or '-'}",
        f"type t                : {payload['type']}",
        f"maximal embedding dim : {'yes' if payload['is_med'] else 'no'}",
        f"arf                   : {'yes' if payload['is_arf'] else 'no'}",
    ]


# ---------------------------------------------------------------------------
# subcommands


def cmd_analyze(args, argv) -> int:
    sg = from_generators(args.generators)
    payload = semigroup_payload(sg)
    _emit(_document(argv, payload), args.format, semigroup_lines(payload))
    return 0


def cmd_rf(args, argv) -> int:
    sg = from_generators(args.generators)
    pf = sg.pseudo_frobenius().elements
    if args.pf is not None and args.pf not in pf:
        print(
            f"error: {args.pf} is not a pseudo-Frobenius number; PF = {list(pf)}",
            file=sys.stderr,
        )
        return 3
    targets = [args.pf] if args.pf is not None else list(pf)
    blocks = []
    lines = [f"S = <{', '.join(map(str, sg.generators))}>   PF = {list(pf)}"]
    for f in targets:
        count = rf_matrix_count(sg, f)
        block: dict = {"pf_element": f, "count": count}
        lines.append(f"RF({f}): {count} {'matrix' if count == 1 else 'matrices'}")
        if not args.count_only:
            matrices = rf_matrices(sg, f, max_matrices=args.max_rf)
            block["matrices"] = [[list(r) for r in M.entries] for M in matrices]
            if args.dets:
                block["determinants"] = [determinant(M) for M in matrices]
            for idx, M in enumerate(matrices):
                suffix = f"   det = {determinant(M)}" if args.dets else ""
                lines.append(f"  matrix {idx + 1}{suffix}")
                lines.extend("    " + row for row in format_matrix(M.entries))
        blocks.append(block)
    payload: dict = {"generators": list(sg.generators), "pf": list(pf), "rf": blocks}
    if args.witness:
        witness = find_frobenius_det_witness(sg)
        sign = check_sign_conjecture(sg)
        payload["det_witness"] = (
            None if witness is None else [list(r) for r in witness.entries]
        )
        payload["det_witness_value"] = None if witness is None else determinant(witness)
        payload["sign_target"] = sign.target
        payload["sign_witness_found"] = sign.holds
        if witness is None:
            lines.append(f"no RF matrix of F = {sg.frobenius} with |det| = F")
        else:
            lines.append(
                f"witness with |det| = F = {sg.frobenius}: det = {determinant(witness)}"
            )
            lines.extend("  " + row for row in format_matrix(witness.entries))
            lines.append(
                f"sign-exact witness (target {sign.target}): "
                f"{'found' if sign.holds else 'absent'}"
            )
    _emit(_document(argv, payload), args.format, lines)
    return 0


def cmd_generic(args, argv) -> int:
    sg = from_generators(args.generators)
    verdict = is_generic(sg)
    witness: dict | str
    if verdict.generic:
        witness = "all criteria passed"
    elif verdict.nonunique is not None:
        f, m1, m2 = verdict.nonunique
        witness = {
            "pf_element": f,
            "matrices": [[list(r) for r in m.entries] for m in (m1, m2)],
        }
    else:
        f, matrix, i, i2, j = verdict.column_clash
        witness = {
            "pf_element": f,
            "matrix": [list(r) for r in matrix.entries],
            "rows": [i + 1, i2 + 1],
            "column": j + 1,
        }
    payload = {
        "generators": list(sg.generators),
        "generic": verdict.generic,
        "witness": witness,
    }
    lines = [
        f"S = <{', '.join(map(str, sg.generators))}>",
        f"generic: {'yes' if verdict.generic else 'no'}",
        f"witness: {verdict.describe()}",
    ]
    if not verdict.generic and verdict.nonunique is not None:
        for m in verdict.nonunique[1:]:
            lines.extend("  " + row for row in format_matrix(m.entries))
            lines.append("")
    elif not verdict.generic:
        lines.extend("  " + row for row in format_matrix(verdict.column_clash[1].entries))
    _emit(_document(argv, payload), args.format, lines)
    return 0 if verdict.generic else 1


def cmd_relations(args, argv) -> int:
    sg = from_generators(args.generators)
    pf = sg.pseudo_frobenius().elements
    if not pf:
        print("error: no pseudo-Frobenius numbers (S covers all of N)", file=sys.stderr)
        return 3
    frob = sg.frobenius
    witness = find_frobenius_det_witness(sg)
    note = None
    if witness is None:
        witness = rf_matrices(sg, frob, max_matrices=args.max_rf)[0]
        note = "no |det| = F witness exists; using the first RF matrix instead"
    relations = rf_relations(sg, witness)
    V = kernel_lattice(sg)
    W = rf_difference_lattice(sg, witness)
    index = lattice_index(W, V)
    e = sg.embedding_dimension
    pairs = [(i, j) for i in range(e) for j in range(i + 1, e)]
    payload = {
        "generators": list(sg.generators),
        "frobenius": frob,
        "matrix": [list(r) for r in witness.entries],
        "determinant": determinant(witness),
        "row_differences": [
            {
                "i": i + 1,
                "j": j + 1,
                "vector": [a - b for a, b in zip(witness.entries[i], witness.entries[j])],
            }
            for i, j in pairs
        ],
        "relations": [
            {
                "i": i + 1,
                "j": j + 1,
                "plus": list(b.plus),
                "minus": list(b.minus),
                "binomial": render_binomial(b),
                "full_support": b.has_full_support(),
            }
            for (i, j), b in zip(pairs, relations)
        ],
        "kernel_basis": [list(r) for r in V.basis],
        "difference_basis": [list(r) for r in W.basis],
        "index": index if index is not None else "infinite",
        "note": note,
    }
    lines = [f"S = <{', '.join(map(str, sg.generators))}>   F = {frob}"]
    if note:
        lines.append(f"note: {note}")
    lines.append(f"RF matrix (det = {payload['determinant']}):")
    lines.extend("  " + row for row in format_matrix(witness.entries))
    lines.append("row differences a_i - a_j (generators of W(S)):")
    for diff in payload["row_differences"]:
        lines.append(f"  a_{diff['i']}{diff['j']} = {tuple(diff['vector'])}")
    lines.append("relations:")
    for rel in payload["relations"]:
        lines.append(f"  phi_{rel['i']}{rel['j']} = {rel['binomial']}")
    lines.append(f"V(S) basis: {[tuple(r) for r in payload['kernel_basis']]}")
    lines.append(f"W(S) basis: {[tuple(r) for r in payload['difference_basis']]}")
    lines.append(f"[V(S) : W(S)] = {payload['index']}")
    _emit(_document(argv, payload), args.format, lines)
    return 0


def cmd_closure(args, argv) -> int:
    sg = from_generators(args.generators)
    closure = sg.arf_closure()
    added = [n for n in range(sg.conductor) if closure.contains(n) and not sg.contains(n)]
    payload = {
        "input_generators": list(sg.generators),
        "was_arf": sg == closure,
        "closure": semigroup_payload(closure),
        "added_elements": added,
    }
    lines = [
        f"input S = <{', '.join(map(str, sg.generators))}>",
        f"already arf: {'yes' if payload['was_arf'] else 'no'}",
        f"closure generators: {', '.join(map(str, closure.generators))}",
        f"added elements below the conductor: {added or '-'}",
    ]
    lines.extend(semigroup_lines(payload["closure"]))
    _emit(_document(argv, payload), args.format, lines)
    return 0


def cmd_verify(args, argv) -> int:
    settings: dict = {}
    claim_ids = None
    if args.suite is not None:
        if args.suite not in verifier.SUITES:
            print(
                f"error: unknown suite {args.suite!r}; known: {sorted(verifier.SUITES)}",
                file=sys.stderr,
            )
            return 4
        settings.update(verifier.SUITES[args.suite])
    if args.config is not None:
        try:
            settings.update(verifier.parse_config_text(Path(args.config).read_text()))
        except (OSError, ValueError) as exc:
            print(f"error: cannot read config: {exc}", file=sys.stderr)
            return 4
    if "claims" in settings:
        claim_ids = settings.pop("claims")
        if claim_ids == ["default"]:
            claim_ids = None
    if args.claim:
        claim_ids = args.claim
    for key, value in (
        ("s_max", args.s_max),
        ("med_m_max", args.m_max),
        ("seed", args.seed),
        ("closure_samples", args.samples),
        ("families", args.families),
    ):
        if value is not None:
            settings[key] = value
    try:
        config = verifier.VerifyConfig(**settings)
        reports = verifier.verify_all(config, claim_ids)
    except (UnknownClaim, GridTooLarge, TypeError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 4
    ok = verifier.aggregate_ok(reports)
    report_dir = Path(args.report_dir)
    report_dir.mkdir(parents=True, exist_ok=True)
    summary = {
        "config": {
            "s_max": config.s_max,
            "med_m_min": config.med_m_min,
            "med_m_max": config.med_m_max,
            "med_s_factor": config.med_s_factor,
            "closure_samples": config.closure_samples,
            "oracle_samples": config.oracle_samples,
            "seed": config.seed,
        },
        "claims": [
            {"claim_id": r.claim_id, "status": r.status, "checked": r.checked}
            for r in reports
        ],
        "ok": ok,
    }
    for report in reports:
        path = report_dir / f"{report.claim_id.replace('/', '_')}.json"
        path.write_text(json.dumps(report.to_dict(), sort_keys=True, indent=2) + "\n")
    (report_dir / "summary.json").write_text(
        json.dumps(summary, sort_keys=True, indent=2) + "\n"
    )
    lines = [f"{r.claim_id:20s} {r.status:24s} checked={r.checked}" for r in reports]
    lines.append(f"reports written to {report_dir}")
    lines.append("result: " + ("ok" if ok else "FAIL"))
    payload = {"summary": summary, "report_dir": str(report_dir)}
    _emit(_document(argv, payload), args.format, lines)
    return 0 if ok else 1


# ---------------------------------------------------------------------------
# parser


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="arfrf",
        description="numerical semigroup invariants, RF matrices, genericity, "
        "and the claim verification suite",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p, gens=True):
        if gens:
            p.add_argument("generators", nargs="+", type=int, help="semigroup generators")
        p.add_argument("--format", choices=("text", "json"), default="text")

    p = sub.add_parser("analyze", help="invariants of <generators>")
    add_common(p)
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("rf", help="row-factorization matrices of PF elements")
    add_common(p)
    p.add_argument("--pf", type=int, default=None, help="restrict to one PF element")
    p.add_argument("--dets", action="store_true", help="include determinants")
    p.add_argument("--count-only", action="store_true", help="counts only, no matrices")
    p.add_argument("--witness", action="store_true", help="search determinant witnesses")
    p.add_argument(
        "--max-rf",
        type=int,
        default=None,
        help="abort if a PF element has more matrices than this cap "
        "(safety valve for adversarial inputs; no cap by default)",
    )
    p.set_defaults(func=cmd_rf)

    p = sub.add_parser("generic", help="genericity of the defining toric ideal")
    add_common(p)
    p.set_defaults(func=cmd_generic)

    p = sub.add_parser("relations", help="RF relations, W(S) and [V(S):W(S)]")
    add_common(p)
    p.add_argument("--max-rf", type=int, default=None)
    p.set_defaults(func=cmd_relations)

    p = sub.add_parser("closure", help="smallest Arf semigroup containing <generators>")
    add_common(p)
    p.set_defaults(func=cmd_closure)

    p = sub.add_parser("verify", help="run registered claim sweeps")
    add_common(p, gens=False)
    p.add_argument("--suite", default=None, help="named suite (default, quick)")
    p.add_argument("--claim", action="append", default=None, help="run one claim id")
    p.add_argument("--config", default=None, help="key = value config file")
    p.add_argument("--s-max", type=int, default=None)
    p.add_argument("--m-max", type=int, default=None, help="largest med-family multiplicity")
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--samples", type=int, default=None, help="closure sample count")
    p.add_argument(
        "--families",
        choices=("arf-m-le-5", "med", "all"),
        default=None,
        help="scope of the Conj5.3 sweep",
    )
    p.add_argument("--report-dir", default="reports")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args, argv)
    except NotNumerical as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except NotPseudoFrobenius as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except TooManyMatrices as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 5
    except ArfrfError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
