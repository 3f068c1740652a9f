"""Batch command line interface.

Subcommands: validate | invariants | gamma-group | homology.  Input is a
JSON document; reports go to stdout, diagnostics to stderr.  Exit codes are
frozen: 0 ok, 1 parse/shape error, 2 hypothesis violation, 3 oracle
disagreement, 4 budget exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys

from .errors import (
    BudgetExceeded,
    HypothesisViolation,
    NotAChainComplex,
    NotWellDefined,
    ShapeMismatch,
    UnsupportedRank,
    Wes6Error,
)
from .enumeration import gamma_s_group, oracle_compare
from .groups import FgAbGroup
from .matrices import IntMatrix
from .wes import (
    build_wes_data,
    gamma5_decomposition,
    homology_of_complex,
    validate,
    wes_report,
)

EXIT_OK = 0
EXIT_PARSE = 1
EXIT_HYPOTHESIS = 2
EXIT_ORACLE = 3
EXIT_BUDGET = 4


class InputError(Exception):
    """Malformed input document."""


def _parse_group(name, node) -> FgAbGroup:
    if not isinstance(node, dict):
        raise InputError(f"{name}: expected an object with rank/torsion")
    rank = node.get("rank", 0)
    torsion = node.get("torsion", [])
    if not isinstance(rank, int) or rank < 0:
        raise InputError(f"{name}: rank must be a nonnegative integer")
    if not isinstance(torsion, list) or not all(isinstance(d, int) for d in torsion):
        raise InputError(f"{name}: torsion must be a list of integers")
    try:
        # Reject non-canonical chains instead of silently rebasing: the b6
        # and class coordinates are tied to the listed generators.
        return FgAbGroup(rank, tuple(torsion))
    except ValueError as exc:
        raise InputError(f"{name}: {exc}") from None


def _parse_matrix(name, node, rows, cols) -> IntMatrix:
    if not isinstance(node, list) or not all(isinstance(r, list) for r in node):
        raise InputError(f"{name}: expected a list of rows")
    try:
        return IntMatrix(rows, cols, node)
    except (ShapeMismatch, TypeError, ValueError) as exc:
        raise InputError(f"{name}: {exc}") from None


def load_document(path: str) -> dict:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            doc = json.load(fh)
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}") from None
    except json.JSONDecodeError as exc:
        raise InputError(f"{path}: invalid JSON: {exc}") from None
    if not isinstance(doc, dict):
        raise InputError("top-level document must be an object")
    return doc


def parse_groups(doc: dict):
    if "groups" in doc:
        node = doc["groups"]
        if not isinstance(node, dict):
            raise InputError("groups: expected an object")
        missing = [k for k in ("H3", "H4", "H5", "H6") if k not in node]
        if missing:
            raise InputError(f"groups: missing {', '.join(missing)}")
        return tuple(_parse_group(k, node[k]) for k in ("H3", "H4", "H5", "H6"))
    if "chain_complex" in doc:
        d4, d5, d6 = parse_chain_complex(doc)
        try:
            return homology_of_complex(d4, d5, d6)
        except NotAChainComplex as exc:
            raise InputError(str(exc)) from None
    raise InputError("document needs either 'groups' or 'chain_complex'")


def parse_chain_complex(doc: dict):
    node = doc.get("chain_complex")
    if not isinstance(node, dict):
        raise InputError("chain_complex: expected an object with d4, d5, d6")
    mats = {}
    for key in ("d4", "d5", "d6"):
        raw = node.get(key)
        if not isinstance(raw, list):
            raise InputError(f"chain_complex.{key}: expected a list of rows")
        rows = len(raw)
        cols = len(raw[0]) if raw and isinstance(raw[0], list) else 0
        mats[key] = _parse_matrix(f"chain_complex.{key}", raw, rows, cols)
    return mats["d4"], mats["d5"], mats["d6"]


def parse_wes_document(doc: dict):
    h3, h4, h5, h6 = parse_groups(doc)
    if not (h3.rank == 0 and all(d % 2 for d in h3.torsion)):
        raise HypothesisViolation(f"H3 tensor Z2 != 0 for H3 = {h3}")
    if h6.torsion:
        raise InputError(f"H6 must be torsion-free, got {h6}")
    decomp = gamma5_decomposition(h3, h4)
    b6_node = doc.get("b6")
    if b6_node is None:
        raise InputError("document needs a 'b6' matrix")
    b6_raw = _parse_matrix("b6", b6_node, decomp.part_gen_count, h6.n_gens)
    pi5_node = doc.get("pi5_class", [])
    if not isinstance(pi5_node, list):
        raise InputError("pi5_class: expected a list of coordinate vectors")
    if len(pi5_node) != h5.n_torsion:
        raise InputError(
            f"pi5_class: need {h5.n_torsion} coordinate vectors "
            f"(one per H5 torsion factor), got {len(pi5_node)}"
        )
    try:
        return build_wes_data(h3, h4, h5, h6, b6_raw.data, pi5_node)
    except (ShapeMismatch, NotWellDefined, ValueError, TypeError) as exc:
        raise InputError(str(exc)) from None


def _emit(payload: dict, as_json: bool):
    if as_json:
        print(json.dumps(payload, indent=2))
    else:
        for key, value in payload.items():
            print(f"{key}: {value}")


def cmd_validate(args) -> int:
    doc = load_document(args.path)
    try:
        w = parse_wes_document(doc)
    except HypothesisViolation as exc:
        print(f"FAIL h3_odd_torsion: {exc}")
        return EXIT_HYPOTHESIS
    checks = validate(w)
    for check in checks:
        print(f"{'PASS' if check.passed else 'FAIL'} {check.name}: {check.reason}")
    if all(c.passed for c in checks):
        return EXIT_OK
    return EXIT_HYPOTHESIS


def cmd_invariants(args) -> int:
    doc = load_document(args.path)
    w = parse_wes_document(doc)
    _emit(wes_report(w), args.json)
    return EXIT_OK


def cmd_gamma_group(args) -> int:
    doc = load_document(args.path)
    w = parse_wes_document(doc)
    table = gamma_s_group(w, args.budget)
    payload = {
        "order": table.order,
        "is_abelian": table.is_abelian,
        "structure": table.structure_label,
        "generator_count": len(table.generators),
        "f6_f5_projection_order": len(table.f6_f5_pairs),
        "f6_f5_projection_structure": (
            " + ".join(f"Z{d}" for d in table.f6_f5_structure)
            if table.f6_f5_structure
            else "0"
            if table.f6_f5_structure == ()
            else "nonabelian"
        ),
        "table_hash": table.table_hash,
        "notes": list(table.notes),
    }
    if args.oracle:
        report = oracle_compare(w, args.budget)
        payload["oracle_total"] = report.total
        payload["oracle_accepted"] = report.accepted
        payload["oracle_disagreements"] = len(report.disagreements)
        _emit(payload, args.json)
        if report.disagreements:
            print("oracle disagreement detected", file=sys.stderr)
            return EXIT_ORACLE
        return EXIT_OK
    _emit(payload, args.json)
    return EXIT_OK


def cmd_homology(args) -> int:
    doc = load_document(args.path)
    if "chain_complex" not in doc:
        raise InputError("homology needs a 'chain_complex' block")
    d4, d5, d6 = parse_chain_complex(doc)
    try:
        h3, h4, h5, h6 = homology_of_complex(d4, d5, d6)
    except NotAChainComplex as exc:
        raise InputError(f"not a chain complex: {exc}") from None
    decomp = gamma5_decomposition(h3, h4) if h3.rank == 0 and all(
        d % 2 for d in h3.torsion
    ) else None
    template = {
        "groups": {
            "H3": {"rank": h3.rank, "torsion": list(h3.torsion)},
            "H4": {"rank": h4.rank, "torsion": list(h4.torsion)},
            "H5": {"rank": h5.rank, "torsion": list(h5.torsion)},
            "H6": {"rank": h6.rank, "torsion": list(h6.torsion)},
        },
        "b6": [[0] * h6.n_gens for _ in range(decomp.part_gen_count)]
        if decomp
        else None,
        "pi5_class": [[] for _ in range(h5.n_torsion)],
        "_note": "fill in b6 and pi5_class: they are homotopy data, "
        "not derivable from the differentials",
    }
    payload = {
        "H3": str(h3),
        "H4": str(h4),
        "H5": str(h5),
        "H6": str(h6),
        "template": template,
    }
    if args.json:
        print(json.dumps(payload, indent=2))
    else:
        for key in ("H3", "H4", "H5", "H6"):
            print(f"{key}: {payload[key]}")
        print("template:")
        print(json.dumps(template, indent=2))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="wes6",
        description="Exact invariants and automorphism groups of the "
        "degree-5 Whitehead sequence of a 2-connected 6-complex.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, **kwargs):
        p = sub.add_parser(name, **kwargs)
        p.add_argument("path", help="input JSON document")
        p.add_argument("--json", action="store_true", help="machine-readable output")
        p.set_defaults(func=func)
        return p

    add("validate", cmd_validate, help="check the input invariants")
    add("invariants", cmd_invariants, help="print the computed invariants")
    g = add("gamma-group", cmd_gamma_group, help="enumerate the automorphism group")
    g.add_argument(
        "--budget",
        type=int,
        default=10**6,
        help="candidate cap per automorphism enumeration",
    )
    g.add_argument(
        "--oracle",
        action="store_true",
        help="cross-check every tuple against the diagram-chasing oracle",
    )
    add("homology", cmd_homology, help="homology of a cellular chain complex")
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except HypothesisViolation as exc:
        print(f"hypothesis violation: {exc}", file=sys.stderr)
        return EXIT_HYPOTHESIS
    except (BudgetExceeded, UnsupportedRank) as exc:
        print(f"budget exceeded or unsupported: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except Wes6Error as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE


if __name__ == "__main__":
    sys.exit(main())
