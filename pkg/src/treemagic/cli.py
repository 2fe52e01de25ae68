"""Command-line front end.

Subcommands: spectrum, check, label, oracle, atlas. Every command emits a
human-readable report by default or a JSON report with --format structured.
The JSON envelope carries schema_version 1, a command echo, an input digest,
the seed/cap parameters, timing, and the result payload; rerunning with the
same inputs reproduces the same payload (timing aside).

Exit codes: 0 success, 1 usage or parse failure, 2 internal invariant
violation (the independent computation routes disagreed).
"""

from __future__ import annotations

import argparse
import hashlib
import json
import sys
import time

import numpy as np

from . import __version__, oracle, treegen
from .errors import TreeMagicError
from .spectrum import (
    MagicLabeling,
    construct_labeling,
    describe_spectrum,
    find_witness,
    follows_forced_pattern,
    forced_labeling,
    spectrum as compute_spectrum,
    witness_table,
)
from .layers import layered_tree
from .tree import Tree, format_edge_list, parse_tree

USAGE_EXIT = 1
INVARIANT_EXIT = 2
SCHEMA_VERSION = 1


class _Parser(argparse.ArgumentParser):
    # argparse exits with 2 on usage errors; keep 2 reserved for invariant
    # violations and use 1 for usage problems instead.
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(USAGE_EXIT)


def _sha256(data: bytes) -> str:
    return hashlib.sha256(data).hexdigest()


def _load_tree(path: str) -> tuple[Tree, str]:
    with open(path, "rb") as fh:
        raw = fh.read()
    return parse_tree(raw.decode("utf-8")), _sha256(raw)


def _labeling_payload(tree: Tree, lab: MagicLabeling) -> dict:
    return {
        "modulus": lab.modulus,
        "pendant_label": lab.pendant_label,
        "labels": [
            {"u": u, "v": v, "label": lab.labels[(u, v)]} for u, v in tree.edges
        ],
    }


def _tree_summary(tree: Tree) -> dict:
    return {"vertices": tree.n_vertices, "edges": tree.n_edges}


def _report(command: str, digest: str, params: dict, result: dict, elapsed: float) -> dict:
    return {
        "schema_version": SCHEMA_VERSION,
        "command": command,
        "input_digest": digest,
        "params": params,
        "result": result,
        "elapsed_seconds": round(elapsed, 6),
    }


def _emit(report: dict, lines: list[str], fmt: str) -> None:
    if fmt == "structured":
        print(json.dumps(report, sort_keys=True))
    else:
        for line in lines:
            print(line)


def _spectrum_context(tree: Tree):
    """(LayeredTree or None, ForcedLabeling or None, SpectrumDescription)."""
    if tree.n_edges == 0:
        return None, None, describe_spectrum(tree)
    lt = layered_tree(tree)
    fl = forced_labeling(lt)
    return lt, fl, compute_spectrum(lt, fl)


def _cmd_spectrum(args) -> int:
    tree, digest = _load_tree(args.file)
    t0 = time.perf_counter()
    lt, fl, desc = _spectrum_context(tree)
    elapsed = time.perf_counter() - t0

    result = {
        "tree": _tree_summary(tree),
        "spectrum": desc.to_json_dict(),
        "sigma": desc.sigma,
        "range_f": sorted(fl.range_f) if fl is not None else None,
    }
    lines = [f"tree: {tree.n_vertices} vertices, {tree.n_edges} edges"]
    if lt is not None:
        center = "/".join(lt.center.vertices)
        lines.append(f"diameter {lt.center.diameter}, center {center}")
        lines.append(f"sigma = {desc.sigma}")
        lines.append(f"range(f) = {{{','.join(map(str, sorted(fl.range_f)))}}}")
    lines.append(desc.render())
    _emit(_report("spectrum", digest, {}, result, elapsed), lines, args.format)
    return 0


def _cmd_check(args) -> int:
    tree, digest = _load_tree(args.file)
    h = args.h
    t0 = time.perf_counter()
    lt, fl, desc = _spectrum_context(tree)
    member_cf = desc.contains(h) if h >= 1 else False
    if lt is None or h < 2:
        # single vertex, or h = 1 where no nonzero residues exist
        witness = None
        member_wit = member_cf
    else:
        witness = find_witness(lt, fl, h)
        member_wit = witness is not None
    elapsed = time.perf_counter() - t0

    agree = member_cf == member_wit
    result = {
        "tree": _tree_summary(tree),
        "h": h,
        "member_closed_form": member_cf,
        "member_witness_search": member_wit,
        "witness_x": witness,
        "agree": agree,
        "spectrum": desc.to_json_dict(),
    }
    verdict = "member" if member_cf else "not a member"
    lines = [f"h = {h}: {verdict} ({desc.render()})"]
    if witness is not None:
        lines.append(f"witness pendant label x = {witness}")
    if not agree:
        lines.append("ERROR: closed form and witness search disagree")
    _emit(_report("check", digest, {"h": h}, result, elapsed), lines, args.format)
    return 0 if agree else INVARIANT_EXIT


def _cmd_label(args) -> int:
    tree, digest = _load_tree(args.file)
    h = args.h
    t0 = time.perf_counter()
    lt, fl, desc = _spectrum_context(tree)
    member = desc.contains(h) if h >= 1 else False

    if lt is None:
        elapsed = time.perf_counter() - t0
        result = {
            "tree": _tree_summary(tree), "h": h, "in_spectrum": member,
            "labeling": {"modulus": h, "pendant_label": None, "labels": []},
            "verified": True,
        }
        lines = ["single vertex: trivially magic; the empty labeling works"]
        _emit(_report("label", digest, {"h": h}, result, elapsed), lines, args.format)
        return 0

    if not member:
        elapsed = time.perf_counter() - t0
        result = {"tree": _tree_summary(tree), "h": h, "in_spectrum": False, "labeling": None}
        lines = [f"h = {h} is not in the spectrum ({desc.render()})"]
        _emit(_report("label", digest, {"h": h}, result, elapsed), lines, args.format)
        return 0

    lab = construct_labeling(lt, fl, h)
    check = oracle.verify_labeling(tree, lab)
    elapsed = time.perf_counter() - t0
    result = {
        "tree": _tree_summary(tree), "h": h, "in_spectrum": True,
        "labeling": _labeling_payload(tree, lab),
        "verified": check.ok,
        "constant": check.constant,
    }
    lines = [f"h-magic labeling for h = {h} (pendant label x = {lab.pendant_label}):"]
    lines += [f"  {u} {v}  {lab.labels[(u, v)]}" for u, v in tree.edges]
    if check.ok:
        lines.append(f"verified: every vertex sums to {check.constant} (mod {h})")
    else:
        lines.append(f"ERROR: constructed labeling failed verification: {check.diagnostic}")
    _emit(_report("label", digest, {"h": h}, result, elapsed), lines, args.format)
    return 0 if check.ok else INVARIANT_EXIT


def _cmd_oracle(args) -> int:
    tree, digest = _load_tree(args.file)
    h, cap = args.h, args.cap
    t0 = time.perf_counter()
    verdict = oracle.is_h_magic_bruteforce(tree, h, cap)
    listing = []
    conform_fail = 0
    if args.all and verdict.status != oracle.UNKNOWN:
        labelings = oracle.enumerate_magic_labelings(tree, h, cap)
        lt, fl, _ = _spectrum_context(tree)
        for lab in labelings:
            if lt is None:
                ok, why = True, None
            else:
                ok, why = follows_forced_pattern(lt, fl, lab)
            if not ok:
                conform_fail += 1
            listing.append(
                {"labeling": _labeling_payload(tree, lab), "conforms": ok, "detail": why}
            )
    elapsed = time.perf_counter() - t0

    result = {
        "tree": _tree_summary(tree),
        "h": h,
        "verdict": verdict.status,
        "states_explored": verdict.states_explored,
        "reason": verdict.reason,
        "witness": _labeling_payload(tree, verdict.witness) if verdict.witness else None,
        "all_labelings": listing if args.all else None,
    }
    lines = [f"verdict: {verdict.status} ({verdict.states_explored} labelings examined)"]
    if verdict.reason:
        lines.append(f"reason: {verdict.reason}")
    if verdict.witness:
        body = ", ".join(f"{u}-{v}:{l}" for (u, v), l in verdict.witness.labels.items())
        lines.append(f"first witness: {body}")
    if args.all:
        lines.append(f"magic labelings found: {len(listing)}")
        for i, item in enumerate(listing):
            body = ", ".join(
                f"{e['u']}-{e['v']}:{e['label']}" for e in item["labeling"]["labels"]
            )
            status = "conforms" if item["conforms"] else f"VIOLATES ({item['detail']})"
            lines.append(f"  [{i}] {body}  x={item['labeling']['pendant_label']}  {status}")
    _emit(_report("oracle", digest, {"h": h, "cap": cap}, result, elapsed), lines, args.format)
    return 0 if conform_fail == 0 else INVARIANT_EXIT


def _atlas_verdicts(tree: Tree, h_max: int, cap: int):
    """Per-h closed-form, witness, and oracle verdicts for one tree."""
    lt = layered_tree(tree)
    fl = forced_labeling(lt)
    desc = compute_spectrum(lt, fl)
    witnesses = witness_table(lt, fl, h_max)
    rows = []
    for h in range(2, h_max + 1):
        cf = desc.contains(h)
        wit = witnesses[h] is not None
        if (h - 1) ** tree.n_edges > cap:
            orc = None
        else:
            orc = oracle.is_h_magic_bruteforce(tree, h, cap).is_magic
        rows.append((h, cf, wit, orc))
    return rows


def _cmd_atlas(args) -> int:
    n_max, h_max, cap, seed, n_random = args.n_max, args.h_max, args.cap, args.seed, args.random
    params = {"n_max": n_max, "h_max": h_max, "cap": cap, "seed": seed, "random": n_random}
    digest = _sha256(json.dumps(params, sort_keys=True).encode())
    t0 = time.perf_counter()

    trees: list[tuple[str, Tree]] = []
    for n in range(2, n_max + 1):
        for i, t in enumerate(treegen.all_labeled_trees(n)):
            trees.append((f"n{n}#{i}", t))
    rng = np.random.default_rng(seed)
    for i in range(n_random):
        n = int(rng.integers(n_max + 1, n_max + 7))
        trees.append((f"random#{i}(n={n})", treegen.random_tree(n, seed=int(rng.integers(2**32)))))

    pairs = 0
    skipped = 0
    discrepancies = 0
    first = None
    for name, tree in trees:
        for h, cf, wit, orc in _atlas_verdicts(tree, h_max, cap):
            pairs += 1
            if orc is None:
                skipped += 1
            bad = (cf != wit) or (orc is not None and orc != cf)
            if bad:
                discrepancies += 1
                if first is None:
                    first = {
                        "tree": name,
                        "edges": format_edge_list(tree).strip().splitlines(),
                        "h": h,
                        "closed_form": cf,
                        "witness_search": wit,
                        "oracle": orc,
                    }
    elapsed = time.perf_counter() - t0

    result = {
        "trees_processed": len(trees),
        "pairs_checked": pairs,
        "oracle_skipped": skipped,
        "discrepancies": discrepancies,
        "first_discrepancy": first,
    }
    lines = [
        f"trees: {len(trees)} (exhaustive n = 2..{n_max}, random: {n_random}; seed {seed})",
        f"pairs checked: {pairs} (h = 2..{h_max}); oracle skipped over cap: {skipped}",
        f"discrepancies: {discrepancies}",
    ]
    if first is not None:
        lines.append(f"first discrepancy: {json.dumps(first)}")
    _emit(_report("atlas", digest, params, result, elapsed), lines, args.format)
    return 0 if discrepancies == 0 else INVARIANT_EXIT


def _add_format(p: argparse.ArgumentParser) -> None:
    p.add_argument("--format", choices=("text", "structured"), default="text",
                   help="text (default) or structured JSON report")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="treemagic",
                     description="Integer-magic spectra of trees: closed form, witnesses, and brute-force oracles.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("spectrum", help="closed-form spectrum of a tree")
    p.add_argument("file", help="edge-list file (one 'u v' pair per line)")
    _add_format(p)
    p.set_defaults(func=_cmd_spectrum)

    p = sub.add_parser("check", help="is h in the spectrum? (closed form and witness search)")
    p.add_argument("file")
    p.add_argument("--h", type=int, required=True, help="modulus to test (h >= 1)")
    _add_format(p)
    p.set_defaults(func=_cmd_check)

    p = sub.add_parser("label", help="construct and verify an h-magic labeling")
    p.add_argument("file")
    p.add_argument("--h", type=int, required=True)
    _add_format(p)
    p.set_defaults(func=_cmd_label)

    p = sub.add_parser("oracle", help="brute-force verdict by exhaustive enumeration")
    p.add_argument("file")
    p.add_argument("--h", type=int, required=True)
    p.add_argument("--cap", type=int, default=oracle.DEFAULT_CAP,
                   help=f"state budget (default {oracle.DEFAULT_CAP})")
    p.add_argument("--all", action="store_true",
                   help="list every magic labeling with its conformance status")
    _add_format(p)
    p.set_defaults(func=_cmd_oracle)

    p = sub.add_parser("atlas", help="sweep trees and compare all three verdict routes")
    p.add_argument("--n-max", type=int, default=6, help="exhaust all labeled trees up to this size")
    p.add_argument("--h-max", type=int, default=5)
    p.add_argument("--cap", type=int, default=oracle.DEFAULT_CAP)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--random", type=int, default=0,
                   help="additionally sweep this many seeded random larger trees")
    _add_format(p)
    p.set_defaults(func=_cmd_atlas)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except FileNotFoundError as exc:
        print(f"treemagic: cannot read input: {exc}", file=sys.stderr)
        return USAGE_EXIT
    except TreeMagicError as exc:
        print(f"treemagic: {exc}", file=sys.stderr)
        return USAGE_EXIT
    except ValueError as exc:
        print(f"treemagic: {exc}", file=sys.stderr)
        return USAGE_EXIT


if __name__ == "__main__":
    raise SystemExit(main())
