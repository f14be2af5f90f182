"""Command line interface.

Trees are given as parent lists (``-,0,1,1``), shorthands (``S:3``,
``M:2,1:3``), canonical keys (``((()()))``) or paths to files holding one
tree per line.  Exit codes: 0 success, 2 invalid input, 3 a structural
property failed to hold.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path
from typing import Iterable, Optional

from . import __version__
from .builders import parse_shorthand
from .core import (
    CbckAlgebra,
    build_algebra,
    check_height_identity,
    check_width_identity,
    height_of,
    maximal_elements,
    branching_elements,
    parse_tree,
    verify_axioms,
    width_of,
)
from .errors import CbckError, PropertyViolation, ValidationError
from .iso import algebra_from_key, key_name, sort_keys, tree_from_key


# -- input -----------------------------------------------------------------

def parse_algebra(text: str) -> CbckAlgebra:
    text = text.strip()
    if text.startswith(("S:", "M:")):
        return parse_shorthand(text)
    if text.startswith("("):
        return build_algebra(tree_from_key(text))
    return build_algebra(parse_tree(text))


def read_inputs(args: Iterable[str]) -> list[tuple[str, CbckAlgebra]]:
    """Expand file arguments and parse every tree, reporting line numbers."""
    out = []
    for arg in args:
        path = Path(arg)
        if path.is_file():
            for lineno, line in enumerate(path.read_text().splitlines(), 1):
                line = line.split("#", 1)[0].strip()
                if not line:
                    continue
                try:
                    out.append((line, parse_algebra(line)))
                except ValidationError as exc:
                    raise type(exc)(f"{path}:{lineno}: {exc}") from None
        else:
            out.append((arg, parse_algebra(arg)))
    return out


def read_one(arg: str) -> tuple[str, CbckAlgebra]:
    items = read_inputs([arg])
    if len(items) != 1:
        raise ValidationError(f"expected exactly one tree in {arg!r}, found {len(items)}")
    return items[0]


def read_variety(arg: str):
    from .varieties import variety_of

    parts = [p for p in arg.replace(";", "+").split("+") if p.strip()]
    return variety_of([a for _, a in read_inputs(parts)])


# -- payload helpers ---------------------------------------------------------

def algebra_summary(A: CbckAlgebra) -> dict:
    return {
        "key": A.key,
        "name": key_name(A.key),
        "tree": A.tree.to_text(),
        "size": len(A),
        "height": height_of(A),
        "width": width_of(A),
    }


def variety_summary(V) -> dict:
    from .varieties import n_generated

    return {
        "generators": list(V.generators),
        "names": [key_name(g) for g in V.generators],
        "n_generated": n_generated(V),
        "si_closure": sort_keys(V.si_closure),
    }


def emit(report: dict, as_json: bool, rows: list[list], header: list[str]) -> None:
    if as_json:
        print(json.dumps(report, indent=2, sort_keys=True))
        return
    print("\t".join(header))
    for row in rows:
        print("\t".join(str(c) for c in row))


def make_report(command: str, inputs, payload: dict, started: float, timing: bool) -> dict:
    report = {"command": command, "input": inputs, "payload": payload, "version": __version__}
    if timing:
        report["elapsed_s"] = round(time.perf_counter() - started, 6)
    return report


# -- commands ----------------------------------------------------------------

def cmd_check(args) -> int:
    started = time.perf_counter()
    text, A = read_one(args.tree)
    ax = verify_axioms(A)
    heights = {n: check_height_identity(A, n) for n in range(1, args.max_n + 1)}
    widths = {n: check_width_identity(A, n) for n in range(1, args.max_n + 1)}
    payload = {
        **algebra_summary(A),
        "axioms": "pass" if ax else "fail",
        "axiom_witness": None if ax else {"identity": ax.identity, "args": list(ax.witness)},
        "branching": sorted(branching_elements(A)),
        "maximal": sorted(maximal_elements(A)),
        "height_identity": {str(n): v for n, v in heights.items()},
        "width_identity": {str(n): v for n, v in widths.items()},
    }
    report = make_report("check", text, payload, started, args.timing)
    rows = [
        ["axioms", payload["axioms"]],
        ["key", A.key],
        ["name", payload["name"]],
        ["height", payload["height"]],
        ["width", payload["width"]],
        ["branching", " ".join(map(str, payload["branching"]))],
        ["maximal", " ".join(map(str, payload["maximal"]))],
    ]
    rows += [[f"height_identity n={n}", v] for n, v in heights.items()]
    rows += [[f"width_identity n={n}", v] for n, v in widths.items()]
    emit(report, args.json, rows, ["field", "value"])
    return 0 if ax else 3


def cmd_subs(args) -> int:
    from .subalgebras import all_subalgebras, enumerate_subalgebras_bruteforce

    started = time.perf_counter()
    text, A = read_one(args.tree)
    subs = enumerate_subalgebras_bruteforce(A) if args.brute else all_subalgebras(A)
    subs.sort(key=lambda s: (len(s), s.sorted_carrier()))
    items = []
    for s in subs:
        item = {"carrier": s.sorted_carrier(), "key": s.key, "name": key_name(s.key)}
        if args.classified:
            item["kind"] = s.kind
            item["via_isomorphism"] = s.via_iso
        items.append(item)
    payload = {**algebra_summary(A), "method": "brute" if args.brute else "closure",
               "count": len(items), "subalgebras": items,
               "classes": sort_keys({s.key for s in subs})}
    report = make_report("subs", text, payload, started, args.timing)
    header = ["carrier", "key", "name"] + (["kind", "via_isomorphism"] if args.classified else [])
    rows = [[" ".join(map(str, i["carrier"])), i["key"], i["name"]]
            + ([i["kind"], i["via_isomorphism"]] if args.classified else []) for i in items]
    emit(report, args.json, rows, header)
    if args.classified and any(i["kind"] == "other" for i in items):
        return 3
    return 0


def cmd_covers(args) -> int:
    from .covers import cov_set, covers_of_si
    from .render import plot_panel, plot_tree, write_dot
    from .varieties import cover_oracle, variety_of

    started = time.perf_counter()
    text, A = read_one(args.tree)
    candidates = cov_set(A, args.mode, args.ties)
    covers = covers_of_si(A, args.mode, args.ties)
    V = variety_of([A])
    items = []
    for W in covers:
        item = variety_summary(W)
        item["describe"] = W.describe()
        if args.oracle:
            item["oracle"] = cover_oracle(V, W)
        items.append(item)
    payload = {
        **algebra_summary(A),
        "mode": args.mode,
        "ties": args.ties,
        "candidates": [{"key": c.key, "name": key_name(c.key),
                        "base": c.origin.base.key, "anchor": c.origin.anchor} for c in candidates],
        "covers": items,
    }
    if args.dot_dir:
        for i, c in enumerate(candidates):
            write_dot(Path(args.dot_dir) / f"cover_{i:02d}.dot", c.algebra, key_name(c.key))
        write_dot(Path(args.dot_dir) / "base.dot", A, key_name(A.key))
    if args.fig_dir:
        fig_dir = Path(args.fig_dir)
        plot_tree(fig_dir / "base.png", A, key_name(A.key))
        for i, c in enumerate(candidates):
            plot_tree(fig_dir / f"cover_{i:02d}.png", c.algebra, key_name(c.key))
        if candidates:
            plot_panel(fig_dir / "covers.png", [c.algebra for c in candidates],
                       [key_name(c.key) for c in candidates])
    report = make_report("covers", text, payload, started, args.timing)
    header = ["cover", "generators", "n_generated"] + (["oracle"] if args.oracle else [])
    rows = [[i["describe"], " ".join(i["generators"]), i["n_generated"]]
            + ([i["oracle"]] if args.oracle else []) for i in items]
    emit(report, args.json, rows, header)
    if args.oracle and not all(i["oracle"] for i in items):
        return 3
    return 0


def cmd_var(args) -> int:
    from .covers import covers_of_variety
    from .varieties import cover_oracle, includes, variety_of

    started = time.perf_counter()
    if args.trees and args.trees[0] == "cover-check":
        if len(args.trees) != 3:
            raise ValidationError("usage: var cover-check V W (trees joined with '+')")
        V, W = read_variety(args.trees[1]), read_variety(args.trees[2])
        if not includes(W, V) or V == W:
            verdict = False
        else:
            verdict = cover_oracle(V, W)
        payload = {"lower": variety_summary(V), "upper": variety_summary(W), "covers": verdict}
        report = make_report("var cover-check", args.trees[1:], payload, started, args.timing)
        emit(report, args.json, [["covers", verdict]], ["field", "value"])
        return 0
    inputs = read_inputs(args.trees)
    V = variety_of([a for _, a in inputs])
    payload = {**variety_summary(V), "describe": V.describe()}
    rows = [["generators", " ".join(V.generators)],
            ["names", V.describe()],
            ["n_generated", len(V.generators)],
            ["si_closure", " ".join(sort_keys(V.si_closure))]]
    if args.covers:
        found = covers_of_variety(V, args.method, args.ties)
        payload["covers"] = [{**variety_summary(W), "describe": W.describe()} for W in found]
        rows += [["cover", W.describe()] for W in found]
    report = make_report("var", [t for t, _ in inputs], payload, started, args.timing)
    emit(report, args.json, rows, ["field", "value"])
    return 0


def cmd_render(args) -> int:
    from .render import plot_tree, write_dot

    _, A = read_one(args.tree)
    highlight = [int(v) for v in args.highlight.split(",")] if args.highlight else []
    write_dot(args.out, A, key_name(A.key), highlight)
    print(args.out)
    if args.png:
        plot_tree(args.png, A, key_name(A.key), highlight)
        print(args.png)
    return 0


def _sweep_one(job: tuple[str, bool, str]) -> dict:
    from .sweeps import check_tree

    key, covers, ties = job
    return check_tree(key, covers=covers, ties=ties)


def cmd_sweep(args) -> int:
    from .enumerate import si_tree_keys_upto
    from .sweeps import failures

    keys = si_tree_keys_upto(args.max_nodes)
    jobs = [(k, args.covers, args.ties) for k in keys]
    if args.jobs > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            reports = list(pool.map(_sweep_one, jobs, chunksize=8))
    else:
        reports = [_sweep_one(j) for j in jobs]
    bad = [(r, failures(r)) for r in reports if failures(r)]
    if args.json:
        print(json.dumps({"command": "sweep", "max_nodes": args.max_nodes, "trees": len(reports),
                          "failures": [r for r, _ in bad], "version": __version__},
                         indent=2, sort_keys=True))
    else:
        print("key\tsize\tfailed_checks")
        for r, names in bad:
            print(f"{r['key']}\t{r['size']}\t{','.join(names)}")
        print(f"# {len(reports)} trees, {len(bad)} with failures", file=sys.stderr)
    return 3 if bad else 0


# -- parser ------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="cbck", description=__doc__.splitlines()[0])
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp):
        sp.add_argument("--json", action="store_true", help="print a JSON report")
        sp.add_argument("--timing", action="store_true", help="include elapsed time in the report")

    sp = sub.add_parser("check", help="build the algebra, verify axioms and identities")
    sp.add_argument("tree")
    sp.add_argument("--max-n", type=int, default=6)
    common(sp)
    sp.set_defaults(func=cmd_check)

    sp = sub.add_parser("subs", help="enumerate subalgebras")
    sp.add_argument("tree")
    sp.add_argument("--brute", action="store_true", help="test every subset (capped by CBCK_SIZE_CAP)")
    sp.add_argument("--classified", action="store_true", help="tag downset / divisor(k) / other")
    common(sp)
    sp.set_defaults(func=cmd_subs)

    sp = sub.add_parser("covers", help="covers of the variety generated by one algebra")
    sp.add_argument("tree")
    sp.add_argument("--mode", choices=["full", "reduced"], default="reduced")
    sp.add_argument("--ties", choices=["raise", "all"], default="raise",
                    help="what to do when the least new subalgebra is not unique")
    sp.add_argument("--oracle", action="store_true", help="confirm each cover by brute force")
    sp.add_argument("--dot-dir", help="write one DOT file per cover generator")
    sp.add_argument("--fig-dir", help="write PNG diagrams of the base and cover generators")
    common(sp)
    sp.set_defaults(func=cmd_covers)

    sp = sub.add_parser("var", help="varieties: generators, Si closure, covers; or 'cover-check V W'")
    sp.add_argument("trees", nargs="+")
    sp.add_argument("--covers", action="store_true", help="list covers of the variety")
    sp.add_argument("--method", choices=["recipe", "extension"], default="recipe")
    sp.add_argument("--ties", choices=["raise", "all"], default="raise")
    common(sp)
    sp.set_defaults(func=cmd_var)

    sp = sub.add_parser("render", help="write a DOT file (and optionally a PNG)")
    sp.add_argument("tree")
    sp.add_argument("-o", "--out", required=True)
    sp.add_argument("--png")
    sp.add_argument("--highlight", help="comma separated nodes to fill")
    sp.set_defaults(func=cmd_render)

    sp = sub.add_parser("sweep", help="exhaustive checks over all small single-atom trees")
    sp.add_argument("--max-nodes", type=int, default=7)
    sp.add_argument("--covers", action="store_true", help="also check covers with the oracle")
    sp.add_argument("--ties", choices=["raise", "all"], default="raise")
    sp.add_argument("--jobs", type=int, default=1)
    sp.add_argument("--json", action="store_true")
    sp.set_defaults(func=cmd_sweep)
    return p


def _protect_trees(argv: list[str]) -> list[str]:
    # argparse would read "-,0,1,1" as an option; "_" is an equivalent root marker
    return ["_" + a[1:] if a.startswith("-,") or a == "-" else a for a in argv]


def main(argv: Optional[list[str]] = None) -> int:
    argv = sys.argv[1:] if argv is None else argv
    args = build_parser().parse_args(_protect_trees(list(argv)))
    try:
        return args.func(args)
    except PropertyViolation as exc:
        print(f"property violation: {exc}", file=sys.stderr)
        return 3
    except ValidationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except CbckError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
