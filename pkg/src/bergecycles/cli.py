"""Command-line front end.

Exit codes: 0 success or verified, 1 a violation or counterexample was found
(the witness is printed), 2 invalid input, 3 search budget exceeded.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from fractions import Fraction
from pathlib import Path

from . import berge, extremal, fileio, graphs, hypergraph, sdrp
from .errors import BudgetExceeded, ConsistencyError, InvalidInputError, ParameterError
from .search import CONJECTURE, THEOREM, BoundParams, search_max_edges
from .verdict import VIOLATION

log = logging.getLogger("bergecycles")

EXIT_OK, EXIT_FOUND, EXIT_INPUT, EXIT_BUDGET = 0, 1, 2, 3


def _frac(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def _int_list(text: str) -> list[int]:
    """Parse ``3``, ``3,4`` or ``3-10`` into a list of integers."""
    out = []
    for part in text.split(","):
        if "-" in part[1:]:
            lo, hi = part.split("-", 1)
            out.extend(range(int(lo), int(hi) + 1))
        else:
            out.append(int(part))
    return out


def _emit(args, payload: dict, text: str) -> None:
    if args.format == "json":
        print(json.dumps(payload))
    else:
        print(text)


def _load_hyg(args) -> hypergraph.Hypergraph:
    return fileio.read_hyg(args.input)


def _load_graph(args) -> hypergraph.SimpleGraph:
    path = Path(args.input)
    if path.suffix == ".hyg":
        return hypergraph.shadow_graph(fileio.read_hyg(path))
    return fileio.read_elg(path)


def _verdict_exit(v) -> int:
    return EXIT_FOUND if v.status == VIOLATION else EXIT_OK


def cmd_shadow(args) -> int:
    H = _load_hyg(args)
    if args.complement:
        sets = sorted(hypergraph.shadow_complement(H))
    else:
        sets = sorted(hypergraph.shadow(H, args.p))
    _emit(args, {"p": 2 if args.complement else args.p, "complement": args.complement,
                 "sets": [list(s) for s in sets]},
          "\n".join(" ".join(map(str, s)) for s in sets))
    return EXIT_OK


def cmd_sdrp(args) -> int:
    H = _load_hyg(args)
    s, part = sdrp.saturated_sdrp(H)
    verdict = sdrp.verify_surplus(part)
    payload = sdrp.sdrp_to_json(s, part)
    payload["surplus"] = verdict.ok
    lines = [f"{x} {y} -> {' '.join(map(str, e))}" for (x, y), e in zip(s.pairs, s.assigned)]
    lines.append(f"# residual hyperedges: {len(part.residual_edges)}, surplus: {verdict.ok}")
    _emit(args, payload, "\n".join(lines))
    return EXIT_OK if verdict.ok else EXIT_FOUND


def cmd_blocks(args) -> int:
    G = _load_graph(args)
    dec = graphs.blocks(G)
    payload = {
        "blocks": [{"vertices": sorted(b.vertices), "edges": [list(e) for e in b.edges]}
                   for b in dec.blocks],
        "cut_vertices": sorted(dec.cut_vertices),
    }
    lines = [f"block {i}: {' '.join(map(str, sorted(b.vertices)))}" for i, b in enumerate(dec.blocks)]
    lines.append("cut vertices: " + " ".join(map(str, sorted(dec.cut_vertices))))
    _emit(args, payload, "\n".join(lines))
    return EXIT_OK


def cmd_core(args) -> int:
    G = _load_graph(args)
    tr = graphs.disintegrate(G, args.alpha)
    payload = {"alpha": tr.alpha, "removal_order": [list(x) for x in tr.removal_order],
               "core": sorted(tr.core_vertices)}
    _emit(args, payload, f"core ({args.alpha + 1}-core): {' '.join(map(str, sorted(tr.core_vertices)))}")
    return EXIT_OK


def cmd_berge_cycle(args) -> int:
    H = _load_hyg(args)
    length, w = berge.longest_berge_cycle(H, args.max_n, args.max_edges)
    payload = {"length": length,
               "base": list(w.base) if w else [],
               "edges": [list(e) for e in w.hyperedges] if w else [],
               "exhaustive": True}
    if args.k is not None:
        payload["geq_k"] = length >= args.k
    _emit(args, payload, f"longest Berge cycle: {length}" + (f" (base {' '.join(map(str, w.base))})" if w else ""))
    return EXIT_OK


def cmd_berge_path(args) -> int:
    H = _load_hyg(args)
    length, w = berge.longest_berge_path(H, args.max_n, args.max_edges)
    payload = {"length": length, "base": list(w.base), "edges": [list(e) for e in w.hyperedges],
               "exhaustive": True}
    if args.k is not None:
        payload["geq_k"] = length >= args.k
    _emit(args, payload, f"longest Berge path: {length} (base {' '.join(map(str, w.base))})")
    return EXIT_OK


def _spec_from_args(args) -> extremal.BlockTreeSpec:
    if args.attach:
        att = tuple(tuple(int(x) for x in item.split(":")) for item in args.attach.split(","))
        spec = extremal.BlockTreeSpec(args.k, args.r, att)
    elif args.pattern == "star":
        spec = extremal.BlockTreeSpec.star(args.k, args.r, args.p)
    else:
        spec = extremal.BlockTreeSpec.chain(args.k, args.r, args.p)
    spec.validate()
    return spec


def cmd_gen_blocktree(args) -> int:
    spec = _spec_from_args(args)
    H = extremal.build_block_tree(spec)
    comment = f"block tree k={spec.k} r={spec.r} p={spec.p} attachments={list(spec.attachments)}"
    text = fileio.format_hyg(H, comment)
    if args.out:
        Path(args.out).write_text(text)
        _emit(args, {"path": args.out, "n": H.n, "edges": len(H)}, f"wrote {args.out}: n={H.n}, {len(H)} edges")
    else:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_verify_bound(args) -> int:
    H = _load_hyg(args)
    v = extremal.verify_cycle_bound(H, args.k, args.max_n, args.max_edges)
    text = f"{v.status}: e(H)={len(H)} bound={v.details['bound']}" + (" (equality)" if v.equality else "")
    if v.equality:
        text += f"; block characterization {'confirmed' if v.details['characterization']['holds'] else 'FAILED'}"
    _emit(args, v.to_json(), text)
    return _verdict_exit(v)


def cmd_verify_paths(args) -> int:
    H = _load_hyg(args)
    verdicts = []
    if args.k >= H.r + 3:
        verdicts.append(extremal.check_path_bounds(H, args.k, args.mode, args.max_n, args.max_edges))
    verdicts.append(extremal.verify_gkl_path_bound(H, args.k, args.max_n, args.max_edges))
    _emit(args, {"verdicts": [v.to_json() for v in verdicts]},
          "\n".join(f"{v.claim}: {v.status}" + (" (equality)" if v.equality else "") for v in verdicts))
    return EXIT_FOUND if any(v.status == VIOLATION for v in verdicts) else EXIT_OK


def cmd_search_max(args) -> int:
    params = BoundParams(args.n, args.r, args.k, CONJECTURE if args.conjecture else THEOREM)
    rep = search_max_edges(params, args.max_classes, args.time_limit, args.jobs)
    payload = rep.to_json(include_time=not args.no_time)
    text = (f"max edges {rep.max_edges_found} (bound {_frac(rep.bound)}, "
            f"{'within' if rep.within_bound else 'EXCEEDS'}), exhaustive={rep.exhaustive}, "
            f"classes={rep.isomorphism_classes_visited}\n" + payload["witness_hyg"].rstrip())
    _emit(args, payload, text)
    if not rep.within_bound:
        return EXIT_FOUND
    return EXIT_OK if rep.exhaustive else EXIT_BUDGET


def cmd_bounds_table(args) -> int:
    rows = extremal.bounds_table(_int_list(args.r), _int_list(args.k))
    if args.csv:
        sys.stdout.write(extremal.bounds_table_csv(rows))
    else:
        _emit(args, {"rows": [{"k": k, "r": r, "C_r(k)": _frac(c)} for k, r, c in rows]},
              "\n".join(f"C_{r}({k}) = {_frac(c)}" for k, r, c in rows))
    return EXIT_OK


def cmd_degree_inequality(args) -> int:
    verdicts = [extremal.verify_degree_inequality(k, r) for r in _int_list(args.r) for k in _int_list(args.k)
                if k >= r + 2]
    if not verdicts:
        raise ParameterError("no (k, r) with k >= r + 2 requested")
    _emit(args, {"verdicts": [v.to_json() for v in verdicts]},
          "\n".join(f"k={v.details['k']} r={v.details['r']}: {v.status} "
                    f"(max lhs {v.details['max_lhs']} vs {v.details['bound']})" for v in verdicts))
    return EXIT_FOUND if any(v.status == VIOLATION for v in verdicts) else EXIT_OK


def cmd_shadow_inequality(args) -> int:
    H = _load_hyg(args)
    v = extremal.verify_shadow_inequality(H, args.k)
    _emit(args, v.to_json(), f"{v.status}: |H|+uncovered = {v.details['lhs']} <= a_r(w) = {v.details['a_r_w']}"
          + (" (equality)" if v.equality else ""))
    return _verdict_exit(v)


def cmd_kopylov(args) -> int:
    G = _load_graph(args)
    w = graphs.kopylov_witness(G, args.k, saturate=args.saturate)
    payload = {"case": w.case, "k": w.k, "t": w.t, "s": w.s,
               "core": sorted(w.t_trace.core_vertices),
               "t_removal_order": [list(x) for x in w.t_trace.removal_order]}
    if w.core_trace is not None:
        payload["core_removal_order"] = [list(x) for x in w.core_trace.removal_order]
    _emit(args, payload, f"case {w.case}" + (f", clique core of size {w.s}" if w.case == "core" else ""))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--seed", type=int, default=0, help="seed for randomized routines")
    common.add_argument("--max-n", type=int, default=berge.DEFAULT_MAX_N)
    common.add_argument("--max-edges", type=int, default=berge.DEFAULT_MAX_EDGES)
    common.add_argument("-v", "--verbose", action="store_true")

    parser = argparse.ArgumentParser(prog="bergecycles", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_text, inp=True, aliases=()):
        p = sub.add_parser(name, parents=[common], help=help_text, aliases=list(aliases))
        if inp:
            p.add_argument("--in", dest="input", required=True)
        p.set_defaults(func=func)
        return p

    p = add("shadow", cmd_shadow, "p-shadow or uncovered pairs of a hypergraph")
    p.add_argument("--p", type=int, default=2)
    p.add_argument("--complement", action="store_true")
    add("sdrp", cmd_sdrp, "SDRP with positive-surplus residual")
    add("blocks", cmd_blocks, "block decomposition of a graph (.elg) or 2-shadow (.hyg)")
    p = add("core", cmd_core, "alpha-disintegration core")
    p.add_argument("--alpha", type=int, required=True)
    p = add("berge-cycle", cmd_berge_cycle, "longest Berge cycle")
    p.add_argument("--k", type=int)
    p = add("berge-path", cmd_berge_path, "longest Berge path")
    p.add_argument("--k", type=int)
    p = add("gen-blocktree", cmd_gen_blocktree, "extremal block-tree construction", inp=False)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--p", type=int, default=1)
    p.add_argument("--pattern", choices=("chain", "star"), default="chain")
    p.add_argument("--attach", help="explicit attachments 'block:local,...' for blocks 1..p-1")
    p.add_argument("--out")
    p = add("verify-bound", cmd_verify_bound, "check the long-Berge-cycle edge bound")
    p.add_argument("--k", type=int, required=True)
    p = add("verify-paths", cmd_verify_paths, "check the Berge-path edge bounds")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--mode", choices=("auto", "connected", "general"), default="auto")
    p = add("search-max", cmd_search_max, "exhaustive maximum edge search", inp=False)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--conjecture", action="store_true", help="allow k = r + 2 (report only)")
    p.add_argument("--max-classes", type=int)
    p.add_argument("--time-limit", type=float)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--no-time", action="store_true", help="report elapsed_ms as 0")
    p = add("bounds-table", cmd_bounds_table, "table of C_r(k)", inp=False)
    p.add_argument("--r", required=True, help="e.g. 3, 3,4 or 3-6")
    p.add_argument("--k", required=True)
    p.add_argument("--csv", action="store_true")
    p = add("degree-inequality", cmd_degree_inequality, "exhaustive check of the degree inequality", inp=False,
            aliases=["lemma9"])
    p.add_argument("--r", required=True)
    p.add_argument("--k", required=True)
    p = add("shadow-inequality", cmd_shadow_inequality, "edges plus uncovered pairs inequality",
            aliases=["lemma10"])
    p.add_argument("--k", type=int)
    p = add("kopylov", cmd_kopylov, "structure witness for 2-connected graphs without long cycles")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--saturate", action="store_true")
    return parser


def run(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING,
                        format="%(levelname)s: %(message)s", stream=sys.stderr)
    budgets = {name: getattr(args, name, None) for name in ("max_n", "max_edges", "max_classes", "time_limit", "jobs")}
    bad = [name for name, value in budgets.items() if value is not None and value <= 0]
    if bad:
        log.error("budgets must be positive: %s", ", ".join("--" + b.replace("_", "-") for b in bad))
        return EXIT_INPUT
    try:
        return args.func(args)
    except (InvalidInputError, ParameterError, OSError) as exc:
        log.error("%s", exc)
        return EXIT_INPUT
    except BudgetExceeded as exc:
        log.error("budget exceeded: %s", exc)
        return EXIT_BUDGET
    except ConsistencyError as exc:
        log.error("consistency failure: %s", exc)
        return EXIT_FOUND


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
