"""Command-line entry point: ``pccycles <subcommand> ...``.

Exit codes: 0 success, 2 error.  ``decide`` returns 0 when the graph has no
PC cycle and 1 when it has one.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys

from . import construct, core, detect, search, transform

__all__ = ["main", "run", "to_dot", "export_dot"]

PALETTE = [
    "red", "blue", "darkgreen", "orange", "purple", "brown",
    "magenta", "cyan", "gold", "gray40", "olivedrab", "navy",
]
_STYLES = ["solid", "dashed", "dotted", "bold"]


class UsageError(Exception):
    pass


def to_dot(G: core.AnyGraph, name: str = "G") -> str:
    """DOT text for ``G``; every edge is labelled with its color index."""
    kind, op = ("digraph", "->") if G.directed else ("graph", "--")
    lines = [f"{kind} {name} {{"]
    for v in range(G.n):
        lines.append(f"  {v};")
    for u, v, k in G.edges:
        if G.c <= len(PALETTE):
            style = f'color="{PALETTE[k - 1]}", style={_STYLES[(k - 1) % len(_STYLES)]}, '
        else:
            style = ""
        lines.append(f'  {u} {op} {v} [{style}label="{k}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def export_dot(G: core.AnyGraph, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(to_dot(G))


def _emit(args, payload: dict, text: str) -> None:
    if args.json:
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        print(text)


def _int_list(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise UsageError(f"expected comma-separated integers, got {text!r}") from None


def _positive(name: str, value: int, low: int = 1) -> None:
    if value < low:
        raise UsageError(f"--{name} must be >= {low}, got {value}")


def cmd_gen(args) -> int:
    _positive("base", args.base)
    p = construct.ParamVector.parse(args.params)
    G = construct.build(p, args.base)
    core.write_pcg(G, args.output)
    _emit(args, {"file": args.output, "n": G.n, "c": G.c, "edges": G.m},
          f"wrote {args.output}: n={G.n} c={G.c} edges={G.m}")
    return 0


def cmd_order(args) -> int:
    _positive("base", args.base)
    p = construct.ParamVector.parse(args.params)
    n = construct.order_of(p, args.base)
    m = construct.edge_count_of(p, args.base)
    payload = {"params": list(p.p), "base": args.base, "c": p.c, "s": p.s,
               "order": n, "edges": m}
    if p.s >= 1:
        bound = construct.lemma_order_bound(p.s, p.c)
        literal = construct.literal_lemma_bound(p.s)
        payload.update(bound_s_c_pow_s=bound, bound_s_2_pow_s=literal,
                       within_s_c_pow_s=n <= bound, within_s_2_pow_s=n <= literal)
        text = (f"order {n}\nedges {m}\ns*c^s {bound}\ns*2^s {literal}"
                + ("" if n <= literal else "  (exceeded by the order)"))
    else:
        text = f"order {n}\nedges {m}\ns*c^s n/a (s=0)\ns*2^s n/a (s=0)"
    _emit(args, payload, text)
    return 0


def cmd_check(args) -> int:
    G = core.read_pcg(args.file)
    table = core.degree_table(G)
    d = core.delta_mon(G) if G.n else None
    payload = {"directed": G.directed, "n": G.n, "c": G.c, "edges": G.m,
               "delta_mon": d, "degree_table": table.tolist()}
    label = "delta_out_mon" if G.directed else "delta_mon"
    _emit(args, payload,
          f"{'digraph' if G.directed else 'graph'} n={G.n} c={G.c} edges={G.m} {label}={d}")
    return 0


def cmd_decide(args) -> int:
    G = core.read_pcg(args.file)
    if G.directed:
        res = detect.find_pc_cycle_directed(G, max_n=args.max_n or detect.DEFAULT_MAX_N_DIRECTED)
    else:
        res = detect.decide_pc_undirected(
            G, want_cycle_certificate=args.certificate,
            max_n=args.max_n or detect.DEFAULT_MAX_N_UNDIRECTED)
    lines = ["PC cycle exists" if res.has_pc_cycle else "no PC cycle"]
    if args.certificate:
        if res.cycle is not None:
            lines.append("cycle: " + res.cycle.format())
        elif res.certificate_declined:
            lines.append("verdict without cycle certificate (size limit)")
        elif isinstance(res.certificate, detect.EliminationCertificate):
            order = " ".join(str(z) for z, _ in res.certificate.steps)
            lines.append(f"elimination order: {order}")
    _emit(args, res.to_dict(), "\n".join(lines))
    return 1 if res.has_pc_cycle else 0


def cmd_transform(args) -> int:
    G = core.read_pcg(args.input)
    if args.kind == "double":
        out = transform.double(G)
    else:
        out = transform.merge_colors(G)
    core.write_pcg(out, args.output)
    _emit(args, {"file": args.output, "n": out.n, "c": out.c, "edges": out.m},
          f"wrote {args.output}: n={out.n} c={out.c} arcs={out.m}")
    return 0


def cmd_search(args) -> int:
    _positive("n", args.n)
    _positive("c", args.c, 2)
    _positive("threads", args.threads)
    rep = search.max_pcfree_delta(args.n, args.c, directed=args.directed,
                                  threads=args.threads, force=args.force)
    out = args.output or f"witness_{rep.mode[0]}_n{rep.n}_c{rep.c}.pcg"
    core.write_pcg(rep.witness, out)
    payload = rep.to_dict()
    payload["witness_file"] = out
    text = (f"n={rep.n} c={rep.c} mode={rep.mode}\nmax_delta={rep.max_delta}\n"
            f"d_exact={rep.d_exact}\nexamined={rep.examined}\nwitness={out}")
    _emit(args, payload, text)
    return 0


def cmd_conjecture(args) -> int:
    G = core.read_pcg(args.file)
    rep = search.conjecture_report(G, max_n_for_longest=args.max_n)
    d = rep.to_dict()
    _emit(args, d, "\n".join(f"{k}: {v}" for k, v in d.items()))
    return 0


def cmd_bounds(args) -> int:
    _positive("c", args.c, 2)
    payload = {"n": args.n, "c": args.c, "c0": args.c0}
    lines = []
    try:
        lb = construct.lower_bound_d(args.n, args.c)
        payload["lower_bound_d"] = lb
        lines.append(f"lower_bound_d {lb:.6f}")
    except core.DomainError as exc:
        payload["lower_bound_d"] = None
        lines.append(f"lower_bound_d n/a ({exc})")
    lo, hi = construct.gsy_bounds(args.n, args.c_low, args.c_high)
    up = construct.merged_upper_bound(args.n, args.c, args.c0)
    payload.update(gsy_lower=lo, gsy_upper=hi, merged_upper_bound=up)
    lines += [f"gsy_bounds {lo:.6f} {hi:.6f}", f"merged_upper_bound {up:.6f}"]
    _emit(args, payload, "\n".join(lines))
    return 0


def cmd_verify(args) -> int:
    rep = search.verify_suite(args.max_sum, _int_list(args.colors), _int_list(args.bases),
                              dump_dir=args.dump_dir)
    text = rep.table()
    if rep.failures:
        text += "\n" + "\n".join(f"FAIL {f['check']} {f['case']} -> {f.get('file')}"
                                 for f in rep.failures)
    _emit(args, rep.to_dict(), text)
    return 0 if rep.ok else 1


def cmd_export_dot(args) -> int:
    G = core.read_pcg(args.file)
    export_dot(G, args.output)
    _emit(args, {"file": args.output}, f"wrote {args.output}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")

    parser = argparse.ArgumentParser(prog="pccycles", description=__doc__.splitlines()[0])
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", parents=[common], help="build G(p1,...,pc)")
    p.add_argument("--params", required=True)
    p.add_argument("--base", type=int, default=1)
    p.add_argument("-o", "--output", required=True)
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("order", parents=[common], help="order/edge recurrences and bounds")
    p.add_argument("--params", required=True)
    p.add_argument("--base", type=int, default=1)
    p.set_defaults(func=cmd_order)

    p = sub.add_parser("check", parents=[common], help="validate a .pcg file and report degrees")
    p.add_argument("file")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("decide", parents=[common], help="decide PC-cycle existence")
    p.add_argument("file")
    p.add_argument("--certificate", action="store_true")
    p.add_argument("--max-n", type=int, default=None)
    p.set_defaults(func=cmd_decide)

    p = sub.add_parser("transform", parents=[common], help="double or merge colors")
    p.add_argument("kind", choices=["double", "merge"])
    p.add_argument("input")
    p.add_argument("-o", "--output", required=True)
    p.set_defaults(func=cmd_transform)

    p = sub.add_parser("search", parents=[common], help="exact small-order extremal search")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--c", type=int, required=True)
    p.add_argument("--directed", action="store_true")
    p.add_argument("--threads", type=int, default=1)
    p.add_argument("--force", action="store_true")
    p.add_argument("-o", "--output", default=None, help="witness .pcg path")
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("conjecture", parents=[common], help="check the PC-cycle length conjecture")
    p.add_argument("file")
    p.add_argument("--max-n", type=int, default=10)
    p.set_defaults(func=cmd_conjecture)

    p = sub.add_parser("bounds", parents=[common], help="evaluate the closed-form bounds")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--c", type=int, required=True)
    p.add_argument("--c0", type=float, default=0.0)
    p.add_argument("--c-low", type=float, default=0.0)
    p.add_argument("--c-high", type=float, default=0.0)
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("verify", parents=[common], help="run the invariant suite")
    p.add_argument("--max-sum", type=int, default=4)
    p.add_argument("--colors", default="2,3")
    p.add_argument("--bases", default="1")
    p.add_argument("--dump-dir", default="verify_failures")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("export-dot", parents=[common], help="write Graphviz DOT")
    p.add_argument("file")
    p.add_argument("-o", "--output", required=True)
    p.set_defaults(func=cmd_export_dot)
    return parser


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code == 0 else 2
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING)
    try:
        return args.func(args)
    except (core.PcgError, UsageError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run())
