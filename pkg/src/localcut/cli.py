"""Command-line interface.

Every command prints a machine-readable JSON report to stdout and a short
human summary to stderr.  Exit codes: 0 success, 2 precondition violation,
1 unexpected error.  Runs are deterministic in the master seed: per-trial
seeds are derived with ``derive_seed`` so results do not depend on
execution order or worker count.
"""

import argparse
import json
import sys
from concurrent.futures import ProcessPoolExecutor

from . import __version__
from .generators import (
    circulant,
    clique,
    cycle,
    fig5_instance,
    low_degree_circulant,
    pendant_instance,
    planted_far_edge,
    planted_far_edge_bounded,
    planted_far_vertex,
    planted_far_vertex_bounded,
    random_digraph,
    random_undirected,
    two_clique_instance,
    undirected_clique,
)
from .global_vc import exact_vertex_connectivity_search, vertex_connectivity_check
from .graph import (
    GraphFormatError,
    PreconditionError,
    graph_stats,
    load_graph,
    serialize_graph,
)
from .kecs import max_kecs_directed, max_kecs_undirected
from .kernel import KERNEL_IMPL
from .local_ec import local_ec, local_ec_alt, local_ec_boosted
from .local_vc import gap_local_vc, local_vc
from .oracle import (
    brute_max_kecs,
    exact_edge_connectivity,
    exact_vertex_connectivity,
)
from .rng import derive_seed
from .testing import (
    TesterConfig,
    test_k_edge_bounded,
    test_k_edge_unbounded,
    test_k_vertex_bounded,
    test_k_vertex_unbounded,
)

SCHEMA_VERSION = 1


def _report(command, payload):
    return {
        "schema": SCHEMA_VERSION,
        "tool": "localcut",
        "version": __version__,
        "kernel": KERNEL_IMPL,
        "command": command,
        "result": payload,
    }


def _emit(args, command, payload, summary):
    doc = _report(command, payload)
    out = json.dumps(doc, indent=None if args.compact else 2, sort_keys=True)
    if getattr(args, "json_out", None):
        with open(args.json_out, "w") as handle:
            handle.write(out + "\n")
    else:
        print(out)
    print(summary, file=sys.stderr)
    return 0


def _load(path):
    if path == "-":
        from .graph import parse_graph
        return parse_graph(sys.stdin.read())
    return load_graph(path)


GENERATORS = {
    "clique": lambda a: clique(a.n),
    "uclique": lambda a: undirected_clique(a.n),
    "cycle": lambda a: cycle(a.n, undirected=a.undirected),
    "circulant": lambda a: circulant(a.n, a.offsets, undirected=a.undirected),
    "pendant": lambda a: pendant_instance(core=a.n if a.n else 30),
    "two-clique": lambda a: two_clique_instance(),
    "fig5": lambda a: fig5_instance(),
    "low-degree-circulant": lambda a: low_degree_circulant(a.k, n=a.n or None),
    "random-digraph": lambda a: random_digraph(a.n, a.m, a.seed),
    "random-undirected": lambda a: random_undirected(a.n, a.m, a.seed),
    "planted-far-edge": lambda a: planted_far_edge(k=a.k).graph,
    "planted-far-vertex": lambda a: planted_far_vertex(k=a.k).graph,
    "planted-far-edge-bounded":
        lambda a: planted_far_edge_bounded(k=a.k).graph,
    "planted-far-vertex-bounded":
        lambda a: planted_far_vertex_bounded(k=a.k).graph,
}


def cmd_gen(args):
    graph = GENERATORS[args.family](args)
    text = serialize_graph(graph)
    if args.output and args.output != "-":
        with open(args.output, "w") as handle:
            handle.write(text)
    else:
        sys.stdout.write(text)
    stats = graph_stats(graph)
    print(f"generated {args.family}: n={stats['n']} m={stats['m']}",
          file=sys.stderr)
    return 0


def _cut_payload(out):
    return {
        "found": out.found,
        "status": out.status,
        "cut_value": out.cut_value,
        "cut_side": sorted(out.cut_side) if out.found else None,
        "queries": out.queries,
        "marked": out.marked,
        "guarantee_void": out.guarantee_void,
    }


def cmd_local_ec(args):
    graph = _load(args.graph)
    seed = derive_seed(args.seed, 0)
    if args.variant == "alt":
        out = local_ec_alt(graph, args.x, args.nu, args.k,
                           eps=args.eps, seed=seed, strict=not args.relaxed)
    elif args.reps > 1:
        out = local_ec_boosted(graph, args.x, args.nu, args.k, args.gamma,
                               reps=args.reps, seed=seed,
                               strict=not args.relaxed)
    else:
        out = local_ec(graph, args.x, args.nu, args.k, args.gamma,
                       seed=seed, strict=not args.relaxed)
    payload = _cut_payload(out)
    summary = (f"local-ec x={args.x} k={args.k}: "
               + (f"cut of size {out.cut_value}" if out.found
                  else f"bot ({out.status})"))
    return _emit(args, "local-ec", payload, summary)


def cmd_local_vc(args):
    graph = _load(args.graph)
    seed = derive_seed(args.seed, 0)
    fn = gap_local_vc if args.gap else local_vc
    out = fn(graph, args.x, args.nu, args.k, args.gamma,
             seed=seed, strict=not args.relaxed)
    payload = {
        "found": out.found,
        "status": out.status,
        "cut_value": out.cut_value,
        "triple": ([sorted(out.triple.left), sorted(out.triple.cut),
                    sorted(out.triple.right)] if out.found else None),
        "queries": out.queries,
        "marked": out.marked,
        "guarantee_void": out.guarantee_void,
    }
    summary = (f"local-vc x={args.x} k={args.k}: "
               + (f"separator of size {out.cut_value}" if out.found
                  else f"bot ({out.status})"))
    return _emit(args, "local-vc", payload, summary)


def cmd_vc(args):
    graph = _load(args.graph)
    seed = derive_seed(args.seed, 0)
    if args.k is None:
        kappa, triple = exact_vertex_connectivity_search(
            graph, seed, mode=args.mode)
        payload = {"kappa": kappa}
        if triple is not None:
            payload["separator"] = sorted(triple.cut)
        summary = f"vertex connectivity {kappa}"
    else:
        verdict = vertex_connectivity_check(graph, args.k, seed,
                                            mode=args.mode)
        payload = {
            "k": args.k,
            "connected": verdict.connected,
            "mode": verdict.mode,
            "separator": (sorted(verdict.triple.cut)
                          if verdict.triple is not None else None),
        }
        summary = (f"{args.k}-vertex-connected" if verdict.connected
                   else f"separator of size {len(verdict.triple.cut)}")
    return _emit(args, "vc", payload, summary)


def cmd_kecs(args):
    graph = _load(args.graph)
    seed = derive_seed(args.seed, 0)
    if graph.undirected_origin and not args.directed:
        res = max_kecs_undirected(graph, args.k, seed)
    else:
        res = max_kecs_directed(graph, args.k, seed)
    payload = {
        "k": args.k,
        "parts": [list(p) for p in res.parts],
        "local_cuts": res.local_cuts,
        "global_cuts": res.global_cuts,
    }
    summary = f"{len(res.parts)} maximal {args.k}-edge-connected parts"
    return _emit(args, "kecs", payload, summary)


def cmd_test_conn(args):
    graph = _load(args.graph)
    cfg = TesterConfig(k=args.k, eps=args.eps, d=args.degree_bound,
                       mean_degree=args.mean_degree,
                       simple_graph=args.simple, strict=args.strict)
    table = {
        ("edge", False): test_k_edge_unbounded,
        ("vertex", False): test_k_vertex_unbounded,
        ("edge", True): test_k_edge_bounded,
        ("vertex", True): test_k_vertex_bounded,
    }
    fn = table[(args.property, args.degree_bound is not None)]
    verdict = fn(graph, cfg, derive_seed(args.seed, 0))
    witness = None
    if verdict.witness is not None:
        if verdict.witness_kind == "vertex":
            witness = [sorted(verdict.witness.left),
                       sorted(verdict.witness.cut),
                       sorted(verdict.witness.right)]
        else:
            witness = sorted(verdict.witness)
    payload = {
        "k": args.k,
        "eps": args.eps,
        "property": args.property,
        "model": "bounded" if args.degree_bound is not None else "unbounded",
        "accepted": verdict.accepted,
        "witness_kind": verdict.witness_kind,
        "witness": witness,
        "queries": verdict.queries,
        "budget": verdict.budget,
        "note": verdict.note,
    }
    summary = ("accepted" if verdict.accepted
               else f"rejected ({verdict.witness_kind} witness)")
    return _emit(args, "test-conn", payload,
                 f"test-conn {args.property} k={args.k}: {summary}, "
                 f"{verdict.queries}/{verdict.budget} queries")


def cmd_oracle(args):
    graph = _load(args.graph)
    payload = {}
    if args.what in ("edge", "all"):
        lam, _ = exact_edge_connectivity(graph)
        payload["edge_connectivity"] = lam
    if args.what in ("vertex", "all"):
        kappa, cut = exact_vertex_connectivity(graph)
        payload["vertex_connectivity"] = kappa
        payload["vertex_cut"] = sorted(cut) if cut is not None else None
    if args.what == "kecs":
        parts = brute_max_kecs(graph, args.k)
        payload["parts"] = [list(p) for p in parts]
    summary = ", ".join(f"{key}={value}" for key, value in payload.items()
                        if not isinstance(value, list))
    return _emit(args, "oracle", payload, summary or "oracle done")


def _one_trial(payload):
    path, x, k, nu, gamma, seed, index = payload
    graph = _load(path)
    out = local_ec_boosted(graph, x, nu, k, gamma, reps=1,
                           seed=derive_seed(seed, index), strict=False)
    return index, out.found, out.cut_value, out.queries


def cmd_trials(args):
    graph = _load(args.graph)
    jobs = [(args.graph, args.x, args.k, args.nu, args.gamma, args.seed, i)
            for i in range(args.trials)]
    if args.parallel > 1:
        with ProcessPoolExecutor(max_workers=args.parallel) as pool:
            rows = sorted(pool.map(_one_trial, jobs))
    else:
        rows = [_one_trial(job) for job in jobs]
    found = sum(1 for _, hit, _, _ in rows if hit)
    queries = [q for _, _, _, q in rows]
    payload = {
        "trials": args.trials,
        "found": found,
        "rate": found / args.trials,
        "mean_queries": sum(queries) / len(queries),
        "n": graph.n,
        "m": graph.m,
    }
    return _emit(args, "trials", payload,
                 f"{found}/{args.trials} detections "
                 f"({payload['rate']:.3f})")


def build_parser():
    parser = argparse.ArgumentParser(
        prog="localcut",
        description="Randomized local cut detection and its applications.")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--compact", action="store_true",
                        help="single-line JSON output")
    common.add_argument("--json-out", default=None, metavar="PATH",
                        help="write the JSON report to PATH instead of stdout")
    sub = parser.add_subparsers(dest="command", required=True,
                                parser_class=lambda **kw: argparse.ArgumentParser(
                                    parents=[common], **kw))

    p = sub.add_parser("gen", help="generate a benchmark graph")
    p.add_argument("family", choices=sorted(GENERATORS))
    p.add_argument("--n", type=int, default=0)
    p.add_argument("--m", type=int, default=0)
    p.add_argument("--k", type=int, default=2)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--offsets", type=int, nargs="+", default=[1, 2])
    p.add_argument("--undirected", action="store_true")
    p.add_argument("--output", "-o", default="-")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("local-ec", help="randomized local edge cut search")
    p.add_argument("graph")
    p.add_argument("--x", type=int, required=True)
    p.add_argument("--nu", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--gamma", type=int, default=0)
    p.add_argument("--eps", type=float, default=0.5,
                   help="budgeted-variant slack")
    p.add_argument("--variant", choices=["standard", "alt"],
                   default="standard")
    p.add_argument("--reps", type=int, default=1)
    p.add_argument("--relaxed", action="store_true",
                   help="skip strict parameter-range checks")
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_local_ec)

    p = sub.add_parser("local-vc", help="randomized local vertex cut search")
    p.add_argument("graph")
    p.add_argument("--x", type=int, required=True)
    p.add_argument("--nu", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--gamma", type=int, default=0)
    p.add_argument("--gap", action="store_true")
    p.add_argument("--relaxed", action="store_true")
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_local_vc)

    p = sub.add_parser("vc", help="global vertex connectivity")
    p.add_argument("graph")
    p.add_argument("--k", type=int, default=None,
                   help="decision version; omit to compute kappa exactly")
    p.add_argument("--mode", choices=["edge", "node"], default="edge")
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_vc)

    p = sub.add_parser("kecs",
                       help="maximal k-edge-connected subgraph partition")
    p.add_argument("graph")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--directed", action="store_true",
                   help="force the directed scheme")
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_kecs)

    p = sub.add_parser("test-conn", help="property-test k-connectivity")
    p.add_argument("graph")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--eps", type=float, required=True)
    p.add_argument("--property", choices=["edge", "vertex"], default="edge")
    p.add_argument("--degree-bound", type=int, default=None,
                   help="use the bounded-degree model with this bound")
    p.add_argument("--mean-degree", type=float, default=None)
    p.add_argument("--simple", action="store_true")
    p.add_argument("--strict", action="store_true")
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_test_conn)

    p = sub.add_parser("oracle", help="exact brute-force answers")
    p.add_argument("graph")
    p.add_argument("--what", choices=["edge", "vertex", "kecs", "all"],
                   default="all")
    p.add_argument("--k", type=int, default=2)
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("trials", help="repeated local-ec detection trials")
    p.add_argument("graph")
    p.add_argument("--x", type=int, default=0, help="seed vertex")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--nu", type=int, required=True)
    p.add_argument("--gamma", type=int, default=0)
    p.add_argument("--trials", type=int, default=100)
    p.add_argument("--parallel", type=int, default=1)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_trials)

    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (PreconditionError, GraphFormatError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
