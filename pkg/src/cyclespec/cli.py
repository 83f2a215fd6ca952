"""Command-line interface: graph6 in, JSON lines (or graph6) out.

Commands: gen, analyze, peel, trace, scan, verify. Every command except
gen emits one JSON envelope per line: {"tool_version", "command", "seed",
"payload"} with reals at 12 significant digits and all lists sorted
deterministically. Exit codes: 0 success (and no violations), 1
violations found by verify, 2 usage or parse errors.

Rationals are passed as numerator/denominator flag pairs so thresholds
like n/8 stay exact.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import __version__
from .cycles import cycle_spectrum
from .errors import DomainError, Graph6Error
from .graphs import GraphFamily, components, cut_vertices, generate, is_bipartite, parse_graph6, write_graph6
from .procedures import (
    PeelingTrace,
    ProofTrace,
    extremal_scan,
    peel_cut_vertices,
    peel_low_degree,
    proof_trace,
)
from .spectral import spectral_radius
from .verify import LEMMA_IDS, SuiteConfig, canonical_id, run_suite


def _round12(x: float) -> float:
    return float(f"{x:.12g}")


def _jsonable(obj):
    """Recursively convert values to JSON-safe types (12 significant digits)."""
    if isinstance(obj, bool) or obj is None:
        return obj
    if isinstance(obj, float):
        return _round12(obj)
    if isinstance(obj, int):
        return obj
    if isinstance(obj, Fraction):
        return {"num": obj.numerator, "den": obj.denominator}
    if isinstance(obj, str):
        return obj
    if isinstance(obj, dict):
        return {k: _jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_jsonable(v) for v in obj]
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def _emit(command: str, payload, seed=None):
    envelope = {
        "tool_version": __version__,
        "command": command,
        "seed": seed,
        "payload": _jsonable(payload),
    }
    sys.stdout.write(json.dumps(envelope, sort_keys=True, separators=(",", ":")) + "\n")


def _fail(message: str) -> int:
    print(f"error: {message}", file=sys.stderr)
    return 2


def _read_graph_lines(stdin):
    """Yield (line_number, Graph) from graph6 lines; blank lines skipped."""
    for lineno, raw in enumerate(stdin, start=1):
        line = raw.strip()
        if not line:
            continue
        try:
            yield lineno, parse_graph6(line)
        except (Graph6Error, DomainError) as exc:
            raise Graph6Error(f"line {lineno}: {exc}") from exc


# ---------------------------------------------------------------------------
# gen


def _cmd_gen(args) -> int:
    spec = GraphFamily(
        family=args.family,
        n=args.n,
        a=args.a,
        b=args.b,
        s=args.s,
        t=args.t,
        paths=tuple(args.paths) if args.paths else None,
        p=(args.p_num, args.p_den) if args.p_num is not None else None,
        seed=args.seed,
    )
    g = generate(spec)
    print(write_graph6(g))
    return 0


# ---------------------------------------------------------------------------
# analyze


def _analyze_payload(g, tol):
    sr = spectral_radius(g, tol)
    spec = cycle_spectrum(g)
    return {
        "graph6": write_graph6(g),
        "n": g.n,
        "m": g.m,
        "rho": sr.rho,
        "residual": sr.residual,
        "converged": sr.converged,
        "spectrum": sorted(spec.lengths),
        "girth": spec.girth,
        "circumference": spec.circumference,
        "ec": spec.ec,
        "oc": spec.oc,
        "hamiltonian": g.n >= 3 and g.n in spec.lengths,
        "bipartite": is_bipartite(g),
        "omega": len(components(g)),
        "cut_vertex_count": len(cut_vertices(g)),
    }


def _cmd_analyze(args) -> int:
    for lineno, g in _read_graph_lines(sys.stdin):
        try:
            payload = _analyze_payload(g, args.tol)
        except DomainError as exc:
            raise DomainError(f"line {lineno}: {exc}") from exc
        _emit("analyze", payload)
    return 0


# ---------------------------------------------------------------------------
# peel


def _trace_payload(trace: PeelingTrace):
    payload = {
        "kind": trace.kind,
        "threshold": trace.threshold,
        "removals": [[v, d] for v, d in trace.removals],
        "removal_count": len(trace.removals),
        "final_graph6": write_graph6(trace.final),
        "final_vertices": list(trace.final_vertices),
        "final_n": trace.final.n,
        "final_min_degree": trace.final_min_degree,
        "final_avg_degree": trace.final_avg_degree,
    }
    return payload


def _cmd_peel(args) -> int:
    for lineno, g in _read_graph_lines(sys.stdin):
        if args.kind == "low-degree":
            if args.threshold_num is not None:
                threshold = Fraction(args.threshold_num, args.threshold_den)
            else:
                threshold = Fraction(g.n, 8)
            trace = peel_low_degree(g, threshold)
        else:
            trace = peel_cut_vertices(g)
        _emit("peel", _trace_payload(trace))
    return 0


# ---------------------------------------------------------------------------
# trace


def _proof_payload(tr: ProofTrace):
    payload = {
        "n": tr.n,
        "eps": tr.eps,
        "rho": tr.rho,
        "hypothesis_bound": tr.hypothesis_bound,
        "hypothesis_holds": tr.hypothesis_holds,
        "omega_initial": tr.omega_initial,
        "edges_added": tr.edges_added,
        "claims": [
            {
                "claim_id": c.claim_id,
                "bound": c.bound,
                "observed": c.observed,
                "holds": c.holds,
                "applicable": c.applicable,
            }
            for c in tr.claims
        ],
        "low_degree": _trace_payload(tr.low_degree) if tr.low_degree else None,
        "cut_vertex": _trace_payload(tr.cut_vertex) if tr.cut_vertex else None,
        "window": None,
    }
    if tr.window is not None:
        payload["window"] = {
            "window_upper": tr.window.window_upper,
            "missing": list(tr.window.missing),
            "conclusion_holds": tr.window.conclusion_holds,
        }
    return payload


def _cmd_trace(args) -> int:
    eps = Fraction(args.eps_num, args.eps_den)
    for lineno, g in _read_graph_lines(sys.stdin):
        _emit("trace", _proof_payload(proof_trace(g, eps)))
    return 0


# ---------------------------------------------------------------------------
# scan


def _cmd_scan(args) -> int:
    try:
        n_values = [int(part) for part in args.n_list.split(",") if part]
    except ValueError:
        raise DomainError(f"bad --n-list {args.n_list!r}") from None
    rows = extremal_scan(n_values)
    payload = {
        "rows": [
            {
                "n": r.n,
                "s_min": r.s_min,
                "ratio": r.ratio,
                "rho_at_s_min": r.rho_at_s_min,
                "circumference": r.circumference,
            }
            for r in rows
        ]
    }
    _emit("scan", payload)
    return 0


# ---------------------------------------------------------------------------
# verify


def _cmd_verify(args) -> int:
    if args.lemmas == "all":
        ids = LEMMA_IDS
    else:
        ids = tuple(canonical_id(name) for name in args.lemmas.split(",") if name)
        if not ids:
            return _fail("empty --lemmas list")
    config = SuiteConfig(
        lemmas=ids,
        max_n=args.max_n,
        samples=args.samples,
        seed=args.seed,
        threads=args.threads,
    )
    result = run_suite(config)
    payload = {
        "config": {
            "lemmas": sorted(set(ids)),
            "max_n": args.max_n,
            "samples": args.samples,
            "seed": args.seed,
        },
        "reports": [
            {
                "lemma_id": r.lemma_id,
                "domain": r.domain,
                "instances_checked": r.instances_checked,
                "applicable": r.applicable,
                "violations": r.violations,
                "witnesses": list(r.witnesses),
                "tight_count": r.tight_count,
                "tight_witnesses": list(r.tight_witnesses),
                "boundary_exceptions": r.boundary_exceptions,
            }
            for r in result.reports
        ],
        "enumeration_stats": [
            {"n": s.n, "graph_count": s.graph_count, "connected_count": s.connected_count}
            for s in result.stats
        ],
        "total_violations": result.total_violations,
    }
    _emit("verify", payload, seed=args.seed)
    return 0 if result.total_violations == 0 else 1


# ---------------------------------------------------------------------------
# Parser


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="cyclespec", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    g = sub.add_parser("gen", help="emit one graph6 line for a family member")
    g.add_argument("--family", required=True, choices=[
        "complete", "cycle", "path", "complete_bipartite",
        "join_clique_empty", "theta", "gnp", "star"])
    g.add_argument("--n", type=int)
    g.add_argument("--a", type=int)
    g.add_argument("--b", type=int)
    g.add_argument("--s", type=int)
    g.add_argument("--t", type=int)
    g.add_argument("--p-num", type=int, dest="p_num")
    g.add_argument("--p-den", type=int, dest="p_den")
    g.add_argument("--seed", type=int)
    g.add_argument("--paths", type=_paths_arg, help="theta path lengths a,b,c")
    g.set_defaults(func=_cmd_gen)

    a = sub.add_parser("analyze", help="per-graph spectral and cycle report")
    a.add_argument("--tol", type=float, default=1e-10)
    a.set_defaults(func=_cmd_analyze)

    p = sub.add_parser("peel", help="replay a peeling procedure")
    p.add_argument("--kind", required=True, choices=["low-degree", "cut-vertex"])
    p.add_argument("--threshold-num", type=int, dest="threshold_num")
    p.add_argument("--threshold-den", type=int, dest="threshold_den", default=1)
    p.set_defaults(func=_cmd_peel)

    t = sub.add_parser("trace", help="run the full reduction pipeline on each graph")
    t.add_argument("--eps-num", type=int, dest="eps_num", required=True)
    t.add_argument("--eps-den", type=int, dest="eps_den", required=True)
    t.set_defaults(func=_cmd_trace)

    s = sub.add_parser("scan", help="extremal join-family scan over n values")
    s.add_argument("--n-list", dest="n_list", required=True)
    s.set_defaults(func=_cmd_scan)

    v = sub.add_parser("verify", help="sweep named lemmas exhaustively and on samples")
    v.add_argument("--lemmas", default="all")
    v.add_argument("--max-n", dest="max_n", type=int, default=7)
    v.add_argument("--samples", type=int, default=0)
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--threads", type=int, default=1)
    v.set_defaults(func=_cmd_verify)

    return parser


def _paths_arg(text: str):
    parts = text.split(",")
    if len(parts) != 3:
        raise argparse.ArgumentTypeError("expected three comma-separated lengths")
    try:
        return tuple(int(p) for p in parts)
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad path lengths {text!r}") from None


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        return args.func(args)
    except (DomainError, Graph6Error) as exc:
        return _fail(str(exc))


def entry() -> None:
    raise SystemExit(main())


if __name__ == "__main__":
    entry()
