"""Command-line front end: ``cyclepack analyze|detect|paths|flow|undirected``.

Every command writes one JSON report. Exit codes: 0 success, 2 bad input,
3 a resource guard was hit (the report is still written), 4 a checked
identity failed.
"""

from __future__ import annotations

import argparse
import json
import logging
import random
import sys
import time
from fractions import Fraction
from pathlib import Path

from . import cycles as cy
from .errors import CyclepackError, GraphError, GuardExceeded, ParseError
from .geometry import build_incidence_set, degree_and_counts, dimension, strong_model_via_double
from .graph import (
    DirectedGraph,
    flow_to_graph,
    max_flow,
    parse_flow_network,
    path_contract,
    read_graph,
    underlying_undirected,
)
from .groebner import (
    DEFAULT_SPAIR_BUDGET,
    buchberger,
    eliminate,
    krull_dimension,
    radical_membership,
)
from .homology import a1_of_vertex, h0_degree_one, u_degree_one, z2_detectors
from .poly import incidence_relations, strong_relations

log = logging.getLogger(__name__)

SCHEMA = 1
EXIT_OK, EXIT_INPUT, EXIT_GUARD, EXIT_DISAGREE = 0, 2, 3, 4


class Report:
    """Collects sections, guard status and agreement flags in a fixed order."""

    def __init__(self, command: str, timing: bool = False):
        self.data: dict = {"schema": SCHEMA, "command": command}
        self.guards: dict[str, str] = {}
        self.agreement: dict[str, bool] = {}
        self.timing = timing
        self.times: dict[str, float] = {}

    def section(self, name, fn):
        start = time.perf_counter()
        try:
            self.data[name] = fn()
            self.guards[name] = "ok"
        except GuardExceeded as exc:
            self.data[name] = None
            self.guards[name] = f"exceeded: {exc}"
        self.times[name] = round(time.perf_counter() - start, 6)
        return self.data[name]

    def flag(self, name: str, value: bool):
        self.agreement[name] = bool(value)

    def finish(self) -> dict:
        self.data["guards"] = self.guards
        self.data["agreement"] = self.agreement
        self.data["all_agree"] = all(self.agreement.values())
        if self.timing:
            self.data["timing_seconds"] = self.times
        return self.data

    @property
    def exit_code(self) -> int:
        if not all(self.agreement.values()):
            return EXIT_DISAGREE
        if any(v != "ok" for v in self.guards.values()):
            return EXIT_GUARD
        return EXIT_OK


def _guards(args) -> dict:
    return {"max_cycles": args.max_cycles, "max_nodes": args.max_collections}


def _load(args, directed=None):
    if getattr(args, "random", None) is not None:
        return random_graph(args.random, seed=args.seed)
    if not args.input:
        raise ParseError("no --input given")
    return read_graph(args.input, directed=directed)


def random_graph(n_edges: int, seed: int | None = 0, n_vertices: int | None = None) -> DirectedGraph:
    """Random directed multigraph for ad-hoc corpora (loops allowed)."""
    rng = random.Random(seed)
    nv = n_vertices or max(1, rng.randint(1, n_edges))
    names = [f"v{i}" for i in range(nv)]
    return DirectedGraph.from_pairs([(rng.choice(names), rng.choice(names)) for _ in range(n_edges)])


def _spectrum(spec) -> dict:
    return spec.to_dict()


# --------------------------------------------------------------- analyze

def cmd_analyze(args) -> tuple[dict, int]:
    g = _load(args)
    if g.directed is False:
        raise ParseError("analyze needs a directed graph")
    rep = Report("analyze", args.timing)
    guards = _guards(args)
    modes = ["plain", "strong"] if args.mode == "both" else [args.mode]
    rep.data["graph"] = g.to_dict()
    rep.data["warnings"] = list(g.warnings)

    state: dict = {}

    def combinatorial():
        cycles = cy.enumerate_cycles(g, args.max_cycles)
        state["cycles"] = cycles
        out = {"cycle_count": len(cycles), "cycles": [list(c.edges) for c in cycles],
               "acyclic": cy.is_acyclic(g)}
        alpha = cy.packing_number(g, "edge", cycles=cycles, max_nodes=args.max_collections)
        beta, witness = cy.feedback_number(g, cycles=cycles, max_nodes=args.max_collections)
        out.update(alpha=alpha, beta=beta, beta_witness=list(witness))
        state["alpha"] = alpha
        rep.flag("acyclic_iff_no_cycles", out["acyclic"] == (len(cycles) == 0))
        rep.flag("alpha_le_beta", alpha <= beta)
        if "plain" in modes:
            spec = cy.cycle_spectrum(g, "edge", cycles=cycles, max_nodes=args.max_collections)
            state["spectrum"] = spec
            out["spectrum"] = _spectrum(spec)
            rep.flag("spectrum_top_is_alpha", spec.top == alpha)
        if "strong" in modes:
            alpha_s = cy.packing_number(g, "vertex", cycles=cycles, max_nodes=args.max_collections)
            spec_s = cy.cycle_spectrum(g, "vertex", cycles=cycles, max_nodes=args.max_collections)
            via_a, via_s = cy.strong_via_double(g, **guards)
            state.update(alpha_strong=alpha_s, strong_spectrum=spec_s)
            out.update(alpha_strong=alpha_s, strong_spectrum=_spectrum(spec_s),
                       strong_via_double={"alpha": via_a, "spectrum": _spectrum(via_s)})
            rep.flag("strong_le_alpha", alpha_s <= alpha)
            rep.flag("strong_direct_equals_double", (alpha_s, spec_s) == (via_a, via_s))
        return out

    rep.section("combinatorial", combinatorial)

    def incidence_set():
        out = {}
        for mode in modes:
            model = build_incidence_set(g, mode, **guards)
            state[f"model_{mode}"] = model
            dim = dimension(model)
            entry = {"dimension": dim, "components": model.to_dict()["components"],
                     "is_variety": len(model.components) <= 1}
            alpha = state.get("alpha" if mode == "plain" else "alpha_strong")
            spec = state.get("spectrum" if mode == "plain" else "strong_spectrum")
            if model.is_empty:
                entry.update(degree=None, counts={})
            else:
                deg, counts = degree_and_counts(model)
                entry.update(degree=deg, counts={str(k): v for k, v in counts.items()})
                if spec is not None:
                    rep.flag(f"{mode}_degree_is_top_gamma", deg == spec[alpha])
                    rep.flag(f"{mode}_counts_are_spectrum",
                             {k + 1: v for k, v in counts.items()} == spec.gamma)
            if alpha is not None:
                rep.flag(f"{mode}_dimension_is_alpha_minus_one", dim == alpha - 1)
                if "cycles" in state:
                    rep.flag(f"{mode}_variety_iff_cycles_equal_packing",
                             entry["is_variety"] == (len(state["cycles"]) == alpha))
            if mode == "strong":
                rep.flag("strong_model_equals_projection", model == strong_model_via_double(g, **guards))
            out[mode] = entry
        if "plain" in out and "strong" in out and out["strong"]["is_variety"]:
            rep.flag("strong_variety_implies_equal_sets",
                     state["model_plain"].components == state["model_strong"].components)
        return out

    rep.section("incidence_set", incidence_set)

    if args.algebraic == "on":
        def algebraic():
            out = {}
            for mode in modes:
                fam = incidence_relations(g) if mode == "plain" else strong_relations(g)
                gb = buchberger(fam, spair_budget=args.spair_budget)
                dr = krull_dimension(gb)
                alpha = state.get("alpha" if mode == "plain" else "alpha_strong")
                spec = state.get("spectrum" if mode == "plain" else "strong_spectrum")
                entry = {"krull_dimension": dr.krull_dimension,
                         "independent_set": list(dr.witness),
                         "hilbert_numerator": list(dr.hilbert_numerator),
                         "hilbert_degree": dr.scheme_degree,
                         "groebner_basis": gb.printed()}
                if alpha is not None:
                    rep.flag(f"{mode}_krull_is_alpha", dr.krull_dimension == alpha)
                    if alpha > 0 and spec is not None:
                        rep.flag(f"{mode}_hilbert_degree_ge_top_gamma", dr.scheme_degree >= spec[alpha])
                        entry["hilbert_degree_equals_top_gamma"] = dr.scheme_degree == spec[alpha]
                out[mode] = entry
            return out

        rep.section("algebraic", algebraic)

    def detectors():
        cycles = state.get("cycles") or cy.enumerate_cycles(g, args.max_cycles)
        fam = incidence_relations(g) if args.algebraic == "on" else None
        per_vertex = {}
        for v in g.vertices:
            a = cy.local_packing(g, vertex=v, cycles=cycles, max_nodes=args.max_collections)
            b, _ = cy.feedback_number(g, vertex=v, cycles=cycles, max_nodes=args.max_collections)
            entry = {"on_cycle": a > 0, "alpha_v": a, "beta_v": b}
            if fam is not None:
                d = krull_dimension(eliminate(fam, g.incident(v), spair_budget=args.spair_budget))
                entry["elimination_dimension"] = d.krull_dimension
                rep.flag(f"vertex[{v}]_bounds", a <= d.krull_dimension <= b)
                rep.flag(f"vertex[{v}]_detects", (d.krull_dimension == 0) == (a == 0))
            per_vertex[v] = entry
        per_edge = {}
        for x in g.edge_ids:
            on = any(x in c.edge_set for c in cycles)
            entry = {"on_cycle": on}
            if fam is not None:
                rad = radical_membership(x, fam, spair_budget=args.spair_budget)
                entry["power_in_ideal"] = rad
                rep.flag(f"edge[{x}]_detects", rad == (not on))
            per_edge[str(x)] = entry
        return {"per_vertex": per_vertex, "per_edge": per_edge}

    rep.section("detectors", detectors)
    rep.section("undirected", lambda: _undirected_block(g, rep, args))
    return rep.finish(), rep.exit_code


def _undirected_block(g, rep: Report, args) -> dict:
    ug = underlying_undirected(g)
    z = z2_detectors(ug)
    h = h0_degree_one(ug)
    u = u_degree_one(ug)
    ucycles = cy.undirected_cycles(ug, args.max_cycles)
    a = cy.undirected_packing(ug, cycles=ucycles, max_nodes=args.max_collections)
    b, _ = cy.undirected_feedback(ug, cycles=ucycles, max_nodes=args.max_collections)
    rep.flag("undirected_h01_bounds", a <= h.free_rank <= b)
    rep.flag("undirected_z2_bounds", a <= z.global_bound <= b)
    rep.flag("undirected_h01_gf2_matches_s", h.gf2_dimension == z.global_bound)
    rep.flag("undirected_u01_detects", (not u.is_zero) == bool(ucycles))
    on_cycle_edges = set().union(*ucycles) if ucycles else set()
    rep.flag("undirected_edge_flags", all(z.per_edge[x] == (x in on_cycle_edges) for x in ug.edge_ids))
    per_vertex = {}
    for v in ug.vertices:
        at = set(ug.incident(v))
        through = [c for c in ucycles if c & at]
        av = cy.undirected_packing(ug, vertex=v, cycles=ucycles, max_nodes=args.max_collections)
        bv, _ = cy.undirected_feedback(ug, vertex=v, cycles=ucycles, max_nodes=args.max_collections)
        a1 = a1_of_vertex(ug, v)
        rep.flag(f"undirected_vertex[{v}]_a1_bounds", av <= a1.free_rank <= bv)
        rep.flag(f"undirected_vertex[{v}]_z2_bounds", av <= z.per_vertex[v] <= bv)
        per_vertex[v] = {"on_cycle": bool(through), "alpha": av, "beta": bv,
                         "a1_rank": a1.free_rank, "z2_bound": z.per_vertex[v]}
    return {
        "alpha": a, "beta": b, "cycle_count": len(ucycles),
        "z2": z.to_dict(), "h01": h.to_dict(), "u01": u.to_dict(),
        "per_vertex": per_vertex,
    }


# ---------------------------------------------------------------- detect

def cmd_detect(args) -> tuple[dict, int]:
    g = _load(args)
    rep = Report("detect", args.timing)
    rep.data["graph"] = g.to_dict()
    fam = incidence_relations(g)

    def body():
        cycles = cy.enumerate_cycles(g, args.max_cycles)
        if args.vertex is not None:
            v = args.vertex
            g.require_vertex(v)
            a = cy.local_packing(g, vertex=v, cycles=cycles, max_nodes=args.max_collections)
            b, wit = cy.feedback_number(g, vertex=v, cycles=cycles, max_nodes=args.max_collections)
            d = krull_dimension(eliminate(fam, g.incident(v), spair_budget=args.spair_budget))
            rep.flag("bounds", a <= d.krull_dimension <= b)
            rep.flag("detects", (d.krull_dimension == 0) == (a == 0))
            return {"vertex": v, "on_cycle": a > 0, "alpha_v": a, "beta_v": b,
                    "beta_v_witness": list(wit), "elimination_dimension": d.krull_dimension}
        x = args.edge
        g.edge(x)
        through = [list(c.edges) for c in cycles if x in c.edge_set]
        rad = radical_membership(x, fam, spair_budget=args.spair_budget)
        rep.flag("detects", rad == (not through))
        return {"edge": x, "on_cycle": bool(through), "cycles_through": through,
                "alpha_x": cy.local_packing(g, edge=x, cycles=cycles),
                "power_in_ideal": rad}

    rep.section("detect", body)
    return rep.finish(), rep.exit_code


# ----------------------------------------------------------------- paths

def _path_block(g, u, v, rep: Report, args) -> dict:
    h = path_contract(g, u, v)
    merged = [w for w in h.vertices if w not in g.vertices]
    a, b = cy.path_numbers(g, u, v, max_cycles=args.max_cycles, max_nodes=args.max_collections)
    keep = h.incident(merged[0]) if merged else ()
    d = krull_dimension(eliminate(incidence_relations(h), keep, spair_budget=args.spair_budget))
    rep.flag("path_chain", a <= d.krull_dimension <= b)
    return {"u": u, "v": v, "no_paths": not merged, "contracted": h.to_dict(),
            "alpha_path": a, "beta_path": b, "krull_bound": d.krull_dimension}


def cmd_paths(args) -> tuple[dict, int]:
    g = _load(args)
    g.require_vertex(args.u)
    g.require_vertex(args.v)
    rep = Report("paths", args.timing)
    rep.data["graph"] = g.to_dict()
    rep.section("paths", lambda: _path_block(g, args.u, args.v, rep, args))
    return rep.finish(), rep.exit_code


# ------------------------------------------------------------------ flow

def cmd_flow(args) -> tuple[dict, int]:
    if not args.input:
        raise ParseError("no --input given")
    net = parse_flow_network(Path(args.input).read_text(encoding="utf-8"), args.source, args.sink)
    rep = Report("flow", args.timing)
    value = max_flow(net)
    gn = flow_to_graph(net)
    rep.data["network"] = {"source": net.source, "sink": net.sink,
                           "capacity": [[u, v, str(c)] for (u, v), c in sorted(net.capacity.items())]}
    rep.data["max_flow"] = str(value)

    def body():
        if not {net.source, net.sink} <= set(gn.vertices):
            # an endpoint with no positive-capacity edge has no paths at all
            block = {"u": net.source, "v": net.sink, "no_paths": True, "contracted": None,
                     "alpha_path": 0, "beta_path": 0, "krull_bound": 0}
            rep.flag("path_chain", True)
        else:
            block = _path_block(gn, net.source, net.sink, rep, args)
        rep.flag("flow_le_alpha_path", value <= block["alpha_path"])
        return block

    rep.section("flow_graph", body)
    return rep.finish(), rep.exit_code


# ------------------------------------------------------------ undirected

def cmd_undirected(args) -> tuple[dict, int]:
    g = _load(args, directed=None)
    ug = underlying_undirected(g)
    rep = Report("undirected", args.timing)
    rep.data["graph"] = ug.to_dict()
    rep.section("undirected", lambda: _undirected_block(ug, rep, args))
    return rep.finish(), rep.exit_code


# ------------------------------------------------------------------ main

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="cyclepack", description=__doc__.splitlines()[0])
    p.add_argument("-v", "--verbose", action="store_true", help="log progress to stderr")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, needs_input=True):
        sp.add_argument("--input", help="edge-list (.edges) or DOT (.dot) file")
        sp.add_argument("--json", default="-", metavar="PATH|-", help="where to write the report")
        sp.add_argument("--max-cycles", type=int, default=cy.DEFAULT_MAX_CYCLES)
        sp.add_argument("--max-collections", type=int, default=cy.DEFAULT_MAX_NODES)
        sp.add_argument("--spair-budget", type=int, default=DEFAULT_SPAIR_BUDGET)
        sp.add_argument("--seed", type=int, default=0, help="seed for --random")
        sp.add_argument("--random", type=int, metavar="EDGES",
                        help="analyze a random multigraph with this many edges instead of --input")
        sp.add_argument("--timing", action="store_true",
                        help="add per-section wall times (makes output run-dependent)")

    a = sub.add_parser("analyze", help="packing numbers, spectra, incidence set, algebra")
    common(a)
    a.add_argument("--mode", choices=["plain", "strong", "both"], default="both")
    a.add_argument("--algebraic", choices=["on", "off"], default="on")
    a.set_defaults(func=cmd_analyze)

    d = sub.add_parser("detect", help="is a vertex or edge on a directed cycle")
    common(d)
    grp = d.add_mutually_exclusive_group(required=True)
    grp.add_argument("--vertex")
    grp.add_argument("--edge", type=int)
    d.set_defaults(func=cmd_detect)

    pa = sub.add_parser("paths", help="edge-disjoint u->v paths and their bounds")
    common(pa)
    pa.add_argument("u")
    pa.add_argument("v")
    pa.set_defaults(func=cmd_paths)

    f = sub.add_parser("flow", help="max flow against the path packing chain")
    common(f)
    f.add_argument("--source", required=True)
    f.add_argument("--sink", required=True)
    f.set_defaults(func=cmd_flow)

    u = sub.add_parser("undirected", help="undirected cycle detectors and ranks")
    common(u)
    u.set_defaults(func=cmd_undirected)
    return p


def render(report: dict) -> str:
    return json.dumps(report, indent=2, sort_keys=True, default=_json_default) + "\n"


def _json_default(o):
    if isinstance(o, Fraction):
        return str(o)
    if isinstance(o, (set, frozenset)):
        return sorted(o)
    raise TypeError(f"cannot serialize {type(o).__name__}")


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        report, code = args.func(args)
    except (ParseError, GraphError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except GuardExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_GUARD
    except AssertionError as exc:
        print(f"internal disagreement: {exc}", file=sys.stderr)
        return EXIT_DISAGREE
    text = render(report)
    if args.json == "-":
        sys.stdout.write(text)
    else:
        Path(args.json).write_text(text, encoding="utf-8")
    return code


if __name__ == "__main__":
    sys.exit(main())
