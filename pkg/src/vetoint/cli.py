"""Command-line interface.

Exit codes: 0 success (or recognition ``yes``), 1 recognition ``no`` or a
failed check, 2 timeout, 64 usage error, 65 domain error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from fractions import Fraction
from pathlib import Path
from typing import Any, Sequence

from . import families
from .analysis import (
    chromatic_number,
    is_triangle_free,
    mpvi_order_check,
    muda_to_unit_interval,
    proper_to_unit,
    unit_interval_to_muda,
    uvi_four_color,
)
from .errors import VetoError
from .formats import dumps_graph, dumps_rep, format_rational, loads_graph, loads_rep
from .model import FLAVORS, MIDPOINT, PROPER, UNIT, Representation, SimpleGraph, flavor_flags, perturb_distinct
from .semantics import SemanticsTag, build_digraph, build_graph, partition_check, reduce_to_double, split_to_k_veto

EXIT_OK, EXIT_NO, EXIT_TIMEOUT, EXIT_USAGE, EXIT_DOMAIN = 0, 1, 2, 64, 65

# class name -> (semantics, flavor, marks per interval)
CLASSES: dict[str, tuple[SemanticsTag, frozenset[str], int]] = {
    "VI": (SemanticsTag.VETO, frozenset(), 1),
    "UVI": (SemanticsTag.VETO, frozenset({UNIT}), 1),
    "PVI": (SemanticsTag.VETO, frozenset({PROPER}), 1),
    "MVI": (SemanticsTag.VETO, frozenset({MIDPOINT}), 1),
    "MUVI": (SemanticsTag.VETO, frozenset({UNIT, MIDPOINT}), 1),
    "MPVI": (SemanticsTag.VETO, frozenset({MIDPOINT, PROPER}), 1),
    "SA": (SemanticsTag.SINGLE_APPROVAL, frozenset(), 1),
    "DA": (SemanticsTag.DOUBLE_APPROVAL, frozenset(), 1),
    "MUDA": (SemanticsTag.DOUBLE_APPROVAL, frozenset({UNIT, MIDPOINT}), 1),
    "PC": (SemanticsTag.POINT_CORE, frozenset(), 1),
    "DOUBLE-VETO": (SemanticsTag.K_VETO, frozenset(), 2),
    "INTERVAL": (SemanticsTag.INTERVAL, frozenset(), 1),
}

# family name -> (builder, parameter names)
REP_FAMILIES = {
    "vi-complete-bipartite": (families.vi_complete_bipartite, ("m", "n")),
    "vi-tree": (families.vi_tree, ("parents",)),
    "muvi-caterpillar": (families.muvi_caterpillar, ("legs",)),
    "muvi-cycle": (families.muvi_cycle, ("n",)),
    "sa-complete": (families.sa_complete, ("n",)),
    "sa-cycle": (families.sa_cycle, ("n",)),
    "sa-wheel": (families.sa_wheel, ("n",)),
    "sa-tree": (families.sa_tree, ("parents",)),
    "sa-k-partite": (families.sa_k_partite, ("parts",)),
    "da-complete": (families.da_complete, ("n",)),
    "da-cycle": (families.da_cycle, ("n",)),
    "da-wheel": (families.da_wheel, ("n",)),
    "da-complete-bipartite": (families.da_complete_bipartite, ("m", "n")),
    "da-tree": (families.da_tree, ("parents",)),
    "da-k1bc": (families.da_k1bc, ("b", "c")),
}
RAW_CAPABLE = {"vi-complete-bipartite", "muvi-caterpillar", "muvi-cycle", "sa-cycle", "sa-wheel"}

GRAPH_FAMILIES = {
    "complete": ("n",),
    "cycle": ("n",),
    "path": ("n",),
    "star": ("n",),
    "wheel": ("n",),
    "complete-bipartite": ("m", "n"),
    "complete-multipartite": ("parts",),
    "tree": ("parents",),
    "caterpillar": ("legs",),
    "grotzsch": (),
    "lobster5": (),
    "star-subdivided": ("n",),
    "g-k": ("n",),
    "circulant": ("n", "jumps"),
}


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


# --- helpers -----------------------------------------------------------------------------


def _int_list(text: str) -> list[int]:
    try:
        return [int(x) for x in text.replace(" ", "").split(",") if x != ""]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def _budget(text: str) -> float | None:
    t = text.strip().lower()
    if t in ("none", "inf", "0"):
        return None
    scale = 1.0
    for suffix, mult in (("ms", 0.001), ("s", 1.0), ("m", 60.0), ("h", 3600.0)):
        if t.endswith(suffix):
            t, scale = t[: -len(suffix)], mult
            break
    try:
        return float(t) * scale
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad budget {text!r}; use e.g. 600s, 10m, none") from None


def _flavor(text: str) -> frozenset[str]:
    flags = frozenset(f for f in text.replace("+", ",").split(",") if f and f != "none")
    unknown = flags - set(FLAVORS)
    if unknown:
        raise argparse.ArgumentTypeError(f"unknown flavor {sorted(unknown)}; choose from {', '.join(FLAVORS)}")
    return flags


def _tag(text: str) -> SemanticsTag:
    try:
        return SemanticsTag.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _load_graph(path: str) -> SimpleGraph:
    p = Path(path)
    if p.suffix == ".g6":
        import networkx as nx

        G = nx.convert_node_labels_to_integers(nx.read_graph6(p))
        return SimpleGraph(G.number_of_nodes(), frozenset(G.edges()))
    return loads_graph(_read_text(path))


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None


def _write_text(path: str | None, text: str) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        Path(path).write_text(text)


def _rat(x: Fraction) -> str:
    return format_rational(x)


def _rep_json(rep: Representation) -> dict:
    return {
        "k": rep.mark_count,
        "flags": [f for f in FLAVORS if f in rep.flavor],
        "intervals": [[_rat(p) for p in iv.points] for iv in rep.intervals],
    }


def _graph_json(g: SimpleGraph) -> dict:
    return {"n": g.n, "m": g.m, "edges": [list(e) for e in g.sorted_edges()]}


def _emit(args, payload: dict, text: str) -> None:
    if args.format == "json":
        sys.stdout.write(json.dumps(payload, indent=2, sort_keys=True) + "\n")
    else:
        sys.stdout.write(text if text.endswith("\n") else text + "\n")


def _family_args(args, names: Sequence[str], family: str) -> list[Any]:
    out = []
    for name in names:
        value = getattr(args, name)
        if value is None:
            raise UsageError(f"family {family} needs --{name}")
        out.append(value)
    return out


# --- subcommands ---------------------------------------------------------------------------


def cmd_family(args) -> int:
    name = args.name
    if name in REP_FAMILIES:
        builder, params = REP_FAMILIES[name]
        values = _family_args(args, params, name)
        if args.raw:
            if name not in RAW_CAPABLE:
                raise UsageError(f"--raw is not available for {name}")
            rep = builder(*values, distinct=False)
        else:
            rep = builder(*values)
        rep = rep.with_flavor(flavor_flags(rep))
        text = dumps_rep(rep)
        if args.out:
            _write_text(args.out, text)
        if args.format == "json":
            _emit(args, {"family": name, "representation": _rep_json(rep), "out": args.out}, "")
        elif not args.out:
            sys.stdout.write(text)
        else:
            print(f"wrote {rep.n} intervals to {args.out}")
        return EXIT_OK
    if name in GRAPH_FAMILIES:
        values = _family_args(args, GRAPH_FAMILIES[name], name)
        if name == "star-subdivided":
            g = families.star_subdivided(*values)
        else:
            g = families.named_graph(name, *values)
        text = dumps_graph(g)
        if args.out:
            _write_text(args.out, text)
        if args.format == "json":
            _emit(args, {"family": name, "graph": _graph_json(g), "out": args.out}, "")
        elif not args.out:
            sys.stdout.write(text)
        else:
            print(f"wrote graph with {g.n} vertices and {g.m} edges to {args.out}")
        return EXIT_OK
    raise UsageError(f"unknown family {name!r}; see `family --list`")


def cmd_graph(args) -> int:
    rep = loads_rep(_read_text(args.input))
    if args.tag is SemanticsTag.VETO_DIRECTED:
        d = build_digraph(rep)
        arcs = sorted(d.arcs)
        text = f"DIGRAPH n={d.n} m={len(arcs)}\n" + "".join(f"{u} {v}\n" for u, v in arcs)
        if args.out:
            _write_text(args.out, text)
        _emit(args, {"n": d.n, "arcs": [list(a) for a in arcs]}, text if not args.out else f"wrote {args.out}")
        return EXIT_OK
    g = build_graph(rep, args.tag)
    text = dumps_graph(g)
    if args.out:
        _write_text(args.out, text)
    _emit(args, {"tag": args.tag.value, "graph": _graph_json(g)}, text if not args.out else f"wrote {args.out}")
    return EXIT_OK


def _resolve_class(text: str) -> tuple[SemanticsTag, frozenset[str], int]:
    key = text.strip().upper()
    if key in CLASSES:
        return CLASSES[key]
    parts = text.strip().lower().split("+")
    try:
        tag = SemanticsTag.parse(parts[0])
    except ValueError:
        raise UsageError(f"unknown class {text!r}; use one of {', '.join(CLASSES)} or tag+flavor") from None
    flavor = _flavor(",".join(parts[1:]))
    return tag, flavor, 2 if tag is SemanticsTag.K_VETO else 1


def cmd_recognize(args) -> int:
    from .recognize import Budget, Verdict, recognize

    g = _load_graph(args.input)
    tag, flavor, k = _resolve_class(args.cls)
    if args.k is not None:
        k = args.k
    if tag is SemanticsTag.VETO_DIRECTED:
        raise UsageError("recognition works on undirected semantics")
    budget = Budget(seconds=args.budget, nodes=args.nodes)
    result = recognize(g, tag, flavor, budget=budget, k=k, prefix_check_every=args.prefix_every)
    st = result.stats
    if result.witness is not None and args.witness:
        _write_text(args.witness, dumps_rep(result.witness))
    lines = [
        f"verdict: {result.verdict.value}",
        f"class: {tag.value}" + (f" flavor={','.join(sorted(flavor))}" if flavor else "") + f" k={k}",
        f"stats: nodes={st.nodes} leaves={st.leaves} lp_calls={st.lp_calls} seconds={st.seconds:.3f}",
    ]
    if result.witness is not None:
        lines.append(f"word: {result.word}")
        lines.append(f"witness: {args.witness}" if args.witness else "witness:\n" + dumps_rep(result.witness).rstrip())
    payload = {
        "verdict": result.verdict.value,
        "tag": tag.value,
        "flavor": sorted(flavor),
        "k": k,
        "stats": {"nodes": st.nodes, "leaves": st.leaves, "lp_calls": st.lp_calls, "seconds": round(st.seconds, 3)},
        "word": str(result.word) if result.word else None,
        "witness": _rep_json(result.witness) if result.witness else None,
    }
    _emit(args, payload, "\n".join(lines))
    return {Verdict.YES: EXIT_OK, Verdict.NO: EXIT_NO, Verdict.TIMEOUT: EXIT_TIMEOUT}[result.verdict]


def cmd_orient_check(args) -> int:
    from .recognize import orientation_feasible

    g = _load_graph(args.input)
    report = orientation_feasible(g, edge_cap=args.edge_cap, prune=not args.naive)
    lines = [f"{report.feasible} feasible orientations (of {report.total})"]
    if report.classes is not None:
        lines.append(f"{len(report.classes)} classes up to isomorphism")
        if args.show:
            for i, d in enumerate(report.classes):
                lines.append(f"class {i}: " + " ".join(f"{u}->{v}" for u, v in sorted(d.arcs)))
    if report.feasible == 0:
        lines.append("not a veto interval graph")
    payload = {
        "feasible": report.feasible,
        "total": report.total,
        "classes": None if report.classes is None else [sorted(list(a) for a in d.arcs) for d in report.classes],
        "visited": report.visited,
        "mode": "naive" if args.naive else "pruned",
    }
    _emit(args, payload, "\n".join(lines))
    return EXIT_OK


def cmd_color_uvi(args) -> int:
    rep = loads_rep(_read_text(args.input))
    coloring = uvi_four_color(rep)
    g = build_graph(rep, SemanticsTag.VETO)
    proper = coloring.is_proper(g)
    names = coloring.names()
    lines = [f"{v} {c} {names[v]}" for v, c in enumerate(coloring.colors)]
    lines.append(f"proper: {'yes' if proper else 'no'} colors used: {coloring.used}")
    _emit(args, {"colors": list(coloring.colors), "names": names, "proper": proper, "used": coloring.used},
          "\n".join(lines))
    return EXIT_OK if proper else EXIT_NO


def cmd_chromatic(args) -> int:
    g = _load_graph(args.input)
    cert = chromatic_number(g, cap=args.cap)
    lines = [
        f"chromatic number: {cert.chi}",
        f"coloring: {' '.join(map(str, cert.coloring.colors))}",
        f"clique: {' '.join(map(str, cert.clique))}",
    ]
    if cert.refuted is not None:
        lines.append(f"{cert.refuted} colors refuted after {cert.refutation_nodes} search nodes")
    payload = {
        "chi": cert.chi,
        "coloring": list(cert.coloring.colors),
        "clique": list(cert.clique),
        "refuted": cert.refuted,
        "refutation_nodes": cert.refutation_nodes,
        "verified": cert.verify(g),
    }
    _emit(args, payload, "\n".join(lines))
    return EXIT_OK


def cmd_transform(args) -> int:
    if args.from_unit_intervals:
        ivs = []
        for ln in _read_text(args.input).splitlines():
            if ln.strip() and not ln.lstrip().startswith("#"):
                a, b = ln.split()
                ivs.append((Fraction(a), Fraction(b)))
        out = unit_interval_to_muda(ivs)
        return _finish_rep(args, out, "unit intervals -> midpoint unit")
    rep = loads_rep(_read_text(args.input))
    if args.proper_to_unit:
        return _finish_rep(args, proper_to_unit(rep), "proper -> unit")
    if args.muda_roundtrip:
        ivs = muda_to_unit_interval(rep)
        back = unit_interval_to_muda(ivs)
        same = back.as_tuples() == rep.as_tuples()
        g_da = build_graph(rep, SemanticsTag.DOUBLE_APPROVAL)
        from .semantics import interval_graph

        same_graph = interval_graph(ivs) == g_da
        text = "".join(f"{_rat(a)} {_rat(b)}\n" for a, b in ivs)
        if args.out:
            _write_text(args.out, text)
        lines = ([] if args.out else [text.rstrip()]) + [
            f"round trip identical: {'yes' if same else 'no'}",
            f"adjacency preserved: {'yes' if same_graph else 'no'}",
        ]
        _emit(args, {"intervals": [[_rat(a), _rat(b)] for a, b in ivs], "roundtrip": same,
                     "adjacency_preserved": same_graph}, "\n".join(lines))
        return EXIT_OK if same and same_graph else EXIT_NO
    if args.to_unit_intervals:
        ivs = muda_to_unit_interval(rep)
        text = "".join(f"{_rat(a)} {_rat(b)}\n" for a, b in ivs)
        _write_text(args.out, text)
        return EXIT_OK
    if args.split is not None:
        return _finish_rep(args, split_to_k_veto(rep, args.split), f"split to {args.split} marks")
    if args.reduce:
        return _finish_rep(args, reduce_to_double(rep), "reduce to two marks")
    if args.perturb:
        return _finish_rep(args, perturb_distinct(rep), "perturb to distinct points")
    raise UsageError("choose a transformation")


def _finish_rep(args, rep: Representation, what: str) -> int:
    rep = rep.with_flavor(flavor_flags(rep) if rep.mark_count == 1 else flavor_flags(rep) - {MIDPOINT})
    text = dumps_rep(rep)
    if args.out:
        _write_text(args.out, text)
    _emit(args, {"transform": what, "representation": _rep_json(rep), "out": args.out},
          f"{what}: wrote {args.out}" if args.out else text)
    return EXIT_OK


def _suite_name(args) -> str:
    for name in ("triangle_free", "partition", "mpvi_order", "perturbation", "uvi_color", "proper_to_unit",
                 "k_veto", "midpoint_unit_sa"):
        if getattr(args, name):
            return name.replace("_", "-")
    raise UsageError("choose a check")


def cmd_check(args) -> int:
    from . import suites

    name = _suite_name(args)
    if args.input:
        return _check_single(args, name)
    if args.seed is None:
        raise UsageError("randomized checks need --seed")
    kwargs: dict[str, Any] = {}
    if args.n_max is not None:
        kwargs["n_max"] = args.n_max
    if args.k is not None:
        if name not in ("triangle-free", "perturbation"):
            raise UsageError("--k applies to --triangle-free and --perturbation")
        kwargs["k"] = args.k
    rows = suites.SUITES[name](args.seed, args.trials, **kwargs)
    held = sum(1 for r in rows if r["holds"])
    csv_text = _rows_csv(rows)
    report = []
    if args.report:
        outdir = Path(args.report)
        outdir.mkdir(parents=True, exist_ok=True)
        data = outdir / f"{name}-seed{args.seed}.csv"
        data.write_text(csv_text)
        report.append(str(data))
        from .plot import suite_figure

        fig = suite_figure(rows, outdir / f"{name}-seed{args.seed}.png", f"{name} (seed {args.seed})")
        report.append(str(fig))
    lines = [f"check {name} seed={args.seed} trials={len(rows)}", f"{held}/{len(rows)} hold"]
    lines += [f"report: {p}" for p in report]
    payload = {"check": name, "seed": args.seed, "trials": len(rows), "held": held, "files": report}
    if args.rows:
        payload["rows"] = rows
        lines.append(csv_text.rstrip())
    _emit(args, payload, "\n".join(lines))
    return EXIT_OK if held == len(rows) else EXIT_NO


def _rows_csv(rows: list[dict]) -> str:
    if not rows:
        return ""
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=list(rows[0]), lineterminator="\n")
    writer.writeheader()
    for r in rows:
        writer.writerow({k: int(v) if isinstance(v, bool) else v for k, v in r.items()})
    return buf.getvalue()


def _check_single(args, name: str) -> int:
    if name == "triangle-free":
        text = _read_text(args.input)
        if text.lstrip().startswith("REP"):
            rep = loads_rep(text)
            g = build_graph(rep, SemanticsTag.VETO if rep.mark_count == 1 else SemanticsTag.K_VETO)
        else:
            g = _load_graph(args.input)
        ok = is_triangle_free(g)
        _emit(args, {"check": name, "holds": ok}, f"triangle-free: {'yes' if ok else 'no'}")
        return EXIT_OK if ok else EXIT_NO
    rep = loads_rep(_read_text(args.input))
    if name == "partition":
        report = partition_check(rep)
        counts = report.counts()
        text = " ".join(f"{k}={v}" for k, v in counts.items()) + f"\npartition holds: {'yes' if report.holds else 'no'}"
        _emit(args, {"check": name, "holds": report.holds, "counts": counts}, text)
        return EXIT_OK if report.holds else EXIT_NO
    if name == "mpvi-order":
        res = mpvi_order_check(rep)
        text = "order check: pass" if res.passed else f"order check: fail at pair {res.pair} ({res.where})"
        _emit(args, {"check": name, "holds": res.passed, "pair": res.pair, "where": res.where}, text)
        return EXIT_OK if res.passed else EXIT_NO
    raise UsageError(f"--{name} runs only as a randomized suite (use --seed)")


def cmd_plot(args) -> int:
    from .plot import draw_rep, text_art

    rep = loads_rep(_read_text(args.input))
    art = text_art(rep, width=args.width)
    payload: dict[str, Any] = {"text": art}
    lines = [art]
    if args.out:
        path = draw_rep(rep, args.out, title=args.title)
        payload["image"] = str(path)
        lines.append(f"image: {path}")
    _emit(args, payload, "\n".join(lines))
    return EXIT_OK


# --- parser ------------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text", help="report format")

    parser = _Parser(prog="vetoint", description="Veto interval and approval graph toolkit.")
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)

    p = sub.add_parser("family", parents=[common], help="emit a family representation or named graph")
    p.add_argument("--name", help="family name (see --list)")
    p.add_argument("--list", action="store_true", help="list family names")
    p.add_argument("--n", type=int)
    p.add_argument("--m", type=int)
    p.add_argument("--b", type=int)
    p.add_argument("--c", type=int)
    p.add_argument("--parts", type=_int_list, help="part sizes, e.g. 3,3,3")
    p.add_argument("--legs", type=_int_list, help="pendant counts along a caterpillar spine")
    p.add_argument("--parents", type=_int_list, help="tree parent array, entry 0 ignored")
    p.add_argument("--jumps", type=_int_list, help="circulant jump set")
    p.add_argument("--raw", action="store_true", help="keep the formula's shared points")
    p.add_argument("--out", help="output file (default stdout)")
    p.set_defaults(func=cmd_family)

    p = sub.add_parser("graph", parents=[common], help="graph of a representation under a semantics")
    p.add_argument("--in", dest="input", required=True)
    p.add_argument("--tag", type=_tag, default=SemanticsTag.VETO,
                   help="; ".join(t.value for t in SemanticsTag))
    p.add_argument("--out")
    p.set_defaults(func=cmd_graph)

    p = sub.add_parser("recognize", parents=[common], help="decide class membership by exhaustive search")
    p.add_argument("--in", dest="input", required=True, help="graph file (edge list, or .g6)")
    p.add_argument("--class", dest="cls", required=True,
                   help=f"{', '.join(CLASSES)}, or tag+flavor such as veto+unit+midpoint")
    p.add_argument("--k", type=int, help="marks per interval (default from the class)")
    p.add_argument("--budget", type=_budget, default=600.0, help="time limit, e.g. 600s, 30m, none")
    p.add_argument("--nodes", type=int, help="search node limit")
    p.add_argument("--prefix-every", type=int, default=6, help="prefix feasibility check interval")
    p.add_argument("--witness", help="write a yes-witness representation here")
    p.set_defaults(func=cmd_recognize)

    p = sub.add_parser("orient-check", parents=[common], help="count orientations with no implied arcs")
    p.add_argument("--in", dest="input", required=True)
    p.add_argument("--edge-cap", type=int, default=24)
    p.add_argument("--naive", action="store_true", help="test all 2^m orientations one by one")
    p.add_argument("--show", action="store_true", help="print class representatives")
    p.set_defaults(func=cmd_orient_check)

    p = sub.add_parser("color-uvi", parents=[common], help="parity 4-coloring of a unit representation")
    p.add_argument("--in", dest="input", required=True)
    p.set_defaults(func=cmd_color_uvi)

    p = sub.add_parser("chromatic", parents=[common], help="exact chromatic number with certificate")
    p.add_argument("--in", dest="input", required=True)
    p.add_argument("--cap", type=int, default=20)
    p.set_defaults(func=cmd_chromatic)

    p = sub.add_parser("transform", parents=[common], help="class transformations")
    p.add_argument("--in", dest="input", required=True)
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--proper-to-unit", action="store_true")
    g.add_argument("--muda-roundtrip", action="store_true")
    g.add_argument("--to-unit-intervals", action="store_true")
    g.add_argument("--from-unit-intervals", action="store_true")
    g.add_argument("--split", type=int, metavar="K", help="split to K marks per interval")
    g.add_argument("--reduce", action="store_true", help="keep first and last marks")
    g.add_argument("--perturb", action="store_true", help="resolve shared points")
    p.add_argument("--out")
    p.set_defaults(func=cmd_transform)

    p = sub.add_parser("check", parents=[common], help="invariant checks on a file or seeded random suites")
    g = p.add_mutually_exclusive_group(required=True)
    for flag in ("triangle-free", "partition", "mpvi-order", "perturbation", "uvi-color", "proper-to-unit",
                 "k-veto", "midpoint-unit-sa"):
        g.add_argument(f"--{flag}", action="store_true")
    p.add_argument("--in", dest="input", help="check a single file instead of random trials")
    p.add_argument("--seed", type=int)
    p.add_argument("--trials", type=int, default=500)
    p.add_argument("--n-max", type=int)
    p.add_argument("--k", type=int)
    p.add_argument("--report", metavar="DIR", help="write <check>-seed<S>.csv and .png here")
    p.add_argument("--rows", action="store_true", help="include per-trial rows in the output")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("plot", parents=[common], help="draw a representation")
    p.add_argument("--in", dest="input", required=True)
    p.add_argument("--out", help="image file (PNG); text art is always printed")
    p.add_argument("--title")
    p.add_argument("--width", type=int, default=64)
    p.set_defaults(func=cmd_plot)
    return parser


def _list_families() -> str:
    lines = ["representations:"]
    lines += [f"  {name} ({', '.join('--' + p for p in params)})" for name, (_, params) in REP_FAMILIES.items()]
    lines.append("graphs:")
    lines += [f"  {name}" + (f" ({', '.join('--' + p for p in params)})" if params else "")
              for name, params in GRAPH_FAMILIES.items()]
    return "\n".join(lines) + "\n"


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # --help or a usage error
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    if args.command is None:
        parser.print_help(sys.stderr)
        return EXIT_USAGE
    if args.command == "family" and args.list:
        sys.stdout.write(_list_families())
        return EXIT_OK
    if args.command == "family" and not args.name:
        print("vetoint: error: family needs --name or --list", file=sys.stderr)
        return EXIT_USAGE
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"vetoint: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except VetoError as exc:
        print(f"vetoint: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except (ValueError, argparse.ArgumentTypeError) as exc:
        print(f"vetoint: error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN


if __name__ == "__main__":
    raise SystemExit(main())
