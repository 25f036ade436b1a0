"""Command line interface.

Document-valued options (--spec, --case, --witness) take either inline JSON
or @path to read a JSON file.  Exit codes: 0 success, 1 failed verification
or exceeded enumeration ceiling, 2 malformed input.
"""

from __future__ import annotations

import argparse
import csv
import json
import os
import sys

from . import acceptance, chardeg, classify, groupcore, modact, prime_graph
from .groupcore import DEFAULT_CEILING, CeilingExceeded


def _parse_doc(value: str):
    if value.startswith("@"):
        with open(value[1:], "r", encoding="utf-8") as fh:
            return json.load(fh)
    return json.loads(value)


def _print_json(obj):
    print(json.dumps(obj, indent=2, sort_keys=True))


def _print_text(obj, indent=""):
    for key, val in obj.items():
        if isinstance(val, dict):
            print(f"{indent}{key}:")
            _print_text(val, indent + "  ")
        elif isinstance(val, list) and val and isinstance(val[0], (list, dict)):
            print(f"{indent}{key}:")
            for item in val:
                if isinstance(item, dict):
                    print(f"{indent}  -")
                    _print_text(item, indent + "    ")
                else:
                    print(f"{indent}  {' '.join(str(x) for x in item)}")
        else:
            if isinstance(val, list):
                val = " ".join(str(x) for x in val)
            print(f"{indent}{key}: {val}")


def _emit(obj, fmt):
    if fmt == "json":
        _print_json(obj)
    else:
        _print_text(obj)


def _maybe_fig(graph, args, title):
    if getattr(args, "fig", None):
        from . import figures
        figures.render_graph(graph, args.fig, title=title)


def _group(args) -> groupcore.FiniteGroup:
    return groupcore.group_from_spec(_parse_doc(args.spec), args.ceiling)


def _module(args) -> groupcore.ModuleAction:
    return groupcore.module_catalog(args.module, args.q)


def cmd_group(args) -> int:
    G = _group(args)
    classes = G.conjugacy_classes()
    _emit({"label": G.label, "order": G.order, "num_classes": len(classes),
           "class_sizes": [c.size for c in classes], "exponent": G.exponent()},
          args.format)
    return 0


def cmd_degrees(args) -> int:
    G = _group(args)
    _emit({"group": G.label,
           "degrees": [[d, m] for d, m in chardeg.degree_multiset(G)]},
          args.format)
    return 0


def cmd_graph(args) -> int:
    G = _group(args)
    g = prime_graph.graph_from_degrees(chardeg.character_degrees(G))
    if args.format == "dot":
        sys.stdout.write(prime_graph.graph_to_dot(g))
    else:
        _emit(prime_graph.graph_to_json(g), args.format)
    _maybe_fig(g, args, G.label)
    return 0


def cmd_analyze(args) -> int:
    G = _group(args)
    g = prime_graph.graph_from_degrees(chardeg.character_degrees(G))
    obj = prime_graph.graph_to_json(g)
    obj.update({
        "group": G.label,
        "order": G.order,
        "components": [list(c) for c in prime_graph.components(g)],
        "cut_vertices": list(prime_graph.cut_vertices(g)),
        "complete_vertices": list(prime_graph.complete_vertices(g)),
    })
    _emit(obj, args.format)
    _maybe_fig(g, args, G.label)
    return 0


def cmd_orbits(args) -> int:
    act = _module(args)
    report = modact.orbit_data(act)
    dg = modact.delta_orb(act)
    _emit({
        "module": report.module,
        "group": report.group,
        "group_order": report.group_order,
        "kernel_order": report.kernel_order,
        "orbits": [{"rep": o.rep, "size": o.size,
                    "stabilizer_order": o.stabilizer_order,
                    "stabilizer_tag": o.stabilizer_tag} for o in report.orbits],
        "delta_orb": prime_graph.graph_to_json(dg),
    }, args.format)
    _maybe_fig(dg, args, f"{report.module} orbit sizes")
    return 0


def cmd_nq(args) -> int:
    act = _module(args)
    satisfied, failing = modact.check_nq(act, args.prime)
    _emit({"module": act.label, "q": args.prime, "satisfied": satisfied,
           "failing_vectors": list(failing)}, args.format)
    return 0


def cmd_vsets(args) -> int:
    act = _module(args)
    _emit(modact.v_set_decomposition(act, args.r, args.s), args.format)
    return 0


def cmd_predict(args) -> int:
    case = classify.case_from_json(_parse_doc(args.case))
    g = classify.predict_graph(case)
    if args.format == "dot":
        sys.stdout.write(prime_graph.graph_to_dot(g))
    else:
        _emit({"theorem": case.theorem, "p": case.p,
               "graph": prime_graph.graph_to_json(g),
               "cut_vertices": list(prime_graph.cut_vertices(g))}, args.format)
    _maybe_fig(g, args, f"{case.theorem} p={case.p}")
    return 0


def cmd_verify(args) -> int:
    wid, gspec, case = classify.witness_from_json(_parse_doc(args.witness))
    report = classify.verify_witness(gspec, case, args.ceiling, witness_id=wid)
    _emit(report.to_json(), args.format)
    return 0 if report.ok else 1


def cmd_suite(args) -> int:
    results = acceptance.run_all(long=args.long)
    for r in results:
        print(f"{'PASS' if r.ok else 'FAIL'} {r.name}: {r.detail}")
    if args.out:
        os.makedirs(args.out, exist_ok=True)
        with open(os.path.join(args.out, "suite.csv"), "w", newline="",
                  encoding="utf-8") as fh:
            writer = csv.writer(fh)
            writer.writerow(["criterion", "status", "detail"])
            for r in results:
                writer.writerow([r.name, "PASS" if r.ok else "FAIL", r.detail])
        from . import figures
        for name, g in acceptance.gallery():
            figures.render_graph(g, os.path.join(args.out, f"{name}.png"),
                                 title=name)
    return 0 if all(r.ok for r in results) else 1


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cdgraph",
        description="character degree graphs of SL2 module extensions")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, fn, help_):
        p = sub.add_parser(name, help=help_)
        p.set_defaults(func=fn)
        p.add_argument("--format", choices=("text", "json", "dot"),
                       default="text")
        return p

    def add_group_cmd(name, fn, help_):
        p = add(name, fn, help_)
        p.add_argument("--spec", required=True,
                       help="group spec JSON (inline or @file)")
        p.add_argument("--ceiling", type=int, default=DEFAULT_CEILING)
        return p

    def add_module_cmd(name, fn, help_):
        p = add(name, fn, help_)
        p.add_argument("--module", required=True,
                       help="catalogue label: V0, V1, W, U, natural, twist8")
        p.add_argument("--q", type=int, default=None,
                       help="field size for the natural module")
        return p

    add_group_cmd("group", cmd_group, "order, classes and exponent")
    add_group_cmd("degrees", cmd_degrees, "irreducible character degrees")
    p = add_group_cmd("graph", cmd_graph, "character degree graph")
    p.add_argument("--fig", help="also render the graph to this image path")
    p = add_group_cmd("analyze", cmd_analyze,
                      "degree graph with connectivity analysis")
    p.add_argument("--fig", help="also render the graph to this image path")

    p = add_module_cmd("orbits", cmd_orbits, "orbit and stabilizer data")
    p.add_argument("--fig", help="also render the orbit size graph")
    p = add_module_cmd("nq", cmd_nq, "normal Sylow q-subgroup condition")
    p.add_argument("--prime", type=int, required=True)
    p = add_module_cmd("vsets", cmd_vsets, "type I/II vector decomposition")
    p.add_argument("--r", type=int, default=None)
    p.add_argument("--s", type=int, default=None)

    p = add("predict", cmd_predict, "predicted graph for a classification case")
    p.add_argument("--case", required=True, help="case JSON (inline or @file)")
    p.add_argument("--fig", help="also render the graph to this image path")

    p = add("verify", cmd_verify, "check a witness group against its case")
    p.add_argument("--witness", required=True,
                   help="witness JSON (inline or @file)")
    p.add_argument("--ceiling", type=int, default=DEFAULT_CEILING)

    p = sub.add_parser("suite", help="run the acceptance battery")
    p.set_defaults(func=cmd_suite)
    p.add_argument("--long", action="store_true",
                   help="include the long-running stretch criterion")
    p.add_argument("--out", help="directory for suite.csv and figures")
    return parser


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return args.func(args)
    except CeilingExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (ValueError, KeyError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
