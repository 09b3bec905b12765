"""Command-line front end; every operation is a reproducible subcommand.

Default output is markdown-ish plain text; ``--json`` switches to a stable
JSON form (schema_version 1).  Exit status: 0 success, 1 audit failure,
2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys

from .embed import chain_names, named_chain
from .fixdim import ADJOINT_DIMENSION, ClassFusion, fixed_point_dimension
from .repth import adjoint_character, factor_dimensions, restrict, semisimplify
from .rootsys import SimpleType, build_root_system
from .spin2 import SignVector, classical_centralizer, identify_2group, so_centralizer_type
from .tabver import (
    SUBGROUP_TABLES,
    TABLE_ALIASES,
    assemble_traces,
    load_tables,
    run_full_audit,
)
from .torsion import adjoint_trace, class_by_name, enumerate_irreducible_elements

SCHEMA_VERSION = 1


def _emit_json(payload) -> int:
    payload = {"schema_version": SCHEMA_VERSION, **payload}
    print(json.dumps(payload, sort_keys=True, indent=2))
    return 0


def _cmd_roots(args) -> int:
    rs = build_root_system(SimpleType.parse(args.type))
    info = {
        "type": rs.label(),
        "rank": rs.rank,
        "num_roots": len(rs.all_roots),
        "adjoint_dimension": rs.type.adjoint_dimension,
        "marks": list(rs.marks),
        "max_mark": max(rs.marks),
    }
    if args.json:
        return _emit_json(info)
    print(f"{info['type']}: rank {info['rank']}, {info['num_roots']} roots,"
          f" adjoint dimension {info['adjoint_dimension']}")
    print(f"highest-root marks: {info['marks']} (max {info['max_mark']})")
    return 0


def _cmd_torsion_enum(args) -> int:
    rs = build_root_system(SimpleType.parse(args.type))
    classes = enumerate_irreducible_elements(rs)
    annotations = {
        label: cls.annotation
        for (group, label), cls in load_tables().classes.items()
        if group == rs.label()
    }
    if args.json:
        payload = [
            {**c.to_json(), "component_annotation": annotations.get(c.name, "")}
            for c in classes
        ]
        return _emit_json({"group": rs.label(), "classes": payload})
    print("| class | order | labels | centralizer | trace |")
    print("|---|---|---|---|---|")
    for c in classes:
        labels = ",".join(map(str, c.kac.labels))
        cent = f"{c.centralizer}{annotations.get(c.name, '')}"
        print(f"| {c.name} | {c.order} | ({labels}) | {cent} | {c.trace} |")
    return 0


def _cmd_trace(args) -> int:
    cls = class_by_name(args.type, args.cls)
    value = adjoint_trace(cls.kac, args.power)
    if args.json:
        return _emit_json(
            {"group": args.type, "class": args.cls, "power": args.power, "trace": str(value)}
        )
    print(value)
    return 0


def _cmd_branch(args) -> int:
    if args.chain is None:
        names = chain_names(args.group)
        if args.json:
            return _emit_json({"group": args.group, "chains": names})
        print("\n".join(names))
        return 0
    emb = named_chain(args.group, args.chain)
    adj = adjoint_character(build_root_system(SimpleType.parse(args.group)))
    restricted = restrict(adj, emb)
    factors = factor_dimensions(emb.source, semisimplify(restricted))
    trivial = any(all(x == 0 for x in mu) for mu, _, _ in factors)
    if args.json:
        return _emit_json(
            {
                "group": args.group,
                "chain": args.chain,
                "source": emb.source.label(),
                "dimension": restricted.dimension,
                "factors": [
                    {"weight": list(mu), "multiplicity": m, "dimension": d}
                    for mu, m, d in factors
                ],
                "has_trivial_factor": trivial,
            }
        )
    print(f"adjoint module of {args.group} restricted to {emb.source.label()}"
          f" (chain {args.chain}, dimension {restricted.dimension})")
    print("| weight | multiplicity | dimension |")
    print("|---|---|---|")
    for mu, m, d in factors:
        print(f"| {list(mu)} | {m} | {d} |")
    print(f"trivial composition factor: {'yes' if trivial else 'no'}")
    return 0


def _cmd_fixdim(args) -> int:
    fusion = ClassFusion.parse(args.fusion)
    traces, _ = assemble_traces(load_tables())
    value = fixed_point_dimension(ADJOINT_DIMENSION[args.group], fusion, traces, args.group)
    if args.json:
        return _emit_json(
            {
                "group": args.group,
                "fusion": str(fusion),
                "group_order": fusion.group_order,
                "fixed_dimension": str(value),
                "integral": value.denominator == 1,
            }
        )
    print(value)
    return 0


def _cmd_classify_2group(args) -> int:
    vectors = [SignVector.parse(v, args.n) for v in args.vectors]
    group = identify_2group(vectors)
    cent = so_centralizer_type(vectors, args.n)
    payload = {
        "vectors": [str(v) for v in vectors],
        "group": str(group),
        "order": group.order,
        "centralizer": str(cent.label),
        "torus_blocks": cent.torus_blocks,
        "dropped_dimensions": cent.dropped,
    }
    if args.json:
        return _emit_json(payload)
    torus = f", {cent.torus_blocks} torus block(s)" if cent.torus_blocks else ""
    print(f"{group}, centralizer {cent.label}{torus}")
    return 0


def _cmd_classical_centralizer(args) -> int:
    label = classical_centralizer(args.blocks, args.ambient)
    if args.json:
        return _emit_json(
            {"ambient": args.ambient, "blocks": args.blocks, "centralizer": str(label)}
        )
    print(label)
    return 0


def _cmd_solve_traces(args) -> int:
    traces, findings = assemble_traces(load_tables())
    rows = [
        {"class": label, "trace": str(value), "provenance": prov}
        for (g, label), (value, prov) in sorted(traces.entries.items())
        if g == args.group
    ]
    if args.json:
        return _emit_json(
            {"group": args.group, "traces": rows, "findings": [f.message for f in findings]}
        )
    print("| class | trace | provenance |")
    print("|---|---|---|")
    for r in rows:
        print(f"| {r['class']} | {r['trace']} | {r['provenance']} |")
    for f in findings:
        print(f"finding: {f.message}")
    return 0


def _cmd_verify(args) -> int:
    tables = None
    if args.table:
        name = TABLE_ALIASES.get(args.table, args.table)
        if name not in SUBGROUP_TABLES + ("maximal",):
            print(f"unknown table {args.table!r}", file=sys.stderr)
            return 2
        tables = (name,)
    report = run_full_audit(load_tables(), tables)
    if args.json:
        print(report.to_json(), end="")
    else:
        print(report.to_markdown(), end="")
    return 0 if report.ok else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lca",
        description="exact Lie-theoretic calculator and table auditor for finite"
        " subgroups with irreducible centralizers",
    )
    sub = parser.add_subparsers(dest="verb", required=True)

    def add(name, func, **kwargs):
        p = sub.add_parser(name, **kwargs)
        p.add_argument("--json", action="store_true", help="emit JSON")
        p.set_defaults(func=func)
        return p

    p = add("roots", _cmd_roots, help="root system summary")
    p.add_argument("type")

    p = add("torsion-enum", _cmd_torsion_enum, help="elements with irreducible centralizer")
    p.add_argument("type")

    p = add("trace", _cmd_trace, help="adjoint trace of an inner torsion class")
    p.add_argument("type")
    p.add_argument("cls", metavar="class")
    p.add_argument("--power", type=int, default=1)

    p = add("branch", _cmd_branch, help="restrict the adjoint module along a named chain")
    p.add_argument("group")
    p.add_argument("chain", nargs="?")

    p = add("fixdim", _cmd_fixdim, help="fixed-point dimension from class fusion")
    p.add_argument("--group", required=True, choices=sorted(ADJOINT_DIMENSION))
    p.add_argument("--fusion", required=True)

    p = add("classify-2group", _cmd_classify_2group, help="spin-lift 2-group type and centralizer")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("vectors", nargs="+")

    p = add("classical-centralizer", _cmd_classical_centralizer, help="Sp/SO block centralizer")
    p.add_argument("--ambient", required=True)
    p.add_argument("blocks", nargs="+", type=int)

    p = add("solve-traces", _cmd_solve_traces, help="trace table with provenance")
    p.add_argument("group", choices=sorted(ADJOINT_DIMENSION))

    p = add("verify", _cmd_verify, help="audit table rows")
    group = p.add_mutually_exclusive_group()
    group.add_argument("--table")
    group.add_argument("--all", action="store_true")

    return parser


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    try:
        return args.func(args)
    except (ValueError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run())
