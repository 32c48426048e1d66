"""Command line front end: file ingestion, reports, DOT and figure output,
and oracle verification runs.

Exit codes: 0 success (all checks agreed), 1 oracle disagreement,
2 graph not factorizable, 3 parse error, 4 oracle size bound exceeded.
"""

from __future__ import annotations

import argparse
import json
import os
import random
import sys
from typing import Sequence, TextIO

from .blossom import maximum_matching
from .decomposition import (
    FactorDecomposition,
    components_of_edges,
    decompose,
    is_elementary,
)
from .errors import (
    GraphError,
    NotFactorizableError,
    ParseError,
    PreconditionViolatedError,
    TooLargeError,
)
from .graph import Graph, Matching, build_graph, contract, induced_subgraph, neighbors_of_set
from .oracle import (
    OracleReport,
    make_report,
    oracle_allowed,
    oracle_ear_sequence,
    oracle_factor_critical,
    oracle_gsim_classes,
    oracle_leq,
    oracle_maximal_barriers,
)
from .partition import CanonicalPartition, generalized_partition
from .poset import ComponentPoset, build_poset, upper_bounds
from .randgraphs import random_factorizable_graph

SCHEMA_VERSION = 1
EXIT_OK = 0
EXIT_DISAGREE = 1
EXIT_NOT_FACTORIZABLE = 2
EXIT_PARSE = 3
EXIT_TOO_LARGE = 4
ORACLE_BOUND_ENV = "MATCHPOSE_ORACLE_MAX_N"
DEFAULT_VERIFY_MAX_N = 12

_INT_RE = frozenset("0123456789")


def _is_int_token(tok: str) -> bool:
    body = tok[1:] if tok[:1] == "-" else tok
    return bool(body) and set(body) <= _INT_RE


def parse_graph(path: str) -> tuple[Graph, list[str]]:
    """Read a graph file in edge-list or JSON format.

    Edge list: a header line ``n m`` followed by ``m`` lines ``u v``.
    Endpoint tokens may all be 0-based integer ids, or arbitrary unique
    labels which get dense ids in order of first appearance.  JSON:
    ``{"n": ..., "edges": [[u, v], ...]}`` with integer ids.

    Returns the graph and the label list indexed by vertex id.

    Raises:
        ParseError: malformed file (including bad ids or labels).
    """
    try:
        with open(path, "r", encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc}") from exc
    if text.lstrip().startswith("{"):
        return _parse_json_graph(text)
    return _parse_edge_list(text)


def _parse_json_graph(text: str) -> tuple[Graph, list[str]]:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc}") from exc
    if not isinstance(data, dict) or "n" not in data or "edges" not in data:
        raise ParseError('JSON graph needs keys "n" and "edges"')
    n = data["n"]
    edges = data["edges"]
    if not isinstance(n, int) or not isinstance(edges, list):
        raise ParseError('"n" must be an integer and "edges" a list')
    pairs: list[tuple[int, int]] = []
    for e in edges:
        if (
            not isinstance(e, (list, tuple))
            or len(e) != 2
            or not all(isinstance(x, int) for x in e)
        ):
            raise ParseError(f"bad edge entry {e!r}")
        pairs.append((e[0], e[1]))
    try:
        g = build_graph(n, pairs)
    except GraphError as exc:
        raise ParseError(str(exc)) from exc
    return g, [str(i) for i in range(n)]


def _parse_edge_list(text: str) -> tuple[Graph, list[str]]:
    lines = text.splitlines()
    rows: list[tuple[int, list[str]]] = [
        (i + 1, line.split()) for i, line in enumerate(lines) if line.strip()
    ]
    if not rows:
        raise ParseError("empty file")
    header_line, header = rows[0]
    if len(header) != 2 or not all(_is_int_token(t) for t in header):
        raise ParseError("header must be 'n m'", line=header_line)
    n, m = int(header[0]), int(header[1])
    body = rows[1:]
    if len(body) != m:
        raise ParseError(f"expected {m} edge lines, found {len(body)}")
    tokens = [t for _, row in body for t in row]
    for lineno, row in body:
        if len(row) != 2:
            raise ParseError("edge line must be 'u v'", line=lineno)
    integer_mode = all(_is_int_token(t) for t in tokens)
    if integer_mode:
        labels = [str(i) for i in range(n)]
        pairs = []
        for lineno, (a, b) in [(ln, (r[0], r[1])) for ln, r in body]:
            u, v = int(a), int(b)
            if not (0 <= u < n and 0 <= v < n):
                raise ParseError(f"vertex id outside 0..{n - 1}", line=lineno)
            pairs.append((lineno, u, v))
    else:
        ids: dict[str, int] = {}
        pairs = []
        for lineno, row in body:
            uv = []
            for t in row:
                if t not in ids:
                    if len(ids) == n:
                        raise ParseError(
                            f"more than {n} distinct labels", line=lineno
                        )
                    ids[t] = len(ids)
                uv.append(ids[t])
            pairs.append((lineno, uv[0], uv[1]))
        labels = [""] * n
        for t, i in ids.items():
            labels[i] = t
        used = set(ids)
        for i in range(n):
            if not labels[i]:
                name = f"v{i}"
                while name in used:
                    name = "_" + name
                labels[i] = name
                used.add(name)
    edges: list[tuple[int, int]] = []
    seen: set[tuple[int, int]] = set()
    for lineno, u, v in pairs:
        if u == v:
            raise ParseError(f"self-loop at vertex {u}", line=lineno)
        key = (u, v) if u < v else (v, u)
        if key in seen:
            raise ParseError(f"duplicate edge {key}", line=lineno)
        seen.add(key)
        edges.append((u, v))
    try:
        g = build_graph(n, edges)
    except GraphError as exc:
        raise ParseError(str(exc)) from exc
    return g, labels


def build_report(
    g: Graph,
    labels: list[str],
    m: Matching,
    d: FactorDecomposition,
    part: CanonicalPartition,
    p: ComponentPoset,
) -> dict:
    """Schema-versioned report with every section sorted for stable bytes."""
    return {
        "schema": SCHEMA_VERSION,
        "graph": {"n": g.n, "edges": sorted([u, v] for u, v in g.edges)},
        "labels": list(labels),
        "matching": sorted([u, v] for u, v in m.edges),
        "decomposition": {
            "allowed": sorted([u, v] for u, v in d.allowed),
            "components": [sorted(c) for c in d.components],
        },
        "partition": {
            "classes": [
                {"component": ci, "vertices": sorted(cls)}
                for ci, cls in part.classes
            ]
        },
        "poset": {
            "arcs": [list(a) for a in p.arcs],
            "leq": [[bool(x) for x in row] for row in p.leq],
            "covers": [list(c) for c in p.covers],
        },
    }


def serialize_report(report: dict, compact: bool = False) -> str:
    if compact:
        return json.dumps(report, sort_keys=True, separators=(",", ":"))
    return json.dumps(report, sort_keys=True, indent=2)


def parse_report(text: str) -> dict:
    """Inverse of :func:`serialize_report`.

    Raises:
        ParseError: not JSON or wrong schema version.
    """
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid report JSON: {exc}") from exc
    if not isinstance(data, dict) or data.get("schema") != SCHEMA_VERSION:
        raise ParseError(f"unsupported report schema: {data.get('schema')!r}")
    return data


def render_dot(
    labels: list[str],
    d: FactorDecomposition,
    part: CanonicalPartition,
    p: ComponentPoset,
) -> str:
    """Hasse diagram in DOT: one cluster per component (labeled by its
    sorted vertex list), partition classes as nested vertex clusters,
    covering arcs between component clusters."""
    lines = [
        "digraph matchpose {",
        "  compound=true;",
        "  rankdir=BT;",
        "  node [shape=circle, fontsize=10];",
    ]
    anchor: dict[int, str] = {}
    for ci, comp in enumerate(d.components):
        verts = sorted(comp)
        shown = ", ".join(labels[v] for v in verts)
        lines.append(f"  subgraph cluster_h{ci} {{")
        lines.append(f'    label="H{ci}: [{shown}]";')
        for si, (cci, cls) in enumerate(part.classes):
            if cci != ci:
                continue
            lines.append(f"    subgraph cluster_h{ci}s{si} {{")
            lines.append('      label=""; style=dashed;')
            for v in sorted(cls):
                name = f"v{v}"
                lines.append(f'      {name} [label="{labels[v]}"];')
                anchor.setdefault(ci, name)
            lines.append("    }")
        lines.append("  }")
    for a, b in p.covers:
        lines.append(
            f"  {anchor[a]} -> {anchor[b]} "
            f"[ltail=cluster_h{a}, lhead=cluster_h{b}];"
        )
    lines.append("}")
    return "\n".join(lines) + "\n"


def _print_text_report(report: dict, out: TextIO) -> None:
    labels = report["labels"]
    g = report["graph"]
    out.write(f"n\t{g['n']}\n")
    out.write(f"m\t{len(g['edges'])}\n")
    pairs = " ".join(f"{labels[u]}-{labels[v]}" for u, v in report["matching"])
    out.write(f"matching\t{pairs}\n")
    comps = report["decomposition"]["components"]
    out.write(f"components\t{len(comps)}\n")
    for ci, comp in enumerate(comps):
        out.write(f"H{ci}\t{' '.join(labels[v] for v in comp)}\n")
    classes = report["partition"]["classes"]
    out.write(f"classes\t{len(classes)}\n")
    for si, cls in enumerate(classes):
        shown = " ".join(labels[v] for v in cls["vertices"])
        out.write(f"H{cls['component']}/S{si}\t{shown}\n")
    covers = report["poset"]["covers"]
    out.write(
        "covers\t" + " ".join(f"H{a}<H{b}" for a, b in covers) + "\n"
    )


def cmd_analyze(args: argparse.Namespace) -> int:
    try:
        g, labels = parse_graph(args.file)
    except ParseError as exc:
        print(f"matchpose: parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    mr = maximum_matching(g)
    if not mr.is_perfect:
        exposed = sorted(mr.exposed)
        print(
            f"matchpose: graph is not factorizable "
            f"(maximum matching leaves {len(exposed)} vertices exposed)",
            file=sys.stderr,
        )
        return EXIT_NOT_FACTORIZABLE
    m = mr.matching
    d = decompose(g, m)
    part = generalized_partition(g, d)
    p = build_poset(g, m, d)
    report = build_report(g, labels, m, d, part, p)
    if args.json:
        print(serialize_report(report))
    else:
        _print_text_report(report, sys.stdout)
    if args.dot:
        with open(args.dot, "w", encoding="utf-8") as fh:
            fh.write(render_dot(labels, d, part, p))
    if args.figure:
        from . import viz

        viz.render_figure(g, d, part, p, args.figure)
    return EXIT_OK


def verify_instance(g: Graph, instance: str, max_n: int) -> list[OracleReport]:
    """Run the whole fast pipeline against the oracle suite on one graph.

    Raises:
        NotFactorizableError: the graph has no perfect matching.
        TooLargeError: the instance exceeds the oracle bound.
    """
    if g.n > max_n:
        raise TooLargeError(f"n={g.n} exceeds verify bound {max_n}")
    mr = maximum_matching(g)
    if not mr.is_perfect:
        raise NotFactorizableError("graph has no perfect matching")
    m = mr.matching
    d = decompose(g, m)
    part = generalized_partition(g, d)
    p = build_poset(g, m, d)
    comps = list(d.components)
    k = len(comps)
    reports = [
        make_report(
            "allowed-edges", instance, sorted(d.allowed), sorted(oracle_allowed(g, max_n))
        ),
        make_report(
            "components",
            instance,
            [sorted(c) for c in d.components],
            [sorted(c) for c in components_of_edges(g.n, oracle_allowed(g, max_n))],
        ),
        make_report(
            "partition-classes",
            instance,
            [(ci, sorted(c)) for ci, c in part.classes],
            [(ci, sorted(c)) for ci, c in oracle_gsim_classes(g, comps, max_n)],
        ),
        make_report(
            "order-vs-definition",
            instance,
            [[p.leq[a][b] for b in range(k)] for a in range(k)],
            [[oracle_leq(g, comps, a, b, max_n) for b in range(k)] for a in range(k)],
        ),
        make_report(
            "order-vs-ear-sequences",
            instance,
            [[p.leq[a][b] for b in range(k)] for a in range(k)],
            [
                [oracle_ear_sequence(g, m, comps, a, b, max_n) for b in range(k)]
                for a in range(k)
            ],
        ),
    ]
    if is_elementary(d):
        reports.append(
            make_report(
                "maximal-barriers",
                instance,
                sorted(sorted(c) for _, c in part.classes),
                sorted(sorted(b) for b in oracle_maximal_barriers(g, max_n)),
            )
        )
    # Attachment of upper components: each connected piece above H touches
    # H inside a single partition class.
    attach_ok = True
    for hi in range(k):
        up = upper_bounds(p, hi, strict=True)
        upset = set().union(*(comps[i] for i in up)) if up else set()
        if not upset:
            continue
        sub, remap = induced_subgraph(g, upset)
        for piece in components_of_edges(sub.n, sub.edges):
            orig = {remap[v] for v in piece}
            boundary = neighbors_of_set(g, orig) & comps[hi]
            touched = {part.class_of[v] for v in boundary}
            if len(touched) > 1:
                attach_ok = False
    reports.append(
        make_report("base-attachment", instance, attach_ok, True)
    )
    ideal_ok = True
    for hi in range(k):
        upstar = set().union(
            *(comps[i] for i in upper_bounds(p, hi, strict=False))
        )
        sub, remap = induced_subgraph(g, upstar)
        index = {v: i for i, v in enumerate(remap)}
        quotient = contract(sub, {index[v] for v in comps[hi]}).quotient
        if not oracle_factor_critical(quotient, max(max_n, quotient.n)):
            ideal_ok = False
    reports.append(
        make_report("ideal-contraction", instance, ideal_ok, True)
    )
    return reports


def _oracle_bound() -> int:
    raw = os.environ.get(ORACLE_BOUND_ENV)
    if raw is None:
        return DEFAULT_VERIFY_MAX_N
    try:
        return int(raw)
    except ValueError:
        print(
            f"matchpose: ignoring bad {ORACLE_BOUND_ENV}={raw!r}", file=sys.stderr
        )
        return DEFAULT_VERIFY_MAX_N


def cmd_verify(args: argparse.Namespace) -> int:
    max_n = _oracle_bound()
    instances: list[tuple[str, Graph]] = []
    if args.random:
        n, m, seed, count = args.random
        rng = random.Random(seed)
        try:
            for i in range(count):
                g = random_factorizable_graph(n, m, rng)
                instances.append((f"random(n={n},m={m},seed={seed})#{i}", g))
        except PreconditionViolatedError as exc:
            print(f"matchpose: bad --random parameters: {exc}", file=sys.stderr)
            return EXIT_PARSE
    else:
        try:
            g, _ = parse_graph(args.file)
        except ParseError as exc:
            print(f"matchpose: parse error: {exc}", file=sys.stderr)
            return EXIT_PARSE
        instances.append((args.file, g))
    all_agreed = True
    for instance, g in instances:
        try:
            reports = verify_instance(g, instance, max_n)
        except TooLargeError as exc:
            print(f"matchpose: {exc}", file=sys.stderr)
            return EXIT_TOO_LARGE
        except NotFactorizableError:
            print(
                f"matchpose: {instance}: graph is not factorizable",
                file=sys.stderr,
            )
            return EXIT_NOT_FACTORIZABLE
        for r in reports:
            status = "agreed" if r.agreed else "MISMATCH"
            print(f"{status}\t{r.subject}\t{r.instance}")
            if not r.agreed:
                all_agreed = False
                print(f"  fast:   {r.fast_result}")
                print(f"  oracle: {r.oracle_result}")
    return EXIT_OK if all_agreed else EXIT_DISAGREE


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="matchpose",
        description=(
            "Decompose a graph with perfect matchings into factor-components, "
            "compute the canonical partition and the component order."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)
    pa = sub.add_parser("analyze", help="full report for one graph file")
    pa.add_argument("file", help="graph file (edge list or JSON)")
    pa.add_argument("--json", action="store_true", help="emit the JSON report")
    pa.add_argument("--dot", metavar="OUT.dot", help="write the Hasse diagram as DOT")
    pa.add_argument(
        "--figure", metavar="OUT.png", help="render graph and Hasse diagram with matplotlib"
    )
    pv = sub.add_parser("verify", help="cross-check fast algorithms against oracles")
    pv.add_argument("file", nargs="?", help="graph file to verify")
    pv.add_argument(
        "--random",
        nargs=4,
        type=int,
        metavar=("N", "M", "SEED", "COUNT"),
        help="verify COUNT random factorizable graphs with N vertices, M edges",
    )
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    if args.command == "analyze":
        return cmd_analyze(args)
    if args.command == "verify":
        if bool(args.file) == bool(args.random):
            print(
                "matchpose: verify needs a file or --random N M SEED COUNT",
                file=sys.stderr,
            )
            return EXIT_PARSE
        return cmd_verify(args)
    raise AssertionError(f"unknown command {args.command}")


if __name__ == "__main__":
    sys.exit(main())
