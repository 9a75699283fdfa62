"""Command-line front end.

Exit codes: ``decide-lo`` returns 0/1/2 for LeftOrderable/NotLeftOrderable/
OutOfScope; every other successful command returns 0; input, parse and
usage errors return 3 or more.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from math import prod

from .checkerboard import build_white_graph, color_faces, to_dot, trivial_white_graph
from .coset import DEFAULT_MAX_COSETS, enumerate_cosets
from .diagram import DiagramError, LinkDiagram, PDError, build_diagram, parse_pd, split_components
from .homology import diagram_homology, diagram_presentation
from .orderability import certify, decide, verdict_report
from .presentation import export_presentation

EXIT_INPUT_ERROR = 3
EXIT_USAGE_ERROR = 4

COMMANDS = ("parse", "whitegraph", "presentation", "det", "homology", "decide-lo", "enumerate")


@dataclass(frozen=True)
class RunConfig:
    command: str
    pd_path: str | None = None
    pd_text: str | None = None
    color: str = "a"
    root: int | None = None
    output: str = "human"  # human | json | dot
    presentation_format: str = "plain"
    max_cosets: int = DEFAULT_MAX_COSETS


class UsageError(Exception):
    pass


def _dump(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True)


def _load(config: RunConfig, stdin) -> LinkDiagram:
    if (config.pd_path is None) == (config.pd_text is None):
        raise UsageError("give exactly one of --pd or --code")
    if config.pd_text is not None:
        text = config.pd_text
    elif config.pd_path == "-":
        text = stdin.read()
    else:
        with open(config.pd_path, encoding="utf-8") as fh:
            text = fh.read()
    return build_diagram(parse_pd(text))


def _pieces(d: LinkDiagram, config: RunConfig) -> list[LinkDiagram]:
    parts = split_components(d)
    if config.root is not None and len(parts) != 1:
        raise UsageError("--root needs a connected diagram")
    return parts


def _white_graph(part: LinkDiagram, config: RunConfig):
    if part.n_crossings == 0:
        return trivial_white_graph()
    return build_white_graph(part, color_faces(part, config.color), config.root)


def _per_component(results: list):
    return results[0] if len(results) == 1 else {"components": results}


def _cmd_parse(d, config, out):
    if config.output == "json":
        out.write(_dump(d.to_json()) + "\n")
        return 0
    out.write(f"crossings: {d.n_crossings}\n")
    out.write(f"crossingless unknots: {d.pd.unknotted_extras}\n")
    out.write(f"faces: {len(d.faces)}\n")
    out.write(f"components: {len(d.components) + d.pd.unknotted_extras}\n")
    return 0


def _cmd_whitegraph(d, config, out):
    graphs = [_white_graph(p, config) for p in _pieces(d, config)]
    if config.output == "dot":
        out.write("".join(to_dot(w) for w in graphs))
    elif config.output == "json":
        out.write(_dump(_per_component([w.to_json() for w in graphs])) + "\n")
    else:
        for k, w in enumerate(graphs):
            out.write(f"component {k}: {len(w.vertices)} vertices, root {w.root}\n")
            for e in w.edges:
                out.write(f"  {e.u} -- {e.v}  {'+' if e.sign > 0 else '-'}  crossing {e.crossing}\n")
    return 0


def _cmd_presentation(d, config, out):
    pres = [diagram_presentation(p, config.color, config.root) for p in _pieces(d, config)]
    if config.output == "json":
        out.write(_dump(_per_component([p.to_json() for p in pres])) + "\n")
    elif config.presentation_format == "gap":
        out.write("\n".join(export_presentation(p, "gap") for p in pres))
    else:
        out.write("".join(export_presentation(p) + "\n" for p in pres))
    return 0


def _homology_json(d, config):
    groups = [diagram_homology(p, config.color, config.root) for p in _pieces(d, config)]
    if len(groups) == 1:
        return groups[0].to_json()
    # per-component values multiply, as for the split pieces of the verdict
    infinite = any(h.infinite for h in groups)
    torsion = sorted(x for h in groups for x in h.torsion)
    return {
        "determinant": 0 if infinite else prod(h.order for h in groups),
        "invariant_factors": torsion + [0] * sum(h.betti for h in groups),
        "infinite": infinite,
        "components": [h.to_json() for h in groups],
    }


def _cmd_det(d, config, out):
    result = _homology_json(d, config)
    if config.output == "json":
        out.write(_dump(result) + "\n")
    else:
        out.write(f"{result['determinant']}\n")
    return 0


def _cmd_homology(d, config, out):
    out.write(_dump(_homology_json(d, config)) + "\n")
    return 0


def _cmd_decide(d, config, out):
    verdict = decide(d, config.color)
    trace = certify(d, config.color, config.root)
    if config.output == "json":
        out.write(verdict_report(verdict, trace) + "\n")
    else:
        dets = ", ".join("n/a" if c.determinant is None else str(c.determinant) for c in verdict.components)
        out.write(f"{verdict.status.value} ({verdict.reason.value}); determinants: {dets}\n")
    return verdict.exit_code


def _cmd_enumerate(d, config, out):
    pres = [diagram_presentation(p, config.color, config.root) for p in _pieces(d, config)]
    tables = [enumerate_cosets(p, config.max_cosets) for p in pres]
    out.write(_dump(_per_component([t.to_json() for t in tables])) + "\n")
    return 0


_DISPATCH = {
    "parse": _cmd_parse,
    "whitegraph": _cmd_whitegraph,
    "presentation": _cmd_presentation,
    "det": _cmd_det,
    "homology": _cmd_homology,
    "decide-lo": _cmd_decide,
    "enumerate": _cmd_enumerate,
}


def run(config: RunConfig, out=None, err=None, stdin=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    stdin = stdin or sys.stdin
    try:
        d = _load(config, stdin)
        return _DISPATCH[config.command](d, config, out)
    except UsageError as e:
        err.write(f"error: {e}\n")
        return EXIT_USAGE_ERROR
    except (OSError, PDError, DiagramError, ValueError) as e:
        err.write(f"error: {e}\n")
        return EXIT_INPUT_ERROR


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    src = common.add_argument_group("input")
    src.add_argument("--pd", metavar="FILE", help="PD code file, or - for stdin")
    src.add_argument("--code", metavar="TEXT", help="inline PD code")
    common.add_argument("--color", choices=("a", "b"), default="a",
                        help="a: region at dart (0,0) is white; b: it is black")
    common.add_argument("--root", type=int, default=None, metavar="FACE", help="root face id")
    fmt = common.add_mutually_exclusive_group()
    fmt.add_argument("--json", action="store_const", dest="output", const="json")
    fmt.add_argument("--dot", action="store_const", dest="output", const="dot")
    common.add_argument("--format", choices=("plain", "gap"), default="plain",
                        help="presentation text format")
    common.add_argument("--max-cosets", type=int, default=DEFAULT_MAX_COSETS, metavar="N")

    parser = argparse.ArgumentParser(
        prog="doublecover",
        description="Branched double cover groups of link diagrams and their left-orderability.",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    helps = {
        "parse": "validate a PD code and report its face structure",
        "whitegraph": "rooted signed white graph",
        "presentation": "group presentation of the branched double cover",
        "det": "link determinant",
        "homology": "first homology as JSON",
        "decide-lo": "left-orderability verdict (exit 0/1/2)",
        "enumerate": "coset enumeration over the trivial subgroup",
    }
    for name in COMMANDS:
        sub.add_parser(name, parents=[common], help=helps[name])
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return 0 if e.code == 0 else EXIT_USAGE_ERROR
    if args.output == "dot" and args.command != "whitegraph":
        parser.print_usage(sys.stderr)
        sys.stderr.write("error: --dot is only available for whitegraph\n")
        return EXIT_USAGE_ERROR
    if args.max_cosets < 1:
        sys.stderr.write("error: --max-cosets must be positive\n")
        return EXIT_USAGE_ERROR
    config = RunConfig(
        command=args.command,
        pd_path=args.pd,
        pd_text=args.code,
        color=args.color,
        root=args.root,
        output=args.output or "human",
        presentation_format=args.format,
        max_cosets=args.max_cosets,
    )
    return run(config)


if __name__ == "__main__":
    sys.exit(main())
