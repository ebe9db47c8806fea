"""Command-line entry point.

Exit codes: 0 success / yes-instance, 1 rejected (no-instance or failed
verification), 2 not a cocomparability graph, 3 drawing failed its own
verification, 64 unreadable input, 65 inconsistent input (poset or sigma).
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from dataclasses import asdict, dataclass, field
from pathlib import Path

from .characterization import classify_b0
from .core import (Graph, Ordering, Poset, cocomparability_graph, format_graph, format_poset,
                   induced_c4_list, induced_diamonds, parse_graph, parse_instance, parse_poset)
from .errors import InvalidPoset, InvalidSigma, ParseError, SizeLimit
from .harness import (GenConfig, brute_co_c6, gen_bipartite_permutation, gen_interval_order,
                      gen_random_poset, oracle_cocomparability)
from .layout import draw_b0, drawing_from_json, drawing_to_json
from .svg import render_svg
from .verify import verify_drawing

EXIT_OK, EXIT_NO, EXIT_NOT_COCOMP, EXIT_UNVERIFIED = 0, 1, 2, 3
EXIT_PARSE, EXIT_INVALID = 64, 65

VERDICT_EXIT = {"yes": EXIT_OK, "no": EXIT_NO, "not-cocomparability": EXIT_NOT_COCOMP}


@dataclass
class RunReport:
    verdict: str
    witness: dict | None = None
    timings: dict = field(default_factory=dict)
    artifacts: list = field(default_factory=list)
    detail: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        return {k: v for k, v in asdict(self).items() if v or k == "verdict"}


class _Timer:
    def __init__(self, report: RunReport):
        self.report = report

    def __call__(self, stage):
        timer = self

        class _Stage:
            def __enter__(self):
                self.t = time.perf_counter()

            def __exit__(self, *exc):
                timer.report.timings[stage] = round(time.perf_counter() - self.t, 6)
        return _Stage()


def _read(path: str) -> str:
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise ParseError(f"{path}: {exc.strerror}") from None


def _sigma(text: str | None) -> Ordering | None:
    if text is None:
        return None
    return Ordering(text.replace(",", " ").split())


def _emit(report: RunReport, args, code: int) -> int:
    if getattr(args, "report", None):
        report.artifacts.append(args.report)
    payload = json.dumps(report.to_json(), indent=2, default=str)
    if getattr(args, "report", None):
        Path(args.report).write_text(payload + "\n", encoding="utf-8")
    print(payload)
    return code


def _load_graph_and_poset(args) -> tuple[Graph, Poset | None]:
    inst = parse_instance(_read(args.input))
    poset = parse_poset(_read(args.poset)) if args.poset else None
    if isinstance(inst, Poset):
        if poset is not None:
            raise InvalidPoset("give the poset either as the input or via --poset, not both")
        return cocomparability_graph(inst), inst
    return inst, poset


def cmd_recognize(args) -> int:
    report = RunReport("invalid-input")
    tick = _Timer(report)
    try:
        with tick("parse"):
            g, poset = _load_graph_and_poset(args)
            sigma = _sigma(args.sigma)
    except ParseError as exc:
        report.detail["error"] = str(exc)
        return _emit(report, args, EXIT_PARSE)
    except InvalidPoset as exc:
        report.detail["error"] = str(exc)
        return _emit(report, args, EXIT_INVALID)
    try:
        with tick("classify"):
            cls = classify_b0(g, poset, sigma)
    except (InvalidPoset, InvalidSigma) as exc:
        report.detail["error"] = str(exc)
        return _emit(report, args, EXIT_INVALID)
    report.verdict = cls.verdict
    report.witness = cls.witness.to_json() if cls.witness else None
    if cls.sigma is not None:
        report.detail["sigma"] = list(cls.sigma)
    return _emit(report, args, VERDICT_EXIT[cls.verdict])


def cmd_draw(args) -> int:
    report = RunReport("invalid-input")
    tick = _Timer(report)
    try:
        with tick("parse"):
            g, poset = _load_graph_and_poset(args)
            sigma = _sigma(args.sigma)
    except ParseError as exc:
        report.detail["error"] = str(exc)
        return _emit(report, args, EXIT_PARSE)
    except InvalidPoset as exc:
        report.detail["error"] = str(exc)
        return _emit(report, args, EXIT_INVALID)
    try:
        with tick("pipeline"):
            result = draw_b0(g, poset, sigma)
    except (InvalidPoset, InvalidSigma) as exc:
        report.detail["error"] = str(exc)
        return _emit(report, args, EXIT_INVALID)
    report.verdict = result.verdict
    if result.drawing is None:
        report.witness = result.witness.to_json()
        return _emit(report, args, VERDICT_EXIT[result.verdict])

    with tick("verify"):
        check = verify_drawing(result.drawing, g, result.classification.poset)
    report.detail["verification"] = check.to_json()
    if not check.ok:
        report.detail["error"] = "drawing failed verification; nothing written"
        return _emit(report, args, EXIT_UNVERIFIED)

    with tick("emit"):
        text = drawing_to_json(result.drawing)
        if args.json:
            Path(args.json).write_text(text, encoding="utf-8")
            report.artifacts.append(args.json)
        if args.svg:
            svg = render_svg(result.drawing, scale=args.scale, jitter=args.jitter)
            Path(args.svg).write_text(svg, encoding="utf-8")
            report.artifacts.append(args.svg)
    if not args.json:
        report.detail["drawing"] = json.loads(text)
    return _emit(report, args, EXIT_OK)


def cmd_verify(args) -> int:
    report = RunReport("invalid-input")
    tick = _Timer(report)
    try:
        with tick("parse"):
            drawing = drawing_from_json(_read(args.drawing))
            g = parse_graph(_read(args.graph))
            poset = parse_poset(_read(args.poset)) if args.poset else None
    except ParseError as exc:
        report.detail["error"] = str(exc)
        return _emit(report, args, EXIT_PARSE)
    with tick("verify"):
        check = verify_drawing(drawing, g, poset)
    report.verdict = "pass" if check.ok else "fail"
    report.detail["verification"] = check.to_json()
    return _emit(report, args, EXIT_OK if check.ok else EXIT_NO)


def cmd_gen(args) -> int:
    seed = int(os.environ.get("VPG0_SEED", args.seed))
    cfg = GenConfig(args.n, args.density, seed)
    if args.kind == "poset":
        text = format_poset(gen_random_poset(cfg))
    elif args.kind == "interval-order":
        text = format_poset(gen_interval_order(cfg))
    elif args.kind == "cocomparability":
        text = format_graph(cocomparability_graph(gen_random_poset(cfg)))
    else:
        text = format_graph(gen_bipartite_permutation(cfg))
    if args.out:
        Path(args.out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_oracle(args) -> int:
    report = RunReport("oracle")
    try:
        inst = parse_instance(_read(args.input))
    except ParseError as exc:
        report.detail["error"] = str(exc)
        return _emit(report, args, EXIT_PARSE)
    g = cocomparability_graph(inst) if isinstance(inst, Poset) else inst
    try:
        report.detail["cocomparability"] = oracle_cocomparability(g)
    except SizeLimit as exc:
        report.detail["error"] = str(exc)
        return _emit(report, args, EXIT_INVALID)
    report.detail["inducedC4"] = [list(q) for q in induced_c4_list(g)]
    report.detail["diamondDiagonals"] = sorted({tuple(e) for _, e in induced_diamonds(g)})
    report.detail["coC6"] = [sorted(s, key=g.index) for s in brute_co_c6(g)]
    return _emit(report, args, EXIT_OK)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="vpg0", description="Recognise and draw B0-VPG cocomparability graphs.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("recognize", help="decide whether a graph is a B0-VPG cocomparability graph")
    p.add_argument("input", help="graph or poset file")
    p.add_argument("--poset", help="poset whose cocomparability graph is the input graph")
    p.add_argument("--sigma", help="linear extension, comma or space separated")
    p.add_argument("--report", help="also write the JSON report here")
    p.set_defaults(func=cmd_recognize)

    p = sub.add_parser("draw", help="construct and self-verify a drawing")
    p.add_argument("input", help="graph or poset file")
    p.add_argument("--poset", help="poset whose cocomparability graph is the input graph")
    p.add_argument("--sigma", help="linear extension, comma or space separated")
    p.add_argument("--json", help="write the drawing JSON here")
    p.add_argument("--svg", help="write an SVG rendering here")
    p.add_argument("--scale", type=float, default=40.0, help="pixels per unit (default 40)")
    p.add_argument("--jitter", type=float, default=0.0,
                   help="display-only pixel offset between collinear overlapping segments")
    p.add_argument("--report", help="also write the JSON report here")
    p.set_defaults(func=cmd_draw)

    p = sub.add_parser("verify", help="check a drawing against a graph and optionally a poset")
    p.add_argument("drawing")
    p.add_argument("graph")
    p.add_argument("--poset")
    p.add_argument("--report")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("gen", help="emit a random instance")
    p.add_argument("kind", choices=["poset", "interval-order", "bipartite-permutation",
                                    "cocomparability"])
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--density", type=float, default=0.5)
    p.add_argument("--seed", type=int, default=0, help="overridden by $VPG0_SEED")
    p.add_argument("--out")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("oracle", help="run the brute-force oracles on a small graph")
    p.add_argument("input")
    p.add_argument("--report")
    p.set_defaults(func=cmd_oracle)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
