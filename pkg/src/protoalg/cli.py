"""Command-line interface.

Exit status is 0 when every requested check holds, 1 when a check fails
(the witness is printed) and 2 for usage or input errors.
"""
from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass
from pathlib import Path
from typing import Sequence

from . import protomod
from .errors import NotRightCancellable, ProtoAlgError
from .groups import identify_small_group
from .model import ProtomodularFrame, parse_algebra, serialize_algebra
from .reconstruct import (
    from_action_quadruple,
    from_group_triple,
    group_at,
    parse_action_quadruple,
    parse_group_triple,
)
from .search import DEFAULT_BOUNDS, SearchSpec, census, enumerate_frames, render_census
from .termlang import check_theory, load_preset, parse_theory
from .translations import distinct_translations, is_principal, translation_group


@dataclass(frozen=True)
class CommandResult:
    exit_code: int
    output: str


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")

    def exit(self, status=0, message=None):
        raise UsageError(message or "")


def _prop_list(text: str) -> list[str]:
    props = [p.strip() for p in text.split(",") if p.strip()]
    bad = [p for p in props if p not in protomod.PROPERTY_CHECKS]
    if bad:
        raise argparse.ArgumentTypeError(
            f"unknown properties {', '.join(bad)} (known: {', '.join(protomod.PROPERTIES)})"
        )
    return props


def _load_frame(path: str) -> ProtomodularFrame:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None
    return parse_algebra(text)


def _render_table(values: Sequence[int], width: int) -> list[str]:
    cell = max(len(str(v)) for v in values)
    return [
        "  " + " ".join(str(v).rjust(cell) for v in values[i : i + width])
        for i in range(0, len(values), width)
    ]


def _render_report(r: protomod.CheckReport) -> str:
    if r.holds:
        line = f"{r.property}: holds"
    else:
        line = f"{r.property}: FAILS  {r.describe_witness()}"
        if r.law:
            line += f"  [{r.law}]"
    if "theta_b_bijective" in r.info:
        line += f"  (theta_b bijective: {'yes' if r.info['theta_b_bijective'] else 'no'})"
    return line


# -- subcommands ------------------------------------------------------------


def cmd_check(args) -> CommandResult:
    frame = _load_frame(args.file)
    reports = protomod.run_checks(frame, args.props)
    lines = [f"frame n={frame.n} size={frame.k}"]
    lines += [_render_report(r) for r in reports]
    if frame.n == 1:
        labels = [x for x in ("left-semi-loop", "loop", "group-under-theta") if x in protomod.classify_n1(frame)]
        lines.append(f"class: {', '.join(labels) if labels else '-'}")
    return CommandResult(0 if all(reports) else 1, "\n".join(lines) + "\n")


def cmd_group(args) -> CommandResult:
    frame = _load_frame(args.file)
    if not 0 <= args.unit < frame.k:
        raise UsageError(f"unit {args.unit} outside carrier of size {frame.k}")
    try:
        g = group_at(frame, args.unit)
    except NotRightCancellable as exc:
        return CommandResult(1, f"right-cancellable: FAILS  {exc}\n")
    lines = [f"group at unit {args.unit}, order {g.size}", "table:"]
    lines += _render_table(g.op, g.size)
    lines.append("inverses: " + " ".join(map(str, g.inverse)))
    lines.append(f"label: {identify_small_group(g) if g.size <= 8 else 'unidentified'}")
    return CommandResult(0, "\n".join(lines) + "\n")


def cmd_translations(args) -> CommandResult:
    frame = _load_frame(args.file)
    maps = distinct_translations(frame)
    lines = [f"distinct translations: {len(maps)}"]
    for idx, t in enumerate(maps):
        lines.append(f"  [{idx}] rep={','.join(map(str, t.rep))}  map={' '.join(map(str, t.map))}")
    try:
        tg = translation_group(frame)
    except NotRightCancellable as exc:
        principal = is_principal([t.map for t in maps], frame.k)
        lines.append(f"principal action: {'yes' if principal else 'no'}")
        lines.append(f"right-cancellable: FAILS  {exc}")
        return CommandResult(1, "\n".join(lines) + "\n")
    g = tg.as_group_table()
    lines.append("cayley table (row after column):")
    lines += _render_table(g.op, g.size)
    lines.append(f"unit index: {g.unit}")
    lines.append("element orders: " + " ".join(map(str, g.element_orders())))
    lines.append(f"label: {identify_small_group(g) if g.size <= 8 else 'unidentified'}")
    lines.append(f"principal action: {'yes' if is_principal([t.map for t in tg.elements], frame.k) else 'no'}")
    return CommandResult(0, "\n".join(lines) + "\n")


def cmd_construct(args) -> CommandResult:
    try:
        text = Path(args.file).read_text()
    except OSError as exc:
        raise UsageError(f"cannot read {args.file}: {exc.strerror}") from None
    if args.source == "from-group":
        frame = from_group_triple(parse_group_triple(text), args.n)
    else:
        frame = from_action_quadruple(parse_action_quadruple(text), args.n)
    return CommandResult(0, serialize_algebra(frame))


def _spec(args) -> SearchSpec:
    bounds = dict(DEFAULT_BOUNDS)
    if args.max_size is not None:
        bounds[args.n] = args.max_size
    return SearchSpec(
        args.n, args.size, frozenset(args.require), frozenset(args.forbid), args.limit, bounds
    )


def cmd_search(args) -> CommandResult:
    spec = _spec(args)
    frames = list(enumerate_frames(spec, workers=args.workers))
    lines = [f"search n={spec.n} size={spec.k}: {len(frames)} frame(s)"]
    if args.emit:
        out = Path(args.emit)
        out.mkdir(parents=True, exist_ok=True)
        width = max(4, len(str(len(frames))))
        for idx, frame in enumerate(frames, start=1):
            name = f"frame_{idx:0{width}d}.pmalg"
            (out / name).write_text(serialize_algebra(frame))
            lines.append(f"wrote {out / name}")
    else:
        for idx, frame in enumerate(frames, start=1):
            alphas = " | ".join(" ".join(map(str, a)) for a in frame.alphas)
            lines.append(
                f"{idx}: theta={' '.join(map(str, frame.theta))}  alpha={alphas}  e={' '.join(map(str, frame.es))}"
            )
    return CommandResult(0, "\n".join(lines) + "\n")


def cmd_census(args) -> CommandResult:
    spec = _spec(args)
    return CommandResult(0, render_census(spec, census(spec, workers=args.workers)))


def cmd_identity(args) -> CommandResult:
    path = Path(args.theory)
    if path.exists():
        theory = parse_theory(path.read_text())
    elif args.theory.startswith("preset:"):
        try:
            theory = load_preset(args.theory[len("preset:"):])
        except FileNotFoundError:
            raise UsageError(f"no bundled preset {args.theory!r}") from None
    else:
        raise UsageError(f"cannot read {args.theory}")
    frame = _load_frame(args.file)
    results = check_theory(frame.model, theory)
    lines = [f"theory {theory.name} against n={frame.n} size={frame.k}"]
    for ident, verdict in results:
        if verdict:
            lines.append(f"holds: {ident}")
        else:
            cex = " ".join(f"{k}={v}" for k, v in verdict.counterexample.items())
            lines.append(f"FAILS: {ident}  counterexample {cex}")
    return CommandResult(0 if all(v for _, v in results) else 1, "\n".join(lines) + "\n")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="protoalg", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("check", help="check named properties of a pmalg file")
    p.add_argument("file")
    p.add_argument("--props", type=_prop_list, default=list(protomod.PROPERTIES))
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("group", help="extract the group with a chosen unit")
    p.add_argument("file")
    p.add_argument("--unit", type=int, required=True)
    p.set_defaults(func=cmd_group)

    p = sub.add_parser("translations", help="translation group of a frame")
    p.add_argument("file")
    p.set_defaults(func=cmd_translations)

    p = sub.add_parser("construct", help="build a pmalg frame from a pmgrp or pmact file")
    p.add_argument("source", choices=["from-group", "from-action"])
    p.add_argument("file")
    p.add_argument("--n", type=int, default=None)
    p.set_defaults(func=cmd_construct)

    for name, func in (("search", cmd_search), ("census", cmd_census)):
        p = sub.add_parser(name, help=f"{name} over all frames of a given shape")
        p.add_argument("--n", type=int, required=True)
        p.add_argument("--size", type=int, required=True)
        p.add_argument("--require", type=_prop_list, default=[])
        p.add_argument("--forbid", type=_prop_list, default=[])
        p.add_argument("--workers", type=int, default=1)
        p.add_argument("--max-size", type=int, default=None, help="override the size bound for this n")
        if name == "search":
            p.add_argument("--limit", type=int, default=None)
            p.add_argument("--emit", default=None, help="directory for pmalg output files")
        else:
            p.set_defaults(limit=None)
        p.set_defaults(func=func)

    p = sub.add_parser("identity", help="check the axioms of a theory file on a frame")
    p.add_argument("theory", help="theory file, or preset:<name>")
    p.add_argument("file")
    p.set_defaults(func=cmd_identity)
    return parser


def run(argv: Sequence[str]) -> CommandResult:
    try:
        args = build_parser().parse_args(list(argv))
        return args.func(args)
    except UsageError as exc:
        return CommandResult(2, str(exc).rstrip("\n") + "\n")
    except (ProtoAlgError, ValueError) as exc:
        return CommandResult(2, f"error: {exc}\n")


def main(argv: Sequence[str] | None = None) -> int:
    result = run(sys.argv[1:] if argv is None else argv)
    stream = sys.stdout if result.exit_code != 2 else sys.stderr
    stream.write(result.output)
    return result.exit_code


if __name__ == "__main__":
    sys.exit(main())
