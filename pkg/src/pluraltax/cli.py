"""Command-line interface.

Exit status: 0 on success, 1 on input errors, 2 when ``verify`` finds a law
violation. Reports go to stdout, diagnostics to stderr.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys

from .classify import classify, explain
from .index import canonical_index, position_from_index
from .io import (
    emit_report,
    enumerate_json,
    parse_compact_spec,
    parse_model_document,
    parse_space,
    position_row,
    serialize_model,
)
from .model import ModelError, Position
from .reduction import coanswered_partition, merge_questions
from .sweep import enumerate_positions, verify_laws

log = logging.getLogger("pluraltax")


def _load(args):
    if args.spec is not None:
        if args.file is not None:
            raise ModelError("give either a model file or --spec, not both")
        return parse_compact_spec(args.spec)
    if args.file is None:
        raise ModelError("a model file or --spec is required")
    if args.file == "-":
        data = sys.stdin.buffer.read()
    else:
        try:
            with open(args.file, "rb") as fh:
                data = fh.read()
        except OSError as exc:
            raise ModelError(f"cannot read {args.file}: {exc.strerror}") from None
    try:
        return parse_model_document(data)
    except ModelError as exc:
        raise ModelError(f"{args.file}: {exc}") from None


def _write(text) -> None:
    if isinstance(text, str):
        text = text.encode("utf-8")
    sys.stdout.buffer.write(text)
    sys.stdout.flush()


def cmd_classify(args) -> int:
    _write(emit_report(classify(_load(args)), args.format))
    return 0


def cmd_explain(args) -> int:
    _write(explain(_load(args)))
    return 0


def cmd_enumerate(args) -> int:
    space = parse_space(args.space)
    positions = enumerate_positions(space)
    if args.format == "json":
        _write(json.dumps(enumerate_json(space, positions), indent=2) + "\n")
    else:
        _write("".join(f"P{i}\t{' '.join(position_row(space, p))}\n" for i, p in enumerate(positions, start=1)))
    return 0


def cmd_index(args) -> int:
    space = parse_space(args.space)
    cells = [c.strip() for c in args.assign.split(",")]
    assigns = []
    for c in cells:
        if c in space.answer_labels:
            assigns.append(space.answer_ordinal(c))
        elif c.isdigit():
            assigns.append(int(c))
        else:
            raise ModelError(f"unknown answer label {c!r}")
    _write(f"{canonical_index(space, Position(tuple(assigns)))}\n")
    return 0


def cmd_position(args) -> int:
    space = parse_space(args.space)
    p = position_from_index(space, args.index)
    _write(", ".join(f"{q}{a}" for q, a in zip(space.question_labels, position_row(space, p))) + "\n")
    return 0


def cmd_reduce(args) -> int:
    model = _load(args)
    merged = merge_questions(model)
    if args.format == "json":
        _write(serialize_model(merged))
    else:
        part = coanswered_partition(model)
        lines = [f"questions: {model.space.n} -> {merged.space.n}"]
        lines += [f"  {lab}" for lab in part.merged_labels]
        for i, p in enumerate(merged.positions, start=1):
            lines.append(f"{merged.position_name(i)}\t{' '.join(position_row(merged, p))}")
        _write("\n".join(lines) + "\n")
    return 0


def cmd_verify(args) -> int:
    report = verify_laws(parse_space(args.space), workers=args.workers)
    _write(emit_report(report, args.format))
    if report.law_violations:
        log.error("%d law violation(s) found", len(report.law_violations))
        return 2
    return 0


class _Parser(argparse.ArgumentParser):
    # Usage errors are input errors; status 2 is reserved for law violations.
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="pluraltax",
        description="Classify admissible-position sets as monism/pluralism and global/local.",
    )
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def model_source(p):
        p.add_argument("file", nargs="?", help="model document (JSON), or - for stdin")
        p.add_argument("--spec", help="compact model spec, e.g. 3x2:{1,8}")

    def fmt(p):
        p.add_argument("--format", choices=("text", "json"), default="text")

    p = sub.add_parser("classify", help="assign a taxon to a model")
    model_source(p)
    fmt(p)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("explain", help="classify with witnesses spelled out")
    model_source(p)
    p.set_defaults(func=cmd_explain)

    p = sub.add_parser("enumerate", help="list every position of a space in index order")
    p.add_argument("--space", required=True, help="NxM: N questions, M answers")
    fmt(p)
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("index", help="canonical index of an assignment")
    p.add_argument("--space", required=True)
    p.add_argument("--assign", required=True, help="comma-separated answer labels, one per question")
    p.set_defaults(func=cmd_index)

    p = sub.add_parser("position", help="assignment with a given canonical index")
    p.add_argument("--space", required=True)
    p.add_argument("--index", required=True, type=int)
    p.set_defaults(func=cmd_position)

    p = sub.add_parser("reduce", help="merge co-answered questions")
    p.add_argument("file", help="model document (JSON), or - for stdin")
    p.set_defaults(spec=None)
    fmt(p)
    p.set_defaults(func=cmd_reduce)

    p = sub.add_parser("verify", help="check every law over all subsets of a space")
    p.add_argument("--space", required=True)
    p.add_argument("--workers", type=int, default=1)
    fmt(p)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    handler = logging.StreamHandler(sys.stderr)
    handler.setFormatter(logging.Formatter("%(levelname)s: %(message)s"))
    log.addHandler(handler)
    log.propagate = False
    try:
        return args.func(args)
    except ModelError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    finally:
        log.removeHandler(handler)


if __name__ == "__main__":
    sys.exit(main())
