"""Command-line entry points: `clonescope analyze` and `clonescope serve`."""

from __future__ import annotations

import argparse
import logging
import os
import sys

from . import __version__


def _configure_logging() -> str:
    level_name = os.environ.get("CLONESCOPE_LOG", "warning")
    level = getattr(logging, level_name.upper(), None)
    if not isinstance(level, int):
        print(f"warning: unknown CLONESCOPE_LOG level {level_name!r}", file=sys.stderr)
        level_name, level = "warning", logging.WARNING
    logging.basicConfig(level=level, format="%(levelname)s %(name)s: %(message)s")
    return level_name.lower()


def _cmd_analyze(args: argparse.Namespace) -> int:
    from .pipeline import analyze_corpus

    result = analyze_corpus(
        args.input,
        args.format,
        args.out,
        min_nloc=args.min_nloc,
        min_threads=args.min_threads,
        rules_path=args.rules,
    )
    print(
        f"{result.index.block_count} blocks indexed, "
        f"{result.index.distinct_fingerprints} distinct snippets, "
        f"{len(result.selected)} clone sets exported to {args.out}"
    )
    return 0


def _cmd_serve(args: argparse.Namespace) -> int:
    from .service import LabelStoreError, create_app, run_server

    host, _, port_text = args.bind.rpartition(":")
    if not host or not port_text.isdigit():
        print(f"error: --bind must be addr:port, got {args.bind!r}", file=sys.stderr)
        return 2
    try:
        app = create_app(args.data, args.labels, ui_dir=args.ui)
    except (LabelStoreError, FileNotFoundError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    run_server(app, host, int(port_text), log_level=args.log_level)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="clonescope",
        description="Detect and analyze duplicated code blocks across Q&A threads.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    analyze = sub.add_parser("analyze", help="run the pipeline and write reports")
    analyze.add_argument("--input", required=True, help="corpus file")
    analyze.add_argument("--format", required=True, choices=["jsonl", "se_xml"])
    analyze.add_argument("--min-nloc", type=int, default=6, dest="min_nloc")
    analyze.add_argument("--min-threads", type=int, default=2, dest="min_threads")
    analyze.add_argument("--rules", default=None, help="domain rule table (TSV)")
    analyze.add_argument("--out", required=True, help="output directory")
    analyze.set_defaults(func=_cmd_analyze)

    serve = sub.add_parser("serve", help="serve an analysis directory over HTTP")
    serve.add_argument("--data", required=True, help="analyze output directory")
    serve.add_argument("--labels", required=True, help="label store file (JSONL)")
    serve.add_argument("--bind", default="127.0.0.1:8600", help="addr:port")
    serve.add_argument("--ui", default=None, help="static web UI directory")
    serve.set_defaults(func=_cmd_serve)
    return parser


def main(argv: list[str] | None = None) -> int:
    log_level = _configure_logging()
    args = build_parser().parse_args(argv)
    args.log_level = log_level
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
