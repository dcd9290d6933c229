"""Command-line pipeline: parse sources, persist trees, compute metrics.

Exit codes: 0 success, 2 unknown extension or unsupported language,
3 lex/parse error, 4 I/O or registry error, 5 malformed tree XML.
For multi-file runs the highest per-file code wins.
"""

from __future__ import annotations

import argparse
import os
import sys

from .errors import (
    LexError,
    ParseError,
    RegistryError,
    SourceIoError,
    TreeXmlError,
    UnknownExtensionError,
    UnsupportedLanguageError,
)
from .frontends import parse_file
from .frontends.registry import builtin_registry, load_registry
from .metrics import measure_tree, render_table
from .xmlio import load_tree_file, parse_tree_xml, serialize_metrics, serialize_tree

TREE_SUFFIX = ".ecst.xml"
METRICS_SUFFIX = ".metrics.xml"

_HANDLED = (
    UnknownExtensionError,
    UnsupportedLanguageError,
    LexError,
    ParseError,
    SourceIoError,
    RegistryError,
    TreeXmlError,
)


def _exit_code(exc: Exception) -> int:
    if isinstance(exc, (UnknownExtensionError, UnsupportedLanguageError)):
        return 2
    if isinstance(exc, (LexError, ParseError)):
        return 3
    if isinstance(exc, (SourceIoError, RegistryError)):
        return 4
    if isinstance(exc, TreeXmlError):
        return 5
    raise exc


def _report_error(path, exc: Exception) -> None:
    span = getattr(exc, "span", None)
    if isinstance(exc, (LexError, ParseError)) and span is not None:
        sys.stderr.write(
            f"{path}:{span.start_line}:{span.start_col}: error: {exc}\n"
        )
    else:
        sys.stderr.write(f"{path}: error: {exc}\n")


def _load_registry(registry_path):
    if registry_path is not None:
        return load_registry(registry_path)
    if os.path.exists("languages.xml"):
        return load_registry("languages.xml")
    return builtin_registry()


def _write_text(path, text: str) -> None:
    try:
        with open(path, "w", encoding="utf-8", newline="") as handle:
            handle.write(text)
    except OSError as e:
        raise SourceIoError(f"cannot write {path}: {e.strerror or e}") from e


def _metrics_out_path(source_path: str) -> str:
    if source_path.endswith(TREE_SUFFIX):
        return source_path[: -len(TREE_SUFFIX)] + METRICS_SUFFIX
    return source_path + METRICS_SUFFIX


def _cmd_parse(args) -> int:
    registry = _load_registry(args.registry)
    src = args.file
    try:
        language = registry.detect(src)
        tree = parse_file(src, language)
    except _HANDLED as e:
        _report_error(src, e)
        return _exit_code(e)
    out = args.out if args.out else src + TREE_SUFFIX
    try:
        _write_text(out, serialize_tree(tree))
    except _HANDLED as e:
        _report_error(out, e)
        return _exit_code(e)
    print(f"{src} -> {out}")
    return 0


def _cmd_measure(args) -> int:
    registry = _load_registry(args.registry)
    src = args.file
    try:
        if src.endswith(TREE_SUFFIX):
            tree = load_tree_file(src)
        else:
            language = registry.detect(src)
            tree = parse_file(src, language)
        report = measure_tree(tree, extended=args.extended_cc)
    except _HANDLED as e:
        _report_error(src, e)
        return _exit_code(e)
    out = args.out if args.out else _metrics_out_path(src)
    try:
        _write_text(out, serialize_metrics(report))
    except _HANDLED as e:
        _report_error(out, e)
        return _exit_code(e)
    if args.table:
        sys.stdout.write(render_table(report))
    print(f"{src} -> {out}")
    return 0


def _run_one(src, registry, args) -> int:
    try:
        language = registry.detect(src)
        tree = parse_file(src, language)
        tree_xml = serialize_tree(tree)
        if args.tree_dir:
            os.makedirs(args.tree_dir, exist_ok=True)
            tree_path = os.path.join(args.tree_dir, os.path.basename(src) + TREE_SUFFIX)
            _write_text(tree_path, tree_xml)
        # The reload step is part of the pipeline, not an option.
        reloaded = parse_tree_xml(tree_xml)
        report = measure_tree(reloaded, extended=args.extended_cc)
        os.makedirs(args.metrics_dir, exist_ok=True)
        out = os.path.join(
            args.metrics_dir, os.path.basename(src) + METRICS_SUFFIX
        )
        _write_text(out, serialize_metrics(report))
    except _HANDLED as e:
        _report_error(src, e)
        return _exit_code(e)
    if args.table:
        sys.stdout.write(render_table(report))
    print(f"{src} -> {out}")
    return 0


def _cmd_run(args) -> int:
    registry = _load_registry(args.registry)
    worst = 0
    for src in args.files:
        worst = max(worst, _run_one(src, registry, args))
    return worst


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ecstmetrics",
        description="Language-independent source code metrics over eCSTs.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_parse = sub.add_parser("parse", help="parse one source file to eCST XML")
    p_parse.add_argument("file")
    p_parse.add_argument("--registry", default=None)
    p_parse.add_argument("--out", default=None)

    p_measure = sub.add_parser(
        "measure", help="compute metrics for a source file or eCST XML file"
    )
    p_measure.add_argument("file")
    p_measure.add_argument("--registry", default=None)
    p_measure.add_argument("--out", default=None)
    p_measure.add_argument("--extended-cc", action="store_true")
    p_measure.add_argument("--table", action="store_true")

    p_run = sub.add_parser(
        "run", help="full pipeline: parse, persist, reload, measure"
    )
    p_run.add_argument("files", nargs="+")
    p_run.add_argument("--registry", default=None)
    p_run.add_argument("--tree-dir", default=None)
    p_run.add_argument("--metrics-dir", default=".")
    p_run.add_argument("--extended-cc", action="store_true")
    p_run.add_argument("--table", action="store_true")

    return parser


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        if args.command == "parse":
            return _cmd_parse(args)
        if args.command == "measure":
            return _cmd_measure(args)
        return _cmd_run(args)
    except _HANDLED as e:
        # Registry problems surface before any per-file processing.
        _report_error(getattr(args, "registry", None) or "languages.xml", e)
        return _exit_code(e)


if __name__ == "__main__":
    sys.exit(main())
