"""Language frontends: token stream to eCST."""

from __future__ import annotations

from ..errors import SourceIoError, UnsupportedLanguageError
from ..lexer import count_physical_lines, lex
from ..tree import EcstTree
from .java import JavaParser
from .modula2 import Modula2Parser

FRONTENDS = {
    "modula2": Modula2Parser,
    "javaoo": JavaParser,
}


def parse_source(source: str, language_id: str, source_path: str = "<string>") -> EcstTree:
    """Lex and parse source text into an eCST."""
    parser_cls = FRONTENDS.get(language_id)
    if parser_cls is None:
        raise UnsupportedLanguageError(f"no frontend for language {language_id!r}")
    tokens = lex(source, language_id)
    parser = parser_cls(tokens, language_id, source_path)
    return parser.build_tree(count_physical_lines(source))


def parse_file(path, language_id: str) -> EcstTree:
    """Read a source file and parse it into an eCST."""
    try:
        source = open(path, "r", encoding="utf-8").read()
    except OSError as e:
        raise SourceIoError(f"cannot read {path}: {e.strerror or e}") from e
    except UnicodeDecodeError as e:
        raise SourceIoError(f"cannot decode {path}: {e.reason}") from e
    return parse_source(source, language_id, source_path=str(path))


__all__ = ["FRONTENDS", "parse_source", "parse_file"]
