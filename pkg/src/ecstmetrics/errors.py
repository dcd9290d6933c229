"""Exception types shared across the package."""

from __future__ import annotations


class ScanError(ValueError):
    """Raised by the scanner kernels on unlexable input.

    Internal to the scanning layer; the lexer wraps it into LexError
    with a proper source span.
    """

    def __init__(self, message: str, line: int, col: int):
        super().__init__(message)
        self.line = line
        self.col = col


class FrontendError(Exception):
    """Base for errors raised while turning a source file into a tree."""

    kind = "FrontendError"

    def __init__(self, message: str, span=None):
        super().__init__(message)
        self.span = span


class UnknownExtensionError(FrontendError):
    """No registry entry matches the file's extension."""

    kind = "UnknownExtension"


class UnsupportedLanguageError(FrontendError):
    """The registry mapped the file to a language with no frontend."""

    kind = "UnsupportedLanguage"


class LexError(FrontendError):
    """Source text could not be tokenized; span points at the problem."""

    kind = "LexError"


class ParseError(FrontendError):
    """Token stream violates the grammar; span points at the offending token."""

    kind = "ParseError"


class SourceIoError(FrontendError):
    """Source file could not be read."""

    kind = "IoError"


class RegistryError(Exception):
    """Language registry file is malformed or inconsistent."""


class TreeXmlError(Exception):
    """A tree XML document is malformed or violates the document schema."""


class MalformedTreeError(Exception):
    """A tree violates a structural invariant (e.g. a universal node
    without concrete descendants)."""


class UnsupportedElementError(ValueError):
    """Metric requested for a node kind it is not defined on."""
