"""XML interchange: eCST documents and metrics reports.

Serialization is hand-rolled so output is byte-deterministic: fixed
attribute order, two-space indentation, no XML declaration, trailing
newline.  Parsing uses expat and reports schema violations with the
offending element and line.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from xml.parsers import expat
from xml.sax.saxutils import escape, quoteattr

from .errors import MalformedTreeError, SourceIoError, TreeXmlError
from .tree import (
    TOKEN_TYPES,
    EcstNode,
    EcstTree,
    SourceSpan,
    UniversalKind,
    assign_node_ids,
    validate_tree,
)

_KIND_VALUES = {kind.value for kind in UniversalKind}


# -- serialization ---------------------------------------------------------


def _write_node(node: EcstNode, depth: int, out: list[str]) -> None:
    pad = "  " * depth
    if node.is_universal:
        out.append(f"{pad}<node kind={quoteattr(node.kind.value)}>\n")
        for child in node.children:
            _write_node(child, depth + 1, out)
        out.append(f"{pad}</node>\n")
    else:
        span = node.span
        out.append(
            f"{pad}<token type={quoteattr(node.token_type)}"
            f' line="{span.start_line}" col="{span.start_col}"'
            f' endLine="{span.end_line}" endCol="{span.end_col}"'
            f">{escape(node.label)}</token>\n"
        )


def serialize_tree(tree: EcstTree) -> str:
    """Render a tree as a deterministic eCST XML document."""
    out = [
        f"<ecst source={quoteattr(tree.source_path)}"
        f" language={quoteattr(tree.language_id)}"
        f' totalLines="{tree.total_lines}">\n'
    ]
    _write_node(tree.root, 1, out)
    out.append("</ecst>\n")
    return "".join(out)


def serialize_metrics(report) -> str:
    """Render a metrics report as a deterministic XML document."""
    out = [
        f"<metrics source={quoteattr(report.source_path)}"
        f" language={quoteattr(report.language_id)}>\n"
    ]
    for row in report.elements:
        out.append(
            f"  <element name={quoteattr(row.name)}"
            f" annotation={quoteattr(row.annotation)}"
            f' cc="{row.cc}" loc="{row.loc}" sloc="{row.sloc}" cloc="{row.cloc}"'
            f' startLine="{row.start_line}" endLine="{row.end_line}"/>\n'
        )
    totals = report.totals
    out.append(
        f'  <totals loc="{totals.loc}" sloc="{totals.sloc}" cloc="{totals.cloc}"/>\n'
    )
    out.append("</metrics>\n")
    return "".join(out)


# -- parsing ---------------------------------------------------------------


@dataclass
class _Element:
    tag: str
    attrs: dict
    line: int
    children: list = field(default_factory=list)
    text_parts: list = field(default_factory=list)

    @property
    def text(self) -> str:
        return "".join(self.text_parts)


def _parse_dom(data: bytes) -> _Element:
    parser = expat.ParserCreate()
    parser.buffer_text = True
    root: list[_Element] = []
    stack: list[_Element] = []

    def start(tag, attrs):
        el = _Element(tag, attrs, parser.CurrentLineNumber)
        if stack:
            stack[-1].children.append(el)
        else:
            root.append(el)
        stack.append(el)

    def chars(text):
        if stack:
            stack[-1].text_parts.append(text)

    def end(tag):
        stack.pop()

    parser.StartElementHandler = start
    parser.CharacterDataHandler = chars
    parser.EndElementHandler = end
    try:
        parser.Parse(data, True)
    except expat.ExpatError as e:
        raise TreeXmlError(f"not well-formed XML: {e}") from e
    if not root:
        raise TreeXmlError("empty document")
    return root[0]


def _fail(el: _Element, message: str):
    raise TreeXmlError(f"{message} (element <{el.tag}>, line {el.line})")


def _int_attr(el: _Element, name: str, minimum: int = 1) -> int:
    raw = el.attrs.get(name)
    if raw is None:
        _fail(el, f"missing attribute {name!r}")
    try:
        value = int(raw)
    except ValueError:
        _fail(el, f"attribute {name!r} is not an integer: {raw!r}")
    if value < minimum:
        _fail(el, f"attribute {name!r} must be >= {minimum}, got {value}")
    return value


def _build_node(el: _Element) -> EcstNode:
    if el.tag == "node":
        kind_raw = el.attrs.get("kind")
        if kind_raw is None:
            _fail(el, "missing attribute 'kind'")
        if kind_raw not in _KIND_VALUES:
            _fail(el, f"unknown universal kind {kind_raw!r}")
        if el.text.strip():
            _fail(el, "unexpected text content in <node>")
        children = [_build_node(child) for child in el.children]
        return EcstNode.universal(UniversalKind(kind_raw), children)
    if el.tag == "token":
        token_type = el.attrs.get("type")
        if token_type is None:
            _fail(el, "missing attribute 'type'")
        if token_type not in TOKEN_TYPES:
            _fail(el, f"unknown token type {token_type!r}")
        if el.children:
            _fail(el, "<token> must not contain elements")
        lexeme = el.text
        if not lexeme:
            _fail(el, "empty <token> lexeme")
        try:
            span = SourceSpan(
                _int_attr(el, "line"),
                _int_attr(el, "col"),
                _int_attr(el, "endLine"),
                _int_attr(el, "endCol"),
            )
        except ValueError as e:
            _fail(el, f"invalid span: {e}")
        return EcstNode.concrete(lexeme, token_type, span)
    _fail(el, f"unknown element <{el.tag}>")


def parse_tree_xml(data: bytes | str) -> EcstTree:
    """Parse an eCST XML document back into a tree.

    Raises TreeXmlError on any well-formedness or schema violation.
    """
    if isinstance(data, str):
        data = data.encode("utf-8")
    root_el = _parse_dom(data)
    if root_el.tag != "ecst":
        _fail(root_el, "expected root element <ecst>")
    source = root_el.attrs.get("source")
    language = root_el.attrs.get("language")
    if source is None or language is None:
        _fail(root_el, "<ecst> requires source and language attributes")
    total_lines = _int_attr(root_el, "totalLines")
    if len(root_el.children) != 1:
        _fail(root_el, "<ecst> must contain exactly one <node>")
    root_node = _build_node(root_el.children[0])
    if root_node.kind is not UniversalKind.COMPILATION_UNIT:
        _fail(root_el.children[0], "top-level <node> must be COMPILATION_UNIT")
    assign_node_ids(root_node)
    tree = EcstTree(
        root=root_node,
        source_path=source,
        language_id=language,
        total_lines=total_lines,
    )
    try:
        validate_tree(tree)
    except MalformedTreeError as e:
        raise TreeXmlError(f"document violates tree invariants: {e}") from e
    return tree


def load_tree_file(path) -> EcstTree:
    """Read and parse an eCST XML file."""
    try:
        data = open(path, "rb").read()
    except OSError as e:
        raise SourceIoError(f"cannot read {path}: {e.strerror or e}") from e
    return parse_tree_xml(data)
