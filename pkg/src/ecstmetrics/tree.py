"""Enriched concrete syntax tree: node types and traversal helpers.

A tree mixes two node flavours: concrete nodes, one per source token,
and universal nodes, imaginary markers labelling the constructs that
metric algorithms key on (functions, loops, branches, conditions).
Universal nodes carry no source position of their own; their span is
always derived from their concrete descendants.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Iterator

from .errors import MalformedTreeError


class UniversalKind(str, Enum):
    """Closed vocabulary of universal marker nodes.

    The spellings are canonical and appear verbatim in XML output.
    Frontends may not invent new kinds.
    """

    COMPILATION_UNIT = "COMPILATION_UNIT"
    FUNCTION_DECL = "FUNCTION_DECL"
    LOOP_STATEMENT = "LOOP_STATEMENT"
    BRANCH_STATEMENT = "BRANCH_STATEMENT"
    BRANCH = "BRANCH"
    CONDITION = "CONDITION"


#: Token categories a concrete node may carry.
TOKEN_TYPES = frozenset(
    {"keyword", "identifier", "literal", "operator", "punctuation", "comment"}
)


@dataclass(frozen=True)
class SourceSpan:
    """1-based inclusive line/column range in the physical source text."""

    start_line: int
    start_col: int
    end_line: int
    end_col: int

    def __post_init__(self):
        if self.start_line < 1 or self.start_col < 1 or self.end_col < 1:
            raise ValueError(f"span positions must be 1-based: {self}")
        if (self.start_line, self.start_col) > (self.end_line, self.end_col):
            raise ValueError(f"span start after end: {self}")


@dataclass
class EcstNode:
    """One tree node: a concrete token or a universal marker.

    label holds the source lexeme for concrete nodes and the canonical
    kind spelling for universal nodes.  node_id is unique within a tree,
    assigned in preorder, and ignored for equality.
    """

    label: str
    kind: UniversalKind | None = None
    token_type: str | None = None
    span: SourceSpan | None = None
    children: list["EcstNode"] = field(default_factory=list)
    node_id: int = field(default=-1, compare=False)
    # Position among the file's non-comment tokens; set by frontends while
    # placing comments, meaningless afterwards.
    token_index: int | None = field(default=None, compare=False, repr=False)

    @property
    def is_universal(self) -> bool:
        return self.kind is not None

    @classmethod
    def universal(cls, kind: UniversalKind, children: list["EcstNode"]) -> "EcstNode":
        return cls(label=kind.value, kind=kind, children=children)

    @classmethod
    def concrete(
        cls,
        lexeme: str,
        token_type: str,
        span: SourceSpan,
        token_index: int | None = None,
    ) -> "EcstNode":
        return cls(
            label=lexeme,
            token_type=token_type,
            span=span,
            token_index=token_index,
        )


@dataclass
class EcstTree:
    """A whole-file tree rooted at a COMPILATION_UNIT node."""

    root: EcstNode
    source_path: str
    language_id: str
    total_lines: int


def preorder(tree_or_node: EcstTree | EcstNode) -> Iterator[EcstNode]:
    """Depth-first, left-to-right traversal; parent before children."""
    node = tree_or_node.root if isinstance(tree_or_node, EcstTree) else tree_or_node
    stack = [node]
    while stack:
        current = stack.pop()
        yield current
        stack.extend(reversed(current.children))


def find_nodes(tree_or_node: EcstTree | EcstNode, kind: UniversalKind) -> list[EcstNode]:
    """All universal nodes of the given kind, in preorder."""
    return [n for n in preorder(tree_or_node) if n.kind is kind]


def subtree_span(node: EcstNode) -> SourceSpan:
    """Minimal span covering every concrete node in the subtree.

    For a concrete node this is its own span.  A universal node with no
    concrete descendants has no position and is malformed by definition.
    """
    first = None
    last = None
    for n in preorder(node):
        if n.span is None:
            continue
        if first is None or (n.span.start_line, n.span.start_col) < (
            first.start_line,
            first.start_col,
        ):
            first = n.span
        if last is None or (n.span.end_line, n.span.end_col) > (
            last.end_line,
            last.end_col,
        ):
            last = n.span
    if first is None:
        raise MalformedTreeError(
            f"universal node {node.label!r} has no concrete descendants"
        )
    return SourceSpan(first.start_line, first.start_col, last.end_line, last.end_col)


def assign_node_ids(root: EcstNode) -> None:
    """Number all nodes 0,1,2,... in preorder."""
    for i, node in enumerate(preorder(root)):
        node.node_id = i


def validate_tree(tree: EcstTree) -> None:
    """Check the structural invariants; raise MalformedTreeError on breach.

    Covers: COMPILATION_UNIT root, token/universal field discipline,
    universal nodes having concrete descendants, BRANCH_STATEMENT's
    universal children all being BRANCH, CONDITION placement, and every
    FUNCTION_DECL containing an identifier token.
    """
    if tree.root.kind is not UniversalKind.COMPILATION_UNIT:
        raise MalformedTreeError("tree root must be a COMPILATION_UNIT node")
    if tree.total_lines < 1:
        raise MalformedTreeError("total_lines must be positive")

    seen_ids = set()
    # (node, inside_branch_or_loop) pairs for CONDITION placement checks
    stack: list[tuple[EcstNode, bool]] = [(tree.root, False)]
    while stack:
        node, guarded = stack.pop()
        if node.node_id in seen_ids:
            raise MalformedTreeError(f"duplicate node id {node.node_id}")
        seen_ids.add(node.node_id)
        if node.is_universal:
            if node.token_type is not None:
                raise MalformedTreeError("universal node carries a token type")
            if node.label != node.kind.value:
                raise MalformedTreeError(
                    f"universal node label {node.label!r} does not match its kind"
                )
            subtree_span(node)  # raises when no concrete descendants
            if node.kind is UniversalKind.CONDITION and not guarded:
                raise MalformedTreeError(
                    "CONDITION node outside any BRANCH or LOOP_STATEMENT"
                )
            if node.kind is UniversalKind.BRANCH_STATEMENT:
                for child in node.children:
                    if child.is_universal and child.kind is not UniversalKind.BRANCH:
                        raise MalformedTreeError(
                            "BRANCH_STATEMENT has a universal child "
                            f"of kind {child.kind.value}"
                        )
            if node.kind is UniversalKind.FUNCTION_DECL:
                if not any(
                    n.token_type == "identifier" for n in preorder(node)
                ):
                    raise MalformedTreeError(
                        "FUNCTION_DECL without an identifier token"
                    )
        else:
            if node.token_type not in TOKEN_TYPES:
                raise MalformedTreeError(
                    f"concrete node with invalid token type {node.token_type!r}"
                )
            if node.span is None:
                raise MalformedTreeError("concrete node without a span")
            if node.children:
                raise MalformedTreeError("concrete node with children")
            if not node.label:
                raise MalformedTreeError("concrete node with empty lexeme")
        down = guarded or node.kind in (
            UniversalKind.BRANCH,
            UniversalKind.LOOP_STATEMENT,
        )
        stack.extend((c, down) for c in node.children)
