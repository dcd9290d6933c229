"""Shared recursive-descent machinery for the language frontends.

Parsers operate on the comment-free token stream; comments are woven
back into the finished tree by position so that constructs keep the
spans their own tokens define.
"""

from __future__ import annotations

from ..errors import ParseError
from ..lexer import Token
from ..tree import EcstNode, EcstTree, SourceSpan, UniversalKind, assign_node_ids


class BaseParser:
    """Cursor over the real (non-comment) tokens plus tree assembly."""

    def __init__(self, tokens: list[Token], language_id: str, source_path: str):
        self.language_id = language_id
        self.source_path = source_path
        self.toks: list[Token] = []
        # (number of real tokens preceding the comment, comment token)
        self.comments: list[tuple[int, Token]] = []
        for tok in tokens:
            if tok.type == "comment":
                self.comments.append((len(self.toks), tok))
            else:
                self.toks.append(tok)
        self.i = 0

    # -- cursor primitives -------------------------------------------------

    def _peek(self, offset: int = 0) -> Token | None:
        j = self.i + offset
        return self.toks[j] if j < len(self.toks) else None

    def _at(self, *lexemes: str) -> bool:
        tok = self._peek()
        return tok is not None and tok.lexeme in lexemes

    def _at_type(self, token_type: str) -> bool:
        tok = self._peek()
        return tok is not None and tok.type == token_type

    def _advance(self) -> EcstNode:
        """Consume the current token as a concrete node."""
        tok = self._peek()
        if tok is None:
            self._error("unexpected end of input")
        node = EcstNode.concrete(tok.lexeme, tok.type, tok.span, token_index=self.i)
        self.i += 1
        return node

    def _expect(self, lexeme: str) -> EcstNode:
        tok = self._peek()
        if tok is None or tok.lexeme != lexeme:
            found = "end of input" if tok is None else repr(tok.lexeme)
            self._error(f"expected {lexeme!r}, found {found}")
        return self._advance()

    def _expect_type(self, token_type: str) -> EcstNode:
        tok = self._peek()
        if tok is None or tok.type != token_type:
            found = "end of input" if tok is None else repr(tok.lexeme)
            self._error(f"expected {token_type}, found {found}")
        return self._advance()

    def _error(self, message: str):
        tok = self._peek()
        if tok is None and self.toks:
            tok = self.toks[-1]
        span = tok.span if tok is not None else SourceSpan(1, 1, 1, 1)
        raise ParseError(f"{message}", span=span)

    # -- tree assembly -----------------------------------------------------

    def parse_compilation_unit(self) -> EcstNode:  # pragma: no cover - abstract
        raise NotImplementedError

    def build_tree(self, total_lines: int) -> EcstTree:
        root = self.parse_compilation_unit()
        if self.i < len(self.toks):
            self._error("trailing input after compilation unit")
        self._attach_comments(root)
        assign_node_ids(root)
        return EcstTree(
            root=root,
            source_path=self.source_path,
            language_id=self.language_id,
            total_lines=total_lines,
        )

    def _attach_comments(self, root: EcstNode) -> None:
        """Insert comment nodes at their source positions.

        Each comment sits between real tokens p-1 and p; it becomes a
        child of the deepest node whose token range covers both
        neighbours, so a trailing comment never widens the span of the
        construct it follows.  Placements are computed on the pristine
        tree first, then applied with per-parent offsets.
        """
        if not self.comments:
            return
        ranges: dict[int, tuple[int, int]] = {}

        def compute(node: EcstNode) -> tuple[int, int]:
            cached = ranges.get(id(node))
            if cached is not None:
                return cached
            if node.token_index is not None:
                rng = (node.token_index, node.token_index)
            else:
                child_ranges = [compute(c) for c in node.children]
                rng = (
                    min(r[0] for r in child_ranges),
                    max(r[1] for r in child_ranges),
                )
            ranges[id(node)] = rng
            return rng

        compute(root)
        n = len(self.toks)
        placements: list[tuple[EcstNode, int, EcstNode]] = []
        for pos, tok in self.comments:
            target = root
            if 0 < pos < n:
                while True:
                    for child in target.children:
                        lo, hi = ranges[id(child)]
                        if lo <= pos - 1 and hi >= pos:
                            target = child
                            break
                    else:
                        break
            index = len(target.children)
            for k, child in enumerate(target.children):
                if ranges[id(child)][0] >= pos:
                    index = k
                    break
            comment_node = EcstNode.concrete(tok.lexeme, "comment", tok.span)
            placements.append((target, index, comment_node))

        by_parent: dict[int, list[tuple[int, EcstNode]]] = {}
        parents: dict[int, EcstNode] = {}
        for parent, index, node in placements:
            by_parent.setdefault(id(parent), []).append((index, node))
            parents[id(parent)] = parent
        for key, items in by_parent.items():
            parent = parents[key]
            offset = 0
            for index, node in sorted(items, key=lambda item: item[0]):
                parent.children.insert(index + offset, node)
                offset += 1

    # -- shared construct helpers ------------------------------------------

    def _universal(self, kind: UniversalKind, children: list[EcstNode]) -> EcstNode:
        return EcstNode.universal(kind, children)

    _OPENERS = ("(", "[", "{")
    _CLOSERS = (")", "]", "}")

    def _flat_until(self, stops) -> list[EcstNode]:
        """Consume tokens up to a bracket-level-zero stop lexeme.

        Also stops before an unmatched closing bracket so enclosing
        groups stay balanced.  The stop token itself is not consumed.
        """
        nodes: list[EcstNode] = []
        depth = 0
        while True:
            tok = self._peek()
            if tok is None:
                return nodes
            if depth == 0 and tok.lexeme in stops:
                return nodes
            if tok.lexeme in self._OPENERS:
                depth += 1
            elif tok.lexeme in self._CLOSERS:
                if depth == 0:
                    return nodes
                depth -= 1
            nodes.append(self._advance())

    def _balanced_group(self) -> list[EcstNode]:
        """Consume a bracketed group through its matching closer."""
        tok = self._peek()
        if tok is None or tok.lexeme not in self._OPENERS:
            self._error("expected a bracketed group")
        nodes = [self._advance()]
        depth = 1
        while depth:
            tok = self._peek()
            if tok is None:
                self._error("unbalanced brackets")
            if tok.lexeme in self._OPENERS:
                depth += 1
            elif tok.lexeme in self._CLOSERS:
                depth -= 1
            nodes.append(self._advance())
        return nodes
