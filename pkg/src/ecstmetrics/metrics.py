"""Cyclomatic complexity and the LOC family over eCSTs.

Everything here keys on universal node kinds and token types only;
no language-specific lexeme ever influences a metric value.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import UnsupportedElementError
from .tree import EcstNode, EcstTree, UniversalKind, preorder, subtree_span

MEASURED_KINDS = (
    UniversalKind.FUNCTION_DECL,
    UniversalKind.LOOP_STATEMENT,
    UniversalKind.BRANCH_STATEMENT,
    UniversalKind.BRANCH,
)

# Binary logical operators recognized by the extended-CC mode.
LOGICAL_OPERATORS = frozenset({"AND", "OR", "&", "&&", "||"})


@dataclass(frozen=True)
class LocBundle:
    loc: int
    sloc: int
    cloc: int


@dataclass(frozen=True)
class ElementMetrics:
    name: str
    annotation: str
    cc: int
    loc: int
    sloc: int
    cloc: int
    start_line: int
    end_line: int


@dataclass
class MetricsReport:
    source_path: str
    language_id: str
    elements: list[ElementMetrics]
    totals: LocBundle


def is_decision_point(node: EcstNode) -> bool:
    """Loops and condition-bearing branches are decision points."""
    if node.kind is UniversalKind.LOOP_STATEMENT:
        return True
    if node.kind is UniversalKind.BRANCH:
        return any(
            child.kind is UniversalKind.CONDITION for child in node.children
        )
    return False


def _logical_operator_count(node: EcstNode) -> int:
    count = 0
    for n in preorder(node):
        if n.kind is UniversalKind.CONDITION:
            for d in preorder(n):
                if d.token_type == "operator" and d.label in LOGICAL_OPERATORS:
                    count += 1
    return count


def decision_count(node: EcstNode, extended: bool = False) -> int:
    """Decision points in the subtree rooted at node, node included."""
    count = sum(1 for n in preorder(node) if is_decision_point(n))
    if extended:
        count += _logical_operator_count(node)
    return count


def cyclomatic_complexity(node: EcstNode, extended: bool = False) -> int:
    """CC of a measured element.

    Units get base complexity 1 plus their decision count; loop,
    branch-statement, and branch rows carry the bare decision count.
    """
    if node.kind is UniversalKind.FUNCTION_DECL:
        return 1 + decision_count(node, extended)
    if node.kind in (
        UniversalKind.LOOP_STATEMENT,
        UniversalKind.BRANCH_STATEMENT,
        UniversalKind.BRANCH,
    ):
        return decision_count(node, extended)
    raise UnsupportedElementError(
        f"cyclomatic complexity is not defined for {node.label!r}"
    )


def loc_bundle(node: EcstNode) -> LocBundle:
    """Physical, source, and comment line counts of a subtree."""
    span = subtree_span(node)
    code_lines: set[int] = set()
    comment_lines: set[int] = set()
    for n in preorder(node):
        if n.span is None:
            continue
        target = comment_lines if n.token_type == "comment" else code_lines
        target.update(range(n.span.start_line, n.span.end_line + 1))
    return LocBundle(
        loc=span.end_line - span.start_line + 1,
        sloc=len(code_lines),
        cloc=len(comment_lines),
    )


def element_name(node: EcstNode) -> str:
    """Report name for a measured element.

    Units are named by their identifier; loops by their introducing
    keyword (do-while reported as DO-WHILE); branch chains are named
    BRANCHING and individual branches IF/ELSIF/ELSE.
    """
    if node.kind is UniversalKind.FUNCTION_DECL:
        previous = None
        for n in preorder(node):
            if n.span is None:
                continue
            if n.token_type == "punctuation" and n.label == "(":
                break
            if n.token_type == "identifier":
                previous = n
        if previous is not None:
            return previous.label
        for n in preorder(node):
            if n.token_type == "identifier":
                return n.label
        return "<anonymous>"
    if node.kind is UniversalKind.BRANCH_STATEMENT:
        return "BRANCHING"
    keywords = [
        child.label for child in node.children if child.token_type == "keyword"
    ]
    if node.kind is UniversalKind.LOOP_STATEMENT:
        head = keywords[0].upper() if keywords else "LOOP"
        return "DO-WHILE" if head == "DO" else head
    # BRANCH: an else-if pair reads as ELSIF
    if not keywords:
        return "BRANCH"
    head = keywords[0].upper()
    if head == "ELSE" and len(keywords) > 1 and keywords[1].upper() == "IF":
        return "ELSIF"
    return head


def measure_tree(tree: EcstTree, extended: bool = False) -> MetricsReport:
    """Per-element metrics in preorder plus file-level totals."""
    rows = []
    for node in preorder(tree.root):
        if node.kind in MEASURED_KINDS:
            bundle = loc_bundle(node)
            span = subtree_span(node)
            rows.append(
                ElementMetrics(
                    name=element_name(node),
                    annotation=node.kind.value,
                    cc=cyclomatic_complexity(node, extended),
                    loc=bundle.loc,
                    sloc=bundle.sloc,
                    cloc=bundle.cloc,
                    start_line=span.start_line,
                    end_line=span.end_line,
                )
            )
    whole = loc_bundle(tree.root)
    totals = LocBundle(loc=tree.total_lines, sloc=whole.sloc, cloc=whole.cloc)
    return MetricsReport(
        source_path=tree.source_path,
        language_id=tree.language_id,
        elements=rows,
        totals=totals,
    )


def render_table(report: MetricsReport) -> str:
    """Human-readable table mirroring the report rows."""
    headers = ("ELEMENT", "ANNOTATION", "CC", "LOC", "SLOC", "CLOC", "LINES")
    rows = [
        (
            row.name,
            row.annotation,
            str(row.cc),
            str(row.loc),
            str(row.sloc),
            str(row.cloc),
            f"{row.start_line}-{row.end_line}",
        )
        for row in report.elements
    ]
    totals = report.totals
    rows.append(
        ("<file>", "-", "-", str(totals.loc), str(totals.sloc), str(totals.cloc), "-")
    )
    widths = [
        max(len(headers[i]), max((len(r[i]) for r in rows), default=0))
        for i in range(len(headers))
    ]
    lines = [
        "  ".join(h.ljust(widths[i]) for i, h in enumerate(headers)).rstrip(),
    ]
    for r in rows:
        lines.append("  ".join(c.ljust(widths[i]) for i, c in enumerate(r)).rstrip())
    return "\n".join(lines) + "\n"
