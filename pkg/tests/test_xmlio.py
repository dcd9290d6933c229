"""eCST XML serialization, parsing, and schema diagnostics."""

from __future__ import annotations

import pytest

from ecstmetrics.errors import SourceIoError, TreeXmlError
from ecstmetrics.metrics import ElementMetrics, LocBundle, MetricsReport
from ecstmetrics.tree import EcstNode, EcstTree, SourceSpan, UniversalKind, assign_node_ids
from ecstmetrics.xmlio import (
    load_tree_file,
    parse_tree_xml,
    serialize_metrics,
    serialize_tree,
)

# A hand-built two-token tree; the serialized form below is frozen.
MINI_XML = (
    '<ecst source="Mini.mod" language="modula2" totalLines="1">\n'
    '  <node kind="COMPILATION_UNIT">\n'
    '    <node kind="FUNCTION_DECL">\n'
    '      <token type="keyword" line="1" col="1" endLine="1" endCol="9">PROCEDURE</token>\n'
    '      <token type="identifier" line="1" col="11" endLine="1" endCol="11">P</token>\n'
    "    </node>\n"
    "  </node>\n"
    "</ecst>\n"
)


def _mini_tree() -> EcstTree:
    unit = EcstNode.universal(
        UniversalKind.FUNCTION_DECL,
        [
            EcstNode.concrete("PROCEDURE", "keyword", SourceSpan(1, 1, 1, 9)),
            EcstNode.concrete("P", "identifier", SourceSpan(1, 11, 1, 11)),
        ],
    )
    root = EcstNode.universal(UniversalKind.COMPILATION_UNIT, [unit])
    assign_node_ids(root)
    return EcstTree(
        root=root, source_path="Mini.mod", language_id="modula2", total_lines=1
    )


class TestSerialize:
    def test_frozen_minimal_document(self):
        assert serialize_tree(_mini_tree()) == MINI_XML

    def test_serialization_is_deterministic(self, corpus):
        for _, tree in corpus.values():
            assert serialize_tree(tree) == serialize_tree(tree)

    def test_no_declaration_and_trailing_newline(self, corpus):
        for _, tree in corpus.values():
            doc = serialize_tree(tree)
            assert doc.startswith("<ecst ")
            assert doc.endswith("</ecst>\n")

    def test_markup_characters_escaped(self):
        tree = _mini_tree()
        tree.root.children[0].children.append(
            EcstNode.concrete("a<b&c", "operator", SourceSpan(1, 13, 1, 17))
        )
        doc = serialize_tree(tree)
        assert "a&lt;b&amp;c" in doc
        assert "a<b" not in doc


class TestRoundTrip:
    def test_mini_parses_back(self):
        tree = parse_tree_xml(MINI_XML)
        assert tree == _mini_tree()
        assert serialize_tree(tree) == MINI_XML

    def test_corpus_round_trips(self, corpus):
        for _, tree in corpus.values():
            doc = serialize_tree(tree)
            again = parse_tree_xml(doc)
            assert again == tree
            assert serialize_tree(again) == doc

    def test_escaped_lexemes_survive(self):
        tree = _mini_tree()
        tree.root.children[0].children.append(
            EcstNode.concrete('"x<&>"', "literal", SourceSpan(1, 13, 1, 18))
        )
        assign_node_ids(tree.root)
        again = parse_tree_xml(serialize_tree(tree))
        assert again.root.children[0].children[-1].label == '"x<&>"'

    def test_bytes_and_str_inputs_agree(self):
        assert parse_tree_xml(MINI_XML.encode()) == parse_tree_xml(MINI_XML)


class TestSchemaErrors:
    def _raises(self, doc: str, *needles: str):
        with pytest.raises(TreeXmlError) as info:
            parse_tree_xml(doc)
        for needle in needles:
            assert needle in str(info.value), str(info.value)

    def test_unknown_kind(self):
        self._raises(
            MINI_XML.replace("FUNCTION_DECL", "WIDGET"),
            "unknown universal kind",
            "'WIDGET'",
            "line 3",
        )

    def test_root_must_be_compilation_unit(self):
        doc = MINI_XML.replace('kind="COMPILATION_UNIT"', 'kind="BRANCH"')
        self._raises(doc, "COMPILATION_UNIT", "line 2")

    def test_unknown_token_type(self):
        self._raises(
            MINI_XML.replace('type="identifier"', 'type="wibble"'),
            "unknown token type",
            "line 5",
        )

    def test_missing_span_attribute(self):
        self._raises(
            MINI_XML.replace(' endCol="9"', "", 1),
            "missing attribute 'endCol'",
            "<token>",
        )

    def test_non_integer_attribute(self):
        self._raises(
            MINI_XML.replace('col="11"', 'col="x"'),
            "not an integer",
        )

    def test_zero_position_rejected(self):
        self._raises(
            MINI_XML.replace('line="1" col="1"', 'line="0" col="1"', 1),
            ">= 1",
        )

    def test_reversed_span_rejected(self):
        self._raises(
            MINI_XML.replace(
                'line="1" col="1" endLine="1" endCol="9"',
                'line="1" col="9" endLine="1" endCol="1"',
            ),
            "invalid span",
        )

    def test_text_inside_node_element(self):
        doc = MINI_XML.replace(
            '<node kind="FUNCTION_DECL">', '<node kind="FUNCTION_DECL">stray'
        )
        self._raises(doc, "unexpected text content")

    def test_token_with_child_elements(self):
        doc = MINI_XML.replace(
            ">P</token>", '><node kind="BRANCH"/></token>'
        )
        self._raises(doc, "must not contain elements")

    def test_empty_token_lexeme(self):
        doc = MINI_XML.replace(">PROCEDURE</token>", "></token>")
        self._raises(doc, "empty <token> lexeme")

    def test_unknown_element(self):
        doc = MINI_XML.replace(
            '<token type="identifier" line="1" col="11" endLine="1" endCol="11">P</token>',
            "<widget/>",
        )
        self._raises(doc, "unknown element <widget>")

    def test_missing_header_attributes(self):
        self._raises(MINI_XML.replace(' language="modula2"', ""), "language")

    def test_total_lines_must_be_positive(self):
        self._raises(MINI_XML.replace('totalLines="1"', 'totalLines="0"'), ">= 1")

    def test_root_element_must_be_ecst(self):
        doc = MINI_XML.replace("<ecst", "<tree").replace("</ecst>", "</tree>")
        self._raises(doc, "expected root element <ecst>")

    def test_exactly_one_top_level_node(self):
        doc = MINI_XML.replace(
            "</ecst>", '  <node kind="COMPILATION_UNIT"/>\n</ecst>'
        )
        self._raises(doc, "exactly one")

    def test_not_well_formed(self):
        self._raises('<ecst source="x" language="y" totalLines="1">', "not well-formed")

    def test_empty_input(self):
        with pytest.raises(TreeXmlError):
            parse_tree_xml("")

    def test_invariant_violation_is_wrapped(self):
        # BRANCH_STATEMENT holding a non-BRANCH universal child
        doc = (
            '<ecst source="x" language="modula2" totalLines="1">\n'
            '  <node kind="COMPILATION_UNIT">\n'
            '    <node kind="BRANCH_STATEMENT">\n'
            '      <node kind="LOOP_STATEMENT">\n'
            '        <token type="keyword" line="1" col="1" endLine="1" endCol="5">WHILE</token>\n'
            "      </node>\n"
            "    </node>\n"
            "  </node>\n"
            "</ecst>\n"
        )
        self._raises(doc, "violates tree invariants")


class TestLoadTreeFile:
    def test_reads_file(self, tmp_path):
        path = tmp_path / "mini.ecst.xml"
        path.write_text(MINI_XML, encoding="utf-8")
        assert load_tree_file(path) == _mini_tree()

    def test_missing_file_is_io_error(self, tmp_path):
        with pytest.raises(SourceIoError):
            load_tree_file(tmp_path / "absent.ecst.xml")


class TestSerializeMetrics:
    def test_frozen_sample(self):
        report = MetricsReport(
            source_path="Mini.mod",
            language_id="modula2",
            elements=[
                ElementMetrics(
                    name="P",
                    annotation="FUNCTION_DECL",
                    cc=1,
                    loc=1,
                    sloc=1,
                    cloc=0,
                    start_line=1,
                    end_line=1,
                ),
            ],
            totals=LocBundle(loc=1, sloc=1, cloc=0),
        )
        assert serialize_metrics(report) == (
            '<metrics source="Mini.mod" language="modula2">\n'
            '  <element name="P" annotation="FUNCTION_DECL" cc="1" loc="1"'
            ' sloc="1" cloc="0" startLine="1" endLine="1"/>\n'
            '  <totals loc="1" sloc="1" cloc="0"/>\n'
            "</metrics>\n"
        )

    def test_name_attribute_is_quoted(self):
        report = MetricsReport(
            source_path="a&b.mod",
            language_id="modula2",
            elements=[],
            totals=LocBundle(loc=1, sloc=0, cloc=0),
        )
        doc = serialize_metrics(report)
        assert 'source="a&amp;b.mod"' in doc
