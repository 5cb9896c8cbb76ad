"""Parser, serializer and lexicon loader."""

import logging
import random

import pytest
from hypothesis import given, strategies as st

import genutil
from owlprose.model import (
    ClassAssertion,
    DisjointUnion,
    EquivalentClasses,
    Existential,
    Intersection,
    Named,
    SubClassOf,
)
from owlprose.parser import (
    LexiconFormatError,
    ParseError,
    SourceDocument,
    UndeclaredEntity,
    load_lexicon,
    parse_ontology,
    serialize_axiom,
    serialize_expression,
)

FULL_DOC = """\
Ontology(
  Declaration(Class(:City))
  Declaration(Class(:Settlement))
  Declaration(ObjectProperty(:partOf))
  Declaration(NamedIndividual(:rome))
  SubClassOf(:City :Settlement)
  EquivalentClasses(:City ObjectIntersectionOf(:Settlement ObjectSomeValuesFrom(:partOf :Settlement)))
  ClassAssertion(:City :rome)
)
"""


def test_full_document_round_trips_each_axiom_kind():
    ontology = parse_ontology(FULL_DOC)
    assert ontology.classes == {":City", ":Settlement"}
    assert ontology.properties == {":partOf"}
    assert ontology.individuals == {":rome"}
    assert [type(ax) for ax in ontology.axioms] == [
        SubClassOf,
        EquivalentClasses,
        ClassAssertion,
    ]
    assert ontology.axioms[0] == SubClassOf(Named(":City"), Named(":Settlement"))


def test_wrapper_is_optional_and_empty_document_is_valid():
    bare = parse_ontology("SubClassOf(:A :B)")
    assert len(bare.axioms) == 1
    assert parse_ontology("").axioms == []
    assert parse_ontology("   \n  # just a comment\n").axioms == []


def test_comments_run_to_end_of_line():
    doc = "SubClassOf(:A :B) # trailing\n# full line\nDisjointClasses(:A :B)"
    assert len(parse_ontology(doc).axioms) == 2


def test_class_assertion_takes_expression_first():
    ontology = parse_ontology("ClassAssertion(ObjectSomeValuesFrom(:p :A) :rome)")
    axiom = ontology.axioms[0]
    assert axiom.expr == Existential(":p", Named(":A"))
    assert axiom.individual == ":rome"


def test_disjoint_union_shape():
    axiom = parse_ontology("DisjointUnion(:A :B :C)").axioms[0]
    assert axiom == DisjointUnion(":A", (Named(":B"), Named(":C")))


def test_parse_error_reports_position():
    with pytest.raises(ParseError) as err:
        parse_ontology("SubClassOf(:A")
    assert err.value.line == 1
    assert err.value.column > 0


def test_unbalanced_and_unknown_keyword_are_rejected():
    with pytest.raises(ParseError):
        parse_ontology("SubClassOf(:A :B))")
    with pytest.raises(ParseError):
        parse_ontology("Nonsense(:A :B)")


def test_intersection_needs_two_operands():
    with pytest.raises(ParseError):
        parse_ontology("SubClassOf(:A ObjectIntersectionOf(:B))")


def test_lenient_mode_auto_declares_with_warning(caplog):
    doc = "SubClassOf(:A ObjectSomeValuesFrom(:p :B))\nClassAssertion(:A :rome)"
    with caplog.at_level(logging.WARNING, logger="owlprose.parser"):
        ontology = parse_ontology(doc)
    assert ontology.classes == {":A", ":B"}
    assert ontology.properties == {":p"}
    assert ontology.individuals == {":rome"}
    assert any("auto-declaring" in rec.getMessage() for rec in caplog.records)


def test_strict_mode_rejects_undeclared_ids():
    with pytest.raises(UndeclaredEntity):
        parse_ontology("SubClassOf(:A :B)", strict=True)
    doc = "Declaration(Class(:A))\nDeclaration(Class(:B))\nSubClassOf(:A :B)"
    assert len(parse_ontology(doc, strict=True).axioms) == 1


def test_source_document_from_path(tmp_path):
    path = tmp_path / "tiny.ofs"
    path.write_text("SubClassOf(:A :B)\n", encoding="utf-8")
    doc = SourceDocument.from_path(path)
    assert doc.path == str(path)
    assert len(parse_ontology(doc).axioms) == 1


def test_serialize_expression_nests():
    expr = Intersection((Named(":A"), Existential(":p", Named(":B"))))
    assert (
        serialize_expression(expr)
        == "ObjectIntersectionOf(:A ObjectSomeValuesFrom(:p :B))"
    )


@given(st.integers(0, 10**9))
def test_serialize_parse_round_trip(seed):
    rng = random.Random(seed)
    classes, props, inds = genutil.make_pools()
    axiom = genutil.gen_axiom(rng, classes, props, inds, depth=rng.randint(0, 3))
    parsed = parse_ontology(serialize_axiom(axiom))
    assert parsed.axioms == [axiom]


# ---------------------------------------------------------------------------
# Lexicon
# ---------------------------------------------------------------------------

LEXICON = """\
# id\tpreferred name\tarticle\tproperty phrase
:City\tcity\ta
:partOf\tpart of\t\tis part of
:AcuteFever\tacute fever\tan
"""


def test_load_lexicon_basic_rows():
    lexicon = load_lexicon(LEXICON)
    assert lexicon[":City"].preferred_name == "city"
    assert lexicon[":City"].article == "a"
    assert lexicon[":partOf"].article is None
    assert lexicon[":partOf"].property_phrase == "is part of"
    assert lexicon[":AcuteFever"].article == "an"


def test_load_lexicon_later_rows_override():
    lexicon = load_lexicon(":A\tfirst\n:A\tsecond\n")
    assert lexicon[":A"].preferred_name == "second"


def test_load_lexicon_five_column_joiner():
    lexicon = load_lexicon(":p\tlocated\tthe\tis located\tin\n")
    assert lexicon[":p"].joiner == "in"


def test_load_lexicon_rejects_bad_article():
    with pytest.raises(LexiconFormatError):
        load_lexicon(":A\tthing\tsome\n")


@pytest.mark.parametrize("row", [":OnlyId\n", ":Id\ta\tb\tc\td\te\n"])
def test_load_lexicon_rejects_wrong_column_count(row):
    with pytest.raises(LexiconFormatError):
        load_lexicon(row)


def test_load_lexicon_accepts_source_document(tmp_path):
    path = tmp_path / "lex.tsv"
    path.write_text(":A\tthing\n", encoding="utf-8")
    lexicon = load_lexicon(SourceDocument.from_path(path))
    assert lexicon[":A"].preferred_name == "thing"
