"""owlprose: verbalize OWL-EL class descriptions as English paragraphs,
survey axiom patterns over a corpus, and score round-trip re-codings.

The pipeline for one class: parse_ontology + load_lexicon, collect_frame,
classify each frame axiom, build_rst, realize. The survey and evaluation
entry points reuse the same parsed model.
"""

from .classifier import ClassifiedAxiom, classify, frame_groups, pattern_label, to_direct
from .evaluate import (
    EquivalentExplosion,
    EquivalentSet,
    SimilarityReport,
    enumerate_equivalents,
    levenshtein,
    normalize,
    score_submission,
    similarity,
)
from .model import (
    ClassAssertion,
    ClassFrame,
    DisjointClasses,
    DisjointUnion,
    EquivalentClasses,
    Existential,
    Intersection,
    LexEntry,
    Named,
    Ontology,
    SubClassOf,
    UnknownClass,
    collect_frame,
)
from .parser import (
    GRAMMAR_VERSION,
    LexiconFormatError,
    ParseError,
    SourceDocument,
    UndeclaredEntity,
    load_lexicon,
    parse_ontology,
    serialize_axiom,
    serialize_expression,
)
from .planner import RstNode, build_rst, leaves, order_groups, render_debug
from .realizer import NounPhrase, Paragraph, RealizeOptions, realize, render_expression
from .survey import PatternStats, survey

__version__ = "0.1.0"

__all__ = [
    "ClassAssertion",
    "ClassFrame",
    "ClassifiedAxiom",
    "DisjointClasses",
    "DisjointUnion",
    "EquivalentClasses",
    "EquivalentExplosion",
    "EquivalentSet",
    "Existential",
    "GRAMMAR_VERSION",
    "Intersection",
    "LexEntry",
    "LexiconFormatError",
    "Named",
    "NounPhrase",
    "Ontology",
    "Paragraph",
    "ParseError",
    "PatternStats",
    "RealizeOptions",
    "RstNode",
    "SimilarityReport",
    "SourceDocument",
    "SubClassOf",
    "UndeclaredEntity",
    "UnknownClass",
    "build_rst",
    "classify",
    "collect_frame",
    "enumerate_equivalents",
    "frame_groups",
    "leaves",
    "levenshtein",
    "load_lexicon",
    "normalize",
    "order_groups",
    "parse_ontology",
    "pattern_label",
    "realize",
    "render_debug",
    "render_expression",
    "score_submission",
    "serialize_axiom",
    "serialize_expression",
    "similarity",
    "survey",
    "to_direct",
]
