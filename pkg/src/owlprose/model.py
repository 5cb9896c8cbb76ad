"""In-memory model of the OWL-EL subset: class expressions, axioms, ontologies
and per-class frames.

Identifiers are plain ``:``-prefixed tokens kept as strings (including the
colon); human-readable names live in the lexicon, not here. Everything in this
module is immutable after construction and safe to share across threads.
"""

from __future__ import annotations

from dataclasses import dataclass, field


class UnknownClass(KeyError):
    """Raised when a frame is requested for a class the ontology never declares."""


# ---------------------------------------------------------------------------
# Class expressions
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Named:
    """A named class, referenced by its identifier."""

    iri: str


@dataclass(frozen=True)
class Intersection:
    """Conjunction of two or more class expressions, in source order."""

    operands: tuple[ClassExpression, ...]

    def __post_init__(self):
        if len(self.operands) < 2:
            raise ValueError("intersection needs at least two operands")


@dataclass(frozen=True)
class Existential:
    """Existential restriction: ``property some filler``."""

    prop: str
    filler: ClassExpression


ClassExpression = Named | Intersection | Existential


def is_simple(expr: ClassExpression) -> bool:
    """An expression is simple iff it is a bare named class."""
    return isinstance(expr, Named)


# ---------------------------------------------------------------------------
# Axioms
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class SubClassOf:
    sub: ClassExpression
    super: ClassExpression


@dataclass(frozen=True)
class EquivalentClasses:
    operands: tuple

    def __post_init__(self):
        if len(self.operands) < 2:
            raise ValueError("EquivalentClasses needs at least two operands")


@dataclass(frozen=True)
class DisjointClasses:
    operands: tuple

    def __post_init__(self):
        if len(self.operands) < 2:
            raise ValueError("DisjointClasses needs at least two operands")


@dataclass(frozen=True)
class ClassAssertion:
    expr: ClassExpression
    individual: str


@dataclass(frozen=True)
class DisjointUnion:
    union_class: str
    disjuncts: tuple

    def __post_init__(self):
        if len(self.disjuncts) < 2:
            raise ValueError("DisjointUnion needs at least two disjuncts")


Axiom = SubClassOf | EquivalentClasses | DisjointClasses | ClassAssertion | DisjointUnion


def expressions_of(axiom: Axiom) -> tuple:
    """The top-level class expressions (operands) of an axiom.

    For DisjointUnion the union class counts as an operand (wrapped in Named);
    ClassAssertion contributes only its class expression, not the individual.
    """
    if isinstance(axiom, SubClassOf):
        return (axiom.sub, axiom.super)
    if isinstance(axiom, (EquivalentClasses, DisjointClasses)):
        return axiom.operands
    if isinstance(axiom, ClassAssertion):
        return (axiom.expr,)
    if isinstance(axiom, DisjointUnion):
        return (Named(axiom.union_class),) + axiom.disjuncts
    raise TypeError(f"not an axiom: {axiom!r}")


def _expr_mentions(expr: ClassExpression, iri: str) -> bool:
    if isinstance(expr, Named):
        return expr.iri == iri
    if isinstance(expr, Intersection):
        return any(_expr_mentions(op, iri) for op in expr.operands)
    if isinstance(expr, Existential):
        return _expr_mentions(expr.filler, iri)
    raise TypeError(f"not a class expression: {expr!r}")


def mentions(axiom: Axiom, iri: str) -> bool:
    """True iff the class id occurs anywhere in the axiom, at any depth."""
    return any(_expr_mentions(expr, iri) for expr in expressions_of(axiom))


# ---------------------------------------------------------------------------
# Lexicon entries
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class LexEntry:
    """One lexicon row: surface name plus optional article, property phrase
    and joiner for an id (class, property or individual)."""

    id: str
    preferred_name: str
    article: str | None = None  # "a" | "an" | "the" | None
    property_phrase: str | None = None
    joiner: str | None = None


# ---------------------------------------------------------------------------
# Ontology and frames
# ---------------------------------------------------------------------------

@dataclass
class Ontology:
    """Declared ids plus the axiom list, in document order.

    The lexicon is attached by the caller after parsing (the two files are
    independent); it maps id → LexEntry.
    """

    classes: set = field(default_factory=set)
    properties: set = field(default_factory=set)
    individuals: set = field(default_factory=set)
    axioms: list = field(default_factory=list)
    lexicon: dict = field(default_factory=dict)


@dataclass
class ClassFrame:
    """The designated class and every axiom mentioning it, in ontology order."""

    designated: str
    axioms: list = field(default_factory=list)


def collect_frame(ontology: Ontology, iri: str) -> ClassFrame:
    """All axioms of the ontology that mention the class, in ontology order.

    Raises UnknownClass when the class is not declared.
    """
    if iri not in ontology.classes:
        raise UnknownClass(iri)
    return ClassFrame(iri, [ax for ax in ontology.axioms if mentions(ax, iri)])
