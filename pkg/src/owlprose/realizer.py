"""Surface realization: walk the discourse tree, aggregate shared-subject
statements, fill the sentence templates, and insert articles.

The template catalogue, with F the described class:

  kind-of        "{F} is a kind of {o1, o2 and o3}."
  specialised    "A more specialised kind of {F} is {z}." /
                 "More specialised kinds of {F} are {z1 and z2}."
  defined-as     ", and {F} is defined as {list}." merged onto the previous
                 simple sentence, else standalone.
  different-from "Also {F} is different from {list}."
  complex opener "Additionally, " on the block's first sentence when simple
                 text precedes it.
  complex kind-of "{F} is a kind of {expression}."
  complex defined "{F} is defined as {expression}." or ", and is defined as
                 {expression}." merged after a complex kind-of sentence.
  members        ", and has members {n1, n2 and n3}." merged, else
                 "{F} has members ...".
  indirect       "Another relevant aspect of {F} is that {sentence}." for one
                 axiom; "Other relevant aspects of {F} are:" plus bullets for
                 several, each re-expressed from its own subject.

Articles come from the lexicon and are positional: subjects, defined-as
objects, "is X" clauses and existential fillers take an article when the
lexicon provides one; kind-of objects and the specialised-kind slots stay
bare. Names without a lexicon entry fall back to the raw id without the
leading colon.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .model import (
    EquivalentClasses,
    Existential,
    Intersection,
    Named,
    SubClassOf,
)
from .parser import serialize_expression
from .planner import RstNode, leaves

SUBJECT = "subject"
OBJECT = "object"
CLAUSE = "clause"


@dataclass(frozen=True)
class RealizeOptions:
    elide_rolegroup: bool = False
    guess_articles: bool = False


@dataclass(frozen=True)
class NounPhrase:
    text: str
    article_applied: bool


@dataclass
class Paragraph:
    """Finalized sentences plus an optional trailing bulleted list.

    records pairs each emitted unit with the group labels it came from
    (merged sentences carry joined labels, e.g. "Scr+Ecr").
    """

    sentences: list = field(default_factory=list)
    bullet_header: str | None = None
    bullets: list = field(default_factory=list)
    records: list = field(default_factory=list)

    @property
    def text(self) -> str:
        parts = list(self.sentences)
        if self.bullet_header:
            parts.append(self.bullet_header)
        body = " ".join(parts)
        if self.bullets:
            marked = [f"- {b};" for b in self.bullets[:-1]]
            marked.append(f"- {self.bullets[-1]}.")
            body = body + "\n" + "\n".join(marked)
        return body


def _sentence_case(text: str) -> str:
    for i, ch in enumerate(text):
        if ch.isalpha():
            return text[:i] + ch.upper() + text[i + 1 :]
    return text


def comma_and(items: list[str]) -> str:
    """Join objects the way aggregation does: "a", "a and b", "a, b and c"."""
    if not items:
        return ""
    if len(items) == 1:
        return items[0]
    return ", ".join(items[:-1]) + " and " + items[-1]


class _Renderer:
    """Expression rendering against one lexicon + option set."""

    def __init__(self, lexicon: dict, options: RealizeOptions):
        self.lexicon = lexicon
        self.options = options

    def name_of(self, id_: str) -> str:
        entry = self.lexicon.get(id_)
        if entry is not None:
            return entry.preferred_name
        return id_.lstrip(":")

    def article_of(self, id_: str) -> str | None:
        entry = self.lexicon.get(id_)
        if entry is not None and entry.article:
            return entry.article
        if self.options.guess_articles:
            name = self.name_of(id_)
            return "an" if name[:1].lower() in "aeiou" else "a"
        return None

    def property_phrase(self, prop: str) -> str:
        entry = self.lexicon.get(prop)
        if entry is None:
            return prop.lstrip(":")
        return entry.property_phrase or entry.preferred_name

    def _joiner(self, prop: str, phrase: str) -> str:
        entry = self.lexicon.get(prop)
        if entry is not None and entry.joiner:
            return f" {entry.joiner} "
        if phrase == "has" or phrase.startswith("has "):
            return " in "
        return " "

    def _elided(self, expr: Existential) -> bool:
        return (
            self.options.elide_rolegroup
            and expr.prop.lstrip(":").lower() == "rolegroup"
        )

    def np(self, expr, articled: bool) -> str:
        """Noun-phrase rendering. The articled flag applies to named heads and
        list items; clauses and existential fillers article themselves."""
        if isinstance(expr, Named):
            name = self.name_of(expr.iri)
            if articled:
                article = self.article_of(expr.iri)
                if article:
                    return f"{article} {name}"
            return name
        if isinstance(expr, Intersection):
            if all(isinstance(op, Named) for op in expr.operands):
                return comma_and([self.np(op, articled) for op in expr.operands])
            head, rest = expr.operands[0], expr.operands[1:]
            if isinstance(head, Named):
                return f"{self.np(head, articled)} that {self.clauses(rest)}"
            return f"something that {self.clauses(expr.operands)}"
        if isinstance(expr, Existential):
            if self._elided(expr):
                return self.np(expr.filler, articled)
            return self.exist_phrase(expr)
        raise TypeError(f"not a class expression: {expr!r}")

    def exist_phrase(self, expr: Existential) -> str:
        phrase = self.property_phrase(expr.prop)
        joiner = self._joiner(expr.prop, phrase)
        return f"{phrase}{joiner}{self.np(expr.filler, articled=True)}"

    def clause(self, expr) -> str:
        """Render one conjunct as a clause hanging off "that"."""
        if isinstance(expr, Existential):
            if self._elided(expr):
                return self.clause(expr.filler)
            return self.exist_phrase(expr)
        return f"is {self.np(expr, articled=True)}"

    def clauses(self, operands) -> str:
        return ", and ".join(self.clause(op) for op in operands)


def render_expression(expr, lexicon: dict, role: str, options: RealizeOptions | None = None) -> NounPhrase:
    """Public expression rendering: subject and object roles give an articled
    noun phrase, clause role gives the that-clause form."""
    renderer = _Renderer(lexicon, options or RealizeOptions())
    if role in (SUBJECT, OBJECT):
        text = renderer.np(expr, articled=True)
    elif role == CLAUSE:
        text = renderer.clause(expr)
    else:
        raise ValueError(f"unknown role {role!r}")
    bare = renderer.np(expr, articled=False) if role != CLAUSE else text
    return NounPhrase(text, article_applied=text != bare)


KIND_OF = "kind-of"
SPECIALISED = "specialised"
DEFINED_AS = "defined-as"
DIFFERENT_FROM = "different-from"
MEMBERS = "members"


def aggregate(pairs: list, template: str) -> str:
    """One shared-subject sentence body from same-subject (subject, object)
    pairs. Both slots arrive already rendered (article decisions are the
    caller's); the body has no final period and no sentence casing yet.
    """
    assert pairs, "aggregate needs at least one pair"
    subject = pairs[0][0]
    assert all(s == subject for s, _ in pairs)
    joined = comma_and([obj for _, obj in pairs])
    if template == KIND_OF:
        return f"{subject} is a kind of {joined}"
    if template == SPECIALISED:
        if len(pairs) == 1:
            return f"a more specialised kind of {subject} is {joined}"
        return f"more specialised kinds of {subject} are {joined}"
    if template == DEFINED_AS:
        return f"{subject} is defined as {joined}"
    if template == DIFFERENT_FROM:
        return f"also {subject} is different from {joined}"
    if template == MEMBERS:
        return f"{subject} has members {joined}"
    raise ValueError(f"unknown template {template!r}")


class _ParagraphBuilder:
    def __init__(self):
        self.bodies: list[list] = []  # [labels, body] pairs

    def sentence(self, label: str, body: str):
        self.bodies.append([[label], body])

    def merge(self, label: str, clause: str):
        self.bodies[-1][0].append(label)
        self.bodies[-1][1] += f", and {clause}"

    @property
    def empty(self) -> bool:
        return not self.bodies


def _dedup(rendered: list[tuple[str, str]]) -> list[str]:
    """Keep first occurrence per serialized key, return the rendered texts."""
    seen = set()
    out = []
    for key, text in rendered:
        if key not in seen:
            seen.add(key)
            out.append(text)
    return out


def realize(tree: RstNode, lexicon: dict, options: RealizeOptions | None = None) -> Paragraph:
    """Turn a planned tree into a paragraph. Deterministic and total: every
    leaf contributes text, and an empty tree gives an empty paragraph."""
    options = options or RealizeOptions()
    renderer = _Renderer(lexicon, options)
    designated = tree.designated
    focus_subject = renderer.np(Named(designated), articled=True) if designated else ""
    focus_bare = renderer.np(Named(designated), articled=False) if designated else ""

    blocks = {child.label: child for child in tree.children}
    by_label = {
        leaf.label: leaf
        for block in blocks.values()
        for leaf in leaves(block)
        if not leaf.label.startswith("indirect-")
    }
    indirect = leaves(blocks["indirect-list"]) if "indirect-list" in blocks else []

    builder = _ParagraphBuilder()

    # --- simple-direct block ---------------------------------------------
    leaf = by_label.get("sc-super")
    if leaf is not None:
        objects = _dedup(
            [
                (serialize_expression(ca.axiom.super), renderer.np(ca.axiom.super, articled=False))
                for ca in leaf.axioms
            ]
        )
        builder.sentence("Sc", aggregate([(focus_subject, o) for o in objects], KIND_OF))
    leaf = by_label.get("sc-specialised")
    if leaf is not None:
        subs = _dedup(
            [
                (serialize_expression(ca.axiom.sub), renderer.np(ca.axiom.sub, articled=False))
                for ca in leaf.axioms
            ]
        )
        builder.sentence("Sc", aggregate([(focus_bare, s) for s in subs], SPECIALISED))
    leaf = by_label.get("ec")
    if leaf is not None:
        others = _dedup(
            [
                (serialize_expression(op), renderer.np(op, articled=True))
                for ca in leaf.axioms
                for op in ca.axiom.operands[1:]
            ]
        )
        body = aggregate([(focus_subject, o) for o in others], DEFINED_AS)
        if builder.empty:
            builder.sentence("Ec", body)
        else:
            builder.merge("Ec", body)
    leaf = by_label.get("dc")
    if leaf is not None:
        others = _dedup(
            [
                (serialize_expression(op), renderer.np(op, articled=True))
                for ca in leaf.axioms
                for op in ca.axiom.operands[1:]
            ]
        )
        builder.sentence("Dc", aggregate([(focus_subject, o) for o in others], DIFFERENT_FROM))

    # --- complex-direct block ----------------------------------------------
    # The tree keeps these leaves in precedence order (ca, scr, ecr); the text
    # linearizes as complex kind-of sentences, then defined-as merges, then
    # the members clause, which always trails its host sentence.
    block_start = len(builder.bodies)
    leaf = by_label.get("scr")
    if leaf is not None:
        for ca in leaf.axioms:
            super_np = renderer.np(ca.axiom.super, articled=False)
            builder.sentence("Scr", aggregate([(focus_subject, super_np)], KIND_OF))
    leaf = by_label.get("ecr")
    if leaf is not None:
        for ca in leaf.axioms:
            rendered = comma_and(
                [renderer.np(op, articled=True) for op in ca.axiom.operands[1:]]
            )
            if len(builder.bodies) > block_start:
                builder.merge("Ecr", f"is defined as {rendered}")
            else:
                builder.sentence("Ecr", aggregate([(focus_subject, rendered)], DEFINED_AS))
    leaf = by_label.get("ca")
    if leaf is not None:
        members = _dedup(
            [(ca.axiom.individual, renderer.name_of(ca.axiom.individual)) for ca in leaf.axioms]
        )
        clause = f"has members {comma_and(members)}"
        if len(builder.bodies) > block_start:
            builder.merge("Ca", clause)
        else:
            builder.sentence("Ca", aggregate([(focus_subject, comma_and(members))], MEMBERS))
    connector = blocks.get("complex-direct") and blocks["complex-direct"].connector
    if connector and len(builder.bodies) > block_start:
        labels, body = builder.bodies[block_start]
        builder.bodies[block_start] = [labels, f"{connector.lower()}, {body}"]

    # --- indirect list -----------------------------------------------------
    paragraph = Paragraph()
    embedded = [(leaf.axioms[0], _embedded_sentence(renderer, leaf.axioms[0])) for leaf in indirect]
    if len(embedded) == 1:
        ca, body = embedded[0]
        builder.sentence(
            ca.group, f"another relevant aspect of {focus_bare} is that {body}"
        )
    elif embedded:
        paragraph.bullet_header = _sentence_case(
            f"other relevant aspects of {focus_bare} are:"
        )
        paragraph.records.append(("Indirect", paragraph.bullet_header))
        for ca, body in embedded:
            bullet = _sentence_case(body)
            paragraph.bullets.append(bullet)
            paragraph.records.append((ca.group, bullet))

    for labels, body in builder.bodies:
        paragraph.sentences.append(_sentence_case(body) + ".")
    paragraph.records = [
        ("+".join(labels), _sentence_case(body) + ".") for labels, body in builder.bodies
    ] + paragraph.records
    return paragraph


def _embedded_sentence(renderer: _Renderer, ca) -> str:
    """An indirect axiom re-expressed from its own subject's perspective."""
    axiom = ca.axiom
    if isinstance(axiom, SubClassOf):
        subject = renderer.np(axiom.sub, articled=True)
        if isinstance(axiom.super, Intersection):
            return f"{subject} is defined as {renderer.np(axiom.super, articled=True)}"
        return f"{subject} is a kind of {renderer.np(axiom.super, articled=False)}"
    if isinstance(axiom, EquivalentClasses):
        subject = renderer.np(axiom.operands[0], articled=True)
        rendered = comma_and(
            [renderer.np(op, articled=True) for op in axiom.operands[1:]]
        )
        return f"{subject} is defined as {rendered}"
    raise TypeError(f"no indirect rendering for {type(axiom).__name__}")
