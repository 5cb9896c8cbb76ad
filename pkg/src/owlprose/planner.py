"""Discourse planning: sort classified axioms into presentation categories and
build the nucleus/satellite tree the realizer walks.

Category order is simple-direct, complex-direct, indirect; groups within a
category follow the fixed precedence Sc, Ec, Dc, Ca, Scr, Ecr, and axioms
within a group keep frame order. Indirect simple axioms are always converted
to direct form first, so only complex indirect axioms (Scr2/Ecr2) reach the
trailing list. Car, Dcr and Du axioms are never planned; they land in the
dropped list.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .classifier import ClassifiedAxiom, to_direct
from .model import ClassFrame, Intersection, Named, SubClassOf

NUCLEUS = "nucleus"
SATELLITE = "satellite"

ELABORATION = "elaboration"
CONDITION = "condition"
LIST = "list"

# leaf traversal order inside each category
_PRECEDENCE = {"Sc": 0, "Ec": 1, "Dc": 2, "Ca": 3, "Scr": 4, "Ecr": 5}

_DROPPED_GROUPS = ("Car", "Dcr", "Du")


@dataclass
class Buckets:
    """Classified axioms sorted into presentation categories.

    simple_indirect is kept for shape but is always empty: every simple
    indirect axiom has a direct form and the conversion is unconditional.
    """

    simple_direct: list = field(default_factory=list)
    complex_direct: list = field(default_factory=list)
    simple_indirect: list = field(default_factory=list)
    complex_indirect: list = field(default_factory=list)
    dropped: list = field(default_factory=list)


@dataclass
class RstNode:
    """One node of the discourse tree.

    Leaves carry axioms and no children; the relation is the node's relation
    to its parent (None for the root and for plain nucleus children). The
    root also records which class the tree describes.
    """

    kind: str  # NUCLEUS or SATELLITE
    relation: str | None
    label: str
    axioms: list = field(default_factory=list)
    children: list = field(default_factory=list)
    connector: str | None = None
    designated: str | None = None


def _split_named_super(ca: ClassifiedAxiom) -> list[ClassifiedAxiom]:
    """Decompose a direct SubClassOf whose super is an intersection of named
    classes only into one simple SubClassOf per conjunct.

    The two forms state the same thing (a subclass of an intersection is a
    subclass of every conjunct, and vice versa), and the split lets the
    conjuncts aggregate into the kind-of sentence instead of spawning a
    separate complex sentence.
    """
    axiom = ca.axiom
    return [
        ClassifiedAxiom(SubClassOf(axiom.sub, conjunct), "Sc", True)
        for conjunct in axiom.super.operands
    ]


def order_groups(classified: list[ClassifiedAxiom], designated: str) -> Buckets:
    """Sort classified axioms into buckets, converting what has a direct form."""
    buckets = Buckets()
    for ca in classified:
        if ca.group in _DROPPED_GROUPS:
            buckets.dropped.append(ca)
            continue
        if not ca.direct and ca.group in ("Sc", "Ec", "Dc"):
            ca = to_direct(ca, designated)
        if (
            ca.group == "Scr"
            and ca.direct
            and isinstance(ca.axiom, SubClassOf)
            and isinstance(ca.axiom.super, Intersection)
            and all(isinstance(op, Named) for op in ca.axiom.super.operands)
        ):
            buckets.simple_direct.extend(_split_named_super(ca))
            continue
        if ca.group in ("Sc", "Ec", "Dc"):
            buckets.simple_direct.append(ca)
        elif ca.direct:  # Scr1, Ecr1, Ca
            buckets.complex_direct.append(ca)
        else:  # Scr2, Ecr2
            buckets.complex_indirect.append(ca)
    key = lambda ca: _PRECEDENCE[ca.group]
    buckets.simple_direct.sort(key=key)  # stable: frame order within a group
    buckets.complex_direct.sort(key=key)
    buckets.complex_indirect.sort(key=key)
    return buckets


def _leaf(kind: str, relation: str | None, label: str, axioms) -> RstNode:
    return RstNode(kind, relation, label, axioms=list(axioms))


def build_rst(frame: ClassFrame, classified: list[ClassifiedAxiom]) -> RstNode:
    """Arrange the classified frame into the paragraph tree.

    Simple-direct leaves form the main nucleus (kind-of statements first,
    then re-oriented specialisations, then equivalences and disjointness
    satellites); complex-direct leaves form an elaboration satellite that the
    realizer opens with "Additionally" whenever the nucleus produced text;
    indirect axioms form a trailing list, one nucleus per axiom.
    """
    buckets = order_groups(classified, frame.designated)
    root = RstNode(NUCLEUS, None, f"class {frame.designated}", designated=frame.designated)

    simple = [ca for ca in buckets.simple_direct]
    if simple:
        block = RstNode(NUCLEUS, None, "simple-direct")
        supers = [ca for ca in simple if ca.group == "Sc" and not ca.inverted]
        specialised = [ca for ca in simple if ca.group == "Sc" and ca.inverted]
        equivalences = [ca for ca in simple if ca.group == "Ec"]
        disjoints = [ca for ca in simple if ca.group == "Dc"]
        if supers:
            block.children.append(_leaf(NUCLEUS, None, "sc-super", supers))
        if specialised:
            block.children.append(_leaf(NUCLEUS, None, "sc-specialised", specialised))
        if equivalences:
            block.children.append(_leaf(SATELLITE, ELABORATION, "ec", equivalences))
        if disjoints:
            block.children.append(_leaf(SATELLITE, ELABORATION, "dc", disjoints))
        root.children.append(block)

    if buckets.complex_direct:
        connector = "Additionally" if simple else None
        block = RstNode(SATELLITE, ELABORATION, "complex-direct", connector=connector)
        members = [ca for ca in buckets.complex_direct if ca.group == "Ca"]
        subclasses = [ca for ca in buckets.complex_direct if ca.group == "Scr"]
        definitions = [ca for ca in buckets.complex_direct if ca.group == "Ecr"]
        if members:
            block.children.append(_leaf(SATELLITE, ELABORATION, "ca", members))
        if subclasses:
            block.children.append(_leaf(NUCLEUS, None, "scr", subclasses))
        if definitions:
            block.children.append(_leaf(SATELLITE, CONDITION, "ecr", definitions))
        root.children.append(block)

    if buckets.complex_indirect:
        block = RstNode(SATELLITE, ELABORATION, "indirect-list")
        for ca in buckets.complex_indirect:
            block.children.append(_leaf(NUCLEUS, LIST, f"indirect-{ca.group.lower()}", [ca]))
        root.children.append(block)

    return root


def leaves(node: RstNode) -> list[RstNode]:
    """In-order leaf list (nodes that carry axioms)."""
    if not node.children:
        return [node] if node.axioms else []
    result = []
    for child in node.children:
        result.extend(leaves(child))
    return result


def render_debug(node: RstNode, indent: int = 0) -> str:
    """Indented one-node-per-line rendering for --rst-debug and tests."""
    relation = node.relation or "-"
    line = "  " * indent + f"{node.kind} {relation} {node.label}"
    if node.connector:
        line += f" [{node.connector}]"
    if node.axioms:
        line += f" ({len(node.axioms)} axiom{'s' if len(node.axioms) != 1 else ''})"
    parts = [line]
    for child in node.children:
        parts.append(render_debug(child, indent + 1))
    return "\n".join(parts)
