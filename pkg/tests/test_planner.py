"""Discourse planning: bucket routing, the named-super split, tree shape."""

from owlprose.classifier import classify
from owlprose.model import (
    ClassAssertion,
    ClassFrame,
    DisjointClasses,
    DisjointUnion,
    EquivalentClasses,
    Existential,
    Intersection,
    Named,
    SubClassOf,
)
from owlprose.planner import build_rst, leaves, order_groups, render_debug

D = ":F"
F, A, B, C = Named(D), Named(":A"), Named(":B"), Named(":C")
COMPLEX = Existential(":p", A)


def classify_all(axioms):
    return [classify(ax, D) for ax in axioms]


def test_buckets_route_and_sort_by_precedence():
    axioms = [
        EquivalentClasses((F, A)),  # Ec, simple direct
        SubClassOf(F, COMPLEX),  # Scr1, complex direct
        SubClassOf(F, A),  # Sc, simple direct
        ClassAssertion(F, ":x"),  # Ca, complex direct block
        SubClassOf(A, Intersection((B, F))),  # Scr2, indirect
    ]
    buckets = order_groups(classify_all(axioms), D)
    assert [ca.group for ca in buckets.simple_direct] == ["Sc", "Ec"]
    assert [ca.group for ca in buckets.complex_direct] == ["Ca", "Scr"]
    assert [ca.group for ca in buckets.complex_indirect] == ["Scr"]
    assert buckets.simple_indirect == []
    assert buckets.dropped == []


def test_simple_indirect_axioms_are_always_converted():
    axioms = [
        SubClassOf(A, F),
        EquivalentClasses((A, F)),
        DisjointClasses((B, F, A)),
    ]
    buckets = order_groups(classify_all(axioms), D)
    assert buckets.simple_indirect == []
    assert all(ca.direct for ca in buckets.simple_direct)
    inverted = [ca for ca in buckets.simple_direct if ca.inverted]
    assert len(inverted) == 1 and isinstance(inverted[0].axiom, SubClassOf)
    rotated = [ca.axiom for ca in buckets.simple_direct if isinstance(ca.axiom, DisjointClasses)]
    assert rotated == [DisjointClasses((F, B, A))]


def test_car_dcr_du_are_dropped():
    axioms = [
        ClassAssertion(Intersection((F, A)), ":x"),
        DisjointClasses((F, COMPLEX)),
        DisjointUnion(D, (A, B)),
    ]
    buckets = order_groups(classify_all(axioms), D)
    assert [ca.group for ca in buckets.dropped] == ["Car", "Dcr", "Du"]
    assert not buckets.simple_direct
    assert not buckets.complex_direct
    assert not buckets.complex_indirect


def test_named_super_intersection_splits_into_conjuncts():
    buckets = order_groups(classify_all([SubClassOf(F, Intersection((A, B, C)))]), D)
    assert [ca.axiom for ca in buckets.simple_direct] == [
        SubClassOf(F, A),
        SubClassOf(F, B),
        SubClassOf(F, C),
    ]
    assert all(ca.group == "Sc" and ca.direct for ca in buckets.simple_direct)
    assert not buckets.complex_direct


def test_super_intersection_with_structure_is_not_split():
    axiom = SubClassOf(F, Intersection((A, COMPLEX)))
    buckets = order_groups(classify_all([axiom]), D)
    assert not buckets.simple_direct
    assert [ca.axiom for ca in buckets.complex_direct] == [axiom]


def test_indirect_scr_is_not_split():
    # same named-only intersection, but the frame class sits on the sub side
    axiom = SubClassOf(B, Intersection((A, F)))
    buckets = order_groups(classify_all([axiom]), D)
    assert not buckets.simple_direct
    assert [ca.axiom for ca in buckets.complex_indirect] == [axiom]


FULL_FRAME = [
    SubClassOf(F, A),
    SubClassOf(B, F),
    EquivalentClasses((F, C)),
    DisjointClasses((F, B)),
    ClassAssertion(F, ":x"),
    SubClassOf(F, COMPLEX),
    EquivalentClasses((F, Intersection((A, COMPLEX)))),
    SubClassOf(C, Intersection((B, F))),
    EquivalentClasses((COMPLEX, F)),
]


def test_tree_shape_for_a_full_frame():
    frame = ClassFrame(D, FULL_FRAME)
    tree = build_rst(frame, classify_all(FULL_FRAME))
    assert tree.designated == D
    assert [block.label for block in tree.children] == [
        "simple-direct",
        "complex-direct",
        "indirect-list",
    ]
    assert [leaf.label for leaf in leaves(tree)] == [
        "sc-super",
        "sc-specialised",
        "ec",
        "dc",
        "ca",
        "scr",
        "ecr",
        "indirect-scr",
        "indirect-ecr",
    ]
    assert tree.children[1].connector == "Additionally"
    indirect = tree.children[2]
    assert all(len(leaf.axioms) == 1 for leaf in indirect.children)


def test_connector_absent_without_simple_direct_text():
    axioms = [SubClassOf(F, COMPLEX)]
    tree = build_rst(ClassFrame(D, axioms), classify_all(axioms))
    assert [block.label for block in tree.children] == ["complex-direct"]
    assert tree.children[0].connector is None


def test_empty_frame_builds_a_bare_root():
    tree = build_rst(ClassFrame(D, []), [])
    assert tree.children == []
    assert leaves(tree) == []


def test_render_debug_lists_one_node_per_line():
    frame = ClassFrame(D, [SubClassOf(F, A)])
    tree = build_rst(frame, classify_all(frame.axioms))
    text = render_debug(tree)
    lines = text.splitlines()
    assert lines[0].startswith("nucleus - class :F")
    assert any("sc-super (1 axiom)" in line for line in lines)
    assert all(line.startswith(("nucleus", "satellite", " ")) for line in lines)
