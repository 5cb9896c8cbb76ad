"""Round-trip evaluation: compare a hand-written re-coding of a class against
the reference axioms, judging by text similarity over canonical serializations.

Because an author can state the same class in many syntactically different
ways, the reference is expanded into a family of logically equivalent
versions before scoring: conjuncts of every intersection may be reordered,
same-subject SubClassOf axioms may be split apart or merged into intersection
supers, and the argument lists of EquivalentClasses/DisjointClasses may be
permuted. DisjointUnion keeps its disjunct order; the order of axioms within
a version never matters (versions are compared as sets).

The candidate scores, against each version, the best one-to-one axiom
assignment by normalized Levenshtein similarity; the report keeps the version
with the highest mean. A missing reference axiom scores 0 and extra candidate
axioms are ignored.
"""

from __future__ import annotations

import itertools
import unicodedata
from collections import Counter
from dataclasses import dataclass, field

from .model import (
    Axiom,
    ClassAssertion,
    ClassExpression,
    DisjointClasses,
    DisjointUnion,
    EquivalentClasses,
    Existential,
    Intersection,
    Named,
    SubClassOf,
)
from .parser import serialize_axiom, serialize_expression

DEFAULT_CAP = 10_000


class EquivalentExplosion(RuntimeError):
    """The equivalence family exceeded the version cap."""


# ---------------------------------------------------------------------------
# Text measures
# ---------------------------------------------------------------------------


def normalize(text: str) -> str:
    """Case-fold, drop punctuation, collapse all whitespace to single spaces."""
    folded = text.casefold()
    stripped = "".join(
        ch for ch in folded if not unicodedata.category(ch).startswith("P")
    )
    return " ".join(stripped.split())


def levenshtein(a: str, b: str) -> int:
    """Edit distance with unit-cost insert, delete and substitute."""
    if len(a) < len(b):
        a, b = b, a
    previous = list(range(len(b) + 1))
    for i, ch_a in enumerate(a, start=1):
        current = [i]
        for j, ch_b in enumerate(b, start=1):
            cost = 0 if ch_a == ch_b else 1
            current.append(min(previous[j] + 1, current[j - 1] + 1, previous[j - 1] + cost))
        previous = current
    return previous[len(b)]


def similarity(candidate: str, reference: str) -> float:
    """(length - distance) / length with the longer length as denominator.

    Both texts are expected to be normalized already. Two empty strings are a
    perfect match; the result is clamped into [0, 1].
    """
    longest = max(len(candidate), len(reference))
    if longest == 0:
        return 1.0
    return max(0.0, (longest - levenshtein(candidate, reference)) / longest)


# ---------------------------------------------------------------------------
# Equivalence family
# ---------------------------------------------------------------------------


@dataclass
class EquivalentSet:
    versions: list = field(default_factory=list)


def _expression_variants(expr: ClassExpression) -> list:
    """All reorderings of the expression's intersections, original form first."""
    if isinstance(expr, Named):
        return [expr]
    if isinstance(expr, Existential):
        return [Existential(expr.prop, v) for v in _expression_variants(expr.filler)]
    if isinstance(expr, Intersection):
        out = []
        for perm in itertools.permutations(expr.operands):
            for combo in itertools.product(*[_expression_variants(op) for op in perm]):
                out.append(Intersection(combo))
        return out
    raise TypeError(f"not a class expression: {expr!r}")


def _conjuncts(expr: ClassExpression) -> tuple:
    return expr.operands if isinstance(expr, Intersection) else (expr,)


def _set_partitions(n: int):
    """All partitions of range(n) as block lists, in restricted-growth order.

    Blocks appear by first element, so the single-block partition comes first
    and the all-singletons partition last.
    """
    if n == 0:
        return

    def extend(assignment: list, used: int):
        if len(assignment) == n:
            blocks = [[] for _ in range(used)]
            for index, block in enumerate(assignment):
                blocks[block].append(index)
            yield blocks
            return
        for block in range(used + 1):
            yield from extend(assignment + [block], max(used, block + 1))

    yield from extend([0], 1)


def _subclass_pool_variants(sub: ClassExpression, axioms: list):
    """Variants of a group of SubClassOf axioms sharing one sub side.

    The supers' top-level conjuncts are pooled; every set partition of the
    pool yields one version fragment, each block realized as a bare super or
    an intersection, combined with every conjunct ordering inside each block,
    every variant of each conjunct expression, and every variant of the sub
    expression per produced axiom. The original grouping is emitted first so
    the head of the stream is always the verbatim input.
    """
    elements = [c for axiom in axioms for c in _conjuncts(axiom.super)]
    variants = [_expression_variants(e) for e in elements]
    sub_variants = _expression_variants(sub)

    def with_subs(supers: list):
        for sub_combo in itertools.product(sub_variants, repeat=len(supers)):
            yield [SubClassOf(s, sup) for s, sup in zip(sub_combo, supers)]

    yield list(axioms)
    for blocks in _set_partitions(len(elements)):
        orderings = [itertools.permutations(block) for block in blocks]
        for ordered_blocks in itertools.product(*orderings):
            flat_indices = [i for block in ordered_blocks for i in block]
            variant_lists = [variants[i] for i in flat_indices]
            for combo in itertools.product(*variant_lists):
                position = 0
                supers = []
                for block in ordered_blocks:
                    chosen = combo[position : position + len(block)]
                    position += len(block)
                    supers.append(chosen[0] if len(chosen) == 1 else Intersection(tuple(chosen)))
                yield from with_subs(supers)


def _axiom_unit_variants(axiom: Axiom):
    """Variants of one non-SubClassOf axiom, original form first."""
    if isinstance(axiom, (EquivalentClasses, DisjointClasses)):
        maker = type(axiom)
        for perm in itertools.permutations(axiom.operands):
            for combo in itertools.product(*[_expression_variants(op) for op in perm]):
                yield [maker(tuple(combo))]
    elif isinstance(axiom, ClassAssertion):
        for variant in _expression_variants(axiom.expr):
            yield [ClassAssertion(variant, axiom.individual)]
    elif isinstance(axiom, DisjointUnion):
        for combo in itertools.product(*[_expression_variants(d) for d in axiom.disjuncts]):
            yield [DisjointUnion(axiom.union_class, tuple(combo))]
    else:
        raise TypeError(f"not an axiom: {axiom!r}")


def _units(axioms: list) -> list:
    """Group axioms into variant units: same-sub SubClassOf axioms pool at the
    position of their first member, everything else stands alone."""
    pools: dict = {}
    units = []
    for axiom in axioms:
        if isinstance(axiom, SubClassOf):
            key = serialize_expression(axiom.sub)
            if key in pools:
                pools[key].append(axiom)
                continue
            pools[key] = [axiom]
            group = pools[key]
            units.append(lambda g=group, s=axiom.sub: _subclass_pool_variants(s, g))
        else:
            units.append(lambda a=axiom: _axiom_unit_variants(a))
    return units


def version_key(version: list) -> tuple:
    """Order-insensitive identity of a version: sorted canonical serializations."""
    return tuple(sorted(serialize_axiom(ax) for ax in version))


def _equivalent_stream(axioms: list):
    """Deduplicated stream of equivalent versions, verbatim reference first."""
    units = _units(list(axioms))
    seen = set()

    def walk(index: int):
        if index == len(units):
            yield []
            return
        for head in units[index]():
            for tail in walk(index + 1):
                yield head + tail

    for version in walk(0):
        key = version_key(version)
        if key not in seen:
            seen.add(key)
            yield version


def enumerate_equivalents(axioms: list, cap: int = DEFAULT_CAP) -> EquivalentSet:
    """Materialize the whole equivalence family, or fail once it passes cap."""
    versions = []
    for version in _equivalent_stream(axioms):
        if len(versions) >= cap:
            raise EquivalentExplosion(f"more than {cap} equivalent versions")
        versions.append(version)
    return EquivalentSet(versions)


# ---------------------------------------------------------------------------
# Scoring
# ---------------------------------------------------------------------------


@dataclass
class AxiomScore:
    reference: Axiom
    candidate: Axiom | None
    score: float


@dataclass
class SimilarityReport:
    per_axiom: list
    mean: float
    best_version_index: int
    truncated: bool = False


def _assignment_mean(reference_texts: list, candidate_texts: list, pair_cache: dict) -> tuple:
    """Best one-to-one assignment of candidates to references.

    Returns (mean over reference axioms, chosen candidate index per reference
    or None). Small frames make exact search affordable: a bitmask DP over
    candidate subsets, n_reference x 2^n_candidate states.
    """
    n, m = len(reference_texts), len(candidate_texts)
    if n == 0:
        return 1.0, []

    def pair(i: int, j: int) -> float:
        key = (reference_texts[i], candidate_texts[j])
        if key not in pair_cache:
            pair_cache[key] = similarity(key[1], key[0])
        return pair_cache[key]

    size = 1 << m
    NEG = float("-inf")
    best = [[NEG] * size for _ in range(n + 1)]
    best[0][0] = 0.0
    for i in range(n):
        row, nxt = best[i], best[i + 1]
        for mask in range(size):
            base = row[mask]
            if base == NEG:
                continue
            if base > nxt[mask]:  # leave reference i unmatched (scores 0)
                nxt[mask] = base
            for j in range(m):
                bit = 1 << j
                if not mask & bit:
                    value = base + pair(i, j)
                    if value > nxt[mask | bit]:
                        nxt[mask | bit] = value
    total, final_mask = max((v, mask) for mask, v in enumerate(best[n]))

    # walk the table backwards to recover who matched whom
    chosen: list = [None] * n
    mask = final_mask
    remaining = total
    for i in range(n - 1, -1, -1):
        if best[i][mask] == remaining:  # reference i was left unmatched
            continue
        for j in range(m):
            bit = 1 << j
            if mask & bit and best[i][mask ^ bit] + pair(i, j) == remaining:
                chosen[i] = j
                mask ^= bit
                remaining -= pair(i, j)
                break
    return total / n, chosen


def _perfect_assignment(version_texts: list, candidate_texts: list) -> list:
    """Candidate index per reference axiom when texts match exactly."""
    unused: dict = {}
    for j, text in enumerate(candidate_texts):
        unused.setdefault(text, []).append(j)
    return [unused[text].pop(0) for text in version_texts]


def score_submission(candidate, reference, cap: int = DEFAULT_CAP) -> SimilarityReport:
    """Score a candidate frame against the best equivalent of the reference.

    Scans at most cap versions; if the family is larger the scan stops there
    and the report is flagged truncated rather than failing, so oversized
    frames still get a (lower-bound) score. Ties keep the earliest version.

    A version scores a perfect 1.0 exactly when each of its axioms has an
    equal normalized text among distinct candidate axioms, i.e. when the
    version's text multiset is contained in the candidate's. That containment
    test is cheap, so the scan looks for a perfect version first and only
    falls back to assignment scoring over the scanned prefix when none exists.
    """
    candidate_axioms = list(candidate.axioms)
    candidate_texts = [normalize(serialize_axiom(ax)) for ax in candidate_axioms]
    candidate_counts = Counter(candidate_texts)
    pair_cache: dict = {}

    scanned: list = []
    truncated = False
    perfect: tuple | None = None
    for index, version in enumerate(_equivalent_stream(list(reference.axioms))):
        if index >= cap:
            truncated = True
            break
        version_texts = [normalize(serialize_axiom(ax)) for ax in version]
        scanned.append((version, version_texts))
        if Counter(version_texts) <= candidate_counts:
            perfect = (index, version, version_texts)
            break

    if perfect is not None:
        index, version, version_texts = perfect
        chosen = _perfect_assignment(version_texts, candidate_texts)
        per_axiom = [
            AxiomScore(axiom, candidate_axioms[j], 1.0) for axiom, j in zip(version, chosen)
        ]
        return SimilarityReport(per_axiom, 1.0, index, truncated)

    best_mean = -1.0
    best_index = 0
    best_detail: tuple = ([], [], [])
    for index, (version, version_texts) in enumerate(scanned):
        mean, chosen = _assignment_mean(version_texts, candidate_texts, pair_cache)
        if mean > best_mean:
            best_mean, best_index, best_detail = mean, index, (version, version_texts, chosen)

    version, version_texts, chosen = best_detail
    per_axiom = []
    for i, axiom in enumerate(version):
        j = chosen[i] if i < len(chosen) else None
        matched = candidate_axioms[j] if j is not None else None
        score = pair_cache[(version_texts[i], candidate_texts[j])] if j is not None else 0.0
        per_axiom.append(AxiomScore(axiom, matched, score))
    return SimilarityReport(per_axiom, max(best_mean, 0.0), best_index, truncated)


def emit_report(report: SimilarityReport) -> str:
    """CSV rows reference_axiom,candidate_axiom,score plus a mean summary."""
    lines = ["reference_axiom,candidate_axiom,score"]
    for item in report.per_axiom:
        reference = serialize_axiom(item.reference)
        matched = serialize_axiom(item.candidate) if item.candidate is not None else ""
        lines.append(f"{reference},{matched},{item.score:.4f}")
    lines.append(f"mean,{report.mean:.4f}")
    return "\n".join(lines) + "\n"
