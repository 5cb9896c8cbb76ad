"""Corpus pattern survey: per-class axiom patterns and the frequencies of
communicative roles and groups over a set of ontologies.

A class's pattern is the sorted concatenation of the distinct group labels in
its frame ("EcScScr"); a class with no axioms about it lands under the empty
pattern. Roles bundle the simple and complex variants of a group: taxonomy
(Sc, Scr), definition (Ec, Ecr), distinction (Dc, Dcr), illustration (Ca,
Car) and alternatives (Du). Containment is counted once per class however
many axioms of the group the frame holds.

The report gives every frequency against two denominators, all classes and
classes with a nonempty frame, because either population can be the one of
interest when profiling a corpus.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field

from .classifier import frame_groups
from .model import Ontology, collect_frame

ROLES = {
    "taxonomy": frozenset(("Sc", "Scr")),
    "definition": frozenset(("Ec", "Ecr")),
    "distinction": frozenset(("Dc", "Dcr")),
    "illustration": frozenset(("Ca", "Car")),
    "alternatives": frozenset(("Du",)),
}


@dataclass
class PatternStats:
    """Tallies from one survey run.

    skipped counts input files that failed to parse; survey itself only sees
    parsed ontologies, so the walker that feeds it maintains the counter.
    """

    per_pattern: Counter = field(default_factory=Counter)
    total_classes: int = 0
    role_containment: Counter = field(default_factory=Counter)
    group_containment: Counter = field(default_factory=Counter)
    skipped: int = 0

    @property
    def nonempty_classes(self) -> int:
        return self.total_classes - self.per_pattern.get("", 0)

    @property
    def role_frequency(self) -> dict[str, float]:
        if not self.total_classes:
            return {}
        return {r: c / self.total_classes for r, c in self.role_containment.items()}

    @property
    def group_frequency(self) -> dict[str, float]:
        if not self.total_classes:
            return {}
        return {g: c / self.total_classes for g, c in self.group_containment.items()}


def survey(corpus: list[Ontology]) -> PatternStats:
    """Tally the pattern of every declared class in every ontology."""
    stats = PatternStats()
    for ontology in corpus:
        for class_id in ontology.classes:
            groups = frame_groups(collect_frame(ontology, class_id))
            stats.per_pattern["".join(sorted(groups))] += 1
            stats.total_classes += 1
            for group in groups:
                stats.group_containment[group] += 1
            for role, members in ROLES.items():
                if groups & members:
                    stats.role_containment[role] += 1
    return stats


def _fraction(numerator: int, denominator: int) -> str:
    return f"{numerator / denominator if denominator else 0.0:.4f}"


def emit_report(stats: PatternStats) -> str:
    """Render the tallies as a three-section CSV.

    Rows are sorted by descending count, ties by label; zero-count rows are
    dropped, so empty stats give the headers alone. The empty pattern keeps
    its literal empty label (a leading comma in its row) and contributes 0 to
    the nonempty column, since none of its classes are nonempty.
    """
    total = stats.total_classes
    nonempty = stats.nonempty_classes
    order = lambda counter: sorted(counter.items(), key=lambda kv: (-kv[1], kv[0]))

    lines = ["pattern,count,fraction,fraction_nonempty"]
    for label, count in order(stats.per_pattern):
        if count:
            among_nonempty = 0 if label == "" else count
            lines.append(
                f"{label},{count},{_fraction(count, total)},{_fraction(among_nonempty, nonempty)}"
            )
    lines.append("")
    lines.append("role,fraction,fraction_nonempty")
    for role, count in order(stats.role_containment):
        if count:
            lines.append(f"{role},{_fraction(count, total)},{_fraction(count, nonempty)}")
    lines.append("")
    lines.append("group,fraction,fraction_nonempty")
    for group, count in order(stats.group_containment):
        if count:
            lines.append(f"{group},{_fraction(count, total)},{_fraction(count, nonempty)}")
    return "\n".join(lines) + "\n"
