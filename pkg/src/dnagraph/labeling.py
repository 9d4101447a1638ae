"""Fixed-length overlap labels and the labeling verifiers.

A labeling assigns every vertex a k-tuple over {1..alpha}.  Three nested
properties matter here:

* distinct   -- no two vertices share a tuple;
* quasi      -- distinct, and every arc x->y overlaps: suffix(x) = prefix(y);
* full       -- quasi, and conversely every overlapping ordered pair is an arc
                (the deBruijn property, both directions).

A digraph carrying a full labeling with alpha <= 4 is a DNA graph: symbols
1..4 stand for the nucleotides A, C, G, T.
"""

from __future__ import annotations

from dataclasses import dataclass

from .digraph import Digraph
from .errors import InvalidInputError

Label = tuple[int, ...]


def format_label(label: Label) -> str:
    """Compact display form, e.g. (1, 2, 3) -> '123'."""
    return "".join(str(s) for s in label)


@dataclass(frozen=True)
class Labeling:
    """Total vertex -> label association with its declared (alpha, k).

    alpha is stored, not inferred from the symbols actually used: a labeling
    over three symbols can still be declared with alpha = 4, and that
    distinction decides DNA-graph certification.
    """

    alpha: int
    k: int
    assignment: dict[str, Label]

    def __post_init__(self):
        if self.alpha < 1:
            raise InvalidInputError("alpha must be a positive integer")
        if self.k < 2:
            raise InvalidInputError("label length k must be greater than 1")
        clean = {}
        for v, raw in self.assignment.items():
            label = tuple(int(s) for s in raw)
            if len(label) != self.k:
                raise InvalidInputError(f"label for {v} has length {len(label)}, expected k={self.k}")
            if any(s < 1 or s > self.alpha for s in label):
                raise InvalidInputError(f"label for {v} uses symbols outside 1..{self.alpha}")
            clean[v] = label
        object.__setattr__(self, "assignment", clean)

    def label_of(self, v: str) -> Label:
        return self.assignment[v]

    def relabeled(self, permutation: dict[int, int]) -> "Labeling":
        """Apply one alphabet permutation uniformly to every label."""
        moved = {v: tuple(permutation[s] for s in lab) for v, lab in self.assignment.items()}
        return Labeling(self.alpha, self.k, moved)


def overlap_merge(a: Label, b: Label) -> Label:
    """Merge two overlapping labels into one of length k+1."""
    if a[1:] != b[:-1]:
        raise InvalidInputError(f"labels {format_label(a)} and {format_label(b)} do not overlap")
    return a + (b[-1],)


def _require_total(d: Digraph, lab: Labeling) -> None:
    have = set(lab.assignment)
    want = set(d.vertices)
    if have != want:
        missing = sorted(want - have)
        extra = sorted(have - want)
        raise InvalidInputError(
            f"labeling is not total over the digraph (missing={missing[:3]}, extra={extra[:3]})")


def find_distinct_violation(d: Digraph, lab: Labeling) -> str | None:
    _require_total(d, lab)
    seen: dict[Label, str] = {}
    for v in d.vertices:
        label = lab.label_of(v)
        if label in seen:
            return f"vertices {seen[label]} and {v} share label {format_label(label)}"
        seen[label] = v
    return None


def find_quasi_violation(d: Digraph, lab: Labeling) -> str | None:
    """First violation of the quasi property, or None.

    Symbol bounds are enforced by the Labeling constructor, so only
    distinctness and the arc shift condition are checked here.
    """
    dup = find_distinct_violation(d, lab)
    if dup is not None:
        return dup
    for tail, head in d.arcs:
        lt = lab.label_of(tail)
        lh = lab.label_of(head)
        if lt[1:] != lh[:-1]:
            return (f"arc {tail} -> {head}: suffix {format_label(lt[1:])} "
                    f"does not match prefix {format_label(lh[:-1])}")
    return None


def find_full_violation(d: Digraph, lab: Labeling) -> str | None:
    """First violation of the full deBruijn property, or None."""
    bad = find_quasi_violation(d, lab)
    if bad is not None:
        return bad
    by_prefix: dict[Label, list[str]] = {}
    for v in d.vertices:
        by_prefix.setdefault(lab.label_of(v)[:-1], []).append(v)
    for x in d.vertices:
        suffix = lab.label_of(x)[1:]
        for y in by_prefix.get(suffix, ()):
            if not d.has_arc(x, y):
                return (f"overlap pair {x}, {y} (shared window {format_label(suffix)}) "
                        f"is not an arc")
    return None


def verify_distinct(d: Digraph, lab: Labeling) -> bool:
    return find_distinct_violation(d, lab) is None


def verify_quasi(d: Digraph, lab: Labeling) -> bool:
    return find_quasi_violation(d, lab) is None


def verify_full(d: Digraph, lab: Labeling) -> bool:
    return find_full_violation(d, lab) is None


def is_dna_certificate(d: Digraph, lab: Labeling) -> bool:
    """True iff lab is a full labeling of d over an alphabet of at most four."""
    return lab.alpha <= 4 and verify_full(d, lab)


# ---------------------------------------------------------------------------
# text format
# ---------------------------------------------------------------------------

def format_labeling(lab: Labeling) -> str:
    """Header ``alpha k`` then one ``vertex<TAB>s1 s2 ... sk`` line per vertex,
    ordered by vertex name."""
    lines = [f"{lab.alpha} {lab.k}"]
    for v in sorted(lab.assignment):
        lines.append(v + "\t" + " ".join(str(s) for s in lab.label_of(v)))
    return "\n".join(lines) + "\n"


def parse_labeling(text: str) -> Labeling:
    rows = [line for line in text.splitlines() if line.strip()]
    if not rows:
        raise InvalidInputError("empty labeling text")
    header = rows[0].split()
    if len(header) != 2:
        raise InvalidInputError("labeling text must start with a header line 'alpha k'")
    alpha, k = int(header[0]), int(header[1])
    assignment: dict[str, Label] = {}
    for row in rows[1:]:
        name, _, symbols = row.partition("\t")
        if not symbols:
            parts = row.split()
            name, symbols = parts[0], " ".join(parts[1:])
        if name in assignment:
            raise InvalidInputError(f"vertex {name} labeled twice")
        assignment[name.strip()] = tuple(int(s) for s in symbols.split())
    return Labeling(alpha, k, assignment)
