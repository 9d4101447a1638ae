"""Sequencing-by-hybridization pipeline on labeled digraphs.

Numeric labels translate to nucleotide strings (1, 2, 3, 4 -> A, C, G, T).
In the Pevzner view the k-mers sit on vertices and the target string is
spelled by an Eulerian path; its line digraph is the Lysov view, where the
merged (k+1)-mers sit on vertices and the same string is spelled by the
corresponding Hamiltonian path.
"""

from __future__ import annotations

from dataclasses import dataclass

from .digraph import Digraph, _walk_join
from .errors import InvalidInputError
from .labeling import Label, Labeling, find_quasi_violation, overlap_merge

NUCLEOTIDES = {1: "A", 2: "C", 3: "G", 4: "T"}


def to_nucleotides(lab: Labeling) -> dict[str, str]:
    """Render every vertex label as a nucleotide string (needs alpha <= 4)."""
    if lab.alpha > 4:
        raise InvalidInputError(f"nucleotide rendering needs alpha <= 4, got {lab.alpha}")
    return {v: "".join(NUCLEOTIDES[s] for s in label) for v, label in lab.assignment.items()}


def nucleotide_string(label: Label) -> str:
    return "".join(NUCLEOTIDES[s] for s in label)


def pevzner_arc_labels(d: Digraph, lab: Labeling) -> dict[tuple[str, str], str]:
    """Label every arc with the (k+1)-mer merging its endpoint labels."""
    bad = find_quasi_violation(d, lab)
    if bad is not None:
        raise InvalidInputError(f"arc labels need a quasi-valid labeling: {bad}")
    return {
        (tail, head): nucleotide_string(overlap_merge(lab.label_of(tail), lab.label_of(head)))
        for tail, head in d.arcs
    }


# ---------------------------------------------------------------------------
# Eulerian path (cycle splicing) and the Hamiltonian correspondence
# ---------------------------------------------------------------------------

def eulerian_path(d: Digraph, start: str | None = None) -> tuple[tuple[str, str], ...] | None:
    """An arc sequence using every arc exactly once, or None.

    Deterministic: out-arcs are consumed in insertion order, so a fixed
    digraph plus a fixed start vertex always spells the same string.  When
    the degree imbalance forces a start vertex, a conflicting explicit
    start returns None rather than a path from somewhere else.
    """
    if d.arc_count == 0:
        return None
    if start is not None and not d.has_vertex(start):
        return None
    plus = [v for v in d.vertices if d.out_degree(v) - d.in_degree(v) == 1]
    minus = [v for v in d.vertices if d.in_degree(v) - d.out_degree(v) == 1]
    balanced = all(abs(d.out_degree(v) - d.in_degree(v)) <= 1 for v in d.vertices)
    if not balanced or len(plus) > 1 or len(minus) > 1 or len(plus) != len(minus):
        return None
    if plus:
        forced = plus[0]
        if start is not None and start != forced:
            return None
        begin = forced
    else:
        begin = start if start is not None else next(v for v in d.vertices if d.out_degree(v) > 0)
        if d.out_degree(begin) == 0:
            return None

    out_arcs = {v: [] for v in d.vertices}
    for arc in d.arcs:
        out_arcs[arc[0]].append(arc)
    cursor = {v: 0 for v in d.vertices}
    stack: list[tuple[str, tuple[str, str] | None]] = [(begin, None)]
    trail: list[tuple[str, str]] = []
    while stack:
        v, via = stack[-1]
        if cursor[v] < len(out_arcs[v]):
            arc = out_arcs[v][cursor[v]]
            cursor[v] += 1
            stack.append((arc[1], arc))
        else:
            stack.pop()
            if via is not None:
                trail.append(via)
    if len(trail) != d.arc_count:
        return None  # arcs not mutually reachable
    trail.reverse()
    return tuple(trail)


def count_eulerian_paths(d: Digraph, start: str | None = None, cap: int = 64) -> int:
    """Number of distinct Eulerian arc sequences from the given start, counted
    by exhaustive backtracking and truncated at cap.

    Reconstruction ambiguity is reported, not resolved: spelling functions
    always follow the first (deterministic) path.
    """
    first = eulerian_path(d, start)
    if first is None:
        return 0
    begin = first[0][0]
    out_arcs: dict[str, list[tuple[str, str]]] = {v: [] for v in d.vertices}
    for arc in d.arcs:
        out_arcs[arc[0]].append(arc)
    used: set[tuple[str, str]] = set()
    count = 0

    def walk(v: str, remaining: int) -> None:
        nonlocal count
        if count >= cap:
            return
        if remaining == 0:
            count += 1
            return
        for arc in out_arcs[v]:
            if arc not in used:
                used.add(arc)
                walk(arc[1], remaining - 1)
                used.remove(arc)

    walk(begin, d.arc_count)
    return count


@dataclass(frozen=True)
class Spectrum:
    """A reconstructed nucleotide string and the vertex walk that spelled it."""

    sequence: str
    source_path: tuple[str, ...]


def spell_eulerian(d: Digraph, lab: Labeling, path: tuple[tuple[str, str], ...]) -> str:
    """Overlap-concatenate the vertex k-mers along an Eulerian arc sequence."""
    first = lab.label_of(path[0][0])
    out = nucleotide_string(first)
    for _, head in path:
        out += NUCLEOTIDES[lab.label_of(head)[-1]]
    return out


def hamiltonian_via_line(d: Digraph, lab: Labeling, start: str | None = None) -> Spectrum | None:
    """Map the Eulerian arc sequence of d onto the Hamiltonian vertex
    sequence of line_digraph(d) and spell the spectrum from it."""
    path = eulerian_path(d, start)
    if path is None:
        return None
    bad = find_quasi_violation(d, lab)
    if bad is not None:
        raise InvalidInputError(f"spectrum spelling needs a quasi-valid labeling: {bad}")
    vertices = tuple(_walk_join(tail, head) for tail, head in path)
    merged = [overlap_merge(lab.label_of(t), lab.label_of(h)) for t, h in path]
    sequence = nucleotide_string(merged[0])
    for label in merged[1:]:
        sequence += NUCLEOTIDES[label[-1]]
    return Spectrum(sequence=sequence, source_path=vertices)


# ---------------------------------------------------------------------------
# bundled demo instance
# ---------------------------------------------------------------------------

def sample_pevzner_graph() -> tuple[Digraph, Labeling]:
    """Five dinucleotide probes whose Eulerian walk from TA spells TACGACTA.

    Vertices are named by their own nucleotide rendering, so the numeric
    (4,2)-labeling and the display names tell the same story.
    """
    d = Digraph(
        ["TA", "AC", "CG", "CT", "GA"],
        [("TA", "AC"), ("AC", "CG"), ("AC", "CT"), ("CG", "GA"), ("GA", "AC"), ("CT", "TA")],
    )
    lab = Labeling(4, 2, {
        "TA": (4, 1),
        "AC": (1, 2),
        "CG": (2, 3),
        "CT": (2, 4),
        "GA": (3, 1),
    })
    return d, lab
