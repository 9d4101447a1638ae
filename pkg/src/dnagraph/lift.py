"""Transport a quasi-labeling through the line digraph.

If D carries a quasi-(alpha, k)-labeling then L(D) carries a *full*
(alpha, k+1)-labeling: the arc u->v becomes the vertex labeled by the
overlap-merge of l(u) and l(v).  Iterating certifies every L^m(D) with
alpha <= 4 as a DNA graph.  The output is re-verified on every step even
though the construction is guaranteed; a failure here is a library bug,
which makes the guarantee itself a permanent regression check.
"""

from __future__ import annotations

from dataclasses import dataclass

from .digraph import Digraph, line_digraph, _walk_join
from .errors import ConstructionFailure, InvalidInputError, InvalidParameterError, ResourceLimitError
from .labeling import Labeling, find_full_violation, find_quasi_violation, overlap_merge

LIFT_ARC_CAP = 50_000


@dataclass(frozen=True)
class LiftedLabeling:
    """Result of m lift steps, keeping the base and final pair.

    vertex_counts records |V| of every stage (base first), so growth claims
    can be checked without retaining the intermediate digraphs; those are
    kept only on request.
    """

    base_digraph: Digraph
    base_labeling: Labeling
    m: int
    result_digraph: Digraph
    result_labeling: Labeling
    vertex_counts: tuple[int, ...]
    intermediates: tuple[tuple[Digraph, Labeling], ...] | None = None


def lift_once(d: Digraph, lab: Labeling) -> tuple[Digraph, Labeling]:
    """One lift step: quasi-(alpha, k) on d -> full (alpha, k+1) on L(d)."""
    bad = find_quasi_violation(d, lab)
    if bad is not None:
        raise InvalidInputError(f"lift needs a quasi-valid labeling: {bad}")
    lifted = line_digraph(d)
    assignment = {
        _walk_join(tail, head): overlap_merge(lab.label_of(tail), lab.label_of(head))
        for tail, head in d.arcs
    }
    lifted_lab = Labeling(lab.alpha, lab.k + 1, assignment)
    bad = find_full_violation(lifted, lifted_lab)
    if bad is not None:
        raise ConstructionFailure(f"lifted labeling is not full (library bug): {bad}")
    return lifted, lifted_lab


def lift_m(d: Digraph, lab: Labeling, m: int, keep_intermediates: bool = False,
           arc_cap: int = LIFT_ARC_CAP) -> LiftedLabeling:
    """Apply lift_once m times (m >= 1)."""
    if m < 1:
        raise InvalidParameterError("lift count m must be >= 1")
    counts = [d.vertex_count]
    kept: list[tuple[Digraph, Labeling]] = []
    cur_d, cur_lab = d, lab
    for _ in range(m):
        if cur_d.arc_count > arc_cap:
            raise ResourceLimitError(
                f"next lift would create {cur_d.arc_count} vertices, cap is {arc_cap}")
        cur_d, cur_lab = lift_once(cur_d, cur_lab)
        counts.append(cur_d.vertex_count)
        if keep_intermediates:
            kept.append((cur_d, cur_lab))
    return LiftedLabeling(
        base_digraph=d,
        base_labeling=lab,
        m=m,
        result_digraph=cur_d,
        result_labeling=cur_lab,
        vertex_counts=tuple(counts),
        intermediates=tuple(kept) if keep_intermediates else None,
    )
