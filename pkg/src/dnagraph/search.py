"""Backtracking oracle for (quasi-)(alpha,k)-labelings of small digraphs.

Finding such a labeling for an arbitrary digraph is NP-complete, so this
is an exhaustive desk-scale tool: it validates the closed-form
constructions independently, certifies small negative results, and probes
the ladder family.  Vertices are decided depth-first along arcs so that a
new vertex usually has a decided in-neighbor, which pins all but the last
symbol of its label and keeps the branching factor at alpha.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .digraph import Digraph, make_ladder
from .errors import ConstructionFailure, InvalidParameterError, ResourceLimitError
from .labeling import Label, Labeling, find_full_violation, find_quasi_violation

DEFAULT_NODE_BUDGET = 10 ** 8
SEARCH_SIZE_CAP = 40

SAT = "SAT"
UNSAT = "UNSAT"
BUDGET_EXCEEDED = "BUDGET_EXCEEDED"


@dataclass(frozen=True)
class SearchConfig:
    alpha: int
    k: int
    mode: str = "quasi"
    node_budget: int = DEFAULT_NODE_BUDGET
    order: str = "dfs"

    def __post_init__(self):
        if self.alpha < 2:
            raise InvalidParameterError("search needs alpha >= 2")
        if self.k < 2:
            raise InvalidParameterError("search needs k >= 2")
        if self.mode not in ("quasi", "full"):
            raise InvalidParameterError(f"unknown mode {self.mode!r}")
        if self.node_budget <= 0:
            raise InvalidParameterError("node budget must be positive")
        if self.order not in ("dfs", "given"):
            raise InvalidParameterError(f"unknown order policy {self.order!r}")


@dataclass(frozen=True)
class SearchOutcome:
    verdict: str
    certificate: Labeling | None
    nodes_explored: int


class _BudgetExhausted(Exception):
    pass


def _vertex_order(d: Digraph, policy: str) -> list[str]:
    if policy == "given":
        return list(d.vertices)
    start = max(d.vertices, key=lambda v: d.out_degree(v))
    order: list[str] = []
    seen: set[str] = set()
    stack = [start]
    while len(order) < d.vertex_count:
        if not stack:
            nxt = next((v for v in d.vertices if v not in seen and
                        any(w in seen for w in (*d.out_neighbors(v), *d.in_neighbors(v)))), None)
            if nxt is None:
                nxt = next(v for v in d.vertices if v not in seen)
            stack.append(nxt)
        v = stack.pop()
        if v in seen:
            continue
        seen.add(v)
        order.append(v)
        stack.extend(reversed(d.out_neighbors(v)))
    return order


def _canonical_first_labels(alpha: int, k: int) -> list[Label]:
    """Labels whose symbols appear in first-occurrence order 1, 2, 3, ...

    Labelings are closed under alphabet permutation, so restricting the
    first decided vertex to these patterns divides the tree by up to
    alpha! without losing completeness.
    """
    out: list[Label] = []

    def rec(prefix: list[int], top: int) -> None:
        if len(prefix) == k:
            out.append(tuple(prefix))
            return
        for z in range(1, min(alpha, top + 1) + 1):
            prefix.append(z)
            rec(prefix, max(top, z))
            prefix.pop()

    rec([1], 1)
    return out


def find_labeling(d: Digraph, cfg: SearchConfig, size_cap: int = SEARCH_SIZE_CAP) -> SearchOutcome:
    """Exhaustive (up to budget) search for a quasi or full (alpha,k)-labeling.

    SAT always comes with a certificate that has been re-checked by the
    matching verifier; UNSAT is only reported after the whole tree was
    exhausted, never on budget exhaustion.
    """
    if d.vertex_count > size_cap:
        raise ResourceLimitError(f"search capped at {size_cap} vertices")
    if d.vertex_count == 0:
        return SearchOutcome(SAT, Labeling(cfg.alpha, cfg.k, {}), 0)
    order = _vertex_order(d, cfg.order)
    alpha, k, full = cfg.alpha, cfg.k, cfg.mode == "full"

    assigned: dict[str, Label] = {}
    used: set[Label] = set()
    by_prefix: dict[Label, list[str]] = {}
    by_suffix: dict[Label, list[str]] = {}
    nodes = 0

    def candidates(v: str, first: bool):
        prefix = None
        for u in d.in_neighbors(v):
            lab = assigned.get(u)
            if lab is None:
                continue
            if prefix is None:
                prefix = lab[1:]
            elif prefix != lab[1:]:
                return ()
        suffix = None
        for w in d.out_neighbors(v):
            lab = assigned.get(w)
            if lab is None:
                continue
            if suffix is None:
                suffix = lab[:-1]
            elif suffix != lab[:-1]:
                return ()
        if prefix is not None and suffix is not None:
            cand = prefix + (suffix[-1],)
            return (cand,) if cand[1:] == suffix else ()
        if prefix is not None:
            return tuple(prefix + (z,) for z in range(1, alpha + 1))
        if suffix is not None:
            return tuple((z,) + suffix for z in range(1, alpha + 1))
        if first:
            return tuple(_canonical_first_labels(alpha, k))
        return tuple(itertools.product(range(1, alpha + 1), repeat=k))

    def admissible(v: str, lab: Label) -> bool:
        if lab in used:
            return False
        if d.has_arc(v, v) and lab[1:] != lab[:-1]:
            return False
        if full:
            if lab[1:] == lab[:-1] and not d.has_arc(v, v):
                return False
            for x in by_suffix.get(lab[:-1], ()):
                if not d.has_arc(x, v):
                    return False
            for y in by_prefix.get(lab[1:], ()):
                if not d.has_arc(v, y):
                    return False
        return True

    def place(v: str, lab: Label) -> None:
        assigned[v] = lab
        used.add(lab)
        if full:
            by_prefix.setdefault(lab[:-1], []).append(v)
            by_suffix.setdefault(lab[1:], []).append(v)

    def unplace(v: str, lab: Label) -> None:
        del assigned[v]
        used.remove(lab)
        if full:
            by_prefix[lab[:-1]].remove(v)
            by_suffix[lab[1:]].remove(v)

    def extend(i: int) -> bool:
        nonlocal nodes
        if i == len(order):
            return True
        v = order[i]
        for lab in candidates(v, i == 0):
            if not admissible(v, lab):
                continue
            if nodes >= cfg.node_budget:
                raise _BudgetExhausted
            nodes += 1
            place(v, lab)
            if extend(i + 1):
                return True
            unplace(v, lab)
        return False

    try:
        found = extend(0)
    except _BudgetExhausted:
        return SearchOutcome(BUDGET_EXCEEDED, None, nodes)
    if not found:
        return SearchOutcome(UNSAT, None, nodes)
    certificate = Labeling(alpha, k, dict(assigned))
    check = find_full_violation if full else find_quasi_violation
    bad = check(d, certificate)
    if bad is not None:
        raise ConstructionFailure(f"search returned an invalid certificate: {bad}")
    return SearchOutcome(SAT, certificate, nodes)


def check_middle_vertex_lemma(d: Digraph, lab: Labeling) -> bool:
    """True iff every vertex sitting inside a chord span has a constant label.

    For any arc t -> h that closes a directed 2-path t -> b -> h, a quasi
    labeling forces l(b) to repeat one symbol; this is the structural fact
    behind the impossibility bound for chorded cycles, checked here
    directly on a given labeling.
    """
    for tail, head in d.arcs:
        for mid in d.out_neighbors(tail):
            if mid in (tail, head) or not d.has_arc(mid, head):
                continue
            label = lab.label_of(mid)
            if any(s != label[0] for s in label):
                return False
    return True


# ---------------------------------------------------------------------------
# ladder conjecture explorer
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ConjectureRow:
    n: int
    alpha: int
    k: int
    verdict: str
    nodes: int


def explore_conjecture(n_values, node_budget: int = DEFAULT_NODE_BUDGET,
                       mode: str = "full") -> list[ConjectureRow]:
    """Probe ladders P2 x Pn for full labelings at alpha in {3,4}, k = 4,
    falling back to k = 5 whenever k = 4 does not come back SAT."""
    rows: list[ConjectureRow] = []
    for n in n_values:
        ladder = make_ladder(n)
        for alpha in (3, 4):
            outcome = find_labeling(ladder, SearchConfig(alpha, 4, mode, node_budget))
            rows.append(ConjectureRow(n, alpha, 4, outcome.verdict, outcome.nodes_explored))
            if outcome.verdict != SAT:
                outcome = find_labeling(ladder, SearchConfig(alpha, 5, mode, node_budget))
                rows.append(ConjectureRow(n, alpha, 5, outcome.verdict, outcome.nodes_explored))
    return rows
