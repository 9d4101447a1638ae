"""Closed-form quasi-labelings for every digraph family in the catalogue.

Every construction here emits a quasi-(alpha, k)-labeling with alpha <= 4,
which is exactly what the lift module needs to certify the line-digraph
iterates as DNA graphs.

Most labelings below are generated as the cyclic k-windows of a short
symbol string: a cycle labeled by consecutive windows of a cyclic string
satisfies the shift condition by construction, so only distinctness (and
non-collision between glued cycles) has to be arranged.  The same view
makes the vertex-merging shrink a one-symbol string deletion.
"""

from __future__ import annotations

from dataclasses import dataclass

from .digraph import Digraph, make_chorded_cycle, make_infinity, make_propeller3
from .errors import (ConstructionFailure, InvalidInputError, InvalidParameterError,
                     UnsupportedParameterError)
from .labeling import Label, Labeling, find_quasi_violation

KNOWN_TAGS = frozenset({
    "chorded-cycle", "infinity-even", "infinity-odd", "infinity-c3",
    "double-cycle", "windmill", "propeller3",
})


@dataclass(frozen=True)
class ConstructionResult:
    """A digraph together with the quasi-labeling certifying it."""

    digraph: Digraph
    labeling: Labeling
    tag: str

    def __post_init__(self):
        if self.tag not in KNOWN_TAGS:
            raise InvalidParameterError(f"unknown construction tag {self.tag!r}")


def _ceil_half(x: int) -> int:
    return (x + 1) // 2


def _windows(s: tuple[int, ...], k: int) -> list[Label]:
    """All cyclic k-windows of s, one per start position."""
    n = len(s)
    return [tuple(s[(i + j) % n] for j in range(k)) for i in range(n)]


def _checked(digraph: Digraph, labeling: Labeling, tag: str) -> ConstructionResult:
    bad = find_quasi_violation(digraph, labeling)
    if bad is not None:
        raise ConstructionFailure(f"{tag} construction failed self-verification: {bad}")
    return ConstructionResult(digraph, labeling, tag)


# ---------------------------------------------------------------------------
# chorded dicycles: catalogued quasi-(4,3) rows
# ---------------------------------------------------------------------------

# Fixed golden rows for 6 <= n <= 14, listed as l(v1),...,l(vn).  Outside this
# window the family admits no such labeling (a chord forces its middle vertex
# onto a constant label, and only four constant labels exist), except for the
# single-chord cases n in {4, 5} handled by earlier work and left out here.
CHORDED_ROWS: dict[int, str] = {
    6:  "211,111,112,122,222,221",
    7:  "311,111,112,122,222,223,231",
    8:  "311,111,112,122,222,223,233,331",
    9:  "311,111,112,122,222,223,233,333,331",
    10: "211,111,112,122,222,223,233,333,332,321",
    11: "211,111,112,122,222,223,233,333,332,322,221",
    12: "411,111,112,122,222,223,233,333,334,344,444,441",
    13: "211,111,112,122,222,223,233,333,334,344,444,442,421",
    14: "211,111,112,122,222,223,233,333,334,344,444,442,422,221",
}


def label_chorded_cycle(n: int) -> ConstructionResult:
    """Quasi-(4,3)-labeling of the chorded dicycle *Cn, 6 <= n <= 14."""
    if n not in CHORDED_ROWS:
        raise UnsupportedParameterError(
            f"chorded-cycle labelings are catalogued for 6 <= n <= 14 only, got n={n}")
    d = make_chorded_cycle(n)
    row = [tuple(int(c) for c in word) for word in CHORDED_ROWS[n].split(",")]
    assignment = {f"v{i}": row[i - 1] for i in range(1, n + 1)}
    return _checked(d, Labeling(4, 3, assignment), "chorded-cycle")


# ---------------------------------------------------------------------------
# blade strings shared by the double-cycle, windmill, and propeller families
# ---------------------------------------------------------------------------

def _blade_plain(length: int, j: int, k: int) -> tuple[int, ...]:
    """Cycle string for a blade labeled at k = ceil(length/2).

    Blade 1 uses symbols {1,2}; blade j >= 2 uses {1, 2, j+1}, so distinct
    blades can only meet at the shared window (1,...,1,2).
    """
    if j == 1:
        return (1,) * k + (2,) * (length - k)
    return (j + 1,) + (1,) * (k - 1) + (2,) + (j + 1,) * (length - k - 1)


def _blade_star(length: int, j: int, k: int) -> tuple[int, ...]:
    """Cycle string for a blade labeled one symbol longer, k = ceil(length/2)+1.

    For odd lengths this is the even string of length+1 with one trailing
    palette symbol removed, which merges two adjacent window labels into one.
    """
    if length % 2 == 0:
        m = length // 2
        tail = m - 2
    else:
        m = (length + 1) // 2
        tail = m - 3
    if tail < 0:
        raise InvalidParameterError(f"blade of length {length} has no k={k} labeling here")
    return (j + 1,) + (1,) * m + (2,) + (j + 1,) * tail


def _blade_labels(length: int, j: int, k: int, star: bool) -> list[Label]:
    s = _blade_star(length, j, k) if star else _blade_plain(length, j, k)
    return _windows(s, k)


def _assemble_blades(d: Digraph, blades: dict[str, list[Label]], alpha: int, k: int,
                     tag: str) -> ConstructionResult:
    """Map per-blade window lists onto the glued digraph's vertex names."""
    shared = {prefix: labels[1] for prefix, labels in blades.items()}
    if len(set(shared.values())) != 1:
        raise ConstructionFailure(f"{tag}: blades disagree on the shared vertex label {shared}")
    assignment: dict[str, Label] = {}
    for prefix, labels in blades.items():
        for i, label in enumerate(labels, start=1):
            name = "v2" if i == 2 else f"{prefix}{i}"
            assignment[name] = label
    return _checked(d, Labeling(alpha, k, assignment), tag)


def label_double_cycle(n: int) -> ConstructionResult:
    """Quasi-(3, ceil(n/2))-labeling of the glued double cycle C_n . C_n."""
    if n < 3:
        raise InvalidParameterError("double cycle needs n >= 3")
    k = _ceil_half(n)
    blades = {
        "v": _blade_labels(n, 1, k, star=False),
        "u": _blade_labels(n, 2, k, star=False),
    }
    return _assemble_blades(make_infinity(n, n), blades, 3, k, "double-cycle")


def label_windmill(n: int) -> ConstructionResult:
    """Quasi-(4, ceil(n/2))-labeling of the three-blade windmill of blade length n."""
    if n < 3:
        raise InvalidParameterError("windmill needs n >= 3")
    k = _ceil_half(n)
    blades = {
        "v": _blade_labels(n, 1, k, star=False),
        "u": _blade_labels(n, 2, k, star=False),
        "w": _blade_labels(n, 3, k, star=False),
    }
    return _assemble_blades(make_propeller3(n, n, n), blades, 4, k, "windmill")


def label_propeller(n: int, p: int, q: int) -> ConstructionResult:
    """Quasi-(4,k)-labeling of the three-blade propeller C_n . C_p . C_q.

    Blade lengths must come from {n, n+1, n+2}.  k is forced by the mix:
    every blade is labeled either at ceil(L/2) (plain string) or at
    ceil(L/2)+1 (longer string), and all blades must agree, so
    k = max over blades of ceil(L/2).
    """
    if n < 4:
        raise InvalidParameterError("propeller needs n >= 4")
    for value, name in ((p, "p"), (q, "q")):
        if value not in (n, n + 1, n + 2):
            raise InvalidParameterError(f"{name} must lie in {{n, n+1, n+2}}, got {value}")
    lengths = (n, p, q)
    k = max(_ceil_half(length) for length in lengths)
    blades = {}
    for prefix, j, length in (("v", 1, n), ("u", 2, p), ("w", 3, q)):
        blades[prefix] = _blade_labels(length, j, k, star=_ceil_half(length) != k)
    return _assemble_blades(make_propeller3(n, p, q), blades, 4, k, "propeller3")


# ---------------------------------------------------------------------------
# infinity digraphs C_n . C_p
# ---------------------------------------------------------------------------

def _infinity_v_labels(n: int) -> list[Label]:
    """Labels of the length-n cycle, k = ceil(n/2) + 1, symbols {1,2} only."""
    c = _ceil_half(n)
    out: list[Label] = []
    if n % 2 == 0:
        for i in range(1, n + 1):
            if i <= c:
                out.append((1,) * (c - i + 2) + (2,) * (i - 1))
            elif i == c + 1:
                out.append((1,) + (2,) * (c - 1) + (1,))
            else:
                out.append((2,) * (n - i + 1) + (1,) * (i - c))
    else:
        for i in range(1, n + 1):
            if i <= c - 1:
                out.append((1,) * (c - i + 2) + (2,) * (i - 1))
            elif i == c:
                out.append((1, 1) + (2,) * (c - 2) + (1,))
            elif i == c + 1:
                out.append((1,) + (2,) * (c - 2) + (1, 1))
            else:
                out.append((2,) * (n - i + 1) + (1,) * (i - c + 1))
    return out


def _infinity_u_template(c: int, tail_run: bool) -> tuple[int, ...]:
    """Full-length string for the big cycle, length 5c + 3, k = c + 1.

    The classic layout keeps the whole 2-run next to the shared vertex; its
    windows then repeat small-cycle labels once c >= 3, so for those sizes
    the surplus twos are relocated to the tail of the string, after which
    every window other than the shared one carries a 3 or a 4 and collisions
    are impossible.
    """
    if not tail_run:
        return (3,) + (1,) * c + (2,) * (c + 1) + (3,) * c + (4,) * (c + 1) + (3,) * c
    return ((3,) + (1,) * c + (2,) + (3,) * c + (4,) * (c + 1) + (3,) * c + (2,) * c)


def _string_ok(s: tuple[int, ...], k: int, forbidden: frozenset[Label]) -> bool:
    wins = _windows(s, k)
    return len(set(wins)) == len(wins) and not any(w in forbidden for w in wins)


def _shrink_string(s: tuple[int, ...], k: int, target: int, forbidden: frozenset[Label],
                   rightmost: bool) -> tuple[int, ...]:
    """Delete symbols one at a time until len(s) == target.

    The first k+1 positions (the anchor ``3 1..1 2`` holding the shared
    window) are pinned.  Each deletion must leave all windows distinct and
    outside the forbidden set; candidate positions are scanned from the
    chosen end so output is deterministic.
    """
    if target < k + 1:
        raise InvalidParameterError(f"cycle cannot shrink below {k + 1} vertices")
    if target > len(s):
        raise InvalidParameterError("target exceeds current cycle length")
    cur = list(s)
    while len(cur) > target:
        positions = range(len(cur) - 1, k, -1) if rightmost else range(k + 1, len(cur))
        for pos in positions:
            cand = cur[:pos] + cur[pos + 1:]
            if _string_ok(tuple(cand), k, forbidden):
                cur = cand
                break
        else:
            raise ConstructionFailure(
                f"no vertex can be merged away at length {len(cur)} (target {target})")
    return tuple(cur)


def _assemble_infinity(n: int, p: int, v_labels: list[Label], u_string: tuple[int, ...],
                       k: int, tag: str) -> ConstructionResult:
    u_labels = _windows(u_string, k)
    if u_labels[1] != v_labels[1]:
        raise ConstructionFailure(f"{tag}: cycles disagree on the shared vertex label")
    assignment = {f"v{i}": v_labels[i - 1] for i in range(1, n + 1)}
    for i in range(1, p + 1):
        if i != 2:
            assignment[f"u{i}"] = u_labels[i - 1]
    return _checked(make_infinity(n, p), Labeling(4, k, assignment), tag)


def _infinity_build(n: int, p: int, v_labels: list[Label], tag: str) -> ConstructionResult:
    c = _ceil_half(n)
    k = c + 1
    tail_run = n >= 6
    full = _infinity_u_template(c, tail_run)
    forbidden = frozenset(v_labels) - {v_labels[1]}
    if not _string_ok(full, k, forbidden):
        raise ConstructionFailure(f"{tag}: full-length cycle fails self-check")
    u_string = _shrink_string(full, k, p, forbidden, rightmost=tail_run)
    return _assemble_infinity(n, p, v_labels, u_string, k, tag)


def label_infinity_even(n: int, p: int) -> ConstructionResult:
    """Quasi-(4, n/2 + 1)-labeling of C_n . C_p for even n >= 4, n <= p <= 5n/2 + 3."""
    if n < 4 or n % 2 != 0:
        raise InvalidParameterError("this construction needs even n >= 4")
    p_max = 5 * (n // 2) + 3
    if not n <= p <= p_max:
        raise InvalidParameterError(f"p must satisfy {n} <= p <= {p_max}, got {p}")
    return _infinity_build(n, p, _infinity_v_labels(n), "infinity-even")


def label_infinity_odd(n: int, p: int) -> ConstructionResult:
    """Quasi-(4, ceil(n/2) + 1)-labeling of C_n . C_p for odd n >= 5,
    n <= p <= 5*ceil(n/2) + 3."""
    if n < 5 or n % 2 == 0:
        raise InvalidParameterError("this construction needs odd n >= 5")
    p_max = 5 * _ceil_half(n) + 3
    if not n <= p <= p_max:
        raise InvalidParameterError(f"p must satisfy {n} <= p <= {p_max}, got {p}")
    return _infinity_build(n, p, _infinity_v_labels(n), "infinity-odd")


def label_infinity_c3(p: int) -> ConstructionResult:
    """Quasi-(4,3)-labeling of C_3 . C_p for 4 <= p <= 13.

    The triangle is labeled 211, 112, 121 and the big cycle reuses the
    length-13 machinery of the even construction at k = 3.
    """
    if not 4 <= p <= 13:
        raise InvalidParameterError(f"p must satisfy 4 <= p <= 13, got {p}")
    v_labels: list[Label] = [(2, 1, 1), (1, 1, 2), (1, 2, 1)]
    forbidden = frozenset(v_labels) - {v_labels[1]}
    full = _infinity_u_template(2, tail_run=False)
    if not _string_ok(full, 3, forbidden):
        raise ConstructionFailure("infinity-c3: full-length cycle fails self-check")
    u_string = _shrink_string(full, 3, p, forbidden, rightmost=False)
    return _assemble_infinity(3, p, v_labels, u_string, 3, "infinity-c3")


# ---------------------------------------------------------------------------
# public shrink
# ---------------------------------------------------------------------------

def _u_cycle_order(d: Digraph) -> list[str]:
    """Vertices of the big cycle in arc order u1, v2, u3, ..., up."""
    if not d.has_vertex("u1"):
        raise InvalidInputError("digraph has no u-cycle to shrink")
    order = ["u1"]
    cur = "u1"
    while True:
        nxts = [w for w in d.out_neighbors(cur) if w == "v2" or w.startswith("u")]
        if len(nxts) != 1:
            # at the shared vertex pick the u-side successor
            nxts = [w for w in d.out_neighbors(cur) if w.startswith("u")]
        if len(nxts) != 1:
            raise InvalidInputError("cannot trace the u-cycle")
        cur = nxts[0]
        if cur == "u1":
            return order
        order.append(cur)


def shrink_by_merge(result: ConstructionResult, target_p: int) -> ConstructionResult:
    """Shorten the big cycle of an infinity construction to target_p vertices.

    One vertex is removed per step.  Removing a vertex inside a constant
    run leaves every other label untouched (its neighbors already overlap
    directly); removing elsewhere merges two adjacent labels into one.  Both
    are a single symbol deletion in the cycle string, and each step is
    re-verified before the next.
    """
    if not result.tag.startswith("infinity"):
        raise InvalidInputError(f"shrink applies to infinity constructions, not {result.tag!r}")
    lab = result.labeling
    n = sum(1 for v in result.digraph.vertices if v.startswith("v"))
    u_order = _u_cycle_order(result.digraph)
    if target_p == len(u_order):
        return result
    u_string = tuple(lab.label_of(v)[0] for v in u_order)
    v_labels = [lab.label_of(f"v{i}") for i in range(1, n + 1)]
    forbidden = frozenset(v_labels) - {v_labels[1]}
    shrunk = _shrink_string(u_string, lab.k, target_p, forbidden, rightmost=n >= 6)
    return _assemble_infinity(n, target_p, v_labels, shrunk, lab.k, result.tag)
