"""Finite simple digraphs, the family generators, and line-digraph machinery.

Vertices are plain strings.  Vertices created by the line-digraph operator
are walk names: the arc u->v becomes the vertex ``u→v``, so the m-th iterate
names its vertices by length-(m+1) walks of the base digraph and every label
stays auditable against the generating walk.  Digraphs are immutable after
construction and iteration order is fixed, which keeps file exports,
searches, and golden tests deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InvalidParameterError, ResourceLimitError

WALK_SEP = "→"

ISO_SIZE_CAP = 12
LINE_VERTEX_CAP = 100_000


class Digraph:
    """Immutable digraph with ordered vertex set and ordered simple arc set."""

    __slots__ = ("_vertices", "_arcs", "_vset", "_arcset", "_out", "_in")

    def __init__(self, vertices, arcs):
        self._vertices = tuple(vertices)
        self._vset = frozenset(self._vertices)
        if len(self._vset) != len(self._vertices):
            raise InvalidParameterError("duplicate vertex name in vertex set")
        out = {v: [] for v in self._vertices}
        inc = {v: [] for v in self._vertices}
        ordered = []
        seen = set()
        for tail, head in arcs:
            if tail not in self._vset or head not in self._vset:
                raise InvalidParameterError(f"arc endpoint outside vertex set: {tail} -> {head}")
            arc = (tail, head)
            if arc in seen:
                # every catalogued family is a simple digraph; duplicates are caller bugs
                raise InvalidParameterError(f"duplicate arc {tail} -> {head}")
            seen.add(arc)
            ordered.append(arc)
            out[tail].append(head)
            inc[head].append(tail)
        self._arcs = tuple(ordered)
        self._arcset = seen
        self._out = {v: tuple(ns) for v, ns in out.items()}
        self._in = {v: tuple(ns) for v, ns in inc.items()}

    @property
    def vertices(self) -> tuple[str, ...]:
        return self._vertices

    @property
    def arcs(self) -> tuple[tuple[str, str], ...]:
        return self._arcs

    @property
    def vertex_count(self) -> int:
        return len(self._vertices)

    @property
    def arc_count(self) -> int:
        return len(self._arcs)

    def has_vertex(self, v: str) -> bool:
        return v in self._vset

    def has_arc(self, tail: str, head: str) -> bool:
        return (tail, head) in self._arcset

    def out_neighbors(self, v: str) -> tuple[str, ...]:
        return self._out[v]

    def in_neighbors(self, v: str) -> tuple[str, ...]:
        return self._in[v]

    def out_degree(self, v: str) -> int:
        return len(self._out[v])

    def in_degree(self, v: str) -> int:
        return len(self._in[v])

    def __eq__(self, other):
        if not isinstance(other, Digraph):
            return NotImplemented
        return self._vertices == other._vertices and self._arcs == other._arcs

    def __hash__(self):
        return hash((self._vertices, self._arcs))

    def __repr__(self):
        return f"Digraph(|V|={self.vertex_count}, |A|={self.arc_count})"


# ---------------------------------------------------------------------------
# family generators
# ---------------------------------------------------------------------------

def make_dipath(n: int) -> Digraph:
    """Directed path v1 -> v2 -> ... -> vn."""
    if n < 2:
        raise InvalidParameterError("dipath needs n >= 2")
    vs = [f"v{i}" for i in range(1, n + 1)]
    return Digraph(vs, [(vs[i], vs[i + 1]) for i in range(n - 1)])


def make_dicycle(n: int) -> Digraph:
    """Directed cycle v1 -> v2 -> ... -> vn -> v1."""
    if n < 2:
        raise InvalidParameterError("dicycle needs n >= 2")
    vs = [f"v{i}" for i in range(1, n + 1)]
    arcs = [(vs[i], vs[i + 1]) for i in range(n - 1)] + [(vs[-1], vs[0])]
    return Digraph(vs, arcs)


def make_chorded_cycle(n: int) -> Digraph:
    """Dicycle on n vertices plus floor(n/3) chords of cycle-distance two.

    The chords are v_{i-2} -> v_i for i in {3, 6, 9, ..., n - (n mod 3)}:
    stepping i by three is the only reading that yields floor(n/3) chords
    each spanning exactly two cycle arcs.
    """
    if n < 4:
        raise InvalidParameterError("chorded cycle needs n >= 4")
    vs = [f"v{i}" for i in range(1, n + 1)]
    arcs = [(vs[i], vs[i + 1]) for i in range(n - 1)] + [(vs[-1], vs[0])]
    t = n % 3
    for i in range(3, n - t + 1, 3):
        arcs.append((vs[i - 3], vs[i - 1]))  # v_{i-2} -> v_i, names are 1-based
    return Digraph(vs, arcs)


def chords_of(d: Digraph) -> tuple[tuple[str, str], ...]:
    """Arcs of d whose endpoints are joined by a directed 2-path (the chords)."""
    out = []
    for tail, head in d.arcs:
        for mid in d.out_neighbors(tail):
            if mid not in (tail, head) and d.has_arc(mid, head):
                out.append((tail, head))
                break
    return tuple(out)


def make_infinity(n: int, p: int) -> Digraph:
    """Two dicycles C_n and C_p glued at one vertex (the second of each).

    Vertices are v1..vn and u1, u3..up; the shared vertex keeps the name v2.
    """
    if n < 3 or p < 3:
        raise InvalidParameterError("infinity digraph needs n >= 3 and p >= 3")
    vs = [f"v{i}" for i in range(1, n + 1)]
    u = {i: (f"u{i}" if i != 2 else "v2") for i in range(1, p + 1)}
    vertices = vs + [u[1]] + [u[i] for i in range(3, p + 1)]
    arcs = [(vs[i], vs[i + 1]) for i in range(n - 1)] + [(vs[-1], vs[0])]
    arcs += [(u[i], u[i + 1]) for i in range(1, p)] + [(u[p], u[1])]
    return Digraph(vertices, arcs)


def make_propeller3(n: int, p: int, q: int) -> Digraph:
    """Three dicycles of lengths n, p, q glued at one shared vertex.

    Blade one is v1..vn, blades two and three are u*/w* with their second
    vertex identified with v2.  The shared vertex has in- and out-degree 3.
    """
    if min(n, p, q) < 3:
        raise InvalidParameterError("every blade needs length >= 3")
    vs = [f"v{i}" for i in range(1, n + 1)]
    vertices = list(vs)
    arcs = [(vs[i], vs[i + 1]) for i in range(n - 1)] + [(vs[-1], vs[0])]
    for prefix, length in (("u", p), ("w", q)):
        names = {i: (f"{prefix}{i}" if i != 2 else "v2") for i in range(1, length + 1)}
        vertices += [names[1]] + [names[i] for i in range(3, length + 1)]
        arcs += [(names[i], names[i + 1]) for i in range(1, length)]
        arcs.append((names[length], names[1]))
    return Digraph(vertices, arcs)


def make_windmill(n: int) -> Digraph:
    """Three blades of equal length n sharing one vertex."""
    return make_propeller3(n, n, n)


def make_ladder(n: int) -> Digraph:
    """Oriented 2 x n grid: top row rightward, bottom row leftward,
    rung at column c upward (bottom->top) for even c, downward for odd c."""
    if n < 2:
        raise InvalidParameterError("ladder needs n >= 2")
    top = [f"t{c}" for c in range(n)]
    bot = [f"b{c}" for c in range(n)]
    arcs = [(top[c], top[c + 1]) for c in range(n - 1)]
    arcs += [(bot[c + 1], bot[c]) for c in range(n - 1)]
    for c in range(n):
        arcs.append((bot[c], top[c]) if c % 2 == 0 else (top[c], bot[c]))
    return Digraph(top + bot, arcs)


@dataclass(frozen=True)
class FamilySpec:
    """Parsed description of one digraph family instance."""

    kind: str
    n: int
    p: int | None = None
    q: int | None = None

    KINDS = ("dipath", "dicycle", "chorded-cycle", "infinity", "propeller3", "windmill", "ladder")

    def build(self) -> Digraph:
        if self.kind == "dipath":
            return make_dipath(self.n)
        if self.kind == "dicycle":
            return make_dicycle(self.n)
        if self.kind == "chorded-cycle":
            return make_chorded_cycle(self.n)
        if self.kind == "infinity":
            if self.p is None:
                raise InvalidParameterError("infinity family needs p")
            return make_infinity(self.n, self.p)
        if self.kind == "propeller3":
            if self.p is None or self.q is None:
                raise InvalidParameterError("propeller3 family needs p and q")
            return make_propeller3(self.n, self.p, self.q)
        if self.kind == "windmill":
            return make_windmill(self.n)
        if self.kind == "ladder":
            return make_ladder(self.n)
        raise InvalidParameterError(f"unknown family kind {self.kind!r}")


# ---------------------------------------------------------------------------
# line digraph
# ---------------------------------------------------------------------------

def _walk_join(tail: str, head: str) -> str:
    tt = tail.split(WALK_SEP)
    hh = head.split(WALK_SEP)
    if tt[1:] == hh[:-1]:
        return WALK_SEP.join(tt + [hh[-1]])
    return WALK_SEP.join(tt + hh)


def line_digraph(d: Digraph) -> Digraph:
    """Digraph on the arcs of d; x -> y present iff head(x) = tail(y)."""
    names = {arc: _walk_join(*arc) for arc in d.arcs}
    by_tail: dict[str, list[tuple[str, str]]] = {}
    for arc in d.arcs:
        by_tail.setdefault(arc[0], []).append(arc)
    arcs = []
    for x in d.arcs:
        for y in by_tail.get(x[1], ()):
            arcs.append((names[x], names[y]))
    return Digraph([names[a] for a in d.arcs], arcs)


def iterated_line_digraph(d: Digraph, m: int, vertex_cap: int = LINE_VERTEX_CAP) -> Digraph:
    """Apply the line-digraph operator m times (m = 0 returns d unchanged)."""
    if m < 0:
        raise InvalidParameterError("iteration count must be >= 0")
    cur = d
    for _ in range(m):
        if cur.arc_count > vertex_cap:
            raise ResourceLimitError(
                f"next iterate would have {cur.arc_count} vertices, cap is {vertex_cap}")
        cur = line_digraph(cur)
    return cur


# ---------------------------------------------------------------------------
# isomorphism (desk scale)
# ---------------------------------------------------------------------------

def isomorphic(a: Digraph, b: Digraph, size_cap: int = ISO_SIZE_CAP) -> bool:
    """Decide whether an arc-preserving vertex bijection a -> b exists.

    Plain backtracking over in/out-degree-compatible assignments; all
    instances this library needs are tiny, so no canonical-form machinery.
    """
    if a.vertex_count > size_cap or b.vertex_count > size_cap:
        raise ResourceLimitError(f"isomorphism check capped at {size_cap} vertices")
    if a.vertex_count != b.vertex_count or a.arc_count != b.arc_count:
        return False

    def degrees(g, v):
        return (g.out_degree(v), g.in_degree(v))

    if sorted(degrees(a, v) for v in a.vertices) != sorted(degrees(b, v) for v in b.vertices):
        return False

    # high-degree vertices first so contradictions surface early
    order = sorted(a.vertices, key=lambda v: (-(a.out_degree(v) + a.in_degree(v)), a.vertices.index(v)))
    candidates = {v: [w for w in b.vertices if degrees(b, w) == degrees(a, v)] for v in order}
    mapping: dict[str, str] = {}
    used: set[str] = set()

    def extend(i: int) -> bool:
        if i == len(order):
            return True
        v = order[i]
        for w in candidates[v]:
            if w in used:
                continue
            ok = True
            for u, x in mapping.items():
                if a.has_arc(v, u) != b.has_arc(w, x) or a.has_arc(u, v) != b.has_arc(x, w):
                    ok = False
                    break
            if ok and a.has_arc(v, v) == b.has_arc(w, w):
                mapping[v] = w
                used.add(w)
                if extend(i + 1):
                    return True
                del mapping[v]
                used.remove(w)
        return False

    return extend(0)


# ---------------------------------------------------------------------------
# text formats
# ---------------------------------------------------------------------------

def format_digraph_text(d: Digraph) -> str:
    """Plain-text format: header ``n m`` then one ``tail head`` line per arc."""
    lines = [f"{d.vertex_count} {d.arc_count}"]
    lines += [f"{t} {h}" for t, h in d.arcs]
    return "\n".join(lines) + "\n"


def parse_digraph_text(text: str) -> Digraph:
    rows = [line.split() for line in text.splitlines() if line.strip()]
    if not rows or len(rows[0]) != 2:
        raise InvalidParameterError("digraph text must start with a header line 'n m'")
    n, m = (int(x) for x in rows[0])
    if len(rows) - 1 != m:
        raise InvalidParameterError(f"expected {m} arc lines, found {len(rows) - 1}")
    vertices: list[str] = []
    seen: set[str] = set()
    arcs = []
    for row in rows[1:]:
        if len(row) != 2:
            raise InvalidParameterError(f"malformed arc line: {' '.join(row)!r}")
        for name in row:
            if name not in seen:
                seen.add(name)
                vertices.append(name)
        arcs.append((row[0], row[1]))
    if len(vertices) != n:
        raise InvalidParameterError(f"header says {n} vertices, arcs mention {len(vertices)}")
    return Digraph(vertices, arcs)


def to_dot(d: Digraph, labeling=None, name: str = "dnagraph") -> str:
    """DOT export, vertex label carries the walk name and the k-mer when given."""
    def esc(s: str) -> str:
        return s.replace("\\", "\\\\").replace('"', '\\"')

    lines = [f"digraph {name} {{"]
    for v in d.vertices:
        label = esc(v)
        if labeling is not None:
            kmer = "".join(str(s) for s in labeling.label_of(v))
            label = f"{label}\\n{kmer}"
        lines.append(f'  "{esc(v)}" [label="{label}"];')
    for t, h in d.arcs:
        lines.append(f'  "{esc(t)}" -> "{esc(h)}";')
    lines.append("}")
    return "\n".join(lines) + "\n"
