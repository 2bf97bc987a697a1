"""Complete multipartite topologies, edge orientations, and exact distances.

Vertices are numbered part-major: part 1 occupies indices [0, p1), part 2
the next p2 indices, and so on.  Two vertices are adjacent iff they lie in
different parts.  An orientation assigns exactly one direction to every
inter-part edge and is stored as one out-neighbor bitmask per vertex, which
keeps BFS frontiers and two-step reachability tests word-parallel.

Unreachable pairs have distance INFINITE, a true sentinel (math.inf) rather
than a large integer, so max-reductions never overflow silently.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field

INFINITE = math.inf

Distance = int | float


class GraphError(ValueError):
    """Base class for topology and orientation construction errors."""


class EmptyParts(GraphError):
    pass


class ZeroPart(GraphError):
    pass


class SelfLoop(GraphError):
    pass


class IntraPartArc(GraphError):
    pass


class DoubleOrientation(GraphError):
    pass


class MissingEdge(GraphError):
    pass


class EmptyKeep(GraphError):
    pass


class ParseError(GraphError):
    """Malformed orientation JSON; carries line/column when available."""

    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        if line is not None:
            message = f"{message} (line {line}, column {column})"
        super().__init__(message)
        self.line = line
        self.column = column


@dataclass(frozen=True)
class GraphTopology:
    """A complete multipartite graph given by its part sizes."""

    parts: tuple[int, ...]
    part_of: tuple[int, ...] = field(compare=False)

    @property
    def n_vertices(self) -> int:
        return len(self.part_of)

    @property
    def n_edges(self) -> int:
        n = self.n_vertices
        return (n * n - sum(p * p for p in self.parts)) // 2

    def part_vertices(self, part_index: int) -> range:
        lo = sum(self.parts[:part_index])
        return range(lo, lo + self.parts[part_index])

    def adjacent(self, u: int, v: int) -> bool:
        return self.part_of[u] != self.part_of[v]

    def edges(self) -> list[tuple[int, int]]:
        """All inter-part edges (u, v) with u < v, lexicographically sorted."""
        n = self.n_vertices
        po = self.part_of
        return [(u, v) for u in range(n) for v in range(u + 1, n) if po[u] != po[v]]

    def vertex_name(self, v: int) -> str:
        """Human-readable name; tripartite graphs use the x/y/z convention."""
        pi = self.part_of[v]
        offset = v - sum(self.parts[:pi]) + 1
        if len(self.parts) <= 3:
            return f"{'xyz'[pi]}{offset}"
        return f"p{pi + 1}v{offset}"


def make_complete_multipartite(parts: list[int] | tuple[int, ...]) -> GraphTopology:
    """Build the canonical topology for the given part sizes."""
    parts = tuple(int(p) for p in parts)
    if not parts:
        raise EmptyParts("need at least one part")
    if any(p < 1 for p in parts):
        raise ZeroPart(f"all part sizes must be >= 1, got {parts}")
    part_of = []
    for i, p in enumerate(parts):
        part_of.extend([i] * p)
    return GraphTopology(parts=parts, part_of=tuple(part_of))


@dataclass(frozen=True)
class Orientation:
    """An orientation of a complete multipartite graph.

    out_adj[u] is the bitmask of decided out-neighbors of u.  v is an
    in-neighbor of u exactly when u is set in out_adj[v].  Instances are
    immutable and safe to share across threads.

    parent_vertices maps local indices back to the orientation this one was
    induced from (None for orientations built directly).
    """

    topology: GraphTopology
    out_adj: tuple[int, ...]
    parent_vertices: tuple[int, ...] | None = field(default=None, compare=False)

    @property
    def n_vertices(self) -> int:
        return self.topology.n_vertices

    def in_adj(self) -> tuple[int, ...]:
        """Per-vertex bitmask of in-neighbors, derived from out_adj."""
        ins = [0] * self.n_vertices
        for u, mask in enumerate(self.out_adj):
            m = mask
            while m:
                low = m & -m
                ins[low.bit_length() - 1] |= 1 << u
                m ^= low
        return tuple(ins)

    def arcs(self) -> list[tuple[int, int]]:
        """All arcs (u, v), lexicographically sorted."""
        result = []
        for u, mask in enumerate(self.out_adj):
            m = mask
            while m:
                low = m & -m
                result.append((u, low.bit_length() - 1))
                m ^= low
        result.sort()
        return result


def orient(topology: GraphTopology, arcs) -> Orientation:
    """Validate an arc list and build the orientation it describes.

    Every inter-part edge must be covered exactly once, in exactly one
    direction.
    """
    n = topology.n_vertices
    out = [0] * n
    seen = set()
    for u, v in arcs:
        u, v = int(u), int(v)
        if not (0 <= u < n and 0 <= v < n):
            raise IndexError(f"arc ({u},{v}) out of range for {n} vertices")
        if u == v:
            raise SelfLoop(f"arc ({u},{v})")
        if not topology.adjacent(u, v):
            raise IntraPartArc(f"arc ({u},{v}) joins two vertices of part {topology.part_of[u] + 1}")
        key = (min(u, v), max(u, v))
        if key in seen:
            raise DoubleOrientation(f"edge {{{key[0]},{key[1]}}} oriented more than once")
        seen.add(key)
        out[u] |= 1 << v
    if len(seen) != topology.n_edges:
        for u, v in topology.edges():
            if (u, v) not in seen:
                raise MissingEdge(f"edge {{{u},{v}}} has no orientation")
    return Orientation(topology=topology, out_adj=tuple(out))


def distance(D: Orientation, u: int, v: int):
    """Exact directed distance from u to v by BFS; INFINITE when unreachable."""
    n = D.n_vertices
    if not (0 <= u < n and 0 <= v < n):
        raise IndexError(f"vertex pair ({u},{v}) out of range for {n} vertices")
    if u == v:
        return 0
    out = D.out_adj
    seen = 1 << u
    frontier = seen
    d = 0
    target = 1 << v
    while frontier:
        nxt = 0
        m = frontier
        while m:
            low = m & -m
            nxt |= out[low.bit_length() - 1]
            m ^= low
        nxt &= ~seen
        d += 1
        if nxt & target:
            return d
        seen |= nxt
        frontier = nxt
    return INFINITE


def eccentricity(D: Orientation, u: int):
    """Max distance from u to any vertex; INFINITE if some vertex is unreachable."""
    n = D.n_vertices
    out = D.out_adj
    seen = 1 << u
    frontier = seen
    full = (1 << n) - 1
    d = 0
    while frontier and seen != full:
        nxt = 0
        m = frontier
        while m:
            low = m & -m
            nxt |= out[low.bit_length() - 1]
            m ^= low
        nxt &= ~seen
        if nxt:
            d += 1
        seen |= nxt
        frontier = nxt
    return d if seen == full else INFINITE


def diameter(D: Orientation):
    """Max distance over all ordered pairs; INFINITE iff not strongly connected."""
    best = 0
    for u in range(D.n_vertices):
        ecc = eccentricity(D, u)
        if ecc == INFINITE:
            return INFINITE
        if ecc > best:
            best = ecc
    return best


def is_strong(D: Orientation) -> bool:
    """True iff every ordered pair is joined by a directed path."""
    return diameter(D) != INFINITE


def has_diameter_at_most_2(D: Orientation) -> bool:
    """Specialized test: each ordered pair needs a direct arc or a 2-path.

    This is the inner loop of the search procedures; it avoids full BFS by
    checking out(u) against in(v) word-parallel.
    """
    n = D.n_vertices
    out = D.out_adj
    ins = D.in_adj()
    for u in range(n):
        ou = out[u]
        for v in range(n):
            if u == v or (ou >> v) & 1:
                continue
            if not (ou & ins[v]):
                return False
    return True


def reverse(D: Orientation) -> Orientation:
    """Flip every arc; distances transpose and the diameter is preserved."""
    return Orientation(topology=D.topology, out_adj=D.in_adj())


def induced_suborientation(D: Orientation, keep) -> Orientation:
    """Restrict D to a vertex set, dropping empty parts and re-indexing.

    The surviving parts keep their relative order and the result carries a
    parent_vertices table mapping new indices to old ones.
    """
    keep = sorted(set(keep))
    if not keep:
        raise EmptyKeep("cannot induce on the empty vertex set")
    n = D.n_vertices
    if keep[0] < 0 or keep[-1] >= n:
        raise IndexError(f"keep set {keep} out of range for {n} vertices")
    po = D.topology.part_of
    new_parts = []
    for pi in range(len(D.topology.parts)):
        c = sum(1 for v in keep if po[v] == pi)
        if c:
            new_parts.append(c)
    sub = make_complete_multipartite(new_parts)
    remap = {v: i for i, v in enumerate(keep)}
    out = [0] * len(keep)
    for v in keep:
        m = D.out_adj[v]
        while m:
            low = m & -m
            w = low.bit_length() - 1
            if w in remap:
                out[remap[v]] |= 1 << remap[w]
            m ^= low
    return Orientation(topology=sub, out_adj=tuple(out), parent_vertices=tuple(keep))


# ---------------------------------------------------------------------------
# Serialization: canonical JSON and DOT.
# ---------------------------------------------------------------------------

def to_json_dict(D: Orientation) -> dict:
    """Canonical JSON document: parts plus lexicographically sorted arcs."""
    return {"parts": list(D.topology.parts), "arcs": [list(a) for a in D.arcs()]}


def stable_json_dumps(doc: dict) -> str:
    """Deterministic serialization so identical orientations round-trip byte-exact."""
    return json.dumps(doc, separators=(",", ":")) + "\n"


def dumps(D: Orientation, completion_log=None) -> str:
    doc = to_json_dict(D)
    if completion_log is not None:
        doc["completion_log"] = list(completion_log)
    return stable_json_dumps(doc)


def from_json_dict(doc: dict) -> Orientation:
    if not isinstance(doc, dict) or "parts" not in doc or "arcs" not in doc:
        raise ParseError("orientation JSON must contain 'parts' and 'arcs'")
    topology = make_complete_multipartite(doc["parts"])
    return orient(topology, [tuple(a) for a in doc["arcs"]])


def loads(text: str) -> Orientation:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, line=exc.lineno, column=exc.colno) from exc
    return from_json_dict(doc)


def to_dot(D: Orientation) -> str:
    """DOT digraph with one same-rank cluster per part."""
    topo = D.topology
    lines = ["digraph orientation {"]
    for pi in range(len(topo.parts)):
        names = "; ".join(topo.vertex_name(v) for v in topo.part_vertices(pi))
        lines.append(f"  subgraph cluster_part{pi + 1} {{ rank=same; {names}; }}")
    for u, v in D.arcs():
        lines.append(f"  {topo.vertex_name(u)} -> {topo.vertex_name(v)};")
    lines.append("}")
    return "\n".join(lines) + "\n"
