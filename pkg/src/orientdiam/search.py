"""Exact decision procedures for diameter-2 orientability.

decide_diameter2 factors the problem through the largest part L.  Branching
follows the edge-block order: all edges outside L first (for a (3,p,q)
graph that is the 3x p anchor block, which pins down the case signature),
then the edges into L.  Every vertex of L sees exactly the vertices outside
L, so once the outer block is fixed, each L-vertex is described by its
out-arc profile, a subset of V \\ L.  Constraint propagation collapses to
three exact facts:

  * a profile is feasible iff the vertex it describes can reach and be
    reached by everything outside L in at most two steps;
  * two L-vertices are mutually within distance 2 iff their profiles are
    incomparable under inclusion, so the chosen profiles form an antichain
    (all witnesses for such pairs live outside L);
  * an ordered pair outside L that the block leaves unsatisfied needs some
    chosen profile to route it (out-bit clear at the source, set at the
    target) -- a covering constraint.

Chosen profiles are explored in a fixed total order, which doubles as the
row-ordering symmetry break inside L; block orientations are enumerated up
to part-internal relabelings and global arc reversal.  The verdict is sound
both ways: Exists re-validates its witness with the exact diameter routine,
and None means every block orientation was either enumerated or discarded
as the image of an enumerated one under that symmetry group.

Brute-force oracles over full orientation spaces back the decision
procedure on every topology small enough to enumerate.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from enum import Enum

from .analysis import canonicalize_case
from .graphcore import (
    INFINITE,
    GraphTopology,
    Orientation,
    diameter,
    make_complete_multipartite,
    orient,
)

MAX_BLOCK_EDGES = 16
MAX_BLOCK_VERTICES = 10
BRUTE_FORCE_EDGE_CAP = 20
ENUMERATION_EDGE_CAP = 16


class SearchError(ValueError):
    pass


class TooLarge(SearchError):
    pass


class TooManyEdges(SearchError):
    pass


class Verdict(Enum):
    EXISTS = "exists"
    NONE = "none"
    UNKNOWN = "unknown"


@dataclass(frozen=True)
class SearchConfig:
    node_budget: int = 1_000_000_000
    time_budget: float = 600.0
    symmetry_breaking: bool = True
    use_case_split: bool = True
    thread_count: int = 1

    def __post_init__(self):
        if self.node_budget <= 0 or self.time_budget <= 0:
            raise SearchError("budgets must be positive")
        if self.thread_count < 1:
            raise SearchError("thread_count must be >= 1")


@dataclass(frozen=True)
class SearchStats:
    nodes: int
    max_depth: int
    wall_time: float
    blocks_explored: int
    cases_enumerated: tuple[tuple[int, int, int], ...] = ()


@dataclass(frozen=True)
class SearchOutcome:
    verdict: Verdict
    witness: Orientation | None
    stats: SearchStats


def _bit_members(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class _BlockFrame:
    """Everything the per-block profile search needs, precomputed."""

    __slots__ = ("bout", "bin", "profiles", "cover_pairs", "cover_masks", "feasible")

    def __init__(self, m: int, bedges, bits: int):
        bout = [0] * m
        for i, (a, b) in enumerate(bedges):
            if (bits >> i) & 1:
                bout[a] |= 1 << b
            else:
                bout[b] |= 1 << a
        bin_ = [0] * m
        for a in range(m):
            for b in _bit_members(bout[a]):
                bin_[b] |= 1 << a
        self.bout = bout
        self.bin = bin_
        full = (1 << m) - 1
        profiles = []
        for pr in range(1 << m):
            ok = True
            for a in range(m):
                if (pr >> a) & 1:
                    # this vertex beats a; a needs a two-step route back
                    if not (bout[a] & ~pr & full):
                        ok = False
                        break
                else:
                    # a beats this vertex; we need a two-step route to a
                    if not (pr & bin_[a]):
                        ok = False
                        break
            if ok:
                profiles.append(pr)
        self.profiles = profiles
        # ordered pairs outside L that the block alone does not satisfy
        cover_pairs = []
        feasible = True
        for a in range(m):
            for b in range(m):
                if a == b:
                    continue
                if (bout[a] >> b) & 1 or (bout[a] & bin_[b]):
                    continue
                cover_pairs.append((a, b))
        masks = []
        for pr in profiles:
            cm = 0
            for idx, (a, b) in enumerate(cover_pairs):
                if not (pr >> a) & 1 and (pr >> b) & 1:
                    cm |= 1 << idx
            masks.append(cm)
        all_needed = (1 << len(cover_pairs)) - 1
        reachable = 0
        for cm in masks:
            reachable |= cm
        if all_needed & ~reachable:
            feasible = False
        self.cover_pairs = cover_pairs
        self.cover_masks = masks
        self.feasible = feasible


class _Budget:
    __slots__ = ("node_budget", "deadline", "nodes", "max_depth", "exhausted")

    def __init__(self, cfg: SearchConfig, start: float):
        self.node_budget = cfg.node_budget
        self.deadline = start + cfg.time_budget
        self.nodes = 0
        self.max_depth = 0
        self.exhausted = False

    def tick(self, depth: int) -> bool:
        """Account one node; False once the budget is gone."""
        self.nodes += 1
        if depth > self.max_depth:
            self.max_depth = depth
        if self.nodes > self.node_budget:
            self.exhausted = True
        elif not self.nodes & 0x3FF and time.monotonic() > self.deadline:
            self.exhausted = True
        return not self.exhausted


def _antichain_cover(frame: _BlockFrame, q: int, budget: _Budget):
    """Find q pairwise-incomparable feasible profiles hitting every cover pair."""
    profiles = frame.profiles
    masks = frame.cover_masks
    count = len(profiles)
    if count < q or not frame.feasible:
        return None
    all_needed = (1 << len(frame.cover_pairs)) - 1
    # OR of cover masks from each suffix, for infeasibility pruning
    suffix = [0] * (count + 1)
    for i in range(count - 1, -1, -1):
        suffix[i] = suffix[i + 1] | masks[i]
    chosen: list[int] = []

    def extend(start: int, covered: int):
        if not budget.tick(len(chosen)):
            return None
        if len(chosen) == q:
            return list(chosen) if covered == all_needed else None
        if count - start < q - len(chosen):
            return None
        if (all_needed & ~covered) & ~suffix[start]:
            return None
        for idx in range(start, count):
            pr = profiles[idx]
            incomparable = True
            for c in chosen:
                if not (pr & ~c) or not (c & ~pr):
                    incomparable = False
                    break
            if not incomparable:
                continue
            chosen.append(pr)
            found = extend(idx + 1, covered | masks[idx])
            if found is not None:
                return found
            chosen.pop()
            if budget.exhausted:
                return None
        return None

    return extend(0, 0)


def _block_symmetry_generators(rest_parts, bedges):
    """Index/flip action of each symmetry generator on the block edge list.

    Generators: adjacent transpositions inside each part, plus global arc
    reversal.  Each entry maps edge slot i to (slot j, flip) meaning bit i
    lands in slot j, xored with flip.
    """
    m = sum(rest_parts)
    edge_index = {e: i for i, e in enumerate(bedges)}
    gens = []
    offset = 0
    for p in rest_parts:
        for t in range(offset, offset + p - 1):
            perm = list(range(m))
            perm[t], perm[t + 1] = perm[t + 1], perm[t]
            action = []
            for (a, b) in bedges:
                na, nb = perm[a], perm[b]
                flip = 1 if na > nb else 0
                action.append((edge_index[(min(na, nb), max(na, nb))], flip))
            gens.append(action)
        offset += p
    gens.append([(i, 1) for i in range(len(bedges))])  # reversal
    return gens


def _apply_action(bits: int, action) -> int:
    out = 0
    for i, (j, flip) in enumerate(action):
        out |= (((bits >> i) & 1) ^ flip) << j
    return out


def _block_representatives(rest_parts, bedges, symmetry_breaking: bool):
    """Orbit representatives of block orientations (or all of them)."""
    n_bits = len(bedges)
    total = 1 << n_bits
    if not symmetry_breaking:
        return list(range(total))
    gens = _block_symmetry_generators(rest_parts, bedges)
    visited = bytearray(total)
    reps = []
    for bits in range(total):
        if visited[bits]:
            continue
        reps.append(bits)
        stack = [bits]
        visited[bits] = 1
        while stack:
            cur = stack.pop()
            for action in gens:
                img = _apply_action(cur, action)
                if not visited[img]:
                    visited[img] = 1
                    stack.append(img)
    return reps


def _block_case_signature(bout, rest_parts):
    """Raw (i,j,k) of a [3, p] block: anchor out-degrees into the second part."""
    p = rest_parts[1]
    v2_mask = ((1 << p) - 1) << 3
    return tuple((bout[x] & v2_mask).bit_count() for x in range(3))


def decide_diameter2(parts, cfg: SearchConfig | None = None) -> SearchOutcome:
    """Decide whether the complete multipartite graph admits a diameter-2 orientation.

    Exists comes with a witness whose diameter has been re-measured; None is
    exhaustive modulo the declared symmetry group; Unknown only ever means a
    budget ran out.  Supported sizes: the parts other than the largest must
    induce at most MAX_BLOCK_EDGES edges and MAX_BLOCK_VERTICES vertices.
    """
    if cfg is None:
        cfg = SearchConfig()
    topology = make_complete_multipartite(parts)
    start = time.monotonic()

    sizes = topology.parts
    big = max(range(len(sizes)), key=lambda i: (sizes[i], i))
    q = sizes[big]
    rest_parts = [sizes[i] for i in range(len(sizes)) if i != big]
    m = sum(rest_parts)
    if m > MAX_BLOCK_VERTICES:
        raise TooLarge(
            f"parts besides the largest span {m} vertices, cap is {MAX_BLOCK_VERTICES}"
        )
    rest_part_of = []
    for i, p in enumerate(rest_parts):
        rest_part_of.extend([i] * p)
    bedges = [
        (a, b)
        for a in range(m)
        for b in range(a + 1, m)
        if rest_part_of[a] != rest_part_of[b]
    ]
    if len(bedges) > MAX_BLOCK_EDGES:
        raise TooLarge(
            f"parts besides the largest induce {len(bedges)} edges, cap is {MAX_BLOCK_EDGES}"
        )

    reps = _block_representatives(rest_parts, bedges, cfg.symmetry_breaking)
    track_cases = len(sizes) == 3 and big == 2 and sizes[0] == 3
    budget = _Budget(cfg, start)
    cases_seen: set[tuple[int, int, int]] = set()

    frames: list[tuple[tuple[int, int, int] | None, int]] = []
    for bits in reps:
        if track_cases:
            bout_probe = [0] * m
            for i, (a, b) in enumerate(bedges):
                if (bits >> i) & 1:
                    bout_probe[a] |= 1 << b
                else:
                    bout_probe[b] |= 1 << a
            case = canonicalize_case(_block_case_signature(bout_probe, rest_parts), rest_parts[1])
        else:
            case = None
        frames.append((case, bits))
    if cfg.use_case_split and track_cases:
        frames.sort()

    blocks_explored = 0
    for case, bits in frames:
        if not budget.tick(0):
            break
        blocks_explored += 1
        if case is not None:
            cases_seen.add(case)
        frame = _BlockFrame(m, bedges, bits)
        chosen = _antichain_cover(frame, q, budget)
        if budget.exhausted:
            break
        if chosen is None:
            continue
        witness = _assemble_witness(topology, big, rest_parts, frame.bout, chosen)
        if not diameter(witness) <= 2:  # soundness gate; never expected to fire
            raise SearchError("internal error: candidate witness failed re-validation")
        stats = SearchStats(
            nodes=budget.nodes,
            max_depth=budget.max_depth,
            wall_time=time.monotonic() - start,
            blocks_explored=blocks_explored,
            cases_enumerated=tuple(sorted(cases_seen)),
        )
        return SearchOutcome(Verdict.EXISTS, witness, stats)

    stats = SearchStats(
        nodes=budget.nodes,
        max_depth=budget.max_depth,
        wall_time=time.monotonic() - start,
        blocks_explored=blocks_explored,
        cases_enumerated=tuple(sorted(cases_seen)),
    )
    if budget.exhausted:
        return SearchOutcome(Verdict.UNKNOWN, None, stats)
    return SearchOutcome(Verdict.NONE, None, stats)


def _assemble_witness(topology, big, rest_parts, bout, chosen_profiles) -> Orientation:
    """Lift a block orientation plus L-profiles back to global vertex ids."""
    sizes = topology.parts
    rest_global = []
    for i in range(len(sizes)):
        if i != big:
            rest_global.extend(topology.part_vertices(i))
    big_global = list(topology.part_vertices(big))
    arcs = []
    for a in range(len(rest_global)):
        for b in _bit_members(bout[a]):
            arcs.append((rest_global[a], rest_global[b]))
    for z, profile in zip(big_global, chosen_profiles):
        for a in range(len(rest_global)):
            if (profile >> a) & 1:
                arcs.append((z, rest_global[a]))
            else:
                arcs.append((rest_global[a], z))
    return orient(topology, arcs)


# ---------------------------------------------------------------------------
# Brute-force oracles.
# ---------------------------------------------------------------------------

def _masks_for(topology: GraphTopology, edges, bits: int):
    out = [0] * topology.n_vertices
    for i, (a, b) in enumerate(edges):
        if (bits >> i) & 1:
            out[b] |= 1 << a
        else:
            out[a] |= 1 << b
    return out


def _diameter_below(n: int, out, bound):
    """Exact diameter if it is < bound, else None.  Infinite counts as >= bound."""
    full = (1 << n) - 1
    worst = 0
    for u in range(n):
        seen = 1 << u
        frontier = seen
        d = 0
        while frontier and seen != full:
            nxt = 0
            rem = frontier
            while rem:
                low = rem & -rem
                nxt |= out[low.bit_length() - 1]
                rem ^= low
            nxt &= ~seen
            if nxt:
                d += 1
                if d >= bound:
                    return None
            seen |= nxt
            frontier = nxt
        if seen != full:
            return None
        if d > worst:
            worst = d
    return worst


def brute_force_min_diameter(topology: GraphTopology):
    """Minimum diameter over all strong orientations, by full enumeration.

    Returns INFINITE when no orientation is strong (bridged inputs).  Capped
    at BRUTE_FORCE_EDGE_CAP edges.
    """
    edges = topology.edges()
    if len(edges) > BRUTE_FORCE_EDGE_CAP:
        raise TooManyEdges(f"{len(edges)} edges exceed the 2^{BRUTE_FORCE_EDGE_CAP} cap")
    n = topology.n_vertices
    if n == 1:
        return 0
    best = INFINITE
    bound = n  # any strong orientation has diameter <= n-1
    for bits in range(1 << len(edges)):
        out = _masks_for(topology, edges, bits)
        d = _diameter_below(n, out, bound)
        if d is not None:
            best = d
            bound = d
            if best <= 2:
                break  # nothing beats 2 on two or more vertices
    return best


def enumerate_diameter2(topology: GraphTopology, limit: int | None = None):
    """All orientations of diameter exactly 2, or the first `limit` of them.

    Enumeration is lexicographic over the sorted edge list, the low-to-high
    direction explored first, so output order is deterministic.  Capped at
    ENUMERATION_EDGE_CAP edges.
    """
    edges = topology.edges()
    if len(edges) > ENUMERATION_EDGE_CAP:
        raise TooManyEdges(f"{len(edges)} edges exceed the 2^{ENUMERATION_EDGE_CAP} cap")
    n = topology.n_vertices
    found = []
    for bits in range(1 << len(edges)):
        out = _masks_for(topology, edges, bits)
        if n >= 2 and _diameter_below(n, out, 3) == 2:
            found.append(Orientation(topology=topology, out_adj=tuple(out)))
            if limit is not None and len(found) >= limit:
                break
    return found
