"""Sign-vector partitions, case signatures, and antichain utilities.

Fix an anchor part of exactly three vertices (x1, x2, x3).  Every vertex v
outside it gets a 3-bit sign vector whose k-th entry is '+' when xk -> v and
'-' when v -> xk.  The eight sign classes partition each non-anchor part and
drive all structural checks here, including the two necessary conditions
that every diameter-2 orientation of a complete tripartite graph satisfies:

  * a nonempty all-plus class in one part is a singleton dominating the
    other part, and dually for all-minus;
  * the two parts cannot both have a nonempty all-plus class, nor both a
    nonempty all-minus class.

The bipartite side of the story: inside an orientation of K(p, q') every
ordered pair on the q'-side is within distance 2 exactly when the q'-side
out-neighborhood family is an antichain, whose size Sperner's theorem caps
at C(p, floor(p/2)).  Both facts are exercised by exhaustive oracles in the
test suite.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import comb

from .graphcore import Orientation, diameter

SIGN_LABELS = ("+++", "++-", "+-+", "-++", "+--", "-+-", "--+", "---")


class AnalysisError(ValueError):
    pass


class AnchorNotSize3(AnalysisError):
    pass


class DiameterNotTwo(AnalysisError):
    pass


class FirstPartNotSize3(AnalysisError):
    pass


class NotBipartite(AnalysisError):
    pass


class PTooLarge(AnalysisError):
    pass


@dataclass(frozen=True, order=True)
class SignVector:
    """In/out pattern of a vertex against the three anchor vertices."""

    bits: tuple[bool, bool, bool]

    @classmethod
    def from_label(cls, label: str) -> "SignVector":
        return cls(tuple(c == "+" for c in label))

    @property
    def label(self) -> str:
        return "".join("+" if b else "-" for b in self.bits)

    def complement(self) -> "SignVector":
        return SignVector(tuple(not b for b in self.bits))

    def __str__(self) -> str:
        return self.label


@dataclass(frozen=True)
class SignPartition:
    """The eight-class partition of one non-anchor part.

    classes maps a sign label to the tuple of vertices carrying it; the
    classes are disjoint and cover the part.
    """

    part_index: int
    classes: dict[str, tuple[int, ...]]

    @property
    def sizes(self) -> dict[str, int]:
        return {label: len(vs) for label, vs in self.classes.items()}

    def vertices(self, label: str) -> tuple[int, ...]:
        return self.classes[label]


def sign_of(D: Orientation, anchors: tuple[int, int, int], v: int) -> SignVector:
    return SignVector(tuple(bool((D.out_adj[a] >> v) & 1) for a in anchors))


def sign_partition(D: Orientation, anchor_part: int) -> dict[int, SignPartition]:
    """Partition every non-anchor part by sign vector.

    Returns one SignPartition per non-anchor part, keyed by part index.
    """
    topo = D.topology
    if topo.parts[anchor_part] != 3:
        raise AnchorNotSize3(
            f"anchor part {anchor_part + 1} has size {topo.parts[anchor_part]}, need 3"
        )
    anchors = tuple(topo.part_vertices(anchor_part))
    result = {}
    for pi in range(len(topo.parts)):
        if pi == anchor_part:
            continue
        classes = {label: [] for label in SIGN_LABELS}
        for v in topo.part_vertices(pi):
            classes[sign_of(D, anchors, v).label].append(v)
        result[pi] = SignPartition(
            part_index=pi, classes={k: tuple(v) for k, v in classes.items()}
        )
    return result


def sign_condition_violations(D: Orientation, anchor_part: int = 0) -> list[str]:
    """Verify the diameter-2 sign-class conditions; return the violations.

    Requires a tripartite orientation of diameter at most 2 (the conditions
    are simply false otherwise, so that precondition is enforced).
    An empty list means every condition holds.
    """
    topo = D.topology
    if len(topo.parts) != 3:
        raise AnalysisError(f"need a tripartite orientation, got {len(topo.parts)} parts")
    d = diameter(D)
    if not d <= 2:
        raise DiameterNotTwo(f"diameter is {d}, conditions apply only at diameter <= 2")
    partitions = sign_partition(D, anchor_part)
    (i, pi), (j, pj) = sorted(partitions.items())
    violations = []
    for (a, pa), (b, pb) in (((i, pi), (j, pj)), ((j, pj), (i, pi))):
        others = tuple(topo.part_vertices(b))
        plus = pa.vertices("+++")
        if plus:
            if len(plus) != 1:
                violations.append(f"part {a + 1} class +++ has size {len(plus)} != 1")
            for y in plus:
                for z in others:
                    if not (D.out_adj[y] >> z) & 1:
                        violations.append(
                            f"part {a + 1} class +++ vertex {y} does not dominate {z}"
                        )
        minus = pa.vertices("---")
        if minus:
            if len(minus) != 1:
                violations.append(f"part {a + 1} class --- has size {len(minus)} != 1")
            for y in minus:
                for z in others:
                    if not (D.out_adj[z] >> y) & 1:
                        violations.append(
                            f"part {a + 1} class --- vertex {y} not dominated by {z}"
                        )
    for label in ("+++", "---"):
        if pi.vertices(label) and pj.vertices(label):
            violations.append(f"both non-anchor parts have a nonempty {label} class")
    return violations


@dataclass(frozen=True)
class CaseSignature:
    """Out-degrees of the anchor triple into the second part, normalized.

    raw is (i, j, k) as read off the orientation; canonical is the
    lexicographically smallest representative under sorting and the global
    reversal (i, j, k) -> (p-i, p-j, p-k).
    """

    raw: tuple[int, int, int]
    canonical: tuple[int, int, int]
    p: int


def canonicalize_case(ijk, p: int) -> tuple[int, int, int]:
    direct = tuple(sorted(ijk))
    reversed_ = tuple(sorted(p - t for t in ijk))
    return min(direct, reversed_)


def case_signature(D: Orientation) -> CaseSignature:
    """Classify a (3, p, q) orientation by its anchor-to-second-part degrees."""
    topo = D.topology
    if len(topo.parts) != 3 or topo.parts[0] != 3:
        raise FirstPartNotSize3(f"need parts (3, p, q), got {topo.parts}")
    p = topo.parts[1]
    v2 = topo.part_vertices(1)
    v2_mask = 0
    for y in v2:
        v2_mask |= 1 << y
    raw = tuple((D.out_adj[x] & v2_mask).bit_count() for x in topo.part_vertices(0))
    return CaseSignature(raw=raw, canonical=canonicalize_case(raw, p), p=p)


def canonical_case_classes(p: int) -> tuple[tuple[int, int, int], ...]:
    """All canonical (i,j,k) classes over {0..p}^3, sorted."""
    classes = {canonicalize_case(ijk, p) for ijk in itertools.product(range(p + 1), repeat=3)}
    return tuple(sorted(classes))


# ---------------------------------------------------------------------------
# Antichain utilities.
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class AntichainReport:
    """Out-neighborhood family of the big side of a bipartite orientation."""

    family: tuple[frozenset[int], ...]
    is_antichain: bool
    violating_pair: tuple[int, int] | None


def out_neighborhood_family(F: Orientation, big_side: int) -> AntichainReport:
    """Collect {N+(z) & small side : z in big side} and test incomparability.

    violating_pair holds family positions (i, j) with family[i] a subset of
    family[j]; all ordered big-side pairs sit within distance 2 of each
    other exactly when no such pair exists.
    """
    topo = F.topology
    if len(topo.parts) != 2:
        raise NotBipartite(f"need exactly two parts, got {len(topo.parts)}")
    small_side = 1 - big_side
    small = tuple(topo.part_vertices(small_side))
    family = []
    for z in topo.part_vertices(big_side):
        family.append(frozenset(y for y in small if (F.out_adj[z] >> y) & 1))
    for i, si in enumerate(family):
        for j, sj in enumerate(family):
            if i != j and si <= sj:
                return AntichainReport(tuple(family), False, (i, j))
    return AntichainReport(tuple(family), True, None)


def sperner_bound(p: int) -> int:
    """The binomial antichain bound C(p, floor(p/2)); a formula, not an oracle."""
    return comb(p, p // 2)


def max_antichain(p: int) -> tuple[int, tuple[frozenset[int], ...]]:
    """Largest antichain over subsets of a p-set, by exhaustive search.

    Deliberately computes the maximum by enumerating antichain families
    rather than trusting the binomial formula; capped at p = 5 where the
    enumeration is still instantaneous.
    """
    if p < 1:
        raise AnalysisError(f"need p >= 1, got {p}")
    if p > 5:
        raise PTooLarge(f"exhaustive antichain search capped at p=5, got {p}")
    subsets = list(range(1 << p))
    best_size = 0
    best: list[int] = []

    def incomparable(a: int, b: int) -> bool:
        return (a & ~b) != 0 and (b & ~a) != 0

    def extend(start: int, chosen: list[int]) -> None:
        nonlocal best_size, best
        if len(chosen) > best_size:
            best_size = len(chosen)
            best = list(chosen)
        # remaining candidates cannot lift this branch above the best
        if len(chosen) + (len(subsets) - start) <= best_size:
            return
        for idx in range(start, len(subsets)):
            s = subsets[idx]
            if all(incomparable(s, c) for c in chosen):
                chosen.append(s)
                extend(idx + 1, chosen)
                chosen.pop()

    extend(0, [])
    witness = tuple(
        frozenset(i for i in range(p) if (s >> i) & 1) for s in best
    )
    return best_size, witness
