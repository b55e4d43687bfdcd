"""Diagrams, nested sets, relative nested sets, and chains.

Vertex subsets are bit masks (diagrams are capped at 64 vertices), so all set
operations are integer arithmetic.  An absolute nested set (lower diagram
empty) contains the empty subdiagram by convention, encoded as mask 0.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache


class Diagram:
    """Undirected graph without loops or multiple edges."""

    __slots__ = ("n", "edges", "adj", "full_mask")

    def __init__(self, n: int, edges):
        if n < 0 or n > 64:
            raise ValueError("vertex count must be between 0 and 64")
        self.n = n
        self.adj = [0] * n
        norm = set()
        for i, j in edges:
            if i == j:
                raise ValueError(f"loop at vertex {i}")
            if not (0 <= i < n and 0 <= j < n):
                raise ValueError(f"edge ({i},{j}) out of range")
            norm.add((min(i, j), max(i, j)))
            self.adj[i] |= 1 << j
            self.adj[j] |= 1 << i
        self.edges = frozenset(norm)
        self.full_mask = (1 << n) - 1

    @staticmethod
    def path(n: int) -> "Diagram":
        return Diagram(n, [(i, i + 1) for i in range(n - 1)])

    def subdiagram_mask(self, vertices) -> int:
        m = 0
        for v in vertices:
            if not (0 <= v < self.n):
                raise ValueError(f"vertex {v} out of range")
            m |= 1 << v
        return m

    def vertices_of(self, mask: int) -> list[int]:
        return [v for v in range(self.n) if mask >> v & 1]

    def neighbors_mask(self, mask: int) -> int:
        out = 0
        m = mask
        while m:
            v = (m & -m).bit_length() - 1
            out |= self.adj[v]
            m &= m - 1
        return out & ~mask

    def orthogonal(self, m1: int, m2: int) -> bool:
        if m1 & m2:
            return False
        return not (self.neighbors_mask(m1) & m2)

    def compatible(self, m1: int, m2: int) -> bool:
        return (m1 | m2 == m1) or (m1 | m2 == m2) or self.orthogonal(m1, m2)

    def connected_components(self, mask: int) -> list[int]:
        """Maximal connected pieces of the full subgraph on mask, by least vertex."""
        comps = []
        rest = mask
        while rest:
            seed = rest & -rest
            comp = seed
            frontier = seed
            while frontier:
                grown = 0
                m = frontier
                while m:
                    v = (m & -m).bit_length() - 1
                    grown |= self.adj[v] & mask
                    m &= m - 1
                frontier = grown & ~comp
                comp |= grown & mask
            comps.append(comp)
            rest &= ~comp
        return sorted(comps)

    def is_connected(self, mask: int) -> bool:
        return mask != 0 and len(self.connected_components(mask)) == 1

    def connected_subdiagrams(self, within: int) -> list[int]:
        return [
            m
            for m in _submasks(within)
            if m and self.is_connected(m)
        ]

    def __eq__(self, other):
        return (
            isinstance(other, Diagram)
            and self.n == other.n
            and self.edges == other.edges
        )

    def __hash__(self):
        return hash((self.n, self.edges))

    def __repr__(self):
        return f"Diagram({self.n}, {sorted(self.edges)})"


def _submasks(mask: int):
    """All submasks of mask, including 0, in increasing numeric order."""
    subs = []
    s = mask
    while True:
        subs.append(s)
        if s == 0:
            break
        s = (s - 1) & mask
    return sorted(subs)


def cc_members(diagram: Diagram, mask: int) -> list[int]:
    """Connected components as nested-set members; cc(empty) is {empty}."""
    if mask == 0:
        return [0]
    return diagram.connected_components(mask)


@dataclass(frozen=True)
class NestedSet:
    """Relative nested set on (base, lower), members stored as a sorted tuple."""

    diagram: Diagram
    base: int
    lower: int
    members: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "members", tuple(sorted(set(self.members))))

    def validate(self) -> None:
        d = self.diagram
        if self.lower & ~self.base:
            raise ValueError("lower diagram is not contained in base")
        req = set(cc_members(d, self.base)) | set(cc_members(d, self.lower))
        mem = set(self.members)
        if not req <= mem:
            raise ValueError("members must contain cc(base) and cc(lower)")
        lower_cc = d.connected_components(self.lower)
        for m in mem:
            if m & ~self.base:
                raise ValueError("member leaves the base diagram")
            if m and not d.is_connected(m):
                raise ValueError(f"member {m:b} is not connected")
            for c in lower_cc:
                if m | c == c and m != c:
                    raise ValueError("member properly contained in a lower component")
        if self.lower == 0 and 0 not in mem:
            raise ValueError("absolute nested sets contain the empty subdiagram")
        if self.lower != 0 and 0 in mem:
            raise ValueError("relative nested sets do not contain the empty subdiagram")
        for a, b in itertools.combinations(sorted(mem - {0}), 2):
            if not d.compatible(a, b):
                raise ValueError(f"incompatible members {a:b}, {b:b}")

    def is_maximal(self) -> bool:
        pool = _candidate_members(self.diagram, self.base, self.lower)
        mem = set(self.members)
        for c in pool:
            if c in mem:
                continue
            if all(self.diagram.compatible(c, m) for m in mem if m):
                return False
        return True


def _candidate_members(diagram: Diagram, base: int, lower: int) -> list[int]:
    """Connected subdiagrams of base admissible as members over (base, lower)."""
    lower_cc = diagram.connected_components(lower)
    out = []
    for m in diagram.connected_subdiagrams(base):
        ok = True
        for c in lower_cc:
            if m | c == c and m != c:
                ok = False
                break
            if not diagram.compatible(m, c):
                ok = False
                break
        if ok:
            out.append(m)
    return out


def enumerate_nested_sets(
    diagram: Diagram, base: int, lower: int = 0, maximal_only: bool = False
) -> list[NestedSet]:
    """Exhaustive enumeration of Ns(base, lower) or Mns(base, lower).

    Output is duplicate-free and ordered lexicographically on the sorted
    member masks.
    """
    if lower & ~base:
        raise ValueError("lower diagram is not contained in base")
    required = set(cc_members(diagram, base)) | set(cc_members(diagram, lower))
    pool = [c for c in _candidate_members(diagram, base, lower) if c not in required]
    # compatibility bitsets over the pool, relative to required members
    pool = [
        c
        for c in pool
        if all(diagram.compatible(c, r) for r in required if r)
    ]
    k = len(pool)
    compat = [0] * k
    for i in range(k):
        for j in range(i + 1, k):
            if diagram.compatible(pool[i], pool[j]):
                compat[i] |= 1 << j
                compat[j] |= 1 << i

    results: list[tuple[int, ...]] = []
    full = (1 << k) - 1

    def collect(chosen_mask: int):
        members = list(required)
        m = chosen_mask
        while m:
            i = (m & -m).bit_length() - 1
            members.append(pool[i])
            m &= m - 1
        results.append(tuple(sorted(members)))

    def grow(chosen_mask: int, allowed: int, start: int):
        # `allowed` tracks candidates compatible with everything chosen so far,
        # so allowed == 0 characterises inclusion-maximal families
        if maximal_only:
            if allowed == 0:
                collect(chosen_mask)
        else:
            collect(chosen_mask)
        rem = allowed & ~((1 << start) - 1)
        while rem:
            i = (rem & -rem).bit_length() - 1
            rem &= rem - 1
            grow(chosen_mask | (1 << i), allowed & compat[i], i + 1)

    grow(0, full, 0)
    uniq = sorted(set(results))
    return [NestedSet(diagram, base, lower, mem) for mem in uniq]


def count_nested_sets(diagram: Diagram, base: int, lower: int = 0, maximal_only: bool = False) -> int:
    return len(enumerate_nested_sets(diagram, base, lower, maximal_only))


# -- vertical and orthogonal operations -------------------------------------


def vertical_union(upper: NestedSet, lower_ns: NestedSet) -> NestedSet:
    """Union Ns(B,B') x Ns(B',B'') -> Ns(B,B'')."""
    if upper.diagram != lower_ns.diagram:
        raise ValueError("nested sets live on different diagrams")
    if upper.lower != lower_ns.base:
        raise ValueError("middle diagrams do not match")
    out = NestedSet(
        upper.diagram,
        upper.base,
        lower_ns.lower,
        tuple(set(upper.members) | set(lower_ns.members)),
    )
    out.validate()
    return out


def vertical_decompose(ns: NestedSet, middle: int) -> tuple[NestedSet, NestedSet]:
    """Inverse of vertical_union on its image: split at the middle diagram.

    Returns (lower part in Ns(middle, B''), upper part in Ns(B, middle)).
    """
    d = ns.diagram
    if middle & ~ns.base or ns.lower & ~middle:
        raise ValueError("middle diagram must sit between lower and base")
    mid_cc = set(cc_members(d, middle))
    if not mid_cc <= set(ns.members):
        raise ValueError("nested set does not contain cc(middle)")
    lower_part = [m for m in ns.members if m | middle == middle]
    upper = []
    mid_components = d.connected_components(middle)
    for m in ns.members:
        properly_inside = any(m | c == c and m != c for c in mid_components)
        if not properly_inside:
            upper.append(m)
    low_ns = NestedSet(d, middle, ns.lower, tuple(lower_part))
    up_ns = NestedSet(d, ns.base, middle, tuple(upper))
    low_ns.validate()
    up_ns.validate()
    return low_ns, up_ns


def orthogonal_union(ns1: NestedSet, ns2: NestedSet) -> NestedSet:
    if ns1.diagram != ns2.diagram:
        raise ValueError("nested sets live on different diagrams")
    d = ns1.diagram
    if not d.orthogonal(ns1.base, ns2.base):
        raise ValueError("bases are not orthogonal")
    out = NestedSet(
        d,
        ns1.base | ns2.base,
        ns1.lower | ns2.lower,
        tuple(set(ns1.members) | set(ns2.members)),
    )
    out.validate()
    return out


def restrict_nested_set(ns: NestedSet, base: int, lower: int) -> NestedSet:
    """Recover an orthogonal factor by restriction of members."""
    members = [m for m in ns.members if m and m | base == base]
    if lower == 0:
        members.append(0)
    out = NestedSet(ns.diagram, base, lower, tuple(members))
    out.validate()
    return out


# -- chains ------------------------------------------------------------------


@dataclass(frozen=True)
class Chain:
    """Strictly increasing sequence of subdiagrams from lower to base."""

    diagram: Diagram
    steps: tuple[int, ...]

    def __post_init__(self):
        for a, b in zip(self.steps, self.steps[1:]):
            if a & ~b or a == b:
                raise ValueError("chain steps must strictly increase")

    @property
    def base(self) -> int:
        return self.steps[-1]

    @property
    def lower(self) -> int:
        return self.steps[0]

    def is_maximal(self) -> bool:
        return all(
            bin(b & ~a).count("1") == 1 for a, b in zip(self.steps, self.steps[1:])
        )


def chain_to_nested_set(chain: Chain) -> NestedSet:
    members: set[int] = set()
    for s in chain.steps:
        members.update(cc_members(chain.diagram, s))
    ns = NestedSet(chain.diagram, chain.base, chain.lower, tuple(members))
    ns.validate()
    return ns


def canonical_section(ns: NestedSet) -> Chain:
    """The canonical chain s(H) with iota(s(H)) = H."""
    d = ns.diagram
    steps = [ns.base]
    members = set(ns.members)
    current = ns.base
    while current != ns.lower:
        proper = [m for m in members if m | current == current and m != current]
        maximal = [
            m
            for m in proper
            if not any(m | m2 == m2 and m != m2 for m2 in proper)
        ]
        nxt = 0
        for m in maximal:
            nxt |= m
        if nxt == current:
            raise RuntimeError("canonical section failed to descend")
        steps.append(nxt)
        current = nxt
        if len(steps) > d.n + 2:
            raise RuntimeError("canonical section did not terminate")
    return Chain(d, tuple(reversed(steps)))


def enumerate_chains(
    diagram: Diagram, base: int, lower: int, maximal_only: bool = False
) -> list[Chain]:
    """All chains from lower to base (intermediate subsets are arbitrary)."""
    if lower & ~base:
        raise ValueError("lower diagram is not contained in base")
    free = base & ~lower
    chains: list[Chain] = []

    def extend(current: int, steps: tuple[int, ...]):
        if current == base:
            chains.append(Chain(diagram, steps))
            return
        rest = base & ~current
        if maximal_only:
            m = rest
            while m:
                v = m & -m
                m &= m - 1
                extend(current | v, steps + (current | v,))
        else:
            for add in _submasks(rest):
                if add:
                    extend(current | add, steps + (current | add,))

    extend(lower, (lower,))
    return sorted(chains, key=lambda c: c.steps)


def _is_move_triple(diagram: Diagram, low: int, mid: int, high: int) -> bool:
    """Whether inserting mid refines the step low < high by an orthogonal split.

    True iff no connected component of the subgraph on high meets both
    mid \\ low and high \\ mid.
    """
    p = mid & ~low
    q = high & ~mid
    if not p or not q:
        return False
    for comp in diagram.connected_components(high):
        if comp & p and comp & q:
            return False
    return True


def chain_neighbors(chain: Chain) -> list[Chain]:
    """Adjacent chains in the move graph: one orthogonal insertion or deletion."""
    d = chain.diagram
    out = []
    steps = chain.steps
    # deletions
    for k in range(1, len(steps) - 1):
        if _is_move_triple(d, steps[k - 1], steps[k], steps[k + 1]):
            out.append(Chain(d, steps[: k] + steps[k + 1 :]))
    # insertions
    for k in range(len(steps) - 1):
        low, high = steps[k], steps[k + 1]
        gap = high & ~low
        if bin(gap).count("1") < 2:
            continue
        for add in _submasks(gap):
            if add == 0 or add == gap:
                continue
            mid = low | add
            if _is_move_triple(d, low, mid, high):
                out.append(Chain(d, steps[: k + 1] + (mid,) + steps[k + 1 :]))
    return out


def chains_equivalent(c1: Chain, c2: Chain) -> bool:
    """Connectivity in the move graph generated by orthogonal-split refinements."""
    if c1.diagram != c2.diagram:
        raise ValueError("chains live on different diagrams")
    if (c1.base, c1.lower) != (c2.base, c2.lower):
        return False
    if c1 == c2:
        return True
    seen = {c1.steps}
    frontier = [c1]
    while frontier:
        nxt = []
        for c in frontier:
            for nb in chain_neighbors(c):
                if nb.steps == c2.steps:
                    return True
                if nb.steps not in seen:
                    seen.add(nb.steps)
                    nxt.append(nb)
        frontier = nxt
    return False


def chain_move_classes(diagram: Diagram, base: int, lower: int) -> list[list[Chain]]:
    """Partition of all chains from lower to base into move-graph components."""
    chains = enumerate_chains(diagram, base, lower)
    index = {c.steps: i for i, c in enumerate(chains)}
    parent = list(range(len(chains)))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(a, b):
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[max(ra, rb)] = min(ra, rb)

    for i, c in enumerate(chains):
        for nb in chain_neighbors(c):
            union(i, index[nb.steps])
    groups: dict[int, list[Chain]] = {}
    for i, c in enumerate(chains):
        groups.setdefault(find(i), []).append(c)
    return [groups[r] for r in sorted(groups)]


# -- small-diagram generation (for exhaustive verification) ------------------


@lru_cache(maxsize=None)
def all_diagrams_up_to_iso(n: int, connected_only: bool = False) -> tuple[Diagram, ...]:
    """All diagrams with exactly n vertices, one per isomorphism class."""
    if n == 0:
        return (Diagram(0, []),)
    if n == 1:
        return (Diagram(1, []),)
    perms = list(itertools.permutations(range(n)))
    pair_index = {}
    pairs = list(itertools.combinations(range(n), 2))
    for k, (i, j) in enumerate(pairs):
        pair_index[i, j] = k

    def canon(edge_bits: int) -> int:
        best = None
        for p in perms:
            img = 0
            m = edge_bits
            while m:
                k = (m & -m).bit_length() - 1
                m &= m - 1
                i, j = pairs[k]
                a, b = p[i], p[j]
                img |= 1 << pair_index[min(a, b), max(a, b)]
            if best is None or img < best:
                best = img
        return best

    seen = set()
    out = []
    for bits in range(1 << len(pairs)):
        c = canon(bits)
        if c in seen:
            continue
        seen.add(c)
        edges = [pairs[k] for k in range(len(pairs)) if bits >> k & 1]
        d = Diagram(n, edges)
        if connected_only and not d.is_connected(d.full_mask):
            continue
        out.append(d)
    return tuple(out)


@lru_cache(maxsize=None)
def connected_diagrams_up_to_iso(n: int) -> tuple[Diagram, ...]:
    """Connected diagrams on n vertices, built by vertex augmentation."""
    if n <= 1:
        return all_diagrams_up_to_iso(n)
    if n <= 4:
        return all_diagrams_up_to_iso(n, connected_only=True)
    prev = connected_diagrams_up_to_iso(n - 1)
    perms = list(itertools.permutations(range(n)))
    pairs = list(itertools.combinations(range(n), 2))
    pair_index = {p: k for k, p in enumerate(pairs)}

    def canon(edges: frozenset) -> int:
        best = None
        for p in perms:
            img = 0
            for (i, j) in edges:
                a, b = p[i], p[j]
                img |= 1 << pair_index[min(a, b), max(a, b)]
            if best is None or img < best:
                best = img
        return best

    seen = set()
    out = []
    for d in prev:
        for attach in range(1, 1 << (n - 1)):
            edges = set(d.edges)
            for v in range(n - 1):
                if attach >> v & 1:
                    edges.add((v, n - 1))
            key = canon(frozenset(edges))
            if key not in seen:
                seen.add(key)
                out.append(Diagram(n, sorted(edges)))
    return tuple(out)
