"""Maximum matching in general graphs (Edmonds' blossom algorithm) and friends.

``maximum_matching`` is the workhorse; ``brute_force_maximum_matching`` is an
exhaustive oracle for small graphs used only to check it. ``decompose_union``
splits M ∪ M* into its alternating paths and cycles.
"""

from __future__ import annotations

import random
from collections import deque
from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import Iterable, Literal, Optional, Sequence

from .graph import Edge, Graph, norm

BRUTE_FORCE_LIMIT = 16

Tag = Literal["m", "mstar"]


@dataclass(frozen=True)
class Matching:
    edges: frozenset[Edge]

    def __post_init__(self) -> None:
        seen: set[int] = set()
        for u, v in self.edges:
            if u >= v:
                raise ValueError(f"edge {(u, v)} is not normalized")
            if u in seen or v in seen:
                raise ValueError(f"edges share vertex {u if u in seen else v}")
            seen.add(u)
            seen.add(v)

    @classmethod
    def of(cls, edges: Iterable[Edge]) -> "Matching":
        return cls(frozenset(norm(u, v) for u, v in edges))

    @property
    def size(self) -> int:
        return len(self.edges)

    def __len__(self) -> int:
        return len(self.edges)

    @cached_property
    def mate(self) -> dict[int, int]:
        out = {}
        for u, v in self.edges:
            out[u] = v
            out[v] = u
        return out

    def is_matched(self, v: int) -> bool:
        return v in self.mate

    def check_in(self, g: Graph) -> None:
        """Raise if some edge is missing from ``g``."""
        for e in self.edges:
            if e not in g.edges:
                raise ValueError(f"matching edge {e} is not in the graph")


def _mate_array_to_matching(mate: Sequence[int]) -> Matching:
    return Matching(frozenset((v, w) for v, w in enumerate(mate) if w > v))


# -- blossom -----------------------------------------------------------------

def _search(root: int, adj: Sequence[Sequence[int]], mate: list[int], blocked: int = -1) -> bool:
    """Grow an alternating tree from the free vertex ``root``, contracting
    blossoms by relabelling their base. Augments ``mate`` in place and returns
    True if an augmenting path is found. ``blocked`` is treated as deleted.
    """
    n = len(adj)
    used = [False] * n
    parent = [-1] * n
    base = list(range(n))
    used[root] = True
    queue = deque([root])

    def lca(a: int, b: int) -> int:
        seen = [False] * n
        while True:
            a = base[a]
            seen[a] = True
            if mate[a] == -1:
                break
            a = parent[mate[a]]
        while True:
            b = base[b]
            if seen[b]:
                return b
            b = parent[mate[b]]

    def mark_path(v: int, b: int, child: int, in_blossom: list[bool]) -> None:
        while base[v] != b:
            in_blossom[base[v]] = in_blossom[base[mate[v]]] = True
            parent[v] = child
            child = mate[v]
            v = parent[mate[v]]

    while queue:
        v = queue.popleft()
        for to in adj[v]:
            if to == blocked or base[v] == base[to] or mate[v] == to:
                continue
            if to == root or (mate[to] != -1 and parent[mate[to]] != -1):
                # even-even edge: contract the blossom
                cur = lca(v, to)
                in_blossom = [False] * n
                mark_path(v, cur, to, in_blossom)
                mark_path(to, cur, v, in_blossom)
                for i in range(n):
                    if in_blossom[base[i]]:
                        base[i] = cur
                        if not used[i]:
                            used[i] = True
                            queue.append(i)
            elif parent[to] == -1:
                parent[to] = v
                if mate[to] == -1:
                    while to != -1:
                        pv = parent[to]
                        nxt = mate[pv]
                        mate[to] = pv
                        mate[pv] = to
                        to = nxt
                    return True
                used[mate[to]] = True
                queue.append(mate[to])
    return False


def _greedy_init(adj: Sequence[Sequence[int]], mate: list[int]) -> None:
    for v in range(len(adj)):
        if mate[v] == -1:
            for w in adj[v]:
                if mate[w] == -1:
                    mate[v], mate[w] = w, v
                    break


def _maximize(adj: Sequence[Sequence[int]], mate: list[int]) -> list[int]:
    _greedy_init(adj, mate)
    for v in range(len(adj)):
        if mate[v] == -1:
            _search(v, adj, mate)
    return mate


def maximum_matching(g: Graph, seed: Optional[int] = None) -> Matching:
    """A maximum-cardinality matching of ``g``.

    Deterministic for ``seed=None``. With a seed, vertices and adjacency lists
    are shuffled first, which samples among the (possibly many) maximum
    matchings.
    """
    if seed is None:
        adj = [sorted(a) for a in g.adj]
        return _mate_array_to_matching(_maximize(adj, [-1] * g.n))
    rng = random.Random(seed)
    perm = list(range(g.n))
    rng.shuffle(perm)  # perm[new] = old
    inv = [0] * g.n
    for new, old in enumerate(perm):
        inv[old] = new
    adj = []
    for old in perm:
        nbrs = [inv[w] for w in g.adj[old]]
        rng.shuffle(nbrs)
        adj.append(nbrs)
    mate = _maximize(adj, [-1] * g.n)
    return Matching(frozenset(norm(perm[a], perm[b]) for a, b in enumerate(mate) if b > a))


def augment(g: Graph, m: Matching) -> Matching:
    """Grow ``m`` (a matching of ``g``) to a maximum matching, keeping its edges as the start."""
    m.check_in(g)
    adj = [sorted(a) for a in g.adj]
    mate = [-1] * g.n
    for u, v in m.edges:
        mate[u], mate[v] = v, u
    for v in range(g.n):
        if mate[v] == -1:
            _search(v, adj, mate)
    return _mate_array_to_matching(mate)


def max_matching_size_without(g: Graph, m: Matching, v: int) -> int:
    """μ(g − v), given a maximum matching ``m`` of ``g``.

    Removing v drops at most the edge at v, leaving a matching of g − v of
    size |m| − 1 whose only new free vertex is v's former mate u. Any
    augmenting path for it in g − v must end at u (otherwise it would also
    augment m in g), so one search from u settles μ(g − v) exactly.
    """
    u = m.mate.get(v)
    if u is None:
        return m.size
    mate = [-1] * g.n
    for a, b in m.edges:
        mate[a], mate[b] = b, a
    mate[u] = mate[v] = -1
    adj = [list(a) for a in g.adj]
    return m.size if _search(u, adj, mate, blocked=v) else m.size - 1


# -- oracle ------------------------------------------------------------------

def brute_force_maximum_matching(g: Graph) -> Matching:
    """Exhaustive maximum matching: for the lowest remaining vertex, try leaving it
    unmatched or pairing it with each remaining neighbour. Memoized over subsets.
    """
    if g.n > BRUTE_FORCE_LIMIT:
        raise ValueError(f"brute-force oracle is limited to {BRUTE_FORCE_LIMIT} vertices, got {g.n}")
    nbr_mask = [0] * g.n
    for u, v in g.edges:
        nbr_mask[u] |= 1 << v
        nbr_mask[v] |= 1 << u

    @lru_cache(maxsize=None)
    def best(mask: int) -> tuple[int, tuple[Edge, ...]]:
        if mask == 0:
            return 0, ()
        v = (mask & -mask).bit_length() - 1
        rest = mask & ~(1 << v)
        top = best(rest)
        cand = nbr_mask[v] & rest
        while cand:
            low = cand & -cand
            u = low.bit_length() - 1
            k, es = best(rest & ~low)
            if k + 1 > top[0]:
                top = (k + 1, es + ((v, u),))
            cand ^= low
        return top

    return Matching.of(best((1 << g.n) - 1)[1])


def maximal_matching(g: Graph, order: Optional[Iterable[Edge]] = None) -> Matching:
    """Greedy maximal matching scanning ``order`` (sorted edges by default).

    Edges of ``g`` missing from ``order`` are scanned afterwards in sorted
    order, so the result is always maximal.
    """
    listed = [] if order is None else [norm(u, v) for u, v in order]
    for e in listed:
        if e not in g.edges:
            raise ValueError(f"{e} is not an edge of the graph")
    used: set[int] = set()
    picked = []
    for u, v in listed + g.sorted_edges:
        if u not in used and v not in used:
            used.update((u, v))
            picked.append((u, v))
    return Matching.of(picked)


def is_maximal(g: Graph, m: Matching) -> bool:
    return all(u in m.mate or v in m.mate for u, v in g.edges)


# -- M ∪ M* ------------------------------------------------------------------

@dataclass(frozen=True)
class AlternatingComponent:
    kind: Literal["path", "cycle"]
    vertices: tuple[int, ...]
    edges: tuple[tuple[Edge, Tag], ...]

    @property
    def is_augmenting(self) -> bool:
        return self.kind == "path" and self.edges[0][1] == "mstar" and self.edges[-1][1] == "mstar"

    def count(self, tag: Tag) -> int:
        return sum(1 for _, t in self.edges if t == tag)

    @property
    def surplus(self) -> int:
        """|C ∩ M*| − |C ∩ M|."""
        return self.count("mstar") - self.count("m")


def decompose_union(m: Matching, mstar: Matching) -> list[AlternatingComponent]:
    """Split the multiset union M ⊎ M* into alternating paths and cycles.

    Edges in both matchings become 2-cycles. Paths are listed from their
    smaller endpoint; output is sorted by first vertex.
    """
    comps: list[AlternatingComponent] = []
    shared = m.edges & mstar.edges
    for e in sorted(shared):
        comps.append(AlternatingComponent("cycle", e, ((e, "m"), (e, "mstar"))))
    step = {"m": {}, "mstar": {}}
    for tag, mm in (("m", m), ("mstar", mstar)):
        for u, v in mm.edges - shared:
            step[tag][u] = v
            step[tag][v] = u
    touched = set(step["m"]) | set(step["mstar"])
    visited: set[int] = set()

    def walk(start: int, tag: Tag) -> tuple[list[int], list[tuple[Edge, Tag]]]:
        verts, edges = [start], []
        cur = start
        while cur in step[tag]:
            nxt = step[tag][cur]
            edges.append((norm(cur, nxt), tag))
            if nxt == start:
                break
            verts.append(nxt)
            cur = nxt
            tag = "mstar" if tag == "m" else "m"
        return verts, edges

    ends = sorted(v for v in touched if (v in step["m"]) != (v in step["mstar"]))
    for v in ends:
        if v in visited:
            continue
        tag: Tag = "m" if v in step["m"] else "mstar"
        verts, edges = walk(v, tag)
        visited.update(verts)
        comps.append(AlternatingComponent("path", tuple(verts), tuple(edges)))
    for v in sorted(touched):
        if v in visited:
            continue
        verts, edges = walk(v, "m")
        visited.update(verts)
        comps.append(AlternatingComponent("cycle", tuple(verts), tuple(edges)))
    comps.sort(key=lambda c: c.vertices[0])
    return comps


def augmenting_paths(components: Iterable[AlternatingComponent]) -> list[AlternatingComponent]:
    return [c for c in components if c.is_augmenting]


# -- matching files: "k" then k lines "u v" ------------------------------------

def format_matching(m: Matching) -> str:
    return "\n".join([str(m.size)] + [f"{u} {v}" for u, v in sorted(m.edges)]) + "\n"


def parse_matching(text: str) -> Matching:
    rows = [ln.split() for ln in text.splitlines() if ln.strip() and not ln.lstrip().startswith("#")]
    if not rows or len(rows[0]) != 1:
        raise ValueError("matching file must start with a single count line")
    k = int(rows[0][0])
    if len(rows) - 1 != k:
        raise ValueError(f"matching file announces {k} edges, found {len(rows) - 1}")
    pairs = []
    for r in rows[1:]:
        if len(r) != 2:
            raise ValueError(f"expected 'u v', got {' '.join(r)!r}")
        u, v = int(r[0]), int(r[1])
        if u == v:
            raise ValueError(f"self-loop {u} {v} in matching")
        pairs.append((u, v))
    if len({norm(u, v) for u, v in pairs}) != k:
        raise ValueError("duplicate edge in matching file")
    return Matching.of(pairs)
