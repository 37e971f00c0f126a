"""Simple undirected graphs on dense integer vertices, edge-list I/O and generators."""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from functools import cached_property
from pathlib import Path
from typing import Iterable, Optional, Union

Edge = tuple[int, int]

FAMILIES = ("gnm-random", "bipartite-random", "path", "complete", "star", "planted-tight")


class GraphFormatError(ValueError):
    """Raised when an edge-list file is malformed; carries the offending line number."""

    def __init__(self, message: str, line: int):
        super().__init__(f"line {line}: {message}")
        self.line = line


def norm(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    n: int
    edges: frozenset[Edge] = field(default_factory=frozenset)

    def __post_init__(self) -> None:
        if self.n < 0:
            raise ValueError(f"negative vertex count {self.n}")
        for u, v in self.edges:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if u > v:
                raise ValueError(f"edge {(u, v)} is not normalized (need u < v)")
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise ValueError(f"edge {(u, v)} has an endpoint outside [0, {self.n})")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Edge]) -> "Graph":
        """Build a graph, normalizing endpoint order. Duplicates and loops are errors."""
        seen: set[Edge] = set()
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            e = norm(u, v)
            if e in seen:
                raise ValueError(f"duplicate edge {e}")
            seen.add(e)
        return cls(n, frozenset(seen))

    @cached_property
    def adj(self) -> tuple[frozenset[int], ...]:
        nbrs: list[set[int]] = [set() for _ in range(self.n)]
        for u, v in self.edges:
            nbrs[u].add(v)
            nbrs[v].add(u)
        return tuple(frozenset(s) for s in nbrs)

    @cached_property
    def sorted_edges(self) -> list[Edge]:
        return sorted(self.edges)

    @property
    def m(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def degrees(self) -> list[int]:
        return [len(a) for a in self.adj]

    def has_edge(self, u: int, v: int) -> bool:
        return norm(u, v) in self.edges

    def subgraph(self, edges: Iterable[Edge]) -> "Graph":
        """Spanning subgraph on the same vertex set; every edge must belong to self."""
        es = frozenset(norm(u, v) for u, v in edges)
        extra = es - self.edges
        if extra:
            raise ValueError(f"edge {min(extra)} is not in the host graph")
        return Graph(self.n, es)

    def is_subgraph_of(self, other: "Graph") -> bool:
        return self.n == other.n and self.edges <= other.edges

    def union(self, other: "Graph") -> "Graph":
        if self.n != other.n:
            raise ValueError("graphs have different vertex counts")
        return Graph(self.n, self.edges | other.edges)


def edge_degree(g: Graph, e: Edge) -> int:
    u, v = e
    if not g.has_edge(u, v):
        raise ValueError(f"{e} is not an edge of the graph")
    return len(g.adj[u]) + len(g.adj[v])


def induced_subgraph(g: Graph, vertices: Iterable[int]) -> tuple[Graph, dict[int, int]]:
    """Induced subgraph G[U], keeping original vertex ids.

    The returned graph lives on the same n; the index map sends each kept
    vertex to its rank inside ``sorted(U)`` for callers that want a compact
    relabelling.
    """
    keep = set(vertices)
    for v in keep:
        if not 0 <= v < g.n:
            raise ValueError(f"vertex {v} outside [0, {g.n})")
    es = frozenset(e for e in g.edges if e[0] in keep and e[1] in keep)
    index = {v: i for i, v in enumerate(sorted(keep))}
    return Graph(g.n, es), index


def connected_components(g: Graph, vertices: Optional[Iterable[int]] = None) -> list[list[int]]:
    """Components of G[vertices] (all of V by default), each sorted, ordered by min vertex."""
    keep = set(range(g.n)) if vertices is None else set(vertices)
    seen: set[int] = set()
    comps = []
    for s in sorted(keep):
        if s in seen:
            continue
        seen.add(s)
        comp, stack = [s], [s]
        while stack:
            x = stack.pop()
            for y in g.adj[x]:
                if y in keep and y not in seen:
                    seen.add(y)
                    comp.append(y)
                    stack.append(y)
        comps.append(sorted(comp))
    return comps


# -- edge-list files ---------------------------------------------------------

def format_graph(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"]
    lines += [f"{u} {v}" for u, v in g.sorted_edges]
    return "\n".join(lines) + "\n"


def parse_graph(text: str) -> Graph:
    header: Optional[tuple[int, int]] = None
    seen: set[Edge] = set()
    last = 0
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        last = lineno
        parts = line.split()
        try:
            nums = [int(p) for p in parts]
        except ValueError:
            raise GraphFormatError(f"non-integer token in {line!r}", lineno) from None
        if len(nums) != 2:
            raise GraphFormatError(f"expected two integers, got {line!r}", lineno)
        if header is None:
            n, m = nums
            if n < 0 or m < 0:
                raise GraphFormatError("negative count in header", lineno)
            header = (n, m)
            continue
        u, v = nums
        n = header[0]
        if not (0 <= u < n and 0 <= v < n):
            raise GraphFormatError(f"endpoint out of range [0, {n})", lineno)
        if u == v:
            raise GraphFormatError(f"self-loop at vertex {u}", lineno)
        e = norm(u, v)
        if e in seen:
            raise GraphFormatError(f"duplicate edge {e[0]} {e[1]}", lineno)
        seen.add(e)
    if header is None:
        raise GraphFormatError("missing header", 1)
    if len(seen) != header[1]:
        raise GraphFormatError(f"header announces {header[1]} edges, found {len(seen)}", last or 1)
    return Graph(header[0], frozenset(seen))


def load_graph(path: Union[str, Path]) -> Graph:
    return parse_graph(Path(path).read_text())


def save_graph(g: Graph, path: Union[str, Path]) -> None:
    Path(path).write_text(format_graph(g))


# -- generators --------------------------------------------------------------

@dataclass(frozen=True)
class GeneratorConfig:
    family: str
    n: int
    m: Optional[int] = None
    p: Optional[float] = None
    seed: int = 0

    def __post_init__(self) -> None:
        if self.family not in FAMILIES:
            raise ValueError(f"unknown family {self.family!r}; expected one of {FAMILIES}")
        if self.n < 0:
            raise ValueError("n must be nonnegative")
        if self.m is not None and self.p is not None:
            raise ValueError("give either m or p, not both")
        if self.m is not None:
            if self.m < 0:
                raise ValueError("m must be nonnegative")
            if self.m > self.max_edges():
                raise ValueError(f"m={self.m} exceeds the {self.max_edges()} possible edges")
        if self.p is not None and not 0.0 <= self.p <= 1.0:
            raise ValueError("p must lie in [0, 1]")
        if self.family in ("gnm-random", "bipartite-random") and self.m is None and self.p is None:
            raise ValueError(f"{self.family} needs m or p")
        if self.family == "planted-tight" and self.n % 4:
            raise ValueError("planted-tight needs n divisible by 4 (one gadget per 4 vertices)")
        if not 0 <= self.seed < 2**64:
            raise ValueError("seed must be an unsigned 64-bit integer")

    def max_edges(self) -> int:
        if self.family == "bipartite-random":
            left = (self.n + 1) // 2
            return left * (self.n - left)
        return self.n * (self.n - 1) // 2


def bipartite_sides(n: int) -> tuple[range, range]:
    left = (n + 1) // 2
    return range(left), range(left, n)


def generate(cfg: GeneratorConfig) -> Graph:
    rng = random.Random(cfg.seed)
    n = cfg.n
    if cfg.family == "path":
        return Graph(n, frozenset((i, i + 1) for i in range(n - 1)))
    if cfg.family == "complete":
        return Graph(n, frozenset((u, v) for u in range(n) for v in range(u + 1, n)))
    if cfg.family == "star":
        return Graph(n, frozenset((0, v) for v in range(1, n)))
    if cfg.family == "planted-tight":
        es = []
        for base in range(0, n, 4):
            es += [(base, base + 1), (base + 1, base + 2), (base + 2, base + 3)]
        return Graph(n, frozenset(es))
    if cfg.family == "gnm-random":
        pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    else:
        left, right = bipartite_sides(n)
        pairs = [(u, v) for u in left for v in right]
    if cfg.m is not None:
        return Graph(n, frozenset(rng.sample(pairs, cfg.m)))
    p = cfg.p
    return Graph(n, frozenset(e for e in pairs if rng.random() < p))


def planted_middle_edges(n: int) -> list[Edge]:
    """Middle edge of each 3-edge path of the planted-tight family."""
    return [(b + 1, b + 2) for b in range(0, n, 4)]
