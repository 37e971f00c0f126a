"""Gallai-Edmonds partition (D, A, C) and special vertices relative to a maximum matching."""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from functools import cached_property
from typing import Optional

from .graph import Graph, connected_components
from .matching import Matching, max_matching_size_without, maximum_matching


class SpecialVertexError(ValueError):
    """A component of H[D] without exactly one special vertex."""


@dataclass(frozen=True)
class GEDecomposition:
    d_set: frozenset[int]
    a_set: frozenset[int]
    c_set: frozenset[int]
    d_components: tuple[tuple[int, ...], ...]
    # specials[i] is the special vertex of d_components[i]; None until marked
    specials: Optional[tuple[int, ...]] = field(default=None)

    @cached_property
    def component_of(self) -> dict[int, int]:
        return {v: i for i, comp in enumerate(self.d_components) for v in comp}

    @property
    def special_set(self) -> frozenset[int]:
        if self.specials is None:
            raise ValueError("special vertices have not been marked")
        return frozenset(self.specials)

    def part(self, v: int) -> str:
        if v in self.d_set:
            return "D"
        return "A" if v in self.a_set else "C"


def decompose(h: Graph, m: Optional[Matching] = None) -> GEDecomposition:
    """D = {v : μ(h − v) = μ(h)}, A = N(D) \\ D, C = the rest.

    Each μ(h − v) is evaluated exactly (see ``max_matching_size_without``).
    When ``m`` is perfect no vertex can be in D, since h − v has an odd
    number of vertices and hence μ(h − v) < n/2.
    """
    if m is None:
        m = maximum_matching(h)
    if 2 * m.size == h.n:
        d: set[int] = set()
    else:
        d = {v for v in range(h.n) if max_matching_size_without(h, m, v) == m.size}
    a = {w for v in d for w in h.adj[v]} - d
    c = set(range(h.n)) - d - a
    comps = tuple(tuple(cc) for cc in connected_components(h, d))
    return GEDecomposition(frozenset(d), frozenset(a), frozenset(c), comps)


def mark_specials(ge: GEDecomposition, h: Graph, m: Matching) -> GEDecomposition:
    """Mark the special vertex of each component of H[D]: the one that is
    unmatched by ``m`` or matched into A."""
    m.check_in(h)
    specials = []
    for comp in ge.d_components:
        cand = [v for v in comp if v not in m.mate or m.mate[v] in ge.a_set]
        if len(cand) != 1:
            raise SpecialVertexError(
                f"component {list(comp)} has {len(cand)} special vertices {cand}; "
                "is the matching maximum?"
            )
        specials.append(cand[0])
    return replace(ge, specials=tuple(specials))


@dataclass
class GEReport:
    c_matched_within_c: bool
    a_matched_into_d: bool
    d_components_near_perfect: bool
    failures: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.c_matched_within_c and self.a_matched_into_d and self.d_components_near_perfect


def verify_ge_properties(ge: GEDecomposition, h: Graph, m: Matching) -> GEReport:
    """Check the three matching clauses of the Gallai-Edmonds structure for ``m``."""
    mate = m.mate
    failures = []
    for v in sorted(ge.c_set):
        if mate.get(v) not in ge.c_set:
            failures.append(f"(1) C-vertex {v} matched to {mate.get(v)}")
    clause1 = not failures
    n1 = len(failures)
    for v in sorted(ge.a_set):
        if mate.get(v) not in ge.d_set:
            failures.append(f"(2) A-vertex {v} matched to {mate.get(v)}")
    clause2 = len(failures) == n1
    n2 = len(failures)
    for comp in ge.d_components:
        members = set(comp)
        exposed = [v for v in comp if v not in mate or mate[v] in ge.a_set]
        inside = [v for v in comp if v in mate and mate[v] in members]
        if len(exposed) != 1 or len(inside) != len(comp) - 1:
            failures.append(
                f"(3) component {list(comp)}: {len(exposed)} unmatched-or-to-A, "
                f"{len(inside)} matched inside"
            )
    clause3 = len(failures) == n2
    return GEReport(clause1, clause2, clause3, failures)
