"""Instance-level checks of the Gallai-Edmonds argument that an EDCS keeps a
(2/3 − ε) fraction of the maximum matching.

Given G and an EDCS H, ``verify_trace`` fixes maximum matchings M of H and M*
of G, splits M ∪ M* into alternating components, finds for every augmenting
path a witness of one of two shapes (T1: one suitable edge joining two
D-components whose special vertices lie on the path; T2: two vertex-disjoint
suitable edges), builds the bipartite auxiliary graph B on W = W1 ∪ W2 versus
Z = V \\ S, and evaluates each inequality of the argument in exact rationals.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Literal, Optional, Sequence

from .edcs import EdcsParams, Number, as_fraction, params_for_epsilon, verify_edcs
from .gallai_edmonds import GEDecomposition, decompose, mark_specials
from .graph import Edge, Graph, format_graph
from .matching import AlternatingComponent, Matching, decompose_union, maximum_matching

PASS, FAIL, SKIPPED, BELOW = "PASS", "FAIL", "SKIPPED-EMPTY", "BELOW-THEOREM"

Relation = Literal[">=", "<=", "=="]


class LemmaViolation(AssertionError):
    """An augmenting path with no T1/T2 witness. Carries a full instance dump."""

    def __init__(self, message: str, dump: dict):
        super().__init__(message + "\n" + json.dumps(dump, sort_keys=True))
        self.dump = dump


def fmt(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


@dataclass(frozen=True)
class CheckRecord:
    name: str
    lhs: Fraction
    rhs: Fraction
    relation: Relation
    status: str

    def line(self) -> str:
        return f"{self.name} lhs={fmt(self.lhs)} rhs={fmt(self.rhs)} {self.status}"

    def to_dict(self) -> dict:
        return {"name": self.name, "lhs": fmt(self.lhs), "rhs": fmt(self.rhs),
                "relation": self.relation, "status": self.status}


def _holds(lhs: Fraction, rhs: Fraction, relation: Relation) -> bool:
    if relation == ">=":
        return lhs >= rhs
    if relation == "<=":
        return lhs <= rhs
    return lhs == rhs


def check(name: str, lhs, rhs, relation: Relation = ">=", *, skip: bool = False) -> CheckRecord:
    lhs, rhs = Fraction(lhs), Fraction(rhs)
    if skip:
        status = SKIPPED
    else:
        status = PASS if _holds(lhs, rhs, relation) else FAIL
    return CheckRecord(name, lhs, rhs, relation, status)


def fact_2_1(x: Fraction) -> bool:
    """(1 − x)/(1 + x) ≥ 1 − 2x, valid for every x ≥ 0."""
    x = Fraction(x)
    if x < 0:
        raise ValueError("defined for x >= 0 only")
    return (1 - x) / (1 + x) >= 1 - 2 * x


# -- part-size bound for edge-degree bounded bipartite graphs ----------------

def verify_part_size_bound(
    p_side: Sequence, q_side: Sequence, edges: Iterable[tuple], beta: int, name: str = "part_size"
) -> CheckRecord:
    """|Q| ≥ d_P/(β − d_P)·|P| with d_P = |E|/|P|, for a bipartite graph whose
    edges (p, q) all have deg(p) + deg(q) ≤ β. Sides are labels local to this
    graph, so one vertex of an ambient graph may sit on both sides.
    """
    edges = list(edges)
    pset, qset = set(p_side), set(q_side)
    if not pset or not edges:
        raise ValueError("need a nonempty P side and at least one edge")
    dp: dict = {}
    dq: dict = {}
    for a, b in edges:
        if a not in pset or b not in qset:
            raise ValueError(f"edge {(a, b)} does not go from P to Q")
        dp[a] = dp.get(a, 0) + 1
        dq[b] = dq.get(b, 0) + 1
    worst = max(dp[a] + dq[b] for a, b in edges)
    if worst > beta:
        raise ValueError(f"an edge has degree {worst} > beta={beta}")
    d_p = Fraction(len(edges), len(pset))
    return check(name, len(qset), d_p / (beta - d_p) * len(pset))


# -- classification of augmenting paths --------------------------------------

@dataclass(frozen=True)
class PathClassification:
    path: AlternatingComponent
    kind: Literal["T1", "T2"]
    witnesses: tuple[Edge, ...]
    # T1 only: component ids of the witness endpoints and their special vertices
    components: tuple[int, ...] = ()
    specials: tuple[int, ...] = ()


def _suitable(e: Edge, h: Graph, ge: GEDecomposition) -> bool:
    return e not in h.edges and e[0] not in ge.a_set and e[1] not in ge.a_set


def classify_augmenting_paths(
    g: Graph, h: Graph, ge: GEDecomposition, m: Matching, mstar: Matching,
    paths: Optional[list[AlternatingComponent]] = None,
) -> list[PathClassification]:
    """T1 wins over T2; within a type the lexicographically smallest witness is used."""
    if ge.specials is None:
        raise ValueError("decomposition needs special vertices marked")
    if paths is None:
        paths = [c for c in decompose_union(m, mstar) if c.is_augmenting]
    comp_of = ge.component_of
    out = []
    for path in paths:
        on_path = set(path.vertices)
        suitable = sorted(e for e, _ in path.edges if _suitable(e, h, ge))
        found = None
        for u, v in suitable:
            cu, cv = comp_of.get(u), comp_of.get(v)
            if cu is None or cv is None or cu == cv:
                continue
            su, sv = ge.specials[cu], ge.specials[cv]
            if su in on_path and sv in on_path:
                found = PathClassification(path, "T1", ((u, v),), (cu, cv), (su, sv))
                break
        if found is None:
            for e1, e2 in combinations(suitable, 2):
                if not set(e1) & set(e2):
                    found = PathClassification(path, "T2", (e1, e2))
                    break
        if found is None:
            raise LemmaViolation(
                f"augmenting path {list(path.vertices)} has no T1/T2 witness",
                _dump(g, h, m, mstar, path),
            )
        out.append(found)
    return out


def _dump(g: Graph, h: Graph, m: Matching, mstar: Matching, path: AlternatingComponent) -> dict:
    return {
        "g": format_graph(g), "h": format_graph(h),
        "m": sorted(m.edges), "mstar": sorted(mstar.edges), "path": list(path.vertices),
    }


def witness_is_valid(c: PathClassification, h: Graph, ge: GEDecomposition) -> bool:
    """Re-check a witness from first principles: path adjacency from the
    vertex sequence, D-components by a fresh search inside H[D]."""
    verts = list(c.path.vertices)
    steps = {frozenset(pair) for pair in zip(verts, verts[1:])}
    d, a = ge.d_set, ge.a_set
    specials = set(ge.specials or ())

    def good(e: Edge) -> bool:
        x, y = e
        return frozenset(e) in steps and x not in a and y not in a and not h.has_edge(x, y)

    def d_component(x: int) -> set[int]:
        seen, todo = {x}, [x]
        while todo:
            y = todo.pop()
            for z in h.adj[y]:
                if z in d and z not in seen:
                    seen.add(z)
                    todo.append(z)
        return seen

    if not all(good(e) for e in c.witnesses):
        return False
    if c.kind == "T2":
        (p, q), (r, s) = c.witnesses
        return len(c.witnesses) == 2 and len({p, q, r, s}) == 4
    if len(c.witnesses) != 1:
        return False
    x, y = c.witnesses[0]
    if x not in d or y not in d:
        return False
    ox, oy = d_component(x), d_component(y)
    if ox & oy:
        return False
    sx, sy = ox & specials, oy & specials
    return len(sx) == 1 and len(sy) == 1 and sx <= set(verts) and sy <= set(verts)


# -- auxiliary bipartite graph -----------------------------------------------

@dataclass(frozen=True)
class AuxiliaryB:
    w1: tuple[int, ...]
    w2: tuple[int, ...]
    z: tuple[int, ...]
    z_a: tuple[int, ...]
    # (w, z): w on the W side, z on the Z side
    edges: tuple[Edge, ...]

    @property
    def w(self) -> tuple[int, ...]:
        return self.w1 + self.w2

    def w_degrees(self) -> dict[int, int]:
        out = {w: 0 for w in self.w}
        for w, _ in self.edges:
            out[w] += 1
        return out

    def z_degrees(self) -> dict[int, int]:
        out = {z: 0 for z in self.z}
        for _, z in self.edges:
            out[z] += 1
        return out


def build_auxiliary_B(
    g: Graph, h: Graph, ge: GEDecomposition, classifications: Sequence[PathClassification]
) -> AuxiliaryB:
    if ge.specials is None:
        raise ValueError("decomposition needs special vertices marked")
    w1: list[int] = []
    w2: list[int] = []
    for c in classifications:
        if c.kind == "T1":
            (u, v), = c.witnesses
            if u not in ge.d_set or v not in ge.d_set:
                raise ValueError(f"T1 witness {(u, v)} leaves D")
            w1 += [u, v]
        else:
            (u, v), (x, y) = c.witnesses
            w2 += [u, v, x, y]
    for u, v in (e for c in classifications for e in c.witnesses):
        if h.has_edge(u, v) or u in ge.a_set or v in ge.a_set or not g.has_edge(u, v):
            raise ValueError(f"witness {(u, v)} is not a suitable edge")
    if len(set(w1) | set(w2)) != len(w1) + len(w2):
        raise ValueError("witness endpoints repeat across paths")
    specials = ge.special_set
    z = tuple(v for v in range(h.n) if v not in specials)
    z_a = tuple(sorted(ge.a_set))
    zset = set(z)
    edges = [(w, x) for w in w1 for x in sorted(h.adj[w]) if x in ge.a_set]
    edges += [(w, x) for w in w2 for x in sorted(h.adj[w]) if x in zset]
    return AuxiliaryB(tuple(w1), tuple(w2), z, z_a, tuple(edges))


# -- the trace ---------------------------------------------------------------

@dataclass
class ProofTrace:
    epsilon: Fraction
    params: EdcsParams
    theorem_params: bool
    mu_h: int
    mu_g: int
    lam: Fraction
    alpha: Fraction
    sigma: Fraction
    n_paths: int
    n_t1: int
    n_t2: int
    checks: list[CheckRecord] = field(default_factory=list)
    classifications: list[PathClassification] = field(default_factory=list, repr=False)
    aux: Optional[AuxiliaryB] = field(default=None, repr=False)

    @property
    def all_pass(self) -> bool:
        """No check failed (skipped-empty and below-theorem records do not count as failures)."""
        return all(c.status != FAIL for c in self.checks)

    def get(self, name: str) -> CheckRecord:
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)

    def lines(self) -> list[str]:
        return [c.line() for c in self.checks]

    def to_dict(self) -> dict:
        return {
            "epsilon": fmt(self.epsilon),
            "beta": self.params.beta,
            "beta_minus": self.params.beta_minus,
            "theorem_params": self.theorem_params,
            "mu_h": self.mu_h,
            "mu_g": self.mu_g,
            "lambda": fmt(self.lam),
            "alpha": fmt(self.alpha),
            "sigma": fmt(self.sigma),
            "augmenting_paths": self.n_paths,
            "t1_paths": self.n_t1,
            "t2_paths": self.n_t2,
            "all_pass": self.all_pass,
            "checks": [c.to_dict() for c in self.checks],
        }


def _checked_maximum(g: Graph, m: Optional[Matching], seed: Optional[int]) -> Matching:
    best = maximum_matching(g, seed)
    if m is None:
        return best
    m.check_in(g)
    if m.size != best.size:
        raise ValueError(f"matching of size {m.size} is not maximum (mu = {best.size})")
    return m


def verify_trace(
    g: Graph,
    h: Graph,
    epsilon: Number,
    params: Optional[EdcsParams] = None,
    seed: Optional[int] = None,
    m: Optional[Matching] = None,
    mstar: Optional[Matching] = None,
) -> ProofTrace:
    """Run the whole argument on (g, h) and record every inequality.

    ``params`` defaults to ``params_for_epsilon(epsilon)``; h must be an EDCS
    for them. ``seed`` picks which maximum matchings M and M* are used unless
    they are passed in; passed matchings must be maximum.
    """
    eps = as_fraction(epsilon)
    if not 0 < eps <= 1:
        raise ValueError(f"epsilon must lie in (0, 1], got {epsilon}")
    if params is None:
        params = params_for_epsilon(eps)
    report = verify_edcs(g, h, params)
    if not report.ok:
        raise ValueError(
            f"h is not a ({params.beta}, {params.beta_minus})-EDCS of g: "
            f"{len(report.p1_violations)} P1 and {len(report.p2_violations)} P2 violations"
        )
    beta, beta_minus = params.beta, params.beta_minus
    thm = params.meets_theorem(eps)
    lam = eps / 10

    m = _checked_maximum(h, m, seed)
    mstar = _checked_maximum(g, mstar, seed)
    mu_h, mu_g = m.size, mstar.size
    ge = decompose(h, m)
    checks: list[CheckRecord] = []

    comp_specials = [
        [v for v in comp if v not in m.mate or m.mate[v] in ge.a_set] for comp in ge.d_components
    ]
    exact_one = sum(1 for s in comp_specials if len(s) == 1)
    checks.append(check("one_special_per_component", exact_one, len(ge.d_components), "=="))
    ge = mark_specials(ge, h, m)
    specials = ge.special_set
    d_minus_s = len(ge.d_set - specials)

    components = decompose_union(m, mstar)
    paths = [c for c in components if c.is_augmenting]
    checks.append(check("augmenting_paths_cover_gap", len(paths), mu_g - mu_h))

    classes = classify_augmenting_paths(g, h, ge, m, mstar, paths)
    for c in classes:
        if not witness_is_valid(c, h, ge):
            raise LemmaViolation(f"witness {c.witnesses} failed re-validation", _dump(g, h, m, mstar, c.path))
    n_t1 = sum(1 for c in classes if c.kind == "T1")
    n_t2 = len(classes) - n_t1
    aux = build_auxiliary_B(g, h, ge, classes)
    w1, w2, w = len(aux.w1), len(aux.w2), len(aux.w)
    z, z_a = len(aux.z), len(aux.z_a)
    alpha = Fraction(w1, w) if w else Fraction(0)
    sigma = Fraction(2 * d_minus_s, w1 * beta_minus) if w1 else Fraction(0)

    # matching size from the Z side
    phi = sum(Fraction(1) if v in ge.a_set else Fraction(0) if v in specials else Fraction(1, 2)
              for v in range(h.n))
    checks.append(check("phi_certificate", phi, mu_h, "=="))
    checks.append(check("mu_h_from_z", mu_h, (Fraction(1, 2) - lam) * z + Fraction(z_a, 2) + lam * d_minus_s))

    # degrees in B
    deg_w, deg_z = aux.w_degrees(), aux.z_degrees()
    worst = max((deg_w[a] + deg_z[b] for a, b in aux.edges), default=0)
    checks.append(check("b_edge_degree", worst, beta, "<="))

    sum_w2 = sum(deg_w[x] for x in aux.w2)
    checks.append(check("w2_edge_count", sum_w2, Fraction(beta_minus, 2) * w2, skip=not w2))
    # B drops the H-edge from a W2 vertex in D to its component's special vertex
    beside_special = sum(1 for x in aux.w2 if any(y in specials for y in h.adj[x]))
    checks.append(check("w2_edge_count_net", sum_w2, Fraction(beta_minus, 2) * w2 - beside_special,
                        skip=not w2))
    checks.append(check("w2_avg_degree", Fraction(sum_w2, w2) if w2 else 0, (1 - lam) * beta / 2, skip=not w2))

    sum_w1 = sum(deg_w[x] for x in aux.w1)
    per_comp: dict[int, int] = {}
    for x in aux.w1:
        per_comp[ge.component_of[x]] = per_comp.get(ge.component_of[x], 0) + 1
    checks.append(check("w1_unique_per_component", max(per_comp.values(), default=0), 1, "<=", skip=not w1))
    checks.append(check("w1_degree_loss", sum_w1, sum(h.degree(x) for x in aux.w1) - d_minus_s, skip=not w1))
    checks.append(check("w1_avg_degree", Fraction(sum_w1, w1) if w1 else 0, (1 - sigma - lam) * beta / 2,
                        skip=not w1))

    # part sizes via the edge-degree bound on B and on B[W1 ∪ Z_A]
    if aux.edges and worst <= beta:
        checks.append(verify_part_size_bound(
            [("w", x) for x in aux.w], [("z", x) for x in aux.z],
            [(("w", a), ("z", b)) for a, b in aux.edges], beta, name="part_size_b"))
    else:
        checks.append(check("part_size_b", z, 0, skip=True))
    w1_edges = [(a, b) for a, b in aux.edges if a in set(aux.w1)]
    if w1_edges and worst <= beta:
        checks.append(verify_part_size_bound(
            [("w", x) for x in aux.w1], [("z", x) for x in aux.z_a],
            [(("w", a), ("z", b)) for a, b in w1_edges], beta, name="part_size_b_w1_za"))
    else:
        checks.append(check("part_size_b_w1_za", z_a, 0, skip=True))

    if w:
        x = alpha * sigma + lam
        checks.append(check("fact_ratio_z", (1 - x) / (1 + x), 1 - 2 * x))
    checks.append(check("z_size", z, (1 - 2 * alpha * sigma - 2 * lam) * w, skip=not w))
    if w1:
        x = sigma + lam
        checks.append(check("fact_ratio_za", (1 - x) / (1 + x), 1 - 2 * x))
    checks.append(check("za_size", z_a, (1 - 2 * sigma - 2 * lam) * w1, skip=not w1))

    # the closing chain; these are only promised under the theorem's parameters
    chain = [
        check("mu_h_vs_paths", mu_h, (2 - 20 * lam) * len(paths)),
        check("final_chain", (3 - 2 * eps) * mu_h, (2 - 2 * eps) * mu_g),
        check("final_bound", mu_h, (Fraction(2, 3) - eps) * mu_g),
    ]
    if not thm:
        chain = [CheckRecord(c.name, c.lhs, c.rhs, c.relation, BELOW) for c in chain]
    checks += chain

    return ProofTrace(
        epsilon=eps, params=params, theorem_params=thm, mu_h=mu_h, mu_g=mu_g,
        lam=lam, alpha=alpha, sigma=sigma, n_paths=len(paths), n_t1=n_t1, n_t2=n_t2,
        checks=checks, classifications=classes, aux=aux,
    )
