"""Link quivers, separated quivers, Dynkin recognition and the finite-type verdict."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field as dc_field
from typing import Sequence

from .coalgebra import Coalgebra
from .errors import CriteriaDisagree
from .fusion import require_dual_chevalley
from .hopf import HopfAlgebra
from .linalg import Subspace, subspace_sum
from .primitives import arrow_matrix
from .semisimple import SimpleDecomp, simple_subcoalgebras

COSEMISIMPLE, FINITE, INFINITE = "COSEMISIMPLE", "FINITE", "INFINITE"


@dataclass(frozen=True)
class LinkQuiver:
    labels: tuple
    ranks: tuple  # r per vertex
    arrows: tuple  # arrows[to][frm]

    @property
    def n(self) -> int:
        return len(self.labels)

    def count(self, frm: int, to: int) -> int:
        return self.arrows[to][frm]

    def in_degree(self, v: int) -> int:
        return sum(self.arrows[v])

    def out_degree(self, v: int) -> int:
        return sum(row[v] for row in self.arrows)

    @property
    def total_arrows(self) -> int:
        return sum(map(sum, self.arrows))

    def edge_list(self) -> list[tuple[int, int]]:
        """Arrows (frm, to) with multiplicity, in a fixed order."""
        return [(j, i) for j in range(self.n) for i in range(self.n) for _ in range(self.arrows[i][j])]

    def to_json(self) -> dict:
        return {"labels": list(self.labels), "ranks": list(self.ranks),
                "arrows": [list(r) for r in self.arrows]}


def build_link_quiver(coalg: Coalgebra, decomp: SimpleDecomp | None = None) -> LinkQuiver:
    """Link quiver; for a Hopf algebra the dual Chevalley property is required."""
    if isinstance(coalg, HopfAlgebra):
        require_dual_chevalley(coalg)
    decomp = decomp or simple_subcoalgebras(coalg)
    a = arrow_matrix(coalg, decomp)
    return LinkQuiver(tuple(decomp.labels()), tuple(b.r for b in decomp), tuple(tuple(r) for r in a))


def basic_cycle(n: int) -> LinkQuiver:
    arrows = [[1 if (i - j) % n == 1 or (n == 1) else 0 for j in range(n)] for i in range(n)]
    return LinkQuiver(tuple(f"v{i}" for i in range(n)), (1,) * n, tuple(tuple(r) for r in arrows))


def is_basic_cycle(q: LinkQuiver) -> bool:
    """Connected, every vertex with exactly one incoming and one outgoing arrow."""
    if q.n == 0 or not all(q.in_degree(v) == 1 and q.out_degree(v) == 1 for v in range(q.n)):
        return False
    return len(components(q)) == 1


# --------------------------------------------------------------------------
# undirected graphs and components


def _components(n: int, edges: Sequence[tuple[int, int]]) -> list[list[int]]:
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for a, b in edges:
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[max(ra, rb)] = min(ra, rb)
    groups: dict[int, list[int]] = {}
    for v in range(n):
        groups.setdefault(find(v), []).append(v)
    return sorted(groups.values())


def components(q: LinkQuiver) -> list[list[int]]:
    """Connected components of the underlying graph; the one containing vertex 0 comes first."""
    return _components(q.n, q.edge_list())


# --------------------------------------------------------------------------
# separated quiver and Dynkin recognition


@dataclass(frozen=True)
class SeparatedQuiver:
    n: int  # vertices 0..n-1 unprimed, n..2n-1 primed
    edges: tuple  # (i, n + j) for every arrow i -> j


def separated_quiver(q: LinkQuiver) -> SeparatedQuiver:
    return SeparatedQuiver(q.n, tuple((frm, q.n + to) for frm, to in q.edge_list()))


@dataclass(frozen=True)
class GraphType:
    name: str  # e.g. "A4", "D5", "E6", "~A3", "~E7", or "NOT_DYNKIN"
    dynkin: bool
    euclidean: bool
    vertices: tuple


def _arm_lengths(adj: dict[int, list[int]], center: int) -> list[int]:
    lengths = []
    for start in adj[center]:
        prev, cur, length = center, start, 1
        while len(adj[cur]) == 2:
            nxt = adj[cur][0] if adj[cur][0] != prev else adj[cur][1]
            prev, cur = cur, nxt
            length += 1
        if len(adj[cur]) > 2:
            return []  # reached another branch vertex
        lengths.append(length)
    return sorted(lengths)


def classify_graph(vertices: Sequence[int], edges: Sequence[tuple[int, int]]) -> GraphType:
    """Classify a connected undirected multigraph (loops allowed) as Dynkin, Euclidean or neither."""
    vs = tuple(sorted(vertices))
    n = len(vs)

    def result(name, dynkin=False, euclidean=False):
        return GraphType(name, dynkin, euclidean, vs)

    loops = [e for e in edges if e[0] == e[1]]
    multiplicity = Counter(tuple(sorted(e)) for e in edges if e[0] != e[1])
    if loops:
        if n == 1 and len(loops) == 1 and not multiplicity:
            return result("~A0", euclidean=True)
        return result("NOT_DYNKIN")
    if any(m > 1 for m in multiplicity.values()):
        if n == 2 and list(multiplicity.values()) == [2]:
            return result("~A1", euclidean=True)
        return result("NOT_DYNKIN")
    adj: dict[int, list[int]] = {v: [] for v in vs}
    for a, b in multiplicity:
        adj[a].append(b)
        adj[b].append(a)
    m = len(multiplicity)
    degrees = sorted(len(adj[v]) for v in vs)
    if m == n and all(d == 2 for d in degrees):
        return result(f"~A{n - 1}", euclidean=True)
    if m != n - 1:
        return result("NOT_DYNKIN")
    # tree
    if degrees[-1] <= 2:
        return result(f"A{n}", dynkin=True)
    branch = [v for v in vs if len(adj[v]) >= 3]
    if len(branch) == 1:
        c = branch[0]
        if len(adj[c]) == 4:
            arms = _arm_lengths(adj, c)
            return result("~D4", euclidean=True) if arms == [1, 1, 1, 1] else result("NOT_DYNKIN")
        if len(adj[c]) > 4:
            return result("NOT_DYNKIN")
        arms = _arm_lengths(adj, c)
        p, q, r = arms
        if (p, q) == (1, 1):
            return result(f"D{n}", dynkin=True)
        known = {(1, 2, 2): ("E6", True), (1, 2, 3): ("E7", True), (1, 2, 4): ("E8", True),
                 (2, 2, 2): ("~E6", False), (1, 3, 3): ("~E7", False), (1, 2, 5): ("~E8", False)}
        if (p, q, r) in known:
            name, dyn = known[(p, q, r)]
            return result(name, dynkin=dyn, euclidean=not dyn)
        return result("NOT_DYNKIN")
    if len(branch) == 2 and all(len(adj[b]) == 3 for b in branch):
        leaves_ok = all(sum(1 for u in adj[b] if len(adj[u]) == 1) == 2 for b in branch)
        if leaves_ok:
            return result(f"~D{n - 1}", euclidean=True)
    return result("NOT_DYNKIN")


def dynkin_components(g: SeparatedQuiver) -> list[GraphType]:
    total = 2 * g.n
    return [classify_graph(comp, [e for e in g.edges if e[0] in comp])
            for comp in _components(total, list(g.edges))]


def is_dynkin_union(g: SeparatedQuiver) -> tuple[bool, list[GraphType]]:
    comps = dynkin_components(g)
    return all(c.dynkin for c in comps), comps


# --------------------------------------------------------------------------
# verdict


@dataclass
class Criteria:
    """The three quiver-level conditions equivalent to finite type (for non-cosemisimple input)."""

    every_vertex_in_out_one: bool
    unique_arrow_into_unit_from_rank_one: bool
    unique_arrow_out_of_unit_to_rank_one: bool
    arrows_into_unit: list
    arrows_out_of_unit: list
    offending_vertices: list

    @property
    def values(self) -> tuple[bool, bool, bool]:
        return (self.every_vertex_in_out_one, self.unique_arrow_into_unit_from_rank_one,
                self.unique_arrow_out_of_unit_to_rank_one)

    def agree(self) -> bool:
        return len(set(self.values)) == 1


def evaluate_criteria(q: LinkQuiver, unit: int = 0) -> Criteria:
    c2 = all(q.in_degree(v) == 1 and q.out_degree(v) == 1 for v in range(q.n))
    into = [(q.labels[j], q.ranks[j], q.arrows[unit][j]) for j in range(q.n) if q.arrows[unit][j]]
    out = [(q.labels[i], q.ranks[i], q.arrows[i][unit]) for i in range(q.n) if q.arrows[i][unit]]
    c3 = len(into) == 1 and into[0][2] == 1 and into[0][1] == 1
    c4 = len(out) == 1 and out[0][2] == 1 and out[0][1] == 1
    offending = [(q.labels[v], q.in_degree(v), q.out_degree(v)) for v in range(q.n)
                 if not (q.in_degree(v) == 1 and q.out_degree(v) == 1)]
    return Criteria(c2, c3, c4, into, out, offending)


@dataclass
class Verdict:
    kind: str
    criteria: Criteria
    conakayama: bool
    separated_all_dynkin: bool
    separated_components: list = dc_field(default_factory=list)

    @property
    def summary(self) -> str:
        return {COSEMISIMPLE: "cosemisimple",
                FINITE: "finite corepresentation type",
                INFINITE: "infinite corepresentation type"}[self.kind]

    def to_json(self) -> dict:
        c = self.criteria
        return {
            "kind": self.kind,
            "criteria": {
                "in_out_degree_one": c.every_vertex_in_out_one,
                "unique_arrow_into_k1_from_rank_one": c.unique_arrow_into_unit_from_rank_one,
                "unique_arrow_out_of_k1_to_rank_one": c.unique_arrow_out_of_unit_to_rank_one,
            },
            "arrows_into_k1": [{"source": s, "r": r, "count": k} for s, r, k in c.arrows_into_unit],
            "arrows_out_of_k1": [{"target": s, "r": r, "count": k} for s, r, k in c.arrows_out_of_unit],
            "offending_vertices": [{"vertex": v, "in": i, "out": o} for v, i, o in c.offending_vertices],
            "conakayama": self.conakayama,
            "separated_quiver": {
                "all_dynkin": self.separated_all_dynkin,
                "components": sorted(Counter(g.name for g in self.separated_components).items()),
            },
        }


def quiver_verdict(q: LinkQuiver, cosemisimple: bool, unit: int = 0) -> Verdict:
    crit = evaluate_criteria(q, unit)
    if not crit.agree():
        raise CriteriaDisagree(f"criteria evaluate to {crit.values}")
    all_dyn, comps = is_dynkin_union(separated_quiver(q))
    if cosemisimple:
        kind = COSEMISIMPLE
    else:
        kind = FINITE if crit.every_vertex_in_out_one else INFINITE
    if kind == FINITE and not all(g.name == "A2" for g in comps):
        raise CriteriaDisagree("finite verdict but the separated quiver is not a union of A2")
    return Verdict(kind, crit, crit.every_vertex_in_out_one, all_dyn, comps)


def verdict(h: HopfAlgebra, quiver: LinkQuiver | None = None) -> Verdict:
    require_dual_chevalley(h)
    quiver = quiver or build_link_quiver(h)
    return quiver_verdict(quiver, h.is_cosemisimple())


# --------------------------------------------------------------------------
# the component containing k1


@dataclass(frozen=True)
class UnitComponent:
    vertices: tuple
    space: Subspace
    pointed: bool


def h1_component(h: Coalgebra, quiver: LinkQuiver | None = None,
                 decomp: SimpleDecomp | None = None) -> UnitComponent:
    """The link-indecomposable component through vertex 0: the wedge closure
    D_n = D_{n-1} ^ D_0 of the sum D_0 of the simples in that component."""
    if isinstance(h, HopfAlgebra):
        require_dual_chevalley(h)
    decomp = decomp or simple_subcoalgebras(h)
    quiver = quiver or build_link_quiver(h, decomp)
    comp = next(c for c in components(quiver) if 0 in c)
    d0 = Subspace.zero(h.field, h.dim)
    for v in comp:
        d0 = subspace_sum(d0, decomp[v].space)
    layer = d0
    for _ in range(h.dim + 1):
        nxt = h.wedge(layer, d0)
        if nxt == layer:
            break
        layer = nxt
    pointed = all(quiver.ranks[v] == 1 for v in comp)
    return UnitComponent(tuple(comp), layer, pointed)


# --------------------------------------------------------------------------
# degree statistics


def degree_report(q: LinkQuiver, unit: int = 0) -> dict:
    unit_in = q.in_degree(unit)
    rows = []
    for v in range(q.n):
        i, o = q.in_degree(v), q.out_degree(v)
        rows.append({"vertex": q.labels[v], "in": i, "out": o, "in_equals_out": i == o,
                     "divisible_by_k1_in": (i % unit_in == 0) if unit_in else None})
    return {
        "vertices": rows,
        "in_equals_out_everywhere": all(r["in_equals_out"] for r in rows),
        "k1_in_degree_divides_all": all(r["divisible_by_k1_in"] for r in rows) if unit_in else None,
    }


def to_dot(q: LinkQuiver, unit: int = 0, name: str = "Q") -> str:
    comp = next((c for c in components(q) if unit in c), [])
    lines = [f'digraph "{name}" {{']
    lines.append("  subgraph cluster_k1 {")
    lines.append('    label="component of k1";')
    for v in comp:
        lines.append(f'    n{v} [label="{q.labels[v]} (r={q.ranks[v]})"];')
    lines.append("  }")
    for v in range(q.n):
        if v not in comp:
            lines.append(f'  n{v} [label="{q.labels[v]} (r={q.ranks[v]})"];')
    for frm, to in q.edge_list():
        lines.append(f"  n{frm} -> n{to};")
    lines.append("}")
    return "\n".join(lines) + "\n"


# --------------------------------------------------------------------------
# arrows versus multiplicities


@dataclass
class ArrowFusionCheck:
    applicable: bool
    k: int | None
    failures: list

    @property
    def ok(self) -> bool:
        return self.applicable and not self.failures


def arrow_fusion_check(q: LinkQuiver, table, unit: int = 0) -> ArrowFusionCheck:
    """When exactly one arrow enters k1, with source C_k, compare the quiver
    with multiplications by C_k: in-degree(C_i) = beta_ik, out-degree(C_i) =
    sum_t alpha_{i,k*}^t, and #(C_t -> C_i) = alpha_ik^t = alpha_{t,k*}^i."""
    sources = [(j, q.arrows[unit][j]) for j in range(q.n) if q.arrows[unit][j]]
    if len(sources) != 1 or sources[0][1] != 1:
        return ArrowFusionCheck(False, None, [])
    k = sources[0][0]
    ks = table.involution[k]
    failures = []
    for i in range(q.n):
        if q.in_degree(i) != table.beta(i, k):
            failures.append(("in-degree", q.labels[i], q.in_degree(i), table.beta(i, k)))
        if q.out_degree(i) != table.beta(i, ks):
            failures.append(("out-degree", q.labels[i], q.out_degree(i), table.beta(i, ks)))
        for t in range(q.n):
            a = table.alpha[i][k][t]
            if q.count(t, i) != a:
                failures.append(("arrows", q.labels[t], q.labels[i], q.count(t, i), a))
            if a != table.alpha[t][ks][i]:
                failures.append(("symmetry", q.labels[i], q.labels[t], a, table.alpha[t][ks][i]))
    return ArrowFusionCheck(True, k, failures)
