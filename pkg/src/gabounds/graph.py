"""Simple undirected graphs and the degree / edge statistics the GA1 bounds use.

Vertices are labelled ``0..n-1``. Edges are stored as sorted ``(u, v)`` pairs
with ``u < v``, in sorted order, so every sum over edges runs in the same order.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable


class GraphError(ValueError):
    """Raised for an invalid graph construction."""


class TrivialGraphError(GraphError):
    """Raised when an operation needs at least one edge."""


@dataclass(frozen=True)
class Graph:
    n: int
    edges: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        if self.n < 1:
            raise GraphError(f"vertex count must be positive, got {self.n}")
        prev = None
        for e in self.edges:
            u, v = e
            if u == v:
                raise GraphError(f"loop edge {e}")
            if not (0 <= u < v < self.n):
                raise GraphError(f"edge {e} out of range or not normalised for n={self.n}")
            if prev is not None and e <= prev:
                raise GraphError("edges must be sorted and unique; use build_graph()")
            prev = e

    @property
    def m(self) -> int:
        return len(self.edges)

    @cached_property
    def adjacency(self) -> tuple[frozenset[int], ...]:
        nbrs: list[set[int]] = [set() for _ in range(self.n)]
        for u, v in self.edges:
            nbrs[u].add(v)
            nbrs[v].add(u)
        return tuple(frozenset(s) for s in nbrs)

    @cached_property
    def degrees(self) -> tuple[int, ...]:
        return tuple(len(s) for s in self.adjacency)

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adjacency[u]

    def edge_degrees(self) -> Iterable[tuple[int, int]]:
        """Yield ``(d_u, d_v)`` with ``d_u <= d_v`` for every edge, in edge order."""
        deg = self.degrees
        for u, v in self.edges:
            a, b = deg[u], deg[v]
            yield (a, b) if a <= b else (b, a)

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={list(self.edges)})"


def build_graph(n: int, edge_list: Iterable[tuple[int, int]]) -> Graph:
    """Build a simple graph on ``n`` vertices, dropping duplicate edges.

    Raises GraphError on a loop or an endpoint outside ``0..n-1``.
    """
    if n < 1:
        raise GraphError(f"vertex count must be positive, got {n}")
    seen: set[tuple[int, int]] = set()
    for pair in edge_list:
        u, v = (int(x) for x in pair)
        if u == v:
            raise GraphError(f"loop edge ({u}, {v})")
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge ({u}, {v}) has a vertex outside 0..{n - 1}")
        seen.add((u, v) if u < v else (v, u))
    return Graph(n, tuple(sorted(seen)))


# -- small named families, handy in tests and examples ----------------------

def complete_graph(n: int) -> Graph:
    return build_graph(n, ((u, v) for u in range(n) for v in range(u + 1, n)))


def path_graph(n: int) -> Graph:
    return build_graph(n, ((i, i + 1) for i in range(n - 1)))


def cycle_graph(n: int) -> Graph:
    return build_graph(n, [(i, (i + 1) % n) for i in range(n)])


def star_graph(leaves: int) -> Graph:
    """K_{1,leaves} with centre 0."""
    return build_graph(leaves + 1, ((0, i) for i in range(1, leaves + 1)))


def complete_bipartite(p: int, q: int) -> Graph:
    return build_graph(p + q, ((i, p + j) for i in range(p) for j in range(q)))


def disjoint_union(*graphs: Graph) -> Graph:
    edges = []
    offset = 0
    for g in graphs:
        edges.extend((u + offset, v + offset) for u, v in g.edges)
        offset += g.n
    return build_graph(offset, edges)


# -- degree profile -------------------------------------------------------------

@dataclass(frozen=True)
class DegreeProfile:
    """Degree statistics of a nontrivial graph.

    ``n_i[i]`` counts vertices of degree ``delta + i`` for ``0 <= i <= k``.
    ``m0`` counts edges whose lower-degree endpoint is pendant (degree 1).
    """

    n: int
    m: int
    degrees: tuple[int, ...]
    delta: int
    Delta: int
    n_i: tuple[int, ...]
    delta1: int | None
    m0: int

    @property
    def k(self) -> int:
        return self.Delta - self.delta

    @property
    def regular(self) -> bool:
        return self.k == 0


def _require_edges(g: Graph) -> None:
    if g.m == 0:
        raise TrivialGraphError("trivial graph: the edge set is empty")


def degree_profile(g: Graph) -> DegreeProfile:
    _require_edges(g)
    deg = g.degrees
    delta, Delta = min(deg), max(deg)
    n_i = [0] * (Delta - delta + 1)
    for d in deg:
        n_i[d - delta] += 1
    non_pendant = [d for d in deg if d >= 2]
    m0 = sum(1 for a, _ in g.edge_degrees() if a == 1)
    return DegreeProfile(
        n=g.n,
        m=g.m,
        degrees=deg,
        delta=delta,
        Delta=Delta,
        n_i=tuple(n_i),
        delta1=min(non_pendant) if non_pendant else None,
        m0=m0,
    )


# -- edge partitions ----------------------------------------------------------------

@dataclass(frozen=True)
class EdgePartitions:
    """Edge counts by degree class, indexed by ``i`` in ``0..k``.

    Edges are oriented from the lower-degree endpoint (tail) to the higher one
    (head); edges between equal degrees are counted only in ``c``.
    ``a[k]`` and ``b[0]`` are always zero, which keeps every tuple length ``k+1``.
    """

    delta: int
    k: int
    m_ij: tuple[tuple[int, ...], ...]
    a: tuple[int, ...]
    b: tuple[int, ...]
    c: tuple[int, ...]
    e: tuple[int, ...]

    @property
    def m_tail(self) -> tuple[int, ...]:
        """m_i: oriented edges whose tail has degree delta+i."""
        return tuple(x + y for x, y in zip(self.a, self.c))

    @property
    def m_head(self) -> tuple[int, ...]:
        """m'_i: oriented edges whose head has degree delta+i."""
        return tuple(x + y for x, y in zip(self.b, self.c))

    @property
    def d_min(self) -> int:
        return min(i for i, x in enumerate(self.e) if x)

    @property
    def D_max(self) -> int:
        return max(i for i, x in enumerate(self.e) if x)


def edge_partitions(g: Graph) -> EdgePartitions:
    _require_edges(g)
    deg = g.degrees
    delta, Delta = min(deg), max(deg)
    k = Delta - delta
    table = [[0] * (k + 1) for _ in range(k + 1)]
    a = [0] * (k + 1)
    b = [0] * (k + 1)
    c = [0] * (k + 1)
    e = [0] * (k + 1)
    for lo, hi in g.edge_degrees():
        i, j = lo - delta, hi - delta
        table[i][j] += 1
        if i != j:
            table[j][i] += 1
            a[i] += 1
            b[j] += 1
        else:
            c[i] += 1
        e[j - i] += 1
    return EdgePartitions(
        delta=delta,
        k=k,
        m_ij=tuple(tuple(row) for row in table),
        a=tuple(a),
        b=tuple(b),
        c=tuple(c),
        e=tuple(e),
    )


# -- components and structure classes ----------------------------------------------

def connected_components(g: Graph) -> list[frozenset[int]]:
    """Vertex sets of the connected components, ordered by smallest vertex."""
    seen = [False] * g.n
    comps = []
    for s in range(g.n):
        if seen[s]:
            continue
        seen[s] = True
        comp = [s]
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for w in g.adjacency[u]:
                if not seen[w]:
                    seen[w] = True
                    comp.append(w)
                    queue.append(w)
        comps.append(frozenset(comp))
    return comps


def is_connected(g: Graph) -> bool:
    return len(connected_components(g)) == 1


def edge_lambda(du: int, dv: int) -> int:
    """d_u d_v (d_u + d_v)^2 as an exact integer."""
    return du * dv * (du + dv) ** 2


def _biregular_pair(degs: Iterable[int], pairs: Iterable[tuple[int, int]]) -> tuple[int, int] | None:
    values = set(degs)
    if len(values) != 2:
        return None
    lo, hi = sorted(values)
    if all(x == lo and y == hi for x, y in pairs):
        return (lo, hi)
    return None


@dataclass(frozen=True)
class StructureClasses:
    regular: bool
    biregular: bool
    biregular_degrees: tuple[int, int] | None
    complete: bool
    star: bool
    connected: bool
    in_G1: bool
    in_G2: bool
    in_G3: bool
    in_G1_0: bool
    in_G2_0: bool
    bipartite_delta_Delta: bool
    lambda_constant: bool
    lambda_value: int | None
    components_regular: bool
    components_regular_or_biregular: bool


def classify_structure(g: Graph) -> StructureClasses:
    _require_edges(g)
    deg = g.degrees
    delta, Delta = min(deg), max(deg)
    pairs = list(g.edge_degrees())
    n, m = g.n, g.m

    regular = delta == Delta
    bireg = _biregular_pair(deg, pairs)
    lambdas = {edge_lambda(x, y) for x, y in pairs}

    comps = connected_components(g)
    comp_regular = []
    comp_regular_or_bireg = []
    for comp in comps:
        cdeg = [deg[v] for v in comp]
        reg = min(cdeg) == max(cdeg)
        comp_regular.append(reg)
        if reg:
            comp_regular_or_bireg.append(True)
            continue
        cpairs = [p for p, (u, v) in zip(pairs, g.edges) if u in comp]
        comp_regular_or_bireg.append(_biregular_pair(cdeg, cpairs) is not None)

    return StructureClasses(
        regular=regular,
        biregular=bireg is not None,
        biregular_degrees=bireg,
        complete=m == n * (n - 1) // 2,
        star=n >= 2 and m == n - 1 and Delta == n - 1,
        connected=len(comps) == 1,
        in_G1=all(x == y or y == Delta for x, y in pairs),
        in_G2=all(x == y or x == delta for x, y in pairs),
        in_G3=all(y - x <= 1 for x, y in pairs),
        in_G1_0=all(y == Delta for _, y in pairs),
        in_G2_0=all(x == delta for x, _ in pairs),
        bipartite_delta_Delta=Delta > delta and all(x == delta and y == Delta for x, y in pairs),
        lambda_constant=len(lambdas) == 1,
        lambda_value=next(iter(lambdas)) if len(lambdas) == 1 else None,
        components_regular=all(comp_regular),
        components_regular_or_biregular=all(comp_regular_or_bireg),
    )
