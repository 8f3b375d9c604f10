"""Exhaustive small-graph enumeration and verification of every bound.

Canonical forms are brute force: the labelling whose graph6 bit string
(columns j = 1..n-1, rows 0..j-1) is lexicographically smallest over all
vertex permutations. A depth-first search fixes one position at a time and
abandons any prefix that already compares worse than the best found, which is
fast enough up to n = 8.
"""

from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Iterator, Sequence

from .bounds import BoundEvaluation, evaluate_all, sort_key
from .graph import Graph, build_graph, classify_structure, is_connected
from .graph6 import to_graph6
from .indices import DEFAULT_ALPHAS

N_MAX_LIMIT = 8


# -- canonical form ------------------------------------------------------------------

def canonical_labeling(g: Graph) -> tuple[int, ...]:
    """Permutation ``p`` (position -> vertex) giving the minimal adjacency string."""
    n = g.n
    if n == 1:
        return (0,)
    adj = g.adjacency
    best: list[int] | None = None
    best_perm: tuple[int, ...] = ()
    perm: list[int] = []
    cols: list[int] = []
    used = [False] * n

    def column(v: int) -> int:
        c = 0
        for u in perm:
            c = (c << 1) | (u in adj[v])
        return c

    def search(depth: int) -> None:
        nonlocal best, best_perm
        if depth == n:
            if best is None or cols < best:
                best = list(cols)
                best_perm = tuple(perm)
            return
        for c, v in sorted((column(v), v) for v in range(n) if not used[v]):
            # Candidates ascend in c, so the first prefix worse than best ends the loop.
            if best is not None and cols + [c] > best[: depth + 1]:
                break
            used[v] = True
            perm.append(v)
            cols.append(c)
            search(depth + 1)
            cols.pop()
            perm.pop()
            used[v] = False

    search(0)
    return best_perm


def relabel(g: Graph, perm: Sequence[int]) -> Graph:
    """Graph whose vertex ``i`` is ``perm[i]`` of ``g``."""
    pos = {v: i for i, v in enumerate(perm)}
    return build_graph(g.n, ((pos[u], pos[v]) for u, v in g.edges))


def canonical_form(g: Graph) -> Graph:
    return relabel(g, canonical_labeling(g))


def certificate(g: Graph) -> str:
    """graph6 string of the canonical representative."""
    return to_graph6(canonical_form(g))


# -- enumeration -----------------------------------------------------------------------

@dataclass(frozen=True)
class EnumerationSpec:
    n_max: int
    connected_only: bool = True
    alphas: tuple[float, ...] = DEFAULT_ALPHAS

    def __post_init__(self) -> None:
        if not (2 <= self.n_max <= N_MAX_LIMIT):
            raise ValueError(f"n_max must be in 2..{N_MAX_LIMIT}, got {self.n_max}")
        object.__setattr__(self, "alphas", tuple(float(a) for a in self.alphas))


@lru_cache(maxsize=None)
def all_graphs(n: int) -> tuple[Graph, ...]:
    """Canonical representatives of every graph on ``n`` vertices (edgeless included).

    Built by adding vertex ``n-1`` to each graph on ``n-1`` vertices with every
    possible neighbourhood and keeping the first child of each canonical class.
    """
    if n < 1 or n > N_MAX_LIMIT:
        raise ValueError(f"n must be in 1..{N_MAX_LIMIT}")
    if n == 1:
        return (build_graph(1, ()),)
    found: dict[str, Graph] = {}
    for parent in all_graphs(n - 1):
        for mask in range(1 << (n - 1)):
            new = [(u, n - 1) for u in range(n - 1) if mask >> u & 1]
            child = build_graph(n, parent.edges + tuple(new))
            canon = canonical_form(child)
            found.setdefault(to_graph6(canon), canon)
    return tuple(found[c] for c in sorted(found))


def enumerate_graphs(spec: EnumerationSpec) -> Iterator[Graph]:
    """One canonical representative per isomorphism class, 2 <= n <= n_max, m >= 1."""
    for n in range(2, spec.n_max + 1):
        for g in all_graphs(n):
            if g.m == 0:
                continue
            if spec.connected_only and not is_connected(g):
                continue
            yield g


# -- exhaustive verification ----------------------------------------------------------------

@dataclass(frozen=True)
class Violation:
    certificate: str
    bound_id: str
    side: str
    lower: float | None
    value: float
    upper: float | None


@dataclass(frozen=True)
class Mismatch:
    certificate: str
    bound_id: str
    side: str
    numeric: bool
    structural: bool


@dataclass
class VerificationReport:
    """Aggregate of ``evaluate_all`` over a graph collection.

    Failed side checks (improvement chains, self-consistency identities) are
    listed among the violations with side ``"check:<name>"``.
    """

    graphs_checked: int = 0
    violations: list[Violation] = field(default_factory=list)
    characterization_mismatches: list[Mismatch] = field(default_factory=list)
    tightness_census: dict[str, dict[str, int]] = field(default_factory=dict)
    parameters: dict[str, object] = field(default_factory=dict)

    @property
    def confirmed(self) -> bool:
        return not self.violations and not self.characterization_mismatches

    def add(self, cert: str, evaluations: Iterable[BoundEvaluation]) -> None:
        self.graphs_checked += 1
        for ev in evaluations:
            if ev.inapplicable is not None:
                continue
            census = self.tightness_census.setdefault(ev.bound_id, {"evaluated": 0, "lower": 0, "upper": 0})
            census["evaluated"] += 1
            if not ev.holds:
                self.violations.append(Violation(cert, ev.bound_id, "bound", ev.lower, ev.value, ev.upper))
            for name, ok in ev.checks.items():
                if not ok:
                    self.violations.append(Violation(cert, ev.bound_id, f"check:{name}", ev.lower, ev.value, ev.upper))
            for side in ("lower", "upper"):
                bound, tight, structural, agree = ev.side(side)
                if bound is None:
                    continue
                if tight:
                    census[side] += 1
                if agree is False:
                    self.characterization_mismatches.append(Mismatch(cert, ev.bound_id, side, tight, structural))

    def merge(self, other: VerificationReport) -> None:
        self.graphs_checked += other.graphs_checked
        self.violations.extend(other.violations)
        self.characterization_mismatches.extend(other.characterization_mismatches)
        for bid, counts in other.tightness_census.items():
            mine = self.tightness_census.setdefault(bid, {"evaluated": 0, "lower": 0, "upper": 0})
            for key, val in counts.items():
                mine[key] += val

    def finalize(self) -> VerificationReport:
        self.violations.sort(key=lambda v: (v.certificate, v.bound_id, v.side))
        self.characterization_mismatches.sort(key=lambda v: (v.certificate, v.bound_id, v.side))
        order = sorted(self.tightness_census, key=sort_key)
        self.tightness_census = {k: self.tightness_census[k] for k in order}
        return self


def _verify_chunk(graphs: Sequence[Graph], alphas: tuple[float, ...]) -> VerificationReport:
    report = VerificationReport()
    for g in graphs:
        report.add(certificate(g), evaluate_all(g, alphas))
    return report


def verify_graphs(
    graphs: Iterable[Graph],
    alphas: Iterable[float] = DEFAULT_ALPHAS,
    workers: int = 1,
    parameters: dict[str, object] | None = None,
) -> VerificationReport:
    """Evaluate every bound on every graph; the result is independent of ``workers``."""
    graphs = [g for g in graphs if g.m > 0]
    alphas = tuple(float(a) for a in alphas)
    report = VerificationReport(parameters=dict(parameters or {}))
    report.parameters.setdefault("alphas", list(alphas))
    if workers <= 1 or len(graphs) < 2 * workers:
        report.merge(_verify_chunk(graphs, alphas))
    else:
        size = math.ceil(len(graphs) / workers)
        chunks = [graphs[i : i + size] for i in range(0, len(graphs), size)]
        with ProcessPoolExecutor(max_workers=workers) as pool:
            for part in pool.map(_verify_chunk, chunks, [alphas] * len(chunks)):
                report.merge(part)
    return report.finalize()


def verify_exhaustive(spec: EnumerationSpec, workers: int = 1) -> VerificationReport:
    params = {"n_max": spec.n_max, "connected_only": spec.connected_only, "alphas": list(spec.alphas)}
    return verify_graphs(enumerate_graphs(spec), spec.alphas, workers, params)


# -- constant-lambda graphs --------------------------------------------------------------------

@dataclass(frozen=True)
class LambdaEntry:
    graph: Graph
    certificate: str
    lam: int
    confirmed: bool  # every component regular or biregular


def lambda_census(spec: EnumerationSpec) -> list[LambdaEntry]:
    """Enumerated graphs on which d_u d_v (d_u + d_v)^2 is constant over the edges."""
    out = []
    for g in enumerate_graphs(spec):
        cls = classify_structure(g)
        if cls.lambda_constant:
            out.append(LambdaEntry(g, certificate(g), cls.lambda_value, cls.components_regular_or_biregular))
    return out


# -- Pythagorean construction --------------------------------------------------------------------

class PythagoreanError(ValueError):
    pass


@dataclass(frozen=True)
class PythagoreanPair:
    """Two degree pairs (a, b) != (c, d) with ab(a+b)^2 == cd(c+d)^2."""

    triple1: tuple[int, int, int]
    triple2: tuple[int, int, int]
    a: int
    b: int
    c: int
    d: int
    lam: int


def _check_triple(t: Sequence[int], name: str) -> tuple[int, int, int]:
    if len(t) != 3 or not all(isinstance(x, int) and x > 0 for x in t):
        raise PythagoreanError(f"{name} must be three positive integers, got {tuple(t)}")
    x, y, z = t
    if x * x + y * y != z * z:
        raise PythagoreanError(f"{name}={tuple(t)} is not a Pythagorean triple: {x}^2 + {y}^2 != {z}^2")
    return x, y, z


def pythagorean_pair(t1: Sequence[int], t2: Sequence[int]) -> PythagoreanPair:
    """a = g2 a1^2, b = g2 b1^2, c = g1 a2^2, d = g1 b2^2 from triples with a1 b1 = a2 b2."""
    a1, b1, g1 = _check_triple(t1, "t1")
    a2, b2, g2 = _check_triple(t2, "t2")
    if a1 * b1 != a2 * b2:
        raise PythagoreanError(f"leg products differ: {a1}*{b1}={a1 * b1} vs {a2}*{b2}={a2 * b2}")
    a, b, c, d = g2 * a1 * a1, g2 * b1 * b1, g1 * a2 * a2, g1 * b2 * b2
    if {a, b} == {c, d}:
        raise PythagoreanError(f"the two pairs coincide: {{{a}, {b}}}")
    lam = a * b * (a + b) ** 2
    closed = a1**2 * b1**2 * g1**4 * g2**4
    if c * d * (c + d) ** 2 != lam or lam != closed:
        raise PythagoreanError("ab(a+b)^2 = cd(c+d)^2 identity failed")
    return PythagoreanPair((a1, b1, g1), (a2, b2, g2), a, b, c, d, lam)
