"""GA1 and the companion degree-based indices that appear in its bounds."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Iterable, Mapping

from .graph import Graph, TrivialGraphError, edge_partitions

DEFAULT_ALPHAS: tuple[float, ...] = (-2.0, -1.0, -0.5, 0.0, 0.5, 1.0, 2.0)


def helper_f(t: float) -> float:
    """2t / (1 + t^2) on [0, inf); maximal (= 1) exactly at t = 1."""
    if t < 0:
        raise ValueError(f"f is defined on t >= 0, got {t}")
    return 2.0 * t / (1.0 + t * t)


def helper_g(x: float, y: float) -> float:
    """Geometric over arithmetic mean, 2 sqrt(xy) / (x + y)."""
    if x <= 0 or y <= 0:
        raise ValueError(f"g needs x, y > 0, got ({x}, {y})")
    return 2.0 * math.sqrt(x * y) / (x + y)


def helper_h(x: float, y: float) -> float:
    """Harmonic mean 2xy / (x + y)."""
    if x <= 0 or y <= 0:
        raise ValueError(f"h needs x, y > 0, got ({x}, {y})")
    return 2.0 * x * y / (x + y)


def _nontrivial(g: Graph) -> None:
    if g.m == 0:
        raise TrivialGraphError("trivial graph: the edge set is empty")


def ga1(g: Graph) -> float:
    """Sum over edges of 2 sqrt(d_u d_v) / (d_u + d_v)."""
    _nontrivial(g)
    return sum(2.0 * math.sqrt(x * y) / (x + y) for x, y in g.edge_degrees())


def ga1_by_classes(g: Graph) -> float:
    """GA1 regrouped by degree classes: each m_ij weighted by g(delta+i, delta+j)."""
    parts = edge_partitions(g)
    delta, table = parts.delta, parts.m_ij
    total = 0.0
    for i in range(parts.k + 1):
        total += table[i][i]
        for j in range(i + 1, parts.k + 1):
            if table[i][j]:
                x, y = delta + i, delta + j
                total += 2.0 * table[i][j] * math.sqrt(x * y) / (x + y)
    return total


def _power_sum(values: Iterable[int], alpha: float, fast: bool = True) -> float:
    # Integer exponents go through exact integer powers before the float division.
    a = float(alpha)
    if fast and a.is_integer() and abs(a) <= 64:
        p = int(a)
        if p >= 0:
            return float(sum(v**p for v in values))
        return sum(1.0 / v**-p for v in values)
    return sum(float(v) ** a for v in values)


def variable_zagreb(g: Graph, alpha: float, *, fast: bool = True) -> float:
    """Z_alpha = sum over edges of (d_u d_v)^alpha.

    ``fast=False`` forces the float-power route even for integer alpha.
    """
    _nontrivial(g)
    return _power_sum((x * y for x, y in g.edge_degrees()), alpha, fast)


def sum_connectivity(g: Graph, alpha: float, *, fast: bool = True) -> float:
    """H_alpha = sum over edges of (d_u + d_v)^alpha."""
    _nontrivial(g)
    return _power_sum((x + y for x, y in g.edge_degrees()), alpha, fast)


def first_zagreb(g: Graph) -> float:
    _nontrivial(g)
    return float(sum(d * d for d in g.degrees))


def second_zagreb(g: Graph) -> float:
    return variable_zagreb(g, 1)


def harmonic(g: Graph) -> float:
    return 2.0 * sum_connectivity(g, -1)


def randic(g: Graph) -> float:
    return variable_zagreb(g, -0.5)


def forgotten(g: Graph) -> float:
    """F = sum of d_u^3, cross-checked against the edge form sum (d_u^2 + d_v^2)."""
    _nontrivial(g)
    by_vertex = sum(d**3 for d in g.degrees)
    by_edge = sum(x * x + y * y for x, y in g.edge_degrees())
    if by_vertex != by_edge:
        raise RuntimeError(f"forgotten index self-check failed: {by_vertex} != {by_edge}")
    return float(by_vertex)


@dataclass(frozen=True)
class IndexVector:
    ga1: float
    m1: float
    m2: float
    f_index: float
    harmonic: float
    randic: float
    modified_zagreb: float
    h_minus2: float
    z_alpha: Mapping[float, float] = field(default_factory=dict)
    h_alpha: Mapping[float, float] = field(default_factory=dict)


def index_vector(g: Graph, alphas: Iterable[float] = DEFAULT_ALPHAS) -> IndexVector:
    alphas = [float(a) for a in alphas]
    return IndexVector(
        ga1=ga1(g),
        m1=first_zagreb(g),
        m2=second_zagreb(g),
        f_index=forgotten(g),
        harmonic=harmonic(g),
        randic=randic(g),
        modified_zagreb=variable_zagreb(g, -1),
        h_minus2=sum_connectivity(g, -2),
        z_alpha={a: variable_zagreb(g, a) for a in alphas},
        h_alpha={a: sum_connectivity(g, a) for a in alphas},
    )
