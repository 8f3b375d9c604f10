"""Lower/upper bounds on GA1 with numeric and structural tightness verdicts.

Every evaluator returns a :class:`BoundEvaluation`. Numeric tightness compares
the bound with GA1 at relative tolerance ``REL_TOL``; the structural verdict is
the stated equality characterisation, evaluated directly on the graph. The two
are computed independently and never reconciled: a disagreement is a finding.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import lru_cache
from math import comb, sqrt
from typing import Callable, Iterable, Mapping, Sequence

from .graph import (
    DegreeProfile,
    EdgePartitions,
    Graph,
    StructureClasses,
    classify_structure,
    degree_profile,
    edge_partitions,
)
from .indices import (
    DEFAULT_ALPHAS,
    forgotten,
    ga1,
    harmonic,
    second_zagreb,
    sum_connectivity,
    variable_zagreb,
)

REL_TOL = 1e-9
ABS_TOL = 1e-12

BOUND_IDS: tuple[str, ...] = (
    "basic",
    "degree_partition",
    "abc1",
    "abc2",
    "mi_head",
    "mi_tail",
    "pendant",
    "delta1",
    "grad_minmax",
    "grad_partition",
    "order",
    "zalpha",
    "m2",
    "m2_h2",
    "m2_sharp",
    "harmonic_mz",
    "forgotten",
)


def close(a: float, b: float) -> bool:
    return math.isclose(a, b, rel_tol=REL_TOL, abs_tol=ABS_TOL)


def leq(a: float, b: float) -> bool:
    """a <= b up to the tightness tolerance."""
    return a <= b or close(a, b)


class Inapplicable(Exception):
    """The graph does not satisfy a bound's hypotheses."""


class IsolatedVertexError(Inapplicable):
    pass


def alpha_label(alpha: float) -> str:
    a = float(alpha)
    return str(int(a)) if a.is_integer() else repr(a)


def zalpha_id(alpha: float) -> str:
    return f"zalpha@{alpha_label(alpha)}"


@dataclass(frozen=True)
class BoundEvaluation:
    """One bound evaluated on one graph.

    ``structural_lower`` / ``structural_upper`` are ``None`` when no equality
    characterisation is known for that side. ``inapplicable`` carries the
    reason when the hypotheses fail, in which case no side is evaluated.
    """

    bound_id: str
    value: float
    lower: float | None = None
    upper: float | None = None
    structural_lower: bool | None = None
    structural_upper: bool | None = None
    applicability: tuple[str, ...] = ()
    params: Mapping[str, float | int | None] = field(default_factory=dict)
    checks: Mapping[str, bool] = field(default_factory=dict)
    inapplicable: str | None = None

    @property
    def holds(self) -> bool:
        ok = True
        if self.lower is not None:
            ok &= leq(self.lower, self.value)
        if self.upper is not None:
            ok &= leq(self.value, self.upper)
        return ok

    @property
    def tight_lower(self) -> bool | None:
        return None if self.lower is None else close(self.lower, self.value)

    @property
    def tight_upper(self) -> bool | None:
        return None if self.upper is None else close(self.upper, self.value)

    @property
    def agreement_lower(self) -> bool | None:
        if self.lower is None or self.structural_lower is None:
            return None
        return self.tight_lower == self.structural_lower

    @property
    def agreement_upper(self) -> bool | None:
        if self.upper is None or self.structural_upper is None:
            return None
        return self.tight_upper == self.structural_upper

    @property
    def vacuous(self) -> bool:
        return self.lower is not None and self.lower < 0

    def side(self, name: str) -> tuple[float | None, bool | None, bool | None, bool | None]:
        """(bound, tight, structural, agreement) for ``"lower"`` or ``"upper"``."""
        if name == "lower":
            return self.lower, self.tight_lower, self.structural_lower, self.agreement_lower
        if name == "upper":
            return self.upper, self.tight_upper, self.structural_upper, self.agreement_upper
        raise ValueError(name)


@dataclass(frozen=True)
class _Context:
    g: Graph
    value: float
    prof: DegreeProfile
    parts: EdgePartitions
    cls: StructureClasses


@lru_cache(maxsize=512)
def _context(g: Graph) -> _Context:
    return _Context(g, ga1(g), degree_profile(g), edge_partitions(g), classify_structure(g))


def _min_degree_one(ctx: _Context) -> tuple[str, ...]:
    if ctx.prof.delta < 1:
        raise IsolatedVertexError("isolated vertex (delta = 0)")
    return ("delta>=1",)


def _irregular(ctx: _Context) -> tuple[str, ...]:
    if ctx.prof.k == 0:
        raise Inapplicable("regular graph (Delta = delta)")
    return ("Delta>delta",)


def _connected_pendant(ctx: _Context) -> tuple[str, ...]:
    if not ctx.cls.connected:
        raise Inapplicable("graph is disconnected")
    if ctx.prof.n < 3:
        raise Inapplicable("fewer than 3 vertices")
    if ctx.prof.delta != 1:
        raise Inapplicable("minimum degree is not 1")
    return ("connected", "n>=3", "delta=1")


def _gfrac(x: float, y: float) -> float:
    # 2 sqrt(xy) / (x + y) without the positivity guard; x = 0 is legal here.
    return 2.0 * sqrt(x * y) / (x + y)


# -- eq. (basic) --------------------------------------------------------------------

def bound_basic(g: Graph) -> BoundEvaluation:
    """2m sqrt(delta Delta) / (delta + Delta) <= GA1 <= m."""
    ctx = _context(g)
    app = _min_degree_one(ctx)
    p, cls = ctx.prof, ctx.cls
    gap = p.Delta - p.delta
    return BoundEvaluation(
        "basic",
        ctx.value,
        lower=p.m * _gfrac(p.delta, p.Delta),
        upper=float(p.m),
        structural_lower=all(y - x == gap for x, y in g.edge_degrees()),
        structural_upper=cls.components_regular,
        applicability=app,
    )


# -- degree-class counting bound ----------------------------------------------------

def bound_degree_partition(g: Graph, connected_variant: bool | None = None) -> BoundEvaluation:
    """Upper bound from m_ii <= min(n_i d_i / 2, C(n_i, 2)) and m_ij <= n_i n_j.

    ``connected_variant=None`` picks the connected refinement exactly when the
    graph is connected. The refinement (subtract 1 from n_i d_i / 2) is applied
    to nonempty classes only.
    """
    ctx = _context(g)
    app = _irregular(ctx)
    if connected_variant is None:
        connected_variant = ctx.cls.connected
    if connected_variant:
        if not ctx.cls.connected:
            raise Inapplicable("connected variant requested on a disconnected graph")
        app += ("connected",)
    p = ctx.prof
    delta, Delta, k, n_i = p.delta, p.Delta, p.k, p.n_i

    diag = 0.0
    for i in range(k + 1):
        cap = 0.5 * n_i[i] * (delta + i)
        if connected_variant and n_i[i] > 0:
            cap -= 1.0
        diag += min(cap, comb(n_i[i], 2))
    cross1 = cross2 = 0.0
    for i in range(k + 1):
        for j in range(i + 1, k + 1):
            w = 2.0 * n_i[i] * n_i[j]
            cross1 += w * sqrt((delta + i) * (delta + j)) / (2 * delta + i + j)
            cross2 += w * sqrt(Delta * (Delta - j + i)) / (2 * Delta - j + i)
    first, second = diag + cross1, diag + cross2
    return BoundEvaluation(
        "degree_partition",
        ctx.value,
        upper=first,
        applicability=app,
        params={"second_form": second, "connected_variant": int(connected_variant)},
        checks={"first_form_le_second": leq(first, second)},
    )


# -- oriented-edge bounds -------------------------------------------------------------

def bound_abc(g: Graph) -> tuple[BoundEvaluation, BoundEvaluation]:
    """Bounds from the tail counts a_i (abc1) and head counts b_i (abc2)."""
    ctx = _context(g)
    app = _irregular(ctx)
    p, parts, cls = ctx.prof, ctx.parts, ctx.cls
    delta, Delta, k = p.delta, p.Delta, p.k
    a, b = parts.a, parts.b
    C = float(sum(parts.c))

    lo1 = C + sum(2.0 * a[i] * sqrt(Delta * (delta + i)) / (Delta + delta + i) for i in range(k))
    up1 = C + sum(2.0 * a[i] * sqrt((delta + i) * (delta + i + 1)) / (2 * delta + 2 * i + 1) for i in range(k))
    lo2 = C + sum(2.0 * b[i] * sqrt(delta * (delta + i)) / (2 * delta + i) for i in range(1, k + 1))
    up2 = C + sum(2.0 * b[i] * sqrt((delta + i - 1) * (delta + i)) / (2 * delta + 2 * i - 1) for i in range(1, k + 1))

    # Same bounds regrouped with r_i = 2 a_i sqrt(delta+i), r'_i = 2 b_i sqrt(delta+i).
    r = [2.0 * a[i] * sqrt(delta + i) for i in range(k + 1)]
    rp = [2.0 * b[i] * sqrt(delta + i) for i in range(k + 1)]
    lo1r = C + sum(r[i] * sqrt(Delta) / (Delta + delta + i) for i in range(k))
    up1r = C + sum(r[i] * sqrt(delta + i + 1) / (2 * delta + 2 * i + 1) for i in range(k))
    lo2r = C + sum(rp[i] * sqrt(delta) / (2 * delta + i) for i in range(1, k + 1))
    up2r = C + sum(rp[i] * sqrt(delta + i - 1) / (2 * delta + 2 * i - 1) for i in range(1, k + 1))

    def same(x: float, y: float) -> bool:
        return math.isclose(x, y, rel_tol=1e-12, abs_tol=ABS_TOL)

    abc1 = BoundEvaluation(
        "abc1",
        ctx.value,
        lower=lo1,
        upper=up1,
        structural_lower=cls.in_G1,
        structural_upper=cls.in_G3,
        applicability=app,
        checks={"remark_reformulation": same(lo1, lo1r) and same(up1, up1r)},
    )
    abc2 = BoundEvaluation(
        "abc2",
        ctx.value,
        lower=lo2,
        upper=up2,
        structural_lower=cls.in_G2,
        structural_upper=cls.in_G3,
        applicability=app,
        checks={"remark_reformulation": same(lo2, lo2r) and same(up2, up2r)},
    )
    return abc1, abc2


def bound_mi(g: Graph) -> tuple[BoundEvaluation, BoundEvaluation]:
    """Lower bounds from the per-class tail totals m_i and head totals m'_i (delta >= 2)."""
    ctx = _context(g)
    p, parts, cls = ctx.prof, ctx.parts, ctx.cls
    if p.delta < 2:
        raise Inapplicable("minimum degree below 2")
    app = ("delta>=2",) + _irregular(ctx)
    delta, Delta, k = p.delta, p.Delta, p.k
    mt, mh = parts.m_tail, parts.m_head
    lo_head = sum(2.0 * mt[i] * sqrt(Delta * (delta + i)) / (Delta + delta + i) for i in range(k + 1))
    lo_tail = sum(2.0 * mh[i] * sqrt(delta * (delta + i)) / (2 * delta + i) for i in range(k + 1))
    common = dict(value=ctx.value, upper=float(p.m), structural_upper=cls.components_regular, applicability=app)
    return (
        BoundEvaluation("mi_head", lower=lo_head, structural_lower=cls.in_G1_0, **common),
        BoundEvaluation("mi_tail", lower=lo_tail, structural_lower=cls.in_G2_0, **common),
    )


def bound_pendant(g: Graph) -> BoundEvaluation:
    """Connected graphs with a pendant vertex: m_i lower bound, 2 sqrt2 / 3 upper bound."""
    ctx = _context(g)
    app = _connected_pendant(ctx)
    p, parts = ctx.prof, ctx.parts
    Delta, k = p.Delta, p.k
    mt = parts.m_tail
    m0 = mt[0]
    lower = sum(2.0 * mt[i] * sqrt(Delta * (i + 1)) / (Delta + i + 1) for i in range(k + 1))
    upper = 2.0 * sqrt(2.0) * m0 / 3.0 + (p.m - m0)
    return BoundEvaluation("pendant", ctx.value, lower=lower, upper=upper, applicability=app, params={"m0": m0})


def bound_delta1(g: Graph) -> BoundEvaluation:
    """Upper bound through the smallest non-pendant degree delta_1."""
    ctx = _context(g)
    app = _connected_pendant(ctx)
    p = ctx.prof
    d1, m0 = p.delta1, p.m0
    upper = 2.0 * m0 * sqrt(d1) / (d1 + 1) + (p.m - m0)
    return BoundEvaluation("delta1", ctx.value, upper=upper, applicability=app, params={"delta1": d1, "m0": m0})


# -- gradient bounds ----------------------------------------------------------------

def bound_gradient_minmax(g: Graph) -> BoundEvaluation:
    """Bounds through the smallest (d) and largest (D) edge gradient."""
    ctx = _context(g)
    app = _min_degree_one(ctx)
    p, parts, cls = ctx.prof, ctx.parts, ctx.cls
    d, D = parts.d_min, parts.D_max
    lower = p.m * _gfrac(p.delta, p.delta + D)
    upper = p.m * _gfrac(p.Delta - d, p.Delta)
    extremal = cls.regular or cls.bipartite_delta_Delta
    return BoundEvaluation(
        "grad_minmax",
        ctx.value,
        lower=lower,
        upper=upper,
        structural_lower=extremal,
        structural_upper=extremal,
        applicability=app,
        params={"d": d, "D": D},
    )


def bound_gradient_partition(g: Graph) -> BoundEvaluation:
    """Bounds through the gradient counts e_i.

    Structural verdicts use the classes G2^0 (lower) and G1^0 (upper) exactly as
    stated; flat edges are tight on both sides at any degree, so graphs with
    flat edges away from delta / Delta surface as mismatches.
    """
    ctx = _context(g)
    app = _min_degree_one(ctx)
    p, parts, cls = ctx.prof, ctx.parts, ctx.cls
    delta, Delta, e = p.delta, p.Delta, parts.e
    lower = sum(e[i] * _gfrac(delta, delta + i) for i in range(p.k + 1))
    upper = sum(e[i] * _gfrac(Delta, Delta - i) for i in range(p.k + 1))
    return BoundEvaluation(
        "grad_partition",
        ctx.value,
        lower=lower,
        upper=upper,
        structural_lower=cls.in_G2_0,
        structural_upper=cls.in_G1_0,
        applicability=app,
    )


def bound_order(g: Graph) -> BoundEvaluation:
    """2m sqrt((n-1) delta) / (n + delta - 1) <= GA1; tight only for complete graphs and stars."""
    ctx = _context(g)
    app = _min_degree_one(ctx)
    p, cls = ctx.prof, ctx.cls
    return BoundEvaluation(
        "order",
        ctx.value,
        lower=p.m * _gfrac(p.n - 1, p.delta),
        structural_lower=cls.complete or cls.star,
        applicability=app,
    )


# -- bounds through other indices -------------------------------------------------------

def zagreb_constants(delta: int, Delta: int, alpha: float) -> tuple[float, float]:
    """(c1, c2) for the variable Zagreb bound, choosing the branch by alpha."""
    if alpha >= -0.5:
        return _c_upper_branch(delta, Delta, alpha)
    return _c_lower_branch(delta, Delta, alpha)


def _c_upper_branch(delta: int, Delta: int, alpha: float) -> tuple[float, float]:
    # branch for alpha >= -1/2
    c1 = float(delta) ** (2 * alpha + 1) / Delta
    c2 = Delta * (float(Delta) ** (2 * alpha) + float(delta) ** (2 * alpha)) ** 2 / (4 * float(delta) ** (2 * alpha + 1))
    return c1, c2


def _c_lower_branch(delta: int, Delta: int, alpha: float) -> tuple[float, float]:
    # branch for alpha <= -1/2
    c1 = float(Delta) ** (2 * alpha)
    c2 = (float(Delta) ** (2 * alpha) + float(delta) ** (2 * alpha)) ** 2 / (4 * float(Delta) ** (2 * alpha))
    return c1, c2


def bound_variable_zagreb(g: Graph, alpha: float) -> BoundEvaluation:
    """c1 m^2 / Z_alpha <= GA1 <= c2 m^2 / Z_alpha for one real alpha."""
    ctx = _context(g)
    app = _min_degree_one(ctx)
    p, cls = ctx.prof, ctx.cls
    alpha = float(alpha)
    c1, c2 = zagreb_constants(p.delta, p.Delta, alpha)
    z = variable_zagreb(g, alpha)
    checks = {}
    if alpha == -0.5:
        u1, u2 = _c_upper_branch(p.delta, p.Delta, alpha)
        l1, l2 = _c_lower_branch(p.delta, p.Delta, alpha)
        checks["branch_continuity"] = u1 == l1 and math.isclose(u2, l2, rel_tol=1e-12)
    return BoundEvaluation(
        zalpha_id(alpha),
        ctx.value,
        lower=c1 * p.m**2 / z,
        upper=c2 * p.m**2 / z,
        structural_lower=cls.regular,
        structural_upper=cls.regular,
        applicability=app,
        params={"alpha": alpha, "c1": c1, "c2": c2, "z_alpha": z},
        checks=checks,
    )


def bound_m2(g: Graph) -> BoundEvaluation:
    """Second-Zagreb bounds; the alpha = 1 case of the variable Zagreb bound."""
    ctx = _context(g)
    app = _min_degree_one(ctx)
    p, cls = ctx.prof, ctx.cls
    d, D, m = float(p.delta), float(p.Delta), p.m
    m2 = second_zagreb(g)
    lower = d**3 * m * m / (D * m2)
    upper = D * (D * D + d * d) ** 2 * m * m / (4 * d**3 * m2)
    via_z = bound_variable_zagreb(g, 1.0)
    agrees = math.isclose(lower, via_z.lower, rel_tol=1e-12) and math.isclose(upper, via_z.upper, rel_tol=1e-12)
    return BoundEvaluation(
        "m2",
        ctx.value,
        lower=lower,
        upper=upper,
        structural_lower=cls.regular,
        structural_upper=cls.regular,
        applicability=app,
        params={"m2": m2},
        checks={"matches_zalpha_1": agrees},
    )


def bound_m2_h2(g: Graph) -> BoundEvaluation:
    """Bounds through sqrt(M2 H_-2); the upper side is tight iff d_u d_v (d_u+d_v)^2 is constant."""
    ctx = _context(g)
    app = _min_degree_one(ctx)
    p, cls = ctx.prof, ctx.cls
    d, D = float(p.delta), float(p.Delta)
    m2 = second_zagreb(g)
    h2 = sum_connectivity(g, -2)
    zm1 = variable_zagreb(g, -1)
    root = sqrt(m2 * h2)
    upper = 2.0 * root
    checks = {
        "improves_sqrt_m2_zm1": leq(upper, sqrt(m2 * zm1)),
        "lambda_components_regular_or_biregular": (not cls.lambda_constant) or cls.components_regular_or_biregular,
    }
    if cls.connected:
        checks["lambda_iff_regular_or_biregular"] = cls.lambda_constant == (cls.regular or cls.biregular)
    return BoundEvaluation(
        "m2_h2",
        ctx.value,
        lower=4.0 * D * d * root / (D * D + d * d),
        upper=upper,
        structural_lower=cls.regular,
        structural_upper=cls.lambda_constant,
        applicability=app,
        params={"m2": m2, "h_minus2": h2, "lambda": cls.lambda_value},
        checks=checks,
    )


def bound_m2_sharp(g: Graph) -> BoundEvaluation:
    """delta^2 m^2 / M2 <= GA1 <= Delta^(1/2) (Delta+delta)^3 m^2 / (8 delta^(3/2) M2)."""
    ctx = _context(g)
    app = _min_degree_one(ctx)
    p, cls = ctx.prof, ctx.cls
    d, D, m = float(p.delta), float(p.Delta), p.m
    m2 = second_zagreb(g)
    lower = d * d * m * m / m2
    upper = sqrt(D) * (D + d) ** 3 * m * m / (8 * d**1.5 * m2)
    weaker = bound_m2(g)
    return BoundEvaluation(
        "m2_sharp",
        ctx.value,
        lower=lower,
        upper=upper,
        structural_lower=cls.regular,
        structural_upper=cls.regular,
        applicability=app,
        params={"m2": m2},
        checks={
            "improves_m2_lower": leq(weaker.lower, lower),
            "improves_m2_upper": leq(upper, weaker.upper),
        },
    )


def bound_harmonic(g: Graph) -> BoundEvaluation:
    """H^2 / Z_-1 <= GA1 <= (Delta+delta)^3 H^2 / (8 (Delta delta)^(3/2) Z_-1)."""
    ctx = _context(g)
    app = _min_degree_one(ctx)
    p, cls = ctx.prof, ctx.cls
    d, D = float(p.delta), float(p.Delta)
    H = harmonic(g)
    zm1 = variable_zagreb(g, -1)
    return BoundEvaluation(
        "harmonic_mz",
        ctx.value,
        lower=H * H / zm1,
        upper=(D + d) ** 3 * H * H / (8 * (D * d) ** 1.5 * zm1),
        structural_lower=cls.regular,
        structural_upper=cls.regular,
        applicability=app,
        params={"harmonic": H, "z_minus1": zm1},
    )


def bound_forgotten(g: Graph) -> BoundEvaluation:
    """2m - F / (2 delta^2) <= GA1 <= 2m - F / (2 Delta^2). The lower side can be negative."""
    ctx = _context(g)
    app = _min_degree_one(ctx)
    p, cls = ctx.prof, ctx.cls
    F = forgotten(g)
    return BoundEvaluation(
        "forgotten",
        ctx.value,
        lower=2 * p.m - F / (2 * p.delta**2),
        upper=2 * p.m - F / (2 * p.Delta**2),
        structural_lower=cls.regular,
        structural_upper=cls.regular,
        applicability=app,
        params={"forgotten": F},
    )


# -- Cassels ------------------------------------------------------------------------

class CasselsError(ValueError):
    pass


@dataclass(frozen=True)
class CasselsInstance:
    a: tuple[float, ...]
    b: tuple[float, ...]
    omega: float
    Omega: float

    def __post_init__(self) -> None:
        if len(self.a) != len(self.b):
            raise CasselsError(f"length mismatch: {len(self.a)} vs {len(self.b)}")
        if not (0 < self.omega <= self.Omega):
            raise CasselsError(f"need 0 < omega <= Omega, got {self.omega}, {self.Omega}")
        for j, (x, y) in enumerate(zip(self.a, self.b)):
            if x < 0 or y < 0:
                raise CasselsError(f"negative entry at index {j}")
            if not (self.omega * y <= x <= self.Omega * y):
                raise CasselsError(f"omega*b <= a <= Omega*b fails at index {j}: a={x}, b={y}")


@dataclass(frozen=True)
class CasselsVerdict:
    lhs: float
    rhs: float
    holds: bool
    equality: bool
    equality_predicted: bool


def cassels_check(inst: CasselsInstance) -> CasselsVerdict:
    """sqrt(sum a^2) sqrt(sum b^2) <= (sqrt(W/w) + sqrt(w/W)) / 2 * sum a b."""
    sa = math.fsum(x * x for x in inst.a)
    sb = math.fsum(y * y for y in inst.b)
    sab = math.fsum(x * y for x, y in zip(inst.a, inst.b))
    ratio = inst.Omega / inst.omega
    lhs = sqrt(sa) * sqrt(sb)
    rhs = 0.5 * (sqrt(ratio) + 1.0 / sqrt(ratio)) * sab
    # With omega = Omega the constraints force a = omega * b; all-zero a is the other equality case.
    predicted = inst.omega == inst.Omega or all(x == 0 for x in inst.a)
    return CasselsVerdict(lhs, rhs, leq(lhs, rhs), close(lhs, rhs), predicted)


# -- everything at once -------------------------------------------------------------------

def _single(fn: Callable[[Graph], BoundEvaluation]) -> Callable[[Graph], Sequence[BoundEvaluation]]:
    return lambda g: (fn(g),)


_EVALUATORS: tuple[tuple[tuple[str, ...], Callable[[Graph], Sequence[BoundEvaluation]]], ...] = (
    (("basic",), _single(bound_basic)),
    (("degree_partition",), _single(bound_degree_partition)),
    (("abc1", "abc2"), bound_abc),
    (("mi_head", "mi_tail"), bound_mi),
    (("pendant",), _single(bound_pendant)),
    (("delta1",), _single(bound_delta1)),
    (("grad_minmax",), _single(bound_gradient_minmax)),
    (("grad_partition",), _single(bound_gradient_partition)),
    (("order",), _single(bound_order)),
    (("m2",), _single(bound_m2)),
    (("m2_h2",), _single(bound_m2_h2)),
    (("m2_sharp",), _single(bound_m2_sharp)),
    (("harmonic_mz",), _single(bound_harmonic)),
    (("forgotten",), _single(bound_forgotten)),
)


def sort_key(bound_id: str) -> tuple[int, float]:
    base, _, alpha = bound_id.partition("@")
    return BOUND_IDS.index(base), float(alpha) if alpha else 0.0


def evaluate_all(g: Graph, alphas: Iterable[float] = DEFAULT_ALPHAS) -> list[BoundEvaluation]:
    """Every bound on ``g``; inapplicable ones are kept with their reason."""
    value = _context(g).value
    out: list[BoundEvaluation] = []

    def run(ids: Sequence[str], thunk: Callable[[], Sequence[BoundEvaluation]]) -> None:
        try:
            out.extend(thunk())
        except Inapplicable as exc:
            out.extend(BoundEvaluation(i, value, inapplicable=str(exc)) for i in ids)

    for ids, fn in _EVALUATORS:
        run(ids, lambda fn=fn: fn(g))
    for a in sorted({float(x) for x in alphas}):
        run((zalpha_id(a),), lambda a=a: (bound_variable_zagreb(g, a),))
    out.sort(key=lambda ev: sort_key(ev.bound_id))
    return out
