"""GIT stability of configurations in the compactified representation
variety: the m1/m2 criterion, a Hilbert-Mumford oracle, one-parameter
subgroup limits and the blow-up chart generators near s1."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product

from .algebra import Matrix, as_rational
from .compactified import (
    LOWER_NILPOTENT,
    STANDARD_NILPOTENT,
    CompactifiedMatrix,
    Configuration,
    EigenvalueData,
    matrix_to_p1p1,
    normalize_projective,
    star_product,
)

STABLE = "stable"
STRICTLY_SEMISTABLE = "strictly_semistable"
UNSTABLE = "unstable"


@dataclass(frozen=True)
class NilpotentGrouping:
    i_nil: tuple
    groups: tuple  # tuples of 1-based indices, projectively equal matrices
    j_sets: tuple  # J_l for each group

    @property
    def m1(self) -> int:
        return max((len(g) for g in self.groups), default=0)

    @property
    def m2(self) -> int:
        m1 = self.m1
        return max((len(j) for g, j in zip(self.groups, self.j_sets) if len(g) == m1), default=0)


@dataclass(frozen=True)
class StabilityReport:
    grouping: NilpotentGrouping | None
    m1: int
    m2: int
    verdict: str
    witness_mu: int | None = None
    witness_line: tuple | None = field(default=None, compare=False)

    def to_json(self) -> dict:
        return {"m1": self.m1, "m2": self.m2, "verdict": self.verdict, "mu_min": self.witness_mu}


def nilpotent_grouping(cfg: Configuration) -> NilpotentGrouping:
    i_nil = tuple(m.index for m in cfg.mats if m.is_nilpotent)
    groups: list[list[int]] = []
    for i in i_nil:
        m = cfg.mats[i - 1]
        for g in groups:
            if cfg.mats[g[0] - 1].same_point(m):
                g.append(i)
                break
        else:
            groups.append([i])
    j_sets = []
    for g in groups:
        mi = cfg.mats[g[0] - 1]
        j_sets.append(tuple(
            m.index for m in cfg.mats
            if not m.is_nilpotent
            and star_product(m, mi).same_point(mi)
            and star_product(mi, m).same_point(mi)
        ))
    return NilpotentGrouping(i_nil, tuple(tuple(g) for g in groups), tuple(j_sets))


def verdict_from_margin(margin: int) -> str:
    if margin > 0:
        return STABLE
    if margin == 0:
        return STRICTLY_SEMISTABLE
    return UNSTABLE


def classify_stability(cfg: Configuration) -> StabilityReport:
    """Semistable iff n - 1 >= 2 m1 + m2, stable iff strictly."""
    grouping = nilpotent_grouping(cfg)
    m1, m2 = grouping.m1, grouping.m2
    return StabilityReport(grouping, m1, m2, verdict_from_margin(cfg.n - 1 - (2 * m1 + m2)))


# ---------------------------------------------------------------------------
# Hilbert-Mumford function for the diagonal one-parameter subgroup
# ---------------------------------------------------------------------------


def hm_mu(cfg: Configuration, r: int = 1) -> int:
    """mu(x, lambda_r) = r * (#{c_i != 0} - #{M_i standard nilpotent})."""
    count = sum(1 for m in cfg.mats if m.c != 0)
    count -= sum(1 for m in cfg.mats if m.same_point(STANDARD_NILPOTENT))
    return r * count


# weight of each coordinate (a, b, c, d, e) under t -> diag(t^r, t^-r), per unit r
_COORD_WEIGHTS = (0, 1, -1, 0, 0)


def hm_mu_segre(cfg: Configuration, r: int = 1) -> int:
    """Same quantity, as the max of -weight over nonzero Segre coordinates.

    Enumerates all 5^(n-1) tensor coordinates; meant as a cross-check on
    small n.
    """
    best = None
    supports = [[w for v, w in zip(m.coords, _COORD_WEIGHTS) if v] for m in cfg.mats]
    for combo in product(*supports):
        w = -r * sum(combo)
        if best is None or w > best:
            best = w
    return best


def _sl2_moving_line_to_e1(line) -> Matrix:
    """g in SL2(Q) with g (p, q) proportional to e1."""
    p, q = (as_rational(v) for v in line)
    if p:
        ginv = Matrix([[p, 0], [q, 1 / p]])
    else:
        ginv = Matrix([[p, -1 / q], [q, 0]])
    return ginv.inverse()


def candidate_lines(cfg: Configuration) -> list:
    """Invariant lines of every block, plus e1 (the identity candidate)."""
    lines = [(Fraction(1), Fraction(0))]
    for m in cfg.mats:
        for v in m.eigenlines():
            if v not in lines:
                lines.append(v)
    return lines


def stability_oracle(cfg: Configuration, r: int = 1) -> StabilityReport:
    """Minimize mu(g x, lambda_r) over conjugators g.

    mu(g x, lambda) only depends on the line g^-1 e1; it equals n - 1 for
    any line that is invariant under no block, and every block has an
    invariant line, so the minimum is attained on :func:`candidate_lines`.
    """
    best, best_line = None, None
    for line in candidate_lines(cfg):
        g = _sl2_moving_line_to_e1(line)
        mu = hm_mu(cfg.conjugate(g), r)
        if best is None or mu < best:
            best, best_line = mu, line
    grouping = nilpotent_grouping(cfg)
    return StabilityReport(grouping, grouping.m1, grouping.m2, verdict_from_margin(best), best, best_line)


# ---------------------------------------------------------------------------
# One-parameter subgroup limits
# ---------------------------------------------------------------------------


def one_ps_limit_matrix(m: CompactifiedMatrix, direction: int = 1) -> CompactifiedMatrix:
    if direction not in (1, -1):
        raise ValueError("direction must be +1 or -1")
    # exponent of t on each coordinate: b -> t^(2 dir) b, c -> t^(-2 dir) c
    exps = (0, 2 * direction, -2 * direction, 0, 0)
    live = [x for v, x in zip(m.coords, exps) if v]
    if not live:
        raise ValueError("indeterminate limit")
    low = min(live)
    coords = [v if x == low else 0 for v, x in zip(m.coords, exps)]
    return CompactifiedMatrix(*coords, index=m.index)


def one_ps_limit(cfg: Configuration, direction: int = 1) -> Configuration:
    """Projective limit t -> 0 of lambda(t) . cfg for lambda(t) = diag(t, 1/t)^direction."""
    return Configuration(cfg.eigen, [one_ps_limit_matrix(m, direction) for m in cfg.mats])


def s1_configuration(eigen: EigenvalueData) -> Configuration:
    n_, l_ = STANDARD_NILPOTENT, LOWER_NILPOTENT
    return Configuration(eigen, [n_, n_, l_, l_])


def s2_configuration(eigen: EigenvalueData) -> Configuration:
    n_, l_ = STANDARD_NILPOTENT, LOWER_NILPOTENT
    return Configuration(eigen, [n_, l_, l_, n_])


def nilpotent_kernel(m: CompactifiedMatrix) -> tuple:
    if not m.is_nilpotent:
        raise ValueError("not a nilpotent point")
    return m.eigenlines()[0]


def _mobius_from_three(src, dst):
    """2x2 matrix sending three distinct lines src[i] to dst[i] (projectively)."""
    def frame(p):
        # matrix sending e1, e2, e1+e2 to the three lines
        (a, b), (c, d), (x, y) = p
        det = a * d - b * c
        lam = (x * d - y * c) / det
        mu_ = (a * y - b * x) / det
        return Matrix([[lam * a, mu_ * c], [lam * b, mu_ * d]])
    return frame(dst) @ frame(src).inverse()


def same_nilpotent_orbit(cfg: Configuration, target: Configuration) -> bool:
    """True iff cfg = g . target for some g, when target is all nilpotent."""
    if len(cfg.mats) != len(target.mats):
        return False
    if not all(m.is_nilpotent for m in cfg.mats) or not all(m.is_nilpotent for m in target.mats):
        return False
    ka = [nilpotent_kernel(m) for m in cfg.mats]
    kb = [nilpotent_kernel(m) for m in target.mats]

    def pattern(ks):
        seen = []
        return tuple(seen.index(k) if k in seen else (seen.append(k) or len(seen) - 1) for k in ks)

    if pattern(ka) != pattern(kb):
        return False
    distinct_b = list(dict.fromkeys(kb))
    if len(distinct_b) <= 3:
        return True  # PGL2 is 3-transitive on P1
    distinct_a = list(dict.fromkeys(ka))
    h = _mobius_from_three(distinct_b[:3], distinct_a[:3])
    for la, lb in zip(distinct_a[3:], distinct_b[3:]):
        img = (h[0, 0] * lb[0] + h[0, 1] * lb[1], h[1, 0] * lb[0] + h[1, 1] * lb[1])
        if normalize_projective(img) != la:
            return False
    return True


# ---------------------------------------------------------------------------
# Blow-up charts near the orbit of s1
# ---------------------------------------------------------------------------

CHART_WEIGHTS = {
    "U1": (-2, -2, 2, 2, -2, 2),
    "U2": (2, 2, -2, -2, 2, -2),
}


@dataclass(frozen=True)
class ChartPoint:
    """Affine coordinates of an n = 5 configuration in chart U1 or U2.

    U1: ([1:x_i],[y_i:1]) for i = 1, 2 and ([x_i:1],[1:y_i]) for i = 3, 4.
    U2: ([z_i:1],[1:w_i]) for i = 1, 2 and ([1:z_i],[w_i:1]) for i = 3, 4.
    ``first`` holds x (resp. z), ``second`` holds y (resp. w).
    """

    chart: str
    first: tuple
    second: tuple
    eigen: EigenvalueData


def chart_point(cfg: Configuration, chart: str) -> ChartPoint:
    if cfg.n != 5:
        raise ValueError("charts are defined for n = 5")
    if chart not in CHART_WEIGHTS:
        raise ValueError(f"unknown chart {chart!r}")
    first, second = [], []
    for m in cfg.mats:
        p = matrix_to_p1p1(m, cfg.eigen)
        upper = (m.index <= 2) == (chart == "U1")  # b != 0 required, else c != 0
        if upper:
            if not (p.S and p.V):
                raise ValueError(f"point is outside chart {chart}: b_{m.index} = 0")
            first.append(p.T / p.S)
            second.append(p.U / p.V)
        else:
            if not (p.T and p.U):
                raise ValueError(f"point is outside chart {chart}: c_{m.index} = 0")
            first.append(p.S / p.T)
            second.append(p.V / p.U)
    return ChartPoint(chart, tuple(first), tuple(second), cfg.eigen)


def in_chart(cfg: Configuration, chart: str) -> bool:
    try:
        chart_point(cfg, chart)
    except ValueError:
        return False
    return True


def chart_generators(p: ChartPoint):
    """Values of X0..X5 (U1) or Y0..Y5 (U2) at p, and their torus weights."""
    if p.chart not in CHART_WEIGHTS:
        raise ValueError(f"unknown chart {p.chart!r}")
    if len(p.first) != 4 or len(p.second) != 4:
        raise ValueError("chart point needs four coordinate pairs")
    vals = []
    for i in range(4):
        delta = p.eigen.alpha_plus(i + 1) - p.eigen.alpha_minus(i + 1)
        vals.append((p.first[i] + p.second[i]) / delta)
    vals.append(p.first[0] - p.first[1])
    vals.append(p.first[2] - p.first[3])
    return tuple(vals), CHART_WEIGHTS[p.chart]


def observed_chart_weights(cfg: Configuration, chart: str, a=2) -> tuple:
    """Torus weights read off from conjugation by diag(a, 1/a).

    Each generator of ``cfg`` must be nonzero; returns w_i with
    X_i(a . cfg) = a^w_i X_i(cfg), or None for a ratio that is no power of a.
    """
    a = as_rational(a)
    before, _ = chart_generators(chart_point(cfg, chart))
    after, _ = chart_generators(chart_point(cfg.conjugate(Matrix.diag([a, 1 / a])), chart))
    out = []
    for x, y in zip(before, after):
        if not x:
            raise ValueError("generator vanishes; weight not observable")
        ratio = y / x
        out.append(next((w for w in range(-8, 9) if a ** w == ratio), None))
    return tuple(out)
