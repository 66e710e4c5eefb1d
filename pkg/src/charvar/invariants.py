"""Trace coordinates and invariant-ring relations for SL2 (four punctures)
and SL3 (three punctures) character varieties of the punctured sphere."""

from __future__ import annotations

from dataclasses import dataclass, fields
from fractions import Fraction
from itertools import combinations_with_replacement
from typing import Sequence

from .algebra import Matrix, Polynomial, as_rational, solve_linear

# ---------------------------------------------------------------------------
# Dimension formula
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class PartitionTuple:
    """n partitions of the same integer r (one per puncture)."""

    r: int
    partitions: tuple

    def __init__(self, partitions, r: int | None = None):
        parts = tuple(tuple(sorted((int(x) for x in p), reverse=True)) for p in partitions)
        if not parts:
            raise ValueError("need at least one partition")
        if any(not p or min(p) <= 0 for p in parts):
            raise ValueError("partition parts must be positive")
        sums = {sum(p) for p in parts}
        if len(sums) != 1:
            raise ValueError(f"partitions sum to different values: {sorted(sums)}")
        total = sums.pop()
        if r is not None and r != total:
            raise ValueError(f"partitions sum to {total}, not r={r}")
        object.__setattr__(self, "r", total)
        object.__setattr__(self, "partitions", parts)

    @property
    def n(self) -> int:
        return len(self.partitions)

    @classmethod
    def parse(cls, text: str) -> "PartitionTuple":
        """Parse the CLI syntax ``"1,1;1,1;1,1;1,1"``."""
        try:
            parts = [[int(x) for x in chunk.split(",")] for chunk in text.strip().split(";")]
        except ValueError as exc:
            raise ValueError(f"malformed partition tuple {text!r}") from exc
        return cls(parts)


def dimension(g: int, mu: PartitionTuple) -> int:
    """r^2 (2g - 2 + n) - sum of squared multiplicities + 2 - 2g."""
    if g < 0:
        raise ValueError("genus must be nonnegative")
    squares = sum(m * m for p in mu.partitions for m in p)
    return mu.r ** 2 * (2 * g - 2 + mu.n) - squares + 2 - 2 * g


DIM2_CASES = (
    ((1, 1), (1, 1), (1, 1), (1, 1)),
    ((1, 1, 1), (1, 1, 1), (1, 1, 1)),
    ((2, 2), (1, 1, 1, 1), (1, 1, 1, 1)),
    ((3, 3), (2, 2, 2), (1, 1, 1, 1, 1, 1)),
)


def is_dim2_case(mu: PartitionTuple) -> bool:
    key = sorted(mu.partitions)
    return any(key == sorted(case) for case in DIM2_CASES)


# ---------------------------------------------------------------------------
# SL2, four punctures
# ---------------------------------------------------------------------------


def _require_unimodular(mats: Sequence[Matrix], size: int | None = None):
    for i, m in enumerate(mats):
        if size is not None and m.shape != (size, size):
            raise ValueError(f"matrix {i} is not {size}x{size}")
        if m.det() != 1:
            raise ValueError(f"matrix {i} has determinant {m.det()}, expected 1")


def verify_relation(matrices: Sequence[Matrix]) -> bool:
    """True iff M1 M2 ... Mn is the identity (genus zero relation)."""
    _require_unimodular(matrices)
    prod = matrices[0]
    for m in matrices[1:]:
        prod = prod @ m
    return prod == Matrix.identity(prod.shape[0])


@dataclass(frozen=True)
class TraceCoordinates4:
    x1: Fraction
    x2: Fraction
    x3: Fraction
    a1: Fraction
    a2: Fraction
    a3: Fraction
    a4: Fraction

    @property
    def x(self):
        return (self.x1, self.x2, self.x3)

    @property
    def a(self):
        return (self.a1, self.a2, self.a3, self.a4)

    def to_json(self) -> dict:
        return {f.name: str(getattr(self, f.name)) for f in fields(self)}


def fk_coordinates(m1: Matrix, m2: Matrix, m3: Matrix) -> TraceCoordinates4:
    """x_i = Tr(M_k M_j) for (i, j, k) cyclic, a_i = Tr(M_i), a4 = Tr(M3 M2 M1)."""
    _require_unimodular((m1, m2, m3), 2)
    m32 = m3 @ m2
    return TraceCoordinates4(
        x1=m32.trace(),
        x2=(m1 @ m3).trace(),
        x3=(m2 @ m1).trace(),
        a1=m1.trace(),
        a2=m2.trace(),
        a3=m3.trace(),
        a4=(m32 @ m1).trace(),
    )


def theta(a1, a2, a3, a4):
    a1, a2, a3, a4 = (as_rational(v) if not isinstance(v, Polynomial) else v for v in (a1, a2, a3, a4))
    t1 = a1 * a4 + a2 * a3
    t2 = a2 * a4 + a3 * a1
    t3 = a3 * a4 + a1 * a2
    t4 = a1 * a2 * a3 * a4 + a1 * a1 + a2 * a2 + a3 * a3 + a4 * a4 - 4
    return t1, t2, t3, t4


def fk_cubic(x, a):
    """Value of the Fricke-Klein cubic f_a(x)."""
    x1, x2, x3 = x
    t1, t2, t3, t4 = theta(*a)
    return x1 * x2 * x3 + x1 * x1 + x2 * x2 + x3 * x3 - t1 * x1 - t2 * x2 - t3 * x3 + t4


def fk_polynomial(a) -> Polynomial:
    """f_a as a polynomial in x1, x2, x3 (``a`` may hold rationals or polynomials)."""
    x = tuple(Polynomial.var(f"x{i}") for i in (1, 2, 3))
    return Polynomial.coerce(fk_cubic(x, a))


def leading_form_at_infinity(cubic: Polynomial) -> Polynomial:
    """Homogenize a cubic in x1, x2, x3 with W and restrict to W = 0.

    The result is a form in X, Y, Z (X = x1, Y = x2, Z = x3).  Any other
    variables are treated as coefficients, so the degree is the degree in
    x1, x2, x3 alone.
    """
    cubic = Polynomial.coerce(cubic).trim()
    xs = [i for i, v in enumerate(cubic.variables) if v in ("x1", "x2", "x3")]
    top = {}
    for exps, c in cubic.terms.items():
        d = sum(exps[i] for i in xs)
        if d > 3:
            raise ValueError(f"degree {d} in x1, x2, x3 exceeds 3")
        if d == 3:
            top[exps] = c
    rename = {"x1": Polynomial.var("X"), "x2": Polynomial.var("Y"), "x3": Polynomial.var("Z")}
    return Polynomial(cubic.variables, top).subs(rename).trim()


# ---------------------------------------------------------------------------
# SL3, three punctures
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Sl3Invariants:
    a1: Fraction
    a2: Fraction
    b1: Fraction
    b2: Fraction
    c1: Fraction
    c2: Fraction
    x1: Fraction
    x2: Fraction
    x3: Fraction

    @property
    def boundary(self):
        return (self.a1, self.a2, self.b1, self.b2, self.c1, self.c2)

    def to_json(self) -> dict:
        return {f.name: str(getattr(self, f.name)) for f in fields(self)}


def sl3_invariants(m1: Matrix, m2: Matrix) -> Sl3Invariants:
    _require_unimodular((m1, m2), 3)
    i1, i2 = m1.inverse(), m2.inverse()
    return Sl3Invariants(
        a1=m1.trace(),
        a2=i1.trace(),
        b1=m2.trace(),
        b2=i2.trace(),
        c1=(i1 @ i2).trace(),
        c2=(m1 @ m2).trace(),
        x1=(m1 @ i2).trace(),
        x2=(i1 @ m2).trace(),
        x3=(m1 @ m2 @ i1 @ i2).trace(),
    )


def _monomials(max_degree: int):
    """Exponent pairs (i, j) for x1^i x2^j of total degree <= max_degree."""
    out = []
    for d in range(max_degree + 1):
        for combo in combinations_with_replacement((0, 1), d):
            out.append((combo.count(0), combo.count(1)))
    return out


F_MONOMIALS = _monomials(2)
G_MONOMIALS = _monomials(3)


def fit_sl3_relation(samples: Sequence[Sl3Invariants]):
    """Recover f (deg <= 2) and g (deg <= 3) with x3^2 - f x3 + g = 0 on the samples.

    All samples must share the boundary traces (a1, a2, b1, b2, c1, c2).
    Solved exactly over Q; raises ValueError when the system is rank
    deficient.
    """
    if not samples:
        raise ValueError("insufficient or degenerate samples")
    boundary = samples[0].boundary
    if any(s.boundary != boundary for s in samples):
        raise ValueError("samples do not share boundary traces")
    n_unknowns = len(F_MONOMIALS) + len(G_MONOMIALS)
    if len(samples) <= n_unknowns + 1:
        raise ValueError("insufficient or degenerate samples")
    rows, rhs = [], []
    for s in samples:
        row = [s.x1 ** i * s.x2 ** j * s.x3 for i, j in F_MONOMIALS]
        row += [-(s.x1 ** i * s.x2 ** j) for i, j in G_MONOMIALS]
        rows.append(row)
        rhs.append(s.x3 * s.x3)
    sol, rank = solve_linear(rows, rhs)
    if sol is None:
        raise ValueError("insufficient or degenerate samples")
    vs = ("x1", "x2")
    f = Polynomial(vs, {m: c for m, c in zip(F_MONOMIALS, sol[: len(F_MONOMIALS)])})
    g = Polynomial(vs, {m: c for m, c in zip(G_MONOMIALS, sol[len(F_MONOMIALS):])})
    return f, g


def sl3_relation_polynomial(f: Polynomial, g: Polynomial) -> Polynomial:
    x3 = Polynomial.var("x3")
    return x3 * x3 - f * x3 + g
