"""Points of the closure of SL2 in P(M3), compactified semisimple classes,
the * product, the P1 x P1 parametrization and configurations."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from math import gcd, lcm
from typing import Sequence

from .algebra import Matrix, as_rational, rational_to_str


def normalize_projective(values) -> tuple:
    """Scale to coprime integers with the first nonzero entry positive."""
    vals = [as_rational(v) for v in values]
    if not any(vals):
        raise ValueError("projective point with all coordinates zero")
    den = lcm(*(v.denominator for v in vals))
    ints = [int(v * den) for v in vals]
    g = 0
    for x in ints:
        g = gcd(g, x)
    ints = [x // g for x in ints]
    lead = next(x for x in ints if x)
    if lead < 0:
        ints = [-x for x in ints]
    return tuple(Fraction(x) for x in ints)


# ---------------------------------------------------------------------------
# Eigenvalue data
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class EigenvalueData:
    """Eigenvalues alpha_i (with partner 1/alpha_i) for each puncture."""

    alphas: tuple

    def __init__(self, alphas):
        alphas = tuple(as_rational(a) for a in alphas)
        for i, a in enumerate(alphas, 1):
            if a in (0, 1, -1):
                raise ValueError(f"alpha_{i} = {a} is not allowed (need alpha not in {{0, 1, -1}})")
        object.__setattr__(self, "alphas", alphas)

    @property
    def n(self) -> int:
        return len(self.alphas)

    def alpha_plus(self, i: int) -> Fraction:
        return self.alphas[i - 1]

    def alpha_minus(self, i: int) -> Fraction:
        return 1 / self.alphas[i - 1]

    def k(self, i: int) -> Fraction:
        """Trace k_i = alpha_i + 1/alpha_i of class i (1-based)."""
        a = self.alphas[i - 1]
        return a + 1 / a

    @property
    def ks(self) -> tuple:
        return tuple(self.k(i) for i in range(1, self.n + 1))


def is_generic(eigen: EigenvalueData) -> bool:
    """No product of alpha_i^(+-1) over all punctures equals 1."""
    for signs in product((1, -1), repeat=eigen.n):
        p = Fraction(1)
        for a, s in zip(eigen.alphas, signs):
            p *= a if s > 0 else 1 / a
        if p == 1:
            return False
    return True


# ---------------------------------------------------------------------------
# Compactified matrices
# ---------------------------------------------------------------------------


def closure_membership(a, b, c, d, e, k) -> bool:
    """ad - bc = e^2 and a + d = k e."""
    a, b, c, d, e, k = (as_rational(v) for v in (a, b, c, d, e, k))
    if not any((a, b, c, d, e)):
        raise ValueError("projective point with all coordinates zero")
    return a * d - b * c == e * e and a + d == k * e


@dataclass(frozen=True)
class CompactifiedMatrix:
    """Projective block matrix diag(A, e) with A = [[a, b], [c, d]].

    Coordinates are stored normalized (coprime integers, first nonzero
    positive), so equality is projective equality.  ``index`` is the
    puncture class (1-based) or None for products.
    """

    a: Fraction
    b: Fraction
    c: Fraction
    d: Fraction
    e: Fraction
    index: int | None = field(default=None, compare=False)

    def __init__(self, a, b, c, d, e, index: int | None = None):
        coords = normalize_projective((a, b, c, d, e))
        for name, v in zip("abcde", coords):
            object.__setattr__(self, name, v)
        object.__setattr__(self, "index", index)

    @classmethod
    def from_block(cls, block: Matrix, e, index=None) -> "CompactifiedMatrix":
        (a, b), (c, d) = block.rows
        return cls(a, b, c, d, e, index)

    @classmethod
    def from_sl2(cls, m: Matrix, index=None) -> "CompactifiedMatrix":
        return cls.from_block(m, 1, index)

    @property
    def coords(self) -> tuple:
        return (self.a, self.b, self.c, self.d, self.e)

    @property
    def block(self) -> Matrix:
        return Matrix([[self.a, self.b], [self.c, self.d]])

    @property
    def is_nilpotent(self) -> bool:
        return self.e == 0

    def same_point(self, other: "CompactifiedMatrix") -> bool:
        return self.coords == other.coords

    def with_index(self, index) -> "CompactifiedMatrix":
        return CompactifiedMatrix(*self.coords, index=index)

    def conjugate(self, p: Matrix) -> "CompactifiedMatrix":
        """Block P A P^-1, e unchanged."""
        return CompactifiedMatrix.from_block(self.block.conjugate(p), self.e, self.index)

    def in_class(self, eigen: EigenvalueData, i: int | None = None) -> bool:
        i = self.index if i is None else i
        return closure_membership(*self.coords, eigen.k(i))

    def eigenlines(self) -> list:
        """Invariant lines of the block, as normalized integer pairs."""
        a, b, c, d, e = self.coords
        if e == 0:
            lams = [Fraction(0)]
        else:
            # the block has trace k e and determinant e^2, so rational eigenvalues
            disc = (a + d) ** 2 - 4 * e * e
            lams = _rational_roots(a + d, e * e, disc)
        lines = []
        for lam in lams:
            # kernel of A - lam I
            p, q, r, s = a - lam, b, c, d - lam
            if p or q:
                v = (-q, p)
            elif r or s:
                v = (-s, r)
            else:  # scalar block: every line is invariant
                continue
            v = normalize_projective(v)
            if v not in lines:
                lines.append(v)
        return lines

    def to_json(self) -> dict:
        return {k: rational_to_str(v) for k, v in zip("abcde", self.coords)}

    def __repr__(self):
        body = ", ".join(str(v) for v in self.coords)
        return f"CM({body}{'' if self.index is None else f' | class {self.index}'})"


def _rational_roots(tr, det, disc):
    from math import isqrt

    if disc < 0:
        return []
    num, den = disc.numerator, disc.denominator
    rn, rd = isqrt(num), isqrt(den)
    if rn * rn != num or rd * rd != den:
        raise ValueError("block has irrational eigenvalues")
    root = Fraction(rn, rd)
    return sorted({(tr + root) / 2, (tr - root) / 2})


STANDARD_NILPOTENT = CompactifiedMatrix(0, 1, 0, 0, 0)
LOWER_NILPOTENT = CompactifiedMatrix(0, 0, 1, 0, 0)


def nilpotent_with_kernel(s, t, index=None) -> CompactifiedMatrix:
    """The nilpotent point [[st, s^2], [-t^2, -st]] whose kernel is (s, -t)."""
    s, t = as_rational(s), as_rational(t)
    return CompactifiedMatrix(s * t, s * s, -t * t, -s * t, 0, index)


def star_product(m: CompactifiedMatrix, mp: CompactifiedMatrix) -> CompactifiedMatrix:
    """(A A', e e') as a projective point."""
    blk = m.block @ mp.block
    (a, b), (c, d) = blk.rows
    coords = (a, b, c, d, m.e * mp.e)
    if not any(coords):
        raise ValueError("undefined * product (all-zero)")
    return CompactifiedMatrix(*coords)


# ---------------------------------------------------------------------------
# P1 x P1 parametrization
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class P1P1Point:
    S: Fraction
    T: Fraction
    U: Fraction
    V: Fraction
    index: int

    def __init__(self, S, T, U, V, index: int):
        s, t = normalize_projective((S, T))
        u, v = normalize_projective((U, V))
        object.__setattr__(self, "S", s)
        object.__setattr__(self, "T", t)
        object.__setattr__(self, "U", u)
        object.__setattr__(self, "V", v)
        object.__setattr__(self, "index", index)


def p1p1_to_matrix(p: P1P1Point, eigen: EigenvalueData) -> CompactifiedMatrix:
    ap, am = eigen.alpha_plus(p.index), eigen.alpha_minus(p.index)
    su, tv = p.S * p.U, p.T * p.V
    delta = ap - am
    return CompactifiedMatrix(
        (am * su + ap * tv) / delta,
        p.S * p.V,
        p.T * p.U,
        (ap * su + am * tv) / delta,
        (su + tv) / delta,
        p.index,
    )


def matrix_to_p1p1(m: CompactifiedMatrix, eigen: EigenvalueData) -> P1P1Point:
    """Inverse of :func:`p1p1_to_matrix` (m must lie in its class)."""
    if m.index is None:
        raise ValueError("matrix has no class index")
    if not m.in_class(eigen):
        raise ValueError("matrix is not in the compactified class")
    ap, am = eigen.alpha_plus(m.index), eigen.alpha_minus(m.index)
    su = ap * m.e - m.a
    tv = m.a - am * m.e
    # rank-one matrix (S, T)^T (U, V)
    r = [[su, m.b], [m.c, tv]]
    col = next((r[0][j], r[1][j]) for j in range(2) if r[0][j] or r[1][j])
    row = next(tuple(r[i]) for i in range(2) if r[i][0] or r[i][1])
    return P1P1Point(col[0], col[1], row[0], row[1], m.index)


# ---------------------------------------------------------------------------
# Configurations
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Configuration:
    """n - 1 compactified matrices (classes 1..n-1) with eigenvalue data."""

    eigen: EigenvalueData
    mats: tuple

    def __init__(self, eigen: EigenvalueData, mats: Sequence[CompactifiedMatrix]):
        if len(mats) != eigen.n - 1:
            raise ValueError(f"need {eigen.n - 1} matrices for n = {eigen.n}, got {len(mats)}")
        mats = tuple(m.with_index(i) for i, m in enumerate(mats, 1))
        object.__setattr__(self, "eigen", eigen)
        object.__setattr__(self, "mats", mats)

    @property
    def n(self) -> int:
        return self.eigen.n

    def invalid_indices(self) -> list:
        return [m.index for m in self.mats if not m.in_class(self.eigen)]

    def is_valid(self) -> bool:
        return not self.invalid_indices() and trace_condition(self)

    def conjugate(self, p: Matrix) -> "Configuration":
        return Configuration(self.eigen, [m.conjugate(p) for m in self.mats])

    def replace(self, i: int, m: CompactifiedMatrix) -> "Configuration":
        mats = list(self.mats)
        mats[i - 1] = m
        return Configuration(self.eigen, mats)

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "alphas": [rational_to_str(a) for a in self.eigen.alphas],
            "matrices": [m.to_json() for m in self.mats],
        }

    @classmethod
    def from_json(cls, data: dict) -> "Configuration":
        eigen = EigenvalueData([Fraction(a) for a in data["alphas"]])
        if "n" in data and int(data["n"]) != eigen.n:
            raise ValueError(f"n = {data['n']} but {eigen.n} alphas given")
        mats = []
        for i, m in enumerate(data["matrices"], 1):
            try:
                mats.append(CompactifiedMatrix(*(Fraction(m[k]) for k in "abcde"), index=i))
            except (KeyError, ValueError) as exc:
                raise ValueError(f"matrix {i}: {exc}") from exc
        cfg = cls(eigen, mats)
        bad = cfg.invalid_indices()
        if bad:
            raise ValueError(f"matrix {bad[0]} is not in the compactified class {bad[0]}")
        return cfg


def block_trace_product(mats: Sequence[CompactifiedMatrix]):
    prod = mats[0].block
    for m in mats[1:]:
        prod = prod @ m.block
    return prod.trace()


def trace_condition(cfg: Configuration) -> bool:
    """Tr(A_1 ... A_{n-1}) = k_n e_1 ... e_{n-1}."""
    rhs = cfg.eigen.k(cfg.n)
    for m in cfg.mats:
        rhs *= m.e
    return block_trace_product(cfg.mats) == rhs


def lift_sl2(m: Matrix, index=None) -> CompactifiedMatrix:
    return CompactifiedMatrix.from_sl2(m, index)
