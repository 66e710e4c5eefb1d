"""Deterministic random generators for unimodular matrices and SL3 pairs.

Per-sample randomness comes from ``sample_rng(seed, index)``: the first
8 bytes (big endian) of SHA-256 over the ASCII string ``"{seed}:{index}"``
seed a fresh :class:`random.Random`.  Outputs therefore do not depend on
how many samples are drawn or in which order.
"""

from __future__ import annotations

import hashlib
import random
from fractions import Fraction

from .algebra import Matrix


def sample_seed(seed: int, index: int) -> int:
    digest = hashlib.sha256(f"{seed}:{index}".encode("ascii")).digest()
    return int.from_bytes(digest[:8], "big")


def sample_rng(seed: int, index: int) -> random.Random:
    return random.Random(sample_seed(seed, index))


def nonzero_int(rng: random.Random, bound: int = 3) -> int:
    while True:
        v = rng.randint(-bound, bound)
        if v:
            return v


def small_rational(rng: random.Random, bound: int = 5, nonzero: bool = True) -> Fraction:
    while True:
        v = Fraction(rng.randint(-bound, bound), rng.randint(1, bound))
        if v or not nonzero:
            return v


def random_unimodular(rng: random.Random, min_len: int = 4, max_len: int = 8, bound: int = 3) -> Matrix:
    """Word in the elementary matrices [[1,u],[0,1]] and [[1,0],[v,1]]."""
    m = Matrix.identity(2)
    for k in range(rng.randint(min_len, max_len)):
        u = nonzero_int(rng, bound)
        e = Matrix([[1, u], [0, 1]]) if k % 2 == 0 else Matrix([[1, 0], [u, 1]])
        m = m @ e
    return m


def random_sl2(rng: random.Random) -> Matrix:
    """Unimodular matrix with small rational entries (not necessarily integral)."""
    a = small_rational(rng)
    b = small_rational(rng, nonzero=False)
    c = small_rational(rng, nonzero=False)
    return Matrix([[a, b], [c, (1 + b * c) / a]])


# ---------------------------------------------------------------------------
# SL3 pairs with fixed boundary traces
# ---------------------------------------------------------------------------

def _lower(diag, a21, a31, a32) -> Matrix:
    l1, l2, l3 = diag
    return Matrix([[l1, 0, 0], [a21, l2, 0], [a31, a32, l3]])


def _upper(diag, b12, b13, b23) -> Matrix:
    m1, m2, m3 = diag
    return Matrix([[m1, b12, b13], [0, m2, b23], [0, 0, m3]])


def sl3_pair(rng: random.Random, eig1, eig2, c_values=None, attempts: int = 100):
    """Random (M1, M2) with M1 lower triangular, M2 upper triangular.

    ``eig1`` and ``eig2`` are diagonal entries (product 1, distinct values)
    so M1 and M2 lie in fixed semisimple classes.  When ``c_values`` is
    ``(c1, c2)``, the off-diagonal entries b12, b13 of M2 are solved so that
    Tr(M1^-1 M2^-1) = c1 and Tr(M1 M2) = c2; both traces are affine in
    (b12, b13) once the other entries are fixed.
    """
    from .invariants import sl3_invariants  # local import avoids a cycle

    for _ in range(attempts):
        a21, a31, a32 = (small_rational(rng) for _ in range(3))
        b23 = small_rational(rng)
        if c_values is None:
            b12, b13 = small_rational(rng), small_rational(rng)
        else:
            # affine in (b12, b13): evaluate at three points, solve 2x2
            def traces(p, q):
                inv = sl3_invariants(_lower(eig1, a21, a31, a32), _upper(eig2, p, q, b23))
                return inv.c1, inv.c2

            t00, t10, t01 = traces(0, 0), traces(1, 0), traces(0, 1)
            m = [[t10[k] - t00[k], t01[k] - t00[k]] for k in range(2)]
            det = m[0][0] * m[1][1] - m[0][1] * m[1][0]
            if not det:
                continue
            r = [c_values[k] - t00[k] for k in range(2)]
            b12 = (r[0] * m[1][1] - m[0][1] * r[1]) / det
            b13 = (m[0][0] * r[1] - m[1][0] * r[0]) / det
        return _lower(eig1, a21, a31, a32), _upper(eig2, b12, b13, b23)
    raise RuntimeError("could not solve for fixed boundary traces")


# eigenvalue settings (diagonals of the two SL3 generators) used by sl3-fit and the acceptance checks
SL3_SETTINGS = (
    ((2, 3, Fraction(1, 6)), (5, Fraction(1, 2), Fraction(2, 5))),
    ((3, Fraction(1, 2), Fraction(2, 3)), (-1, 2, Fraction(-1, 2))),
    ((4, -1, Fraction(-1, 4)), (Fraction(3, 2), Fraction(1, 3), 2)),
)


def sl3_fixed_trace_samples(count: int, seed: int, eig1, eig2):
    """``count`` invariant records sharing all six boundary traces."""
    from .invariants import sl3_invariants

    m1, m2 = sl3_pair(sample_rng(seed, 0), eig1, eig2)
    first = sl3_invariants(m1, m2)
    out = [first]
    i = 1
    while len(out) < count:
        m1, m2 = sl3_pair(sample_rng(seed, i), eig1, eig2, (first.c1, first.c2))
        out.append(sl3_invariants(m1, m2))
        i += 1
    return out
