"""Generators for valid configurations of prescribed nilpotent/flag shape.

A configuration is described by a role string, one letter per matrix:

- ``N``: nilpotent with kernel ``line`` (projectively one point),
- ``M``: nilpotent with a second kernel ``line2``,
- ``P``: semisimple, preserving ``line`` (upper triangular in an adapted basis),
- ``G``: semisimple, in general position.

The trace condition is linear in either P1 factor of a single matrix, so
one semisimple slot is left free and solved for.  Everything is built in
the basis where ``line`` is e1 and then conjugated by a random g.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import product

from .algebra import Matrix
from .compactified import (
    CompactifiedMatrix,
    Configuration,
    EigenvalueData,
    is_generic,
    nilpotent_with_kernel,
    p1p1_to_matrix,
    P1P1Point,
)
from .identities import p1p1_tuple
from .sampling import nonzero_int, random_sl2, sample_rng, small_rational
from .stability import STANDARD_NILPOTENT, classify_stability, stability_oracle

ROLES = "NMPG"


def random_generic_eigen(rng: random.Random, n: int) -> EigenvalueData:
    while True:
        alphas = []
        for _ in range(n):
            num = nonzero_int(rng, 7)
            den = rng.randint(1, 5)
            alphas.append(Fraction(num, den))
        try:
            eigen = EigenvalueData(alphas)
        except ValueError:
            continue
        if is_generic(eigen):
            return eigen


def _raw(eigen: EigenvalueData, i: int, S, T, U, V) -> tuple:
    return p1p1_tuple(S, T, U, V, eigen.alpha_plus(i), eigen.alpha_minus(i))


def _trace_defect(eigen: EigenvalueData, raws) -> Fraction:
    """Tr(A_1 ... A_{n-1}) - k_n e_1 ... e_{n-1} on unnormalized tuples."""
    prod = Matrix.identity(2)
    rhs = eigen.k(eigen.n)
    for a, b, c, d, e in raws:
        prod = prod @ Matrix([[a, b], [c, d]])
        rhs *= e
    return prod.trace() - rhs


def _random_pair(rng):
    return small_rational(rng), small_rational(rng)


def _slot_choice(rng, role):
    """(fixed side, fixed pair): which P1 factor is held fixed for a semisimple slot."""
    if role == "P":
        # c = T U = 0: either T = 0 or U = 0
        return ("ST", (Fraction(1), Fraction(0))) if rng.random() < 0.5 else ("UV", (Fraction(0), Fraction(1)))
    return (rng.choice(("ST", "UV")), _random_pair(rng))


def _assemble(eigen, i, side, fixed, free):
    if side == "ST":
        return _raw(eigen, i, fixed[0], fixed[1], free[0], free[1])
    return _raw(eigen, i, free[0], free[1], fixed[0], fixed[1])


def _fill_semisimple(rng, eigen, i, role):
    side, fixed = _slot_choice(rng, role)
    return _assemble(eigen, i, side, fixed, _random_pair(rng))


@dataclass(frozen=True)
class Realization:
    roles: str
    cfg: Configuration


def realize_roles(roles: str, eigen: EigenvalueData, rng: random.Random,
                  conjugate: bool = True, attempts: int = 20):
    """A valid configuration with the given roles, or None if none was found.

    The realized shape can differ from the requested one when the solved
    slot degenerates (e.g. becomes nilpotent); callers classify the result.
    """
    if len(roles) != eigen.n - 1 or set(roles) - set(ROLES):
        raise ValueError(f"bad role string {roles!r} for n = {eigen.n}")
    semis = [i for i, r in enumerate(roles) if r in "PG"]
    for _ in range(attempts):
        s2, t2 = small_rational(rng), small_rational(rng)  # kernel of M is (s2, -t2), t2 != 0
        raws = [None] * len(roles)
        for i, r in enumerate(roles):
            if r == "N":
                raws[i] = STANDARD_NILPOTENT.coords
            elif r == "M":
                raws[i] = nilpotent_with_kernel(s2, t2).coords
        free = rng.choice(semis) if semis else None
        for i in semis:
            if i != free:
                raws[i] = _fill_semisimple(rng, eigen, i + 1, roles[i])
        if free is not None:
            side, fixed = _slot_choice(rng, roles[free])

            def defect(pair):
                trial = list(raws)
                trial[free] = _assemble(eigen, free + 1, side, fixed, pair)
                return _trace_defect(eigen, trial)

            f10, f01 = defect((1, 0)), defect((0, 1))
            pair = (f01, -f10) if (f10 or f01) else _random_pair(rng)
            raws[free] = _assemble(eigen, free + 1, side, fixed, pair)
        if any(not any(r) for r in raws):
            continue
        mats = [CompactifiedMatrix(*r) for r in raws]
        cfg = Configuration(eigen, mats)
        if not cfg.is_valid():
            continue
        if conjugate:
            cfg = cfg.conjugate(random_sl2(rng))
        return cfg
    return None


def role_templates(n: int):
    return ["".join(p) for p in product(ROLES, repeat=n - 1)]


@dataclass
class SuiteResult:
    total: int
    disagreements: list
    shapes: dict  # (n, m1, m2) -> count
    infeasible: list

    @property
    def ok(self) -> bool:
        return not self.disagreements


def compare_routes(cfg: Configuration):
    a, b = classify_stability(cfg), stability_oracle(cfg)
    return a, b, a.verdict == b.verdict


def exhaustive_suite(seed: int = 0, ns=(4, 5), per_template: int = 2) -> SuiteResult:
    """Every role template for each n, realized ``per_template`` times."""
    total, bad, shapes, infeasible = 0, [], {}, []
    idx = 0
    for n in ns:
        for roles in role_templates(n):
            found = False
            for _ in range(per_template):
                rng = sample_rng(seed, idx)
                idx += 1
                cfg = realize_roles(roles, random_generic_eigen(rng, n), rng)
                if cfg is None:
                    continue
                found = True
                total += 1
                a, b, same = compare_routes(cfg)
                key = (n, a.m1, a.m2)
                shapes[key] = shapes.get(key, 0) + 1
                if not same:
                    bad.append((roles, cfg, a, b))
            if not found:
                infeasible.append((n, roles))
    return SuiteResult(total, bad, shapes, infeasible)


def random_configuration(rng: random.Random, ns=(4, 5, 6), weights=(0.2, 0.1, 0.2, 0.5)):
    while True:
        n = rng.choice(ns)
        roles = "".join(rng.choices(ROLES, weights=weights, k=n - 1))
        cfg = realize_roles(roles, random_generic_eigen(rng, n), rng)
        if cfg is not None:
            return cfg


def random_suite(count: int = 500, seed: int = 0) -> SuiteResult:
    total, bad, shapes = 0, [], {}
    for i in range(count):
        cfg = random_configuration(sample_rng(seed, 10**6 + i))
        total += 1
        a, b, same = compare_routes(cfg)
        key = (cfg.n, a.m1, a.m2)
        shapes[key] = shapes.get(key, 0) + 1
        if not same:
            bad.append((None, cfg, a, b))
    return SuiteResult(total, bad, shapes, [])


def random_n4_boundary(rng: random.Random) -> Configuration:
    """Valid n = 4 configuration with at least one nilpotent matrix."""
    while True:
        roles = "".join(rng.choices(ROLES, k=3))
        if not set(roles) & set("NM"):
            continue
        cfg = realize_roles(roles, random_generic_eigen(rng, 4), rng)
        if cfg is not None:
            return cfg


def n4_strictly_semistable_search(count: int = 10_000, seed: int = 0):
    """Count valid strictly semistable points among random n = 4 boundary configurations."""
    found = []
    for i in range(count):
        cfg = random_n4_boundary(sample_rng(seed, i))
        if classify_stability(cfg).verdict == "strictly_semistable":
            found.append(cfg)
    return found


# ---------------------------------------------------------------------------
# n = 5 families near the special configurations
# ---------------------------------------------------------------------------


def _random_offdiag_point(rng, eigen, i) -> CompactifiedMatrix:
    """Semisimple point of class i with b, c != 0."""
    S, T, U, V = (small_rational(rng) for _ in range(4))
    return p1p1_to_matrix(P1P1Point(S, T, U, V, i), eigen)


def _random_borel(rng) -> Matrix:
    p = small_rational(rng)
    return Matrix([[p, small_rational(rng, nonzero=False)], [0, 1 / p]])


def m1_two_family(rng: random.Random, pair: tuple, eigen: EigenvalueData | None = None) -> Configuration:
    """n = 5, N at positions ``pair`` (consecutive), semisimple c != 0 elsewhere.

    Two equal adjacent nilpotents make the product vanish, so the trace
    condition holds; m1 = 2 and m2 = 0.  A random upper triangular
    conjugation keeps this normal form.
    """
    i1, i2 = pair
    if i2 != i1 + 1 or not 1 <= i1 < i2 <= 4:
        raise ValueError(f"positions {pair} are not adjacent in 1..4")
    eigen = eigen or random_generic_eigen(rng, 5)
    mats = []
    for i in range(1, 5):
        mats.append(STANDARD_NILPOTENT if i in pair else _random_offdiag_point(rng, eigen, i))
    cfg = Configuration(eigen, mats)
    return cfg.conjugate(_random_borel(rng))


def s1_orbit_sample(rng: random.Random, eigen: EigenvalueData | None = None) -> Configuration:
    from .stability import s1_configuration

    eigen = eigen or random_generic_eigen(rng, 5)
    while True:
        g = random_sl2(rng)
        if all(g[i, j] for i in range(2) for j in range(2)):
            return s1_configuration(eigen).conjugate(g)
