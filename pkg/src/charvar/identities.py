"""Polynomial identities behind the boundary computations for n = 4 and
n = 5, checked symbolically with :func:`poly_equal`.

``ap``/``am`` stand for the two eigenvalues alpha^+ and alpha^- of a
class; they are kept independent unless an identity needs ap * am = 1,
in which case the defect is exhibited as an explicit multiple of
(ap * am - 1).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from .algebra import Matrix, Polynomial, poly_equal, variables


def p1p1_tuple(S, T, U, V, ap, am):
    """(alpha^+ - alpha^-) times the P1 x P1 parametrization of a class.

    The class equations are homogeneous in (a, b, c, d, e), so clearing the
    common denominator does not change the projective point.
    """
    delta = ap - am
    return (
        am * S * U + ap * T * V,
        delta * S * V,
        delta * T * U,
        ap * S * U + am * T * V,
        S * U + T * V,
    )


def _block(a, b, c, d) -> Matrix:
    return Matrix([[a, b], [c, d]])


N_BLOCK = _block(0, 1, 0, 0)


def closure_trace_identity() -> bool:
    """a + d = k e on the parametrization, with k = ap + am."""
    S, T, U, V, ap, am = variables("S T U V ap am")
    a, b, c, d, e = p1p1_tuple(S, T, U, V, ap, am)
    return poly_equal(a + d, (ap + am) * e)


def closure_det_identity() -> bool:
    """ad - bc - e^2 = (ap am - 1) e^2, which vanishes since ap am = 1."""
    S, T, U, V, ap, am = variables("S T U V ap am")
    a, b, c, d, e = p1p1_tuple(S, T, U, V, ap, am)
    return poly_equal(a * d - b * c - e * e, (ap * am - 1) * e * e)


def cayley_hamilton_identity() -> bool:
    """A^2 - (k e A - e^2 I) = (a + d - k e) A - (ad - bc - e^2) I entrywise.

    On the closure the right side vanishes, so A^2 = k e A - e^2 I, and
    e = 0 forces A^2 = 0.
    """
    a, b, c, d, e, k = variables("a b c d e k")
    A = _block(a, b, c, d)
    lhs = A @ A - A.scale(k * e) + Matrix.identity(2).scale(e * e)
    rhs = A.scale(a + d - k * e) - Matrix.identity(2).scale(a * d - b * c - e * e)
    ok = lhs == rhs
    # at e = 0 the class equations read Tr A = 0 and det A = 0, and the
    # right side is then exactly the Cayley-Hamilton expression for A^2
    at_zero = Matrix([[x.subs({"e": 0}) for x in row] for row in lhs.rows])
    ch = A.scale(A.trace()) - Matrix.identity(2).scale(A.det())
    return ok and at_zero == A @ A and (A @ A - ch).is_zero()


def _normalized_m2(c2, e2, k2) -> Matrix:
    return _block(0, -e2 * e2, c2 * c2, k2 * c2 * e2)


def n4_normalized_trace_identity() -> bool:
    """Tr(N A2 A3) = c2 (c2 a3 + k2 e2 c3) for the normalized second matrix,
    which itself lies in class 2 (trace k2 c2 e2, determinant (c2 e2)^2)."""
    c2, e2, k2, a3, b3, c3, d3 = variables("c2 e2 k2 a3 b3 c3 d3")
    A2 = _normalized_m2(c2, e2, k2)
    tr = (N_BLOCK @ A2 @ _block(a3, b3, c3, d3)).trace()
    in_class = poly_equal(A2.trace(), k2 * (c2 * e2)) and poly_equal(A2.det(), (c2 * e2) ** 2)
    return in_class and poly_equal(tr, c2 * (c2 * a3 + k2 * e2 * c3))


def verify_n4_section_relation(perturb: bool = False) -> bool:
    """Substituting the parametrization of class 3 into c2 a3 + k2 e2 c3
    gives c2 (am S U + ap T V) + k2 (ap - am) e2 T U, and the invariant
    sections s1 = b1 c2^2 S U, s2 = b1 c2^2 T V, s3 = b1 c2 e2 T U satisfy
    am s1 + ap s2 + k2 (ap - am) s3 = b1 c2 (that expression).

    ``perturb`` flips the sign of am in the claimed boundary equation
    (negative control).
    """
    S, T, U, V, ap, am, c2, e2, k2, b1 = variables("S T U V ap am c2 e2 k2 b1")
    a3, b3, c3, d3, e3 = p1p1_tuple(S, T, U, V, ap, am)
    third = c2 * a3 + k2 * e2 * c3
    sign = -1 if perturb else 1
    boundary = c2 * (sign * am * S * U + ap * T * V) + k2 * (ap - am) * e2 * T * U
    s1 = b1 * c2 * c2 * S * U
    s2 = b1 * c2 * c2 * T * V
    s3 = b1 * c2 * e2 * T * U
    sections = am * s1 + ap * s2 + k2 * (ap - am) * s3
    return poly_equal(third, boundary) and poly_equal(sections, b1 * c2 * boundary)


def n5_fifth_equation():
    c2, e2, k2, a3, b3, c3, d3, a4, c4 = variables("c2 e2 k2 a3 b3 c3 d3 a4 c4")
    return c2 * a3 * a4 + k2 * e2 * c3 * a4 + c2 * b3 * c4 + k2 * e2 * d3 * c4


def n5_normalized_trace_identity() -> bool:
    """Tr(N A2 A3 A4) = c2 * (fifth equation of the e1 = 0 system)."""
    c2, e2, k2, a3, b3, c3, d3, a4, b4, c4, d4 = variables("c2 e2 k2 a3 b3 c3 d3 a4 b4 c4 d4")
    prod = N_BLOCK @ _normalized_m2(c2, e2, k2) @ _block(a3, b3, c3, d3) @ _block(a4, b4, c4, d4)
    return poly_equal(prod.trace(), c2 * n5_fifth_equation())


def verify_n5_factorization(perturb: bool = False, k2=None) -> bool:
    """With e3 = 0 and M3 = [[st, s^2], [-t^2, -st]] the fifth equation
    factors as (t a4 + s c4)(c2 s - k2 e2 t).

    ``k2`` may be a rational to specialize; ``perturb`` uses b3 = s^2 + 1.
    """
    s, t, c2, e2, a4, c4 = variables("s t c2 e2 a4 c4")
    k = Polynomial.var("k2") if k2 is None else Polynomial.coerce(k2)
    sub = {"a3": s * t, "b3": s * s + (1 if perturb else 0), "c3": -t * t, "d3": -s * t}
    eq = n5_fifth_equation().subs(sub)
    if k2 is not None:
        eq = eq.subs({"k2": k})
    target = (t * a4 + s * c4) * (c2 * s - k * e2 * t)
    return poly_equal(eq, target) or poly_equal(eq, -target)


@dataclass(frozen=True)
class Identity:
    name: str
    description: str
    check: Callable[[], bool]


IDENTITIES = (
    Identity("closure_trace", "P1xP1 parametrization satisfies a + d = k e", closure_trace_identity),
    Identity("closure_det", "P1xP1 parametrization satisfies ad - bc = e^2 when ap*am = 1", closure_det_identity),
    Identity("cayley_hamilton_nilpotent", "on the closure A^2 = k e A - e^2 I, so e = 0 gives A^2 = 0",
             cayley_hamilton_identity),
    Identity("n4_normalized_trace", "n=4, e1=0: trace condition reduces to c2 a3 + k2 e2 c3 = 0",
             n4_normalized_trace_identity),
    Identity("n4_section_relation", "n=4 boundary equation and the linear relation among invariant sections",
             verify_n4_section_relation),
    Identity("n5_normalized_trace", "n=5, e1=0: trace condition reduces to the quartic fifth equation",
             n5_normalized_trace_identity),
    Identity("n5_factorization", "n=5, e1=e3=0: fifth equation = (t a4 + s c4)(c2 s - k2 e2 t)",
             verify_n5_factorization),
)


def run_identities():
    return [(ident, bool(ident.check())) for ident in IDENTITIES]


def one_nilpotent_shapes(n: int):
    """Trace polynomials for n - 1 matrices: N (kernel e1), one matrix A with
    c != 0, and n - 3 matrices U_j = [[a_j, b_j], [0, d_j]] preserving e1.

    By cyclicity N can be put first; A takes each of the remaining slots.
    Returns ``(label, trace, expected)`` with expected = c times the d_j of
    the U's between N and A times the a_j of the U's after A.
    """
    if n < 4:
        raise ValueError("need n >= 4")
    a, b, c, d = variables("a b c d")
    A = _block(a, b, c, d)
    ups = []
    for j in range(1, n - 2):
        aj, bj, dj = variables(f"a{j} b{j} d{j}")
        ups.append((f"U{j}", _block(aj, bj, 0, dj), aj, dj))
    out = []
    for pos in range(n - 2):
        seq = ups[:pos] + [("A", A, None, None)] + ups[pos:]
        prod = N_BLOCK
        expected = c
        after = False
        for name, m, aj, dj in seq:
            prod = prod @ m
            if name == "A":
                after = True
            else:
                expected = expected * (aj if after else dj)
        label = " ".join(["N"] + [name for name, *_ in seq])
        out.append((label, prod.trace(), expected))
    return out


def verify_one_nilpotent_shapes(n: int) -> bool:
    """Every arrangement violates the trace condition.

    The right side k_n e_1 ... e_{n-1} vanishes since N has e = 0, while the
    trace is c times diagonal entries of the U_j: c != 0 by the shape and
    a_j d_j = e_j^2 != 0 because U_j is not nilpotent.  For n = 4 these are
    the configurations with m1 = m2 = 1, for n = 5 the ones with m1 = 1,
    m2 = 2 and a single further matrix off the flag.
    """
    return all(poly_equal(tr, want) for _, tr, want in one_nilpotent_shapes(n))


def verify_n4_no_strictly_semistable() -> bool:
    """n = 4 strictly semistable means 2 m1 + m2 = 3, i.e. m1 = m2 = 1; both
    normalized arrangements (N, A, U) and (N, U, A) fail the trace condition."""
    return verify_one_nilpotent_shapes(4)
