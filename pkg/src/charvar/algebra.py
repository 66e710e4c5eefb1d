"""Exact arithmetic: rationals, sparse multivariate polynomials over Q,
small ring-generic matrices and integer Smith normal form.

Rationals are :class:`fractions.Fraction` throughout.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import gcd
from typing import Iterable, Mapping, Sequence, Union

Scalar = Union[int, Fraction]


def as_rational(x) -> Fraction:
    """Coerce ints, Fractions and "p/q" strings to a reduced Fraction."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x.strip())
    raise TypeError(f"cannot interpret {x!r} as a rational")


def rational_to_str(x) -> str:
    """Serialize as "p/q", or "p" when the denominator is 1."""
    return str(as_rational(x))


def rational_from_str(s: str) -> Fraction:
    return Fraction(s.strip())


# ---------------------------------------------------------------------------
# Polynomials
# ---------------------------------------------------------------------------

def _grlex_key(exps: tuple) -> tuple:
    return (sum(exps), exps)


class Polynomial:
    """Sparse polynomial with Fraction coefficients.

    ``variables`` is a sorted tuple of names; ``terms`` maps exponent tuples
    (aligned with ``variables``) to nonzero coefficients.  Values are treated
    as immutable.
    """

    __slots__ = ("variables", "terms")

    def __init__(self, variables: Iterable[str] = (), terms: Mapping[tuple, Scalar] | None = None):
        variables = tuple(variables)
        if len(set(variables)) != len(variables):
            raise ValueError("duplicate variable names")
        if list(variables) != sorted(variables):
            order = sorted(variables)
            perm = [variables.index(v) for v in order]
            terms = {tuple(e[i] for i in perm): c for e, c in (terms or {}).items()}
            variables = tuple(order)
        clean = {}
        for exps, c in (terms or {}).items():
            exps = tuple(int(e) for e in exps)
            if len(exps) != len(variables):
                raise ValueError("exponent vector does not match variable arity")
            if any(e < 0 for e in exps):
                raise ValueError("negative exponent")
            c = as_rational(c)
            if c:
                clean[exps] = clean.get(exps, Fraction(0)) + c
                if not clean[exps]:
                    del clean[exps]
        self.variables = variables
        self.terms = clean

    # -- constructors -------------------------------------------------------
    @classmethod
    def var(cls, name: str) -> "Polynomial":
        return cls((name,), {(1,): 1})

    @classmethod
    def const(cls, c: Scalar) -> "Polynomial":
        return cls((), {(): c})

    @classmethod
    def coerce(cls, x) -> "Polynomial":
        if isinstance(x, Polynomial):
            return x
        return cls.const(as_rational(x))

    # -- alignment ----------------------------------------------------------
    def with_variables(self, variables: Sequence[str]) -> "Polynomial":
        variables = tuple(sorted(set(variables)))
        missing = set(self.variables) - set(variables)
        if missing:
            # only zero exponents may be dropped
            for exps in self.terms:
                for v, e in zip(self.variables, exps):
                    if v in missing and e:
                        raise ValueError(f"variable {v} occurs in the polynomial")
        index = {v: i for i, v in enumerate(self.variables)}
        out = {}
        for exps, c in self.terms.items():
            out[tuple(exps[index[v]] if v in index else 0 for v in variables)] = c
        p = Polynomial.__new__(Polynomial)
        p.variables = variables
        p.terms = out
        return p

    def _align(self, other: "Polynomial"):
        if self.variables == other.variables:
            return self, other
        vs = tuple(sorted(set(self.variables) | set(other.variables)))
        return self.with_variables(vs), other.with_variables(vs)

    def trim(self) -> "Polynomial":
        """Drop variables that do not occur."""
        used = [v for i, v in enumerate(self.variables) if any(e[i] for e in self.terms)]
        return self.with_variables(used)

    # -- arithmetic ---------------------------------------------------------
    def __add__(self, other):
        a, b = self._align(Polynomial.coerce(other))
        terms = dict(a.terms)
        for e, c in b.terms.items():
            s = terms.get(e, 0) + c
            if s:
                terms[e] = s
            else:
                terms.pop(e, None)
        return Polynomial._raw(a.variables, terms)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial._raw(self.variables, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-Polynomial.coerce(other))

    def __rsub__(self, other):
        return Polynomial.coerce(other) - self

    def __mul__(self, other):
        a, b = self._align(Polynomial.coerce(other))
        terms: dict = {}
        for e1, c1 in a.terms.items():
            for e2, c2 in b.terms.items():
                e = tuple(x + y for x, y in zip(e1, e2))
                s = terms.get(e, 0) + c1 * c2
                if s:
                    terms[e] = s
                else:
                    terms.pop(e, None)
        return Polynomial._raw(a.variables, terms)

    __rmul__ = __mul__

    def __truediv__(self, other):
        c = as_rational(other)
        if not c:
            raise ZeroDivisionError("polynomial division by zero")
        return Polynomial._raw(self.variables, {e: v / c for e, v in self.terms.items()})

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power")
        result = Polynomial.const(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    @staticmethod
    def _raw(variables, terms):
        p = Polynomial.__new__(Polynomial)
        p.variables = variables
        p.terms = terms
        return p

    # -- comparison ---------------------------------------------------------
    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other):
        if isinstance(other, (int, Fraction, Polynomial)):
            return poly_equal(self, Polynomial.coerce(other))
        return NotImplemented

    def __hash__(self):
        t = self.trim()
        return hash((t.variables, frozenset(t.terms.items())))

    def __bool__(self):
        return bool(self.terms)

    # -- inspection ---------------------------------------------------------
    def degree(self) -> int:
        return max((sum(e) for e in self.terms), default=-1)

    def degree_in(self, name: str) -> int:
        if name not in self.variables:
            return 0 if self.terms else -1
        i = self.variables.index(name)
        return max((e[i] for e in self.terms), default=-1)

    def coefficient(self, monomial: Mapping[str, int]) -> Fraction:
        """Coefficient of the monomial given as {variable: exponent}."""
        for v, e in monomial.items():
            if e and v not in self.variables:
                return Fraction(0)
        exps = tuple(monomial.get(v, 0) for v in self.variables)
        return self.terms.get(exps, Fraction(0))

    def sorted_terms(self):
        """Terms in descending graded-lex order."""
        return sorted(self.terms.items(), key=lambda t: _grlex_key(t[0]), reverse=True)

    def homogeneous_part(self, d: int) -> "Polynomial":
        return Polynomial._raw(self.variables, {e: c for e, c in self.terms.items() if sum(e) == d})

    def is_constant(self) -> bool:
        return all(not any(e) for e in self.terms)

    def constant_value(self) -> Fraction:
        return self.terms.get(tuple(0 for _ in self.variables), Fraction(0))

    # -- evaluation ---------------------------------------------------------
    def eval(self, assignment: Mapping[str, Scalar]) -> Fraction:
        return poly_eval(self, assignment)

    def subs(self, mapping: Mapping[str, object]) -> "Polynomial":
        """Substitute polynomials (or scalars) for some variables."""
        mapping = {k: Polynomial.coerce(v) for k, v in mapping.items()}
        keep = [v for v in self.variables if v not in mapping]
        result = Polynomial.const(0)
        cache: dict = {}
        for exps, c in self.terms.items():
            term = Polynomial(keep, {tuple(e for v, e in zip(self.variables, exps) if v not in mapping): c})
            for v, e in zip(self.variables, exps):
                if v in mapping and e:
                    key = (v, e)
                    if key not in cache:
                        cache[key] = mapping[v] ** e
                    term = term * cache[key]
            result = result + term
        return result

    def __repr__(self):
        return f"Polynomial({self})"

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for exps, c in self.sorted_terms():
            mono = "*".join(v if e == 1 else f"{v}^{e}" for v, e in zip(self.variables, exps) if e)
            if not mono:
                parts.append(str(c))
            elif c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append("-" + mono)
            else:
                parts.append(f"{c}*{mono}")
        return " + ".join(parts).replace("+ -", "- ")


def variables(names: str) -> tuple:
    """``x, y = variables("x y")``"""
    return tuple(Polynomial.var(n) for n in names.split())


def poly_eval(p: Polynomial, assignment: Mapping[str, Scalar]) -> Fraction:
    """Exact evaluation; every variable of ``p`` must be assigned."""
    p = Polynomial.coerce(p)
    for v in p.variables:
        if v not in assignment:
            raise KeyError(f"no value for variable {v!r}")
    vals = [as_rational(assignment[v]) for v in p.variables]
    total = Fraction(0)
    for exps, c in p.terms.items():
        t = c
        for x, e in zip(vals, exps):
            if e:
                t *= x ** e
        total += t
    return total


def poly_equal(p, q) -> bool:
    """True iff p - q is the zero polynomial."""
    return (Polynomial.coerce(p) - Polynomial.coerce(q)).is_zero()


# ---------------------------------------------------------------------------
# Matrices
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Matrix:
    """Rectangular matrix with entries in Q or in Q[x, ...]."""

    rows: tuple

    def __init__(self, rows):
        rows = tuple(tuple(_coerce_entry(x) for x in r) for r in rows)
        if not rows or not rows[0]:
            raise ValueError("matrix must have at least one row and column")
        if any(len(r) != len(rows[0]) for r in rows):
            raise ValueError("ragged matrix")
        object.__setattr__(self, "rows", rows)

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        return cls([[1 if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def diag(cls, entries) -> "Matrix":
        n = len(entries)
        return cls([[entries[i] if i == j else 0 for j in range(n)] for i in range(n)])

    @property
    def shape(self):
        return len(self.rows), len(self.rows[0])

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def __add__(self, other: "Matrix") -> "Matrix":
        if self.shape != other.shape:
            raise ValueError("shape mismatch")
        return Matrix([[a + b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)])

    def __sub__(self, other: "Matrix") -> "Matrix":
        return self + other.scale(-1)

    def scale(self, c) -> "Matrix":
        return Matrix([[c * a for a in r] for r in self.rows])

    def __matmul__(self, other: "Matrix") -> "Matrix":
        n, k = self.shape
        k2, m = other.shape
        if k != k2:
            raise ValueError("shape mismatch")
        cols = list(zip(*other.rows))
        out = []
        for r in self.rows:
            row = []
            for c in cols:
                s = r[0] * c[0]
                for x, y in zip(r[1:], c[1:]):
                    s = s + x * y
                row.append(s)
            out.append(row)
        return Matrix(out)

    __mul__ = __matmul__

    def __pow__(self, n: int) -> "Matrix":
        if n < 0:
            return self.inverse() ** (-n)
        result = Matrix.identity(self.shape[0])
        for _ in range(n):
            result = result @ self
        return result

    def transpose(self) -> "Matrix":
        return Matrix(list(zip(*self.rows)))

    def trace(self):
        n, m = self.shape
        if n != m:
            raise ValueError("trace of a non-square matrix")
        s = self.rows[0][0]
        for i in range(1, n):
            s = s + self.rows[i][i]
        return s

    def det(self):
        n, m = self.shape
        if n != m:
            raise ValueError("determinant of a non-square matrix")
        return _det(self.rows)

    def inverse(self) -> "Matrix":
        """Inverse over Q by Gauss-Jordan elimination."""
        n, m = self.shape
        if n != m:
            raise ValueError("inverse of a non-square matrix")
        a = [[as_rational(x) for x in r] + [Fraction(int(i == j)) for j in range(n)]
             for i, r in enumerate(self.rows)]
        for col in range(n):
            piv = next((r for r in range(col, n) if a[r][col]), None)
            if piv is None:
                raise ZeroDivisionError("singular matrix")
            a[col], a[piv] = a[piv], a[col]
            p = a[col][col]
            a[col] = [x / p for x in a[col]]
            for r in range(n):
                if r != col and a[r][col]:
                    f = a[r][col]
                    a[r] = [x - f * y for x, y in zip(a[r], a[col])]
        return Matrix([r[n:] for r in a])

    def conjugate(self, p: "Matrix") -> "Matrix":
        """Return p @ self @ p^-1."""
        return p @ self @ p.inverse()

    def is_zero(self) -> bool:
        return all(not x for r in self.rows for x in r)

    def __eq__(self, other):
        if not isinstance(other, Matrix) or self.shape != other.shape:
            return NotImplemented if not isinstance(other, Matrix) else False
        return all(_entry_eq(a, b) for r, s in zip(self.rows, other.rows) for a, b in zip(r, s))

    def __hash__(self):
        return hash(self.rows)

    def tolist(self):
        return [list(r) for r in self.rows]

    def __repr__(self):
        return "Matrix(" + repr([[str(x) for x in r] for r in self.rows]) + ")"


def _coerce_entry(x):
    if isinstance(x, Polynomial):
        return x
    return as_rational(x)


def _entry_eq(a, b):
    if isinstance(a, Polynomial) or isinstance(b, Polynomial):
        return poly_equal(a, b)
    return a == b


def _det(rows):
    n = len(rows)
    if n == 1:
        return rows[0][0]
    if n == 2:
        return rows[0][0] * rows[1][1] - rows[0][1] * rows[1][0]
    total = None
    for j in range(n):
        if not _is_zero(rows[0][j]):
            minor = [r[:j] + r[j + 1:] for r in rows[1:]]
            term = rows[0][j] * _det(minor)
            if j % 2:
                term = -term
            total = term if total is None else total + term
    return Fraction(0) if total is None else total


def _is_zero(x):
    return x.is_zero() if isinstance(x, Polynomial) else not x


# ---------------------------------------------------------------------------
# Integer Smith normal form
# ---------------------------------------------------------------------------

def smith_normal_form_with_transforms(m: Sequence[Sequence[int]]):
    """Return (U, D, V) with U @ A @ V == D, U and V unimodular.

    D is diagonal with nonnegative entries d1 | d2 | ... ; matrices are
    lists of lists of Python ints.
    """
    a = [[int(x) for x in r] for r in m]
    nr = len(a)
    nc = len(a[0]) if nr else 0
    u = [[int(i == j) for j in range(nr)] for i in range(nr)]
    v = [[int(i == j) for j in range(nc)] for i in range(nc)]

    def swap_rows(i, j):
        a[i], a[j] = a[j], a[i]
        u[i], u[j] = u[j], u[i]

    def swap_cols(i, j):
        for r in a:
            r[i], r[j] = r[j], r[i]
        for r in v:
            r[i], r[j] = r[j], r[i]

    def add_row(dst, src, f):  # row_dst += f * row_src
        a[dst] = [x + f * y for x, y in zip(a[dst], a[src])]
        u[dst] = [x + f * y for x, y in zip(u[dst], u[src])]

    def add_col(dst, src, f):
        for r in a:
            r[dst] += f * r[src]
        for r in v:
            r[dst] += f * r[src]

    t = 0
    while t < min(nr, nc):
        nonzero = [(abs(a[i][j]), i, j) for i in range(t, nr) for j in range(t, nc) if a[i][j]]
        if not nonzero:
            break
        _, i, j = min(nonzero)
        swap_rows(t, i)
        swap_cols(t, j)
        while True:
            done = True
            for i in range(t + 1, nr):
                if a[i][t]:
                    q = a[i][t] // a[t][t]
                    add_row(i, t, -q)
                    if a[i][t]:
                        done = False
            for j in range(t + 1, nc):
                if a[t][j]:
                    q = a[t][j] // a[t][t]
                    add_col(j, t, -q)
                    if a[t][j]:
                        done = False
            if done:
                # pivot must divide the remaining block
                bad = next(((i, j) for i in range(t + 1, nr) for j in range(t + 1, nc)
                            if a[i][j] % a[t][t]), None)
                if bad is None:
                    break
                add_row(t, bad[0], 1)
                continue
            # move the smallest remaining entry of row/column t into the pivot
            cand = [(abs(a[i][t]), i, t) for i in range(t, nr) if a[i][t]]
            cand += [(abs(a[t][j]), t, j) for j in range(t, nc) if a[t][j]]
            _, i, j = min(cand)
            swap_rows(t, i)
            swap_cols(t, j)
        if a[t][t] < 0:
            a[t] = [-x for x in a[t]]
            u[t] = [-x for x in u[t]]
        t += 1
    return u, a, v


def smith_normal_form(m: Sequence[Sequence[int]]):
    """Invariant factors of an integer matrix.

    Returns ``(diagonal, rank)`` where ``diagonal`` lists the nonzero
    invariant factors d1 | d2 | ... and ``rank == len(diagonal)``.
    """
    if not m or not m[0]:
        return [], 0
    _, d, _ = smith_normal_form_with_transforms(m)
    diag = [d[i][i] for i in range(min(len(d), len(d[0]))) if d[i][i]]
    return diag, len(diag)


def integer_det(m) -> int:
    return int(_det([[Fraction(x) for x in r] for r in m]))


def minors_gcd(m, k: int) -> int:
    """gcd of all k x k minors (brute force)."""
    g = 0
    rows, cols = len(m), len(m[0])
    for ri in combinations(range(rows), k):
        for ci in combinations(range(cols), k):
            g = gcd(g, integer_det([[m[i][j] for j in ci] for i in ri]))
    return g


def solve_linear(a: Sequence[Sequence[Scalar]], b: Sequence[Scalar]):
    """Exact solution of a (possibly overdetermined) consistent system.

    Returns ``(solution, rank)``; solution is None when the system is
    inconsistent or the rank is below the number of unknowns.
    """
    n = len(a[0])
    rows = [[as_rational(x) for x in r] + [as_rational(y)] for r, y in zip(a, b)]
    rank = 0
    pivots = []
    for col in range(n):
        piv = next((r for r in range(rank, len(rows)) if rows[r][col]), None)
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        p = rows[rank][col]
        rows[rank] = [x / p for x in rows[rank]]
        for r in range(len(rows)):
            if r != rank and rows[r][col]:
                f = rows[r][col]
                rows[r] = [x - f * y for x, y in zip(rows[r], rows[rank])]
        pivots.append(col)
        rank += 1
    if any(r[n] for r in rows[rank:]):
        return None, rank
    if rank < n:
        return None, rank
    sol = [Fraction(0)] * n
    for i, col in enumerate(pivots):
        sol[col] = rows[i][n]
    return sol, rank
