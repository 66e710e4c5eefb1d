"""Abstract simplicial complexes, reduced integral homology and the boundary
complexes of the n = 4 and n = 5 character varieties."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Sequence

from .algebra import smith_normal_form


@dataclass(frozen=True)
class SimplicialComplex:
    """Vertex labels plus maximal faces (sorted index tuples, an antichain)."""

    vertices: tuple
    facets: tuple

    @property
    def dim(self) -> int:
        return max((len(f) for f in self.facets), default=0) - 1

    def faces(self, k: int) -> list:
        """Sorted list of k-dimensional faces (index tuples)."""
        out = set()
        for f in self.facets:
            if len(f) > k:
                out.update(combinations(f, k + 1))
        return sorted(out)

    def all_faces(self) -> set:
        out = set()
        for f in self.facets:
            for k in range(1, len(f) + 1):
                out.update(combinations(f, k))
        return out

    def f_vector(self) -> list:
        return [len(self.faces(k)) for k in range(self.dim + 1)]

    def euler_characteristic(self) -> int:
        return sum((-1) ** k * n for k, n in enumerate(self.f_vector()))

    def labelled_facets(self) -> list:
        return [tuple(self.vertices[i] for i in f) for f in self.facets]

    def has_face(self, labels: Iterable[str]) -> bool:
        idx = tuple(sorted(self.vertices.index(x) for x in labels))
        return any(set(idx) <= set(f) for f in self.facets)

    def link(self, v: int) -> "SimplicialComplex":
        """Link of vertex index v, relabelled on the remaining vertices."""
        faces = [tuple(x for x in f if x != v) for f in self.facets if v in f]
        faces = [f for f in faces if f]
        used = sorted({x for f in faces for x in f})
        labels = [self.vertices[x] for x in used]
        return build_complex(labels, [[self.vertices[x] for x in f] for f in faces])

    def to_json(self) -> dict:
        return {"vertices": list(self.vertices), "facets": [list(f) for f in self.facets]}

    @classmethod
    def from_json(cls, data: dict) -> "SimplicialComplex":
        verts = data["vertices"]
        facets = []
        for f in data["facets"]:
            if any(not 0 <= i < len(verts) for i in f):
                raise ValueError(f"facet {f} has an index out of range")
            facets.append([verts[i] for i in f])
        return build_complex(verts, facets)


def build_complex(vertices: Sequence[str], facets: Iterable[Iterable[str]]) -> SimplicialComplex:
    """Normalize to an antichain of facets; facets are given by vertex labels."""
    vertices = tuple(vertices)
    dup = [v for v, c in Counter(vertices).items() if c > 1]
    if dup:
        raise ValueError(f"duplicate vertex labels: {dup}")
    pos = {v: i for i, v in enumerate(vertices)}
    sets = set()
    for f in facets:
        f = list(f)
        if not f:
            raise ValueError("empty facet")
        try:
            sets.add(frozenset(pos[x] for x in f))
        except KeyError as exc:
            raise ValueError(f"unknown vertex {exc.args[0]!r}") from None
    # isolated vertices are 0-faces
    covered = set().union(*sets) if sets else set()
    sets.update(frozenset([i]) for i in range(len(vertices)) if i not in covered)
    maximal = [s for s in sets if not any(s < t for t in sets)]
    return SimplicialComplex(vertices, tuple(sorted(tuple(sorted(s)) for s in maximal)))


# ---------------------------------------------------------------------------
# Homology
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class HomologyProfile:
    reduced_betti: tuple
    torsion: tuple  # per degree, invariant factors > 1

    def to_json(self) -> dict:
        return {"reduced_betti": list(self.reduced_betti), "torsion": [list(t) for t in self.torsion]}


def boundary_matrix(c: SimplicialComplex, k: int) -> list:
    """d_k : C_k -> C_{k-1} as an integer matrix (rows = (k-1)-faces).

    For k = 0 this is the augmentation C_0 -> Z, giving reduced homology.
    """
    cols = c.faces(k)
    if k == 0:
        return [[1] * len(cols)]
    rows = c.faces(k - 1)
    index = {f: i for i, f in enumerate(rows)}
    mat = [[0] * len(cols) for _ in rows]
    for j, f in enumerate(cols):
        for i in range(len(f)):
            mat[index[f[:i] + f[i + 1:]]][j] = (-1) ** i
    return mat


def _snf_diagonal(mat: list) -> list:
    if not mat or not mat[0]:
        return []
    factors, _ = smith_normal_form(mat)
    return [abs(int(x)) for x in factors]


def homology(c: SimplicialComplex) -> HomologyProfile:
    dim = c.dim
    ranks, diags = {}, {}
    for k in range(dim + 2):
        if k <= dim:
            diags[k] = _snf_diagonal(boundary_matrix(c, k))
        else:
            diags[k] = []
        ranks[k] = len(diags[k])
    betti, torsion = [], []
    for k in range(dim + 1):
        n_k = len(c.faces(k))
        betti.append(n_k - ranks[k] - ranks[k + 1])
        torsion.append(tuple(sorted(x for x in diags[k + 1] if x > 1)))
    return HomologyProfile(tuple(betti), tuple(torsion))


def sphere_profile(dim: int) -> HomologyProfile:
    return HomologyProfile(tuple(1 if k == dim else 0 for k in range(dim + 1)), ((),) * (dim + 1))


# ---------------------------------------------------------------------------
# Constructions and certification
# ---------------------------------------------------------------------------


def suspension(c: SimplicialComplex, apex1: str, apex2: str) -> SimplicialComplex:
    if apex1 == apex2 or apex1 in c.vertices or apex2 in c.vertices:
        raise ValueError(f"apex labels {apex1!r}, {apex2!r} collide with existing vertices")
    facets = []
    for f in c.labelled_facets():
        facets.append(f + (apex1,))
        facets.append(f + (apex2,))
    return build_complex(c.vertices + (apex1, apex2), facets)


def is_pseudomanifold(c: SimplicialComplex, dim: int) -> bool:
    if any(len(f) != dim + 1 for f in c.facets):
        return False
    counts = Counter()
    for f in c.facets:
        for ridge in combinations(f, dim):
            counts[ridge] += 1
    return all(v == 2 for v in counts.values())


def _is_single_cycle(c: SimplicialComplex) -> bool:
    if c.dim != 1 or any(len(f) != 2 for f in c.facets):
        return False
    deg = Counter(x for f in c.facets for x in f)
    if any(v != 2 for v in deg.values()) or len(deg) != len(c.vertices):
        return False
    # connected
    adj = {v: set() for v in range(len(c.vertices))}
    for a, b in c.facets:
        adj[a].add(b)
        adj[b].add(a)
    seen, stack = {0}, [0]
    while stack:
        for w in adj[stack.pop()] - seen:
            seen.add(w)
            stack.append(w)
    return len(seen) == len(c.vertices)


def certify_sphere(c: SimplicialComplex, dim: int) -> bool:
    """Homology of S^dim, pseudomanifold, and sphere links (dim 2, 3)."""
    if dim < 0 or c.dim != dim:
        return False
    if homology(c) != sphere_profile(dim):
        return False
    if dim == 0:
        return len(c.vertices) == 2
    if not is_pseudomanifold(c, dim):
        return False
    if dim == 1:
        return _is_single_cycle(c)
    for v in range(len(c.vertices)):
        lk = c.link(v)
        ok = _is_single_cycle(lk) if dim == 2 else certify_sphere(lk, dim - 1)
        if not ok:
            return False
    return True


# ---------------------------------------------------------------------------
# Boundary complexes
# ---------------------------------------------------------------------------

N5_EQUATOR_VERTICES = ("E1", "E2", "E3", "E4", "ex13p", "ex13m", "ex24p", "ex24m")
N5_EQUATOR_FACETS = (
    ("E1", "E2", "ex13p"), ("E2", "E3", "ex13p"), ("E3", "E4", "ex13m"), ("E4", "E1", "ex13m"),
    ("E1", "ex13p", "ex13m"), ("E3", "ex13p", "ex13m"),
    ("E1", "E2", "ex24p"), ("E4", "E1", "ex24p"), ("E2", "E3", "ex24m"), ("E3", "E4", "ex24m"),
    ("E2", "ex24p", "ex24m"), ("E4", "ex24p", "ex24m"),
)

CASES = ("n4", "n5_equator", "n5_full")


def _case_key(case: str) -> str:
    key = case.replace("-", "_")
    if key not in CASES:
        raise ValueError(f"unknown case {case!r}; expected one of {', '.join(CASES)}")
    return key


def boundary_complex(case: str) -> SimplicialComplex:
    key = _case_key(case)
    if key == "n4":
        # three lines X = 0, Y = 0, Z = 0 at infinity, no common point
        return build_complex(("E1", "E2", "E3"), [("E1", "E2"), ("E2", "E3"), ("E3", "E1")])
    eq = build_complex(N5_EQUATOR_VERTICES, N5_EQUATOR_FACETS)
    if key == "n5_equator":
        return eq
    return suspension(eq, "ex1", "ex2")


NONEMPTY = "nonempty_irreducible"
EMPTY = "empty"

# pairwise statuses of the divisors at infinity for n = 5 after both blow-ups
_N5_EMPTY_PAIRS = {
    frozenset(p) for p in (
        ("E1", "E3"), ("E2", "E4"),          # separated by the second blow-up
        ("ex13p", "E4"), ("ex13m", "E2"), ("ex24p", "E3"), ("ex24m", "E1"),
        ("ex13p", "ex24p"), ("ex13p", "ex24m"), ("ex13m", "ex24p"), ("ex13m", "ex24m"),
        ("ex1", "ex2"),
    )
}


def intersection_table(case: str):
    """(vertex labels, status) for every pair, triple and quadruple.

    n4: pairwise intersections of the three lines are points, the triple is
    empty.  n5: the pairwise table above; a triple or quadruple is nonempty
    exactly when it does not contain ex1 and ex2 together and is a face of
    the complex (each ex_i meets every stratum of the equator, and 4-tuples
    avoiding ex_i are empty).
    """
    key = "n5_full" if case == "n5" else _case_key(case)
    if key == "n4":
        verts = ("E1", "E2", "E3")
        table = [(p, NONEMPTY) for p in combinations(verts, 2)]
        table.append((verts, EMPTY))
        return table
    verts = N5_EQUATOR_VERTICES + ("ex1", "ex2")
    eq = boundary_complex("n5_equator")
    eq_faces = {frozenset(eq.vertices[i] for i in f) for f in eq.all_faces()}
    table = []
    for k in (2, 3, 4):
        for combo in combinations(verts, k):
            s = set(combo)
            if k == 2:
                status = EMPTY if frozenset(s) in _N5_EMPTY_PAIRS else NONEMPTY
            else:
                apexes = s & {"ex1", "ex2"}
                rest = frozenset(s - apexes)
                ok = len(apexes) <= 1 and rest in eq_faces
                status = NONEMPTY if ok else EMPTY
            table.append((combo, status))
    return table


def table_consistent(case: str) -> bool:
    """Faces of the complex are exactly the nonempty entries, and a simplex
    is a face iff all of its pairs are nonempty (flag condition)."""
    key = "n5_full" if case == "n5" else _case_key(case)
    c = boundary_complex("n4" if key == "n4" else "n5_full")
    status = {frozenset(v): s for v, s in intersection_table(key)}
    for verts, s in status.items():
        if c.has_face(verts) != (s == NONEMPTY):
            return False
        pairs_ok = all(status[frozenset(p)] == NONEMPTY for p in combinations(sorted(verts), 2))
        if len(verts) > 2 and key != "n4" and pairs_ok != (s == NONEMPTY):
            return False
    return True


def intersection_status(case: str, labels) -> str:
    want = frozenset(labels)
    for verts, status in intersection_table(case):
        if frozenset(verts) == want:
            return status
    raise KeyError(f"no table entry for {sorted(want)}")
