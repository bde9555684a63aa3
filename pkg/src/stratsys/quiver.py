"""Finite acyclic quivers and their numerical invariants.

A quiver is a finite directed multigraph with integer vertex labels and
string arrow labels.  All operations report caller-chosen labels, never
internal indices.  Dimension vectors are plain tuples of ints, ordered by
the quiver's vertex list.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Optional, Sequence

from .linalg import RationalMatrix, invert
from .report import CheckReport

DimVector = tuple[int, ...]


@dataclass(frozen=True)
class Arrow:
    src: int
    tgt: int
    label: str


@dataclass(frozen=True)
class Quiver:
    """Finite directed multigraph; expected to be acyclic and connected."""

    vertices: tuple[int, ...]
    arrows: tuple[Arrow, ...]

    @staticmethod
    def make(vertices: Sequence[int], arrows: Sequence[tuple]) -> "Quiver":
        arrs = []
        for a in arrows:
            if isinstance(a, Arrow):
                arrs.append(a)
            else:
                src, tgt, label = a
                arrs.append(Arrow(int(src), int(tgt), str(label)))
        return Quiver(tuple(int(v) for v in vertices), tuple(arrs))

    @property
    def n(self) -> int:
        return len(self.vertices)

    def index(self, vertex: int) -> int:
        return self.vertices.index(vertex)

    def arrows_out(self, vertex: int) -> list[Arrow]:
        return [a for a in self.arrows if a.src == vertex]

    def arrows_in(self, vertex: int) -> list[Arrow]:
        return [a for a in self.arrows if a.tgt == vertex]

    def arrow_by_label(self, label: str) -> Arrow:
        for a in self.arrows:
            if a.label == label:
                return a
        raise KeyError(f"no arrow labelled {label!r}")

    def opposite(self) -> "Quiver":
        """Reverse every arrow, keeping labels; duality sends reps here."""
        return Quiver(self.vertices, tuple(Arrow(a.tgt, a.src, a.label) for a in self.arrows))

    def zero_vector(self) -> DimVector:
        return tuple(0 for _ in self.vertices)

    def unit_vector(self, vertex: int) -> DimVector:
        i = self.index(vertex)
        return tuple(1 if j == i else 0 for j in range(self.n))

    # -- serialization ------------------------------------------------------

    def to_json(self) -> dict:
        return {
            "vertices": list(self.vertices),
            "arrows": [{"src": a.src, "tgt": a.tgt, "label": a.label} for a in self.arrows],
        }

    @staticmethod
    def from_json(data: dict) -> "Quiver":
        return Quiver.make(data["vertices"],
                           [(a["src"], a["tgt"], a["label"]) for a in data["arrows"]])


# ---------------------------------------------------------------------------
# validation
# ---------------------------------------------------------------------------

def validate(q: Quiver) -> CheckReport:
    """Check the quiver invariants; the report names the first violation."""
    report = CheckReport("quiver-valid")
    vertex_set = set(q.vertices)
    report.checked += 1
    if len(vertex_set) != len(q.vertices):
        report.add("distinct-vertices", value=list(q.vertices))
        return report
    if not q.vertices:
        report.add("nonempty", value=0)
        return report
    for a in q.arrows:
        report.checked += 1
        if a.src not in vertex_set or a.tgt not in vertex_set:
            report.add("endpoints", subject=(a.src, a.tgt), value=a.label)
            return report
    labels = [a.label for a in q.arrows]
    report.checked += 1
    if len(set(labels)) != len(labels):
        dup = sorted({l for l in labels if labels.count(l) > 1})[0]
        report.add("distinct-labels", value=dup)
        return report
    report.checked += 1
    if _has_cycle(q):
        report.add("acyclic")
        return report
    report.checked += 1
    if not _is_connected(q):
        report.add("connected")
        return report
    return report


def _has_cycle(q: Quiver) -> bool:
    remaining = set(q.vertices)
    out_deg = {v: 0 for v in q.vertices}
    for a in q.arrows:
        out_deg[a.src] += 1
    while remaining:
        sinks = [v for v in remaining if out_deg[v] == 0]
        if not sinks:
            return True
        for v in sinks:
            remaining.discard(v)
            for a in q.arrows:
                if a.tgt == v and a.src in remaining:
                    out_deg[a.src] -= 1
    return False


def _is_connected(q: Quiver) -> bool:
    if not q.vertices:
        return True
    adjacency: dict[int, set[int]] = {v: set() for v in q.vertices}
    for a in q.arrows:
        adjacency[a.src].add(a.tgt)
        adjacency[a.tgt].add(a.src)
    seen = {q.vertices[0]}
    stack = [q.vertices[0]]
    while stack:
        v = stack.pop()
        for w in adjacency[v]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == len(q.vertices)


# ---------------------------------------------------------------------------
# admissible numbering
# ---------------------------------------------------------------------------

def admissible_numbering(q: Quiver) -> list[int]:
    """Vertices listed so that position k gets number k+1 and arrows j->i have j>i.

    Deterministic: among the available sinks of the remaining quiver, the
    smallest caller label is numbered first.
    """
    remaining = set(q.vertices)
    numbered: list[int] = []
    while remaining:
        sinks = sorted(v for v in remaining
                       if all(a.tgt not in remaining for a in q.arrows if a.src == v))
        if not sinks:
            raise ValueError("quiver has a directed cycle; no admissible numbering")
        v = sinks[0]
        numbered.append(v)
        remaining.discard(v)
    return numbered


# ---------------------------------------------------------------------------
# Euler form and Coxeter transform
# ---------------------------------------------------------------------------

def euler_form(q: Quiver, x: Sequence[int], y: Sequence[int]) -> int:
    """Bilinear form <x,y> = sum_v x_v y_v - sum_{a: s->t} x_s y_t."""
    if len(x) != q.n or len(y) != q.n:
        raise ValueError("dimension vector length mismatch")
    total = sum(int(a) * int(b) for a, b in zip(x, y))
    for a in q.arrows:
        total -= int(x[q.index(a.src)]) * int(y[q.index(a.tgt)])
    return total


def path_count_matrix(q: Quiver) -> list[list[int]]:
    """C[i][j] = number of directed paths from vertices[i] to vertices[j]."""
    outgoing = {v: [a.tgt for a in q.arrows_out(v)] for v in q.vertices}

    @lru_cache(maxsize=None)
    def count(u: int, w: int) -> int:
        c = 1 if u == w else 0
        for t in outgoing[u]:
            c += count(t, w)
        return c

    return [[count(u, w) for w in q.vertices] for u in q.vertices]


def projective_dim_vector(q: Quiver, i: int) -> DimVector:
    """dim P_i: entry at v counts directed paths from i to v."""
    counts = path_count_matrix(q)
    return tuple(counts[q.index(i)][j] for j in range(q.n))


def injective_dim_vector(q: Quiver, i: int) -> DimVector:
    """dim I_i: entry at v counts directed paths from v to i."""
    counts = path_count_matrix(q)
    return tuple(counts[j][q.index(i)] for j in range(q.n))


@dataclass(frozen=True)
class CoxeterTransform:
    """Integer linear map with Phi(dim P_i) = -dim I_i for every vertex i."""

    quiver: Quiver
    matrix: tuple[tuple[int, ...], ...]
    inverse: tuple[tuple[int, ...], ...]

    def apply(self, x: Sequence[int]) -> DimVector:
        return tuple(sum(row[j] * int(x[j]) for j in range(len(x))) for row in self.matrix)

    def apply_inverse(self, x: Sequence[int]) -> DimVector:
        return tuple(sum(row[j] * int(x[j]) for j in range(len(x))) for row in self.inverse)

    def power(self, x: Sequence[int], k: int) -> DimVector:
        v = tuple(int(t) for t in x)
        step = self.apply if k >= 0 else self.apply_inverse
        for _ in range(abs(k)):
            v = step(v)
        return v


def coxeter_transform(q: Quiver) -> CoxeterTransform:
    """Construct Phi from the defining property P_i |-> -I_i (exact)."""
    n = q.n
    p_cols = [projective_dim_vector(q, v) for v in q.vertices]
    i_cols = [injective_dim_vector(q, v) for v in q.vertices]
    pmat = RationalMatrix.from_rows([[Fraction(p_cols[j][i]) for j in range(n)] for i in range(n)])
    imat = [[Fraction(-i_cols[j][i]) for j in range(n)] for i in range(n)]
    pinv = invert(pmat)
    phi_rows = []
    for i in range(n):
        row = []
        for j in range(n):
            val = sum(imat[i][k] * pinv.entries[k][j] for k in range(n))
            if val.denominator != 1:
                raise ValueError("Coxeter transform is not integral; invalid quiver?")
            row.append(int(val))
        phi_rows.append(tuple(row))
    phi = RationalMatrix.from_rows(phi_rows)
    phi_inv = invert(phi)
    inv_rows = []
    for i in range(n):
        row = []
        for j in range(n):
            val = phi_inv.entries[i][j]
            if val.denominator != 1:
                raise ValueError("Coxeter inverse is not integral")
            row.append(int(val))
        inv_rows.append(tuple(row))
    return CoxeterTransform(q, tuple(phi_rows), tuple(inv_rows))


def null_root(q: Quiver) -> Optional[DimVector]:
    """Primitive positive radical vector of the symmetrized Euler form, if any.

    For Euclidean quivers this is the null root delta; Dynkin quivers have
    none and wild quivers have no positive one.
    """
    n = q.n
    # symmetrized form matrix: B[i][j] = <e_i,e_j> + <e_j,e_i>
    e = [q.unit_vector(v) for v in q.vertices]
    rows = []
    for i in range(n):
        rows.append([Fraction(euler_form(q, e[i], e[j]) + euler_form(q, e[j], e[i]))
                     for j in range(n)])
    from math import gcd

    from .linalg import kernel_basis

    basis = kernel_basis(RationalMatrix.from_rows(rows))
    if len(basis) != 1:
        return None
    vec = basis[0]
    denoms = 1
    for x in vec:
        denoms = denoms * x.denominator // gcd(denoms, x.denominator)
    ints = [int(x * denoms) for x in vec]
    g = 0
    for x in ints:
        g = gcd(g, abs(x))
    if g:
        ints = [x // g for x in ints]
    if all(x <= 0 for x in ints):
        ints = [-x for x in ints]
    if any(x <= 0 for x in ints):
        return None
    return tuple(ints)


def defect(q: Quiver, dims: Sequence[int]) -> Optional[int]:
    """<delta, dim M>; negative on preprojectives, positive on preinjectives."""
    delta = null_root(q)
    if delta is None:
        return None
    return euler_form(q, delta, tuple(int(x) for x in dims))


# ---------------------------------------------------------------------------
# representation type
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class QuiverClass:
    tag: str  # "Dynkin" | "Euclidean" | "Wild"


def classify_type(q: Quiver) -> QuiverClass:
    """Classify by the underlying undirected multigraph.

    The Dynkin (A, D, E) and Euclidean (A~, D~, E~) shapes are recognized by
    their complete structural characterization (degree and branch analysis);
    every other connected graph is wild.
    """
    n = q.n
    m = len(q.arrows)
    if n == 1:
        return QuiverClass("Dynkin") if m == 0 else QuiverClass("Wild")
    # multiplicity of undirected edges
    pair_counts: dict[tuple[int, int], int] = {}
    for a in q.arrows:
        key = (min(a.src, a.tgt), max(a.src, a.tgt))
        pair_counts[key] = pair_counts.get(key, 0) + 1
    if any(u == v for u, v in pair_counts):
        return QuiverClass("Wild")  # loops
    if any(c >= 2 for c in pair_counts.values()):
        if n == 2 and m == 2:
            return QuiverClass("Euclidean")  # Kronecker double edge = A~1
        return QuiverClass("Wild")
    # simple underlying graph from here on
    deg = {v: 0 for v in q.vertices}
    for (u, v), c in pair_counts.items():
        deg[u] += c
        deg[v] += c
    degs = sorted(deg.values(), reverse=True)
    if m == n - 1:
        return _classify_tree(q, deg, degs)
    if m == n:
        if all(d == 2 for d in degs):
            return QuiverClass("Euclidean")  # cycle = A~_{n-1}
        return QuiverClass("Wild")
    return QuiverClass("Wild")


def _branch_lengths(q: Quiver, center: int) -> list[int]:
    """Lengths of the paths hanging off a branch vertex of a tree."""
    adjacency: dict[int, set[int]] = {v: set() for v in q.vertices}
    for a in q.arrows:
        adjacency[a.src].add(a.tgt)
        adjacency[a.tgt].add(a.src)
    lengths = []
    for start in adjacency[center]:
        length = 1
        prev, cur = center, start
        while True:
            nxt = [w for w in adjacency[cur] if w != prev]
            if len(nxt) != 1:
                break
            prev, cur = cur, nxt[0]
            length += 1
        lengths.append(length)
    return sorted(lengths)


def _classify_tree(q: Quiver, deg: dict[int, int], degs: list[int]) -> QuiverClass:
    n = q.n
    if degs[0] <= 2:
        return QuiverClass("Dynkin")  # path = A_n
    branch3 = [v for v, d in deg.items() if d == 3]
    branch4 = [v for v, d in deg.items() if d == 4]
    if degs[0] >= 5 or len(branch4) > 1 or (branch4 and branch3):
        return QuiverClass("Wild")
    if branch4:
        if _branch_lengths(q, branch4[0]) == [1, 1, 1, 1]:
            return QuiverClass("Euclidean")  # D~4 star
        return QuiverClass("Wild")
    if len(branch3) == 1:
        lengths = _branch_lengths(q, branch3[0])
        a, b, c = lengths
        if (a, b) == (1, 1):
            return QuiverClass("Dynkin")  # D_n
        if lengths == [1, 2, 2]:
            return QuiverClass("Dynkin")  # E6
        if lengths == [1, 2, 3]:
            return QuiverClass("Dynkin")  # E7
        if lengths == [1, 2, 4]:
            return QuiverClass("Dynkin")  # E8
        if lengths == [2, 2, 2]:
            return QuiverClass("Euclidean")  # E~6
        if lengths == [1, 3, 3]:
            return QuiverClass("Euclidean")  # E~7
        if lengths == [1, 2, 5]:
            return QuiverClass("Euclidean")  # E~8
        return QuiverClass("Wild")
    if len(branch3) == 2:
        # D~_n: two branch vertices joined by a path, four pendant edges;
        # equivalently every leaf hangs directly off a branch vertex
        adjacency: dict[int, set[int]] = {v: set() for v in q.vertices}
        for a in q.arrows:
            adjacency[a.src].add(a.tgt)
            adjacency[a.tgt].add(a.src)
        leaves = [v for v, d in deg.items() if d == 1]
        if all(deg[next(iter(adjacency[leaf]))] == 3 for leaf in leaves):
            return QuiverClass("Euclidean")
        return QuiverClass("Wild")
    return QuiverClass("Wild")


# ---------------------------------------------------------------------------
# named constructors
# ---------------------------------------------------------------------------

def kronecker(m: int) -> Quiver:
    """Two vertices 1, 2 with m parallel arrows 2 -> 1."""
    if m < 1:
        raise ValueError("kronecker quiver needs m >= 1")
    return Quiver.make([1, 2], [(2, 1, f"a{k}") for k in range(1, m + 1)])


def canonical_apq(p: int, q: int) -> Quiver:
    """Canonically oriented Euclidean cycle with arm lengths p <= q.

    Vertices 0..p+q-1; the unique source p+q-1 feeds two directed chains of
    lengths p (through p-1,...,1) and q (through p+q-2,...,p) that meet at the
    unique sink 0.
    """
    if not (1 <= p <= q):
        raise ValueError("need 1 <= p <= q")
    nv = p + q
    vertices = list(range(nv))
    arrows: list[tuple[int, int, str]] = []
    counter = 1

    def arr(src: int, tgt: int):
        nonlocal counter
        arrows.append((src, tgt, f"a{counter}"))
        counter += 1

    for i in range(1, p):
        arr(i, i - 1)  # upper chain ... 2->1->0
    arr(nv - 1, p - 1)  # source into the upper chain (p-1 is 0 when p = 1)
    if q == 1:
        arr(nv - 1, 0)  # p = q = 1: second parallel arrow, Kronecker shape
    else:
        arr(nv - 1, nv - 2)
        for i in range(nv - 2, p, -1):
            arr(i, i - 1)  # lower chain ... p+1->p
        arr(p, 0)
    return Quiver.make(vertices, arrows)
