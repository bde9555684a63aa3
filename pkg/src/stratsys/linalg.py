"""Exact dense linear algebra over the rationals.

Everything here works with arbitrary-precision ``fractions.Fraction`` entries
(plain ``int`` entries are accepted and treated as rationals).  No floating
point is used anywhere.  Pivoting is deterministic (first nonzero entry in
column order), so kernel bases and particular solutions are reproducible.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Iterable, Optional, Sequence


Scalar = Fraction  # public alias: all entries are exact rationals


@dataclass(frozen=True)
class RationalMatrix:
    """Immutable dense matrix with exact rational entries."""

    rows: int
    cols: int
    entries: tuple[tuple[Fraction, ...], ...]

    def __post_init__(self):
        if self.rows < 0 or self.cols < 0:
            raise ValueError("matrix dimensions must be nonnegative")
        if len(self.entries) != self.rows:
            raise ValueError("row count mismatch")
        for row in self.entries:
            if len(row) != self.cols:
                raise ValueError("column count mismatch")

    @staticmethod
    def from_rows(rows: Sequence[Sequence], cols: Optional[int] = None) -> "RationalMatrix":
        data = tuple(tuple(Fraction(x) for x in row) for row in rows)
        if data:
            ncols = len(data[0])
        elif cols is not None:
            ncols = cols
        else:
            ncols = 0
        return RationalMatrix(len(data), ncols, data)

    @staticmethod
    def zero(rows: int, cols: int) -> "RationalMatrix":
        z = Fraction(0)
        return RationalMatrix(rows, cols, tuple(tuple(z for _ in range(cols)) for _ in range(rows)))

    @staticmethod
    def identity(n: int) -> "RationalMatrix":
        one, z = Fraction(1), Fraction(0)
        return RationalMatrix(n, n, tuple(tuple(one if i == j else z for j in range(n)) for i in range(n)))

    def row_list(self) -> list[list[Fraction]]:
        return [list(row) for row in self.entries]

    def transpose(self) -> "RationalMatrix":
        return RationalMatrix(self.cols, self.rows,
                              tuple(tuple(self.entries[i][j] for i in range(self.rows))
                                    for j in range(self.cols)))

    def mul(self, other: "RationalMatrix") -> "RationalMatrix":
        if self.cols != other.rows:
            raise ValueError("shape mismatch in matrix product")
        zero = Fraction(0)
        out = []
        for i in range(self.rows):
            row_i = self.entries[i]
            acc = [zero] * other.cols
            for k in range(self.cols):
                v = row_i[k]
                if v:
                    other_row = other.entries[k]
                    for j in range(other.cols):
                        w = other_row[j]
                        if w:
                            acc[j] += v * w
            out.append(tuple(acc))
        return RationalMatrix(self.rows, other.cols, tuple(out))

    def apply(self, vec: Sequence) -> tuple[Fraction, ...]:
        if len(vec) != self.cols:
            raise ValueError("vector length mismatch")
        v = [Fraction(x) for x in vec]
        return tuple(sum((row[k] * v[k] for k in range(self.cols)), Fraction(0))
                     for row in self.entries)

    def is_zero(self) -> bool:
        return all(x == 0 for row in self.entries for x in row)


# ---------------------------------------------------------------------------
# integer row echelon (internal workhorse)
# ---------------------------------------------------------------------------

def _to_int_rows(rows: Iterable[Sequence]) -> list[list[int]]:
    """Scale each row by the lcm of its denominators; rank/kernels unchanged."""
    out = []
    for row in rows:
        fr = [Fraction(x) for x in row]
        mult = 1
        for x in fr:
            d = x.denominator
            mult = mult * d // gcd(mult, d)
        out.append([int(x * mult) for x in fr])
    return out


def _sparse_rank(rows: list[dict[int, int]]) -> int:
    """Exact rank by sparse integer elimination with gcd reduction.

    Deterministic sweep: each row is reduced against the recorded pivot rows
    in increasing column order, then becomes the pivot for its leading
    column.  Suited to the intertwiner-style systems this library builds,
    which have a handful of entries per row.
    """
    pivot_for_col: dict[int, dict[int, int]] = {}
    rank_count = 0
    for row in rows:
        current = {c: v for c, v in row.items() if v}
        while current:
            c = min(current)
            pivot = pivot_for_col.get(c)
            if pivot is None:
                g = 0
                for v in current.values():
                    g = gcd(g, abs(v))
                if g > 1:
                    current = {j: v // g for j, v in current.items()}
                pivot_for_col[c] = current
                rank_count += 1
                break
            pv = pivot[c]
            cv = current[c]
            g = gcd(abs(pv), abs(cv))
            mult_cur = pv // g
            mult_piv = cv // g
            merged: dict[int, int] = {}
            for j, v in current.items():
                merged[j] = v * mult_cur
            for j, v in pivot.items():
                val = merged.get(j, 0) - v * mult_piv
                if val:
                    merged[j] = val
                elif j in merged:
                    del merged[j]
            current = merged
    return rank_count


def rank(matrix: RationalMatrix) -> int:
    """Rank over the rationals via exact integer elimination."""
    if matrix.rows == 0 or matrix.cols == 0:
        return 0
    rows = _to_int_rows(matrix.entries)
    return _sparse_rank([{j: v for j, v in enumerate(row) if v} for row in rows])


def rank_of_rows(raw_rows: Sequence[Sequence], ncols: int) -> int:
    """Rank of a matrix given as raw rows (internal fast path)."""
    if not raw_rows or ncols == 0:
        return 0
    rows = _to_int_rows(raw_rows)
    return _sparse_rank([{j: v for j, v in enumerate(row) if v} for row in rows])


def rank_of_sparse_rows(sparse_rows: Sequence[dict[int, Fraction]]) -> int:
    """Rank of a matrix given as sparse rows {column: rational value}."""
    int_rows: list[dict[int, int]] = []
    for row in sparse_rows:
        mult = 1
        for v in row.values():
            if isinstance(v, Fraction):
                d = v.denominator
                mult = mult * d // gcd(mult, d)
        int_rows.append({j: int(v * mult) for j, v in row.items() if v})
    return _sparse_rank(int_rows)


def _rref(rows: list[list[Fraction]], ncols: int) -> tuple[list[list[Fraction]], list[int]]:
    pivots: list[int] = []
    r = 0
    nrows = len(rows)
    for c in range(ncols):
        piv = None
        for i in range(r, nrows):
            if rows[i][c] != 0:
                piv = i
                break
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = Fraction(1) / rows[r][c]
        rows[r] = [x * inv for x in rows[r]]
        prow = rows[r]
        for i in range(nrows):
            if i != r and rows[i][c] != 0:
                q = rows[i][c]
                rows[i] = [a - q * b for a, b in zip(rows[i], prow)]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return rows, pivots


def kernel_basis(matrix: RationalMatrix) -> list[tuple[Fraction, ...]]:
    """Deterministic basis of the right null space {v : M v = 0}.

    The basis comes from the reduced row echelon form: one vector per free
    column, with a 1 in the free position.  Basis size is cols - rank.
    """
    ncols = matrix.cols
    if ncols == 0:
        return []
    if matrix.rows == 0:
        basis = []
        for f in range(ncols):
            v = [Fraction(0)] * ncols
            v[f] = Fraction(1)
            basis.append(tuple(v))
        return basis
    rows = [list(row) for row in matrix.entries]
    rref, pivots = _rref(rows, ncols)
    pivot_set = set(pivots)
    basis = []
    for f in range(ncols):
        if f in pivot_set:
            continue
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for r, c in enumerate(pivots):
            v[c] = -rref[r][f]
        basis.append(tuple(v))
    return basis


def kernel_basis_of_rows(raw_rows: Sequence[Sequence], ncols: int) -> list[tuple[Fraction, ...]]:
    return kernel_basis(RationalMatrix.from_rows(raw_rows, cols=ncols))


def span_basis(vectors: Sequence[Sequence], length: int) -> list[tuple[Fraction, ...]]:
    """Deterministic (RREF) basis of the span of the given vectors."""
    rows = [[Fraction(x) for x in v] for v in vectors]
    if not rows:
        return []
    rref, pivots = _rref(rows, length)
    return [tuple(rref[r]) for r in range(len(pivots))]


def solve(matrix: RationalMatrix, rhs: Sequence) -> Optional[tuple[Fraction, ...]]:
    """One exact solution of M x = b, or None when the system is inconsistent.

    Deterministic choice: free variables are set to 0.
    """
    if len(rhs) != matrix.rows:
        raise ValueError("right-hand side length mismatch")
    ncols = matrix.cols
    aug = [list(row) + [Fraction(b)] for row, b in zip(matrix.entries, rhs)]
    if not aug:
        return tuple(Fraction(0) for _ in range(ncols))
    rref, pivots = _rref(aug, ncols)
    for row in rref[len(pivots):]:
        if row[ncols] != 0:
            return None
    x = [Fraction(0)] * ncols
    for r, c in enumerate(pivots):
        x[c] = rref[r][ncols]
    return tuple(x)


def invert(matrix: RationalMatrix) -> RationalMatrix:
    """Exact inverse of a square matrix; raises ValueError when singular."""
    n = matrix.rows
    if n != matrix.cols:
        raise ValueError("only square matrices can be inverted")
    aug = [list(row) + [Fraction(1) if i == j else Fraction(0) for j in range(n)]
           for i, row in enumerate(matrix.entries)]
    rref, pivots = _rref(aug, n)
    if len(pivots) != n:
        raise ValueError("matrix is singular")
    return RationalMatrix(n, n, tuple(tuple(rref[i][n:]) for i in range(n)))


def format_rational(x: Fraction) -> str:
    """Serialize a rational as "p/q", or "p" when the denominator is 1."""
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def parse_rational(text) -> Fraction:
    """Parse "p/q" or "p" (ints are accepted as-is)."""
    if isinstance(text, int):
        return Fraction(text)
    if isinstance(text, Fraction):
        return text
    return Fraction(str(text))
