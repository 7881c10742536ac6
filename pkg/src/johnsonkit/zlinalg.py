"""Exact integer linear algebra: Smith form, lattice membership, kernels, ranks.

All arithmetic uses Python ints, so nothing overflows.  Vectors are plain
tuples or lists of ints; matrices are :class:`IntMatrix`.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Sequence

from .errors import DimensionMismatch


class IntMatrix:
    """Dense row-major integer matrix."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, rows, cols, entries=None):
        self.rows = rows
        self.cols = cols
        if entries is None:
            entries = [0] * (rows * cols)
        entries = [int(e) for e in entries]
        if len(entries) != rows * cols:
            raise DimensionMismatch(f"{len(entries)} entries for a {rows}x{cols} matrix")
        self.entries = entries

    @classmethod
    def from_rows(cls, rows):
        rows = [list(r) for r in rows]
        ncols = len(rows[0]) if rows else 0
        if any(len(r) != ncols for r in rows):
            raise DimensionMismatch("ragged rows")
        return cls(len(rows), ncols, [e for r in rows for e in r])

    @classmethod
    def from_columns(cls, columns, length=None):
        columns = [list(c) for c in columns]
        if length is None:
            if not columns:
                raise DimensionMismatch("column length unknown for an empty generating set")
            length = len(columns[0])
        if any(len(c) != length for c in columns):
            raise DimensionMismatch("columns of unequal length")
        m = cls(length, len(columns))
        for j, c in enumerate(columns):
            for i, e in enumerate(c):
                m.entries[i * m.cols + j] = int(e)
        return m

    @classmethod
    def identity(cls, n):
        m = cls(n, n)
        for i in range(n):
            m.entries[i * n + i] = 1
        return m

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i * self.cols + j]

    def __setitem__(self, ij, value):
        i, j = ij
        self.entries[i * self.cols + j] = value

    def row(self, i):
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def column(self, j):
        return [self.entries[i * self.cols + j] for i in range(self.rows)]

    def to_rows(self):
        return [self.row(i) for i in range(self.rows)]

    def copy(self):
        return IntMatrix(self.rows, self.cols, list(self.entries))

    def transpose(self):
        return IntMatrix.from_rows([self.column(j) for j in range(self.cols)]) if self.cols else IntMatrix(0, self.rows)

    def __matmul__(self, other):
        if self.cols != other.rows:
            raise DimensionMismatch(f"{self.rows}x{self.cols} @ {other.rows}x{other.cols}")
        out = IntMatrix(self.rows, other.cols)
        oc = other.cols
        for i in range(self.rows):
            ri = self.row(i)
            base = i * oc
            for k, a in enumerate(ri):
                if a:
                    orow = other.entries[k * oc:(k + 1) * oc]
                    for j, b in enumerate(orow):
                        if b:
                            out.entries[base + j] += a * b
        return out

    def apply(self, vec):
        if len(vec) != self.cols:
            raise DimensionMismatch(f"vector of length {len(vec)} for {self.cols} columns")
        return [sum(a * b for a, b in zip(self.row(i), vec)) for i in range(self.rows)]

    def __eq__(self, other):
        return isinstance(other, IntMatrix) and (self.rows, self.cols, self.entries) == (
            other.rows, other.cols, other.entries)

    def __repr__(self):
        return f"IntMatrix({self.to_rows()!r})"


def determinant(A: IntMatrix) -> int:
    """Bareiss fraction-free determinant."""
    if A.rows != A.cols:
        raise DimensionMismatch("determinant of a non-square matrix")
    n = A.rows
    M = A.to_rows()
    sign, prev = 1, 1
    for k in range(n - 1):
        if M[k][k] == 0:
            swap = next((r for r in range(k + 1, n) if M[r][k]), None)
            if swap is None:
                return 0
            M[k], M[swap] = M[swap], M[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                M[i][j] = (M[i][j] * M[k][k] - M[i][k] * M[k][j]) // prev
        prev = M[k][k]
    return sign * M[n - 1][n - 1] if n else 1


@dataclass(frozen=True)
class SmithDecomposition:
    U: IntMatrix
    D: IntMatrix
    V: IntMatrix

    @property
    def diagonal(self):
        return [self.D[i, i] for i in range(min(self.D.rows, self.D.cols))]

    @property
    def rank(self):
        return sum(1 for d in self.diagonal if d)


def smith_normal_form(A: IntMatrix) -> SmithDecomposition:
    """Return unimodular U, V and diagonal D with U*A*V = D.

    Pivots are chosen with minimal absolute value; the diagonal is
    nonnegative, forms a divisibility chain and has its zeros last.
    """
    m, n = A.rows, A.cols
    D = A.to_rows()
    U = IntMatrix.identity(m).to_rows()
    V = IntMatrix.identity(n).to_rows()

    def row_add(dst, src, c):  # row dst += c*row src
        D[dst] = [a + c * b for a, b in zip(D[dst], D[src])]
        U[dst] = [a + c * b for a, b in zip(U[dst], U[src])]

    def col_add(dst, src, c):  # col dst += c*col src
        for r in D:
            r[dst] += c * r[src]
        for r in V:
            r[dst] += c * r[src]

    def row_swap(i, j):
        D[i], D[j] = D[j], D[i]
        U[i], U[j] = U[j], U[i]

    def col_swap(i, j):
        for r in D:
            r[i], r[j] = r[j], r[i]
        for r in V:
            r[i], r[j] = r[j], r[i]

    def row_neg(i):
        D[i] = [-a for a in D[i]]
        U[i] = [-a for a in U[i]]

    t = 0
    while t < min(m, n):
        best = None
        for i in range(t, m):
            for j in range(t, n):
                v = D[i][j]
                if v and (best is None or abs(v) < best[0]):
                    best = (abs(v), i, j)
                    if best[0] == 1:
                        break
            if best and best[0] == 1:
                break
        if best is None:
            break
        _, pi, pj = best
        row_swap(t, pi)
        col_swap(t, pj)
        while True:
            done = True
            for i in range(t + 1, m):
                if D[i][t]:
                    q = D[i][t] // D[t][t]
                    row_add(i, t, -q)
                    if D[i][t]:
                        done = False
            for j in range(t + 1, n):
                if D[t][j]:
                    q = D[t][j] // D[t][t]
                    col_add(j, t, -q)
                    if D[t][j]:
                        done = False
            if done:
                # pivot must divide the rest of the block
                bad = next(((i, j) for i in range(t + 1, m) for j in range(t + 1, n)
                            if D[i][j] % D[t][t]), None)
                if bad is None:
                    break
                row_add(t, bad[0], 1)
                continue
            # move the smallest remaining entry of row/column t to the pivot
            cand = [(abs(D[i][t]), i, t) for i in range(t, m) if D[i][t]]
            cand += [(abs(D[t][j]), t, j) for j in range(t, n) if D[t][j]]
            _, ci, cj = min(cand)
            row_swap(t, ci)
            col_swap(t, cj)
        if D[t][t] < 0:
            row_neg(t)
        t += 1

    return SmithDecomposition(IntMatrix.from_rows(U) if m else IntMatrix(0, 0),
                              IntMatrix(m, n, [e for r in D for e in r]),
                              IntMatrix.from_rows(V) if n else IntMatrix(0, 0))


def _check_columns(gens, target=None):
    gens = [list(g) for g in gens]
    length = len(target) if target is not None else (len(gens[0]) if gens else 0)
    for g in gens:
        if len(g) != length:
            raise DimensionMismatch(f"column of length {len(g)}, expected {length}")
    return gens, length


def submodule_contains(gens: Sequence[Sequence[int]], target: Sequence[int]):
    """Decide whether ``target`` is an integer combination of ``gens``.

    Returns ``(True, witness)`` with ``sum(w_i * gens_i) == target`` checked
    exactly, or ``(False, None)``.
    """
    gens, length = _check_columns(gens, target)
    target = [int(t) for t in target]
    if not any(target):
        return True, [0] * len(gens)
    if not gens:
        return False, None
    A = IntMatrix.from_columns(gens, length)
    snf = smith_normal_form(A)
    y = snf.U.apply(target)  # solve D z = y, then x = V z
    diag = snf.diagonal
    z = []
    for i, yi in enumerate(y):
        d = diag[i] if i < len(diag) else 0
        if d == 0:
            if yi:
                return False, None
            if i < len(gens):
                z.append(0)
        else:
            if yi % d:
                return False, None
            z.append(yi // d)
    z += [0] * (len(gens) - len(z))
    witness = snf.V.apply(z[:len(gens)])
    if A.apply(witness) != target:
        raise ArithmeticError("membership witness failed verification")
    return True, witness


def kernel_basis(A: IntMatrix):
    """Saturated Z-basis of {x : A x = 0}, as a list of columns."""
    if A.cols == 0:
        return []
    if A.rows == 0:
        return IntMatrix.identity(A.cols).to_rows()
    snf = smith_normal_form(A)
    r = snf.rank
    return [snf.V.column(j) for j in range(r, A.cols)]


def submodule_rank(gens) -> int:
    """Rank of the integer span, by fraction-free elimination."""
    gens, _ = _check_columns(gens)
    rows = [list(g) for g in gens if any(g)]
    if not rows:
        return 0
    ncols = len(rows[0])
    rank = 0
    for c in range(ncols):
        piv = next((i for i in range(rank, len(rows)) if rows[i][c]), None)
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        p = rows[rank]
        for i in range(rank + 1, len(rows)):
            f = rows[i][c]
            if f:
                new = [p[c] * a - f * b for a, b in zip(rows[i], p)]
                g = gcd(*new)
                rows[i] = [a // g for a in new] if g > 1 else new
        rank += 1
        if rank == len(rows):
            break
    return rank


def elementary_divisors(gens):
    """Nonzero Smith invariants of the span; all ones means a saturated lattice."""
    gens, length = _check_columns(gens)
    if not gens:
        return []
    return [d for d in smith_normal_form(IntMatrix.from_columns(gens, length)).diagonal if d]


class RankAccumulator:
    """Incremental row echelon form over Z for growing generating sets."""

    def __init__(self):
        self.pivots = {}  # pivot column -> reduced row

    @property
    def rank(self):
        return len(self.pivots)

    def reduce(self, vec):
        v = list(vec)
        for c in sorted(self.pivots):
            if v[c]:
                row = self.pivots[c]
                p, f = row[c], v[c]
                g = gcd(p, f)
                v = [(p // g) * a - (f // g) * b for a, b in zip(v, row)]
                h = gcd(*v)
                if h > 1:
                    v = [a // h for a in v]
        return v

    def add(self, vec) -> bool:
        """Insert vec; True if it raised the rank."""
        v = self.reduce(vec)
        lead = next((i for i, a in enumerate(v) if a), None)
        if lead is None:
            return False
        self.pivots[lead] = v
        return True


def lattice_basis(gens) -> list:
    """A Z-basis (rows in echelon form) of the lattice spanned by ``gens``."""
    rows = [list(map(int, g)) for g in gens if any(g)]
    if not rows:
        return []
    width = len(rows[0])
    out = []
    col = 0
    while rows and col < width:
        live = [r for r in rows if r[col]]
        rest = [r for r in rows if not r[col]]
        if not live:
            col += 1
            continue
        # gcd-combine the live rows into one pivot row
        while len(live) > 1:
            live.sort(key=lambda r: abs(r[col]))
            p = live[0]
            nxt = [p]
            for r in live[1:]:
                q = r[col] // p[col]
                r = [a - q * b for a, b in zip(r, p)]
                (nxt if r[col] else rest).append(r)
            live = nxt
        pivot = live[0]
        if pivot[col] < 0:
            pivot = [-a for a in pivot]
        out.append(pivot)
        rows = [r for r in rest if any(r)]
        col += 1
    return out
