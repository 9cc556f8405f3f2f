"""Sparse exact linear algebra over Q(q_s).

Vectors are dicts from basis index to nonzero ``QRat``.  Matrices store one
such dict per column.
"""

from __future__ import annotations

from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from ..qnum import ONE, ZERO, QRat, order_cmp, qrat

Vec = Dict[int, QRat]


def vadd(x: Vec, y: Vec, c: QRat = ONE) -> Vec:
    """x + c*y (new dict)."""
    out = dict(x)
    for k, v in y.items():
        s = out.get(k, ZERO) + c * v
        if s.is_zero():
            out.pop(k, None)
        else:
            out[k] = s
    return out


def vscale(x: Vec, c) -> Vec:
    c = qrat(c)
    if c.is_zero():
        return {}
    return {k: c * v for k, v in x.items()}


def vdot(x: Vec, y: Vec) -> QRat:
    if len(x) > len(y):
        x, y = y, x
    out = ZERO
    for k, v in x.items():
        w = y.get(k)
        if w is not None:
            out = out + v * w
    return out


class SparseMatrix:
    __slots__ = ("nrows", "ncols", "cols")

    def __init__(self, nrows: int, ncols: int, cols: Optional[List[Vec]] = None):
        self.nrows = nrows
        self.ncols = ncols
        self.cols = cols if cols is not None else [dict() for _ in range(ncols)]

    @classmethod
    def identity(cls, n: int) -> "SparseMatrix":
        return cls(n, n, [{j: ONE} for j in range(n)])

    @classmethod
    def zero(cls, nrows: int, ncols: int) -> "SparseMatrix":
        return cls(nrows, ncols)

    @classmethod
    def from_entries(cls, nrows: int, ncols: int, entries: Iterable[Tuple[int, int, object]]) -> "SparseMatrix":
        m = cls(nrows, ncols)
        for r, c, v in entries:
            v = qrat(v)
            if not v.is_zero():
                m.cols[c][r] = m.cols[c].get(r, ZERO) + v
                if m.cols[c][r].is_zero():
                    del m.cols[c][r]
        return m

    def entry(self, r: int, c: int) -> QRat:
        return self.cols[c].get(r, ZERO)

    def apply(self, x: Vec) -> Vec:
        out: Vec = {}
        for j, c in x.items():
            for i, v in self.cols[j].items():
                s = out.get(i, ZERO) + v * c
                if s.is_zero():
                    out.pop(i, None)
                else:
                    out[i] = s
        return out

    def __matmul__(self, other: "SparseMatrix") -> "SparseMatrix":
        if self.ncols != other.nrows:
            raise ValueError("shape mismatch")
        return SparseMatrix(self.nrows, other.ncols, [self.apply(c) for c in other.cols])

    def __add__(self, other: "SparseMatrix") -> "SparseMatrix":
        return SparseMatrix(self.nrows, self.ncols,
                            [vadd(a, b) for a, b in zip(self.cols, other.cols)])

    def __sub__(self, other: "SparseMatrix") -> "SparseMatrix":
        return SparseMatrix(self.nrows, self.ncols,
                            [vadd(a, b, -ONE) for a, b in zip(self.cols, other.cols)])

    def scale(self, c) -> "SparseMatrix":
        return SparseMatrix(self.nrows, self.ncols, [vscale(a, c) for a in self.cols])

    def transpose(self) -> "SparseMatrix":
        out = SparseMatrix(self.ncols, self.nrows)
        for j, col in enumerate(self.cols):
            for i, v in col.items():
                out.cols[i][j] = v
        return out

    def is_zero(self) -> bool:
        return all(not c for c in self.cols)

    def __eq__(self, other):
        if not isinstance(other, SparseMatrix):
            return NotImplemented
        return (self.nrows, self.ncols) == (other.nrows, other.ncols) and self.cols == other.cols

    def nnz(self) -> int:
        return sum(len(c) for c in self.cols)

    def restrict_rows(self, rows: Sequence[int]) -> "SparseMatrix":
        keep = {r: k for k, r in enumerate(rows)}
        out = SparseMatrix(len(rows), self.ncols)
        for j, col in enumerate(self.cols):
            out.cols[j] = {keep[i]: v for i, v in col.items() if i in keep}
        return out

    def __repr__(self):
        return f"SparseMatrix({self.nrows}x{self.ncols}, nnz={self.nnz()})"


def kron(A: SparseMatrix, B: SparseMatrix) -> SparseMatrix:
    """Kronecker product with index a*dimB + b."""
    out = SparseMatrix(A.nrows * B.nrows, A.ncols * B.ncols)
    for ja, ca in enumerate(A.cols):
        for jb, cb in enumerate(B.cols):
            col = {}
            for ia, va in ca.items():
                for ib, vb in cb.items():
                    col[ia * B.nrows + ib] = va * vb
            out.cols[ja * B.ncols + jb] = col
    return out


def _pick_pivot(v: Vec) -> int:
    # prefer entries that are monomials, then the smallest index
    best = None
    for k in sorted(v):
        x = v[k]
        if x.is_laurent() and x.num.is_monomial():
            return k
        if best is None:
            best = k
    return best


class SpanBuilder:
    """Incrementally reduced echelon basis, remembering how each row was made.

    ``add`` returns True when the vector is new.  ``coords`` writes a vector in
    the span as a combination of the added vectors (in insertion order).
    """

    def __init__(self):
        self.rows: List[Tuple[int, Vec, Vec]] = []  # (pivot, row, transform)
        self.count = 0

    def _reduce(self, v: Vec, t: Vec) -> Tuple[Vec, Vec]:
        for p, row, tr in self.rows:
            c = v.get(p)
            if c is not None:
                v = vadd(v, row, -c)
                t = vadd(t, tr, -c)
        return v, t

    def add(self, v: Vec) -> bool:
        r, t = self._reduce(dict(v), {self.count: ONE})
        if not r:
            return False
        p = _pick_pivot(r)
        inv = r[p].inverse()
        r = vscale(r, inv)
        t = vscale(t, inv)
        new_rows = []
        for q, row, tr in self.rows:
            c = row.get(p)
            if c is not None:
                row = vadd(row, r, -c)
                tr = vadd(tr, t, -c)
            new_rows.append((q, row, tr))
        new_rows.append((p, r, t))
        self.rows = new_rows
        self.count += 1
        return True

    def __len__(self):
        return self.count

    def coords(self, v: Vec, check: bool = True) -> Optional[Vec]:
        out: Vec = {}
        rem = v
        for p, row, tr in self.rows:
            c = v.get(p)
            if c is not None:
                out = vadd(out, tr, c)
                if check:
                    rem = vadd(rem, row, -c)
        if check and rem:
            return None
        return out

    def contains(self, v: Vec) -> bool:
        r, _ = self._reduce(dict(v), {})
        return not r


def kernel(vectors: Sequence[Vec], images: Sequence[Vec]) -> List[Vec]:
    """Basis of {sum c_k vectors[k] : sum c_k images[k] = 0}."""
    sb = SpanBuilder()
    idx: List[int] = []
    out: List[Vec] = []
    for k, img in enumerate(images):
        if sb.add(img):
            idx.append(k)
            continue
        rel = sb.coords(img)
        vec = dict(vectors[k])
        for pos, c in rel.items():
            vec = vadd(vec, vectors[idx[pos]], -c)
        out.append(vec)
    return out


def rank(vectors: Sequence[Vec]) -> int:
    sb = SpanBuilder()
    for v in vectors:
        sb.add(v)
    return len(sb)


def solve_linear(equations: Sequence[Tuple[Vec, QRat]], nvars: int):
    """Solve sum_k a_k x_k = b for each (a, b).

    Returns (solution dict, free variable list) or None when inconsistent.
    """
    rows: List[Tuple[int, Vec, QRat]] = []
    for a, b in equations:
        a, b = dict(a), qrat(b)
        for p, row, rb in rows:
            c = a.get(p)
            if c is not None:
                a = vadd(a, row, -c)
                b = b - c * rb
        if not a:
            if not b.is_zero():
                return None
            continue
        p = _pick_pivot(a)
        inv = a[p].inverse()
        a = vscale(a, inv)
        b = b * inv
        new_rows = []
        for q, row, rb in rows:
            c = row.get(p)
            if c is not None:
                row = vadd(row, a, -c)
                rb = rb - c * b
            new_rows.append((q, row, rb))
        new_rows.append((p, a, b))
        rows = new_rows
    pivots = {p for p, _, _ in rows}
    free = [k for k in range(nvars) if k not in pivots]
    sol = {}
    for p, row, rb in rows:
        if any(k != p for k in row):
            continue
        sol[p] = rb
    return sol, free


def dense_ldl_pivots(G: List[List[QRat]]) -> Optional[List[QRat]]:
    """Pivots of symmetric Gaussian elimination without row swaps.

    Returns None when a zero pivot appears before the end.
    """
    n = len(G)
    A = [list(r) for r in G]
    piv = []
    for k in range(n):
        d = A[k][k]
        if d.is_zero():
            return None
        piv.append(d)
        for i in range(k + 1, n):
            if A[i][k].is_zero():
                continue
            f = A[i][k] / d
            for j in range(k + 1, n):
                if not A[k][j].is_zero():
                    A[i][j] = A[i][j] - f * A[k][j]
    return piv


def is_positive_definite(G: List[List[QRat]]) -> bool:
    piv = dense_ldl_pivots(G)
    return piv is not None and all(order_cmp(p, ZERO) > 0 for p in piv)
