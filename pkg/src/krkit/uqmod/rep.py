"""Explicit modules: divided-power matrices on a weight basis.

Weights are integer tuples of pairings <h_i, mu> ordered like ``cd.nodes``.
Basis vectors are weight vectors, and every operator is stored as a sparse
matrix.  Divided powers up to ``cap`` are built eagerly; higher ones are
derived on demand from e^(n) = e^(n-1) e / [n]_i.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

from .. import cartan as C
from ..cartan import CartanData
from ..qnum import ONE, qbinom, qint, qs_pow
from .linalg import SparseMatrix, SpanBuilder, Vec, kernel

WeightT = Tuple[int, ...]
Key = Tuple[str, int, int]  # (kind, node, exponent)

DEFAULT_CAP = 6


class DimensionError(ValueError):
    pass


def alpha(cd: CartanData, i: int) -> WeightT:
    return tuple(cd.c(j, i) for j in cd.nodes)


def wadd(a: WeightT, b: WeightT, k: int = 1) -> WeightT:
    return tuple(x + k * y for x, y in zip(a, b))


@dataclass
class ModuleRep:
    cd: CartanData
    weights: List[WeightT]
    ops: Dict[Key, SparseMatrix]
    cap: int = DEFAULT_CAP
    words: Optional[List[Tuple[Tuple[str, int], ...]]] = None
    name: str = ""
    _by_weight: Dict[WeightT, List[int]] = field(default_factory=dict, repr=False)

    def __post_init__(self):
        self._by_weight = {}
        for k, w in enumerate(self.weights):
            self._by_weight.setdefault(w, []).append(k)

    @property
    def dim(self) -> int:
        return len(self.weights)

    def weight_space(self, w: WeightT) -> List[int]:
        return self._by_weight.get(tuple(w), [])

    def weight_list(self) -> List[WeightT]:
        return sorted(self._by_weight)

    def op(self, kind: str, i: int, n: int = 1) -> SparseMatrix:
        """Matrix of e_i^(n) or f_i^(n); zero for negative n."""
        if n < 0:
            return SparseMatrix.zero(self.dim, self.dim)
        if n == 0:
            return SparseMatrix.identity(self.dim)
        key = (kind, i, n)
        m = self.ops.get(key)
        if m is None:
            m = (self.op(kind, i, n - 1) @ self.op(kind, i, 1)).scale(
                qint(n, self.cd.npow(i)).inverse())
            self.ops[key] = m
        return m

    def e(self, i: int, n: int = 1) -> SparseMatrix:
        return self.op("e", i, n)

    def f(self, i: int, n: int = 1) -> SparseMatrix:
        return self.op("f", i, n)

    def t(self, i: int, k: int = 1) -> SparseMatrix:
        """t_i^k, acting on M_mu by q_i^{k <h_i, mu>}."""
        p = self.cd.npow(i)
        a = self.cd.idx(i)
        return SparseMatrix(self.dim, self.dim,
                            [{j: qs_pow(k * p * w[a])} for j, w in enumerate(self.weights)])

    def qh(self, h: Dict[int, int]) -> SparseMatrix:
        """q^h for h = sum_i c_i D^{-1} h_i, i.e. q_s^{sum c_i <h_i, mu>}."""
        cols = []
        for j, w in enumerate(self.weights):
            cols.append({j: qs_pow(sum(c * w[self.cd.idx(i)] for i, c in h.items()))})
        return SparseMatrix(self.dim, self.dim, cols)

    def word_matrix(self, word: Sequence[Tuple[str, int, int]]) -> SparseMatrix:
        """Product of letters written left to right (rightmost acts first)."""
        out = SparseMatrix.identity(self.dim)
        for kind, i, n in word:
            out = out @ self.op(kind, i, n)
        return out

    def apply_word(self, word: Sequence[Tuple[str, int, int]], v: Vec) -> Vec:
        for kind, i, n in reversed(word):
            if not v:
                return v
            v = self.op(kind, i, n).apply(v)
        return v


def _fill_powers(M: ModuleRep, builder):
    for i in M.cd.nodes:
        for kind in ("e", "f"):
            for n in range(1, M.cap + 1):
                M.ops[(kind, i, n)] = builder(kind, i, n)


# basic modules

def trivial(cd: CartanData, cap: int = DEFAULT_CAP) -> ModuleRep:
    z = tuple(0 for _ in cd.nodes)
    M = ModuleRep(cd, [z], {}, cap, name="trivial")
    _fill_powers(M, lambda kind, i, n: SparseMatrix.zero(1, 1))
    return M


def sl2_irrep(n: int, cap: int = DEFAULT_CAP) -> ModuleRep:
    """V(n) on the basis v_k = f^(k) v_0, k = 0..n."""
    if n < 0:
        raise ValueError("highest weight must be nonnegative")
    cd = C.build("A1")
    M = ModuleRep(cd, [(n - 2 * k,) for k in range(n + 1)], {}, cap, name=f"V({n})")

    def build(kind, i, m):
        ent = []
        for k in range(n + 1):
            if kind == "e" and k - m >= 0:
                ent.append((k - m, k, qbinom(n - k + m, m)))
            elif kind == "f" and k + m <= n:
                ent.append((k + m, k, qbinom(k + m, m)))
        return SparseMatrix.from_entries(n + 1, n + 1, ent)

    _fill_powers(M, build)
    M.words = [(("f", 1),) * k for k in range(n + 1)]
    return M


def minuscule(cd: CartanData, highest: WeightT, cap: int = DEFAULT_CAP) -> ModuleRep:
    """Module on the Weyl orbit of a minuscule weight, all coefficients 1."""
    highest = tuple(highest)
    order = [highest]
    seen = {highest: 0}
    queue = deque([highest])
    while queue:
        mu = queue.popleft()
        for i in cd.nodes:
            a = mu[cd.idx(i)]
            if a not in (-1, 0, 1):
                raise ValueError(f"{highest} is not minuscule")
            if a == 1:
                nu = wadd(mu, alpha(cd, i), -1)
                if nu not in seen:
                    seen[nu] = len(order)
                    order.append(nu)
                    queue.append(nu)
    dim = len(order)
    M = ModuleRep(cd, order, {}, cap, name=f"L{highest}")

    def build(kind, i, m):
        if m != 1:
            return SparseMatrix.zero(dim, dim)
        ent = []
        for k, mu in enumerate(order):
            a = mu[cd.idx(i)]
            if kind == "f" and a == 1:
                ent.append((seen[wadd(mu, alpha(cd, i), -1)], k, 1))
            if kind == "e" and a == -1:
                ent.append((seen[wadd(mu, alpha(cd, i), 1)], k, 1))
        return SparseMatrix.from_entries(dim, dim, ent)

    _fill_powers(M, build)
    return M


# tensor products

def tensor(M1: ModuleRep, M2: ModuleRep, cap: Optional[int] = None) -> ModuleRep:
    """M1 (x) M2 through the coproduct; basis index a*dim2 + b.

    Delta(e^(m)) = sum_k q_i^{k(m-k)} e^(k) (x) t_i^{-k} e^(m-k),
    Delta(f^(m)) = sum_k q_i^{k(m-k)} t_i^{m-k} f^(k) (x) f^(m-k).
    """
    if M1.cd is not M2.cd and M1.cd != M2.cd:
        raise ValueError("modules over different algebras")
    cd = M1.cd
    cap = cap if cap is not None else min(M1.cap, M2.cap)
    d1, d2 = M1.dim, M2.dim
    weights = [wadd(w1, w2) for w1 in M1.weights for w2 in M2.weights]
    M = ModuleRep(cd, weights, {}, cap, name=f"({M1.name} x {M2.name})")

    def build(kind, i, m):
        p = cd.npow(i)
        a = cd.idx(i)
        cols = [dict() for _ in range(d1 * d2)]
        for k in range(m + 1):
            A = M1.op(kind, i, k)
            B = M2.op(kind, i, m - k)
            for ja, ca in enumerate(A.cols):
                if not ca:
                    continue
                for jb, cb in enumerate(B.cols):
                    if not cb:
                        continue
                    if kind == "e":
                        # t_i^{-k} on the weight of e^(m-k) v
                        mu = M2.weights[jb][a] + 2 * (m - k)
                        s = k * (m - k) - k * mu
                    else:
                        # t_i^{m-k} on the weight of f^(k) u
                        mu = M1.weights[ja][a] - 2 * k
                        s = k * (m - k) + (m - k) * mu
                    c = qs_pow(p * s)
                    col = cols[ja * d2 + jb]
                    for ia, va in ca.items():
                        for ib, vb in cb.items():
                            r = ia * d2 + ib
                            x = col.get(r)
                            y = c * va * vb
                            col[r] = y if x is None else x + y
        for col in cols:
            for r in [r for r, v in col.items() if v.is_zero()]:
                del col[r]
        return SparseMatrix(d1 * d2, d1 * d2, cols)

    _fill_powers(M, build)
    return M


def tensor_power(M: ModuleRep, k: int) -> ModuleRep:
    out = M
    for _ in range(k - 1):
        out = tensor(out, M)
    return out


def basis_vector(k: int) -> Vec:
    return {k: ONE}


# submodules

def highest_weight_vectors(M: ModuleRep, w: WeightT) -> List[Vec]:
    """Basis of the vectors of weight w killed by every e_i."""
    idx = M.weight_space(w)
    vecs = [basis_vector(k) for k in idx]
    images = []
    for k in idx:
        img: Vec = {}
        off = 0
        for i in M.cd.nodes:
            for r, v in M.e(i).cols[k].items():
                img[off + r] = v
            off += M.dim
        images.append(img)
    return kernel(vecs, images)


def cyclic_hull(M: ModuleRep, v: Vec, max_dim: int = 400,
                letters: Optional[Sequence[Tuple[str, int]]] = None,
                name: str = "") -> Tuple[ModuleRep, List[Vec]]:
    """Submodule spanned by words in ``letters`` applied to v.

    Returns the restricted module and the ambient vectors of its basis.  By
    default only f-letters are used, which is enough from a highest-weight
    vector.  The restricted matrices are computed by exact elimination inside
    each weight space.
    """
    cd = M.cd
    letters = list(letters) if letters else [("f", i) for i in cd.nodes]
    wt_of = {}
    for k, w in enumerate(M.weights):
        wt_of[k] = w

    def weight_of(x: Vec) -> WeightT:
        return wt_of[next(iter(x))]

    spans: Dict[WeightT, SpanBuilder] = {}
    basis: List[Vec] = []
    words: List[Tuple[Tuple[str, int], ...]] = []
    local: Dict[WeightT, List[int]] = {}
    queue = deque()

    def push(x: Vec, word):
        if not x:
            return
        w = weight_of(x)
        sb = spans.setdefault(w, SpanBuilder())
        if sb.add(x):
            local.setdefault(w, []).append(len(basis))
            basis.append(x)
            words.append(word)
            if len(basis) > max_dim:
                raise DimensionError(f"hull exceeds {max_dim}")
            queue.append(len(basis) - 1)

    push(v, ())
    while queue:
        k = queue.popleft()
        for kind, i in letters:
            push(M.op(kind, i, 1).apply(basis[k]), ((kind, i),) + words[k])

    weights = [weight_of(x) for x in basis]
    N = ModuleRep(cd, weights, {}, M.cap, words=words, name=name or f"hull({M.name})")

    def build(kind, i, n):
        A = M.op(kind, i, n)
        cols = []
        for x in basis:
            y = A.apply(x)
            if not y:
                cols.append({})
                continue
            w = weight_of(y)
            sb = spans.get(w)
            co = sb.coords(y) if sb is not None else None
            if co is None:
                raise ValueError("hull is not stable under the action")
            cols.append({local[w][pos]: c for pos, c in co.items()})
        return SparseMatrix(len(basis), len(basis), cols)

    _fill_powers(N, build)
    return N, basis


# rank-2 irreducibles

def fundamental_seed(tag: str, k: int, cap: int = DEFAULT_CAP) -> ModuleRep:
    cd = C.build(tag)
    lam = tuple(1 if i == k else 0 for i in cd.nodes)
    if tag == "C2" and k == 2:
        V = minuscule(cd, (1, 0), cap)
        T = tensor(V, V)
        hv = highest_weight_vectors(T, lam)
        if len(hv) != 1:
            raise ValueError("expected one highest-weight vector")
        return cyclic_hull(T, hv[0], name=f"{tag}:V{lam}")[0]
    M = minuscule(cd, lam, cap)
    M.name = f"{tag}:V{lam}"
    return M


def rank2_module(tag: str, highest: Sequence[int], cap: int = DEFAULT_CAP,
                 max_dim: int = 200) -> ModuleRep:
    """Irreducible module of a dominant weight for A2 or C2.

    Built as the cyclic hull of the top vector in a tensor product of
    fundamental modules.
    """
    if tag not in ("A2", "C2", "A1"):
        raise ValueError("rank2_module supports A1, A2 and C2")
    cd = C.build(tag)
    highest = tuple(highest)
    if len(highest) != len(cd.nodes) or any(x < 0 for x in highest):
        raise ValueError("highest weight must be dominant")
    if not any(highest):
        return trivial(cd, cap)
    if tag == "A1":
        return sl2_irrep(highest[0], cap)
    want = C.weyl_dim(cd, C.weight_from_varpi(cd, dict(zip(cd.nodes, highest))))
    if want > max_dim:
        raise DimensionError(f"dimension {want} exceeds cap {max_dim}")
    factors = []
    for node, mult in zip(cd.nodes, highest):
        factors += [fundamental_seed(tag, node, cap)] * mult
    amb = factors[0]
    for F in factors[1:]:
        amb = tensor(amb, F)
    top = amb.weight_space(highest)
    if len(top) != 1:
        raise ValueError("top weight space is not one-dimensional")
    N, _ = cyclic_hull(amb, basis_vector(top[0]), max_dim=max_dim,
                       name=f"{tag}:V{highest}")
    if N.dim != want:
        raise ValueError(f"hull has dimension {N.dim}, expected {want}")
    return N
