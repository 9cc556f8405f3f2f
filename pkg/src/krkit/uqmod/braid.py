"""Braid group operators on explicit modules.

T~_i is defined on each i-string from its lowest vector m (f_i m = 0) by

    T~_i(e_i^(p) m) = (-1)^p q_i^{p(-lam_i - p + 1)} e_i^(-lam_i - p) m,

and extended linearly.  The algebra automorphism T_i is then read off by
conjugation, T_i(X) = T~_i X T~_i^{-1}.
"""

from __future__ import annotations

from itertools import product
from typing import Dict, List, Optional

from ..qnum import ONE, qs_pow
from ..report import OutcomeSet
from .checks import matrix_payload
from .linalg import SparseMatrix, SpanBuilder, Vec, kernel, rank, vadd
from .rep import ModuleRep, WeightT, alpha, basis_vector, wadd


def _reflect(M: ModuleRep, i: int, w: WeightT) -> WeightT:
    return wadd(w, alpha(M.cd, i), -w[M.cd.idx(i)])


def braid_T(M: ModuleRep, i: int) -> SparseMatrix:
    cd = M.cd
    a = cd.idx(i)
    p_i = cd.npow(i)
    F = M.f(i)
    spans: Dict[WeightT, SpanBuilder] = {}
    images: Dict[WeightT, List[Vec]] = {}
    for w in M.weight_list():
        idx = M.weight_space(w)
        for m in kernel([basis_vector(k) for k in idx], [F.cols[k] for k in idx]):
            n = -w[a]
            if n < 0:
                raise ValueError("vector killed by f_i has positive weight")
            for p in range(n + 1):
                x = M.e(i, p).apply(m)
                ww = wadd(w, alpha(cd, i), p)
                spans.setdefault(ww, SpanBuilder()).add(x)
                c = qs_pow(p_i * p * (n - p + 1), (-1) ** p)
                images.setdefault(ww, []).append({k: c * y for k, y in M.e(i, n - p).apply(m).items()})
    cols = []
    for k, w in enumerate(M.weights):
        co = spans[w].coords(basis_vector(k))
        out: Vec = {}
        for pos, c in co.items():
            out = vadd(out, images[w][pos], c)
        cols.append(out)
    return SparseMatrix(M.dim, M.dim, cols)


def inverse(M: ModuleRep, T: SparseMatrix) -> SparseMatrix:
    """Inverse of an invertible weight-permuting matrix by exact elimination."""
    sb = SpanBuilder()
    for col in T.cols:
        if not sb.add(col):
            raise ValueError("matrix is singular")
    cols = []
    for k in range(T.nrows):
        co = sb.coords(basis_vector(k))
        cols.append(co)
    return SparseMatrix(T.ncols, T.nrows, cols)


def T_of_e(M: ModuleRep, i: int, j: int, p: int) -> SparseMatrix:
    """sum_k (-q_i)^{-k} e_i^(-c_ij p - k) e_j^(p) e_i^(k)."""
    cd = M.cd
    top = -cd.c(i, j) * p
    out = SparseMatrix.zero(M.dim, M.dim)
    for k in range(top + 1):
        c = qs_pow(-cd.npow(i) * k, (-1) ** k)
        out = out + (M.e(i, top - k) @ M.e(j, p) @ M.e(i, k)).scale(c)
    return out


def verify_braid(M: ModuleRep, pmax: int = 3, out: Optional[OutcomeSet] = None) -> OutcomeSet:
    out = out if out is not None else OutcomeSet()
    cd = M.cd
    D = cd.D
    T: Dict[int, SparseMatrix] = {}
    Tinv: Dict[int, SparseMatrix] = {}
    inv_o = out.get_or_add("invertible")
    tw_o = out.get_or_add("weight_twisting")
    for i in cd.nodes:
        T[i] = braid_T(M, i)
        ok = rank(T[i].cols) == M.dim
        inv_o.record(ok, {"module": M.name, "node": i})
        if not ok:
            continue
        Tinv[i] = inverse(M, T[i])
        good = all(M.weights[r] == _reflect(M, i, M.weights[c])
                   for c, col in enumerate(T[i].cols) for r in col)
        tw_o.record(good, {"module": M.name, "node": i})

    # (b): T~_i e_j^(p) = T_i(e_j^(p)) T~_i
    b_o = out.get_or_add("conjugation_formula")
    for i, j in product(cd.nodes, repeat=2):
        if i == j or i not in Tinv:
            continue
        for p in range(1, pmax + 1):
            diff = T[i] @ M.e(j, p) - T_of_e(M, i, j, p) @ T[i]
            b_o.record(diff.is_zero(), lambda: {"module": M.name, "i": i, "j": j, "p": p,
                                                "diff": matrix_payload(diff, D)})

    # T_i(e_i) = -f_i t_i and T_i(f_i) = -t_i^{-1} e_i
    s_o = out.get_or_add("same_node_images")
    for i in Tinv:
        d1 = T[i] @ M.e(i) - (M.f(i) @ M.t(i)).scale(-ONE) @ T[i]
        d2 = T[i] @ M.f(i) - (M.t(i, -1) @ M.e(i)).scale(-ONE) @ T[i]
        s_o.record(d1.is_zero() and d2.is_zero(), {"module": M.name, "node": i})

    # (e) for simply-laced pairs; q here is q_s^D
    e_o = out.get_or_add("simply_laced_identities")
    for i, j in product(cd.nodes, repeat=2):
        if i == j or cd.c(i, j) != -1 or cd.c(j, i) != -1:
            continue
        Tej = T_of_e(M, i, j, 1)
        for p in range(1, pmax + 1):
            lhs = M.e(i) @ M.e(j, p)
            rhs = M.e(j, p - 1) @ Tej + (M.e(j, p) @ M.e(i)).scale(qs_pow(-D * p))
            diff = lhs - rhs
            e_o.record(diff.is_zero(), lambda: {"module": M.name, "i": i, "j": j, "p": p,
                                                "diff": matrix_payload(diff, D)})
        diff = Tej @ M.e(j) - (M.e(j) @ Tej).scale(qs_pow(D))
        e_o.record(diff.is_zero(), lambda: {"module": M.name, "i": i, "j": j, "rule": "q-commute",
                                            "diff": matrix_payload(diff, D)})

    # (c): braid relation of length c_ij c_ji + 2
    c_o = out.get_or_add("braid_relation")
    for i, j in product(cd.nodes, repeat=2):
        if i >= j or i not in T or j not in T:
            continue
        n = cd.c(i, j) * cd.c(j, i) + 2
        if n > 6:
            continue
        lhs = SparseMatrix.identity(M.dim)
        rhs = SparseMatrix.identity(M.dim)
        for k in range(n):
            lhs = lhs @ T[(i, j)[k % 2]]
            rhs = rhs @ T[(j, i)[k % 2]]
        diff = lhs - rhs
        c_o.record(diff.is_zero(), lambda: {"module": M.name, "i": i, "j": j,
                                            "diff": matrix_payload(diff, D)})

    # (d): reduced word sending alpha_{i1} to a simple root maps e_{i1} to it
    d_o = out.get_or_add("root_vector_to_simple")
    for i, j in product(cd.nodes, repeat=2):
        if i == j or cd.c(i, j) != -1 or cd.c(j, i) != -1 or i not in T or j not in T:
            continue
        # s_i s_j (alpha_i) = alpha_j
        X = T[i] @ T[j] @ M.e(i) @ Tinv[j] @ Tinv[i]
        diff = X - M.e(j)
        d_o.record(diff.is_zero(), lambda: {"module": M.name, "i": i, "j": j,
                                            "diff": matrix_payload(diff, D)})
    return out
