"""Commutation identities checked on explicit modules."""

from __future__ import annotations

from itertools import product
from typing import Iterable, List, Optional

from ..qnum import qbinom, render
from ..report import Outcome, OutcomeSet
from .linalg import SparseMatrix, SpanBuilder, Vec, kernel, vadd
from .rep import ModuleRep, basis_vector


def matrix_payload(M: SparseMatrix, D: int = 1, limit: int = 8) -> List[List]:
    """Nonzero entries (row, col, value) rendered exactly."""
    out = []
    for j, col in enumerate(M.cols):
        for i in sorted(col):
            out.append([i, j, render(col[i], D)])
            if len(out) >= limit:
                return out
    return out


def vector_payload(v: Vec, D: int = 1) -> dict:
    return {str(k): render(v[k], D) for k in sorted(v)}


def divided_power_outcome(M: ModuleRep, bound: int = 3, out: Optional[Outcome] = None) -> Outcome:
    """e^(a) e^(b) = [a+b, b]_i e^(a+b), same for f."""
    out = out or Outcome("divided_powers")
    cd = M.cd
    for i, kind in product(cd.nodes, "ef"):
        p = cd.npow(i)
        for a, b in product(range(bound + 1), repeat=2):
            diff = (M.op(kind, i, a) @ M.op(kind, i, b)) - M.op(kind, i, a + b).scale(qbinom(a + b, b, p))
            out.record(diff.is_zero(), lambda: {"module": M.name, "node": i, "kind": kind,
                                                "a": a, "b": b, "diff": matrix_payload(diff, cd.D)})
    return out


def weight_grading_outcome(M: ModuleRep, bound: int = 3, out: Optional[Outcome] = None) -> Outcome:
    from .rep import alpha, wadd
    out = out or Outcome("weight_grading")
    cd = M.cd
    for i, kind, n in product(cd.nodes, "ef", range(1, bound + 1)):
        shift = wadd((0,) * len(cd.nodes), alpha(cd, i), n if kind == "e" else -n)
        A = M.op(kind, i, n)
        ok = all(M.weights[r] == wadd(M.weights[c], shift)
                 for c, col in enumerate(A.cols) for r in col)
        out.record(ok, {"module": M.name, "node": i, "kind": kind, "n": n})
    return out


def serre_reorder_outcome(M: ModuleRep, bound: int = 3, out: Optional[Outcome] = None) -> Outcome:
    """e_i^(r) e_j^(s) e_i^(t) = sum_m [r-s+t, m]_i e_j^(t-m) e_i^(r+t) e_j^(s-t+m), r+t >= s."""
    out = out or Outcome("reorder_eee")
    cd = M.cd
    for i, j in product(cd.nodes, repeat=2):
        if i == j or cd.c(i, j) != -1 or cd.c(j, i) != -1:
            continue
        p = cd.npow(i)
        for r, s, t in product(range(bound + 1), repeat=3):
            if r + t < s:
                continue
            lhs = M.e(i, r) @ M.e(j, s) @ M.e(i, t)
            rhs = SparseMatrix.zero(M.dim, M.dim)
            n = r - s + t
            for m in range(n + 1):
                term = M.e(j, t - m) @ M.e(i, r + t) @ M.e(j, s - t + m)
                rhs = rhs + term.scale(qbinom(n, m, p))
            diff = lhs - rhs
            out.record(diff.is_zero(), lambda: {"module": M.name, "i": i, "j": j,
                                                "r": r, "s": s, "t": t,
                                                "diff": matrix_payload(diff, cd.D)})
    return out


def same_index_outcome(M: ModuleRep, bound: int = 4, out: Optional[Outcome] = None) -> Outcome:
    """Both same-index straightening rules, checked on every basis vector."""
    out = out or Outcome("same_index_ef")
    cd = M.cd
    for i in cd.nodes:
        p = cd.npow(i)
        a = cd.idx(i)
        for k, w in enumerate(M.weights):
            v = basis_vector(k)
            lam = w[a]
            for r, s in product(range(bound + 1), repeat=2):
                for first, second, sgn in (("e", "f", 1), ("f", "e", -1)):
                    lhs = M.op(first, i, r).apply(M.op(second, i, s).apply(v))
                    rhs: Vec = {}
                    top = r - s + sgn * lam
                    for kk in range(min(r, s) + 1):
                        y = M.op(second, i, s - kk).apply(M.op(first, i, r - kk).apply(v))
                        rhs = vadd(rhs, y, qbinom(top, kk, p))
                    diff = vadd(lhs, rhs, -qbinom(0, 0))
                    out.record(not diff, lambda: {"module": M.name, "node": i, "basis": k,
                                                  "order": first + second, "r": r, "s": s,
                                                  "diff": vector_payload(diff, cd.D)})
    return out


def mixed_index_outcome(M: ModuleRep, bound: int = 3, out: Optional[Outcome] = None) -> Outcome:
    out = out or Outcome("mixed_index_commute")
    cd = M.cd
    for i, j in product(cd.nodes, repeat=2):
        if i == j:
            continue
        for r, s in product(range(1, bound + 1), repeat=2):
            diff = M.e(i, r) @ M.f(j, s) - M.f(j, s) @ M.e(i, r)
            out.record(diff.is_zero(), lambda: {"module": M.name, "i": i, "j": j, "r": r, "s": s,
                                                "diff": matrix_payload(diff, cd.D)})
    return out


def _kernel_basis(A: SparseMatrix) -> List[Vec]:
    return kernel([basis_vector(k) for k in range(A.ncols)], A.cols)


def factor_containment_outcome(M: ModuleRep, bound: int = 3, out: Optional[Outcome] = None) -> Outcome:
    """Consequences of e_i^(r) e_j^(s) in U e_i^(k) and e_j^(s) e_i^(r) in e_i^(k) U, k = r + c_ij s > 0.

    The first forces e_i^(r) e_j^(s) to vanish on ker e_i^(k); the second
    forces the image of e_j^(s) e_i^(r) into the image of e_i^(k).
    """
    out = out or Outcome("factor_containment")
    cd = M.cd
    for i, j in product(cd.nodes, repeat=2):
        if i == j:
            continue
        for r, s in product(range(1, bound + 1), repeat=2):
            k = r + cd.c(i, j) * s
            if k <= 0:
                continue
            ker = _kernel_basis(M.e(i, k))
            A = M.e(i, r) @ M.e(j, s)
            bad = [x for x in ker if A.apply(x)]
            out.record(not bad, lambda: {"module": M.name, "side": "right", "i": i, "j": j,
                                         "r": r, "s": s, "vector": vector_payload(bad[0], cd.D)})
            img = SpanBuilder()
            for col in M.e(i, k).cols:
                if col:
                    img.add(col)
            B = M.e(j, s) @ M.e(i, r)
            bad_cols = [c for c, col in enumerate(B.cols) if col and not img.contains(col)]
            out.record(not bad_cols, lambda: {"module": M.name, "side": "left", "i": i, "j": j,
                                              "r": r, "s": s, "column": bad_cols[0]})
    return out


def verify_commutations(modules: Iterable[ModuleRep], bound_eee: int = 3, bound_ef: int = 4,
                        bound_mixed: int = 3) -> OutcomeSet:
    res = OutcomeSet()
    for M in modules:
        divided_power_outcome(M, 3, res.get_or_add("divided_powers"))
        weight_grading_outcome(M, 3, res.get_or_add("weight_grading"))
        same_index_outcome(M, bound_ef, res.get_or_add("same_index_ef"))
        if len(M.cd.nodes) > 1:
            mixed_index_outcome(M, bound_mixed, res.get_or_add("mixed_index_commute"))
            factor_containment_outcome(M, 3, res.get_or_add("factor_containment"))
            if any(M.cd.c(i, j) == -1 == M.cd.c(j, i) for i in M.cd.nodes for j in M.cd.nodes):
                serre_reorder_outcome(M, bound_eee, res.get_or_add("reorder_eee"))
    return res
