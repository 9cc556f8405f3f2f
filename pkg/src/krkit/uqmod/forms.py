"""Admissible pairings between explicit modules.

A pairing between M and N is stored as a matrix P with (u, v) = u^T P v.  It
is admissible when, for every node i and m >= 1,

    (q^h u, v) = (u, q^h v),
    (e_i^(m) u, v) = (u, q_i^{-m^2} t_i^{-m} f_i^(m) v),
    (f_i^(m) u, v) = (u, q_i^{-m^2} t_i^{m} e_i^(m) v).
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Dict, List, Optional, Tuple

from ..qnum import ONE, ZERO, QRat, in_one_plus_qA, qs_pow
from ..report import Outcome
from .checks import matrix_payload
from .linalg import SparseMatrix, Vec, kron, solve_linear, vdot
from .rep import ModuleRep


@dataclass
class PairingForm:
    left: ModuleRep
    right: ModuleRep
    gram: SparseMatrix

    def pair(self, u: Vec, v: Vec) -> QRat:
        return vdot(u, self.gram.apply(v))

    def entry(self, a: int, b: int) -> QRat:
        return self.gram.entry(a, b)

    def is_symmetric(self) -> bool:
        return self.gram == self.gram.transpose()

    def dense(self) -> List[List[QRat]]:
        n, m = self.gram.nrows, self.gram.ncols
        return [[self.gram.entry(a, b) for b in range(m)] for a in range(n)]


def _adjoint_rhs(N: ModuleRep, kind: str, i: int, m: int) -> SparseMatrix:
    """q_i^{-m^2} t_i^{-+m} applied after the opposite divided power on N."""
    p = N.cd.npow(i)
    other = "f" if kind == "e" else "e"
    sgn = -1 if kind == "e" else 1
    return (N.t(i, sgn * m) @ N.op(other, i, m)).scale(qs_pow(-p * m * m))


def check_admissible(form: PairingForm, bound: int = 3, out: Optional[Outcome] = None) -> Outcome:
    M, N, P = form.left, form.right, form.gram
    out = out or Outcome("admissible")
    cd = M.cd
    for i in cd.nodes:
        h = {i: 1}
        diff = M.qh(h).transpose() @ P - P @ N.qh(h)
        out.record(diff.is_zero(), lambda: {"left": M.name, "right": N.name, "rule": "q^h",
                                            "node": i, "diff": matrix_payload(diff, cd.D)})
        for kind, m in product("ef", range(1, bound + 1)):
            lhs = M.op(kind, i, m).transpose() @ P
            rhs = P @ _adjoint_rhs(N, kind, i, m)
            diff = lhs - rhs
            out.record(diff.is_zero(), lambda: {"left": M.name, "right": N.name, "rule": kind,
                                                "node": i, "m": m,
                                                "diff": matrix_payload(diff, cd.D)})
    return out


class InconsistentSystem(ArithmeticError):
    pass


def shapovalov(M: ModuleRep, top: int = 0) -> PairingForm:
    """The symmetric admissible form with (v, v) = 1 for the basis vector ``top``.

    Unknowns are the Gram entries between basis vectors of equal weight; the
    equations are the e-adjunction for every node at m = 1.  Raises when the
    system is inconsistent or leaves a free parameter.
    """
    cd = M.cd
    var: Dict[Tuple[int, int], int] = {}
    for w in M.weight_list():
        idx = M.weight_space(w)
        for a in idx:
            for b in idx:
                if a <= b:
                    var[(a, b)] = len(var)

    def v(a, b):
        return var.get((a, b) if a <= b else (b, a))

    eqs: List[Tuple[Vec, QRat]] = [({v(top, top): ONE}, ONE)]
    for i in cd.nodes:
        E = M.e(i).transpose()  # row a of E^T is column a of E
        R = _adjoint_rhs(M, "e", i, 1)
        Rt = R.transpose()
        # (E^T G)[a, b] = sum_c E[c, a] G[c, b]; (G R)[a, b] = sum_c G[a, c] R[c, b]
        for a in range(M.dim):
            Ea = M.e(i).cols[a]
            for b in range(M.dim):
                row: Vec = {}
                for c, x in Ea.items():
                    k = v(c, b)
                    if k is not None:
                        row[k] = row.get(k, ZERO) + x
                for c, x in R.cols[b].items():
                    k = v(a, c)
                    if k is not None:
                        row[k] = row.get(k, ZERO) - x
                row = {k: x for k, x in row.items() if not x.is_zero()}
                if row:
                    eqs.append((row, ZERO))
        del E, Rt
    res = solve_linear(eqs, len(var))
    if res is None:
        raise InconsistentSystem("admissibility equations are inconsistent")
    sol, free = res
    if free:
        raise InconsistentSystem(f"{len(free)} undetermined Gram entries")
    entries = []
    for (a, b), k in var.items():
        x = sol[k]
        entries.append((a, b, x))
        if a != b:
            entries.append((b, a, x))
    return PairingForm(M, M, SparseMatrix.from_entries(M.dim, M.dim, entries))


def tensor_pairing(*forms: PairingForm) -> PairingForm:
    """Product pairing between M_1 (x) ... (x) M_k and N_1 (x) ... (x) N_k."""
    from .rep import tensor
    f = forms[0]
    left, right, P = f.left, f.right, f.gram
    for g in forms[1:]:
        left = tensor(left, g.left)
        right = tensor(right, g.right)
        P = kron(P, g.gram)
    return PairingForm(left, right, P)


def string_norms_sl2(n: int) -> List[QRat]:
    """(f^(k) v_0, f^(k) v_0) on V(n) from the Shapovalov form."""
    from .rep import sl2_irrep
    F = shapovalov(sl2_irrep(n))
    return [F.entry(k, k) for k in range(n + 1)]


def norms_in_one_plus_qA(norms) -> bool:
    return all(in_one_plus_qA(x) for x in norms)
