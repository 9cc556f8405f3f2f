"""Exponents of q in the two-factor splitting of E^p (w_1 (x) w_1^{(x) l}).

``m_pair`` is the closed bilinear formula, ``coproduct_oracle`` recomputes the
same exponent letter by letter from the coproduct rule, and
``verify_identities`` checks the shift identities on integer grids.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

import numpy as np

from . import branching
from . import cartan as C
from . import weylseq
from .cartan import CartanData

A_VEC = (1, 1, 1, 0, 1)


def eps(k: int, n: int = 5) -> Tuple[int, ...]:
    """Standard basis vector e_k (1-based)."""
    return tuple(1 if j == k - 1 else 0 for j in range(n))


def m_pair(p1: Sequence[int], p2: Sequence[int], ell: int) -> int:
    a1, a2, a3, a4, a5 = p1
    b1, b2, b3, b4, b5 = p2
    return (-(a1 * b1 + a2 * b2 + a3 * b3 + a4 * b4 + a5 * b5)
            + (a2 + a3 + a4) * b1
            + a5 * (-b1 + b2 + b3 + b4)
            + ell * (3 * a1 - a2 - a3 - a4))


def x_of(p: Sequence[int], ell: int) -> int:
    return p[0] - 2 * p[3] + p[4] - ell


# m(p1, p2) = p1^T M p2 + l * LIN . p1
M_MATRIX = np.array([
    [-1, 0, 0, 0, 0],
    [1, -1, 0, 0, 0],
    [1, 0, -1, 0, 0],
    [1, 0, 0, -1, 0],
    [-1, 1, 1, 1, -1],
], dtype=np.int64)
LIN = np.array([3, -1, -1, -1, 0], dtype=np.int64)


def m_grid(P1: np.ndarray, P2: np.ndarray, ell: int) -> np.ndarray:
    """m over all pairs of rows: result[a, b] = m(P1[a], P2[b])."""
    return (P1 @ M_MATRIX) @ P2.T + ell * (P1 @ LIN)[:, None]


def grid(bound: int) -> np.ndarray:
    axes = np.arange(bound + 1)
    mesh = np.stack(np.meshgrid(*([axes] * 5), indexing="ij"), axis=-1)
    return mesh.reshape(-1, 5).astype(np.int64)


# the oracle

def kr_letters(cd: CartanData, i_word=None, j_word=None) -> List[Tuple[int, int, int]]:
    """Letters of E^p in application order as (node, component, multiplier).

    E^p = e_1^(p5) e_2^(p4) E_j^(p3) E_i^(p2) e_1^(p1) e_0^(p1), rightmost
    first; the root-vector words contribute one letter per reflection.
    """
    iw = i_word or weylseq.canonical(cd, "I")
    jw = j_word or weylseq.canonical(cd, "J")
    out = [(0, 0, 1), (1, 0, 1)]
    out += [(i, 1, cd.mult(i)) for i in iw.letters]
    out += [(j, 2, cd.mult(j)) for j in jw.letters]
    out += [(2, 3, 1), (1, 4, 1)]
    return out


def _alpha(cd: CartanData, i: int) -> Tuple[int, ...]:
    return C.root_weight(cd, C.simple_root(cd, i)).coords


def coproduct_oracle(p1: Sequence[int], p2: Sequence[int], ell: int,
                     cd: Optional[CartanData] = None, letters=None,
                     check_weight: bool = False) -> int:
    """Exponent of q on E^{p1} w_1 (x) E^{p2} w_1^{(x) l} inside E^{p1+p2}(w_1 (x) w_1^{(x) l}).

    Each letter e_i^(n1+n2) contributes q_i^{-n1 (<h_i, wt u2> + n2)} where
    u2 is the current second-factor state; only weights are tracked.
    """
    cd = cd or C.build("E6a1")
    letters = letters or kr_letters(cd)
    wt2 = list((ell * C.fundamental(cd, 2)).coords)
    total = 0  # in units of q_s
    for node, comp, mult in letters:
        n1 = mult * p1[comp]
        n2 = mult * p2[comp]
        if n1:
            total -= cd.npow(node) * n1 * (wt2[cd.idx(node)] + n2)
        if n2:
            al = _alpha(cd, node)
            for k in range(len(wt2)):
                wt2[k] += n2 * al[k]
    if check_weight:
        want = branching.wt(tuple(p2) + (0,), cd) + ell * C.fundamental(cd, 2)
        if tuple(wt2) != want.coords:
            raise AssertionError("second-factor weight disagrees with wt(p)")
    out = Fraction(total, cd.D)
    if out.denominator != 1:
        raise ArithmeticError("non-integral exponent of q")
    return int(out)


def oracle_grid(P1: np.ndarray, P2: np.ndarray, ell: int, cd: CartanData,
                letters=None) -> np.ndarray:
    """coproduct_oracle for every pair of rows, same letter-by-letter rule."""
    letters = letters or kr_letters(cd)
    # second-factor weight depends only on P2: shape (rows2, nodes)
    wt2 = np.tile(np.array((ell * C.fundamental(cd, 2)).coords, dtype=np.int64),
                  (P2.shape[0], 1))
    total = np.zeros((P1.shape[0], P2.shape[0]), dtype=np.int64)
    for node, comp, mult in letters:
        n1 = mult * P1[:, comp]
        n2 = mult * P2[:, comp]
        k = cd.idx(node)
        total -= cd.npow(node) * n1[:, None] * (wt2[:, k] + n2)[None, :]
        al = np.array(_alpha(cd, node), dtype=np.int64)
        wt2 = wt2 + n2[:, None] * al[None, :]
    if np.any(total % cd.D):
        raise ArithmeticError("non-integral exponent of q")
    return total // cd.D


# identity suite

IDENTITIES = ("transfer_a", "shift_p1_eps4", "shift_p2_eps4", "shift_p2_eps5", "shift_p1_a")


@dataclass
class IdentityReport:
    bound: int
    ells: Tuple[int, ...]
    checked: Dict[str, int] = field(default_factory=dict)
    violations: Dict[str, int] = field(default_factory=dict)
    counterexamples: List[dict] = field(default_factory=list)
    oracle_checked: int = 0
    oracle_violations: int = 0

    @property
    def passed(self) -> bool:
        return not any(self.violations.values()) and self.oracle_violations == 0


def _shift(P, s):
    return P + np.array(s, dtype=np.int64)


def identity_residuals(P1: np.ndarray, P2: np.ndarray, ell: int) -> Dict[str, Tuple[np.ndarray, np.ndarray]]:
    """LHS - RHS for every identity, with the mask of in-domain pairs."""
    a = A_VEC
    e4, e5 = eps(4), eps(5)
    base = m_grid(P1, P2, ell)
    x2 = (P2[:, 0] - 2 * P2[:, 3] + P2[:, 4] - ell)[None, :]
    tot1 = P1[:, 0][:, None] + P2[:, 0][None, :]
    tot4 = P1[:, 3][:, None] + P2[:, 3][None, :]
    ones = np.ones_like(base, dtype=bool)
    u_minus_a_ok = np.all(P1 - np.array(a) >= 0, axis=1)[:, None] & ones
    v4_ok = (P2[:, 3] >= 1)[None, :] & ones
    neg_a = tuple(-x for x in a)
    neg_e4 = tuple(-x for x in e4)
    out = {}
    out["transfer_a"] = (
        base + x2 - (m_grid(_shift(P1, neg_a), _shift(P2, a), ell) + tot1 - tot4 - 1),
        u_minus_a_ok,
    )
    out["shift_p1_eps4"] = (
        base - (m_grid(_shift(P1, e4), P2, ell) - P2[:, 0][None, :] + P2[:, 3][None, :] + ell),
        ones,
    )
    out["shift_p2_eps4"] = (
        base - (m_grid(P1, _shift(P2, neg_e4), ell) - P1[:, 3][:, None] + P1[:, 4][:, None]),
        v4_ok,
    )
    out["shift_p2_eps5"] = (
        base - (m_grid(P1, _shift(P2, e5), ell) + P1[:, 4][:, None]),
        ones,
    )
    out["shift_p1_a"] = (
        base + x2 - (m_grid(_shift(P1, neg_a), P2, ell) + P2[:, 0][None, :] - P2[:, 3][None, :]),
        u_minus_a_ok,
    )
    return out


def verify_identities(bound: int = 4, ells: Iterable[int] = (1, 2, 3),
                      chunk: int = 625) -> IdentityReport:
    if bound < 2:
        raise ValueError("grid bound must be at least 2")
    ells = tuple(ells)
    rep = IdentityReport(bound, ells, {k: 0 for k in IDENTITIES}, {k: 0 for k in IDENTITIES})
    G = grid(bound)
    for ell in ells:
        for start in range(0, G.shape[0], chunk):
            P1 = G[start:start + chunk]
            for name, (res, mask) in identity_residuals(P1, G, ell).items():
                bad = (res != 0) & mask
                rep.checked[name] += int(mask.sum())
                nbad = int(bad.sum())
                if nbad:
                    rep.violations[name] += nbad
                    if len(rep.counterexamples) < 10:
                        a_idx, b_idx = np.argwhere(bad)[0]
                        rep.counterexamples.append({
                            "identity": name, "ell": ell,
                            "p1": P1[a_idx].tolist(), "p2": G[b_idx].tolist(),
                            "residual": int(res[a_idx, b_idx]),
                        })
    return rep


def verify_oracle(cd: CartanData, bound: int = 2, ells: Iterable[int] = (1, 2),
                  rep: Optional[IdentityReport] = None) -> IdentityReport:
    """Closed formula against the letter-by-letter oracle on [0..bound]^5 squared."""
    ells = tuple(ells)
    rep = rep or IdentityReport(bound, ells, {}, {})
    G = grid(bound)
    letters = kr_letters(cd)
    for ell in ells:
        closed = m_grid(G, G, ell)
        oracle = oracle_grid(G, G, ell, cd, letters)
        bad = closed != oracle
        rep.oracle_checked += int(bad.size)
        nbad = int(bad.sum())
        rep.oracle_violations += nbad
        if nbad and len(rep.counterexamples) < 10:
            a_idx, b_idx = np.argwhere(bad)[0]
            rep.counterexamples.append({
                "identity": "oracle", "type": cd.tag, "ell": ell,
                "p1": G[a_idx].tolist(), "p2": G[b_idx].tolist(),
                "closed": int(closed[a_idx, b_idx]), "oracle": int(oracle[a_idx, b_idx]),
            })
    return rep
