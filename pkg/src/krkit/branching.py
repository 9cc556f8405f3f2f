"""Index sets for the classical decomposition of W^{2,l}.

S_l (six exponents), T_l (five exponents), the weight maps on each, and the
map phi between them together with its fibers.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, List, Tuple

from . import cartan as C
from .cartan import CartanData, Weight

ExpVec = Tuple[int, ...]

# coefficient rows of wt(p) on (varpi_1, varpi_2, gamma_1, gamma_2)
WT_ROWS = (
    (1, -1, -1, -1, 2, -1),
    (-1, 0, 0, 2, -1, 0),
    (0, 1, -1, 0, 0, 0),
    (0, 0, 1, -1, 0, 0),
)
# same for wt_T(r)
WT_T_ROWS = (
    (0, 1, 0, -1, -2),
    (-1, -1, -1, -1, 1),
    (0, 0, 1, 0, 0),
    (0, 0, 0, 1, 0),
)
# phi(p) = (p6, p1-p2-p6, p2-p3, p3-p4, p4-p5)
PHI_ROWS = (
    (0, 0, 0, 0, 0, 1),
    (1, -1, 0, 0, 0, -1),
    (0, 1, -1, 0, 0, 0),
    (0, 0, 1, -1, 0, 0),
    (0, 0, 0, 1, -1, 0),
)
FIBER_STEP = (1, 1, 1, 1, 1, 0)


def in_S(p: ExpVec, ell: int) -> bool:
    p1, p2, p3, p4, p5, p6 = p
    return (0 <= p6 <= p5 <= p4 <= p3 <= p2
            and p2 + p3 + p4 - p5 <= p1 <= p4 + ell)


def in_T(r: ExpVec, ell: int) -> bool:
    r1, r2, r3, r4, r5 = r
    return min(r) >= 0 and r1 + r2 + r3 + r4 <= ell and r4 + 2 * r5 <= r2


def enum_S(ell: int) -> List[ExpVec]:
    """All of S_l, sorted lexicographically.

    p2 + p3 - p5 <= l and p5 <= p3 force p2 <= l, which bounds the search.
    """
    if ell < 1:
        raise ValueError("level must be positive")
    out = []
    for p2 in range(ell + 1):
        for p3 in range(p2 + 1):
            for p4 in range(p3 + 1):
                for p5 in range(p4 + 1):
                    for p6 in range(p5 + 1):
                        for p1 in range(p2 + p3 + p4 - p5, p4 + ell + 1):
                            out.append((p1, p2, p3, p4, p5, p6))
    return sorted(out)


def enum_S_bar(ell: int) -> List[ExpVec]:
    """S_l restricted to p6 = 0, written as 5-tuples."""
    return [p[:5] for p in enum_S(ell) if p[5] == 0]


def enum_T(ell: int) -> List[ExpVec]:
    if ell < 1:
        raise ValueError("level must be positive")
    out = []
    for r1 in range(ell + 1):
        for r2 in range(ell + 1 - r1):
            for r3 in range(ell + 1 - r1 - r2):
                for r4 in range(ell + 1 - r1 - r2 - r3):
                    for r5 in range((r2 - r4) // 2 + 1 if r2 >= r4 else 0):
                        out.append((r1, r2, r3, r4, r5))
    return sorted(out)


def _apply_rows(rows, v) -> Tuple[int, ...]:
    return tuple(sum(a * b for a, b in zip(row, v)) for row in rows)


def phi(p: ExpVec) -> ExpVec:
    return _apply_rows(PHI_ROWS, p)


def _basis(cd: CartanData) -> Tuple[Weight, ...]:
    return (C.fundamental(cd, 1), C.fundamental(cd, 2), C.gamma(cd, 1), C.gamma(cd, 2))


def _combine(cd: CartanData, coeffs) -> Weight:
    out = C.zero_weight(cd)
    for c, b in zip(coeffs, _basis(cd)):
        out = out + c * b
    return out


def wt(p: ExpVec, cd: CartanData) -> Weight:
    return _combine(cd, _apply_rows(WT_ROWS, p))


def wt_T(r: ExpVec, cd: CartanData) -> Weight:
    return _combine(cd, _apply_rows(WT_T_ROWS, r))


def fiber_base(r: ExpVec) -> ExpVec:
    r1, r2, r3, r4, r5 = r
    return (r1 + r2 + r3 + r4 + r5, r3 + r4 + r5, r4 + r5, r5, 0, r1)


def fiber_formula(r: ExpVec) -> List[ExpVec]:
    """The arithmetic progression r0 + k(1,1,1,1,1,0), r1 <= k <= r1+r2-r4-2r5."""
    r1, r2, r3, r4, r5 = r
    base = fiber_base(r)
    return [tuple(b + k * s for b, s in zip(base, FIBER_STEP))
            for k in range(r1, r1 + r2 - r4 - 2 * r5 + 1)]


def multiplicity(r: ExpVec) -> int:
    return 1 + r[1] - r[3] - 2 * r[4]


def formal_wt_identity() -> bool:
    """wt_T o phi = wt as integer matrices on the basis (varpi_1, varpi_2, gamma_1, gamma_2)."""
    composed = tuple(
        tuple(sum(WT_T_ROWS[a][k] * PHI_ROWS[k][j] for k in range(5)) for j in range(6))
        for a in range(4)
    )
    return composed == WT_ROWS


@dataclass
class BranchReport:
    ell: int
    tag: str
    checks: Dict[str, bool]
    counterexamples: List[dict] = field(default_factory=list)
    size_S: int = 0
    size_T: int = 0
    total_dim: int = 0

    @property
    def passed(self) -> bool:
        return all(self.checks.values())


def verify_C1(ell: int, cd: CartanData) -> BranchReport:
    S = enum_S(ell)
    T = enum_T(ell)
    Tset = set(T)
    bad: List[dict] = []
    images: Dict[ExpVec, List[ExpVec]] = {}
    for p in S:
        images.setdefault(phi(p), []).append(p)

    image_ok = set(images) == Tset
    if not image_ok:
        bad.append({"check": "image", "extra": sorted(set(images) - Tset)[:5],
                    "missing": sorted(Tset - set(images))[:5]})

    fibers_ok = True
    for r in T:
        got = sorted(images.get(r, []))
        want = fiber_formula(r)
        if got != want or len(got) != multiplicity(r):
            fibers_ok = False
            bad.append({"check": "fiber", "r": r, "got": got, "want": want})

    wt_ok = True
    dom_ok = True
    total = 0
    shift = ell * C.fundamental(cd, 2)
    for p in S:
        w = wt(p, cd)
        if w != wt_T(phi(p), cd):
            wt_ok = False
            bad.append({"check": "wt", "p": p})
        lam = w + shift
        if not C.is_dominant(cd, lam):
            dom_ok = False
            bad.append({"check": "dominant", "p": p})
        else:
            total += C.weyl_dim(cd, lam)

    checks = {
        "phi_image_is_T": image_ok,
        "fibers_are_progressions": fibers_ok,
        "wt_T_phi_equals_wt": wt_ok,
        "wt_T_phi_formal": formal_wt_identity(),
        "highest_weights_dominant": dom_ok,
        "size_matches_multiplicities": len(S) == sum(multiplicity(r) for r in T),
    }
    return BranchReport(ell, cd.tag, checks, bad, len(S), len(T), total)


def branch_rows(ell: int, cd: CartanData) -> List[dict]:
    """Rows (p, wt(p)+l varpi_2, dim, phi(p)) for the command line."""
    rows = []
    shift = ell * C.fundamental(cd, 2)
    for p in enum_S(ell):
        lam = wt(p, cd) + shift
        rows.append({
            "p": list(p),
            "highest_weight": str(lam),
            "dim": C.weyl_dim(cd, lam),
            "phi": list(phi(p)),
        })
    return rows
