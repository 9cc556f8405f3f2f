"""Toy Kirillov-Reshetikhin data for affine A_1^(1).

W_a is the two-dimensional evaluation module with basis u+ (weight
(h_0, h_1) = (-1, 1)) and u- = f_1 u+.  The affine generators act by
e_0 = a f_1 and f_0 = a^{-1} e_1.

For level l the source is W_{x_1} (x) ... (x) W_{x_l} and the target is the
same tensor with the parameters reversed, x_k = q^{l+1-2k}.  The KR module
is the cyclic hull of w_l = u+^{(x) l} in the target, and its form is

    (X w_l, Y w_l) = (X w_src, Y w_l)_0

with ( , )_0 the product of the identity pairings W_a x W_{a^{-1}}.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import List, Optional

from .. import cartan as C
from ..qnum import ONE, QRat, in_one_plus_qA, in_qA, qs_pow
from ..report import OutcomeSet
from .forms import PairingForm, check_admissible, shapovalov
from .linalg import SparseMatrix, Vec, dense_ldl_pivots, is_positive_definite, vdot
from .rep import ModuleRep, basis_vector, cyclic_hull, sl2_irrep, tensor

LETTERS = (("e", 0), ("f", 0), ("e", 1), ("f", 1))


def evaluation_module(a: QRat, cap: int = 6) -> ModuleRep:
    cd = C.build("A1a1")
    M = ModuleRep(cd, [(-1, 1), (1, -1)], {}, cap, name=f"W[{a}]")
    zero = SparseMatrix.zero(2, 2)
    for n in range(2, cap + 1):
        for key in (("e", 0, n), ("f", 0, n), ("e", 1, n), ("f", 1, n)):
            M.ops[key] = zero
    M.ops[("e", 1, 1)] = SparseMatrix.from_entries(2, 2, [(0, 1, 1)])
    M.ops[("f", 1, 1)] = SparseMatrix.from_entries(2, 2, [(1, 0, 1)])
    M.ops[("e", 0, 1)] = SparseMatrix.from_entries(2, 2, [(1, 0, a)])
    M.ops[("f", 0, 1)] = SparseMatrix.from_entries(2, 2, [(0, 1, a.inverse())])
    return M


def parameters(ell: int) -> List[int]:
    """Exponents of q for the source factors, left to right."""
    return [ell + 1 - 2 * k for k in range(1, ell + 1)]


@dataclass
class KRFixture:
    ell: int
    source: ModuleRep
    target: ModuleRep
    pairing: PairingForm
    module: ModuleRep
    basis: List[Vec]
    gram: List[List[QRat]]

    def form(self) -> PairingForm:
        entries = [(a, b, x) for a, row in enumerate(self.gram) for b, x in enumerate(row)]
        n = len(self.gram)
        return PairingForm(self.module, self.module, SparseMatrix.from_entries(n, n, entries))


def _tensor_all(mods: List[ModuleRep]) -> ModuleRep:
    out = mods[0]
    for M in mods[1:]:
        out = tensor(out, M)
    return out


def a1_kr_fixture(ell: int, order: str = "source") -> KRFixture:
    if not 1 <= ell <= 6:
        raise ValueError("level must be between 1 and 6")
    exps = parameters(ell)
    src = _tensor_all([evaluation_module(qs_pow(x)) for x in exps])
    tgt = _tensor_all([evaluation_module(qs_pow(x)) for x in reversed(exps)])
    # factor k of src pairs with factor k of tgt: parameters are inverse
    P0 = PairingForm(src, tgt, SparseMatrix.identity(src.dim))
    w = basis_vector(0)
    W, basis = cyclic_hull(tgt, w, letters=LETTERS, name=f"W^(1,{ell})")
    # the same words applied to the source top vector
    src_vecs = [src.apply_word([(k, i, 1) for k, i in word], w) for word in W.words]
    n = W.dim
    gram = [[vdot(src_vecs[a], P0.gram.apply(basis[b])) for b in range(n)] for a in range(n)]
    return KRFixture(ell, src, tgt, P0, W, basis, gram)


def string_gram(fx: KRFixture) -> List[List[QRat]]:
    """Gram matrix of u_k = f_1^(k) w_l, k = 0..l."""
    W = fx.module
    form = fx.form()
    us = [W.f(1, k).apply(basis_vector(0)) for k in range(fx.ell + 1)]
    return [[form.pair(x, y) for y in us] for x in us]


def verify_a1kr(ells=(1, 2, 3, 4), out: Optional[OutcomeSet] = None) -> OutcomeSet:
    out = out if out is not None else OutcomeSet()
    for ell in ells:
        fx = a1_kr_fixture(ell)
        W = fx.module
        form = fx.form()
        out.get_or_add("hull_dimension").record(W.dim == ell + 1, {"ell": ell, "dim": W.dim})
        check_admissible(fx.pairing, 2, out.get_or_add("product_pairing_admissible"))
        out.get_or_add("top_norm_one").record(fx.gram[0][0] == ONE,
                                              {"ell": ell, "norm": str(fx.gram[0][0])})
        out.get_or_add("symmetric").record(form.is_symmetric(), {"ell": ell})
        check_admissible(form, 2, out.get_or_add("form_admissible"))
        out.get_or_add("positive_definite").record(
            is_positive_definite(fx.gram),
            lambda: {"ell": ell, "pivots": [str(p) for p in (dense_ldl_pivots(fx.gram) or [])]})
        G = string_gram(fx)
        ok = all((in_one_plus_qA(G[k][l]) if k == l else in_qA(G[k][l]))
                 for k in range(ell + 1) for l in range(ell + 1))
        out.get_or_add("criterion_ii").record(ok, lambda: {"ell": ell,
                                                           "gram": [[str(x) for x in r] for r in G]})
        # (iii) for the single highest vector: ||e_1 w||^2 in q^{-2l-2} q_s A
        e1w = W.e(1).apply(basis_vector(0))
        norm = form.pair(e1w, e1w)
        out.get_or_add("criterion_iii").record(in_qA(norm, -2 * ell - 2 + 1),
                                               {"ell": ell, "norm": str(norm)})
        # dual route: on the finite part the form is the Shapovalov form of V(l)
        S = shapovalov(sl2_irrep(ell))
        same = all(G[k][l] == S.entry(k, l) for k in range(ell + 1) for l in range(ell + 1))
        out.get_or_add("matches_shapovalov").record(same, {"ell": ell})
    return out
