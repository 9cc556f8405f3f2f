"""Named module-level verification suites."""

from __future__ import annotations

from typing import List

from ..report import OutcomeSet
from .a1kr import verify_a1kr
from .braid import verify_braid
from .checks import verify_commutations
from .forms import check_admissible, norms_in_one_plus_qA, shapovalov, string_norms_sl2, tensor_pairing
from .rep import ModuleRep, rank2_module, sl2_irrep, tensor

SUITES = ("commutation", "pairing", "braid", "a1kr")

A2_WEIGHTS = ((1, 0), (1, 1), (2, 1))
C2_WEIGHTS = ((1, 0), (0, 1), (1, 1))


def commutation_suite(sl2_max: int = 8) -> OutcomeSet:
    mods: List[ModuleRep] = [sl2_irrep(n) for n in range(sl2_max + 1)]
    mods += [rank2_module("A2", w) for w in A2_WEIGHTS]
    mods += [rank2_module("C2", w) for w in C2_WEIGHTS]
    return verify_commutations(mods)


def pairing_suite() -> OutcomeSet:
    res = OutcomeSet()
    mods = [sl2_irrep(n) for n in range(6)]
    mods += [rank2_module("A2", w) for w in A2_WEIGHTS]
    mods += [rank2_module("C2", w) for w in C2_WEIGHTS]
    forms = {}
    for M in mods:
        F = shapovalov(M)
        forms[M.name] = F
        check_admissible(F, 3, res.get_or_add("shapovalov_admissible"))
        res.get_or_add("shapovalov_symmetric").record(F.is_symmetric(), {"module": M.name})
    o = res.get_or_add("sl2_string_norms")
    for n in range(6):
        o.record(norms_in_one_plus_qA(string_norms_sl2(n)), {"n": n})
    pairs = [("V(1)", "V(1)"), ("V(1)", "V(2)"), ("V(2)", "V(3)"),
             ("A2:V(1, 0)", "A2:V(1, 1)"), ("C2:V(1, 0)", "C2:V(0, 1)")]
    for a, b in pairs:
        check_admissible(tensor_pairing(forms[a], forms[b]), 2, res.get_or_add("tensor_pairing_admissible"))
    check_admissible(tensor_pairing(forms["V(1)"], forms["V(2)"], forms["V(1)"]), 2,
                     res.get_or_add("tensor_pairing_admissible"))
    return res


def braid_suite() -> OutcomeSet:
    res = OutcomeSet()
    mods = [sl2_irrep(n) for n in range(7)]
    mods += [rank2_module("A2", w) for w in ((1, 0), (0, 1), (1, 1), (2, 1), (2, 2), (3, 0))]
    mods += [rank2_module("C2", w) for w in C2_WEIGHTS]
    mods.append(tensor(rank2_module("A2", (1, 0)), rank2_module("A2", (1, 1))))
    for M in mods:
        if M.dim <= 64:
            verify_braid(M, 3, res)
    return res


def a1kr_suite(ell_max: int = 4) -> OutcomeSet:
    return verify_a1kr(tuple(range(1, ell_max + 1)))


def run_suite(name: str, **kw) -> OutcomeSet:
    if name == "commutation":
        return commutation_suite(**kw)
    if name == "pairing":
        return pairing_suite()
    if name == "braid":
        return braid_suite()
    if name == "a1kr":
        return a1kr_suite(**kw)
    raise ValueError(f"unknown suite {name!r}; expected one of {SUITES}")
