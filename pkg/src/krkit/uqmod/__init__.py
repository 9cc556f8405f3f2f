"""Explicit quantum-group modules at small rank."""

from .a1kr import a1_kr_fixture, evaluation_module, verify_a1kr
from .braid import braid_T, verify_braid
from .checks import verify_commutations
from .crystal import kashiwara
from .forms import PairingForm, check_admissible, shapovalov, tensor_pairing
from .rep import ModuleRep, minuscule, rank2_module, sl2_irrep, tensor, trivial
from .suites import SUITES, run_suite

__all__ = [
    "ModuleRep", "PairingForm", "SUITES", "a1_kr_fixture", "braid_T", "check_admissible",
    "evaluation_module", "kashiwara", "minuscule", "rank2_module", "run_suite", "shapovalov",
    "sl2_irrep", "tensor", "tensor_pairing", "trivial", "verify_a1kr", "verify_braid",
    "verify_commutations",
]
