"""The eight acceptance criteria, one test each.

Each test records a one-line verdict that is printed in the terminal summary
(and directly when this file is run as a script).
"""

import sys

import pytest

from krkit import branching as B
from krkit import cartan as C
from krkit import mcoeff as M
from krkit import straighten as S
from krkit import weylseq as W
from krkit.uqmod import suites as U

try:
    from conftest import ACCEPTANCE_LINES
except ImportError:  # run as a script from elsewhere
    ACCEPTANCE_LINES = {}

from test_cartan import TABLE1, theta_table


def verdict(n, title, ok, detail):
    line = f"criterion {n} [{'PASS' if ok else 'FAIL'}] {title}: {detail}"
    ACCEPTANCE_LINES[n] = line
    print(line)
    return ok


def failures(outcomes):
    return {k: o.counterexamples[:2] for k, o in outcomes.items() if not o.passed}


def test_1_table():
    bad = [t for t in C.TYPES if theta_table(t) != TABLE1[t]]
    assert verdict(1, "theta_1 and theta_J table", not bad,
                   f"{len(C.TYPES) - len(bad)}/{len(C.TYPES)} types match"), bad


def test_2_sequences():
    problems = []
    for tag in C.TYPES:
        cd = C.build(tag)
        iws, jws = W.find_sequences(cd, "I"), W.find_sequences(cd, "J")
        if not iws or not jws:
            problems.append((tag, "none found"))
        for iw in iws:
            for jw in jws:
                rep = W.verify_lemma31(cd, iw, jw)
                if not rep.passed:
                    problems.append((tag, str(iw), str(jw), rep.checks))
    twisted = [str(w) for w in W.find_sequences(C.build("E6a2"), "I")]
    if twisted != ["(4,3,2)"]:
        problems.append(("E6a2", twisted))
    assert verdict(2, "sequence suite", not problems, f"{len(problems)} problems"), problems[:3]


def test_3_branching():
    problems = []
    for tag in C.TYPES:
        for ell in range(1, 7):
            rep = B.verify_C1(ell, C.build(tag))
            if not rep.passed:
                problems.append((tag, ell, rep.counterexamples[:2]))
    if len(B.enum_S(1)) != 5:
        problems.append("|S_1| != 5")
    if B.enum_S_bar(1) != [(0, 0, 0, 0, 0), (1, 0, 0, 0, 0), (1, 1, 0, 0, 0), (2, 1, 1, 1, 1)]:
        problems.append("S_1 bar differs")
    assert verdict(3, "branching suite", not problems, f"{len(problems)} problems"), problems[:3]


def test_4_m_identities():
    rep = M.verify_identities(bound=4, ells=(1, 2, 3))
    oracle_checked = oracle_bad = 0
    for tag in C.TYPES:
        r = M.verify_oracle(C.build(tag), bound=2, ells=(1, 2))
        oracle_checked += r.oracle_checked
        oracle_bad += r.oracle_violations
    ok = rep.passed and oracle_bad == 0 and oracle_checked > 0
    assert verdict(4, "m-identity suite", ok,
                   f"identities {sum(rep.checked.values())} checked, "
                   f"{sum(rep.violations.values())} violations; oracle {oracle_checked} checked, "
                   f"{oracle_bad} violations"), rep.counterexamples[:3]


def test_5_commutation():
    res = U.commutation_suite()
    need = {"reorder_eee", "same_index_ef", "mixed_index_commute"}
    ok = res.passed and need <= set(res)
    assert verdict(5, "commutation suite", ok,
                   ", ".join(f"{k} {o.checked}" for k, o in res.items())), failures(res)


def test_6_pairing():
    res = U.pairing_suite()
    kr = U.a1kr_suite(4)
    ok = res.passed and kr.passed
    detail = f"pairing checks {sum(o.checked for o in res.values())}, fixture checks " \
             f"{sum(o.checked for o in kr.values())}"
    assert verdict(6, "pairing suite", ok, detail), (failures(res), failures(kr))


def test_7_braid():
    res = U.braid_suite()
    need = {"conjugation_formula", "simply_laced_identities", "weight_twisting", "braid_relation",
            "invertible", "same_node_images"}
    ok = res.passed and need <= set(res)
    assert verdict(7, "braid suite", ok,
                   ", ".join(f"{k} {o.checked}" for k, o in res.items())), failures(res)


def test_8_straightening():
    res = S.verify_straighten()
    assert verdict(8, "straightening suite", res.passed,
                   ", ".join(f"{k} {o.checked}" for k, o in res.items())), failures(res)


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-q", "-s"]))
