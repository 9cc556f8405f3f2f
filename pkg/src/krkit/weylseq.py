"""Reflection sequences climbing from alpha_2 to theta_1 and theta_J.

A sequence is stored in application order: ``letters[0]`` is the first
reflection applied (always node 2) and the written word reads right to left,
so ``str(seq)`` prints ``(i_l ... i_1 i_0)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

from . import cartan as C
from .cartan import CartanData, Root


@dataclass(frozen=True)
class WeylWord:
    letters: Tuple[int, ...]

    def __len__(self):
        return len(self.letters)

    @property
    def tail(self) -> Tuple[int, ...]:
        return self.letters[1:]

    def written(self) -> Tuple[int, ...]:
        return tuple(reversed(self.letters))

    def __str__(self):
        return "(" + ",".join(str(i) for i in self.written()) + ")"


def apply(cd: CartanData, letters: Sequence[int], beta: Root) -> Root:
    """s_{letters[-1]} ... s_{letters[0]} (beta)."""
    for i in letters:
        beta = C.reflect_root(cd, i, beta)
    return beta


def _search(cd: CartanData, alphabet: Tuple[int, ...], target: Root) -> List[WeylWord]:
    cg = cd.c_g
    out: List[WeylWord] = []
    start = C.simple_root(cd, 2)

    def below(b: Root) -> bool:
        return all(x <= y for x, y in zip(b.coeffs, target.coeffs))

    def dfs(beta: Root, word: List[int]):
        if beta == target:
            out.append(WeylWord(tuple(word)))
            return
        for i in sorted(alphabet):
            if C.pairing(cd, i, beta) == -cg:
                nb = C.reflect_root(cd, i, beta)
                if below(nb):
                    word.append(i)
                    dfs(nb, word)
                    word.pop()

    dfs(start, [2])
    return out


def find_sequences(cd: CartanData, which: str = "I") -> List[WeylWord]:
    """All words over I_0\\{1} (or J) with the constant-pairing property.

    Each step pairs to -c_g with the current root, so the root grows by
    c_g alpha_i and the search is finite.  Order is lexicographic in
    application order with letters tried ascending.
    """
    alphabet = cd.I01 if which == "I" else cd.J
    return _search(cd, tuple(alphabet), C.theta(cd, which))


def canonical(cd: CartanData, which: str = "I") -> WeylWord:
    seqs = find_sequences(cd, which)
    if not seqs:
        raise ValueError(f"no sequence for {cd.tag} {which}")
    return seqs[0]


# checks on a single word

def length_by_inversions(cd: CartanData, letters: Sequence[int],
                         L: Optional[Tuple[int, ...]] = None) -> int:
    """Number of positive roots sent to negative roots."""
    n = 0
    for beta in C.positive_roots(cd, L):
        img = apply(cd, letters, beta)
        if all(c <= 0 for c in img.coeffs):
            n += 1
    return n


def is_reduced(cd: CartanData, letters: Sequence[int]) -> bool:
    return length_by_inversions(cd, letters) == len(letters)


def tail_inversions(cd: CartanData, word: WeylWord) -> List[Root]:
    """Positive roots alpha with s_tail^{-1}(alpha) negative."""
    inv = tuple(reversed(word.tail))
    out = []
    for beta in C.positive_roots(cd):
        img = apply(cd, inv, beta)
        if all(c <= 0 for c in img.coeffs):
            out.append(beta)
    return out


def step_weight(cd: CartanData, word: WeylWord, k: int) -> Root:
    """Weight of the root-vector word on letters 0..k with exponent 1."""
    coeffs = [0] * len(cd.nodes)
    for i in word.letters[: k + 1]:
        coeffs[cd.idx(i)] += cd.mult(i)
    return Root(tuple(coeffs), cd.nodes)


def normalize_by_commuting_swaps(cd: CartanData, a: Sequence[int], b: Sequence[int]
                                 ) -> Optional[List[int]]:
    """Turn word b into word a by swapping adjacent orthogonal letters.

    Returns the swap positions (k means positions k and k+1 in application
    order), or None when no such chain exists along the greedy route.
    """
    a, b = list(a), list(b)
    if sorted(a) != sorted(b):
        return None
    swaps = []
    for r in range(len(a)):
        if b[r] == a[r]:
            continue
        s = next((k for k in range(r + 1, len(b)) if b[k] == a[r]), None)
        if s is None:
            return None
        for k in range(s - 1, r - 1, -1):
            if cd.c(b[k], b[k + 1]) != 0:
                return None
            b[k], b[k + 1] = b[k + 1], b[k]
            swaps.append(k)
    return swaps


@dataclass
class LemmaReport:
    tag: str
    word_I: str
    word_J: str
    checks: Dict[str, bool]

    @property
    def passed(self) -> bool:
        return all(self.checks.values())


def verify_lemma31(cd: CartanData, i_word: Optional[WeylWord] = None,
                   j_word: Optional[WeylWord] = None) -> LemmaReport:
    """Structural facts about the two reflection words."""
    iw = i_word or canonical(cd, "I")
    jw = j_word or canonical(cd, "J")
    th1 = C.theta(cd, "I")
    thj = C.theta(cd, "J")
    checks: Dict[str, bool] = {}

    checks["reaches_theta_I"] = apply(cd, iw.tail, C.simple_root(cd, 2)) == th1
    checks["reaches_theta_J"] = apply(cd, jw.tail, C.simple_root(cd, 2)) == thj
    checks["node2_absent_from_tail"] = 2 not in iw.tail and 2 not in jw.tail
    checks["theta_I_orthogonal_to_J"] = all(C.pairing(cd, i, th1) == 0 for i in cd.J)

    ok = True
    for w in (iw, jw):
        for k in range(len(w)):
            lhs = step_weight(cd, w, k)
            rhs = apply(cd, w.letters[1: k + 1], C.simple_root(cd, 2))
            if lhs != rhs:
                ok = False
    checks["root_vector_weights"] = ok

    checks["reduced_I"] = is_reduced(cd, iw.letters)
    checks["reduced_J"] = is_reduced(cd, jw.letters)
    checks["reduced_JI"] = is_reduced(cd, iw.letters + jw.letters)

    pos = True
    for w, th in ((iw, th1), (jw, thj)):
        for beta in tail_inversions(cd, w):
            if C.coroot_pairing(cd, beta, C.root_weight(cd, th)) <= 0:
                pos = False
    checks["tail_inversions_positive"] = pos

    swaps_ok = True
    for which, w in (("I", iw), ("J", jw)):
        for other in find_sequences(cd, which):
            if normalize_by_commuting_swaps(cd, w.letters, other.letters) is None:
                swaps_ok = False
    checks["sequences_related_by_swaps"] = swaps_ok

    return LemmaReport(cd.tag, str(iw), str(jw), checks)
