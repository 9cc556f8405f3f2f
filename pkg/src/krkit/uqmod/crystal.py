"""i-string decompositions and the Kashiwara operators."""

from __future__ import annotations

from typing import Dict, List, Tuple

from .linalg import SpanBuilder, Vec, kernel, vadd
from .rep import ModuleRep, WeightT, alpha, basis_vector, wadd


class StringBasis:
    """Basis of M made of f_i^(n) u with e_i u = 0, organised by weight.

    ``labels[w][k] = (u_index, n)`` names the k-th string vector of weight w,
    where ``tops[u_index]`` is the top vector u.
    """

    def __init__(self, M: ModuleRep, i: int):
        self.M, self.i = M, i
        a = M.cd.idx(i)
        self.tops: List[Tuple[WeightT, Vec]] = []
        for w in M.weight_list():
            idx = M.weight_space(w)
            if not idx:
                continue
            E = M.e(i)
            for u in kernel([basis_vector(k) for k in idx], [E.cols[k] for k in idx]):
                self.tops.append((w, u))
        self.spans: Dict[WeightT, SpanBuilder] = {}
        self.labels: Dict[WeightT, List[Tuple[int, int]]] = {}
        for t, (w, u) in enumerate(self.tops):
            for n in range(w[a] + 1):
                x = M.f(i, n).apply(u)
                if not x:
                    raise ValueError("string shorter than its top weight allows")
                ww = wadd(w, alpha(M.cd, i), -n)
                self.spans.setdefault(ww, SpanBuilder()).add(x)
                self.labels.setdefault(ww, []).append((t, n))
        for w in M.weight_list():
            if len(self.labels.get(w, [])) != len(M.weight_space(w)):
                raise ValueError("string vectors do not span the weight space")

    def decompose(self, v: Vec) -> List[Tuple[int, int, object]]:
        """v as a list of (top index, n, coefficient) for f_i^(n) top."""
        out = []
        by_w: Dict[WeightT, Vec] = {}
        for k, c in v.items():
            by_w.setdefault(self.M.weights[k], {})[k] = c
        for w in sorted(by_w):
            co = self.spans[w].coords(by_w[w])
            if co is None:
                raise ValueError("vector outside the module")
            for pos, c in sorted(co.items()):
                t, n = self.labels[w][pos]
                out.append((t, n, c))
        return out

    def shift(self, v: Vec, step: int) -> Vec:
        out: Vec = {}
        a = self.M.cd.idx(self.i)
        for t, n, c in self.decompose(v):
            w, u = self.tops[t]
            m = n + step
            if 0 <= m <= w[a]:
                out = vadd(out, self.M.f(self.i, m).apply(u), c)
        return out


_cache: Dict[Tuple[int, int], StringBasis] = {}


def string_basis(M: ModuleRep, i: int) -> StringBasis:
    key = (id(M), i)
    sb = _cache.get(key)
    if sb is None or sb.M is not M:
        sb = StringBasis(M, i)
        _cache[key] = sb
    return sb


def kashiwara(M: ModuleRep, i: int, direction: str, v: Vec) -> Vec:
    """Apply f~_i (direction 'f') or e~_i (direction 'e') to v."""
    if direction not in ("e", "f"):
        raise ValueError("direction must be 'e' or 'f'")
    return string_basis(M, i).shift(v, 1 if direction == "f" else -1)
