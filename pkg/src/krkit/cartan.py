"""Cartan data, roots and weights.

Node labels follow one fixed convention for every exceptional type: a chain
0 - 1 - 2 where 0 is the affine node and 2 is the node carrying the
Kirillov-Reshetikhin module.  The finite fixtures ``A1``, ``A2``, ``C2`` and
the affine ``A1a1`` are used by the module-level checks.

Weights are stored by their pairings <h_i, lambda> with every node, so a
weight of the classical lattice is just an integer tuple.  Roots are stored
by their coefficients on the simple roots.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Dict, List, Optional, Tuple

TYPES = ("E6a1", "E7a1", "E8a1", "F4a1", "E6a2")
FIXTURES = ("A1", "A2", "C2", "A1a1")

# (i, j, c_ij, c_ji)
_EDGES = {
    "E6a1": [(0, 1, -1, -1), (1, 2, -1, -1), (2, 3, -1, -1), (3, 5, -1, -1),
             (2, 4, -1, -1), (4, 6, -1, -1)],
    "E7a1": [(0, 1, -1, -1), (1, 2, -1, -1), (2, 3, -1, -1), (3, 4, -1, -1),
             (3, 5, -1, -1), (5, 6, -1, -1), (6, 7, -1, -1)],
    "E8a1": [(0, 1, -1, -1), (1, 2, -1, -1), (2, 3, -1, -1), (3, 4, -1, -1),
             (4, 5, -1, -1), (5, 6, -1, -1), (5, 7, -1, -1), (7, 8, -1, -1)],
    # 2 => 3: nodes 3 and 4 are short
    "F4a1": [(0, 1, -1, -1), (1, 2, -1, -1), (2, 3, -1, -2), (3, 4, -1, -1)],
    # 2 <= 3: nodes 3 and 4 are long
    "E6a2": [(0, 1, -1, -1), (1, 2, -1, -1), (2, 3, -2, -1), (3, 4, -1, -1)],
    "A1": [],
    "A2": [(1, 2, -1, -1)],
    "C2": [(1, 2, -2, -1)],
    "A1a1": [(0, 1, -2, -2)],
}

_NODES = {
    "E6a1": range(7), "E7a1": range(8), "E8a1": range(9), "F4a1": range(5),
    "E6a2": range(5), "A1": (1,), "A2": (1, 2), "C2": (1, 2), "A1a1": (0, 1),
}

_J = {
    "E6a1": (2, 3, 4), "E7a1": (2, 3, 4, 5), "E8a1": (2, 3, 4, 5, 6, 7),
    "F4a1": (2, 3), "E6a2": (2, 3),
}



@dataclass(frozen=True)
class Root:
    """Element of the root lattice, by coefficients on the simple roots."""
    coeffs: Tuple[int, ...]
    nodes: Tuple[int, ...]

    def coeff(self, i: int) -> int:
        return self.coeffs[self.nodes.index(i)]

    @property
    def height(self) -> int:
        return sum(self.coeffs)

    def as_dict(self) -> Dict[int, int]:
        return {i: c for i, c in zip(self.nodes, self.coeffs) if c}

    def __str__(self):
        return _linear_str(self.as_dict(), "α")


@dataclass(frozen=True)
class Weight:
    """Weight given by its pairings with every simple coroot.

    ``lattice`` is ``"Pcl"`` for the classical weight lattice or ``"P0"``
    for the finite weight lattice (level zero in the affine case).
    """
    coords: Tuple[int, ...]
    nodes: Tuple[int, ...]
    lattice: str = "Pcl"

    def pair(self, i: int) -> int:
        return self.coords[self.nodes.index(i)]

    def __add__(self, other: "Weight") -> "Weight":
        return Weight(tuple(a + b for a, b in zip(self.coords, other.coords)),
                      self.nodes, self.lattice)

    def __sub__(self, other: "Weight") -> "Weight":
        return Weight(tuple(a - b for a, b in zip(self.coords, other.coords)),
                      self.nodes, self.lattice)

    def __mul__(self, k: int) -> "Weight":
        return Weight(tuple(k * a for a in self.coords), self.nodes, self.lattice)

    __rmul__ = __mul__

    def varpi(self) -> Dict[int, int]:
        """Expansion in fundamental weights of the finite part."""
        return {i: c for i, c in zip(self.nodes, self.coords) if i != 0 and c}

    def __str__(self):
        return _linear_str(self.varpi(), "ϖ")


def _linear_str(coeffs: Dict[int, int], sym: str) -> str:
    if not coeffs:
        return "0"
    out = ""
    for i in sorted(coeffs):
        c = coeffs[i]
        term = f"{sym}{i}" if abs(c) == 1 else f"{abs(c)}{sym}{i}"
        if not out:
            out = ("-" if c < 0 else "") + term
        else:
            out += ("-" if c < 0 else "+") + term
    return out


@dataclass(frozen=True)
class CartanData:
    tag: str
    nodes: Tuple[int, ...]
    matrix: Tuple[Tuple[int, ...], ...]
    node_power: Tuple[int, ...]
    D: int
    affine: bool
    coroot_marks: Optional[Tuple[int, ...]] = None
    marks: Optional[Tuple[int, ...]] = None
    J: Tuple[int, ...] = ()
    _index: Dict[int, int] = field(default_factory=dict, compare=False, repr=False)

    def idx(self, i: int) -> int:
        return self._index[i]

    def c(self, i: int, j: int) -> int:
        return self.matrix[self._index[i]][self._index[j]]

    def npow(self, i: int) -> int:
        """Exponent of q_s in q_i."""
        return self.node_power[self._index[i]]

    @property
    def finite_nodes(self) -> Tuple[int, ...]:
        return tuple(i for i in self.nodes if i != 0) if self.affine else self.nodes

    @property
    def I01(self) -> Tuple[int, ...]:
        return tuple(i for i in self.finite_nodes if i != 1)

    @property
    def c_g(self) -> int:
        """The integer c_g: 2 for F4 (the node 2 => 3 bond), else 1."""
        return 2 if self.tag == "F4a1" else 1

    @property
    def theta_short(self) -> bool:
        return self.tag == "E6a2"

    def mult(self, i: int) -> int:
        """Divided-power multiplier for letters of the root-vector words."""
        return 2 if self.tag == "F4a1" and i in (3, 4) else 1

    def sym(self, i: int, j: int) -> Fraction:
        """(alpha_i, alpha_j), normalized so (alpha_0, alpha_0) = 2."""
        return Fraction(self.c(i, j) * self.npow(i), self.D)


def _nullvec(rows: List[List[int]]) -> List[Fraction]:
    """One-dimensional null vector of an integer matrix (rows x n)."""
    n = len(rows[0])
    m = [[Fraction(x) for x in r] for r in rows]
    piv_cols = []
    r = 0
    for col in range(n):
        p = next((k for k in range(r, len(m)) if m[k][col] != 0), None)
        if p is None:
            continue
        m[r], m[p] = m[p], m[r]
        pv = m[r][col]
        m[r] = [x / pv for x in m[r]]
        for k in range(len(m)):
            if k != r and m[k][col] != 0:
                f = m[k][col]
                m[k] = [a - f * b for a, b in zip(m[k], m[r])]
        piv_cols.append(col)
        r += 1
    free = [c for c in range(n) if c not in piv_cols]
    if len(free) != 1:
        raise ValueError("expected a one-dimensional null space")
    fc = free[0]
    v = [Fraction(0)] * n
    v[fc] = Fraction(1)
    for row, pc in zip(m, piv_cols):
        v[pc] = -row[fc]
    return v


@lru_cache(maxsize=None)
def build(tag: str) -> CartanData:
    """Cartan data for a type tag (five affine types or a fixture)."""
    if tag not in _EDGES:
        raise ValueError(f"unknown type {tag!r}; expected one of {TYPES + FIXTURES}")
    nodes = tuple(_NODES[tag])
    index = {i: k for k, i in enumerate(nodes)}
    n = len(nodes)
    mat = [[2 if a == b else 0 for b in range(n)] for a in range(n)]
    for i, j, cij, cji in _EDGES[tag]:
        mat[index[i]][index[j]] = cij
        mat[index[j]][index[i]] = cji
    # symmetrizer: npow_i * c_ij = npow_j * c_ji
    power: Dict[int, Fraction] = {nodes[0]: Fraction(1)}
    queue = deque([nodes[0]])
    while queue:
        i = queue.popleft()
        for j in nodes:
            cij = mat[index[i]][index[j]]
            if j not in power and cij and i != j:
                power[j] = power[i] * cij / mat[index[j]][index[i]]
                queue.append(j)
    affine = 0 in nodes
    ref = power[0] if affine else min(power.values())
    scaled = {i: power[i] / ref for i in nodes}
    D = 1
    for v in scaled.values():
        D = max(D, v.denominator)
    node_power = tuple(int(scaled[i] * D) for i in nodes)
    cmarks = marks = None
    if affine:
        a = _nullvec(mat)
        a = [x / a[0] for x in a]
        ac = _nullvec([list(r) for r in zip(*mat)])
        ac = [x / ac[0] for x in ac]
        marks = tuple(int(x) for x in a)
        cmarks = tuple(int(x) for x in ac)
    return CartanData(
        tag=tag, nodes=nodes, matrix=tuple(tuple(r) for r in mat),
        node_power=node_power, D=D, affine=affine, coroot_marks=cmarks,
        marks=marks, J=_J.get(tag, ()), _index=index,
    )


# roots and weights

def simple_root(cd: CartanData, i: int) -> Root:
    return Root(tuple(1 if j == i else 0 for j in cd.nodes), cd.nodes)


def root_from_dict(cd: CartanData, d: Dict[int, int]) -> Root:
    return Root(tuple(d.get(j, 0) for j in cd.nodes), cd.nodes)


def root_weight(cd: CartanData, beta: Root) -> Weight:
    """Image of a root in the classical weight lattice."""
    coords = tuple(
        sum(cd.c(i, j) * k for j, k in zip(cd.nodes, beta.coeffs)) for i in cd.nodes
    )
    return Weight(coords, cd.nodes, "P0")


def pairing(cd: CartanData, i: int, x) -> int:
    """<h_i, x> for a weight or a root."""
    if isinstance(x, Root):
        return sum(cd.c(i, j) * k for j, k in zip(cd.nodes, x.coeffs))
    return x.pair(i)


def form(cd: CartanData, beta: Root, gamma: Root) -> Fraction:
    out = Fraction(0)
    for i, a in zip(cd.nodes, beta.coeffs):
        if a:
            for j, b in zip(cd.nodes, gamma.coeffs):
                if b:
                    out += a * b * cd.sym(i, j)
    return out


@lru_cache(maxsize=None)
def coroot_coeffs(cd: CartanData, beta: Root) -> Tuple[Tuple[int, Fraction], ...]:
    """h_beta = sum_i c_i h_i, returned as the nonzero pairs (i, c_i)."""
    nb = form(cd, beta, beta)
    return tuple((i, k * cd.sym(i, i) / nb) for i, k in zip(cd.nodes, beta.coeffs) if k)


def coroot_pairing(cd: CartanData, beta: Root, lam) -> Fraction:
    """<h_beta, lam> where h_beta is the coroot of beta."""
    return sum((c * pairing(cd, i, lam) for i, c in coroot_coeffs(cd, beta)), Fraction(0))


def reflect_root(cd: CartanData, i: int, beta: Root) -> Root:
    p = pairing(cd, i, beta)
    k = cd.idx(i)
    c = list(beta.coeffs)
    c[k] -= p
    return Root(tuple(c), cd.nodes)


def fundamental(cd: CartanData, i: int) -> Weight:
    """varpi_i = Lambda_i - <K, Lambda_i> Lambda_0, as a level-zero weight."""
    coords = [0] * len(cd.nodes)
    coords[cd.idx(i)] = 1
    if cd.affine:
        coords[cd.idx(0)] -= cd.coroot_marks[cd.idx(i)]
    return Weight(tuple(coords), cd.nodes, "P0")


def weight_from_varpi(cd: CartanData, d: Dict[int, int]) -> Weight:
    out = Weight(tuple(0 for _ in cd.nodes), cd.nodes, "P0")
    for i, c in d.items():
        out = out + c * fundamental(cd, i)
    return out


def zero_weight(cd: CartanData) -> Weight:
    return Weight(tuple(0 for _ in cd.nodes), cd.nodes, "P0")


@lru_cache(maxsize=None)
def positive_roots(cd: CartanData, L: Optional[Tuple[int, ...]] = None) -> Tuple[Root, ...]:
    """Positive roots of the finite subsystem on the nodes L (default I_0).

    Closure from the simple roots by root strings: beta + alpha_i is a root
    exactly when the alpha_i-string through beta extends upward.
    """
    if L is None:
        L = cd.finite_nodes
    L = tuple(sorted(L))
    seen = {}
    frontier = []
    for i in L:
        r = simple_root(cd, i)
        seen[r.coeffs] = r
        frontier.append(r)
    while frontier:
        nxt = []
        for beta in frontier:
            for i in L:
                if beta.coeffs == simple_root(cd, i).coeffs:
                    continue
                # how far down the string goes
                p = 0
                k = cd.idx(i)
                while True:
                    c = list(beta.coeffs)
                    c[k] -= p + 1
                    if tuple(c) in seen:
                        p += 1
                    else:
                        break
                up = p - pairing(cd, i, beta)
                if up > 0:
                    c = list(beta.coeffs)
                    c[k] += 1
                    t = tuple(c)
                    if t not in seen:
                        seen[t] = Root(t, cd.nodes)
                        nxt.append(seen[t])
        frontier = nxt
    return tuple(sorted(seen.values(), key=lambda r: (r.height, r.coeffs)))


def is_short(cd: CartanData, beta: Root, L: Optional[Tuple[int, ...]] = None) -> bool:
    roots = positive_roots(cd, L)
    lengths = {form(cd, r, r) for r in roots}
    return form(cd, beta, beta) == min(lengths)


def highest_root(cd: CartanData, L: Tuple[int, ...], short: bool = False) -> Root:
    roots = positive_roots(cd, tuple(L))
    if short:
        m = min(form(cd, r, r) for r in roots)
        roots = tuple(r for r in roots if form(cd, r, r) == m)
    top = max(r.height for r in roots)
    cands = [r for r in roots if r.height == top]
    if len(cands) != 1:
        raise ValueError("highest root is not unique")
    return cands[0]


def theta(cd: CartanData, which: str) -> Root:
    """theta_1 (``which='I'``, on I_0 minus {1}) or theta_J (``which='J'``)."""
    L = cd.I01 if which == "I" else cd.J
    return highest_root(cd, L, short=cd.theta_short)


def gamma(cd: CartanData, k: int) -> Weight:
    """gamma_1 = varpi_1 + theta_1, gamma_2 = varpi_1 + gamma_1 + theta_J."""
    w1 = fundamental(cd, 1)
    g1 = w1 + root_weight(cd, theta(cd, "I"))
    if k == 1:
        return g1
    if k == 2:
        return w1 + g1 + root_weight(cd, theta(cd, "J"))
    raise ValueError("gamma index must be 1 or 2")


def is_dominant(cd: CartanData, lam: Weight) -> bool:
    return all(lam.pair(i) >= 0 for i in cd.finite_nodes)


def weyl_dim(cd: CartanData, lam: Weight) -> int:
    """Dimension of the finite irreducible module of highest weight lam."""
    num = Fraction(1)
    shifted = {i: lam.pair(i) + 1 for i in cd.finite_nodes}
    for beta in positive_roots(cd):
        co = coroot_coeffs(cd, beta)
        num *= sum(c * shifted[i] for i, c in co) / sum(c for _, c in co)
    if num.denominator != 1:
        raise ArithmeticError("non-integral Weyl dimension")
    return int(num)


def weyl_dim_symmetric(cd: CartanData, lam: Weight) -> int:
    """Same dimension, via (lam + rho, beta) / (rho, beta) with rho in root coordinates."""
    # rho = half the sum of positive roots, doubled to stay integral
    roots = positive_roots(cd)
    two_rho = [0] * len(cd.nodes)
    for r in roots:
        for k, c in enumerate(r.coeffs):
            two_rho[k] += c
    two_rho_root = Root(tuple(two_rho), cd.nodes)
    out = Fraction(1)
    for beta in roots:
        # (lam, beta) computed through pairings: (lam, alpha_i) = <h_i, lam> (alpha_i, alpha_i)/2
        lb = sum(Fraction(k) * lam.pair(i) * cd.sym(i, i) / 2
                 for i, k in zip(cd.nodes, beta.coeffs))
        rb = form(cd, two_rho_root, beta) / 2
        out *= (lb + rb) / rb
    return int(out)


def summary(cd: CartanData) -> dict:
    """JSON-friendly description used by the command line."""
    out = {
        "type": cd.tag,
        "nodes": list(cd.nodes),
        "cartan_matrix": [list(r) for r in cd.matrix],
        "node_power": list(cd.node_power),
        "D": cd.D,
    }
    if cd.affine:
        out["marks"] = list(cd.marks)
        out["coroot_marks"] = list(cd.coroot_marks)
    if cd.tag in TYPES:
        t1, tj = theta(cd, "I"), theta(cd, "J")
        out.update({
            "c_g": cd.c_g,
            "J": list(cd.J),
            "theta_1": {"root": str(t1), "weight": str(root_weight(cd, t1))},
            "theta_J": {"root": str(tj), "weight": str(root_weight(cd, tj))},
            "gamma_1": str(gamma(cd, 1)),
            "gamma_2": str(gamma(cd, 2)),
        })
    return out
