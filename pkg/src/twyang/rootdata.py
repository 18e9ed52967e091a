"""Root systems, weights and representation data for simple Lie algebras.

Everything is built from the Gram matrix of the simple roots, normalised so
that long roots have squared length 2.  Weights are integer tuples in the
basis of fundamental weights (Dynkin labels), numbered as in the usual
Bourbaki conventions: e6 is the chain 1-3-4-5-6 with node 2 hanging off
node 4, b_n has its short (spinor) node last, d_n has the two spinor nodes
``s, s'`` at positions ``n-1, n``, f4 has long nodes 1, 2 and g2 has its
short node first.

Scalar arithmetic is exact.  Inner products of weights are carried as
integers scaled by ``RootSystem.form_den`` so that Freudenthal's recursion on
e8 stays in machine integers.
"""

from __future__ import annotations

import re
from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import lcm
from typing import Dict, List, Optional, Sequence, Tuple

from .errors import BadArguments, NotDominant, ResourceLimit, UnsupportedRank

Weight = Tuple[int, ...]

DEFAULT_MAX_WEIGHTS = 10 ** 6

_EXCEPTIONAL_RANKS = {"E": (6, 7, 8), "F": (4,), "G": (2,)}
_MIN_RANK = {"A": 1, "B": 2, "C": 2, "D": 2}


@dataclass(frozen=True, order=True)
class LieType:
    series: str
    rank: int

    def __post_init__(self):
        if self.series in _EXCEPTIONAL_RANKS:
            if self.rank not in _EXCEPTIONAL_RANKS[self.series]:
                raise UnsupportedRank(f"{self.series.lower()}{self.rank} does not exist")
        elif self.series in _MIN_RANK:
            if self.rank < _MIN_RANK[self.series]:
                raise UnsupportedRank(
                    f"{self.series.lower()}{self.rank}: rank must be >= {_MIN_RANK[self.series]}")
        else:
            raise BadArguments(f"unknown Lie series {self.series!r}")

    @property
    def name(self) -> str:
        return f"{self.series.lower()}{self.rank}"

    def __str__(self):
        return self.name

    @property
    def dim(self) -> int:
        n = self.rank
        return {
            "A": n * (n + 2),
            "B": n * (2 * n + 1),
            "C": n * (2 * n + 1),
            "D": n * (2 * n - 1),
            "E": {6: 78, 7: 133, 8: 248}.get(n),
            "F": 52,
            "G": 14,
        }[self.series]


def parse_lie_type(text: str) -> LieType:
    """Parse ``a5``, ``su6``, ``so10``, ``sp6``, ``e6`` ... into a LieType.

    Low-rank orthogonal and symplectic spellings resolve through the usual
    isomorphisms: so3, sp2, b1, c1 are a1; so4 is d2; so6 is d3.
    """
    s = text.strip().lower()
    m = re.fullmatch(r"([a-g])(\d+)", s)
    if m:
        series, rank = m.group(1).upper(), int(m.group(2))
        if series in "BC" and rank == 1:
            return LieType("A", 1)
        return LieType(series, rank)
    m = re.fullmatch(r"(su|so|sp)\((\d+)\)|(su|so|sp)(\d+)", s)
    if not m:
        raise BadArguments(f"cannot parse Lie algebra {text!r}")
    kind = m.group(1) or m.group(3)
    n = int(m.group(2) or m.group(4))
    if kind == "su":
        if n < 2:
            raise UnsupportedRank(f"su({n}) is not simple")
        return LieType("A", n - 1)
    if kind == "sp":
        if n < 2 or n % 2:
            raise UnsupportedRank(f"sp({n}) needs an even dimension >= 2")
        return LieType("A", 1) if n == 2 else LieType("C", n // 2)
    if n < 3:
        raise UnsupportedRank(f"so({n}) is not semisimple")
    if n == 3:
        return LieType("A", 1)
    return LieType("B", (n - 1) // 2) if n % 2 else LieType("D", n // 2)


def _gram(t: LieType) -> List[List[Fraction]]:
    n = t.rank
    F = Fraction
    g = [[F(0)] * n for _ in range(n)]

    def link(i, j, v):
        g[i][j] = g[j][i] = F(v)

    s = t.series
    if s in "ABD" or s == "E":
        for i in range(n):
            g[i][i] = F(2)
    if s == "A":
        for i in range(n - 1):
            link(i, i + 1, -1)
    elif s == "B":
        for i in range(n - 1):
            link(i, i + 1, -1)
        g[n - 1][n - 1] = F(1)
    elif s == "C":
        for i in range(n - 1):
            g[i][i] = F(1)
        for i in range(n - 2):
            link(i, i + 1, F(-1, 2))
        g[n - 1][n - 1] = F(2)
        link(n - 2, n - 1, -1)
    elif s == "D":
        for i in range(n - 2):
            link(i, i + 1, -1)
        if n >= 3:
            link(n - 3, n - 1, -1)
    elif s == "E":
        for a, b in [(1, 3), (3, 4), (4, 5), (5, 6), (6, 7), (7, 8), (2, 4)]:
            if a <= n and b <= n:
                link(a - 1, b - 1, -1)
    elif s == "F":
        g[0][0] = g[1][1] = F(2)
        g[2][2] = g[3][3] = F(1)
        link(0, 1, -1)
        link(1, 2, -1)
        link(2, 3, F(-1, 2))
    elif s == "G":
        g[0][0] = F(2, 3)
        g[1][1] = F(2)
        link(0, 1, -1)
    return g


def _inverse(m: List[List[Fraction]]) -> List[List[Fraction]]:
    n = len(m)
    a = [list(row) + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(m)]
    for c in range(n):
        p = next(r for r in range(c, n) if a[r][c] != 0)
        a[c], a[p] = a[p], a[c]
        piv = a[c][c]
        a[c] = [x / piv for x in a[c]]
        for r in range(n):
            if r != c and a[r][c] != 0:
                f = a[r][c]
                a[r] = [x - f * y for x, y in zip(a[r], a[c])]
    return [row[n:] for row in a]


@dataclass(frozen=True)
class RootSystem:
    lie_type: LieType
    gram: Tuple[Tuple[Fraction, ...], ...]
    cartan: Tuple[Tuple[int, ...], ...]
    bilinear_form: Tuple[Tuple[Fraction, ...], ...]
    form_den: int
    form_int: Tuple[Tuple[int, ...], ...]
    positive_roots: Tuple[Tuple[int, ...], ...]
    positive_roots_dynkin: Tuple[Weight, ...]
    fundamental_weights: Tuple[Tuple[Fraction, ...], ...]
    # per positive root: form_int applied to its Dynkin labels
    _root_pairings: Tuple[Tuple[int, ...], ...] = field(repr=False, default=())

    @property
    def rank(self) -> int:
        return self.lie_type.rank

    @property
    def simple_roots(self) -> Tuple[Weight, ...]:
        """Simple roots as Dynkin labels (rows of the Cartan matrix)."""
        return self.cartan

    @property
    def weyl_vector(self) -> Weight:
        return (1,) * self.rank

    @property
    def dim(self) -> int:
        return self.rank + 2 * len(self.positive_roots)

    def inner(self, a: Sequence[int], b: Sequence[int]) -> Fraction:
        return Fraction(self.inner_int(a, b), self.form_den)

    def inner_int(self, a: Sequence[int], b: Sequence[int]) -> int:
        q = self.form_int
        return sum(a[i] * sum(q[i][j] * b[j] for j in range(len(b))) for i in range(len(a)))

    def components(self) -> List[List[int]]:
        """Node indices of the connected pieces of the Dynkin diagram."""
        n = self.rank
        seen, out = set(), []
        for s in range(n):
            if s in seen:
                continue
            comp, stack = [], [s]
            seen.add(s)
            while stack:
                i = stack.pop()
                comp.append(i)
                for j in range(n):
                    if j not in seen and self.cartan[i][j] != 0:
                        seen.add(j)
                        stack.append(j)
            out.append(sorted(comp))
        return out

    def highest_roots(self) -> List[Weight]:
        """Highest root of each diagram component, as a dominant weight."""
        out = []
        for comp in self.components():
            best = max(
                (r for r in self.positive_roots if all(r[i] == 0 for i in range(self.rank) if i not in comp)),
                key=sum)
            out.append(self.root_to_dynkin(best))
        return out

    @property
    def highest_root(self) -> Weight:
        return self.highest_roots()[0]

    def root_to_dynkin(self, coeffs: Sequence[int]) -> Weight:
        return tuple(sum(coeffs[i] * self.cartan[i][j] for i in range(self.rank)) for j in range(self.rank))


@lru_cache(maxsize=None)
def build_root_system(t: LieType) -> RootSystem:
    """Simple roots, positive roots and invariant form for ``t``."""
    if isinstance(t, str):
        t = parse_lie_type(t)
    n = t.rank
    g = _gram(t)
    cartan = tuple(tuple(int(2 * g[i][j] / g[j][j]) for j in range(n)) for i in range(n))
    # <lambda_i, lambda_j> = (D G^-1 D)_ij with D = diag(|alpha|^2 / 2)
    ginv = _inverse(g)
    d = [g[i][i] / 2 for i in range(n)]
    q = tuple(tuple(d[i] * ginv[i][j] * d[j] for j in range(n)) for i in range(n))
    den = lcm(*(x.denominator for row in q for x in row))
    qint = tuple(tuple(int(x * den) for x in row) for row in q)
    fund = tuple(tuple(d[i] * ginv[i][j] for j in range(n)) for i in range(n))

    # positive roots by height, via root strings
    simple = [tuple(int(i == j) for j in range(n)) for i in range(n)]
    roots = set(simple)
    layer = list(simple)
    while layer:
        nxt = []
        for r in layer:
            dyn = [sum(r[k] * cartan[k][j] for k in range(n)) for j in range(n)]
            for i in range(n):
                # p: how far down the alpha_i string goes from r
                p = 0
                while True:
                    down = list(r)
                    down[i] -= p + 1
                    if tuple(down) in roots:
                        p += 1
                    else:
                        break
                if p - dyn[i] > 0:
                    up = list(r)
                    up[i] += 1
                    up = tuple(up)
                    if up not in roots:
                        roots.add(up)
                        nxt.append(up)
        layer = nxt
    pos = tuple(sorted(roots, key=lambda r: (sum(r), r)))
    pos_dyn = tuple(tuple(sum(r[k] * cartan[k][j] for k in range(n)) for j in range(n)) for r in pos)
    pairings = tuple(tuple(sum(qint[i][j] * a[j] for j in range(n)) for i in range(n)) for a in pos_dyn)
    rs = RootSystem(t, tuple(map(tuple, g)), cartan, q, den, qint, pos, pos_dyn, fund, pairings)
    if rs.dim != t.dim:
        raise AssertionError(f"root closure for {t} gave dim {rs.dim}")
    return rs


def _check_dominant(hw: Sequence[int], rs: RootSystem) -> Weight:
    hw = tuple(int(x) for x in hw)
    if len(hw) != rs.rank:
        raise BadArguments(f"weight {hw} has wrong length for {rs.lie_type}")
    if any(x < 0 for x in hw):
        raise NotDominant(f"{hw} is not dominant for {rs.lie_type}")
    return hw


def dimension(rs: RootSystem, hw: Sequence[int]) -> int:
    """Weyl dimension formula."""
    hw = _check_dominant(hw, rs)
    num = den = 1
    for w in rs._root_pairings:
        num *= sum((x + 1) * y for x, y in zip(hw, w))
        den *= sum(w)
    q, r = divmod(num, den)
    assert r == 0
    return q


def casimir(rs: RootSystem, hw: Sequence[int]) -> Fraction:
    """Quadratic Casimir <hw, hw + 2 rho>."""
    hw = _check_dominant(hw, rs)
    return rs.inner(hw, [x + 2 for x in hw])


def adjoint_casimir(rs: RootSystem) -> Fraction:
    """Casimir of the adjoint representation, equal to twice the dual Coxeter number."""
    return casimir(rs, rs.highest_root)


def dual_weight(rs: RootSystem, hw: Sequence[int]) -> Weight:
    """Highest weight of the conjugate representation."""
    return dominant_conjugate(rs, tuple(-x for x in hw))


def reflect(rs: RootSystem, w: Weight, i: int) -> Weight:
    c = w[i]
    a = rs.cartan[i]
    return tuple(x - c * y for x, y in zip(w, a))


def dominant_conjugate(rs: RootSystem, w: Sequence[int]) -> Weight:
    w = list(w)
    cartan = rs.cartan
    while True:
        for i, c in enumerate(w):
            if c < 0:
                a = cartan[i]
                for j in range(len(w)):
                    w[j] -= c * a[j]
                break
        else:
            return tuple(w)


def reflect_to_dominant(rs: RootSystem, w: Sequence[int]) -> Tuple[Weight, int]:
    """Dot action: bring ``w + rho`` to the dominant chamber.

    Returns the shifted-back weight and the sign of the Weyl element used;
    the sign is 0 when ``w + rho`` sits on a wall.
    """
    v = [x + 1 for x in w]
    sign = 1
    cartan = rs.cartan
    while True:
        for i, c in enumerate(v):
            if c < 0:
                a = cartan[i]
                for j in range(len(v)):
                    v[j] -= c * a[j]
                sign = -sign
                break
        else:
            break
    if any(c == 0 for c in v):
        sign = 0
    return tuple(x - 1 for x in v), sign


def weyl_orbit(rs: RootSystem, w: Weight, max_weights: int = DEFAULT_MAX_WEIGHTS) -> List[Weight]:
    seen = {tuple(w)}
    queue = deque([tuple(w)])
    while queue:
        v = queue.popleft()
        for i in range(rs.rank):
            if v[i] > 0:
                u = reflect(rs, v, i)
                if u not in seen:
                    seen.add(u)
                    if len(seen) > max_weights:
                        raise ResourceLimit(f"Weyl orbit of {w} exceeds {max_weights} weights")
                    queue.append(u)
    return list(seen)


@lru_cache(maxsize=4096)
def dominant_multiplicities(rs: RootSystem, hw: Weight) -> Dict[Weight, int]:
    """Freudenthal's recursion over the dominant weights of the irrep ``hw``."""
    hw = _check_dominant(hw, rs)
    pos = rs.positive_roots_dynkin
    heights = [sum(r) for r in rs.positive_roots]
    # dominant weights below hw: subtract positive roots, stay dominant
    depth = {hw: 0}
    queue = deque([hw])
    while queue:
        mu = queue.popleft()
        for a, h in zip(pos, heights):
            nu = tuple(x - y for x, y in zip(mu, a))
            if min(nu) >= 0 and nu not in depth:
                depth[nu] = depth[mu] + h
                queue.append(nu)
    order = sorted(depth, key=lambda m: depth[m])
    lam_norm = rs.inner_int([x + 1 for x in hw], [x + 1 for x in hw])
    mult: Dict[Weight, int] = {hw: 1}
    domcache: Dict[Weight, Weight] = {}

    def m_of(nu):
        d = domcache.get(nu)
        if d is None:
            d = dominant_conjugate(rs, nu)
            domcache[nu] = d
        return mult.get(d, 0) if d in depth else None

    for mu in order[1:]:
        total = 0
        for a, w in zip(pos, rs._root_pairings):
            k = 1
            while True:
                nu = tuple(x + k * y for x, y in zip(mu, a))
                m = m_of(nu)
                if not m:
                    break
                total += m * sum(x * y for x, y in zip(nu, w))
                k += 1
        shifted = [x + 1 for x in mu]
        denom = lam_norm - rs.inner_int(shifted, shifted)
        value, rem = divmod(2 * total, denom)
        assert rem == 0, (rs.lie_type, hw, mu)
        mult[mu] = value
    return {m: v for m, v in mult.items() if v}


def weight_multiplicities(rs: RootSystem, hw: Sequence[int],
                          max_weights: int = DEFAULT_MAX_WEIGHTS) -> Dict[Weight, int]:
    """Every weight of the irrep ``hw`` with its multiplicity."""
    hw = _check_dominant(hw, rs)
    return dict(_full_weights(rs, hw, max_weights))


@lru_cache(maxsize=4096)
def _full_weights(rs: RootSystem, hw: Weight, max_weights: int) -> Tuple[Tuple[Weight, int], ...]:
    out = []
    count = 0
    for mu, m in dominant_multiplicities(rs, hw).items():
        orb = weyl_orbit(rs, mu, max_weights)
        count += len(orb)
        if count > max_weights:
            raise ResourceLimit(f"weight system of {hw} exceeds {max_weights} weights")
        out.extend((v, m) for v in orb)
    out.sort()
    return tuple(out)


def is_dominant(w: Sequence[int]) -> bool:
    return all(x >= 0 for x in w)


def fundamental(rs: RootSystem, i: int) -> Weight:
    """The i-th fundamental weight, 1-based as in the diagrams."""
    if not 1 <= i <= rs.rank:
        raise BadArguments(f"{rs.lie_type} has no node {i}")
    return tuple(int(j == i - 1) for j in range(rs.rank))


def parse_weight(text: str, rank: Optional[int] = None) -> Weight:
    try:
        w = tuple(int(x) for x in text.replace(" ", "").split(",") if x != "")
    except ValueError as exc:
        raise BadArguments(f"bad weight {text!r}") from exc
    if rank is not None and len(w) != rank:
        raise BadArguments(f"weight {text!r} needs {rank} labels")
    return w
