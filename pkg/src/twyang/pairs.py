"""Catalogue of symmetric pairs (g, h) with their weight projections.

A pair carries a rational matrix sending g Dynkin labels to the
concatenated Dynkin labels of the simple factors of h, plus one charge row
when h has a u(1) factor.  Every instance is validated when it is built:
the adjoint of g must restrict to adjoint(h) + K with K irreducible (or two
conjugate pieces of opposite charge), otherwise ValidationFailure.

Classical projections come from the images of the orthonormal basis vectors
of the defining representation; exceptional ones are read from the shipped
``data/exceptional_pairs.json`` (regenerate with ``scripts/build_catalogue.py``).
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from importlib import resources
from math import gcd, lcm
from typing import Callable, Dict, List, Optional, Sequence, Tuple

from .branching import branch
from .errors import BadArguments, BadParams, NotInCatalogue, ValidationFailure
from .rootdata import LieType, adjoint_casimir, build_root_system, casimir, parse_lie_type
from .tensor import HAlgebra, HIrrep, format_hirrep

CATALOGUE_VERSION = 1
Matrix = List[List[Fraction]]


@dataclass(frozen=True)
class SymmetricPair:
    family: str
    params: Tuple[int, ...]
    g: LieType
    h: HAlgebra
    projection: Tuple[Tuple[Fraction, ...], ...]
    k_rep: Tuple[HIrrep, ...]
    c_coeffs: Tuple[Fraction, ...]
    c_u1: Optional[Fraction] = None
    degenerate: bool = False
    k_heading: str = ""
    k_heading_match: Optional[bool] = None

    @property
    def name(self) -> str:
        return self.family

    @property
    def label(self) -> str:
        return pair_label(self.family, self.params)

    @property
    def c_A(self) -> Fraction:
        return adjoint_casimir(build_root_system(self.g))

    @property
    def dim_k(self) -> int:
        return sum(self.h.dimension(k) for k in self.k_rep)

    def __str__(self):
        return self.label

    def fmt(self, w: HIrrep) -> str:
        return format_hirrep(self.h, w)

    def with_charge_scale(self, t) -> "SymmetricPair":
        """Same pair with the charge row multiplied by ``t`` (debugging aid)."""
        if not self.h.has_u1:
            return self
        t = Fraction(t)
        proj = self.projection[:-1] + (tuple(x * t for x in self.projection[-1]),)
        return _finish(self.family, self.params, self.g, self.h, proj, self.k_heading,
                       self.degenerate, expected_k=None)


# -- small exact linear algebra ---------------------------------------------

def _mat(rows) -> Matrix:
    return [[Fraction(x) for x in r] for r in rows]


def _mul(a: Matrix, b: Matrix) -> Matrix:
    if not a:
        return []
    return [[sum(a[i][k] * b[k][j] for k in range(len(b))) for j in range(len(b[0]))] for i in range(len(a))]


# -- classical coordinates ----------------------------------------------------

def _eps_columns(kind: str, N: int) -> Tuple[LieType, Matrix]:
    """g = su/so/sp(N): fundamental weights in orthonormal coordinates."""
    if kind == "su":
        n = N - 1
        cols = [[Fraction(int(i < k)) for i in range(N)] for k in range(1, n + 1)]
        t = LieType("A", n)
    elif kind == "sp":
        n = N // 2
        cols = [[Fraction(int(i < k)) for i in range(n)] for k in range(1, n + 1)]
        t = LieType("C", n)
    else:
        n = N // 2
        half = Fraction(1, 2)
        if N % 2:
            cols = [[Fraction(int(i < k)) for i in range(n)] for k in range(1, n)]
            cols.append([half] * n)
            t = LieType("B", n)
        else:
            cols = [[Fraction(int(i < k)) for i in range(n)] for k in range(1, n - 1)]
            cols.append([half] * (n - 1) + [-half])
            cols.append([half] * n)
            t = LieType("D", n)
    return t, [list(r) for r in zip(*cols)]


def _classical_factor(kind: str, N: int):
    """h-factor su/so/sp(N): (type or 'u1' or None, #coords, coords -> labels)."""
    F = Fraction
    if kind == "su":
        if N == 1:
            return None, 1, []
        rows = [[F(int(j == i) - int(j == i + 1)) for j in range(N)] for i in range(N - 1)]
        return LieType("A", N - 1), N, rows
    if kind == "sp":
        n = N // 2
        if n == 1:
            return LieType("A", 1), 1, [[F(1)]]
        rows = [[F(int(j == i) - int(j == i + 1)) for j in range(n)] for i in range(n - 1)]
        rows.append([F(int(j == n - 1)) for j in range(n)])
        return LieType("C", n), n, rows
    n = N // 2
    if N == 1:
        return None, 0, []
    if N == 2:
        return "u1", 1, [[F(1)]]
    if N == 3:
        return LieType("A", 1), 1, [[F(2)]]
    rows = [[F(int(j == i) - int(j == i + 1)) for j in range(n)] for i in range(n - 1)]
    if N % 2:
        rows.append([F(2 * int(j == n - 1)) for j in range(n)])
        return LieType("B", n), n, rows
    rows.append([F(int(j in (n - 2, n - 1))) for j in range(n)])
    return LieType("D", n), n, rows


def _classical_projection(g_kind: str, N: int, slots: Sequence[Tuple[str, int]],
                          image: Callable[[int], Tuple[Dict[int, Dict[int, int]], int]],
                          n_eps: int):
    """Assemble a projection from images of the g coordinate vectors.

    ``image(i)`` returns ({slot: {coord: coeff}}, charge) for the i-th g
    coordinate.
    """
    g, E = _eps_columns(g_kind, N)
    facs = [_classical_factor(k, d) for k, d in slots]
    factors, rows = [], []
    charge = [Fraction(0)] * n_eps
    used_charge = False
    images = [image(i) for i in range(n_eps)]
    for s, (typ, ne, to_lab) in enumerate(facs):
        if typ is None:
            continue
        L = [[Fraction(images[i][0].get(s, {}).get(j, 0)) for i in range(n_eps)] for j in range(ne)]
        block = _mul(to_lab, L)
        if typ == "u1":
            charge = [a + b for a, b in zip(charge, block[0])]
            used_charge = True
        else:
            factors.append(typ)
            rows.extend(block)
    for i in range(n_eps):
        if images[i][1]:
            used_charge = True
        charge[i] += images[i][1]
    P = _mul(rows, E) if rows else []
    if used_charge:
        P.append(_mul([charge], E)[0])
    return g, HAlgebra(tuple(factors), used_charge), P


def _normalise_charge(g: LieType, P: Matrix, has_u1: bool) -> Matrix:
    """Scale the charge row to integers with gcd 1 on weights and roots."""
    if not has_u1:
        return P
    rs = build_root_system(g)
    row = P[-1]
    vals = list(row)  # charges of the fundamental weights
    vals += [sum(c * x for c, x in zip(row, a)) for a in rs.simple_roots]
    vals = [v for v in vals if v]
    den = lcm(*(v.denominator for v in vals))
    ints = [int(v * den) for v in vals]
    g_ = 0
    for v in ints:
        g_ = gcd(g_, v)
    scale = Fraction(den, g_)
    return P[:-1] + [[x * scale for x in row]]


# -- families -----------------------------------------------------------------

@dataclass(frozen=True)
class Family:
    name: str
    g_series: str
    param_names: Tuple[str, ...]
    description: str
    k_heading: str
    fixed: Optional[Tuple[int, ...]] = None

    @property
    def exceptional(self) -> bool:
        return self.fixed is not None


_FAMILIES = [
    Family("AIII", "A", ("N", "M"), "su(N)/s(u(M)+u(N-M))", "(λ1,λ_{m-1})⊕(λ_{n-m-1},λ1)"),
    Family("AI", "A", ("N",), "su(N)/so(N)", "(2λ1)"),
    Family("AII", "A", ("N",), "su(N)/sp(N), N even", "(λ2)"),
    Family("BDI", "BD", ("N", "M"), "so(N)/so(M)+so(N-M)", "(λ1,λ1)"),
    Family("DIII", "D", ("N",), "so(N)/u(N/2), N even", "(λ2)⊕(λ_{n-2})"),
    Family("CII", "C", ("n", "m"), "sp(2n)/sp(2m)+sp(2n-2m)", "(λ1,λ1)"),
    Family("CI", "C", ("n",), "sp(2n)/u(n)", "(2λ1)⊕(2λ_{n-1})"),
    Family("EI", "E", (), "e6/c4", "(λ4)", (6,)),
    Family("EII", "E", (), "e6/a5+a1", "(λ3,1)", (6,)),
    Family("EIII", "E", (), "e6/d5+u1", "(λ4)⊕(λ5)", (6,)),
    Family("EIV", "E", (), "e6/f4", "(λ4)", (6,)),
    Family("EV", "E", (), "e7/a7", "(λ4)", (7,)),
    Family("EVI", "E", (), "e7/d6+a1", "(λ5,1)", (7,)),
    Family("EVII", "E", (), "e7/e6+u1", "(λ1)⊕(λ6)", (7,)),
    Family("EVIII", "E", (), "e8/d8", "(λ7)", (8,)),
    Family("EIX", "E", (), "e8/e7+a1", "(λ7,1)", (8,)),
    Family("FI", "F", (), "f4/c3+a1", "(λ3,1)", (4,)),
    Family("FII", "F", (), "f4/b4", "(λ4)", (4,)),
    Family("G", "G", (), "g2/a1+a1", "(3,1)", (2,)),
]
FAMILY_BY_NAME = {f.name: f for f in _FAMILIES}

# published K headings for the rank-fixed families, as (factor labels..., charge sign)
_EXCEPTIONAL_K = {
    "EI": [((0, 0, 0, 1),)],
    "EII": [((0, 0, 1, 0, 0), (1,))],
    "EIII": [((0, 0, 0, 1, 0),), ((0, 0, 0, 0, 1),)],
    "EIV": [((0, 0, 0, 1),)],
    "EV": [((0, 0, 0, 1, 0, 0, 0),)],
    "EVI": [((0, 0, 0, 0, 1, 0), (1,))],
    "EVII": [((1, 0, 0, 0, 0, 0),), ((0, 0, 0, 0, 0, 1),)],
    "EVIII": [((0, 0, 0, 0, 0, 0, 1, 0),)],
    "EIX": [((0, 0, 0, 0, 0, 0, 1), (1,))],
    "FI": [((0, 0, 1), (1,))],
    "FII": [((0, 0, 0, 1),)],
    "G": [((3,), (1,))],
}


def catalogue() -> List[Family]:
    """Every symmetric-pair family, classical first."""
    return list(_FAMILIES)


def family(name: str) -> Family:
    try:
        return FAMILY_BY_NAME[name.upper()]
    except KeyError:
        raise NotInCatalogue(f"no family {name!r}") from None


def check_params(fam: Family, params: Sequence[int]) -> Tuple[int, ...]:
    params = tuple(int(p) for p in params)
    if fam.exceptional:
        if params not in ((), fam.fixed):
            raise BadParams(f"{fam.name} takes no parameters")
        return ()
    if len(params) != len(fam.param_names):
        raise BadParams(f"{fam.name} needs parameters {fam.param_names}")
    ok = {
        "AIII": lambda N, M: N >= 2 and 1 <= M <= N - 1,
        "AI": lambda N: N >= 2,
        "AII": lambda N: N >= 4 and N % 2 == 0,
        "BDI": lambda N, M: N >= 5 and 1 <= M <= N - 1,
        "DIII": lambda N: N >= 6 and N % 2 == 0,
        "CII": lambda n, m: n >= 2 and 1 <= m <= n - 1,
        "CI": lambda n: n >= 2,
    }[fam.name](*params)
    if not ok:
        raise BadParams(f"{fam.name}{params} out of range")
    return params


def pair_label(fam_name: str, params: Sequence[int]) -> str:
    p = tuple(params)
    if fam_name == "AIII":
        N, M = p
        return f"su{N}/su{M}xsu{N - M}xu1"
    if fam_name == "AI":
        return f"su{p[0]}/so{p[0]}"
    if fam_name == "AII":
        return f"su{p[0]}/sp{p[0]}"
    if fam_name == "BDI":
        N, M = p
        return f"so{N}/so{M}xso{N - M}"
    if fam_name == "DIII":
        return f"so{p[0]}/su{p[0] // 2}xu1"
    if fam_name == "CII":
        n, m = p
        return f"sp{2 * n}/sp{2 * m}xsp{2 * n - 2 * m}"
    if fam_name == "CI":
        return f"sp{2 * p[0]}/su{p[0]}xu1"
    return {
        "EI": "e6/c4", "EII": "e6/a5xa1", "EIII": "e6/d5xu1", "EIV": "e6/f4",
        "EV": "e7/a7", "EVI": "e7/d6xa1", "EVII": "e7/e6xu1", "EVIII": "e8/d8",
        "EIX": "e8/e7xa1", "FI": "f4/c3xa1", "FII": "f4/b4", "G": "g2/a1xa1",
    }[fam_name]


def _classical_build(name: str, p: Tuple[int, ...]):
    """(g, h, projection, expected K or None, degenerate) for a classical family."""
    if name == "AIII":
        N, M = p

        def img(i):
            return ({0: {i: 1}}, N - M) if i < M else ({1: {i - M: 1}}, -M)
        g, h, P = _classical_projection("su", N, [("su", M), ("su", N - M)], img, N)
        return g, h, P, None, False
    if name == "AI":
        (N,) = p
        n = N // 2

        def img(i):
            if i < n:
                return {0: {i: 1}}, 0
            if N % 2 and i == n:
                return {}, 0
            j = N - 1 - i
            return {0: {j: -1}}, 0
        g, h, P = _classical_projection("su", N, [("so", N)], img, N)
        return g, h, P, None, N < 5
    if name == "AII":
        (N,) = p
        n = N // 2

        def img(i):
            return ({0: {i: 1}}, 0) if i < n else ({0: {N - 1 - i: -1}}, 0)
        g, h, P = _classical_projection("su", N, [("sp", N)], img, N)
        return g, h, P, None, False
    if name == "BDI":
        N, M = p
        m1, m2 = M // 2, (N - M) // 2

        def img(i):
            if i < m1:
                return {0: {i: 1}}, 0
            if i < m1 + m2:
                return {1: {i - m1: 1}}, 0
            return {}, 0
        g, h, P = _classical_projection("so", N, [("so", M), ("so", N - M)], img, N // 2)
        return g, h, P, None, min(M, N - M) <= 2
    if name == "DIII":
        (N,) = p
        n = N // 2
        g, h, P = _classical_projection("so", N, [("su", n)], lambda i: ({0: {i: 1}}, 1), n)
        return g, h, P, None, False
    if name == "CI":
        (n,) = p
        g, h, P = _classical_projection("sp", 2 * n, [("su", n)], lambda i: ({0: {i: 1}}, 1), n)
        return g, h, P, None, False
    if name == "CII":
        n, m = p

        def img(i):
            return ({0: {i: 1}}, 0) if i < m else ({1: {i - m: 1}}, 0)
        g, h, P = _classical_projection("sp", 2 * n, [("sp", 2 * m), ("sp", 2 * n - 2 * m)], img, n)
        return g, h, P, None, False
    raise NotInCatalogue(name)


# -- exceptional data -----------------------------------------------------------

@lru_cache(maxsize=1)
def _shipped() -> Dict[str, dict]:
    text = resources.files("twyang").joinpath("data/exceptional_pairs.json").read_text()
    doc = json.loads(text)
    return {rec["family"]: rec for rec in doc["pairs"]}


def _finish(name, params, g, h, P, heading, degenerate, expected_k) -> SymmetricPair:
    P = tuple(tuple(Fraction(x) for x in row) for row in P)
    k = _validate(g, h, P)
    pair = SymmetricPair(name, tuple(params), g, h, P, k, (), None, degenerate, heading)
    cs, cu = _c_coefficients(pair)
    match = None
    if expected_k is not None:
        match = sorted((w.labels for w in k)) == sorted(expected_k)
        if not match:
            raise ValidationFailure(
                f"{pair.label}: K computed as {[pair.fmt(w) for w in k]}, expected {expected_k}")
    return SymmetricPair(name, tuple(params), g, h, P, k, cs, cu, degenerate, heading, match)


def _validate(g: LieType, h: HAlgebra, P) -> Tuple[HIrrep, ...]:
    rs = build_root_system(g)
    if len(P) != sum(h.ranks) + int(h.has_u1) or any(len(r) != g.rank for r in P):
        raise ValidationFailure(f"projection shape does not fit {g}/{h}")
    try:
        adj = branch(rs, h, P, rs.highest_root)
    except Exception as exc:
        raise ValidationFailure(f"adjoint of {g} does not branch through the projection: {exc}") from exc
    rest = dict(adj)
    expected_h = []
    for f, frs in enumerate(h.root_systems):
        for hr in frs.highest_roots():
            labels = tuple(hr if j == f else (0,) * r for j, r in enumerate(h.ranks))
            expected_h.append(HIrrep(labels, Fraction(0)))
    if h.has_u1:
        expected_h.append(h.trivial())
    for w in expected_h:
        if rest.get(w, 0) < 1:
            raise ValidationFailure(f"adjoint of {g} restricted to {h} lacks the h-adjoint piece {w}")
        rest[w] -= 1
        if not rest[w]:
            del rest[w]
    k = tuple(sorted(rest))
    if any(m != 1 for m in rest.values()):
        raise ValidationFailure(f"{g}/{h}: k is not multiplicity free: {rest}")
    if h.has_u1:
        if len(k) != 2 or k[0] != h.conjugate(k[1]) or k[0].charge == 0:
            raise ValidationFailure(f"{g}/{h}: k is not a conjugate pair of charged irreps: {k}")
        k = tuple(sorted(k, key=lambda w: -w.charge))
    elif len(k) != 1:
        raise ValidationFailure(f"{g}/{h}: k is reducible: {k}")
    if h.dim + sum(h.dimension(w) for w in k) != g.dim:
        raise ValidationFailure(f"{g}/{h}: dimensions do not add up")
    return k


def _c_coefficients(pair: SymmetricPair) -> Tuple[Tuple[Fraction, ...], Optional[Fraction]]:
    cA = pair.c_A
    dk = pair.dim_k
    cs = []
    for f, (t, frs) in enumerate(zip(pair.h.factors, pair.h.root_systems)):
        c_h = casimir(frs, frs.highest_root)
        c_k = _factor_casimir_on_k(pair, f)
        cs.append(cA / (c_h + Fraction(dk, t.dim) * c_k))
    cu = None
    if pair.h.has_u1:
        cu = cA / (dk * _charge_sq_on_k(pair))
    return tuple(cs), cu


def _factor_casimir_on_k(pair: SymmetricPair, f: int) -> Fraction:
    # trace of C_2^{h_f} over k divided by dim k
    frs = pair.h.root_systems[f]
    tot = sum(pair.h.dimension(w) * casimir(frs, w.labels[f]) for w in pair.k_rep)
    return Fraction(tot, pair.dim_k)


def _charge_sq_on_k(pair: SymmetricPair) -> Fraction:
    return sum(pair.h.dimension(w) * w.charge ** 2 for w in pair.k_rep) / pair.dim_k


@lru_cache(maxsize=None)
def instantiate(fam_name: str, params: Tuple[int, ...] = ()) -> SymmetricPair:
    """Build and validate one pair of a family."""
    fam = family(fam_name) if isinstance(fam_name, str) else fam_name
    params = check_params(fam, params)
    if fam.exceptional:
        rec = _shipped()[fam.name]
        g = parse_lie_type(rec["g"])
        h = HAlgebra(tuple(parse_lie_type(t) for t in rec["h"]["factors"]), rec["h"]["u1"])
        P = [[Fraction(x) for x in row] for row in rec["projection"]]
        return _finish(fam.name, (), g, h, P, fam.k_heading, False, _EXCEPTIONAL_K[fam.name])
    g, h, P, expected, degenerate = _classical_build(fam.name, params)
    P = _normalise_charge(g, P, h.has_u1)
    pair = _finish(fam.name, params, g, h, P, fam.k_heading, degenerate, expected)
    return pair


def c_coefficients(pair: SymmetricPair) -> Tuple[Tuple[Fraction, ...], Optional[Fraction]]:
    """c_i = c_A / (C(h_i) + dim k / dim h_i * C_{h_i}(k)), and c for u(1)."""
    return _c_coefficients(pair)


def symmetric_space_sum(pair: SymmetricPair) -> Fraction:
    """Sum over factors of (C(h_i)/C_{h_i}(k) + dim k/dim h_i)^-1; 1/2 for symmetric pairs."""
    dk = pair.dim_k
    total = Fraction(0)
    for f, (t, frs) in enumerate(zip(pair.h.factors, pair.h.root_systems)):
        c_h = casimir(frs, frs.highest_root)
        total += 1 / (c_h / _factor_casimir_on_k(pair, f) + Fraction(dk, t.dim))
    if pair.h.has_u1:
        total += Fraction(1, dk)
    return total


def composite_casimir(pair: SymmetricPair, w: HIrrep) -> Fraction:
    """C(w) = sum_i c_i C_2^{h_i}(w_i) + c_u1 q^2."""
    total = sum((c * x for c, x in zip(pair.c_coeffs, pair.h.factor_casimirs(w))), Fraction(0))
    if pair.h.has_u1:
        total += pair.c_u1 * w.charge ** 2
    return total


def adjoint_pieces(pair: SymmetricPair) -> List[HIrrep]:
    """The h-adjoint as h-irreps (one per diagram component, plus u(1))."""
    out = []
    for f, frs in enumerate(pair.h.root_systems):
        for hr in frs.highest_roots():
            out.append(HIrrep(tuple(hr if j == f else (0,) * r for j, r in enumerate(pair.h.ranks)), Fraction(0)))
    if pair.h.has_u1:
        out.append(pair.h.trivial())
    return out


# -- addressing pairs by name ------------------------------------------------------

def _norm_token(tok: str) -> Optional[str]:
    tok = tok.strip().lower()
    if tok in ("u1", "so2", "u(1)", "so(2)"):
        return "u1"
    if tok in ("su1", "so1", "su(1)", "so(1)", ""):
        return None
    return parse_lie_type(tok).name


def _candidates(g: LieType):
    s, r = g.series, g.rank
    if s == "A":
        N = r + 1
        for M in range(1, N):
            yield "AIII", (N, M)
        yield "AI", (N,)
        if N % 2 == 0 and N >= 4:
            yield "AII", (N,)
    if s in "BD":
        N = 2 * r + 1 if s == "B" else 2 * r
        if N >= 5:
            for M in range(1, N):
                yield "BDI", (N, M)
        if s == "D" and N >= 6:
            yield "DIII", (N,)
    if s == "C":
        for m in range(1, r):
            yield "CII", (r, m)
        yield "CI", (r,)
    for fam in _FAMILIES:
        if fam.exceptional and fam.g_series == s and fam.fixed == (r,):
            yield fam.name, ()


def parse_pair(text: str) -> SymmetricPair:
    """Resolve ``so10/so4xso6``, ``e6/f4``, ``BDI(10,4)`` or ``FII``."""
    s = text.strip()
    m = re.fullmatch(r"([A-Za-z]+)\s*(?:\(([\d,\s]*)\))?", s)
    if m and m.group(1).upper() in FAMILY_BY_NAME:
        params = tuple(int(x) for x in (m.group(2) or "").split(",") if x.strip())
        return instantiate(m.group(1).upper(), params)
    if "/" not in s:
        raise BadArguments(f"cannot parse pair {text!r}; use g/h, e.g. so10/so4xso6")
    gs, hs = s.split("/", 1)
    g = parse_lie_type(gs)
    toks = []
    for x in hs.split("x"):
        # u(n) = su(n) x u(1)
        m = re.fullmatch(r"\s*u\(?(\d+)\)?\s*", x.lower())
        toks += [f"su{m.group(1)}", "u1"] if m and int(m.group(1)) > 1 else [x]
    want = [t for t in (_norm_token(x) for x in toks) if t is not None]
    want_u1 = "u1" in want
    want_f = [t for t in want if t != "u1"]
    for fam_name, params in _candidates(g):
        try:
            pair = instantiate(fam_name, params)
        except (BadParams, ValidationFailure):
            continue
        if pair.h.has_u1 == want_u1 and [t.name for t in pair.h.factors] == want_f:
            return pair
    raise NotInCatalogue(f"no catalogued symmetric pair {text!r}")


def sweep(max_N: int = 16):
    """Every instantiable pair with classical size up to ``max_N``."""
    for fam in _FAMILIES:
        if fam.exceptional:
            yield instantiate(fam.name)
            continue
        for params in _param_range(fam, max_N):
            yield instantiate(fam.name, params)


def _param_range(fam: Family, max_N: int):
    if fam.name == "AIII":
        return [(N, M) for N in range(2, max_N + 1) for M in range(1, N)]
    if fam.name == "AI":
        return [(N,) for N in range(2, max_N + 1)]
    if fam.name == "AII":
        return [(N,) for N in range(4, max_N + 1, 2)]
    if fam.name == "BDI":
        return [(N, M) for N in range(5, max_N + 1) for M in range(1, N)]
    if fam.name == "DIII":
        return [(N,) for N in range(6, max_N + 1, 2)]
    if fam.name == "CII":
        return [(n, m) for n in range(2, max_N // 2 + 1) for m in range(1, n)]
    if fam.name == "CI":
        return [(n,) for n in range(2, max_N // 2 + 1)]
    return [()]


# -- catalogue file ------------------------------------------------------------------

def _q(x: Fraction) -> str:
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def pair_record(pair: SymmetricPair) -> dict:
    return {
        "family": pair.family,
        "params": list(pair.params),
        "name": pair.label,
        "g": pair.g.name,
        "h": {"factors": [t.name for t in pair.h.factors], "u1": pair.h.has_u1},
        "projection": [[_q(x) for x in row] for row in pair.projection],
        "k": [{"labels": [list(l) for l in w.labels], "charge": _q(w.charge)} for w in pair.k_rep],
    }


def dumps_catalogue(pairs: Sequence[SymmetricPair]) -> str:
    doc = {"version": CATALOGUE_VERSION, "pairs": [pair_record(p) for p in pairs]}
    return json.dumps(doc, indent=1, ensure_ascii=False) + "\n"


def loads_catalogue(text: str) -> List[SymmetricPair]:
    """Parse a catalogue document; every record is re-validated."""
    doc = json.loads(text)
    if doc.get("version") != CATALOGUE_VERSION:
        raise ValidationFailure(f"unsupported catalogue version {doc.get('version')}")
    out = []
    for rec in doc["pairs"]:
        fam = family(rec["family"])
        g = parse_lie_type(rec["g"])
        h = HAlgebra(tuple(parse_lie_type(t) for t in rec["h"]["factors"]), bool(rec["h"]["u1"]))
        P = [[Fraction(x) for x in row] for row in rec["projection"]]
        pair = _finish(fam.name, tuple(rec["params"]), g, h, P, fam.k_heading,
                       False if fam.exceptional else _classical_build(fam.name, tuple(rec["params"]))[4],
                       None)
        stored = tuple(HIrrep(tuple(tuple(l) for l in k["labels"]), Fraction(k["charge"])) for k in rec["k"])
        if stored != pair.k_rep:
            raise ValidationFailure(f"{rec['name']}: stored K disagrees with the projection")
        out.append(pair)
    return out
