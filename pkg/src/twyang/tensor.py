"""Tensor products of irreducibles, for simple factors and for products
``h_1 x ... x h_s (x u(1))`` with additive u(1) charges."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import product
from typing import Dict, Iterable, Optional, Sequence, Tuple

from .errors import BadArguments
from .rootdata import (
    DEFAULT_MAX_WEIGHTS,
    LieType,
    RootSystem,
    Weight,
    build_root_system,
    casimir,
    dimension,
    dual_weight,
    reflect_to_dominant,
    weight_multiplicities,
)

IrrepSum = Dict[Weight, int]


@lru_cache(maxsize=65536)
def _decompose(rs: RootSystem, lam: Weight, mu: Weight, max_weights: int) -> Tuple[Tuple[Weight, int], ...]:
    if dimension(rs, mu) > dimension(rs, lam):
        lam, mu = mu, lam
    acc: Counter = Counter()
    for nu, m in weight_multiplicities(rs, mu, max_weights).items():
        dom, sign = reflect_to_dominant(rs, tuple(x + y for x, y in zip(lam, nu)))
        if sign:
            acc[dom] += sign * m
    bad = [w for w, m in acc.items() if m < 0]
    assert not bad, bad
    return tuple(sorted((w, m) for w, m in acc.items() if m))


def tensor_decompose(rs: RootSystem, lam: Sequence[int], mu: Sequence[int],
                     max_weights: int = DEFAULT_MAX_WEIGHTS) -> IrrepSum:
    """Irreducible summands of ``lam (x) mu`` by the Brauer-Klimyk rule.

    The weight system of the smaller factor is added to the larger highest
    weight; each sum is moved to the dominant chamber by the dot action and
    contributes with the sign of the reflecting element (zero on walls).
    """
    lam, mu = tuple(lam), tuple(mu)
    return dict(_decompose(rs, lam, mu, max_weights))


@dataclass(frozen=True)
class HAlgebra:
    """A product of simple factors, optionally times one u(1)."""

    factors: Tuple[LieType, ...]
    has_u1: bool = False

    @property
    def root_systems(self) -> Tuple[RootSystem, ...]:
        return tuple(build_root_system(t) for t in self.factors)

    @property
    def ranks(self) -> Tuple[int, ...]:
        return tuple(t.rank for t in self.factors)

    @property
    def dim(self) -> int:
        return sum(t.dim for t in self.factors) + int(self.has_u1)

    @property
    def name(self) -> str:
        parts = [t.name for t in self.factors]
        if self.has_u1:
            parts.append("u1")
        return "x".join(parts) if parts else "0"

    def __str__(self):
        return self.name

    def trivial(self) -> "HIrrep":
        return HIrrep(tuple((0,) * r for r in self.ranks), Fraction(0))

    def irrep(self, *labels, charge=0) -> "HIrrep":
        if len(labels) != len(self.factors):
            raise BadArguments(f"{self.name} needs {len(self.factors)} weights")
        return HIrrep(tuple(tuple(int(x) for x in w) for w in labels), Fraction(charge))

    def dimension(self, w: "HIrrep") -> int:
        d = 1
        for rs, lab in zip(self.root_systems, w.labels):
            d *= dimension(rs, lab)
        return d

    def factor_casimirs(self, w: "HIrrep") -> Tuple[Fraction, ...]:
        return tuple(casimir(rs, lab) for rs, lab in zip(self.root_systems, w.labels))

    def conjugate(self, w: "HIrrep") -> "HIrrep":
        return HIrrep(tuple(dual_weight(rs, lab) for rs, lab in zip(self.root_systems, w.labels)), -w.charge)

    def split(self, flat: Sequence) -> Tuple[Tuple[int, ...], ...]:
        """Cut a concatenated label vector into per-factor pieces."""
        out, i = [], 0
        for r in self.ranks:
            out.append(tuple(flat[i:i + r]))
            i += r
        return tuple(out)

    def weights(self, w: "HIrrep", max_weights: int = DEFAULT_MAX_WEIGHTS) -> Dict[Tuple, int]:
        """Weight system of ``w`` keyed by (flat labels..., charge)."""
        per = [weight_multiplicities(rs, lab, max_weights).items()
               for rs, lab in zip(self.root_systems, w.labels)]
        out: Dict[Tuple, int] = {}
        for combo in product(*per):
            key = tuple(x for wt, _ in combo for x in wt) + (w.charge,)
            m = 1
            for _, k in combo:
                m *= k
            out[key] = out.get(key, 0) + m
        return out


@dataclass(frozen=True, order=True)
class HIrrep:
    """An irrep of an :class:`HAlgebra`: per-factor Dynkin labels and a charge."""

    labels: Tuple[Weight, ...]
    charge: Fraction = Fraction(0)

    @property
    def flat(self) -> Tuple[int, ...]:
        return tuple(x for w in self.labels for x in w)

    def is_trivial(self) -> bool:
        return not any(self.flat) and self.charge == 0

    def with_charge_scaled(self, t) -> "HIrrep":
        return HIrrep(self.labels, self.charge * t)


def contains(h: HAlgebra, target: HIrrep, a: HIrrep, b: HIrrep,
             max_weights: int = DEFAULT_MAX_WEIGHTS) -> int:
    """Multiplicity of ``target`` in ``a (x) b``, factor by factor."""
    if a.charge + b.charge != target.charge:
        return 0
    m = 1
    for rs, t, x, y in zip(h.root_systems, target.labels, a.labels, b.labels):
        m *= tensor_decompose(rs, x, y, max_weights).get(t, 0)
        if not m:
            return 0
    return m


def tensor_decompose_h(h: HAlgebra, a: HIrrep, b: HIrrep,
                       max_weights: int = DEFAULT_MAX_WEIGHTS) -> Dict[HIrrep, int]:
    pieces = [tensor_decompose(rs, x, y, max_weights).items()
              for rs, x, y in zip(h.root_systems, a.labels, b.labels)]
    out: Dict[HIrrep, int] = {}
    for combo in product(*pieces):
        m = 1
        for _, k in combo:
            m *= k
        w = HIrrep(tuple(lab for lab, _ in combo), a.charge + b.charge)
        out[w] = out.get(w, 0) + m
    return out


# -- display ---------------------------------------------------------------

def format_weight(w: Sequence[int], t: Optional[LieType] = None, greek: bool = True) -> str:
    """Table-style label: ``0``, ``λ4``, ``λ1+λ3``, ``2λ1``; su(2) as an integer."""
    if t is not None and t.series == "A" and t.rank == 1:
        return str(w[0])
    sym = "λ" if greek else "L"
    terms = []
    for i, c in enumerate(w):
        if c:
            terms.append(f"{'' if c == 1 else c}{sym}{i + 1}")
    return "+".join(terms) if terms else "0"


def format_charge(q: Fraction) -> str:
    if q == 0:
        return "0"
    s = "+" if q > 0 else "-"
    q = abs(q)
    return f"{s}{q.numerator}" if q.denominator == 1 else f"{s}{q.numerator}/{q.denominator}"


def format_hirrep(h: HAlgebra, w: HIrrep, greek: bool = True) -> str:
    body = ",".join(format_weight(lab, t, greek) for lab, t in zip(w.labels, h.factors))
    if not h.factors:
        body = "0"
    s = f"({body})"
    if h.has_u1:
        s += f"_{format_charge(w.charge)}"
    return s


def irrep_sum_dimension(rs: RootSystem, parts: Iterable[Tuple[Weight, int]]) -> int:
    return sum(m * dimension(rs, w) for w, m in parts)
