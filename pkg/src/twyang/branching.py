"""Restriction of g-irreps to h = h_1 x ... x h_s (x u(1)) through a
projection matrix.

The weight system of the g-irrep is projected, then h-irreps are peeled off
from the top: the residual weight maximising <mu, rho_h> must be the highest
weight of a constituent, whose full character is subtracted.
"""

from __future__ import annotations

from collections import Counter
from fractions import Fraction
from functools import lru_cache
from typing import Dict, List, Sequence, Tuple

from .errors import NonDominantProjection
from .rootdata import DEFAULT_MAX_WEIGHTS, RootSystem, _check_dominant, build_root_system, weight_multiplicities
from .tensor import HAlgebra, HIrrep

Projection = Tuple[Tuple[Fraction, ...], ...]


def project_weight(projection: Projection, mu: Sequence[int], has_u1: bool) -> Tuple:
    img = [sum(c * x for c, x in zip(row, mu)) for row in projection]
    n = len(img) - int(has_u1)
    labels = []
    for v in img[:n]:
        v = Fraction(v)
        if v.denominator != 1:
            raise NonDominantProjection(f"projection sends {tuple(mu)} to non-integral labels")
        labels.append(int(v))
    charge = Fraction(img[-1]) if has_u1 else Fraction(0)
    return tuple(labels) + (charge,)


def _height_key(h: HAlgebra, key: Tuple) -> Tuple:
    flat, charge = key[:-1], key[-1]
    total = Fraction(0)
    i = 0
    for rs in h.root_systems:
        lab = flat[i:i + rs.rank]
        total += rs.inner(lab, rs.weyl_vector)
        i += rs.rank
    return (total, charge, flat)


def branch(g_rs: RootSystem, h: HAlgebra, projection: Projection, hw: Sequence[int],
           max_weights: int = DEFAULT_MAX_WEIGHTS) -> Dict[HIrrep, int]:
    """Decompose the g-irrep ``hw`` into h-irreps (exact multiplicities)."""
    hw = _check_dominant(hw, g_rs)
    return dict(_branch(g_rs, h, tuple(tuple(r) for r in projection), hw, max_weights))


@lru_cache(maxsize=4096)
def _branch(g_rs, h, projection, hw, max_weights):
    residual: Counter = Counter()
    for mu, m in weight_multiplicities(g_rs, hw, max_weights).items():
        residual[project_weight(projection, mu, h.has_u1)] += m
    out: Dict[HIrrep, int] = {}
    while residual:
        top = max(residual, key=lambda k: _height_key(h, k))
        m = residual[top]
        labels = h.split(top[:-1])
        if m < 0 or any(x < 0 for x in top[:-1]):
            raise NonDominantProjection(
                f"maximal residual weight {top} of {hw} is not h-dominant; bad projection?")
        w = HIrrep(labels, top[-1])
        out[w] = out.get(w, 0) + m
        for key, k in h.weights(w, max_weights).items():
            residual[key] -= m * k
            if residual[key] == 0:
                del residual[key]
            elif residual[key] < 0:
                raise NonDominantProjection(
                    f"peeling {w} from {hw} left a negative multiplicity; bad projection?")
    return tuple(sorted(out.items()))


def restrict(pair, hw: Sequence[int], max_weights: int = DEFAULT_MAX_WEIGHTS) -> Dict[HIrrep, int]:
    """h-content of the g-irrep ``hw`` for a symmetric pair."""
    return branch(build_root_system(pair.g), pair.h, pair.projection, hw, max_weights)


def restrict_sum(pair, parts: Sequence[Sequence[int]],
                 max_weights: int = DEFAULT_MAX_WEIGHTS) -> List[Tuple[int, Dict[HIrrep, int]]]:
    """Per-part decompositions, tagged with the index of the parent part."""
    return [(i, restrict(pair, p, max_weights)) for i, p in enumerate(parts)]
