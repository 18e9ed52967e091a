"""Fundamental Y(g)-representations as g-modules, and the bulk tensor
product graph (TPG) with its label-deletion subgraphs."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Tuple

from .errors import BadArguments, LabelAbsent, MultiplicityFailure, Unknown
from .rootdata import DEFAULT_MAX_WEIGHTS, LieType, Weight, build_root_system, casimir, dimension, fundamental
from .tensor import format_weight, tensor_decompose

PAPER = "PAPER"
DERIVED = "DERIVED"
ADJOINT = "adj"  # index of the distinguished adjoint + trivial representation
YREP_TABLE_VERSION = 1


@dataclass(frozen=True)
class YRep:
    g: LieType
    index: object
    parts: Tuple[Weight, ...]
    provenance: str = PAPER
    note: str = ""

    @property
    def dim(self) -> int:
        rs = build_root_system(self.g)
        return sum(dimension(rs, p) for p in self.parts)

    def describe(self) -> str:
        t = self.g
        return " + ".join(f"({format_weight(p, t)})" for p in self.parts)


def _lam(rank: int, *idx: int) -> Weight:
    w = [0] * rank
    for i in idx:
        w[i - 1] += 1
    return tuple(w)


# Exceptional entries: (index) -> (list of fundamental indices, 0 = trivial, provenance, note)
_EXCEPTIONAL = {
    "e6": {
        1: ([1], PAPER, ""), 6: ([6], PAPER, ""), 2: ([2, 0], PAPER, ""),
        3: ([3, 6], DERIVED, "dimension 378 matches the e6 branching-graph node sets"),
        5: ([5, 1], DERIVED, "conjugate of v_3"),
    },
    "e7": {1: ([1, 0], PAPER, ""), 7: ([7], PAPER, ""), 2: ([2, 7], PAPER, "")},
    "e8": {
        8: ([8, 0], PAPER, ""),
        1: ([1, 8, 0], DERIVED, "dimension 4124 matches the e8/d8 v_1 node set"),
    },
    "f4": {4: ([4], PAPER, ""), 1: ([1, 0], PAPER, "")},
    "g2": {1: ([1], PAPER, ""), 2: ([2, 0], PAPER, "")},
}


def fundamental_yrep(g: LieType, i) -> YRep:
    """g-content of the i-th fundamental Y(g)-module (top part first)."""
    if i == ADJOINT:
        return adjoint_plus_trivial(g)
    r = g.rank
    try:
        i = int(i)
    except (TypeError, ValueError):
        raise BadArguments(f"bad representation index {i!r}") from None
    if not 1 <= i <= r:
        raise BadArguments(f"{g.name} has no fundamental {i}")
    s = g.series
    if s in ("A", "C"):
        return YRep(g, i, (_lam(r, i),))
    if s in ("B", "D"):
        spin = {r} if s == "B" else {r - 1, r}
        if i in spin:
            return YRep(g, i, (_lam(r, i),))
        # v_i = V_i + V_{i-2} + ... for the tensor-type fundamentals
        parts = [_lam(r, j) if j else (0,) * r for j in range(i, -1, -2)]
        return YRep(g, i, tuple(parts))
    entry = _EXCEPTIONAL.get(g.name, {}).get(i)
    if entry is None:
        raise Unknown(f"no decomposition of the Y({g.name}) fundamental v_{i} is tabulated")
    idx, prov, note = entry
    parts = tuple(_lam(r, j) if j else (0,) * r for j in idx)
    return YRep(g, i, parts, prov, note)


def exterior_weights(g: LieType, j: int) -> Tuple[Weight, ...]:
    """Dynkin labels of the so(N)-irreps making up Lambda^j of the vector module."""
    if g.series not in ("B", "D"):
        raise BadArguments(f"{g.name} is not an orthogonal algebra")
    n = g.rank
    N = 2 * n + (g.series == "B")
    if not 0 <= j <= N:
        raise BadArguments(f"Lambda^{j} of a {N}-dimensional module")
    j = min(j, N - j)  # Hodge duality
    if j == 0:
        return ((0,) * n,)
    if g.series == "B":
        return (_lam(n, n, n),) if j == n else (_lam(n, j),)
    if j == n - 1:
        return (_lam(n, n - 1, n),)
    if j == n:
        return (_lam(n, n - 1, n - 1), _lam(n, n, n))
    return (_lam(n, j),)


def exterior_yrep(g: LieType, r: int) -> YRep:
    """Lambda^r + Lambda^(r-2) + ... of the vector module of so(N).

    For r <= (N-3)/2 this is the fundamental v_r; above that range it is
    the tensor-type module with the same g-content pattern, which is not a
    fundamental Y(g)-module.
    """
    n = g.rank
    N = 2 * n + (g.series == "B")
    if not 1 <= r < N:
        raise BadArguments(f"no exterior power {r} for so({N})")
    parts = tuple(w for j in range(r, -1, -2) for w in exterior_weights(g, j))
    inside = r <= (N - 3) // 2
    note = "" if inside else "tensor-type module beyond the fundamental range"
    return YRep(g, f"Λ{r}", parts, PAPER if inside else DERIVED, note)


def adjoint_plus_trivial(g: LieType) -> YRep:
    rs = build_root_system(g)
    return YRep(g, ADJOINT, (tuple(rs.highest_root), (0,) * g.rank), PAPER)


def table(g: LieType) -> List[YRep]:
    """Every tabulated entry for g."""
    out = []
    for i in range(1, g.rank + 1):
        try:
            out.append(fundamental_yrep(g, i))
        except Unknown:
            pass
    return out


def yrep_record(v: YRep) -> dict:
    return {"g": v.g.name, "index": v.index, "parts": [list(p) for p in v.parts],
            "provenance": v.provenance, "note": v.note}


@dataclass
class TPGraph:
    g: LieType
    nodes: List[Tuple[Weight, Fraction]]
    edges: List[Tuple[int, int, Fraction]] = field(default_factory=list)

    def labels(self):
        return sorted({e[2] for e in self.edges})


def bulk_tpg(g: LieType, i: int, j: int, max_weights: int = DEFAULT_MAX_WEIGHTS) -> TPGraph:
    """Tensor product graph on the irreducible summands of V_i x V_j.

    An edge U -> V is drawn when V occurs in adjoint x U; its label is
    C(U) - C(V), oriented positive.
    """
    rs = build_root_system(g)
    vi, vj = fundamental_yrep(g, i), fundamental_yrep(g, j)
    if len(vi.parts) != 1 or len(vj.parts) != 1:
        raise Unknown(f"the TPG needs g-irreducible v_{i}, v_{j} of {g.name}")
    prod = tensor_decompose(rs, fundamental(rs, i), fundamental(rs, j), max_weights)
    for w, m in prod.items():
        if m > 1:
            raise MultiplicityFailure(f"({format_weight(w, g)}) occurs {m} times in v_{i} x v_{j}", w)
    ws = sorted(prod, key=lambda w: (-casimir(rs, w), w))
    nodes = [(w, casimir(rs, w)) for w in ws]
    adj = tuple(rs.highest_root)
    edges = []
    for a in range(len(ws)):
        contained = tensor_decompose(rs, adj, ws[a], max_weights)
        for b in range(a + 1, len(ws)):
            if contained.get(ws[b]):
                d = nodes[a][1] - nodes[b][1]
                edges.append((a, b, d) if d > 0 else (b, a, -d))
    return TPGraph(g, nodes, edges)


def tpg_subgraphs(tpg: TPGraph, label) -> List[List[Weight]]:
    """Components after deleting every edge carrying ``label``."""
    label = Fraction(label)
    if label not in tpg.labels():
        raise LabelAbsent(f"no edge with label {label}")
    parent = list(range(len(tpg.nodes)))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x
    for a, b, d in tpg.edges:
        if d != label:
            parent[find(a)] = find(b)
    comps: Dict[int, List[Weight]] = {}
    for k, (w, _) in enumerate(tpg.nodes):
        comps.setdefault(find(k), []).append(w)
    return list(comps.values())
