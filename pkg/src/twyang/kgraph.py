"""Branching graphs of Y(g,h)-representations and the spectral form of K.

Nodes are classes of h-irreps occurring in a Y(g)-module v.  Two irreps
W, W' are *linked* when W occurs in K_j (x) W' for a piece K_j of k.  Linked
irreps descending from different g-summands of v are merged (their tau
coincide); linked irreps from the same summand give an edge labelled by the
difference of composite Casimirs, Delta = C(W) - C(W').

Theta is always an exact rational multiple of i*pi.
"""

from __future__ import annotations

import json
from collections import Counter, defaultdict
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Dict, List, Optional, Tuple

from .branching import restrict_sum
from .errors import (
    BadArguments,
    Disconnected,
    FactorsNotIsomorphic,
    InconsistentLabels,
    MultiplicityFailure,
    NotInCatalogue,
    PathInconsistent,
    Pole,
    Unknown,
)
from .pairs import SymmetricPair, adjoint_pieces, composite_casimir, instantiate
from .rootdata import DEFAULT_MAX_WEIGHTS
from .tensor import HIrrep, tensor_decompose_h
from .yangrep import YRep, adjoint_plus_trivial, fundamental_yrep


@dataclass(frozen=True)
class Member:
    irrep: HIrrep
    parent: int
    casimir: Fraction
    dim: int


@dataclass
class Edge:
    src: int
    dst: int
    delta: Fraction
    witnesses: List[Tuple[int, int]] = field(default_factory=list)


@dataclass
class BranchingGraph:
    pair: SymmetricPair
    vrep: YRep
    members: List[Member]
    nodes: List[List[int]]
    edges: List[Edge]
    flags: List[str] = field(default_factory=list)
    fmt: Optional[Callable] = None
    conj: Optional[Callable] = None
    notation: str = "dynkin"

    def format(self, w: HIrrep) -> str:
        return (self.fmt or self.pair.fmt)(w)

    def conjugate(self, w: HIrrep) -> HIrrep:
        return (self.conj or self.pair.h.conjugate)(w)

    @property
    def c_A(self) -> Fraction:
        return self.pair.c_A

    def node_of(self, member: int) -> int:
        for i, ms in enumerate(self.nodes):
            if member in ms:
                return i
        raise KeyError(member)

    def node_casimir(self, i: int) -> Fraction:
        return max(self.members[m].casimir for m in self.nodes[i])

    def node_label(self, i: int) -> str:
        return "⊕".join(self.format(self.members[m].irrep) for m in self.nodes[i])

    def node_irreps(self, i: int) -> List[HIrrep]:
        return [self.members[m].irrep for m in self.nodes[i]]

    def labels(self) -> List[Fraction]:
        return sorted({e.delta for e in self.edges})

    def adjacency(self) -> Dict[int, List[Tuple[int, Fraction]]]:
        """node -> [(neighbour, signed Delta from node to neighbour)]"""
        adj: Dict[int, List[Tuple[int, Fraction]]] = defaultdict(list)
        for e in self.edges:
            adj[e.src].append((e.dst, e.delta))
            adj[e.dst].append((e.src, -e.delta))
        return adj

    def components(self, drop: Optional[Fraction] = None) -> List[List[int]]:
        """Connected components, optionally after deleting edges with |Delta| = drop."""
        parent = list(range(len(self.nodes)))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x
        for e in self.edges:
            if drop is not None and abs(e.delta) == drop:
                continue
            parent[find(e.src)] = find(e.dst)
        comps: Dict[int, List[int]] = {}
        for i in range(len(self.nodes)):
            comps.setdefault(find(i), []).append(i)
        return sorted(comps.values())

    def total_dimension(self) -> int:
        return sum(m.dim for m in self.members)


# -- construction ----------------------------------------------------------------

def _k_pieces(pair: SymmetricPair) -> Tuple[HIrrep, ...]:
    return pair.k_rep


def _linked(pair: SymmetricPair, a: HIrrep, b: HIrrep, cache, max_weights) -> bool:
    """a occurs in K_j (x) b for some piece K_j (checked both ways)."""
    for x, y in ((a, b), (b, a)):
        if y not in cache:
            prods = Counter()
            for kj in _k_pieces(pair):
                prods.update(tensor_decompose_h(pair.h, kj, y, max_weights))
            cache[y] = prods
        if cache[y].get(x):
            return True
    return False


def branching_graph(pair: SymmetricPair, v: YRep, max_weights: int = DEFAULT_MAX_WEIGHTS) -> BranchingGraph:
    """Build the branching graph of ``v`` for ``pair``.

    Raises MultiplicityFailure when an h-irrep occurs more than once inside
    one g-summand, or occurs in two summands neither of which is g-trivial.
    Raises InconsistentLabels when the containment rule yields labels that
    cannot come from a single tau assignment.
    """
    if v.g != pair.g:
        raise BadArguments(f"{v.g.name} representation for a {pair.g.name} pair")
    parts = restrict_sum(pair, v.parts, max_weights)
    members: List[Member] = []
    seen: Dict[HIrrep, List[int]] = defaultdict(list)
    for i, dec in parts:
        for w, m in sorted(dec.items()):
            if m > 1:
                raise MultiplicityFailure(
                    f"{pair.fmt(w)} occurs {m} times in ({v.parts[i]}) restricted to {pair.h.name}", w)
            seen[w].append(i)
            members.append(Member(w, i, composite_casimir(pair, w), pair.h.dimension(w)))
    for w, ps in seen.items():
        nontrivial = [p for p in ps if any(v.parts[p])]
        if len(ps) > 1 and len(nontrivial) > 1:
            raise MultiplicityFailure(
                f"{pair.fmt(w)} occurs in {len(ps)} g-summands of v_{v.index}", w)

    cache: dict = {}
    g = _assemble(pair, v, members,
                  lambda a, b: _linked(pair, a, b, cache, max_weights), pair.fmt)
    if pair.degenerate:
        g.flags.append("degenerate")
    return g


def _assemble(pair, v, members: List[Member], linked, fmt, **extra) -> BranchingGraph:
    """Merge cross-parent links into classes; same-parent links become edges."""
    n = len(members)
    links = [(a, b) for a in range(n) for b in range(a + 1, n)
             if linked(members[a].irrep, members[b].irrep)]
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x
    for a, b in links:
        if members[a].parent != members[b].parent:
            parent[find(a)] = find(b)

    classes: Dict[int, List[int]] = defaultdict(list)
    for m in range(n):
        classes[find(m)].append(m)

    def node_key(ms):
        return (-max(members[m].casimir for m in ms), [members[m].irrep for m in ms])
    nodes = sorted(classes.values(), key=node_key)
    where = {m: i for i, ms in enumerate(nodes) for m in ms}

    raw: Dict[Tuple[int, int], List[Tuple[int, int, Fraction]]] = defaultdict(list)
    for a, b in links:
        if members[a].parent != members[b].parent:
            continue
        d = members[a].casimir - members[b].casimir
        na, nb = where[a], where[b]
        if na == nb:
            if d:
                raise InconsistentLabels(
                    f"{fmt(members[a].irrep)} and {fmt(members[b].irrep)} are forced to share tau "
                    f"but are linked with Delta = {d}")
            continue
        if na > nb:
            na, nb, a, b, d = nb, na, b, a, -d
        raw[(na, nb)].append((a, b, d))

    edges = []
    for (na, nb), ws in sorted(raw.items()):
        ds = {d for _, _, d in ws}
        if len(ds) != 1:
            raise InconsistentLabels(
                f"edge {_label(fmt, nodes, members, na)} -- {_label(fmt, nodes, members, nb)} "
                f"has witnesses with different labels {sorted(ds)}")
        d = ds.pop()
        wit = [(a, b) for a, b, _ in ws]
        if d >= 0:
            edges.append(Edge(na, nb, d, wit))
        else:
            edges.append(Edge(nb, na, -d, [(b, a) for a, b in wit]))
    return BranchingGraph(pair, v, members, nodes, edges, fmt=fmt, **extra)


def _label(fmt, nodes, members, i):
    return "⊕".join(fmt(members[m].irrep) for m in nodes[i])


def graph_for(pair: SymmetricPair, index, max_weights: int = DEFAULT_MAX_WEIGHTS) -> BranchingGraph:
    return branching_graph(pair, fundamental_yrep(pair.g, index), max_weights)


def _exterior_fmt(w: HIrrep) -> str:
    return "(" + ",".join(f"λ{x[0]}" if x[0] else "0" for x in w.labels) + ")"


def orthogonal_graph(pair: SymmetricPair, r: int, max_weights: int = DEFAULT_MAX_WEIGHTS) -> BranchingGraph:
    """BDI graph of Lambda^r V + Lambda^(r-2) V + ... with S(O(M) x O(N-M)) labels.

    A member (p, q) is Lambda^p V_M (x) Lambda^q V_(N-M); it is identified
    with (M-p, N-M-q), the twist by det x det.  Unlike the so-labels, these
    keep Lambda^p V_M and Lambda^(M-p) V_M apart.  K = (1,1) links (a,b)
    and (c,d) when |a-c| = |b-d| = 1 for some representatives.  The
    composite Casimir p(M-p) + q(N-M-q) is checked against the so-level
    restriction of every summand.
    """
    from math import comb

    from .branching import restrict
    from .errors import ValidationFailure
    from .yangrep import exterior_weights, exterior_yrep

    if pair.family != "BDI":
        raise BadArguments("exterior-degree labels apply to so(N)/so(M) x so(N-M) only")
    N, M = pair.params
    L = N - M
    v = exterior_yrep(pair.g, r)

    def canon(p, q):
        # show the representative of lower total degree
        return min((p, q), (M - p, L - q), key=lambda t: (t[0] + t[1], t))

    def cas(p, q):
        return Fraction(p * (M - p) + q * (L - q))

    members: List[Member] = []
    for parent, j in enumerate(range(r, -1, -2)):
        seen = set()
        want: Counter = Counter()
        for p in range(max(0, j - L), min(j, M) + 1):
            key = canon(p, j - p)
            if key in seen:
                raise MultiplicityFailure(f"({p},{j - p}) occurs twice in Lambda^{j}", key)
            seen.add(key)
            d = comb(M, p) * comb(L, j - p)
            members.append(Member(HIrrep(((key[0],), (key[1],)), Fraction(0)), parent, cas(p, j - p), d))
            want[cas(p, j - p)] += d
        got: Counter = Counter()
        for hw in exterior_weights(pair.g, j):
            for w, mult in restrict(pair, hw, max_weights).items():
                got[composite_casimir(pair, w)] += mult * pair.h.dimension(w)
        if got != want:
            raise ValidationFailure(f"Casimir content of Lambda^{j} disagrees with the so-level restriction")
    degrees = list(range(r, -1, -2))
    copies: Dict[HIrrep, List[int]] = defaultdict(list)
    for m in members:
        copies[m.irrep].append(m.parent)
    for w, ps in copies.items():
        if len([p for p in ps if degrees[p]]) > 1:
            raise MultiplicityFailure(f"{_exterior_fmt(w)} occurs in {len(ps)} summands of {v.index}", w)

    def linked(x: HIrrep, y: HIrrep) -> bool:
        (a,), (b,) = x.labels
        (c,), (d,) = y.labels
        return any(abs(a2 - c) == 1 and abs(b2 - d) == 1 for a2, b2 in ((a, b), (M - a, L - b)))

    g = _assemble(pair, v, members, linked, _exterior_fmt,
                  conj=lambda w: w, notation="exterior-degree S(O(M)xO(N-M))")
    if r > (N - 3) // 2:
        g.flags.append("beyond-fundamental-range")
    return g


def _simple_components(pair: SymmetricPair) -> List[str]:
    out = []
    for t, rs in zip(pair.h.factors, pair.h.root_systems):
        out += ["a1"] * 2 if t.name == "d2" else [t.name]
    if pair.h.has_u1:
        out.append("u1")
    return out


def g_plus_c_graph(pair: SymmetricPair, strict: bool = False) -> BranchingGraph:
    """The graph h -> k + C built directly from composite Casimirs.

    For non-isomorphic factors the star graph is still returned, with the
    flag ``factors-not-isomorphic``; ``strict=True`` raises instead.
    """
    h_nodes = adjoint_pieces(pair)
    trivial = pair.h.trivial()
    members, nodes = [], []
    for w in h_nodes:
        members.append(Member(w, 0, composite_casimir(pair, w), pair.h.dimension(w)))
        nodes.append([len(members) - 1])
    centre = []
    for w in pair.k_rep:
        members.append(Member(w, 0, composite_casimir(pair, w), pair.h.dimension(w)))
        centre.append(len(members) - 1)
    members.append(Member(trivial, 1, Fraction(0), 1))
    centre.append(len(members) - 1)
    nodes.append(centre)
    c = len(nodes) - 1
    ck = members[centre[0]].casimir
    edges = []
    for i, w in enumerate(h_nodes):
        d = members[i].casimir - ck
        edges.append(Edge(i, c, d, [(i, centre[0])]) if d >= 0 else Edge(c, i, -d, [(centre[0], i)]))
    g = BranchingGraph(pair, adjoint_plus_trivial(pair.g), members, nodes, edges)
    if len(set(_simple_components(pair))) > 1:
        g.flags.append("factors-not-isomorphic")
        if strict:
            raise FactorsNotIsomorphic(f"{pair.label}: h factors are not isomorphic")
    return g


# -- spectral decomposition -----------------------------------------------------

def bracket_value(delta, c_A, x) -> Fraction:
    """[Delta] at theta = x i pi: (Delta/c_A + x)/(Delta/c_A - x)."""
    a = Fraction(delta) / Fraction(c_A)
    x = Fraction(x)
    if a == x:
        raise Pole(f"[{delta}] has a pole at theta = {x} iπ")
    return (a + x) / (a - x)


class Tau:
    """A formal product of brackets, stored as {Delta > 0: exponent}."""

    __slots__ = ("f",)

    def __init__(self, factors: Optional[Dict[Fraction, int]] = None):
        self.f = {d: e for d, e in (factors or {}).items() if e}

    def times(self, delta: Fraction, power: int = 1) -> "Tau":
        if delta == 0:
            return Tau(self.f)
        if delta < 0:
            delta, power = -delta, -power
        f = dict(self.f)
        f[delta] = f.get(delta, 0) + power
        return Tau(f)

    def __eq__(self, other):
        return isinstance(other, Tau) and self.f == other.f

    def __hash__(self):
        return hash(tuple(sorted(self.f.items())))

    def value(self, c_A, x) -> Fraction:
        out = Fraction(1)
        for d, e in self.f.items():
            out *= bracket_value(d, c_A, x) ** e
        return out

    def __str__(self):
        if not self.f:
            return "1"
        return "".join(f"[{_q(d)}]" + ("" if e == 1 else f"^{e}") for d, e in sorted(self.f.items()))


@dataclass
class SpectralK:
    reference: List[int]
    tau: Dict[int, Tau]
    c_A: Fraction
    warnings: List[str] = field(default_factory=list)

    def value(self, node: int, x) -> Fraction:
        return self.tau[node].value(self.c_A, x)


def spectral_k(graph: BranchingGraph, reference: Optional[int] = None, strict: bool = True) -> SpectralK:
    """tau along a spanning tree from ``reference``; every other edge is checked.

    Default reference: the node holding the member of greatest composite
    Casimir.  A disconnected graph raises Disconnected (strict) or yields a
    per-component result with a warning.
    """
    n = len(graph.nodes)
    adj = graph.adjacency()
    if reference is None:
        reference = max(range(n), key=lambda i: (graph.node_casimir(i), -i)) if n else 0
    if n and not 0 <= reference < n:
        raise BadArguments(f"no node {reference}")
    tau: Dict[int, Tau] = {}
    refs = []
    order = [reference] + [i for i in range(n) if i != reference]
    for root in order:
        if root in tau:
            continue
        refs.append(root)
        tau[root] = Tau()
        stack = [root]
        while stack:
            u = stack.pop()
            for w, d in adj.get(u, []):
                # tau_w / tau_u = [C(u) - C(w)] = [d]
                t = tau[u].times(d)
                if w not in tau:
                    tau[w] = t
                    stack.append(w)
                elif tau[w] != t:
                    raise PathInconsistent(
                        f"tau of {graph.node_label(w)} depends on the path: {tau[w]} vs {t}")
    sk = SpectralK(refs, tau, graph.c_A)
    if len(refs) > 1:
        sk.warnings.append(f"graph has {len(refs)} components; tau fixed per component")
        if strict:
            exc = Disconnected(sk.warnings[-1])
            exc.result = sk
            raise exc
    return sk


# -- truncations -------------------------------------------------------------------

@dataclass
class Truncation:
    delta: Fraction
    theta: Tuple[Fraction, Fraction]
    components: List[List[int]]


def truncations(graph: BranchingGraph) -> List[Truncation]:
    """At theta = -+|Delta|/c_A the edges labelled +-Delta degenerate."""
    out = []
    for d in sorted({abs(e.delta) for e in graph.edges if e.delta}):
        t = d / graph.c_A
        out.append(Truncation(d, (-t, t), graph.components(drop=d)))
    return out


def restricted_reps(graph: BranchingGraph) -> List[Tuple[Optional[Fraction], List[int]]]:
    """Candidate Y(g,h) contents: components of the full graph and of each
    truncation, and each such component united with the component of its
    charge conjugate when that conjugate lies in the same graph."""
    out = []
    options = [(None, graph.components())] + [(t.delta, t.components) for t in truncations(graph)]
    for d, comps in options:
        for comp in comps:
            out.append((d, sorted(comp)))
            irreps = {w for i in comp for w in graph.node_irreps(i)}
            conj = {graph.conjugate(w) for w in irreps}
            nodes = set(comp)
            if not conj <= irreps:
                for other in comps:
                    if any(w in conj for i in other for w in graph.node_irreps(i)):
                        nodes |= set(other)
            if nodes != set(comp):
                out.append((d, sorted(nodes)))
    return out


# -- w tables --------------------------------------------------------------------------

def _lam(rank: int, *idx: int) -> Tuple[int, ...]:
    w = [0] * rank
    for i in idx:
        if 1 <= i <= rank:
            w[i - 1] += 1
    return tuple(w)


@dataclass
class WEntry:
    name: str
    members: List[Tuple[Tuple[int, ...], ...]]  # per-factor labels, charge ignored
    vreps: List[object]  # where to look for it
    note: str = ""


def w_table(pair: SymmetricPair) -> List[WEntry]:
    """The restricted representations listed for this pair's family."""
    fam, p = pair.family, pair.params
    h = pair.h
    r_ = h.ranks
    out: List[WEntry] = []
    if fam == "AIII":
        N, M = p
        if h.has_u1 and len(r_) == 2:
            for r in range(1, M):
                out.append(WEntry(f"w_{r}", [(_lam(r_[0], r), _lam(r_[1]))], [r, N - r]))
            for r in range(1, N - M):
                out.append(WEntry(f"w'_{r}", [(_lam(r_[0]), _lam(r_[1], r))], [r, N - r]))
    elif fam == "AI":
        (N,) = p
        if N < 5:
            raise Unknown("no w listing for so(N), N < 5")
        n = r_[0]
        for r in range(1, (N - 3) // 2 + 1):
            out.append(WEntry(f"w_{r}", [(_lam(n, r),)], [r]))
        if N % 2 == 0:
            out.append(WEntry(f"w_{(N - 2) // 2}", [(_lam(n, n - 1, n),)], [(N - 2) // 2]))
            out.append(WEntry(f"w_{N // 2}", [(_lam(n, n - 1, n - 1),), (_lam(n, n, n),)], [N // 2]))
        else:
            out.append(WEntry(f"w_{(N - 1) // 2}", [(_lam(n, n, n),)], [(N - 1) // 2]))
    elif fam == "AII":
        (N,) = p
        n = r_[0]
        for r in range(1, n + 1):
            out.append(WEntry(f"w_{r}", [(_lam(n, j),) for j in range(r, -1, -2)], [r]))
    elif fam == "BDI":
        # exterior degrees, matched against orthogonal_graph
        N, M = p
        for r in range(1, (M - 3) // 2 + 1):
            out.append(WEntry(f"w_{r}", [((r,), (0,))], [r], "S(O x O) labels"))
        for r in range(1, (N - M - 3) // 2 + 1):
            out.append(WEntry(f"w'_{r}", [((0,), (r,))], [r], "S(O x O) labels"))
    elif fam == "DIII":
        (N,) = p
        n = N // 2
        k = n - 1  # su(n) rank
        spin = [n - 1, n]
        if n % 2:
            m = (n - 1) // 2
            for q in range(0, m + 1):
                out.append(WEntry(f"w_{2 * q}" if q else "w_0", [(_lam(k, 2 * r),) for r in range(q + 1)], spin))
                if 2 * q + 1 <= n - 1:
                    out.append(WEntry(f"w_{2 * q + 1}", [(_lam(k, 2 * r + 1),) for r in range(q + 1)], spin))
        else:
            m = n // 2
            for q in range(0, (m - 1) // 2 + 1):
                mem = []
                for r in range(q + 1):
                    mem += [(_lam(k, 2 * r),), (_lam(k, n - 2 * r),)]
                out.append(WEntry(f"w_{2 * q}", mem, spin))
            for q in range(0, (m - 2) // 2 + 1):
                mem = []
                for r in range(q + 1):
                    mem += [(_lam(k, 2 * r + 1),), (_lam(k, n - 2 * r - 1),)]
                out.append(WEntry(f"w_{2 * q + 1}", mem, spin))
            prev = next((e for e in out if e.name == f"w_{m - 2}"), None)
            if prev is not None:
                out.append(WEntry(f"w_{m}", [(_lam(k, m),)] + prev.members, spin))
        out = [e for e in out if e.name != "w_0"]
    elif fam == "CII":
        n, m = p
        for r in range(1, m + 1):
            out.append(WEntry(f"w_{r}", [(_lam(r_[0], r), _lam(r_[1]))], [r], "(λr,1) read as (λr,0)"))
        for r in range(1, n - m + 1):
            out.append(WEntry(f"w'_{r}", [(_lam(r_[0]), _lam(r_[1], r))], [r], "(1,λr) read as (0,λr)"))
    elif fam == "CI":
        (n,) = p
        k = r_[0]
        for r in range(1, n // 2 + 1):
            out.append(WEntry(f"w_{r}", [(_lam(k, r),), (_lam(k, n - r),)], [r, n - r]))
    else:
        out = _EXC_W.get(fam)
        if out is None:
            raise Unknown(f"no w listing for {fam}")
        out = [WEntry(name, [tuple(_lam(rk, *ix) for rk, ix in zip(r_, mem)) for mem in mems], vs)
               for name, mems, vs in out]
    return out


# members as per-factor index tuples (empty tuple = trivial)
_EXC_W = {
    "EI": [("w_2", [((2,),)], [1, 6]), ("w_4", [((4,),), ((),)], [2])],
    "EIII": [("w_1", [((1,),)], [1, 6]), ("w_2", [((2,),)], [2]),
             ("w_4", [((4,),), ((),)], [1, 6]), ("w_5", [((5,),), ((),)], [1, 6])],
    "EIV": [("w_1", [((1,),)], [2]), ("w_4", [((4,),)], [1])],
    "EV": [("w_4", [((4,),), ((),)], [1])],
    "EVII": [("w_2", [((2,),)], [1])],
    "EVIII": [("w_2", [((2,),)], [8])],
    "EIX": [("w_1", [((1,), ())], [8])],
    "FII": [("w_1", [((1,),)], [4]), ("w_2", [((2,),)], [1]), ("w_4", [((4,),), ((),)], [4, 1])],
}


def w_check(pair: SymmetricPair, max_weights: int = DEFAULT_MAX_WEIGHTS) -> List[Tuple[WEntry, bool, str]]:
    """Is every listed w reproduced by some restricted component?"""
    results = []
    graphs: Dict[object, object] = {}
    for entry in w_table(pair):
        want = Counter(entry.members)
        ok, where = False, ""
        for vi in entry.vreps:
            if vi not in graphs:
                try:
                    if pair.family == "BDI":
                        graphs[vi] = orthogonal_graph(pair, vi, max_weights)
                    else:
                        graphs[vi] = graph_for(pair, vi, max_weights)
                except Exception as exc:  # recorded, not fatal for other entries
                    graphs[vi] = exc
            g = graphs[vi]
            if isinstance(g, Exception):
                where = f"v_{vi}: {type(g).__name__}"
                continue
            for d, comp in restricted_reps(g):
                got = Counter(w.labels for i in comp for w in g.node_irreps(i))
                if got == want:
                    ok, where = True, f"v_{vi}" + (f" at |Δ|={_q(d)}" if d is not None else "")
                    break
            if ok:
                break
        results.append((entry, ok, where))
    return results


# -- magic square ------------------------------------------------------------------------

_MAGIC_CELLS = {
    2: {1: ("AI", (3,)), 2: None, 4: ("AII", (6,)), 8: ("EIV", ())},
    3: {1: ("CI", (3,)), 2: ("AIII", (6, 3)), 4: ("DIII", (12,)), 8: ("EVII", ())},
    4: {Fraction(-2, 3): ("G", ()), 0: ("BDI", (8, 4)), 1: ("FI", ()), 2: ("EII", ()),
        4: ("EVI", ()), 8: ("EIX", ())},
}
# vreps giving the (U,0) -> (V,1) graph in row 4
_ROW4_UV = {"G": 1, "BDI": 1, "FI": 4, "EII": 1, "EVI": 7}


@dataclass
class MagicCell:
    row: int
    m: Fraction
    pair: Optional[str]
    k_dim: Optional[int]
    k_dim_formula: Fraction
    computed: Dict[str, Optional[Fraction]]
    formula: Dict[str, Fraction]
    verdict: Dict[str, str]
    note: str = ""


def _verdict(c: Optional[Fraction], f: Fraction) -> str:
    if c is None:
        return "n/a"
    if c == f:
        return "exact"
    if c == -f:
        return "flip"
    if c and f:
        return f"scale {_q(f / c)}"
    return "mismatch"


def _sym_tensor_rep(g):
    """Ad hoc module (2 lambda_1) + 0 ... only used for su(3), where the Jordan
    algebra of the row-2 cell is Sym^2."""
    return YRep(g, "2λ1", ((2,) + (0,) * (g.rank - 1),), "DERIVED", "Sym^2 of the vector module")


def magic_square(row: int, m) -> MagicCell:
    m = Fraction(m)
    cells = _MAGIC_CELLS.get(row)
    if cells is None:
        raise BadArguments(f"magic-square row {row} is not one of 2, 3, 4")
    if m not in cells:
        raise BadArguments(f"no magic-square cell (row {row}, m={_q(m)})")
    spec = cells[m]
    kdf = {2: 3 * m + 2, 3: 2 * (3 * m + 3), 4: 2 * (6 * m + 8)}[row]
    if spec is None:
        raise NotInCatalogue(f"row {row}, m={_q(m)}: a2 x a2 / a2 is not a catalogued symmetric pair")
    pair = instantiate(*spec)
    computed: Dict[str, Optional[Fraction]] = {}
    formula: Dict[str, Fraction] = {}
    note = ""
    if row == 2:
        formula = {"h->k+C": 2 * m - 4, "k->C": 3 * m}
        gc = g_plus_c_graph(pair)
        computed["h->k+C"] = _signed(gc, 0, len(gc.nodes) - 1)
        # k -> C: the Jordan-algebra module (27 of e6, Lambda^2 of su6, Sym^2 of su3)
        if pair.family == "EIV":
            v = fundamental_yrep(pair.g, 1)
        elif pair.family == "AII":
            v = fundamental_yrep(pair.g, 2)
        else:
            v = _sym_tensor_rep(pair.g)
            note = "k->C read from Sym^2 of su(3), which is not a fundamental Y(su3)-module"
        g = branching_graph(pair, v)
        computed["k->C"] = _edge_between(g, pair.k_rep, [pair.h.trivial()])
    elif row == 3:
        formula = {"h->k+C": m - 2, "k+C->C": 2 * m + 2}
        g = branching_graph(pair, adjoint_plus_trivial(pair.g))
        hs = adjoint_pieces(pair)[:-1]
        vals = {_edge_between(g, [w], pair.k_rep) for w in hs}
        computed["h->k+C"] = vals.pop() if len(vals) == 1 else None
        computed["k+C->C"] = _edge_between(g, pair.k_rep, [pair.h.trivial()], target_parent=0)
    else:
        formula = {"(h,0)->(k,1)+C": m - 2, "(k,1)+C->(0,2)": 3 * m + 2}
        g = branching_graph(pair, adjoint_plus_trivial(pair.g))
        pieces = adjoint_pieces(pair)
        a1 = pieces[-1]
        hs = pieces[:-1]
        vals = {_edge_between(g, [w], pair.k_rep) for w in hs}
        computed["(h,0)->(k,1)+C"] = vals.pop() if len(vals) == 1 else None
        computed["(k,1)+C->(0,2)"] = _edge_between(g, pair.k_rep, [a1])
        if pair.family in _ROW4_UV:
            formula["(U,0)->(V,1)"] = m
            gu = graph_for(pair, _ROW4_UV[pair.family])
            # U node: trivial on the a1 factor (last simple summand, so the
            # second a1 of a d2); V node: a1 doublet
            a1_label = lambda i: {gu.members[x].irrep.labels[-1][-1] for x in gu.nodes[i]}
            us = [i for i in range(len(gu.nodes)) if 0 in a1_label(i)]
            vs = [i for i in range(len(gu.nodes)) if 1 in a1_label(i)]
            ds = {_signed(gu, u, v) for u in us for v in vs if u != v} - {None}
            computed["(U,0)->(V,1)"] = ds.pop() if len(ds) == 1 else None
        if pair.family == "BDI":
            note = "d4 cell: so(4) x so(4) has split adjoints; all four h-adjoint nodes tested"
    verdict = {k: _verdict(computed.get(k), f) for k, f in formula.items()}
    return MagicCell(row, m, pair.label, pair.dim_k, kdf, computed, formula, verdict, note)


def _signed(g: BranchingGraph, a: int, b: int) -> Optional[Fraction]:
    """C(a) - C(b) across the edge a--b, oriented as given."""
    for e in g.edges:
        if (e.src, e.dst) == (a, b):
            return e.delta
        if (e.src, e.dst) == (b, a):
            return -e.delta
    return None


def _edge_between(g: BranchingGraph, src_irreps, dst_irreps, target_parent=None) -> Optional[Fraction]:
    """Signed label of the edge from the node holding src to the node holding dst."""
    def find(ws, parent=None):
        for i in range(len(g.nodes)):
            for mi in g.nodes[i]:
                mem = g.members[mi]
                if mem.irrep in ws and (parent is None or mem.parent == parent):
                    return i
        return None
    a = find(list(src_irreps))
    b = find(list(dst_irreps), target_parent)
    if a is None or b is None:
        return None
    if a == b:
        # trivial member may share the k class; look for a trivial node elsewhere
        for i in range(len(g.nodes)):
            if i != a and any(g.members[mi].irrep in dst_irreps for mi in g.nodes[i]):
                b = i
                break
    return _signed(g, a, b)


MAGIC_GRID = [(r, m) for r in (2, 3, 4) for m in sorted(_MAGIC_CELLS[r])]


# -- rendering ---------------------------------------------------------------------

def _q(x) -> str:
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def _chain_order(g: BranchingGraph) -> Optional[List[int]]:
    n = len(g.nodes)
    if n == 0:
        return []
    adj = g.adjacency()
    if len(g.edges) != n - 1 or any(len(adj.get(i, [])) > 2 for i in range(n)):
        return None
    ends = [i for i in range(n) if len(adj.get(i, [])) <= 1]
    start = max(ends, key=lambda i: (g.node_casimir(i), -i))
    order, prev = [start], None
    while len(order) < n:
        nxt = [w for w, _ in adj[order[-1]] if w != prev]
        if not nxt:
            return None
        prev = order[-1]
        order.append(nxt[0])
    return order


def render_text(g: BranchingGraph, ascii_only: bool = False) -> str:
    order = _chain_order(g)
    lab = lambda i: _plain(g.node_label(i), ascii_only)
    if order is not None:
        out = lab(order[0])
        for a, b in zip(order, order[1:]):
            e = next(e for e in g.edges if {e.src, e.dst} == {a, b})
            d = _q(e.delta)
            out += f" -{d}-> " if e.src == a else f" <-{d}- "
            out += lab(b)
        return out
    lines = [f"[{i}] {lab(i)}" for i in range(len(g.nodes))]
    lines += [f"[{e.src}] -{_q(e.delta)}-> [{e.dst}]" for e in g.edges]
    return "\n".join(lines)


def _plain(s: str, ascii_only: bool) -> str:
    return s.replace("λ", "L").replace("⊕", "+") if ascii_only else s


def render_dot(g: BranchingGraph) -> str:
    lines = [f'digraph "{g.pair.label} v_{g.vrep.index}" {{', "  rankdir=LR;"]
    for i, ms in enumerate(g.nodes):
        body = "\\n".join(f"{g.format(g.members[m].irrep)} [{g.members[m].dim}]" for m in ms)
        lines.append(f'  n{i} [shape=box, label="{body}"];')
    for e in g.edges:
        lines.append(f'  n{e.src} -> n{e.dst} [label="{_q(e.delta)}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def _qp(x) -> List[int]:
    x = Fraction(x)
    return [x.numerator, x.denominator]


def graph_document(g: BranchingGraph) -> dict:
    return {
        "pair": g.pair.label,
        "family": g.pair.family,
        "vrep": {"index": g.vrep.index, "parts": [list(p) for p in g.vrep.parts]},
        "c_A": _qp(g.c_A),
        "nodes": [
            {"id": i, "members": [
                {"factor_labels": [list(l) for l in g.members[m].irrep.labels],
                 "charge": _qp(g.members[m].irrep.charge),
                 "parent": g.members[m].parent,
                 "dim": g.members[m].dim,
                 "casimir": _qp(g.members[m].casimir)} for m in ms]}
            for i, ms in enumerate(g.nodes)],
        "edges": [{"src": e.src, "dst": e.dst, "delta_num": e.delta.numerator,
                   "delta_den": e.delta.denominator} for e in g.edges],
        "truncations": [{"delta": _qp(t.delta), "theta": [_qp(t.theta[0]), _qp(t.theta[1])],
                         "components": t.components} for t in truncations(g)],
        "notation": g.notation,
        "flags": list(g.flags),
    }


def render_json(g: BranchingGraph) -> str:
    return dump_json(graph_document(g))


def dump_json(doc) -> str:
    return json.dumps(doc, indent=2, ensure_ascii=False) + "\n"
