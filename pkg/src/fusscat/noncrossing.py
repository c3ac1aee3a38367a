"""Noncrossing partition lattices NC(W) and the k-divisible posets NC^(k)(W).

NC(W) is the interval [1, c] in absolute order.  NC^(k)(W) consists of
k-multichains pi_1 <= ... <= pi_k in NC(W); the order compares the delta
sequences ``delta_i = pi_i^{-1} pi_{i+1}`` (with ``pi_{k+1} = c``) in reverse.
Its dual NC_(k)(W) is the poset of delta sequences under the componentwise
order.
"""

from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from itertools import permutations
from math import factorial, prod
from typing import Iterable, Optional, Sequence

from . import analytics
from .config import CapExceeded, caps, check_cap
from .coxeter import CoxeterGroup, Perm, cycle_notation, type_a_permutation
from .posets import FinitePoset, LatticeOps, bits, popcount, verify_el_labelling


class NCError(ValueError):
    pass


class NCLattice:
    """The interval [1, c] of the absolute order, with reflection-labelled covers."""

    def __init__(self, group: CoxeterGroup, c: Perm, elements: list, lower_covers: list,
                 cover_labels: dict):
        self.group = group
        self.c = c
        self.rank = group.absolute_length(c)
        self.elements = elements
        self.index = {w: i for i, w in enumerate(elements)}
        self.lengths = [group.absolute_length(w) for w in elements]
        self.cover_labels = cover_labels
        self.poset = FinitePoset.from_covers(list(range(len(elements))), lower_covers)
        self.poset.set_rank(self.lengths)
        self.bottom = 0
        self.top = self.index[c]
        self._ops: Optional[LatticeOps] = None
        self._words: Optional[list] = None

    def __len__(self) -> int:
        return len(self.elements)

    def __repr__(self) -> str:
        return f"NCLattice({self.group.name}, size={len(self)})"

    def id_of(self, w: Perm) -> int:
        return self.index[w]

    def leq(self, i: int, j: int) -> bool:
        return self.poset.leq(i, j)

    def rank_sizes(self) -> list[int]:
        out = [0] * (self.rank + 1)
        for x in self.lengths:
            out[x] += 1
        return out

    @property
    def ops(self) -> LatticeOps:
        if self._ops is None:
            self._ops = self.poset.lattice_ops()
        return self._ops

    def meet(self, i: int, j: int) -> int:
        return self.ops.meet(i, j)

    def join(self, i: int, j: int) -> int:
        return self.ops.join(i, j)

    def kreweras_id(self, i: int) -> int:
        """K(pi) = pi^{-1} c."""
        g = self.group
        return self.index[g.multiply(g.invert(self.elements[i]), self.c)]

    def kreweras_inverse_id(self, i: int) -> int:
        """K^{-1}(pi) = c pi^{-1}."""
        g = self.group
        return self.index[g.multiply(self.c, g.invert(self.elements[i]))]

    def reflection_word(self, i: int) -> list[int]:
        """Reduced T-word read along a chain from the bottom (reflection indices)."""
        if self._words is None:
            words: list = [None] * len(self)
            words[0] = []
            for j in self.poset.linear_extension():
                if words[j] is None:
                    low = self.poset.lower_covers[j][0]
                    words[j] = words[low] + [self.cover_labels[(low, j)]]
            self._words = words
        return self._words[i]

    def element_name(self, i: int) -> str:
        g = self.group
        if g.family == "A":
            return cycle_notation(type_a_permutation(g, self.elements[i]))
        word = self.reflection_word(i)
        return "1" if not word else "*".join(f"t{j}" for j in word)

    def to_json(self) -> dict:
        return {
            "type": self.group.name,
            "elements": [self.element_name(i) for i in range(len(self))],
            "ranks": self.lengths,
            "covers": [[a, b, self.cover_labels[(a, b)]] for a, b in self.poset.covers()],
        }


def kreweras(nc: NCLattice, mu: Perm, nu: Perm, pi: Perm) -> Perm:
    """Relative Kreweras complement K_mu^nu(pi) = mu pi^{-1} nu."""
    g = nc.group
    if not (g.abs_leq(mu, pi) and g.abs_leq(pi, nu)):
        raise NCError("kreweras requires mu <= pi <= nu")
    return g.product(mu, g.invert(pi), nu)


def build_nc(group: CoxeterGroup, c: Optional[Perm] = None, *, parabolic: bool = False) -> NCLattice:
    """Breadth-first construction of [1, c] in the absolute order.

    With ``parabolic=True`` any element c is accepted; it is then a Coxeter
    element of the parabolic subgroup it generates.
    """
    g = group
    if c is None:
        c = g.coxeter_element("bipartite").c
    n = g.absolute_length(c)
    if not parabolic and n != g.rank:
        raise NCError("c is not a Coxeter element (absolute length differs from the rank)")
    elements = [g.identity]
    index = {g.identity: 0}
    lower: list = [[]]
    labels: dict = {}
    frontier = [0]
    for level in range(n):
        nxt = []
        for wid in frontier:
            w = elements[wid]
            v = g.multiply(g.invert(w), c)
            lv = n - level
            for tj, t in enumerate(g.reflections):
                if g.absolute_length(g.multiply(t, v)) != lv - 1:
                    continue
                u = g.multiply(w, t)
                uid = index.get(u)
                if uid is None:
                    uid = len(elements)
                    index[u] = uid
                    elements.append(u)
                    lower.append([])
                    nxt.append(uid)
                lower[uid].append(wid)
                labels[(wid, uid)] = tj
        frontier = nxt
    nc = NCLattice(g, c, elements, lower, labels)
    if not parabolic:
        expected = analytics.fuss_catalan(g, 1)
        if len(nc) != expected:
            raise NCError(f"|NC(W)| = {len(nc)} but Cat(W) = {expected}")
    return nc


# ----- k-divisible posets ---------------------------------------------------

class KDivisiblePoset:
    """NC^(k)(W): k-multichains of NC(W) ordered through their delta sequences."""

    def __init__(self, nc: NCLattice, k: int, elements: list[tuple[int, ...]]):
        self.nc = nc
        self.k = k
        self.elements = elements
        self.index = {e: i for i, e in enumerate(elements)}
        g = nc.group
        self._quot: dict = {}
        self.deltas = [self._delta(e) for e in elements]
        self.delta_index = {d: i for i, d in enumerate(self.deltas)}
        self.poset = self._build_poset()
        self.poset.set_rank([nc.lengths[e[0]] for e in elements])
        self.rank = nc.rank

    def __len__(self) -> int:
        return len(self.elements)

    def __repr__(self) -> str:
        return f"KDivisiblePoset({self.nc.group.name}, k={self.k}, size={len(self)})"

    def quotient(self, a: int, b: int) -> int:
        """NC id of pi_a^{-1} pi_b for NC ids a <= b."""
        key = (a, b)
        got = self._quot.get(key)
        if got is None:
            g = self.nc.group
            w = g.multiply(g.invert(self.nc.elements[a]), self.nc.elements[b])
            got = self.nc.index.get(w)
            if got is None:
                raise NCError("quotient left NC(W); input is not a multichain")
            self._quot[key] = got
        return got

    def _delta(self, e: tuple[int, ...]) -> tuple[int, ...]:
        seq = list(e) + [self.nc.top]
        return tuple(self.quotient(seq[i], seq[i + 1]) for i in range(self.k))

    def delta0(self, i: int) -> int:
        return self.elements[i][0]

    def _build_poset(self) -> FinitePoset:
        nc = self.nc
        m = len(self.elements)
        buckets = [[0] * len(nc) for _ in range(self.k)]
        for idx, d in enumerate(self.deltas):
            for i, x in enumerate(d):
                buckets[i][x] |= 1 << idx
        ups = []
        for i in range(self.k):
            u = []
            for x in range(len(nc)):
                mask = 0
                for y in bits(nc.poset.up[x]):
                    mask |= buckets[i][y]
                u.append(mask)
            ups.append(u)
        down = []
        for idx, d in enumerate(self.deltas):
            mask = (1 << m) - 1
            for i, x in enumerate(d):
                mask &= ups[i][x]
            down.append(mask)
        return FinitePoset(self.elements, down, check=m <= 1500)

    def leq(self, a: int, b: int) -> bool:
        return self.poset.leq(a, b)

    def rank_of(self, i: int) -> int:
        return self.poset.rank[i]

    def rank_sizes(self) -> list[int]:
        out = [0] * (self.rank + 1)
        for r in self.poset.rank:
            out[r] += 1
        return out

    def top(self) -> int:
        return self.index[tuple([self.nc.top] * self.k)]

    def delta_poset(self) -> FinitePoset:
        """NC_(k)(W): delta sequences, componentwise order (dual of NC^(k))."""
        P = FinitePoset(self.deltas, self.poset.up, check=False)
        P.set_rank([self.rank - r for r in self.poset.rank])
        return P

    def element_name(self, i: int) -> str:
        return "(" + ", ".join(self.nc.element_name(x) for x in self.elements[i]) + ")"

    def to_json(self) -> dict:
        return {
            "type": self.nc.group.name,
            "k": self.k,
            "elements": [[self.nc.element_name(x) for x in e] for e in self.elements],
            "multichain_ids": [list(e) for e in self.elements],
            "ranks": list(self.poset.rank),
            "covers": [[a, b] for a, b in self.poset.covers()],
        }


def enumerate_multichains(nc: NCLattice, k: int, limit: Optional[int] = None) -> list[tuple[int, ...]]:
    """All k-multichains of NC(W), in lexicographic order of ids."""
    out: list = []
    up = nc.poset.up

    def rec(prefix):
        if len(prefix) == k:
            out.append(tuple(prefix))
            if limit is not None and len(out) > limit:
                raise CapExceeded("max_poset", len(out), limit)
            return
        for y in bits(up[prefix[-1]]):
            prefix.append(y)
            rec(prefix)
            prefix.pop()

    for x in range(len(nc)):
        rec([x])
    return out


def build_nck(nc: NCLattice, k: int) -> KDivisiblePoset:
    """NC^(k)(W) for the Coxeter element of ``nc``."""
    if k < 1:
        raise NCError("k must be a positive integer")
    cap = caps().max_poset
    if nc.rank == nc.group.rank and nc.c is not None:
        check_cap("max_poset", analytics.fuss_catalan(nc.group, k))
    return KDivisiblePoset(nc, k, enumerate_multichains(nc, k, cap))


def partial_map(nck: KDivisiblePoset, multichain: Sequence[int]) -> tuple[int, ...]:
    """The delta sequence [delta_0; delta_1, ..., delta_k] of a multichain (NC ids)."""
    e = tuple(multichain)
    if len(e) != nck.k or any(not nck.nc.leq(a, b) for a, b in zip(e, e[1:])):
        raise NCError("input is not a k-multichain")
    return (e[0],) + nck._delta(e)


def integral_map(nck: KDivisiblePoset, delta: Sequence[int]) -> tuple[int, ...]:
    """Inverse of partial_map: (delta_0, delta_0 delta_1, ...)."""
    nc = nck.nc
    g = nc.group
    if len(delta) != nck.k + 1:
        raise NCError("delta sequence has the wrong length")
    perms = [nc.elements[d] for d in delta]
    total = g.product(*perms)
    if total != nc.c or sum(nc.lengths[d] for d in delta) != nc.rank:
        raise NCError("not a delta sequence: product or lengths do not match c")
    out, acc = [], g.identity
    for p in perms[:-1]:
        acc = g.multiply(acc, p)
        out.append(nc.index[acc])
    return tuple(out)


def horizontal_leq(nck: KDivisiblePoset, a: int, b: int) -> bool:
    """Alternative order test: componentwise order plus decreasing right quotients."""
    nc = nck.nc
    g = nc.group
    pa, pb = nck.elements[a], nck.elements[b]
    if not all(nc.leq(x, y) for x, y in zip(pa, pb)):
        return False
    quots = [g.multiply(nc.elements[y], g.invert(nc.elements[x])) for x, y in zip(pa, pb)]
    return all(g.abs_leq(q2, q1) for q1, q2 in zip(quots, quots[1:]))


def covers_from(nck: KDivisiblePoset, i: int) -> list[tuple[int, int, int]]:
    """Upward covers of element i as (element, index, reflection index).

    Each cover is (pi_1 v t', ..., pi_k v t') where t <= pi_idx^{-1} pi_{idx+1}
    and t' = (pi_1^{-1} pi_{idx+1}) t (pi_1^{-1} pi_{idx+1})^{-1}.
    """
    nc = nck.nc
    g = nc.group
    pis = list(nck.elements[i]) + [nc.top]
    out = []
    for idx in range(1, nck.k + 1):
        d = nc.elements[nck.quotient(pis[idx - 1], pis[idx])]
        conj = g.multiply(g.invert(nc.elements[pis[0]]), nc.elements[pis[idx]])
        for tj in g.reflections_below(d):
            t = g.reflections[tj]
            tp = g.product(conj, t, g.invert(conj))
            tid = nc.index[tp]
            new = tuple(nc.join(p, tid) for p in pis[:-1])
            out.append((nck.index[new], idx, g.reflection_index[tp]))
    return out


# ----- automorphisms --------------------------------------------------------

def _bipartite_parts(nck: KDivisiblePoset):
    g = nck.nc.group
    data = g.coxeter_element("bipartite")
    if data.c != nck.nc.c:
        raise NCError("automorphisms L*, R*, C* need the bipartite Coxeter element")
    return data


def automorphism(nck: KDivisiblePoset, which: str, i: int) -> int:
    """Apply L*, R* or C* (acting on delta sequences) to element i."""
    data = _bipartite_parts(nck)
    nc = nck.nc
    g = nc.group
    left, right = data.left, data.right

    def R(x):
        return nc.index[g.product(right, g.invert(nc.elements[x]), right)]

    def L(x):
        return nc.index[g.product(left, g.invert(nc.elements[x]), left)]

    d = nck.deltas[i]
    if which == "Rstar":
        new = tuple(R(x) for x in reversed(d))
    elif which == "Lstar":
        new = (L(d[0]),) + tuple(R(x) for x in reversed(d[1:]))
    elif which == "Cstar":
        new = (nc.index[g.conjugate(nc.elements[d[-1]], nc.c)],) + d[:-1]
    else:
        raise NCError(f"unknown automorphism {which!r}")
    return nck.delta_index[new]


def automorphism_table(nck: KDivisiblePoset, which: str) -> list[int]:
    return [automorphism(nck, which, i) for i in range(len(nck))]


def is_poset_automorphism(P: FinitePoset, perm: Sequence[int]) -> bool:
    if sorted(perm) != list(range(P.size)):
        return False
    return all(P.leq(perm[a], perm[b]) == P.leq(a, b) for a in range(P.size) for b in range(P.size))


# ----- iterated construction --------------------------------------------------

def _multichains_in_poset(P: FinitePoset, length: int) -> list[tuple[int, ...]]:
    out: list = []

    def rec(prefix):
        if len(prefix) == length:
            out.append(tuple(prefix))
            return
        for y in bits(P.up[prefix[-1]]):
            rec(prefix + [y])

    for x in range(P.size):
        rec([x])
    return out


@dataclass
class IterateReport:
    k: int
    l: int
    size: int
    target_size: int
    bijective: bool
    inverse_ok: bool
    order_preserving: bool
    table: dict

    @property
    def ok(self) -> bool:
        return self.bijective and self.inverse_ok and self.order_preserving and self.size == self.target_size


def delta_matrix_map(nck: KDivisiblePoset, columns: Sequence[int], k: int, l: int) -> tuple[int, ...]:
    """The map from an l-multichain of NC^(k) (element ids) to a kl-multichain."""
    nc = nck.nc
    g = nc.group
    mat = [[nc.elements[x] for x in nck.elements[col]] for col in columns]  # mat[j][i]

    def entry(i, j):  # 1-based row i (multichain position), column j
        if i < 1 or j < 1:
            return g.identity
        if i > k or j > l:
            return nc.c
        return mat[j - 1][i - 1]

    out = []
    for i in range(1, k + 1):
        for j in range(1, l + 1):
            w = g.product(entry(i + 1, 1), g.invert(entry(i + 1, j)), entry(i, j))
            out.append(nc.index[w])
    return tuple(out)


def unzip_map(nc: NCLattice, mu: Sequence[int], k: int, l: int) -> list[list]:
    """Inverse of delta_matrix_map: returns the matrix rows[i][j] of group elements."""
    g = nc.group
    mus = [nc.elements[x] for x in mu]
    rows = [[None] * l for _ in range(k)]
    for j in range(l):
        rows[k - 1][j] = mus[(k - 1) * l + j]
    for i in range(k - 2, -1, -1):
        for j in range(l):
            rows[i][j] = g.product(rows[i + 1][j], g.invert(rows[i + 1][0]), mus[i * l + j])
    return rows


def _x_entries(nck: KDivisiblePoset, columns: Sequence[int], k: int, l: int) -> list:
    nc = nck.nc
    g = nc.group
    mat = [[nc.elements[x] for x in nck.elements[col]] for col in columns]

    def entry(i, j):
        if i < 1 or j < 1:
            return g.identity
        if i > k or j > l:
            return nc.c
        return mat[j - 1][i - 1]

    # Only 1 <= i <= k, 1 <= j <= l carry information: these are the delta
    # entries of the column multichain embedded in NC(W^k) by c * delta^{-1}.
    out = []
    for i in range(1, k + 1):
        for j in range(1, l + 1):
            out.append(g.product(g.invert(entry(i, j)), entry(i + 1, j),
                                 g.invert(entry(i + 1, j + 1)), entry(i, j + 1)))
    return out


def iterate_iso(nc: NCLattice, k: int, l: int) -> IterateReport:
    """Verify that l-multichains of NC^(k) correspond to NC^(kl) order-isomorphically."""
    g = nc.group
    P = build_nck(nc, k)
    Q = build_nck(nc, k * l)
    chains = _multichains_in_poset(P.poset, l)
    table = {}
    for ch in chains:
        image = delta_matrix_map(P, ch, k, l)
        table[ch] = Q.index.get(image)
    images = list(table.values())
    bijective = None not in images and len(set(images)) == len(images) == len(Q)
    inverse_ok = True
    chain_set = set(chains)
    for idx, mu in enumerate(Q.elements):
        rows = unzip_map(nc, mu, k, l)
        cols = []
        for j in range(l):
            col = tuple(nc.index.get(rows[i][j]) for i in range(k))
            cols.append(P.index.get(col))
        if None in cols or tuple(cols) not in chain_set or table[tuple(cols)] != idx:
            inverse_ok = False
            break
    order_ok = bijective
    if bijective:
        xs = {ch: _x_entries(P, ch, k, l) for ch in chains}
        for a in chains:
            for b in chains:
                rel = all(g.abs_leq(xb, xa) for xa, xb in zip(xs[a], xs[b]))
                if rel != Q.leq(table[a], table[b]):
                    order_ok = False
                    break
            if not order_ok:
                break
    return IterateReport(k, l, len(chains), len(Q), bijective, inverse_ok, order_ok, table)


# ----- principal order ideals --------------------------------------------------

@dataclass
class OrderIdealReport:
    ideal: list[int]
    target_size: int
    parabolic_type: tuple
    mapping: dict
    bijective: bool
    order_preserving: bool

    @property
    def ok(self) -> bool:
        return self.bijective and self.order_preserving


def order_ideal_iso(nck: KDivisiblePoset, i: int) -> OrderIdealReport:
    """Map the ideal below element i onto NC^(k)(W') for W' with Coxeter element pi_1."""
    nc = nck.nc
    g = nc.group
    pis = [nc.elements[x] for x in nck.elements[i]]
    sub_nc = build_nc(g, pis[0], parabolic=True)
    sub = KDivisiblePoset(sub_nc, nck.k, enumerate_multichains(sub_nc, nck.k))
    ideal = list(bits(nck.poset.down[i]))
    mapping = {}
    for a in ideal:
        mus = [nc.elements[x] for x in nck.elements[a]]
        img = [mus[0]] + [g.product(mus[j], g.invert(pis[j]), pis[0]) for j in range(1, nck.k)]
        ids = tuple(sub_nc.index.get(w) for w in img)
        mapping[a] = sub.index.get(ids)
    images = list(mapping.values())
    bijective = None not in images and len(set(images)) == len(images) == len(sub)
    order_ok = bijective and all(
        nck.leq(a, b) == sub.leq(mapping[a], mapping[b]) for a in ideal for b in ideal)
    return OrderIdealReport(ideal, len(sub), g.parabolic_type(pis[0]), mapping, bijective, order_ok)


# ----- topology -------------------------------------------------------------------

def topology_stats(nck: KDivisiblePoset) -> dict:
    g = nck.nc.group
    n, k = nck.rank, nck.k
    P = nck.poset
    top = nck.top()
    no_top = P.subposet([i for i in range(P.size) if i != top])
    mins = set(P.minimal_elements())
    no_top_no_mins = P.subposet([i for i in range(P.size) if i != top and i not in mins])
    chains = P.maximal_chain_count()
    return {
        "euler_no_top": no_top.reduced_euler_char(),
        "expected_euler_no_top": (-1) ** (n - 1) * analytics.positive_fuss_catalan(g, k - 1),
        "euler_no_top_no_mins": no_top_no_mins.reduced_euler_char(),
        "expected_euler_no_top_no_mins": (-1) ** n * (analytics.positive_fuss_catalan(g, k)
                                                      - analytics.positive_fuss_catalan(g, k - 1)),
        "max_chain_count": chains,
        "expected_max_chain_count": Fraction(factorial(n) * (k * g.coxeter_number) ** n, g.order),
    }


def nc_proper_part_euler(nc: NCLattice) -> int:
    P = nc.poset
    keep = [i for i in range(len(nc)) if i not in (nc.bottom, nc.top)]
    return P.subposet(keep).reduced_euler_char()


# ----- EL labelling -----------------------------------------------------------------

def bipartite_reflection_orders(group: CoxeterGroup) -> list[list[int]]:
    """Candidate total orders on T from prefixes of the alternating word l r l r ..."""
    left, right = group.bipartition()
    N = group.num_positive
    cands = []
    for first, second in ((left, right), (right, left)):
        word: list = []
        while len(word) < N:
            word.extend(first)
            first, second = second, first
        word = word[:N]
        roots, w = [], group.identity
        for s in word:
            roots.append(w[s])
            w = group.multiply(w, group.generators[s])
        if sorted(roots) == list(range(N)):
            cands.append(roots)
            cands.append(list(reversed(roots)))
    return cands


def nc_el_check(nc: NCLattice, order: Sequence[int]) -> bool:
    pos = {t: i for i, t in enumerate(order)}
    labels = {e: pos[t] for e, t in nc.cover_labels.items()}
    return verify_el_labelling(nc.poset, labels)


def find_el_reflection_order(nc: NCLattice) -> list[int]:
    """A total order of T making the reflection labelling of NC(W) an EL-labelling."""
    for cand in bipartite_reflection_orders(nc.group):
        if nc_el_check(nc, cand):
            return cand
    N = nc.group.num_positive
    if N <= 6:
        for cand in permutations(range(N)):
            if nc_el_check(nc, cand):
                return list(cand)
    raise NCError("no EL reflection order found")


def delta_el_poset(nck: KDivisiblePoset, order: Sequence[int]):
    """NC_(k)(W) with a top adjoined, labelled by (index, position of t) keys."""
    nc = nck.nc
    g = nc.group
    N = g.num_positive
    pos = {t: i for i, t in enumerate(order)}
    D = nck.delta_poset().with_top("1hat")
    top = D.size - 1
    labels = {}
    for a, b in D.covers():
        if b == top:
            labels[(a, b)] = (1, N)
            continue
        da, db = nck.deltas[a], nck.deltas[b]
        diff = [i for i in range(nck.k) if da[i] != db[i]]
        if len(diff) != 1:
            raise NCError("cover changes more than one coordinate")
        i = diff[0]
        t = g.multiply(g.invert(nc.elements[da[i]]), nc.elements[db[i]])
        labels[(a, b)] = (i + 1, pos[g.reflection_index[t]])
    return D, labels


def el_check_nck(nck: KDivisiblePoset, order: Optional[Sequence[int]] = None) -> bool:
    order = order if order is not None else find_el_reflection_order(nck.nc)
    D, labels = delta_el_poset(nck, order)
    return verify_el_labelling(D, labels)


# ----- statistics -----------------------------------------------------------------

def interval_product_check(nck: KDivisiblePoset, a: int, b: int) -> tuple[int, int]:
    """(size of [a, b], product of Cat over the parabolic factors of the interval)."""
    nc = nck.nc
    g = nc.group
    size = popcount(nck.poset.up[a] & nck.poset.down[b])
    expected = 1
    for x, y in zip(nck.deltas[b], nck.deltas[a]):
        w = g.multiply(g.invert(nc.elements[x]), nc.elements[y])
        for lab in g.parabolic_type(w):
            expected *= analytics.fuss_catalan(lab, 1)
    return size, expected


def is_log_concave(seq: Sequence[int]) -> bool:
    return all(seq[i] * seq[i] >= seq[i - 1] * seq[i + 1] for i in range(1, len(seq) - 1))


def parabolic_type_distribution(nck: KDivisiblePoset, conjugacy: bool = True) -> Counter:
    """Distribution of the parabolic W_{pi_1} over NC^(k)(W)."""
    nc = nck.nc
    g = nc.group
    cache: dict = {}
    out: Counter = Counter()
    for e in nck.elements:
        x = e[0]
        if x not in cache:
            w = nc.elements[x]
            cache[x] = g.parabolic_conjugacy_key(w) if conjugacy else g.parabolic_type(w)
        out[cache[x]] += 1
    return out


def export_json(obj) -> str:
    return json.dumps(obj.to_json(), sort_keys=True)
