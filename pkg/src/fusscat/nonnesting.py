"""Root posets, nonnesting partitions and chambers of extended Shi arrangements.

A point x of the reflection representation is encoded by y_j = (x, alpha_j),
so that (x, alpha) is the dot product of y with the simple-root coordinates of
alpha. All chamber geometry is decided by exact rational linear programs.
"""

from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Sequence

from .config import check_cap
from .coxeter import CoxeterGroup, build_group
from .lp import bounded_around, interior_point, redundancy_flags
from .posets import FinitePoset, bits, popcount


class NNError(ValueError):
    pass


def _group(G) -> CoxeterGroup:
    return build_group(G) if isinstance(G, str) else G


# ----- root poset -----------------------------------------------------------
@dataclass
class RootPoset:
    group: CoxeterGroup
    coords: list  # integer simple-basis coordinates, indexed like group roots
    poset: FinitePoset
    heights: list

    @property
    def size(self) -> int:
        return len(self.coords)

    @property
    def rank(self) -> int:
        return self.group.rank

    def simple(self) -> list[int]:
        return list(range(self.rank))

    def name(self, j: int) -> str:
        c = self.coords[j]
        if all(x in (0, 1) for x in c):
            return "a" + "".join(str(i + 1) for i, x in enumerate(c) if x)
        return "a(" + ",".join(map(str, c)) + ")"

    def sum_index(self, a: int, b: int) -> Optional[int]:
        """Index of alpha_a + alpha_b if that is a positive root."""
        return self._sums.get((a, b))

    def __post_init__(self):
        where = {c: j for j, c in enumerate(self.coords)}
        self._sums = {}
        for a, ca in enumerate(self.coords):
            for b, cb in enumerate(self.coords):
                s = tuple(x + y for x, y in zip(ca, cb))
                if s in where:
                    self._sums[(a, b)] = where[s]

    def up_closure(self, mask: int) -> int:
        out = 0
        for j in bits(mask):
            out |= self.poset.up[j]
        return out

    def is_filter(self, mask: int) -> bool:
        return self.up_closure(mask) == mask

    def minimal(self, mask: int) -> int:
        """Minimal elements of a subset, as a bitset."""
        out = 0
        for j in bits(mask):
            if popcount(self.poset.down[j] & mask) == 1:
                out |= 1 << j
        return out

    def rank_counts(self) -> list[int]:
        top = max(self.heights)
        return [self.heights.count(h) for h in range(1, top + 1)]

    def to_json(self) -> dict:
        return {"type": self.group.name,
                "roots": [list(c) for c in self.coords],
                "covers": [[a, b] for a, b in self.poset.covers()]}


def build_root_poset(G) -> RootPoset:
    g = _group(G)
    if not g.crystallographic:
        raise NNError(f"{g.name} is not crystallographic; it has no root poset")
    check_cap("max_root_poset", g.num_positive)
    coords = []
    for r in g.positive_roots:
        if any(Fraction(x).denominator != 1 for x in r):
            raise NNError("root coordinates are not integral")
        coords.append(tuple(int(x) for x in r))

    def leq(a, b):
        return all(x <= y for x, y in zip(a, b))

    P = FinitePoset.from_leq(coords, leq)
    heights = [sum(c) for c in coords]
    return RootPoset(g, coords, P, heights)


# ----- antichains and filters ------------------------------------------------
def _antichains_of(P: FinitePoset) -> list[int]:
    comp = [P.down[j] | P.up[j] for j in range(P.size)]
    out = []

    def rec(start, forbid, cur):
        out.append(cur)
        for e in range(start, P.size):
            if not forbid >> e & 1:
                rec(e + 1, forbid | comp[e], cur | (1 << e))

    rec(0, 0, 0)
    return out


def antichains(RP: RootPoset) -> list[int]:
    """All antichains of the root poset as bitsets."""
    return _antichains_of(RP.poset)


def filters(RP: RootPoset) -> list[int]:
    """Order filters, in the same order as :func:`antichains`."""
    return [RP.up_closure(a) for a in antichains(RP)]


def filter_poset(RP: RootPoset) -> FinitePoset:
    """Filters ordered by inclusion."""
    fs = sorted(filters(RP), key=lambda m: (popcount(m), m))
    return FinitePoset.from_leq(fs, lambda a, b: a & b == a)


def is_distributive_filter_lattice(RP: RootPoset) -> bool:
    """Meet and join in the filter order are intersection and union."""
    F = filter_poset(RP)
    ops = F.lattice_ops()
    for a in range(F.size):
        for b in range(F.size):
            if F.labels[ops.meet(a, b)] != F.labels[a] & F.labels[b]:
                return False
            if F.labels[ops.join(a, b)] != F.labels[a] | F.labels[b]:
                return False
    return True


def antichain_size_distribution(RP: RootPoset) -> list[int]:
    out = [0] * (RP.rank + 1)
    for a in antichains(RP):
        out[popcount(a)] += 1
    return out


def isotropy_key(RP: RootPoset, antichain: int) -> tuple:
    """Conjugacy label of the parabolic fixing the subspace cut out by an antichain."""
    g = RP.group
    return g.subsystem_orbit_key(reflection_closure(g, list(bits(antichain))))


def reflection_closure(g: CoxeterGroup, roots: Sequence[int]) -> list[int]:
    """Positive roots of the reflection subgroup generated by the given roots."""
    N = g.num_positive
    cur = set(roots)
    frontier = list(cur)
    while frontier:
        new = []
        for a in frontier:
            for b in list(cur):
                for x, t in ((a, g.reflections[b]), (b, g.reflections[a])):
                    img = t[x]
                    img = img if img < N else img - N
                    if img not in cur:
                        cur.add(img)
                        new.append(img)
        frontier = new
    return sorted(cur)


def _rank_of(rows: Sequence[Sequence[int]]) -> int:
    M = [[Fraction(x) for x in r] for r in rows]
    rank, col = 0, 0
    ncols = len(M[0]) if M else 0
    while rank < len(M) and col < ncols:
        piv = next((i for i in range(rank, len(M)) if M[i][col] != 0), None)
        if piv is None:
            col += 1
            continue
        M[rank], M[piv] = M[piv], M[rank]
        for i in range(rank + 1, len(M)):
            f = M[i][col] / M[rank][col]
            M[i] = [a - f * b for a, b in zip(M[i], M[rank])]
        rank += 1
        col += 1
    return rank


def antichain_subspace_map(RP: RootPoset) -> dict:
    """The map A -> intersection of the hyperplanes alpha-perp for alpha in A.

    The subspace is recorded by the positive roots in the span of A, which
    determine it. Reports injectivity and whether every antichain is linearly
    independent, so that |A| is the codimension of its image.
    """
    acs = antichains(RP)
    images = []
    for a in acs:
        rows = [RP.coords[j] for j in bits(a)]
        r = _rank_of(rows)
        images.append(frozenset(j for j in range(RP.size) if _rank_of(rows + [RP.coords[j]]) == r))
    independent = all(_rank_of([RP.coords[j] for j in bits(a)]) == popcount(a) for a in acs)
    return {"injective": len(set(images)) == len(images), "independent": independent}


# ----- geometric multichains -------------------------------------------------
@dataclass(frozen=True)
class FilterChain:
    """Nested filters; ``filters[i - 1]`` is V_i, so V_k is the last entry."""

    filters: tuple

    @property
    def k(self) -> int:
        return len(self.filters)

    def V(self, i: int, full: int) -> int:
        if i <= 0:
            return full
        return self.filters[min(i, self.k) - 1]

    def levels(self, N: int) -> tuple[int, ...]:
        """For each root the largest i with alpha in V_i."""
        return tuple(sum(1 for f in self.filters if f >> j & 1) for j in range(N))

    def to_json(self) -> dict:
        return {"V": [sorted(bits(f)) for f in self.filters]}


def is_geometric(RP: RootPoset, chain: FilterChain) -> bool:
    k, N = chain.k, RP.size
    full = (1 << N) - 1
    for i in range(1, k + 1):
        for j in range(i, k + 1):
            Vi, Vj, Vij = chain.V(i, full), chain.V(j, full), chain.V(i + j, full)
            for a in bits(Vi):
                for b in bits(Vj):
                    s = RP.sum_index(a, b)
                    if s is not None and not Vij >> s & 1:
                        return False
            if i + j <= k:
                Li, Lj, Lij = full & ~Vi, full & ~Vj, full & ~chain.V(i + j, full)
                for a in bits(Li):
                    for b in bits(Lj):
                        s = RP.sum_index(a, b)
                        if s is not None and not Lij >> s & 1:
                            return False
    return True


def filter_multichains(RP: RootPoset, k: int) -> list[FilterChain]:
    F = filter_poset(RP)
    out = []
    for tup in F.iter_multichains(k):
        # tup ascends in the filter order: V_k, ..., V_1
        out.append(FilterChain(tuple(F.labels[t] for t in reversed(tup))))
    return out


def geometric_multichains(RP: RootPoset, k: int, *, max_roots: int = 24, max_k: int = 3) -> list[FilterChain]:
    if RP.size > max_roots or k > max_k:
        raise NNError(f"geometric multichains limited to N <= {max_roots}, k <= {max_k}")
    if k < 1:
        raise NNError("k must be positive")
    return [ch for ch in filter_multichains(RP, k) if is_geometric(RP, ch)]


# ----- Shi chambers ----------------------------------------------------------
@dataclass
class Wall:
    root: int
    level: int
    floor: bool


@dataclass
class ShiChamber:
    """A chamber given by slab levels: m means m < (x, alpha) < m + 1.

    Level -k means (x, alpha) < -k + 1 and level k means (x, alpha) > k.
    """

    k: int
    levels: tuple
    point: tuple
    walls: list = field(default_factory=list)
    bounded: bool = False

    def positive(self) -> bool:
        return all(m >= 0 for m in self.levels)

    def floors(self, i: int) -> frozenset:
        return frozenset(w.root for w in self.walls if w.floor and w.level == i)

    def ceilings(self, i: int) -> frozenset:
        return frozenset(w.root for w in self.walls if not w.floor and w.level == i)

    def filter_chain(self) -> FilterChain:
        fs = []
        for i in range(1, self.k + 1):
            fs.append(sum(1 << j for j, m in enumerate(self.levels) if m >= i))
        return FilterChain(tuple(fs))

    def to_json(self) -> dict:
        return {"levels": list(self.levels),
                "point": [str(x) for x in self.point],
                "walls": [[w.root, w.level] for w in self.walls],
                "floors": [[w.root, w.level] for w in self.walls if w.floor],
                "ceilings": [[w.root, w.level] for w in self.walls if not w.floor],
                "bounded": self.bounded}


def _constraints(coords, k, levels):
    """Rows (a, b, root, level, lower) meaning a.y < b for each bounding hyperplane."""
    rows = []
    for j, m in enumerate(levels):
        c = coords[j]
        if m > -k:
            rows.append(([-x for x in c], -m, j, m, True))
        if m < k:
            rows.append((list(c), m + 1, j, m + 1, False))
    return rows


def _feasible(rows):
    return interior_point([r[0] for r in rows], [r[1] for r in rows])


def _chamber(coords, k, levels, with_geometry=True) -> Optional[ShiChamber]:
    rows = _constraints(coords, k, levels)
    pt = _feasible(rows)
    if pt is None:
        return None
    ch = ShiChamber(k, tuple(levels), tuple(pt))
    if not with_geometry:
        return ch
    A, b = [r[0] for r in rows], [r[1] for r in rows]
    for (a, _, root, level, lower), wall in zip(rows, redundancy_flags(A, b, pt)):
        if wall:
            # the origin lies on the far side (or on the wall) iff this is a floor
            floor = level >= 0 if lower else level <= 0
            ch.walls.append(Wall(root, level, floor))
    ch.bounded = bounded_around(A, b, pt)
    return ch


def _check_rank(g: CoxeterGroup, limit: Optional[int] = None) -> None:
    if not g.crystallographic:
        raise NNError("Shi arrangements are built for crystallographic types only")
    check_cap("max_chamber_rank", g.rank)
    if limit is not None and g.rank > limit:
        raise NNError(f"rank {g.rank} exceeds {limit}")


def shi_chambers(G, k: int, *, seed: str = "filters") -> list[ShiChamber]:
    """Positive chambers of the k-extended Shi arrangement.

    Candidate slab vectors come from k-multichains of filters (every positive
    chamber arises this way); each candidate is verified by exact feasibility.
    ``seed="geometric"`` restricts the candidates to geometric multichains.
    """
    g = _group(G)
    _check_rank(g)
    RP = build_root_poset(g)
    chains = geometric_multichains(RP, k, max_roots=10 ** 6, max_k=10 ** 6) if seed == "geometric" \
        else filter_multichains(RP, k)
    out = []
    for ch in chains:
        c = _chamber(RP.coords, k, ch.levels(RP.size))
        if c is not None:
            out.append(c)
    return out


def arrangement_chambers(G, k: int, *, positive_only: bool = False,
                         with_geometry: bool = True) -> list[ShiChamber]:
    """All chambers (or positive ones) by incremental exact search over roots."""
    g = _group(G)
    _check_rank(g)
    RP = build_root_poset(g)
    lo = 0 if positive_only else -k
    partial = [()]
    for j in range(RP.size):
        coords = RP.coords[: j + 1]
        nxt = []
        for p in partial:
            for m in range(lo, k + 1):
                if _feasible(_constraints(coords, k, p + (m,))) is not None:
                    nxt.append(p + (m,))
        partial = nxt
    return [_chamber(RP.coords, k, p, with_geometry) for p in partial]


def shi_summary(G, k: int) -> dict:
    ch = shi_chambers(G, k)
    return {"type": _group(G).name, "k": k, "chambers": len(ch),
            "bounded": sum(1 for c in ch if c.bounded)}


# ----- floors and ceilings --------------------------------------------------
def floors_ceilings(chamber: ShiChamber) -> dict:
    return {i: {"floors": sorted(chamber.floors(i)), "ceilings": sorted(chamber.ceilings(i))}
            for i in range(1, chamber.k + 1)}


@dataclass
class FloorReport:
    k: int
    floor_vectors: dict
    ceiling_vectors: dict
    narayana: list
    nc_nar_observed: bool
    floors_equal_ceilings: bool
    fl_k_antichains: bool

    def to_json(self) -> dict:
        return {"k": self.k,
                "floor_vectors": {str(i): v for i, v in self.floor_vectors.items()},
                "ceiling_vectors": {str(i): v for i, v in self.ceiling_vectors.items()},
                "narayana": self.narayana,
                "conjecture_floor_narayana": "PASS" if self.nc_nar_observed else "FAIL",
                "conjecture_floors_ceilings": "PASS" if self.floors_equal_ceilings else "FAIL",
                "fl_k_antichain": self.fl_k_antichains}


def floor_ceiling_vectors(chambers: Sequence[ShiChamber], n: int, k: int) -> tuple[dict, dict]:
    fl = {i: [0] * (n + 1) for i in range(1, k + 1)}
    cl = {i: [0] * (n + 1) for i in range(1, k + 1)}
    for c in chambers:
        for i in range(1, k + 1):
            f, e = len(c.floors(i)), len(c.ceilings(i))
            if f > n or e > n:
                raise NNError("more than n floors or ceilings of one color")
            fl[i][f] += 1
            cl[i][e] += 1
    return fl, cl


def floor_report(G, k: int, chambers: Optional[Sequence[ShiChamber]] = None) -> FloorReport:
    from .analytics import narayana_vector

    g = _group(G)
    chambers = shi_chambers(g, k) if chambers is None else chambers
    RP = build_root_poset(g)
    fl, cl = floor_ceiling_vectors(chambers, g.rank, k)
    nar = [int(x) for x in narayana_vector(g.name, k)]
    anti = True
    for c in chambers:
        mask = sum(1 << j for j in c.floors(k))
        if RP.minimal(mask) != mask:
            anti = False
    return FloorReport(k, fl, cl, nar, fl[k] == nar,
                       all(fl[i] == cl[i] for i in fl), anti)


def indecomposables(RP: RootPoset, chain: FilterChain) -> frozenset:
    """Combinatorial guess for FL_k: roots of V_k that are not sums
    alpha + beta with alpha in V_i, beta in V_j, i + j = k, i, j >= 1, nor
    alpha + beta with alpha in Phi+ and beta in V_k.

    Exploratory: cross-validated against the geometric floors in the tests.
    """
    k, N = chain.k, RP.size
    full = (1 << N) - 1
    out = set()
    Vk = chain.V(k, full)
    for r in bits(Vk):
        decomposable = False
        for i in range(0, k + 1):
            j = k - i
            Vi, Vj = chain.V(i, full), chain.V(j, full)
            for a in bits(Vi):
                for b in bits(Vj):
                    if RP.sum_index(a, b) == r:
                        decomposable = True
        if not decomposable:
            out.add(r)
    return frozenset(out)


# ----- type statistics ------------------------------------------------------
def nn_type_statistic(G, k: int, chambers: Optional[Sequence[ShiChamber]] = None) -> Counter:
    """Conjugacy labels of the reflection subgroups generated by FL_k."""
    g = _group(G)
    chambers = shi_chambers(g, k) if chambers is None else chambers
    out: Counter = Counter()
    for c in chambers:
        roots = reflection_closure(g, sorted(c.floors(k)))
        out[g.subsystem_orbit_key(roots)] += 1
    return out


@dataclass
class TypeReport:
    group: CoxeterGroup
    nn: Counter
    nc: Counter

    @property
    def equal(self) -> bool:
        return self.nn == self.nc

    def label(self, key: tuple) -> str:
        """Isomorphism type plus the root indices of the orbit representative."""
        kind = "x".join(label_of_key(self.group, key)) or "1"
        return f"{kind}[{','.join(map(str, key))}]"

    def to_json(self) -> dict:
        fmt = lambda C: {self.label(key): v for key, v in sorted(C.items())}
        return {"nn": fmt(self.nn), "nc": fmt(self.nc),
                "conjecture_type_equidistribution": "PASS" if self.equal else "FAIL"}


def type_comparison(G, k: int) -> TypeReport:
    from .noncrossing import build_nc, build_nck, parabolic_type_distribution

    g = _group(G)
    nn = nn_type_statistic(g, k)
    nc = parabolic_type_distribution(build_nck(build_nc(g), k))
    return TypeReport(g, nn, nc)


def label_of_key(g: CoxeterGroup, key: tuple) -> tuple:
    from .coxeter import classify_root_subsystem

    return classify_root_subsystem(g, list(key))


# ----- candidate root posets for non-crystallographic types ------------------
@dataclass
class CandidateReport:
    name: str
    poset: FinitePoset
    simple: list
    rank_counts: list
    expected_rank_counts: list
    antichain_count: int
    size_distribution: list
    narayana: list
    nonsimple_antichains: int
    positive_catalan: int
    full_support: int
    chapoton_m: Fraction
    h_triangle: dict
    expected_h_triangle: dict

    @property
    def ok(self) -> bool:
        return (self.rank_counts == self.expected_rank_counts
                and self.size_distribution == self.narayana
                and self.antichain_count == sum(self.narayana)
                and self.nonsimple_antichains == self.positive_catalan
                and self.full_support == self.chapoton_m
                and self.h_triangle == self.expected_h_triangle)

    def to_json(self) -> dict:
        return {"name": self.name, "ok": self.ok, "rank_counts": self.rank_counts,
                "antichains": self.antichain_count, "sizes": self.size_distribution,
                "nonsimple": self.nonsimple_antichains, "full_support": self.full_support,
                "h_triangle": {f"{a},{b}": v for (a, b), v in sorted(self.h_triangle.items())}}


def _dihedral_candidate(m: int) -> tuple[FinitePoset, list]:
    labels = ["a1", "a2"] + [f"r{i}" for i in range(3, m + 1)]
    lower = [[], [], [0, 1]] + [[i - 1] for i in range(3, m)]
    return FinitePoset.from_covers(labels, lower), [0, 1]


# Found by exhaustive search over graded posets with rank sizes
# (3,2,2,2,2,1,1,1,1); simple root 1 is the node joined to both others.
_H3_LOWER = [[], [], [], [0, 1], [1, 2], [3], [4], [5, 6], [5, 6], [7], [8], [9, 10],
             [11], [12], [13]]


def _h3_candidate() -> tuple[FinitePoset, list]:
    labels = ["a1", "a2", "a3"] + [f"r{i}" for i in range(4, 16)]
    return FinitePoset.from_covers(labels, _H3_LOWER), [0, 1, 2]


def h_triangle_of_poset(P: FinitePoset, simple: Sequence[int]) -> dict:
    """Coefficients {(s-degree, t-degree): count} of sum over antichains A of t^|A| s^|A ∩ simple|."""
    simple_mask = sum(1 << s for s in simple)
    out: Counter = Counter()
    for a in _antichains_of(P):
        out[(popcount(a & simple_mask), popcount(a))] += 1
    return dict(out)


def _candidate_report(name: str, P: FinitePoset, simple: list, expected_h: dict) -> CandidateReport:
    from .analytics import group_data, narayana_vector, positive_fuss_catalan

    data = group_data(name)
    n = len(simple)
    exps = [d - 1 for d in data.degrees]
    h = max(data.degrees)
    expected_ranks = [sum(1 for e in exps if e >= i) for i in range(1, h)]
    ranks = P.rank
    counts = [ranks.count(r) for r in range(max(ranks) + 1)]
    acs = _antichains_of(P)
    dist = [0] * (n + 1)
    for a in acs:
        dist[popcount(a)] += 1
    nar = [int(x) for x in narayana_vector(name, 1)]
    simple_mask = sum(1 << s for s in simple)
    nonsimple = sum(1 for a in acs if a & simple_mask == 0)
    full = sum(1 for j in range(P.size) if P.down[j] & simple_mask == simple_mask)
    order = 1
    for d in data.degrees:
        order *= d
    chap = Fraction(n * h, order)
    for e in exps[1:]:
        chap *= e - 1
    return CandidateReport(name, P, simple, counts, expected_ranks, len(acs), dist, nar,
                           nonsimple, int(positive_fuss_catalan(name, 1)), full, chap,
                           h_triangle_of_poset(P, simple), expected_h)


def candidate_noncrystal_root_posets(ms: Sequence[int] = (5, 7, 8)) -> list[CandidateReport]:
    out = []
    for m in ms:
        P, simple = _dihedral_candidate(m)
        expected = {(0, 0): 1, (1, 1): 2, (0, 1): m - 2, (2, 2): 1}
        out.append(_candidate_report(f"I2({m})", P, simple, expected))
    P, simple = _h3_candidate()
    expected = {(0, 0): 1, (1, 1): 3, (0, 1): 12, (2, 2): 3, (1, 2): 4, (0, 2): 8, (3, 3): 1}
    out.append(_candidate_report("H3", P, simple, expected))
    return out


def export_chambers(chambers: Sequence[ShiChamber]) -> str:
    return json.dumps([c.to_json() for c in chambers], sort_keys=True)
