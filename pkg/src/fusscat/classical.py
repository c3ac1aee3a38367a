"""Classical set-partition models for types A and B.

Partitions are immutable values with canonical block order.  Type B
partitions of [+-n] are stored on [2n] through i -> i, -i -> n + i, so
that central symmetry becomes invariance under rotation by n.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from itertools import product
from math import comb, factorial, floor
from typing import Iterable, Optional, Sequence

import numpy as np

from .config import check_cap
from .posets import FinitePoset


class PartitionError(ValueError):
    pass


@dataclass(frozen=True)
class SetPartition:
    blocks: tuple[tuple[int, ...], ...]

    @classmethod
    def of(cls, blocks: Iterable[Iterable[int]]) -> "SetPartition":
        bl = [b for b in (tuple(sorted(b)) for b in blocks) if b]
        seen: set = set()
        for b in bl:
            if seen & set(b):
                raise PartitionError("blocks are not disjoint")
            seen |= set(b)
        return cls(tuple(sorted(bl)))

    @classmethod
    def singletons(cls, ground: Iterable[int]) -> "SetPartition":
        return cls.of([x] for x in ground)

    @classmethod
    def full(cls, ground: Iterable[int]) -> "SetPartition":
        return cls.of([list(ground)])

    @classmethod
    def from_labels(cls, labels: Sequence[int], ground: Sequence[int]) -> "SetPartition":
        groups: dict = {}
        for x, lab in zip(ground, labels):
            groups.setdefault(lab, []).append(x)
        return cls.of(groups.values())

    @property
    def ground(self) -> tuple[int, ...]:
        return tuple(sorted(x for b in self.blocks for x in b))

    @property
    def size(self) -> int:
        return sum(len(b) for b in self.blocks)

    def __len__(self) -> int:
        return len(self.blocks)

    def block_of(self) -> dict:
        return {x: i for i, b in enumerate(self.blocks) for x in b}

    def restrict(self, subset: Iterable[int]) -> "SetPartition":
        keep = set(subset)
        return SetPartition.of([x for x in b if x in keep] for b in self.blocks)

    def translate(self, a: int) -> "SetPartition":
        return SetPartition.of([x + a for x in b] for b in self.blocks)

    def dilate(self, a: int) -> "SetPartition":
        return SetPartition.of([a * x for x in b] for b in self.blocks)

    def union(self, *others: "SetPartition") -> "SetPartition":
        return SetPartition.of([b for p in (self,) + others for b in p.blocks])

    def refines(self, other: "SetPartition") -> bool:
        """self <= other in refinement order (same ground set)."""
        where = other.block_of()
        return all(len({where[x] for x in b}) == 1 for b in self.blocks)

    def rotate(self, shift: int) -> "SetPartition":
        """Cyclic shift of a partition of [N] by ``shift`` positions."""
        N = self.size
        return SetPartition.of([((x - 1 + shift) % N) + 1 for x in b] for b in self.blocks)

    def type(self) -> tuple[int, ...]:
        return tuple(sorted((len(b) for b in self.blocks), reverse=True))

    def k_type(self, k: int) -> tuple[int, ...]:
        if any(len(b) % k for b in self.blocks):
            raise PartitionError("partition is not k-divisible")
        return tuple(sorted((len(b) // k for b in self.blocks), reverse=True))

    def to_json(self) -> list[list[int]]:
        return [list(b) for b in self.blocks]

    def __str__(self) -> str:
        return "{" + ",".join("{" + ",".join(map(str, b)) + "}" for b in self.blocks) + "}"


def parse_partition(text: str) -> SetPartition:
    """Parse text like ``{{1,2,4},{3},{5,6}}``."""
    import re
    return SetPartition.of([int(x) for x in re.findall(r"-?\d+", blk)]
                           for blk in re.findall(r"\{([^{}]*)\}", text))


# ----- predicates -----------------------------------------------------------------

def is_noncrossing(P: SetPartition, order: Optional[Sequence[int]] = None) -> bool:
    """No a < b < c < d with a, c in one block and b, d in another.

    ``order`` optionally gives the linear (cyclic) order of the ground set.
    """
    seq = list(order) if order is not None else list(P.ground)
    where = P.block_of()
    first, last = {}, {}
    for pos, x in enumerate(seq):
        first.setdefault(where[x], pos)
        last[where[x]] = pos
    stack: list = []
    for pos, x in enumerate(seq):
        b = where[x]
        if first[b] == last[b]:
            continue
        if first[b] == pos:
            stack.append(b)
            continue
        if not stack or stack[-1] != b:
            return False
        if last[b] == pos:
            stack.pop()
    return True


def bumps(P: SetPartition) -> list[tuple[int, int]]:
    """Arcs joining consecutive elements of each block."""
    return [(b[i], b[i + 1]) for b in P.blocks for i in range(len(b) - 1)]


def is_nonnesting(P: SetPartition) -> bool:
    arcs = bumps(P)
    for a, d in arcs:
        for b, c in arcs:
            if a < b and c < d:
                return False
    return True


# ----- permutations and Kreweras complements -------------------------------------------

def _block_cycles(P: SetPartition, order: Sequence[int]) -> dict:
    pos = {x: i for i, x in enumerate(order)}
    nxt = {}
    for b in P.blocks:
        bb = sorted(b, key=pos.__getitem__)
        for i, x in enumerate(bb):
            nxt[x] = bb[(i + 1) % len(bb)]
    return nxt


def orbit_partition(sigma: Sequence[int]) -> SetPartition:
    """Partition of [m] into the orbits of a one-line permutation."""
    m = len(sigma)
    seen, blocks = set(), []
    for x in range(1, m + 1):
        if x in seen:
            continue
        orb, y = [], x
        while y not in seen:
            seen.add(y)
            orb.append(y)
            y = sigma[y - 1]
        blocks.append(orb)
    return SetPartition.of(blocks)


def cycle_order(c: Sequence[int]) -> list[int]:
    """The cyclic order 1, c(1), c(c(1)), ... of an m-cycle given one-line."""
    out, x = [1], c[0]
    while x != 1:
        out.append(x)
        x = c[x - 1]
    if len(out) != len(c):
        raise PartitionError("c is not a full cycle")
    return out


def partition_to_permutation(P: SetPartition, c: Optional[Sequence[int]] = None) -> tuple[int, ...]:
    """Product of the block cycles oriented along c (default c = (1 2 ... m))."""
    m = P.size
    order = cycle_order(c) if c is not None else list(range(1, m + 1))
    if not is_noncrossing(P, order):
        raise PartitionError("partition is crossing for this cyclic order")
    nxt = _block_cycles(P, order)
    return tuple(nxt[x] for x in range(1, m + 1))


def perm_partition_iso(n: int, c: Optional[Sequence[int]] = None, direction: str = "forward"):
    """The map pi -> {pi} (``forward``) or its inverse on NC(n) (``backward``)."""
    if direction == "forward":
        return orbit_partition
    if direction == "backward":
        return lambda P: partition_to_permutation(P, c)
    raise PartitionError("direction must be 'forward' or 'backward'")


def _compose(u: dict, v: dict) -> dict:
    return {x: u[v[x]] for x in v}


def _invert(u: dict) -> dict:
    return {y: x for x, y in u.items()}


def _orbits(perm: dict) -> SetPartition:
    seen, blocks = set(), []
    for x in sorted(perm):
        if x in seen:
            continue
        orb, y = [], x
        while y not in seen:
            seen.add(y)
            orb.append(y)
            y = perm[y]
        blocks.append(orb)
    return SetPartition.of(blocks)


def kreweras_complement(P: SetPartition, inverse: bool = False) -> SetPartition:
    """K(P) on NC(X) for the linear order of X (orbits of P^{-1} c); K^{-1} if asked."""
    ground = P.ground
    if not is_noncrossing(P):
        raise PartitionError("Kreweras complement needs a noncrossing partition")
    c = {x: ground[(i + 1) % len(ground)] for i, x in enumerate(ground)}
    p = _block_cycles(P, ground)
    if inverse:
        return _orbits(_compose(c, _invert(p)))
    return _orbits(_compose(_invert(p), c))


def classical_kreweras(P: SetPartition, relative_to: Optional[SetPartition] = None,
                       inverse: bool = False) -> SetPartition:
    """K(P), or the relative complement K^N(P) = union of K_{N_i}(P restricted to N_i)."""
    if relative_to is None:
        return kreweras_complement(P, inverse)
    N = relative_to
    if not is_noncrossing(P) or not is_noncrossing(N):
        raise PartitionError("relative Kreweras complement needs noncrossing partitions")
    if not P.refines(N):
        raise PartitionError("P must refine N")
    pieces = [kreweras_complement(P.restrict(b), inverse) for b in N.blocks]
    return pieces[0].union(*pieces[1:]) if pieces else P


def interleave(P: SetPartition, Q: SetPartition) -> SetPartition:
    return shuffle([P, Q])


def shuffle(parts: Sequence[SetPartition]) -> SetPartition:
    """The shuffle partition: Q_i placed on the residue class i mod k of [kn]."""
    k = len(parts)
    out = []
    for i, Q in enumerate(parts, start=1):
        out.extend([k * x - (k - i) for x in b] for b in Q.blocks)
    return SetPartition.of(out)


def is_multichain(chain: Sequence[SetPartition]) -> bool:
    return all(is_noncrossing(P) for P in chain) and all(a.refines(b) for a, b in zip(chain, chain[1:]))


def classical_delta(chain: Sequence[SetPartition]) -> list[SetPartition]:
    """(K^{P_2}(P_1), ..., K^{P_k}(P_{k-1}), K(P_k))."""
    top = SetPartition.full(chain[0].ground)
    seq = list(chain) + [top]
    return [classical_kreweras(seq[i], seq[i + 1]) for i in range(len(chain))]


def nabla(chain: Sequence[SetPartition]) -> SetPartition:
    """The bijection from k-multichains of NC(n) to k-divisible partitions of [kn]."""
    if not chain:
        raise PartitionError("empty multichain")
    if not is_multichain(chain):
        raise PartitionError("input is not a multichain of noncrossing partitions")
    return kreweras_complement(shuffle(classical_delta(chain)), inverse=True)


# ----- enumeration --------------------------------------------------------------------

@lru_cache(maxsize=None)
def _nc_index_partitions(m: int, k: int) -> tuple:
    """Noncrossing partitions of range(m) with all block sizes divisible by k."""
    if m == 0:
        return ((),)
    out = []

    def grow(block, pos, gaps):
        if len(block) % k == 0 and (m - pos - 1) % k == 0:
            gs = gaps + [(pos + 1, m)]
            options = [[tuple(tuple(x + lo for x in b) for b in p) for p in _nc_index_partitions(hi - lo, k)]
                       for lo, hi in gs]
            for combo in product(*options):
                out.append((tuple(block),) + sum(combo, ()))
        for j in range(pos + 1, m):
            if (j - pos - 1) % k == 0:
                grow(block + [j], j, gaps + [(pos + 1, j)])

    grow([0], 0, [])
    return tuple(out)


def noncrossing_partitions(ground: Sequence[int] | int, k: int = 1) -> list[SetPartition]:
    """All noncrossing partitions of the ground set with block sizes divisible by k."""
    ground = list(range(1, ground + 1)) if isinstance(ground, int) else sorted(ground)
    return [SetPartition.of([ground[i] for i in b] for b in p)
            for p in _nc_index_partitions(len(ground), k)]


def all_set_partitions(ground: Sequence[int]) -> list[SetPartition]:
    """Every set partition (restricted growth strings); small inputs only."""
    ground = list(ground)
    out = []

    def rec(i, labels, top):
        if i == len(ground):
            out.append(SetPartition.from_labels(labels, ground))
            return
        for lab in range(top + 2):
            rec(i + 1, labels + [lab], max(top, lab))

    if ground:
        rec(1, [0], 0)
    else:
        out.append(SetPartition(()))
    return out


def nz(P: SetPartition, n: int) -> int:
    """Number of pairs of nonzero blocks of a centrally symmetric partition of [2n]."""
    return sum(1 for b in P.blocks if ((b[0] - 1 + n) % (2 * n)) + 1 not in b) // 2


def zero_block(P: SetPartition, n: int) -> Optional[tuple[int, ...]]:
    for b in P.blocks:
        if ((b[0] - 1 + n) % (2 * n)) + 1 in b:
            return b
    return None


def k_type_b(P: SetPartition, n: int, k: int) -> tuple[int, ...]:
    """One entry |B|/k for each pair of nonzero blocks of a partition of [2n]."""
    sizes = sorted((len(b) // k for b in P.blocks if ((b[0] - 1 + n) % (2 * n)) + 1 not in b), reverse=True)
    return tuple(sizes[::2])


def to_signed(P: SetPartition, n: int) -> list[list[int]]:
    """Blocks of a partition of [2n] written on [+-n]."""
    return [[x if x <= n else -(x - n) for x in b] for b in P.blocks]


def from_signed(blocks: Iterable[Iterable[int]], n: int) -> SetPartition:
    return SetPartition.of([x if x > 0 else n - x for x in b] for b in blocks)


@dataclass(frozen=True)
class SignedSetPartition:
    """A centrally symmetric partition of [+-n]."""
    n: int
    blocks: tuple[tuple[int, ...], ...]

    @classmethod
    def of(cls, blocks: Iterable[Iterable[int]], n: int) -> "SignedSetPartition":
        P = from_signed(blocks, n)
        if P.ground != tuple(range(1, 2 * n + 1)):
            raise PartitionError("blocks do not cover [+-n]")
        if P.rotate(n) != P:
            raise PartitionError("partition is not invariant under negation")
        return cls(n, tuple(tuple(b) for b in to_signed(P, n)))

    def as_partition(self) -> SetPartition:
        return from_signed(self.blocks, self.n)

    def zero_block(self):
        return next((b for b in self.blocks if -b[0] in b), None)

    def nz(self) -> int:
        return nz(self.as_partition(), self.n)


@dataclass
class ClassicalPoset:
    n: int
    k: int
    type_b: bool
    elements: list[SetPartition]
    poset: FinitePoset
    ranks: list[int]

    def __len__(self) -> int:
        return len(self.elements)

    @property
    def height(self) -> int:
        return self.n if self.type_b else self.n - 1

    def index(self, P: SetPartition) -> int:
        return self.poset.index(P)

    def k_type(self, i: int) -> tuple[int, ...]:
        P = self.elements[i]
        return k_type_b(P, self.n * self.k, self.k) if self.type_b else P.k_type(self.k)

    def rank_sizes(self) -> list[int]:
        out = [0] * (self.height + 1)
        for r in self.ranks:
            out[r] += 1
        return out


def refinement_poset(parts: Sequence[SetPartition]) -> FinitePoset:
    """Refinement order on partitions of a common ground set (vectorized)."""
    m = len(parts)
    if m == 0:
        return FinitePoset([], [], check=False)
    ground = parts[0].ground
    pos = {x: i for i, x in enumerate(ground)}
    labels = np.zeros((m, len(ground)), dtype=np.int32)
    reps = np.zeros((m, len(ground)), dtype=np.int32)
    for r, P in enumerate(parts):
        for bi, b in enumerate(P.blocks):
            for x in b:
                labels[r, pos[x]] = bi
                reps[r, pos[x]] = pos[b[0]]
    down = []
    for j in range(m):
        # P_i <= P_j iff P_j's label is constant on each block of P_i
        ok = (labels[j][reps] == labels[j][None, :]).all(axis=1)
        mask = 0
        for i in np.flatnonzero(ok):
            mask |= 1 << int(i)
        down.append(mask)
    return FinitePoset(parts, down, check=m <= 400)


def enumerate_kdivisible(n: int, k: int, typeB: bool = False) -> ClassicalPoset:
    """k-divisible noncrossing partitions of [kn] (or centrally symmetric ones of [2kn])."""
    ground = 2 * k * n if typeB else k * n
    check_cap("max_classical_size", ground)
    parts = noncrossing_partitions(ground, k)
    if typeB:
        parts = [P for P in parts if P.rotate(k * n) == P]
        ranks = [n - nz(P, k * n) for P in parts]
    else:
        ranks = [n - len(P) for P in parts]
    poset = refinement_poset(parts)
    poset.set_rank(ranks)
    return ClassicalPoset(n, k, typeB, parts, poset, ranks)


def circular_coordinates(N: int, labels: Optional[Sequence] = None) -> list[dict]:
    """Vertex angles (degrees, clockwise from the top) for the circular representation."""
    labels = list(labels) if labels is not None else list(range(1, N + 1))
    return [{"label": lab, "angle": 90.0 - 360.0 * i / N} for i, lab in enumerate(labels)]


# ----- counting ----------------------------------------------------------------------

def _jump_vector(ranks: Sequence[int], top: int) -> tuple[int, ...]:
    out, prev = [], 0
    for r in ranks:
        out.append(r - prev)
        prev = r
    out.append(top - prev)
    return tuple(out)


def count_rank_jump(n: int, k: int, l: int, jumps: Sequence[int], typeB: bool = False):
    """Closed form for l-multichains of NC^(k) with a given rank-jump vector."""
    jumps = tuple(jumps)
    total = n if typeB else n - 1
    if len(jumps) != l + 1 or any(j < 0 for j in jumps) or sum(jumps) != total:
        raise PartitionError(f"jump vector must have {l + 1} nonnegative entries summing to {total}")
    val = comb(n, jumps[0])
    for j in jumps[1:]:
        val *= comb(k * n, j)
    if typeB:
        return val
    if val % n:
        raise PartitionError("non-integral rank-jump count")
    return val // n


def exhaustive_rank_jumps(P: ClassicalPoset, l: int) -> Counter:
    out: Counter = Counter()
    for ch in P.poset.iter_multichains(l):
        out[_jump_vector([P.ranks[i] for i in ch], P.height)] += 1
    return out


def _m_lambda(lam: Sequence[int]) -> int:
    return int(np.prod([factorial(v) for v in Counter(lam).values()], dtype=object)) if lam else 1


def count_by_type(lam: Sequence[int], n: int, k: int, l: int, typeB: bool = False) -> int:
    """l-multichains whose bottom element has k-type lambda (closed form)."""
    lam = tuple(sorted(lam, reverse=True))
    if any(x <= 0 for x in lam):
        raise PartitionError("lambda must have positive parts")
    if typeB and sum(lam) > n or not typeB and sum(lam) != n:
        raise PartitionError("lambda has the wrong size")
    i, N = len(lam), k * l * n
    den = _m_lambda(lam) * factorial(N - i if typeB else N - i + 1)
    num = factorial(N)
    if num % den:
        raise PartitionError("non-integral type count")
    return num // den


def exhaustive_type_counts(P: ClassicalPoset, l: int) -> Counter:
    cache = [P.k_type(i) for i in range(len(P))]
    out: Counter = Counter()
    for ch in P.poset.iter_multichains(l):
        out[cache[ch[0]]] += 1
    return out


def dominates(lam: Sequence[int], mu: Sequence[int]) -> bool:
    """True when lam is dominated by mu."""
    a = b = 0
    for i in range(max(len(lam), len(mu))):
        a += lam[i] if i < len(lam) else 0
        b += mu[i] if i < len(mu) else 0
        if a > b:
            return False
    return True


# ----- the antipodally fixed poset --------------------------------------------------

@dataclass
class MysteryReport:
    n: int
    k: int
    size: int
    zeta_observed: list[int]
    zeta_conjectured: list[int]

    @property
    def matches(self) -> bool:
        return self.zeta_observed == self.zeta_conjectured


def mystery_poset(n: int, k: int) -> ClassicalPoset:
    """k-divisible partitions of [kn] fixed by the half-turn (empty when kn is odd)."""
    check_cap("max_classical_size", k * n)
    N = k * n
    if N % 2:
        parts: list = []
    else:
        parts = [P for P in noncrossing_partitions(N, k) if P.rotate(N // 2) == P]
    ranks = [n - len(P) for P in parts]
    poset = refinement_poset(parts)
    if parts:
        poset.set_rank([r - min(ranks) for r in ranks])
    return ClassicalPoset(n, k, False, parts, poset, ranks)


def mystery_report(n: int, k: int, max_l: int = 2) -> MysteryReport:
    P = mystery_poset(n, k)
    obs = [P.poset.count_multichains(l) if len(P) else 0 for l in range(1, max_l + 1)]
    conj = [comb(floor((k * l + 1) * n / 2), n // 2) for l in range(1, max_l + 1)]
    return MysteryReport(n, k, len(P), obs, conj)


# ----- comparison with the algebraic posets -------------------------------------------

def signed_to_unsigned(sigma: Sequence[int]) -> tuple[int, ...]:
    """A signed permutation of [+-n] as a permutation of [2n] (-i -> n + i)."""
    n = len(sigma)

    def enc(x):
        return x if x > 0 else n - x

    out = [0] * (2 * n)
    for a, s in enumerate(sigma, start=1):
        out[a - 1] = enc(s)
        out[n + a - 1] = enc(-s)
    return tuple(out)


@dataclass
class IsomorphismReport:
    size_algebraic: int
    size_classical: int
    bijective: bool
    order_preserving: bool
    rank_preserving: bool
    type_preserving: bool

    @property
    def ok(self) -> bool:
        return (self.bijective and self.order_preserving and self.rank_preserving
                and self.type_preserving)


def algebraic_isomorphism(n: int, k: int, typeB: bool = False) -> IsomorphismReport:
    """Check that nabla of the orbit partitions maps NC^(k)(W) onto the classical poset."""
    from .coxeter import (build_group, element_from_signed_permutation,
                          element_from_type_a_permutation, type_a_permutation,
                          type_b_signed_permutation)
    from .noncrossing import build_nc, build_nck

    if typeB:
        G = build_group(f"B{n}")
        c = element_from_signed_permutation(G, [a + 2 for a in range(n - 1)] + [-1])

        def part(w):
            return orbit_partition(signed_to_unsigned(type_b_signed_permutation(G, w)))
    else:
        G = build_group(f"A{n - 1}")
        c = element_from_type_a_permutation(G, [a % n + 1 for a in range(1, n + 1)])

        def part(w):
            return orbit_partition(type_a_permutation(G, w))

    nc = build_nc(G, c)
    nck = build_nck(nc, k)
    C = enumerate_kdivisible(n, k, typeB)
    parts = [part(w) for w in nc.elements]
    image = []
    type_ok = True
    for e in nck.elements:
        chain = [parts[x] for x in e]
        Q = nabla(chain)
        idx = C.poset.index(Q) if Q in set(C.elements) else None
        image.append(idx)
        if idx is not None:
            bottom = chain[0]
            want = k_type_b(bottom, n, 1) if typeB else bottom.type()
            type_ok &= C.k_type(idx) == want
    bijective = None not in image and len(set(image)) == len(image) == len(C)
    rank_ok = bijective and all(C.ranks[image[i]] == nck.poset.rank[i] for i in range(len(nck)))
    order_ok = bijective and all(nck.leq(a, b) == C.poset.leq(image[a], image[b])
                                 for a in range(len(nck)) for b in range(len(nck)))
    return IsomorphismReport(len(nck), len(C), bijective, order_ok, rank_ok, bijective and type_ok)
