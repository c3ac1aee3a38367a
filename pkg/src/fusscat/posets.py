"""Finite posets stored as bitset down-sets and up-sets.

Element ``i`` is below element ``j`` exactly when bit ``i`` of ``down[j]`` is
set.  Hasse diagrams, Mobius values, zeta polynomials, meets/joins, order
complex Euler characteristics and EL-labelling checks are all derived from
these bitsets.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import comb, factorial
from typing import Callable, Hashable, Optional, Sequence

from .polynomials import IntPolynomial, binomial_poly


class PosetError(ValueError):
    pass


def bits(mask: int):
    """Yield the indices of set bits in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def popcount(mask: int) -> int:
    return bin(mask).count("1")


class FinitePoset:
    """A finite poset with bitset order relation and Hasse diagram."""

    def __init__(self, labels: Sequence, down: Sequence[int], check: bool = True):
        self.labels = list(labels)
        self.size = len(self.labels)
        self.down = list(down)
        if check:
            self._check_axioms()
        self.up = [0] * self.size
        for j, mask in enumerate(self.down):
            for i in bits(mask):
                self.up[i] |= 1 << j
        self._linear = sorted(range(self.size), key=lambda j: popcount(self.down[j]))
        self._compute_covers()
        self._rank: Optional[list[int]] = None
        self._mobius: dict = {}
        self._index: Optional[dict] = None

    # ----- construction ---------------------------------------------------
    @classmethod
    def from_leq(cls, elements: Sequence, leq: Callable[[object, object], bool]) -> "FinitePoset":
        n = len(elements)
        down = [0] * n
        for j, y in enumerate(elements):
            mask = 0
            for i, x in enumerate(elements):
                if i == j or leq(x, y):
                    mask |= 1 << i
            down[j] = mask
        return cls(elements, down)

    @classmethod
    def from_covers(cls, labels: Sequence, lower_covers: Sequence[Sequence[int]]) -> "FinitePoset":
        """Transitive closure of a cover relation given as lower-cover lists."""
        n = len(labels)
        down: list = [None] * n

        def close(j, stack=()):
            if down[j] is None:
                if j in stack:
                    raise PosetError("cover relation has a cycle")
                mask = 1 << j
                for i in lower_covers[j]:
                    mask |= close(i, stack + (j,))
                down[j] = mask
            return down[j]

        for j in range(n):
            close(j)
        return cls(labels, down)

    def _check_axioms(self) -> None:
        for j, mask in enumerate(self.down):
            if not (mask >> j) & 1:
                raise PosetError("relation is not reflexive")
            for i in bits(mask):
                if i != j and (self.down[i] >> j) & 1:
                    raise PosetError("relation is not antisymmetric")
                if self.down[i] & ~mask:
                    raise PosetError("relation is not transitive")

    def _compute_covers(self) -> None:
        self.lower_covers: list[list[int]] = []
        for j in range(self.size):
            strict = self.down[j] & ~(1 << j)
            below_others = 0
            for i in bits(strict):
                below_others |= self.down[i] & ~(1 << i)
            self.lower_covers.append(list(bits(strict & ~below_others)))
        self.upper_covers: list[list[int]] = [[] for _ in range(self.size)]
        for j, lows in enumerate(self.lower_covers):
            for i in lows:
                self.upper_covers[i].append(j)

    # ----- basic queries --------------------------------------------------
    def __len__(self) -> int:
        return self.size

    def index(self, label) -> int:
        if self._index is None:
            self._index = {lab: i for i, lab in enumerate(self.labels)}
        return self._index[label]

    def leq(self, i: int, j: int) -> bool:
        return bool((self.down[j] >> i) & 1)

    def covers(self) -> list[tuple[int, int]]:
        return [(i, j) for j, lows in enumerate(self.lower_covers) for i in lows]

    def num_covers(self) -> int:
        return sum(len(x) for x in self.lower_covers)

    def minimal_elements(self) -> list[int]:
        return [j for j in range(self.size) if self.down[j] == 1 << j]

    def maximal_elements(self) -> list[int]:
        return [j for j in range(self.size) if self.up[j] == 1 << j]

    def bottom(self) -> Optional[int]:
        mins = self.minimal_elements()
        return mins[0] if len(mins) == 1 else None

    def top(self) -> Optional[int]:
        maxs = self.maximal_elements()
        return maxs[0] if len(maxs) == 1 else None

    def linear_extension(self) -> list[int]:
        return list(self._linear)

    def interval_mask(self, i: int, j: int) -> int:
        return self.up[i] & self.down[j]

    @property
    def rank(self) -> list[int]:
        """Rank function (length of longest chain from a minimal element)."""
        if self._rank is None:
            r = [0] * self.size
            for j in self._linear:
                r[j] = max((r[i] + 1 for i in self.lower_covers[j]), default=0)
            self._rank = r
        return self._rank

    def set_rank(self, ranks: Sequence[int]) -> None:
        self._rank = list(ranks)

    def is_graded(self) -> bool:
        r = self.rank
        if any(r[i] + 1 != r[j] for i, j in self.covers()):
            return False
        top = max(r, default=0)
        return all(r[j] == top for j in self.maximal_elements())

    def rank_sizes(self) -> list[int]:
        r = self.rank
        out = [0] * (max(r, default=-1) + 1)
        for x in r:
            out[x] += 1
        return out

    # ----- derived posets -------------------------------------------------
    def dual(self) -> "FinitePoset":
        return FinitePoset(self.labels, self.up, check=False)

    def subposet(self, keep: Sequence[int]) -> "FinitePoset":
        keep = list(keep)
        pos = {old: new for new, old in enumerate(keep)}
        keep_mask = 0
        for k in keep:
            keep_mask |= 1 << k
        down = []
        for k in keep:
            m = 0
            for i in bits(self.down[k] & keep_mask):
                m |= 1 << pos[i]
            down.append(m)
        return FinitePoset([self.labels[k] for k in keep], down, check=False)

    def with_bottom(self, label="0hat") -> "FinitePoset":
        """Adjoin a new minimum element (placed last)."""
        n = self.size
        down = [d | (1 << n) for d in self.down] + [1 << n]
        return FinitePoset(self.labels + [label], down, check=False)

    def with_top(self, label="1hat") -> "FinitePoset":
        n = self.size
        full = (1 << (n + 1)) - 1
        return FinitePoset(self.labels + [label], list(self.down) + [full], check=False)

    # ----- Mobius and chains ----------------------------------------------
    def mobius_row(self, x: int) -> dict[int, int]:
        """All values mu(x, y) for y >= x."""
        row = self._mobius.get(x)
        if row is not None:
            return row
        row = {x: 1}
        upx = self.up[x]
        for y in self._linear:
            if y == x or not (upx >> y) & 1:
                continue
            inner = self.down[y] & upx & ~(1 << y)
            row[y] = -sum(row[z] for z in bits(inner))
        self._mobius[x] = row
        return row

    def mobius(self, x: int, y: int) -> int:
        if not self.leq(x, y):
            raise PosetError("mobius(x, y) requires x <= y")
        return self.mobius_row(x)[y]

    def chain_counts(self) -> list[int]:
        """b_i = number of chains x_1 < ... < x_i (index i = 1, 2, ...)."""
        counts = []
        cur = [1] * self.size
        while any(cur):
            counts.append(sum(cur))
            nxt = [0] * self.size
            for y in self._linear:
                strict = self.down[y] & ~(1 << y)
                nxt[y] = sum(cur[x] for x in bits(strict)) if strict else 0
            cur = nxt
        return counts

    def zeta_polynomial(self) -> IntPolynomial:
        """Z(P, k): the number of multichains x_1 <= ... <= x_k."""
        total = IntPolynomial()
        for i, b in enumerate(self.chain_counts(), start=1):
            total = total + binomial_poly(-1, i - 1) * b
        # integer values at positive integers are required
        for k in range(1, total.degree + 3):
            v = total(k)
            if not (isinstance(v, int) or (isinstance(v, Fraction) and v.denominator == 1)):
                raise PosetError("zeta polynomial takes a non-integer value")
        return total

    def count_multichains(self, length: int) -> int:
        """Direct count of multichains x_1 <= ... <= x_length."""
        cur = [1] * self.size
        for _ in range(length - 1):
            nxt = [0] * self.size
            for y in range(self.size):
                nxt[y] = sum(cur[x] for x in bits(self.down[y]))
            cur = nxt
        return sum(cur) if length > 0 else 1

    def iter_multichains(self, length: int):
        """Yield every multichain x_1 <= ... <= x_length as a tuple of indices."""
        if length <= 0:
            yield ()
            return

        def rec(prefix):
            if len(prefix) == length:
                yield tuple(prefix)
                return
            for y in bits(self.up[prefix[-1]]):
                prefix.append(y)
                yield from rec(prefix)
                prefix.pop()

        for x in range(self.size):
            yield from rec([x])

    def maximal_chain_count(self) -> int:
        """Number of maximal chains (from minimal to maximal elements)."""
        ways = [0] * self.size
        for j in self._linear:
            ways[j] = 1 if not self.lower_covers[j] else sum(ways[i] for i in self.lower_covers[j])
        return sum(ways[j] for j in self.maximal_elements())

    def reduced_euler_char(self) -> int:
        """Reduced Euler characteristic of the order complex."""
        return -1 + sum((-1) ** (i - 1) * b for i, b in enumerate(self.chain_counts(), start=1))

    # ----- lattice operations ---------------------------------------------
    def lattice_ops(self) -> "LatticeOps":
        return LatticeOps.compute(self)

    # ----- export -----------------------------------------------------------
    def to_dot(self, name: str = "P", label: Callable[[int], str] | None = None) -> str:
        label = label or (lambda i: str(self.labels[i]))
        lines = [f"digraph {name} {{", "  rankdir=BT;"]
        by_rank: dict[int, list[int]] = {}
        for i, r in enumerate(self.rank):
            by_rank.setdefault(r, []).append(i)
        for i in range(self.size):
            text = label(i).replace('"', "'")
            lines.append(f'  n{i} [label="{text}"];')
        for r in sorted(by_rank):
            lines.append("  { rank=same; " + " ".join(f"n{i};" for i in by_rank[r]) + " }")
        for i, j in self.covers():
            lines.append(f"  n{i} -> n{j};")
        lines.append("}")
        return "\n".join(lines) + "\n"

    def to_json(self, label: Callable[[int], object] | None = None) -> dict:
        label = label or (lambda i: str(self.labels[i]))
        return {"elements": [label(i) for i in range(self.size)],
                "ranks": list(self.rank),
                "covers": [[i, j] for i, j in self.covers()]}

    @classmethod
    def from_json(cls, data: dict) -> "FinitePoset":
        lower: list[list[int]] = [[] for _ in data["elements"]]
        for i, j in data["covers"]:
            lower[j].append(i)
        P = cls.from_covers(data["elements"], lower)
        if "ranks" in data:
            P.set_rank(data["ranks"])
        return P

    def same_order(self, other: "FinitePoset") -> bool:
        """Equal element count and identical order relation on indices."""
        return self.size == other.size and self.down == other.down


def build_poset(elements: Sequence, leq_predicate: Callable[[object, object], bool]) -> FinitePoset:
    return FinitePoset.from_leq(elements, leq_predicate)


def mobius(P: FinitePoset, x: int, y: int) -> int:
    return P.mobius(x, y)


def zeta_polynomial(P: FinitePoset) -> IntPolynomial:
    return P.zeta_polynomial()


def reduced_euler_char(P: FinitePoset) -> int:
    return P.reduced_euler_char()


@dataclass
class LatticeOps:
    is_lattice: bool
    meet_table: dict
    join_table: dict

    @classmethod
    def compute(cls, P: FinitePoset) -> "LatticeOps":
        by_down = {d: j for j, d in enumerate(P.down)}
        by_up = {u: j for j, u in enumerate(P.up)}
        meet, join = {}, {}
        ok = True
        for a in range(P.size):
            for b in range(a, P.size):
                m = by_down.get(P.down[a] & P.down[b])
                if m is None:
                    common = P.down[a] & P.down[b]
                    m = _max_of(P, common)
                j = by_up.get(P.up[a] & P.up[b])
                if j is None:
                    j = _min_of(P, P.up[a] & P.up[b])
                if m is None or j is None:
                    ok = False
                meet[(a, b)] = meet[(b, a)] = m
                join[(a, b)] = join[(b, a)] = j
        return cls(ok, meet, join)

    def meet(self, a: int, b: int) -> int:
        m = self.meet_table[(a, b)]
        if m is None:
            raise PosetError("meet undefined for this pair")
        return m

    def join(self, a: int, b: int) -> int:
        j = self.join_table[(a, b)]
        if j is None:
            raise PosetError("join undefined for this pair")
        return j


def _max_of(P: FinitePoset, mask: int) -> Optional[int]:
    for z in bits(mask):
        if P.down[z] & mask == mask:
            return z
    return None


def _min_of(P: FinitePoset, mask: int) -> Optional[int]:
    for z in bits(mask):
        if P.up[z] & mask == mask:
            return z
    return None


def lattice_ops(P: FinitePoset) -> LatticeOps:
    return LatticeOps.compute(P)


def verify_el_labelling(P: FinitePoset, edge_labels: dict, label_key: Callable = lambda x: x,
                        return_witness: bool = False):
    """Check the EL property: each interval has one rising maximal chain, lex first.

    ``edge_labels`` maps cover pairs (i, j) to labels; ``label_key`` turns a
    label into a sortable key.  Rising means weakly increasing keys.
    """
    for (i, j) in P.covers():
        if (i, j) not in edge_labels:
            raise PosetError(f"missing label on cover {(i, j)}")
    key = {e: label_key(lab) for e, lab in edge_labels.items()}
    order = P.linear_extension()
    for x in range(P.size):
        upx = P.up[x]
        rising: dict[int, dict] = {x: None}
        lexmin: dict[int, tuple] = {}
        for y in order:
            if y == x or not (upx >> y) & 1:
                continue
            counts: dict = {}
            for z in P.lower_covers[y]:
                if not (upx >> z) & 1:
                    continue
                lab = key[(z, y)]
                if z == x:
                    counts[lab] = counts.get(lab, 0) + 1
                    continue
                for last, cnt in rising[z].items():
                    if last <= lab:
                        counts[lab] = counts.get(lab, 0) + cnt
            rising[y] = counts
        # lexicographically least chain from x to y, computed backwards per target
        for y in order:
            if y == x or not (upx >> y) & 1:
                continue
            best = _lexmin_chain(P, key, x, y)
            total = sum(rising[y].values())
            is_rising = all(a <= b for a, b in zip(best, best[1:]))
            if total != 1 or not is_rising:
                if return_witness:
                    return False, {"interval": (x, y), "rising_chains": total}
                return False
    return (True, None) if return_witness else True


def _lexmin_chain(P: FinitePoset, key: dict, x: int, y: int) -> tuple:
    memo: dict = {}
    target_down = P.down[y]

    def go(z):
        if z == y:
            return ()
        if z in memo:
            return memo[z]
        best = None
        for w in P.upper_covers[z]:
            if (target_down >> w) & 1:
                cand = (key[(z, w)],) + go(w)
                if best is None or cand < best:
                    best = cand
        memo[z] = best
        return best

    return go(x)
