"""Finite irreducible Coxeter groups with exact root systems.

A group element is stored as the permutation it induces on the full root
list: a tuple ``w`` with ``w[j]`` the index of the image of root ``j``.
Positive roots occupy indices ``0..N-1`` (simple roots first) and the
negative of root ``j`` sits at ``(j + N) mod 2N``.  Products compose right to
left, so ``multiply(u, v)[j] == u[v[j]]``.

Simple-root conventions (recorded here since results are coordinate free):

* Cartan entries satisfy ``s_i(alpha_j) = alpha_j - A[i][j] alpha_i``.
* B_n has long roots ``e_i - e_{i+1}`` and the short root ``e_n`` last.
* D_n attaches the last node to the node two steps from the end.
* E_n uses the Bourbaki numbering (branch node 4, with node 2 hanging off it).
* F4 has two long roots followed by two short roots.
* I2(3) = A2, I2(4) = B2 and I2(6) = G2 (short root first) use integer
  Cartan matrices; every other I2(m), H3 and H4 use the symmetric matrix
  ``-2cos(pi/m)`` over the field Q(2cos(pi/m)).
"""

from __future__ import annotations

import math
import re
from collections import Counter, deque
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Optional, Sequence

import numpy as np

from .numberfield import (
    NFElement,
    integer_matrix_rank,
    matrix_rank,
    to_float,
    two_cos_field,
)
from .polynomials import IntPolynomial

Perm = tuple  # a group element, see module docstring

RATIONAL_DIHEDRAL = {3, 4, 6}
FIXED_RANK = {"H3": ("H", 3), "H4": ("H", 4), "F4": ("F", 4), "E6": ("E", 6),
              "E7": ("E", 7), "E8": ("E", 8), "G2": ("I2", 2)}

DEGREE_TABLE = {
    "E6": (2, 5, 6, 8, 9, 12),
    "E7": (2, 6, 8, 10, 12, 14, 18),
    "E8": (2, 8, 12, 14, 18, 20, 24, 30),
    "F4": (2, 6, 8, 12),
    "H3": (2, 6, 10),
    "H4": (2, 12, 20, 30),
}


def expected_degrees(family: str, rank: int, m: Optional[int] = None) -> tuple[int, ...]:
    """Degrees of the basic invariants, from the classification table."""
    if family == "A":
        return tuple(range(2, rank + 2))
    if family == "B":
        return tuple(range(2, 2 * rank + 1, 2))
    if family == "D":
        return tuple(sorted(list(range(2, 2 * rank - 1, 2)) + [rank]))
    if family == "I2":
        return (2, m)
    return DEGREE_TABLE[f"{family}{rank}"]


class CoxeterError(ValueError):
    pass


def parse_type(label: str) -> tuple[str, int, Optional[int]]:
    """Parse labels such as ``A3``, ``B2``, ``I2(5)``, ``H4`` or ``G2``."""
    s = label.strip().upper()
    mt = re.fullmatch(r"I2\((\d+)\)", s)
    if mt:
        return "I2", 2, int(mt.group(1))
    if s == "G2":
        return "I2", 2, 6
    mt = re.fullmatch(r"([ABDEFH])(\d+)", s)
    if not mt:
        raise CoxeterError(f"cannot parse type label {label!r}")
    return mt.group(1), int(mt.group(2)), None


def _check_type(family: str, rank: int, m: Optional[int]) -> None:
    ok = {
        "A": rank >= 1,
        "B": rank >= 2,
        "D": rank >= 3,
        "E": rank in (6, 7, 8),
        "F": rank == 4,
        "H": rank in (3, 4),
        "I2": rank == 2 and m is not None and m >= 3,
    }.get(family, False)
    if not ok:
        if family == "I2" and (m is None or m < 3):
            raise CoxeterError("I2(m) requires m >= 3")
        raise CoxeterError(f"invalid type/rank pair ({family}, {rank})")


def cartan_matrix(family: str, rank: int, m: Optional[int] = None) -> list[list]:
    """Cartan-type matrix A with s_i(alpha_j) = alpha_j - A[i][j] alpha_i."""
    _check_type(family, rank, m)
    n = rank
    if family == "I2" and m not in RATIONAL_DIHEDRAL:
        fld = two_cos_field(m)
        off = -fld.gen()
        two = fld.from_rational(2)
        zero = fld.from_rational(0)
        return [[two, off], [off, two]]
    if family in ("H",):
        fld = two_cos_field(5)
        one, two, zero, phi = (fld.from_rational(1), fld.from_rational(2),
                               fld.from_rational(0), fld.gen())
        A = [[zero] * n for _ in range(n)]
        for i in range(n):
            A[i][i] = two
        A[0][1] = A[1][0] = -phi
        for i in range(1, n - 1):
            A[i][i + 1] = A[i + 1][i] = -one
        return A
    A = [[Fraction(0)] * n for _ in range(n)]
    for i in range(n):
        A[i][i] = Fraction(2)

    def link(i, j, a=-1, b=-1):
        A[i][j] = Fraction(a)
        A[j][i] = Fraction(b)

    if family == "A":
        for i in range(n - 1):
            link(i, i + 1)
    elif family == "B":
        for i in range(n - 2):
            link(i, i + 1)
        link(n - 2, n - 1, -1, -2)
    elif family == "D":
        for i in range(n - 2):
            link(i, i + 1)
        link(n - 3, n - 1)
    elif family == "E":
        edges = [(0, 2), (2, 3), (3, 4), (1, 3)] + [(i, i + 1) for i in range(4, n - 1)]
        for i, j in edges:
            link(i, j)
    elif family == "F":
        link(0, 1)
        link(1, 2, -1, -2)
        link(2, 3)
    elif family == "I2":
        if m == 3:
            link(0, 1)
        elif m == 4:
            link(0, 1, -1, -2)
        else:  # m == 6, G2 with the short root first
            link(0, 1, -3, -1)
    return A


def _scalar_positive(x) -> bool:
    return to_float(x) > 0


def _group_order_from_cartan(A: list[list], nodes: Sequence[int]) -> int:
    """|W| for the parabolic on ``nodes`` via orbit sizes of fundamental weights."""
    nodes = list(nodes)
    if not nodes:
        return 1
    # split into connected components
    seen: set = set()
    comps = []
    for s in nodes:
        if s in seen:
            continue
        comp, queue = [], [s]
        seen.add(s)
        while queue:
            u = queue.pop()
            comp.append(u)
            for v in nodes:
                if v not in seen and A[u][v] != 0 and u != v:
                    seen.add(v)
                    queue.append(v)
        comps.append(sorted(comp))
    if len(comps) > 1:
        out = 1
        for comp in comps:
            out *= _group_order_from_cartan(A, comp)
        return out
    comp = comps[0]
    last = comp[-1]
    zero = A[last][last] - A[last][last]
    one = A[last][last] / 2
    start = tuple(one if j == last else zero for j in comp)
    pos = {j: idx for idx, j in enumerate(comp)}
    orbit = {start}
    queue = deque([start])
    while queue:
        lam = queue.popleft()
        for i in comp:
            li = lam[pos[i]]
            if li == 0:
                continue
            img = tuple(lam[pos[j]] - li * A[j][i] for j in comp)
            if img not in orbit:
                orbit.add(img)
                queue.append(img)
    return len(orbit) * _group_order_from_cartan(A, comp[:-1])


@dataclass(frozen=True)
class CoxeterElementData:
    """A bipartite (or standard) Coxeter element c = left * right."""

    c: Perm
    left: Perm
    right: Perm
    left_nodes: tuple[int, ...]
    right_nodes: tuple[int, ...]
    mode: str = "bipartite"


class CoxeterGroup:
    """A finite irreducible Coxeter group realized on its root system."""

    def __init__(self, family: str, rank: int, m: Optional[int] = None):
        if family == "I2" and m is None:
            raise CoxeterError("I2(m) requires m >= 3")
        _check_type(family, rank, m)
        self.family = family
        self.rank = rank
        self.m = m
        self.cartan = cartan_matrix(family, rank, m)
        self.crystallographic = not (family == "H" or (family == "I2" and m not in RATIONAL_DIHEDRAL))
        self._length_cache: dict = {}
        self._build_roots()
        self._build_reflections()
        self.order = _group_order_from_cartan(self.cartan, range(rank))
        self._elements: Optional[list] = None
        self._bipartite = None
        self.degrees = self._compute_degrees()
        self.exponents = tuple(d - 1 for d in self.degrees)
        self.coxeter_number = self.degrees[-1]

    # ----- construction -------------------------------------------------
    @property
    def name(self) -> str:
        if self.family == "I2":
            return f"I2({self.m})"
        return f"{self.family}{self.rank}"

    @property
    def type_label(self) -> str:
        return self.name

    def __repr__(self) -> str:
        return f"CoxeterGroup({self.name}, |W|={self.order}, N={self.num_positive})"

    def _zero(self):
        return self.cartan[0][0] - self.cartan[0][0]

    def _one(self):
        return self.cartan[0][0] / 2

    def simple_reflect(self, i: int, beta: tuple) -> tuple:
        coef = sum((beta[j] * self.cartan[i][j] for j in range(self.rank)), self._zero())
        return tuple(b - coef if j == i else b for j, b in enumerate(beta))

    def _build_roots(self) -> None:
        n = self.rank
        zero, one = self._zero(), self._one()
        simple = [tuple(one if j == i else zero for j in range(n)) for i in range(n)]
        found = list(simple)
        index = {r: i for i, r in enumerate(simple)}
        parent: dict = {}
        queue = deque(range(n))
        while queue:
            b = queue.popleft()
            beta = found[b]
            for i in range(n):
                if b == i:
                    continue
                img = self.simple_reflect(i, beta)
                if img not in index:
                    if not all(to_float(x) > -1e-9 for x in img):
                        raise CoxeterError("root system construction produced a mixed-sign root")
                    index[img] = len(found)
                    parent[len(found)] = (i, b)
                    found.append(img)
                    queue.append(index[img])
        heights = [sum(to_float(x) for x in r) for r in found]
        order = sorted(range(len(found)), key=lambda j: (j >= n, round(heights[j], 9), j))
        relabel = {old: new for new, old in enumerate(order)}
        self.positive_roots = [found[j] for j in order]
        self._parent = {relabel[c]: (i, relabel[b]) for c, (i, b) in parent.items()}
        N = len(found)
        self.num_positive = N
        self.roots = self.positive_roots + [tuple(-x for x in r) for r in self.positive_roots]
        self.root_index = {r: j for j, r in enumerate(self.roots)}
        self.reflection_table = []
        for i in range(n):
            row = [self.root_index[self.simple_reflect(i, r)] for r in self.roots]
            self.reflection_table.append(tuple(row))
        self.generators = [tuple(row) for row in self.reflection_table]
        self.identity = tuple(range(2 * N))

    def _build_reflections(self) -> None:
        N = self.num_positive
        refl: list = [None] * N
        for i in range(self.rank):
            refl[i] = self.generators[i]
        pending = sorted(self._parent)
        done = set(range(self.rank))
        while pending:
            rest = []
            for c in pending:
                i, b = self._parent[c]
                if b in done:
                    s = self.generators[i]
                    refl[c] = self.multiply(self.multiply(s, refl[b]), s)
                    done.add(c)
                else:
                    rest.append(c)
            pending = rest
        self.reflections = refl
        self.reflection_index = {t: j for j, t in enumerate(refl)}

    def _compute_degrees(self) -> tuple[int, ...]:
        c = self.coxeter_element("bipartite").c
        h = self.element_order(c)
        mat = np.array([[to_float(x) for x in row] for row in self.matrix(c)], dtype=float)
        eig = np.linalg.eigvals(mat)
        exps = []
        for z in eig:
            theta = math.atan2(z.imag, z.real) % (2 * math.pi)
            exps.append(int(round(theta * h / (2 * math.pi))) % h)
        degrees = tuple(sorted(e + 1 for e in exps))
        # exact cross-checks: fixed spaces of powers of c, product and sum laws
        for e in range(1, h + 1):
            if h % e == 0:
                fixdim = self.rank - self.absolute_length(self.power(c, h // e))
                if fixdim != sum(1 for d in degrees if (d - 1) % e == 0):
                    raise CoxeterError("eigenvalue exponents disagree with exact fixed spaces")
        if math.prod(degrees) != self.order or sum(degrees) != self.num_positive + self.rank:
            raise CoxeterError("degree laws fail; realization is inconsistent")
        return degrees

    # ----- element arithmetic ---------------------------------------------
    def multiply(self, u: Perm, v: Perm) -> Perm:
        return tuple(u[j] for j in v)

    def product(self, *ws: Perm) -> Perm:
        out = self.identity
        for w in ws:
            out = tuple(out[j] for j in w)
        return out

    def invert(self, w: Perm) -> Perm:
        inv = [0] * len(w)
        for j, x in enumerate(w):
            inv[x] = j
        return tuple(inv)

    def power(self, w: Perm, e: int) -> Perm:
        if e < 0:
            w, e = self.invert(w), -e
        out, base = self.identity, w
        while e:
            if e & 1:
                out = self.multiply(out, base)
            base = self.multiply(base, base)
            e >>= 1
        return out

    def conjugate(self, w: Perm, g: Perm) -> Perm:
        """g w g^{-1}."""
        return self.product(g, w, self.invert(g))

    def element_order(self, w: Perm) -> int:
        k, x = 1, w
        while x != self.identity:
            x = self.multiply(x, w)
            k += 1
        return k

    def word(self, indices: Iterable[int]) -> Perm:
        return self.product(*[self.generators[i] for i in indices])

    def is_element(self, w) -> bool:
        N = self.num_positive
        if not isinstance(w, tuple) or len(w) != 2 * N or sorted(w) != list(range(2 * N)):
            return False
        return all(w[(j + N) % (2 * N)] == (w[j] + N) % (2 * N) for j in range(2 * N))

    def negate_index(self, j: int) -> int:
        return (j + self.num_positive) % (2 * self.num_positive)

    def is_positive(self, j: int) -> bool:
        return j < self.num_positive

    # ----- linear algebra -------------------------------------------------
    def matrix(self, w: Perm) -> list[list]:
        """Matrix of w in the simple-root basis (column j = w(alpha_j))."""
        n = self.rank
        cols = [self.roots[w[j]] for j in range(n)]
        return [[cols[j][r] for j in range(n)] for r in range(n)]

    def bilinear_form(self) -> list[list]:
        """Invariant symmetric form B on the simple-root basis."""
        n = self.rank
        d = [None] * n
        d[0] = self._one()
        stack = [0]
        while stack:
            i = stack.pop()
            for j in range(n):
                if j != i and d[j] is None and self.cartan[i][j] != 0:
                    d[j] = d[i] * self.cartan[i][j] / self.cartan[j][i]
                    stack.append(j)
        return [[d[i] * self.cartan[i][j] for j in range(n)] for i in range(n)]

    def absolute_length(self, w: Perm) -> int:
        """Reflection length: the rank of (M_w - I)."""
        got = self._length_cache.get(w)
        if got is not None:
            return got
        n = self.rank
        if self.crystallographic:
            rows = [[int(self.roots[w[j]][r]) - (1 if r == j else 0) for j in range(n)]
                    for r in range(n)]
            val = integer_matrix_rank(rows)
        else:
            one = self._one()
            rows = [[self.roots[w[j]][r] - (one if r == j else 0) for j in range(n)]
                    for r in range(n)]
            val = matrix_rank(rows)
        self._length_cache[w] = val
        return val

    def abs_leq(self, pi: Perm, mu: Perm) -> bool:
        """Absolute order: l_T(mu) = l_T(pi) + l_T(pi^{-1} mu)."""
        return self.absolute_length(mu) == self.absolute_length(pi) + self.absolute_length(
            self.multiply(self.invert(pi), mu))

    def standard_length(self, w: Perm) -> int:
        """Coxeter length: the number of positive roots sent negative."""
        N = self.num_positive
        return sum(1 for j in range(N) if w[j] >= N)

    def reflections_below(self, w: Perm) -> list[int]:
        """Indices of the positive roots beta with t_beta <=_T w."""
        lw = self.absolute_length(w)
        return [j for j, t in enumerate(self.reflections)
                if self.absolute_length(self.multiply(t, w)) == lw - 1]

    # ----- Coxeter elements -----------------------------------------------
    def bipartition(self) -> tuple[tuple[int, ...], tuple[int, ...]]:
        color = {0: 0}
        queue = deque([0])
        while queue:
            i = queue.popleft()
            for j in range(self.rank):
                if j != i and self.cartan[i][j] != 0 and j not in color:
                    color[j] = 1 - color[i]
                    queue.append(j)
        left = tuple(i for i in range(self.rank) if color[i] == 0)
        right = tuple(i for i in range(self.rank) if color[i] == 1)
        return left, right

    def coxeter_element(self, mode: str = "bipartite") -> CoxeterElementData:
        """Bipartite c = l r from the 2-coloring, or c = s_1 s_2 ... s_n."""
        if mode == "bipartite":
            if self._bipartite is None:
                left, right = self.bipartition()
                lw, rw = self.word(left), self.word(right)
                self._bipartite = CoxeterElementData(self.multiply(lw, rw), lw, rw, left, right)
            return self._bipartite
        if mode in ("standard", "standard_order"):
            c = self.word(range(self.rank))
            return CoxeterElementData(c, c, self.identity, tuple(range(self.rank)), (), "standard")
        raise CoxeterError(f"unknown Coxeter element mode {mode!r}")

    # ----- whole-group enumeration ----------------------------------------
    def elements(self, cap: Optional[int] = None) -> list[Perm]:
        """All elements by breadth-first search over simple generators."""
        from .config import caps

        limit = cap if cap is not None else caps().max_group_order
        if self.order > limit:
            raise CoxeterError(f"|W| = {self.order} exceeds the enumeration cap {limit}")
        if self._elements is None:
            self._elements = list(self._bfs(self.generators)[0])
        return self._elements

    def _bfs(self, gens: Sequence[Perm]) -> tuple[dict, Counter]:
        dist = {self.identity: 0}
        queue = deque([self.identity])
        counts: Counter = Counter({0: 1})
        while queue:
            w = queue.popleft()
            d = dist[w]
            for g in gens:
                x = tuple(w[j] for j in g)
                if x not in dist:
                    dist[x] = d + 1
                    counts[d + 1] += 1
                    queue.append(x)
        return dist, counts

    def length_generating_polynomials(self, cap: Optional[int] = None):
        """(P_S, P_T, product formula for P_S, product formula for P_T)."""
        from .config import caps

        limit = cap if cap is not None else caps().max_group_order
        if self.order > limit:
            raise CoxeterError(f"|W| = {self.order} exceeds the enumeration cap {limit}")
        dist_s, cs = self._bfs(self.generators)
        dist_t, ct = self._bfs(self.reflections)
        if self._elements is None:
            self._elements = list(dist_s)
        for w, d in dist_t.items():
            self._length_cache.setdefault(w, d)
        p_s = IntPolynomial([cs[i] for i in range(max(cs) + 1)])
        p_t = IntPolynomial([ct[i] for i in range(max(ct) + 1)])
        formula_s = IntPolynomial([1])
        formula_t = IntPolynomial([1])
        for d in self.degrees:
            formula_s = formula_s * IntPolynomial.q_integer(d)
            formula_t = formula_t * IntPolynomial([1, d - 1])
        return p_s, p_t, formula_s, formula_t

    def conjugacy_class(self, w: Perm) -> set:
        seen = {w}
        queue = deque([w])
        while queue:
            x = queue.popleft()
            for s in self.generators:
                y = self.product(s, x, s)
                if y not in seen:
                    seen.add(y)
                    queue.append(y)
        return seen

    def longest_element_is_minus_one(self) -> bool:
        """Whether some element acts on the roots as the antipodal map."""
        N = self.num_positive
        target = tuple(self.negate_index(j) for j in range(2 * N))
        # the longest element is the unique element sending every positive root negative
        w = self.identity
        while True:
            desc = [i for i in range(self.rank) if w[i] < N]
            if not desc:
                break
            w = self.multiply(w, self.generators[desc[0]])
        return w == target

    # ----- parabolic subgroups --------------------------------------------
    def subsystem_simple_roots(self, positive: Sequence[int]) -> list[int]:
        """Simple system of a reflection subgroup with the given positive roots."""
        pos = set(positive)
        simple = []
        for b in positive:
            t = self.reflections[b]
            if all(t[g] < self.num_positive for g in pos if g != b):
                simple.append(b)
        return simple

    def parabolic_roots(self, w: Perm) -> list[int]:
        return self.reflections_below(w)

    def parabolic_type(self, w: Perm) -> tuple[str, ...]:
        """Isomorphism type (sorted component labels) of the parabolic W_w."""
        return classify_root_subsystem(self, self.parabolic_roots(w))

    def subsystem_orbit_key(self, positive: Sequence[int]) -> tuple[int, ...]:
        """Canonical label of the W-orbit of a root subsystem (its conjugacy class)."""
        N = self.num_positive
        start = frozenset(positive)
        seen = {start}
        queue = deque([start])
        while queue:
            cur = queue.popleft()
            for s in self.generators:
                img = frozenset(s[j] if s[j] < N else s[j] - N for j in cur)
                if img not in seen:
                    seen.add(img)
                    queue.append(img)
        return min(tuple(sorted(x)) for x in seen)

    def parabolic_conjugacy_key(self, w: Perm) -> tuple[int, ...]:
        return self.subsystem_orbit_key(self.parabolic_roots(w))

    # ----- dihedral closed form -------------------------------------------
    def dihedral_model(self) -> dict:
        """For I2(m): map ('rot', j) -> c^j and ('ref', j) -> s_0 c^j."""
        if self.family != "I2":
            raise CoxeterError("dihedral model only exists for I2(m)")
        c = self.multiply(self.generators[0], self.generators[1])
        out = {}
        x = self.identity
        for j in range(self.m):
            out[("rot", j)] = x
            out[("ref", j)] = self.multiply(self.generators[0], x)
            x = self.multiply(x, c)
        return out


def dihedral_multiply(m: int, a: tuple, b: tuple) -> tuple:
    """Closed-form product in the dihedral group of order 2m."""
    (ka, ia), (kb, ib) = a, b
    if ka == "rot" and kb == "rot":
        return ("rot", (ia + ib) % m)
    if ka == "rot":
        return ("ref", (ib - ia) % m)
    if kb == "rot":
        return ("ref", (ia + ib) % m)
    return ("rot", (ib - ia) % m)


def coxeter_graph_label(group: CoxeterGroup, simple: Sequence[int]) -> list[str]:
    """Classify the Coxeter graph on reflections of the given roots into labels."""
    nodes = list(simple)
    k = len(nodes)
    order = {}
    for a in range(k):
        for b in range(a + 1, k):
            t = group.multiply(group.reflections[nodes[a]], group.reflections[nodes[b]])
            m = group.element_order(t)
            if m > 2:
                order[(a, b)] = order[(b, a)] = m
    adj = {a: [b for b in range(k) if (a, b) in order] for a in range(k)}
    seen, labels = set(), []
    for s in range(k):
        if s in seen:
            continue
        comp, stack = [], [s]
        seen.add(s)
        while stack:
            u = stack.pop()
            comp.append(u)
            for v in adj[u]:
                if v not in seen:
                    seen.add(v)
                    stack.append(v)
        labels.append(_classify_component(comp, adj, order))
    return sorted(labels)


def _classify_component(comp: list[int], adj: dict, order: dict) -> str:
    n = len(comp)
    if n == 1:
        return "A1"
    edges = sorted(order[(a, b)] for a in comp for b in adj[a] if a < b)
    if n == 2:
        m = edges[0]
        return {3: "A2", 4: "B2"}.get(m, f"I2({m})")
    degs = {a: len(adj[a]) for a in comp}
    branch = [a for a in comp if degs[a] == 3]
    if branch:
        b = branch[0]
        arms = []
        for nb in adj[b]:
            length, prev, cur = 1, b, nb
            while degs[cur] == 2:
                nxt = [x for x in adj[cur] if x != prev][0]
                prev, cur = cur, nxt
                length += 1
            arms.append(length)
        arms.sort()
        if arms[0] == 1 and arms[1] == 1:
            return f"D{n}"
        return f"E{n}"
    # path
    ends = [a for a in comp if degs[a] == 1]
    path = [ends[0]]
    while len(path) < n:
        nxt = [x for x in adj[path[-1]] if x not in path][0]
        path.append(nxt)
    labels = [order[(path[i], path[i + 1])] for i in range(n - 1)]
    if all(x == 3 for x in labels):
        return f"A{n}"
    if labels[0] == 4 or labels[-1] == 4:
        if n == 4 and labels[1] == 4:
            return "F4"
        return f"B{n}"
    if labels == [3, 4, 3]:
        return "F4"
    if labels[0] == 5 or labels[-1] == 5:
        return f"H{n}"
    raise CoxeterError(f"unrecognized Coxeter graph with labels {labels}")


def classify_root_subsystem(group: CoxeterGroup, positive: Sequence[int]) -> tuple[str, ...]:
    if not positive:
        return ()
    simple = group.subsystem_simple_roots(positive)
    return tuple(coxeter_graph_label(group, simple))


_GROUP_CACHE: dict = {}


def build_group(type_label: str, rank: Optional[int] = None, dihedral_m: Optional[int] = None) -> CoxeterGroup:
    """Build (and cache) a Coxeter group from a family letter and rank, or a label."""
    if rank is None:
        family, rank, m = parse_type(type_label)
    else:
        family = type_label.upper()
        m = dihedral_m
        if family in ("G",):
            family, m = "I2", 6
        if family == "I" or family == "I2":
            family = "I2"
    if family == "I2" and m in (None,):
        raise CoxeterError("I2(m) requires m >= 3")
    key = (family, rank, m if family == "I2" else None)
    if key not in _GROUP_CACHE:
        _GROUP_CACHE[key] = CoxeterGroup(family, rank, key[2])
    return _GROUP_CACHE[key]


# ----- classical permutation models -----------------------------------------

def root_e_vector(group: CoxeterGroup, j: int) -> tuple[int, ...]:
    """Coordinates of root j in the standard e-basis (types A and B only)."""
    c = [int(x) for x in group.roots[j]]
    n = group.rank
    if group.family == "A":
        return tuple([c[0]] + [c[a] - c[a - 1] for a in range(1, n)] + [-c[n - 1]])
    if group.family == "B":
        return tuple([c[0]] + [c[a] - c[a - 1] for a in range(1, n)])
    raise CoxeterError("e-basis coordinates implemented for types A and B")


def _e_index(group: CoxeterGroup) -> dict:
    key = "_e_index_cache"
    cache = getattr(group, key, None)
    if cache is None:
        cache = {root_e_vector(group, j): j for j in range(2 * group.num_positive)}
        setattr(group, key, cache)
    return cache


def type_a_permutation(group: CoxeterGroup, w: Perm) -> tuple[int, ...]:
    """The permutation sigma of [n+1] (one-line, 1-based) acting like w."""
    n1 = group.rank + 1
    sigma = [0] * n1
    idx = _e_index(group)
    for a in range(n1):
        b = (a + 1) % n1
        v = [0] * n1
        v[a], v[b] = 1, -1
        img = root_e_vector(group, w[idx[tuple(v)]])
        sigma[a] = img.index(1) + 1
    return tuple(sigma)


def element_from_type_a_permutation(group: CoxeterGroup, sigma: Sequence[int]) -> Perm:
    idx = _e_index(group)
    out = []
    for j in range(2 * group.num_positive):
        v = root_e_vector(group, j)
        img = [0] * len(v)
        for a, x in enumerate(v):
            if x:
                img[sigma[a] - 1] = x
        out.append(idx[tuple(img)])
    return tuple(out)


def type_b_signed_permutation(group: CoxeterGroup, w: Perm) -> tuple[int, ...]:
    """Signed permutation: entry a is +-b where w(e_a) = +-e_b (1-based)."""
    n = group.rank
    idx = _e_index(group)
    out = []
    for a in range(n):
        v = [0] * n
        v[a] = 1
        img = root_e_vector(group, w[idx[tuple(v)]])
        b = next(i for i, x in enumerate(img) if x)
        out.append((b + 1) * img[b])
    return tuple(out)


def element_from_signed_permutation(group: CoxeterGroup, sigma: Sequence[int]) -> Perm:
    idx = _e_index(group)
    out = []
    for j in range(2 * group.num_positive):
        v = root_e_vector(group, j)
        img = [0] * len(v)
        for a, x in enumerate(v):
            if x:
                s = sigma[a]
                img[abs(s) - 1] = x * (1 if s > 0 else -1)
        out.append(idx[tuple(img)])
    return tuple(out)


def cycle_notation(sigma: Sequence[int], labels: Optional[Sequence[int]] = None) -> str:
    """Cycle notation of a one-line permutation of 1..m (fixed points omitted)."""
    m = len(sigma)
    labels = list(labels) if labels is not None else list(range(1, m + 1))
    pos = {lab: i for i, lab in enumerate(labels)}
    seen, parts = set(), []
    for lab in labels:
        if lab in seen:
            continue
        cyc, x = [], lab
        while x not in seen:
            seen.add(x)
            cyc.append(x)
            x = sigma[pos[x]]
        if len(cyc) > 1:
            parts.append("(" + ",".join(str(v) for v in cyc) + ")")
    return "".join(parts) or "()"


def parse_cycles(text: str, m: int) -> tuple[int, ...]:
    """One-line form of a permutation of 1..m given in cycle notation."""
    sigma = list(range(1, m + 1))
    for cyc in re.findall(r"\(([^)]*)\)", text):
        items = [int(x) for x in re.split(r"[,\s]+", cyc.strip()) if x] if ("," in cyc or " " in cyc.strip()) \
            else [int(ch) for ch in cyc]
        for a, b in zip(items, items[1:] + items[:1]):
            sigma[a - 1] = b
    return tuple(sigma)
