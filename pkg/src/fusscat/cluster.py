"""Cluster complexes and their k-divisible generalizations.

Vertices are colored almost-positive roots ``(j, i)``: ``j`` indexes the group's
roots (``j < N`` positive, ``j = N + s`` the negative simple root -alpha_s) and
``i`` is the color, always 1 for negative simple roots.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from math import gcd
from typing import Optional, Sequence

from .config import check_cap
from .coxeter import CoxeterGroup, build_group
from .posets import bits


class ClusterError(ValueError):
    pass


def _group(G) -> CoxeterGroup:
    return build_group(G) if isinstance(G, str) else G


@dataclass
class TauMaps:
    """The involutions tau_l, tau_r and tau = tau_l tau_r on almost-positive roots."""

    group: CoxeterGroup
    domain: list  # root indices: positives then negative simples
    left: tuple
    right: tuple
    tau_l: dict
    tau_r: dict

    def tau(self, j: int) -> int:
        return self.tau_l[self.tau_r[j]]

    def tau_orbit(self, j: int) -> list[int]:
        out = [j]
        x = self.tau(j)
        while x != j:
            out.append(x)
            x = self.tau(x)
        return out


def tau_maps(G, bipartition: Optional[tuple] = None) -> TauMaps:
    g = _group(G)
    N, n = g.num_positive, g.rank
    left, right = bipartition or g.bipartition()
    lw, rw = g.word(left), g.word(right)
    domain = list(range(N)) + [N + s for s in range(n)]
    neg_left = {N + s for s in left}
    neg_right = {N + s for s in right}
    tau_l = {j: (j if j in neg_right else lw[j]) for j in domain}
    tau_r = {j: (j if j in neg_left else rw[j]) for j in domain}
    for t in (tau_l, tau_r):
        if set(t.values()) != set(domain):
            raise ClusterError("tau does not preserve the almost-positive roots")
    return TauMaps(g, domain, tuple(left), tuple(right), tau_l, tau_r)


def _nonzero(x) -> bool:
    return x != x - x


@dataclass
class ClusterComplex:
    group: CoxeterGroup
    k: int
    vertices: list
    tau_star: list  # permutation of vertex indices
    crossing: list  # adjacency bitsets
    facets: list = field(default_factory=list)
    f_vector: list = field(default_factory=list)

    @property
    def n(self) -> int:
        return self.group.rank

    def index(self, v: tuple) -> int:
        return self._index[v]

    def __post_init__(self):
        self._index = {v: i for i, v in enumerate(self.vertices)}

    def crosses(self, a: int, b: int) -> bool:
        return bool(self.crossing[a] >> b & 1)

    def is_face(self, face: Sequence[int]) -> bool:
        return all(not self.crosses(a, b) for a in face for b in face)

    @property
    def h_vector(self) -> list[int]:
        return h_from_f(self.f_vector)

    def positive_facets(self) -> list:
        N = self.group.num_positive
        return [f for f in self.facets if all(self.vertices[v][0] < N for v in f)]

    def vertex_name(self, v: int) -> str:
        j, i = self.vertices[v]
        g = self.group
        N = g.num_positive
        if j >= N:
            return f"-a{j - N + 1}^1"
        c = g.positive_roots[j]
        if all(x in (0, 1) for x in c):
            body = "".join(str(s + 1) for s, x in enumerate(c) if _nonzero(x))
            return f"a{body}^{i}"
        return f"a({','.join(map(str, c))})^{i}"

    def tau_star_order(self) -> int:
        out = 1
        seen = set()
        for v in range(len(self.vertices)):
            if v in seen:
                continue
            length, x = 0, v
            while True:
                seen.add(x)
                x = self.tau_star[x]
                length += 1
                if x == v:
                    break
            out = out * length // gcd(out, length)
        return out

    def to_json(self) -> dict:
        return {"type": self.group.name, "k": self.k,
                "vertices": [self.vertex_name(v) for v in range(len(self.vertices))],
                "crossing": [sorted(bits(m)) for m in self.crossing],
                "facets": [list(f) for f in self.facets],
                "f_vector": self.f_vector, "h_vector": self.h_vector}


def colored_roots(g: CoxeterGroup, k: int) -> list[tuple[int, int]]:
    N, n = g.num_positive, g.rank
    return [(N + s, 1) for s in range(n)] + [(j, i) for i in range(1, k + 1) for j in range(N)]


def tau_star_map(T: TauMaps, k: int, vertices: Sequence[tuple]) -> list[int]:
    """tau* on colored roots: alpha^i -> alpha^(i+1) for positive alpha and i < k,
    otherwise (tau alpha)^1."""
    N = T.group.num_positive
    index = {v: i for i, v in enumerate(vertices)}
    out = []
    for j, i in vertices:
        if j < N and i < k:
            out.append(index[(j, i + 1)])
        else:
            out.append(index[(T.tau(j), 1)])
    return out


def build_cluster_complex(G, k: int = 1, *, bipartition: Optional[tuple] = None,
                          faces: bool = True) -> ClusterComplex:
    g = _group(G)
    if k < 1:
        raise ClusterError("k must be positive")
    N, n = g.num_positive, g.rank
    check_cap("max_cluster_vertices", k * N + n)
    T = tau_maps(g, bipartition)
    verts = colored_roots(g, k)
    ts = tau_star_map(T, k, verts)
    m = len(verts)
    # base relation: -alpha_s^1 crosses beta^j iff alpha_s occurs in beta
    base = [0] * m
    for a, (j, _) in enumerate(verts):
        if j >= N:
            s = j - N
            for b, (jb, _) in enumerate(verts):
                if jb < N and _nonzero(g.positive_roots[jb][s]):
                    base[a] |= 1 << b
    cross = [0] * m
    for a in range(m):
        # walk the tau* orbit of a to a negative simple root, carrying every b along
        shift = list(range(m))
        x, steps = a, 0
        while verts[x][0] < N:
            x = ts[x]
            shift = [ts[y] for y in shift]
            steps += 1
            if steps > 2 * m * (k + 1):
                raise ClusterError("tau* orbit misses the negative simple roots")
        for b in range(m):
            if b != a and base[x] >> shift[b] & 1:
                cross[a] |= 1 << b
    C = ClusterComplex(g, k, verts, ts, cross)
    if faces:
        C.f_vector, C.facets = _faces(cross, n)
    return C


def _faces(cross: list, n: int) -> tuple[list[int], list[tuple]]:
    m = len(cross)
    f = [0] * (n + 1)
    facets = []
    full = (1 << m) - 1

    def rec(face, allowed, start):
        f[len(face)] += 1
        if len(face) == n:
            facets.append(tuple(face))
            return
        if len(face) > n:
            raise ClusterError("face larger than the rank")
        for v in bits(allowed >> start << start):
            rec(face + [v], allowed & ~cross[v] & ~(1 << v), v + 1)

    rec([], full, 0)
    return f, facets


def h_from_f(f: Sequence[int]) -> list[int]:
    """h-vector from sum f_i (x-1)^(n-i) = sum h_i x^(n-i)."""
    from math import comb

    n = len(f) - 1
    h = [0] * (n + 1)
    for i, fi in enumerate(f):
        d = n - i
        # (x - 1)^d contributes comb(d, t) (-1)^(d - t) x^t, i.e. h_{n - t}
        for t in range(d + 1):
            h[n - t] += fi * comb(d, t) * (-1) ** (d - t)
    return h


def is_pure(C: ClusterComplex) -> bool:
    """Every maximal face has n vertices."""
    m = len(C.vertices)
    full = (1 << m) - 1
    ok = True

    def rec(face, allowed, start, compat):
        nonlocal ok
        if compat == 0 and len(face) != C.n:
            ok = False
        for v in bits(allowed >> start << start):
            nxt = allowed & ~C.crossing[v] & ~(1 << v)
            rec(face + [v], nxt, v + 1, compat & ~C.crossing[v] & ~(1 << v))

    rec([], full, 0, full)
    return ok


def crossing_is_symmetric(C: ClusterComplex) -> bool:
    m = len(C.vertices)
    return all(C.crosses(a, b) == C.crosses(b, a) for a in range(m) for b in range(m))


def crossing_is_tau_invariant(C: ClusterComplex) -> bool:
    m = len(C.vertices)
    t = C.tau_star
    return all(C.crosses(a, b) == C.crosses(t[a], t[b]) for a in range(m) for b in range(m))


def expected_tau_star_order(g: CoxeterGroup, k: int) -> int:
    h = g.coxeter_number
    return (k * h + 2) // 2 if g.longest_element_is_minus_one() else k * h + 2


def embedded_copy_ok(C: ClusterComplex, color: int) -> bool:
    """The colored subcomplex on -Pi^1 and (Phi+)^color has the crossing relation of Delta(W)."""
    base = build_cluster_complex(C.group, 1, faces=False)
    N = C.group.num_positive
    sub = [v for v, (j, i) in enumerate(C.vertices) if j >= N or i == color]
    to_base = {v: base.index((C.vertices[v][0], 1)) for v in sub}
    return all(C.crosses(a, b) == base.crosses(to_base[a], to_base[b]) for a in sub for b in sub)


def tau_orbits_meet_negatives(T: TauMaps) -> bool:
    N = T.group.num_positive
    return all(any(x >= N for x in T.tau_orbit(j)) for j in T.domain)


def export_json(C: ClusterComplex) -> str:
    return json.dumps(C.to_json(), sort_keys=True)
