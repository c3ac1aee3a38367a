"""The three k = 2 Fuss-Catalan objects of type A2 side by side, with their triangles."""

from fusscat.cluster import build_cluster_complex
from fusscat.coxeter import build_group
from fusscat.noncrossing import build_nc, build_nck
from fusscat.nonnesting import shi_chambers
from fusscat.triangles import triangles

K = 2

if __name__ == "__main__":
    g = build_group("A2")
    nck = build_nck(build_nc(g), K)
    print(f"NC^({K})(A2): {len(nck)} elements, rank sizes {nck.rank_sizes()}")
    chambers = shi_chambers(g, K)
    print(f"positive Shi chambers: {len(chambers)}, bounded: {sum(c.bounded for c in chambers)}")
    C = build_cluster_complex(g, K)
    print(f"cluster complex: f = {C.f_vector}, h = {C.h_vector}")
    print("facets:")
    for f in C.facets:
        print("   ", ", ".join(C.vertex_name(v) for v in f))
    T = triangles(g, K)
    print("M =", T.M.pretty(("x", "y")))
    print("H =", T.H.pretty(("s", "t")))
    print("F =", T.F.pretty(("p", "q")))
    print("transforms:", "all agree" if all(T.transforms().values()) else T.transforms())
