"""Print Fuss-Catalan numbers and Fuss-Narayana vectors for every irreducible type up to rank 4."""

from fusscat import analytics as A
from fusscat.cli import expand_types

TYPES = expand_types("A1..A4,B2..B4,D4,F4,H3,H4,I2(5)..I2(8)")

if __name__ == "__main__":
    print(f"{'type':8} {'h':>3} {'Cat1':>6} {'Cat2':>8} {'Cat+2':>8}  Nar^(2)")
    for t in TYPES:
        d = A.group_data(t)
        nar = [int(x) for x in A.narayana_vector(t, 2)]
        print(f"{t:8} {d.h:>3} {A.fuss_catalan(t, 1):>6} {A.fuss_catalan(t, 2):>8} "
              f"{A.positive_fuss_catalan(t, 2):>8}  {nar}")
