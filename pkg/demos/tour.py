"""A short walk through the package: a family member, its representation,
an obstruction, and the tree construction on small sizes.

    python3 demos/tour.py
"""

import numpy as np

from hoffman.catalog import make_c, make_esimilar_seedling, make_psi_c
from hoffman.classify import construct_ir_trees_from_F
from hoffman.hoffman import lambda_min_cmp3, special_matrix
from hoffman.representation import solve_reduced_integral, verify_reduced
from hoffman.trees import from_canonical_code


def show_c(m):
    c = make_c(m)
    print(f"c_{m}: {len(c.slim)} slim, {len(c.fat)} fat, lambda_min vs -3: {lambda_min_cmp3(c).value}")
    print(special_matrix(c))
    psi = make_psi_c(m)
    print("closed-form psi verifies:", verify_reduced(c, psi))
    found = solve_reduced_integral(c)
    print(f"solver: {found.outcome.value} in dimension {found.rep.dim}")
    gram = found.rep.gram(c.slim)
    print("gram == Sp + 3I:", np.array_equal(gram, special_matrix(c) + 3 * np.eye(m, dtype=int)))


def show_obstruction():
    h = make_esimilar_seedling("E6")
    res = solve_reduced_integral(h)
    print(f"\nfat seedling over E6~: lambda_min vs -3 = {lambda_min_cmp3(h).value}, "
          f"solver says {res.outcome.value} after {res.nodes} nodes")


def show_trees(n_max=14):
    codes = construct_ir_trees_from_F(n_max)
    print(f"\nrepresentable trees with spectral radius 3 on <= {n_max} vertices: {len(codes)}")
    for code in sorted(codes, key=len):
        t = from_canonical_code(code)
        degs = sorted((len(a) for a in t.adj), reverse=True)
        print(f"  n={t.n:2d}  degrees {degs}")


if __name__ == "__main__":
    show_c(5)
    show_obstruction()
    show_trees()
