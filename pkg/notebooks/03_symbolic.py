"""
The hyperdeterminant as a polynomial
====================================

With slice 0 fixed to [I_k; 0] the reduction runs over Q(b_00, ..., b_kk-1)
and the result is a polynomial in the entries of slice 1.
"""
import time

from hyperdet import symbolic_hyperdet, variable_names
from hyperdet.determinant import eval_consistency_check

for k in (1, 2, 3, 4):
    t0 = time.perf_counter()
    p = symbolic_hyperdet(k)
    dt = time.perf_counter() - t0
    coeffs = p.coefficients()
    print(f"k={k}: {len(p)} terms, degree {p.total_degree()}, "
          f"coefficients in [{min(coeffs)}, {max(coeffs)}], {dt:.2f}s")

print(symbolic_hyperdet(2).to_text(variable_names(2)))

# cross-check against the numeric path at random points of F_10007
print(eval_consistency_check(3, 200).ok)

# the general k=2 case, both slices symbolic
g = symbolic_hyperdet(2, reduced=False)
print(len(g), "terms in the general k=2 polynomial, degree", g.total_degree())
