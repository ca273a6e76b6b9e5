"""
Counting nondegenerate hypermatrices over F_q
=============================================

"""
import time

from hyperdet.oracles import count_formula, enumerate_nondegenerate, gl_order

# the closed form, and the same number as |GL_k| |GL_{k+1}| / (q - 1):
# the nondegenerate hypermatrices form one free orbit modulo scalars
for k in (1, 2, 3):
    for q in (2, 3, 5):
        f = count_formula(k, q)
        print(k, q, f, f * (q - 1) == gl_order(k, q) * gl_order(k + 1, q))

# exhaustive check, reduction and pencil oracle side by side
for k, q in [(1, 2), (1, 3), (1, 5), (1, 7), (2, 2)]:
    t0 = time.perf_counter()
    res = enumerate_nondegenerate(k, q)
    dt = time.perf_counter() - t0
    print(f"k={k} q={q}: {res.total} states, algorithm {res.algorithm}, "
          f"oracle {res.oracle}, formula {count_formula(k, q)} ({dt:.2f}s)")

# k=2, q=3 has 3^12 states and takes a few tens of seconds
# res = enumerate_nondegenerate(2, 3)
