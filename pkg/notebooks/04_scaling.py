"""
Operation counts as k doubles
=============================

"""
import random
import time

from hyperdet import GF, hyperdeterminant
from hyperdet.hypermatrix import Hypermatrix

F = GF(10007)
rng = random.Random(0)

prev = None
for k in (2, 4, 8, 16, 32, 64):
    M = Hypermatrix._wrap(F, k, [[[F.random(rng) for _ in range(k)] for _ in range(k + 1)]
                                 for _ in range(2)])
    t0 = time.perf_counter()
    res = hyperdeterminant(M)
    ms = (time.perf_counter() - t0) * 1000
    ratio = "" if prev is None else f"  ratio {res.op_count / prev:.2f}"
    print(f"k={k:3d}  ops={res.op_count:10d}  {ms:9.1f} ms{ratio}")
    prev = res.op_count

# the ratio tends to 16: about k^3 elementary operations of length about k each
