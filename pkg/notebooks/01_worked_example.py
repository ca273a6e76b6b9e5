"""
Reducing a 2 x 3 x 4 hypermatrix to I_{3,4}
===========================================

"""
from fractions import Fraction

from hyperdet import QQ, Hypermatrix, canonicalize, hyperdeterminant, replay
from hyperdet.hypermatrix import apply_group

# slice 0 is already [I_3; 0], slice 1 carries the data
M = Hypermatrix(QQ, 3, [
    [[1, 0, 0], [0, 1, 0], [0, 0, 1], [0, 0, 0]],
    [[1, 0, 0], [1, 0, 0], [-3, 3, 0], [1, 2, 1]],
])
print(M.display())

out = canonicalize(M)
print(out.status, len(out.log), "operations")
for rec in out.log:
    print(" ", rec.side, rec.kind, rec.i, rec.j, rec.scalar)

# the final hypermatrix is I_{3,4}
print(out.hypermatrix.display())

# replaying the log gives the same thing, and so does acting with (A_acc, B_acc)
assert replay(M, out.log) == out.hypermatrix
assert apply_group(out.group, M) == out.hypermatrix

# Det(M) = detA^-(k+1) detB^-k
print("detA =", out.detA, " detB =", out.detB)
d = hyperdeterminant(M)
print("Det =", d.value, "using", d.op_count, "field operations")
assert d.value == Fraction(1) / (out.detA ** 4 * out.detB ** 3)
