"""
Qutrits: closed form, ties, and growing the optimum one box at a time
=====================================================================

For d=3 the optimum depends on n mod 3 and on a few surds r0..r4 whose
ceilings are computed with integer arithmetic only.
"""

from qudit_ns import check_local_optimality, maximize_qutrit_closed, maximum_chain, qutrit_thresholds
from qudit_ns.verify import tie_family_ns

for n in (7, 8, 49, 50):
    opt = maximize_qutrit_closed(n)
    print(n, [str(p) for p in opt.argmax], opt.max_multiplicity)

# k = 1: r3 = (-8 + sqrt(64))/4 = 0 exactly, so n = 4 has two maximizers.
t = qutrit_thresholds(1)
print("r3 integral:", t.r3_integral, "ceil r3:", t.ceil_r3)
print(maximize_qutrit_closed(4).argmax)

# Tied n up to 300 come from a handful of quadratic families in k.
print(sorted(tie_family_ns(300)))

# None of the six one-box moves improves an optimum.
rep = check_local_optimality(maximize_qutrit_closed(49).partition)
for m in rep.moves:
    print(f"condition ({m.condition}) -> {m.target}: sign {m.sign:+d}")

# Each optimum grows into the next; ties collapse to their componentwise max.
for opt in maximum_chain(3, 12):
    print(opt.n, [str(p) for p in opt.argmax])
