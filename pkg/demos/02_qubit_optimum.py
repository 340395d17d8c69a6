"""
Largest noiseless subsystem on qubits
=====================================

For d=2 the block (n-r, r) has multiplicity C(n,r) - C(n,r-1). The best r
is not n/2 but floor(((n+2) - sqrt(n+2))/2).
"""

from qudit_ns import maximize_brute, maximize_qubit_closed
from qudit_ns.cli import qubit_table_rows

print(" n  r*     f  floor(log2 f)")
for n, r, f, bits in qubit_table_rows(15):
    print(f"{n:2d} {r:3d} {f:5d} {bits:4d}")

# The closed form agrees with scanning every partition.
for n in (10, 100, 1000):
    closed, brute = maximize_qubit_closed(n), maximize_brute(2, n)
    print(n, closed.partition, closed.same_result(brute))

# When n + 2 is a perfect square the neighbouring partition ties.
print(maximize_qubit_closed(7).argmax)
