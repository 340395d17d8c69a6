"""
Blocks of the collective-rotation algebra
=========================================

Three qutrits (d=3, n=3) under U (x) U (x) U. Each partition labels a block
I_f (x) M_g; f is the dimension of the noiseless subsystem the block
carries and g the size of the irrep the noise acts through.
"""

from qudit_ns import decomposition, irrep_dimension, multiplicity, ssyt_count_brute, syt_count_hook

table = decomposition(3, 3)
for block in table.blocks:
    print(block.partition, "f =", block.multiplicity, "g =", block.dimension)

# The blocks fill the whole 27-dimensional space.
print("sum f*g =", table.total, "= 3^3:", table.consistent)

# f counts standard tableaux and g counts semistandard ones; both can be
# checked by independent counting.
p = (2, 1, 0)
print(multiplicity(p), syt_count_hook(p))
print(irrep_dimension(p), ssyt_count_brute(p, 3))

# Blocks with g = 1 are decoherence-free subspaces: the noise acts as a phase.
dfs = [b for b in decomposition(3, 6).blocks if b.dimension == 1]
print("DFS blocks for 6 qutrits:", [(str(b.partition), b.multiplicity) for b in dfs])
