"""Twisted nerves: cyclic operators on the classical nerve of a group, and their homology."""
import numpy as np

from crossnerve import homology, twisted_bar, validate_truncation
from crossnerve.finite import PreconditionError, cyclic_group, quaternion_group, symmetric_group

C2, C4, Q8, S3 = cyclic_group(2), cyclic_group(4), quaternion_group(), symmetric_group(3)

# untwisted: the canonical cyclic structure on BC2
X = twisted_bar("cyclic", C2, "0", 5)
print("H_*(BC2):", "; ".join(str(h) for h in homology(X, 4)))

# twisting by a central element of order 2 keeps tau^(n+1) = 1 and (tau omega)^2 = 1
Y = twisted_bar("dihedral", Q8, "-1", 3)
print("Q8 twisted by -1 valid:", validate_truncation(Y).ok)
print("tau^3 on level 2 is identity:", np.array_equal(Y.act_word(2, ["tau"] * 3), np.arange(Y.size(2))))
print("H_*(BQ8):", "; ".join(str(h) for h in homology(Y, 2)))

# tau on a sample simplex of C4 twisted by 2
Z = twisted_bar("cyclic", C4, "2", 2)
k = Z.levels[2].index(("1", "3"))
print("tau(1,3) =", Z.levels[2][Z.actions[2, "tau"][k]])

# a non-central twist is refused...
try:
    twisted_bar("cyclic", S3, "(12)", 3)
except PreconditionError as exc:
    print("refused:", exc)

# ...and forcing it through shows why: tau^(n+1) conjugates by z instead of fixing
W = twisted_bar("cyclic", S3, "(12)", 3, check=False)
print("failing relations:", sorted(validate_truncation(W).relations_failed()))
