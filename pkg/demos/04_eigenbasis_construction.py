"""Building every eigenvector by lifting kernel vectors.

Eigenvectors live inside Specht submodules of the word space.  Each one
arises from a kernel vector of a smaller module, pushed up by lifting
operators: insert a letter, then correct with letter replacements so the
result lands back in a Specht module.  The eigenvalue shifts by a known
integer at each step, so the whole eigenbasis is assembled without solving
a single eigenproblem.
"""

from shuffle_spectra import (
    eigenbasis,
    eigenbasis_for_evaluation,
    kernel_basis,
    lift,
    r2r,
)

# the kernel of the three-letter module with shape (2,1): one vector
(kernel_vector,) = kernel_basis((2, 1))
print("kernel vector of the (2,1) module:", kernel_vector)

# lifting it by row 2 produces an eigenvector one size up, eigenvalue 4
lifted = lift((2, 1), 2, kernel_vector)
print("lift into (2,2):", lifted)
assert r2r(lifted) == 4 * lifted

# the full eigenbasis of the (3,2) module: five vectors from four strips
print("\neigenbasis of the (3,2) module:")
for entry in eigenbasis((3, 2)):
    print(f"  strip {entry.outer}/{entry.inner}, eigenvalue {entry.eigenvalue}")
    for v in entry.vectors:
        assert r2r(v) == entry.eigenvalue * v
        print(f"    {v}")

# pushing Specht eigenbases through all embeddings fills the word space
pairs = eigenbasis_for_evaluation((2, 2))
print("\neigenbasis of the evaluation-(2,2) word space:")
for tableau, entry in pairs:
    for v in entry.vectors:
        print(f"  eigenvalue {entry.eigenvalue:>2}: {v}")
