"""Eigenspaces on permutation decks as modules, in Schur coordinates.

Relabeling the cards commutes with shuffling, so each eigenspace on decks of
distinct cards decomposes into irreducibles.  The decomposition is read off
the horizontal strips: each strip contributes its desarrangement count of
copies of the Schur symbol of its outer shape.
"""

from math import factorial

from shuffle_spectra import (
    frobenius_of_eigenspace,
    r2t_frobenius,
    r2t_spectrum,
    spectrum_for_evaluation,
)

n = 6
report = spectrum_for_evaluation((1,) * n)
print(f"eigenspace modules for decks of {n} distinct cards:")
total = 0
for eig in sorted(report.totals, reverse=True):
    expansion = frobenius_of_eigenspace(n, eig)
    assert expansion.dimension() == report.totals[eig]
    total += expansion.dimension()
    print(f"  eig {eig:>2} (dim {expansion.dimension():>3}): {expansion}")
assert total == factorial(n)

# the one-sided shuffle has the same kernel and its own eigenspace modules
print("\nrandom-to-top eigenspaces at size 4:")
for j in range(4, -1, -1):
    expansion = r2t_frobenius(4, j)
    if expansion:
        print(f"  eigenvalue {4 - j} (dim {expansion.dimension()}): {expansion}")
assert r2t_frobenius(4, 4) == frobenius_of_eigenspace(4, 0)
print("spectrum prediction:", r2t_spectrum((1, 1, 1, 1)))
