"""The complete spectrum without diagonalizing: horizontal strips.

Every eigenvalue of the random-to-random shuffle on words of an evaluation
is indexed by a pair of nested shapes differing by a horizontal strip.  The
integer statistic

    eig(outer/inner) = C(|outer|+1,2) - C(|inner|+1,2) + diag(outer/inner)

gives the eigenvalue times n^2, and the multiplicity is a product of a
Kostka number and a desarrangement count.  Here we print the size-4 table
and then confirm it against the exact characteristic polynomial of the
144-entry transition matrix.
"""

from shuffle_spectra import IntPolynomial, spectrum_for_evaluation, transition_matrix

report = spectrum_for_evaluation((1, 1, 1, 1))
print("strips for decks of four distinct cards")
print(f"{'strip':>14} {'d':>2} {'K':>2} {'mult':>4} {'eig':>4}")
for entry in report.entries:
    if entry.multiplicity == 0:
        continue
    strip = f"{entry.outer}/{entry.inner or '-'}"
    print(
        f"{strip:>14} {entry.desarrangements:>2} {entry.kostka:>2}"
        f" {entry.multiplicity:>4} {entry.eig:>4}"
    )
print("totals:", dict(sorted(report.totals.items(), reverse=True)))

# brute force agrees: the characteristic polynomial of the 24 x 24 integer
# transition matrix factors into exactly these roots
counts = transition_matrix("r2r", (1, 1, 1, 1)).counts
assert counts.charpoly() == IntPolynomial.from_integer_roots(report.totals)
print("24x24 characteristic polynomial factors as predicted")

# repeated cards work the same way; the eigenvalues stay integers
for evaluation in [(2, 2), (3, 1), (2, 1, 1)]:
    rep = spectrum_for_evaluation(evaluation)
    counts = transition_matrix("r2r", evaluation).counts
    assert counts.charpoly() == IntPolynomial.from_integer_roots(rep.totals)
    print(f"evaluation {evaluation}: totals {dict(sorted(rep.totals.items(), reverse=True))}")
