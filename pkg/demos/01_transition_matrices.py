"""Transition matrices of the three shuffles, on a small deck.

A deck is a word; the top card is the last letter.  For the deck 2112 a
random-to-top move can produce 1122, 2121 (two ways) or 2112 itself, and
those counts are exactly one row of the transition matrix below.
"""

from fractions import Fraction

from shuffle_spectra import WordVector, r2r, r2t, t2r, transition_matrix, word_to_text


def show(tm):
    labels = [word_to_text(w) for w in tm.order]
    print(f"{tm.shuffle} on evaluation {tm.evaluation}, scale {tm.scale}")
    print("      " + "  ".join(f"{c:>4}" for c in labels))
    for label, row in zip(labels, tm.counts.data):
        print(f"{label:>6}" + "  ".join(f"{int(x):>4}" for x in row))
    print()


for shuffle in ("r2t", "t2r", "r2r"):
    show(transition_matrix(shuffle, (2, 2)))

# the two-sided shuffle is one-sided followed by its inverse
deck = (2, 1, 1, 2)
print("one step from", word_to_text(deck))
print("  r2t:", r2t(WordVector.unit(deck)))
print("  r2r:", r2r(WordVector.unit(deck)))
assert r2r(WordVector.unit(deck)) == t2r(r2t(WordVector.unit(deck)))

# row sums are n (one-sided) and n^2 (two-sided), so the scaled matrices are
# stochastic
tm = transition_matrix("r2r", (2, 2))
assert all(sum(row) == 1 for row in tm.matrix.data)
print("row sums check out:", Fraction(16) * tm.scale == 1)
