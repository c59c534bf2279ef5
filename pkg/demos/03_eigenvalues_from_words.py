"""Reading an eigenvalue straight off a deck arrangement.

Insert the letters of a word into a tableau one at a time (bumping rows) and
record the order in which cells appear.  That recording shape, together with
the longest suffix whose first ascent is even, determines an eigenvalue, and
running over all words of an evaluation yields the whole spectrum with
multiplicities.
"""

from collections import Counter

from shuffle_spectra import (
    eig_word,
    eig_word_trace,
    enumerate_words,
    rsk,
    spectrum_for_evaluation,
    word_from_text,
)

word = word_from_text("234133134")
p, q = rsk(word)
print("insertion tableau rows: ", p)
print("recording tableau rows: ", q)
trace = eig_word_trace(word)
print(f"suffix with even first ascent: {trace.suffix}")
print(f"eig = [{trace.head}] - [{trace.tail}] = {trace.eig}")

print("\nall decks of three distinct cards:")
for w in enumerate_words((1, 1, 1)):
    t = eig_word_trace(w)
    print(f"  {w} -> suffix {str(t.suffix or '()'):>12}  eig {t.eig}")

# the per-word eigenvalues tile the strip spectrum exactly
for evaluation in [(1, 1, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)]:
    observed = Counter(eig_word(w) for w in enumerate_words(evaluation))
    assert observed == Counter(spectrum_for_evaluation(evaluation).totals)
print("\nword eigenvalues match strip multiplicities on every demo evaluation")
