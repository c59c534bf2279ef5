from fractions import Fraction
from itertools import permutations, product

import pytest

from shuffle_spectra.linalg import ExactMatrix
from shuffle_spectra.words import (
    WordVector,
    apply_del,
    apply_permutation,
    apply_sh,
    apply_theta,
    compose_permutations,
    enumerate_words,
    operator_matrix,
    r2r,
    r2r_via_group_algebra,
    r2t,
    shuffle_product,
    t2r,
    transition_matrix,
    word_from_text,
    word_to_text,
)
from shuffle_spectra.combinatorics import partitions_of

from golden_tables import R2R_COUNTS_22, R2T_COUNTS_22, WORDS_22

W = word_from_text


def all_words(alphabet: int, max_len: int):
    for length in range(max_len + 1):
        yield from product(range(1, alphabet + 1), repeat=length)


def test_word_text_roundtrip():
    assert word_to_text((1, 1, 2, 2)) == "1122"
    assert word_to_text((1, 12, 3)) == "[1,12,3]"
    assert word_from_text("[1,12,3]") == (1, 12, 3)
    assert word_from_text("abc") == (1, 2, 3)
    assert word_from_text("") == ()
    with pytest.raises(ValueError):
        word_from_text("a!b")


def test_wordvector_algebra():
    v = WordVector({(1, 2): Fraction(1, 2), (2, 1): -1})
    assert (2 * v).coefficient((1, 2)) == 1
    assert (v - v) == WordVector()
    assert not (v - v)
    assert v.inner(WordVector.unit((2, 1))) == -1
    json_form = v.to_json()
    assert WordVector.from_json(json_form) == v


def test_enumerate_words_deck_order():
    assert [word_to_text(w) for w in enumerate_words((2, 2))] == WORDS_22
    assert enumerate_words((1,)) == ((1,),)
    assert len(enumerate_words((1, 1, 1))) == 6
    assert enumerate_words((0, 2)) == ((2, 2),)


def test_insertion_deletion_replacement_examples():
    aaba = W("aaba")
    assert apply_sh(1, aaba) == WordVector({W("aaaba"): 3, W("aabaa"): 2})
    assert apply_sh(1, WordVector({W("ab"): 1, W("ba"): -1})) == WordVector(
        {W("aab"): 2, W("baa"): -2}
    )
    assert apply_sh(1, ()) == WordVector.unit((1,))
    assert apply_del(1, aaba) == WordVector({W("aba"): 2, W("aab"): 1})
    assert apply_del(2, aaba) == WordVector.unit(W("aaa"))
    assert apply_del(3, aaba) == WordVector()
    assert apply_theta(1, 2, W("aaab")) == WordVector(
        {W("baab"): 1, W("abab"): 1, W("aabb"): 1}
    )
    assert apply_theta(1, 1, aaba) == 3 * WordVector.unit(aaba)
    assert apply_theta(2, 1, W("aaa")) == WordVector()


def test_shuffle_product():
    assert shuffle_product(W("ab"), ()) == WordVector.unit(W("ab"))
    assert shuffle_product((1,), (1,)) == WordVector({(1, 1): 2})
    for w in all_words(3, 5):
        for a in (1, 2, 3):
            assert shuffle_product(w, (a,)) == apply_sh(a, w)


def test_position_action():
    w = W("cabcbaaa")
    sigma = (7, 1, 8, 4, 2, 5, 6, 3)
    tau = (2, 6, 3, 4, 7, 1, 5, 8)
    assert apply_permutation(w, sigma) == W("acacabab")
    assert apply_permutation(w, tuple(range(1, 9))) == w
    product_perm = compose_permutations(sigma, tau)
    assert product_perm == (1, 5, 8, 4, 6, 7, 2, 3)
    assert apply_permutation(apply_permutation(w, sigma), tau) == apply_permutation(
        w, product_perm
    )
    assert apply_permutation(w, product_perm) == W("cbacaaab")
    with pytest.raises(ValueError):
        apply_permutation((1, 2), (1, 2, 3))


def test_shuffle_operator_examples():
    assert r2r(WordVector.unit((1,))) == WordVector.unit((1,))
    image = r2r(WordVector.unit(W("1122")))
    coeffs = [image.coefficient(w) for w in enumerate_words((2, 2))]
    assert coeffs == [8, 4, 2, 2, 0, 0]
    assert t2r(WordVector.unit((1, 2, 3, 4))) == WordVector(
        {(1, 2, 3, 4): 1, (1, 2, 4, 3): 1, (1, 4, 2, 3): 1, (4, 1, 2, 3): 1}
    )
    assert r2r(WordVector()) == WordVector()
    with pytest.raises(ValueError):
        r2r(WordVector({(1,): 1, (1, 2): 1}))


def test_r2r_expansions_agree():
    for w in all_words(3, 4):
        assert r2r_via_group_algebra(w) == r2r(WordVector.unit(w)), w
    for w in permutations((1, 2, 3, 4, 5)):
        assert r2r_via_group_algebra(w) == r2r(WordVector.unit(w))
    assert r2r_via_group_algebra((1, 2)) == WordVector({(1, 2): 2, (2, 1): 2})


def test_shuffle_compositions():
    for w in all_words(3, 5):
        u = WordVector.unit(w)
        assert r2r(u) == t2r(r2t(u)), w


def test_transition_matrices_reproduce_worked_example():
    tm = transition_matrix("r2t", (2, 2))
    assert [[int(x) for x in row] for row in tm.counts.data] == R2T_COUNTS_22
    assert tm.scale == Fraction(1, 4)
    tm = transition_matrix("r2r", (2, 2))
    assert [[int(x) for x in row] for row in tm.counts.data] == R2R_COUNTS_22
    assert tm.scale == Fraction(1, 16)
    assert transition_matrix("r2r", (1,)).matrix == ExactMatrix([[1]])


def test_transition_matrices_are_stochastic_and_r2r_symmetric():
    for n in range(1, 5):
        for nu in partitions_of(n):
            for shuffle in ("r2r", "r2t", "t2r"):
                tm = transition_matrix(shuffle, nu)
                for row in tm.matrix.data:
                    assert sum(row) == 1
            tm = transition_matrix("r2r", nu)
            assert tm.counts.is_symmetric()
            # symmetrization: the two one-sided matrices are transposes and
            # their composition is the two-sided shuffle
            one_sided = transition_matrix("r2t", nu).counts
            assert one_sided.transpose() == transition_matrix("t2r", nu).counts
            assert one_sided @ one_sided.transpose() == tm.counts


def test_insertion_and_deletion_are_adjoint():
    # matrix of insertion equals the transpose of the matrix of deletion
    for length in range(0, 4):
        sources = [w for w in all_words(3, length) if len(w) == length]
        targets = [w for w in all_words(3, length + 1) if len(w) == length + 1]
        for letter in (1, 2, 3):
            for w in sources:
                image = apply_sh(letter, w)
                for u in targets:
                    assert image.coefficient(u) == apply_del(letter, u).coefficient(w)


def test_insertions_and_deletions_commute():
    for w in all_words(3, 4):
        u = WordVector.unit(w)
        for a in (1, 2, 3):
            for b in (1, 2, 3):
                assert apply_sh(a, apply_sh(b, u)) == apply_sh(b, apply_sh(a, u))
                assert apply_del(a, apply_del(b, u)) == apply_del(b, apply_del(a, u))


def test_operator_kernels_of_both_shuffles_agree():
    for n in range(1, 6):
        for nu in partitions_of(n):
            words = enumerate_words(nu)
            null_r2r = operator_matrix(r2r, words).nullspace()
            null_r2t = operator_matrix(r2t, words).nullspace()
            assert null_r2r == null_r2t, nu
