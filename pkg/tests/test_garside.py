from __future__ import annotations

import itertools

import pytest
from hypothesis import given

from braidcheck.braid_core import BraidWord, concat, half_twist, invert, parse_braid
from braidcheck.errors import DomainError, ResourceError
from braidcheck.braid_core import word_length_limit
from braidcheck.garside import (
    GarsideNormalForm,
    finishing_set,
    is_left_weighted,
    is_normal,
    is_trivial,
    normal_form,
    permutation_braid_letters,
    starting_set,
    verify_conjugation,
    words_equal,
)
from braidcheck.representations import artin_images, mu

from conftest import braid_pairs, braid_words


def W(text, n):
    return parse_braid(text, n)


# ------------------------------------------------------------------ oracle
# An independent normal form for B_3: enumerate every candidate
# Delta^p A_1 ... A_k, keep those that are left-weighted by the definition
# (no generator can be moved from the front of A_{i+1} to the back of A_i
# while both stay simple), and match by Artin images.


def _inversions(p):
    return sum(1 for i, j in itertools.combinations(range(len(p)), 2) if p[i] > p[j])


def _reduced_word(p):
    """A reduced positive word for the permutation braid of p (one-line, 1-based)."""
    p = list(p)
    word = []
    while True:
        for i in range(len(p) - 1):
            if p[i] > p[i + 1]:
                p[i], p[i + 1] = p[i + 1], p[i]
                word.append(i + 1)
                break
        else:
            return tuple(reversed(word))


def _swap_positions(p, i):
    q = list(p)
    q[i - 1], q[i] = q[i], q[i - 1]
    return tuple(q)


def _swap_values(p, i):
    return tuple(i + 1 if v == i else i if v == i + 1 else v for v in p)


def _oracle_left_weighted(a, b):
    n = len(a)
    for i in range(1, n):
        b_starts = _inversions(_swap_values(b, i)) < _inversions(b)
        a_extends = _inversions(_swap_positions(a, i)) > _inversions(a)
        if b_starts and a_extends:
            return False
    return True


def _oracle_table(n, max_inf, max_factors):
    simples = [p for p in itertools.permutations(range(1, n + 1))
               if p != tuple(range(1, n + 1)) and p != tuple(range(n, 0, -1))]
    table = {}
    for inf in range(-max_inf, max_inf + 1):
        for k in range(max_factors + 1):
            for fs in itertools.product(simples, repeat=k):
                if not all(_oracle_left_weighted(a, b) for a, b in zip(fs, fs[1:])):
                    continue
                letters = list(half_twist(n).letters * abs(inf))
                if inf < 0:
                    letters = [-x for x in reversed(letters)]
                for f in fs:
                    letters.extend(_reduced_word(f))
                key = tuple(artin_images(n, letters))
                assert key not in table, "normal form must be unique"
                table[key] = (inf, fs)
    return table


@pytest.fixture(scope="module")
def b3_oracle():
    return _oracle_table(3, 4, 4)


def test_golden_sigma1_sigma2inv(b3_oracle):
    w = W("1 -2", 3)
    nf = normal_form(w)
    assert (nf.inf, nf.factors) == b3_oracle[tuple(artin_images(3, w.letters))]
    # frozen after the oracle agreed
    assert str(nf) == "D^-1 | 1 3 2 | 3 1 2"
    assert nf.inf < 0


def test_all_short_b3_words_match_oracle(b3_oracle):
    alphabet = (1, 2, -1, -2)
    for length in range(5):
        for letters in itertools.product(alphabet, repeat=length):
            nf = normal_form(BraidWord(3, letters))
            assert (nf.inf, nf.factors) == b3_oracle[tuple(artin_images(3, letters))], letters


# ------------------------------------------------------------------ examples


def test_braid_relation_same_form():
    assert normal_form(W("1 2 1", 3)) == normal_form(W("2 1 2", 3))
    assert str(normal_form(W("1 2 1", 3))) == "D^1"


def test_empty():
    nf = normal_form(BraidWord.identity(4))
    assert nf.inf == 0 and nf.factors == () and nf.is_identity()


def test_words_equal_examples():
    assert words_equal(W("1 2 1", 3), W("2 1 2", 3))
    assert not words_equal(W("1", 3), W("2", 3))
    assert words_equal(W("1 3", 4), W("3 1", 4))
    with pytest.raises(DomainError):
        words_equal(W("1", 3), W("1", 4))


def test_is_trivial_examples():
    assert is_trivial(W("1 2 1 -2 -1 -2", 3))
    assert not is_trivial(W("1 1", 3))
    assert is_trivial(BraidWord.identity(3))


def test_verify_conjugation_examples():
    assert verify_conjugation(W("1 2 3", 5), W("1 -2", 5), W("2 -3", 5))
    g = W("1 2 3 -4 -4 -4", 5)
    assert verify_conjugation(g, W("1 -2", 5), W("2 -3", 5))
    assert not verify_conjugation(BraidWord.identity(3), W("1", 3), W("2", 3))


def test_length_guard():
    with word_length_limit(10):
        with pytest.raises(ResourceError):
            normal_form(BraidWord(3, (1,) * 10) * BraidWord(3, (2,) * 10))


def test_half_twist_form():
    for n in range(2, 7):
        assert str(normal_form(half_twist(n))) == "D^1"
        assert str(normal_form(invert(half_twist(n)) ** 3)) == "D^-3"


def test_starting_and_finishing_sets():
    # sigma_1 sigma_2 in B_3 is the permutation 2 3 1
    p = (2, 3, 1)
    assert finishing_set(p) == {2}
    assert starting_set(p) == {1}
    assert is_left_weighted((2, 1, 3), (2, 1, 3))
    assert not is_left_weighted((2, 1, 3), (1, 3, 2))
    assert is_left_weighted((2, 3, 1), (1, 3, 2))


def test_permutation_braid_letters():
    assert permutation_braid_letters((2, 3, 1)) == (1, 2)
    assert permutation_braid_letters((3, 2, 1)) in ((1, 2, 1), (2, 1, 2))


def test_is_normal_rejects_bad_forms():
    assert not is_normal(GarsideNormalForm(3, 0, ((1, 2, 3),)))
    assert not is_normal(GarsideNormalForm(3, 0, ((3, 2, 1),)))
    # sigma_1 . sigma_2 is not left-weighted: sigma_2 could move into the first factor
    assert not is_normal(GarsideNormalForm(3, 0, ((2, 1, 3), (1, 3, 2))))


# ------------------------------------------------------------------ properties


@given(braid_words(max_n=7, max_len=20))
def test_form_is_normal_and_represents_word(w):
    nf = normal_form(w)
    assert is_normal(nf)
    assert artin_images(w.n, nf.to_word().letters) == artin_images(w.n, w.letters)
    assert nf.permutation() == mu(w)
    assert normal_form(nf.to_word()) == nf


@given(braid_pairs(max_n=6))
def test_equality_agrees_with_artin(pair):
    u, v = pair
    assert words_equal(u, v) == (artin_images(u.n, u.letters) == artin_images(v.n, v.letters))


@given(braid_words(max_n=6))
def test_inverse_cancels(w):
    assert is_trivial(concat(w, invert(w)))
    assert is_trivial(concat(invert(w), w))


@given(braid_words(max_n=6))
def test_relation_insertion_invariant(w):
    n = w.n
    if n < 3:
        return
    k = len(w.letters) // 2
    rel = (1, 2, 1, -2, -1, -2)
    padded = BraidWord(n, w.letters[:k] + rel + w.letters[k:])
    assert normal_form(padded) == normal_form(w)


@given(braid_words(max_n=6))
def test_positive_words_have_nonnegative_inf(w):
    pos = BraidWord(w.n, tuple(abs(x) for x in w.letters))
    nf = normal_form(pos)
    assert nf.inf >= 0
    assert nf.sup <= len(pos.letters)


@given(braid_words(max_n=6))
def test_delta_conjugation_flips_indices(w):
    n = w.n
    d = half_twist(n)
    flipped = BraidWord(n, tuple((n - abs(x)) * (1 if x > 0 else -1) for x in w.letters))
    assert words_equal(concat(d, w, invert(d)), flipped)
