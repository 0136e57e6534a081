"""
Words in the generating set S = {s_i = sigma_i sigma_{i+1}^-1} of the
commutator subgroup [B_n, B_n], n >= 5.

In ``linear`` mode S-indices run over 1..n-2.  In ``cyclic`` mode they run
over 1..n with generator subscripts read mod n, sigma_n being the band
generator, so s_{n-1} = sigma_{n-1} sigma_n^-1 and s_n = sigma_n sigma_1^-1.

Rewriting a zero-exponent braid into S
--------------------------------------
Write the word as x_1 ... x_L and let c_k be the exponent sum of x_1..x_k.
Telescoping against sigma_1 gives

    w = prod_k  sigma_1^{c_{k-1}} x_k sigma_1^{-c_k}

and each factor is sigma_1^m t_a^{+-1} sigma_1^-m with t_a = sigma_a sigma_1^-1
(m = c_{k-1} for a positive letter, c_{k-1} - 1 for a negative one).  In S,
t_a = s_{a-1}^-1 ... s_1^-1.  For a >= 3, sigma_a commutes with sigma_1, so t_a
is fixed by the conjugation.  For a = 2, t_2 = s_1^-1 and sigma_4 commutes with
both sigma_1 and sigma_2, hence

    sigma_1^m s_1 sigma_1^-m = D^m s_1 D^-m,   D = sigma_1 sigma_4^-1 = s_1 s_2 s_3.

The output length is linear in the input length times the largest prefix
exponent, and only uses S-letters 1..n-2, so both modes are served.
"""
from __future__ import annotations

import dataclasses
import functools
from typing import Iterator

from .braid_core import (
    BraidWord,
    check_length,
    concat,
    cyclic_distance,
    cyclic_generator,
    exponent_sum,
    format_letters,
    invert,
    parse_letters,
    reduce_letters,
)
from .errors import DomainError, UnsupportedError
from .garside import verify_conjugation, words_equal

MODES = ("cyclic", "linear")

# S-word for D = sigma_1 sigma_4^-1
_D = (1, 2, 3)


def _check_mode(mode: str) -> None:
    if mode not in MODES:
        raise DomainError(f"unknown mode {mode!r}; expected one of {MODES}")


def max_index(n: int, mode: str) -> int:
    _check_mode(mode)
    return n if mode == "cyclic" else n - 2


@dataclasses.dataclass(frozen=True)
class SWord:
    """A word in S; letter ``i`` is s_i and ``-i`` is s_i^-1."""

    n: int
    letters: tuple[int, ...] = ()
    mode: str = "cyclic"

    def __post_init__(self):
        letters = tuple(self.letters)
        object.__setattr__(self, "letters", letters)
        check_length(len(letters))
        top = max_index(self.n, self.mode)
        if self.mode == "cyclic" and self.n < 3:
            raise DomainError("cyclic mode needs n >= 3")
        for x in letters:
            if x == 0 or abs(x) > top:
                raise DomainError(f"S-index {x} out of range 1..{top} ({self.mode}, n={self.n})")

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self) -> Iterator[int]:
        return iter(self.letters)

    def __str__(self) -> str:
        return format_letters(self.letters)

    def evaluate(self) -> BraidWord:
        return evaluate(self)


def parse_sword(text: str, n: int, mode: str = "cyclic") -> SWord:
    return SWord(n, parse_letters(text), mode)


@functools.lru_cache(maxsize=None)
def s_letter(i: int, n: int, mode: str = "cyclic") -> BraidWord:
    """The braid s_i = sigma_i sigma_{i+1}^-1 (band generator expanded in cyclic mode)."""
    top = max_index(n, mode)
    if not 1 <= i <= top:
        raise DomainError(f"S-index {i} out of range 1..{top} ({mode}, n={n})")
    return concat(cyclic_generator(i, n), invert(cyclic_generator(i + 1, n)))


def evaluate(sw: SWord) -> BraidWord:
    pieces = []
    total = 0
    for x in sw.letters:
        word = s_letter(abs(x), sw.n, sw.mode)
        piece = word if x > 0 else invert(word)
        total += len(piece)
        check_length(total)
        pieces.append(piece)
    if not pieces:
        return BraidWord.identity(sw.n)
    return concat(*pieces)


def in_commutator_subgroup(w: BraidWord) -> bool:
    """B_n abelianizes to Z via the exponent sum, so [B_n, B_n] is its kernel."""
    return exponent_sum(w) == 0


def _t_letters(a: int) -> tuple[int, ...]:
    """S-word for sigma_a sigma_1^-1."""
    return tuple(-k for k in range(a - 1, 0, -1))


def rewrite_in_S(w: BraidWord, mode: str = "cyclic", verify: bool = True) -> SWord:
    """An S-word equal to the zero-exponent braid w in B_n (n >= 5)."""
    _check_mode(mode)
    n = w.n
    if n < 5:
        raise UnsupportedError(f"rewriting into S needs n >= 5, got {n}")
    if exponent_sum(w) != 0:
        raise DomainError(f"exponent sum is {exponent_sum(w)}, not 0: word is not in [B_n, B_n]")
    out: list[int] = []
    d_inv = tuple(-x for x in reversed(_D))
    c = 0
    for x in w.letters:
        a = abs(x)
        if x > 0:
            m, core = c, _t_letters(a)
            c += 1
        else:
            m, core = c - 1, tuple(-y for y in reversed(_t_letters(a)))
            c -= 1
        if a == 2 and m != 0:
            left = (_D if m > 0 else d_inv) * abs(m)
            right = (d_inv if m > 0 else _D) * abs(m)
            out.extend(left)
            out.extend(core)
            out.extend(right)
        else:
            out.extend(core)
        check_length(len(out))
    sw = SWord(n, reduce_letters(out), mode)
    if verify and not words_equal(evaluate(sw), w):
        raise AssertionError(f"rewrite of {w} does not evaluate back to it")
    return sw


def _commuting_index(i: int, n: int, mode: str) -> int:
    """Smallest j whose generator commutes with both sigma_i and sigma_{i+1}."""
    if mode == "cyclic":
        for j in range(1, n + 1):
            if cyclic_distance(j, i, n) >= 2 and cyclic_distance(j, i + 1, n) >= 2:
                return j
    else:
        for j in range(1, n):
            if abs(j - i) >= 2 and abs(j - i - 1) >= 2:
                return j
    raise UnsupportedError(f"no generator commutes with sigma_{i} and sigma_{i + 1} in B_{n} ({mode})")


@functools.lru_cache(maxsize=None)
def perfectness_witness(i: int, n: int, mode: str = "cyclic") -> tuple[BraidWord, BraidWord]:
    """
    Zero-exponent a, b with [a, b] = a b a^-1 b^-1 = s_i, namely
    a = sigma_{i+1} sigma_i sigma_j^-2 and b = sigma_{i+1} sigma_j^-1 for the
    smallest j commuting with sigma_i and sigma_{i+1}.
    """
    top = max_index(n, mode)
    if not 1 <= i <= top:
        raise DomainError(f"S-index {i} out of range 1..{top}")
    j = _commuting_index(i, n, mode)
    g_i, g_next, g_j = cyclic_generator(i, n), cyclic_generator(i + 1, n), cyclic_generator(j, n)
    a = concat(g_next, g_i, invert(g_j), invert(g_j))
    b = concat(g_next, invert(g_j))
    if not words_equal(concat(a, b, invert(a), invert(b)), s_letter(i, n, mode)):
        raise AssertionError(f"commutator identity failed for i={i}, n={n}, j={j}")
    return a, b


def shift_conjugator(i: int, n: int) -> BraidWord:
    """sigma_i sigma_{i+1} sigma_{i+2}, which conjugates s_i to s_{i+1}."""
    return concat(*(cyclic_generator(i + k, n) for k in range(3)))


def normality_conjugator(i: int, j: int, n: int) -> BraidWord:
    """sigma_j sigma_{i+3}^-1: conjugating s_i by it agrees with conjugating by sigma_j."""
    return concat(cyclic_generator(j, n), invert(cyclic_generator(i + 3, n)))


@functools.lru_cache(maxsize=None)
def conjugacy_chain_witness(i: int, n: int) -> BraidWord:
    """
    g = sigma_i sigma_{i+1} sigma_{i+2} sigma_{i+3}^-3 (cyclic subscripts), a
    zero-exponent element with g s_i g^-1 = s_{i+1}.
    """
    if n < 5:
        raise UnsupportedError(f"conjugacy chain needs n >= 5, got {n}")
    if not 1 <= i <= n:
        raise DomainError(f"index {i} out of range 1..{n}")
    back = invert(cyclic_generator(i + 3, n))
    g = concat(shift_conjugator(i, n), back, back, back)
    nxt = i % n + 1
    if not verify_conjugation(g, s_letter(i, n), s_letter(nxt, n)):
        raise AssertionError(f"chain conjugation failed for i={i}, n={n}")
    return g


def commutator_expression(w: BraidWord, mode: str = "cyclic") -> list[tuple[BraidWord, BraidWord]]:
    """
    Pairs (a_k, b_k) of zero-exponent braids with prod_k [a_k, b_k] = w.

    Each letter of the S-rewrite of w is replaced by its perfectness witness;
    s_i^-1 = [b, a] when s_i = [a, b].  Witnesses always use cyclic subscripts,
    since for n = 5 the letter s_2 commutes only with the band generator.
    """
    sw = rewrite_in_S(w, mode)
    pairs = []
    for x in sw.letters:
        a, b = perfectness_witness(abs(x), w.n, "cyclic")
        pairs.append((a, b) if x > 0 else (b, a))
    if not words_equal(commutator_product(pairs, w.n), w):
        raise AssertionError(f"commutator expression of {w} does not multiply back to it")
    return pairs


def commutator_product(pairs, n: int) -> BraidWord:
    pieces = [concat(a, b, invert(a), invert(b)) for a, b in pairs]
    if not pieces:
        return BraidWord.identity(n)
    return concat(*pieces)


def normality_rewrite(i: int, j: int, n: int) -> SWord:
    """An S-word for sigma_j s_i sigma_j^-1, witnessing that <S> is normal."""
    return rewrite_in_S(concat(cyclic_generator(j, n), s_letter(i, n), invert(cyclic_generator(j, n))))
