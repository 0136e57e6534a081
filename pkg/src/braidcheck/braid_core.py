"""
Braid words over a fixed number of strands.

A word in B_n is a tuple of signed generator indices: ``k > 0`` stands for
sigma_k and ``k < 0`` for sigma_|k|^-1, with 1 <= |k| <= n-1.  The text form
is whitespace-separated signed integers, so ``"1 2 -1"`` is
sigma_1 sigma_2 sigma_1^-1 and the empty string is the identity.

The cyclic generator sigma_n (strand n crossing over strand 1) is never an
alphabet symbol; :func:`band_generator` expands it into classical letters.
"""
from __future__ import annotations

import contextlib
import dataclasses
import re
from typing import Iterable, Iterator, Sequence

from .errors import DomainError, ParseError, ResourceError

DEFAULT_MAX_LENGTH = 10**6

_max_length = DEFAULT_MAX_LENGTH

_TOKEN = re.compile(r"[+-]?\d+\Z")


def max_word_length() -> int:
    return _max_length


def set_max_word_length(limit: int) -> None:
    """Set the process-wide guard on word length (applies to braid, free and S-words)."""
    global _max_length
    if limit < 1:
        raise DomainError(f"maximum word length must be positive, got {limit}")
    _max_length = int(limit)


@contextlib.contextmanager
def word_length_limit(limit: int):
    old = _max_length
    set_max_word_length(limit)
    try:
        yield
    finally:
        set_max_word_length(old)


def check_length(size: int) -> None:
    if size > _max_length:
        raise ResourceError(f"word length {size} exceeds the configured maximum {_max_length}")


def parse_letters(text: str, allow_prefix: str | None = None) -> tuple[int, ...]:
    """
    Parse whitespace-separated signed integers.

    ``allow_prefix`` permits an optional single-character prefix after the
    sign (free words may be written ``x1 -x2``).

    >>> parse_letters("1 2 -1")
    (1, 2, -1)
    >>> parse_letters("x1 -x2", allow_prefix="x")
    (1, -2)
    """
    letters = []
    for token in text.split():
        body = token
        if allow_prefix:
            sign = ""
            if body[:1] in "+-":
                sign, body = body[0], body[1:]
            if body.startswith(allow_prefix):
                body = body[len(allow_prefix):]
            body = sign + body
        if not _TOKEN.match(body):
            raise ParseError(f"malformed token {token!r}")
        letter = int(body)
        if letter == 0:
            raise ParseError("generator index 0 is not allowed")
        letters.append(letter)
    check_length(len(letters))
    return tuple(letters)


def format_letters(letters: Iterable[int]) -> str:
    return " ".join(str(x) for x in letters)


def reduce_letters(letters: Iterable[int]) -> tuple[int, ...]:
    """Cancel adjacent inverse pairs until none remain (stack based, one pass)."""
    out: list[int] = []
    for x in letters:
        if out and out[-1] == -x:
            out.pop()
        else:
            out.append(x)
    return tuple(out)


def invert_letters(letters: Sequence[int]) -> tuple[int, ...]:
    return tuple(-x for x in reversed(letters))


@dataclasses.dataclass(frozen=True)
class BraidWord:
    """An immutable (not necessarily reduced) word in the generators of B_n."""

    n: int
    letters: tuple[int, ...] = ()

    def __post_init__(self):
        if not isinstance(self.n, int) or self.n < 2:
            raise DomainError(f"strand count must be an integer >= 2, got {self.n!r}")
        letters = tuple(self.letters)
        object.__setattr__(self, "letters", letters)
        check_length(len(letters))
        for x in letters:
            if x == 0 or abs(x) >= self.n:
                raise DomainError(f"generator {x} out of range for B_{self.n}")

    @classmethod
    def identity(cls, n: int) -> BraidWord:
        return cls(n, ())

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self) -> Iterator[int]:
        return iter(self.letters)

    def __str__(self) -> str:
        return format_letters(self.letters)

    def __mul__(self, other: BraidWord) -> BraidWord:
        return concat(self, other)

    def __invert__(self) -> BraidWord:
        return invert(self)

    def __pow__(self, k: int) -> BraidWord:
        base = self if k >= 0 else invert(self)
        check_length(len(base.letters) * abs(k))
        return free_reduce(BraidWord(self.n, base.letters * abs(k)))

    def is_empty(self) -> bool:
        return not self.letters


def _same_n(*words: BraidWord) -> int:
    n = words[0].n
    for w in words[1:]:
        if w.n != n:
            raise DomainError(f"strand counts differ: {n} vs {w.n}")
    return n


def parse_braid(text: str, n: int) -> BraidWord:
    """Parse the braid text format; the result is not reduced."""
    if n < 2:
        raise DomainError(f"strand count must be >= 2, got {n}")
    return BraidWord(n, parse_letters(text))


def generator(i: int, n: int) -> BraidWord:
    return BraidWord(n, (i,))


def free_reduce(w: BraidWord) -> BraidWord:
    return BraidWord(w.n, reduce_letters(w.letters))


def exponent_sum(w: BraidWord) -> int:
    """Image under the abelianization B_n -> Z."""
    return sum(1 if x > 0 else -1 for x in w.letters)


def concat(*words: BraidWord) -> BraidWord:
    n = _same_n(*words)
    total = sum(len(w.letters) for w in words)
    check_length(total)
    return BraidWord(n, reduce_letters(x for w in words for x in w.letters))


def invert(w: BraidWord) -> BraidWord:
    return BraidWord(w.n, invert_letters(w.letters))


def conjugate(w: BraidWord, g: BraidWord) -> BraidWord:
    """g w g^-1, freely reduced."""
    return concat(g, w, invert(g))


def commutator(a: BraidWord, b: BraidWord) -> BraidWord:
    """[a, b] = a b a^-1 b^-1, freely reduced."""
    return concat(a, b, invert(a), invert(b))


def delta(n: int) -> BraidWord:
    """sigma_1 sigma_2 ... sigma_{n-1}; conjugation by it shifts sigma_i to sigma_{i+1}."""
    return BraidWord(n, tuple(range(1, n)))


def half_twist(n: int) -> BraidWord:
    """The positive half twist (Garside element) as the word (s_1)(s_2 s_1)...(s_{n-1}...s_1)."""
    letters: list[int] = []
    for k in range(1, n):
        letters.extend(range(k, 0, -1))
    return BraidWord(n, tuple(letters))


def full_twist(n: int) -> BraidWord:
    """(sigma_1 ... sigma_{n-1})^n, the generator of the center."""
    if n < 2:
        raise DomainError(f"full twist needs n >= 2, got {n}")
    return BraidWord(n, tuple(range(1, n)) * n)


def band_generator(n: int) -> BraidWord:
    """
    sigma_n = delta sigma_{n-1} delta^-1, freely reduced.

    >>> str(band_generator(4))
    '1 2 3 -2 -1'
    """
    if n < 3:
        raise DomainError(f"band generator needs n >= 3, got {n}")
    d = delta(n)
    return conjugate(generator(n - 1, n), d)


def cyclic_generator(i: int, n: int) -> BraidWord:
    """sigma_i with the index read mod n, so index n (or 0) is the band generator."""
    i = (i - 1) % n + 1
    if i == n:
        return band_generator(n)
    return generator(i, n)


def cyclic_distance(i: int, j: int, n: int) -> int:
    d = (i - j) % n
    return min(d, n - d)
