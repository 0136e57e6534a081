"""
Reduced words in the free group F_n and endomorphisms given by generator images.

Letters are signed indices: ``k`` is eta_k and ``-k`` its inverse.  Words are
always kept freely reduced.
"""
from __future__ import annotations

import dataclasses
from typing import Callable, Iterator, Optional, Sequence

from .braid_core import check_length, format_letters, invert_letters, parse_letters, reduce_letters
from .errors import DomainError
from .perm import Permutation


def _mul(u: Sequence[int], v: Sequence[int]) -> tuple[int, ...]:
    """Product of two reduced letter tuples; cancellation only happens at the seam."""
    k = 0
    m = min(len(u), len(v))
    lu = len(u)
    while k < m and u[lu - 1 - k] == -v[k]:
        k += 1
    out = tuple(u[: lu - k]) + tuple(v[k:])
    check_length(len(out))
    return out


@dataclasses.dataclass(frozen=True)
class FreeWord:
    rank: int
    letters: tuple[int, ...] = ()

    def __post_init__(self):
        if self.rank < 1:
            raise DomainError(f"rank must be >= 1, got {self.rank}")
        letters = tuple(self.letters)
        for x in letters:
            if x == 0 or abs(x) > self.rank:
                raise DomainError(f"letter {x} out of range for F_{self.rank}")
        object.__setattr__(self, "letters", reduce_letters(letters))

    @classmethod
    def identity(cls, rank: int) -> FreeWord:
        return cls(rank, ())

    @classmethod
    def _trusted(cls, rank: int, letters: tuple[int, ...]) -> FreeWord:
        # letters already reduced and in range
        w = object.__new__(cls)
        object.__setattr__(w, "rank", rank)
        object.__setattr__(w, "letters", letters)
        return w

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self) -> Iterator[int]:
        return iter(self.letters)

    def __str__(self) -> str:
        return format_letters(self.letters)

    def __mul__(self, other: FreeWord) -> FreeWord:
        return fg_multiply(self, other)

    def __invert__(self) -> FreeWord:
        return fg_invert(self)

    def __pow__(self, k: int) -> FreeWord:
        base = self.letters if k >= 0 else invert_letters(self.letters)
        out: tuple[int, ...] = ()
        for _ in range(abs(k)):
            out = _mul(out, base)
        return FreeWord._trusted(self.rank, out)


def parse_free(text: str, rank: int) -> FreeWord:
    """Same grammar as braid words; an ``x`` prefix on each token is optional."""
    return FreeWord(rank, parse_letters(text, allow_prefix="x"))


def basis(i: int, rank: int) -> FreeWord:
    return FreeWord(rank, (i,))


def boundary_word(rank: int) -> FreeWord:
    """
    The product of the puncture loops that every Artin automorphism fixes.

    With the generator action eta_i -> eta_{i+1}, eta_{i+1} -> eta_{i+1} eta_i eta_{i+1}^-1,
    the fixed product, written left to right, is eta_n ... eta_2 eta_1.
    """
    return FreeWord._trusted(rank, tuple(range(rank, 0, -1)))


def _check_rank(*words) -> int:
    r = words[0].rank
    for w in words[1:]:
        if w.rank != r:
            raise DomainError(f"ranks differ: {r} vs {w.rank}")
    return r


def fg_multiply(u: FreeWord, v: FreeWord) -> FreeWord:
    r = _check_rank(u, v)
    return FreeWord._trusted(r, _mul(u.letters, v.letters))


def fg_invert(u: FreeWord) -> FreeWord:
    return FreeWord._trusted(u.rank, invert_letters(u.letters))


def fg_conjugate(u: FreeWord, v: FreeWord) -> FreeWord:
    """v u v^-1."""
    r = _check_rank(u, v)
    return FreeWord._trusted(r, _mul(_mul(v.letters, u.letters), invert_letters(v.letters)))


def cyclic_reduction(letters: Sequence[int]) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """
    Split a reduced word as a c a^-1 with c cyclically reduced; returns (a, c).

    >>> cyclic_reduction((2, 1, -2))
    ((2,), (1,))
    """
    i, j = 0, len(letters) - 1
    while i < j and letters[i] == -letters[j]:
        i += 1
        j -= 1
    return tuple(letters[:i]), tuple(letters[i : j + 1])


# ---------------------------------------------------------------- endomorphisms


@dataclasses.dataclass(frozen=True)
class FreeEndo:
    """
    An endomorphism of F_rank, given by the images of eta_1..eta_rank.

    ``inverter`` optionally produces the inverse automorphism; it is set for
    endomorphisms built from braids, conjugations and permutations.
    """

    rank: int
    images: tuple[FreeWord, ...]
    inverter: Optional[Callable[[], "FreeEndo"]] = dataclasses.field(
        default=None, compare=False, repr=False
    )

    def __post_init__(self):
        images = tuple(self.images)
        object.__setattr__(self, "images", images)
        if len(images) != self.rank:
            raise DomainError(f"need {self.rank} generator images, got {len(images)}")
        for w in images:
            if w.rank != self.rank:
                raise DomainError("image rank mismatch")

    @classmethod
    def from_letters(cls, rank: int, images: Sequence[Sequence[int]], inverter=None) -> FreeEndo:
        return cls(rank, tuple(FreeWord(rank, tuple(w)) for w in images), inverter)

    def __call__(self, w: FreeWord) -> FreeWord:
        return apply_endo(self, w)

    def is_identity(self) -> bool:
        return all(w.letters == (i,) for i, w in enumerate(self.images, start=1))

    def inverse(self) -> FreeEndo:
        if self.inverter is None:
            raise DomainError("no inverse is known for this endomorphism")
        return self.inverter()

    def abelianization(self) -> tuple[tuple[int, ...], ...]:
        """Integer matrix of the induced map on Z^rank; column i is the image of eta_i."""
        rows = [[0] * self.rank for _ in range(self.rank)]
        for col, w in enumerate(self.images):
            for x in w.letters:
                rows[abs(x) - 1][col] += 1 if x > 0 else -1
        return tuple(tuple(r) for r in rows)

    def __str__(self) -> str:
        return "; ".join(str(w) for w in self.images)


def identity_endo(rank: int) -> FreeEndo:
    endo = None

    def inv():
        return endo

    endo = FreeEndo.from_letters(rank, [(i,) for i in range(1, rank + 1)], inverter=inv)
    return endo


def conjugation(w: FreeWord) -> FreeEndo:
    """conj(w): x -> w x w^-1."""
    r = w.rank
    return FreeEndo(
        r,
        tuple(fg_conjugate(basis(i, r), w) for i in range(1, r + 1)),
        inverter=lambda: conjugation(fg_invert(w)),
    )


def permutation_endo(perm: Permutation) -> FreeEndo:
    """eta_i -> eta_{perm(i)}."""
    return FreeEndo.from_letters(
        perm.n, [(perm(i),) for i in range(1, perm.n + 1)],
        inverter=lambda: permutation_endo(perm.inverse()),
    )


def apply_letters(images: Sequence[tuple[int, ...]], letters: Sequence[int]) -> tuple[int, ...]:
    out: tuple[int, ...] = ()
    inverses: dict[int, tuple[int, ...]] = {}
    for x in letters:
        if x > 0:
            out = _mul(out, images[x - 1])
        else:
            img = inverses.get(x)
            if img is None:
                img = inverses[x] = invert_letters(images[-x - 1])
            out = _mul(out, img)
    return out


def apply_endo(phi: FreeEndo, w: FreeWord) -> FreeWord:
    r = _check_rank(phi, w)
    return FreeWord._trusted(r, apply_letters([im.letters for im in phi.images], w.letters))


def compose(phi: FreeEndo, psi: FreeEndo) -> FreeEndo:
    """(phi o psi)(x) = phi(psi(x))."""
    _check_rank(phi, psi)
    inverter = None
    if phi.inverter is not None and psi.inverter is not None:
        inverter = lambda: compose(psi.inverse(), phi.inverse())  # noqa: E731
    return FreeEndo(phi.rank, tuple(apply_endo(phi, w) for w in psi.images), inverter)


# ---------------------------------------------------------------- decisions


def conjugate_in_free(u: FreeWord, v: FreeWord) -> Optional[FreeWord]:
    """
    A witness w with w u w^-1 = v, or None if u and v are not conjugate.

    Write u = a c a^-1 and v = b d b^-1 with c, d cyclically reduced; u and v
    are conjugate iff d is a cyclic rotation of c.  If c = x y and d = y x then
    d = x^-1 c x, giving w = b x^-1 a^-1.
    """
    r = _check_rank(u, v)
    a, c = cyclic_reduction(u.letters)
    b, d = cyclic_reduction(v.letters)
    if len(c) != len(d):
        return None
    if not c:
        shift = 0
    else:
        doubled = c + c
        shift = next((k for k in range(len(c)) if doubled[k : k + len(c)] == d), None)
        if shift is None:
            return None
    x = c[:shift]
    w = _mul(_mul(b, invert_letters(x)), invert_letters(a))
    return FreeWord._trusted(r, w)


def is_inner(phi: FreeEndo) -> Optional[FreeWord]:
    """
    A word w with phi = conj(w), or None.

    Every solution of w eta_1 w^-1 = phi(eta_1) has the form w0 eta_1^k, where
    w0 is the witness from :func:`conjugate_in_free`.  Substituting into the
    eta_2 equation gives eta_1^k eta_2 eta_1^-k = w0^-1 phi(eta_2) w0, a reduced
    word whose shape determines k directly (|k| is at most half its length, so
    no search is needed).  The candidate is then checked on every generator.
    """
    r = phi.rank
    if r == 1:
        return FreeWord.identity(1) if phi.images[0].letters == (1,) else None
    w0 = conjugate_in_free(basis(1, r), phi.images[0])
    if w0 is None:
        return None
    z = fg_conjugate(phi.images[1], fg_invert(w0)).letters
    k = 0
    while k < len(z) and z[k] in (1, -1) and z[0] == z[k]:
        k += 1
    sign = 1 if (z and z[0] == 1) else -1
    expected = (sign,) * k + (2,) + (-sign,) * k
    if z != expected:
        return None
    w = FreeWord._trusted(r, _mul(w0.letters, (sign,) * k))
    for i, img in enumerate(phi.images, start=1):
        if fg_conjugate(basis(i, r), w) != img:
            return None
    return w


@dataclasses.dataclass(frozen=True)
class ArtinCertificate:
    """phi(eta_i) = conjugators[i] eta_{tau(i)} conjugators[i]^-1, and phi fixes the boundary word."""

    tau: Permutation
    conjugators: tuple[FreeWord, ...]


def artin_conditions(phi: FreeEndo) -> Optional[ArtinCertificate]:
    """
    Decide whether phi lies in the image of the Artin representation.

    Each phi(eta_i) must cyclically reduce to a single positive generator
    eta_t, which determines tau(i) = t (distinct generators are never
    conjugate, so t is unique) and the conjugator up to powers of eta_t; the
    conjugator returned is the cyclic-reduction prefix.  tau must be a
    bijection and phi must fix :func:`boundary_word`.
    """
    r = phi.rank
    targets = []
    conjugators = []
    for img in phi.images:
        a, c = cyclic_reduction(img.letters)
        if len(c) != 1 or c[0] < 0:
            return None
        targets.append(c[0])
        conjugators.append(FreeWord._trusted(r, a))
    if sorted(targets) != list(range(1, r + 1)):
        return None
    boundary = boundary_word(r)
    if apply_endo(phi, boundary) != boundary:
        return None
    return ArtinCertificate(Permutation(tuple(targets)), tuple(conjugators))


def check_certificate(phi: FreeEndo, cert: ArtinCertificate) -> bool:
    """Independent re-check of both conditions for a certificate."""
    r = phi.rank
    for i in range(1, r + 1):
        expected = fg_conjugate(basis(cert.tau(i), r), cert.conjugators[i - 1])
        if phi.images[i - 1] != expected:
            return False
    return apply_endo(phi, boundary_word(r)) == boundary_word(r)
