"""
The Artin representation B_n -> Aut(F_n), the permutation map B_n -> S_n,
and equality in Out(F_n).

alpha(sigma_i) sends eta_i to eta_{i+1}, eta_{i+1} to eta_{i+1} eta_i eta_{i+1}^-1
and fixes the other generators.  alpha is a homomorphism with
alpha(uv) = alpha(u) o alpha(v).
"""
from __future__ import annotations

import dataclasses
from typing import Iterable, Optional

from .braid_core import BraidWord, invert, invert_letters
from .errors import DomainError
from .free_group import FreeEndo, FreeWord, _mul, boundary_word, compose, is_inner
from .perm import Permutation


def artin_images(n: int, letters: Iterable[int]) -> list[tuple[int, ...]]:
    """Generator images of alpha(word), composing one generator at a time on the right."""
    f = [(i,) for i in range(1, n + 1)]
    for x in letters:
        i = abs(x)
        a, b = f[i - 1], f[i]
        if x > 0:
            f[i - 1] = b
            f[i] = _mul(_mul(b, a), invert_letters(b))
        else:
            f[i] = a
            f[i - 1] = _mul(_mul(invert_letters(a), b), a)
    return f


def artin(b: BraidWord) -> FreeEndo:
    """alpha(b) as an endomorphism of F_n; its inverse is alpha(b^-1)."""
    images = artin_images(b.n, b.letters)
    return FreeEndo(
        b.n,
        tuple(FreeWord._trusted(b.n, w) for w in images),
        inverter=lambda: artin(invert(b)),
    )


def artin_equal(u: BraidWord, v: BraidWord) -> bool:
    """Equality of braids decided through the (faithful) Artin representation."""
    if u.n != v.n:
        raise DomainError(f"strand counts differ: {u.n} vs {v.n}")
    return artin_images(u.n, u.letters) == artin_images(v.n, v.letters)


def mu(b: BraidWord) -> Permutation:
    """Underlying permutation: sigma_i^{+-1} -> (i i+1), multiplied left to right."""
    images = list(range(1, b.n + 1))
    for x in b.letters:
        i = abs(x)
        images[i - 1], images[i] = images[i], images[i - 1]
    return Permutation(tuple(images))


@dataclasses.dataclass(frozen=True)
class OuterClass:
    """An automorphism considered modulo inner automorphisms."""

    representative: FreeEndo

    def __eq__(self, other) -> bool:
        if not isinstance(other, OuterClass):
            return NotImplemented
        return outer_equal(self.representative, other.representative)

    def __hash__(self):
        raise TypeError("outer classes have no canonical form to hash")


def outer_equal(phi: FreeEndo, psi: FreeEndo) -> bool:
    """True iff phi o psi^-1 is inner.  psi must carry a known inverse."""
    if phi.rank != psi.rank:
        raise DomainError("ranks differ")
    return is_inner(compose(phi, psi.inverse())) is not None


def in_kernel_gamma(b: BraidWord) -> bool:
    """True iff alpha(b) is inner, i.e. b dies in Out(F_n)."""
    return is_inner(artin(b)) is not None


def center_power_detect(phi: FreeEndo) -> Optional[int]:
    """r with phi = conj(boundary^r), or None."""
    w = is_inner(phi)
    if w is None:
        return None
    n = phi.rank
    if len(w) % n:
        return None
    r = len(w) // n
    bnd = boundary_word(n)
    if w == bnd ** r:
        return r
    if w == bnd ** (-r):
        return -r
    return None


def stabilizer_check(generators: Iterable[BraidWord], point: int) -> bool:
    """True iff mu(g) fixes ``point`` for every g, so the generated subgroup fixes it."""
    gens = list(generators)
    for g in gens:
        if not 1 <= point <= g.n:
            raise DomainError(f"point {point} outside 1..{g.n}")
    return all(mu(g).fixes(point) for g in gens)
