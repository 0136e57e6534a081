"""
Left-greedy Garside normal form in B_n.

Every braid is written uniquely as Delta^p A_1 ... A_k where Delta is the
positive half twist and the A_i are permutation braids, none trivial and none
equal to Delta, with each adjacent pair left-weighted: the starting set of
A_{i+1} is contained in the finishing set of A_i.

A permutation braid is identified with its permutation in one-line form.
Appending sigma_i on the right swaps positions i and i+1 of the one-line
tuple, so the permutation of a positive word is the left-to-right product of
its transpositions (the same convention as :func:`representations.mu`).
The finishing set of A is the set of right descents of its permutation and the
starting set is the set of left descents.

Internally permutations are 0-based tuples; the public normal form uses the
1-based one-line notation.
"""
from __future__ import annotations

import dataclasses

from .braid_core import BraidWord, check_length, concat, half_twist, invert
from .errors import DomainError
from .perm import Permutation


def _w0(n: int) -> tuple[int, ...]:
    return tuple(range(n - 1, -1, -1))


def _tau(p: tuple[int, ...]) -> tuple[int, ...]:
    """Conjugation by Delta: sigma_i -> sigma_{n-i}, i.e. w0 p w0."""
    n = len(p)
    return tuple(n - 1 - p[n - 1 - i] for i in range(n))


def _generator_perm(n: int, i: int) -> tuple[int, ...]:
    p = list(range(n))
    p[i - 1], p[i] = p[i], p[i - 1]
    return tuple(p)


def _delta_over_generator(n: int, i: int) -> tuple[int, ...]:
    """The permutation braid Delta sigma_i^-1."""
    p = list(range(n - 1, -1, -1))
    p[i - 1], p[i] = p[i], p[i - 1]
    return tuple(p)


def finishing_set(p) -> frozenset[int]:
    """Generators sigma_i (1-based) that a permutation braid can end with."""
    return frozenset(i + 1 for i in range(len(p) - 1) if p[i] > p[i + 1])


def starting_set(p) -> frozenset[int]:
    """Generators sigma_i (1-based) that a permutation braid can start with."""
    n = len(p)
    inv = [0] * n
    base = min(p)
    for idx, v in enumerate(p):
        inv[v - base] = idx
    return frozenset(i + 1 for i in range(n - 1) if inv[i] > inv[i + 1])


def _left_weight(a: tuple[int, ...], b: tuple[int, ...]):
    """
    Move generators from the front of b to the back of a until the pair is
    left-weighted.  Returns None if the pair already is, else (a', b') with
    a'b' = ab as braids.
    """
    n = len(a)
    a = list(a)
    binv = [0] * n
    for idx, v in enumerate(b):
        binv[v] = idx
    moved = False
    i = 0
    while i < n - 1:
        # sigma_{i+1} starts b but does not finish a
        if binv[i] > binv[i + 1] and a[i] < a[i + 1]:
            a[i], a[i + 1] = a[i + 1], a[i]
            binv[i], binv[i + 1] = binv[i + 1], binv[i]
            moved = True
            i = i - 1 if i > 0 else 0
        else:
            i += 1
    if not moved:
        return None
    bnew = [0] * n
    for v, idx in enumerate(binv):
        bnew[idx] = v
    return tuple(a), tuple(bnew)


def _normalize(n: int, factors) -> tuple[int, list[tuple[int, ...]]]:
    """
    Left-normalize a product of permutation braids.  Factors are inserted one
    at a time and a single right-to-left sweep restores left-weightedness
    (the domino rule); the sweep stops at the first pair that does not change.
    Returns (number of Deltas peeled from the front, remaining factors).
    """
    ident = tuple(range(n))
    top = _w0(n)
    fs: list[tuple[int, ...]] = []
    peeled = 0
    for f in factors:
        if f == ident:
            continue
        fs.append(f)
        j = len(fs) - 2
        while j >= 0:
            res = _left_weight(fs[j], fs[j + 1])
            if res is None:
                break
            fs[j], fs[j + 1] = res
            j -= 1
        while fs and fs[-1] == ident:
            fs.pop()
        while fs and fs[0] == top:
            fs.pop(0)
            peeled += 1
    return peeled, fs


@dataclasses.dataclass(frozen=True)
class GarsideNormalForm:
    """Delta^inf * factors[0] * ... ; factors are 1-based one-line permutations."""

    n: int
    inf: int
    factors: tuple[tuple[int, ...], ...]

    @property
    def canonical_length(self) -> int:
        return len(self.factors)

    @property
    def sup(self) -> int:
        return self.inf + len(self.factors)

    def is_identity(self) -> bool:
        return self.inf == 0 and not self.factors

    def permutation(self) -> Permutation:
        """The image in S_n of the braid this form represents."""
        perm = Permutation.identity(self.n)
        if self.inf % 2:
            perm = Permutation(tuple(range(self.n, 0, -1)))
        for f in self.factors:
            perm = perm * Permutation(f)
        return perm

    def to_word(self) -> BraidWord:
        """A braid word for this form: Delta^inf followed by positive words of the factors."""
        words = [half_twist(self.n) ** self.inf]
        for f in self.factors:
            words.append(BraidWord(self.n, permutation_braid_letters(f)))
        return concat(*words)

    def __str__(self) -> str:
        parts = [f"D^{self.inf}"]
        parts.extend(" ".join(str(x) for x in f) for f in self.factors)
        return " | ".join(parts)


def permutation_braid_letters(perm) -> tuple[int, ...]:
    """
    A positive reduced word for the permutation braid of ``perm`` (1-based
    one-line).  Bubble-sorting by position swaps records the word backwards.
    """
    p = list(perm)
    swaps = []
    changed = True
    while changed:
        changed = False
        for i in range(len(p) - 1):
            if p[i] > p[i + 1]:
                p[i], p[i + 1] = p[i + 1], p[i]
                swaps.append(i + 1)
                changed = True
    return tuple(reversed(swaps))


def normal_form(w: BraidWord) -> GarsideNormalForm:
    """
    Each sigma_i^-1 is rewritten as Delta^-1 (Delta sigma_i^-1) and every
    Delta^-1 is pushed to the front, which applies tau to each factor it
    passes.  Only the parity of the number of later negative letters matters.
    """
    n = w.n
    check_length(len(w.letters))
    letters = w.letters
    parity = [0] * len(letters)
    count = 0
    for idx in range(len(letters) - 1, -1, -1):
        parity[idx] = count & 1
        if letters[idx] < 0:
            count += 1
    factors = []
    for idx, x in enumerate(letters):
        f = _generator_perm(n, x) if x > 0 else _delta_over_generator(n, -x)
        if parity[idx]:
            f = _tau(f)
        factors.append(f)
    peeled, fs = _normalize(n, factors)
    return GarsideNormalForm(
        n=n,
        inf=peeled - count,
        factors=tuple(tuple(v + 1 for v in f) for f in fs),
    )


def is_left_weighted(a, b) -> bool:
    return starting_set(b) <= finishing_set(a)


def is_normal(nf: GarsideNormalForm) -> bool:
    """Check the structural invariants of a normal form."""
    ident = tuple(range(1, nf.n + 1))
    top = tuple(range(nf.n, 0, -1))
    if any(f in (ident, top) for f in nf.factors):
        return False
    return all(is_left_weighted(a, b) for a, b in zip(nf.factors, nf.factors[1:]))


def words_equal(u: BraidWord, v: BraidWord) -> bool:
    if u.n != v.n:
        raise DomainError(f"strand counts differ: {u.n} vs {v.n}")
    return normal_form(u) == normal_form(v)


def is_trivial(w: BraidWord) -> bool:
    return normal_form(w).is_identity()


def verify_conjugation(g: BraidWord, a: BraidWord, b: BraidWord) -> bool:
    """True iff g a g^-1 = b in B_n (checks a given witness; no search)."""
    if not (g.n == a.n == b.n):
        raise DomainError("strand counts differ")
    return words_equal(concat(g, a, invert(g)), b)
