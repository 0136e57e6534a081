"""
2x2 matrix images of braid generators, and the checker for the
"mutually conjugate, commuting at cyclic distance >= k" generator hypotheses.

Entries that are all integers (or Fractions) are handled in exact rational
arithmetic; anything else falls back to floats compared at a tolerance.
"""
from __future__ import annotations

import dataclasses
from fractions import Fraction
from numbers import Rational
from typing import Sequence

from .braid_core import BraidWord, commutator, cyclic_distance, cyclic_generator, delta, generator
from .commutator import conjugacy_chain_witness, s_letter
from .errors import DomainError
from .garside import verify_conjugation, words_equal

DEFAULT_TOL = 1e-9


@dataclasses.dataclass(frozen=True)
class Matrix2:
    """The matrix [[a, b], [c, d]]."""

    a: object
    b: object
    c: object
    d: object

    @classmethod
    def from_rows(cls, rows) -> Matrix2:
        (a, b), (c, d) = rows
        return cls(a, b, c, d)

    @classmethod
    def parse(cls, text: str) -> Matrix2:
        """Row-major quadruple separated by commas and/or spaces, e.g. ``"1,1,0,1"``."""
        parts = text.replace(",", " ").split()
        if len(parts) != 4:
            raise DomainError(f"a 2x2 matrix needs 4 entries, got {text!r}")
        vals = []
        for p in parts:
            try:
                vals.append(int(p))
            except ValueError:
                try:
                    vals.append(float(p))
                except ValueError as exc:
                    raise DomainError(f"bad matrix entry {p!r}") from exc
        return cls(*vals)

    @classmethod
    def identity(cls) -> Matrix2:
        return cls(1, 0, 0, 1)

    @property
    def exact(self) -> bool:
        return all(isinstance(x, Rational) for x in (self.a, self.b, self.c, self.d))

    def rows(self):
        return ((self.a, self.b), (self.c, self.d))

    def det(self):
        return self.a * self.d - self.b * self.c

    def __matmul__(self, o: Matrix2) -> Matrix2:
        return Matrix2(
            self.a * o.a + self.b * o.c,
            self.a * o.b + self.b * o.d,
            self.c * o.a + self.d * o.c,
            self.c * o.b + self.d * o.d,
        )

    def __sub__(self, o: Matrix2) -> Matrix2:
        return Matrix2(self.a - o.a, self.b - o.b, self.c - o.c, self.d - o.d)

    def inverse(self) -> Matrix2:
        det = self.det()
        if det == 0:
            raise DomainError(f"singular matrix {self.rows()}")
        if self.exact:
            det = Fraction(det)
            m = Matrix2(self.d / det, -self.b / det, -self.c / det, self.a / det)
            return Matrix2(*(_tidy(x) for x in (m.a, m.b, m.c, m.d)))
        return Matrix2(self.d / det, -self.b / det, -self.c / det, self.a / det)

    def max_norm(self):
        return max(abs(self.a), abs(self.b), abs(self.c), abs(self.d))

    def __str__(self) -> str:
        return f"[[{self.a}, {self.b}], [{self.c}, {self.d}]]"


def _tidy(x):
    if isinstance(x, Fraction) and x.denominator == 1:
        return int(x)
    return x


def _close(residual, tol: float) -> bool:
    if isinstance(residual, Rational):
        return residual == 0
    return residual <= tol


def evaluate_word(images: Sequence[Matrix2], w: BraidWord) -> Matrix2:
    """Product of generator images along the word; sigma_i^-1 maps to the inverse image."""
    if any(abs(x) > len(images) for x in w.letters):
        raise DomainError("not enough generator images for this word")
    inverses: dict[int, Matrix2] = {}
    for i, m in enumerate(images, start=1):
        if m.det() == 0:
            raise DomainError(f"image of sigma_{i} is singular")
    out = Matrix2.identity()
    for x in w.letters:
        if x > 0:
            out = out @ images[x - 1]
        else:
            if x not in inverses:
                inverses[x] = images[-x - 1].inverse()
            out = out @ inverses[x]
    return out


def braid_relation_residual(images: Sequence[Matrix2]):
    """
    Largest max-entry residual over the braid relations
    A_i A_{i+1} A_i = A_{i+1} A_i A_{i+1} and A_i A_j = A_j A_i (|i - j| >= 2).
    Exact (an int or Fraction) when all entries are rational.
    """
    worst = 0
    m = len(images)
    for i in range(m - 1):
        x, y = images[i], images[i + 1]
        worst = max(worst, ((x @ y @ x) - (y @ x @ y)).max_norm())
    for i in range(m):
        for j in range(i + 2, m):
            x, y = images[i], images[j]
            worst = max(worst, ((x @ y) - (y @ x)).max_norm())
    return worst


def check_braid_relations(images: Sequence[Matrix2], tol: float = DEFAULT_TOL) -> bool:
    return _close(braid_relation_residual(images), tol)


def commutator_residual(images: Sequence[Matrix2]):
    """Largest max-entry norm of X Y - Y X over all pairs of images."""
    worst = 0
    for i, x in enumerate(images):
        for y in images[i + 1 :]:
            worst = max(worst, ((x @ y) - (y @ x)).max_norm())
    return worst


def image_abelian(images: Sequence[Matrix2], tol: float = DEFAULT_TOL) -> bool:
    return _close(commutator_residual(images), tol)


# Integer matrices for sigma_1, sigma_2 giving a nonabelian B_3 -> SL_2(Z).
B3_SL2Z = (Matrix2(1, 1, 0, 1), Matrix2(1, 0, -1, 1))


@dataclasses.dataclass(frozen=True)
class HypothesisReport:
    n: int
    k: int
    conjugacy: tuple[bool, ...]
    commutation: tuple[tuple[int, int, bool], ...]
    threshold: bool

    @property
    def passes(self) -> bool:
        return self.threshold and all(self.conjugacy) and all(ok for _, _, ok in self.commutation)

    def failures(self) -> list[str]:
        out = []
        if not self.threshold:
            out.append(f"threshold: {self.n} < {2 * self.k + 1}")
        out.extend(f"conjugacy {i + 1}->{i % self.n + 2}" for i, ok in enumerate(self.conjugacy) if not ok)
        out.extend(f"commute {i},{j}" for i, j, ok in self.commutation if not ok)
        return out


def lemma_general_hypotheses(
    taus: Sequence[BraidWord], k: int, witnesses: Sequence[BraidWord]
) -> HypothesisReport:
    """
    Check that witnesses[i] conjugates taus[i] to taus[i+1] (cyclically), that
    taus[i] and taus[j] commute whenever their cyclic distance in Z/n is at
    least k, and that n >= 2k + 1, where n = len(taus).
    """
    n = len(taus)
    if n == 0:
        raise DomainError("need at least one element")
    m = taus[0].n
    if any(t.n != m for t in taus) or any(g.n != m for g in witnesses):
        raise DomainError("elements live in different braid groups")
    if len(witnesses) != n:
        raise DomainError(f"need {n} conjugation witnesses, got {len(witnesses)}")
    conj = tuple(verify_conjugation(witnesses[i], taus[i], taus[(i + 1) % n]) for i in range(n))
    comm = []
    for i in range(n):
        for j in range(i + 1, n):
            if cyclic_distance(i, j, n) >= k:
                ok = words_equal(commutator(taus[i], taus[j]), BraidWord.identity(m))
                comm.append((i + 1, j + 1, ok))
    return HypothesisReport(n, k, conj, tuple(comm), n >= 2 * k + 1)


def cyclic_sigma_family(n: int) -> tuple[list[BraidWord], list[BraidWord]]:
    """sigma_1..sigma_n of B_n (sigma_n the band generator); delta shifts each to the next."""
    taus = [cyclic_generator(i, n) for i in range(1, n + 1)]
    return taus, [delta(n)] * n


def cyclic_s_family(n: int) -> tuple[list[BraidWord], list[BraidWord]]:
    """s_1..s_n in cyclic mode, with the zero-exponent chain conjugators as witnesses."""
    taus = [s_letter(i, n, "cyclic") for i in range(1, n + 1)]
    return taus, [conjugacy_chain_witness(i, n) for i in range(1, n + 1)]


def b4_to_b3_images() -> tuple[BraidWord, BraidWord, BraidWord]:
    """sigma_1, sigma_3 -> sigma_1 and sigma_2 -> sigma_2."""
    return generator(1, 3), generator(2, 3), generator(1, 3)


def check_homomorphism_b4_b3() -> bool:
    """Every defining relation of B_4 holds among the images in B_3."""
    img = b4_to_b3_images()
    for i in range(2):
        x, y = img[i], img[i + 1]
        if not words_equal(x * y * x, y * x * y):
            return False
    return words_equal(img[0] * img[2], img[2] * img[0])
