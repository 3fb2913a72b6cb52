"""Signed permutations: the group of monomial symmetries of {1, ..., n}.

An element is a bijection of {1, ..., n} together with a sign on each
image, stored as the image sequence `images` with images[i-1] = p(i) in
{+-1, ..., +-n}.  There are 2^n * n! such elements; composition follows
(p' p)(i) = sgn p(i) * p'(|p(i)|).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from enum import IntEnum
from typing import Iterator, Sequence

from .errors import DegreeMismatch, IndexOutOfRange, InvalidImages
from .rational import RationalMatrix


class Parity(IntEnum):
    EVEN = 0
    ODD = 1

    def __xor__(self, other: "Parity") -> "Parity":  # type: ignore[override]
        return Parity(int(self) ^ int(other))

    __rxor__ = __xor__

    @classmethod
    def of_count(cls, count: int) -> "Parity":
        return cls(count & 1)

    @property
    def sign(self) -> int:
        """+1 for even, -1 for odd."""
        return 1 - 2 * int(self)

    def __str__(self) -> str:
        return "even" if self is Parity.EVEN else "odd"


def _validate_images(images: tuple[int, ...]) -> None:
    n = len(images)
    if n == 0:
        raise InvalidImages("degree must be at least 1")
    seen = set()
    for v in images:
        if v == 0:
            raise InvalidImages("image 0 is not a signed index")
        a = abs(v)
        if a > n:
            raise InvalidImages(f"image {v} outside degree {n}")
        if a in seen:
            raise InvalidImages(f"absolute value {a} repeated")
        seen.add(a)


@dataclass(frozen=True, slots=True)
class SignedPermutation:
    """A signed permutation given by its image sequence."""

    images: tuple[int, ...]

    def __post_init__(self):
        images = tuple(self.images)
        _validate_images(images)
        object.__setattr__(self, "images", images)

    @property
    def n(self) -> int:
        return len(self.images)

    @classmethod
    def identity(cls, n: int) -> "SignedPermutation":
        return cls(tuple(range(1, n + 1)))

    def __call__(self, i: int) -> int:
        """Image of the (positive) point i."""
        if not 1 <= i <= self.n:
            raise IndexOutOfRange(f"point {i} outside 1..{self.n}")
        return self.images[i - 1]

    def act(self, k: int) -> int:
        """Signed action on a basis index: +-i maps to +-p(i), sign-linearly."""
        a = abs(k)
        if k == 0 or a > self.n:
            raise IndexOutOfRange(f"signed index {k} outside +-1..+-{self.n}")
        image = self.images[a - 1]
        return image if k > 0 else -image

    def __mul__(self, inner: "SignedPermutation") -> "SignedPermutation":
        """Composition: (self * inner)(i) = sgn inner(i) * self(|inner(i)|)."""
        if self.n != inner.n:
            raise DegreeMismatch(f"degrees {self.n} and {inner.n} differ")
        outer = self.images
        return SignedPermutation(
            tuple(outer[v - 1] if v > 0 else -outer[-v - 1] for v in inner.images)
        )

    def inverse(self) -> "SignedPermutation":
        inv = [0] * self.n
        for i, v in enumerate(self.images, start=1):
            inv[abs(v) - 1] = i if v > 0 else -i
        return SignedPermutation(tuple(inv))

    __invert__ = inverse

    @property
    def is_identity(self) -> bool:
        return all(v == i for i, v in enumerate(self.images, start=1))

    def parity(self) -> Parity:
        """Inversions of the underlying permutation plus number of sign flips, mod 2."""
        images = self.images
        inv = sum(
            1
            for i in range(len(images))
            for j in range(i + 1, len(images))
            if abs(images[i]) > abs(images[j])
        )
        neg = sum(1 for v in images if v < 0)
        return Parity.of_count(inv + neg)

    def matrix(self) -> RationalMatrix:
        """Column-action matrix: entry sgn p(i) at (row |p(i)|, column i).

        With this placement matrix(p * q) = matrix(p) * matrix(q), and the
        matrix sends the basis column e_i to sgn p(i) * e_{|p(i)|}.
        """
        n = self.n
        rows = [[0] * n for _ in range(n)]
        for i, v in enumerate(self.images):
            rows[abs(v) - 1][i] = 1 if v > 0 else -1
        return RationalMatrix(rows)

    def __str__(self) -> str:
        return "[" + ",".join(str(v) for v in self.images) + "]"


# -- functional surface -------------------------------------------------


def make_signed_perm(images: Sequence[int]) -> SignedPermutation:
    """Validate an image sequence and build the corresponding element."""
    return SignedPermutation(tuple(images))


def compose(outer: SignedPermutation, inner: SignedPermutation) -> SignedPermutation:
    return outer * inner


def inverse(p: SignedPermutation) -> SignedPermutation:
    return p.inverse()


def parity(p: SignedPermutation) -> Parity:
    return p.parity()


def matrix_rep(p: SignedPermutation) -> RationalMatrix:
    return p.matrix()


def act_on_basis(p: SignedPermutation, k: int) -> int:
    return p.act(k)


# -- elementary elements ------------------------------------------------


def identity(n: int) -> SignedPermutation:
    return SignedPermutation.identity(n)


def _base_images(n: int) -> list[int]:
    return list(range(1, n + 1))


def transposition(n: int, i: int, j: int) -> SignedPermutation:
    """Plain swap of points i and j."""
    if i == j:
        raise InvalidImages("transposition needs two distinct points")
    images = _base_images(n)
    images[i - 1], images[j - 1] = j, i
    return SignedPermutation(tuple(images))


def sign_inversion(n: int, i: int) -> SignedPermutation:
    """Flip the sign on one point: i -> -i."""
    images = _base_images(n)
    images[i - 1] = -i
    return SignedPermutation(tuple(images))


def rearrangement_with_inversion(n: int, j: int, k: int) -> SignedPermutation:
    """The generator j -> -k, k -> j of the even subgroup."""
    if j == k:
        raise InvalidImages("need two distinct points")
    images = _base_images(n)
    images[j - 1] = -k
    images[k - 1] = j
    return SignedPermutation(tuple(images))


def inverse_rearrangement(n: int, l: int, m: int) -> SignedPermutation:
    """The cross generator l -> -m, m -> -l."""
    if l == m:
        raise InvalidImages("need two distinct points")
    images = _base_images(n)
    images[l - 1] = -m
    images[m - 1] = -l
    return SignedPermutation(tuple(images))


def three_cycle(n: int, i: int, j: int, k: int) -> SignedPermutation:
    """The cycle i -> j -> k -> i on three distinct points."""
    if len({i, j, k}) != 3:
        raise InvalidImages("three-cycle needs three distinct points")
    images = _base_images(n)
    images[i - 1], images[j - 1], images[k - 1] = j, k, i
    return SignedPermutation(tuple(images))


def all_signed_perms(n: int) -> Iterator[SignedPermutation]:
    """All 2^n * n! elements, in lexicographic order of image tuples."""
    for images in _signed_images(n, (), frozenset()):
        yield SignedPermutation(images)


def _signed_images(n: int, prefix: tuple[int, ...], used: frozenset[int]) -> Iterator[tuple[int, ...]]:
    if len(prefix) == n:
        yield prefix
        return
    for a in range(-n, n + 1):
        if a == 0 or abs(a) in used:
            continue
        yield from _signed_images(n, prefix + (a,), used | {abs(a)})


def group_order(n: int) -> int:
    """2^n * n!, the number of signed permutations of degree n."""
    return (2**n) * _factorial(n)


def _factorial(n: int) -> int:
    out = 1
    for k in range(2, n + 1):
        out *= k
    return out


def arrowy_transpositions(n: int) -> list[SignedPermutation]:
    """All elementary generators: plain swaps and single sign flips."""
    gens = [sign_inversion(n, i) for i in range(1, n + 1)]
    gens += [transposition(n, i, j) for i, j in itertools.combinations(range(1, n + 1), 2)]
    return gens
