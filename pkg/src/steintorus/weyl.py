"""Weyl groups of types A and C as (signed) permutations.

Type A with rank parameter ``n`` is the symmetric group on {1,...,n}
(the root system is A_{n-1}).  Type C with rank ``n`` is the group of signed
permutations w of [-n, n] with w(-i) = -w(i); only the positive half
(w(1), ..., w(n)) is stored, the mirror half is implicit.

Descents are computed from one-line notation with the boundary conventions

* type A: subscripts mod n, i.e. w_{n+1} = w_1 (used by the affine descent
  at index n);
* type C: w_0 = 0 = w_{n+1}.

Simple-root indices:

* type A: the finite simple roots are identified with {1, ..., n-1} and the
  extra affine index is n;
* type C: the finite simple roots are identified with {0, ..., n-1} and the
  extra affine index is n.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import factorial
from typing import Iterator, Tuple

from .budget import check_budget
from .errors import FamilyMismatchError, ValidationError


@dataclass(frozen=True, order=True)
class Family:
    """A Weyl group family tag: ('A', n) or ('C', n)."""

    tag: str
    rank: int

    def __post_init__(self):
        if self.tag not in ("A", "C"):
            raise ValidationError(f"unknown family tag {self.tag!r}")
        if self.rank < 1:
            raise ValidationError(f"rank must be >= 1, got {self.rank}")

    @property
    def affine_index(self) -> int:
        """Index of the extra (affine) node: n for both families."""
        return self.rank

    def finite_indices(self) -> range:
        """Indices of the finite simple roots."""
        if self.tag == "A":
            return range(1, self.rank)
        return range(0, self.rank)

    def affine_indices(self) -> range:
        """Indices of the affine simple system (finite ones plus the affine node)."""
        if self.tag == "A":
            return range(1, self.rank + 1)
        return range(0, self.rank + 1)

    def group_order(self) -> int:
        if self.tag == "A":
            return factorial(self.rank)
        return factorial(self.rank) * 2**self.rank


@dataclass(frozen=True, order=True)
class WeylElement:
    """A group element in one-line notation.

    ``values`` is (w_1, ..., w_n); for type C entries are signed and their
    absolute values form a permutation of {1, ..., n}.
    """

    family: Family
    values: Tuple[int, ...]

    def __post_init__(self):
        n = self.family.rank
        if len(self.values) != n:
            raise ValidationError("one-line notation has the wrong length")
        if self.family.tag == "A":
            if sorted(self.values) != list(range(1, n + 1)):
                raise ValidationError(f"not a permutation of 1..{n}: {self.values}")
        else:
            if sorted(abs(v) for v in self.values) != list(range(1, n + 1)):
                raise ValidationError(
                    f"absolute values are not a permutation of 1..{n}: {self.values}"
                )

    def __call__(self, i: int) -> int:
        """Apply the element to a point of its domain.

        Type A acts on {1..n}; type C acts on [-n, n] through the implicit
        extension w(-i) = -w(i), w(0) = 0.
        """
        if self.family.tag == "A":
            return self.values[i - 1]
        if i == 0:
            return 0
        if i > 0:
            return self.values[i - 1]
        return -self.values[-i - 1]

    def is_identity(self) -> bool:
        return all(self(i) == i for i in range(1, self.family.rank + 1))


@dataclass(frozen=True)
class ColorSet:
    """A set of simple-root indices attached to a family.

    Finite-complex color sets use the finite index range only; torus color
    sets may also contain the affine index and are nonempty.
    """

    family: Family
    indices: frozenset

    def __post_init__(self):
        allowed = set(self.family.affine_indices())
        if not set(self.indices) <= allowed:
            raise ValidationError(
                f"indices {sorted(self.indices)} outside the legal range {sorted(allowed)}"
            )

    def sorted(self):
        return sorted(self.indices)

    def __contains__(self, i):
        return i in self.indices

    def __len__(self):
        return len(self.indices)


def identity(family: Family) -> WeylElement:
    return WeylElement(family, tuple(range(1, family.rank + 1)))


def _check_same(u: WeylElement, v: WeylElement) -> None:
    if u.family != v.family:
        raise FamilyMismatchError(f"family mismatch: {u.family} vs {v.family}")


def multiply(u: WeylElement, v: WeylElement) -> WeylElement:
    """Compose: (uv)(i) = u(v(i))."""
    _check_same(u, v)
    return WeylElement(u.family, tuple(u(v(i)) for i in range(1, u.family.rank + 1)))


def inverse(u: WeylElement) -> WeylElement:
    n = u.family.rank
    out = [0] * n
    for i in range(1, n + 1):
        image = u(i)
        if image > 0:
            out[image - 1] = i
        else:
            out[-image - 1] = -i
    return WeylElement(u.family, tuple(out))


def _one_line_with_boundary(w: WeylElement) -> Tuple[Tuple[int, ...], range]:
    """Return the padded one-line word and the index range of affine descents.

    The padded word is indexed so that word[i] = w_i for i in the returned
    range plus one more entry on the right; descents are read off as
    word[i] > word[i+1].
    """
    n = w.family.rank
    if w.family.tag == "A":
        # w_{n+1} = w_1; affine indices run 1..n.
        word = (0,) + w.values + (w.values[0],)
        return word, range(1, n + 1)
    # w_0 = 0 = w_{n+1}; affine indices run 0..n.
    word = (0,) + w.values + (0,)
    return word, range(0, n + 1)


def descent_set(w: WeylElement) -> ColorSet:
    """Finite descent set: indices i with w_i > w_{i+1} (finite range only)."""
    word, _ = _one_line_with_boundary(w)
    finite = w.family.finite_indices()
    return ColorSet(
        w.family, frozenset(i for i in finite if word[i] > word[i + 1])
    )


def affine_descent_set(w: WeylElement) -> ColorSet:
    """Affine descent set: the finite descents plus the affine boundary test.

    Always nonempty, never the full affine index set.
    """
    word, affine = _one_line_with_boundary(w)
    return ColorSet(
        w.family, frozenset(i for i in affine if word[i] > word[i + 1])
    )


def enumerate_group(family: Family) -> Iterator[WeylElement]:
    """All group elements in lexicographic order of their one-line notation."""
    check_budget(family.group_order(), f"group of {family}")
    n = family.rank
    if family.tag == "A":
        for values in itertools.permutations(range(1, n + 1)):
            yield WeylElement(family, values)
        return
    signed = sorted(
        (tuple(s * p for s, p in zip(signs, perm)))
        for perm in itertools.permutations(range(1, n + 1))
        for signs in itertools.product((-1, 1), repeat=n)
    )
    for values in signed:
        yield WeylElement(family, values)
