"""Faces of the Steinberg torus.

Type A faces are *spin necklaces*: a partition of {1,...,n} into blocks
arranged clockwise on a cycle, with pairwise distinct edge labels in
{1,...,n} satisfying the wrap condition

    label(out of B) == label(into B) + |B|   (mod n).

The labels increase strictly around the cycle except for a single wrap, so
there is a distinguished block — the *clasp* — whose incoming label is the
maximum and whose outgoing label is the minimum.  Necklaces are stored
clasp-first, making equality a plain sequence comparison.

Type C faces are flip-symmetric necklaces on [-n, n] without edge labels:
a central block containing 0 and equal to its own negation, a clockwise
half, an optional self-negating antipodal block, and the implied mirror
half.

Both kinds form a right module over the corresponding finite face monoid:
a finite face refines every necklace block into its string of
intersections.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator, Optional, Tuple

from .budget import check_budget
from .errors import FamilyMismatchError, ValidationError
from .weyl import (
    ColorSet,
    Family,
    WeylElement,
    affine_descent_set,
    enumerate_group,
)
from .coxfaces import Composition, SetComposition, SymComposition

Block = Tuple[int, ...]


def _norm_label(x: int, n: int) -> int:
    """Reduce a label into {1, ..., n} (0 is stored as n)."""
    return (x - 1) % n + 1


@dataclass(frozen=True)
class SpinNecklace:
    family: Family
    blocks: Tuple[Block, ...]
    labels: Tuple[int, ...]

    def __post_init__(self):
        if self.family.tag != "A":
            raise ValidationError("SpinNecklace is a type A object")
        n = self.family.rank
        elements = [x for b in self.blocks for x in b]
        if sorted(elements) != list(range(1, n + 1)):
            raise ValidationError(f"blocks do not partition 1..{n}: {self.blocks}")
        if any(tuple(sorted(b)) != b or not b for b in self.blocks):
            raise ValidationError("blocks must be nonempty and sorted")
        k = len(self.blocks)
        if len(self.labels) != k:
            raise ValidationError("one label per edge required")
        if len(set(self.labels)) != k or not all(1 <= l <= n for l in self.labels):
            raise ValidationError(f"labels must be distinct in 1..{n}: {self.labels}")
        for p in range(k):
            if self.labels[p] != _norm_label(
                self.labels[p - 1] + len(self.blocks[p]), n
            ):
                raise ValidationError(
                    f"label condition fails at edge {p}: {self.labels}"
                )
        if self.labels[0] != min(self.labels) or self.labels[-1] != max(self.labels):
            raise ValidationError("necklace is not stored clasp-first")


def make_spin(family: Family, blocks, labels) -> SpinNecklace:
    """Build a spin necklace from any rotation, canonicalizing to clasp-first."""
    blocks = tuple(tuple(sorted(b)) for b in blocks)
    labels = tuple(_norm_label(l, family.rank) for l in labels)
    k = len(blocks)
    if k != len(labels) or k == 0:
        raise ValidationError("need one label per edge")
    # The clasp is the block right after the maximum label.
    c = (labels.index(max(labels)) + 1) % k
    return SpinNecklace(family, blocks[c:] + blocks[:c], labels[c:] + labels[:c])


@dataclass(frozen=True)
class SymNecklace:
    family: Family
    zero_block: Block
    clockwise: Tuple[Block, ...]
    antipodal: Optional[Block]

    def __post_init__(self):
        if self.family.tag != "C":
            raise ValidationError("SymNecklace is a type C object")
        n = self.family.rank
        if 0 not in self.zero_block:
            raise ValidationError("the zero block must contain 0")
        for b in (self.zero_block,) + self.clockwise + (
            (self.antipodal,) if self.antipodal is not None else ()
        ):
            if not b or tuple(sorted(b)) != b:
                raise ValidationError("blocks must be nonempty and sorted")
        for b in (self.zero_block, self.antipodal):
            if b is not None and tuple(sorted(-x for x in b)) != b:
                raise ValidationError("central/antipodal blocks must be self-negating")
        elements = [x for b in full_cycle(self) for x in b]
        if sorted(elements) != list(range(-n, n + 1)):
            raise ValidationError("blocks do not partition [-n, n]")


def full_cycle(N: SymNecklace) -> Tuple[Block, ...]:
    """The full clockwise cycle starting at the zero block."""
    mirror = tuple(
        tuple(sorted(-x for x in b)) for b in reversed(N.clockwise)
    )
    middle = (N.antipodal,) if N.antipodal is not None else ()
    return (N.zero_block,) + N.clockwise + middle + mirror


def sym_from_cycle(family: Family, cycle) -> SymNecklace:
    """Build a symmetric necklace from a full clockwise cycle (any rotation)."""
    cycle = [tuple(sorted(b)) for b in cycle if b]
    zero_at = next(i for i, b in enumerate(cycle) if 0 in b)
    cycle = cycle[zero_at:] + cycle[:zero_at]
    t = len(cycle) - 1
    m = t // 2
    antipodal = cycle[m + 1] if t % 2 == 1 else None
    necklace = SymNecklace(family, cycle[0], tuple(cycle[1 : m + 1]), antipodal)
    # Mirror consistency: the second half must be the negated reverse.
    if full_cycle(necklace) != tuple(cycle):
        raise ValidationError("cycle is not flip-symmetric")
    return necklace


@dataclass(frozen=True)
class SplitNecklace:
    """Linearized spin necklace: blocks (C2, R, ..., L) plus optional tail C1."""

    family: Family
    blocks: Tuple[Block, ...]
    tail: Optional[Block]

    def __post_init__(self):
        if self.tail is not None and not self.tail:
            raise ValidationError("an empty tail is stored as None")


def clasp(N: SpinNecklace) -> Block:
    return N.blocks[0]


def split(N: SpinNecklace) -> SplitNecklace:
    n = N.family.rank
    incoming, outgoing = N.labels[-1], N.labels[0]
    c = clasp(N)
    assert incoming + len(c) == outgoing + n, "clasp labels inconsistent"
    head = c[: n - incoming]  # the tail C1: first n - incoming elements
    c2 = c[n - incoming :]  # the last `outgoing` elements
    return SplitNecklace(
        N.family, (c2,) + N.blocks[1:], head if head else None
    )


def from_split(S: SplitNecklace) -> SpinNecklace:
    tail = S.tail or ()
    clasp_block = tuple(sorted(tail + S.blocks[0]))
    blocks = (clasp_block,) + S.blocks[1:]
    labels = tuple(itertools.accumulate(len(b) for b in S.blocks))
    return SpinNecklace(S.family, blocks, labels)


def contract_edge(N: SpinNecklace, p: int) -> SpinNecklace:
    """Merge the two blocks joined by edge p (labels[p]); drop its label."""
    k = len(N.blocks)
    if k < 2:
        raise ValidationError("a one-block necklace has no contractible edge")
    q = (p + 1) % k
    merged = tuple(sorted(N.blocks[p] + N.blocks[q]))
    blocks = []
    labels = []
    for i in range(k):
        if i == p:
            continue
        blocks.append(merged if i == q else N.blocks[i])
        labels.append(N.labels[i])
    return make_spin(N.family, blocks, labels)


def module_action(N, G: Composition):
    """Right action of a finite face on a torus face."""
    if N.family != G.family:
        raise FamilyMismatchError("family mismatch")
    n = N.family.rank
    if isinstance(N, SpinNecklace):
        if not isinstance(G, SetComposition):
            raise FamilyMismatchError("type A necklace needs a type A face")
        k = len(N.blocks)
        new_blocks = []
        new_labels = []
        for idx, block in enumerate(N.blocks):
            incoming = N.labels[idx - 1]
            bset = set(block)
            pieces = [
                piece
                for T in G.blocks
                if (piece := tuple(sorted(x for x in T if x in bset)))
            ]
            running = incoming
            for piece in pieces:
                new_blocks.append(piece)
                running = _norm_label(running + len(piece), n)
                new_labels.append(running)
        return make_spin(N.family, new_blocks, new_labels)
    if not isinstance(G, SymComposition):
        raise FamilyMismatchError("type C necklace needs a type C face")
    gblocks = G.full_blocks()
    refined = []
    for block in full_cycle(N):
        bset = set(block)
        for T in gblocks:
            piece = tuple(sorted(x for x in T if x in bset))
            if piece:
                refined.append(piece)
    return sym_from_cycle(N.family, refined)


def w_of_torus_face(N) -> WeylElement:
    if isinstance(N, SpinNecklace):
        s = split(N)
        parts = s.blocks + ((s.tail,) if s.tail else ())
        return WeylElement(N.family, tuple(x for b in parts for x in b))
    values = [x for x in N.zero_block if x > 0]
    for b in N.clockwise:
        values.extend(b)
    if N.antipodal is not None:
        values.extend(x for x in N.antipodal if x < 0)
    return WeylElement(N.family, tuple(values))


def color_set(N) -> ColorSet:
    if isinstance(N, SpinNecklace):
        return ColorSet(N.family, frozenset(N.labels))
    total = sum(1 for x in N.zero_block if x > 0)
    indices = [total]
    for b in N.clockwise:
        total += len(b)
        indices.append(total)
    return ColorSet(N.family, frozenset(indices))


def act(w: WeylElement, N):
    """Left W-action: replace every block by its image, structure unchanged."""
    if w.family != N.family:
        raise FamilyMismatchError("family mismatch")
    if isinstance(N, SpinNecklace):
        blocks = [tuple(sorted(w(x) for x in b)) for b in N.blocks]
        return make_spin(N.family, blocks, N.labels)
    return SymNecklace(
        N.family,
        tuple(sorted(w(x) for x in N.zero_block)),
        tuple(tuple(sorted(w(x) for x in b)) for b in N.clockwise),
        tuple(sorted(w(x) for x in N.antipodal)) if N.antipodal is not None else None,
    )


def maximal_from_perm(w: WeylElement):
    """The maximal torus face corresponding to a group element."""
    n = w.family.rank
    if w.family.tag == "A":
        blocks = tuple((v,) for v in w.values)
        labels = tuple(range(1, n + 1))
        return SpinNecklace(w.family, blocks, labels)
    return SymNecklace(w.family, (0,), tuple((v,) for v in w.values), None)


def is_maximal(N) -> bool:
    if isinstance(N, SpinNecklace):
        return len(N.blocks) == N.family.rank
    return (
        N.zero_block == (0,)
        and N.antipodal is None
        and len(N.clockwise) == N.family.rank
    )


def perm_from_maximal(N) -> WeylElement:
    if not is_maximal(N):
        raise ValidationError("necklace is not a maximal face")
    return w_of_torus_face(N)


def count_torus_faces(family: Family) -> int:
    width = len(family.affine_indices())
    return sum(
        2 ** (width - len(affine_descent_set(w))) for w in enumerate_group(family)
    )


def enumerate_torus_faces(
    family: Family, color: Optional[ColorSet] = None
) -> Iterator:
    """Every torus face exactly once (the empty face does not exist here)."""
    check_budget(count_torus_faces(family), f"torus faces of {family}")
    n = family.rank
    if family.tag == "A":
        universe = tuple(range(1, n + 1))
        for ts in range(n):  # tail size; the tail never exhausts [n]
            for tail in itertools.combinations(universe, ts):
                rest = tuple(x for x in universe if x not in tail)
                bound = max(tail) if tail else 0
                for comp in _ordered_partitions(rest):
                    if min(comp[0]) <= bound:
                        continue  # tail elements must precede C2 inside the clasp
                    N = from_split(
                        SplitNecklace(family, comp, tail if tail else None)
                    )
                    if color is None or color_set(N).indices == color.indices:
                        yield N
        return
    universe = tuple(range(1, n + 1))
    for zs in range(n + 1):
        for zero_abs in itertools.combinations(universe, zs):
            zero_block = tuple(sorted(set(zero_abs) | {0} | {-x for x in zero_abs}))
            after_zero = tuple(x for x in universe if x not in zero_abs)
            for As in range(len(after_zero) + 1):
                for anti_abs in itertools.combinations(after_zero, As):
                    antipodal = (
                        tuple(sorted(set(anti_abs) | {-x for x in anti_abs}))
                        if anti_abs
                        else None
                    )
                    rest = tuple(x for x in after_zero if x not in anti_abs)
                    for comp in _ordered_partitions(rest):
                        for signs in itertools.product((-1, 1), repeat=len(rest)):
                            sign_of = dict(zip(rest, signs))
                            clockwise = tuple(
                                tuple(sorted(sign_of[x] * x for x in b)) for b in comp
                            )
                            N = SymNecklace(family, zero_block, clockwise, antipodal)
                            if color is None or color_set(N).indices == color.indices:
                                yield N


def _ordered_partitions(elements):
    from .coxfaces import _ordered_partitions as op

    return op(elements)


def to_wire(N) -> dict:
    if isinstance(N, SpinNecklace):
        return {"blocks": [list(b) for b in N.blocks], "labels": list(N.labels)}
    return {
        "zero_block": list(N.zero_block),
        "clockwise": [list(b) for b in N.clockwise],
        "antipodal": list(N.antipodal) if N.antipodal is not None else None,
    }


def from_wire(family: Family, data: dict):
    if not isinstance(data, dict):
        raise ValidationError("necklace wire form must be an object")
    if family.tag == "A":
        if "blocks" not in data or "labels" not in data:
            raise ValidationError("spin necklace needs 'blocks' and 'labels'")
        return make_spin(family, data["blocks"], data["labels"])
    if "zero_block" not in data or "clockwise" not in data:
        raise ValidationError("symmetric necklace needs 'zero_block' and 'clockwise'")
    anti = data.get("antipodal")
    return SymNecklace(
        family,
        tuple(sorted(data["zero_block"])),
        tuple(tuple(sorted(b)) for b in data["clockwise"]),
        tuple(sorted(anti)) if anti else None,
    )
