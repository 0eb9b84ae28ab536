"""Partitions, skew shapes, ribbons, and permutations.

Conventions used throughout the package:

* partitions are tuples of weakly decreasing positive integers; the empty
  tuple is the empty partition.  Trailing zeros are trimmed on construction.
* compositions are tuples of positive integers (order matters).
* weights are plain integer tuples of a fixed length; entries may be
  negative.  They are produced by the dotted action and never validated
  beyond their length.
* box coordinates are 0-based (row, col) pairs in English orientation
  (row 0 on top, columns growing to the right).

Most functions in this module accept either a raw tuple or the matching
wrapper class and normalize immediately.
"""

from __future__ import annotations

import itertools
from typing import Iterable, Iterator


def trim(parts: Iterable[int]) -> tuple[int, ...]:
    """Canonicalize a weakly decreasing sequence by dropping trailing zeros.

    Raises ValueError if the sequence increases anywhere or dips below zero.
    """
    t = tuple(int(p) for p in parts)
    for a, b in zip(t, t[1:]):
        if a < b:
            raise ValueError(f"parts not weakly decreasing: {t}")
    if t and t[-1] < 0:
        raise ValueError(f"negative part in {t}")
    while t and t[-1] == 0:
        t = t[:-1]
    return t


def as_parts(p) -> tuple[int, ...]:
    """Coerce a Partition or raw iterable to a canonical parts tuple."""
    if isinstance(p, Partition):
        return p.parts
    return trim(p)


def conjugate(parts) -> tuple[int, ...]:
    """Transpose of a partition as a raw tuple: column lengths of the diagram."""
    t = as_parts(parts)
    if not t:
        return ()
    return tuple(sum(1 for p in t if p >= c + 1) for c in range(t[0]))


def contains(outer, inner) -> bool:
    """Whether inner fits inside outer componentwise (after zero padding)."""
    o, i = as_parts(outer), as_parts(inner)
    if len(i) > len(o):
        return False
    return all(i[k] <= o[k] for k in range(len(i)))


class Partition:
    """A partition stored canonically (weakly decreasing, no trailing zeros)."""

    __slots__ = ("parts",)

    def __init__(self, parts: Iterable[int] = ()):
        object.__setattr__(self, "parts", trim(parts))

    def __setattr__(self, name, value):
        raise AttributeError("Partition is immutable")

    def size(self) -> int:
        return sum(self.parts)

    def length(self) -> int:
        return len(self.parts)

    def part(self, i: int) -> int:
        """The i-th part, 1-based, zero beyond the length."""
        assert i >= 1
        return self.parts[i - 1] if i <= len(self.parts) else 0

    def transpose(self) -> "Partition":
        return Partition(conjugate(self.parts))

    def contains(self, other) -> bool:
        return contains(self.parts, other)

    def to_json(self) -> list[int]:
        return list(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def __len__(self):
        return len(self.parts)

    def __getitem__(self, i):
        return self.parts[i]

    def __eq__(self, other):
        if isinstance(other, Partition):
            return self.parts == other.parts
        if isinstance(other, tuple):
            return self.parts == other
        return NotImplemented

    def __hash__(self):
        return hash(self.parts)

    def __repr__(self):
        return f"Partition{self.parts!r}"


def transpose(p: Partition) -> Partition:
    """Transpose of a partition; involutive."""
    return Partition(conjugate(as_parts(p)))


class SkewShape:
    """A skew shape outer/inner with inner contained in outer."""

    __slots__ = ("outer", "inner")

    def __init__(self, outer, inner=()):
        o = Partition(as_parts(outer))
        i = Partition(as_parts(inner))
        if not o.contains(i):
            raise ValueError(f"inner {i.parts} not contained in outer {o.parts}")
        object.__setattr__(self, "outer", o)
        object.__setattr__(self, "inner", i)

    def __setattr__(self, name, value):
        raise AttributeError("SkewShape is immutable")

    def size(self) -> int:
        return self.outer.size() - self.inner.size()

    def cells(self) -> list[tuple[int, int]]:
        """Boxes of the shape as 0-based (row, col) pairs, row-major order."""
        out = []
        for r, o in enumerate(self.outer.parts):
            i = self.inner.part(r + 1)
            out.extend((r, c) for c in range(i, o))
        return out

    def is_horizontal_strip(self) -> bool:
        """At most one box in each column."""
        o, i = self.outer, self.inner
        return all(i.part(r) >= o.part(r + 1) for r in range(1, len(o)))

    def is_vertical_strip(self) -> bool:
        """At most one box in each row."""
        o, i = self.outer, self.inner
        return all(o.part(r) - i.part(r) <= 1 for r in range(1, len(o) + 1))

    def transpose(self) -> "SkewShape":
        return SkewShape(conjugate(self.outer.parts), conjugate(self.inner.parts))

    def to_json(self) -> dict:
        return {"outer": list(self.outer.parts), "inner": list(self.inner.parts)}

    def label(self) -> str:
        """Compact text form, used as a Betti row label."""
        o = "(" + ",".join(map(str, self.outer.parts)) + ")"
        if not self.inner.parts:
            return o
        return o + "/(" + ",".join(map(str, self.inner.parts)) + ")"

    def __eq__(self, other):
        if isinstance(other, SkewShape):
            return self.outer == other.outer and self.inner == other.inner
        return NotImplemented

    def __hash__(self):
        return hash((self.outer.parts, self.inner.parts))

    def __repr__(self):
        return f"SkewShape({self.outer.parts!r}, {self.inner.parts!r})"


def as_shape(s) -> SkewShape:
    """Coerce a SkewShape, Partition, or raw tuple (straight shape) to SkewShape."""
    if isinstance(s, SkewShape):
        return s
    return SkewShape(as_parts(s), ())


def is_horizontal_strip(s: SkewShape) -> bool:
    return as_shape(s).is_horizontal_strip()


def is_vertical_strip(s: SkewShape) -> bool:
    return as_shape(s).is_vertical_strip()


def skew_from_boxes(boxes: Iterable[tuple[int, int]]) -> SkewShape:
    """Build the skew shape with the given box set, translated so the minimal
    row and column are 0.

    Raises ValueError when the boxes do not form a skew shape: every row in
    range must be a contiguous, nonempty run, runs must be pairwise disjoint,
    and both boundary profiles must be weakly decreasing going down.
    """
    blist = [(int(r), int(c)) for r, c in boxes]
    bset = set(blist)
    if not bset:
        return SkewShape((), ())
    if len(bset) != len(blist):
        raise ValueError("overlapping boxes")
    r0 = min(r for r, _ in bset)
    c0 = min(c for _, c in bset)
    bset = {(r - r0, c - c0) for r, c in bset}
    nrows = max(r for r, _ in bset) + 1
    starts, ends = [], []
    for r in range(nrows):
        cols = sorted(c for rr, c in bset if rr == r)
        if not cols:
            raise ValueError(f"row {r} empty, not a skew shape")
        if cols != list(range(cols[0], cols[-1] + 1)):
            raise ValueError(f"row {r} not contiguous")
        starts.append(cols[0])
        ends.append(cols[-1])
    outer = [e + 1 for e in ends]
    inner = starts
    try:
        return SkewShape(outer, inner)
    except ValueError as exc:
        raise ValueError(f"boxes do not normalize to a skew shape: {exc}") from exc


def ribbon_of(c) -> SkewShape:
    """The ribbon (border strip) of a composition.

    Row lengths are c_r, ..., c_1 reading top to bottom and consecutive rows
    share exactly one column.
    """
    alpha = tuple(int(a) for a in c)
    if not alpha or any(a < 1 for a in alpha):
        raise ValueError(f"composition parts must be positive: {alpha}")
    r = len(alpha)
    boxes = []
    start = 0
    for i, a in enumerate(alpha):
        # rows are laid out bottom-up: c_1 is the lowest row, each next row
        # starts at the previous row's last column
        row = r - 1 - i
        boxes.extend((row, start + k) for k in range(a))
        start += a - 1
    return skew_from_boxes(boxes)


def _attach(d: SkewShape, c, merge_row: bool) -> SkewShape:
    rib = ribbon_of(c)
    dcells = as_shape(d).cells()
    if not dcells:
        return rib
    h = len(as_shape(d).outer)
    rib_cells = rib.cells()
    top_end = max(col for row, col in rib_cells if row == 0)
    bottom_start = as_shape(d).inner.part(h)
    if merge_row:
        # ribbon top row continues d's bottom row to the left, same row
        row_shift, col_shift = h - 1, bottom_start - 1 - top_end
    else:
        # ribbon top row sits below d's bottom row, sharing one column
        row_shift, col_shift = h, bottom_start - top_end
    boxes = dcells + [(r + row_shift, col + col_shift) for r, col in rib_cells]
    return skew_from_boxes(boxes)


def attach_odot(d: SkewShape, c) -> SkewShape:
    """Glue a ribbon onto a skew shape, merging the ribbon's top row into the
    bottom row of d (contiguously, to its left); the rest of the ribbon hangs
    below."""
    return _attach(as_shape(d), c, merge_row=True)


def attach_dot(d: SkewShape, c) -> SkewShape:
    """Stack a ribbon below a skew shape: the ribbon's top row goes directly
    under d's bottom row with its rightmost box sharing that row's leftmost
    column."""
    return _attach(as_shape(d), c, merge_row=False)


class Permutation:
    """A permutation of {1..n} in one-line notation."""

    __slots__ = ("word",)

    def __init__(self, word: Iterable[int]):
        w = tuple(int(x) for x in word)
        if sorted(w) != list(range(1, len(w) + 1)):
            raise ValueError(f"not a permutation of 1..{len(w)}: {w}")
        object.__setattr__(self, "word", w)

    def __setattr__(self, name, value):
        raise AttributeError("Permutation is immutable")

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(range(1, n + 1))

    def n(self) -> int:
        return len(self.word)

    def length(self) -> int:
        """Number of inversions."""
        w = self.word
        return sum(1 for i in range(len(w)) for j in range(i + 1, len(w)) if w[i] > w[j])

    def sign(self) -> int:
        return -1 if self.length() % 2 else 1

    def apply(self, v: Iterable[int]) -> tuple[int, ...]:
        """Permute a vector: result_i = v_{sigma(i)}."""
        v = tuple(v)
        assert len(v) == len(self.word)
        return tuple(v[self.word[i] - 1] for i in range(len(v)))

    def __eq__(self, other):
        if isinstance(other, Permutation):
            return self.word == other.word
        return NotImplemented

    def __hash__(self):
        return hash(self.word)

    def __repr__(self):
        return f"Permutation{self.word!r}"


def dotted_action(s: Permutation, w: Iterable[int]) -> tuple[int, ...]:
    """The dotted action s(w + rho) - rho with rho = (n-1, ..., 1, 0)."""
    w = tuple(int(x) for x in w)
    n = s.n()
    if len(w) != n:
        raise ValueError(f"weight length {len(w)} != permutation size {n}")
    rho = tuple(range(n - 1, -1, -1))
    shifted = tuple(a + b for a, b in zip(w, rho))
    return tuple(a - b for a, b in zip(s.apply(shifted), rho))


def permutations_by_length(n: int, bound: int = 8) -> dict[int, list[Permutation]]:
    """All permutations of {1..n} grouped by inversion count."""
    if n < 1 or n > bound:
        raise ValueError(f"n must be in 1..{bound}, got {n}")
    out: dict[int, list[Permutation]] = {}
    for w in itertools.permutations(range(1, n + 1)):
        p = Permutation(w)
        out.setdefault(p.length(), []).append(p)
    return out


def partitions_of(n: int, max_part: int | None = None, max_length: int | None = None) -> Iterator[tuple[int, ...]]:
    """Partitions of n in lexicographically ascending order as tuples.

    The first part increases outermost, so for n=4 the order is
    (1,1,1,1), (2,1,1), (2,2), (3,1), (4).
    """
    if max_part is None:
        max_part = n
    if max_length is None:
        max_length = n
    if n == 0:
        yield ()
        return
    if n < 0 or max_length <= 0 or max_part <= 0:
        return
    for first in range(1, min(n, max_part) + 1):
        for rest in partitions_of(n - first, max_part=first, max_length=max_length - 1):
            yield (first,) + rest


def scan_partitions(max_length: int, max_part: int) -> Iterator[tuple[int, ...]]:
    """Nonempty partitions inside the max_length x max_part box, ordered by
    size and then lexicographically.  This is the deterministic order used by
    positivity scans."""
    for n in range(1, max_length * max_part + 1):
        yield from partitions_of(n, max_part=max_part, max_length=max_length)


def subpartitions(lam) -> Iterator[tuple[int, ...]]:
    """All partitions contained in lam, ordered by size then lexicographically."""
    lam = as_parts(lam)
    seen = sorted(
        set(_subparts_rec(lam)),
        key=lambda t: (sum(t), t),
    )
    yield from seen


def _subparts_rec(lam: tuple[int, ...]) -> Iterator[tuple[int, ...]]:
    if not lam:
        yield ()
        return
    for first in range(0, lam[0] + 1):
        for rest in _subparts_rec(tuple(min(p, first) for p in lam[1:])):
            yield trim((first,) + rest)


def compositions_of(d: int) -> Iterator[tuple[int, ...]]:
    """All 2^(d-1) compositions of d (d >= 1), plus the empty one for d = 0."""
    if d == 0:
        yield ()
        return
    for first in range(1, d + 1):
        for rest in compositions_of(d - first):
            yield (first,) + rest
