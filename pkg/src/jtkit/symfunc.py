"""Schur classes, Littlewood-Richardson coefficients, and dimension formulas.

Two deliberately independent routes compute LR numbers:

* mult_one grows horizontal-strip chains letter by letter (the iterated
  Pieri picture with the lattice condition enforced at each letter), and
* lr_coefficient fills the skew diagram cell by cell in reverse reading
  order, checking tableau and ballot constraints locally.

The test suite plays them against each other; do not merge them.
"""

from __future__ import annotations

from math import comb

from .shapes import Partition, SkewShape, as_parts, as_shape, conjugate, contains, trim

_MULT_CACHE: dict = {}
_SKEW_CACHE: dict = {}
_DIM_GL_CACHE: dict = {}
_DIM_SKEW_CACHE: dict = {}
_DIM_SUPER_CACHE: dict = {}


def _add_strip(cur: tuple[int, ...], k: int, prev_cum):
    """All ways to add a horizontal strip of k boxes to cur.

    Returns (new_partition, cum) pairs where cum[r] counts the boxes added in
    rows 0..r.  prev_cum is the same record for the previous letter and
    imposes the lattice condition: boxes of this letter through row r may not
    outnumber boxes of the previous letter through row r-1.  None means this
    is the first letter (no condition).
    """
    nrows = len(cur) + 1
    out = []
    newparts: list[int] = []
    cum: list[int] = []

    def rec(r: int, rem: int):
        if r == nrows:
            if rem == 0:
                out.append((trim(newparts), tuple(cum)))
            return
        cur_r = cur[r] if r < len(cur) else 0
        if r == 0:
            cap = rem
        else:
            above = cur[r - 1] if r - 1 < len(cur) else 0
            cap = min(rem, above - cur_r)
        if prev_cum is not None:
            j = r - 1
            if j < 0:
                p = 0
            elif j < len(prev_cum):
                p = prev_cum[j]
            else:
                p = prev_cum[-1] if prev_cum else 0
            cap = min(cap, p - (cum[-1] if cum else 0))
        for c in range(cap + 1):
            newparts.append(cur_r + c)
            cum.append((cum[-1] if cum else 0) + c)
            rec(r + 1, rem - c)
            newparts.pop()
            cum.pop()

    rec(0, k)
    return out


def mult_one(mu, nu) -> dict[tuple[int, ...], int]:
    """Expand the product s_mu * s_nu in the Schur basis.

    Keys are partitions, values the (positive) LR multiplicities.
    """
    mu, nu = as_parts(mu), as_parts(nu)
    key = (mu, nu)
    hit = _MULT_CACHE.get(key)
    if hit is not None:
        return hit
    states: dict[tuple, int] = {(mu, None): 1}
    for k in nu:
        nxt: dict[tuple, int] = {}
        for (part, cum), cnt in states.items():
            for newpart, newcum in _add_strip(part, k, cum):
                skey = (newpart, newcum)
                nxt[skey] = nxt.get(skey, 0) + cnt
        states = nxt
    out: dict[tuple[int, ...], int] = {}
    for (part, _), cnt in states.items():
        out[part] = out.get(part, 0) + cnt
    _MULT_CACHE.setdefault(key, out)
    return out


def pieri_extensions(lam, k: int) -> list[tuple[int, ...]]:
    """Partitions obtained from lam by adding a horizontal strip of k boxes."""
    lam = as_parts(lam)
    return sorted({p for p, _ in _add_strip(lam, int(k), None)})


def _lr_contents(outer, inner, cap=None) -> dict[tuple[int, ...], int]:
    """Tally the contents of all LR (lattice-word) tableaux on outer/inner.

    Cells are visited in reverse reading order, rows top to bottom and right
    to left within a row, so the ballot prefix property can be checked as
    each letter is placed.  cap bounds the count of each letter (used when a
    single coefficient is wanted).
    """
    outer, inner = as_parts(outer), as_parts(inner)
    if not contains(outer, inner):
        raise ValueError(f"inner {inner} not inside outer {outer}")
    nrows = len(outer)
    nletters = min(nrows, len(cap)) if cap is not None else nrows
    cells = []
    for r in range(nrows):
        lo = inner[r] if r < len(inner) else 0
        cells.extend((r, c) for c in range(outer[r] - 1, lo - 1, -1))
    grid: dict[tuple[int, int], int] = {}
    counts = [0] * nletters
    tally: dict[tuple[int, ...], int] = {}

    def in_shape(r: int, c: int) -> bool:
        if r < 0 or r >= nrows:
            return False
        lo = inner[r] if r < len(inner) else 0
        return lo <= c < outer[r]

    def rec(idx: int):
        if idx == len(cells):
            content = trim(counts)
            tally[content] = tally.get(content, 0) + 1
            return
        r, c = cells[idx]
        hi = min(r + 1, nletters)
        above = grid.get((r - 1, c)) if in_shape(r - 1, c) else None
        right = grid.get((r, c + 1)) if in_shape(r, c + 1) else None
        for v in range(1, hi + 1):
            if above is not None and v <= above:
                continue
            if right is not None and v > right:
                continue
            if v > 1 and counts[v - 2] < counts[v - 1] + 1:
                continue
            if cap is not None and counts[v - 1] + 1 > cap[v - 1]:
                continue
            counts[v - 1] += 1
            grid[(r, c)] = v
            rec(idx + 1)
            del grid[(r, c)]
            counts[v - 1] -= 1

    rec(0)
    return tally


def lr_coefficient(lam, mu, nu) -> int:
    """The Littlewood-Richardson coefficient c^lam_{mu,nu}.

    Counts lattice-word tableaux of shape lam/mu and content nu directly.
    """
    lam, mu, nu = as_parts(lam), as_parts(mu), as_parts(nu)
    if sum(lam) != sum(mu) + sum(nu):
        return 0
    if not contains(lam, mu):
        return 0
    tally = _lr_contents(lam, mu, cap=nu)
    return tally.get(nu, 0)


def skew_contents(shape) -> dict[tuple[int, ...], int]:
    """Content tally nu -> c^lam_{mu,nu} for a skew shape lam/mu, memoized."""
    s = as_shape(shape)
    key = (s.outer.parts, s.inner.parts)
    hit = _SKEW_CACHE.get(key)
    if hit is None:
        hit = _lr_contents(key[0], key[1])
        _SKEW_CACHE.setdefault(key, hit)
    return hit


def dim_gl(lam, m: int) -> int:
    """Dimension of the Schur functor S_lam of an m-dimensional space.

    Hook content formula; every division is exact.  Zero exactly when lam has
    more than m rows.
    """
    lam = as_parts(lam)
    m = int(m)
    assert m >= 0
    key = (lam, m)
    hit = _DIM_GL_CACHE.get(key)
    if hit is not None:
        return hit
    if len(lam) > m:
        _DIM_GL_CACHE.setdefault(key, 0)
        return 0
    lamt = conjugate(lam)
    num = 1
    den = 1
    for i, row in enumerate(lam, start=1):
        for j in range(1, row + 1):
            num *= m + j - i
            den *= row - j + lamt[j - 1] - i + 1
    q, r = divmod(num, den)
    assert r == 0
    _DIM_GL_CACHE.setdefault(key, q)
    return q


def dim_gl_skew(shape, m: int) -> int:
    """Dimension of the skew Schur functor on an m-dimensional space."""
    s = as_shape(shape)
    key = (s.outer.parts, s.inner.parts, int(m))
    hit = _DIM_SKEW_CACHE.get(key)
    if hit is not None:
        return hit
    total = sum(c * dim_gl(nu, m) for nu, c in skew_contents(s).items())
    _DIM_SKEW_CACHE.setdefault(key, total)
    return total


def dim_super(lam, r: int, s: int, mu=()) -> int:
    """Z/2-graded SSYT count for the hook-shaped general linear superalgebra.

    Letters 1..r are even, r+1..r+s odd.  Rows repeat only even letters,
    columns repeat only odd letters.  Vanishes on straight shapes exactly
    when lam_{r+1} > s.  A skew shape is accepted via mu.
    """
    lam, mu = as_parts(lam), as_parts(mu)
    r, s = int(r), int(s)
    assert r >= 0 and s >= 0
    if not contains(lam, mu):
        raise ValueError(f"inner {mu} not inside outer {lam}")
    key = (lam, mu, r, s)
    hit = _DIM_SUPER_CACHE.get(key)
    if hit is not None:
        return hit
    nrows = len(lam)
    cells = []
    for row in range(nrows):
        lo = mu[row] if row < len(mu) else 0
        cells.extend((row, c) for c in range(lo, lam[row]))
    grid: dict[tuple[int, int], int] = {}

    def in_shape(row: int, c: int) -> bool:
        if row < 0 or row >= nrows:
            return False
        lo = mu[row] if row < len(mu) else 0
        return lo <= c < lam[row]

    def rec(idx: int) -> int:
        if idx == len(cells):
            return 1
        row, c = cells[idx]
        left = grid.get((row, c - 1)) if in_shape(row, c - 1) else None
        above = grid.get((row - 1, c)) if in_shape(row - 1, c) else None
        total = 0
        for v in range(1, r + s + 1):
            if left is not None and (v < left or (v == left and v > r)):
                continue
            if above is not None and (v < above or (v == above and v <= r)):
                continue
            grid[(row, c)] = v
            total += rec(idx + 1)
            del grid[(row, c)]
        return total

    count = rec(0)
    _DIM_SUPER_CACHE.setdefault(key, count)
    return count


class SchurClass:
    """An integer combination of products of Schur functors.

    factor_count is the number of tensor factors; each term maps a tuple of
    that many partitions to a nonzero integer coefficient.
    """

    __slots__ = ("k", "terms")

    def __init__(self, k: int, terms=None):
        k = int(k)
        if k < 1:
            raise ValueError("factor_count must be at least 1")
        clean: dict[tuple[tuple[int, ...], ...], int] = {}
        for key, coeff in (terms or {}).items():
            coeff = int(coeff)
            if coeff == 0:
                continue
            tkey = tuple(as_parts(p) for p in key)
            if len(tkey) != k:
                raise ValueError(f"term {tkey} has {len(tkey)} factors, expected {k}")
            clean[tkey] = clean.get(tkey, 0) + coeff
        object.__setattr__(self, "k", k)
        object.__setattr__(self, "terms", {key: c for key, c in clean.items() if c != 0})

    def __setattr__(self, name, value):
        raise AttributeError("SchurClass is immutable")

    @classmethod
    def zero(cls, k: int) -> "SchurClass":
        return cls(k, {})

    @classmethod
    def unit(cls, k: int) -> "SchurClass":
        return cls(k, {((),) * k: 1})

    @classmethod
    def schur(cls, lam, k: int = 1, factor: int = 0) -> "SchurClass":
        """The class of a single Schur functor placed in one tensor factor."""
        key = tuple(as_parts(lam) if f == factor else () for f in range(k))
        return cls(k, {key: 1})

    def is_zero(self) -> bool:
        return not self.terms

    def is_nonnegative(self) -> bool:
        return all(c >= 0 for c in self.terms.values())

    def coefficient(self, key) -> int:
        tkey = tuple(as_parts(p) for p in key)
        return self.terms.get(tkey, 0)

    def support_size(self) -> int:
        return len(self.terms)

    def dim(self, dims) -> int:
        """Evaluate at concrete vector space dimensions, one per factor."""
        dims = tuple(int(d) for d in dims)
        assert len(dims) == self.k
        total = 0
        for key, coeff in self.terms.items():
            prod = coeff
            for lam, m in zip(key, dims):
                prod *= dim_gl(lam, m)
                if prod == 0:
                    break
            total += prod
        return total

    def sorted_items(self):
        def order(item):
            key, _ = item
            return (sum(sum(p) for p in key), tuple((sum(p), p) for p in key))

        return sorted(self.terms.items(), key=order)

    def __add__(self, other):
        if not isinstance(other, SchurClass):
            return NotImplemented
        if other.k != self.k:
            raise ValueError("factor_count mismatch")
        out = dict(self.terms)
        for key, c in other.terms.items():
            out[key] = out.get(key, 0) + c
        return SchurClass(self.k, out)

    def __neg__(self):
        return SchurClass(self.k, {key: -c for key, c in self.terms.items()})

    def __sub__(self, other):
        if not isinstance(other, SchurClass):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return SchurClass(self.k, {key: c * other for key, c in self.terms.items()})
        if not isinstance(other, SchurClass):
            return NotImplemented
        if other.k != self.k:
            raise ValueError("factor_count mismatch")
        out: dict[tuple, int] = {}
        for key1, c1 in self.terms.items():
            for key2, c2 in other.terms.items():
                # expand factorwise, then take the cartesian product of the
                # per-factor Schur expansions
                partials = [((), c1 * c2)]
                for f in range(self.k):
                    expansion = mult_one(key1[f], key2[f])
                    partials = [
                        (built + (lam,), coeff * lr)
                        for built, coeff in partials
                        for lam, lr in expansion.items()
                    ]
                for key, coeff in partials:
                    out[key] = out.get(key, 0) + coeff
        return SchurClass(self.k, out)

    def __rmul__(self, other):
        if isinstance(other, int):
            return self * other
        return NotImplemented

    def __eq__(self, other):
        if isinstance(other, SchurClass):
            return self.k == other.k and self.terms == other.terms
        return NotImplemented

    def __hash__(self):
        return hash((self.k, tuple(self.sorted_items())))

    def to_json(self) -> list[dict]:
        return [
            {"partitions": [list(p) for p in key], "coeff": c}
            for key, c in self.sorted_items()
        ]

    @classmethod
    def from_json(cls, data, k: int | None = None) -> "SchurClass":
        terms = {}
        for entry in data:
            key = tuple(tuple(p) for p in entry["partitions"])
            if k is None:
                k = len(key)
            terms[key] = terms.get(key, 0) + int(entry["coeff"])
        if k is None:
            raise ValueError("factor_count needed for an empty class")
        return cls(k, terms)

    def __repr__(self):
        items = self.sorted_items()
        body = ", ".join(f"{key}: {c}" for key, c in items[:6])
        if len(items) > 6:
            body += f", ... ({len(items)} terms)"
        return f"SchurClass(k={self.k}, {{{body}}})"


def multiply(a: SchurClass, b: SchurClass) -> SchurClass:
    """Product of two classes with matching factor counts."""
    if not isinstance(a, SchurClass) or not isinstance(b, SchurClass):
        raise TypeError("multiply expects two SchurClass values")
    return a * b


def skew_to_straight(shape) -> SchurClass:
    """Expand a skew Schur functor into straight ones, one tensor factor."""
    s = as_shape(shape)
    return SchurClass(1, {(nu,): c for nu, c in skew_contents(s).items()})


def external_product(a: SchurClass, b: SchurClass) -> SchurClass:
    """Tensor the factor lists of two classes (no LR expansion)."""
    out: dict[tuple, int] = {}
    for key1, c1 in a.terms.items():
        for key2, c2 in b.terms.items():
            key = key1 + key2
            out[key] = out.get(key, 0) + c1 * c2
    return SchurClass(a.k + b.k, out)


def binom(n: int, k: int) -> int:
    """Binomial coefficient that is zero for negative or overdrawn arguments."""
    if k < 0 or n < 0 or k > n:
        return 0
    return comb(n, k)
