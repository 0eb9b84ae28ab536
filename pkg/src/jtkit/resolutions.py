"""Betti tables of pure free resolutions and their Hilbert series checks.

Tables store explicit rows plus an optional tail descriptor for eventually
geometric ranks (step-1 twists).  A ratio of 1 is the constant tail over a
quadric; the rational normal curve of degree d produces ratio d - 1.
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm

from .quadric import QuadricContext, quadric_schur_dim
from .sequences import GradedSequence, hs_series, jt_minor, make_sequence, veronese
from .shapes import Partition, SkewShape, attach_dot
from .symfunc import dim_gl
from .powerseries import TruncSeries


@dataclass(frozen=True)
class BettiRow:
    index: int
    twist: int
    rank: int
    label: str | None = None

    def to_json(self) -> dict:
        out = {"index": self.index, "twist": self.twist, "rank": self.rank}
        if self.label is not None:
            out["label"] = self.label
        return out


@dataclass(frozen=True)
class BettiTail:
    """Eventually geometric continuation: from start onward the twist grows
    by step and the rank picks up a factor of ratio per index."""

    start: int
    rank: int
    step: int = 1
    ratio: int = 1

    def to_json(self) -> dict:
        out = {"start": self.start, "rank": self.rank, "step": self.step}
        if self.ratio != 1:
            out["ratio"] = self.ratio
        return out


@dataclass(frozen=True)
class BettiTable:
    rows: tuple
    tail: BettiTail | None = None

    def __post_init__(self):
        rows = tuple(self.rows)
        object.__setattr__(self, "rows", rows)
        for a, b in zip(rows, rows[1:]):
            if a.index >= b.index:
                raise ValueError("row indices must strictly increase")
            if a.twist >= b.twist:
                raise ValueError("twists must strictly increase")
        for row in rows:
            if row.rank <= 0:
                raise ValueError(f"stored ranks must be positive, got {row.rank} at index {row.index}")
        if self.tail is not None:
            t = self.tail
            anchored = [r for r in rows if r.index == t.start]
            if len(anchored) != 1:
                raise ValueError("tail start must match exactly one stored row")
            base = anchored[0]
            if base.rank != t.rank:
                raise ValueError("tail rank must match the anchor row")
            for row in rows:
                if row.index <= t.start:
                    continue
                k = row.index - t.start
                if row.twist != base.twist + t.step * k:
                    raise ValueError(f"tail twist mismatch at index {row.index}")
                if row.rank != t.rank * t.ratio**k:
                    raise ValueError(f"tail rank mismatch at index {row.index}")

    def is_empty(self) -> bool:
        return not self.rows

    def max_twist(self) -> int:
        return max(r.twist for r in self.rows)

    def rank_at(self, index: int) -> int:
        """Rank at a homological index, extrapolating through the tail."""
        for row in self.rows:
            if row.index == index:
                return row.rank
        if self.tail is not None and index > self.tail.start:
            return self.tail.rank * self.tail.ratio ** (index - self.tail.start)
        return 0

    def twist_at(self, index: int) -> int:
        for row in self.rows:
            if row.index == index:
                return row.twist
        if self.tail is not None and index > self.tail.start:
            base = next(r for r in self.rows if r.index == self.tail.start)
            return base.twist + self.tail.step * (index - self.tail.start)
        raise ValueError(f"no row at index {index}")

    def to_json(self) -> dict:
        return {
            "rows": [r.to_json() for r in self.rows],
            "tail": self.tail.to_json() if self.tail is not None else None,
        }

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["index", "twist", "rank", "label"])
        for r in self.rows:
            writer.writerow([r.index, r.twist, r.rank, r.label or ""])
        return buf.getvalue()


def _extended_shift(e: tuple[int, ...], k: int) -> int:
    """The k-th shift (1-based), with e extended by ones past its length."""
    return e[k - 1] if k <= len(e) else 1


def efw_partitions(e, count: int) -> list[Partition]:
    """The partition ladder attached to a shift composition.

    The 0-th partition has j-th row equal to the total excess of the shifts
    past position j; each later one appends the next shift's worth of boxes
    to the next row.
    """
    e = tuple(int(x) for x in e)
    if not e or any(x < 1 for x in e):
        raise ValueError(f"shifts must be positive integers, got {e}")
    count = int(count)
    if count < 1:
        raise ValueError("count must be at least 1")
    n = len(e)
    width = max(count, n) + 1
    lam0 = [sum(_extended_shift(e, k) - 1 for k in range(j + 1, n + 1)) for j in range(1, width + 1)]
    out = [Partition(lam0)]
    cur = list(lam0)
    for i in range(1, count):
        cur[i - 1] += _extended_shift(e, i)
        out.append(Partition(cur))
    return out


def efw_betti(e, e_dim: int, count: int | None = None) -> BettiTable:
    """Betti table of the pure resolution with the given shifts over a
    polynomial ring whose space of variables has dimension e_dim.

    Empty exactly when the shift at position e_dim (extended by ones)
    exceeds 1, the obstruction to the complex being nonzero.
    """
    e = tuple(int(x) for x in e)
    e_dim = int(e_dim)
    if e_dim < 1:
        raise ValueError("e_dim must be at least 1")
    if count is None:
        count = e_dim + 1
    if _extended_shift(e, e_dim) > 1:
        return BettiTable(())
    lams = efw_partitions(e, count)
    rows = []
    twist = 0
    for i, lam in enumerate(lams):
        if i > 0:
            twist += _extended_shift(e, i)
        rank = dim_gl(lam, e_dim)
        if rank == 0:
            continue
        rows.append(BettiRow(i, twist, rank, label=SkewShape(lam.parts).label()))
    return BettiTable(tuple(rows))


def quadric_pure_resolution(m: int, e, tail_terms: int = 4) -> BettiTable:
    """Betti table of the pure resolution with shifts e over the quadric ring
    in m variables.  A final shift above 1 gives a finite table; a final
    shift of 1 gives a linear constant tail, asserted and recorded."""
    m = int(m)
    e = tuple(int(x) for x in e)
    if len(e) != m:
        raise ValueError(f"need exactly m = {m} shifts, got {len(e)}")
    if any(x < 1 for x in e):
        raise ValueError("shifts must be positive")
    tail_terms = int(tail_terms)
    if tail_terms < 1:
        raise ValueError("tail_terms must be at least 1")
    ctx = QuadricContext(m)
    lams = efw_partitions(e, m)
    twists = [0]
    for i in range(1, m):
        twists.append(twists[-1] + e[i - 1])
    rows = []
    for i in range(m):
        rank = quadric_schur_dim(ctx, lams[i])
        assert rank > 0
        rows.append(BettiRow(i, twists[i], rank, label=SkewShape(lams[i].parts).label()))
    if e[m - 1] > 1:
        return BettiTable(tuple(rows))
    base = lams[m - 1].parts
    const = rows[-1].rank
    for j in range(1, tail_terms + 1):
        shape = base + (1,) * j
        rank = quadric_schur_dim(ctx, shape)
        assert rank == const, f"tail rank {rank} at step {j} breaks constancy {const}"
        rows.append(BettiRow(m - 1 + j, twists[m - 1] + j, rank, label=SkewShape(shape).label()))
    return BettiTable(tuple(rows), BettiTail(start=m - 1, rank=const))


def rnc_sequence(d: int) -> GradedSequence:
    """Dimension sequence of the degree-d Veronese of a polynomial ring in
    two variables: 1, d + 1, 2d + 1, ..."""
    d = int(d)
    if d < 1:
        raise ValueError("need d >= 1")
    base = make_sequence("poly", m=2).dim_view()
    return veronese(base, d)


def rnc_pure_resolution(d: int, e, tail_terms: int = 4) -> BettiTable:
    """Betti table of the pure resolution with three shifts over the
    homogeneous coordinate ring of the rational normal curve of degree d.

    A final shift above 1 gives a finite table.  A final shift of 1 gives a
    linear tail whose ranks grow geometrically with ratio d - 1 (so d = 1
    degenerates to a finite table).  Head rows are labelled by partitions;
    tail rows carry the ribbon-extended skew shapes whose functors realize
    them."""
    d = int(d)
    e = tuple(int(x) for x in e)
    if len(e) != 3:
        raise ValueError(f"need exactly 3 shifts, got {len(e)}")
    if any(x < 1 for x in e):
        raise ValueError("shifts must be positive")
    if d < 1:
        raise ValueError("need d >= 1")
    tail_terms = int(tail_terms)
    if tail_terms < 1:
        raise ValueError("tail_terms must be at least 1")
    seq = rnc_sequence(d)
    lams = efw_partitions(e, 4)
    twists = [0, e[0], e[0] + e[1]]
    rows = []
    for i in range(3):
        rank = jt_minor(seq, lams[i].parts)
        assert rank > 0
        rows.append(BettiRow(i, twists[i], rank, label=SkewShape(lams[i].parts).label()))
    if e[2] > 1:
        return BettiTable(tuple(rows))
    ratio = d - 1
    base_rank = rows[2].rank
    dee = SkewShape((d * e[0] + d * e[1] - 1, d * e[1]), (d - 1,) if d > 1 else ())
    tail_shape = lams[2].parts
    for j in range(1, tail_terms + 1):
        tail_shape = tail_shape + (1,)
        rank = jt_minor(seq, tail_shape)
        expected = base_rank * ratio**j
        assert rank == expected, f"tail rank {rank} at step {j}, expected {expected}"
        if rank == 0:
            # d = 1: the tail vanishes and the table is finite
            return BettiTable(tuple(rows))
        label = attach_dot(dee, (d,) * j).label()
        rows.append(BettiRow(2 + j, twists[2] + j, rank, label=label))
    return BettiTable(tuple(rows), BettiTail(start=2, rank=base_rank, ratio=ratio))


@dataclass(frozen=True)
class PurityReport:
    is_polynomial: bool
    nonnegative: bool
    coefficients: tuple
    dimension: int | None
    bound: int
    horizon: int

    def to_json(self) -> dict:
        return {
            "is_polynomial": self.is_polynomial,
            "nonnegative": self.nonnegative,
            "coefficients": list(self.coefficients),
            "dimension": self.dimension,
            "bound": self.bound,
            "horizon": self.horizon,
        }


def validate_purity(table: BettiTable, a: GradedSequence, tail_horizon: int = 24, margin: int = 6) -> PurityReport:
    """Check that the alternating sum of shifted copies of the sequence's
    Hilbert series collapses to a polynomial with nonnegative coefficients.

    The candidate module series is computed as a truncated power series up to
    tail_horizon, with the tail (when present) summed in closed geometric
    form.  Coefficients past the degree bound (one more than the largest
    stored twist) must vanish through the horizon; the horizon must clear
    the bound by at least margin or the certification refuses to answer.
    """
    if table.is_empty():
        return PurityReport(True, True, (), 0, 0, int(tail_horizon))
    tail_horizon = int(tail_horizon)
    margin = int(margin)
    bound = table.max_twist() + 1
    if tail_horizon < bound + margin:
        raise ValueError(f"horizon {tail_horizon} too small to certify, need at least {bound + margin}")
    hsa = hs_series(a, tail_horizon)
    acc = TruncSeries.zero(1, tail_horizon)
    cutoff = table.tail.start if table.tail is not None else None
    for row in table.rows:
        if cutoff is not None and row.index >= cutoff:
            continue
        term = TruncSeries.monomial(1, tail_horizon, (row.twist,), row.rank)
        if row.index % 2:
            term = -term
        acc = acc + term
    if cutoff is not None:
        t = table.tail
        anchor = next(r for r in table.rows if r.index == t.start)
        geo = {}
        for j in range(0, tail_horizon - anchor.twist + 1):
            coeff = t.rank * (-t.ratio) ** j
            geo[(anchor.twist + t.step * j,)] = coeff
        tail_series = TruncSeries(1, tail_horizon, geo)
        if t.start % 2:
            tail_series = -tail_series
        acc = acc + tail_series
    series = acc * hsa
    coeffs = series.univariate_coeffs()
    is_poly = all(c == 0 for c in coeffs[bound + 1 :])
    reported = coeffs[: bound + 1]
    while reported and reported[-1] == 0:
        reported.pop()
    nonneg = is_poly and all(c >= 0 for c in reported)
    dim = sum(reported) if is_poly else None
    return PurityReport(is_poly, nonneg, tuple(reported), dim, bound, tail_horizon)


@dataclass(frozen=True)
class HKSolution:
    """The two-dimensional space of pure Betti vectors for a quadric ring in
    n variables, presented by two primitive basis vectors: one with a
    constant tail, one finite (the classical polynomial-ring solution in one
    fewer variable)."""

    twists: tuple
    tail: tuple
    finite: tuple
    tail_raw: tuple

    def to_json(self) -> dict:
        return {
            "twists": list(self.twists),
            "tail": list(self.tail),
            "finite": list(self.finite),
            "tail_raw": [str(x) for x in self.tail_raw],
        }


def _taylor_remainders(coeffs: list[Fraction], count: int) -> list[Fraction]:
    """First count coefficients of the expansion around t = 1, by repeated
    synthetic division by (t - 1).  Exact."""
    p = list(coeffs)
    out = []
    for _ in range(count):
        # Horner pass: remainder is p(1), quotient stays in the list
        acc = Fraction(0)
        for j in range(len(p) - 1, -1, -1):
            acc += p[j]
            p[j] = acc
        out.append(p[0])
        p = p[1:]
        if not p:
            p = [Fraction(0)]
    return out


def _solve_square(matrix: list[list[Fraction]], rhs: list[Fraction]) -> list[Fraction]:
    n = len(matrix)
    m = [row[:] + [rhs[i]] for i, row in enumerate(matrix)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if m[r][col] != 0), None)
        if pivot is None:
            raise ValueError("singular system")
        m[col], m[pivot] = m[pivot], m[col]
        inv = 1 / m[col][col]
        m[col] = [x * inv for x in m[col]]
        for r in range(n):
            if r != col and m[r][col] != 0:
                factor = m[r][col]
                m[r] = [x - factor * y for x, y in zip(m[r], m[col])]
    return [m[i][n] for i in range(n)]


def _primitive(vec: list[Fraction]) -> tuple[int, ...]:
    denoms = [x.denominator for x in vec]
    scale = 1
    for d in denoms:
        scale = lcm(scale, d)
    ints = [int(x * scale) for x in vec]
    g = 0
    for x in ints:
        g = gcd(g, abs(x))
    if g:
        ints = [x // g for x in ints]
    if ints and ints[0] < 0:
        ints = [-x for x in ints]
    return tuple(ints)


def _pattern_remainders(patterns: list[dict[int, int]], count: int) -> list[list[Fraction]]:
    out = []
    for pat in patterns:
        deg = max(pat)
        coeffs = [Fraction(pat.get(k, 0)) for k in range(deg + 1)]
        out.append(_taylor_remainders(coeffs, count))
    return out


def hk_solve(twists, n: int | None = None) -> HKSolution:
    """Solve the pure-resolution rank conditions for a quadric ring in n
    variables with the given strictly increasing twists.

    The space of solutions is two dimensional.  The tail branch normalizes
    the constant tail rank to 1 before clearing denominators; the finite
    branch is the classical solution for a polynomial ring in n - 1
    variables, which here resolves a module of finite length."""
    twists = tuple(int(x) for x in twists)
    if n is None:
        n = len(twists)
    n = int(n)
    if n != len(twists):
        raise ValueError(f"need n = {n} twists, got {len(twists)}")
    if n < 2:
        raise ValueError("need at least two twists")
    if any(a >= b for a, b in zip(twists, twists[1:])):
        raise ValueError("twists must strictly increase")
    if twists[0] < 0:
        raise ValueError("twists must be nonnegative")
    conds = n - 1

    # tail branch: head terms carry t^d + t^(d+1), the tail collapses to t^d
    patterns = []
    for i in range(n - 1):
        sign = -1 if i % 2 else 1
        patterns.append({twists[i]: sign, twists[i] + 1: sign})
    sign = -1 if (n - 1) % 2 else 1
    patterns.append({twists[n - 1]: sign})
    rems = _pattern_remainders(patterns, conds)
    matrix = [[rems[i][k] for i in range(n - 1)] for k in range(conds)]
    rhs = [-rems[n - 1][k] for k in range(conds)]
    head = _solve_square(matrix, rhs)
    tail_raw = tuple(head) + (Fraction(1),)
    tail_vec = _primitive(list(tail_raw))

    # finite branch: plain monomials, same vanishing conditions
    patterns = []
    for i in range(n):
        sign = -1 if i % 2 else 1
        patterns.append({twists[i]: sign})
    rems = _pattern_remainders(patterns, conds)
    matrix = [[rems[i][k] for i in range(n - 1)] for k in range(conds)]
    rhs = [-rems[n - 1][k] for k in range(conds)]
    head = _solve_square(matrix, rhs)
    finite_vec = _primitive(head + [Fraction(1)])

    return HKSolution(twists, tail_vec, finite_vec, tail_raw)
