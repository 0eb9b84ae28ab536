"""Dense truncated power series over the integers, in any number of variables.

Coefficients live in a dict keyed by exponent tuples; everything past the
total-degree cutoff is discarded.  Arithmetic is exact.
"""

from __future__ import annotations


class TruncSeries:
    __slots__ = ("nvars", "trunc", "coeffs")

    def __init__(self, nvars: int, trunc: int, coeffs=None):
        assert nvars >= 1 and trunc >= 0
        object.__setattr__(self, "nvars", nvars)
        object.__setattr__(self, "trunc", trunc)
        clean = {}
        for exps, c in (coeffs or {}).items():
            exps = tuple(int(e) for e in exps)
            assert len(exps) == nvars and all(e >= 0 for e in exps)
            if sum(exps) <= trunc and c != 0:
                clean[exps] = clean.get(exps, 0) + int(c)
        object.__setattr__(self, "coeffs", {e: c for e, c in clean.items() if c != 0})

    def __setattr__(self, name, value):
        raise AttributeError("TruncSeries is immutable")

    @classmethod
    def zero(cls, nvars: int, trunc: int) -> "TruncSeries":
        return cls(nvars, trunc, {})

    @classmethod
    def one(cls, nvars: int, trunc: int) -> "TruncSeries":
        return cls(nvars, trunc, {(0,) * nvars: 1})

    @classmethod
    def monomial(cls, nvars: int, trunc: int, exps, coeff: int = 1) -> "TruncSeries":
        return cls(nvars, trunc, {tuple(exps): coeff})

    @classmethod
    def var(cls, nvars: int, trunc: int, i: int) -> "TruncSeries":
        exps = [0] * nvars
        exps[i] = 1
        return cls(nvars, trunc, {tuple(exps): 1})

    @classmethod
    def univariate(cls, coeff_list, trunc: int) -> "TruncSeries":
        return cls(1, trunc, {(d,): c for d, c in enumerate(coeff_list)})

    def coefficient(self, exps) -> int:
        return self.coeffs.get(tuple(exps), 0)

    def constant(self) -> int:
        return self.coeffs.get((0,) * self.nvars, 0)

    def _check(self, other: "TruncSeries"):
        assert self.nvars == other.nvars and self.trunc == other.trunc

    def __add__(self, other):
        if not isinstance(other, TruncSeries):
            return NotImplemented
        self._check(other)
        out = dict(self.coeffs)
        for e, c in other.coeffs.items():
            out[e] = out.get(e, 0) + c
        return TruncSeries(self.nvars, self.trunc, out)

    def __neg__(self):
        return TruncSeries(self.nvars, self.trunc, {e: -c for e, c in self.coeffs.items()})

    def __sub__(self, other):
        if not isinstance(other, TruncSeries):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return TruncSeries(self.nvars, self.trunc, {e: c * other for e, c in self.coeffs.items()})
        if not isinstance(other, TruncSeries):
            return NotImplemented
        self._check(other)
        out: dict = {}
        for e1, c1 in self.coeffs.items():
            d1 = sum(e1)
            for e2, c2 in other.coeffs.items():
                if d1 + sum(e2) > self.trunc:
                    continue
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return TruncSeries(self.nvars, self.trunc, out)

    def __rmul__(self, other):
        if isinstance(other, int):
            return self * other
        return NotImplemented

    def __pow__(self, n: int):
        assert n >= 0
        result = TruncSeries.one(self.nvars, self.trunc)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def inverse(self) -> "TruncSeries":
        """Multiplicative inverse; requires constant term +1 or -1."""
        c0 = self.constant()
        if c0 not in (1, -1):
            raise ValueError(f"inverse needs unit constant term, got {c0}")
        # self = c0 (1 - r) with r of positive order, so 1/self = c0 sum r^k
        r = TruncSeries.one(self.nvars, self.trunc) - (self * c0)
        acc = TruncSeries.one(self.nvars, self.trunc)
        power = TruncSeries.one(self.nvars, self.trunc)
        for _ in range(self.trunc):
            power = power * r
            if not power.coeffs:
                break
            acc = acc + power
        return acc * c0

    def __eq__(self, other):
        if isinstance(other, TruncSeries):
            return (
                self.nvars == other.nvars
                and self.trunc == other.trunc
                and self.coeffs == other.coeffs
            )
        return NotImplemented

    def __hash__(self):
        return hash((self.nvars, self.trunc, tuple(sorted(self.coeffs.items()))))

    def embed(self, nvars: int, positions) -> "TruncSeries":
        """Reinterpret in a larger variable set; positions[k] is the new index
        of the current k-th variable."""
        positions = tuple(positions)
        assert len(positions) == self.nvars and nvars >= self.nvars
        out = {}
        for e, c in self.coeffs.items():
            ne = [0] * nvars
            for k, p in enumerate(positions):
                ne[p] = e[k]
            out[tuple(ne)] = c
        return TruncSeries(nvars, self.trunc, out)

    def univariate_coeffs(self, upto: int | None = None) -> list[int]:
        """Coefficient list [c_0, ..., c_N] for a one-variable series."""
        assert self.nvars == 1
        n = self.trunc if upto is None else min(upto, self.trunc)
        return [self.coeffs.get((d,), 0) for d in range(n + 1)]

    def __repr__(self):
        items = sorted(self.coeffs.items())[:8]
        body = ", ".join(f"{e}: {c}" for e, c in items)
        more = "" if len(self.coeffs) <= 8 else f", ... ({len(self.coeffs)} terms)"
        return f"TruncSeries(nvars={self.nvars}, trunc={self.trunc}, {{{body}{more}}})"


def geometric_univariate(ratio: int, trunc: int) -> TruncSeries:
    """The series sum_k (ratio * t)^k up to the truncation order."""
    return TruncSeries(1, trunc, {(k,): ratio**k for k in range(trunc + 1)})
