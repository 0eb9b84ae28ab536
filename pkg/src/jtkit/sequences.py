"""Graded sequences and their Jacobi-Trudi minors.

A GradedSequence assigns a value to every degree d >= 0.  Values are either
plain integers (dimensions) or SchurClass elements (virtual characters with
a fixed number of tensor factors).  Negative degrees silently yield zero, so
Toeplitz-style minors can index freely.

Caches are write-once and per sequence instance.  The environment variable
JTKIT_CACHE_SIZE caps the number of entries each cache will accept; once a
cache is full new values are computed but not stored.
"""

from __future__ import annotations

import os
from dataclasses import dataclass

from .determinant import det_bareiss, det_expand
from .powerseries import TruncSeries
from .shapes import (
    SkewShape,
    as_parts,
    as_shape,
    compositions_of,
    conjugate,
    contains,
    scan_partitions,
    subpartitions,
    trim,
)
from .symfunc import SchurClass, binom, external_product, pieri_extensions

_CAP = None


def _cache_cap() -> int:
    global _CAP
    if _CAP is None:
        raw = os.environ.get("JTKIT_CACHE_SIZE", "")
        try:
            _CAP = max(0, int(raw)) if raw else 1 << 20
        except ValueError:
            _CAP = 1 << 20
    return _CAP


def _memo_put(memo: dict, key, value):
    # write once: an existing entry wins, and a full cache skips storing
    if key in memo:
        return memo[key]
    if len(memo) < _cache_cap():
        memo[key] = value
    return value


class GradedSequence:
    """A graded sequence of integers or Schur classes, total in the degree."""

    __slots__ = ("name", "value_kind", "factor_count", "factor_dims", "_term_fn", "_terms", "_minors", "_eclasses", "_dim_view")

    def __init__(self, name: str, value_kind: str, term_fn, factor_count: int = 1, factor_dims=None):
        if value_kind not in ("integer", "class"):
            raise ValueError(f"unknown value kind {value_kind!r}")
        if value_kind == "class":
            if factor_dims is None or len(tuple(factor_dims)) != factor_count:
                raise ValueError("class sequences need one dimension per factor")
        object.__setattr__(self, "name", str(name))
        object.__setattr__(self, "value_kind", value_kind)
        object.__setattr__(self, "factor_count", int(factor_count))
        object.__setattr__(self, "factor_dims", tuple(int(x) for x in factor_dims) if factor_dims is not None else None)
        object.__setattr__(self, "_term_fn", term_fn)
        object.__setattr__(self, "_terms", {})
        object.__setattr__(self, "_minors", {})
        object.__setattr__(self, "_eclasses", {})
        object.__setattr__(self, "_dim_view", None)

    def __setattr__(self, name, value):
        raise AttributeError("GradedSequence is immutable")

    def zero_value(self):
        if self.value_kind == "integer":
            return 0
        return SchurClass.zero(self.factor_count)

    def unit_value(self):
        if self.value_kind == "integer":
            return 1
        return SchurClass.unit(self.factor_count)

    def term(self, d: int):
        d = int(d)
        if d < 0:
            return self.zero_value()
        hit = self._terms.get(d)
        if hit is not None:
            return hit
        value = self._term_fn(self, d)
        if self.value_kind == "integer":
            value = int(value)
        return _memo_put(self._terms, d, value)

    def dims(self, d: int) -> int:
        value = self.term(d)
        if self.value_kind == "integer":
            return value
        return value.dim(self.factor_dims)

    def dim_view(self) -> "GradedSequence":
        """The same sequence with every class collapsed to its dimension."""
        if self.value_kind == "integer":
            return self
        view = self._dim_view
        if view is None:
            src = self
            view = GradedSequence(f"dims({self.name})", "integer", lambda seq, d: src.dims(d))
            object.__setattr__(self, "_dim_view", view)
        return view

    def __repr__(self):
        return f"GradedSequence({self.name!r}, {self.value_kind})"


@dataclass(frozen=True)
class PFReport:
    """Outcome of a finite total-positivity scan."""

    verdict: str
    order: int
    window: int
    checked: int
    witness: tuple | None = None

    def to_json(self) -> dict:
        wit = None
        if self.witness is not None:
            lam, mu, value = self.witness
            wit = {
                "lambda": list(lam),
                "mu": list(mu),
                "value": value.to_json() if isinstance(value, SchurClass) else value,
            }
        return {
            "verdict": self.verdict,
            "order": self.order,
            "window": self.window,
            "checked": self.checked,
            "witness": wit,
        }


def _poly_term(seq, d):
    return SchurClass(1, {(trim((d,)),): 1})


def _tensoralg_term(seq, d):
    if d == 0:
        return SchurClass.unit(1)
    return seq.term(d - 1) * SchurClass.schur((1,))


def make_sequence(kind: str, **params) -> GradedSequence:
    """Build one of the named sequences.

    Integer-valued kinds: quadric(m), qdual(m), super(r, s), heisenberg(u),
    squares(), list(dims).  Class-valued kinds: poly(m), tensoralg(m).
    """
    kind = kind.lower()
    if kind in ("poly", "polynomial"):
        m = int(_require(kind, params, "m"))
        _no_extra(kind, params)
        if m < 1:
            raise ValueError("poly needs m >= 1")
        return GradedSequence(f"poly:{m}", "class", _poly_term, 1, (m,))
    if kind in ("tensoralg", "tensor_algebra"):
        m = int(_require(kind, params, "m"))
        _no_extra(kind, params)
        if m < 1:
            raise ValueError("tensoralg needs m >= 1")
        return GradedSequence(f"tensoralg:{m}", "class", _tensoralg_term, 1, (m,))
    if kind == "quadric":
        m = int(_require(kind, params, "m"))
        _no_extra(kind, params)
        if m < 1:
            raise ValueError("quadric needs m >= 1")
        return GradedSequence(
            f"quadric:{m}",
            "integer",
            lambda seq, d: binom(m + d - 1, d) - binom(m + d - 3, d - 2),
        )
    if kind in ("qdual", "quadric_dual"):
        m = int(_require(kind, params, "m"))
        _no_extra(kind, params)
        if m < 1:
            raise ValueError("qdual needs m >= 1")
        return GradedSequence(
            f"qdual:{m}",
            "integer",
            lambda seq, d: sum(binom(m, d - 2 * k) for k in range(d // 2 + 1)),
        )
    if kind == "super":
        r = int(_require(kind, params, "r"))
        s = int(_require(kind, params, "s"))
        _no_extra(kind, params)
        if r < 0 or s < 0 or r + s < 1:
            raise ValueError("super needs r, s >= 0 with r + s >= 1")

        def term(seq, d, r=r, s=s):
            total = 0
            for i in range(d + 1):
                even = binom(r + i - 1, i) if r >= 1 else (1 if i == 0 else 0)
                total += even * binom(s, d - i)
            return total

        return GradedSequence(f"super:{r},{s}", "integer", term)
    if kind == "heisenberg":
        u = int(params.pop("u", 2))
        _no_extra(kind, params)
        if u < 1:
            raise ValueError("heisenberg needs u >= 1")
        return GradedSequence(
            f"heisenberg:{u}",
            "integer",
            lambda seq, d: sum(binom(d - 2 * k + u - 1, u - 1) for k in range(d // 2 + 1)),
        )
    if kind == "squares":
        _no_extra(kind, params)
        return GradedSequence("squares", "integer", lambda seq, d: (d + 1) ** 2)
    if kind == "list":
        dims = tuple(int(x) for x in _require(kind, params, "dims"))
        _no_extra(kind, params)
        if not dims:
            raise ValueError("list needs at least one value")

        def term(seq, d, dims=dims):
            if d >= len(dims):
                raise ValueError(f"degree {d} beyond stored range of list sequence (length {len(dims)})")
            return dims[d]

        return GradedSequence("list:" + ",".join(map(str, dims)), "integer", term)
    raise ValueError(f"unknown sequence kind {kind!r}")


def _no_extra(kind, params):
    if params:
        raise ValueError(f"unexpected parameters for {kind}: {sorted(params)}")


def _require(kind, params, name):
    if name not in params:
        raise ValueError(f"{kind} needs parameter {name!r}")
    return params.pop(name)


def veronese(a: GradedSequence, d: int) -> GradedSequence:
    """Degree-d Veronese subsequence: term i is a's term d*i."""
    d = int(d)
    if d < 1:
        raise ValueError("veronese needs d >= 1")
    return GradedSequence(
        f"veronese({a.name},{d})",
        a.value_kind,
        lambda seq, i: a.term(d * i),
        a.factor_count,
        a.factor_dims,
    )


def tensor_product(a: GradedSequence, b: GradedSequence) -> GradedSequence:
    """Graded tensor product: degree n collects all A_i (x) B_{n-i}.

    Class inputs keep their factor structure (factor lists concatenate).  If
    either side is integer valued both collapse to dimensions.
    """
    if a.value_kind == "class" and b.value_kind == "class":
        k = a.factor_count + b.factor_count

        def term(seq, n):
            acc = SchurClass.zero(k)
            for i in range(n + 1):
                acc = acc + external_product(a.term(i), b.term(n - i))
            return acc

        return GradedSequence(
            f"tensor({a.name},{b.name})", "class", term, k, a.factor_dims + b.factor_dims
        )
    av, bv = a.dim_view(), b.dim_view()
    return GradedSequence(
        f"tensor({a.name},{b.name})",
        "integer",
        lambda seq, n: sum(av.term(i) * bv.term(n - i) for i in range(n + 1)),
    )


def segre(a: GradedSequence, b: GradedSequence) -> GradedSequence:
    """Termwise tensor product: degree d is A_d (x) B_d."""
    if a.value_kind == "class" and b.value_kind == "class":
        k = a.factor_count + b.factor_count
        return GradedSequence(
            f"segre({a.name},{b.name})",
            "class",
            lambda seq, d: external_product(a.term(d), b.term(d)),
            k,
            a.factor_dims + b.factor_dims,
        )
    av, bv = a.dim_view(), b.dim_view()
    return GradedSequence(
        f"segre({a.name},{b.name})",
        "integer",
        lambda seq, d: av.term(d) * bv.term(d),
    )


def hadamard(a: GradedSequence, b: GradedSequence) -> GradedSequence:
    """Termwise product of dimensions, always integer valued."""
    av, bv = a.dim_view(), b.dim_view()
    return GradedSequence(
        f"hadamard({a.name},{b.name})",
        "integer",
        lambda seq, d: av.term(d) * bv.term(d),
    )


def jt_minor(a: GradedSequence, shape, r: int | None = None):
    """The Jacobi-Trudi minor det(A_{lambda_i - mu_j - i + j}) of order r.

    r defaults to the number of rows needed and must not be smaller; any
    larger padding gives the same value.  Class-valued sequences use the
    permutation expansion and are capped at order 8.
    """
    s = as_shape(shape)
    lam, mu = s.outer.parts, s.inner.parts
    need = max(len(lam), len(mu))
    if r is None:
        r = need
    r = int(r)
    if r < need:
        raise ValueError(f"padding {r} smaller than the shape needs ({need})")
    key = (lam, mu, r)
    hit = a._minors.get(key)
    if hit is not None:
        return hit
    if r == 0:
        return _memo_put(a._minors, key, a.unit_value())

    def lam_i(i):
        return lam[i - 1] if i <= len(lam) else 0

    def mu_j(j):
        return mu[j - 1] if j <= len(mu) else 0

    rows = [[a.term(lam_i(i) - mu_j(j) - i + j) for j in range(1, r + 1)] for i in range(1, r + 1)]
    if a.value_kind == "integer":
        value = det_bareiss(rows)
    else:
        value = det_expand(rows, SchurClass.zero(a.factor_count))
    return _memo_put(a._minors, key, value)


def index_to_shapes(j_idx, i_idx):
    """Translate strictly increasing index sets to the (lambda, mu) pair whose
    Jacobi-Trudi minor the index minor computes."""
    j_idx = tuple(int(x) for x in j_idx)
    i_idx = tuple(int(x) for x in i_idx)
    r = len(j_idx)
    if len(i_idx) != r or r == 0:
        raise ValueError("index sets must be nonempty and the same length")
    for seq in (j_idx, i_idx):
        if seq[0] < 1 or any(x >= y for x, y in zip(seq, seq[1:])):
            raise ValueError("index sets must be strictly increasing and positive")
    lam = trim(tuple(i_idx[r - 1 - k] - (r - k) for k in range(r)))
    mu = trim(tuple(j_idx[r - 1 - k] - (r - k) for k in range(r)))
    return lam, mu


def minor_from_indices(a: GradedSequence, j_idx, i_idx):
    """Minor of the Toeplitz array on row set j_idx and column set i_idx,
    entry convention A_{i - j}.  Equals the Jacobi-Trudi minor of the
    translated shapes from index_to_shapes."""
    lam, mu = index_to_shapes(j_idx, i_idx)
    if not contains(lam, mu):
        raise ValueError(f"index sets give mu {mu} not inside lambda {lam}")
    j_idx = tuple(int(x) for x in j_idx)
    i_idx = tuple(int(x) for x in i_idx)
    rows = [[a.term(i_idx[x] - j_idx[y]) for y in range(len(j_idx))] for x in range(len(i_idx))]
    if a.value_kind == "integer":
        return det_bareiss(rows)
    return det_expand(rows, SchurClass.zero(a.factor_count))


def _is_negative(a: GradedSequence, value) -> bool:
    if a.value_kind == "integer":
        return value < 0
    return not value.is_nonnegative()


def pf_check(a: GradedSequence, max_order: int = 4, window: int = 8, scan_skew: bool = False) -> PFReport:
    """Scan Jacobi-Trudi minors for a negative value.

    Straight shapes lambda with at most max_order rows and parts at most
    window, in order of size then lexicographic; scan_skew additionally runs
    over every inner shape mu inside each lambda.  The first offender (under
    that order) becomes the witness.
    """
    checked = 0
    for lam in scan_partitions(max_order, window):
        inners = subpartitions(lam) if scan_skew else iter([()])
        for mu in inners:
            value = jt_minor(a, SkewShape(lam, mu))
            checked += 1
            if _is_negative(a, value):
                return PFReport("negative", max_order, window, checked, witness=(lam, mu, value))
    return PFReport("positive-up-to-bounds", max_order, window, checked)


def e_class(a: GradedSequence, d: int):
    """Degree-d elementary class: the alternating sum of products of terms
    over all compositions of d."""
    d = int(d)
    if d < 0:
        return a.zero_value()
    hit = a._eclasses.get(d)
    if hit is not None:
        return hit
    if d == 0:
        return _memo_put(a._eclasses, d, a.unit_value())
    acc = a.zero_value()
    for comp in compositions_of(d):
        prod = a.unit_value()
        for part in comp:
            prod = prod * a.term(part)
        if (d - len(comp)) % 2:
            prod = -prod
        acc = acc + prod
    return _memo_put(a._eclasses, d, acc)


def jt_minor_dual(a: GradedSequence, shape, n: int | None = None):
    """The dual (elementary) Jacobi-Trudi minor, indexed by the transposed
    shape.  n is the padding and must be at least lambda_1."""
    s = as_shape(shape)
    lam, mu = s.outer.parts, s.inner.parts
    lamt, mut = conjugate(lam), conjugate(mu)
    need = max(len(lamt), len(mut))
    if n is None:
        n = need
    n = int(n)
    if n < need:
        raise ValueError(f"padding {n} smaller than the transposed shape needs ({need})")
    if n == 0:
        return a.unit_value()

    def lt(i):
        return lamt[i - 1] if i <= len(lamt) else 0

    def mt(j):
        return mut[j - 1] if j <= len(mut) else 0

    rows = [[e_class(a, lt(i) - mt(j) - i + j) for j in range(1, n + 1)] for i in range(1, n + 1)]
    if a.value_kind == "integer":
        return det_bareiss(rows)
    return det_expand(rows, SchurClass.zero(a.factor_count))


def transpose_duality_check(a: GradedSequence, shape, n: int | None = None) -> bool:
    """Whether the h-type and e-type minors of the same shape agree."""
    return jt_minor(a, shape) == jt_minor_dual(a, shape, n)


def veronese_identity_check(a: GradedSequence, d: int, shape, r: int | None = None) -> bool:
    """Whether the order-r minor of the d-Veronese equals the stretched-shape
    minor of the original sequence."""
    s = as_shape(shape)
    lam, mu = s.outer.parts, s.inner.parts
    need = max(len(lam), len(mu))
    if r is None:
        r = need
    r = int(r)
    if r < need:
        raise ValueError(f"padding {r} smaller than the shape needs ({need})")
    d = int(d)
    if d < 1:
        raise ValueError("veronese needs d >= 1")
    lhs = jt_minor(veronese(a, d), s, r)
    alpha = trim(tuple(d * (lam[i - 1] if i <= len(lam) else 0) + (d - 1) * (r - i) for i in range(1, r + 1)))
    beta = trim(tuple(d * (mu[j - 1] if j <= len(mu) else 0) + (d - 1) * (r - j) for j in range(1, r + 1)))
    rhs = jt_minor(a, SkewShape(alpha, beta), r)
    return lhs == rhs


def tensor_identity_check(a: GradedSequence, b: GradedSequence, shape, r: int | None = None) -> bool:
    """Cauchy-Binet: the minor of a tensor product expands over intermediate
    shapes nu between mu and lambda."""
    s = as_shape(shape)
    lam, mu = s.outer.parts, s.inner.parts
    c = tensor_product(a, b)
    lhs = jt_minor(c, s, r)
    if c.value_kind == "class":
        rhs = SchurClass.zero(c.factor_count)
        for nu in subpartitions(lam):
            if not contains(nu, mu):
                continue
            rhs = rhs + external_product(jt_minor(a, SkewShape(lam, nu), r), jt_minor(b, SkewShape(nu, mu), r))
    else:
        av, bv = a.dim_view(), b.dim_view()
        rhs = 0
        for nu in subpartitions(lam):
            if not contains(nu, mu):
                continue
            rhs += jt_minor(av, SkewShape(lam, nu), r) * jt_minor(bv, SkewShape(nu, mu), r)
    return lhs == rhs


def pieri_identity_check(a: GradedSequence, lam, d: int, bound: int | None = None) -> bool:
    """Multiplying a straight minor by a term matches the horizontal-strip sum."""
    lam = as_parts(lam)
    d = int(d)
    if d < 0:
        raise ValueError("pieri needs d >= 0")
    if bound is None:
        bound = len(lam) + 1
    bound = int(bound)
    if bound < len(lam) + 1:
        raise ValueError(f"bound {bound} too small, need at least {len(lam) + 1}")
    lhs = jt_minor(a, lam, bound) * a.term(d)
    rhs = a.zero_value()
    for mu in pieri_extensions(lam, d):
        if len(mu) > bound:
            continue
        rhs = rhs + jt_minor(a, mu, bound)
    return lhs == rhs


def hs_series(a: GradedSequence, trunc: int) -> TruncSeries:
    """Hilbert series of dimensions, truncated at total degree trunc."""
    return TruncSeries(1, trunc, {(d,): a.dims(d) for d in range(trunc + 1)})


def schur_dimension_profile(a: GradedSequence, r_max: int, s_max: int):
    """Look for a hook bound (r, s) whose vanishing law lambda_{r+1} > s
    matches the observed vanishing of minors at dimension level.

    Scans the (r_max + 1) x (s_max + 1) box of shapes.  Returns the smallest
    matching (r, s) in lexicographic order, or None when the vanishing locus
    is not an upward-closed set or matches no hook."""
    r_max, s_max = int(r_max), int(s_max)
    if r_max < 0 or s_max < 0:
        raise ValueError("profile bounds must be nonnegative")
    av = a.dim_view()
    box = list(scan_partitions(r_max + 1, s_max + 1))
    vanish = {lam: jt_minor(av, lam) == 0 for lam in box}
    for lam in box:
        if not vanish[lam]:
            continue
        for other in box:
            if not vanish[other] and contains(other, lam):
                return None
    for r in range(r_max + 1):
        for s in range(s_max + 1):
            expected = {lam for lam in box if (lam[r] if r < len(lam) else 0) > s}
            actual = {lam for lam in box if vanish[lam]}
            if expected == actual:
                return (r, s)
    return None


_SIMPLE_KINDS = {
    "poly": ("m",),
    "polynomial": ("m",),
    "quadric": ("m",),
    "qdual": ("m",),
    "quadric_dual": ("m",),
    "tensoralg": ("m",),
    "tensor_algebra": ("m",),
    "super": ("r", "s"),
    "heisenberg": ("u",),
}


def parse_sequence_spec(text: str) -> GradedSequence:
    """Parse the colon-and-comma mini grammar for sequences.

    Examples: "quadric:3", "super:2,1", "list:1,2,2,2",
    "veronese:poly:2,2", "hadamard:quadric:2,squares",
    "tensor:(quadric:2),(quadric:2)".
    """
    seq = _parse_spec(text.strip())
    if seq is None:
        raise ValueError(f"cannot parse sequence spec {text!r}")
    return seq


def _strip_parens(text: str) -> str:
    text = text.strip()
    while text.startswith("(") and text.endswith(")"):
        depth = 0
        ok = True
        for i, ch in enumerate(text):
            if ch == "(":
                depth += 1
            elif ch == ")":
                depth -= 1
                if depth == 0 and i != len(text) - 1:
                    ok = False
                    break
        if not ok:
            break
        text = text[1:-1].strip()
    return text


def _top_level_commas(text: str) -> list[int]:
    out = []
    depth = 0
    for i, ch in enumerate(text):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        elif ch == "," and depth == 0:
            out.append(i)
    return out


def _parse_spec(text: str):
    text = _strip_parens(text)
    if not text:
        return None
    head, sep, rest = text.partition(":")
    head = head.strip().lower()
    if head == "squares":
        return make_sequence("squares") if not sep else None
    if head in _SIMPLE_KINDS:
        if not sep:
            if head == "heisenberg":
                return make_sequence("heisenberg")
            return None
        parts = [p.strip() for p in rest.split(",")]
        names = _SIMPLE_KINDS[head]
        if len(parts) != len(names) or not all(_is_int(p) for p in parts):
            return None
        return make_sequence(head, **{n: int(p) for n, p in zip(names, parts)})
    if head == "list":
        if not sep:
            return None
        parts = [p.strip() for p in rest.split(",")]
        if not parts or not all(_is_int(p) for p in parts):
            return None
        return make_sequence("list", dims=[int(p) for p in parts])
    if head == "veronese":
        if not sep:
            return None
        for cut in reversed(_top_level_commas(rest)):
            left, right = rest[:cut], rest[cut + 1 :].strip()
            if not _is_int(right):
                continue
            inner = _parse_spec(left)
            if inner is not None:
                try:
                    return veronese(inner, int(right))
                except ValueError:
                    return None
        return None
    if head in ("tensor", "hadamard", "segre"):
        if not sep:
            return None
        builder = {"tensor": tensor_product, "hadamard": hadamard, "segre": segre}[head]
        for cut in _top_level_commas(rest):
            left, right = rest[:cut], rest[cut + 1 :]
            sa = _parse_spec(left)
            if sa is None:
                continue
            sb = _parse_spec(right)
            if sb is None:
                continue
            return builder(sa, sb)
        return None
    return None


def _is_int(text: str) -> bool:
    t = text.strip()
    if t.startswith("-"):
        t = t[1:]
    return t.isdigit()
