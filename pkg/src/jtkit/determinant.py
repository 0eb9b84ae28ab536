"""Exact determinants for integer and ring-valued matrices."""

from __future__ import annotations

import itertools


def det_bareiss(rows: list[list[int]]) -> int:
    """Fraction-free determinant of a square integer matrix.

    Bareiss elimination keeps every intermediate entry an exact integer
    (each division is exact by Sylvester's identity).
    """
    n = len(rows)
    if n == 0:
        return 1
    m = [list(map(int, r)) for r in rows]
    assert all(len(r) == n for r in m)
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k] != 0:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = m[i][j] * m[k][k] - m[i][k] * m[k][j]
                q, r = divmod(num, prev)
                assert r == 0
                m[i][j] = q
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


def det_expand(rows: list[list], zero, max_order: int = 8):
    """Determinant by signed permutation expansion, for entries in any
    commutative ring exposing + and *.

    zero is the ring's additive identity.  The sum over all n! permutations
    is exact but exponential, hence the order guard.
    """
    n = len(rows)
    if n > max_order:
        raise ValueError(f"matrix order {n} exceeds expansion bound {max_order}")
    if n == 0:
        raise ValueError("det_expand needs a nonempty matrix; use the caller's unit for order 0")
    assert all(len(r) == n for r in rows)
    total = zero
    for perm in itertools.permutations(range(n)):
        inv = sum(1 for i in range(n) for j in range(i + 1, n) if perm[i] > perm[j])
        term = rows[0][perm[0]]
        for i in range(1, n):
            term = term * rows[i][perm[i]]
        total = total + (-term if inv % 2 else term)
    return total
