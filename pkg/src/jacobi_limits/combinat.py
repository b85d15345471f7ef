"""Exact combinatorial kernel.

Binomials, Stirling numbers, the inverse binomial transform, Newton divided
differences, the ``P_i^k`` polynomials and the ``T~`` transform built on
them, plus the integer triangles that show up in the special-case limits.
Everything is exact; integer-valued quantities are returned as ``int``.
"""
from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence

from .poly import UniPoly, product

__all__ = [
    "binomial", "stirling2", "stirling2_alternating", "inverse_binomial_transform",
    "divided_difference_coeffs", "p_poly", "t_transform", "catalan_triangle",
    "gimel", "gimel_alternating", "rising", "falling", "signed_range_product",
]


def binomial(n: int, k: int) -> int:
    """C(n, k) for n >= 0; zero outside 0 <= k <= n."""
    if n < 0:
        raise ValueError(f"binomial: n must be >= 0, got {n}")
    if k < 0 or k > n:
        return 0
    return math.comb(n, k)


def _binom_any(n: int, k: int) -> int:
    # C(n, k) with the falling-factorial convention for negative n
    if k < 0:
        return 0
    if n >= 0:
        return math.comb(n, k) if k <= n else 0
    return (-1) ** k * math.comb(k - n - 1, k)


@lru_cache(maxsize=None)
def stirling2(p: int, k: int) -> int:
    """Stirling number of the second kind via S(p,k) = k S(p-1,k) + S(p-1,k-1)."""
    if p < 0 or k < 0:
        raise ValueError("stirling2 requires p, k >= 0")
    if p == 0 or k == 0:
        return 1 if p == k else 0
    if k > p:
        return 0
    return k * stirling2(p - 1, k) + stirling2(p - 1, k - 1)


def stirling2_alternating(p: int, k: int) -> Fraction:
    """Alternating-sum formula for S(p,k); kept as an oracle for :func:`stirling2`."""
    s = sum((-1) ** (k - i) * math.comb(k, i) * i ** p for i in range(k + 1))
    return Fraction(s, math.factorial(k))


def inverse_binomial_transform(seq: Sequence, k: int) -> UniPoly:
    """B_k^{-1}[f] = sum_{i<=k} (-1)^(k-i) C(k,i) f_i.

    Entries may be polynomials or exact scalars; scalars are treated as
    constant polynomials.
    """
    if not 0 <= k < len(seq):
        raise IndexError(f"order k={k} outside 0..{len(seq) - 1}")
    acc = UniPoly()
    for i in range(k + 1):
        term = UniPoly.coerce(seq[i])
        c = math.comb(k, i)
        acc = acc + (term * c if (k - i) % 2 == 0 else term * (-c))
    return acc


def divided_difference_coeffs(points: Iterable[tuple]) -> list[Fraction]:
    """Newton coefficients of the interpolant through ``points``.

    Returns ``c`` with f(y) = sum_j c[j] (y - y_0)...(y - y_{j-1}).
    Nodes are used in the given order.
    """
    pts = [(Fraction(x), Fraction(y)) for x, y in points]
    xs = [p[0] for p in pts]
    if len(set(xs)) != len(xs):
        raise ValueError("divided differences need pairwise distinct abscissae")
    col = [p[1] for p in pts]
    out = [col[0]] if col else []
    for level in range(1, len(pts)):
        col = [(col[i + 1] - col[i]) / (xs[i + level] - xs[i])
               for i in range(len(col) - 1)]
        out.append(col[0])
    return out


def rising(x, n: int):
    """Pochhammer symbol (x)_n = x (x+1) ... (x+n-1); works for scalars and polynomials."""
    if n < 0:
        raise ValueError("rising factorial needs n >= 0")
    out = Fraction(1) if not isinstance(x, UniPoly) else UniPoly.const(1)
    for j in range(n):
        out = out * (x + j)
    return out


def falling(x, n: int):
    """Falling factorial x (x-1) ... (x-n+1)."""
    if n < 0:
        raise ValueError("falling factorial needs n >= 0")
    out = Fraction(1) if not isinstance(x, UniPoly) else UniPoly.const(1)
    for j in range(n):
        out = out * (x - j)
    return out


def signed_range_product(f, lo: int, hi: int):
    """prod_{i=lo}^{hi} f(i) with the reversed-range convention.

    For ``lo > hi + 1`` the product is read as prod_{i=hi+1}^{lo-1} f(i)^{-1},
    so that prod_{lo}^{m} * prod_{m+1}^{hi} = prod_{lo}^{hi} holds for all
    integer bounds.  ``lo == hi + 1`` is the empty product.
    """
    out = Fraction(1)
    if lo <= hi + 1:
        for i in range(lo, hi + 1):
            out *= f(i)
    else:
        for i in range(hi + 1, lo):
            out /= f(i)
    return out


def p_poly(i: int, k: int, a, b) -> UniPoly:
    """P_i^k(x;a,b) = prod_{j<k-i} (x+j+a) * prod_{j<i} (x-j+b)."""
    if not 0 <= i <= k:
        raise IndexError(f"P_i^k needs 0 <= i <= k, got i={i}, k={k}")
    a, b = Fraction(a), Fraction(b)
    return product([UniPoly.linear(1, a + j) for j in range(k - i)]
                   + [UniPoly.linear(1, b - j) for j in range(i)])


def t_transform(seq: Sequence, k: int, a, b) -> UniPoly:
    """T~_k^{a,b}[(a_i)] = (-1)^k B_k^{-1}[(P_i^k a_i)_i]."""
    if not 0 <= k < len(seq):
        raise IndexError(f"order k={k} outside 0..{len(seq) - 1}")
    weighted = [p_poly(i, k, a, b) * UniPoly.coerce(seq[i]) for i in range(k + 1)]
    out = inverse_binomial_transform(weighted, k)
    return out if k % 2 == 0 else -out


def catalan_triangle(k: int, i: int) -> int:
    """((k-i)/k) C(2k, i), an integer for 1 <= k and 0 <= i <= k-1."""
    if k < 1 or not 0 <= i <= k - 1:
        raise IndexError(f"catalan_triangle needs k >= 1, 0 <= i < k; got ({k}, {i})")
    num = (k - i) * math.comb(2 * k, i)
    assert num % k == 0
    return num // k


def gimel(k: int, i: int) -> int:
    """C(k, ceil(i/2)) C(k, floor(i/2)), the coefficient triangle of the b1 = 0 limit.

    ``k = 0`` is accepted (only i = 0 is then in range) because the b1 = 0
    limit at k = 1 needs the row of index zero.
    """
    if k < 0 or not 0 <= i <= 2 * k:
        raise IndexError(f"gimel needs 0 <= i <= 2k; got ({k}, {i})")
    return math.comb(k, (i + 1) // 2) * math.comb(k, i // 2)


def gimel_alternating(k: int, i: int) -> Fraction:
    """sum_j (-1)^j C(k, j) C(2(k-j), i-j) C(2j, j)/(j+1).

    This is the coefficient of l^i obtained by expanding the Novaes form of
    the b1 = 0 limit; it must agree with :func:`gimel`.
    """
    return sum((Fraction((-1) ** j * math.comb(k, j) * _binom_any(2 * (k - j), i - j)
                         * math.comb(2 * j, j), j + 1)
                for j in range(k + 1)), Fraction(0))
