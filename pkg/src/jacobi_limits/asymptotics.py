"""Closed-form limits of I_k / N under linear scalings of a and b.

Only the slopes a1 and b1 enter.  :func:`ik_limit` is the reference formula;
the other entry points are independent re-derivations used as cross-checks
and as faster special cases.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .combinat import catalan_triangle, gimel, inverse_binomial_transform
from .errors import DomainError
from .poly import UniPoly
from .schur import ScalingParams

__all__ = [
    "LimitQuery", "ik_limit", "ik_limit_expanded", "ik_limit_l1l2", "l1l2_from_slopes",
    "slopes_from_l1l2", "limit_special_zero_one", "limit_central_binomial",
    "central_binomial_sum", "limit_catalan", "catalan_numerator", "limit_dyck",
    "dyck_numerator", "limit_novaes", "special_case",
]


@dataclass(frozen=True)
class LimitQuery:
    k: int
    params: ScalingParams

    def __post_init__(self):
        if self.k < 1:
            raise DomainError(f"k must be >= 1, got {self.k}")
        if self.params.slope == 0:
            raise DomainError("degenerate scaling: 2 + a1 + b1 = 0")

    @classmethod
    def of(cls, k: int, a1, b1) -> "LimitQuery":
        return cls(k, ScalingParams(a1, 0, b1, 0))


def _as_query(q_or_k, a1=None, b1=None) -> LimitQuery:
    if isinstance(q_or_k, LimitQuery):
        return q_or_k
    return LimitQuery.of(q_or_k, a1, b1)


def ik_limit(q, a1=None, b1=None) -> Fraction:
    """lim I_k/N for a = a1 N + a0, b = b1 N + b0.

    Accepts a :class:`LimitQuery` or ``(k, a1, b1)``.
    """
    q = _as_query(q, a1, b1)
    k, u, s = q.k, 1 + q.params.a1, q.params.slope
    r = u / s
    total = Fraction(0)
    for j in range(k):
        inner = sum((u ** i * math.comb(k, i + j + 1) * math.comb(k, i)
                     for i in range(k - j)), Fraction(0))
        term = r ** j * math.comb(j + k - 1, j) * inner
        total += -term if j % 2 else term
    return u / (k * s ** k) * total


def ik_limit_expanded(q, a1=None, b1=None) -> Fraction:
    """The rearranged form with the (1+a1)^(k-1) term pulled out."""
    q = _as_query(q, a1, b1)
    k, u, s = q.k, 1 + q.params.a1, q.params.slope
    r = u / s
    total = u ** (k - 1)
    for i in range(k - 1):
        inner = Fraction(0)
        for j in range(k - i):
            term = r ** j * math.comb(j + k - 1, i + j + 1) * math.comb(k - i - 1, j)
            inner += -term if j % 2 else term
        total += u ** i / (k - i - 1) * math.comb(k, i) * inner
    return u / s ** k * total


def l1l2_from_slopes(a1, b1) -> tuple[Fraction, Fraction]:
    """(l1, l2) with a1 = l1 - 1 and b1 = 1/l2 - l1 - 1."""
    a1, b1 = Fraction(a1), Fraction(b1)
    if 2 + a1 + b1 == 0:
        raise DomainError("degenerate scaling: 2 + a1 + b1 = 0")
    return 1 + a1, 1 / (2 + a1 + b1)


def slopes_from_l1l2(l1, l2) -> tuple[Fraction, Fraction]:
    l1, l2 = Fraction(l1), Fraction(l2)
    if l2 == 0:
        raise DomainError("l2 = 0 has no finite slope b1")
    return l1 - 1, 1 / l2 - l1 - 1


def ik_limit_l1l2(k: int, l1, l2, sign: str = "corrected") -> Fraction:
    """The limit in the (l1, l2) parametrisation, written with a binomial transform.

    The inner sum over i is read in one of three ways:

    ``"corrected"`` (default)
        sum_{i=0}^{j} (-1)^i C(j,i) C(i+k-1, j-1) l2^i, i.e.
        (-1)^j B_j^{-1}[(C(i+k-1, j-1) l2^i)_i].  Agrees with :func:`ik_limit`.
    ``"transform"``
        B_j^{-1}[(C(i+k-1, j-1) l2^i)_i] without the (-1)^j.
    ``"printed"``
        sum_{i=1}^{j} (-1)^j C(j,i) C(i+k-1, j-1) l2^i.

    The last two are kept to document that they disagree from k = 2 on.
    """
    if k < 1:
        raise DomainError(f"k must be >= 1, got {k}")
    l1, l2 = Fraction(l1), Fraction(l2)
    if l2 == 0:
        raise DomainError("l2 must be nonzero")
    total = Fraction(1)
    for j in range(1, k):
        if sign in ("corrected", "transform"):
            seq = [math.comb(i + k - 1, j - 1) * l2 ** i for i in range(j + 1)]
            inner = inverse_binomial_transform(seq, j).coeff(0)
            if sign == "corrected" and j % 2:
                inner = -inner
        elif sign == "printed":
            inner = sum(((-1) ** j * math.comb(j, i) * math.comb(i + k - 1, j - 1) * l2 ** i
                         for i in range(1, j + 1)), Fraction(0))
        else:
            raise ValueError(f"unknown sign reading {sign!r}")
        total += l1 ** j / j * math.comb(k, j + 1) * inner
    return l1 * l2 ** k * total


def limit_special_zero_one(k: int, a1, b1) -> Optional[Fraction]:
    """0 if a1 = -1 != b1, 1 if b1 = -1 != a1, otherwise None."""
    a1, b1 = Fraction(a1), Fraction(b1)
    if a1 == -1 and b1 != -1:
        return Fraction(0)
    if b1 == -1 and a1 != -1:
        return Fraction(1)
    return None


def limit_central_binomial(k: int) -> Fraction:
    if k < 1:
        raise DomainError(f"k must be >= 1, got {k}")
    return Fraction(math.comb(2 * k, k), 4 ** k)


def central_binomial_sum(k: int) -> Fraction:
    """(1/(2^k k)) sum_j (-1/2)^j C(j+k-1, j) C(2k, k+j+1), the a1 = b1 = 0 reduction."""
    s = sum((Fraction(-1, 2) ** j * math.comb(j + k - 1, j) * math.comb(2 * k, k + j + 1)
             for j in range(k)), Fraction(0))
    return s / (2 ** k * k)


def catalan_numerator(k: int) -> UniPoly:
    """sum_i a_{k,i} l^i with a the Catalan triangle."""
    return UniPoly([catalan_triangle(k, i) for i in range(k)])


def limit_catalan(k: int, l) -> Fraction:
    """Limit for a1 = 0, b1 = l - 1."""
    l = Fraction(l)
    if 1 + l == 0:
        raise DomainError("l = -1 is a degenerate scaling")
    if k < 1:
        raise DomainError(f"k must be >= 1, got {k}")
    return catalan_numerator(k)(l) / (1 + l) ** (2 * k - 1)


def dyck_numerator(k: int) -> UniPoly:
    """l * sum_i gimel(k-1, i) l^i."""
    return UniPoly([0] + [gimel(k - 1, i) for i in range(2 * k - 1)])


def limit_dyck(k: int, l) -> Fraction:
    """Limit for a1 = l - 1, b1 = 0."""
    l = Fraction(l)
    if 1 + l == 0:
        raise DomainError("l = -1 is a degenerate scaling")
    if k < 1:
        raise DomainError(f"k must be >= 1, got {k}")
    return dyck_numerator(k)(l) / (1 + l) ** (2 * k - 1)


def limit_novaes(k: int, l) -> Fraction:
    """Novaes' alternating form of the a1 = l - 1, b1 = 0 limit."""
    l = Fraction(l)
    if 1 + l == 0:
        raise DomainError("l = -1 is a degenerate scaling")
    t = l / (1 + l) ** 2
    s = sum((Fraction((-1) ** (i - 1), i) * math.comb(k - 1, i - 1)
             * math.comb(2 * (i - 1), i - 1) * t ** i for i in range(1, k + 1)), Fraction(0))
    return (l + 1) * s


def special_case(k: int, a1, b1) -> Optional[tuple[str, Fraction]]:
    """Name and value of the special-case formula that applies, if any."""
    a1, b1 = Fraction(a1), Fraction(b1)
    v = limit_special_zero_one(k, a1, b1)
    if v is not None:
        return ("a1=-1" if v == 0 else "b1=-1"), v
    if a1 == 0 and b1 == 0:
        return "central-binomial", limit_central_binomial(k)
    if a1 == 0:
        return "catalan", limit_catalan(k, b1 + 1)
    if b1 == 0:
        return "dyck", limit_dyck(k, a1 + 1)
    return None
