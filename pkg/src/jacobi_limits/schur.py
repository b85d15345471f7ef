"""Finite-N averages over the unitary Jacobi measure.

All averages are normalised by <1>, so they are expectations under the
density proportional to prod_{i<j}(x_i-x_j)^2 prod_i x_i^(a-1) (1-x_i)^(b-1)
on [0,1]^N.  Schur averages use the finite product formula, which makes
rational ``a`` and ``b`` exact; the same product with ``a`` and ``b`` linear
in N gives the rational functions of N that the limits are read from.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Union

from .combinat import t_transform
from .errors import DomainError
from .poly import RationalFunction, UniPoly, product

Rat = Union[int, Fraction]

#: default cap on |lambda| for the Murnaghan-Nakayama expansion
MN_WEIGHT_CAP = 12


@dataclass(frozen=True)
class Partition:
    parts: tuple[int, ...] = ()

    def __post_init__(self):
        parts = tuple(int(p) for p in self.parts)
        if any(p < 1 for p in parts):
            raise ValueError(f"partition parts must be positive: {parts}")
        if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
            raise ValueError(f"partition parts must be weakly decreasing: {parts}")
        object.__setattr__(self, "parts", parts)

    @classmethod
    def of(cls, *parts: int) -> "Partition":
        return cls(tuple(parts))

    @classmethod
    def hook(cls, k: int, i: int) -> "Partition":
        """The hook [(k-i), 1^i]."""
        return cls((k - i,) + (1,) * i)

    def weight(self) -> int:
        return sum(self.parts)

    def length(self) -> int:
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def __len__(self):
        return len(self.parts)

    def __getitem__(self, i):
        return self.parts[i]

    def __str__(self):
        return "(" + ",".join(map(str, self.parts)) + ")"


def as_partition(lam) -> Partition:
    return lam if isinstance(lam, Partition) else Partition(tuple(lam))


@dataclass(frozen=True)
class ScalingParams:
    """a = a1*N + a0 and b = b1*N + b0."""

    a1: Fraction
    a0: Fraction
    b1: Fraction
    b0: Fraction

    def __post_init__(self):
        for name in ("a1", "a0", "b1", "b0"):
            object.__setattr__(self, name, Fraction(getattr(self, name)))

    @property
    def a_poly(self) -> UniPoly:
        return UniPoly.linear(self.a1, self.a0)

    @property
    def b_poly(self) -> UniPoly:
        return UniPoly.linear(self.b1, self.b0)

    def at(self, n: int) -> tuple[Fraction, Fraction]:
        return self.a1 * n + self.a0, self.b1 * n + self.b0

    @property
    def slope(self) -> Fraction:
        """2 + a1 + b1, the N-coefficient of a + b + 2N."""
        return 2 + self.a1 + self.b1


# -- Selberg normalisation -------------------------------------------------

def selberg_value(n: int, a: int, b: int, beta: int = 1) -> Fraction:
    """Selberg's integral S_N(a, b, beta) for positive integer parameters.

    No 1/N! prefactor, so S_N = N! <1>_{a,b}.
    """
    for name, v in (("n", n), ("a", a), ("b", b), ("beta", beta)):
        if not isinstance(v, int) or isinstance(v, bool) or v < 1:
            raise DomainError(f"selberg_value needs a positive integer {name}, got {v!r}")
    g = lambda m: math.factorial(m - 1)  # Gamma at a positive integer
    out = Fraction(1)
    for j in range(n):
        out *= Fraction(g(a + j * beta) * g(b + j * beta) * g(1 + (j + 1) * beta),
                        g(a + b + (n + j - 1) * beta) * g(1 + beta))
    return out


# -- Schur averages ----------------------------------------------------------

def _schur_factors(lam: Partition, n, a, b):
    """Yield (numerator, denominator, label) factors of the Schur product.

    ``n``, ``a``, ``b`` may be scalars or polynomials in N.
    """
    ell = lam.length()
    for i in range(1, ell + 1):
        li = lam[i - 1]
        for j in range(i + 1, ell + 1):
            yield li - lam[j - 1] + j - i, j - i, None
        for j in range(li):
            # ell + j - i + 1 >= 1 since i <= ell
            yield (n - i + j + 1) * (a + n - i + j), ell + j - i + 1, None
            yield 1, a + b + 2 * n - i + j - 1, f"a+b+2N{j - i - 1:+d}"


def schur_average(lam, a: Rat, b: Rat, n: int) -> Fraction:
    """<s_lambda>/<1> in n variables, exact."""
    lam = as_partition(lam)
    if n < lam.length():
        raise DomainError(f"need n >= length of {lam}, got n={n}")
    a, b = Fraction(a), Fraction(b)
    out = Fraction(1)
    for num, den, label in _schur_factors(lam, n, a, b):
        if den == 0:
            raise DomainError(f"vanishing denominator factor {label} at a={a}, b={b}, N={n}")
        out *= Fraction(num) / den
    return out


def schur_average_rf(lam, params: ScalingParams, n_min: int | None = None) -> RationalFunction:
    """<s_lambda>/<1> as a rational function of N under the linear scaling.

    Valid for every integer N >= n_min (default: the length of lambda).
    """
    lam = as_partition(lam)
    if n_min is not None and n_min < lam.length():
        raise DomainError(f"n_min={n_min} below the length of {lam}")
    n = UniPoly.x()
    nums, dens = [], []
    for num, den, label in _schur_factors(lam, n, params.a_poly, params.b_poly):
        den = UniPoly.coerce(den)
        if den.is_zero():
            raise DomainError(f"denominator factor {label} vanishes identically under {params}")
        nums.append(UniPoly.coerce(num))
        dens.append(den)
    return RationalFunction(product(nums), product(dens))


def schur_limit(lam, params: ScalingParams) -> Fraction:
    """lim <s_lambda> / (N^|lambda| <1>)."""
    lam = as_partition(lam)
    if params.slope == 0:
        raise DomainError("degenerate scaling: 2 + a1 + b1 = 0")
    ell = lam.length()
    out = ((1 + params.a1) / params.slope) ** lam.weight()
    for i in range(1, ell + 1):
        li = lam[i - 1]
        for j in range(i + 1, ell + 1):
            out *= Fraction(li - lam[j - 1] + j - i, j - i)
        for j in range(li):
            assert ell + j - i + 1 > 0
            out /= ell + j - i + 1
    return out


# -- power sums ----------------------------------------------------------------

def ik_closed(k: int, a: Rat, b: Rat, n: int) -> Fraction:
    """I_k = <p_k>/<1> from the alternating hook-sum product formula."""
    if k < 1 or n < 1:
        raise DomainError(f"ik_closed needs k >= 1 and n >= 1, got k={k}, n={n}")
    a, b = Fraction(a), Fraction(b)
    total = Fraction(0)
    # hooks of length i + 1 > n vanish identically in n variables
    for i in range(min(k, n)):
        term = Fraction(math.comb(k - 1, i))
        for j in range(-i, k - i):
            den = a + b + 2 * n + j - 2
            if den == 0:
                raise DomainError(f"vanishing denominator factor a+b+2N{j - 2:+d} "
                                  f"at a={a}, b={b}, N={n}")
            term *= (n + j) * (a + n + j - 1) / den
        total += -term if i % 2 else term
    return total / math.factorial(k)


def ik_via_schur(k: int, a: Rat, b: Rat, n: int) -> Fraction:
    """I_k as the signed sum of hook Schur averages."""
    if k < 1:
        raise DomainError(f"ik_via_schur needs k >= 1, got {k}")
    total = Fraction(0)
    for i in range(k):
        hook = Partition.hook(k, i)
        if hook.length() > n:
            continue  # s_lambda vanishes in fewer than length(lambda) variables
        v = schur_average(hook, a, b, n)
        total += -v if i % 2 else v
    return total


def _check_slope(params: ScalingParams):
    if params.slope == 0:
        raise DomainError("degenerate scaling: 2 + a1 + b1 = 0")


def nk_numerator(k: int, params: ScalingParams) -> UniPoly:
    """The unreduced numerator N_k(N), with I_k/N = N_k / (k! N D_k(N)).

    D_k(N) = prod_{j=-k+1}^{k-1} (a + b + 2N + j - 2).
    """
    if k < 1:
        raise DomainError(f"k must be >= 1, got {k}")
    _check_slope(params)
    n = UniPoly.x()
    s = params.a_poly + params.b_poly + 2 * n  # a + b + 2N
    a = params.a_poly
    total = UniPoly()
    for i in range(k):
        outer = [s + (j - 2) for j in range(-k + 1, -i)]
        outer += [s + (j - 2) for j in range(k - i, k)]
        inner = [(n + j) * (a + n + (j - 1)) for j in range(-i, k - i)]
        term = product(outer + inner) * math.comb(k - 1, i)
        total = total - term if i % 2 else total + term
    return total


def nk_numerator_via_transform(k: int, params: ScalingParams) -> UniPoly:
    """N_k(N) rebuilt as a T~ transform of the bivariate product Q_k(x, i).

    Q_k(x, y) = prod_{j<k} (x/s + j - y) ((1+a1) x/s + a0 + j - 1 - y) with
    s = 2 + a1 + b1, transformed with T~_{k-1}^{a0+b0-1-k, a0+b0+k-3} and
    evaluated at x = s N.
    """
    _check_slope(params)
    s, a1, a0, b0 = params.slope, params.a1, params.a0, params.b0
    seq = [product([UniPoly.linear(1 / s, j - i) * UniPoly.linear((1 + a1) / s, a0 + j - 1 - i)
                    for j in range(k)])
           for i in range(k)]
    t = t_transform(seq, k - 1, a0 + b0 - 1 - k, a0 + b0 + k - 3)
    return t.scale_var(s)


def ik_denominator(k: int, params: ScalingParams) -> UniPoly:
    """k! N prod_{j=-k+1}^{k-1} (a + b + 2N + j - 2), unreduced."""
    n = UniPoly.x()
    s = params.a_poly + params.b_poly + 2 * n
    return product([s + (j - 2) for j in range(-k + 1, k)]) * n * math.factorial(k)


def ik_rf(k: int, params: ScalingParams) -> RationalFunction:
    """I_k / N as a reduced rational function of N."""
    _check_slope(params)
    return RationalFunction(nk_numerator(k, params), ik_denominator(k, params))


# -- power-sum products in the Schur basis ------------------------------------

def _add_rim_hooks(mu: tuple[int, ...], r: int):
    """All (nu, sign) with nu/mu a border strip of size r (beta-number form)."""
    length = len(mu) + r
    parts = list(mu) + [0] * r
    beta = [parts[i] + length - 1 - i for i in range(length)]
    occupied = set(beta)
    for idx, x in enumerate(beta):
        y = x + r
        if y in occupied:
            continue
        height = sum(1 for z in beta if x < z < y)
        new = sorted([z for z in beta if z != x] + [y], reverse=True)
        nu = tuple(new[i] - (length - 1 - i) for i in range(length))
        yield tuple(p for p in nu if p > 0), (-1) ** height


def mn_expand(lam, cap: int = MN_WEIGHT_CAP) -> list[tuple[Partition, int]]:
    """Schur expansion of p_lam = p_{lam_1} ... p_{lam_l}.

    Returns ``[(mu, chi), ...]`` with nonzero integer coefficients, sorted
    in reverse lexicographic order of ``mu``.
    """
    lam = as_partition(lam)
    if lam.length() == 0:
        raise ValueError("mn_expand needs a nonempty partition")
    if lam.weight() > cap:
        raise ValueError(f"|lambda| = {lam.weight()} exceeds the cap {cap}")
    current: dict[tuple[int, ...], int] = {(): 1}
    for r in lam:
        nxt: dict[tuple[int, ...], int] = {}
        for mu, c in current.items():
            for nu, sign in _add_rim_hooks(mu, r):
                nxt[nu] = nxt.get(nu, 0) + sign * c
        current = {mu: c for mu, c in nxt.items() if c}
    return [(Partition(mu), c) for mu, c in sorted(current.items(), reverse=True)]


def plambda_rf(lam, params: ScalingParams) -> RationalFunction:
    """<p_lam>/<1> as a rational function of N (valid for N >= |lam|)."""
    total = RationalFunction(0)
    for mu, c in mn_expand(lam):
        total = total + schur_average_rf(mu, params) * c
    return total


def plambda_limit(lam, params: ScalingParams) -> Fraction:
    """lim <p_lam> / (N^length <1>), read off the reduced rational function."""
    lam = as_partition(lam)
    _check_slope(params)
    rf = plambda_rf(lam, params) / RationalFunction(UniPoly.x() ** lam.length())
    return rf.limit_at_infinity()


def power_sum_partitions(weight: int) -> Iterable[Partition]:
    """All partitions of ``weight`` in reverse lexicographic order."""
    def gen(n, largest):
        if n == 0:
            yield ()
            return
        for p in range(min(n, largest), 0, -1):
            for rest in gen(n - p, p):
                yield (p,) + rest
    for parts in gen(weight, weight):
        yield Partition(parts)
