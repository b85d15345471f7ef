"""Independent verifiers for the closed forms.

* :func:`brute_average` expands prod_{i<j}(x_i-x_j)^2 * f into monomials and
  integrates term by term with Beta moments.  Exact, tiny N only.
* :func:`density_ik` integrates x^k against the one-point density written
  as nested finite sums over Jacobi-polynomial coefficients.  Exact, integer
  A = a-1 and B = b-1 only.
* :func:`mc_sample_pk` runs a Metropolis chain on the joint eigenvalue
  density.  Floating point, any positive a and b.
"""
from __future__ import annotations

import itertools
import math
import warnings
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Mapping, Union

import numpy as np

from .combinat import rising
from .errors import DomainError

Rat = Union[int, Fraction]

MAX_BRUTE_N = 5

#: bit generator used by the sampler; results are reproducible per numpy's
#: stream-compatibility policy for PCG64
RNG_NAME = "numpy.random.PCG64"


class MonomialPoly:
    """Sparse polynomial in n variables: {exponent tuple: Fraction}."""

    __slots__ = ("n", "terms")

    def __init__(self, n: int, terms: Mapping[tuple, Rat] | Iterable = ()):
        self.n = n
        items = terms.items() if isinstance(terms, Mapping) else terms
        clean: dict[tuple, Fraction] = {}
        for exps, c in items:
            exps = tuple(exps)
            if len(exps) != n:
                raise ValueError(f"exponent vector {exps} has length != {n}")
            clean[exps] = clean.get(exps, Fraction(0)) + Fraction(c)
        self.terms = {e: c for e, c in clean.items() if c != 0}

    @classmethod
    def one(cls, n: int) -> "MonomialPoly":
        return cls(n, {(0,) * n: 1})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return MonomialPoly(self.n, {e: c * other for e, c in self.terms.items()})
        if other.n != self.n:
            raise ValueError("variable count mismatch")
        out: dict[tuple, Fraction] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(x + y for x, y in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return MonomialPoly(self.n, out)

    __rmul__ = __mul__

    def __add__(self, other):
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, 0) + c
        return MonomialPoly(self.n, out)

    def __eq__(self, other):
        return isinstance(other, MonomialPoly) and self.n == other.n and self.terms == other.terms

    def __len__(self):
        return len(self.terms)

    def is_symmetric(self) -> bool:
        if self.n < 2:
            return True
        swap = lambda e: (e[1], e[0]) + e[2:]
        cycle = lambda e: e[1:] + e[:1]
        return all(self.terms.get(swap(e)) == c and self.terms.get(cycle(e)) == c
                   for e, c in self.terms.items())

    def __repr__(self):
        return f"MonomialPoly(n={self.n}, terms={len(self.terms)})"


def _perm_sign(perm: tuple[int, ...]) -> int:
    sign, seen = 1, [False] * len(perm)
    for i in range(len(perm)):
        if seen[i]:
            continue
        j, cyc = i, 0
        while not seen[j]:
            seen[j] = True
            j = perm[j]
            cyc += 1
        if cyc % 2 == 0:
            sign = -sign
    return sign


@lru_cache(maxsize=None)
def vandermonde(n: int) -> MonomialPoly:
    """prod_{i<j}(x_i - x_j) = det(x_i^(n-1-j)) as n! signed monomials."""
    terms = {}
    for perm in itertools.permutations(range(n)):
        terms[tuple(n - 1 - perm[i] for i in range(n))] = _perm_sign(perm)
    return MonomialPoly(n, terms)


@lru_cache(maxsize=None)
def vandermonde_sq(n: int) -> MonomialPoly:
    v = vandermonde(n)
    return v * v


def power_sum(k: int, n: int) -> MonomialPoly:
    return MonomialPoly(n, [(tuple(k if j == i else 0 for j in range(n)), 1) for i in range(n)])


def _ssyt(shape: tuple[int, ...], n: int):
    """Semistandard tableaux of ``shape`` with entries in 0..n-1, row by row."""
    cells = [(r, c) for r, length in enumerate(shape) for c in range(length)]
    filling: dict[tuple[int, int], int] = {}

    def fill(idx):
        if idx == len(cells):
            yield dict(filling)
            return
        r, c = cells[idx]
        lo = 0
        if c > 0:
            lo = max(lo, filling[(r, c - 1)])
        if r > 0:
            lo = max(lo, filling[(r - 1, c)] + 1)
        for v in range(lo, n):
            filling[(r, c)] = v
            yield from fill(idx + 1)
        filling.pop((r, c), None)

    yield from fill(0)


def schur_poly(lam, n: int) -> MonomialPoly:
    """s_lambda(x_1..x_n) as a sum over semistandard Young tableaux."""
    shape = tuple(lam)
    if len(shape) > n:
        return MonomialPoly(n)
    terms: dict[tuple, int] = {}
    for t in _ssyt(shape, n):
        e = [0] * n
        for v in t.values():
            e[v] += 1
        e = tuple(e)
        terms[e] = terms.get(e, 0) + 1
    return MonomialPoly(n, terms)


def _beta_functional(poly: MonomialPoly, a: Fraction, b: Fraction) -> Fraction:
    """Apply x^m -> prod_i prod_{j<m_i} (a+j)/(a+b+j) linearly."""
    cache: dict[int, Fraction] = {}

    def moment(m):
        if m not in cache:
            v = Fraction(1)
            for j in range(m):
                v *= (a + j) / (a + b + j)
            cache[m] = v
        return cache[m]

    total = Fraction(0)
    for e, c in poly.terms.items():
        t = c
        for m in e:
            t *= moment(m)
        total += t
    return total


def brute_average(f: MonomialPoly, n: int, a: Rat, b: Rat) -> Fraction:
    """<f>/<1> by direct monomial expansion of the Vandermonde-squared integrand."""
    if not 1 <= n <= MAX_BRUTE_N:
        raise DomainError(f"brute_average supports 1 <= n <= {MAX_BRUTE_N}, got {n}")
    if f.n != n:
        raise ValueError(f"polynomial has {f.n} variables, expected {n}")
    if not f.is_symmetric():
        raise ValueError("brute_average needs a symmetric polynomial")
    a, b = Fraction(a), Fraction(b)
    if a <= 0 or b <= 0:
        raise DomainError(f"brute_average needs a, b > 0, got a={a}, b={b}")
    v2 = vandermonde_sq(n)
    return _beta_functional(v2 * f, a, b) / _beta_functional(v2, a, b)


def brute_selberg(n: int, a: int, b: int) -> Fraction:
    """Unnormalised integral of prod(x_i-x_j)^2 prod x^(a-1)(1-x)^(b-1), integer a, b."""
    if not 1 <= n <= MAX_BRUTE_N:
        raise DomainError(f"brute_selberg supports 1 <= n <= {MAX_BRUTE_N}, got {n}")
    if not (isinstance(a, int) and isinstance(b, int) and a >= 1 and b >= 1):
        raise DomainError("brute_selberg needs positive integer a, b")
    f = math.factorial
    beta = lambda p, q: Fraction(f(p - 1) * f(q - 1), f(p + q - 1))
    total = Fraction(0)
    for e, c in vandermonde_sq(n).terms.items():
        t = c
        for m in e:
            t *= beta(a + m, b)
        total += t
    return total


# -- spectral density --------------------------------------------------------

@dataclass(frozen=True)
class SpectralParams:
    A: int
    B: int
    N: int

    def __post_init__(self):
        for name in ("A", "B", "N"):
            v = getattr(self, name)
            if not isinstance(v, int) or isinstance(v, bool):
                raise DomainError(f"{name} must be an integer, got {v!r}")
        if self.A < 0 or self.B < 0:
            raise DomainError(f"A, B must be >= 0, got A={self.A}, B={self.B}")
        if self.N < 1:
            raise DomainError(f"N must be >= 1, got {self.N}")

    @classmethod
    def from_ab(cls, a, b, n: int) -> "SpectralParams":
        a, b = Fraction(a), Fraction(b)
        if a.denominator != 1 or b.denominator != 1:
            raise DomainError("the density oracle needs integer a and b")
        return cls(int(a) - 1, int(b) - 1, n)


def density_ik(k: int, sp: SpectralParams) -> Fraction:
    """I_k = int x^k rho_N(x; A, B) dx from the nested-sum representation.

    ``k = 0`` returns the normalisation, which is N.
    """
    if k < 0:
        raise DomainError(f"k must be >= 0, got {k}")
    A, B, fact = sp.A, sp.B, math.factorial
    total = Fraction(0)
    for j in range(sp.N):
        c_j = Fraction((2 * j + A + B + 1) * fact(j) * fact(j + A + B),
                       fact(j + A) * fact(j + B))
        inner = Fraction(0)
        for m in range(j + 1):
            d = rising(-j, m) * rising(A + B + j + 1, m) * rising(A + m + 1, j - m) / fact(m)
            f = Fraction(fact(A + j) * fact(A + k + m) * fact(B),
                         fact(j) * fact(A) * fact(A + B + k + m + 1))
            for l in range(j + 1):
                g = (rising(-j, l) * rising(j + A + B + 1, l) * rising(A + k + m + 1, l)
                     / (fact(l) * rising(A + 1, l) * rising(A + B + k + m + 2, l)))
                inner += d * f * g
        total += c_j / fact(j) * inner
    return total


# -- Monte Carlo -------------------------------------------------------------

class AcceptanceRateWarning(UserWarning):
    pass


@dataclass(frozen=True)
class ChainConfig:
    seed: int = 42
    burn_in: int = 2000
    thinning: int = 1
    step_width: float = 0.3
    samples: int = 100_000
    batches: int = 50

    def __post_init__(self):
        if not 0 <= self.seed < 2 ** 64:
            raise DomainError("seed must be a 64-bit unsigned integer")
        for name in ("burn_in", "thinning", "samples", "batches"):
            if getattr(self, name) < 1:
                raise DomainError(f"{name} must be >= 1")
        if not 0 < self.step_width < 1:
            raise DomainError("step_width must lie in (0, 1)")
        if self.samples < self.batches:
            raise DomainError("need at least one sample per batch")


@dataclass(frozen=True)
class ChainResult:
    states: np.ndarray  # (samples, n), kept states after burn-in and thinning
    acceptance_rate: float


def run_chain(n: int, a: float, b: float, cfg: ChainConfig) -> ChainResult:
    """Metropolis-within-Gibbs chain on [0,1]^n for the beta = 1 Jacobi density.

    Each sweep updates every coordinate once, in order, with a uniform
    window proposal reflected at 0 and 1.  One state is kept every
    ``thinning`` sweeps after ``burn_in`` sweeps.
    """
    if n < 1:
        raise DomainError(f"n must be >= 1, got {n}")
    if not (a > 0 and b > 0):
        raise DomainError(f"need a, b > 0, got a={a}, b={b}")
    rng = np.random.Generator(np.random.PCG64(cfg.seed))
    am1, bm1, w = float(a) - 1.0, float(b) - 1.0, cfg.step_width
    x = [(i + 0.5) / n for i in range(n)]
    log, fabs = math.log, abs

    def single(xi):
        return am1 * log(xi) + bm1 * log(1.0 - xi)

    sweeps = cfg.burn_in + cfg.samples * cfg.thinning
    kept = np.empty((cfg.samples, n))
    accepted = 0
    block = 4096
    steps = rng.uniform(-w, w, size=block * n).tolist()
    logu = np.log(rng.random(block * n)).tolist()
    pos = 0
    out_row = 0
    for sweep in range(sweeps):
        if pos + n > len(steps):
            steps = rng.uniform(-w, w, size=block * n).tolist()
            logu = np.log(rng.random(block * n)).tolist()
            pos = 0
        for i in range(n):
            old = x[i]
            new = old + steps[pos]
            if new < 0.0:
                new = -new
            elif new > 1.0:
                new = 2.0 - new
            if new <= 0.0 or new >= 1.0:
                pos += 1
                continue
            delta = single(new) - single(old)
            for j in range(n):
                if j != i:
                    delta += 2.0 * (log(fabs(new - x[j])) - log(fabs(old - x[j])))
            if logu[pos] < delta:
                x[i] = new
                accepted += 1
            pos += 1
        if sweep >= cfg.burn_in and (sweep - cfg.burn_in) % cfg.thinning == 0:
            kept[out_row] = x
            out_row += 1
    rate = accepted / (sweeps * n)
    if not 0.05 <= rate <= 0.95:
        warnings.warn(f"Metropolis acceptance rate {rate:.3f} outside [0.05, 0.95]",
                      AcceptanceRateWarning, stacklevel=2)
    return ChainResult(kept, rate)


def batch_means(values: np.ndarray, batches: int) -> tuple[float, float]:
    """Sample mean and batch-means standard error."""
    usable = len(values) - len(values) % batches
    means = values[:usable].reshape(batches, -1).mean(axis=1)
    return float(values.mean()), float(means.std(ddof=1) / math.sqrt(batches))


def mc_sample_pk(k: int, n: int, a: float, b: float, cfg: ChainConfig) -> tuple[float, float]:
    """Monte Carlo estimate of <p_k> and its standard error."""
    if k < 1:
        raise DomainError(f"k must be >= 1, got {k}")
    res = run_chain(n, a, b, cfg)
    return batch_means((res.states ** k).sum(axis=1), cfg.batches)
