"""Dense univariate polynomials and reduced rational functions over Q.

Coefficients are :class:`fractions.Fraction`, stored lowest degree first.
The zero polynomial has no coefficients and degree ``-1``.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Union

from .errors import DomainError

Scalar = Union[int, Fraction]


def _frac(c) -> Fraction:
    if isinstance(c, Fraction):
        return c
    if isinstance(c, int):
        return Fraction(c)
    if isinstance(c, str):
        return Fraction(c)
    raise TypeError(f"not an exact rational: {c!r}")


class UniPoly:
    """Immutable dense polynomial ``c[0] + c[1]*x + ... + c[d]*x**d``."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        cs = [_frac(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs: tuple[Fraction, ...] = tuple(cs)

    # -- constructors ----------------------------------------------------
    @classmethod
    def const(cls, c: Scalar) -> "UniPoly":
        return cls([c])

    @classmethod
    def x(cls) -> "UniPoly":
        return cls([0, 1])

    @classmethod
    def linear(cls, slope: Scalar, intercept: Scalar) -> "UniPoly":
        """``slope*x + intercept``."""
        return cls([intercept, slope])

    @classmethod
    def coerce(cls, value) -> "UniPoly":
        return value if isinstance(value, UniPoly) else cls.const(value)

    # -- basic queries ---------------------------------------------------
    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def leading(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def coeff(self, i: int) -> Fraction:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else Fraction(0)

    def __iter__(self):
        return iter(self.coeffs)

    def __len__(self):
        return len(self.coeffs)

    # -- arithmetic ------------------------------------------------------
    def __add__(self, other):
        if not isinstance(other, UniPoly):
            if not isinstance(other, (int, Fraction)):
                return NotImplemented
            other = UniPoly.const(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return UniPoly(out)

    __radd__ = __add__

    def __neg__(self):
        return UniPoly([-c for c in self.coeffs])

    def __sub__(self, other):
        if not isinstance(other, (UniPoly, int, Fraction)):
            return NotImplemented
        return self + (-UniPoly.coerce(other))

    def __rsub__(self, other):
        if not isinstance(other, (int, Fraction)):
            return NotImplemented
        return UniPoly.const(other) - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                return UniPoly()
            return UniPoly([c * other for c in self.coeffs])
        if not isinstance(other, UniPoly):
            return NotImplemented
        if not self.coeffs or not other.coeffs:
            return UniPoly()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, ci in enumerate(self.coeffs):
            if ci == 0:
                continue
            for j, cj in enumerate(other.coeffs):
                out[i + j] += ci * cj
        return UniPoly(out)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise ZeroDivisionError("polynomial divided by zero scalar")
            return UniPoly([c / other for c in self.coeffs])
        return NotImplemented

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative power of a polynomial")
        out, base = UniPoly.const(1), self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def divmod(self, other: "UniPoly") -> tuple["UniPoly", "UniPoly"]:
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dq = len(rem) - len(other.coeffs)
        if dq < 0:
            return UniPoly(), self
        quot = [Fraction(0)] * (dq + 1)
        lead = other.coeffs[-1]
        for shift in range(dq, -1, -1):
            c = rem[shift + len(other.coeffs) - 1] / lead
            quot[shift] = c
            if c:
                for j, oc in enumerate(other.coeffs):
                    rem[shift + j] -= c * oc
        return UniPoly(quot), UniPoly(rem[: len(other.coeffs) - 1])

    def __floordiv__(self, other: "UniPoly") -> "UniPoly":
        return self.divmod(other)[0]

    def __mod__(self, other: "UniPoly") -> "UniPoly":
        return self.divmod(other)[1]

    def __divmod__(self, other: "UniPoly"):
        return self.divmod(other)

    def monic(self) -> "UniPoly":
        if self.is_zero():
            return self
        return self / self.leading()

    # -- evaluation and composition --------------------------------------
    def __call__(self, value):
        """Horner evaluation; ``value`` may be a scalar or a UniPoly."""
        acc = UniPoly() if isinstance(value, UniPoly) else Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * value + c
        return acc

    def scale_var(self, factor: Scalar) -> "UniPoly":
        """Return ``p(factor * x)``."""
        f = _frac(factor)
        out, power = [], Fraction(1)
        for c in self.coeffs:
            out.append(c * power)
            power *= f
        return UniPoly(out)

    # -- comparison ------------------------------------------------------
    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = UniPoly.const(other)
        if not isinstance(other, UniPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"UniPoly({[str(c) for c in self.coeffs]})"

    def to_str(self, var: str = "x") -> str:
        if self.is_zero():
            return "0"
        terms = []
        for i in range(self.degree, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            mono = "" if i == 0 else (var if i == 1 else f"{var}^{i}")
            if mono and c == 1:
                terms.append(mono)
            elif mono and c == -1:
                terms.append(f"-{mono}")
            elif mono:
                terms.append(f"({c})*{mono}" if c.denominator != 1 else f"{c}*{mono}")
            else:
                terms.append(str(c))
        return " + ".join(terms).replace("+ -", "- ")


def poly_gcd(p: UniPoly, q: UniPoly) -> UniPoly:
    """Monic gcd over Q (zero if both inputs are zero)."""
    while not q.is_zero():
        p, q = q, p % q
    return p.monic()


def product(factors: Iterable[UniPoly]) -> UniPoly:
    out = UniPoly.const(1)
    for f in factors:
        out = out * f
    return out


class RationalFunction:
    """Reduced quotient of two polynomials with a monic denominator."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=1):
        num, den = UniPoly.coerce(num), UniPoly.coerce(den)
        if den.is_zero():
            raise DomainError("rational function with zero denominator")
        g = poly_gcd(num, den)
        if g.degree > 0:
            num, den = num // g, den // g
        lead = den.leading()
        self.num = num / lead
        self.den = den / lead

    def __add__(self, other):
        other = _as_rf(other)
        if other is NotImplemented:
            return other
        return RationalFunction(self.num * other.den + other.num * self.den,
                                self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return RationalFunction(-self.num, self.den)

    def __sub__(self, other):
        other = _as_rf(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = _as_rf(other)
        if other is NotImplemented:
            return other
        return RationalFunction(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _as_rf(other)
        if other is NotImplemented:
            return other
        if other.num.is_zero():
            raise ZeroDivisionError("division by the zero rational function")
        return RationalFunction(self.num * other.den, self.den * other.num)

    def __call__(self, value: Scalar) -> Fraction:
        d = self.den(_frac(value))
        if d == 0:
            raise DomainError(f"denominator vanishes at {value}")
        return self.num(_frac(value)) / d

    def limit_at_infinity(self) -> Fraction:
        """Limit as the variable tends to +infinity.

        Raises :class:`DomainError` when the numerator degree exceeds the
        denominator degree.
        """
        if self.num.is_zero():
            return Fraction(0)
        if self.num.degree > self.den.degree:
            raise DomainError(
                f"infinite limit: numerator degree {self.num.degree} > "
                f"denominator degree {self.den.degree}")
        if self.num.degree < self.den.degree:
            return Fraction(0)
        return self.num.leading() / self.den.leading()

    def __eq__(self, other):
        other = _as_rf(other)
        if other is NotImplemented:
            return other
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, self.den))

    def __repr__(self):
        return f"RationalFunction({self.num.to_str('N')!r}, {self.den.to_str('N')!r})"


def _as_rf(value):
    if isinstance(value, RationalFunction):
        return value
    if isinstance(value, (UniPoly, int, Fraction)):
        return RationalFunction(value)
    return NotImplemented
