"""Gaussian integers Z[i]."""

from dataclasses import dataclass
from fractions import Fraction

from ..errors import DomainError


def round_half_up(q: Fraction) -> int:
    return (2 * q.numerator + q.denominator) // (2 * q.denominator)


@dataclass(frozen=True, order=True)
class GaussInt:
    re: int
    im: int = 0

    @classmethod
    def coerce(cls, x):
        if isinstance(x, GaussInt):
            return x
        if isinstance(x, int):
            return cls(x, 0)
        return NotImplemented

    def __add__(self, other):
        other = GaussInt.coerce(other)
        if other is NotImplemented:
            return other
        return GaussInt(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __neg__(self):
        return GaussInt(-self.re, -self.im)

    def __sub__(self, other):
        other = GaussInt.coerce(other)
        if other is NotImplemented:
            return other
        return GaussInt(self.re - other.re, self.im - other.im)

    def __rsub__(self, other):
        return -self + other

    def __mul__(self, other):
        other = GaussInt.coerce(other)
        if other is NotImplemented:
            return other
        return GaussInt(self.re * other.re - self.im * other.im,
                        self.re * other.im + self.im * other.re)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise DomainError("negative powers leave Z[i]")
        out = GaussInt(1, 0)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __bool__(self):
        return bool(self.re or self.im)

    def conj(self) -> "GaussInt":
        return GaussInt(self.re, -self.im)

    def norm(self) -> int:
        return self.re * self.re + self.im * self.im

    def is_unit(self) -> bool:
        return self.norm() == 1

    def exact_div(self, other: "GaussInt"):
        """Return ``self / other`` if it lies in Z[i], else None."""
        n = other.norm()
        if n == 0:
            raise ZeroDivisionError("division by zero in Z[i]")
        num = self * other.conj()
        if num.re % n or num.im % n:
            return None
        return GaussInt(num.re // n, num.im // n)

    def divides(self, other: "GaussInt") -> bool:
        return GaussInt.coerce(other).exact_div(self) is not None

    def __divmod__(self, other):
        other = GaussInt.coerce(other)
        n = other.norm()
        if n == 0:
            raise ZeroDivisionError("division by zero in Z[i]")
        num = self * other.conj()
        q = GaussInt(round_half_up(Fraction(num.re, n)), round_half_up(Fraction(num.im, n)))
        return q, self - q * other

    def __str__(self):
        sign = "-" if self.im < 0 else "+"
        return f"{self.re}{sign}{abs(self.im)}i"


GAUSS_UNITS = (GaussInt(1, 0), GaussInt(0, 1), GaussInt(-1, 0), GaussInt(0, -1))


def gauss_normalize(x: GaussInt):
    """Return ``(canonical, unit)`` with ``x == unit * canonical``.

    The canonical associate is the one with ``re > 0`` and ``im >= 0``.
    """
    if not x:
        raise DomainError("zero has no canonical associate")
    for u in GAUSS_UNITS:
        c = x * u
        if c.re > 0 and c.im >= 0:
            # u has norm 1, so its inverse is its conjugate
            return c, u.conj()
    raise AssertionError("unreachable")


def gauss_gcd(x: GaussInt, y: GaussInt) -> GaussInt:
    x, y = GaussInt.coerce(x), GaussInt.coerce(y)
    if not x and not y:
        raise DomainError("gcd(0, 0) is undefined")
    while y:
        _, r = divmod(x, y)
        x, y = y, r
    return gauss_normalize(x)[0]
