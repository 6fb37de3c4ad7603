"""The golden integers Z[tau] and their fraction field Q(tau).

``tau = (1 + sqrt 5) / 2`` satisfies ``tau**2 = tau + 1``.  Algebraic
conjugation sends ``tau`` to ``1 - tau = -1/tau``.
"""

from dataclasses import dataclass
from fractions import Fraction
import math

from ..errors import DomainError
from .gaussian import round_half_up

TAU = (1 + math.sqrt(5)) / 2
TAU_CONJ = (1 - math.sqrt(5)) / 2


def _sign_sqrt5(u, v) -> int:
    """Sign of ``u + v*sqrt(5)`` for rationals u, v."""
    su = (u > 0) - (u < 0)
    sv = (v > 0) - (v < 0)
    if su == sv or sv == 0:
        return su
    if su == 0:
        return sv
    # opposite signs: compare magnitudes
    lhs, rhs = u * u, 5 * v * v
    if lhs == rhs:
        return 0
    return su if lhs > rhs else sv


@dataclass(frozen=True, order=True)
class GoldenInt:
    a: int
    b: int = 0

    @classmethod
    def coerce(cls, x):
        if isinstance(x, GoldenInt):
            return x
        if isinstance(x, int):
            return cls(x, 0)
        return NotImplemented

    def __add__(self, other):
        other = GoldenInt.coerce(other)
        if other is NotImplemented:
            return other
        return GoldenInt(self.a + other.a, self.b + other.b)

    __radd__ = __add__

    def __neg__(self):
        return GoldenInt(-self.a, -self.b)

    def __sub__(self, other):
        other = GoldenInt.coerce(other)
        if other is NotImplemented:
            return other
        return GoldenInt(self.a - other.a, self.b - other.b)

    def __rsub__(self, other):
        return -self + other

    def __mul__(self, other):
        other = GoldenInt.coerce(other)
        if other is NotImplemented:
            return other
        a, b, c, d = self.a, self.b, other.a, other.b
        bd = b * d
        return GoldenInt(a * c + bd, a * d + b * c + bd)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            inv = self.unit_inverse()
            return inv ** (-k)
        out, base = GoldenInt(1), self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __bool__(self):
        return bool(self.a or self.b)

    def conj(self) -> "GoldenInt":
        return GoldenInt(self.a + self.b, -self.b)

    def norm(self) -> int:
        return self.a * self.a + self.a * self.b - self.b * self.b

    def trace(self) -> int:
        return 2 * self.a + self.b

    def is_unit(self) -> bool:
        return abs(self.norm()) == 1

    def unit_inverse(self) -> "GoldenInt":
        n = self.norm()
        if abs(n) != 1:
            raise DomainError(f"{self} is not a unit in Z[tau]")
        c = self.conj()
        return GoldenInt(c.a * n, c.b * n)

    def sign(self) -> int:
        return _sign_sqrt5(Fraction(2 * self.a + self.b), Fraction(self.b))

    def conj_sign(self) -> int:
        return self.conj().sign()

    def is_totally_positive(self) -> bool:
        return self.sign() > 0 and self.conj_sign() > 0

    def __float__(self):
        return self.a + self.b * TAU

    def exact_div(self, other):
        other = GoldenInt.coerce(other)
        n = other.norm()
        if n == 0:
            raise ZeroDivisionError("division by zero in Z[tau]")
        num = self * other.conj()
        if num.a % n or num.b % n:
            return None
        return GoldenInt(num.a // n, num.b // n)

    def divides(self, other) -> bool:
        return GoldenInt.coerce(other).exact_div(self) is not None

    def __divmod__(self, other):
        other = GoldenInt.coerce(other)
        n = other.norm()
        if n == 0:
            raise ZeroDivisionError("division by zero in Z[tau]")
        num = self * other.conj()
        q = GoldenInt(round_half_up(Fraction(num.a, n)), round_half_up(Fraction(num.b, n)))
        return q, self - q * other

    def __str__(self):
        sign = "-" if self.b < 0 else "+"
        return f"{self.a}{sign}{abs(self.b)}t"


TAU_INT = GoldenInt(0, 1)
TAU_INV = GoldenInt(-1, 1)


def golden_normalize(x: GoldenInt):
    """Return ``(canonical, unit)`` with ``x == unit * canonical``.

    The canonical associate is totally positive and has the smallest
    trace among all totally positive associates.  This is a convention;
    no particular choice is forced by the arithmetic.
    """
    if not x:
        raise DomainError("zero has no canonical associate")
    c = x
    s1, s2 = c.sign(), c.conj_sign()
    if s1 < 0 and s2 < 0:
        c = -c
    elif s1 > 0 and s2 < 0:
        c = c * TAU_INT          # tau has signs (+, -)
    elif s1 < 0 and s2 > 0:
        c = -c * TAU_INT
    tau2, tau_m2 = GoldenInt(1, 1), GoldenInt(2, -1)
    while True:
        up, down = c * tau2, c * tau_m2
        if up.trace() < c.trace():
            c = up
        elif down.trace() < c.trace():
            c = down
        else:
            break
    unit = x.exact_div(c)
    return c, unit


def golden_gcd(x, y) -> GoldenInt:
    x, y = GoldenInt.coerce(x), GoldenInt.coerce(y)
    if not x and not y:
        raise DomainError("gcd(0, 0) is undefined")
    while y:
        _, r = divmod(x, y)
        x, y = y, r
    return golden_normalize(x)[0]


def unit_exponent(u: GoldenInt):
    """Write a unit as ``sign * tau**k`` and return ``(sign, k)``."""
    if not u.is_unit():
        raise DomainError(f"{u} is not a unit")
    sign = 1
    if u.sign() < 0:
        u, sign = -u, -1
    k = 0
    while u != GoldenInt(1):
        if float(u) > 1:
            u, k = u * TAU_INV, k + 1
        else:
            u, k = u * TAU_INT, k - 1
    return sign, k


def _frac(x) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


class QTau:
    """Element ``a + b*tau`` of the field Q(tau) with rational a, b."""

    __slots__ = ("a", "b")

    def __init__(self, a=0, b=0):
        if isinstance(a, (GoldenInt, QTau)):
            a, b = a.a, a.b
        self.a = _frac(a)
        self.b = _frac(b)

    @classmethod
    def coerce(cls, x):
        if isinstance(x, QTau):
            return x
        if isinstance(x, (int, Fraction, GoldenInt)):
            return cls(x)
        return NotImplemented

    def __eq__(self, other):
        other = QTau.coerce(other)
        if other is NotImplemented:
            return False
        return self.a == other.a and self.b == other.b

    def __hash__(self):
        if self.b == 0:
            return hash(self.a)
        return hash((self.a, self.b))

    def __repr__(self):
        return f"QTau({self.a}, {self.b})"

    def __str__(self):
        if self.b == 0:
            return str(self.a)
        if self.a == 0:
            return f"{self.b}t"
        sign = "-" if self.b < 0 else "+"
        return f"{self.a}{sign}{abs(self.b)}t"

    def __add__(self, other):
        other = QTau.coerce(other)
        if other is NotImplemented:
            return other
        return QTau(self.a + other.a, self.b + other.b)

    __radd__ = __add__

    def __neg__(self):
        return QTau(-self.a, -self.b)

    def __sub__(self, other):
        other = QTau.coerce(other)
        if other is NotImplemented:
            return other
        return QTau(self.a - other.a, self.b - other.b)

    def __rsub__(self, other):
        return -self + other

    def __mul__(self, other):
        other = QTau.coerce(other)
        if other is NotImplemented:
            return other
        a, b, c, d = self.a, self.b, other.a, other.b
        bd = b * d
        return QTau(a * c + bd, a * d + b * c + bd)

    __rmul__ = __mul__

    def conj(self) -> "QTau":
        return QTau(self.a + self.b, -self.b)

    def norm(self) -> Fraction:
        return self.a * self.a + self.a * self.b - self.b * self.b

    def trace(self) -> Fraction:
        return 2 * self.a + self.b

    def inverse(self) -> "QTau":
        n = self.norm()
        if n == 0:
            raise ZeroDivisionError("division by zero in Q(tau)")
        c = self.conj()
        return QTau(c.a / n, c.b / n)

    def __truediv__(self, other):
        other = QTau.coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other):
        return QTau.coerce(other) * self.inverse()

    def __bool__(self):
        return bool(self.a or self.b)

    def __float__(self):
        return float(self.a) + float(self.b) * TAU

    def conj_float(self) -> float:
        return float(self.a) + float(self.b) * TAU_CONJ

    def sign(self) -> int:
        return _sign_sqrt5(2 * self.a + self.b, self.b)

    def __lt__(self, other):
        return (self - other).sign() < 0

    def __le__(self, other):
        return (self - other).sign() <= 0

    def __gt__(self, other):
        return (self - other).sign() > 0

    def __ge__(self, other):
        return (self - other).sign() >= 0

    def is_rational(self) -> bool:
        return self.b == 0

    def is_integral(self) -> bool:
        return self.a.denominator == 1 and self.b.denominator == 1

    def to_golden_int(self) -> GoldenInt:
        if not self.is_integral():
            raise DomainError(f"{self} is not a golden integer")
        return GoldenInt(self.a.numerator, self.b.numerator)

    def denominator(self) -> int:
        """Least positive integer k with ``k * self`` in Z[tau]."""
        return math.lcm(self.a.denominator, self.b.denominator)
