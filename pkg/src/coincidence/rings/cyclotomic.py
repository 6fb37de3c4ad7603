"""The cyclotomic integers Z[xi] with xi a primitive fifth root of unity.

Elements are stored on the basis 1, xi, xi^2, xi^3 and reduced with
``xi^4 = -1 - xi - xi^2 - xi^3``.
"""

from dataclasses import dataclass
import cmath
import math

from ..errors import DomainError
from .golden import GoldenInt, golden_normalize

XI = cmath.exp(2j * math.pi / 5)


def _reduce5(c):
    """Reduce a length-5 coefficient list (powers 0..4) to the 4-term basis."""
    c4 = c[4]
    return (c[0] - c4, c[1] - c4, c[2] - c4, c[3] - c4)


@dataclass(frozen=True, order=True)
class CycloInt:
    c0: int
    c1: int = 0
    c2: int = 0
    c3: int = 0

    @property
    def coeffs(self):
        return (self.c0, self.c1, self.c2, self.c3)

    @classmethod
    def coerce(cls, x):
        if isinstance(x, CycloInt):
            return x
        if isinstance(x, int):
            return cls(x)
        if isinstance(x, GoldenInt):
            return from_golden(x)
        return NotImplemented

    @classmethod
    def xi_power(cls, k: int) -> "CycloInt":
        c = [0] * 5
        c[k % 5] = 1
        return cls(*_reduce5(c))

    def __add__(self, other):
        other = CycloInt.coerce(other)
        if other is NotImplemented:
            return other
        return CycloInt(*(x + y for x, y in zip(self.coeffs, other.coeffs)))

    __radd__ = __add__

    def __neg__(self):
        return CycloInt(-self.c0, -self.c1, -self.c2, -self.c3)

    def __sub__(self, other):
        other = CycloInt.coerce(other)
        if other is NotImplemented:
            return other
        return CycloInt(*(x - y for x, y in zip(self.coeffs, other.coeffs)))

    def __rsub__(self, other):
        return -self + other

    def __mul__(self, other):
        other = CycloInt.coerce(other)
        if other is NotImplemented:
            return other
        # multiply modulo xi^5 = 1 into 5 slots, then fold xi^4
        acc = [0] * 5
        for i, x in enumerate(self.coeffs):
            if x:
                for j, y in enumerate(other.coeffs):
                    if y:
                        acc[(i + j) % 5] += x * y
        return CycloInt(*_reduce5(acc))

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise DomainError("negative powers need a unit")
        out, base = CycloInt(1), self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __bool__(self):
        return any(self.coeffs)

    def galois(self, k: int) -> "CycloInt":
        """Apply the automorphism xi -> xi^k (k coprime to 5)."""
        if k % 5 == 0:
            raise DomainError("xi -> xi^0 is not an automorphism")
        acc = [0] * 5
        for i, x in enumerate(self.coeffs):
            acc[(i * k) % 5] += x
        return CycloInt(*_reduce5(acc))

    def conj(self) -> "CycloInt":
        return self.galois(4)

    def real_part_golden(self) -> GoldenInt:
        """For a real element (fixed by conjugation) return it as a golden integer."""
        if self.c1 != 0 or self.c2 != self.c3:
            raise DomainError(f"{self} is not real")
        # xi^2 + xi^3 = -tau
        return GoldenInt(self.c0, -self.c2)

    def abs2(self) -> GoldenInt:
        """``x * conj(x)`` as an element of Z[tau]."""
        return (self * self.conj()).real_part_golden()

    def norm(self) -> int:
        """Absolute norm: product of the four Galois conjugates (always >= 0)."""
        return self.abs2().norm()

    def is_unit(self) -> bool:
        return self.norm() == 1

    def cofactor(self) -> "CycloInt":
        """Product of the three other conjugates, so ``x * cofactor == norm``."""
        return self.galois(2) * self.galois(3) * self.galois(4)

    def exact_div(self, other):
        other = CycloInt.coerce(other)
        n = other.norm()
        if n == 0:
            raise ZeroDivisionError("division by zero in Z[xi]")
        num = self * other.cofactor()
        if any(c % n for c in num.coeffs):
            return None
        return CycloInt(*(c // n for c in num.coeffs))

    def divides(self, other) -> bool:
        return CycloInt.coerce(other).exact_div(self) is not None

    def __complex__(self):
        return sum(c * XI ** k for k, c in enumerate(self.coeffs))

    def __str__(self):
        c0, c1, c2, c3 = self.coeffs
        s = f"{c0}"
        for c, mono in ((c1, "x"), (c2, "x^2"), (c3, "x^3")):
            s += f"{'-' if c < 0 else '+'}{abs(c)}*{mono}"
        return s


def from_golden(g: GoldenInt) -> CycloInt:
    # tau = -(xi^2 + xi^3)
    return CycloInt(g.a, 0, -g.b, -g.b)


CYCLO_TAU = from_golden(GoldenInt(0, 1))
CYCLO_TAU_INV = from_golden(GoldenInt(-1, 1))
ROOTS_OF_UNITY = tuple(s * CycloInt.xi_power(k) for s in (1, -1) for k in range(5))


def cyclo_normalize(x: CycloInt):
    """Return ``(canonical, unit)`` with ``x == unit * canonical``.

    The unit group is ``{+-xi^k tau^n}``.  First the power of tau is fixed
    so that ``|x|^2`` (an element of Z[tau]) is its own minimal-trace
    totally positive associate; the golden unit removed this way goes into
    the returned unit.  Then the lexicographically least coefficient
    vector among the ten associates ``+-xi^k x`` is chosen.
    """
    if not x:
        raise DomainError("zero has no canonical associate")
    a2 = x.abs2()
    canon2, u2 = golden_normalize(a2)
    # u2 = tau^(2n) for the n with |x tau^-n|^2 = canon2
    c = x
    tau2 = GoldenInt(1, 1)
    probe = GoldenInt(1)
    n = 0
    while probe != u2:
        if float(u2) > float(probe):
            probe, n = probe * tau2, n + 1
        else:
            probe, n = probe * GoldenInt(2, -1), n - 1
    step = CYCLO_TAU_INV if n > 0 else CYCLO_TAU
    for _ in range(abs(n)):
        c = c * step
    best = min((r * c for r in ROOTS_OF_UNITY), key=lambda e: e.coeffs)
    unit = x.exact_div(best)
    return best, unit


def cyclo_gcd_is_unit(x: CycloInt, y: CycloInt) -> bool:
    """True when x and y share no prime factor (checked through norms)."""
    from .factor import factor_element

    if not x or not y:
        raise DomainError("coprimality with zero")
    fx = {p for p, _ in factor_element(x)[1]}
    fy = {p for p, _ in factor_element(y)[1]}
    return not (fx & fy)
