"""Counting functions of coincidence problems and their Dirichlet series.

Every counting function is multiplicative and stored as a prime-power
rule ``(p, r) -> f(p^r)``.  Independently, each has an Euler factor: a
rational function num(X)/den(X) in X = p^-s whose power series has
f(p^r) as the coefficient of X^r.  The tests expand the Euler factors and
compare them with the rules, so the two descriptions check each other.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
import math
from typing import Callable, Optional

from sympy import factorint

from .errors import DomainError


# --- polynomial helpers for Euler factors --------------------------------------------

def poly_mul(a, b):
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def poly_pow(a, k):
    out = [1]
    for _ in range(k):
        out = poly_mul(out, a)
    return out


def series_quotient(num, den, order):
    """Coefficients c_0..c_order of num(X)/den(X) as a power series (den[0] = 1)."""
    if den[0] != 1:
        raise DomainError("Euler factor denominator must have constant term 1")
    c = []
    for r in range(order + 1):
        v = num[r] if r < len(num) else 0
        for k in range(1, min(r, len(den) - 1) + 1):
            v -= den[k] * c[r - k]
        c.append(v)
    return c


def _x_to_x2(poly):
    """Substitute X -> X^2."""
    out = [0] * (2 * len(poly) - 1)
    for i, c in enumerate(poly):
        out[2 * i] = c
    return out


def _shift(poly, p):
    """Substitute X -> p X (this is the step from Phi(s) to Phi(s-1))."""
    return [c * p ** i for i, c in enumerate(poly)]


# --- multiplicative functions --------------------------------------------------------------

@dataclass(frozen=True)
class MultiplicativeFunction:
    name: str
    rule: Callable[[int, int], int] = field(repr=False)
    euler: Callable[[int], tuple] = field(repr=False)   # p -> (num, den) in X
    note: str = ""

    def prime_power(self, p: int, r: int) -> int:
        return _cached_rule(self.name, self.rule, p, r)

    def __call__(self, m: int) -> int:
        if m < 1:
            raise DomainError("counting functions are defined for m >= 1")
        out = 1
        for p, r in factorint(m).items():
            out *= self.prime_power(p, r)
            if not out:
                return 0
        return out

    def euler_coefficients(self, p: int, order: int):
        num, den = self.euler(p)
        return series_quotient(num, den, order)

    def table(self, N: int) -> "SeriesTable":
        return SeriesTable(self.name, N, tuple(materialize(self, N)[1:]))


@lru_cache(maxsize=None)
def _cached_rule(name, rule, p, r):
    v = rule(p, r)
    v = Fraction(v)
    if v.denominator != 1 or v < 0:
        raise AssertionError(f"{name}: rule gave {v} at {p}^{r}")
    return int(v)


def _spf_sieve(N):
    spf = list(range(N + 1))
    for i in range(2, math.isqrt(N) + 1):
        if spf[i] == i:
            for j in range(i * i, N + 1, i):
                if spf[j] == j:
                    spf[j] = i
    return spf


def materialize(f: MultiplicativeFunction, N: int):
    """List [0, f(1), ..., f(N)] built by a smallest-prime-factor sieve."""
    if N < 1:
        raise DomainError("bound must be at least 1")
    spf = _spf_sieve(N)
    out = [0] * (N + 1)
    out[1] = 1
    for m in range(2, N + 1):
        p = spf[m]
        rest, r = m, 0
        while rest % p == 0:
            rest //= p
            r += 1
        out[m] = out[rest] * f.prime_power(p, r)
    return out


@dataclass(frozen=True)
class SeriesTable:
    """Coefficients f(1..N) of a Dirichlet series."""

    name: str
    bound: int
    coeffs: tuple

    def __getitem__(self, m: int) -> int:
        if not 1 <= m <= self.bound:
            raise IndexError(m)
        return self.coeffs[m - 1]

    def rows(self, nonzero_only=False):
        return [(m, c) for m, c in enumerate(self.coeffs, 1) if c or not nonzero_only]

    def shifted(self) -> "SeriesTable":
        """Coefficients m*f(m), i.e. the series evaluated at s-1."""
        return SeriesTable(f"{self.name}(s-1)", self.bound, tuple(m * c for m, c in enumerate(self.coeffs, 1)))

    def summatory(self, N: Optional[int] = None) -> int:
        return sum(self.coeffs[: (N or self.bound)])


def dirichlet_convolve(f: SeriesTable, g: SeriesTable, name: Optional[str] = None) -> SeriesTable:
    """h(m) = sum_{d | m} f(d) g(m/d) up to the smaller bound."""
    N = min(f.bound, g.bound)
    h = [0] * (N + 1)
    for d in range(1, N + 1):
        fd = f.coeffs[d - 1]
        if not fd:
            continue
        for k in range(1, N // d + 1):
            gk = g.coeffs[k - 1]
            if gk:
                h[d * k] += fd * gk
    return SeriesTable(name or f"{f.name}*{g.name}", N, tuple(h[1:]))


def identity_table(N: int) -> SeriesTable:
    return SeriesTable("unit", N, tuple(int(m == 1) for m in range(1, N + 1)))


def dirichlet_inverse(f: SeriesTable) -> SeriesTable:
    """g with f * g = unit (requires f(1) = 1)."""
    N = f.bound
    if f.coeffs[0] != 1:
        raise DomainError("Dirichlet inverse needs f(1) = 1")
    g = [0] * (N + 1)
    g[1] = 1
    acc = [0] * (N + 1)     # acc[m] = sum over d | m, d < m of f(m/d) g(d), filled forward
    for d in range(1, N + 1):
        if d > 1:
            g[d] = -acc[d]
        if g[d]:
            for k in range(2, N // d + 1):
                acc[d * k] += f.coeffs[k - 1] * g[d]
    return SeriesTable(f"inverse({f.name})", N, tuple(g[1:]))


# --- the counting functions ---------------------------------------------------------------

def _rule_square(p, r):
    return 2 if p % 4 == 1 else 0


def _euler_square(p):
    return ([1, 1], [1, -1]) if p % 4 == 1 else ([1], [1])


def _rule_cubic3(p, r):
    return 0 if p == 2 else (p + 1) * p ** (r - 1)


def _euler_cubic3(p):
    return ([1], [1]) if p == 2 else ([1, 1], [1, -p])


def _rule_d4(p, r):
    if p == 2:
        return 0
    return Fraction(p + 1, p - 1) * p ** (r - 1) * (p ** (r + 1) + p ** (r - 1) - 2)


def _euler_d4(p):
    if p == 2:
        return [1], [1]
    return poly_mul([1, 1], [1, p]), poly_mul([1, -p], [1, -p * p])


def d4_by_recursion(m: int) -> int:
    """f_F from the cubic f: f_F(p^r) = f(p^r) (f(p^r) + 2 sum_{l>=1} f(p^(r-2l)))."""
    out = 1
    for p, r in factorint(m).items():
        fr = F_CUBIC3.prime_power(p, r)
        tail = sum(F_CUBIC3.prime_power(p, r - 2 * l) if r - 2 * l > 0 else 1
                   for l in range(1, r // 2 + 1))
        out *= fr * (fr + 2 * tail)
    return out


def d4_by_convolution(N: int) -> SeriesTable:
    """f_F(m) = sum_{d | m} d f(d) f(m/d) for m <= N, with f the cubic function."""
    t = F_CUBIC3.table(N)
    return dirichlet_convolve(t.shifted(), t, name="D4")


def _rule_z4(p, r):
    if p == 2:
        return 2 if r == 1 else 0
    return _rule_d4(p, r)


def _euler_z4(p):
    return ([1, 2], [1]) if p == 2 else _euler_d4(p)


def _rule_tenfold(p, r):
    # ((1+X)/(1-X))^2 = (1 + 2X/(1-X))^2 has X^r coefficient 4r for r >= 1
    return 4 * r if p % 5 == 1 else 0


def _euler_tenfold(p):
    return (poly_pow([1, 1], 2), poly_pow([1, -1], 2)) if p % 5 == 1 else ([1], [1])


def _rule_icosahedral(p, r):
    if p == 5:
        return 6 * 5 ** (r - 1)
    if p % 5 in (2, 3):
        return 0 if r % 2 else (p * p + 1) * p ** (r - 2)
    return (p + 1) * ((r + 1) * p ** (r - 1) + (r - 1) * Fraction(p) ** (r - 2))


def _euler_icosahedral(p):
    if p == 5:
        return [1, 1], [1, -5]
    if p % 5 in (2, 3):
        return _x_to_x2([1, 1]), _x_to_x2([1, -p * p])
    return poly_pow([1, 1], 2), poly_pow([1, -p], 2)


def _rule_mc(p, r):
    # At p = 2 the Euler factor (1 + 4X^2)/(1 - 4X^2) = 1 + 8X^2/(1 - 4X^2)
    # gives f(4^k) = 2 * 4^k and zero on odd powers of 2.
    if p == 2:
        return 0 if r % 2 else 2 * 4 ** (r // 2)
    return _rule_icosahedral(p, r)


def _euler_mc(p):
    if p == 2:
        num, den = _euler_icosahedral(2)
        # multiply by (1 + 4^{1-s}) / (1 + 4^{-s}) = (1 + 4X^2) / (1 + X^2)
        num, den = poly_mul(num, [1, 0, 4]), poly_mul(den, [1, 0, 1])
        return num, den
    return _euler_icosahedral(p)


def _rule_h4(p, r):
    if p == 5:
        return Fraction(3, 2) * 5 ** (r - 1) * (5 ** (r + 1) + 5 ** (r - 1) - 2)
    if p % 5 in (2, 3):
        if r % 2:
            return 0
        k = r // 2
        q = p * p
        return Fraction(q + 1, q - 1) * q ** (k - 1) * (q ** (k + 1) + q ** (k - 1) - 2)
    pf = Fraction(p)
    return ((p + 1) * pf ** (r - 4) / (p - 1) ** 3
            * (4 * p * p * (2 * (p * p + 1) + r * (p * p - 1))
               + p ** r * (p * p + 1) * (r * (p ** 4 - 1) + p ** 4 - 4 * p ** 3 - 2 * p * p - 4 * p + 1)))


def _euler_h4(p):
    num, den = _euler_icosahedral(p)
    return poly_mul(num, _shift(num, p)), poly_mul(den, _shift(den, p))


def _rule_sigma1(p, r):
    return (p ** (r + 1) - 1) // (p - 1)


def _euler_sigma1(p):
    return [1], poly_mul([1, -1], [1, -p])


def _rule_square_all(p, r):
    # number of square sublattices = r2(p^r)/4
    if p == 2:
        return 1
    if p % 4 == 1:
        return r + 1
    return 0 if r % 2 else 1


def _euler_square_all(p):
    if p == 2:
        return [1], [1, -1]
    if p % 4 == 1:
        return [1], poly_pow([1, -1], 2)
    return [1], [1, 0, -1]


def _rule_square_primitive(p, r):
    if p == 2:
        return 1 if r == 1 else 0
    return 2 if p % 4 == 1 else 0


def _euler_square_primitive(p):
    if p == 2:
        return [1, 1], [1]
    return _euler_square(p)


F_SQUARE = MultiplicativeFunction("square", _rule_square, _euler_square,
                                  "CSLs of Z^2; nonzero only when every prime factor is 1 mod 4")
F_CUBIC3 = MultiplicativeFunction("cubic3", _rule_cubic3, _euler_cubic3,
                                  "CSLs of Z^3 (also FCC, BCC); zero for even m")
F_D4 = MultiplicativeFunction("D4", _rule_d4, _euler_d4, "CSLs of D4 (and D4*); zero for even m")
F_Z4 = MultiplicativeFunction("Z4", _rule_z4, _euler_z4, "CSLs of Z^4; zero when 4 | m")
F_TENFOLD = MultiplicativeFunction("tenfold", _rule_tenfold, _euler_tenfold,
                                   "CSMs of the tenfold module; primes 1 mod 5 only")
F_ICOSAHEDRAL = MultiplicativeFunction("icosahedral", _rule_icosahedral, _euler_icosahedral,
                                       "CSMs of the icosahedral modules M_B, M_P, M_F")
F_MC = MultiplicativeFunction("MC", _rule_mc, _euler_mc, "CSMs of Z[tau]^3; differs from icosahedral at 4 | m")
F_H4 = MultiplicativeFunction("H4", _rule_h4, _euler_h4, "CSMs of the icosian ring (H4 symmetry)")
F_SIGMA1 = MultiplicativeFunction("sigma1", _rule_sigma1, _euler_sigma1, "all sublattices of Z^2")
F_SQUARE_ALL = MultiplicativeFunction("square_all", _rule_square_all, _euler_square_all,
                                      "square sublattices of Z^2 (Dedekind zeta of Q(i))")
F_SQUARE_PRIMITIVE = MultiplicativeFunction("square_primitive", _rule_square_primitive, _euler_square_primitive,
                                            "primitive square sublattices of Z^2")


def square_by_zeta(N: int) -> SeriesTable:
    """Z^2 CSL coefficients from (1 + 2^-s)^-1 * zeta_K(s) / zeta(2s) with K = Q(i).

    This route only uses the square-sublattice counts (zeta_K) and two
    elementary series, so it is independent of the prime-power rule.
    """
    zk = F_SQUARE_ALL.table(N)
    zeta2 = SeriesTable("zeta(2s)", N, tuple(int(math.isqrt(m) ** 2 == m) for m in range(1, N + 1)))
    two = SeriesTable("1+2^-s", N, tuple(int(m in (1, 2)) for m in range(1, N + 1)))
    out = dirichlet_convolve(zk, dirichlet_inverse(zeta2))
    return dirichlet_convolve(out, dirichlet_inverse(two), name="square")


def _sublattice_rule(n):
    def rule(p, r):
        # coefficient of X^r in prod_{k<n} 1/(1 - p^k X)
        return series_quotient([1], _sublattice_den(n, p), r)[r]
    return rule


def _sublattice_den(n, p):
    den = [1]
    for k in range(n):
        den = poly_mul(den, [1, -(p ** k)])
    return den


@lru_cache(maxsize=None)
def sublattice_function(n: int) -> MultiplicativeFunction:
    if n < 1:
        raise DomainError("rank must be at least 1")
    return MultiplicativeFunction(f"sublattices{n}", _sublattice_rule(n),
                                  lambda p: ([1], _sublattice_den(n, p)),
                                  f"sublattices of Z^{n}")


def f_sublattices(n: int, m: int) -> int:
    """Number of sublattices of index m in Z^n, from the prime-power expansion of
    prod_{k<n} 1/(1 - p^k X)."""
    if n < 1 or m < 1:
        raise DomainError("rank and index must be positive")
    return sublattice_function(n)(m)


@lru_cache(maxsize=None)
def f_sublattices_recursive(n: int, m: int) -> int:
    """f_n(m) = sum_{d | m} d^(n-1) f_{n-1}(m/d), with f_1 = 1.

    The last HNF diagonal entry d contributes d^(n-1) choices of the
    entries left of it, which is the recursion in this form.
    """
    if n < 1 or m < 1:
        raise DomainError("rank and index must be positive")
    if n == 1:
        return 1
    return sum(d ** (n - 1) * f_sublattices_recursive(n - 1, m // d)
               for d in range(1, m + 1) if m % d == 0)


# public names used by the CLI and tests
COUNTING_FUNCTIONS = {
    "square": F_SQUARE,
    "cubic3": F_CUBIC3,
    "D4": F_D4,
    "Z4": F_Z4,
    "tenfold": F_TENFOLD,
    "icosahedral": F_ICOSAHEDRAL,
    "MC": F_MC,
    "H4": F_H4,
}

STRUCTURE_FUNCTION = {
    "Z2": "square", "Z3": "cubic3", "FCC": "cubic3", "BCC": "cubic3",
    "Z4": "Z4", "D4": "D4", "D4STAR": "D4", "M10": "tenfold",
    "MB": "icosahedral", "MP": "icosahedral", "MF": "icosahedral",
    "MC": "MC", "ICOSIAN_H4": "H4",
}


def counting_function(name: str) -> MultiplicativeFunction:
    if name in COUNTING_FUNCTIONS:
        return COUNTING_FUNCTIONS[name]
    if name in STRUCTURE_FUNCTION:
        return COUNTING_FUNCTIONS[STRUCTURE_FUNCTION[name]]
    raise DomainError(f"unknown counting function {name!r}")


def f_square(m): return F_SQUARE(m)
def f_cubic3(m): return F_CUBIC3(m)
def f_D4(m): return F_D4(m)
def f_Z4(m): return F_Z4(m)
def f_tenfold(m): return F_TENFOLD(m)
def f_icosahedral(m): return F_ICOSAHEDRAL(m)
def f_MC(m): return F_MC(m)
def f_H4(m): return F_H4(m)


# --- the square-lattice hierarchy ----------------------------------------------------------

@dataclass(frozen=True)
class HierarchyCounts:
    m: int
    all: int
    square: int
    primitive_square: int
    csl: int


def _gaussian_points(m):
    """Gaussian integers of norm m as (x, y) pairs (direct enumeration)."""
    pts = []
    r = math.isqrt(m)
    for x in range(-r, r + 1):
        y2 = m - x * x
        y = math.isqrt(y2)
        if y * y == y2:
            pts.append((x, y))
            if y:
                pts.append((x, -y))
    return pts


def hierarchy_counts(m: int) -> HierarchyCounts:
    """Sublattices of Z^2 of index m: all, square, primitive square, CSLs.

    The square counts come from direct enumeration of Gaussian integers
    of norm m (each square sublattice has four generators).
    """
    if m < 1:
        raise DomainError("index must be positive")
    pts = _gaussian_points(m)
    square = len(pts) // 4
    prim = sum(1 for x, y in pts if math.gcd(x, y) == 1) // 4
    return HierarchyCounts(m, F_SIGMA1(m), square, prim, F_SQUARE(m))


# --- asymptotics -----------------------------------------------------------------------------

LOG_TAU = math.log((1 + math.sqrt(5)) / 2)

ASYMPTOTICS = {
    # name: (constant c, exponent k) with sum_{m <= N} f(m) ~ c N^k
    "square": (1 / math.pi, 1),
    "sigma1": (math.pi ** 2 / 12, 2),
    "cubic3": (3 / math.pi ** 2, 2),
    "D4": (0.26257, 3),
    "tenfold": (5 * LOG_TAU / math.pi ** 2, 1),
    "icosahedral": (45 * math.sqrt(5) * LOG_TAU / (2 * math.pi ** 4), 2),
    "H4": (0.19773, 3),
}


def summatory_check(f, exponent: int, constant: float, N: int) -> float:
    """|sum_{m<=N} f(m) / (c N^k) - 1| for a function or a table."""
    if isinstance(f, MultiplicativeFunction):
        f = f.table(N)
    if f.bound < N:
        raise DomainError("table is shorter than the requested bound")
    total = f.summatory(N)
    return abs(total / (constant * N ** exponent) - 1)
