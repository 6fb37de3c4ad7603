"""Quaternions over Z, Q, Z[tau] and Q(tau), and the rotation maps they induce.

A quaternion is stored as its four components ``(k, l, m, n)`` meaning
``k + l*i + m*j + n*k``.  Components may be ints, Fractions, GoldenInt or
QTau; arithmetic is whatever the component type provides.
"""

from dataclasses import dataclass
from fractions import Fraction
import math

from .errors import DomainError
from .rings.factor import golden_sqrt
from .rings.golden import GoldenInt, QTau, golden_gcd, golden_normalize
from .rings.text import parse_scalar


def _field(x):
    """Lift a component into a field type (Fraction or QTau)."""
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, GoldenInt):
        return QTau(x)
    return x


def _sign(x) -> int:
    if isinstance(x, (GoldenInt, QTau)):
        return x.sign()
    return (x > 0) - (x < 0)


@dataclass(frozen=True)
class Quat:
    k: object
    l: object = 0
    m: object = 0
    n: object = 0

    @property
    def comps(self):
        return (self.k, self.l, self.m, self.n)

    @property
    def ring(self) -> str:
        """'integer', 'rational', 'golden' or 'golden-rational'."""
        cs = self.comps
        if any(isinstance(c, QTau) for c in cs):
            if all(c.is_integral() if isinstance(c, QTau) else True for c in cs):
                return "golden"
            return "golden-rational"
        if any(isinstance(c, GoldenInt) for c in cs):
            return "golden"
        if all(isinstance(c, int) or Fraction(c).denominator == 1 for c in cs):
            return "integer"
        return "rational"

    def __add__(self, other):
        return Quat(*(a + b for a, b in zip(self.comps, other.comps)))

    def __sub__(self, other):
        return Quat(*(a - b for a, b in zip(self.comps, other.comps)))

    def __neg__(self):
        return Quat(*(-a for a in self.comps))

    def __mul__(self, other):
        if not isinstance(other, Quat):
            return Quat(*(a * other for a in self.comps))
        a1, b1, c1, d1 = self.comps
        a2, b2, c2, d2 = other.comps
        return Quat(a1 * a2 - b1 * b2 - c1 * c2 - d1 * d2,
                    a1 * b2 + b1 * a2 + c1 * d2 - d1 * c2,
                    a1 * c2 - b1 * d2 + c1 * a2 + d1 * b2,
                    a1 * d2 + b1 * c2 - c1 * b2 + d1 * a2)

    def __rmul__(self, scalar):
        return Quat(*(scalar * a for a in self.comps))

    def __bool__(self):
        return any(bool(c) for c in self.comps)

    def conj(self) -> "Quat":
        return Quat(self.k, -self.l, -self.m, -self.n)

    def norm2(self):
        """Reduced norm ``|q|^2``."""
        k, l, m, n = self.comps
        return k * k + l * l + m * m + n * n

    def scaled(self, c) -> "Quat":
        return Quat(*(a * c for a in self.comps))

    def divided(self, c) -> "Quat":
        c = _field(c)
        return Quat(*(_field(a) / c for a in self.comps))

    def lifted(self) -> "Quat":
        return Quat(*(_field(a) for a in self.comps))

    def canonical_sign(self) -> "Quat":
        """``q`` or ``-q``, whichever has its first nonzero component positive."""
        for c in self.comps:
            s = _sign(c)
            if s:
                return self if s > 0 else -self
        raise DomainError("zero quaternion")

    def __str__(self):
        return "(" + ",".join(str(c) for c in self.comps) + ")"


def parse_quat(text: str) -> Quat:
    s = text.strip()
    if not (s.startswith("(") and s.endswith(")")):
        raise DomainError(f"quaternion {text!r} must look like (k,l,m,n)")
    parts = s[1:-1].split(",")
    if len(parts) != 4:
        raise DomainError(f"quaternion {text!r} needs four components")
    vals = [parse_scalar(p) for p in parts]
    if any(isinstance(v, (GoldenInt, QTau)) for v in vals):
        vals = [QTau(v) if not isinstance(v, QTau) else v for v in vals]
        if all(v.is_integral() for v in vals):
            vals = [v.to_golden_int() for v in vals]
        return Quat(*vals)
    vals = [int(v) if v.denominator == 1 else v for v in vals]
    return Quat(*vals)


def cayley3(q: Quat):
    """Rotation matrix R(q) = (1/|q|^2) * (quadratic matrix in the components)."""
    if not q:
        raise DomainError("zero quaternion has no rotation")
    if all(isinstance(c, int) for c in q.comps):
        k, l, m, n = q.comps
    else:
        k, l, m, n = (_field(c) for c in q.comps)
    s = k * k + l * l + m * m + n * n
    M = [
        [k * k + l * l - m * m - n * n, 2 * (l * m - k * n), 2 * (k * m + l * n)],
        [2 * (k * n + l * m), k * k - l * l + m * m - n * n, 2 * (m * n - k * l)],
        [2 * (l * n - k * m), 2 * (k * l + m * n), k * k - l * l - m * m + n * n],
    ]
    if isinstance(s, int):
        return [[Fraction(x, s) for x in row] for row in M]
    return [[x / s for x in row] for row in M]


def mat4(q1: Quat, q2: Quat):
    """Integral 4x4 matrix M(q1, q2) with ``M x = q1 x conj(q2)`` (unnormalized)."""
    if not q1 or not q2:
        raise DomainError("zero quaternion")
    k, l, m, n = q1.comps
    a, b, c, d = q2.comps
    return [
        [a * k + b * l + c * m + d * n, -a * l + b * k + c * n - d * m,
         -a * m - b * n + c * k + d * l, -a * n + b * m - c * l + d * k],
        [a * l - b * k + c * n - d * m, a * k + b * l - c * m - d * n,
         -a * n + b * m + c * l - d * k, a * m + b * n + c * k + d * l],
        [a * m - b * n - c * k + d * l, a * n + b * m + c * l + d * k,
         a * k - b * l + c * m - d * n, -a * l - b * k + c * n + d * m],
        [a * n + b * m - c * l - d * k, -a * m + b * n - c * k + d * l,
         a * l + b * k + c * n + d * m, a * k - b * l - c * m + d * n],
    ]


def pair_scale(q1: Quat, q2: Quat):
    """``|q1 q2|`` as an integer or golden integer, or None if it is irrational."""
    n = q1.norm2() * q2.norm2()
    if isinstance(n, QTau):
        den = n.denominator()
        r = pair_scale_value((n * (den * den)).to_golden_int())
        return None if r is None else _field(r) / den
    return pair_scale_value(n)


def pair_scale_value(n):
    if isinstance(n, GoldenInt):
        return golden_sqrt(n)
    n = Fraction(n)
    a, b = n.numerator, n.denominator
    ra, rb = math.isqrt(a), math.isqrt(b)
    if ra * ra != a or rb * rb != b:
        return None
    return Fraction(ra, rb) if rb != 1 else ra


def rot4(q1: Quat, q2: Quat):
    """The rotation R(q1, q2) = M(q1, q2) / |q1 q2| (exact)."""
    s = pair_scale(q1, q2)
    if s is None:
        raise DomainError(f"pair {q1}, {q2} is not admissible: |q1 q2|^2 is not a square")
    s = _field(s)
    return [[_field(x) / s for x in row] for row in mat4(q1, q2)]


def content(q: Quat):
    """gcd of the components (integers: positive; Z[tau]: canonical associate)."""
    if not q:
        raise DomainError("zero quaternion")
    if q.ring == "integer":
        return math.gcd(*(int(c) for c in q.comps))
    if q.ring == "golden":
        g = GoldenInt(0)
        for c in q.comps:
            c = c.to_golden_int() if isinstance(c, QTau) else GoldenInt.coerce(c)
            if c:
                g = golden_gcd(g, c) if g else golden_normalize(c)[0]
        return g
    raise DomainError("content is defined for integer and golden quaternions")


def is_primitive(q: Quat) -> bool:
    g = content(q)
    return g == 1 if isinstance(g, int) else g.is_unit()


def make_primitive(q: Quat):
    """Return ``(p, c)`` with ``q = c * p`` and ``p`` primitive.

    The unit freedom in ``c`` is fixed so that the first nonzero component
    of ``p`` is positive (integers) or a canonical associate (Z[tau]).
    """
    g = content(q)
    if isinstance(g, int):
        p = Quat(*(int(c) // g for c in q.comps))
        if _sign(next(c for c in p.comps if c)) < 0:
            p, g = -p, -g
        return p, g
    comps = [c.to_golden_int() if isinstance(c, QTau) else GoldenInt.coerce(c) for c in q.comps]
    parts = [c.exact_div(g) for c in comps]
    lead = next(c for c in parts if c)
    _, u = golden_normalize(lead)
    inv = u.unit_inverse()
    return Quat(*(c * inv for c in parts)), g * u


def is_admissible_pair(q1: Quat, q2: Quat) -> bool:
    """True when ``|q1 q2|^2`` is a square (in N, or in Z[tau] for golden pairs)."""
    for q in (q1, q2):
        if not is_primitive(q):
            raise DomainError(f"{q} is not primitive; reduce it first")
    return pair_scale(q1, q2) is not None


def two_adic(n: int) -> int:
    return (n & -n).bit_length() - 1


def odd_part(n: int) -> int:
    return n >> two_adic(n)


# --- integer and Hurwitz enumeration --------------------------------------------

def _squares_up_to(bound):
    r = math.isqrt(bound)
    return range(-r, r + 1)


def integer_quaternions(norm_bound: int, primitive_only=True, norm_min=1):
    """Integer quaternions with ``norm_min <= |q|^2 <= norm_bound``, one per sign pair.

    Sorted by norm, then by components.
    """
    out = []
    r = math.isqrt(norm_bound)
    for k in range(0, r + 1):
        k2 = k * k
        rl = math.isqrt(norm_bound - k2)
        for l in range(-rl, rl + 1):
            kl = k2 + l * l
            rm = math.isqrt(norm_bound - kl)
            for m in range(-rm, rm + 1):
                klm = kl + m * m
                rn = math.isqrt(norm_bound - klm)
                for n in range(-rn, rn + 1):
                    s = klm + n * n
                    if s < norm_min or s == 0:
                        continue
                    # canonical sign: first nonzero component positive
                    first = k or l or m or n
                    if first < 0:
                        continue
                    if primitive_only and math.gcd(k, l, m, n) != 1:
                        continue
                    out.append((s, (k, l, m, n)))
    out.sort()
    return [Quat(*c) for _, c in out]


def hurwitz_quaternions(norm_bound, primitive_only=True):
    """Hurwitz quaternions (all-integer or all-half-odd components), one per sign pair.

    Primitive here means: not an integer multiple ``n * h`` with ``n >= 2``
    and ``h`` Hurwitz.
    """
    out = []
    B = 4 * norm_bound
    r = math.isqrt(B)
    for a in range(0, r + 1):
        for b in range(-r, r + 1):
            for c in range(-r, r + 1):
                s3 = a * a + b * b + c * c
                if s3 > B:
                    continue
                for d in range(-r, r + 1):
                    s = s3 + d * d
                    if s == 0 or s > B or len({a % 2, b % 2, c % 2, d % 2}) != 1:
                        continue
                    first = a or b or c or d
                    if first < 0:
                        continue
                    if primitive_only and not _hurwitz_primitive((a, b, c, d)):
                        continue
                    out.append((s, (a, b, c, d)))
    out.sort()
    return [Quat(*(Fraction(x, 2) if x % 2 else x // 2 for x in c)) for _, c in out]


def _hurwitz_primitive(doubled):
    g = math.gcd(*doubled)
    for p in _prime_divisors(g):
        red = [x // p for x in doubled]
        if len({x % 2 for x in red}) == 1:
            return False
    return True


def _prime_divisors(n):
    out, p = [], 2
    while p * p <= n:
        if n % p == 0:
            out.append(p)
            while n % p == 0:
                n //= p
        p += 1
    if n > 1:
        out.append(n)
    return out


def hurwitz_units():
    """The 24 Hurwitz units (both signs)."""
    us = []
    for i in range(4):
        for s in (1, -1):
            c = [0, 0, 0, 0]
            c[i] = s
            us.append(Quat(*c))
    half = Fraction(1, 2)
    for sa in (1, -1):
        for sb in (1, -1):
            for sc in (1, -1):
                for sd in (1, -1):
                    us.append(Quat(sa * half, sb * half, sc * half, sd * half))
    return us


def enumerate_quaternions(ring, norm_bound, primitive_only=True, cap=None):
    """Canonical-sign quaternions of bounded norm.

    ``ring`` is 'integer', 'hurwitz', 'golden' or 'icosian'.  For the last
    two the bound applies to ``N(|q|^2)`` and one representative per class
    of golden unit multiples is returned (see :mod:`coincidence.icosian`).
    """
    if norm_bound < 1:
        raise DomainError("norm bound must be at least 1")
    if ring == "integer":
        return integer_quaternions(norm_bound, primitive_only)
    if ring == "hurwitz":
        return hurwitz_quaternions(norm_bound, primitive_only)
    if ring in ("golden", "icosian"):
        from .icosian import enumerate_golden_quaternions

        return [q for q, *_ in enumerate_golden_quaternions(ring, norm_bound, primitive_only, cap=cap)]
    raise DomainError(f"unknown quaternion ring {ring!r}")
