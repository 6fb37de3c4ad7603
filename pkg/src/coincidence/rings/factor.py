"""Prime splitting and element factorization in Z[i], Z[tau] and Z[xi]."""

from dataclasses import dataclass
from functools import lru_cache
import itertools
import math

import numpy as np
from sympy import factorint, isprime

from ..errors import DomainError
from .cyclotomic import XI, CycloInt, cyclo_normalize
from .gaussian import GaussInt, gauss_normalize
from .golden import GoldenInt, golden_normalize

RINGS = ("gauss", "golden", "cyclo")

_RING_ALIASES = {
    "gauss": "gauss", "z[i]": "gauss", "gaussian": "gauss",
    "golden": "golden", "z[tau]": "golden", "z[t]": "golden",
    "cyclo": "cyclo", "z[xi]": "cyclo", "z[xi5]": "cyclo", "z[ξ₅]": "cyclo",
    "z[τ]": "golden", "cyclotomic": "cyclo",
}


def ring_tag(ring) -> str:
    try:
        return _RING_ALIASES[str(ring).lower()]
    except KeyError:
        raise DomainError(f"unknown ring {ring!r}") from None


def ring_of(x) -> str:
    if isinstance(x, GaussInt):
        return "gauss"
    if isinstance(x, GoldenInt):
        return "golden"
    if isinstance(x, CycloInt):
        return "cyclo"
    raise DomainError(f"not a ring element: {x!r}")


def unit_normalize(x):
    """Canonical associate of a nonzero ring element, plus the unit factor.

    Z[i]: first quadrant (re > 0, im >= 0).  Z[tau]: the totally positive
    associate of least trace.  Z[xi]: see :func:`cyclo_normalize`.
    """
    tag = ring_of(x)
    if tag == "gauss":
        return gauss_normalize(x)
    if tag == "golden":
        return golden_normalize(x)
    return cyclo_normalize(x)


def abs_norm(x) -> int:
    return abs(x.norm())


@dataclass(frozen=True)
class PrimeSplit:
    p: int
    ring: str
    kind: str          # "inert" | "split" | "ramified"
    factors: tuple     # canonical prime elements above p (without multiplicity)
    exponents: tuple   # multiplicity of each factor in p


def _search_gauss(p):
    for a in range(1, math.isqrt(p) + 1):
        b2 = p - a * a
        b = math.isqrt(b2)
        if b * b == b2:
            return GaussInt(a, b)
    raise AssertionError(f"{p} is not a sum of two squares")


def _search_golden(target, bound=None):
    bound = bound or math.isqrt(target) + 2
    while True:
        for a in range(-bound, bound + 1):
            for b in range(-bound, bound + 1):
                if abs(a * a + a * b - b * b) == target:
                    return GoldenInt(a, b)
        bound *= 2


def _cyclo_box_search(target, bound):
    """All coefficient vectors in ``[-bound, bound]^4`` with absolute norm ``target``."""
    r = np.arange(-bound, bound + 1)
    c0, c1, c2, c3 = (g.ravel() for g in np.meshgrid(r, r, r, r, indexing="ij"))
    z1 = c0 + c1 * XI + c2 * XI ** 2 + c3 * XI ** 3
    xi2 = XI ** 2
    z2 = c0 + c1 * xi2 + c2 * xi2 ** 2 + c3 * xi2 ** 3
    approx = (np.abs(z1) ** 2) * (np.abs(z2) ** 2)
    hits = np.nonzero(np.abs(approx - target) < 0.5)[0]
    out = []
    for h in hits:
        x = CycloInt(int(c0[h]), int(c1[h]), int(c2[h]), int(c3[h]))
        if x.norm() == target:
            out.append(x)
    return out


def _search_cyclo(target):
    bound = math.ceil(target ** 0.25) + 2
    while True:
        hits = _cyclo_box_search(target, bound)
        if hits:
            return hits[0]
        bound *= 2


def _check_product(p, factors, exponents):
    prod = None
    for f, e in zip(factors, exponents):
        term = f ** e
        prod = term if prod is None else prod * term
    u = type(prod).coerce(p).exact_div(prod)
    if u is None or not u.is_unit():
        raise AssertionError(f"factors of {p} do not multiply back to it")


@lru_cache(maxsize=None)
def split_prime(p: int, ring) -> PrimeSplit:
    """How the rational prime ``p`` decomposes in the given ring.

    Z[i]: p = 1 (4) split, p = 3 (4) inert, p = 2 ramified.
    Z[tau]: p = +-1 (5) split, p = +-2 (5) inert, p = 5 ramified.
    Z[xi]: p = 1 (5) splits into four primes of norm p, p = 4 (5) into two
    primes of norm p^2, p = 2, 3 (5) inert, p = 5 ramified as (1 - xi)^4.
    """
    tag = ring_tag(ring)
    if not isinstance(p, int) or p < 2 or not isprime(p):
        raise DomainError(f"{p} is not a prime")
    if tag == "gauss":
        if p == 2:
            f = (GaussInt(1, 1),)
            res = PrimeSplit(p, tag, "ramified", f, (2,))
        elif p % 4 == 3:
            res = PrimeSplit(p, tag, "inert", (GaussInt(p, 0),), (1,))
        else:
            w = _search_gauss(p)
            f = tuple(sorted({gauss_normalize(w)[0], gauss_normalize(w.conj())[0]}))
            res = PrimeSplit(p, tag, "split", f, (1, 1))
    elif tag == "golden":
        if p == 5:
            res = PrimeSplit(p, tag, "ramified", (golden_normalize(GoldenInt(-1, 2))[0],), (2,))
        elif p % 5 in (2, 3):
            res = PrimeSplit(p, tag, "inert", (GoldenInt(p),), (1,))
        else:
            w = _search_golden(p)
            f = tuple(sorted({golden_normalize(w)[0], golden_normalize(w.conj())[0]}))
            res = PrimeSplit(p, tag, "split", f, (1, 1))
    else:
        if p == 5:
            f = (cyclo_normalize(CycloInt(1, -1))[0],)
            res = PrimeSplit(p, tag, "ramified", f, (4,))
        elif p % 5 in (2, 3):
            res = PrimeSplit(p, tag, "inert", (CycloInt(p),), (1,))
        elif p % 5 == 1:
            w = _search_cyclo(p)
            f = tuple(sorted({cyclo_normalize(w.galois(k))[0] for k in range(1, 5)}))
            res = PrimeSplit(p, tag, "split", f, (1,) * len(f))
        else:
            w = _search_cyclo(p * p)
            f = tuple(sorted({cyclo_normalize(w.galois(k))[0] for k in (1, 2)}))
            res = PrimeSplit(p, tag, "split", f, (1,) * len(f))
    _check_product(p, res.factors, res.exponents)
    return res


def factor_element(x):
    """Factor a nonzero ring element.

    Returns ``(unit, [(prime, exponent), ...])`` with canonical primes
    sorted, so that ``unit * prod(prime**exponent) == x``.
    """
    tag = ring_of(x)
    if not x:
        raise DomainError("cannot factor zero")
    n = abs_norm(x)
    rest = x
    out = []
    for p in sorted(factorint(n)) if n > 1 else ():
        for pi in split_prime(p, tag).factors:
            e = 0
            while True:
                q = rest.exact_div(pi)
                if q is None:
                    break
                rest, e = q, e + 1
            if e:
                out.append((pi, e))
    if not rest.is_unit():
        raise AssertionError(f"factorization of {x} left non-unit {rest}")
    return rest, out


def multiply_out(unit, factors):
    prod = unit
    for pi, e in factors:
        prod = prod * pi ** e
    return prod


def prime_valuations(x) -> dict:
    """Map canonical prime -> exponent for a nonzero element."""
    return dict(factor_element(x)[1])


def golden_sqrt(x: GoldenInt):
    """A square root of ``x`` in Z[tau], or None when x is not a square."""
    if not x:
        return GoldenInt(0)
    from .golden import unit_exponent

    unit, fac = factor_element(x)
    if any(e % 2 for _, e in fac):
        return None
    sign, k = unit_exponent(unit)
    if sign < 0 or k % 2:
        return None
    root = GoldenInt(0, 1) ** (k // 2) if k >= 0 else GoldenInt(-1, 1) ** (-k // 2)
    for pi, e in fac:
        root = root * pi ** (e // 2)
    return root


def iter_box(bound, dim):
    """Coefficient vectors in ``[-bound, bound]^dim`` (small helper for tests and searches)."""
    return itertools.product(range(-bound, bound + 1), repeat=dim)
