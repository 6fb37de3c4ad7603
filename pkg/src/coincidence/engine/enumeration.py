"""Exhaustive enumeration of coincidence rotations up to a Sigma bound.

Every enumerator is complete by a divisibility bound:

* Z^d, D4, D4*: the denominator of R divides Sigma(R), and the primitive
  quaternion parameters satisfy |q|^2 <= 4 * odd(|q|^2) because a
  primitive sum of four squares is never divisible by 8.
* icosahedral modules: Sigma = N(|q|^2) for the primitive icosian q.
* the cubic golden module: Sigma_B divides 16 * Sigma_C because
  2 Z[tau]^3 has index 16 in M_B, so N(|q|^2) <= 16 * Sigma_C.
* tenfold module: every rotation is eps * alpha / conj(alpha) with
  alpha coprime to its conjugate and N(alpha) = Sigma.

Results are sorted by (Sigma, text of the handle) so output is stable.
"""

from dataclasses import dataclass
import math
from typing import Optional

import numpy as np
from sympy import factorint

from ..errors import CapExceeded, DomainError, UnsupportedError
from ..icosian import ICOSIAN_HNF2, coords_to_quat, enumerate_golden_arrays
from ..quaternions import Quat, integer_quaternions, mat4, odd_part
from ..rings.cyclotomic import ROOTS_OF_UNITY, CycloInt
from ..rings.factor import split_prime
from ..rings.gaussian import GaussInt
from .handles import IsometryHandle
from .sigma import _quotient_sigma, _spec
from .structures import CUBIC3, ICOSAHEDRAL


@dataclass(frozen=True)
class RotationRecord:
    sigma: int
    handle: IsometryHandle

    def key(self):
        return (self.sigma, str(self.handle))


def parse_resume_token(token: str, structure: str) -> int:
    """Return the Sigma value to restart from; tokens look like 'Z3@17'."""
    try:
        name, value = token.rsplit("@", 1)
        start = int(value)
    except ValueError:
        raise DomainError(f"malformed resume token {token!r}") from None
    if name.upper() != structure.upper():
        raise DomainError(f"resume token is for {name}, not {structure}")
    if start < 1:
        raise DomainError("resume token must name a positive Sigma")
    return start


def _z2(lo, hi):
    out = []
    for d in range(1, hi + 1):
        for x in range(-d, d + 1):
            y2 = d * d - x * x
            y = math.isqrt(y2)
            if y * y != y2:
                continue
            for yy in {y, -y}:
                if math.gcd(math.gcd(x, yy), d) != 1:
                    continue
                h = IsometryHandle.from_quotient(GaussInt(x, yy), GaussInt(d, 0))
                s = _quotient_sigma(GaussInt(x, yy), GaussInt(d, 0))
                if lo <= s <= hi:
                    out.append(RotationRecord(s, h))
    return out


def _cubic(lo, hi):
    out = []
    for q in integer_quaternions(4 * hi, primitive_only=True):
        s = odd_part(q.norm2())
        if lo <= s <= hi:
            out.append(RotationRecord(s, IsometryHandle.from_quaternion(q)))
    return out


def _squarefree_part(n):
    return math.prod(p for p, e in factorint(n).items() if e % 2)


def _quartic(name, lo, hi):
    qs = integer_quaternions(4 * hi, primitive_only=True)
    by_class = {}
    for q in qs:
        n = q.norm2()
        by_class.setdefault(_squarefree_part(n), []).append((odd_part(n), n, q))
    out = []
    for members in by_class.values():
        for o1, n1, q1 in members:
            for o2, n2, q2 in members:
                sf = math.lcm(o1, o2)
                if sf > hi:
                    continue
                if name == "Z4":
                    scale = math.isqrt(n1 * n2)
                    g = scale
                    for row in mat4(q1, q2):
                        for x in row:
                            g = math.gcd(g, x)
                    sigma = math.lcm(sf, scale // g)
                else:
                    sigma = sf
                if not lo <= sigma <= hi:
                    continue
                for s in (1, -1):
                    out.append(RotationRecord(sigma, IsometryHandle.from_pair(q1, Quat(*(s * c for c in q2.comps)))))
    return out


def _cyclo_alphas(m):
    """Representatives alpha with N(alpha) = m and alpha coprime to conj(alpha)."""
    choices = [CycloInt(1)]
    for p, r in factorint(m).items():
        if p % 5 != 1:
            return []
        pi = split_prime(p, "cyclo").factors[0]
        pairs = [(pi, pi.conj()), (pi.galois(2), pi.galois(2).conj())]
        local = []
        for a in range(r + 1):
            b = r - a
            for s1 in ((0, 1) if a else (0,)):
                for s2 in ((0, 1) if b else (0,)):
                    local.append(pairs[0][s1] ** a * pairs[1][s2] ** b)
        choices = [x * y for x in choices for y in local]
    return choices


def _tenfold(lo, hi):
    out = []
    for m in range(lo, hi + 1):
        for alpha in _cyclo_alphas(m):
            for eps in ROOTS_OF_UNITY:
                h = IsometryHandle.from_quotient(eps * alpha, alpha.conj())
                out.append(RotationRecord(_quotient_sigma(alpha, alpha.conj()), h))
    return out


def _gmul(x, y):
    # (a + b tau)(c + d tau) = (ac + bd) + (ad + bc + bd) tau
    a, b = x
    c, d = y
    return a * c + b * d, a * d + b * c + b * d


def _gadd(*xs):
    return sum(x[0] for x in xs), sum(x[1] for x in xs)


def _gscale(k, x):
    return k * x[0], k * x[1]


def cubic_module_sigma_array(V):
    """Sigma on Z[tau]^3 of R(q) for rows of icosian coordinates (vectorised).

    With p = 2q in Z[tau]^4, R = E / s where s = |p|^2 and E is the
    integral Cayley numerator.  The denominator ideal of R is
    s / gcd(s, E_ij), so Sigma = |N(s)| / N(gcd).  The norm of the gcd
    ideal is its index in Z[tau] = Z^2, i.e. the gcd of the 2x2 minors
    of the vectors x and tau*x over all generators x.
    """
    H = np.array(ICOSIAN_HNF2, dtype=np.int64)
    X2 = V @ H.T
    k, l, m, n = ((X2[:, 2 * i], X2[:, 2 * i + 1]) for i in range(4))
    sq = {name: _gmul(c, c) for name, c in zip("klmn", (k, l, m, n))}
    neg = lambda x: _gscale(-1, x)
    gens = [
        _gadd(sq["k"], sq["l"], sq["m"], sq["n"]),
        _gadd(sq["k"], sq["l"], neg(sq["m"]), neg(sq["n"])),
        _gadd(sq["k"], neg(sq["l"]), sq["m"], neg(sq["n"])),
        _gadd(sq["k"], neg(sq["l"]), neg(sq["m"]), sq["n"]),
    ]
    for x, y, z, w in ((l, m, k, n), (k, m, l, n), (k, n, l, m), (m, n, k, l)):
        gens.append(_gscale(2, _gadd(_gmul(x, y), _gmul(z, w))))
        gens.append(_gscale(2, _gadd(_gmul(x, y), neg(_gmul(z, w)))))
    vecs = []
    for a, b in gens:
        vecs.append((a, b))
        vecs.append((b, a + b))          # tau * (a + b tau)
    g = np.zeros(len(V), dtype=np.int64)
    for i in range(len(vecs)):
        for j in range(i + 1, len(vecs)):
            g = np.gcd(g, vecs[i][0] * vecs[j][1] - vecs[i][1] * vecs[j][0])
    a, b = gens[0]
    return np.abs(a * a + a * b - b * b) // g


def _golden(name, lo, hi):
    bound = hi if name in ICOSAHEDRAL else 16 * hi
    V, N, _ = enumerate_golden_arrays("icosian", bound, primitive_only=True)
    S = N if name in ICOSAHEDRAL else cubic_module_sigma_array(V)
    keep = (S >= lo) & (S <= hi)
    return [RotationRecord(s, IsometryHandle.from_quaternion(coords_to_quat(row)))
            for row, s in zip(V[keep].tolist(), S[keep].tolist())]


def enumerate_rotations(spec, sigma_max: int, cap: Optional[int] = None, start: int = 1):
    """All coincidence rotations with start <= Sigma <= sigma_max.

    When more than ``cap`` rotations would be returned, raises CapExceeded
    carrying the complete Sigma shells that fit and a resume token
    ``NAME@next_sigma``.
    """
    spec = _spec(spec)
    if sigma_max < 1 or start < 1:
        raise DomainError("Sigma bounds must be positive")
    name = spec.name
    if start > sigma_max:
        return []
    if name == "Z2":
        recs = _z2(start, sigma_max)
    elif name in CUBIC3:
        recs = _cubic(start, sigma_max)
    elif name in ("Z4", "D4", "D4STAR"):
        recs = _quartic(name, start, sigma_max)
    elif name == "M10":
        recs = _tenfold(start, sigma_max)
    elif name in ICOSAHEDRAL or name == "MC":
        recs = _golden(name, start, sigma_max)
    else:
        raise UnsupportedError(f"rotation enumeration is not available for {name}")
    recs.sort(key=RotationRecord.key)
    if cap is not None and len(recs) > cap:
        # keep whole Sigma shells only
        cut = recs[cap].sigma
        partial = [r for r in recs if r.sigma < cut]
        raise CapExceeded(f"more than {cap} rotations up to Sigma {sigma_max}; "
                          f"stopped before Sigma {cut}",
                          partial=partial, resume_token=f"{name}@{cut}")
    return recs


def rotation_counts(spec, sigma_max: int, cap: Optional[int] = None):
    """Dict Sigma -> number of coincidence rotations (zeros included)."""
    counts = {m: 0 for m in range(1, sigma_max + 1)}
    for r in enumerate_rotations(spec, sigma_max, cap=cap):
        counts[r.sigma] += 1
    return counts
