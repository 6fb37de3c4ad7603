"""The icosian ring and enumeration of golden quaternions.

Golden-rational quaternions are identified with Q^8 through the
coordinates ``(a0, b0, a1, b1, a2, b2, a3, b3)`` where component ``i`` is
``a_i + b_i*tau``.  The icosian ring I is the Z-span of the 120 unit
icosians; its basis below is the lower-triangular HNF (in doubled
coordinates) of those 120 vectors.  Tests regenerate it from the units.
"""

from fractions import Fraction
from functools import lru_cache
from itertools import permutations, product
import math

import numpy as np

from .errors import CapExceeded, DomainError
from .lattice import hnf_plain
from .quaternions import Quat
from .rings.golden import GoldenInt, QTau

# columns are basis vectors, entries are doubled Q^8 coordinates
ICOSIAN_HNF2 = (
    (1, 0, 0, 0, 0, 0, 0, 0),
    (0, 1, 0, 0, 0, 0, 0, 0),
    (0, 0, 1, 0, 0, 0, 0, 0),
    (0, 0, 0, 1, 0, 0, 0, 0),
    (1, 1, 0, 1, 2, 0, 0, 0),
    (1, 0, 1, 1, 0, 2, 0, 0),
    (0, 1, 1, 1, 0, 0, 2, 0),
    (1, 1, 1, 0, 0, 0, 0, 2),
)

# Z[tau]^4 in the same coordinates, doubled
GOLDEN_HNF2 = tuple(tuple(2 if i == j else 0 for j in range(8)) for i in range(8))


def quat_to_q8(q: Quat):
    out = []
    for c in q.comps:
        c = QTau(c) if not isinstance(c, QTau) else c
        out += [c.a, c.b]
    return out


def q8_to_quat(v) -> Quat:
    comps = []
    for i in range(4):
        a, b = Fraction(v[2 * i]), Fraction(v[2 * i + 1])
        if a.denominator == 1 and b.denominator == 1:
            comps.append(GoldenInt(int(a), int(b)))
        else:
            comps.append(QTau(a, b))
    return Quat(*comps)


def _is_even(p):
    inv = sum(1 for i in range(4) for j in range(i + 1, 4) if p[i] > p[j])
    return inv % 2 == 0


@lru_cache(maxsize=None)
def unit_icosians():
    """The 120 unit icosians as a sorted tuple of Quats."""
    h = Fraction(1, 2)
    tau = QTau(0, 1)
    gens = [
        (QTau(1), QTau(0), QTau(0), QTau(0), False),
        (QTau(h), QTau(h), QTau(h), QTau(h), False),
        (tau * h, QTau(h), (QTau(1) - tau) * h, QTau(0), True),   # (1 - tau)/2 = -1/(2 tau)
    ]
    seen = {}
    for *g, even_only in gens:
        for p in permutations(range(4)):
            if even_only and not _is_even(p):
                continue
            for s in product((1, -1), repeat=4):
                q = Quat(*(g[p[i]] * s[i] for i in range(4)))
                key = tuple(quat_to_q8(q))
                seen[key] = q8_to_quat(key)
    return tuple(seen[k] for k in sorted(seen))


def basis_from_units():
    """Recompute the doubled HNF basis from the unit icosians."""
    cols = [[int(2 * x) for x in quat_to_q8(u)] for u in unit_icosians()]
    return tuple(tuple(r) for r in hnf_plain(cols))


def icosian_basis():
    """The eight basis icosians (columns of the HNF, halved)."""
    return [q8_to_quat([Fraction(ICOSIAN_HNF2[r][j], 2) for r in range(8)]) for j in range(8)]


def _solve_lower(H2, v):
    """Solve (H2/2) c = v for lower-triangular H2; returns Fractions."""
    w = [2 * Fraction(x) for x in v]
    c = []
    for i in range(8):
        s = w[i] - sum(H2[i][j] * c[j] for j in range(i))
        c.append(s / H2[i][i])
    return c


def icosian_coordinates(q: Quat):
    """Coordinates of q in the icosian basis (Fractions; integral iff q in I)."""
    return _solve_lower(ICOSIAN_HNF2, quat_to_q8(q))


def icosian_membership(q: Quat):
    """Return ``(is_member, certificate)``; the certificate is the integer coordinate vector."""
    c = icosian_coordinates(q)
    if all(x.denominator == 1 for x in c):
        return True, tuple(int(x) for x in c)
    return False, None


def from_icosian_coordinates(c) -> Quat:
    v = [Fraction(sum(ICOSIAN_HNF2[r][j] * c[j] for j in range(8)), 2) for r in range(8)]
    return q8_to_quat(v)


def _basis_matrix(kind):
    return ICOSIAN_HNF2 if kind == "icosian" else GOLDEN_HNF2


@lru_cache(maxsize=None)
def tau_matrix(kind="icosian"):
    """Integer 8x8 matrix of multiplication by tau in the basis of ``kind``."""
    H2 = _basis_matrix(kind)
    T = [[0] * 8 for _ in range(8)]
    for j in range(8):
        v = [Fraction(H2[r][j], 2) for r in range(8)]
        # tau * (a + b tau) = b + (a + b) tau
        w = []
        for i in range(4):
            a, b = v[2 * i], v[2 * i + 1]
            w += [b, a + b]
        c = _solve_lower(H2, w)
        for i in range(8):
            if c[i].denominator != 1:
                raise AssertionError("basis is not closed under tau")
            T[i][j] = int(c[i])
    return tuple(tuple(r) for r in T)


def module_content(c, kind="icosian") -> int:
    """|N(a)| for the largest golden integer a with ``q in a * ring``.

    Computed as the gcd of the 2x2 minors of the 8x2 matrix ``[c, T c]``,
    where ``T`` is multiplication by tau.
    """
    T = tau_matrix(kind)
    tc = [sum(T[i][j] * c[j] for j in range(8)) for i in range(8)]
    g = 0
    for i in range(8):
        for j in range(i + 1, 8):
            g = math.gcd(g, c[i] * tc[j] - c[j] * tc[i])
    return g


# --- Fincke-Pohst enumeration ----------------------------------------------------

def _fp_form(G):
    """Coefficients q with x^T G x = sum_i q_ii (x_i + sum_{j>i} q_ij x_j)^2."""
    n = len(G)
    Q = [[float(G[i][j]) for j in range(n)] for i in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            Q[j][i] = Q[i][j]
            Q[i][j] = Q[i][j] / Q[i][i]
        for k in range(i + 1, n):
            for l in range(k, n):
                Q[k][l] -= Q[k][i] * Q[i][l]
    return Q


def short_vectors(G, bound):
    """All integer x (both signs, excluding 0) with ``x^T G x <= bound``.

    G is a positive definite symmetric matrix; the last coordinate loop is
    vectorized with numpy.  Returned as an int64 array of shape (N, n).
    """
    n = len(G)
    Q = _fp_form(G)
    eps = 1e-9 * max(1.0, bound)
    chunks = []
    x = [0] * n

    def rec(i, remaining):
        center = -sum(Q[i][j] * x[j] for j in range(i + 1, n))
        r = math.sqrt(max(remaining, 0.0) / Q[i][i]) + 1e-9
        lo, hi = math.ceil(center - r), math.floor(center + r)
        if i == 0:
            if lo > hi:
                return
            xs = np.arange(lo, hi + 1, dtype=np.int64)
            block = np.empty((len(xs), n), dtype=np.int64)
            block[:, 1:] = x[1:]
            block[:, 0] = xs
            chunks.append(block)
            return
        for v in range(lo, hi + 1):
            x[i] = v
            t = v - center
            rec(i - 1, remaining - Q[i][i] * t * t)
        x[i] = 0

    rec(n - 1, bound + eps)
    if not chunks:
        return np.zeros((0, n), dtype=np.int64)
    out = np.concatenate(chunks)
    return out[np.any(out != 0, axis=1)]


def _trace_gram(H2):
    """Gram matrix (Fractions) of Tr(|q|^2) in the basis given by doubled columns H2."""
    # per component, a^2 + b^2 tau-terms give trace 2a^2 + 2ab + 3b^2
    blk = [[2, 1], [1, 3]]
    n = 8
    G = [[Fraction(0)] * n for _ in range(n)]
    for j in range(n):
        for k in range(n):
            s = 0
            for c in range(4):
                for u in range(2):
                    for w in range(2):
                        s += H2[2 * c + u][j] * blk[u][w] * H2[2 * c + w][k]
            G[j][k] = Fraction(s, 4)
    return G


def _sign_golden(P, Q):
    """Vectorized exact sign of P + Q*tau for int64 arrays."""
    s, t = 2 * P + Q, Q
    same = np.sign(s) == np.sign(t)
    out = np.where(same, np.sign(s), 0)
    mixed = ~same
    if np.any(mixed):
        lhs = s * s
        rhs = 5 * t * t
        bigger_s = lhs > rhs
        val = np.where(lhs == rhs, 0, np.where(bigger_s, np.sign(s), np.sign(t)))
        out = np.where(mixed, np.where(s == 0, np.sign(t), np.where(t == 0, np.sign(s), val)), out)
    return out


def _norm_data(X2):
    """From doubled Q^8 coordinates return (X, Y) with |q|^2 = X + Y tau (int arrays)."""
    A = X2[:, 0::2]
    B = X2[:, 1::2]
    num_x = np.sum(A * A + B * B, axis=1)
    num_y = np.sum(2 * A * B + B * B, axis=1)
    if np.any(num_x % 4) or np.any(num_y % 4):
        raise AssertionError("|q|^2 left Z[tau]")
    return num_x // 4, num_y // 4


def enumerate_golden_arrays(kind, norm_bound, primitive_only=True, cap=None):
    """Canonical representatives of golden quaternions with ``N(|q|^2) <= norm_bound``.

    ``kind`` is 'icosian' (q in I) or 'golden' (components in Z[tau]).  One
    representative is kept from each class ``{+-tau^k q}``: the one whose
    ``x = |q|^2`` satisfies ``tau^-2 <= x / x' < tau^2`` and whose first
    nonzero component is positive.  On that domain both embeddings of x are
    at most ``tau * sqrt(N(x))``, so the trace form is bounded by
    ``sqrt(5 * norm_bound)``; enumeration is Fincke-Pohst on that form.

    Returns int64 arrays ``(coords, norms, contents)`` sorted by norm and
    then coordinates; ``contents`` holds :func:`module_content` per row.
    """
    if kind not in ("icosian", "golden"):
        raise DomainError(f"unknown golden quaternion ring {kind!r}")
    H2 = _basis_matrix(kind)
    G = _trace_gram(H2)
    bound = math.sqrt(5 * norm_bound)
    V = short_vectors(G, bound)
    if cap is not None and len(V) > cap:
        raise CapExceeded(f"{len(V)} candidate vectors exceed cap {cap}")
    Hm = np.array(H2, dtype=np.int64)
    X2 = V @ Hm.T
    X, Y = _norm_data(X2)
    N = X * X + X * Y - Y * Y
    keep = (N >= 1) & (N <= norm_bound)
    # fundamental domain for tau^2 scaling: x - tau^-2 x' >= 0 and tau^2 x' - x > 0,
    # with x' represented by the conjugate element (X + Y) - Y tau
    cX, cY = X + Y, -Y
    # tau^-2 = 2 - tau ; (2 - tau)(cX + cY tau) = 2cX - cY + (cY - cX) tau
    z1P = X - (2 * cX - cY)
    z1Q = Y - (cY - cX)
    # tau^2 = 1 + tau ; (1 + tau)(cX + cY tau) = cX + cY + (cX + 2 cY) tau
    z2P = (cX + cY) - X
    z2Q = (cX + 2 * cY) - Y
    keep &= _sign_golden(z1P, z1Q) >= 0
    keep &= _sign_golden(z2P, z2Q) > 0
    # canonical sign: first nonzero component positive
    sgn = _sign_golden(X2[:, 0::2], X2[:, 1::2])
    first = np.zeros(len(V), dtype=np.int64)
    decided = np.zeros(len(V), dtype=bool)
    for c in range(4):
        s = sgn[:, c]
        first = np.where(~decided & (s != 0), s, first)
        decided |= s != 0
    keep &= first > 0
    V, N = V[keep], N[keep]
    Gc = _module_content_array(V, kind)
    if primitive_only:
        V, N, Gc = V[Gc == 1], N[Gc == 1], Gc[Gc == 1]
    order = np.lexsort(tuple(V[:, j] for j in range(7, -1, -1)) + (N,))
    return V[order], N[order], Gc[order]


def coords_to_quat(row, kind="icosian") -> Quat:
    H2 = _basis_matrix(kind)
    return q8_to_quat([Fraction(sum(H2[r][j] * row[j] for j in range(8)), 2) for r in range(8)])


def enumerate_golden_quaternions(kind, norm_bound, primitive_only=True, cap=None):
    """As :func:`enumerate_golden_arrays`, as a list of ``(q, coords, N(|q|^2), content)``."""
    V, N, Gc = enumerate_golden_arrays(kind, norm_bound, primitive_only, cap)
    return [(coords_to_quat(row, kind), tuple(row), n, g)
            for row, n, g in zip(V.tolist(), N.tolist(), Gc.tolist())]


def _module_content_array(V, kind):
    T = np.array(tau_matrix(kind), dtype=np.int64)
    TV = V @ T.T
    g = np.zeros(len(V), dtype=np.int64)
    for i in range(8):
        for j in range(i + 1, 8):
            g = np.gcd(g, V[:, i] * TV[:, j] - V[:, j] * TV[:, i])
    return g
