"""Lattices in Q^n: Hermite normal form, index, sum, intersection, duals.

Basis vectors are the *columns* of a basis matrix.  The canonical form of
a sublattice of Z^n is the lower-triangular column HNF with positive
diagonal, where every entry left of the diagonal in row i lies in
``[0, H[i][i])``.  A rational lattice is stored as ``(H, den)`` meaning
the lattice ``(1/den) * H Z^n`` with ``den`` minimal.
"""

from dataclasses import dataclass
from fractions import Fraction
import itertools
import math

from sympy import Matrix
from sympy.matrices.normalforms import invariant_factors

from .errors import CapExceeded, DomainError, NotSublatticeError
from .linalg import as_int_matrix, det, inverse, mat_mul, transpose


def _xgcd(a, b):
    """Return (g, x, y) with g = gcd(a, b) >= 0 and a*x + b*y = g."""
    x0, y0, x1, y1 = 1, 0, 0, 1
    while b:
        q, r = divmod(a, b)
        a, b = b, r
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    if a < 0:
        a, x0, y0 = -a, -x0, -y0
    return a, x0, y0


def hnf(M, modulus=None):
    """Lower-triangular column HNF of the lattice spanned by the columns of M.

    ``M`` is an n x k integer matrix of rank n.  When ``modulus`` is given
    it must be a positive integer D with ``D * Z^n`` contained in the
    lattice; entries are then kept reduced mod D, which keeps them small.
    """
    n = len(M)
    if n == 0:
        return []
    cols = [list(c) for c in zip(*M)]
    D = modulus
    if D is not None:
        if D <= 0:
            raise DomainError("modulus must be positive")
        cols = [[x % D for x in c] for c in cols]
    cols = [c for c in cols if any(c)]
    out = []
    for i in range(n):
        # fold row i of all working columns into one pivot column
        piv = None
        rest = []
        for c in cols:
            if c[i] == 0:
                rest.append(c)
                continue
            if piv is None:
                piv = c
                continue
            g, x, y = _xgcd(piv[i], c[i])
            a, b = piv[i] // g, c[i] // g
            new_piv = [x * p + y * q for p, q in zip(piv, c)]
            other = [b * p - a * q for p, q in zip(piv, c)]
            if D is not None:
                new_piv = [v % D for v in new_piv]
                other = [v % D for v in other]
            piv = new_piv
            if any(other):
                rest.append(other)
        if D is not None:
            # D * e_i is in the lattice and not yet used by any earlier row
            g0 = piv[i] if piv is not None else 0
            h, u, _ = _xgcd(g0, D)
            if piv is None:
                piv = [0] * n
            new_piv = [(u * v) % D for v in piv]
            new_piv[i] = h
            other = [((D // h) * v) % D for v in piv]
            other[i] = 0
            if any(other):
                rest.append(other)
            piv = new_piv
        else:
            if piv is None:
                raise DomainError("matrix does not have full row rank")
            if piv[i] < 0:
                piv = [-v for v in piv]
        out.append(piv)
        cols = rest
    H = [list(r) for r in zip(*out)]
    return _reduce_offdiag(H)


def hnf_plain(cols):
    """HNF from a list of integer column vectors (no modulus)."""
    n = len(cols[0])
    cols = [list(c) for c in cols if any(c)]
    out = []
    for i in range(n):
        piv = None
        rest = []
        for c in cols:
            if c[i] == 0:
                rest.append(c)
                continue
            if piv is None:
                piv = c
                continue
            g, x, y = _xgcd(piv[i], c[i])
            a, b = piv[i] // g, c[i] // g
            new_piv = [x * p + y * q for p, q in zip(piv, c)]
            other = [b * p - a * q for p, q in zip(piv, c)]
            piv = new_piv
            if any(other):
                rest.append(other)
        if piv is None:
            raise DomainError("matrix does not have full row rank")
        if piv[i] < 0:
            piv = [-v for v in piv]
        # keep later entries small by reducing against this pivot early
        out.append(piv)
        cols = [_reduce_col(c, out) for c in rest]
        cols = [c for c in cols if any(c)]
    return _reduce_offdiag([list(r) for r in zip(*out)])


def _reduce_col(c, pivots):
    # pivots[k] is zero above row k and positive at row k
    for k, p in enumerate(pivots):
        if c[k]:
            q = c[k] // p[k]
            if q:
                c = [x - q * y for x, y in zip(c, p)]
    return c


def _reduce_offdiag(H):
    n = len(H)
    for i in range(n):
        d = H[i][i]
        for j in range(i):
            q = H[i][j] // d
            if q:
                for r in range(i, n):
                    H[r][j] -= q * H[r][i]
    return H


def hnf_index(H) -> int:
    return math.prod(H[i][i] for i in range(len(H)))


def _hkey(H):
    return tuple(tuple(r) for r in H)


@dataclass(frozen=True)
class Lattice:
    """Full-rank lattice ``(1/den) * H Z^n`` in canonical form."""

    H: tuple
    den: int = 1

    @classmethod
    def from_basis(cls, B, modulus=None):
        """Lattice spanned by the columns of B (rational n x k matrix, rank n)."""
        den = math.lcm(*(Fraction(x).denominator for row in B for x in row)) if B else 1
        M = [[int(Fraction(x) * den) for x in row] for row in B]
        H = hnf(M, modulus) if modulus else hnf_plain([list(c) for c in zip(*M)])
        return cls._canonical(H, den)

    @classmethod
    def from_hnf(cls, H, den=1):
        return cls._canonical([list(r) for r in H], den)

    @classmethod
    def _canonical(cls, H, den):
        g = math.gcd(den, *(x for row in H for x in row))
        if g > 1:
            H = [[x // g for x in row] for row in H]
            den //= g
        return cls(_hkey(H), den)

    @classmethod
    def standard(cls, n):
        return cls(_hkey([[int(i == j) for j in range(n)] for i in range(n)]), 1)

    @property
    def dim(self):
        return len(self.H)

    @property
    def basis(self):
        return [[Fraction(x, self.den) for x in row] for row in self.H]

    def covolume(self) -> Fraction:
        return Fraction(hnf_index(self.H), self.den ** self.dim)

    def is_integral(self) -> bool:
        return self.den == 1

    def contains(self, v) -> bool:
        # forward substitution in the lower-triangular basis
        w = [Fraction(x) * self.den for x in v]
        for i in range(self.dim):
            if w[i].denominator != 1 or w[i].numerator % self.H[i][i]:
                return False
            c = w[i] / self.H[i][i]
            if c:
                w = [w[r] - c * self.H[r][i] for r in range(self.dim)]
        return True

    def coordinates(self, other: "Lattice"):
        """Matrix C with other.basis = self.basis * C."""
        return mat_mul(inverse(self.basis), other.basis)

    def scaled(self, c) -> "Lattice":
        c = Fraction(c)
        return Lattice.from_hnf([[x * c.numerator for x in row] for row in self.H], self.den * c.denominator)

    def transformed(self, A) -> "Lattice":
        """The image lattice A * self for a nonsingular rational matrix A."""
        return Lattice.from_basis(mat_mul(A, self.basis))

    def __str__(self):
        rows = ";".join(",".join(str(x) for x in row) for row in self.H)
        return rows if self.den == 1 else f"({rows})/{self.den}"


def _check_dims(a, b):
    if a.dim != b.dim:
        raise DomainError("lattices of different dimension")


def is_sublattice(outer: Lattice, inner: Lattice) -> bool:
    _check_dims(outer, inner)
    return all(outer.contains(col) for col in zip(*inner.basis))


def index(outer: Lattice, inner: Lattice) -> int:
    """[outer : inner]; raises NotSublatticeError unless inner is contained in outer."""
    _check_dims(outer, inner)
    C = outer.coordinates(inner)
    if any(x.denominator != 1 for row in C for x in row):
        raise NotSublatticeError("inner lattice has non-integral coordinates in the outer basis")
    return abs(int(det(C)))


def lattice_sum(a: Lattice, b: Lattice) -> Lattice:
    _check_dims(a, b)
    den = math.lcm(a.den, b.den)
    sa, sb = den // a.den, den // b.den
    M = [[sa * x for x in ra] + [sb * y for y in rb] for ra, rb in zip(a.H, b.H)]
    H = hnf(M, modulus=sa * hnf_index(a.H))
    return Lattice.from_hnf(H, den)


def dual(a: Lattice) -> Lattice:
    """Dual lattice with basis (B^-1)^t."""
    return Lattice.from_basis(transpose(inverse(a.basis)))


def intersect(a: Lattice, b: Lattice) -> Lattice:
    """Intersection computed as the dual of the sum of the duals."""
    return dual(lattice_sum(dual(a), dual(b)))


def commensurate(a: Lattice, b: Lattice) -> bool:
    """True when a and b share a sublattice of finite index in both.

    Both arguments are full-rank lattices with rational bases, so
    ``B_a^-1 B_b`` is rational and this reduces to checking that the
    intersection has finite index in each.
    """
    _check_dims(a, b)
    c = intersect(a, b)
    return index(a, c) > 0 and index(b, c) > 0


def snf_divisors(outer: Lattice, inner: Lattice):
    """Elementary divisors d1 | d2 | ... of the factor group outer/inner."""
    _check_dims(outer, inner)
    C = outer.coordinates(inner)
    if any(x.denominator != 1 for row in C for x in row):
        raise NotSublatticeError("inner lattice has non-integral coordinates in the outer basis")
    divs = invariant_factors(Matrix(as_int_matrix(C)))
    return tuple(sorted(abs(int(d)) for d in divs))


# --- exhaustive enumeration of sublattices of Z^n -----------------------------

def _ordered_factorizations(m, n):
    """All n-tuples of positive integers with product m, in lexicographic order."""
    if n == 1:
        yield (m,)
        return
    for d in range(1, m + 1):
        if m % d == 0:
            for rest in _ordered_factorizations(m // d, n - 1):
                yield (d,) + rest


def count_sublattices_hnf(n, m) -> int:
    """Number of HNFs of index m, summing prod d_i^(i) over diagonals (0-based i)."""
    return sum(math.prod(d ** i for i, d in enumerate(diag)) for diag in _ordered_factorizations(m, n))


def enumerate_sublattices(n, m, cap=None):
    """Yield every sublattice of Z^n of index m as a canonical HNF tuple.

    Order is lexicographic in the diagonal, then in the entries left of the
    diagonal (row by row).  Raises CapExceeded before producing anything if
    the total count exceeds ``cap``.
    """
    if n < 1 or m < 1:
        raise DomainError("rank and index must be positive")
    if cap is not None:
        total = count_sublattices_hnf(n, m)
        if total > cap:
            raise CapExceeded(f"{total} sublattices of index {m} in Z^{n} exceed cap {cap}",
                              resume_token=None)
    for diag in _ordered_factorizations(m, n):
        slots = [range(diag[i]) for i in range(n) for _ in range(i)]
        for vals in itertools.product(*slots):
            H = [[0] * n for _ in range(n)]
            k = 0
            for i in range(n):
                for j in range(i):
                    H[i][j] = vals[k]
                    k += 1
                H[i][i] = diag[i]
            yield _hkey(H)
