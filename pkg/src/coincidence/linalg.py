"""Small dense matrices over exact fields (Fraction or QTau entries).

Matrices are lists of row lists.  Nothing here is tuned for size; the
dimensions in this package never exceed 16.
"""

from fractions import Fraction
import math

from .errors import DomainError
from .rings.golden import GoldenInt, QTau
from .rings.text import format_scalar, parse_scalar


def identity(n, one=1):
    return [[one if i == j else 0 * one for j in range(n)] for i in range(n)]


def zeros(r, c):
    return [[0] * c for _ in range(r)]


def transpose(A):
    return [list(col) for col in zip(*A)]


def mat_mul(A, B):
    Bt = list(zip(*B))
    out = []
    for row in A:
        out.append([sum((a * b for a, b in zip(row, col) if a and b), 0 * row[0]) for col in Bt])
    return out


def mat_vec(A, v):
    return [sum((a * x for a, x in zip(row, v) if a and x), 0 * row[0]) for row in A]


def scale(A, c):
    return [[c * x for x in row] for row in A]


def mat_eq(A, B):
    return len(A) == len(B) and all(list(r) == list(s) for r, s in zip(A, B))


def to_fractions(A):
    return [[x if isinstance(x, (Fraction, QTau)) else Fraction(x) for x in row] for row in A]


def _lift(x):
    if isinstance(x, GoldenInt):
        return QTau(x)
    if isinstance(x, int):
        return Fraction(x)
    return x


def det(A):
    """Determinant by fraction-exact Gaussian elimination."""
    n = len(A)
    M = [[_lift(x) for x in row] for row in A]
    d = Fraction(1) if not n else M[0][0] * 0 + 1
    for c in range(n):
        p = next((r for r in range(c, n) if M[r][c]), None)
        if p is None:
            return d * 0
        if p != c:
            M[c], M[p] = M[p], M[c]
            d = -d
        piv = M[c][c]
        d = d * piv
        for r in range(c + 1, n):
            if M[r][c]:
                f = M[r][c] / piv
                M[r] = [x - f * y for x, y in zip(M[r], M[c])]
    return d


def det_int(A) -> int:
    """Determinant of an integer matrix (fraction-free Bareiss elimination)."""
    M = [list(row) for row in A]
    n = len(M)
    sign, prev = 1, 1
    for c in range(n - 1):
        p = next((r for r in range(c, n) if M[r][c]), None)
        if p is None:
            return 0
        if p != c:
            M[c], M[p] = M[p], M[c]
            sign = -sign
        for r in range(c + 1, n):
            for k in range(c + 1, n):
                M[r][k] = (M[r][k] * M[c][c] - M[r][c] * M[c][k]) // prev
        prev = M[c][c]
    return sign * M[n - 1][n - 1] if n else 1


def inverse(A):
    n = len(A)
    M = [[_lift(x) for x in row] + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(A)]
    for c in range(n):
        p = next((r for r in range(c, n) if M[r][c]), None)
        if p is None:
            raise DomainError("singular matrix")
        M[c], M[p] = M[p], M[c]
        piv = M[c][c]
        M[c] = [x / piv for x in M[c]]
        for r in range(n):
            if r != c and M[r][c]:
                f = M[r][c]
                M[r] = [x - f * y for x, y in zip(M[r], M[c])]
    return [row[n:] for row in M]


def is_integral(A) -> bool:
    for row in A:
        for x in row:
            if isinstance(x, QTau):
                if not x.is_integral() or x.b:
                    return False
            elif Fraction(x).denominator != 1:
                return False
    return True


def as_int_matrix(A):
    if not is_integral(A):
        raise DomainError("matrix has non-integral entries")
    return [[int(x.a) if isinstance(x, QTau) else int(x) for x in row] for row in A]


def common_denominator(A) -> int:
    """Least positive integer k with k*A integral (rational entries only)."""
    return math.lcm(*(Fraction(x).denominator for row in A for x in row))


def is_rational_matrix(A) -> bool:
    return all(not isinstance(x, QTau) or x.is_rational() for row in A for x in row)


def rationalize(A):
    """Drop the QTau wrapper from entries that are rational."""
    out = []
    for row in A:
        r = []
        for x in row:
            if isinstance(x, QTau):
                if not x.is_rational():
                    raise DomainError("matrix has irrational entries")
                x = x.a
            r.append(Fraction(x))
        out.append(r)
    return out


def is_orthogonal(A) -> bool:
    n = len(A)
    return mat_eq(mat_mul(A, transpose(A)), identity(n))


def parse_matrix(text: str):
    """Parse ``"4/5,-3/5;3/5,4/5"`` (rows by ';', entries by ',')."""
    rows = [r for r in text.strip().split(";")]
    if not rows or any(not r.strip() for r in rows):
        raise DomainError(f"cannot parse matrix {text!r}")
    M = []
    for r in rows:
        M.append([_lift(parse_scalar(e)) for e in r.split(",")])
    n = len(M)
    if any(len(r) != n for r in M):
        raise DomainError(f"matrix {text!r} is not square")
    if all(not isinstance(x, QTau) for row in M for x in row):
        return M
    return [[x if isinstance(x, QTau) else QTau(x) for x in row] for row in M]


def format_matrix(A) -> str:
    return ";".join(",".join(format_scalar(x) for x in row) for row in A)
