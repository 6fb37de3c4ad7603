"""Isometry handles: one object for every way an isometry can be given.

A handle is a matrix, a quaternion (d=3), a quaternion pair (d=4) or a
quotient alpha/beta of ring elements (planar structures).  The ``reflect``
flag composes the isometry on the right with the canonical reflection of
its dimension, so ``rotation_part`` is always cheap.
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
import re

import numpy as np
import sympy as sp

from ..errors import DomainError
from ..linalg import det, format_matrix, is_rational_matrix, mat_mul, rationalize
from ..quaternions import cayley3, parse_quat, rot4
from ..rings.cyclotomic import CycloInt
from ..rings.gaussian import GaussInt
from ..rings.golden import GoldenInt, QTau
from ..rings.text import parse_element, parse_scalar
from .structures import reflection_matrix


@dataclass(frozen=True)
class Irrational:
    """A real matrix entry outside Q(tau), kept symbolically with a float value."""

    text: str
    value: float

    def __float__(self):
        return self.value

    def __str__(self):
        return self.text


def _entry(text):
    try:
        x = parse_scalar(text)
    except DomainError:
        x = None
    if x is not None:
        if isinstance(x, GoldenInt):
            return QTau(x)
        return x
    try:
        e = sp.nsimplify(sp.sympify(text.replace("^", "**"), rational=True))
    except (sp.SympifyError, TypeError, ValueError):
        raise DomainError(f"cannot parse matrix entry {text!r}") from None
    if e.is_Rational:
        return Fraction(int(e.p), int(e.q))
    if not e.is_real:
        raise DomainError(f"matrix entry {text!r} is not a real number")
    e = sp.expand(e)
    parts = e.as_coefficients_dict()
    root5 = sp.sqrt(5)
    if set(parts) <= {sp.Integer(1), root5} and all(v.is_Rational for v in parts.values()):
        a = Fraction(int(sp.numer(parts.get(sp.Integer(1), 0))), int(sp.denom(parts.get(sp.Integer(1), 0))))
        b = Fraction(int(sp.numer(parts.get(root5, 0))), int(sp.denom(parts.get(root5, 0))))
        # sqrt(5) = 2*tau - 1
        return QTau(a - b, 2 * b)
    return Irrational(text.strip(), float(e))


def parse_isometry_matrix(text: str):
    """Parse ``"r11,r12;r21,r22"``.  Entries may be rationals, golden
    rationals such as ``1/2+1/2t``, or real expressions such as
    ``sqrt(2)/2``; the latter become :class:`Irrational` unless they lie in
    Q(sqrt 5)."""
    rows = text.strip().split(";")
    if not rows or any(not r.strip() for r in rows):
        raise DomainError(f"cannot parse matrix {text!r}")
    M = [[_entry(e) for e in r.split(",")] for r in rows]
    n = len(M)
    if any(len(r) != n for r in M):
        raise DomainError(f"matrix {text!r} is not square")
    if n not in (2, 3, 4):
        raise DomainError("only dimensions 2, 3 and 4 are supported")
    return M


def has_irrational(M) -> bool:
    return any(isinstance(x, Irrational) for row in M for x in row)


def _float_orthogonal(M, tol=1e-9):
    n = len(M)
    F = [[float(x) for x in row] for row in M]
    for i in range(n):
        for j in range(n):
            s = sum(F[i][k] * F[j][k] for k in range(n))
            if abs(s - (i == j)) > tol:
                return False
    return True


def parse_quotient(text: str, ring: str):
    """Parse ``"(a)/(b)"`` or ``"a:b"`` into two ring elements."""
    s = text.strip()
    if ":" in s:
        a, b = s.split(":", 1)
    else:
        m = re.fullmatch(r"\((.*)\)\s*/\s*\((.*)\)", s)
        if not m:
            raise DomainError(f"cannot parse quotient {text!r}; use '(a)/(b)' or 'a:b'")
        a, b = m.group(1), m.group(2)
    try:
        alpha, beta = parse_element(a, ring), parse_element(b, ring)
    except (DomainError, ValueError) as exc:
        raise DomainError(f"cannot parse quotient {text!r}: {exc}") from None
    if not alpha or not beta:
        raise DomainError("quotient terms must be nonzero")
    return alpha, beta


@dataclass(frozen=True)
class IsometryHandle:
    kind: str          # 'matrix' | 'quaternion' | 'pair' | 'quotient'
    data: tuple
    reflect: bool = False

    # -- constructors -----------------------------------------------------------
    @classmethod
    def from_matrix(cls, M):
        if isinstance(M, str):
            M = parse_isometry_matrix(M)
        return cls("matrix", tuple(tuple(r) for r in M))

    @classmethod
    def from_quaternion(cls, q, reflect=False):
        if isinstance(q, str):
            q = parse_quat(q)
        if not q:
            raise DomainError("zero quaternion")
        return cls("quaternion", (q,), reflect)

    @classmethod
    def from_pair(cls, q1, q2=None, reflect=False):
        if isinstance(q1, str) and q2 is None:
            parts = re.findall(r"\([^()]*\)", q1)
            if len(parts) != 2:
                raise DomainError(f"cannot parse quaternion pair {q1!r}; use '(k,l,m,n),(k,l,m,n)'")
            q1, q2 = parts
        q1 = parse_quat(q1) if isinstance(q1, str) else q1
        q2 = parse_quat(q2) if isinstance(q2, str) else q2
        if not q1 or not q2:
            raise DomainError("zero quaternion")
        return cls("pair", (q1, q2), reflect)

    @classmethod
    def from_quotient(cls, alpha, beta=None, ring=None, reflect=False):
        if isinstance(alpha, str) and beta is None:
            alpha, beta = parse_quotient(alpha, ring or "cyclo")
        if not alpha or not beta:
            raise DomainError("quotient terms must be nonzero")
        return cls("quotient", (alpha, beta), reflect)

    # -- views ----------------------------------------------------------------------
    @property
    def dim(self) -> int:
        if self.kind == "matrix":
            return len(self.data)
        if self.kind == "quaternion":
            return 3
        if self.kind == "pair":
            return 4
        return 2

    @property
    def ring(self) -> str:
        """'gauss' or 'cyclo' for quotients, 'golden' or 'rational' otherwise."""
        if self.kind == "quotient":
            return "gauss" if isinstance(self.data[0], GaussInt) else "cyclo"
        if self.kind == "matrix":
            if has_irrational(self.data):
                return "irrational"
            return "rational" if is_rational_matrix(self.data) else "golden"
        qs = self.data
        return "golden" if any(q.ring.startswith("golden") for q in qs) else "rational"

    def matrix(self):
        """Physical matrix (Fraction, QTau or Irrational entries); a fresh copy."""
        return [list(r) for r in self._matrix]

    @cached_property
    def _matrix(self):
        if self.kind == "matrix":
            M = [list(r) for r in self.data]
            if self.ring == "rational":
                M = rationalize(M)
            return tuple(tuple(r) for r in M)
        if self.kind == "quaternion":
            R = cayley3(self.data[0])
        elif self.kind == "pair":
            R = rot4(*self.data)
        else:
            alpha, beta = self.data
            if not isinstance(alpha, GaussInt):
                raise DomainError("a cyclotomic quotient has no rational matrix; use the structure action")
            n = beta.norm()
            z = alpha * beta.conj()
            x, y = Fraction(z.re, n), Fraction(z.im, n)
            R = [[x, -y], [y, x]]
        if self.ring == "golden":
            R = [[x if isinstance(x, QTau) else QTau(x) for x in row] for row in R]
        if self.reflect:
            R = mat_mul(R, reflection_matrix(self.dim))
        return tuple(tuple(r) for r in R)

    def determinant_sign(self) -> int:
        if self.kind != "matrix":
            return -1 if self.reflect else 1
        if has_irrational(self.data):
            return 1 if _float_det(self.data) > 0 else -1
        d = det(self.matrix())
        return 1 if d > 0 else -1

    def rotation_part(self) -> "IsometryHandle":
        """The rotation obtained by composing with the canonical reflection."""
        if self.kind != "matrix":
            return IsometryHandle(self.kind, self.data, False)
        if self.determinant_sign() > 0:
            return self
        if has_irrational(self.data):
            return self
        return IsometryHandle.from_matrix(mat_mul(self.matrix(), reflection_matrix(self.dim)))

    def is_orthogonal(self) -> bool:
        if self.kind != "matrix":
            if self.kind == "quotient":
                a, b = self.data
                return a.abs2() == b.abs2() if isinstance(a, CycloInt) else a.norm() == b.norm()
            return True
        if has_irrational(self.data):
            return _float_orthogonal(self.data)
        M = self.matrix()
        n = len(M)
        P = mat_mul(M, [list(c) for c in zip(*M)])
        return all(P[i][j] == (1 if i == j else 0) for i in range(n) for j in range(n))

    def __str__(self):
        tag = " (reflected)" if self.reflect else ""
        if self.kind == "matrix":
            return ";".join(",".join(str(x) if isinstance(x, Irrational) else _fmt(x) for x in row)
                            for row in self.data)
        if self.kind == "quaternion":
            return f"{self.data[0]}{tag}"
        if self.kind == "pair":
            return f"{self.data[0]},{self.data[1]}{tag}"
        return f"({self.data[0]})/({self.data[1]}){tag}"


def _fmt(x):
    return format_matrix([[x]])


def _float_det(M) -> float:
    return float(np.linalg.det(np.array([[float(x) for x in row] for row in M])))
