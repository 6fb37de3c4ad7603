"""Coincidence indices: the exact oracle and the closed forms.

The oracle works for any structure and any isometry.  For a coincidence
isometry the action matrix A in structure coordinates is rational with
|det A| = 1, and

    Sigma = [Gamma : Gamma n R Gamma] = [Gamma + R Gamma : Gamma]
          = D^r / det HNF([D*I | D*A])          (D = common denominator of A)

which needs one modular HNF.  The coincidence site lattice (CSL) itself
is available on request as an intersection of lattices.

The closed forms replace the HNF by arithmetic in the parametrizing ring;
the tests check every one of them against the oracle.
"""

from dataclasses import dataclass
from fractions import Fraction
import math
from typing import Optional

from ..errors import DomainError, NotCoincidenceError, UnsupportedError
from ..icosian import icosian_coordinates
from ..lattice import Lattice, hnf, intersect
from ..linalg import common_denominator, det, det_int, inverse, mat_mul
from ..quaternions import Quat, make_primitive, odd_part, rot4
from ..rings.cyclotomic import CycloInt
from ..rings.factor import abs_norm, factor_element, unit_normalize
from ..rings.gaussian import GaussInt
from ..rings.golden import GoldenInt, QTau, golden_gcd
from .handles import IsometryHandle, has_irrational
from .structures import (CUBIC3, CYCLO_CONJ, ICOSAHEDRAL, StructureSpec, blockify,
                         cyclo_mult_matrix, get_structure, to_structure_coords)

INFINITE = None   # sigma value used for non-coincidence isometries


@dataclass(frozen=True)
class CoincidenceResult:
    structure: str
    sigma: Optional[int]          # None means infinite (not a coincidence isometry)
    method: str                   # 'oracle' | 'closed-form' | 'none'
    csl: Optional[Lattice] = None  # CSL in structure coordinates, when requested

    @property
    def is_coincidence(self) -> bool:
        return self.sigma is not None

    def sigma_text(self) -> str:
        return "inf" if self.sigma is None else str(self.sigma)


def _spec(spec) -> StructureSpec:
    return spec if isinstance(spec, StructureSpec) else get_structure(spec)


# --- coincidence test and action matrices ------------------------------------------

def _check_dim(handle: IsometryHandle, spec: StructureSpec):
    if spec.model == "cyclo":
        if handle.kind == "quotient" and handle.ring != "cyclo":
            raise DomainError("the tenfold module needs a quotient of elements of Z[xi]")
        if handle.kind not in ("quotient", "matrix") or handle.dim != 2:
            raise DomainError("the tenfold module needs a planar isometry")
        return
    if handle.kind == "quotient" and handle.ring != "gauss":
        raise DomainError(f"{spec.name} takes a Gaussian quotient only in the plane")
    if handle.dim != spec.dim:
        raise DomainError(f"{spec.name} lives in dimension {spec.dim}, the isometry in {handle.dim}")


def _planar_unit(M):
    """For the tenfold module: a 2x2 orthogonal matrix with entries in Q(tau)
    is a coincidence isometry only when it is +-I up to reflection, because
    Q(xi) contains no other point of the unit circle with real and imaginary
    parts in Q(tau)."""
    a, b = M[0][0], M[1][0]
    if b:
        return None
    return 1 if a == 1 else -1


def is_coincidence(handle: IsometryHandle, spec) -> bool:
    """True iff Gamma and R Gamma are commensurate.

    Raises DomainError when the handle is not an isometry or does not
    fit the structure's dimension.
    """
    spec = _spec(spec)
    _check_dim(handle, spec)
    if not handle.is_orthogonal():
        raise DomainError("the matrix is not orthogonal")
    if handle.kind == "matrix" and has_irrational(handle.data):
        return False
    if spec.model == "cyclo":
        if handle.kind == "quotient":
            return True
        M = handle.matrix()
        return _planar_unit(M) is not None
    if spec.model == "rational":
        M = handle.matrix()
        return all(not isinstance(x, QTau) or x.is_rational() for row in M for x in row)
    return True   # golden structures: every entry is in Q(tau) by construction


def action_matrix(handle: IsometryHandle, spec):
    """Rational r x r matrix of the isometry in structure coordinates."""
    spec = _spec(spec)
    if spec.model == "cyclo":
        if handle.kind == "matrix":
            M = handle.matrix()
            s = _planar_unit(M)
            if s is None:
                raise NotCoincidenceError("not a coincidence isometry of the tenfold module")
            alpha, beta, refl = CycloInt(s), CycloInt(1), det(M) < 0
        else:
            alpha, beta = handle.data
            refl = handle.reflect
        A = mat_mul(cyclo_mult_matrix(alpha), inverse(cyclo_mult_matrix(beta)))
        if refl:
            A = mat_mul(A, CYCLO_CONJ)
        return to_structure_coords(spec, A)
    M = handle.matrix()
    if spec.model == "rational":
        if any(isinstance(x, QTau) and not x.is_rational() for row in M for x in row):
            raise NotCoincidenceError("irrational entries")
        M = [[x.a if isinstance(x, QTau) else Fraction(x) for x in row] for row in M]
        return to_structure_coords(spec, M)
    return to_structure_coords(spec, blockify(M))


# --- the oracle ----------------------------------------------------------------------

def sigma_of_action(A) -> int:
    """Index [Z^r + A Z^r : Z^r] for a rational matrix A with |det A| = 1."""
    r = len(A)
    D = common_denominator(A)
    N = [[int(x * D) for x in row] for row in A]
    if abs(det_int(N)) != D ** r:
        raise AssertionError("an isometry must act unimodularly")
    if D == 1:
        return 1
    M = [[D if i == j else 0 for j in range(r)] + N[i] for i in range(r)]
    H = hnf(M, modulus=D)
    covol = math.prod(H[i][i] for i in range(r))
    sigma, rem = divmod(D ** r, covol)
    if rem:
        raise AssertionError("index computation is inconsistent")
    return sigma


def csl_of_action(A) -> Lattice:
    r = len(A)
    return intersect(Lattice.standard(r), Lattice.from_basis(A))


def sigma_oracle(handle: IsometryHandle, spec, with_csl: bool = False) -> CoincidenceResult:
    """Exact coincidence index by lattice arithmetic (any structure)."""
    spec = _spec(spec)
    if not is_coincidence(handle, spec):
        return CoincidenceResult(spec.name, INFINITE, "oracle")
    A = action_matrix(handle, spec)
    csl = csl_of_action(A) if with_csl else None
    return CoincidenceResult(spec.name, sigma_of_action(A), "oracle", csl)


def csl_model_basis(spec, csl: Lattice):
    """CSL basis (columns) in model coordinates."""
    spec = _spec(spec)
    return mat_mul([list(r) for r in spec.basis], csl.basis)


# --- inverting the rotation parametrizations ----------------------------------------

def _to_field(x):
    if isinstance(x, GoldenInt):
        return QTau(x)
    if isinstance(x, int):
        return Fraction(x)
    return x


def cayley_inverse(R) -> Quat:
    """A quaternion q with cayley3(q) == R (unique up to a nonzero scalar)."""
    R = [[_to_field(x) for x in row] for row in R]
    one = R[0][0] * 0 + 1
    t = R[0][0] + R[1][1] + R[2][2]
    P = [
        [one + t, R[2][1] - R[1][2], R[0][2] - R[2][0], R[1][0] - R[0][1]],
        [R[2][1] - R[1][2], one + R[0][0] - R[1][1] - R[2][2], R[0][1] + R[1][0], R[0][2] + R[2][0]],
        [R[0][2] - R[2][0], R[0][1] + R[1][0], one - R[0][0] + R[1][1] - R[2][2], R[1][2] + R[2][1]],
        [R[1][0] - R[0][1], R[0][2] + R[2][0], R[1][2] + R[2][1], one - R[0][0] - R[1][1] + R[2][2]],
    ]
    i = next(i for i in range(4) if P[i][i])
    return Quat(*P[i])


def integral_primitive(q: Quat) -> Quat:
    """Scale a rational or golden-rational quaternion to a primitive integral one."""
    comps = [_to_field(c) for c in q.comps]
    if all(isinstance(c, Fraction) for c in comps):
        den = math.lcm(*(c.denominator for c in comps))
        p, _ = make_primitive(Quat(*(int(c * den) for c in comps)))
        return p
    comps = [c if isinstance(c, QTau) else QTau(c) for c in comps]
    den = math.lcm(*(c.denominator() for c in comps))
    p, _ = make_primitive(Quat(*((c * den).to_golden_int() for c in comps)))
    return p


def _quat_of_vector(v):
    return Quat(*v)


def pair_from_rotation(R):
    """Primitive integral quaternions (q1, q2) with rot4(q1, q2) == R.

    The map ``x -> R(x) * conj(R(1))`` is conjugation by q1, whose
    3x3 block on the pure quaternions inverts to q1; then q2 is
    proportional to ``conj(R(1)) * q1``.
    """
    R = [[_to_field(x) for x in row] for row in R]
    cols = [[R[i][j] for i in range(4)] for j in range(4)]
    u = _quat_of_vector(cols[0])
    ub = u.conj()
    C = [[None] * 3 for _ in range(3)]
    for j in range(1, 4):
        w = _quat_of_vector(cols[j]) * ub
        for i in range(1, 4):
            C[i - 1][j - 1] = w.comps[i]
    q1 = integral_primitive(cayley_inverse(C))
    q2 = integral_primitive(ub * q1)
    S = rot4(q1, q2)
    if all(S[i][j] == R[i][j] for i in range(4) for j in range(4)):
        return q1, q2
    if all(S[i][j] == -R[i][j] for i in range(4) for j in range(4)):
        return q1, -q2
    raise DomainError("matrix is not of the form R(q1, q2)")


# --- denominators -----------------------------------------------------------------------

def denominator(M):
    """Least denominator of a matrix.

    Rational entries: the least positive integer d with d*M integral.
    Q(tau) entries: a canonical generator d of the ideal of golden integers
    with d*M integral over Z[tau].
    """
    if all(not isinstance(x, (QTau, GoldenInt)) for row in M for x in row):
        return common_denominator(M)
    L = GoldenInt(1)
    for row in M:
        for x in row:
            x = _to_field(x)
            x = x if isinstance(x, QTau) else QTau(x)
            if not x:
                continue
            D = x.denominator()
            num = (x * D).to_golden_int()
            g = golden_gcd(GoldenInt(D), num)
            d = GoldenInt(D).exact_div(g)
            L = L * d.exact_div(golden_gcd(L, d))
    return unit_normalize(L)[0]


# --- closed forms ---------------------------------------------------------------------------

def _quotient_sigma(alpha, beta) -> int:
    """prod N(pi)^(|e_pi|/2) over the prime factorization of alpha/beta."""
    e = {}
    for x, s in ((alpha, 1), (beta, -1)):
        _, fac = factor_element(x)
        for pi, k in fac:
            e[pi] = e.get(pi, 0) + s * k
    sq = math.prod(abs_norm(pi) ** abs(k) for pi, k in e.items())
    r = math.isqrt(sq)
    if r * r != sq:
        raise DomainError("quotient does not have absolute value 1")
    return r


def _gauss_quotient(handle):
    if handle.kind == "quotient":
        return handle.data
    R = handle.rotation_part().matrix()
    x, y = R[0][0], R[1][0]
    d = math.lcm(x.denominator, y.denominator)
    return GaussInt(int(x * d), int(y * d)), GaussInt(d, 0)


def _cubic_q(handle) -> Quat:
    h = handle.rotation_part()
    if h.kind == "quaternion":
        q = h.data[0]
        if q.ring != "integer":
            raise DomainError(f"{q} is not an integral quaternion")
        comps = [int(c) for c in q.comps]
        if math.gcd(*comps) != 1:
            raise DomainError(f"{q} is not primitive")
        return Quat(*comps)
    return integral_primitive(cayley_inverse(h.matrix()))


def _d4_pair(handle):
    h = handle.rotation_part()
    if h.kind == "pair":
        q1, q2 = h.data
        for q in (q1, q2):
            if q.ring != "integer":
                raise DomainError(f"{q} is not an integral quaternion")
            if math.gcd(*(int(c) for c in q.comps)) != 1:
                raise DomainError(f"{q} is not primitive")
        q1, q2 = Quat(*(int(c) for c in q1.comps)), Quat(*(int(c) for c in q2.comps))
        if math.isqrt(q1.norm2() * q2.norm2()) ** 2 != q1.norm2() * q2.norm2():
            raise DomainError("pair is not admissible: |q1 q2|^2 is not a square")
        return q1, q2, rot4(q1, q2)
    R = h.matrix()
    q1, q2 = pair_from_rotation(R)
    return q1, q2, R


def icosian_gcd_sigma(R) -> int:
    """Sigma of a rotation in SO(3, Q(tau)) for the icosahedral modules.

    Let q0 be any golden-rational quaternion with R = R(q0), and u, v the
    icosian coordinates of q0 and tau*q0.  The preimages of R in the
    icosian ring form the rank-two Z-module I n Q(tau) q0 = Z[tau] q', and
    Sigma = N(|q'|^2).  Since q0 and q' differ by a scalar lambda, with
    N(|q0|^2) = N(lambda)^2 N(|q'|^2) and N(lambda) equal to the covolume
    of span_Z(rows (u_i, v_i)), we get Sigma = N(|q0|^2) / covol^2.
    """
    q0 = cayley_inverse(R)
    q0 = Quat(*(c if isinstance(c, QTau) else QTau(c) for c in q0.comps))
    u = icosian_coordinates(q0)
    v = icosian_coordinates(q0 * QTau(0, 1))
    covol = Lattice.from_basis([u, v]).covolume()
    n = q0.norm2()
    n = n.norm() if isinstance(n, QTau) else Fraction(n) ** 2
    s = Fraction(n) / (covol * covol)
    if s.denominator != 1:
        raise AssertionError("non-integral icosahedral index")
    return int(s)


def sigma_closed_form(handle: IsometryHandle, spec) -> CoincidenceResult:
    """Coincidence index from the parametrization (oracle for ICOSIAN_H4)."""
    spec = _spec(spec)
    if not is_coincidence(handle, spec):
        return CoincidenceResult(spec.name, INFINITE, "closed-form")
    name = spec.name
    if name == "Z2":
        sigma = _quotient_sigma(*_gauss_quotient(handle))
    elif name in CUBIC3:
        sigma = odd_part(_cubic_q(handle).norm2())
    elif name in ("D4", "D4STAR", "Z4"):
        q1, q2, R = _d4_pair(handle)
        sigma = math.lcm(odd_part(q1.norm2()), odd_part(q2.norm2()))
        if name == "Z4":
            sigma = math.lcm(sigma, common_denominator(R))
    elif name == "M10":
        if handle.kind == "quotient":
            sigma = _quotient_sigma(*handle.data)
        else:
            sigma = 1
    elif name in ICOSAHEDRAL:
        sigma = icosian_gcd_sigma(handle.rotation_part().matrix())
    elif name == "MC":
        sigma = abs(GoldenInt.coerce(denominator(handle.rotation_part().matrix())).norm())
    else:
        return sigma_oracle(handle, spec)
    return CoincidenceResult(name, sigma, "closed-form")


def sigma(handle: IsometryHandle, spec, method: str = "auto", with_csl: bool = False) -> CoincidenceResult:
    """Dispatch: 'oracle', 'closed-form', or 'auto' (closed form, CSL via oracle)."""
    if method == "oracle" or with_csl:
        return sigma_oracle(handle, spec, with_csl=with_csl)
    if method in ("closed-form", "auto"):
        return sigma_closed_form(handle, spec)
    raise DomainError(f"unknown method {method!r}")


def reflection_sigma(handle: IsometryHandle, spec) -> CoincidenceResult:
    """Sigma of an improper isometry, via its rotation part.

    The canonical reflection lies in the point group of every supported
    structure, so composing with it leaves Sigma unchanged.
    """
    spec = _spec(spec)
    if handle.determinant_sign() > 0:
        raise DomainError("the isometry is a rotation, not a reflection")
    res = sigma_closed_form(handle.rotation_part(), spec)
    return CoincidenceResult(spec.name, res.sigma, "reflection")


def module_dual_check(handle: IsometryHandle, spec):
    """(Sigma on the structure, Sigma on its declared dual), both by the oracle."""
    spec = _spec(spec)
    if spec.dual is None:
        raise UnsupportedError(f"{spec.name} has no declared dual")
    other = get_structure(spec.dual)
    return sigma_oracle(handle, spec).sigma, sigma_oracle(handle, other).sigma
