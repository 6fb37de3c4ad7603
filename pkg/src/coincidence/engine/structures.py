"""Structure models: coordinates, action matrices and point groups.

Every structure is a free Z-module of rank r.  Its *model space* is Q^r
(Q^d for lattices, Q(tau)^d viewed as Q^2d for golden modules, Q(xi) as
Q^4 for the tenfold module) and ``basis`` holds the module basis as
columns in model coordinates.  An isometry acts on model space by a
rational matrix; conjugating by the basis gives the r x r action matrix
in structure coordinates, which is what the index oracle consumes.
"""

from dataclasses import dataclass, field
from fractions import Fraction
import math
from functools import lru_cache
from itertools import permutations, product
from typing import Optional

from ..errors import DomainError, UnsupportedError
from ..icosian import ICOSIAN_HNF2, unit_icosians
from ..lattice import Lattice
from ..linalg import det, inverse
from ..quaternions import Quat, cayley3, hurwitz_units, rot4
from ..rings.cyclotomic import CycloInt
from ..rings.golden import GoldenInt, QTau


@dataclass(frozen=True)
class StructureSpec:
    name: str
    rank: int
    dim: int
    model: str               # 'rational' | 'golden' | 'cyclo'
    field: str               # coincidence field of the isometry entries
    rotation_order: int      # order of the rotation part of the point group
    point_group_order: int
    basis: tuple = field(repr=False)   # rank x rank, columns in model coordinates
    dual: Optional[str] = None
    parametrization: str = ""
    description: str = ""


def _from_generators(gens, n):
    L = Lattice.from_basis([list(r) for r in zip(*gens)])
    return tuple(tuple(r) for r in L.basis)


def _even_sum(n):
    gens = [tuple(2 if i == j else 0 for i in range(n)) for j in range(n)]
    gens += [tuple(1 if i in (j, j + 1) else 0 for i in range(n)) for j in range(n - 1)]
    return _from_generators(gens, n)


def _with_half(n):
    gens = [tuple(1 if i == j else 0 for i in range(n)) for j in range(n)]
    gens.append(tuple(Fraction(1, 2) for _ in range(n)))
    return _from_generators(gens, n)


def _ident(n):
    return tuple(tuple(Fraction(int(i == j)) for j in range(n)) for i in range(n))


def _icosahedral_basis(kind):
    """Basis of M_B, M_P or M_F inside Z[tau]^3 = Z^6 (coordinates a1,b1,a2,b2,a3,b3).

    The B condition is taken as tau^2*alpha_2 + tau*alpha_1 + alpha_3 = 0 mod 2,
    i.e. the first two axes are swapped relative to the usual statement.
    This is the orientation that the 60 rotations of the unit icosians
    (even permutations of (tau, 1, -1/tau, 0)/2) actually preserve.
    """
    tau2, tau = GoldenInt(1, 1), GoldenInt(0, 1)
    gens = [tuple(2 if i == j else 0 for i in range(6)) for j in range(6)]
    for v in product((0, 1), repeat=6):
        a = [GoldenInt(v[0], v[1]), GoldenInt(v[2], v[3]), GoldenInt(v[4], v[5])]
        c = tau2 * a[1] + tau * a[0] + a[2]
        if c.a % 2 or c.b % 2:
            continue
        s = a[0] + a[1] + a[2]
        s = (s.a % 2, s.b % 2)
        if kind == "P" and s not in ((0, 0), (0, 1)):
            continue
        if kind == "F" and s != (0, 0):
            continue
        gens.append(v)
    return _from_generators(gens, 6)


STRUCTURES = {}


def _register(spec):
    STRUCTURES[spec.name] = spec


_register(StructureSpec("Z2", 2, 2, "rational", "Q", 4, 8, _ident(2), "Z2",
                        "gauss", "square lattice Z^2"))
_register(StructureSpec("Z3", 3, 3, "rational", "Q", 24, 48, _ident(3), "Z3",
                        "quaternion", "primitive cubic lattice Z^3"))
_register(StructureSpec("FCC", 3, 3, "rational", "Q", 24, 48, _even_sum(3), "BCC",
                        "quaternion", "face-centred cubic lattice (integer points with even sum)"))
_register(StructureSpec("BCC", 3, 3, "rational", "Q", 24, 48, _with_half(3), "FCC",
                        "quaternion", "body-centred cubic lattice Z^3 + (1/2)(1,1,1)"))
_register(StructureSpec("Z4", 4, 4, "rational", "Q", 192, 384, _ident(4), "Z4",
                        "pair", "hypercubic lattice Z^4"))
_register(StructureSpec("D4", 4, 4, "rational", "Q", 576, 1152, _even_sum(4), "D4STAR",
                        "pair", "root lattice D4 (integer points with even sum)"))
_register(StructureSpec("D4STAR", 4, 4, "rational", "Q", 576, 1152, _with_half(4), "D4",
                        "pair", "weight lattice D4* = Z^4 + (1/2)(1,1,1,1)"))
_register(StructureSpec("M10", 4, 2, "cyclo", "Q(xi)", 10, 20, _ident(4), None,
                        "cyclo", "tenfold module Z[xi], xi a primitive fifth root of unity"))
_register(StructureSpec("MB", 6, 3, "golden", "Q(tau)", 60, 120, _icosahedral_basis("B"), None,
                        "icosian", "icosahedral module of B type"))
_register(StructureSpec("MP", 6, 3, "golden", "Q(tau)", 60, 120, _icosahedral_basis("P"), None,
                        "icosian", "icosahedral module of P type"))
_register(StructureSpec("MF", 6, 3, "golden", "Q(tau)", 60, 120, _icosahedral_basis("F"), None,
                        "icosian", "icosahedral module of F type (span of the H3 roots)"))
_register(StructureSpec("MC", 6, 3, "golden", "Q(tau)", 24, 48, _ident(6), "MC",
                        "icosian", "cubic module Z[tau]^3 = Z^3 + tau Z^3"))
_register(StructureSpec("ICOSIAN_H4", 8, 4, "golden", "Q(tau)", 7200, 14400,
                        tuple(tuple(Fraction(x, 2) for x in row) for row in ICOSIAN_HNF2), None,
                        "icosian-pair", "icosian ring as an H4-symmetric module"))

LATTICES = ("Z2", "Z3", "FCC", "BCC", "Z4", "D4", "D4STAR")
CUBIC3 = ("Z3", "FCC", "BCC")
ICOSAHEDRAL = ("MB", "MP", "MF")


def get_structure(name) -> StructureSpec:
    key = str(name).upper().replace("*", "STAR")
    if key == "H4":
        key = "ICOSIAN_H4"
    try:
        return STRUCTURES[key]
    except KeyError:
        raise DomainError(f"unknown structure {name!r}; choose from {', '.join(STRUCTURES)}") from None


# --- model-space matrices --------------------------------------------------------

def golden_block(x):
    """2x2 rational matrix of multiplication by x = c + d*tau on (a, b) coordinates."""
    x = x if isinstance(x, QTau) else QTau(x)
    c, d = x.a, x.b
    return [[c, d], [d, c + d]]


def blockify(R):
    """Q(tau)-linear d x d matrix as a rational 2d x 2d matrix."""
    d = len(R)
    out = [[Fraction(0)] * (2 * d) for _ in range(2 * d)]
    for i in range(d):
        for j in range(d):
            b = golden_block(R[i][j])
            for u in range(2):
                for v in range(2):
                    out[2 * i + u][2 * j + v] = b[u][v]
    return out


def cyclo_mult_matrix(z: CycloInt):
    """4x4 integer matrix of multiplication by z on Z[xi] (basis 1, xi, xi^2, xi^3)."""
    cols = [(z * CycloInt.xi_power(j)).coeffs for j in range(4)]
    return [[Fraction(cols[j][i]) for j in range(4)] for i in range(4)]


CYCLO_CONJ = [[Fraction(c) for c in row] for row in zip(*(CycloInt.xi_power(j).conj().coeffs for j in range(4)))]


def _scaled_int(M):
    """(N, d) with M = N / d for a rational matrix M."""
    d = math.lcm(*(Fraction(x).denominator for row in M for x in row))
    return [[int(Fraction(x) * d) for x in row] for row in M], d


def _int_mul(A, B):
    cols = list(zip(*B))
    return [[sum(a * b for a, b in zip(row, c)) for c in cols] for row in A]


@lru_cache(maxsize=None)
def _basis_pair(spec: StructureSpec):
    B = [list(r) for r in spec.basis]
    n = len(B)
    if all(B[i][j] == (i == j) for i in range(n) for j in range(n)):
        return None
    return _scaled_int(B), _scaled_int(inverse(B))


def to_structure_coords(spec: StructureSpec, model_matrix):
    """Conjugate a model-space matrix into structure coordinates: B^-1 M B.

    The product is formed over the integers after clearing denominators.
    """
    pair = _basis_pair(spec)
    if pair is None:
        return [[Fraction(x) for x in r] for r in model_matrix]
    (Bn, bd), (Bi, bid) = pair
    N, d = _scaled_int(model_matrix)
    P = _int_mul(Bi, _int_mul(N, Bn))
    den = bd * bid * d
    return [[Fraction(x, den) for x in row] for row in P]


# --- point groups (rotation parts) -----------------------------------------------

def _signed_perms(n):
    out = []
    for p in permutations(range(n)):
        for s in product((1, -1), repeat=n):
            M = [[Fraction(s[i]) if p[i] == j else Fraction(0) for j in range(n)] for i in range(n)]
            if det(M) == 1:
                out.append(M)
    return out


@lru_cache(maxsize=None)
def d4_rotation_group():
    """The 576 rotations R(q1, q2) that map D4 onto itself.

    They come from pairs of Hurwitz units and from pairs of norm-2
    elements (1+i times a unit), up to the overall sign of the pair.
    """
    units = hurwitz_units()
    one_i = Quat(1, 1, 0, 0)
    seen = {}
    for a in units:
        for b in units:
            for q1, q2 in ((a, b), (a * one_i, b * one_i)):
                R = rot4(q1, q2)
                seen[_mkey(R)] = R
    return [seen[k] for k in sorted(seen)]


def _mkey(M):
    return tuple(tuple(x for x in row) for row in M)


@lru_cache(maxsize=None)
def _rotation_group_cached(name):
    spec = STRUCTURES[name]
    if name == "Z2":
        return [[[Fraction(1), Fraction(0)], [Fraction(0), Fraction(1)]],
                [[Fraction(0), Fraction(-1)], [Fraction(1), Fraction(0)]],
                [[Fraction(-1), Fraction(0)], [Fraction(0), Fraction(-1)]],
                [[Fraction(0), Fraction(1)], [Fraction(-1), Fraction(0)]]]
    if name in CUBIC3 or name == "MC":
        return _signed_perms(3)
    if name == "Z4":
        return _signed_perms(4)
    if name in ("D4", "D4STAR"):
        return d4_rotation_group()
    if name in ICOSAHEDRAL:
        seen = {}
        for u in unit_icosians():
            R = cayley3(u)
            seen[_mkey(R)] = R
        return [seen[k] for k in sorted(seen, key=str)]
    if name == "M10":
        return [("cyclo", s * CycloInt.xi_power(k)) for s in (1, -1) for k in range(5)]
    raise UnsupportedError(f"no explicit point group for {spec.name}")


def rotation_group(spec: StructureSpec):
    """Rotation part of the point group, as model-space isometries (matrices,
    or ('cyclo', root of unity) for the tenfold module)."""
    return _rotation_group_cached(spec.name)


def canonical_reflection(spec: StructureSpec):
    """The fixed reflection used to split off rotation parts (physical coordinates)."""
    if spec.model == "cyclo":
        return "conj"
    return reflection_matrix(spec.dim)


def reflection_matrix(d):
    """diag(1,-1) in the plane, -I in space, quaternion conjugation in 4D."""
    if d == 2:
        return [[Fraction(1), Fraction(0)], [Fraction(0), Fraction(-1)]]
    if d == 3:
        return [[Fraction(-1 if i == j else 0) for j in range(3)] for i in range(3)]
    return [[Fraction((1 if i == 0 else -1) if i == j else 0) for j in range(4)] for i in range(4)]
