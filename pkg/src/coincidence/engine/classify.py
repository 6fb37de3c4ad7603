"""Orbits of coincidence site lattices (or modules) under the point group."""

from dataclasses import dataclass

from ..errors import DomainError
from ..lattice import Lattice
from ..linalg import mat_mul
from .enumeration import enumerate_rotations
from .handles import IsometryHandle
from .sigma import _spec, action_matrix, csl_of_action
from .structures import CYCLO_CONJ, canonical_reflection, cyclo_mult_matrix, rotation_group, to_structure_coords


@dataclass(frozen=True)
class CSLOrbit:
    sigma: int
    members: tuple          # canonical Lattice objects in structure coordinates
    representative: IsometryHandle
    rotations: int          # how many coincidence rotations produce a member

    @property
    def size(self) -> int:
        return len(self.members)


def point_group_actions(spec):
    """Action matrices (structure coordinates) of the full point group."""
    spec = _spec(spec)
    out = []
    if spec.model == "cyclo":
        for _, z in rotation_group(spec):
            M = cyclo_mult_matrix(z)
            out.append(to_structure_coords(spec, M))
            out.append(to_structure_coords(spec, mat_mul(M, CYCLO_CONJ)))
        return out
    F = canonical_reflection(spec)
    for Q in rotation_group(spec):
        for M in (Q, mat_mul(Q, F)):
            h = IsometryHandle.from_matrix(M)
            out.append(action_matrix(h, spec))
    return out


def classify_csls(spec, sigma: int, cap=None):
    """Split the CSLs of index ``sigma`` into point-group orbits.

    Returns a list of CSLOrbit sorted by (orbit size, first member).
    """
    spec = _spec(spec)
    if sigma < 1:
        raise DomainError("Sigma must be positive")
    recs = enumerate_rotations(spec, sigma, cap=cap, start=sigma)
    csls = {}
    for r in recs:
        L = csl_of_action(action_matrix(r.handle, spec))
        if L not in csls:
            csls[L] = [r.handle, 0]
        csls[L][1] += 1
    group = point_group_actions(spec)
    seen = set()
    orbits = []
    for L in sorted(csls, key=str):
        if L in seen:
            continue
        orbit = {L}
        frontier = [L]
        while frontier:
            cur = frontier.pop()
            for A in group:
                img = Lattice.from_basis(mat_mul(A, cur.basis))
                if img not in orbit:
                    orbit.add(img)
                    frontier.append(img)
        seen |= orbit
        members = tuple(sorted(orbit, key=str))
        rot = sum(csls[m][1] for m in members if m in csls)
        orbits.append(CSLOrbit(sigma, members, csls[L][0], rot))
    orbits.sort(key=lambda o: (o.size, str(o.members[0])))
    return orbits
