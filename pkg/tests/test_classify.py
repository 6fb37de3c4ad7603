import pytest

from coincidence.engine import classify_csls, point_group_actions
from coincidence.lattice import Lattice, index


def test_point_group_size():
    assert len(point_group_actions("Z3")) == 48
    assert len(point_group_actions("Z2")) == 8


@pytest.mark.parametrize("sigma,sizes", [(3, [4]), (5, [6]), (13, [6, 8])])
def test_cubic_orbits(sigma, sizes):
    orbits = classify_csls("Z3", sigma)
    assert [o.size for o in orbits] == sizes
    for o in orbits:
        assert all(index(Lattice.standard(3), L) == sigma for L in o.members)
    # each CSL comes from the same number of rotations (stabilizer argument)
    assert sum(o.rotations for o in orbits) == {3: 96, 5: 144, 13: 336}[sigma]


def test_square_lattice_orbits():
    # Sigma = 5 on Z^2: two CSLs swapped by the reflection
    orbits = classify_csls("Z2", 5)
    assert len(orbits) == 1 and orbits[0].size == 2
