from fractions import Fraction

from coincidence.icosian import (ICOSIAN_HNF2, basis_from_units, enumerate_golden_arrays, icosian_membership,
                                 unit_icosians)
from coincidence.quaternions import Quat
from coincidence.rings.golden import QTau


def test_unit_icosians():
    us = unit_icosians()
    assert len(us) == 120
    assert all(u.norm2() == QTau(1) for u in us)


def test_basis_regenerates_from_units():
    assert basis_from_units() == ICOSIAN_HNF2


def test_closed_under_multiplication():
    us = unit_icosians()
    for a in us[:12]:
        for b in us[::7]:
            assert icosian_membership(a * b)[0]


def test_membership():
    h = Fraction(1, 2)
    assert icosian_membership(Quat(QTau(h), QTau(h), QTau(h), QTau(h)))[0]
    assert not icosian_membership(Quat(QTau(h), QTau(0), QTau(0), QTau(0)))[0]


def test_unit_shell_in_enumeration():
    # one representative per sign pair
    V, N, G = enumerate_golden_arrays("icosian", 1, primitive_only=False)
    assert int((N == 1).sum()) == 60
