import pytest

from coincidence.counting import counting_function
from coincidence.engine import enumerate_rotations, parse_resume_token, rotation_counts, sigma_closed_form, sigma_oracle
from coincidence.engine.structures import get_structure, rotation_group
from coincidence.errors import CapExceeded, DomainError, UnsupportedError


@pytest.mark.parametrize("name,bound", [
    ("Z2", 30), ("Z3", 15), ("FCC", 9), ("BCC", 9), ("Z4", 6), ("D4", 3), ("M10", 41), ("MB", 11), ("MC", 5),
])
def test_counts_match_counting_function(name, bound):
    spec = get_structure(name)
    f = counting_function(name)
    group = len(rotation_group(spec))
    counts = rotation_counts(spec, bound)
    assert counts == {m: group * f(m) for m in range(1, bound + 1)}


@pytest.mark.parametrize("name,bound", [("Z2", 25), ("Z3", 9), ("Z4", 3), ("M10", 11), ("MP", 5), ("MC", 4)])
def test_enumerated_closed_form_equals_oracle(name, bound):
    recs = enumerate_rotations(name, bound)
    for r in recs[:: max(1, len(recs) // 150)]:
        assert sigma_closed_form(r.handle, name).sigma == r.sigma == sigma_oracle(r.handle, name).sigma


def test_sorted_and_deterministic():
    a = enumerate_rotations("Z3", 7)
    b = enumerate_rotations("Z3", 7)
    assert [r.key() for r in a] == [r.key() for r in b] == sorted(r.key() for r in a)


def test_cap_and_resume():
    with pytest.raises(CapExceeded) as exc:
        enumerate_rotations("Z3", 9, cap=200)
    partial = exc.value.partial
    token = exc.value.resume_token
    start = parse_resume_token(token, "Z3")
    rest = enumerate_rotations("Z3", 9, start=start)
    assert [r.key() for r in partial + rest] == [r.key() for r in enumerate_rotations("Z3", 9)]
    assert all(r.sigma < start for r in partial)


def test_resume_token_errors():
    with pytest.raises(DomainError):
        parse_resume_token("Z3-5", "Z3")
    with pytest.raises(DomainError):
        parse_resume_token("Z2@5", "Z3")


def test_h4_enumeration_unsupported():
    with pytest.raises(UnsupportedError):
        enumerate_rotations("H4", 4)
