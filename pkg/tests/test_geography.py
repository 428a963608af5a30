import pytest

from swcalc.errors import InvalidParameterError
from swcalc.geography import (
    PRINTED_LISTS,
    closed_form_genera,
    compare_printed,
    geography_scan,
    ppx_check,
    restricted_genera,
    zmg_closed_form,
    zmg_restricted,
)


@pytest.mark.parametrize(
    "chi,c1sq,spin,tag",
    [
        (24, 48, True, "excluded"),
        (34, 80, True, "exception_B"),
        (24, 47, True, "not_in_range"),
        (24, 57, True, "not_in_range"),
        (24, 48, False, "not_in_range"),
    ],
)
def test_restriction_verdicts(chi, c1sq, spin, tag):
    assert ppx_check(chi, c1sq, spin).tag == tag


@pytest.mark.parametrize(
    "m,expected",
    [(1, []), (2, []), (3, [1]), (4, [1, 2, 4]), (5, [1, 2, 3, 5]), (6, [1, 2, 3, 4, 6, 7])],
)
def test_restricted_genera(m, expected):
    assert restricted_genera(m) == expected


@pytest.mark.parametrize(
    "m,expected",
    [(3, [1]), (4, [1, 2, 4]), (5, [2, 3, 5]), (6, [1, 3, 4, 6, 7])],
)
def test_closed_form_genera(m, expected):
    assert closed_form_genera(m) == expected


def test_boundary_genus_meets_the_second_exception():
    for m in range(2, 12):
        assert ppx_check(9 * m - 2, 24 * m - 16, True).tag == "exception_B"
        assert not zmg_restricted(m, m - 1)


def test_closed_form_disagrees_only_off_the_boundary():
    rows = geography_scan(range(1, 13), range(1, 21))
    disagree = {(r.m, r.g) for r in rows if not r.agree}
    predicted = {
        (m, g)
        for m in range(1, 13)
        for g in range(1, 21)
        if 5 * g < 8 * m - 10 and (g - m + 1) % 3 == 0 and g != m - 1
    }
    assert disagree == predicted
    assert {(m, g) for m, g in disagree if m <= 6} == {(5, 1), (6, 2)}


def test_scan_rows():
    rows = geography_scan(range(3, 4), range(1, 3))
    assert [(r.chi, r.c1sq, r.verdict) for r in rows] == [(24, 48, "excluded"), (25, 56, "exception_B")]
    assert all(r.agree for r in rows)
    assert not any(r.verdict == "exception_A" for r in geography_scan(range(1, 10), range(1, 15)))


def test_compare_printed_lists():
    assert compare_printed(3).matches_printed
    assert compare_printed(4).note() == "theorem reproduces the printed list"
    five = compare_printed(5)
    assert five.printed == list(PRINTED_LISTS[5])
    assert five.closed_form == [2, 3, 5]
    assert five.note() == "theorem also excludes g = [1, 5]"
    assert compare_printed(6).note() == "theorem also excludes g = [2]"
    with pytest.raises(InvalidParameterError):
        compare_printed(7)


def test_parameters_are_checked():
    with pytest.raises(InvalidParameterError):
        zmg_restricted(0, 1)
    with pytest.raises(InvalidParameterError):
        zmg_closed_form(3, 0)
