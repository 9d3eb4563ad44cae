from math import comb

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import family
from segchar import Multisegment, RankExceeded, Segment, SegLaurentPoly, SegMonomial
from segchar.qchar import (
    FundamentalSpec,
    chi_N_via_tableaux,
    dominant_qchar,
    fundamental_qchar,
    standard_qchar,
)
from segchar.verify import reciprocal_character


def mono(*pairs):
    return SegLaurentPoly.monomial(SegMonomial({Segment(a, b): e for a, b, e in pairs}))


def test_fundamental_spec_validation():
    spec = FundamentalSpec(2, 3, 4)
    assert spec.segment() == Segment(1, 2)
    assert FundamentalSpec.of_segment(Segment(1, 2), 4) == spec
    with pytest.raises(RankExceeded):
        FundamentalSpec(3, 4, 2)
    with pytest.raises(ValueError):
        FundamentalSpec(1, 1, 2)  # even power + level sum is off-lattice
    with pytest.raises(ValueError):
        FundamentalSpec(0, 1, 2)


def test_fundamental_qchar_rank1():
    assert fundamental_qchar(FundamentalSpec(1, 2, 1)) == mono((1, 1, 1)) + mono(
        (2, 2, -1)
    )
    assert fundamental_qchar(FundamentalSpec(1, 0, 1)) == mono((0, 0, 1)) + mono(
        (1, 1, -1)
    )


def test_fundamental_qchar_top_level():
    # l = N: N+1 terms, exactly one dominant
    for n in (1, 2, 3, 4):
        f = fundamental_qchar(FundamentalSpec(n, n - 1, n))
        assert len(f) == n + 1
        dom = f.dominant_part()
        assert len(dom) == 1 and all(c == 1 for _, c in dom.items())


def test_fundamental_qchar_shape():
    for n in range(1, 5):
        for l in range(1, n + 1):
            for p in range(-6, 7):
                if (p + l) % 2 == 1:
                    f = fundamental_qchar(FundamentalSpec(l, p, n))
                    assert len(f) == comb(n + 1, l)
                    dom = f.dominant_part()
                    assert len(dom) == 1 and all(c == 1 for _, c in dom.items())


GOLD = Multisegment.parse("[1,1]+2*[2,2]+[3,3]")


def test_standard_qchar_golden_factorization():
    y14 = mono((2, 2, 1)) + mono((3, 3, -1))
    y12 = mono((1, 1, 1)) + mono((2, 2, -1))
    y16 = mono((3, 3, 1)) + mono((4, 4, -1))
    assert standard_qchar(GOLD, 1) == y14 * y14 * y12 * y16
    assert standard_qchar(Multisegment.parse("[1,2]+[2,2]+[3,3]"), 1) == y14 * y16
    assert standard_qchar(Multisegment.parse("[1,1]+[2,2]+[2,3]"), 1) == y12 * y14


def test_standard_qchar_degenerate():
    assert standard_qchar(Multisegment(), 1) == SegLaurentPoly.one()
    assert standard_qchar(Multisegment.parse("[0,1]"), 1) == SegLaurentPoly.one()
    assert standard_qchar(Multisegment.parse("[0,2]"), 1) == SegLaurentPoly.zero()


def test_chi_via_tableaux_examples():
    assert chi_N_via_tableaux(Multisegment.parse("[0,0]"), 1) == mono((0, 0, 1)) + mono(
        (1, 1, -1)
    )
    assert chi_N_via_tableaux(Multisegment.parse("[0,1]"), 1) == SegLaurentPoly.one()
    m = Multisegment.parse("[0,0]+[1,1]")
    assert chi_N_via_tableaux(m, 1) == standard_qchar(m, 1)


def test_route_identity_exhaustive():
    for m in family(5, -2, 2):
        for n in (1, 2, 3):
            assert chi_N_via_tableaux(m, n) == standard_qchar(m, n), (m, n)


@given(st.data())
def test_multiplicativity(data):
    pool = family(3, -1, 1)
    m1 = data.draw(st.sampled_from(pool))
    m2 = data.draw(st.sampled_from(pool))
    n = data.draw(st.integers(1, 3))
    assert standard_qchar(m1 + m2, n) == standard_qchar(m1, n) * standard_qchar(m2, n)


def test_dominant_qchar_golden():
    p1m = mono((1, 1, 1), (2, 2, 2), (3, 3, 1))
    p1mp = mono((2, 2, 1), (3, 3, 1))
    p1mpp = mono((1, 1, 1), (2, 2, 1))
    two = SegLaurentPoly.constant(2)
    assert dominant_qchar(GOLD, 1) == p1m + p1mp + p1mpp + p1mpp + two
    assert dominant_qchar(
        Multisegment.parse("[1,1]+[2,2]+[2,3]"), 1
    ) == p1mpp + SegLaurentPoly.one()
    assert dominant_qchar(Multisegment.parse("[0,1]"), 2) == mono((0, 1, 1))


def test_dominant_projection_commutes():
    # dominant-then-project (through the reciprocal expansion) matches
    # project-then-dominant (through the rank-N product)
    for m in family(4, 0, 2):
        for n in (1, 2):
            assert reciprocal_character(m).project_pN(n) == dominant_qchar(m, n)
            assert chi_N_via_tableaux(m, n).dominant_part() == dominant_qchar(m, n)
