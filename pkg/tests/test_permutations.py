"""Signed-permutation statistics, memberships and enumerators."""
import pytest
from hypothesis import given
from hypothesis import strategies as st

from snake_atlas import fixtures as fx
from snake_atlas.errors import LimitError
from snake_atlas.permutations import (FAMILY_TAGS, all_windows,
                                      augmenting_elements, check_window,
                                      enumerate_family, expand_first_entry,
                                      expand_last_entry, gae, is_beta_snake,
                                      is_gamma_snake, is_member, npk, nva,
                                      shrink_first_entry, shrink_last_entry,
                                      subword)


@st.composite
def windows(draw, max_n=6):
    n = draw(st.integers(1, max_n))
    values = draw(st.permutations(list(range(1, n + 1))))
    signs = draw(st.lists(st.booleans(), min_size=n, max_size=n))
    return tuple(v if s else -v for v, s in zip(values, signs))


def test_check_window_rejects_bad_input():
    for bad in [(), (0,), (1, 1), (2,), (1, -1)]:
        with pytest.raises(ValueError):
            check_window(bad)


def test_snake_predicates():
    assert is_beta_snake((1,))
    assert is_beta_snake((4, -2, 5, -3, -1))
    assert not is_beta_snake((1, 2))
    assert is_gamma_snake((1,))
    assert not is_gamma_snake((-1,))
    # all 16 snakes of size 3
    assert sum(is_beta_snake(w) for w in all_windows(3)) == 16


def test_gamma_snake_counts_match_table():
    # row sums of the restricted triangle, recomputed by brute force
    count4 = sum(1 for w in all_windows(4) if is_gamma_snake(w) and w[0] > 0)
    assert count4 == 8 + 10 + 11 + 11
    assert sum(is_gamma_snake(w) for w in all_windows(2)) == 3


def test_subword_examples():
    assert subword((2, 8, -3, 4, -7, 1, -6, -5), 4) == (2, -3, 4, 1)
    assert subword((-7, 8, 3, 5, -4, -1, 2, -6), 5) == (3, 5, -4, -1, 2)
    w = (3, -1, 2)
    assert subword(w, 3) == w
    with pytest.raises(ValueError):
        subword(w, 4)


@given(windows(), st.data())
def test_subword_restriction_is_compositional(w, data):
    k = data.draw(st.integers(1, len(w)))
    kk = data.draw(st.integers(1, k))
    assert subword(subword(w, k), kk) == subword(w, kk)


def test_npk_examples():
    assert npk((1, 2, 3)) == 0
    # direct scan: negative entries followed by a smaller absolute value
    w = (2, 8, -3, 4, -7, 1, -6, -5)
    oracle = sum(1 for i in range(len(w) - 1)
                 if w[i] < 0 and abs(w[i]) > abs(w[i + 1]))
    assert oracle == 2
    assert npk(w) == 2


def test_nva_examples():
    assert nva((1, 2, 3)) == 0
    assert nva((3, -4, -1, 2)) == 1


def test_augmenting_elements():
    assert augmenting_elements((3, -1, 2, 4, 7, 5, 8, -6)) == (2, 4, 5)
    assert gae((3, -1, 2, 4, 7, 5, 8, -6)) == 5
    assert augmenting_elements((1, 2, 3)) == (1, 2, 3)
    assert gae((1, 2, 3)) == 3
    assert augmenting_elements((-1,)) == ()
    with pytest.raises(ValueError, match="no augmenting element"):
        gae((-1,))


@pytest.mark.parametrize("family,table", [
    ("rsi-b", fx.RSI_B_SETS), ("rsi-d", fx.RSI_D_SETS),
    ("rsii-b", fx.RSII_B_SETS), ("rsii-d", fx.RSII_D_SETS),
    ("adi-b", fx.ADI_B_SETS), ("adi-d", fx.ADI_D_SETS),
    ("adii-b", fx.ADII_B_SETS), ("adii-d", fx.ADII_D_SETS),
])
def test_family_listings(family, table):
    for n, ref in table.items():
        assert set(enumerate_family(family, n)) == ref


def test_membership_spot_checks():
    assert is_member((-2, 1), "rsii-d")
    assert set(enumerate_family("rsii-d", 2)) == {(-2, 1)}
    assert len(enumerate_family("adi-b", 4)) == 11
    assert len(enumerate_family("adi-d", 4)) == 5
    for n in range(1, 5):
        ident = tuple(range(1, n + 1))
        assert is_member(ident, "rsi-b") and is_member(ident, "rsii-b")


def test_unknown_family_rejected():
    with pytest.raises(ValueError):
        is_member((1,), "nope")
    with pytest.raises(ValueError):
        enumerate_family("nope", 2)


@pytest.mark.parametrize("n", range(1, 5))
def test_enumeration_agrees_with_membership_filter(n):
    everything = all_windows(n)
    for family in FAMILY_TAGS:
        assert enumerate_family(family, n) == sorted(
            w for w in everything if is_member(w, family))


def test_enumeration_is_sorted_lexicographically():
    members = enumerate_family("snakes", 3)
    assert members == sorted(members)
    assert members[0][0] < 0 < members[-1][0]


def test_snake_counts():
    for n in range(1, 9):
        assert len(enumerate_family("snakes", n)) == 2**n * fx.EULER[n]
    assert enumerate_family("snakes", 1) == [(-1,), (1,)]


def test_snake_first_entry_constraint():
    # column of the signed triangle at n=3, first entry 2
    assert len(enumerate_family("snakes", 3, ("first", 2))) == 4


def test_type1_refinements_partition():
    for n in range(1, 6):
        rsi = set(enumerate_family("rsi", n))
        b = set(enumerate_family("rsi-b", n))
        d = set(enumerate_family("rsi-d", n))
        assert b <= rsi and d <= rsi
        assert not (b & d)


def test_simsun_family_sizes():
    for n in range(1, 6):
        assert len(enumerate_family("rsi", n)) == 2**n * fx.EULER[n + 1]
        assert len(enumerate_family("rsii", n)) == 2**n * fx.EULER[n + 1]
        assert len(enumerate_family("adi", n + 1)) == 2**n * fx.EULER[n + 1]


def test_ceiling_is_enforced_and_named():
    with pytest.raises(LimitError, match="ceiling 8"):
        enumerate_family("snakes", 9)
    with pytest.raises(LimitError):
        all_windows(11)
    # an explicit ceiling unlocks larger sizes
    assert len(enumerate_family("alternating-unsigned", 9, max_n=9)) == 7936


def test_ceiling_env_override(monkeypatch):
    monkeypatch.setenv("SNAKE_ATLAS_MAX_N", "2")
    with pytest.raises(LimitError, match="ceiling 2"):
        enumerate_family("snakes", 3)


def test_shrink_expand_round_trip():
    src, tgt = fx.TYPE1_D_EXAMPLE
    assert shrink_last_entry(src) == tgt
    assert expand_last_entry(tgt, 3) == src
    w = (-3, 1, -4, 2)
    assert expand_first_entry(shrink_first_entry(w), 3) == w


@given(windows())
def test_unsigned_families_are_all_positive(w):
    for family in ("alternating-unsigned", "simsun-unsigned", "andre-unsigned"):
        if is_member(w, family):
            assert all(x > 0 for x in w)
