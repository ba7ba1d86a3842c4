from math import factorial

import pytest
from hypothesis import given, settings, strategies as st

from cactus_crystal.groups import defining_relations, format_word
from cactus_crystal.tableaux import (
    TableauError,
    bender_knuth,
    bk_braid_witness,
    bk_cactus_act,
    check_tableau,
    evacuation,
    is_semistandard,
    is_standard,
    partial_evacuation,
    partitions_of,
    rsk,
    rsk_crosscheck,
    rsk_inverse,
    semistandard_tableaux,
    shape,
    size,
    standard_tableaux,
)


def hook_length_count(shp):
    """Independent counting oracle for standard tableaux."""
    if not shp:
        return 1
    cols = [sum(1 for r in shp if r > c) for c in range(shp[0])]
    prod = 1
    for r, row in enumerate(shp):
        for c in range(row):
            prod *= (row - c - 1) + (cols[c] - r - 1) + 1
    return factorial(sum(shp)) // prod


def syt(shp):
    return sorted(standard_tableaux(shp))


def test_partitions_of_five():
    assert partitions_of(5) == [(5,), (4, 1), (3, 2), (3, 1, 1), (2, 2, 1),
                                (2, 1, 1, 1), (1, 1, 1, 1, 1)]


@pytest.mark.parametrize("n", range(1, 7))
def test_standard_counts_match_hooks(n):
    for shp in partitions_of(n):
        assert len(standard_tableaux(shp)) == hook_length_count(shp)


def test_semistandard_count_is_a2_dimension():
    # shape (2,1) with entries <= 3 indexes the 8-element adjoint crystal
    assert len(semistandard_tableaux((2, 1), 3)) == 8


def test_check_tableau_errors():
    with pytest.raises(TableauError):
        check_tableau(((1,), (2, 3)))
    with pytest.raises(TableauError):
        check_tableau(((2, 1),))
    with pytest.raises(TableauError):
        check_tableau(((1, 2), (1,)))


def test_standard_vs_semistandard():
    assert is_standard(((1, 3), (2,)))
    assert not is_standard(((1, 1), (2,)))
    assert is_semistandard(((1, 1), (2,)))


def test_rsk_frozen():
    assert rsk((3, 1, 2)) == (((1, 2), (3,)), ((1, 3), (2,)))


def test_rsk_of_repeats():
    p, q = rsk((2, 1, 1, 2))
    assert is_semistandard(p) and is_standard(q)
    assert shape(p) == shape(q)


@given(st.permutations(list(range(1, 6))))
@settings(deadline=None, max_examples=60)
def test_rsk_roundtrip_on_permutations(a):
    a = tuple(a)
    p, q = rsk(a)
    assert rsk_inverse(p, q) == a


@given(st.lists(st.integers(1, 3), min_size=1, max_size=6))
@settings(deadline=None, max_examples=60)
def test_rsk_roundtrip_on_words(a):
    a = tuple(a)
    p, q = rsk(a)
    assert rsk_inverse(p, q) == a


def test_rsk_inverse_validates():
    with pytest.raises(TableauError):
        rsk_inverse(((1, 2),), ((1,), (2,)))
    with pytest.raises(TableauError):
        rsk_inverse(((1, 2),), ((1, 1),))


def test_evacuation_frozen():
    assert evacuation(((1, 2), (3,))) == ((1, 3), (2,))


def test_evacuation_rejects_semistandard_input():
    with pytest.raises(TableauError):
        evacuation(((1, 1),))


@pytest.mark.parametrize("shp", [(3,), (2, 1), (2, 2), (3, 2), (2, 2, 1)])
def test_evacuation_involution(shp):
    for t in syt(shp):
        assert evacuation(evacuation(t)) == t


def test_partial_evacuation_edges():
    t = ((1, 3), (2, 4))
    assert partial_evacuation(0, t) == t
    assert partial_evacuation(1, t) == t
    assert partial_evacuation(size(t), t) == evacuation(t)
    with pytest.raises(TableauError):
        partial_evacuation(5, t)


def test_partial_evacuation_keeps_suffix():
    t = ((1, 2, 5), (3, 4))
    out = partial_evacuation(4, t)
    assert out[0][2] == 5
    assert sorted(v for row in out for v in row) == [1, 2, 3, 4, 5]


@pytest.mark.parametrize("shp", [(2, 1), (2, 2), (2, 2, 1)])
def test_bk_cactus_involution(shp):
    n = sum(shp)
    for t in syt(shp):
        for i in range(1, n):
            for j in range(i + 1, n + 1):
                assert bk_cactus_act(i, j, bk_cactus_act(i, j, t)) == t


def test_bk_cactus_interval_validated():
    with pytest.raises(TableauError):
        bk_cactus_act(2, 2, ((1, 2), (3,)))


def test_bk_cactus_satisfies_interval_relations():
    shp = (2, 2, 1)
    tabs = syt(shp)
    assert len(tabs) == 5
    n = sum(shp)

    def act_word(w, t):
        for g in w.gens:
            t = bk_cactus_act(g.i, g.j, t)
        return t

    for lhs, rhs in defining_relations("C", n):
        for t in tabs:
            assert act_word(lhs, t) == act_word(rhs, t), \
                "%s vs %s" % (format_word(lhs), format_word(rhs))


def test_bender_knuth_frozen_and_involutive():
    assert bender_knuth(1, ((1, 1, 2),)) == ((1, 2, 2),)
    for t in semistandard_tableaux((2, 1), 3):
        for i in (1, 2):
            assert bender_knuth(i, bender_knuth(i, t)) == t


def test_bender_knuth_balanced_row_is_fixed():
    # one free 1 and one free 2: swapping the counts changes nothing
    assert bender_knuth(1, ((1, 2, 3),)) == ((1, 2, 3),)
    # two free 2s and no free 3: the counts trade places
    assert bender_knuth(2, ((1, 2, 2),)) == ((1, 3, 3),)


def test_braid_witness_frozen():
    w = bk_braid_witness()
    assert w is not None
    assert w["cells"] == 3
    assert w["tableau"] == ((1, 2), (3,))
    assert w["index"] == 1


def test_braid_witness_none_when_capped():
    assert bk_braid_witness(max_cells=2) is None


def test_rsk_crosscheck_story():
    rep = rsk_crosscheck(3)
    assert rep["passed"] is True
    assert rep["perm_rule"] == ["precompose"]
    assert rep["winners"] == ["one-line/Q", "inverse/P"]
    assert rep["stories"]["one-line/P"] is False
    assert rep["stories"]["inverse/Q"] is False
