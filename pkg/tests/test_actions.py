import pytest

from cactus_crystal.actions import (
    ActionContext,
    DEFAULT_MAX_POINTS,
    LabeledPoint,
    MAX_POINTS_ENV,
    act,
    act_word,
    contains_alternating,
    count_points,
    iter_points,
    orbit,
    permutation_image,
    point_budget,
    verify_relations,
    weight_orderings,
)
from cactus_crystal.cartan import cartan_type_a
from cactus_crystal.groups import (
    AffineR,
    AffineS,
    CactusGen,
    GroupError,
    MirabolicT,
    PermGen,
    parse_word,
    project_to_symmetric,
    word,
)
from cactus_crystal.perms import compose, long_cycle

A1 = cartan_type_a(1)
A2 = cartan_type_a(2)

W111 = ((1,), (1,), (1,))
W112 = ((1,), (1,), (2,))


def test_point_validation():
    with pytest.raises(GroupError):
        LabeledPoint(((1,), (1,)), (0,))


def test_perm_gen_pulls():
    p = LabeledPoint(((1,), (2,), (3,)), (0, 1, 2))
    q = act(A1, PermGen((2, 3, 1)), p)
    assert q.weights == ((2,), (3,), (1,))
    assert q.entries == (1, 2, 0)


def test_interval_gen_reverses_weight_slice():
    p = LabeledPoint(W112, (0, 0, 0))
    q = act(A1, CactusGen(2, 3), p)
    assert q.weights == ((1,), (2,), (1,))


def test_interval_gen_is_involution():
    for p in iter_points(A1, W112):
        for i, j in [(1, 2), (2, 3), (1, 3)]:
            g = CactusGen(i, j)
            assert act(A1, g, act(A1, g, p)) == p


def test_act_word_folds_leftmost_first():
    w1, w2 = (2, 3, 1), (2, 1, 3)
    p = LabeledPoint(((1,), (2,), (3,)), (0, 1, 2))
    two = act_word(A1, word("vC", 3, [PermGen(w1), PermGen(w2)]), p)
    one = act(A1, PermGen(compose(w1, w2)), p)
    assert two == one
    assert project_to_symmetric(word("vC", 3, [PermGen(w1), PermGen(w2)])) \
        == compose(w1, w2)


def test_mirabolic_t_acts_as_swap():
    p = LabeledPoint(((1,), (2,)), (1, 0))
    q = act(A1, MirabolicT(1), p)
    assert q == act(A1, PermGen((2, 1)), p)


def test_t0_refuses_to_act():
    p = LabeledPoint(((1,), (2,)), (0, 0))
    with pytest.raises(GroupError, match="t0"):
        act(A1, MirabolicT(0), p)


def test_affine_rotation_acts_as_long_cycle():
    p = LabeledPoint(((1,), (2,), (3,)), (0, 1, 2))
    assert act(A1, AffineR(), p) == act(A1, PermGen(long_cycle(3)), p)
    q = p
    for _ in range(3):
        q = act(A1, AffineR(), q)
    assert q == p


def test_affine_standard_interval_matches_plain():
    p = LabeledPoint(W112, (1, 0, 2))
    assert act(A1, AffineS(1, 2), p) == act(A1, CactusGen(1, 2), p)


def test_affine_wraparound_is_straightened_involution():
    p = LabeledPoint(W112, (1, 1, 0))
    q = act(A1, AffineS(3, 1), p)
    assert act(A1, AffineS(3, 1), q) == p
    assert q.weights == ((2,), (1,), (1,))


def test_interval_out_of_range():
    p = LabeledPoint(((1,), (1,)), (0, 0))
    with pytest.raises(GroupError):
        act(A1, CactusGen(1, 3), p)


def test_orbits_partition_the_point_space():
    gens = [CactusGen(1, 2), CactusGen(2, 3), CactusGen(1, 3)]
    space = [p for ordering in weight_orderings(W112)
             for p in iter_points(A1, ordering)]
    seen = {}
    for p in space:
        orb = orbit(A1, gens, p)
        assert p in orb
        for q in orb:
            assert orbit(A1, gens, q) == orb
        key = tuple(orb)
        for q in orb:
            assert seen.setdefault(q, key) == key
    assert set(seen) == set(space)


def test_orbit_budget_enforced():
    p = LabeledPoint(W112, (0, 0, 0))
    with pytest.raises(GroupError, match="budget"):
        orbit(A1, [CactusGen(1, 3)], p, max_points=1)


def test_point_budget_env(monkeypatch):
    monkeypatch.delenv(MAX_POINTS_ENV, raising=False)
    assert point_budget() == DEFAULT_MAX_POINTS
    monkeypatch.setenv(MAX_POINTS_ENV, "42")
    assert point_budget() == 42
    monkeypatch.setenv(MAX_POINTS_ENV, "zero")
    with pytest.raises(GroupError):
        point_budget()
    monkeypatch.setenv(MAX_POINTS_ENV, "-3")
    with pytest.raises(GroupError):
        point_budget()


def test_count_and_orderings():
    assert count_points(A1, W112) == 12
    assert len(weight_orderings(W112)) == 3
    assert len(weight_orderings(W111)) == 1


def test_action_context_helpers():
    ctx = ActionContext(A1, W112)
    assert ctx.n == 3
    assert ctx.factor(3).size == 3
    assert len(list(ctx.points())) == 12
    p = LabeledPoint(W112, (0, 0, 0))
    assert ctx.act(CactusGen(1, 2), p) == act(A1, CactusGen(1, 2), p)


def test_verify_relations_c3_report():
    rep = verify_relations(A1, "C", 3, [W111])
    assert rep["passed"] is True
    assert rep["points"] == 8
    assert rep["relations"] == 5
    assert set(rep["families"]) == {"involution", "nesting"}
    assert rep["failures"] == []
    assert isinstance(rep["duration_s"], float)


def test_verify_relations_all_kinds_small():
    for kind in ("C", "vC", "MC", "AC"):
        rep = verify_relations(A1, kind, 3, [W111, W112])
        assert rep["passed"] is True, (kind, rep["failures"][:1])


def test_verify_relations_threaded_agrees():
    a = verify_relations(A2, "C", 3, [((1, 0), (0, 1), (1, 0))])
    b = verify_relations(A2, "C", 3, [((1, 0), (0, 1), (1, 0))], threads=2)
    assert a["passed"] and b["passed"]
    assert a["families"] == b["families"]


def test_verify_relations_budget():
    with pytest.raises(GroupError, match=MAX_POINTS_ENV):
        verify_relations(A1, "C", 3, [W111], max_points=4)


def test_verify_relations_shape_mismatch():
    with pytest.raises(GroupError):
        verify_relations(A1, "C", 3, [((1,), (1,))])


def test_distinct_generators_act_differently():
    # sanity: the harness can distinguish wrong relations
    p = LabeledPoint(W112, (0, 1, 2))
    assert act(A1, CactusGen(1, 2), p) != act(A1, CactusGen(1, 3), p)


def test_permutation_image_of_two_transpositions():
    states = ["a", "b", "c"]
    maps = [{"a": "b", "b": "a", "c": "c"}, {"a": "a", "b": "c", "c": "b"}]
    rep = permutation_image(states, maps)
    assert rep["degree"] == 3 and rep["order"] == 6
    assert rep["even"] == 3 and rep["odd"] == 3
    assert contains_alternating(rep["group"], 3)


def test_alternating_check_capped():
    with pytest.raises(GroupError):
        contains_alternating(set(), 9)


def test_verify_accepts_parse_word_cycles():
    # a full r-orbit of intervals straightens consistently
    ctx = ActionContext(A1, W111)
    w = parse_word("r s1_2 r r", "AC", 3)
    p = LabeledPoint(W111, (0, 1, 1))
    assert ctx.act_word(w, p) == act(A1, AffineS(2, 3), p)
