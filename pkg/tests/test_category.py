import json

import pytest

from cactus_crystal.cartan import cartan_type_a
from cactus_crystal.category_data import (
    CategoryError,
    UNIT_X,
    category_from_covering,
    category_from_json,
    category_to_json,
    covering_from_category,
    from_crystals,
    is_valid,
    mutate_category,
    needed_pairs,
    needed_triples,
    terminal_category,
    validate,
    verify_fiber_system,
)

A1 = cartan_type_a(1)

CORE_A1 = [(0,), (1,), (2,)]


@pytest.fixture(scope="module")
def a1_data():
    return from_crystals(A1, CORE_A1)


@pytest.fixture(scope="module")
def a1_cover(a1_data):
    return covering_from_category(a1_data)


def test_terminal_category_is_valid():
    data = terminal_category()
    assert is_valid(data)
    assert category_from_covering(covering_from_category(data)) == data


def test_from_crystals_rejects_repeats():
    with pytest.raises(CategoryError):
        from_crystals(A1, [(1,), (1,)])


def test_a1_core_validates(a1_data):
    rep = validate(a1_data)
    assert rep["passed"] is True
    assert rep["failures"] == []
    names = {c["check"] for c in rep["checks"]}
    assert {"colour_sets", "mult_sets", "phi_bijection", "sigma_bijection",
            "assoc_bijection", "involutivity", "hexagon",
            "collapsed_pentagon", "pentagon"} <= names


def test_colour_list_contents(a1_data):
    assert set(a1_data.core_colours) == set(CORE_A1)
    # B(1) x B(1) = B(2) + B(0), so the closure adds nothing new here
    assert a1_data.comp((1,), (1,)) == [(0,), (2,)]
    assert len(a1_data.cl[(1,)]) == 2


def test_needed_pairs_tiers(a1_data):
    np_ = needed_pairs(a1_data.core_colours, a1_data.comp)
    assert set(np_["mult"]) >= set(np_["phi"]) | set(np_["sigma"])
    for a, b in np_["sigma"]:
        if a in a1_data.core_colours and b in a1_data.core_colours:
            assert (b, a) in np_["sigma"]
    stored_phi = set(a1_data.phi)
    assert set(np_["phi"]) <= stored_phi


def test_needed_triples_contains_core_cube(a1_data):
    core = a1_data.core_colours
    triples = needed_triples(core, a1_data.comp)
    for a in core:
        for b in core:
            for c in core:
                assert (a, b, c) in triples


def test_json_roundtrip(a1_data):
    doc = category_to_json(a1_data)
    assert doc["format"] == "coboundary-category-data"
    text = json.dumps(doc)  # must be serializable as-is
    back = category_from_json(json.loads(text))
    assert back == a1_data


def test_json_rejects_other_documents():
    with pytest.raises(CategoryError):
        category_from_json({"format": "crystal-graph"})


@pytest.mark.parametrize("seed", range(20))
def test_mutations_always_detected(a1_data, seed):
    mutant, note = mutate_category(a1_data, seed=seed)
    assert note["kind"] in ("sigma", "phi", "assoc")
    assert not is_valid(mutant)


def test_mutation_leaves_original_alone(a1_data):
    before = category_to_json(a1_data)
    mutate_category(a1_data, seed=1)
    assert category_to_json(a1_data) == before


def test_covering_shape(a1_cover, a1_data):
    fs = a1_cover
    assert fs.depth == 3
    assert fs.core_colours == a1_data.core_colours
    # singleton tuples cover only their own colour
    for c in a1_data.cl:
        assert fs.x[((c,), c)] == (UNIT_X,)
        for mu in a1_data.cl:
            if mu != c:
                assert fs.x[((c,), mu)] == ()
    for (a, b, mu), ids in a1_data.mult.items():
        assert fs.x[((a, b), mu)] == ids


def test_covering_verifies(a1_cover):
    rep = verify_fiber_system(a1_cover)
    assert rep["passed"] is True, rep["failures"][:2]
    names = {c["check"] for c in rep["checks"]}
    assert {"x_fibres", "e_act_bijection", "concat_equivariance",
            "transport_equivariance", "glue_naturality"} <= names


def test_roundtrip_is_literal_inverse(a1_data, a1_cover):
    assert category_from_covering(a1_cover) == a1_data


def test_double_roundtrip_idempotent(a1_data):
    once = covering_from_category(a1_data)
    back = category_from_covering(once)
    twice = covering_from_category(back)
    assert twice == once


def test_covering_refuses_invalid_input(a1_data):
    mutant, _ = mutate_category(a1_data, seed=3)
    with pytest.raises(CategoryError, match="refusing"):
        covering_from_category(mutant)


def _tampered(fs, **overrides):
    from dataclasses import replace
    return replace(fs, **overrides)


def test_tampered_pair_action_detected(a1_cover):
    pair = ((1,), (1,))
    key = (pair, ("s", 1, 2))
    table = dict(a1_cover.e_act[key])
    k1, k2 = sorted(table)[:2]
    table[k1], table[k2] = table[k2], table[k1]
    e_act = dict(a1_cover.e_act)
    e_act[key] = table
    rep = verify_fiber_system(_tampered(a1_cover, e_act=e_act))
    assert rep["passed"] is False
    assert any(c["check"] in ("concat_equivariance", "e_act_bijection",
                              "transport_equivariance")
               for c in rep["failures"])


def test_tampered_glue_map_detected(a1_cover):
    target = None
    for triple, table in sorted(a1_cover.gamma2.items(), key=repr):
        if len(table) >= 2:
            target = triple
            break
    assert target is not None
    table = dict(a1_cover.gamma2[target])
    k1, k2 = sorted(table, key=repr)[:2]
    table[k1], table[k2] = table[k2], table[k1]
    gamma2 = dict(a1_cover.gamma2)
    gamma2[target] = table
    fs = _tampered(a1_cover, gamma2=gamma2)
    bad_cat = category_from_covering(fs)
    assert not is_valid(bad_cat)
