import pytest
from hypothesis import given, settings, strategies as st

from cactus_crystal.cartan import (
    cartan_explicit,
    cartan_type_a,
    fundamental_weight,
    pairing,
    weight_add,
)
from cactus_crystal.crystal import (
    CrystalError,
    CrystalGraph,
    build_irreducible,
    component_ids,
    components,
    crystal_isomorphic,
    export_graph,
    import_graph,
    is_normal,
    multiplicity_set,
    normality_report,
    product_of_weights,
    reading_order,
    shape_of_weight,
    tensor,
    tensor_many,
    to_dot,
)

A1 = cartan_type_a(1)
A2 = cartan_type_a(2)
W1 = fundamental_weight(A2, 1)
W2 = fundamental_weight(A2, 2)


def a2_dim(a, b):
    # Weyl dimension formula for highest weight a w1 + b w2
    return (a + 1) * (b + 1) * (a + b + 2) // 2


@pytest.mark.parametrize("k", range(5))
def test_a1_dimensions(k):
    assert build_irreducible(A1, (k,)).size == k + 1


@pytest.mark.parametrize("a,b", [(0, 0), (1, 0), (0, 1), (1, 1), (2, 0),
                                 (0, 2), (2, 1), (2, 2)])
def test_a2_dimensions(a, b):
    assert build_irreducible(A2, (a, b)).size == a2_dim(a, b)


def test_defining_crystal_labels_frozen():
    g = build_irreducible(A2, W1)
    assert g.labels == (((1,),), ((2,),), ((3,),))
    assert g.wt(0) == (1, 0)
    assert g.f(1, 0) == 1 and g.f(2, 1) == 2
    assert g.e(1, 1) == 0 and g.e(2, 2) == 1


def test_reading_order_columns_bottom_up():
    assert reading_order((2, 2)) == [(1, 0), (0, 0), (1, 1), (0, 1)]


def test_shape_of_weight():
    assert shape_of_weight((2, 1)) == (3, 1)
    assert shape_of_weight((0, 0)) == ()


@given(st.integers(1, 2), st.lists(st.integers(0, 2), min_size=2, max_size=2))
@settings(deadline=None, max_examples=30)
def test_string_statistics_are_normal(rank, coeffs):
    cartan = cartan_type_a(rank)
    lam = tuple(coeffs[:rank])
    g = build_irreducible(cartan, lam)
    for b in g.elements():
        for i in g.index_range():
            assert g.phi(i, b) - g.eps(i, b) == pairing(cartan, g.wt(b), i)


def test_unique_highest_weight():
    g = build_irreducible(A2, (1, 1))
    assert g.highest_weight_elements() == [0]
    assert g.wt(0) == (1, 1)


def test_tensor_weights_add():
    left = build_irreducible(A2, W1)
    right = build_irreducible(A2, W2)
    t = tensor(left, right)
    for a in range(left.size):
        for b in range(right.size):
            assert t.wt(a * right.size + b) == weight_add(left.wt(a), right.wt(b))


def test_a1_pair_component_structure_frozen():
    t = tensor(build_irreducible(A1, (1,)), build_irreducible(A1, (1,)))
    comps = components(t)
    assert [(h, t.wt(h), sub.size) for h, sub in comps] == \
        [(0, (2,), 3), (2, (0,), 1)]
    assert multiplicity_set(t, (2,)) == (0,)
    assert multiplicity_set(t, (0,)) == (2,)
    assert is_normal(t)


def test_trivial_component_sits_at_lowest_highest_pair():
    # the singleton component head is (second letter, first letter) = (1, 0)
    t = tensor(build_irreducible(A1, (1,)), build_irreducible(A1, (1,)))
    head = [h for h, sub in components(t) if sub.size == 1]
    assert head == [2]
    assert t.labels[2] == (1, 0)


def test_tensor_many_flat_labels():
    g = tensor_many([build_irreducible(A1, (1,))] * 3)
    assert g.size == 8
    assert g.labels[0] == (0, 0, 0)
    assert g.labels[5] == (1, 0, 1)


def test_product_of_weights_cached():
    a = product_of_weights(A1, ((1,), (1,)))
    b = product_of_weights(A1, ((1,), (1,)))
    assert a is b


def test_crystal_isomorphic_on_matching_components():
    t12 = tensor(build_irreducible(A2, W1), build_irreducible(A2, W2))
    ref = build_irreducible(A2, (1, 1))
    heads = multiplicity_set(t12, (1, 1))
    assert len(heads) == 1
    sub = dict(components(t12))[heads[0]]
    assert crystal_isomorphic(sub, ref,
                              sub.index_of_label(t12.labels[heads[0]]),
                              ref.highest_weight_elements()[0])
    assert not crystal_isomorphic(sub, build_irreducible(A2, (3, 0)),
                                  0, 0)


def test_export_import_roundtrip():
    g = build_irreducible(A2, (1, 1))
    doc = export_graph(g)
    h = import_graph(doc)
    assert h.size == g.size
    assert h.wts == g.wts
    assert h.f_maps == g.f_maps


def test_import_rejects_duplicate_targets():
    doc = {
        "cartan": {"type": "A", "rank": 1},
        "elements": [{"id": 0, "wt": [1]}, {"id": 1, "wt": [1]},
                     {"id": 2, "wt": [-1]}],
        "edges": [{"i": 1, "from": 0, "to": 2}, {"i": 1, "from": 1, "to": 2}],
    }
    with pytest.raises(CrystalError, match=r"axiom \(3\)"):
        import_graph(doc)


def test_import_rejects_weight_mismatch():
    doc = {
        "cartan": {"type": "A", "rank": 1},
        "elements": [{"id": 0, "wt": [1]}, {"id": 1, "wt": [0]}],
        "edges": [{"i": 1, "from": 0, "to": 1}],
    }
    with pytest.raises(CrystalError, match=r"axiom"):
        import_graph(doc)


def test_normality_report_unverifiable_outside_type_a():
    b2 = cartan_explicit([[2, -1], [-2, 2]])
    g = CrystalGraph(cartan=b2, wts=((0, 0),), f_maps={1: (None,), 2: (None,)})
    rep = normality_report(g)
    assert rep["status"] == "unverifiable"
    with pytest.raises(CrystalError):
        is_normal(g)


def test_build_rejects_non_dominant():
    with pytest.raises(CrystalError):
        build_irreducible(A1, (-1,))


def test_dot_output_mentions_edges():
    g = build_irreducible(A1, (1,))
    dot = to_dot(g)
    assert "digraph" in dot and "->" in dot


def test_component_ids_partition():
    t = tensor(build_irreducible(A1, (1,)), build_irreducible(A1, (1,)))
    ids = component_ids(t)
    assert len(ids) == t.size
    assert ids[0] == ids[1] == ids[3]
    assert ids[2] != ids[0]
