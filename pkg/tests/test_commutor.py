import pytest
from hypothesis import given, settings, strategies as st

from cactus_crystal.cartan import (
    cartan_type_a,
    star_weight,
    weight_sub,
    zero_weight,
)
from cactus_crystal.commutor import (
    CrystalBijection,
    commutor,
    commutor_table,
    hexagon_holds,
    internal_cactus,
    reversal_table,
    schutzenberger,
)
from cactus_crystal.crystal import (
    CrystalError,
    CrystalGraph,
    build_irreducible,
    multiplicity_set,
    tensor,
)

A1 = cartan_type_a(1)
A2 = cartan_type_a(2)


def matched_component_bijection(src, dst):
    """Pair components head-by-head; well defined iff multiplicity free.

    Independent of the xi construction: only uses edge-by-edge BFS, so it
    serves as an oracle for the commutor on multiplicity-free products.
    """
    mapping = [None] * src.size
    for h in src.highest_weight_elements():
        targets = multiplicity_set(dst, src.wt(h))
        assert len(targets) == 1, "oracle needs a multiplicity-free product"
        pair = {h: targets[0]}
        frontier = [h]
        while frontier:
            b = frontier.pop()
            mapping[b] = pair[b]
            for i in src.index_range():
                c, c2 = src.f(i, b), dst.f(i, pair[b])
                assert (c is None) == (c2 is None)
                if c is not None and c not in pair:
                    pair[c] = c2
                    frontier.append(c)
    assert None not in mapping
    return tuple(mapping)


def test_xi_frozen_defining_a2():
    xi = schutzenberger(build_irreducible(A2, (1, 0)))
    assert xi.mapping == (2, 1, 0)


def test_xi_frozen_a1_string():
    xi = schutzenberger(build_irreducible(A1, (3,)))
    assert xi.mapping == (3, 2, 1, 0)


@given(st.integers(1, 2), st.lists(st.integers(0, 2), min_size=2, max_size=2))
@settings(deadline=None, max_examples=25)
def test_xi_weight_rule(rank, coeffs):
    cartan = cartan_type_a(rank)
    g = build_irreducible(cartan, tuple(coeffs[:rank]))
    xi = schutzenberger(g)
    zero = zero_weight(cartan)
    for b in g.elements():
        assert g.wt(xi(b)) == weight_sub(zero, star_weight(cartan, g.wt(b)))


def test_xi_involution_on_tensor():
    t = tensor(build_irreducible(A2, (1, 0)), build_irreducible(A2, (1, 1)))
    xi = schutzenberger(t)
    assert xi.is_involution()


def test_xi_intertwines_f_with_starred_e():
    g = build_irreducible(A2, (1, 1))
    from cactus_crystal.cartan import star
    xi = schutzenberger(g)
    for b in g.elements():
        for i in g.index_range():
            c = g.f(i, b)
            if c is not None:
                assert xi(c) == g.e(star(A2, i), xi(b))


def test_xi_rejects_two_heads_in_component():
    # one tail with two covers of different colours: two heads, one component
    g = CrystalGraph(
        cartan=A2,
        wts=((2, -1), (-1, 2), (0, 0)),
        f_maps={1: (2, None, None), 2: (None, 2, None)},
    )
    with pytest.raises(CrystalError, match="2 heads, 1 tails"):
        schutzenberger(g)


def test_commutor_a1_pair_is_identity():
    b = build_irreducible(A1, (1,))
    assert commutor(b, b).mapping == (0, 1, 2, 3)


@pytest.mark.parametrize("cartan,lw,rw", [
    (A1, (1,), (2,)),
    (A1, (2,), (3,)),
    (A2, (1, 0), (0, 1)),
    (A2, (1, 0), (1, 0)),
    (A2, (1, 1), (1, 0)),
])
def test_commutor_matches_component_oracle(cartan, lw, rw):
    left = build_irreducible(cartan, lw)
    right = build_irreducible(cartan, rw)
    sigma = commutor(left, right)
    oracle = matched_component_bijection(tensor(left, right), tensor(right, left))
    assert sigma.mapping == oracle


@pytest.mark.parametrize("cartan,lw,rw", [
    (A1, (1,), (2,)),
    (A2, (1, 0), (0, 1)),
    (A2, (1, 1), (1, 0)),
])
def test_commutor_strict_and_involutive(cartan, lw, rw):
    left = build_irreducible(cartan, lw)
    right = build_irreducible(cartan, rw)
    there = commutor(left, right)
    back = commutor(right, left)
    assert there.is_strict_morphism()
    assert back.compose(there).mapping == tuple(range(there.domain.size))


def test_single_factor_reversal_is_identity():
    b = build_irreducible(A1, (2,))
    assert internal_cactus([b]).mapping == (0, 1, 2)


def test_internal_cactus_agrees_with_cached_table():
    weights = ((1,), (2,), (1,))
    factors = [build_irreducible(A1, w) for w in weights]
    rev = internal_cactus(factors)
    table = reversal_table(A1, weights)
    for b in rev.domain.elements():
        assert table[rev.domain.labels[b]] == rev.codomain.labels[rev(b)]


def test_reversal_table_involutive():
    weights = ((1, 0), (0, 1))
    fwd = reversal_table(A2, weights)
    bwd = reversal_table(A2, tuple(reversed(weights)))
    for flat, out in fwd.items():
        assert bwd[out] == flat


def test_reversal_table_preserves_weight():
    from cactus_crystal.crystal import product_of_weights
    weights = ((1,), (2,))
    fwd = reversal_table(A1, weights)
    p = product_of_weights(A1, weights)
    q = product_of_weights(A1, tuple(reversed(weights)))
    for flat, out in fwd.items():
        assert p.wt(p.index_of_label(flat)) == q.wt(q.index_of_label(out))


@pytest.mark.parametrize("cartan,lam,mu,nu", [
    (A1, (1,), (1,), (1,)),
    (A1, (2,), (1,), (3,)),
    (A2, (1, 0), (0, 1), (1, 0)),
    (A2, (1, 0), (1, 1), (0, 1)),
])
def test_hexagon_small(cartan, lam, mu, nu):
    assert hexagon_holds(cartan, lam, mu, nu)


def test_commutor_table_cached():
    a = commutor_table(A1, ((1,),), ((2,),))
    b = commutor_table(A1, ((1,),), ((2,),))
    assert a is b


def test_bijection_validation():
    b = build_irreducible(A1, (1,))
    with pytest.raises(CrystalError):
        CrystalBijection(b, b, (0,))
    with pytest.raises(CrystalError):
        CrystalBijection(b, b, (0, 0))
    ident = CrystalBijection(b, b, (0, 1))
    assert ident.inverse().mapping == (0, 1)
    assert ident.to_pairs() == [[0, 0], [1, 1]]
    assert ident.label_map() == {((1,),): ((1,),), ((2,),): ((2,),)}
