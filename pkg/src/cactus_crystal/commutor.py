"""The Schutzenberger involution and the crystal commutor.

xi is pinned per component by sending the highest element to the lowest and
extending through xi(f_i b) = e_{i*}(xi b).  The commutor is

    sigma(b1 (x) b2) = xi( xi(b2) (x) xi(b1) )

and the reversal of an m-fold product peels the first factor:

    sigma_m = sigma_{B1, Bm (x) .. (x) B2} o (id (x) sigma_{m-1}).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .cartan import star
from .crystal import (
    CrystalError,
    CrystalGraph,
    build_irreducible,
    component_ids,
    product_of_weights,
    tensor,
    tensor_many,
)


@dataclass
class CrystalBijection:
    """A bijection between element sets of two crystal graphs."""

    domain: CrystalGraph
    codomain: CrystalGraph
    mapping: tuple

    def __post_init__(self):
        if len(self.mapping) != self.domain.size:
            raise CrystalError("bijection does not cover the domain")
        if sorted(self.mapping) != list(range(self.codomain.size)):
            raise CrystalError("mapping is not a bijection onto the codomain")

    def __call__(self, b):
        return self.mapping[b]

    def inverse(self):
        inv = [None] * self.codomain.size
        for b, c in enumerate(self.mapping):
            inv[c] = b
        return CrystalBijection(self.codomain, self.domain, tuple(inv))

    def compose(self, other):
        """self after other (other first)."""
        return CrystalBijection(other.domain, self.codomain,
                                tuple(self.mapping[c] for c in other.mapping))

    def is_involution(self):
        return self.domain is self.codomain and all(
            self.mapping[self.mapping[b]] == b for b in self.domain.elements())

    def to_pairs(self):
        return [[b, self.mapping[b]] for b in self.domain.elements()]

    def label_map(self):
        return {self.domain.labels[b]: self.codomain.labels[c]
                for b, c in enumerate(self.mapping)}

    def is_strict_morphism(self):
        """Check weight, e and f are all intertwined edge by edge."""
        dom, cod = self.domain, self.codomain
        for b in dom.elements():
            if dom.wt(b) != cod.wt(self.mapping[b]):
                return False
            for i in dom.index_range():
                for op in ("f", "e"):
                    c = getattr(dom, op)(i, b)
                    c2 = getattr(cod, op)(i, self.mapping[b])
                    if (c is None) != (c2 is None):
                        return False
                    if c is not None and self.mapping[c] != c2:
                        return False
        return True


def schutzenberger(graph):
    """The involution xi of a normal crystal, as a CrystalBijection."""
    comp = component_ids(graph)
    n_comp = max(comp) + 1 if graph.size else 0
    members = [[] for _ in range(n_comp)]
    for b, c in enumerate(comp):
        members[c].append(b)
    xi = [None] * graph.size
    cartan = graph.cartan
    for group in members:
        heads = [b for b in group
                 if all(graph.e(i, b) is None for i in graph.index_range())]
        tails = [b for b in group
                 if all(graph.f(i, b) is None for i in graph.index_range())]
        if len(heads) != 1 or len(tails) != 1:
            raise CrystalError(
                "component is not normal: %d heads, %d tails" % (len(heads), len(tails)))
        xi[heads[0]] = tails[0]
        frontier = [heads[0]]
        while frontier:
            b = frontier.pop()
            for i in graph.index_range():
                c = graph.f(i, b)
                if c is None:
                    continue
                val = graph.e(star(cartan, i), xi[b])
                if val is None:
                    raise CrystalError("xi recursion ran off the crystal")
                if xi[c] is None:
                    xi[c] = val
                    frontier.append(c)
                elif xi[c] != val:
                    raise CrystalError("xi recursion is inconsistent")
    if any(v is None for v in xi):
        raise CrystalError("crystal is not generated from its heads by f_i")
    return CrystalBijection(graph, graph, tuple(xi))


def commutor(left, right):
    """sigma: left (x) right -> right (x) left."""
    t_lr = tensor(left, right)
    t_rl = tensor(right, left)
    xi_l = schutzenberger(left)
    xi_r = schutzenberger(right)
    xi_rl = schutzenberger(t_rl)
    nl, nr = left.size, right.size
    mapping = []
    for a in left.elements():
        for b in right.elements():
            swapped = xi_r(b) * nl + xi_l(a)
            mapping.append(xi_rl(swapped))
    return CrystalBijection(t_lr, t_rl, tuple(mapping))


def internal_cactus(factors):
    """Reversal bijection tensor(B1..Bm) -> tensor(Bm..B1) on flat id tuples."""
    if not factors:
        raise CrystalError("empty product has no reversal")
    domain = tensor_many(factors)
    codomain = tensor_many(list(reversed(factors)))
    if len(factors) == 1:
        return CrystalBijection(domain, codomain,
                                tuple(range(domain.size)))
    sub = internal_cactus(factors[1:])
    right = sub.codomain          # Bm (x) .. (x) B2, flat labels
    left = factors[0]
    comm = commutor(left, right)
    mapping = []
    for flat in domain.labels:
        tail_id = sub.domain.index_of_label(flat[1:])
        b_id = sub(tail_id)
        pair = comm(flat[0] * right.size + b_id)
        b2, a2 = comm.codomain.labels[pair]
        mapping.append(codomain.index_of_label(right.labels[b2] + (a2,)))
    return CrystalBijection(domain, codomain, tuple(mapping))


@lru_cache(maxsize=None)
def reversal_table(cartan, weights):
    """Flat-tuple reversal map for B(w_1) (x) .. (x) B(w_m), cached by weights.

    Returns a dict from entry tuples to entry tuples; the output entries index
    the factors in reversed order.
    """
    if len(weights) == 1:
        size = build_irreducible(cartan, weights[0]).size
        return {(a,): (a,) for a in range(size)}
    domain = product_of_weights(cartan, weights)
    sub = reversal_table(cartan, weights[1:])
    right = product_of_weights(cartan, tuple(reversed(weights[1:])))
    left = build_irreducible(cartan, weights[0])
    comm = commutor_table(cartan, (weights[0],), tuple(reversed(weights[1:])))
    out = {}
    for flat in domain.labels:
        rev_tail = sub[flat[1:]]
        b_id = right.index_of_label(rev_tail)
        b2, a2 = comm.codomain.labels[comm(flat[0] * right.size + b_id)]
        out[flat] = right.labels[b2] + (a2,)
    return out


def hexagon_holds(cartan, lam, mu, nu):
    """Both hexagon paths B_lam (x) B_mu (x) B_nu -> B_nu (x) B_mu (x) B_lam.

    Left: reverse (mu, nu), then move lam past the block; right: reverse
    (lam, mu), then move nu in front.  Returns True when the flat triples
    agree everywhere.
    """
    lam, mu, nu = tuple(lam), tuple(mu), tuple(nu)
    b_lam = build_irreducible(cartan, lam)
    b_mu = build_irreducible(cartan, mu)
    b_nu = build_irreducible(cartan, nu)
    inner_l = commutor_table(cartan, (mu,), (nu,))
    p_nm = product_of_weights(cartan, (nu, mu))
    outer_l = commutor_table(cartan, (lam,), (nu, mu))
    inner_r = commutor_table(cartan, (lam,), (mu,))
    p_ml = product_of_weights(cartan, (mu, lam))
    outer_r = commutor_table(cartan, (mu, lam), (nu,))
    for x in b_lam.elements():
        for y in b_mu.elements():
            for z in b_nu.elements():
                z1, y1 = inner_l.codomain.labels[inner_l(y * b_nu.size + z)]
                pid = p_nm.index_of_label((z1, y1))
                p2, x2 = outer_l.codomain.labels[outer_l(x * p_nm.size + pid)]
                left = p_nm.labels[p2] + (x2,)
                y3, x3 = inner_r.codomain.labels[inner_r(x * b_mu.size + y)]
                pid = p_ml.index_of_label((y3, x3))
                z4, p4 = outer_r.codomain.labels[outer_r(pid * b_nu.size + z)]
                right = (z4,) + p_ml.labels[p4]
                if left != right:
                    return False
    return True


@lru_cache(maxsize=None)
def commutor_table(cartan, left_weights, right_weights):
    """Cached commutor between two flat products given by weight tuples."""
    left = (build_irreducible(cartan, left_weights[0])
            if len(left_weights) == 1 else product_of_weights(cartan, left_weights))
    right = (build_irreducible(cartan, right_weights[0])
             if len(right_weights) == 1 else product_of_weights(cartan, right_weights))
    return commutor(left, right)
