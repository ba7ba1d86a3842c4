"""Finite crystal graphs: irreducible type-A crystals on tableaux, tensor
products, components, and normality checking.

Conventions, fixed once and used everywhere:

* eps_i(b) is the number of times e_i applies to b, phi_i(b) the number of
  times f_i applies.
* On a two-fold product, e_i acts on the first factor iff
  eps_i(b1) > phi_i(b2), and f_i acts on the first factor iff
  eps_i(b1) >= phi_i(b2); otherwise they act on the second factor.  A move
  into an undefined operator makes the whole move undefined.

The product rule determines a bracket rule on words in the defining crystal:
mark i as '+' and i+1 as '-', cancel adjacent "-+" pairs, then e_i raises the
leftmost surviving '-' and f_i lowers the rightmost surviving '+'.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import NamedTuple

from .cartan import (
    CartanData,
    cartan_from_json,
    cartan_to_json,
    cartan_type_a,
    simple_root,
    weight_add,
    weight_sub,
)


class CrystalError(ValueError):
    pass


class StringStats(NamedTuple):
    eps: int
    phi: int


@dataclass
class CrystalGraph:
    """A finite set with weights and partial raising/lowering maps.

    Treated as immutable after construction; ids are 0..size-1 and stable.
    ``labels`` carries an arbitrary hashable per element (tableaux for
    irreducibles, id tuples for products) so that derived graphs remember
    where their elements came from.
    """

    cartan: CartanData
    wts: tuple
    f_maps: dict          # i -> tuple, entry None or target id
    e_maps: dict = field(default=None)
    labels: tuple = None
    _eps: dict = field(default=None, repr=False)
    _phi: dict = field(default=None, repr=False)
    _label_index: dict = field(default=None, repr=False)

    def __post_init__(self):
        if self.labels is None:
            self.labels = tuple(range(self.size))
        if self.e_maps is None:
            self.e_maps = {i: _invert_partial(self.f_maps[i], self.size, i)
                           for i in self.f_maps}
        self._label_index = {lbl: b for b, lbl in enumerate(self.labels)}
        if len(self._label_index) != self.size:
            raise CrystalError("element labels are not distinct")
        self._check_axioms()
        self._eps, self._phi = {}, {}
        for i in self.index_range():
            self._eps[i], self._phi[i] = _string_walk(self.e_maps[i], self.f_maps[i])

    # -- basic access ------------------------------------------------------

    @property
    def size(self):
        return len(self.wts)

    def elements(self):
        return range(self.size)

    def index_range(self):
        return self.cartan.index_range()

    def wt(self, b):
        return self.wts[b]

    def f(self, i, b):
        return self.f_maps[i][b]

    def e(self, i, b):
        return self.e_maps[i][b]

    def eps(self, i, b):
        return self._eps[i][b]

    def phi(self, i, b):
        return self._phi[i][b]

    def string_stats(self, b, i):
        return StringStats(self._eps[i][b], self._phi[i][b])

    def index_of_label(self, label):
        return self._label_index[label]

    def highest_weight_elements(self):
        return [b for b in self.elements()
                if all(self.e_maps[i][b] is None for i in self.index_range())]

    def lowest_weight_elements(self):
        return [b for b in self.elements()
                if all(self.f_maps[i][b] is None for i in self.index_range())]

    # -- validation --------------------------------------------------------

    def _check_axioms(self):
        for i in self.index_range():
            alpha = simple_root(self.cartan, i)
            f_map, e_map = self.f_maps[i], self.e_maps[i]
            for b in self.elements():
                c = e_map[b]
                if c is not None and self.wts[c] != weight_add(self.wts[b], alpha):
                    raise CrystalError(
                        "axiom (1): wt(e_%d %r) != wt + alpha_%d at element %d"
                        % (i, self.labels[b], i, b))
                c = f_map[b]
                if c is not None and self.wts[c] != weight_sub(self.wts[b], alpha):
                    raise CrystalError(
                        "axiom (2): wt(f_%d %r) != wt - alpha_%d at element %d"
                        % (i, self.labels[b], i, b))
                c = e_map[b]
                if c is not None and f_map[c] != b:
                    raise CrystalError(
                        "axiom (3): f_%d e_%d != id at element %d" % (i, i, b))
                c = f_map[b]
                if c is not None and e_map[c] != b:
                    raise CrystalError(
                        "axiom (4): e_%d f_%d != id at element %d" % (i, i, b))


def _invert_partial(f_map, size, i):
    e_map = [None] * size
    for b, c in enumerate(f_map):
        if c is None:
            continue
        if e_map[c] is not None:
            raise CrystalError(
                "axiom (3): element %d has two f_%d-preimages" % (c, i))
        e_map[c] = b
    return tuple(e_map)


def _string_walk(e_map, f_map):
    """eps/phi arrays for one index, walking each i-string top to bottom."""
    size = len(f_map)
    eps, phi = [None] * size, [None] * size
    for top in range(size):
        if e_map[top] is not None:
            continue
        chain = [top]
        while f_map[chain[-1]] is not None:
            chain.append(f_map[chain[-1]])
        length = len(chain) - 1
        for k, b in enumerate(chain):
            eps[b], phi[b] = k, length - k
    if any(v is None for v in eps):
        raise CrystalError("broken i-string structure")
    return tuple(eps), tuple(phi)


# ---------------------------------------------------------------------------
# irreducible type-A crystals on semistandard tableaux


def _is_type_a_matrix(cartan):
    r = cartan.rank
    return cartan.matrix == cartan_type_a(r).matrix if r >= 1 else False


def shape_of_weight(weight):
    """Partition whose column counts are the fundamental coefficients."""
    rank = len(weight)
    rows = []
    for i in range(rank):
        length = sum(weight[i:])
        if length > 0:
            rows.append(length)
    return tuple(rows)


def _semistandard_tableaux(shape, max_entry):
    """All semistandard fillings, rows weakly and columns strictly increasing."""
    if not shape:
        return [()]
    cells = [(r, c) for r, row_len in enumerate(shape) for c in range(row_len)]
    results = []
    filling = {}

    def fill(k):
        if k == len(cells):
            results.append(tuple(
                tuple(filling[(r, c)] for c in range(shape[r]))
                for r in range(len(shape))))
            return
        r, c = cells[k]
        lo = 1
        if c > 0:
            lo = max(lo, filling[(r, c - 1)])
        if r > 0:
            lo = max(lo, filling[(r - 1, c)] + 1)
        for v in range(lo, max_entry + 1):
            filling[(r, c)] = v
            fill(k + 1)
        filling.pop((r, c), None)

    fill(0)
    return results


def reading_order(shape):
    """Cell order whose word realizes the product rule on tableaux.

    Columns left to right, bottom to top within each column; this is the
    mirror of the usual far-eastern reading, matching the mirrored product
    rule used here.
    """
    n_cols = shape[0] if shape else 0
    order = []
    for c in range(n_cols):
        col_height = sum(1 for row_len in shape if row_len > c)
        for r in reversed(range(col_height)):
            order.append((r, c))
    return order


def _word_of(tableau, order):
    return [tableau[r][c] for r, c in order]


def _bracket_positions(word, i):
    """(position of f_i move, position of e_i move) under the bracket rule."""
    stack = []            # unmatched '-' positions
    plus_survivors = []
    for pos, letter in enumerate(word):
        if letter == i:
            if stack:
                stack.pop()
            else:
                plus_survivors.append(pos)
        elif letter == i + 1:
            stack.append(pos)
    f_pos = plus_survivors[-1] if plus_survivors else None
    e_pos = stack[0] if stack else None
    return f_pos, e_pos


def _tableau_weight(tableau, rank):
    counts = [0] * (rank + 2)
    for row in tableau:
        for v in row:
            counts[v] += 1
    return tuple(counts[i] - counts[i + 1] for i in range(1, rank + 1))


@lru_cache(maxsize=None)
def build_irreducible(cartan, weight):
    """The connected normal crystal with highest weight ``weight``.

    Realized on semistandard Young tableaux; only type-A Cartan matrices are
    supported.  Elements are sorted by their row tuples, so the ids are stable
    across runs.
    """
    if len(weight) != cartan.rank:
        raise CrystalError("weight length does not match rank")
    if any(c < 0 for c in weight):
        raise CrystalError("highest weight must be dominant")
    if not _is_type_a_matrix(cartan):
        raise CrystalError(
            "irreducible crystals are only constructed for type A matrices")
    rank = cartan.rank
    shape = shape_of_weight(weight)
    tableaux = sorted(_semistandard_tableaux(shape, rank + 1))
    order = reading_order(shape)
    index = {t: k for k, t in enumerate(tableaux)}
    wts = tuple(_tableau_weight(t, rank) for t in tableaux)

    def moved(tableau, pos, delta):
        r, c = order[pos]
        rows = [list(row) for row in tableau]
        rows[r][c] += delta
        return tuple(tuple(row) for row in rows)

    f_maps, e_maps = {}, {}
    for i in cartan.index_range():
        f_arr, e_arr = [], []
        for t in tableaux:
            word = _word_of(t, order)
            f_pos, e_pos = _bracket_positions(word, i)
            for pos, delta, arr in ((f_pos, 1, f_arr), (e_pos, -1, e_arr)):
                if pos is None:
                    arr.append(None)
                    continue
                image = moved(t, pos, delta)
                if image not in index:
                    raise CrystalError(
                        "tableau operator left the semistandard family")
                arr.append(index[image])
        f_maps[i] = tuple(f_arr)
        e_maps[i] = tuple(e_arr)

    graph = CrystalGraph(cartan, wts, f_maps, e_maps, labels=tuple(tableaux))
    hw = graph.highest_weight_elements()
    if len(hw) != 1 or graph.wt(hw[0]) != weight:
        raise CrystalError("tableau crystal is not connected with head %r" % (weight,))
    if len(set(component_ids(graph))) != 1:
        raise CrystalError("tableau crystal is not connected")
    return graph


def component_ids(graph):
    """Component index per element, by BFS over e- and f-edges."""
    comp = [None] * graph.size
    next_comp = 0
    for start in graph.elements():
        if comp[start] is not None:
            continue
        comp[start] = next_comp
        frontier = [start]
        while frontier:
            b = frontier.pop()
            for i in graph.index_range():
                for nb in (graph.f(i, b), graph.e(i, b)):
                    if nb is not None and comp[nb] is None:
                        comp[nb] = next_comp
                        frontier.append(nb)
        next_comp += 1
    return comp


# ---------------------------------------------------------------------------
# tensor products


def tensor(left, right, flatten=False):
    """Tensor product crystal; elements are id pairs (or flattened id tuples).

    The element with label (a, b) has id a * right.size + b.
    """
    if left.cartan != right.cartan:
        raise CrystalError("tensor factors live over different Cartan data")
    cartan = left.cartan
    pairs = [(a, b) for a in left.elements() for b in right.elements()]
    if flatten:
        labels = tuple(_as_tuple(left.labels[a]) + (b,) for a, b in pairs)
    else:
        labels = tuple(pairs)
    wts = tuple(weight_add(left.wt(a), right.wt(b)) for a, b in pairs)
    nright = right.size
    f_maps, e_maps = {}, {}
    for i in cartan.index_range():
        f_arr, e_arr = [], []
        for a, b in pairs:
            if left.eps(i, a) >= right.phi(i, b):
                fa = left.f(i, a)
                f_arr.append(None if fa is None else fa * nright + b)
            else:
                fb = right.f(i, b)
                f_arr.append(None if fb is None else a * nright + fb)
            if left.eps(i, a) > right.phi(i, b):
                ea = left.e(i, a)
                e_arr.append(None if ea is None else ea * nright + b)
            else:
                eb = right.e(i, b)
                e_arr.append(None if eb is None else a * nright + eb)
        f_maps[i] = tuple(f_arr)
        e_maps[i] = tuple(e_arr)
    return CrystalGraph(cartan, wts, f_maps, e_maps, labels=labels)


def _as_tuple(label):
    return label if isinstance(label, tuple) else (label,)


def tensor_many(factors):
    """Left-fold tensor with flat id-tuple labels: labels are (a_1, .., a_m)."""
    if not factors:
        raise CrystalError("empty tensor product")
    graph = factors[0]
    if len(factors) == 1:
        return CrystalGraph(graph.cartan, graph.wts, graph.f_maps, graph.e_maps,
                            labels=tuple((b,) for b in graph.elements()))
    graph = CrystalGraph(graph.cartan, graph.wts, graph.f_maps, graph.e_maps,
                         labels=tuple((b,) for b in graph.elements()))
    for nxt in factors[1:]:
        graph = tensor(graph, nxt, flatten=True)
    return graph


@lru_cache(maxsize=None)
def product_of_weights(cartan, weights):
    """Cached flat tensor product of irreducibles B(w_1) x .. x B(w_m)."""
    return tensor_many([build_irreducible(cartan, w) for w in weights])


# ---------------------------------------------------------------------------
# components, normality, multiplicity


def components(graph):
    """Connected components as (highest element id, sub-crystal) pairs.

    Every component must contain exactly one element killed by all e_i.
    Sub-crystals inherit the parent labels, so parent ids are recoverable via
    ``index_of_label``.
    """
    comp = component_ids(graph)
    n_comp = max(comp) + 1 if graph.size else 0
    members = [[] for _ in range(n_comp)]
    for b, c in enumerate(comp):
        members[c].append(b)
    out = []
    for group in members:
        heads = [b for b in group
                 if all(graph.e(i, b) is None for i in graph.index_range())]
        if len(heads) != 1:
            raise CrystalError(
                "component %r has %d highest elements" % (sorted(group)[:4], len(heads)))
        out.append((heads[0], _subgraph(graph, sorted(group))))
    out.sort(key=lambda pair: pair[0])
    return out


def _subgraph(graph, members):
    local = {b: k for k, b in enumerate(members)}
    wts = tuple(graph.wt(b) for b in members)
    labels = tuple(graph.labels[b] for b in members)
    f_maps, e_maps = {}, {}
    for i in graph.index_range():
        f_maps[i] = tuple(
            None if graph.f(i, b) is None else local[graph.f(i, b)] for b in members)
        e_maps[i] = tuple(
            None if graph.e(i, b) is None else local[graph.e(i, b)] for b in members)
    return CrystalGraph(graph.cartan, wts, f_maps, e_maps, labels=labels)


def crystal_isomorphic(graph, reference, start, ref_start):
    """Does f-edge BFS from the given heads give a full bijection?"""
    if graph.size != reference.size:
        return False
    partner = {start: ref_start}
    frontier = [start]
    while frontier:
        b = frontier.pop()
        rb = partner[b]
        if graph.wt(b) != reference.wt(rb):
            return False
        for i in graph.index_range():
            c, rc = graph.f(i, b), reference.f(i, rb)
            if (c is None) != (rc is None):
                return False
            if c is None:
                continue
            if c in partner:
                if partner[c] != rc:
                    return False
            else:
                partner[c] = rc
                frontier.append(c)
    return len(partner) == graph.size and len(set(partner.values())) == graph.size


def normality_report(graph):
    """Compare every component against the reference crystal of its head.

    Returns a dict with status "normal", "not_normal", or "unverifiable"
    (the latter when no reference construction exists for the Cartan data).
    """
    if not _is_type_a_matrix(graph.cartan):
        return {"status": "unverifiable",
                "detail": "no reference construction for this Cartan matrix"}
    for head, sub in components(graph):
        wt = graph.wt(head)
        if any(c < 0 for c in wt):
            return {"status": "not_normal", "head": head,
                    "detail": "highest weight %r is not dominant" % (wt,)}
        reference = build_irreducible(graph.cartan, wt)
        sub_head = sub.index_of_label(graph.labels[head])
        ref_head = reference.highest_weight_elements()[0]
        if not crystal_isomorphic(sub, reference, sub_head, ref_head):
            return {"status": "not_normal", "head": head,
                    "detail": "component at %d is not B(%r)" % (head, wt)}
    return {"status": "normal"}


def is_normal(graph):
    report = normality_report(graph)
    if report["status"] == "unverifiable":
        raise CrystalError("normality unverifiable: " + report["detail"])
    return report["status"] == "normal"


def multiplicity_set(tensor_graph, mu):
    """Ids of highest elements of weight mu, e.g. in a tensor product."""
    return tuple(b for b in tensor_graph.highest_weight_elements()
                 if tensor_graph.wt(b) == mu)


# ---------------------------------------------------------------------------
# import/export


def export_graph(graph):
    edges = []
    for i in graph.index_range():
        for b in graph.elements():
            c = graph.f(i, b)
            if c is not None:
                edges.append({"i": i, "from": b, "to": c})
    return {
        "cartan": cartan_to_json(graph.cartan),
        "elements": [{"id": b, "wt": list(graph.wt(b))} for b in graph.elements()],
        "edges": edges,
    }


def import_graph(obj):
    """Build a crystal from JSON data, validating the four axioms."""
    cartan = cartan_from_json(obj["cartan"])
    elements = obj["elements"]
    ids = [el["id"] for el in elements]
    if sorted(ids) != list(range(len(ids))):
        raise CrystalError("element ids must be 0..n-1")
    wts = [None] * len(ids)
    for el in elements:
        wt = tuple(el["wt"])
        if len(wt) != cartan.rank:
            raise CrystalError("weight length does not match rank")
        wts[el["id"]] = wt
    f_maps = {i: [None] * len(ids) for i in cartan.index_range()}
    for edge in obj["edges"]:
        i, src, dst = edge["i"], edge["from"], edge["to"]
        if i not in f_maps:
            raise CrystalError("edge colour %r out of range" % (i,))
        if not (0 <= src < len(ids) and 0 <= dst < len(ids)):
            raise CrystalError("edge endpoint out of range")
        if f_maps[i][src] is not None:
            raise CrystalError("f_%d defined twice at element %d" % (i, src))
        f_maps[i][src] = dst
    f_maps = {i: tuple(arr) for i, arr in f_maps.items()}
    return CrystalGraph(cartan, tuple(wts), f_maps)


_DOT_COLOURS = ["red", "blue", "darkgreen", "orange", "purple", "brown", "cyan4"]


def to_dot(graph, name="crystal"):
    lines = ["digraph %s {" % name, "  rankdir=TB;"]
    for b in graph.elements():
        lines.append('  n%d [label="%d:%s"];' % (b, b, ",".join(map(str, graph.wt(b)))))
    for i in graph.index_range():
        colour = _DOT_COLOURS[(i - 1) % len(_DOT_COLOURS)]
        for b in graph.elements():
            c = graph.f(i, b)
            if c is not None:
                lines.append('  n%d -> n%d [label="%d", color=%s];' % (b, c, i, colour))
    lines.append("}")
    return "\n".join(lines) + "\n"
