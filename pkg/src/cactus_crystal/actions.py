"""Actions of the cactus family on products of irreducible crystals.

A point carries the tuple of highest weights of the factors together with one
element id per factor.  Interval generators s_ij apply the cached reversal of
the subproduct i..j to the entries and reverse the weight labels; permutation
generators act by pulling: entry k of the image is entry w(k) of the source.
Affine letters are straightened into virtual ones first.
"""

from __future__ import annotations

import os
import time
from dataclasses import dataclass
from itertools import permutations, product

from .cartan import cartan_to_json
from .commutor import reversal_table
from .crystal import build_irreducible
from .groups import (
    AffineR,
    AffineS,
    CactusGen,
    GroupError,
    GroupWord,
    MirabolicT,
    PermGen,
    _affine_gen_to_vc,
    defining_relation_families,
    mc_relation_suite,
)
from .perms import check_perm, mulclose, parity, transposition

MAX_POINTS_ENV = "CACTUS_CRYSTAL_MAX_POINTS"
DEFAULT_MAX_POINTS = 10 ** 6


def point_budget():
    raw = os.environ.get(MAX_POINTS_ENV)
    if raw is None:
        return DEFAULT_MAX_POINTS
    try:
        value = int(raw)
    except ValueError:
        raise GroupError("bad %s value %r" % (MAX_POINTS_ENV, raw)) from None
    if value <= 0:
        raise GroupError("%s must be positive" % MAX_POINTS_ENV)
    return value


@dataclass(frozen=True)
class LabeledPoint:
    weights: tuple
    entries: tuple

    def __post_init__(self):
        if len(self.weights) != len(self.entries):
            raise GroupError("weights and entries disagree in length")


def act(cartan, gen, point):
    n = len(point.weights)
    if isinstance(gen, CactusGen):
        if gen.j > n:
            raise GroupError("generator %s exceeds %d factors" % (gen, n))
        i, j = gen.i, gen.j
        table = reversal_table(cartan, point.weights[i - 1:j])
        new_entries = point.entries[:i - 1] + table[point.entries[i - 1:j]] \
            + point.entries[j:]
        new_weights = point.weights[:i - 1] + point.weights[i - 1:j][::-1] \
            + point.weights[j:]
        return LabeledPoint(new_weights, new_entries)
    if isinstance(gen, PermGen):
        w = gen.perm
        if len(w) != n:
            raise GroupError("generator %s wants %d factors, point has %d"
                             % (gen, len(w), n))
        return LabeledPoint(tuple(point.weights[w[k] - 1] for k in range(n)),
                            tuple(point.entries[w[k] - 1] for k in range(n)))
    if isinstance(gen, MirabolicT):
        if gen.i == 0:
            raise GroupError("t0 does not act on the factors")
        return act(cartan, PermGen(transposition(n, gen.i, gen.i + 1)), point)
    if isinstance(gen, (AffineS, AffineR)):
        for g in _affine_gen_to_vc(gen, n):
            point = act(cartan, g, point)
        return point
    raise GroupError("unknown generator %r" % (gen,))


def act_word(cartan, word, point):
    """Leftmost letter acts first."""
    gens = word.gens if isinstance(word, GroupWord) else tuple(word)
    for g in gens:
        point = act(cartan, g, point)
    return point


class ActionContext:
    """Convenience wrapper fixing the Cartan datum and a base weight tuple."""

    def __init__(self, cartan, weights):
        self.cartan = cartan
        self.weights = tuple(tuple(w) for w in weights)
        for w in self.weights:
            build_irreducible(cartan, w)

    @property
    def n(self):
        return len(self.weights)

    def factor(self, k):
        return build_irreducible(self.cartan, self.weights[k - 1])

    def points(self, weights=None):
        return iter_points(self.cartan, self.weights if weights is None else weights)

    def orderings(self):
        return weight_orderings(self.weights)

    def act(self, gen, point):
        return act(self.cartan, gen, point)

    def act_word(self, word, point):
        return act_word(self.cartan, word, point)

    def orbit(self, gens, point, max_points=None):
        return orbit(self.cartan, gens, point, max_points=max_points)


def iter_points(cartan, weights):
    weights = tuple(tuple(w) for w in weights)
    sizes = [build_irreducible(cartan, w).size for w in weights]
    for entries in product(*(range(s) for s in sizes)):
        yield LabeledPoint(weights, entries)


def count_points(cartan, weights):
    total = 1
    for w in weights:
        total *= build_irreducible(cartan, tuple(w)).size
    return total


def weight_orderings(weights):
    return sorted(set(permutations(tuple(tuple(w) for w in weights))))


def verify_relations(cartan, kind, n, weight_tuples, max_points=None, threads=1,
                     max_failures=5):
    """Exhaustively check every defining relation on every supplied point.

    weight_tuples is a list of weight tuples of length n; the point space is
    their disjoint union.  Returns a report dict; report["passed"] is the
    verdict and report["failures"] holds up to max_failures witnesses.
    """
    budget = max_points if max_points is not None else point_budget()
    tuples = [tuple(tuple(w) for w in t) for t in weight_tuples]
    for t in tuples:
        if len(t) != n:
            raise GroupError("weight tuple %r does not have %d factors" % (t, n))
    total = sum(count_points(cartan, t) for t in tuples)
    if total > budget:
        raise GroupError(
            "point space has %d points, over the budget of %d; "
            "raise %s to override" % (total, budget, MAX_POINTS_ENV))
    relations = (mc_relation_suite(n) if kind == "MC"
                 else defining_relation_families(kind, n))
    points = [p for t in tuples for p in iter_points(cartan, t)]

    def check_one(item):
        family, lhs, rhs = item
        bad = []
        for p in points:
            left = act_word(cartan, lhs, p)
            right = act_word(cartan, rhs, p)
            if left != right:
                bad.append({"family": family, "lhs": str(lhs), "rhs": str(rhs),
                            "point": [list(p.weights), list(p.entries)],
                            "got": [list(left.weights), list(left.entries)],
                            "expected": [list(right.weights), list(right.entries)]})
                if len(bad) >= max_failures:
                    break
        return family, bad

    start = time.monotonic()
    families = {}
    failures = []
    if threads > 1:
        from concurrent.futures import ThreadPoolExecutor
        with ThreadPoolExecutor(max_workers=threads) as pool:
            results = list(pool.map(check_one, relations))
    else:
        results = [check_one(r) for r in relations]
    for family, bad in results:
        families.setdefault(family, {"relations": 0, "instances": 0})
        families[family]["relations"] += 1
        families[family]["instances"] += len(points)
        if len(failures) < max_failures:
            failures.extend(bad[:max_failures - len(failures)])
    return {
        "cartan": cartan_to_json(cartan),
        "kind": kind,
        "n": n,
        "weight_tuples": [[list(w) for w in t] for t in tuples],
        "points": total,
        "relations": len(relations),
        "families": families,
        "failures": failures,
        "passed": not failures,
        "duration_s": round(time.monotonic() - start, 3),
    }


def orbit(cartan, gens, point, max_points=None):
    """Deterministic BFS orbit under a list of generators or words."""
    budget = max_points if max_points is not None else point_budget()
    flat = []
    for g in gens:
        flat.append(tuple(g.gens) if isinstance(g, GroupWord) else (g,))
    seen = {point}
    frontier = [point]
    while frontier:
        nxt = []
        for p in frontier:
            for gseq in flat:
                q = act_word(cartan, gseq, p)
                if q not in seen:
                    seen.add(q)
                    nxt.append(q)
                    if len(seen) > budget:
                        raise GroupError("orbit exceeded the budget of %d points"
                                         % budget)
        frontier = sorted(nxt, key=lambda r: (r.weights, r.entries))
    return sorted(seen, key=lambda r: (r.weights, r.entries))


def permutation_image(states, maps, limit=None):
    """Closure of the permutations induced on a finite state list.

    maps is a list of dicts, each a bijection of the states.  Returns degree,
    order, the set of one-line tuples, and the even/odd census.
    """
    index = {s: k for k, s in enumerate(states)}
    gens = []
    for m in maps:
        img = tuple(index[m[s]] + 1 for s in states)
        gens.append(check_perm(img))
    group = mulclose(gens, limit=limit)
    evens = sum(1 for g in group if parity(g) == 0)
    return {"degree": len(states), "order": len(group), "group": group,
            "even": evens, "odd": len(group) - evens}


def contains_alternating(group, degree):
    """Does the set of one-line tuples contain every even permutation?"""
    if degree > 8:
        raise GroupError("alternating membership check capped at degree 8")
    return all(p in group for p in permutations(range(1, degree + 1))
               if parity(p) == 0)
