"""Cactus group family: plain, virtual, mirabolic and affine flavours.

Words are tuples of generator tokens tagged with a flavour:

  C   interval reversers s_ij, 1 <= i < j <= n
  vC  s_ij together with arbitrary permutations w of the factors
  MC  s_ij together with adjacent swaps t_i; t_0 is allowed as a letter so
      that the distinguished words in the flavour make sense, but it has no
      image among the virtual generators
  AC  cyclic interval reversers s_ij (i != j, wrapping allowed) and the
      rotation r

The defining relations of C are the involutions, commutation of disjoint
intervals, and conjugation of nested intervals.  vC adds the symmetric group
multiplication table and the cabled relations w s_ij w^{-1} = s(cabling(w)) for
translations.  AC replaces nesting by its cyclic version and adds r^n = 1 and
r s_ij r^{-1} = s_{i+1,j+1}.  MC has no known presentation, so asking for its
relations raises; its verification goes through the vC image instead.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from . import perms
from .perms import (
    check_perm,
    compose,
    cyclic_interval,
    cyclic_reversal,
    identity,
    interval_reversal,
    inverse,
    long_cycle,
    power,
    transposition,
)


class GroupError(ValueError):
    pass


@dataclass(frozen=True)
class CactusGen:
    i: int
    j: int

    def __str__(self):
        return "s%d_%d" % (self.i, self.j)


@dataclass(frozen=True)
class PermGen:
    perm: tuple

    def __str__(self):
        return perms.format_perm(self.perm)


@dataclass(frozen=True)
class MirabolicT:
    i: int

    def __str__(self):
        return "t%d" % self.i


@dataclass(frozen=True)
class AffineS:
    i: int
    j: int

    def __str__(self):
        return "s%d_%d" % (self.i, self.j)


@dataclass(frozen=True)
class AffineR:
    def __str__(self):
        return "r"


KINDS = ("C", "vC", "MC", "AC")


def _check_generator(gen, kind, n):
    if kind == "C":
        allowed = (CactusGen,)
    elif kind == "vC":
        allowed = (CactusGen, PermGen)
    elif kind == "MC":
        allowed = (CactusGen, MirabolicT)
    elif kind == "AC":
        allowed = (AffineS, AffineR)
    else:
        raise GroupError("unknown flavour %r" % (kind,))
    if not isinstance(gen, allowed):
        raise GroupError("%s is not a %s generator" % (gen, kind))
    if isinstance(gen, CactusGen):
        if not 1 <= gen.i < gen.j <= n:
            raise GroupError("bad interval s%d_%d for n=%d" % (gen.i, gen.j, n))
    elif isinstance(gen, PermGen):
        check_perm(gen.perm)
        if len(gen.perm) != n:
            raise GroupError("permutation length %d, expected %d" % (len(gen.perm), n))
    elif isinstance(gen, MirabolicT):
        if not 0 <= gen.i <= n - 1:
            raise GroupError("bad index t%d for n=%d" % (gen.i, n))
    elif isinstance(gen, AffineS):
        if gen.i == gen.j or not (1 <= gen.i <= n and 1 <= gen.j <= n):
            raise GroupError("bad cyclic interval s%d_%d for n=%d" % (gen.i, gen.j, n))


@dataclass(frozen=True)
class GroupWord:
    kind: str
    n: int
    gens: tuple

    def __post_init__(self):
        if self.kind not in KINDS:
            raise GroupError("unknown flavour %r" % (self.kind,))
        if self.n < 2:
            raise GroupError("need n >= 2")
        for g in self.gens:
            _check_generator(g, self.kind, self.n)

    def __mul__(self, other):
        if (self.kind, self.n) != (other.kind, other.n):
            raise GroupError("cannot concatenate words of different flavours")
        return GroupWord(self.kind, self.n, self.gens + other.gens)

    def __len__(self):
        return len(self.gens)

    def __str__(self):
        return format_word(self)


def word(kind, n, gens):
    return GroupWord(kind, n, tuple(gens))


def inverse_word(w):
    """Formal inverse; every generator is an involution except r."""
    out = []
    for g in reversed(w.gens):
        if isinstance(g, PermGen):
            out.append(PermGen(inverse(g.perm)))
        elif isinstance(g, AffineR):
            out.extend([AffineR()] * (w.n - 1))
        else:
            out.append(g)
    return GroupWord(w.kind, w.n, tuple(out))


def format_word(w):
    return " ".join(str(g) for g in w.gens) if w.gens else "1"


def parse_word(text, kind, n):
    gens = []
    for tok in text.split():
        if tok == "1":
            continue
        gens.append(_parse_token(tok, kind))
    return GroupWord(kind, n, tuple(gens))


def _parse_token(tok, kind):
    if tok == "r":
        return AffineR()
    if tok.startswith("w["):
        return PermGen(perms.parse_perm(tok))
    if tok.startswith("t"):
        try:
            return MirabolicT(int(tok[1:]))
        except ValueError:
            raise GroupError("bad token %r" % tok) from None
    if tok.startswith("s"):
        body = tok[1:]
        if "_" in body:
            a, _, b = body.partition("_")
        elif len(body) == 2:
            a, b = body[0], body[1]
        else:
            raise GroupError("bad token %r" % tok)
        try:
            i, j = int(a), int(b)
        except ValueError:
            raise GroupError("bad token %r" % tok) from None
        return AffineS(i, j) if kind == "AC" else CactusGen(i, j)
    raise GroupError("bad token %r" % tok)


def _mod1(x, n):
    return (x - 1) % n + 1


def cabling(u, i, j, n):
    """Replace the point u^{-1}-sees-at-i by the whole block [i, j].

    u is a permutation of 1..n-(j-i); the result is the permutation of 1..n
    that moves the block i..j rigidly to start at u(i) and keeps the relative
    order of everything else.
    """
    q = j - i
    if not (1 <= i < j <= n):
        raise GroupError("bad interval [%d, %d] for n=%d" % (i, j, n))
    if len(u) != n - q:
        raise GroupError("cabling needs a permutation of 1..%d" % (n - q))
    check_perm(u)
    p = u[i - 1]
    w = []
    for a in range(1, n + 1):
        if a < i:
            b = u[a - 1]
            w.append(b if b < p else b + q)
        elif a <= j:
            w.append(p + a - i)
        else:
            b = u[a - q - 1]
            w.append(b if b < p else b + q)
    return check_perm(w)


def _standard_pairs(n):
    return [(i, j) for i, j in combinations(range(1, n + 1), 2)]


def _cyclic_pairs(n):
    return [(i, j) for i in range(1, n + 1) for j in range(1, n + 1) if i != j]


def _contained_cyclically(n, outer, inner):
    """Is [k, l] a subinterval of [i, j] in the linear order the latter carries?"""
    i, j = outer
    k, l = inner
    pts = cyclic_interval(n, i, j)
    if k not in pts or l not in pts:
        return False
    return pts.index(k) <= pts.index(l)


def defining_relation_families(kind, n):
    """List of (family, lhs, rhs) word pairs presenting the flavour."""
    if kind == "MC":
        raise GroupError("the mirabolic flavour has no known presentation")
    rels = []
    if kind in ("C", "vC"):
        def w_(gens):
            return GroupWord(kind, n, tuple(gens))
        for i, j in _standard_pairs(n):
            s = CactusGen(i, j)
            rels.append(("involution", w_([s, s]), w_([])))
        for (i, j), (k, l) in combinations(_standard_pairs(n), 2):
            if set(range(i, j + 1)).isdisjoint(range(k, l + 1)):
                a, b = CactusGen(i, j), CactusGen(k, l)
                rels.append(("disjoint", w_([a, b]), w_([b, a])))
        for i, j in _standard_pairs(n):
            for k, l in _standard_pairs(n):
                if (k, l) != (i, j) and i <= k and l <= j:
                    outer, inner = CactusGen(i, j), CactusGen(k, l)
                    flipped = CactusGen(i + j - l, i + j - k)
                    rels.append(("nesting", w_([outer, inner, outer]), w_([flipped])))
    if kind == "vC":
        for u in perms.all_perms(n):
            for v in perms.all_perms(n):
                rels.append(("perm_table",
                             w_([PermGen(u), PermGen(v)]),
                             w_([PermGen(compose(u, v))])))
        for i, j in _standard_pairs(n):
            q = j - i
            for u in perms.all_perms(n - q):
                w = cabling(u, i, j, n)
                image = CactusGen(w[i - 1], w[i - 1] + q)
                rels.append(("cabled",
                             w_([PermGen(w), CactusGen(i, j), PermGen(inverse(w))]),
                             w_([image])))
    if kind == "AC":
        def a_(gens):
            return GroupWord("AC", n, tuple(gens))
        pairs = _cyclic_pairs(n)
        for i, j in pairs:
            s = AffineS(i, j)
            rels.append(("involution", a_([s, s]), a_([])))
        for (i, j), (k, l) in combinations(pairs, 2):
            if set(cyclic_interval(n, i, j)).isdisjoint(cyclic_interval(n, k, l)):
                a, b = AffineS(i, j), AffineS(k, l)
                rels.append(("disjoint", a_([a, b]), a_([b, a])))
        for i, j in pairs:
            for k, l in pairs:
                if (k, l) != (i, j) and _contained_cyclically(n, (i, j), (k, l)):
                    outer, inner = AffineS(i, j), AffineS(k, l)
                    flipped = AffineS(_mod1(i + j - l, n), _mod1(i + j - k, n))
                    rels.append(("nesting", a_([outer, inner, outer]), a_([flipped])))
        rels.append(("rotation_order", a_([AffineR()] * n), a_([])))
        for i, j in pairs:
            shifted = AffineS(_mod1(i + 1, n), _mod1(j + 1, n))
            rels.append(("rotation_shift",
                         a_([AffineR(), AffineS(i, j)] + [AffineR()] * (n - 1)),
                         a_([shifted])))
    if not rels:
        raise GroupError("unknown flavour %r" % (kind,))
    return rels


def defining_relations(kind, n):
    return [(lhs, rhs) for _, lhs, rhs in defining_relation_families(kind, n)]


def mc_relation_suite(n):
    """Relations the vC image of the mirabolic flavour must satisfy.

    Not a presentation: the t_i need not braid.  The suite is the involutions,
    commutation of distant swaps, conjugation of swap-disjoint intervals (the
    cabled relations whose permutation is a translating transposition), and
    the interval relations inherited from the plain flavour.
    """
    def w_(gens):
        return GroupWord("MC", n, tuple(gens))
    rels = []
    for i in range(1, n):
        rels.append(("t_involution", w_([MirabolicT(i), MirabolicT(i)]), w_([])))
    for i in range(1, n):
        for j in range(i + 2, n):
            a, b = MirabolicT(i), MirabolicT(j)
            rels.append(("t_disjoint", w_([a, b]), w_([b, a])))
    for i in range(1, n):
        for k, l in _standard_pairs(n):
            if {i, i + 1}.isdisjoint(range(k, l + 1)):
                t, s = MirabolicT(i), CactusGen(k, l)
                rels.append(("t_conjugation", w_([t, s, t]), w_([s])))
    for fam, lhs, rhs in defining_relation_families("C", n):
        rels.append(("interval_" + fam,
                     w_(lhs.gens), w_(rhs.gens)))
    return rels


def mc_s0j_word(j, n):
    """The distinguished extra generators: t_0, t_0 t_1 t_0, t_0 t_1 t_0 t_2 t_1 t_0, ..

    The word for index j concatenates the descending runs t_m t_{m-1} .. t_0
    for m = 0 .. j.  It lives in the flavour on n factors with the t_0 letter
    allowed; its symmetric-group projection reverses the stretch {0..j+1}.
    """
    if not 0 <= j <= n - 1:
        raise GroupError("index %d out of range for n=%d" % (j, n))
    gens = []
    for m in range(j + 1):
        gens.extend(MirabolicT(k) for k in range(m, -1, -1))
    return GroupWord("MC", n, tuple(gens))


def hom_C_to_vC(w):
    if w.kind != "C":
        raise GroupError("expected a plain cactus word")
    return GroupWord("vC", w.n, w.gens)


def hom_MC_to_vC(w):
    """t_i -> the transposition of factors i, i+1; defined only for i >= 1."""
    if w.kind != "MC":
        raise GroupError("expected a mirabolic word")
    out = []
    for g in w.gens:
        if isinstance(g, CactusGen):
            out.append(g)
        else:
            if g.i == 0:
                raise GroupError("t0 has no image among the virtual generators")
            out.append(PermGen(transposition(w.n, g.i, g.i + 1)))
    return GroupWord("vC", w.n, tuple(out))


def _affine_gen_to_vc(g, n):
    if isinstance(g, AffineR):
        return (PermGen(long_cycle(n)),)
    if g.i < g.j:
        return (CactusGen(g.i, g.j),)
    c = long_cycle(n)
    for d in range(1, n):
        i2, j2 = _mod1(g.i + d, n), _mod1(g.j + d, n)
        if i2 < j2 and j2 - i2 == len(cyclic_interval(n, g.i, g.j)) - 1:
            return (PermGen(power(inverse(c), d)),
                    CactusGen(i2, j2),
                    PermGen(power(c, d)))
    raise GroupError("no rotation straightens s%d_%d" % (g.i, g.j))


def hom_AC_to_vC(w):
    """Straighten wrapping intervals by conjugating with the rotation.

    A wrapping s_ij maps to c^{-d} s_{i+d, j+d} c^{d} for the least d that
    makes the shifted interval standard; r maps to the long cycle.
    """
    if w.kind != "AC":
        raise GroupError("expected an affine word")
    out = []
    for g in w.gens:
        out.extend(_affine_gen_to_vc(g, w.n))
    return GroupWord("vC", w.n, tuple(out))


def generator_projection(g, kind, n):
    """Image of one generator in the symmetric group on the factors."""
    if isinstance(g, CactusGen):
        return interval_reversal(n, g.i, g.j)
    if isinstance(g, PermGen):
        return g.perm
    if isinstance(g, MirabolicT):
        raise GroupError("t letters project on n+1 points; use project_to_symmetric")
    if isinstance(g, AffineS):
        return cyclic_reversal(n, g.i, g.j)
    if isinstance(g, AffineR):
        return long_cycle(n)
    raise GroupError("unknown generator %r" % (g,))


def project_to_symmetric(w):
    """Fold the word into a single permutation, leftmost letter acting first.

    C, vC and AC words land in the symmetric group on the n factors (one-line
    tuples on 1..n).  MC words land on the n+1 points {0..n}: the result is a
    tuple p of length n+1 with p[k] the image of point k.
    """
    if w.kind == "MC":
        acc = list(range(n + 1)) if (n := w.n) else []
        for g in w.gens:
            if isinstance(g, MirabolicT):
                img = list(range(n + 1))
                img[g.i], img[g.i + 1] = img[g.i + 1], img[g.i]
            else:
                img = [0] + [v for v in interval_reversal(n, g.i, g.j)]
            acc = [acc[img[k]] for k in range(n + 1)]
        return tuple(acc)
    acc = identity(w.n)
    for g in w.gens:
        acc = compose(acc, generator_projection(g, w.kind, w.n))
    return acc
