"""The presented tensor ``A (x) B`` and its equality engine.

Objects are words over pair leaves ``(a, b)``; arrows are paths of
generator edges modulo the congruence generated by the relation families
below.  Equality is semi-decided by bidirectional breadth-first search over
single rewrites, with a sound refutation step: if some strict extension
functor separates two paths they are distinct.

Relation identifiers used in witnesses:

===============  ===================================================
``interchange``  ``(t (x) Y') . (X (x) s) ~ (X' (x) s) . (t (x) Y)``
``inverse``      a canonical edge followed by its inverse is trivial
``sym-involution``, ``pentagon``, ``triangle``, ``unit-sym``, ``hexagon``
``nat-assoc-1/2/3``, ``nat-lunit``, ``nat-runit``, ``nat-sym-1/2``
``nat-alpha``, ``nat-beta``, ``nat-gamma-1/2/3``, ``nat-delta-1/2/3``
``h3-comp-l/r``, ``h3-id-l/r``, ``h3-interchange``
``delta-assoc``, ``delta-runit``, ``delta-lunit``, ``delta-sym``
``gamma-assoc``, ``gamma-runit``, ``gamma-lunit``, ``gamma-sym``
``alpha-tensor``, ``beta-tensor``, ``alpha-beta-unit``, ``gamma-delta``
===============  ===================================================

``gamma-interchange`` and ``delta-interchange`` are derived: the H2 cells
commute with the middle-four interchange.  The unit families also carry
their inverse forms.  Both are consequences of the families above and
only shorten searches.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from itertools import product
from typing import Sequence

from .monoidal import SmcStructure, middle_four
from .wordfunctor import WordOps
from .words import (H1_TYPES, Alpha, ArrTensObj, Assoc, AssocInv, Beta, Delta, Edge, Gamma,
                    I, L, LUnit, LUnitInv, ObjTensArr, PairLeaf, Path, PathError, R, RUnit,
                    RUnitInv, Sym, Tensor, Whisker, Word, canonical_path,
                    inverse_edge, is_canonical, middle_four_path, path_permutation,
                    subterms, wrap)

RELATIONS = (
    "interchange", "inverse", "sym-involution", "pentagon", "triangle", "unit-sym", "hexagon",
    "nat-assoc-1", "nat-assoc-2", "nat-assoc-3", "nat-lunit", "nat-runit", "nat-sym-1", "nat-sym-2",
    "nat-alpha", "nat-beta", "nat-gamma-1", "nat-gamma-2", "nat-gamma-3",
    "nat-delta-1", "nat-delta-2", "nat-delta-3",
    "h3-comp-l", "h3-id-l", "h3-comp-r", "h3-id-r", "h3-interchange",
    "delta-assoc", "delta-runit", "delta-lunit", "delta-sym",
    "gamma-assoc", "gamma-runit", "gamma-lunit", "gamma-sym",
    "alpha-tensor", "beta-tensor", "alpha-beta-unit", "gamma-delta",
    "gamma-interchange", "delta-interchange",
)
RANK = {r: i for i, r in enumerate(RELATIONS)}
MAX_WINDOW = 8


# ---------------------------------------------------------------- factor helpers

def is_finite(s) -> bool:
    return isinstance(s, SmcStructure)


def factor_is_identity(s, f) -> bool:
    if is_finite(s):
        return s.is_identity(f)
    return f.is_identity()


def factor_hom_into(s, y) -> list:
    """Every arrow of a finite factor with codomain ``y``; empty for presented ones."""
    if not is_finite(s):
        return []
    return [f for f in s.base.arrows if s.base.cod(f) == y]


def factor_factorizations(s, h) -> list:
    """Pairs ``(g, f)`` with ``g . f = h``."""
    if is_finite(s):
        base = s.base
        out = []
        for f in base.arrows:
            if base.dom(f) != base.dom(h):
                continue
            if s.is_identity(f):
                continue
            for g in base.hom(base.cod(f), base.cod(h)):
                if not s.is_identity(g) and base.comp[(g, f)] == h:
                    out.append((g, f))
        return out
    out = []
    for k in range(1, len(h.edges)):
        f = Path(h.dom, h.edges[:k], check=False)
        g = Path(f.cod, h.edges[k:], check=False)
        out.append((g, f))
    return out


def factor_untensor(s, h, other, side: str) -> list:
    """Arrows ``f`` with ``f (x) 1_other == h`` (``side="R"``) or
    ``1_other (x) f == h`` (``side="L"``)."""
    if is_finite(s):
        ident = s.id(other)
        out = []
        for f in s.base.arrows:
            t = s.tensor_arr(f, ident) if side == "R" else s.tensor_arr(ident, f)
            if t == h:
                out.append(f)
        return out
    dom = h.dom
    if not isinstance(dom, Tensor):
        return []
    if side == "R":
        if dom.right is not other:
            return []
        base_dom = dom.left
    else:
        if dom.left is not other:
            return []
        base_dom = dom.right
    inner = []
    for e in h.edges:
        if not (isinstance(e, Whisker) and e.side == side and e.x is other):
            return []
        inner.append(e.inner)
    return [Path(base_dom, inner, check=False)]


def factor_splits(s, c) -> list:
    """Pairs ``(x, y)`` with ``x (x) y == c``."""
    if is_finite(s):
        objs = s.base.objects
        return [(x, y) for x in objs for y in objs if s.tensor_obj(x, y) == c]
    if isinstance(c, Tensor):
        return [(c.left, c.right)]
    return []


# ---------------------------------------------------------------- presented tensor

class TenSmc(WordOps):
    """``A (x) B`` on words; arrows are :class:`Path` values.

    ``same`` is literal equality of paths; use :func:`decide_equal` for the
    congruence.  Factors may themselves be presented categories.
    """

    def __init__(self, sa, sb, name: str | None = None):
        self.sa = sa
        self.sb = sb
        self.name = name or f"{getattr(sa, 'name', 'A')}(x){getattr(sb, 'name', 'B')}"
        self.relations = RelationTable(self)

    def __repr__(self):
        return f"<TenSmc {self.name}>"

    # generators
    def pair(self, a, b) -> PairLeaf:
        return PairLeaf(a, b)

    def alpha(self, b) -> Alpha:
        return Alpha(b, self.sa.unit)

    def beta(self, a) -> Beta:
        return Beta(a, self.sb.unit)

    def gamma(self, a, a2, b) -> Gamma:
        return Gamma(a, a2, b, self.sa.tensor_obj(a, a2))

    def delta(self, a, b, b2) -> Delta:
        return Delta(a, b, b2, self.sb.tensor_obj(b, b2))

    def tens_l(self, f, b) -> ArrTensObj:
        return ArrTensObj(f, b, self.sa.dom(f), self.sa.cod(f))

    def tens_r(self, a, g) -> ObjTensArr:
        return ObjTensArr(a, g, self.sb.dom(g), self.sb.cod(g))

    def edge_path(self, e: Edge) -> Path:
        return Path.of(e)

    def check_object(self, x: Word):
        """Raise ``PathError`` if a leaf names an object outside the factors."""
        for leaf in x.leaves:
            if not isinstance(leaf, PairLeaf):
                raise PathError(f"{leaf!r} is not a pair leaf")
            _check_factor_object(self.sa, leaf.a)
            _check_factor_object(self.sb, leaf.b)


def _check_factor_object(s, x):
    if is_finite(s):
        if x not in s.base.obj_index:
            raise PathError(f"{x!r} is not an object of {s.name}")
    elif not isinstance(x, Word):
        raise PathError(f"{x!r} is not a word")


def tensor_smc_on_words(sa, sb) -> TenSmc:
    return TenSmc(sa, sb)


# ---------------------------------------------------------------- relations

def _pair_a(x):
    return x.a if isinstance(x, PairLeaf) else None


class RelationTable:
    """Instances of every relation family, seeded by the first edge of a window.

    ``instances(window)`` returns ``(relation, lhs, rhs)`` triples whose
    ``lhs`` is a prefix candidate for ``window`` (the caller checks the
    match).  ``insertions(z)`` returns the instances with an empty side
    that apply at the object ``z``.
    """

    def __init__(self, tp: TenSmc):
        self.tp = tp

    # ---- builders: each returns (lhs, rhs) lists of edges

    def interchange(self, t, s):
        return [R(s.dom, t), L(t.cod, s)], [L(t.dom, s), R(s.cod, t)]

    def pentagon(self, x, y, z, w):
        return ([Assoc(x, y, Tensor(z, w)), Assoc(Tensor(x, y), z, w)],
                [L(x, Assoc(y, z, w)), Assoc(x, Tensor(y, z), w), R(w, Assoc(x, y, z))])

    def triangle(self, x, y):
        return [Assoc(x, I, y), R(y, RUnit(x))], [L(x, LUnit(y))]

    def unit_sym(self, x):
        return [RUnit(x)], [Sym(x, I), LUnit(x)]

    def hexagon(self, x, y, z):
        return ([Assoc(x, y, z), Sym(Tensor(x, y), z), Assoc(z, x, y)],
                [L(x, Sym(y, z)), Assoc(x, z, y), R(y, Sym(x, z))])

    def nat_assoc_1(self, f, y, z):
        return [R(Tensor(y, z), f), Assoc(f.cod, y, z)], [Assoc(f.dom, y, z), R(z, R(y, f))]

    def nat_assoc_2(self, x, g, z):
        return [L(x, R(z, g)), Assoc(x, g.cod, z)], [Assoc(x, g.dom, z), R(z, L(x, g))]

    def nat_assoc_3(self, x, y, h):
        return [L(x, L(y, h)), Assoc(x, y, h.cod)], [Assoc(x, y, h.dom), L(Tensor(x, y), h)]

    def nat_lunit(self, f):
        return [L(I, f), LUnit(f.cod)], [LUnit(f.dom), f]

    def nat_runit(self, f):
        return [R(I, f), RUnit(f.cod)], [RUnit(f.dom), f]

    def nat_sym_1(self, f, y):
        return [R(y, f), Sym(f.cod, y)], [Sym(f.dom, y), L(y, f)]

    def nat_sym_2(self, x, g):
        return [L(x, g), Sym(x, g.cod)], [Sym(x, g.dom), R(x, g)]

    def nat_alpha(self, g):
        tp = self.tp
        return [tp.alpha(tp.sb.dom(g)), tp.tens_r(tp.sa.unit, g)], [tp.alpha(tp.sb.cod(g))]

    def nat_beta(self, f):
        tp = self.tp
        return [tp.beta(tp.sa.dom(f)), tp.tens_l(f, tp.sb.unit)], [tp.beta(tp.sa.cod(f))]

    def nat_gamma_1(self, f, a2, b):
        tp, sa = self.tp, self.tp.sa
        fd, fc = sa.dom(f), sa.cod(f)
        return ([R(PairLeaf(a2, b), tp.tens_l(f, b)), tp.gamma(fc, a2, b)],
                [tp.gamma(fd, a2, b), tp.tens_l(sa.tensor_arr(f, sa.id(a2)), b)])

    def nat_gamma_2(self, a, f, b):
        tp, sa = self.tp, self.tp.sa
        fd, fc = sa.dom(f), sa.cod(f)
        return ([L(PairLeaf(a, b), tp.tens_l(f, b)), tp.gamma(a, fc, b)],
                [tp.gamma(a, fd, b), tp.tens_l(sa.tensor_arr(sa.id(a), f), b)])

    def nat_gamma_3(self, a, a2, g):
        tp, sb = self.tp, self.tp.sb
        gd, gc = sb.dom(g), sb.cod(g)
        return ([R(PairLeaf(a2, gd), tp.tens_r(a, g)), L(PairLeaf(a, gc), tp.tens_r(a2, g)),
                 tp.gamma(a, a2, gc)],
                [tp.gamma(a, a2, gd), tp.tens_r(tp.sa.tensor_obj(a, a2), g)])

    def nat_delta_1(self, f, b, b2):
        tp, sa = self.tp, self.tp.sa
        fd, fc = sa.dom(f), sa.cod(f)
        return ([L(PairLeaf(fd, b), tp.tens_l(f, b2)), R(PairLeaf(fc, b2), tp.tens_l(f, b)),
                 tp.delta(fc, b, b2)],
                [tp.delta(fd, b, b2), tp.tens_l(f, tp.sb.tensor_obj(b, b2))])

    def nat_delta_2(self, a, g, b2):
        tp, sb = self.tp, self.tp.sb
        gd, gc = sb.dom(g), sb.cod(g)
        return ([R(PairLeaf(a, b2), tp.tens_r(a, g)), tp.delta(a, gc, b2)],
                [tp.delta(a, gd, b2), tp.tens_r(a, sb.tensor_arr(g, sb.id(b2)))])

    def nat_delta_3(self, a, b, g):
        tp, sb = self.tp, self.tp.sb
        gd, gc = sb.dom(g), sb.cod(g)
        return ([L(PairLeaf(a, b), tp.tens_r(a, g)), tp.delta(a, b, gc)],
                [tp.delta(a, b, gd), tp.tens_r(a, sb.tensor_arr(sb.id(b), g))])

    def h3_comp_l(self, g, f, b):
        tp = self.tp
        return [tp.tens_l(tp.sa.compose(g, f), b)], [tp.tens_l(f, b), tp.tens_l(g, b)]

    def h3_comp_r(self, a, g, f):
        tp = self.tp
        return [tp.tens_r(a, tp.sb.compose(g, f))], [tp.tens_r(a, f), tp.tens_r(a, g)]

    def h3_id_l(self, a, b):
        return [self.tp.tens_l(self.tp.sa.id(a), b)], []

    def h3_id_r(self, a, b):
        return [self.tp.tens_r(a, self.tp.sb.id(b))], []

    def h3_interchange(self, f, g):
        tp = self.tp
        sa, sb = tp.sa, tp.sb
        return ([tp.tens_l(f, sb.dom(g)), tp.tens_r(sa.cod(f), g)],
                [tp.tens_r(sa.dom(f), g), tp.tens_l(f, sb.cod(g))])

    def delta_assoc(self, a, b, b2, b3):
        tp, sb = self.tp, self.tp.sb
        p, p2, p3 = PairLeaf(a, b), PairLeaf(a, b2), PairLeaf(a, b3)
        return ([L(p, tp.delta(a, b2, b3)), tp.delta(a, b, sb.tensor_obj(b2, b3)),
                 tp.tens_r(a, sb.a(b, b2, b3))],
                [Assoc(p, p2, p3), R(p3, tp.delta(a, b, b2)), tp.delta(a, sb.tensor_obj(b, b2), b3)])

    def delta_runit(self, a, b):
        tp, sb = self.tp, self.tp.sb
        p = PairLeaf(a, b)
        return [RUnit(p)], [L(p, tp.beta(a)), tp.delta(a, b, sb.unit), tp.tens_r(a, sb.r(b))]

    def delta_lunit(self, a, b):
        tp, sb = self.tp, self.tp.sb
        p = PairLeaf(a, b)
        return [LUnit(p)], [R(p, tp.beta(a)), tp.delta(a, sb.unit, b), tp.tens_r(a, sb.l(b))]

    # inverse forms, derived from the unit relations and functoriality of the H3 edges
    def delta_lunit_inv(self, a, b):
        tp, sb = self.tp, self.tp.sb
        p = PairLeaf(a, b)
        return [LUnitInv(p), R(p, tp.beta(a)), tp.delta(a, sb.unit, b)], [tp.tens_r(a, sb.l_inv(b))]

    def delta_runit_inv(self, a, b):
        tp, sb = self.tp, self.tp.sb
        p = PairLeaf(a, b)
        return [RUnitInv(p), L(p, tp.beta(a)), tp.delta(a, b, sb.unit)], [tp.tens_r(a, sb.r_inv(b))]

    def gamma_lunit_inv(self, a, b):
        tp, sa = self.tp, self.tp.sa
        p = PairLeaf(a, b)
        return [LUnitInv(p), R(p, tp.alpha(b)), tp.gamma(sa.unit, a, b)], [tp.tens_l(sa.l_inv(a), b)]

    def gamma_runit_inv(self, a, b):
        tp, sa = self.tp, self.tp.sa
        p = PairLeaf(a, b)
        return [RUnitInv(p), L(p, tp.alpha(b)), tp.gamma(a, sa.unit, b)], [tp.tens_l(sa.r_inv(a), b)]

    def delta_sym(self, a, b, b2):
        tp = self.tp
        return ([tp.delta(a, b, b2), tp.tens_r(a, tp.sb.s(b, b2))],
                [Sym(PairLeaf(a, b), PairLeaf(a, b2)), tp.delta(a, b2, b)])

    def gamma_assoc(self, a, a2, a3, b):
        tp, sa = self.tp, self.tp.sa
        p, p2, p3 = PairLeaf(a, b), PairLeaf(a2, b), PairLeaf(a3, b)
        return ([L(p, tp.gamma(a2, a3, b)), tp.gamma(a, sa.tensor_obj(a2, a3), b),
                 tp.tens_l(sa.a(a, a2, a3), b)],
                [Assoc(p, p2, p3), R(p3, tp.gamma(a, a2, b)), tp.gamma(sa.tensor_obj(a, a2), a3, b)])

    def gamma_runit(self, a, b):
        tp, sa = self.tp, self.tp.sa
        p = PairLeaf(a, b)
        return [RUnit(p)], [L(p, tp.alpha(b)), tp.gamma(a, sa.unit, b), tp.tens_l(sa.r(a), b)]

    def gamma_lunit(self, a, b):
        tp, sa = self.tp, self.tp.sa
        p = PairLeaf(a, b)
        return [LUnit(p)], [R(p, tp.alpha(b)), tp.gamma(sa.unit, a, b), tp.tens_l(sa.l(a), b)]

    def gamma_sym(self, a, a2, b):
        tp = self.tp
        return ([tp.gamma(a, a2, b), tp.tens_l(tp.sa.s(a, a2), b)],
                [Sym(PairLeaf(a, b), PairLeaf(a2, b)), tp.gamma(a2, a, b)])

    def alpha_tensor(self, b, b2):
        tp = self.tp
        ia = tp.sa.unit
        return ([LUnit(I), tp.alpha(tp.sb.tensor_obj(b, b2))],
                [L(I, tp.alpha(b2)), R(PairLeaf(ia, b2), tp.alpha(b)), tp.delta(ia, b, b2)])

    def beta_tensor(self, a, a2):
        tp = self.tp
        ib = tp.sb.unit
        return ([LUnit(I), tp.beta(tp.sa.tensor_obj(a, a2))],
                [L(I, tp.beta(a2)), R(PairLeaf(a2, ib), tp.beta(a)), tp.gamma(a, a2, ib)])

    def alpha_beta_unit(self):
        tp = self.tp
        return [tp.beta(tp.sa.unit)], [tp.alpha(tp.sb.unit)]

    def gamma_delta(self, a, a2, b, b2):
        tp, sa, sb = self.tp, self.tp.sa, self.tp.sb
        w, x, y, z = PairLeaf(a, b), PairLeaf(a, b2), PairLeaf(a2, b), PairLeaf(a2, b2)
        aa, bb = sa.tensor_obj(a, a2), sb.tensor_obj(b, b2)
        lhs = [L(Tensor(w, x), tp.delta(a2, b, b2)), R(PairLeaf(a2, bb), tp.delta(a, b, b2)),
               tp.gamma(a, a2, bb)]
        rhs = list(middle_four_path(w, x, y, z).edges) + [
            L(Tensor(w, y), tp.gamma(a, a2, b2)), R(PairLeaf(aa, b2), tp.gamma(a, a2, b)),
            tp.delta(aa, b, b2)]
        return lhs, rhs

    # derived: gamma and delta commute with the middle-four interchange
    def gamma_interchange(self, a, a2, a3, a4, b):
        tp, sa = self.tp, self.tp.sa
        p, p2, p3, p4 = (PairLeaf(x, b) for x in (a, a2, a3, a4))
        t = sa.tensor_obj
        lhs = list(middle_four_path(p, p2, p3, p4).edges) + [
            L(Tensor(p, p3), tp.gamma(a2, a4, b)), R(PairLeaf(t(a2, a4), b), tp.gamma(a, a3, b)),
            tp.gamma(t(a, a3), t(a2, a4), b)]
        rhs = [L(Tensor(p, p2), tp.gamma(a3, a4, b)), R(PairLeaf(t(a3, a4), b), tp.gamma(a, a2, b)),
               tp.gamma(t(a, a2), t(a3, a4), b), tp.tens_l(middle_four(sa, a, a2, a3, a4), b)]
        return lhs, rhs

    def delta_interchange(self, a, b, b2, b3, b4):
        tp, sb = self.tp, self.tp.sb
        p, p2, p3, p4 = (PairLeaf(a, x) for x in (b, b2, b3, b4))
        t = sb.tensor_obj
        lhs = list(middle_four_path(p, p2, p3, p4).edges) + [
            L(Tensor(p, p3), tp.delta(a, b2, b4)), R(PairLeaf(a, t(b2, b4)), tp.delta(a, b, b3)),
            tp.delta(a, t(b, b3), t(b2, b4))]
        rhs = [L(Tensor(p, p2), tp.delta(a, b3, b4)), R(PairLeaf(a, t(b3, b4)), tp.delta(a, b, b2)),
               tp.delta(a, t(b, b2), t(b3, b4)), tp.tens_r(a, middle_four(sb, b, b2, b3, b4))]
        return lhs, rhs

    # ---- seeding

    def instances(self, window: Sequence[Edge]) -> list:
        """Candidate ``(relation, lhs, rhs)`` with ``lhs[0] == window[0]``."""
        out = []
        e = window[0]
        nxt = window[1] if len(window) > 1 else None
        tp = self.tp
        sa, sb = tp.sa, tp.sb

        def add(rel, pair, flip=False):
            lhs, rhs = pair
            out.append((rel, rhs, lhs) if flip else (rel, lhs, rhs))

        if isinstance(e, Whisker):
            inner = e.inner
            if nxt is not None and isinstance(nxt, Whisker) and nxt.side != e.side:
                if e.side == "R" and nxt.x == inner.cod and nxt.inner.dom == e.x:
                    add("interchange", self.interchange(inner, nxt.inner))
                if e.side == "L" and nxt.x == inner.cod and nxt.inner.dom == e.x:
                    add("interchange", self.interchange(nxt.inner, inner), flip=True)
            if e.side == "L":
                x = e.x
                if isinstance(inner, Assoc):
                    add("pentagon", self.pentagon(x, inner.x, inner.y, inner.z), flip=True)
                if isinstance(inner, LUnit):
                    add("triangle", self.triangle(x, inner.x), flip=True)
                if isinstance(inner, Sym):
                    add("hexagon", self.hexagon(x, inner.x, inner.y), flip=True)
                if isinstance(inner, Whisker):
                    if inner.side == "R":
                        add("nat-assoc-2", self.nat_assoc_2(x, inner.inner, inner.x))
                    else:
                        add("nat-assoc-3", self.nat_assoc_3(x, inner.x, inner.inner))
                if x is I:
                    add("nat-lunit", self.nat_lunit(inner))
                add("nat-sym-2", self.nat_sym_2(x, inner))
                if isinstance(x, PairLeaf) and isinstance(inner, ArrTensObj):
                    if inner.b == x.b:
                        add("nat-gamma-2", self.nat_gamma_2(x.a, inner.f, x.b))
                    if inner.fdom == x.a:
                        add("nat-delta-1", self.nat_delta_1(inner.f, x.b, inner.b))
                if isinstance(x, PairLeaf) and isinstance(inner, ObjTensArr) and inner.a == x.a:
                    add("nat-delta-3", self.nat_delta_3(x.a, x.b, inner.g))
                if isinstance(x, PairLeaf) and isinstance(inner, Delta) and inner.a == x.a:
                    add("delta-assoc", self.delta_assoc(x.a, x.b, inner.b, inner.b2))
                if isinstance(x, PairLeaf) and isinstance(inner, Gamma) and inner.b == x.b:
                    add("gamma-assoc", self.gamma_assoc(x.a, inner.a, inner.a2, x.b))
                if isinstance(x, PairLeaf) and isinstance(inner, Beta) and inner.a == x.a:
                    add("delta-runit", self.delta_runit(x.a, x.b), flip=True)
                if isinstance(x, PairLeaf) and isinstance(inner, Alpha) and inner.b == x.b:
                    add("gamma-runit", self.gamma_runit(x.a, x.b), flip=True)
                if x is I and isinstance(inner, Alpha) and isinstance(nxt, Whisker) \
                        and isinstance(nxt.inner, Alpha):
                    add("alpha-tensor", self.alpha_tensor(nxt.inner.b, inner.b), flip=True)
                if x is I and isinstance(inner, Beta) and isinstance(nxt, Whisker) \
                        and isinstance(nxt.inner, Beta):
                    add("beta-tensor", self.beta_tensor(nxt.inner.a, inner.a), flip=True)
                if isinstance(inner, Delta) and isinstance(x, Tensor) \
                        and isinstance(x.left, PairLeaf) and isinstance(x.right, PairLeaf):
                    w, xx = x.left, x.right
                    if w.a == xx.a:
                        add("gamma-delta", self.gamma_delta(w.a, inner.a, inner.b, inner.b2))
                    if w.a == xx.a == inner.a:
                        add("delta-interchange",
                            self.delta_interchange(w.a, w.b, xx.b, inner.b, inner.b2), flip=True)
                if isinstance(inner, Gamma) and isinstance(x, Tensor) \
                        and isinstance(x.left, PairLeaf) and isinstance(x.right, PairLeaf):
                    w, xx = x.left, x.right
                    if w.b == xx.b == inner.b:
                        add("gamma-interchange",
                            self.gamma_interchange(w.a, xx.a, inner.a, inner.a2, w.b), flip=True)
            else:
                x = e.x
                if isinstance(x, Tensor):
                    add("nat-assoc-1", self.nat_assoc_1(inner, x.left, x.right))
                if x is I:
                    add("nat-runit", self.nat_runit(inner))
                add("nat-sym-1", self.nat_sym_1(inner, x))
                if isinstance(x, PairLeaf) and isinstance(inner, ArrTensObj) and inner.b == x.b:
                    add("nat-gamma-1", self.nat_gamma_1(inner.f, x.a, x.b))
                if isinstance(x, PairLeaf) and isinstance(inner, ObjTensArr):
                    if inner.gdom == x.b:
                        add("nat-gamma-3", self.nat_gamma_3(inner.a, x.a, inner.g))
                    if inner.a == x.a:
                        add("nat-delta-2", self.nat_delta_2(inner.a, inner.g, x.b))
                if isinstance(x, PairLeaf) and isinstance(inner, Beta) and inner.a == x.a:
                    add("delta-lunit", self.delta_lunit(x.a, x.b), flip=True)
                if isinstance(x, PairLeaf) and isinstance(inner, Alpha) and inner.b == x.b:
                    add("gamma-lunit", self.gamma_lunit(x.a, x.b), flip=True)
            return out

        # unwhiskered core edges
        if isinstance(e, H1_TYPES):
            if nxt is not None and nxt is inverse_edge(e):
                add("sym-involution" if isinstance(e, Sym) else "inverse", ([e, nxt], []))
        if isinstance(e, Assoc):
            x, y, z = e.x, e.y, e.z
            if isinstance(z, Tensor):
                add("pentagon", self.pentagon(x, y, z.left, z.right))
            if y is I:
                add("triangle", self.triangle(x, z))
            add("hexagon", self.hexagon(x, y, z))
            if isinstance(nxt, Whisker) and nxt.side == "R" and isinstance(nxt.inner, Whisker):
                w2 = nxt.inner
                if w2.side == "R":
                    add("nat-assoc-1", self.nat_assoc_1(w2.inner, w2.x, nxt.x), flip=True)
                else:
                    add("nat-assoc-2", self.nat_assoc_2(w2.x, w2.inner, nxt.x), flip=True)
            if isinstance(nxt, Whisker) and nxt.side == "L" and isinstance(nxt.x, Tensor):
                add("nat-assoc-3", self.nat_assoc_3(nxt.x.left, nxt.x.right, nxt.inner), flip=True)
            if all(isinstance(v, PairLeaf) for v in (x, y, z)):
                if x.a == y.a == z.a:
                    add("delta-assoc", self.delta_assoc(x.a, x.b, y.b, z.b), flip=True)
                if x.b == y.b == z.b:
                    add("gamma-assoc", self.gamma_assoc(x.a, y.a, z.a, x.b), flip=True)
        elif isinstance(e, AssocInv):
            w, x, yz = e.x, e.y, e.z
            if (isinstance(yz, Tensor) and all(isinstance(v, PairLeaf) for v in (w, x, yz.left, yz.right))):
                y, z = yz.left, yz.right
                if w.a == x.a and y.a == z.a and w.b == y.b and x.b == z.b:
                    add("gamma-delta", self.gamma_delta(w.a, y.a, w.b, x.b), flip=True)
                if w.b == x.b == y.b == z.b:
                    add("gamma-interchange", self.gamma_interchange(w.a, x.a, y.a, z.a, w.b))
                if w.a == x.a == y.a == z.a:
                    add("delta-interchange", self.delta_interchange(w.a, w.b, x.b, y.b, z.b))
        elif isinstance(e, LUnit):
            if nxt is not None and nxt.dom is e.x:
                add("nat-lunit", self.nat_lunit(nxt), flip=True)
            if e.x is I and nxt is not None:
                if isinstance(nxt, Alpha):
                    for b, b2 in factor_splits(sb, nxt.b):
                        add("alpha-tensor", self.alpha_tensor(b, b2))
                if isinstance(nxt, Beta):
                    for a, a2 in factor_splits(sa, nxt.a):
                        add("beta-tensor", self.beta_tensor(a, a2))
            if isinstance(e.x, PairLeaf):
                add("delta-lunit", self.delta_lunit(e.x.a, e.x.b))
                add("gamma-lunit", self.gamma_lunit(e.x.a, e.x.b))
        elif isinstance(e, LUnitInv) and isinstance(e.x, PairLeaf):
            add("delta-lunit", self.delta_lunit_inv(e.x.a, e.x.b))
            add("gamma-lunit", self.gamma_lunit_inv(e.x.a, e.x.b))
        elif isinstance(e, RUnitInv) and isinstance(e.x, PairLeaf):
            add("delta-runit", self.delta_runit_inv(e.x.a, e.x.b))
            add("gamma-runit", self.gamma_runit_inv(e.x.a, e.x.b))
        elif isinstance(e, RUnit):
            add("unit-sym", self.unit_sym(e.x))
            if nxt is not None and nxt.dom == e.x:
                add("nat-runit", self.nat_runit(nxt), flip=True)
            if isinstance(e.x, PairLeaf):
                add("delta-runit", self.delta_runit(e.x.a, e.x.b))
                add("gamma-runit", self.gamma_runit(e.x.a, e.x.b))
        elif isinstance(e, Sym):
            x, y = e.x, e.y
            if y is I:
                add("unit-sym", self.unit_sym(x), flip=True)
            if isinstance(nxt, Whisker):
                if nxt.side == "L" and nxt.x == y:
                    add("nat-sym-1", self.nat_sym_1(nxt.inner, y), flip=True)
                if nxt.side == "R" and nxt.x == x:
                    add("nat-sym-2", self.nat_sym_2(x, nxt.inner), flip=True)
            if isinstance(x, PairLeaf) and isinstance(y, PairLeaf):
                if x.a == y.a:
                    add("delta-sym", self.delta_sym(x.a, x.b, y.b), flip=True)
                if x.b == y.b:
                    add("gamma-sym", self.gamma_sym(x.a, y.a, x.b), flip=True)
        elif isinstance(e, Alpha):
            if isinstance(nxt, ObjTensArr) and nxt.a == sa.unit:
                add("nat-alpha", self.nat_alpha(nxt.g))
            for g in factor_hom_into(sb, e.b):
                add("nat-alpha", self.nat_alpha(g), flip=True)
            if e.b == sb.unit:
                add("alpha-beta-unit", self.alpha_beta_unit(), flip=True)
        elif isinstance(e, Beta):
            if isinstance(nxt, ArrTensObj) and nxt.b == sb.unit:
                add("nat-beta", self.nat_beta(nxt.f))
            for f in factor_hom_into(sa, e.a):
                add("nat-beta", self.nat_beta(f), flip=True)
            if e.a == sa.unit:
                add("alpha-beta-unit", self.alpha_beta_unit())
        elif isinstance(e, Gamma):
            a, a2, b = e.a, e.a2, e.b
            if isinstance(nxt, ArrTensObj):
                for f in factor_untensor(sa, nxt.f, a2, "R"):
                    if sa.dom(f) == a:
                        add("nat-gamma-1", self.nat_gamma_1(f, a2, b), flip=True)
                for f in factor_untensor(sa, nxt.f, a, "L"):
                    if sa.dom(f) == a2:
                        add("nat-gamma-2", self.nat_gamma_2(a, f, b), flip=True)
                add("gamma-sym", self.gamma_sym(a, a2, b))
            if isinstance(nxt, ObjTensArr):
                add("nat-gamma-3", self.nat_gamma_3(a, a2, nxt.g), flip=True)
        elif isinstance(e, Delta):
            a, b, b2 = e.a, e.b, e.b2
            if isinstance(nxt, ArrTensObj):
                add("nat-delta-1", self.nat_delta_1(nxt.f, b, b2), flip=True)
            if isinstance(nxt, ObjTensArr):
                for g in factor_untensor(sb, nxt.g, b2, "R"):
                    if sb.dom(g) == b:
                        add("nat-delta-2", self.nat_delta_2(a, g, b2), flip=True)
                for g in factor_untensor(sb, nxt.g, b, "L"):
                    if sb.dom(g) == b2:
                        add("nat-delta-3", self.nat_delta_3(a, b, g), flip=True)
                add("delta-sym", self.delta_sym(a, b, b2))
        elif isinstance(e, ArrTensObj):
            if factor_is_identity(sa, e.f):
                add("h3-id-l", self.h3_id_l(e.fdom, e.b))
            for g, f in factor_factorizations(sa, e.f):
                add("h3-comp-l", self.h3_comp_l(g, f, e.b))
            if isinstance(nxt, ArrTensObj) and nxt.b == e.b:
                add("h3-comp-l", self.h3_comp_l(nxt.f, e.f, e.b), flip=True)
            if isinstance(nxt, ObjTensArr):
                add("h3-interchange", self.h3_interchange(e.f, nxt.g))
            if e.fcod == sa.tensor_obj(sa.unit, e.fdom) and e.f == sa.l_inv(e.fdom):
                add("gamma-lunit", self.gamma_lunit_inv(e.fdom, e.b), flip=True)
            if e.fcod == sa.tensor_obj(e.fdom, sa.unit) and e.f == sa.r_inv(e.fdom):
                add("gamma-runit", self.gamma_runit_inv(e.fdom, e.b), flip=True)
        elif isinstance(e, ObjTensArr):
            if factor_is_identity(sb, e.g):
                add("h3-id-r", self.h3_id_r(e.a, e.gdom))
            for g, f in factor_factorizations(sb, e.g):
                add("h3-comp-r", self.h3_comp_r(e.a, g, f))
            if isinstance(nxt, ObjTensArr) and nxt.a == e.a:
                add("h3-comp-r", self.h3_comp_r(e.a, nxt.g, e.g), flip=True)
            if isinstance(nxt, ArrTensObj):
                add("h3-interchange", self.h3_interchange(nxt.f, e.g), flip=True)
            if e.gcod == sb.tensor_obj(sb.unit, e.gdom) and e.g == sb.l_inv(e.gdom):
                add("delta-lunit", self.delta_lunit_inv(e.a, e.gdom), flip=True)
            if e.gcod == sb.tensor_obj(e.gdom, sb.unit) and e.g == sb.r_inv(e.gdom):
                add("delta-runit", self.delta_runit_inv(e.a, e.gdom), flip=True)
        return out

    def insertions(self, z: Word) -> list:
        """``(relation, edges)`` for every instance with an empty side at ``z``."""
        tp = self.tp
        out = []
        if isinstance(z, Tensor):
            x, y = z.left, z.right
            if isinstance(y, Tensor):
                out.append(("inverse", [Assoc(x, y.left, y.right), AssocInv(x, y.left, y.right)]))
            if isinstance(x, Tensor):
                out.append(("inverse", [AssocInv(x.left, x.right, y), Assoc(x.left, x.right, y)]))
            if x is I:
                out.append(("inverse", [LUnit(y), LUnitInv(y)]))
            if y is I:
                out.append(("inverse", [RUnit(x), RUnitInv(x)]))
            out.append(("sym-involution", [Sym(x, y), Sym(y, x)]))
        out.append(("inverse", [LUnitInv(z), LUnit(z)]))
        out.append(("inverse", [RUnitInv(z), RUnit(z)]))
        if isinstance(z, PairLeaf):
            out.append(("h3-id-l", [tp.tens_l(tp.sa.id(z.a), z.b)]))
            out.append(("h3-id-r", [tp.tens_r(z.a, tp.sb.id(z.b))]))
        return out


# ---------------------------------------------------------------- neighbours

@dataclass(frozen=True)
class Step:
    """One rewrite ``source -> target``.

    ``rule`` is a relation identifier or ``"coherence"``; ``position`` is
    the edge index of the redex and ``context`` the whisker frames around it.
    """
    source: Path
    target: Path
    rule: str
    position: int = 0
    context: tuple = ()
    lhs: tuple = ()
    rhs: tuple = ()

    def reversed(self) -> "Step":
        return Step(self.target, self.source, self.rule, self.position, self.context, self.rhs, self.lhs)


def _peel(e: Edge, ctx: tuple):
    for side, x in ctx:
        if not (isinstance(e, Whisker) and e.side == side and e.x is x):
            return None
        e = e.inner
    return e


def neighbors(p: Path, tp: TenSmc, with_steps: bool = False) -> list:
    """Every path one rewrite away from ``p``, deterministic order.

    Order: relation rank, then position, then context depth.
    """
    table = tp.relations
    edges = p.edges
    n = len(edges)
    found = []
    for i in range(n):
        e = edges[i]
        ctx = ()
        while True:
            window = []
            for k in range(i, min(n, i + MAX_WINDOW)):
                c = _peel(edges[k], ctx)
                if c is None:
                    break
                window.append(c)
            for rel, lhs, rhs in table.instances(window):
                m = len(lhs)
                if m > len(window) or any(lhs[j] is not window[j] for j in range(m)):
                    continue
                new = edges[:i] + tuple(wrap(ctx, r) for r in rhs) + edges[i + m:]
                found.append((RANK[rel], i, len(ctx), rel, ctx, tuple(lhs), tuple(rhs), new))
            if isinstance(e, Whisker):
                ctx = ctx + ((e.side, e.x),)
                e = e.inner
            else:
                break
    cur = p.dom
    for i in range(n + 1):
        for ctx, z in subterms(cur):
            for rel, ins in table.insertions(z):
                new = edges[:i] + tuple(wrap(ctx, r) for r in ins) + edges[i:]
                found.append((RANK[rel], i, len(ctx), rel, ctx, (), tuple(ins), new))
        if i < n:
            cur = edges[i].cod
    found.sort(key=lambda t: (t[0], t[1], t[2]))
    seen = set()
    out = []
    for _, i, _, rel, ctx, lhs, rhs, new in found:
        q = Path(p.dom, new, check=False)
        if q in seen or q == p:
            continue
        seen.add(q)
        out.append(Step(p, q, rel, i, ctx, lhs, rhs) if with_steps else q)
    return out


# ---------------------------------------------------------------- verdicts

@dataclass(frozen=True)
class Witness:
    start: Path
    end: Path
    steps: tuple

    def __len__(self):
        return len(self.steps)


@dataclass(frozen=True)
class Equal:
    witness: Witness
    spent: int = 0

    def __str__(self):
        return f"Equal ({len(self.witness)} steps)"


@dataclass(frozen=True)
class Distinct:
    extension: int
    name: str
    left: object
    right: object

    def __str__(self):
        return f"Distinct (extension {self.extension} {self.name}: {self.left!r} != {self.right!r})"


@dataclass(frozen=True)
class Unknown:
    spent: int

    def __str__(self):
        return f"Unknown (budget exhausted after {self.spent} expansions)"


def _check_parallel(p: Path, q: Path):
    if p.dom is not q.dom or p.cod is not q.cod:
        raise PathError(f"paths are not parallel: {p.dom!r} -> {p.cod!r} vs {q.dom!r} -> {q.cod!r}")


def _chain(parents: dict, node: Path) -> list:
    steps = []
    while parents[node] is not None:
        step = parents[node]
        steps.append(step)
        node = step.source
    steps.reverse()
    return steps


def search_equal(p: Path, q: Path, tp: TenSmc, budget: int):
    """Bidirectional BFS; returns ``(steps or None, expansions spent)``."""
    if p == q:
        return [], 0
    sides = [(deque([p]), {p: None}), (deque([q]), {q: None})]
    spent = 0
    turn = 0
    while spent < budget:
        frontier, parents = sides[turn]
        other = sides[1 - turn][1]
        if not frontier:
            if not sides[1 - turn][0]:
                break
            turn = 1 - turn
            continue
        node = frontier.popleft()
        spent += 1
        for step in neighbors(node, tp, with_steps=True):
            nxt = step.target
            if nxt in parents:
                continue
            parents[nxt] = step
            if nxt in other:
                from_p = sides[0][1]
                from_q = sides[1][1]
                left = _chain(from_p, nxt)
                right = [s.reversed() for s in reversed(_chain(from_q, nxt))]
                return left + right, spent
            frontier.append(nxt)
        turn = 1 - turn
    return None, spent


def normalize(p: Path, tp: TenSmc) -> tuple:
    """Sound simplification used before searching.

    Splits H3 edges on composite presented arrows, drops identity H3 edges,
    fuses adjacent H3 edges on finite factors and replaces every maximal run
    of canonical edges by the fixed canonical path with the same leaf
    permutation.  Returns ``(path, steps)``.
    """
    steps = []
    changed = True
    while changed:
        changed = False
        for step in neighbors(p, tp, with_steps=True):
            if _is_simplifying(step, tp):
                steps.append(step)
                p = step.target
                changed = True
                break
    q = _collapse_canonical_runs(p)
    if q != p:
        steps.append(Step(p, q, "coherence"))
        p = q
    return p, steps


def _is_simplifying(step: Step, tp: TenSmc) -> bool:
    if step.rule in ("h3-id-l", "h3-id-r"):
        return len(step.rhs) == 0
    if step.rule in ("inverse", "sym-involution"):
        return len(step.rhs) == 0
    if step.rule == "h3-comp-l":
        if is_finite(tp.sa):
            return len(step.lhs) == 2
        return len(step.lhs) == 1 and len(step.rhs) == 2
    if step.rule == "h3-comp-r":
        if is_finite(tp.sb):
            return len(step.lhs) == 2
        return len(step.lhs) == 1 and len(step.rhs) == 2
    return False


def _collapse_canonical_runs(p: Path) -> Path:
    out = []
    run = []
    cur = p.dom

    def flush(end):
        nonlocal run
        if run:
            start = run[0].dom
            seg = Path(start, run, check=False)
            out.extend(canonical_path(start, end, path_permutation(seg)).edges)
            run = []

    for e in p.edges:
        if is_canonical(e):
            run.append(e)
        else:
            flush(cur)
            out.append(e)
        cur = e.cod
    flush(cur)
    return Path(p.dom, out, check=False)


def decide_equal(p: Path, q: Path, budget: int, extensions: Sequence = (), tp: TenSmc | None = None,
                 normalize_first: bool = False):
    """Semi-decide ``p ~ q`` in the presented tensor ``tp``.

    Every extension is evaluated first; any disagreement is a sound
    refutation.  Otherwise a bidirectional search of at most ``budget``
    expansions looks for a rewrite chain.  With ``normalize_first`` a failed
    search is retried, with another ``budget``, on the normal forms.
    """
    _check_parallel(p, q)
    for k, ext in enumerate(extensions):
        left, right = ext.path(p), ext.path(q)
        if not ext.target.same(left, right):
            return Distinct(k, ext.name, left, right)
    if tp is None:
        if p == q:
            return Equal(Witness(p, q, ()))
        raise ValueError("a presentation is needed to search")
    found, spent = search_equal(p, q, tp, budget)
    if found is not None:
        return Equal(Witness(p, q, tuple(found)), spent)
    if not normalize_first:
        return Unknown(spent)
    # the raw search failed: retry on normal forms with a fresh budget
    p0, pre = normalize(p, tp)
    q0, post = normalize(q, tp)
    found, more = search_equal(p0, q0, tp, budget)
    spent += more
    if found is None:
        return Unknown(spent)
    steps = pre + found + [s.reversed() for s in reversed(post)]
    return Equal(Witness(p, q, tuple(steps)), spent)


def decide_chain(paths: Sequence[Path], budget: int, extensions: Sequence = (), tp: TenSmc | None = None,
                 normalize_first: bool = False):
    """Decide ``paths[0] ~ paths[-1]`` through the given waypoints.

    Each consecutive pair gets its own ``budget``; the witnesses are joined.
    Returns the first verdict that is not :class:`Equal`.
    """
    steps, spent = [], 0
    for p, q in zip(paths, paths[1:]):
        v = decide_equal(p, q, budget, extensions, tp, normalize_first)
        if not isinstance(v, Equal):
            return v
        steps += v.witness.steps
        spent += v.spent
    return Equal(Witness(paths[0], paths[-1], tuple(steps)), spent)


def replay(w: Witness, tp: TenSmc) -> bool:
    """Re-derive every step of a witness."""
    cur = w.start
    for step in w.steps:
        if step.source != cur:
            return False
        if step.rule == "coherence":
            if not _coherence_runs_agree(step.source, step.target):
                return False
        else:
            if step.target not in neighbors(step.source, tp):
                return False
        cur = step.target
    return cur == w.end


def _coherence_runs_agree(p: Path, q: Path) -> bool:
    """Same non-canonical skeleton and equal permutations on every canonical run."""
    return _collapse_canonical_runs(p) == _collapse_canonical_runs(q)


def relation_table(sa, sb) -> RelationTable:
    return TenSmc(sa, sb).relations


# ---------------------------------------------------------------- instance enumeration

def leaf_count(x: Word) -> int:
    """Leaves including unit leaves."""
    if isinstance(x, Tensor):
        return leaf_count(x.left) + leaf_count(x.right)
    return 1


def small_words(leaves: Sequence[Word], n: int) -> list:
    """All words with exactly ``n`` leaves drawn from ``leaves``."""
    if n == 1:
        return list(leaves)
    out = []
    for k in range(1, n):
        for x in small_words(leaves, k):
            for y in small_words(leaves, n - k):
                out.append(Tensor(x, y))
    return out


def leaf_alphabet(tp: TenSmc) -> list:
    return [I] + [PairLeaf(a, b) for a in tp.sa.base.objects for b in tp.sb.base.objects]


def generator_edges(tp: TenSmc, words1: Sequence[Word]) -> list:
    """Unwhiskered edges whose domain has at most two leaves."""
    sa, sb = tp.sa, tp.sb
    out = []
    for x in words1:
        out += [LUnitInv(x), RUnitInv(x)]
        for y in words1:
            out.append(Sym(x, y))
    out += [LUnit(x) for x in words1] + [RUnit(x) for x in words1]
    out += [tp.alpha(b) for b in sb.base.objects] + [tp.beta(a) for a in sa.base.objects]
    for a in sa.base.objects:
        for a2 in sa.base.objects:
            for b in sb.base.objects:
                out.append(tp.gamma(a, a2, b))
    for a in sa.base.objects:
        for b in sb.base.objects:
            for b2 in sb.base.objects:
                out.append(tp.delta(a, b, b2))
    out += [tp.tens_l(f, b) for f in sa.base.arrows for b in sb.base.objects]
    out += [tp.tens_r(a, g) for a in sa.base.objects for g in sb.base.arrows]
    return out


def enumerate_instances(tp: TenSmc, max_leaves: int = 4) -> list:
    """``(relation, lhs, rhs)`` path pairs for every family, on small words.

    Finite factors only.  Words are bounded by ``max_leaves`` leaves in the
    domain of the instance, counting unit leaves.  Naturality families use
    single generator edges on at most two leaves.
    """
    rt = tp.relations
    sa, sb = tp.sa, tp.sb
    alpha = leaf_alphabet(tp)
    words = {n: small_words(alpha, n) for n in range(1, max_leaves + 1)}
    upto = lambda n: [w for k in range(1, n + 1) for w in words[k]]
    edges = [e for e in generator_edges(tp, words[1]) if leaf_count(e.dom) <= 2]
    out = []

    def emit(rel, pair):
        lhs, rhs = pair
        dom = (lhs or rhs)[0].dom
        if leaf_count(dom) > max_leaves:
            return
        out.append((rel, Path(dom, lhs), Path(dom, rhs)))

    for x in upto(max_leaves):
        if isinstance(x, Tensor):
            y = x.right
            if isinstance(y, Tensor):
                emit("inverse", ([Assoc(x.left, y.left, y.right), AssocInv(x.left, y.left, y.right)], []))
            if isinstance(x.left, Tensor):
                emit("inverse", ([AssocInv(x.left.left, x.left.right, y),
                                  Assoc(x.left.left, x.left.right, y)], []))
            if x.left is I:
                emit("inverse", ([LUnit(y), LUnitInv(y)], []))
            if y is I:
                emit("inverse", ([RUnit(x.left), RUnitInv(x.left)], []))
            emit("sym-involution", ([Sym(x.left, y), Sym(y, x.left)], []))
        if leaf_count(x) < max_leaves:
            emit("inverse", ([LUnitInv(x), LUnit(x)], []))
            emit("inverse", ([RUnitInv(x), RUnit(x)], []))
            emit("unit-sym", rt.unit_sym(x))
    for n in range(4, max_leaves + 1):
        for x, y, z, w in _splits(words, n, 4):
            emit("pentagon", rt.pentagon(x, y, z, w))
    for n in range(3, max_leaves + 1):
        for x, y, z in _splits(words, n, 3):
            emit("hexagon", rt.hexagon(x, y, z))
    for n in range(2, max_leaves):
        for x, y in _splits(words, n, 2):
            emit("triangle", rt.triangle(x, y))
    for t in edges:
        for s in edges:
            emit("interchange", rt.interchange(t, s))
    small = upto(2)
    for f in edges:
        k = leaf_count(f.dom)
        for y in upto(max_leaves - k):
            emit("nat-sym-1", rt.nat_sym_1(f, y))
            emit("nat-sym-2", rt.nat_sym_2(y, f))
        for y in small:
            for z in small:
                emit("nat-assoc-1", rt.nat_assoc_1(f, y, z))
                emit("nat-assoc-2", rt.nat_assoc_2(y, f, z))
                emit("nat-assoc-3", rt.nat_assoc_3(y, z, f))
        emit("nat-lunit", rt.nat_lunit(f))
        emit("nat-runit", rt.nat_runit(f))
    ao, bo = sa.base.objects, sb.base.objects
    for g in sb.base.arrows:
        emit("nat-alpha", rt.nat_alpha(g))
        for a in ao:
            for a2 in ao:
                emit("nat-gamma-3", rt.nat_gamma_3(a, a2, g))
            for b2 in bo:
                emit("nat-delta-2", rt.nat_delta_2(a, g, b2))
                emit("nat-delta-3", rt.nat_delta_3(a, b2, g))
            if sb.is_identity(g):
                emit("h3-id-r", rt.h3_id_r(a, sb.dom(g)))
            for g2 in (h for h in sb.base.arrows if sb.dom(h) == sb.cod(g)):
                emit("h3-comp-r", rt.h3_comp_r(a, g2, g))
        for f in sa.base.arrows:
            emit("h3-interchange", rt.h3_interchange(f, g))
    for f in sa.base.arrows:
        emit("nat-beta", rt.nat_beta(f))
        for b in bo:
            for a2 in ao:
                emit("nat-gamma-1", rt.nat_gamma_1(f, a2, b))
                emit("nat-gamma-2", rt.nat_gamma_2(a2, f, b))
            for b2 in bo:
                emit("nat-delta-1", rt.nat_delta_1(f, b, b2))
            if sa.is_identity(f):
                emit("h3-id-l", rt.h3_id_l(sa.dom(f), b))
            for f2 in (h for h in sa.base.arrows if sa.dom(h) == sa.cod(f)):
                emit("h3-comp-l", rt.h3_comp_l(f2, f, b))
    for a in ao:
        for b in bo:
            for fam in ("delta_runit", "delta_lunit", "gamma_runit", "gamma_lunit"):
                emit(fam.replace("_", "-"), getattr(rt, fam)(a, b))
            for b2 in bo:
                emit("delta-sym", rt.delta_sym(a, b, b2))
                for b3 in bo:
                    emit("delta-assoc", rt.delta_assoc(a, b, b2, b3))
            for a2 in ao:
                emit("gamma-sym", rt.gamma_sym(a, a2, b))
                for a3 in ao:
                    emit("gamma-assoc", rt.gamma_assoc(a, a2, a3, b))
                for b2 in bo:
                    emit("gamma-delta", rt.gamma_delta(a, a2, b, b2))
    for b in bo:
        for a, a2, a3, a4 in product(ao, repeat=4):
            emit("gamma-interchange", rt.gamma_interchange(a, a2, a3, a4, b))
    for a in ao:
        for b, b2, b3, b4 in product(bo, repeat=4):
            emit("delta-interchange", rt.delta_interchange(a, b, b2, b3, b4))
    for b in bo:
        for b2 in bo:
            emit("alpha-tensor", rt.alpha_tensor(b, b2))
    for a in ao:
        for a2 in ao:
            emit("beta-tensor", rt.beta_tensor(a, a2))
    emit("alpha-beta-unit", rt.alpha_beta_unit())
    seen = set()
    uniq = []
    for item in out:
        key = (item[0], item[1], item[2])
        if key not in seen:
            seen.add(key)
            uniq.append(item)
    return uniq


def _splits(words: dict, n: int, parts: int):
    """Tuples of ``parts`` words with ``n`` leaves in total."""
    if parts == 1:
        for w in words.get(n, ()):
            yield (w,)
        return
    for k in range(1, n - parts + 2):
        for w in words[k]:
            for rest in _splits(words, n - k, parts - 1):
                yield (w,) + rest
