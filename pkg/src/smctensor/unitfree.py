"""The free SMC on one generator ``*`` and its structure maps.

Objects are words over ``*`` and ``I``; arrows are canonical paths, equal
exactly when they permute the ``*`` occurrences the same way.

``v(X)`` is the endofunctor "substitute into ``X``": ``v(*)`` is the
identity, ``v(I)`` the unit functor and ``v(X (x) Y) = v(X) [] v(Y)``.
Everything here is computed by induction on ``X`` against any target
:class:`~smctensor.monoidal.SmcOps`, so the enumerated ``[A, A]`` is only
needed when an identifier-level answer is wanted.
"""

from __future__ import annotations

from itertools import permutations

from .fincat import FunctorData, Violation
from .homcat import HomSmc
from .monoidal import MonFunctor, SmcOps, SmcStructure, middle_four
from .wordfunctor import WordFunctor, WordOps
from .words import (STAR, Assoc, AssocInv, LUnit, LUnitInv, Path, PathError, RUnit, RUnitInv,
                    StarLeaf, Sym, Tensor, Whisker, Word, I, canonical_decide, canonical_path,
                    is_canonical)


class UnitSmc(WordOps):
    """The free SMC on ``*``; equality of arrows is decided by leaf permutation."""
    name = "1*"

    def same(self, p: Path, q: Path) -> bool:
        return canonical_decide(p, q)

    def check_path(self, p: Path):
        for e in p.edges:
            if not is_canonical(e):
                raise PathError(f"{e!r} is not an arrow of the free SMC on one generator")

    def hom(self, x: Word, y: Word) -> list:
        """One representative per arrow ``x -> y``."""
        for w in (x, y):
            if any(not isinstance(leaf, StarLeaf) for leaf in w.leaves):
                raise PathError(f"{w!r} is not a word over *")
        if x.size != y.size:
            return []
        return [canonical_path(x, y, perm) for perm in permutations(range(x.size))]

    def __repr__(self):
        return "<UnitSmc>"


_UNIT = UnitSmc()


def unit_smc() -> UnitSmc:
    return _UNIT


def star_words(n: int) -> list:
    """All words with ``n`` leaves over ``{*, I}``."""
    from .tenspres import small_words
    return small_words([STAR, I], n)


# ---------------------------------------------------------------- v by induction

class Substitution:
    """``v(X)`` evaluated in a target SMC: objects, arrows and structure cells."""

    def __init__(self, target: SmcOps):
        self.t = target
        self._memo = {}

    def obj(self, x: Word, y):
        t = self.t
        if isinstance(x, StarLeaf):
            return y
        if x is I:
            return t.unit
        return t.tensor_obj(self.obj(x.left, y), self.obj(x.right, y))

    def arr(self, x: Word, f):
        """``v(X)(f)``."""
        t = self.t
        if isinstance(x, StarLeaf):
            return f
        if x is I:
            return t.id(t.unit)
        return t.tensor_arr(self.arr(x.left, f), self.arr(x.right, f))

    def unit_cell(self, x: Word):
        """``v(X)0: I -> X[I]``."""
        t = self.t
        if not isinstance(x, Tensor):
            return t.id(t.unit)
        return t.compose(t.tensor_arr(self.unit_cell(x.left), self.unit_cell(x.right)),
                         t.l_inv(t.unit))

    def tensor_cell(self, x: Word, y, y2):
        """``v(X)2: X[y] X[y2] -> X[y y2]``."""
        t = self.t
        if isinstance(x, StarLeaf):
            return t.id(t.tensor_obj(y, y2))
        if x is I:
            return t.r(t.unit)
        m = middle_four(t, self.obj(x.left, y), self.obj(x.right, y),
                        self.obj(x.left, y2), self.obj(x.right, y2))
        return t.compose(t.tensor_arr(self.tensor_cell(x.left, y, y2),
                                      self.tensor_cell(x.right, y, y2)), m)

    def edge(self, e, y):
        """Component at ``y`` of ``v(e)`` for a canonical edge ``e``."""
        t = self.t
        o = lambda w: self.obj(w, y)
        if isinstance(e, Whisker):
            inner = self.edge(e.inner, y)
            ident = t.id(o(e.x))
            return t.tensor_arr(ident, inner) if e.side == "L" else t.tensor_arr(inner, ident)
        if isinstance(e, Assoc):
            return t.a(o(e.x), o(e.y), o(e.z))
        if isinstance(e, AssocInv):
            return t.a_inv(o(e.x), o(e.y), o(e.z))
        if isinstance(e, LUnit):
            return t.l(o(e.x))
        if isinstance(e, LUnitInv):
            return t.l_inv(o(e.x))
        if isinstance(e, RUnit):
            return t.r(o(e.x))
        if isinstance(e, RUnitInv):
            return t.r_inv(o(e.x))
        if isinstance(e, Sym):
            return t.s(o(e.x), o(e.y))
        raise PathError(f"{e!r} is not an arrow of the free SMC on one generator")

    def path(self, p: Path, y):
        """``v(p)_y``."""
        t = self.t
        out = t.id(self.obj(p.dom, y))
        for e in p.edges:
            out = t.compose(self.edge(e, y), out)
        return out


def v_monfunctor(a: SmcStructure, x: Word) -> MonFunctor:
    """``v(X)`` as a :class:`MonFunctor` ``A -> A``."""
    sub = Substitution(a)
    objs = a.base.objects
    under = FunctorData({y: sub.obj(x, y) for y in objs}, {f: sub.arr(x, f) for f in a.base.arrows})
    f2 = {(y, y2): sub.tensor_cell(x, y, y2) for y in objs for y2 in objs}
    return MonFunctor(a, a, under, sub.unit_cell(x), f2)


def v_functor(a: SmcStructure, haa: HomSmc) -> WordFunctor:
    """``v: 1* -> [A, A]`` as a strict evaluator into the enumerated hom."""
    if haa.source is not a or haa.target is not a:
        raise ValueError("v needs the hom [A, A] of the same A")

    def leaf(x):
        return haa.index_of(v_monfunctor(a, x))

    def generator(e):
        raise PathError(f"{e!r} is not an arrow of the free SMC on one generator")

    fn = WordFunctor(_UNIT, haa.smc, leaf, generator, name="v")
    fn.star = leaf(STAR)
    return fn


def v_arrow(a: SmcStructure, haa: HomSmc, p: Path) -> int:
    """``v(p)`` as an arrow index of ``[A, A]``, built componentwise."""
    sub = Substitution(a)
    src = haa.index_of(v_monfunctor(a, p.dom))
    tgt = haa.index_of(v_monfunctor(a, p.cod))
    return haa.find_trans(src, tgt, {y: sub.path(p, y) for y in a.base.objects})


class VStar:
    """``v*: A -> [1*, A]``; ``v*(a)(X) = v(X)(a)``, kept symbolic in ``X``."""

    def __init__(self, a: SmcOps):
        self.a = a
        self.sub = Substitution(a)

    def at(self, y) -> WordFunctor:
        """The strict functor ``v*(y): 1* -> A``."""
        sub = self.sub
        fn = WordFunctor(_UNIT, self.a, lambda x: sub.obj(x, y), lambda e: sub.edge(e, y),
                         name=f"v*({y!r})")
        return fn

    def on_arr(self, f, x: Word):
        """Component at ``X`` of ``v*(f)``."""
        return self.sub.arr(x, f)

    def unit_cell(self, x: Word):
        """Component at ``X`` of ``(v*)0``."""
        return self.sub.unit_cell(x)

    def tensor_cell(self, y, y2, x: Word):
        """Component at ``X`` of ``(v*)2_{y, y2}``."""
        return self.sub.tensor_cell(x, y, y2)


def v_star(a: SmcOps) -> VStar:
    return VStar(a)


def ev_star(fn):
    """``ev_*``: a functor out of ``1*`` goes to its value at ``*``."""
    return fn.obj(STAR)


def ev_star_arrow(component):
    """``ev_*`` on a transformation given as ``X -> component``."""
    return component(STAR)


def ev_vstar_report(a: SmcStructure) -> list[Violation]:
    """``ev_* . v* = 1`` on objects, arrows and structure cells."""
    vs = VStar(a)
    report = []
    for y in a.base.objects:
        if ev_star(vs.at(y)) != y:
            report.append(Violation("ev-vstar-object", (y,)))
        for y2 in a.base.objects:
            if not a.is_identity(vs.tensor_cell(y, y2, STAR)):
                report.append(Violation("ev-vstar-tensor", (y, y2)))
    for f in a.base.arrows:
        if vs.on_arr(f, STAR) != f:
            report.append(Violation("ev-vstar-arrow", (f,)))
    if not a.is_identity(vs.unit_cell(STAR)):
        report.append(Violation("ev-vstar-unit", ()))
    return report


# ---------------------------------------------------------------- counit

class UnitFunctor:
    """A monoidal functor ``1* -> A`` given by strict word data and structure cells.

    ``obj`` and ``path`` evaluate words and paths; ``f0`` is the unit cell
    and ``f2(X, Y)`` the tensor cell ``F X (x) F Y -> F (X (x) Y)``.
    """

    def __init__(self, target: SmcOps, obj, path, f0, f2, name: str = "F"):
        self.target = target
        self.obj = obj
        self.path = path
        self.f0 = f0
        self.f2 = f2
        self.name = name


def strict_unit_functor(fn: WordFunctor) -> UnitFunctor:
    t = fn.target
    return UnitFunctor(t, fn.obj, fn.path, t.id(t.unit),
                       lambda x, y: t.id(fn.obj(Tensor(x, y))), name=fn.name)


def post_compose(h: MonFunctor, fn: WordFunctor) -> UnitFunctor:
    """``h . fn`` for a monoidal ``h`` between finite SMCs."""
    return UnitFunctor(h.target, lambda x: h.on_obj(fn.obj(x)), lambda p: h.on_arr(fn.path(p)),
                       h.f0, lambda x, y: h.f2[(fn.obj(x), fn.obj(y))], name=f"h.{fn.name}")


def unit_counit(f: UnitFunctor):
    """``eps_F: v*(F *) -> F`` as a function of the word ``X``."""
    t = f.target
    star_value = f.obj(STAR)
    vs = VStar(t).at(star_value)
    memo = {}

    def eps(x: Word):
        out = memo.get(x)
        if out is not None:
            return out
        if isinstance(x, StarLeaf):
            out = t.id(star_value)
        elif x is I:
            out = f.f0
        else:
            out = t.compose(f.f2(x.left, x.right), t.tensor_arr(eps(x.left), eps(x.right)))
        memo[x] = out
        return out

    eps.source = vs
    return eps


def counit_report(f: UnitFunctor, words, paths) -> list[Violation]:
    """Naturality of ``eps_F`` against sample paths, and its endpoints on sample words."""
    t = f.target
    eps = unit_counit(f)
    vs = eps.source
    report = []
    for x in words:
        c = eps(x)
        if t.dom(c) != vs.obj(x) or t.cod(c) != f.obj(x):
            report.append(Violation("counit-endpoints", (x,)))
    for p in paths:
        lhs = t.compose(f.path(p), eps(p.dom))
        rhs = t.compose(eps(p.cod), vs.path(p))
        if not t.same(lhs, rhs):
            report.append(Violation("counit-natural", (p,)))
    return report
