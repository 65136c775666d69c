"""The adjunction ``En -| Rn`` between ``SMC(A, [B, C])`` and strict functors out of ``A (x) B``.

``En(F)`` is a :class:`WordFunctor` fixed by the images of the generators;
``Rn(G)`` restricts along ``eta`` and looks the result up among the
enumerated objects of ``[B, C]``.
"""

from __future__ import annotations

from typing import Callable

from .fincat import FunctorData, NatTransData, Violation
from .homcat import HomSmc
from .monoidal import MonFunctor, MonNatTrans, SmcOps, SmcStructure, middle_four
from .tenspres import TenSmc, is_finite
from .wordfunctor import WordFunctor
from .words import (Alpha, ArrTensObj, Beta, Delta, Gamma, ObjTensArr, PairLeaf, Path, PathError,
                    Tensor, Word, I, identity)


def extension(tp: TenSmc, target: SmcOps, *, leaf: Callable, alpha: Callable, beta: Callable,
              gamma: Callable, delta: Callable, tens_l: Callable, tens_r: Callable,
              name: str = "En") -> WordFunctor:
    """A strict functor out of ``A (x) B`` from its values on generators.

    ``leaf(a, b)``, ``alpha(b)``, ``beta(a)``, ``gamma(a, a2, b)``,
    ``delta(a, b, b2)``, ``tens_l(f, b)``, ``tens_r(a, g)``.
    """
    def gen(e):
        if isinstance(e, Alpha):
            return alpha(e.b)
        if isinstance(e, Beta):
            return beta(e.a)
        if isinstance(e, Gamma):
            return gamma(e.a, e.a2, e.b)
        if isinstance(e, Delta):
            return delta(e.a, e.b, e.b2)
        if isinstance(e, ArrTensObj):
            return tens_l(e.f, e.b)
        if isinstance(e, ObjTensArr):
            return tens_r(e.a, e.g)
        raise PathError(f"{e!r} is not a generator of {tp.name}")

    def lf(x):
        if not isinstance(x, PairLeaf):
            raise PathError(f"{x!r} is not a leaf of {tp.name}")
        return leaf(x.a, x.b)

    return WordFunctor(tp, target, lf, gen, name=name)


# ---------------------------------------------------------------- eta

class Eta:
    """``eta: A -> [B, A (x) B]`` with values built as words and paths."""

    def __init__(self, tp: TenSmc):
        self.tp = tp

    def obj(self, a, b) -> PairLeaf:
        """``eta(a)(b)``."""
        return PairLeaf(a, b)

    def on_arr(self, a, g) -> Path:
        """``eta(a)(g)``."""
        return Path.of(self.tp.tens_r(a, g))

    def unit_cell(self, a) -> Path:
        """``eta(a)0``."""
        return Path.of(self.tp.beta(a))

    def tensor_cell(self, a, b, b2) -> Path:
        """``eta(a)2_{b, b2}``."""
        return Path.of(self.tp.delta(a, b, b2))

    def arrow(self, f, b) -> Path:
        """Component at ``b`` of ``eta(f)``."""
        return Path.of(self.tp.tens_l(f, b))

    def unit(self, b) -> Path:
        """Component at ``b`` of ``eta0``."""
        return Path.of(self.tp.alpha(b))

    def tensor(self, a, a2, b) -> Path:
        """Component at ``b`` of ``eta2_{a, a2}``."""
        return Path.of(self.tp.gamma(a, a2, b))


def eta(sa, sb) -> Eta:
    return Eta(TenSmc(sa, sb))


# ---------------------------------------------------------------- En

def en_extend(f: MonFunctor, hbc: HomSmc, tp: TenSmc | None = None) -> WordFunctor:
    """``En(F)`` for ``F: A -> [B, C]``."""
    tp = tp or TenSmc(f.source, hbc.source)
    fn = hbc.functors
    tr = hbc.trans
    return extension(
        tp, hbc.target,
        leaf=lambda a, b: fn[f.on_obj(a)].on_obj(b),
        alpha=lambda b: tr[f.f0].at(b),
        beta=lambda a: fn[f.on_obj(a)].f0,
        gamma=lambda a, a2, b: tr[f.f2[(a, a2)]].at(b),
        delta=lambda a, b, b2: fn[f.on_obj(a)].f2[(b, b2)],
        tens_l=lambda g, b: tr[f.on_arr(g)].at(b),
        tens_r=lambda a, g: fn[f.on_obj(a)].on_arr(g),
        name="En")


def en_extend_2cell(s: MonNatTrans, hbc: HomSmc) -> Callable:
    """``sigma-bar`` as a function ``X -> arrow of C``."""
    c = hbc.target
    fbar = en_extend(s.source, hbc)
    memo = {}

    def comp(x: Word):
        out = memo.get(x)
        if out is None:
            if x is I:
                out = c.id(c.unit)
            elif isinstance(x, Tensor):
                out = c.tensor_arr(comp(x.left), comp(x.right))
            else:
                out = hbc.trans[s.at(x.a)].at(x.b)
            memo[x] = out
        return out

    comp.source = fbar
    comp.target = en_extend(s.target, hbc)
    return comp


def naturality_report(comp: Callable, source, target, paths) -> list[Violation]:
    """``target(p) . comp(dom p) = comp(cod p) . source(p)`` for every sample path."""
    c = source.target
    report = []
    for p in paths:
        lhs = c.compose(target.path(p), comp(p.dom))
        rhs = c.compose(comp(p.cod), source.path(p))
        if not c.same(lhs, rhs):
            report.append(Violation("natural", (p,)))
    return report


# ---------------------------------------------------------------- Rn

class OutOfTensor:
    """A monoidal functor ``A (x) B -> C``: strict word data plus structure cells.

    ``f0`` is the unit cell and ``f2(X, Y)`` the tensor cell.  A strict
    :class:`WordFunctor` is the special case with identity cells.
    """

    def __init__(self, source: TenSmc, target: SmcOps, obj, path, f0, f2, name: str = "G"):
        self.source = source
        self.target = target
        self.obj = obj
        self.path = path
        self.f0 = f0
        self.f2 = f2
        self.name = name

    def edge(self, e):
        return self.path(Path.of(e))


def as_monoidal(g) -> OutOfTensor:
    if isinstance(g, OutOfTensor):
        return g
    t = g.target
    return OutOfTensor(g.source, t, g.obj, g.path, t.id(t.unit),
                       lambda x, y: t.id(g.obj(Tensor(x, y))), name=g.name)


def post_compose(h: MonFunctor, g) -> OutOfTensor:
    """``h . g`` for ``g`` out of ``A (x) B`` and ``h`` between finite SMCs."""
    g = as_monoidal(g)
    d = h.target
    return OutOfTensor(
        g.source, d, lambda x: h.on_obj(g.obj(x)), lambda p: h.on_arr(g.path(p)),
        d.compose(h.on_arr(g.f0), h.f0),
        lambda x, y: d.compose(h.on_arr(g.f2(x, y)), h.f2[(g.obj(x), g.obj(y))]),
        name=f"h.{g.name}")


def box(g1, g2) -> OutOfTensor:
    """Pointwise tensor of two functors out of ``A (x) B`` into the same finite ``C``."""
    g1, g2 = as_monoidal(g1), as_monoidal(g2)
    c = g1.target
    return OutOfTensor(
        g1.source, c, lambda x: c.tensor_obj(g1.obj(x), g2.obj(x)),
        lambda p: c.tensor_arr(g1.path(p), g2.path(p)),
        c.compose(c.tensor_arr(g1.f0, g2.f0), c.l_inv(c.unit)),
        lambda x, y: c.compose(c.tensor_arr(g1.f2(x, y), g2.f2(x, y)),
                               middle_four(c, g1.obj(x), g2.obj(x), g1.obj(y), g2.obj(y))),
        name=f"{g1.name}[]{g2.name}")


def unit_out(tp: TenSmc, c: SmcOps) -> OutOfTensor:
    """The constant functor at ``I`` with unit cell ``id`` and tensor cell ``r_I``."""
    i = c.unit
    return OutOfTensor(tp, c, lambda x: i, lambda p: c.id(i), c.id(i), lambda x, y: c.r(i), name="I")


def rn_restrict(g, hbc: HomSmc, sa: SmcStructure | None = None) -> MonFunctor:
    """``Rn(G) = [B, G] . eta`` located among the objects of ``[B, C]``."""
    g = as_monoidal(g)
    tp = g.source
    sa = sa or tp.sa
    sb = hbc.source
    c = hbc.target
    bobjs = sb.base.objects

    def at(a) -> MonFunctor:
        under = FunctorData({b: g.obj(PairLeaf(a, b)) for b in bobjs},
                            {h: g.edge(tp.tens_r(a, h)) for h in sb.base.arrows})
        f0 = c.compose(g.edge(tp.beta(a)), g.f0)
        f2 = {(b, b2): c.compose(g.edge(tp.delta(a, b, b2)), g.f2(PairLeaf(a, b), PairLeaf(a, b2)))
              for b in bobjs for b2 in bobjs}
        return MonFunctor(sb, c, under, f0, f2)

    omap = {}
    for a in sa.base.objects:
        fn = at(a)
        try:
            omap[a] = hbc.index_of(fn)
        except Exception:
            raise RuntimeError(f"Rn left the enumerated functors at {a!r}") from None
    amap = {}
    for f in sa.base.arrows:
        comps = {b: g.edge(tp.tens_l(f, b)) for b in bobjs}
        amap[f] = hbc.find_trans(omap[sa.base.dom(f)], omap[sa.base.cod(f)], comps)
    f0 = hbc.find_trans(hbc.smc.unit, omap[sa.unit],
                        {b: c.compose(g.edge(tp.alpha(b)), g.f0) for b in bobjs})
    f2 = {}
    for a in sa.base.objects:
        for a2 in sa.base.objects:
            comps = {b: c.compose(g.edge(tp.gamma(a, a2, b)), g.f2(PairLeaf(a, b), PairLeaf(a2, b)))
                     for b in bobjs}
            f2[(a, a2)] = hbc.find_trans(hbc.smc.tensor_obj(omap[a], omap[a2]),
                                         omap[sa.tensor_obj(a, a2)], comps)
    return MonFunctor(sa, hbc.smc, FunctorData(omap, amap), f0, f2)


def rn_2cell(comp: Callable, g1, g2, hbc: HomSmc, sa: SmcStructure) -> MonNatTrans:
    """``Rn`` on a transformation ``comp: G1 -> G2`` given by components on words."""
    f1, f2 = rn_restrict(g1, hbc, sa), rn_restrict(g2, hbc, sa)
    comps = {}
    for a in sa.base.objects:
        comps[a] = hbc.find_trans(f1.on_obj(a), f2.on_obj(a),
                                  {b: comp(PairLeaf(a, b)) for b in hbc.source.base.objects})
    return MonNatTrans(f1, f2, NatTransData(comps))


# ---------------------------------------------------------------- counit

def counit_epsilon(g) -> Callable:
    """``eps_G: En(Rn G) -> G`` as a function of the word ``X``."""
    g = as_monoidal(g)
    c = g.target
    memo = {}

    def eps(x: Word):
        out = memo.get(x)
        if out is None:
            if x is I:
                out = g.f0
            elif isinstance(x, Tensor):
                out = c.compose(g.f2(x.left, x.right), c.tensor_arr(eps(x.left), eps(x.right)))
            else:
                out = c.id(g.obj(x))
            memo[x] = out
        return out

    return eps


def counit_report(g, hbc: HomSmc, words, paths, sa: SmcStructure | None = None) -> list[Violation]:
    """Endpoints, naturality and monoidality of ``eps_G`` on samples."""
    g = as_monoidal(g)
    c = g.target
    sa = sa or g.source.sa
    eps = counit_epsilon(g)
    back = en_extend(rn_restrict(g, hbc, sa), hbc, g.source)
    report = []
    for x in words:
        e = eps(x)
        if c.dom(e) != back.obj(x) or c.cod(e) != g.obj(x):
            report.append(Violation("counit-endpoints", (x,)))
        for y in words:
            lhs = c.compose(eps(Tensor(x, y)), c.id(back.obj(Tensor(x, y))))
            rhs = c.compose(g.f2(x, y), c.tensor_arr(eps(x), eps(y)))
            if lhs != rhs:
                report.append(Violation("counit-monoidal", (x, y)))
    if eps(I) != g.f0:
        report.append(Violation("counit-unit", ()))
    for p in paths:
        lhs = c.compose(g.path(p), eps(p.dom))
        rhs = c.compose(eps(p.cod), back.path(p))
        if lhs != rhs:
            report.append(Violation("counit-natural", (p,)))
    return report


def triangle_report(f: MonFunctor, hbc: HomSmc, words) -> list[Violation]:
    """``eps * En`` and ``Rn * eps`` are identities at ``F``."""
    fbar = en_extend(f, hbc)
    c = hbc.target
    eps = counit_epsilon(fbar)
    report = []
    for x in words:
        if not c.is_identity(eps(x)):
            report.append(Violation("triangle-En", (x,)))
    sa = f.source
    rn_eps = rn_2cell(eps, fbar, fbar, hbc, sa)
    for a in sa.base.objects:
        if not hbc.smc.is_identity(rn_eps.at(a)):
            report.append(Violation("triangle-Rn", (a,)))
    return report


# ---------------------------------------------------------------- universal property

def generating_words(tp: TenSmc, max_leaves: int = 2) -> list:
    from .tenspres import leaf_alphabet, small_words
    alpha = leaf_alphabet(tp)
    return [w for n in range(1, max_leaves + 1) for w in small_words(alpha, n)]


def generator_paths(tp: TenSmc) -> list:
    from .tenspres import generator_edges, leaf_alphabet
    return [Path.of(e) for e in generator_edges(tp, leaf_alphabet(tp))]


def agree_on_generators(g1: WordFunctor, g2: WordFunctor, tp: TenSmc) -> list[Violation]:
    report = []
    for w in generating_words(tp):
        if g1.obj(w) != g2.obj(w):
            report.append(Violation("object", (w,)))
    for p in generator_paths(tp):
        if g1.path(p) != g2.path(p):
            report.append(Violation("edge", (p,)))
    return report


def restrict_dual(g: WordFunctor, hac: HomSmc, sb: SmcStructure) -> MonFunctor:
    """``[A, G] . eta*: B -> [A, C]``."""
    tp = g.source
    sa = hac.source
    c = hac.target
    aobjs = sa.base.objects
    omap = {}
    for b in sb.base.objects:
        under = FunctorData({a: g.obj(PairLeaf(a, b)) for a in aobjs},
                            {f: g.edge(tp.tens_l(f, b)) for f in sa.base.arrows})
        f2 = {(a, a2): g.edge(tp.gamma(a, a2, b)) for a in aobjs for a2 in aobjs}
        omap[b] = hac.index_of(MonFunctor(sa, c, under, g.edge(tp.alpha(b)), f2))
    amap = {h: hac.find_trans(omap[sb.base.dom(h)], omap[sb.base.cod(h)],
                              {a: g.edge(tp.tens_r(a, h)) for a in aobjs}) for h in sb.base.arrows}
    f0 = hac.find_trans(hac.smc.unit, omap[sb.unit], {a: g.edge(tp.beta(a)) for a in aobjs})
    f2 = {(b, b2): hac.find_trans(hac.smc.tensor_obj(omap[b], omap[b2]), omap[sb.tensor_obj(b, b2)],
                                  {a: g.edge(tp.delta(a, b, b2)) for a in aobjs})
          for b in sb.base.objects for b2 in sb.base.objects}
    return MonFunctor(sb, hac.smc, FunctorData(omap, amap), f0, f2)


def check_universal(f: MonFunctor, fbar: WordFunctor, hbc: HomSmc, hac: HomSmc | None = None) -> list[Violation]:
    """Empty iff ``[B, fbar] . eta = f``, ``fbar = En(f)`` and, given ``[A, C]``,
    ``[A, fbar] . eta* = f*``."""
    report = []
    try:
        back = rn_restrict(fbar, hbc, f.source)
        if back.key() != f.key():
            report.append(Violation("restriction", ()))
    except Exception:
        report.append(Violation("restriction", ()))
    report += [Violation("extension-" + v.law, v.instance)
               for v in agree_on_generators(fbar, en_extend(f, hbc, fbar.source), fbar.source)]
    if hac is not None:
        from .duality import dualize_functor
        try:
            if restrict_dual(fbar, hac, hbc.source).key() != dualize_functor(f, hbc, hac).key():
                report.append(Violation("dual-restriction", ()))
        except Exception:
            report.append(Violation("dual-restriction", ()))
    return report


def sample_words(tp: TenSmc, max_leaves: int = 3) -> list:
    return generating_words(tp, max_leaves)


def kelly_check(a: SmcStructure, b: SmcStructure, c: SmcStructure, hbc: HomSmc | None = None,
                max_leaves: int = 3) -> list[Violation]:
    """``eps`` is invertible at ``En F [] En G`` for all enumerated ``F, G`` and at the unit."""
    from .homcat import build_hom_smc, enumerate_smc_functors
    hbc = hbc or build_hom_smc(b, c)
    tp = TenSmc(a, b)
    words = sample_words(tp, max_leaves)
    fs = enumerate_smc_functors(a, hbc.smc)
    bars = [en_extend(f, hbc, tp) for f in fs]
    report = []
    cases = [("unit", unit_out(tp, c))]
    for i, f1 in enumerate(bars):
        for j, f2 in enumerate(bars):
            cases.append((f"box{i},{j}", box(f1, f2)))
    for name, g in cases:
        eps = counit_epsilon(g)
        for x in words:
            if not c.base.is_iso(eps(x)):
                report.append(Violation("kelly-" + name, (x,)))
    return report


# ---------------------------------------------------------------- tensor 2-functor actions

def ten_left(f, tp: TenSmc, tq: TenSmc, name: str = "F(x)B") -> WordFunctor:
    """``F (x) B: A (x) B -> A' (x) B`` for a monoidal ``F: A -> A'``.

    ``f`` is either strong (``on_obj``, ``on_arr``, ``f0`` and ``f2[(x, y)]``)
    or a strict :class:`WordFunctor`.
    """
    fo, fa = _obj_fn(f), _arr_fn(f)
    f0, f2 = _cells(f)

    return extension(
        tp, tq,
        leaf=lambda a, b: PairLeaf(fo(a), b),
        alpha=lambda b: _seq(tq, [tq.alpha(b)], _tl(tq, f0(), b)),
        beta=lambda a: Path.of(tq.beta(fo(a))),
        gamma=lambda a, a2, b: _seq(tq, [tq.gamma(fo(a), fo(a2), b)], _tl(tq, f2(a, a2), b)),
        delta=lambda a, b, b2: Path.of(tq.delta(fo(a), b, b2)),
        tens_l=lambda g, b: Path.of(tq.tens_l(fa(g), b)),
        tens_r=lambda a, h: Path.of(tq.tens_r(fo(a), h)),
        name=name)


def ten_right(g, tp: TenSmc, tq: TenSmc, name: str = "A(x)G") -> WordFunctor:
    """``A (x) G: A (x) B -> A (x) B'``."""
    go, ga = _obj_fn(g), _arr_fn(g)
    g0, g2 = _cells(g)
    return extension(
        tp, tq,
        leaf=lambda a, b: PairLeaf(a, go(b)),
        alpha=lambda b: Path.of(tq.alpha(go(b))),
        beta=lambda a: _seq(tq, [tq.beta(a)], _tr(tq, a, g0())),
        gamma=lambda a, a2, b: Path.of(tq.gamma(a, a2, go(b))),
        delta=lambda a, b, b2: _seq(tq, [tq.delta(a, go(b), go(b2))], _tr(tq, a, g2(b, b2))),
        tens_l=lambda f, b: Path.of(tq.tens_l(f, go(b))),
        tens_r=lambda a, h: Path.of(tq.tens_r(a, ga(h))),
        name=name)


def _obj_fn(f):
    if isinstance(f, MonFunctor) or hasattr(f, "on_obj"):
        return f.on_obj
    return f.obj


def _arr_fn(f):
    if isinstance(f, MonFunctor) or hasattr(f, "on_arr"):
        return f.on_arr
    return f.path


def _cells(f):
    if isinstance(f, MonFunctor) or hasattr(f, "f2"):
        return (lambda: f.f0), (lambda x, y: f.f2[(x, y)])
    return (lambda: None), (lambda x, y: None)


def _is_trivial(s, f) -> bool:
    if f is None:
        return True
    if is_finite(s):
        return s.is_identity(f)
    return f.is_identity()


def _tl(tq: TenSmc, f, b) -> list:
    if _is_trivial(tq.sa, f):
        return []
    return [tq.tens_l(f, b)]


def _tr(tq: TenSmc, a, g) -> list:
    if _is_trivial(tq.sb, g):
        return []
    return [tq.tens_r(a, g)]


def _seq(tq, first: list, rest: list) -> Path:
    return Path.of(*first, *rest)


def ten_left_2cell(s: MonNatTrans, tq: TenSmc) -> Callable:
    """``sigma (x) B``: components ``(a, b) -> (s_a) (x) b``, tensored over words."""
    return _word_2cell(tq, lambda x: Path.of(tq.tens_l(s.at(x.a), x.b)))


def ten_right_2cell(t: MonNatTrans, tq: TenSmc) -> Callable:
    """``A (x) tau``."""
    return _word_2cell(tq, lambda x: Path.of(tq.tens_r(x.a, t.at(x.b))))


def _word_2cell(tq: TenSmc, at_leaf: Callable) -> Callable:
    memo = {}

    def comp(x: Word):
        out = memo.get(x)
        if out is None:
            if x is I:
                out = identity(I)
            elif isinstance(x, Tensor):
                out = tq.tensor_arr(comp(x.left), comp(x.right))
            else:
                out = at_leaf(x)
            memo[x] = out
        return out

    return comp


def ten_map(kind: str, *args) -> object:
    """Dispatch for ``F(x)B``, ``A(x)G``, ``s(x)B`` and ``A(x)t``."""
    table = {"F(x)B": ten_left, "A(x)G": ten_right, "s(x)B": ten_left_2cell, "A(x)t": ten_right_2cell}
    try:
        return table[kind](*args)
    except KeyError:
        raise ValueError(f"unknown tensor action {kind!r}") from None
