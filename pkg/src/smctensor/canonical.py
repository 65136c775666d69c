"""The canonical 1-cells ``S, A, A', L, R, L', R'`` and ``T`` as word evaluators.

Each strict cell is the unfolding of an ``En``-composite into generator
images.  Structure cells of pointwise tensors follow the conventions of
:mod:`smctensor.homcat`: the unit cell of ``F [] G`` is
``(F0 (x) G0) . l_I^-1`` and its tensor cell is ``(F2 (x) G2) . m``
with ``m`` the middle-four interchange.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from .adjoin import extension, ten_left, ten_right
from .fincat import Violation
from .monoidal import SmcStructure, middle_four
from .tenspres import Distinct, Equal, TenSmc, Witness, decide_equal, is_finite, small_words
from .unitfree import Substitution, UnitSmc, VStar, unit_smc
from .wordfunctor import WordFunctor
from .words import (STAR, ArrTensObj, LUnit, ObjTensArr, Whisker, core, wrap, LUnitInv, PairLeaf, Path, RUnit, RUnitInv, Sym, Tensor, Word, I,
                    identity, tensor_paths)

_TENSORS: dict = {}


def tensor(x, y) -> TenSmc:
    """The presented ``X (x) Y``, one instance per pair of factors."""
    key = (id(x), id(y))
    out = _TENSORS.get(key)
    if out is None:
        out = _TENSORS[key] = TenSmc(x, y)
    return out


def over_leaves(w: Word, at_leaf: Callable) -> Path:
    """Tensor of per-leaf paths arranged like ``w``; unit leaves give identities."""
    if w is I:
        return identity(I)
    if isinstance(w, Tensor):
        return tensor_paths(over_leaves(w.left, at_leaf), over_leaves(w.right, at_leaf))
    return at_leaf(w)


def _p(*edges_or_paths) -> Path:
    """Concatenate edges and paths, skipping identities."""
    edges = []
    dom = None
    for item in edges_or_paths:
        if isinstance(item, Path):
            if dom is None and not edges:
                dom = item.dom
            edges.extend(item.edges)
        else:
            if dom is None and not edges:
                dom = item.dom
            edges.append(item)
    return Path(dom, edges)


def _unit_split(comp: Callable, w: Word) -> Path:
    """Unit cell of a pointwise tensor over ``w``: ``I -> w[leaf -> ...]``."""
    if w is I:
        return identity(I)
    if isinstance(w, Tensor):
        return _p(LUnitInv(I), tensor_paths(_unit_split(comp, w.left), _unit_split(comp, w.right)))
    return comp(w)


# ---------------------------------------------------------------- symmetry

def build_s(x, y) -> WordFunctor:
    """``S_{X,Y}: X (x) Y -> Y (x) X``."""
    src, dst = tensor(x, y), tensor(y, x)
    return extension(
        src, dst,
        leaf=lambda a, b: PairLeaf(b, a),
        alpha=lambda b: Path.of(dst.beta(b)),
        beta=lambda a: Path.of(dst.alpha(a)),
        gamma=lambda a, a2, b: Path.of(dst.delta(b, a, a2)),
        delta=lambda a, b, b2: Path.of(dst.gamma(b, b2, a)),
        tens_l=lambda f, b: Path.of(dst.tens_r(b, f)),
        tens_r=lambda a, g: Path.of(dst.tens_l(g, a)),
        name="S")


# ---------------------------------------------------------------- associativity

def _k_functor(x, y, z, c) -> WordFunctor:
    """``X (x) Y -> X (x) (Y (x) Z)``, ``(a, b) |-> (a, (b, c))``."""
    src, yz = tensor(x, y), tensor(y, z)
    dst = tensor(x, yz)
    return extension(
        src, dst,
        leaf=lambda a, b: PairLeaf(a, PairLeaf(b, c)),
        alpha=lambda b: Path.of(dst.alpha(PairLeaf(b, c))),
        beta=lambda a: _p(dst.beta(a), dst.tens_r(a, Path.of(yz.alpha(c)))),
        gamma=lambda a, a2, b: Path.of(dst.gamma(a, a2, PairLeaf(b, c))),
        delta=lambda a, b, b2: _p(dst.delta(a, PairLeaf(b, c), PairLeaf(b2, c)),
                                  dst.tens_r(a, Path.of(yz.gamma(b, b2, c)))),
        tens_l=lambda f, b: Path.of(dst.tens_l(f, PairLeaf(b, c))),
        tens_r=lambda a, g: Path.of(dst.tens_r(a, Path.of(yz.tens_l(g, c)))),
        name=f"K[{c!r}]")


def build_a_prime(x, y, z) -> WordFunctor:
    """``A'_{X,Y,Z}: (X (x) Y) (x) Z -> X (x) (Y (x) Z)``."""
    xy, yz = tensor(x, y), tensor(y, z)
    src, dst = tensor(xy, z), tensor(x, yz)
    ks = {}

    def k(c):
        if c not in ks:
            ks[c] = _k_functor(x, y, z, c)
        return ks[c]

    def delta_cell(w, c, c2):
        # tensor cell of the pointwise functor c |-> K_c(w)
        if w is I:
            return Path.of(RUnit(I))
        if isinstance(w, Tensor):
            m = middle_four(dst, k(c).obj(w.left), k(c).obj(w.right), k(c2).obj(w.left), k(c2).obj(w.right))
            return _p(m, tensor_paths(delta_cell(w.left, c, c2), delta_cell(w.right, c, c2)))
        return _p(dst.delta(w.a, PairLeaf(w.b, c), PairLeaf(w.b, c2)),
                  dst.tens_r(w.a, Path.of(yz.delta(w.b, c, c2))))

    return extension(
        src, dst,
        leaf=lambda w, c: k(c).obj(w),
        alpha=lambda c: identity(I),
        beta=lambda w: _unit_split(
            lambda leaf: _p(dst.beta(leaf.a), dst.tens_r(leaf.a, Path.of(yz.beta(leaf.b)))), w),
        gamma=lambda w, w2, c: identity(k(c).obj(Tensor(w, w2))),
        delta=delta_cell,
        tens_l=lambda p, c: k(c).path(p),
        tens_r=lambda w, h: over_leaves(
            w, lambda leaf: Path.of(dst.tens_r(leaf.a, Path.of(yz.tens_r(leaf.b, h))))),
        name="A'")


def _g_functor(x, y, z, a) -> WordFunctor:
    """``Y (x) Z -> (X (x) Y) (x) Z``, ``(b, c) |-> ((a, b), c)``."""
    xy = tensor(x, y)
    src, dst = tensor(y, z), tensor(xy, z)
    return extension(
        src, dst,
        leaf=lambda b, c: PairLeaf(PairLeaf(a, b), c),
        alpha=lambda c: _p(dst.alpha(c), dst.tens_l(Path.of(xy.beta(a)), c)),
        beta=lambda b: Path.of(dst.beta(PairLeaf(a, b))),
        gamma=lambda b, b2, c: _p(dst.gamma(PairLeaf(a, b), PairLeaf(a, b2), c),
                                  dst.tens_l(Path.of(xy.delta(a, b, b2)), c)),
        delta=lambda b, c, c2: Path.of(dst.delta(PairLeaf(a, b), c, c2)),
        tens_l=lambda g, c: Path.of(dst.tens_l(Path.of(xy.tens_r(a, g)), c)),
        tens_r=lambda b, h: Path.of(dst.tens_r(PairLeaf(a, b), h)),
        name=f"G[{a!r}]")


def build_a(x, y, z) -> WordFunctor:
    """``A_{X,Y,Z}: X (x) (Y (x) Z) -> (X (x) Y) (x) Z``."""
    xy, yz = tensor(x, y), tensor(y, z)
    src, dst = tensor(x, yz), tensor(xy, z)
    gs = {}

    def g(a):
        if a not in gs:
            gs[a] = _g_functor(x, y, z, a)
        return gs[a]

    def unit_comp(v):
        # component at v of F0: I -> G_{I_X}
        if v is I:
            return identity(I)
        if isinstance(v, Tensor):
            return _p(RUnitInv(I), tensor_paths(unit_comp(v.left), unit_comp(v.right)))
        return _p(dst.alpha(v.b), dst.tens_l(Path.of(xy.alpha(v.a)), v.b))

    def tensor_comp(a, a2, v):
        # component at v of F2_{a,a2}: G_a [] G_a2 -> G_{a a2}
        if v is I:
            return Path.of(LUnit(I))
        if isinstance(v, Tensor):
            ga, gb = g(a), g(a2)
            m = middle_four(dst, ga.obj(v.left), ga.obj(v.right), gb.obj(v.left), gb.obj(v.right))
            return _p(m, tensor_paths(tensor_comp(a, a2, v.left), tensor_comp(a, a2, v.right)))
        return _p(dst.gamma(PairLeaf(a, v.a), PairLeaf(a2, v.a), v.b),
                  dst.tens_l(Path.of(xy.gamma(a, a2, v.a)), v.b))

    return extension(
        src, dst,
        leaf=lambda a, v: g(a).obj(v),
        alpha=unit_comp,
        beta=lambda a: identity(I),
        gamma=tensor_comp,
        delta=lambda a, v, v2: identity(g(a).obj(Tensor(v, v2))),
        tens_l=lambda f, v: over_leaves(
            v, lambda leaf: Path.of(dst.tens_l(Path.of(xy.tens_l(f, leaf.a)), leaf.b))),
        tens_r=lambda a, q: g(a).path(q),
        name="A")


# ---------------------------------------------------------------- units

class StrongInto:
    """A monoidal functor from a finite SMC into a presented one.

    ``f2`` is a lazy mapping ``(x, y) -> path``.
    """

    def __init__(self, source: SmcStructure, target: TenSmc, obj, arr, f0: Path, f2: Callable, name: str):
        self.source = source
        self.target = target
        self._obj, self._arr = obj, arr
        self.f0 = f0
        self.f2 = _LazyCells(f2)
        self.name = name

    def on_obj(self, x):
        return self._obj(x)

    def on_arr(self, f):
        return self._arr(f)


class _LazyCells:
    def __init__(self, fn):
        self.fn = fn

    def __getitem__(self, key):
        return self.fn(*key)


def build_r_prime(a: SmcStructure) -> StrongInto:
    """``R'_A: A -> A (x) 1*``, ``a |-> (a, *)``."""
    dst = tensor(a, unit_smc())
    return StrongInto(a, dst, lambda x: PairLeaf(x, STAR), lambda f: Path.of(dst.tens_l(f, STAR)),
                      Path.of(dst.alpha(STAR)), lambda x, y: Path.of(dst.gamma(x, y, STAR)), "R'")


def build_l_prime(a: SmcStructure) -> StrongInto:
    """``L'_A: A -> 1* (x) A``, ``a |-> (*, a)``."""
    dst = tensor(unit_smc(), a)
    return StrongInto(a, dst, lambda x: PairLeaf(STAR, x), lambda f: Path.of(dst.tens_r(STAR, f)),
                      Path.of(dst.beta(STAR)), lambda x, y: Path.of(dst.delta(STAR, x, y)), "L'")


def build_r(a: SmcStructure) -> WordFunctor:
    """``R_A = En(v*): A (x) 1* -> A``."""
    src = tensor(a, unit_smc())
    sub = Substitution(a)
    return extension(
        src, a,
        leaf=lambda x, w: sub.obj(w, x),
        alpha=lambda w: sub.unit_cell(w),
        beta=lambda x: a.id(a.unit),
        gamma=lambda x, x2, w: sub.tensor_cell(w, x, x2),
        delta=lambda x, w, w2: a.id(sub.obj(Tensor(w, w2), x)),
        tens_l=lambda f, w: sub.arr(w, f),
        tens_r=lambda x, p: sub.path(p, x),
        name="R")


def build_l(a: SmcStructure) -> WordFunctor:
    """``L_A = En(v): 1* (x) A -> A``."""
    src = tensor(unit_smc(), a)
    sub = Substitution(a)
    return extension(
        src, a,
        leaf=lambda w, x: sub.obj(w, x),
        alpha=lambda x: a.id(a.unit),
        beta=lambda w: sub.unit_cell(w),
        gamma=lambda w, w2, x: a.id(sub.obj(Tensor(w, w2), x)),
        delta=lambda w, x, x2: sub.tensor_cell(w, x, x2),
        tens_l=lambda p, x: sub.path(p, x),
        tens_r=lambda w, f: sub.arr(w, f),
        name="L")


def build_canonical(kind: str, *cats):
    """Dispatch by name: ``S``, ``A``, ``A'``, ``L``, ``R``, ``L'``, ``R'``, ``T``."""
    arity = {"S": 2, "A": 3, "A'": 3, "L": 1, "R": 1, "L'": 1, "R'": 1, "T": 3}
    if kind not in arity:
        raise ValueError(f"unknown canonical 1-cell {kind!r}")
    if len(cats) != arity[kind]:
        raise ValueError(f"{kind} takes {arity[kind]} categories, got {len(cats)}")
    build = {"S": build_s, "A": build_a, "A'": build_a_prime, "L": build_l, "R": build_r,
             "L'": build_l_prime, "R'": build_r_prime, "T": t_composite}[kind]
    return build(*cats)


def t_composite(a, b, c, which: int = 0) -> WordFunctor:
    """``T_{A,B,C}: (A (x) B) (x) C -> C (x) (B (x) A)``.

    ``which=0``: ``(1 (x) S) . S``; ``which=1``: ``S . (S (x) 1)``.
    """
    ab, ba = tensor(a, b), tensor(b, a)
    if which == 0:
        s1 = build_s(ab, c)
        one_s = ten_right(build_s(a, b), tensor(c, ab), tensor(c, ba), name="1(x)S")
        return s1.then(one_s, name="T")
    s_one = ten_left(build_s(a, b), tensor(ab, c), tensor(ba, c), name="S(x)1")
    return s_one.then(build_s(ba, c), name="T")


def compose_strong(g: WordFunctor, f: StrongInto):
    """``g . f`` for a strong ``f`` into a presented category and strict ``g``."""
    t = g.target
    return _Composite(f.source, t, lambda x: g.obj(f.on_obj(x)), lambda h: g.path(f.on_arr(h)),
                      g.path(f.f0), lambda x, y: g.path(f.f2[(x, y)]))


def then_strong(g: WordFunctor, f: StrongInto, name: str = "FG") -> WordFunctor:
    """Strict functor agreeing with ``f . g`` on leaves and generators.

    ``g`` is strict into a finite SMC and ``f`` strong out of it.  Generator
    domains are ``I``, a leaf or two leaves, so each image is the matching
    structure cell of ``f`` followed by ``f`` of the image under ``g``.
    """
    def generator(e):
        body = f.on_arr(g.path(Path.of(e)))
        d = e.dom
        if d is I:
            return _p(f.f0, body)
        if isinstance(d, Tensor):
            return _p(f.f2[(g.obj(d.left), g.obj(d.right))], body)
        return body

    return WordFunctor(g.source, f.target, lambda x: f.on_obj(g.obj(x)), generator, name=name)


@dataclass
class _Composite:
    source: object
    target: object
    on_obj: Callable
    on_arr: Callable
    f0: object
    f2: Callable


# ---------------------------------------------------------------- samples

def sample_objects(s, limit: int = 2) -> list:
    """Objects of a factor used to seed sample leaves."""
    if is_finite(s):
        return list(s.base.objects)
    if isinstance(s, UnitSmc):
        return [STAR, I, Tensor(STAR, STAR)][:limit + 1]
    leaves = sample_leaves(s, limit)
    out = [I] + leaves
    if limit > 1 and leaves:
        out.append(Tensor(leaves[0], leaves[-1]))
    return out


def sample_leaves(tp: TenSmc, limit: int = 2) -> list:
    return [PairLeaf(x, y) for x in sample_objects(tp.sa, limit - 1)
            for y in sample_objects(tp.sb, limit - 1)]


def sample_arrows(s, limit: int = 2) -> list:
    """Arrows of a factor: all of a finite one, single generators of a presented one."""
    if is_finite(s):
        return list(s.base.arrows)
    objs = sample_objects(s, limit)
    if isinstance(s, UnitSmc):
        return [Path.of(Sym(STAR, STAR)), s.l(STAR), s.r(STAR), s.l_inv(STAR)]
    words1 = [o for o in objs if not isinstance(o, Tensor)]
    return [Path.of(e) for e in sample_edges(s, words1, limit - 1)]


def sample_edges(tp: TenSmc, words1, limit: int = 2) -> list:
    """Single generator edges of ``tp`` on sample leaves."""
    sa, sb = tp.sa, tp.sb
    ao, bo = sample_objects(sa, limit), sample_objects(sb, limit)
    out = []
    for x in words1:
        for y in words1:
            out.append(Sym(x, y))
    out += [tp.alpha(b) for b in bo] + [tp.beta(a) for a in ao]
    small_a = ao[:3] if not is_finite(sa) else ao
    small_b = bo[:3] if not is_finite(sb) else bo
    for a in small_a:
        for a2 in small_a:
            for b in small_b:
                out.append(tp.gamma(a, a2, b))
    for a in small_a:
        for b in small_b:
            for b2 in small_b:
                out.append(tp.delta(a, b, b2))
    for f in sample_arrows(sa, limit):
        for b in small_b:
            out.append(tp.tens_l(f, b))
    for g in sample_arrows(sb, limit):
        for a in small_a:
            out.append(tp.tens_r(a, g))
    return out


@dataclass(frozen=True)
class Grid:
    words: tuple
    edges: tuple


def default_grid(tp: TenSmc, max_leaves: int = 3, limit: int = 2) -> Grid:
    """Words with at most ``max_leaves`` leaves and single generator edges."""
    leaves = [I] + sample_leaves(tp, limit)
    words = tuple(w for n in range(1, max_leaves + 1) for w in small_words(leaves, n))
    edges = tuple(sample_edges(tp, leaves, limit))
    return Grid(words, edges)


# ---------------------------------------------------------------- diagrams

@dataclass
class DiagramResult:
    diagram: str
    sample: object
    verdict: object

    @property
    def ok(self) -> bool:
        return isinstance(self.verdict, Equal)


def _compare_paths(p, q, target, budget):
    if p == q:
        return Equal(_trivial_witness(p, q))
    if is_finite(target):
        return Equal(_trivial_witness(p, q)) if p == q else Distinct(-1, "finite target", p, q)
    return decide_equal(p, q, budget, tp=target, normalize_first=True)


def _trivial_witness(p, q):
    return Witness(p, q, ())


def compare_strict(name: str, leg1: WordFunctor, leg2: WordFunctor, grid: Grid, budget: int,
                   literal: bool = False) -> list:
    """Both legs on every grid word and edge.

    Edges agree literally, or up to functoriality of H3 edges, or by search.
    With ``literal`` the search is skipped.
    """
    out = []
    target = leg1.target
    for w in grid.words:
        o1, o2 = leg1.obj(w), leg2.obj(w)
        verdict = Equal(_trivial_witness(identity(w), identity(w))) if o1 == o2 else \
            Distinct(-1, "objects", o1, o2)
        out.append(DiagramResult(name, w, verdict))
    for e in grid.edges:
        p = Path.of(e)
        p1, p2 = leg1.path(p), leg2.path(p)
        if is_finite(target):
            verdict = Equal(_trivial_witness(p, p)) if p1 == p2 else Distinct(-1, "arrows", p1, p2)
        elif p1.dom is not p2.dom or p1.cod is not p2.cod:
            verdict = Distinct(-1, "endpoints", p1, p2)
        elif h3_normal(p1, target) == h3_normal(p2, target):
            verdict = Equal(_trivial_witness(p1, p1))
        elif literal:
            verdict = Distinct(-1, "literal", p1, p2)
        else:
            verdict = _compare_paths(p1, p2, target, budget)
        out.append(DiagramResult(name, e, verdict))
    return out


def compare_strong(name: str, leg1, leg2, a: SmcStructure, budget: int, literal: bool = False) -> list:
    """Objects, arrows, unit and tensor cells of two functors out of a finite SMC."""
    out = []
    target = leg1.target
    ok = lambda: Equal(_trivial_witness(identity(I), identity(I)))

    def cmp(sample, u, v):
        if u == v:
            return DiagramResult(name, sample, ok())
        paths = isinstance(u, Path) and isinstance(v, Path)
        if paths and h3_normal(u, target) == h3_normal(v, target):
            return DiagramResult(name, sample, ok())
        if paths and not literal and not is_finite(target) and u.dom is v.dom and u.cod is v.cod:
            return DiagramResult(name, sample, decide_equal(u, v, budget, tp=target, normalize_first=True))
        return DiagramResult(name, sample, Distinct(-1, "values", u, v))

    for x in a.base.objects:
        out.append(cmp(("obj", x), leg1.on_obj(x), leg2.on_obj(x)))
    for f in a.base.arrows:
        out.append(cmp(("arr", f), leg1.on_arr(f), leg2.on_arr(f)))
    out.append(cmp(("unit",), leg1.f0, leg2.f0))
    for x in a.base.objects:
        for y in a.base.objects:
            out.append(cmp(("tensor", x, y), _cell(leg1, x, y), _cell(leg2, x, y)))
    return out


def _cell(f, x, y):
    c = f.f2
    return c(x, y) if callable(c) else c[(x, y)]


class IdentityOn:
    """The identity functor on a finite SMC, in the shape ``compare_strong`` reads."""

    def __init__(self, a: SmcStructure):
        self.source = self.target = a
        self.f0 = a.id(a.unit)
        self.f2 = lambda x, y: a.id(a.tensor_obj(x, y))
        self.on_obj = lambda x: x
        self.on_arr = lambda f: f


DIAGRAMS = ("SRpLp", "waxiom3", "waxiom5", "waxiom12", "waxiom22", "waxiom42", "AandAprel",
            "waxiom1", "waxiom4", "Rinverse", "ev-vstar")


def diagram_legs(diagram: str, cats: tuple):
    """``(kind, leg1, leg2, source)`` where ``kind`` is ``"strict"`` or ``"strong"``."""
    if diagram == "SRpLp":
        (a,) = cats
        u = unit_smc()
        return "strong", compose_strong(build_s(a, u), build_r_prime(a)), build_l_prime(a), a
    if diagram == "waxiom3":
        a, b = cats
        return "strict", build_s(a, b).then(build_s(b, a)), _identity_word(tensor(a, b)), tensor(a, b)
    if diagram == "waxiom5":
        (a,) = cats
        u = unit_smc()
        return "strict", build_s(a, u).then(build_l(a)), build_r(a), tensor(a, u)
    if diagram == "waxiom22":
        a, c = cats
        u = unit_smc()
        au = tensor(a, u)
        r_one = ten_left(build_r_prime(a), tensor(a, c), tensor(au, c), name="R'(x)1")
        one_l = ten_right(build_l_prime(c), tensor(a, c), tensor(a, tensor(u, c)), name="1(x)L'")
        return "strict", r_one.then(build_a_prime(a, u, c)), one_l, tensor(a, c)
    if diagram == "waxiom12":
        a, b, c, d = cats
        ab, bc, cd = tensor(a, b), tensor(b, c), tensor(c, d)
        top = build_a_prime(ab, c, d).then(build_a_prime(a, b, cd))
        a1 = ten_left(build_a_prime(a, b, c), tensor(tensor(ab, c), d), tensor(tensor(a, bc), d), name="A'(x)1")
        one_a = ten_right(build_a_prime(b, c, d), tensor(a, tensor(bc, d)), tensor(a, tensor(b, cd)),
                          name="1(x)A'")
        bottom = a1.then(build_a_prime(a, bc, d)).then(one_a)
        return "strict", top, bottom, tensor(tensor(ab, c), d)
    if diagram == "waxiom1":
        a, b, c, d = cats
        ab, bc, cd = tensor(a, b), tensor(b, c), tensor(c, d)
        top = build_a(a, b, cd).then(build_a(ab, c, d))
        one_a = ten_right(build_a(b, c, d), tensor(a, tensor(b, cd)), tensor(a, tensor(bc, d)), name="1(x)A")
        a1 = ten_left(build_a(a, b, c), tensor(tensor(a, bc), d), tensor(tensor(ab, c), d), name="A(x)1")
        bottom = one_a.then(build_a(a, bc, d)).then(a1)
        return "strict", top, bottom, tensor(a, tensor(b, cd))
    if diagram == "waxiom42":
        a, b, c = cats
        ab, ba, bc, ca, ac = tensor(a, b), tensor(b, a), tensor(b, c), tensor(c, a), tensor(a, c)
        one_s = ten_right(build_s(c, a), tensor(b, ca), tensor(b, ac), name="1(x)S")
        top = build_a_prime(a, b, c).then(build_s(a, bc)).then(build_a_prime(b, c, a)).then(one_s)
        s_one = ten_left(build_s(a, b), tensor(ab, c), tensor(ba, c), name="S(x)1")
        bottom = s_one.then(build_a_prime(b, a, c))
        return "strict", top, bottom, tensor(ab, c)
    if diagram == "waxiom4":
        a, b, c = cats
        ab, bc, cb, ca, ac = tensor(a, b), tensor(b, c), tensor(c, b), tensor(c, a), tensor(a, c)
        s_one = ten_left(build_s(c, a), tensor(ca, b), tensor(ac, b), name="S(x)1")
        top = build_a(a, b, c).then(build_s(ab, c)).then(build_a(c, a, b)).then(s_one)
        one_s = ten_right(build_s(b, c), tensor(a, bc), tensor(a, cb), name="1(x)S")
        bottom = one_s.then(build_a(a, c, b))
        return "strict", top, bottom, tensor(a, bc)
    if diagram == "AandAprel":
        a, b, c = cats
        top = t_composite(a, b, c).then(build_a(c, b, a)).then(t_composite(c, b, a))
        return "strict", top, build_a_prime(a, b, c), tensor(tensor(a, b), c)
    if diagram == "Rinverse":
        (a,) = cats
        return "strong", compose_strong(build_r(a), build_r_prime(a)), IdentityOn(a), a
    if diagram == "ev-vstar":
        (a,) = cats
        vs = VStar(a)
        leg = _Composite(a, a, lambda x: vs.at(x).obj(STAR), lambda f: vs.on_arr(f, STAR),
                         vs.unit_cell(STAR), lambda x, y: vs.tensor_cell(x, y, STAR))
        return "strong", leg, IdentityOn(a), a
    raise ValueError(f"unknown diagram {diagram!r}")


def _identity_word(tp: TenSmc) -> WordFunctor:
    return extension(
        tp, tp, leaf=lambda a, b: PairLeaf(a, b),
        alpha=lambda b: Path.of(tp.alpha(b)), beta=lambda a: Path.of(tp.beta(a)),
        gamma=lambda a, a2, b: Path.of(tp.gamma(a, a2, b)),
        delta=lambda a, b, b2: Path.of(tp.delta(a, b, b2)),
        tens_l=lambda f, b: Path.of(tp.tens_l(f, b)), tens_r=lambda a, g: Path.of(tp.tens_r(a, g)),
        name="1")


def check_diagram(diagram: str, cats: tuple, grid: Grid | None = None, budget: int = 32,
                  literal: bool = False) -> list:
    """Verdicts for both legs of ``diagram`` over a sample grid.

    With ``literal`` the legs must agree up to H3 functoriality, without search.
    """
    kind, leg1, leg2, source = diagram_legs(diagram, cats)
    if kind == "strong":
        return compare_strong(diagram, leg1, leg2, source, budget, literal)
    grid = grid or default_grid(source)
    return compare_strict(diagram, leg1, leg2, grid, budget, literal)


# ---------------------------------------------------------------- lax inverses

@dataclass
class Cell:
    """A 2-cell between functors out of a presented category, by components."""
    name: str
    source: object
    target: object
    component: Callable


def aa_prime_cell(x, y, z) -> Cell:
    """``A A' -> 1`` on ``(X (x) Y) (x) Z``."""
    dst = tensor(tensor(x, y), z)

    def inner(v, c):
        if v is I:
            return Path.of(dst.alpha(c))
        if isinstance(v, Tensor):
            return _p(tensor_paths(inner(v.left, c), inner(v.right, c)), dst.gamma(v.left, v.right, c))
        return identity(PairLeaf(v, c))

    leg = build_a_prime(x, y, z).then(build_a(x, y, z))
    return Cell("AA'->1", leg, _identity_word(dst),
                lambda w: over_leaves(w, lambda leaf: inner(leaf.a, leaf.b)))


def a_prime_a_cell(x, y, z) -> Cell:
    """``A' A -> 1`` on ``X (x) (Y (x) Z)``."""
    dst = tensor(x, tensor(y, z))

    def inner(a, v):
        if v is I:
            return Path.of(dst.beta(a))
        if isinstance(v, Tensor):
            return _p(tensor_paths(inner(a, v.left), inner(a, v.right)), dst.delta(a, v.left, v.right))
        return identity(PairLeaf(a, v))

    leg = build_a(x, y, z).then(build_a_prime(x, y, z))
    return Cell("A'A->1", leg, _identity_word(dst),
                lambda w: over_leaves(w, lambda leaf: inner(leaf.a, leaf.b)))


def unit_r_functor(a: SmcStructure) -> WordFunctor:
    """``F = En(v* . R'): A (x) 1* -> A (x) 1*``, ``(a, X) |-> X[(a, *)]``."""
    u = unit_smc()
    tp = tensor(a, u)
    sub = Substitution(tp)
    rp = build_r_prime(a)
    return extension(
        tp, tp,
        leaf=lambda x, w: sub.obj(w, PairLeaf(x, STAR)),
        alpha=lambda w: _p(sub.unit_cell(w), sub.arr(w, rp.f0)),
        beta=lambda x: identity(I),
        gamma=lambda x, x2, w: _p(sub.tensor_cell(w, PairLeaf(x, STAR), PairLeaf(x2, STAR)),
                                  sub.arr(w, rp.f2[(x, x2)])),
        delta=lambda x, w, w2: identity(sub.obj(Tensor(w, w2), PairLeaf(x, STAR))),
        tens_l=lambda f, w: sub.arr(w, rp.on_arr(f)),
        tens_r=lambda x, p: sub.path(p, PairLeaf(x, STAR)),
        name="F")


def unit_r_cells(a: SmcStructure) -> tuple:
    """The 2-cells ``F -> 1`` and ``F -> R' R`` on ``A (x) 1*``."""
    u = unit_smc()
    tp = tensor(a, u)
    f = unit_r_functor(a)
    r = build_r(a)
    sub = Substitution(a)
    rp = build_r_prime(a)
    r_rp = then_strong(r, rp, name="R'R")

    def to_one(x, w):
        if w is I:
            return Path.of(tp.beta(x))
        if isinstance(w, Tensor):
            return _p(tensor_paths(to_one(x, w.left), to_one(x, w.right)), tp.delta(x, w.left, w.right))
        return identity(PairLeaf(x, STAR))

    def to_rr(x, w):
        if w is I:
            return rp.f0
        if isinstance(w, Tensor):
            return _p(tensor_paths(to_rr(x, w.left), to_rr(x, w.right)),
                      tp.gamma(sub.obj(w.left, x), sub.obj(w.right, x), STAR))
        return identity(PairLeaf(x, STAR))

    one = Cell("F->1", f, _identity_word(tp), lambda w: over_leaves(w, lambda leaf: to_one(leaf.a, leaf.b)))
    rr = Cell("F->R'R", f, r_rp, lambda w: over_leaves(w, lambda leaf: to_rr(leaf.a, leaf.b)))
    return one, rr


def delta_identity_cell(tp: TenSmc) -> Cell:
    """``delta`` of the identity 1-cell: identity components."""
    one = _identity_word(tp)
    return Cell("delta-id", one, one, lambda w: identity(w))


def validate_cell(cell: Cell, grid: Grid, budget: int = 256) -> list:
    """Endpoints, monoidality and naturality of a 2-cell on a sample grid."""
    src, dst = cell.source, cell.target
    tp = src.target
    report = []
    for w in grid.words:
        c = cell.component(w)
        if c.dom is not src.obj(w) or c.cod is not dst.obj(w):
            report.append(Violation("cell-endpoints", (cell.name, w)))
    for w in grid.words[:12]:
        for w2 in grid.words[:12]:
            whole = cell.component(Tensor(w, w2))
            parts = tensor_paths(cell.component(w), cell.component(w2))
            if whole != parts:
                report.append(Violation("cell-monoidal", (cell.name, w, w2)))
    if not cell.component(I).is_identity():
        report.append(Violation("cell-unit", (cell.name,)))
    for e in grid.edges:
        p = Path.of(e)
        lhs = src.path(p).then(cell.component(p.cod))
        rhs = cell.component(p.dom).then(dst.path(p))
        if lhs == rhs:
            continue
        verdict = decide_equal(lhs, rhs, budget, tp=tp, normalize_first=True)
        if not isinstance(verdict, Equal):
            report.append(Violation("cell-natural", (cell.name, e, str(verdict))))
    return report


def lax_inverse(kind: str, *cats) -> tuple:
    """``(cells, grid)`` for ``AA'->1``, ``A'A->1``, ``unit-R`` or ``delta-id``."""
    if kind == "AA'->1":
        x, y, z = cats
        return [aa_prime_cell(x, y, z)], default_grid(tensor(tensor(x, y), z))
    if kind == "A'A->1":
        x, y, z = cats
        return [a_prime_a_cell(x, y, z)], default_grid(tensor(x, tensor(y, z)))
    if kind == "unit-R":
        (a,) = cats
        return list(unit_r_cells(a)), default_grid(tensor(a, unit_smc()))
    if kind == "delta-id":
        (tp,) = cats
        return [delta_identity_cell(tp)], default_grid(tp)
    raise ValueError(f"unknown lax-inverse kind {kind!r}")


# ---------------------------------------------------------------- 2-naturality

def t_composites_agree(a, b, c, grid: Grid | None = None) -> list:
    """Both ways of writing ``T`` agree literally on the grid."""
    tp = tensor(tensor(a, b), c)
    grid = grid or default_grid(tp)
    res = compare_strict("T", t_composite(a, b, c, 0), t_composite(a, b, c, 1), grid, 0, literal=True)
    return [r for r in res if not r.ok]


def _after_mon(r: StrongInto, f):
    """``r . f`` for a monoidal ``f`` between finite SMCs; identity cells are dropped."""
    a = f.target

    def lift(h):
        return identity(r.on_obj(a.dom(h))) if a.is_identity(h) else r.on_arr(h)

    return _Composite(f.source, r.target, lambda x: r.on_obj(f.on_obj(x)), lambda h: lift(f.on_arr(h)),
                      _p(r.f0, lift(f.f0)),
                      lambda x, y: _p(r.f2[(f.on_obj(x), f.on_obj(y))], lift(f.f2[(x, y)])))


def two_naturality(kind: str, f, cats: tuple, grid: Grid | None = None, budget: int = 32) -> list:
    """Square of ``kind`` against a monoidal ``f: A -> A2`` on the first factor.

    ``cats`` are the remaining factors.  Returns the failing samples.  Legs
    agree literally up to H3 functoriality except on generators with tensor
    payloads, where ``A`` needs the interchange law; those go to the search.
    """
    a, a2 = f.source, f.target
    if kind == "S":
        (b,) = cats
        leg1 = ten_left(f, tensor(a, b), tensor(a2, b)).then(build_s(a2, b))
        leg2 = build_s(a, b).then(ten_right(f, tensor(b, a), tensor(b, a2)))
        src = tensor(a, b)
    elif kind == "A'":
        b, c = cats
        fb = ten_left(f, tensor(a, b), tensor(a2, b))
        leg1 = ten_left(fb, tensor(tensor(a, b), c), tensor(tensor(a2, b), c)).then(build_a_prime(a2, b, c))
        leg2 = build_a_prime(a, b, c).then(ten_left(f, tensor(a, tensor(b, c)), tensor(a2, tensor(b, c))))
        src = tensor(tensor(a, b), c)
    elif kind == "A":
        b, c = cats
        fb = ten_left(f, tensor(a, b), tensor(a2, b))
        leg1 = ten_left(f, tensor(a, tensor(b, c)), tensor(a2, tensor(b, c))).then(build_a(a2, b, c))
        leg2 = build_a(a, b, c).then(ten_left(fb, tensor(tensor(a, b), c), tensor(tensor(a2, b), c)))
        src = tensor(a, tensor(b, c))
    elif kind in ("R'", "L'"):
        u = unit_smc()
        if kind == "R'":
            one = ten_left(f, tensor(a, u), tensor(a2, u))
            leg1, leg2 = _after_mon(build_r_prime(a2), f), compose_strong(one, build_r_prime(a))
        else:
            one = ten_right(f, tensor(u, a), tensor(u, a2))
            leg1, leg2 = _after_mon(build_l_prime(a2), f), compose_strong(one, build_l_prime(a))
        return [r for r in compare_strong(kind, leg1, leg2, a, budget) if not r.ok]
    else:
        raise ValueError(f"no 2-naturality square for {kind!r}")
    grid = grid or default_grid(src)
    return [r for r in compare_strict(kind, leg1, leg2, grid, budget) if not r.ok]


def h3_normal(p: Path, tp) -> Path:
    """Normal form of every maximal run of (whiskered) H3 edges.

    Inside a run the H3 edges on one leaf are fused into one ``tens_l``
    followed by one ``tens_r``, identities are dropped and leaves are
    visited left to right.  Payloads over presented factors are normalized
    recursively.  Two paths with the same result are equal by functoriality
    and interchange of the H3 edges.
    """
    if not isinstance(tp, TenSmc):
        return p
    out, run = [], []
    cur = p.dom
    for e in p.edges:
        if isinstance(core(e), (ArrTensObj, ObjTensArr)):
            run.append(e)
            continue
        if run:
            out.extend(_h3_run(run, cur, tp))
            run = []
        out.append(e)
        cur = e.cod
    if run:
        out.extend(_h3_run(run, cur, tp))
    return Path(p.dom, out, check=False)


def _h3_run(run: list, dom: Word, tp: TenSmc) -> list:
    sa, sb = tp.sa, tp.sb
    per = {}
    for e in run:
        addr = []
        while isinstance(e, Whisker):
            addr.append(1 if e.side == "L" else 0)
            e = e.inner
        slot = per.setdefault(tuple(addr), [[], []])
        if isinstance(e, ArrTensObj):
            slot[0].append(e.f)
        else:
            slot[1].append(e.g)
    out = []
    word = dom
    for addr in sorted(per):
        fs, gs = per[addr]
        ctx, leaf = _frames(word, addr)
        a, b = leaf.a, leaf.b
        f = _fuse_all(sa, fs)
        if f is not None and not _trivial(sa, f):
            out.append(wrap(ctx, tp.tens_l(f, b)))
            a = sa.cod(f)
        g = _fuse_all(sb, gs)
        if g is not None and not _trivial(sb, g):
            out.append(wrap(ctx, tp.tens_r(a, g)))
        if out:
            word = out[-1].cod
    return out


def _frames(word: Word, addr: tuple):
    ctx = []
    for bit in addr:
        if bit:
            ctx.append(("L", word.left))
            word = word.right
        else:
            ctx.append(("R", word.right))
            word = word.left
    return tuple(ctx), word


def _fuse_all(s, arrows: list):
    if not arrows:
        return None
    out = arrows[0]
    for f in arrows[1:]:
        out = s.compose(f, out)
    return h3_normal(out, s) if isinstance(out, Path) else out


def _trivial(s, f) -> bool:
    if is_finite(s):
        return s.is_identity(f)
    return not f.edges
