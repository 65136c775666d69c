"""The internal hom ``[A, B]`` by exhaustive enumeration.

Objects of ``[A, B]`` are all lax symmetric monoidal functors ``A -> B``;
arrows are all monoidal natural transformations between them.  Inside the
resulting :class:`SmcStructure` objects and arrows are plain integers that
index ``HomSmc.functors`` and ``HomSmc.trans``.
"""

from __future__ import annotations

from itertools import product

import numpy as np

from . import kernels
from .fincat import CapacityError, CategoryError, FinCat, FunctorData, NatTransData
from .monoidal import (STRICT, MonFunctor, MonNatTrans, SmcStructure, compose_monoidal,
                       middle_four, validate_monoidal_nattrans)

SEARCH_CAP = 10 ** 6


class _Budget:
    def __init__(self, cap: int):
        self.cap = cap
        self.spent = 0

    def tick(self, n: int = 1):
        self.spent += n
        if self.spent > self.cap:
            raise CapacityError(f"enumeration visited more than {self.cap} candidate assignments")


def _arrow_maps(a: SmcStructure, b: SmcStructure, omap: dict, budget: _Budget):
    """All functorial arrow maps over a fixed object map, in lexicographic order."""
    src, tgt = a.base, b.base
    order = src.arrows
    idents = {src.identity[x] for x in src.objects}
    choices = []
    for f in order:
        if f in idents:
            choices.append((tgt.identity[omap[src.dom(f)]],))
        else:
            choices.append(tgt.hom(omap[src.dom(f)], omap[src.cod(f)]))
    pos = {f: i for i, f in enumerate(order)}
    # composites (g, f) -> h whose three indices are all <= k are checked at step k
    checks = [[] for _ in order]
    for (g, f), h in src.comp.items():
        checks[max(pos[g], pos[f], pos[h])].append((g, f, h))
    current = [None] * len(order)

    def rec(k):
        if k == len(order):
            yield dict(zip(order, current))
            return
        for c in choices[k]:
            budget.tick()
            current[k] = c
            ok = True
            for g, f, h in checks[k]:
                if tgt.comp.get((current[pos[g]], current[pos[f]])) != current[pos[h]]:
                    ok = False
                    break
            if ok:
                yield from rec(k + 1)
        current[k] = None

    yield from rec(0)


def enumerate_smc_functors(a: SmcStructure, b: SmcStructure, cap: int = SEARCH_CAP) -> list[MonFunctor]:
    """Every lax symmetric monoidal functor ``a -> b``.

    Order is lexicographic in (object map, arrow map, F0, F2), each choice
    ranging over ``b``'s declaration order.
    """
    budget = _Budget(cap)
    src, tgt = a.base, b.base
    objs = src.objects
    pairs = [(x, y) for x in objs for y in objs]
    out = []
    tb_s, tb_t = a.tables(), b.tables()
    for images in product(tgt.objects, repeat=len(objs)):
        budget.tick()
        omap = dict(zip(objs, images))
        f0_choices = tgt.hom(b.unit, omap[a.unit])
        if not f0_choices:
            continue
        f2_choices = [tgt.hom(b.tensor_obj(omap[x], omap[y]), omap[a.tensor_obj(x, y)]) for x, y in pairs]
        if any(not c for c in f2_choices):
            continue
        omap_idx = np.array([tgt.obj_index[omap[x]] for x in objs], dtype=np.int32)
        for amap in _arrow_maps(a, b, omap, budget):
            under = FunctorData(omap, amap)
            amap_idx = np.array([tgt.arr_index[amap[f]] for f in src.arrows], dtype=np.int32)
            for f0 in f0_choices:
                for f2vals in product(*f2_choices):
                    budget.tick()
                    f2_idx = np.array([tgt.arr_index[v] for v in f2vals], dtype=np.int32).reshape(len(objs), len(objs))
                    bad = kernels.monoidal_functor_violations(
                        len(objs), tb_s["tobj"], tb_s["tarr"], src.dom_idx, src.cod_idx,
                        tb_s["assoc"], tb_s["lunit"], tb_s["runit"], tb_s["sym"], tb_s["unit"],
                        tb_t["tobj"], tb_t["tarr"], tgt.comp_idx, tgt.ident_idx, tb_t["assoc"],
                        tb_t["lunit"], tb_t["runit"], tb_t["sym"], omap_idx, amap_idx,
                        tgt.arr_index[f0], f2_idx)
                    if not bad:
                        out.append(MonFunctor(a, b, under, f0, dict(zip(pairs, f2vals))))
    return out


def enumerate_monoidal_nattrans(f: MonFunctor, g: MonFunctor, cap: int = SEARCH_CAP) -> list[MonNatTrans]:
    """Every monoidal transformation ``f -> g``, components in lexicographic order."""
    if f.source is not g.source or f.target is not g.target:
        raise CategoryError("transformations need common endpoints")
    budget = _Budget(cap)
    a, b = f.source, f.target
    objs = a.base.objects
    choices = [b.base.hom(f.on_obj(x), g.on_obj(x)) for x in objs]
    out = []
    for comps in product(*choices):
        budget.tick()
        t = MonNatTrans(f, g, NatTransData(dict(zip(objs, comps))))
        if not validate_monoidal_nattrans(t):
            out.append(t)
    return out


class HomSmc:
    """``[A, B]`` with pointwise tensor, unit and structure arrows."""

    def __init__(self, source: SmcStructure, target: SmcStructure, functors: list[MonFunctor],
                 trans: list[MonNatTrans], smc: SmcStructure):
        self.source = source
        self.target = target
        self.functors = functors
        self.trans = trans
        self.smc = smc
        self._fidx = {fn.key(): i for i, fn in enumerate(functors)}
        self._tidx = {(self._fidx[t.source.key()], self._fidx[t.target.key()], t.key()): j
                      for j, t in enumerate(trans)}

    @property
    def functor_objects(self):
        return self.functors

    @property
    def trans_arrows(self):
        return self.trans

    def __repr__(self):
        return f"<[{self.source.name}, {self.target.name}]: {len(self.functors)} objects, {len(self.trans)} arrows>"

    def index_of(self, f: MonFunctor) -> int:
        try:
            return self._fidx[f.key()]
        except KeyError:
            raise CategoryError("functor is not among the enumerated objects") from None

    def trans_index(self, t: MonNatTrans) -> int:
        try:
            return self._tidx[(self.index_of(t.source), self.index_of(t.target), t.key())]
        except KeyError:
            raise CategoryError("transformation is not among the enumerated arrows") from None

    def find_trans(self, src: int, tgt: int, components: dict) -> int:
        key = tuple(components[x] for x in self.source.base.objects)
        try:
            return self._tidx[(src, tgt, key)]
        except KeyError:
            raise CategoryError("transformation is not among the enumerated arrows") from None

    def functor(self, i: int) -> MonFunctor:
        return self.functors[i]

    def nattrans(self, j: int) -> MonNatTrans:
        return self.trans[j]


def box_functor(f: MonFunctor, g: MonFunctor) -> MonFunctor:
    """Pointwise tensor ``F [] G`` of two functors into the same SMC."""
    a, b = f.source, f.target
    objs = a.base.objects
    under = FunctorData({x: b.tensor_obj(f.on_obj(x), g.on_obj(x)) for x in objs},
                        {h: b.tensor_arr(f.on_arr(h), g.on_arr(h)) for h in a.base.arrows})
    f0 = b.compose(b.tensor_arr(f.f0, g.f0), b.l_inv(b.unit))
    f2 = {}
    for x in objs:
        for y in objs:
            m = middle_four(b, f.on_obj(x), g.on_obj(x), f.on_obj(y), g.on_obj(y))
            f2[(x, y)] = b.compose(b.tensor_arr(f.f2[(x, y)], g.f2[(x, y)]), m)
    return MonFunctor(a, b, under, f0, f2)


def unit_functor(a: SmcStructure, b: SmcStructure) -> MonFunctor:
    """The constant functor at ``I``, with ``F0 = id`` and ``F2 = r_I``."""
    i = b.unit
    objs = a.base.objects
    return MonFunctor(a, b, FunctorData({x: i for x in objs}, {h: b.id(i) for h in a.base.arrows}),
                      b.id(i), {(x, y): b.r(i) for x in objs for y in objs})


def build_hom_smc(a: SmcStructure, b: SmcStructure, cap: int = SEARCH_CAP) -> HomSmc:
    functors = enumerate_smc_functors(a, b, cap)
    n = len(functors)
    fidx = {fn.key(): i for i, fn in enumerate(functors)}
    trans = []
    for f in functors:
        for g in functors:
            trans.extend(enumerate_monoidal_nattrans(f, g, cap))
    objs = a.base.objects
    t_src = [fidx[t.source.key()] for t in trans]
    t_tgt = [fidx[t.target.key()] for t in trans]
    tidx = {(t_src[j], t_tgt[j], t.key()): j for j, t in enumerate(trans)}

    def find(src, tgt, comps):
        key = tuple(comps[x] for x in objs)
        return tidx[(src, tgt, key)]

    def look(fn):
        k = fn.key()
        if k not in fidx:
            raise CategoryError("pointwise construction left the enumerated functors")
        return fidx[k]

    arrows = [(j, t_src[j], t_tgt[j]) for j in range(len(trans))]
    identity = {i: find(i, i, {x: b.id(functors[i].on_obj(x)) for x in objs}) for i in range(n)}
    by_src = {}
    for j in range(len(trans)):
        by_src.setdefault(t_src[j], []).append(j)
    comp = {}
    for j1 in range(len(trans)):
        for j2 in by_src.get(t_tgt[j1], ()):
            comps = {x: b.compose(trans[j2].at(x), trans[j1].at(x)) for x in objs}
            comp[(j2, j1)] = find(t_src[j1], t_tgt[j2], comps)
    base = FinCat(range(n), arrows, identity, comp, name=f"[{a.name},{b.name}]")
    tobj = {(i, k): look(box_functor(functors[i], functors[k])) for i in range(n) for k in range(n)}
    tarr = {}
    for j1 in range(len(trans)):
        for j2 in range(len(trans)):
            comps = {x: b.tensor_arr(trans[j1].at(x), trans[j2].at(x)) for x in objs}
            tarr[(j1, j2)] = find(tobj[(t_src[j1], t_src[j2])], tobj[(t_tgt[j1], t_tgt[j2])], comps)
    unit = look(unit_functor(a, b))
    val = lambda i, x: functors[i].on_obj(x)
    assoc = {}
    for i, k, m in product(range(n), repeat=3):
        assoc[(i, k, m)] = find(tobj[(i, tobj[(k, m)])], tobj[(tobj[(i, k)], m)],
                                {x: b.a(val(i, x), val(k, x), val(m, x)) for x in objs})
    runit = {i: find(tobj[(i, unit)], i, {x: b.r(val(i, x)) for x in objs}) for i in range(n)}
    lunit = {i: find(tobj[(unit, i)], i, {x: b.l(val(i, x)) for x in objs}) for i in range(n)}
    sym = {(i, k): find(tobj[(i, k)], tobj[(k, i)], {x: b.s(val(i, x), val(k, x)) for x in objs})
           for i in range(n) for k in range(n)}
    smc = SmcStructure(base, FunctorData(tobj, tarr), unit, assoc, runit, lunit, sym,
                       name=f"[{a.name},{b.name}]")
    return HomSmc(a, b, functors, trans, smc)


def ev_at(h: HomSmc, x) -> MonFunctor:
    """Strict evaluation ``[A, B] -> B`` at the object ``x`` of ``A``."""
    b = h.target
    base = h.smc.base
    under = FunctorData({i: h.functors[i].on_obj(x) for i in base.objects},
                        {j: h.trans[j].at(x) for j in base.arrows})
    f2 = {(i, k): b.id(b.tensor_obj(h.functors[i].on_obj(x), h.functors[k].on_obj(x)))
          for i in base.objects for k in base.objects}
    return MonFunctor(h.smc, b, under, b.id(b.unit), f2, STRICT)


def q_embed(a: SmcStructure, b: SmcStructure, h: HomSmc | None = None,
            double: HomSmc | None = None) -> tuple[MonFunctor, HomSmc]:
    """``q: A -> [[A, B], B]`` sending ``x`` to ``ev_x``.

    Returns the functor together with the double hom it lands in.
    """
    h = h or build_hom_smc(a, b)
    if len(h.functors) > 4 or not h.smc.base.is_discrete():
        raise CapacityError("double homs are limited to discrete [A, B] with at most 4 objects")
    double = double or build_hom_smc(h.smc, b)
    objs = a.base.objects
    evs = {x: double.index_of(ev_at(h, x)) for x in objs}
    fs = h.smc.base.objects
    arr = {}
    for f in a.base.arrows:
        arr[f] = double.find_trans(evs[a.base.dom(f)], evs[a.base.cod(f)],
                                   {i: h.functors[i].on_arr(f) for i in fs})
    f0 = double.find_trans(double.smc.unit, evs[a.unit], {i: h.functors[i].f0 for i in fs})
    f2 = {}
    for x in objs:
        for y in objs:
            f2[(x, y)] = double.find_trans(double.smc.tensor_obj(evs[x], evs[y]),
                                           evs[a.tensor_obj(x, y)],
                                           {i: h.functors[i].f2[(x, y)] for i in fs})
    return MonFunctor(a, double.smc, FunctorData(evs, arr), f0, f2), double


def hom_map(f: MonFunctor, g: MonFunctor, hab: HomSmc, hcd: HomSmc) -> MonFunctor:
    """``[f, g]: [A, B] -> [C, D]``, ``H |-> g H f``, for ``f: C -> A`` and ``g: B -> D``."""
    cobjs = f.source.base.objects
    omap = {i: hcd.index_of(compose_monoidal(g, compose_monoidal(fn, f))) for i, fn in enumerate(hab.functors)}
    amap = {}
    for j, t in enumerate(hab.trans):
        comps = {c: g.on_arr(t.at(f.on_obj(c))) for c in cobjs}
        amap[j] = hcd.find_trans(omap[hab.index_of(t.source)], omap[hab.index_of(t.target)], comps)
    f0 = hcd.find_trans(hcd.smc.unit, omap[hab.smc.unit], {c: g.f0 for c in cobjs})
    f2 = {}
    n = len(hab.functors)
    for i in range(n):
        for k in range(n):
            fi, fk = hab.functors[i], hab.functors[k]
            comps = {c: g.f2[(fi.on_obj(f.on_obj(c)), fk.on_obj(f.on_obj(c)))] for c in cobjs}
            f2[(i, k)] = hcd.find_trans(hcd.smc.tensor_obj(omap[i], omap[k]),
                                        omap[hab.smc.tensor_obj(i, k)], comps)
    kind = STRICT if g.kind == STRICT else None
    return MonFunctor(hab.smc, hcd.smc, FunctorData(omap, amap), f0, f2, kind)


def hom_map_2cell(s: MonNatTrans, t: MonNatTrans, hab: HomSmc, hcd: HomSmc) -> MonNatTrans:
    """``[s, t]: [f, g] -> [f', g']``.

    ``s: f -> f'`` relates functors ``C -> A`` and ``t: g -> g'`` functors
    ``B -> D``.  Both pastings are computed and must agree.
    """
    f, f2_ = s.source, s.target
    g, g2_ = t.source, t.target
    d = g.target
    cobjs = f.source.base.objects
    comps = {}
    for i, h in enumerate(hab.functors):
        # H is covariant, so H(s_c): H f c -> H f' c
        one = {c: d.compose(t.at(h.on_obj(f2_.on_obj(c))), g.on_arr(h.on_arr(s.at(c)))) for c in cobjs}
        two = {c: d.compose(g2_.on_arr(h.on_arr(s.at(c))), t.at(h.on_obj(f.on_obj(c)))) for c in cobjs}
        if one != two:
            raise CategoryError(f"pastings disagree at object {i}")
        src = hcd.index_of(compose_monoidal(g, compose_monoidal(h, f)))
        tgt = hcd.index_of(compose_monoidal(g2_, compose_monoidal(h, f2_)))
        comps[i] = hcd.find_trans(src, tgt, one)
    return MonNatTrans(hom_map(f, g, hab, hcd), hom_map(f2_, g2_, hab, hcd), NatTransData(comps))
