"""The swap isomorphism ``D: [A, [B, C]] -> [B, [A, C]]``.

``F*(b)(a) = F(a)(b)``; every piece of structure is read off by taking the
component of the corresponding transformation.
"""

from __future__ import annotations

from .fincat import FunctorData, NatTransData, Violation
from .homcat import HomSmc, build_hom_smc, ev_at, hom_map, q_embed
from .monoidal import STRICT, MonFunctor, MonNatTrans, identity_monoidal


def _dual_object(f: MonFunctor, hbc: HomSmc, hac: HomSmc, b) -> int:
    a_smc = f.source
    objs = a_smc.base.objects
    at = lambda j: hbc.trans[j].at(b)
    under = FunctorData({x: hbc.functors[f.on_obj(x)].on_obj(b) for x in objs},
                        {h: at(f.on_arr(h)) for h in a_smc.base.arrows})
    fb = MonFunctor(a_smc, hac.target, under, at(f.f0),
                    {k: at(v) for k, v in f.f2.items()})
    return hac.index_of(fb)


def dualize_functor(f: MonFunctor, hbc: HomSmc, hac: HomSmc) -> MonFunctor:
    """``F: A -> [B, C]`` to ``F*: B -> [A, C]``."""
    b_smc = hbc.source
    a_objs = f.source.base.objects
    omap = {b: _dual_object(f, hbc, hac, b) for b in b_smc.base.objects}
    amap = {}
    for g in b_smc.base.arrows:
        comps = {x: hbc.functors[f.on_obj(x)].on_arr(g) for x in a_objs}
        amap[g] = hac.find_trans(omap[b_smc.base.dom(g)], omap[b_smc.base.cod(g)], comps)
    f0 = hac.find_trans(hac.smc.unit, omap[b_smc.unit],
                        {x: hbc.functors[f.on_obj(x)].f0 for x in a_objs})
    f2 = {}
    for b in b_smc.base.objects:
        for b2 in b_smc.base.objects:
            comps = {x: hbc.functors[f.on_obj(x)].f2[(b, b2)] for x in a_objs}
            f2[(b, b2)] = hac.find_trans(hac.smc.tensor_obj(omap[b], omap[b2]),
                                         omap[b_smc.tensor_obj(b, b2)], comps)
    return MonFunctor(b_smc, hac.smc, FunctorData(omap, amap), f0, f2)


def dualize_nattrans(t: MonNatTrans, hbc: HomSmc, hac: HomSmc) -> MonNatTrans:
    """``theta*`` with ``(theta*_b)_a = (theta_a)_b``."""
    fs = dualize_functor(t.source, hbc, hac)
    gs = dualize_functor(t.target, hbc, hac)
    a_objs = t.source.source.base.objects
    comps = {}
    for b in hbc.source.base.objects:
        inner = {x: hbc.trans[t.at(x)].at(b) for x in a_objs}
        comps[b] = hac.find_trans(fs.on_obj(b), gs.on_obj(b), inner)
    return MonNatTrans(fs, gs, NatTransData(comps))


class Duality:
    """Both hom levels for a triple ``(A, B, C)`` and ``D`` in each direction."""

    def __init__(self, a, b, c):
        self.a, self.b, self.c = a, b, c
        self.hbc = build_hom_smc(b, c)
        self.hac = build_hom_smc(a, c)
        self.h_a_bc = build_hom_smc(a, self.hbc.smc)
        self.h_b_ac = build_hom_smc(b, self.hac.smc)

    def forward(self) -> MonFunctor:
        """``D`` as a strict functor ``[A, [B, C]] -> [B, [A, C]]``."""
        return self._as_functor(self.h_a_bc, self.h_b_ac, self.hbc, self.hac)

    def backward(self) -> MonFunctor:
        return self._as_functor(self.h_b_ac, self.h_a_bc, self.hac, self.hbc)

    @staticmethod
    def _as_functor(src: HomSmc, dst: HomSmc, inner_src: HomSmc, inner_dst: HomSmc) -> MonFunctor:
        omap = {i: dst.index_of(dualize_functor(fn, inner_src, inner_dst))
                for i, fn in enumerate(src.functors)}
        amap = {j: dst.trans_index(dualize_nattrans(t, inner_src, inner_dst))
                for j, t in enumerate(src.trans)}
        ident = dst.smc.id
        f2 = {(i, k): ident(dst.smc.tensor_obj(omap[i], omap[k]))
              for i in omap for k in omap}
        return MonFunctor(src.smc, dst.smc, FunctorData(omap, amap), ident(dst.smc.unit), f2, STRICT)


def involution_report(d: Duality) -> list[Violation]:
    """``D D = 1`` on objects and arrows, and ``D`` preserves tensor and unit."""
    report = []
    fwd, back = d.forward(), d.backward()
    for i in d.h_a_bc.smc.base.objects:
        if back.on_obj(fwd.on_obj(i)) != i:
            report.append(Violation("involution-object", (i,)))
    for j in d.h_a_bc.smc.base.arrows:
        if back.on_arr(fwd.on_arr(j)) != j:
            report.append(Violation("involution-arrow", (j,)))
    for i in d.h_b_ac.smc.base.objects:
        if fwd.on_obj(back.on_obj(i)) != i:
            report.append(Violation("involution-object", (i,)))
    src, dst = d.h_a_bc.smc, d.h_b_ac.smc
    for i in src.base.objects:
        for k in src.base.objects:
            if fwd.on_obj(src.tensor_obj(i, k)) != dst.tensor_obj(fwd.on_obj(i), fwd.on_obj(k)):
                report.append(Violation("preserves-tensor", (i, k)))
    if fwd.on_obj(src.unit) != dst.unit:
        report.append(Violation("preserves-unit", ()))
    return report


def evdual_report(d: Duality) -> list[Violation]:
    """``ev_a F = [1, ev_a](D F)`` for every object ``F`` and every ``a``."""
    report = []
    fwd = d.forward()
    ident_b = identity_monoidal(d.b)
    hbc_dst = d.hbc
    for x in d.a.base.objects:
        ev_outer = ev_at(d.h_a_bc, x)
        post = hom_map(ident_b, ev_at(d.hac, x), d.h_b_ac, hbc_dst)
        for i in d.h_a_bc.smc.base.objects:
            if ev_outer.on_obj(i) != post.on_obj(fwd.on_obj(i)):
                report.append(Violation("evdual", (x, i)))
        for j in d.h_a_bc.smc.base.arrows:
            if ev_outer.on_arr(j) != post.on_arr(fwd.on_arr(j)):
                report.append(Violation("evdual-arrow", (x, j)))
    return report


def chardualq_report(d: Duality) -> list[Violation]:
    """``D F = [F, C] q`` with ``q: B -> [[B, C], C]``; needs a small discrete ``[B, C]``."""
    q, double = q_embed(d.b, d.c, d.hbc)
    ident_c = identity_monoidal(d.c)
    report = []
    for i, fn in enumerate(d.h_a_bc.functors):
        pre = hom_map(fn, ident_c, double, d.hac)
        lhs = dualize_functor(fn, d.hbc, d.hac)
        for b in d.b.base.objects:
            if pre.on_obj(q.on_obj(b)) != lhs.on_obj(b):
                report.append(Violation("chardualq", (i, b)))
        for g in d.b.base.arrows:
            if pre.on_arr(q.on_arr(g)) != lhs.on_arr(g):
                report.append(Violation("chardualq-arrow", (i, g)))
    return report


def unit_dual_report(a, b, c) -> list[Violation]:
    """The dual of the unit functor ``A -> [B, C]`` is the unit ``B -> [A, C]``."""
    d = Duality(a, b, c)
    f = d.h_a_bc.functors[d.h_a_bc.smc.unit]
    fs = dualize_functor(f, d.hbc, d.hac)
    unit = d.h_b_ac.functors[d.h_b_ac.smc.unit]
    return [] if fs.key() == unit.key() else [Violation("unit-dual", ())]
