"""Connected components and the quotient of hom-categories by 2-cells.

``pi(C)`` is the set of classes of objects of ``C`` under the zig-zag
closure of its arrows.  Applied to ``[A, B]`` it gives the hom-set of the
quotient category, where two monoidal functors are identified when a chain
of monoidal transformations connects them.
"""

from __future__ import annotations

from dataclasses import dataclass

from .adjoin import (counit_report, en_extend, generator_paths, post_compose, rn_restrict, sample_words,
                     ten_left, ten_left_2cell)
from .canonical import check_diagram, h3_normal
from .fincat import CategoryError, FinCat, Violation
from .homcat import HomSmc, build_hom_smc, enumerate_smc_functors
from .monoidal import MonFunctor, SmcStructure, compose_monoidal, identity_monoidal, \
    precompose_nattrans, whisker_functor
from .tenspres import Equal, TenSmc, decide_equal


@dataclass(frozen=True)
class Partition:
    """``class_of[x]`` is the class id of ``x``; ``classes[i]`` lists its members."""
    class_of: dict
    classes: list

    def same(self, x, y) -> bool:
        return self.class_of[x] == self.class_of[y]

    def __len__(self):
        return len(self.classes)


def connected_components(c: FinCat) -> Partition:
    """Union-find over arrow endpoints.

    Class ids follow the position of each class's first object in ``c.objects``.
    """
    parent = list(range(len(c.objects)))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for d, e in zip(c.dom_idx.tolist(), c.cod_idx.tolist()):
        rd, re = find(d), find(e)
        if rd != re:
            parent[max(rd, re)] = min(rd, re)
    ids = {}
    classes = []
    class_of = {}
    for i, x in enumerate(c.objects):
        root = find(i)
        if root not in ids:
            ids[root] = len(classes)
            classes.append([])
        classes[ids[root]].append(x)
        class_of[x] = ids[root]
    return Partition(class_of, classes)


def pi_map(f, c: FinCat, d: FinCat) -> dict:
    """``pi(F)`` as a map of class ids, for anything with ``on_obj``."""
    pc, pd = connected_components(c), connected_components(d)
    out = {}
    for x in c.objects:
        k, v = pc.class_of[x], pd.class_of[f.on_obj(x)]
        if out.setdefault(k, v) != v:
            raise CategoryError("functor does not respect connected components")
    return out


# ---------------------------------------------------------------- quotient hom-sets

@dataclass
class QuotientHom:
    """``SMC/~(A, B)``: classes of enumerated functors ``A -> B``."""
    hom: HomSmc
    partition: Partition

    def class_of(self, f: MonFunctor) -> int:
        return self.partition.class_of[self.hom.index_of(f)]

    def representative(self, k: int) -> MonFunctor:
        return self.hom.functors[self.partition.classes[k][0]]

    def __len__(self):
        return len(self.partition)


def quotient_homset(a: SmcStructure, b: SmcStructure, hom: HomSmc | None = None) -> QuotientHom:
    hom = hom or build_hom_smc(a, b)
    return QuotientHom(hom, connected_components(hom.smc.base))


def composition_report(qab: QuotientHom, qbc: QuotientHom, qac: QuotientHom) -> list[Violation]:
    """Composition of classes does not depend on representatives."""
    report = []
    for cls_f in qab.partition.classes:
        for cls_g in qbc.partition.classes:
            seen = {qac.class_of(compose_monoidal(qbc.hom.functors[j], qab.hom.functors[i]))
                    for i in cls_f for j in cls_g}
            if len(seen) != 1:
                report.append(Violation("quotient-composition", (tuple(cls_f), tuple(cls_g))))
    return report


def piquo_report(f: MonFunctor, qxy: QuotientHom, qx2y: QuotientHom) -> list[Violation]:
    """Precomposition ``h |-> h . f`` sends every 2-cell to a connected pair."""
    report = []
    for t in qxy.hom.trans:
        s = precompose_nattrans(t, f)
        if qx2y.class_of(s.source) != qx2y.class_of(s.target):
            report.append(Violation("piquo-pre", (qxy.hom.trans_index(t),)))
    return report


def piquo_post_report(g: MonFunctor, qxy: QuotientHom, qxy2: QuotientHom) -> list[Violation]:
    """Postcomposition ``h |-> g . h`` sends every 2-cell to a connected pair."""
    report = []
    for t in qxy.hom.trans:
        s = whisker_functor(g, t)
        if qxy2.class_of(s.source) != qxy2.class_of(s.target):
            report.append(Violation("piquo-post", (qxy.hom.trans_index(t),)))
    return report


def pi_functoriality_report(a: SmcStructure, b: SmcStructure, c: SmcStructure) -> list[Violation]:
    """``pi(G F) = pi(G) pi(F)``, ``pi(1) = 1``, and transformed functors share ``pi``."""
    report = []
    ident = identity_monoidal(a)
    pa = pi_map(ident, a.base, a.base)
    if any(k != v for k, v in pa.items()):
        report.append(Violation("pi-identity", (a.name,)))
    fs = enumerate_smc_functors(a, b)
    gs = enumerate_smc_functors(b, c)
    pf = [pi_map(f, a.base, b.base) for f in fs]
    pg = [pi_map(g, b.base, c.base) for g in gs]
    for i, f in enumerate(fs):
        for j, g in enumerate(gs):
            pgf = pi_map(compose_monoidal(g, f), a.base, c.base)
            if any(pgf[k] != pg[j][pf[i][k]] for k in pgf):
                report.append(Violation("pi-composition", (i, j)))
    hab = build_hom_smc(a, b)
    for t in hab.trans:
        if pi_map(t.source, a.base, b.base) != pi_map(t.target, a.base, b.base):
            report.append(Violation("pi-2cell", (hab.trans_index(t),)))
    return report


# ---------------------------------------------------------------- closed structure

def tensor_action_report(f: MonFunctor, f2: MonFunctor, hom: HomSmc, b: SmcStructure,
                         budget: int = 256) -> list[Violation]:
    """``- (x) B`` on classes: 2-cells ``f -> f2`` give natural families ``f (x) B -> f2 (x) B``."""
    a, a2 = f.source, f.target
    tp, tq = TenSmc(a, b), TenSmc(a2, b)
    lf, lf2 = ten_left(f, tp, tq), ten_left(f2, tp, tq)
    report = []
    for t in hom.trans:
        if t.source.key() != f.key() or t.target.key() != f2.key():
            continue
        comp = ten_left_2cell(t, tq)
        for p in generator_paths(tp):
            lhs = lf.path(p).then(comp(p.cod))
            rhs = comp(p.dom).then(lf2.path(p))
            if h3_normal(lhs, tq) == h3_normal(rhs, tq):
                continue
            if not isinstance(decide_equal(lhs, rhs, budget, tp=tq, normalize_first=True), Equal):
                report.append(Violation("tensor-action-natural", (hom.trans_index(t), p)))
    return report


def tensor_functoriality_report(f: MonFunctor, g: MonFunctor, b: SmcStructure) -> list[Violation]:
    """``(g f) (x) B`` and ``(g (x) B)(f (x) B)`` agree on generators up to H3 functoriality."""
    a, a2, a3 = f.source, f.target, g.target
    tp, tq, tr = TenSmc(a, b), TenSmc(a2, b), TenSmc(a3, b)
    whole = ten_left(compose_monoidal(g, f), tp, tr)
    parts = ten_left(f, tp, tq).then(ten_left(g, tq, tr))
    report = []
    for p in generator_paths(tp):
        if h3_normal(whole.path(p), tr) != h3_normal(parts.path(p), tr):
            report.append(Violation("tensor-functorial", (p,)))
    return report


@dataclass
class ClosedReport:
    """Violations plus the sizes of what was checked."""
    violations: list
    checked: dict

    @property
    def clean(self) -> bool:
        return not self.violations


def check_closed_structure(triples, max_leaves: int = 3) -> ClosedReport:
    """Class-level checks of the closed structure on ``(A, B, C)`` triples.

    ``pi(Rn) pi(En) = 1`` on classes of ``SMC(A, [B, C])``; the counit
    connects ``En(Rn G)`` to ``G`` for every ``G = h . En(F)``; composition
    and tensor actions respect classes; ``[S][S] = [1]`` and ``[R][R'] = [1]``.
    Functors out of ``A (x) B`` are only sampled in the form ``h . En(F)``.
    """
    report = []
    checked = {"functors": 0, "counits": 0, "triples": 0}
    for a, b, c in triples:
        checked["triples"] += 1
        hbc = build_hom_smc(b, c)
        q = quotient_homset(a, hbc.smc)
        tp = TenSmc(a, b)
        words = sample_words(tp, max_leaves)
        paths = generator_paths(tp)
        for f in q.hom.functors:
            checked["functors"] += 1
            bar = en_extend(f, hbc, tp)
            back = rn_restrict(bar, hbc, a)
            if q.class_of(back) != q.class_of(f):
                report.append(Violation("pi-Rn-En", (q.hom.index_of(f),)))
            for h in enumerate_smc_functors(c, c):
                g = post_compose(h, bar)
                checked["counits"] += 1
                report += counit_report(g, hbc, words, paths, a)
        report += composition_report(quotient_homset(a, a), quotient_homset(a, b), quotient_homset(a, b))
        for f in enumerate_smc_functors(a, a):
            report += tensor_functoriality_report(f, f, b)
        haa = build_hom_smc(a, a)
        for i, f in enumerate(haa.functors):
            for f2 in haa.functors[i:]:
                report += tensor_action_report(f, f2, haa, b)
        for name, cats in (("waxiom3", (a, b)), ("Rinverse", (a,))):
            for r in check_diagram(name, cats):
                if not r.ok:
                    report.append(Violation("class-" + name, (r.sample,)))
    return ClosedReport(report, checked)

