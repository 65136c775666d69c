"""Symmetric monoidal structures on finite categories and their validators.

Conventions: ``a_{x,y,z}: x(yz) -> (xy)z``, ``l_x: Ix -> x``,
``r_x: xI -> x``, ``s_{x,y}: xy -> yx``.  A monoidal functor carries
``F0: I -> F(I)`` and ``F2_{x,y}: Fx Fy -> F(xy)``.

Besides the table-backed :class:`SmcStructure`, this module defines the
small duck-typed interface (:class:`SmcOps`) that every symmetric monoidal
category in the package offers, finite or presented, so that generic code
(canonical arrows, extension functors) runs unchanged on all of them.
"""

from __future__ import annotations

from itertools import product
from typing import Mapping

import numpy as np

from . import kernels
from .fincat import (CategoryError, FinCat, FunctorData, NatTransData, Violation,
                     arr_map_indices, compose_functors, identity_functor,
                     obj_map_indices, product_category, validate_functor,
                     validate_nattrans)

STRICT, STRONG, LAX = "strict", "strong", "lax"


class SmcOps:
    """Operations shared by every symmetric monoidal category.

    Subclasses provide ``unit``, ``id``, ``compose`` (``g . f``), ``dom``,
    ``cod``, ``tensor_obj``, ``tensor_arr`` and the structure arrows
    ``a, a_inv, l, l_inv, r, r_inv, s``.  ``same`` tests equality of
    parallel arrows and may be conservative for presented categories.
    """

    def then(self, *arrows):
        """Diagrammatic composite: ``then(f, g, h) == h . g . f``."""
        out = arrows[0]
        for g in arrows[1:]:
            out = self.compose(g, out)
        return out

    def whisker_left(self, x, f):
        return self.tensor_arr(self.id(x), f)

    def whisker_right(self, f, x):
        return self.tensor_arr(f, self.id(x))

    def same(self, f, g) -> bool:
        return f == g


def middle_four(ops: SmcOps, w, x, y, z):
    """Canonical interchange ``(wx)(yz) -> (wy)(xz)``."""
    t = ops.tensor_obj
    return ops.then(
        ops.a_inv(w, x, t(y, z)),
        ops.whisker_left(w, ops.a(x, y, z)),
        ops.whisker_left(w, ops.whisker_right(ops.s(x, y), z)),
        ops.whisker_left(w, ops.a_inv(y, x, z)),
        ops.a(w, y, t(x, z)),
    )


def unit_split(ops: SmcOps):
    """Canonical ``I -> I I``."""
    return ops.l_inv(ops.unit)


def unit_merge(ops: SmcOps):
    """Canonical ``I I -> I``."""
    return ops.l(ops.unit)


class SmcStructure(SmcOps):
    """A symmetric monoidal structure on a finite category.

    ``tensor`` is a :class:`FunctorData` on ``product_category(base, base)``
    whose object keys are pairs ``(x, y)`` and arrow keys pairs ``(f, g)``.
    """

    def __init__(self, base: FinCat, tensor: FunctorData, unit, assoc: Mapping,
                 runit: Mapping, lunit: Mapping, sym: Mapping, name: str | None = None):
        self.base = base
        self.tensor = tensor
        self.unit = unit
        self.assoc = dict(assoc)
        self.runit = dict(runit)
        self.lunit = dict(lunit)
        self.sym = dict(sym)
        self.name = name or base.name
        if unit not in base.obj_index:
            raise CategoryError(f"unit {unit!r} is not an object")
        objs = base.objects
        for x, y in product(objs, objs):
            if (x, y) not in tensor.obj_map:
                raise CategoryError(f"tensor undefined at objects ({x!r}, {y!r})")
        for f, g in product(base.arrows, base.arrows):
            if (f, g) not in tensor.arr_map:
                raise CategoryError(f"tensor undefined at arrows ({f!r}, {g!r})")
        for label, table, keys in (("assoc", self.assoc, product(objs, objs, objs)),
                                   ("runit", self.runit, objs), ("lunit", self.lunit, objs),
                                   ("sym", self.sym, product(objs, objs))):
            for k in keys:
                if k not in table:
                    raise CategoryError(f"missing {label} component at {k!r}")
                if table[k] not in base.arr_index:
                    raise CategoryError(f"{label} component at {k!r} is dangling")
        self._inv = {}
        self._tables = None

    def __repr__(self):
        return f"<SMC {self.name or ''}: {len(self.base.objects)} objects, {len(self.base.arrows)} arrows>"

    # SmcOps interface
    def id(self, x):
        return self.base.identity[x]

    def compose(self, g, f):
        return self.base.compose(g, f)

    def dom(self, f):
        return self.base.dom(f)

    def cod(self, f):
        return self.base.cod(f)

    def tensor_obj(self, x, y):
        return self.tensor.obj_map[(x, y)]

    def tensor_arr(self, f, g):
        return self.tensor.arr_map[(f, g)]

    def inverse(self, f):
        if f not in self._inv:
            g = self.base.inverse(f)
            if g is None:
                raise CategoryError(f"arrow {f!r} is not invertible")
            self._inv[f] = g
        return self._inv[f]

    def a(self, x, y, z):
        return self.assoc[(x, y, z)]

    def a_inv(self, x, y, z):
        return self.inverse(self.assoc[(x, y, z)])

    def l(self, x):
        return self.lunit[x]

    def l_inv(self, x):
        return self.inverse(self.lunit[x])

    def r(self, x):
        return self.runit[x]

    def r_inv(self, x):
        return self.inverse(self.runit[x])

    def s(self, x, y):
        return self.sym[(x, y)]

    def is_identity(self, f) -> bool:
        return self.base.identity[self.base.dom(f)] == f

    def tables(self) -> dict:
        """Dense index tables for the kernels."""
        if self._tables is None:
            b = self.base
            oi, ai = b.obj_index, b.arr_index
            n, m = len(b.objects), len(b.arrows)
            tobj = np.array([[oi[self.tensor_obj(x, y)] for y in b.objects] for x in b.objects],
                            dtype=np.int32).reshape(n, n)
            tarr = np.array([[ai[self.tensor_arr(f, g)] for g in b.arrows] for f in b.arrows],
                            dtype=np.int32).reshape(m, m)
            assoc = np.array([[[ai[self.assoc[(x, y, z)]] for z in b.objects] for y in b.objects]
                              for x in b.objects], dtype=np.int32).reshape(n, n, n)
            self._tables = dict(
                tobj=tobj, tarr=tarr, assoc=assoc,
                lunit=np.array([ai[self.lunit[x]] for x in b.objects], dtype=np.int32),
                runit=np.array([ai[self.runit[x]] for x in b.objects], dtype=np.int32),
                sym=np.array([[ai[self.sym[(x, y)]] for y in b.objects] for x in b.objects],
                             dtype=np.int32).reshape(n, n),
                unit=oi[self.unit],
            )
        return self._tables


def make_smc(base: FinCat, tensor_obj, tensor_arr, unit, assoc=None, runit=None,
             lunit=None, sym=None, name: str | None = None) -> SmcStructure:
    """Build an :class:`SmcStructure` from callables.

    Omitted structure maps default to identity components, which is right
    for strict symmetric structures such as commutative monoids.
    """
    objs = base.objects
    tensor = FunctorData({(x, y): tensor_obj(x, y) for x in objs for y in objs},
                         {(f, g): tensor_arr(f, g) for f in base.arrows for g in base.arrows})
    ident = base.identity
    t = lambda x, y: tensor.obj_map[(x, y)]
    assoc = assoc or (lambda x, y, z: ident[t(x, t(y, z))])
    runit = runit or (lambda x: ident[x])
    lunit = lunit or (lambda x: ident[x])
    sym = sym or (lambda x, y: ident[t(x, y)])
    return SmcStructure(
        base, tensor, unit,
        {(x, y, z): assoc(x, y, z) for x in objs for y in objs for z in objs},
        {x: runit(x) for x in objs}, {x: lunit(x) for x in objs},
        {(x, y): sym(x, y) for x in objs for y in objs}, name=name)


def _tensor_functor_report(s: SmcStructure) -> list[Violation]:
    """Functoriality of the tensor, checked without materializing ``base x base``."""
    base = s.base
    report = []
    for f in base.arrows:
        for g in base.arrows:
            t = s.tensor_arr(f, g)
            if t not in base.arr_index:
                raise CategoryError(f"tensor of ({f!r}, {g!r}) is dangling")
            want = (s.tensor_obj(base.dom(f), base.dom(g)), s.tensor_obj(base.cod(f), base.cod(g)))
            if (base.dom(t), base.cod(t)) != want:
                report.append(Violation("tensor-functor", (f, g), "endpoints"))
    for x in base.objects:
        for y in base.objects:
            if s.tensor_arr(base.identity[x], base.identity[y]) != base.identity[s.tensor_obj(x, y)]:
                report.append(Violation("tensor-functor", (x, y), "identity"))
    if report:
        return report
    arr = base.arrows
    for g, g2, f, f2 in kernels.bifunctor_violations(base.comp_idx, s.tables()["tarr"],
                                                     base.dom_idx, base.cod_idx):
        report.append(Violation("tensor-functor", ((arr[g], arr[g2]), (arr[f], arr[f2])), "composition"))
    return report


def validate_smc(s: SmcStructure) -> list[Violation]:
    base = s.base
    report = _tensor_functor_report(s)
    t = s.tensor_obj
    expected = {
        "assoc": {k: (t(k[0], t(k[1], k[2])), t(t(k[0], k[1]), k[2])) for k in s.assoc},
        "runit": {x: (t(x, s.unit), x) for x in s.runit},
        "lunit": {x: (t(s.unit, x), x) for x in s.lunit},
        "sym": {k: (t(k[0], k[1]), t(k[1], k[0])) for k in s.sym},
    }
    for label, table in (("assoc", s.assoc), ("runit", s.runit), ("lunit", s.lunit), ("sym", s.sym)):
        for k, arrow in table.items():
            if (base.dom(arrow), base.cod(arrow)) != expected[label][k]:
                report.append(Violation(f"{label}-endpoints", k if isinstance(k, tuple) else (k,)))
            elif label != "sym" and not base.is_iso(arrow):
                report.append(Violation(f"{label}-invertible", k if isinstance(k, tuple) else (k,)))
    if any(v.law == "tensor-functor" for v in report):
        return report
    tb = s.tables()
    out = kernels.smc_violations(len(base.objects), tb["tobj"], tb["tarr"], base.comp_idx,
                                 base.ident_idx, base.dom_idx, base.cod_idx, tb["assoc"],
                                 tb["lunit"], tb["runit"], tb["sym"], tb["unit"])
    for code, inst in out:
        if code in (10, 13):
            names = tuple(base.arrows[i] for i in inst)
        elif code in (11, 12):
            names = (base.arrows[inst[0]],)
        else:
            names = tuple(base.objects[i] for i in inst)
        report.append(Violation(kernels.AXIOM_NAMES[code], names))
    return report


class MonFunctor:
    """A lax symmetric monoidal functor ``(F, F0, F2)`` between finite SMCs."""

    def __init__(self, source: SmcStructure, target: SmcStructure, under: FunctorData,
                 f0, f2: Mapping, kind: str | None = None):
        self.source = source
        self.target = target
        self.under = under
        self.f0 = f0
        self.f2 = dict(f2)
        self.kind = kind if kind is not None else classify(self)

    def on_obj(self, x):
        return self.under.obj_map[x]

    def on_arr(self, f):
        return self.under.arr_map[f]

    def unit_cell(self):
        return self.f0

    def tensor_cell(self, x, y):
        return self.f2[(x, y)]

    def key(self) -> tuple:
        objs = self.source.base.objects
        return (self.under.key(self.source.base), self.f0,
                tuple(self.f2[(x, y)] for x in objs for y in objs))

    def __eq__(self, other):
        return isinstance(other, MonFunctor) and self.key() == other.key() and self.kind == other.kind

    def __hash__(self):
        return hash(self.key())

    def __repr__(self):
        return f"<MonFunctor {self.kind} {dict(self.under.obj_map)!r}>"


class MonNatTrans:
    """A monoidal natural transformation between two :class:`MonFunctor` values."""

    def __init__(self, source: MonFunctor, target: MonFunctor, under: NatTransData):
        self.source = source
        self.target = target
        self.under = under

    def at(self, x):
        return self.under.components[x]

    def key(self) -> tuple:
        return tuple(self.under.components[x] for x in self.source.source.base.objects)

    def __eq__(self, other):
        return (isinstance(other, MonNatTrans) and self.key() == other.key()
                and self.source == other.source and self.target == other.target)

    def __hash__(self):
        return hash(self.key())

    def __repr__(self):
        return f"<MonNatTrans {dict(self.under.components)!r}>"


def classify(f: MonFunctor) -> str:
    tgt = f.target
    cells = [f.f0] + list(f.f2.values())
    if all(tgt.is_identity(c) for c in cells):
        return STRICT
    if all(tgt.base.is_iso(c) for c in cells):
        return STRONG
    return LAX


def identity_monoidal(s: SmcStructure) -> MonFunctor:
    objs = s.base.objects
    return MonFunctor(s, s, identity_functor(s.base), s.id(s.unit),
                      {(x, y): s.id(s.tensor_obj(x, y)) for x in objs for y in objs}, STRICT)


def identity_monoidal_nattrans(f: MonFunctor) -> MonNatTrans:
    return MonNatTrans(f, f, NatTransData({x: f.target.id(f.on_obj(x)) for x in f.source.base.objects}))


def validate_monoidal_functor(f: MonFunctor, dom: SmcStructure | None = None,
                              cod: SmcStructure | None = None) -> list[Violation]:
    dom = dom or f.source
    cod = cod or f.target
    report = validate_functor(f.under, dom.base, cod.base)
    if report:
        return report
    cb = cod.base
    if f.f0 not in cb.arr_index:
        raise CategoryError(f"F0 {f.f0!r} is dangling")
    if (cb.dom(f.f0), cb.cod(f.f0)) != (cod.unit, f.on_obj(dom.unit)):
        report.append(Violation("f0-endpoints", ()))
    objs = dom.base.objects
    for x, y in product(objs, objs):
        if (x, y) not in f.f2:
            raise CategoryError(f"F2 missing at {(x, y)!r}")
        c = f.f2[(x, y)]
        if c not in cb.arr_index:
            raise CategoryError(f"F2 at {(x, y)!r} is dangling")
        want = (cod.tensor_obj(f.on_obj(x), f.on_obj(y)), f.on_obj(dom.tensor_obj(x, y)))
        if (cb.dom(c), cb.cod(c)) != want:
            report.append(Violation("f2-endpoints", (x, y)))
    if report:
        return report
    ts, tt = dom.tables(), cod.tables()
    db = dom.base
    f2 = np.array([[cb.arr_index[f.f2[(x, y)]] for y in objs] for x in objs],
                  dtype=np.int32).reshape(len(objs), len(objs))
    out = kernels.monoidal_functor_violations(
        len(objs), ts["tobj"], ts["tarr"], db.dom_idx, db.cod_idx, ts["assoc"], ts["lunit"],
        ts["runit"], ts["sym"], ts["unit"], tt["tobj"], tt["tarr"], cb.comp_idx, cb.ident_idx,
        tt["assoc"], tt["lunit"], tt["runit"], tt["sym"], obj_map_indices(f.under, db, cb),
        arr_map_indices(f.under, db, cb), cb.arr_index[f.f0], f2)
    for code, inst in out:
        names = tuple(db.arrows[i] for i in inst) if code == 4 else tuple(objs[i] for i in inst)
        report.append(Violation(kernels.AXIOM_NAMES[code], names))
    actual = classify(f)
    if f.kind == STRICT and actual != STRICT:
        report.append(Violation("strict-flag", ()))
    if f.kind == STRONG and actual == LAX:
        report.append(Violation("strong-flag", ()))
    return report


def validate_monoidal_nattrans(t: MonNatTrans, f: MonFunctor | None = None,
                               g: MonFunctor | None = None) -> list[Violation]:
    f = f or t.source
    g = g or t.target
    dom, cod = f.source, f.target
    report = validate_nattrans(t.under, f.under, g.under, dom.base, cod.base)
    objs = dom.base.objects
    for x, y in product(objs, objs):
        left = cod.compose(t.at(dom.tensor_obj(x, y)), f.f2[(x, y)])
        right = cod.compose(g.f2[(x, y)], cod.tensor_arr(t.at(x), t.at(y)))
        if left != right:
            report.append(Violation("monat6", (x, y)))
    if cod.compose(t.at(dom.unit), f.f0) != g.f0:
        report.append(Violation("monat7", ()))
    return report


def _same_shape(s: SmcStructure, t: SmcStructure) -> bool:
    return s.base.objects == t.base.objects and s.base.arrows == t.base.arrows


def compose_monoidal(g: MonFunctor, f: MonFunctor) -> MonFunctor:
    """``g . f`` with ``(gf)0 = g(f0) . g0`` and ``(gf)2 = g(f2) . g2``."""
    if f.target is not g.source and not _same_shape(f.target, g.source):
        raise CategoryError("codomain of f differs from domain of g")
    c = g.target
    under = compose_functors(g.under, f.under)
    f0 = c.compose(g.on_arr(f.f0), g.f0)
    f2 = {(x, y): c.compose(g.on_arr(f.f2[(x, y)]), g.f2[(f.on_obj(x), f.on_obj(y))])
          for (x, y) in f.f2}
    kind = STRICT if f.kind == g.kind == STRICT else None
    return MonFunctor(f.source, c, under, f0, f2, kind)


def compose_nattrans(t2: MonNatTrans, t1: MonNatTrans) -> MonNatTrans:
    """Vertical composite ``t2 . t1``."""
    c = t1.source.target
    return MonNatTrans(t1.source, t2.target, NatTransData(
        {x: c.compose(t2.at(x), t1.at(x)) for x in t1.source.source.base.objects}))


def whisker_functor(g: MonFunctor, t: MonNatTrans) -> MonNatTrans:
    """``g * t``: apply ``g`` to every component."""
    return MonNatTrans(compose_monoidal(g, t.source), compose_monoidal(g, t.target),
                       NatTransData({x: g.on_arr(a) for x, a in t.under.components.items()}))


def precompose_nattrans(t: MonNatTrans, f: MonFunctor) -> MonNatTrans:
    """``t * f``: components of ``t`` at images of ``f``."""
    return MonNatTrans(compose_monoidal(t.source, f), compose_monoidal(t.target, f),
                       NatTransData({x: t.at(f.on_obj(x)) for x in f.source.base.objects}))


def product_smc(b: SmcStructure, c: SmcStructure, name: str | None = None,
                check_caps: bool = True) -> SmcStructure:
    base, _, _ = product_category(b.base, c.base, name=name, check_caps=check_caps)
    objs = base.objects
    tensor = FunctorData(
        {(x, y): (b.tensor_obj(x[0], y[0]), c.tensor_obj(x[1], y[1])) for x in objs for y in objs},
        {(f, g): (b.tensor_arr(f[0], g[0]), c.tensor_arr(f[1], g[1]))
         for f in base.arrows for g in base.arrows})
    return SmcStructure(
        base, tensor, (b.unit, c.unit),
        {(x, y, z): (b.a(x[0], y[0], z[0]), c.a(x[1], y[1], z[1]))
         for x in objs for y in objs for z in objs},
        {x: (b.r(x[0]), c.r(x[1])) for x in objs},
        {x: (b.l(x[0]), c.l(x[1])) for x in objs},
        {(x, y): (b.s(x[0], y[0]), c.s(x[1], y[1])) for x in objs for y in objs},
        name=name or f"{b.name}x{c.name}")


def projections(p: SmcStructure, b: SmcStructure, c: SmcStructure) -> tuple[MonFunctor, MonFunctor]:
    """The two strict projections of ``p = product_smc(b, c)``."""
    out = []
    for i, tgt in enumerate((b, c)):
        under = FunctorData({x: x[i] for x in p.base.objects}, {f: f[i] for f in p.base.arrows})
        out.append(MonFunctor(p, tgt, under, tgt.id(tgt.unit),
                              {(x, y): tgt.id(tgt.tensor_obj(x[i], y[i]))
                               for x in p.base.objects for y in p.base.objects}))
    return out[0], out[1]


def pairing(f: MonFunctor, g: MonFunctor, target: SmcStructure | None = None) -> MonFunctor:
    if f.source is not g.source and not _same_shape(f.source, g.source):
        raise CategoryError("pairing needs a common domain")
    target = target or product_smc(f.target, g.target, check_caps=False)
    src = f.source.base
    under = FunctorData({x: (f.on_obj(x), g.on_obj(x)) for x in src.objects},
                        {a: (f.on_arr(a), g.on_arr(a)) for a in src.arrows})
    f2 = {k: (f.f2[k], g.f2[k]) for k in f.f2}
    kind = STRICT if f.kind == g.kind == STRICT else None
    return MonFunctor(f.source, target, under, (f.f0, g.f0), f2, kind)


def product_functor(f: MonFunctor, g: MonFunctor, source: SmcStructure | None = None,
                    target: SmcStructure | None = None) -> MonFunctor:
    """``f x g`` between product SMCs, structure componentwise."""
    source = source or product_smc(f.source, g.source, check_caps=False)
    target = target or product_smc(f.target, g.target, check_caps=False)
    under = FunctorData({x: (f.on_obj(x[0]), g.on_obj(x[1])) for x in source.base.objects},
                        {a: (f.on_arr(a[0]), g.on_arr(a[1])) for a in source.base.arrows})
    f2 = {(x, y): (f.f2[(x[0], y[0])], g.f2[(x[1], y[1])])
          for x in source.base.objects for y in source.base.objects}
    return MonFunctor(source, target, under, (f.f0, g.f0), f2)


def terminal_smc() -> SmcStructure:
    base = FinCat(["*"], [("*", "*", "*")], {"*": "*"}, {("*", "*"): "*"}, name="terminal")
    return make_smc(base, lambda x, y: "*", lambda f, g: "*", "*", name="terminal")


def to_terminal(a: SmcStructure, one: SmcStructure | None = None) -> MonFunctor:
    one = one or terminal_smc()
    objs = a.base.objects
    return MonFunctor(a, one, FunctorData({x: "*" for x in objs}, {f: "*" for f in a.base.arrows}),
                      "*", {(x, y): "*" for x in objs for y in objs}, STRICT)


def constant_unit_from_terminal(b: SmcStructure, one: SmcStructure | None = None) -> MonFunctor:
    """``Delta_I: 1 -> B`` with ``F0 = id`` and ``F2 = r_I``; strong."""
    one = one or terminal_smc()
    i = b.unit
    return MonFunctor(one, b, FunctorData({"*": i}, {"*": b.id(i)}), b.id(i),
                      {("*", "*"): b.r(i)})


def constant_unit(a: SmcStructure, b: SmcStructure) -> MonFunctor:
    """The constant functor ``A -> 1 -> B``."""
    one = terminal_smc()
    return compose_monoidal(constant_unit_from_terminal(b, one), to_terminal(a, one))


def ten_as_functor(s: SmcStructure, square: SmcStructure | None = None) -> MonFunctor:
    """The tensor as a monoidal functor ``s x s -> s``."""
    square = square or product_smc(s, s, check_caps=False)
    objs = square.base.objects
    under = FunctorData({x: s.tensor_obj(*x) for x in objs},
                        {f: s.tensor_arr(*f) for f in square.base.arrows})
    f2 = {(x, y): middle_four(s, x[0], x[1], y[0], y[1]) for x in objs for y in objs}
    return MonFunctor(square, s, under, unit_split(s), f2)


def _reassociate(s: SmcStructure, left: SmcStructure, right: SmcStructure) -> MonFunctor:
    """Strict iso ``s x (s x s) -> (s x s) x s``."""
    under = FunctorData({x: ((x[0], x[1][0]), x[1][1]) for x in left.base.objects},
                        {f: ((f[0], f[1][0]), f[1][1]) for f in left.base.arrows})
    objs = left.base.objects
    return MonFunctor(left, right, under, right.id(right.unit),
                      {(x, y): right.id(right.tensor_obj(under.obj_map[x], under.obj_map[y]))
                       for x in objs for y in objs}, STRICT)


def _swap(s: SmcStructure, square: SmcStructure) -> MonFunctor:
    objs = square.base.objects
    under = FunctorData({x: (x[1], x[0]) for x in objs}, {f: (f[1], f[0]) for f in square.base.arrows})
    return MonFunctor(square, square, under, square.id(square.unit),
                      {(x, y): square.id(square.tensor_obj((x[1], x[0]), (y[1], y[0])))
                       for x in objs for y in objs}, STRICT)


def structure_cells_report(s: SmcStructure) -> list[Violation]:
    """Check that ``a, r, l, s`` are monoidal transformations between
    the evident composites built from the tensor functor."""
    report = []
    square = product_smc(s, s, check_caps=False)
    ten = ten_as_functor(s, square)
    ident = identity_monoidal(s)
    cube_r = product_smc(s, square, check_caps=False)
    cube_l = product_smc(square, s, check_caps=False)
    left = compose_monoidal(ten, product_functor(ident, ten, cube_r, square))
    right = compose_monoidal(compose_monoidal(ten, product_functor(ten, ident, cube_l, square)),
                             _reassociate(s, cube_r, cube_l))
    cell = MonNatTrans(left, right, NatTransData({x: s.a(x[0], x[1][0], x[1][1])
                                                 for x in cube_r.base.objects}))
    report += [Violation("assoc-monoidal:" + v.law, v.instance) for v in validate_monoidal_nattrans(cell)]
    const = constant_unit(s, s)
    with_unit_r = compose_monoidal(ten, pairing(ident, const, square))
    with_unit_l = compose_monoidal(ten, pairing(const, ident, square))
    cell = MonNatTrans(with_unit_r, ident, NatTransData({x: s.r(x) for x in s.base.objects}))
    report += [Violation("runit-monoidal:" + v.law, v.instance) for v in validate_monoidal_nattrans(cell)]
    cell = MonNatTrans(with_unit_l, ident, NatTransData({x: s.l(x) for x in s.base.objects}))
    report += [Violation("lunit-monoidal:" + v.law, v.instance) for v in validate_monoidal_nattrans(cell)]
    swapped = compose_monoidal(ten, _swap(s, square))
    cell = MonNatTrans(ten, swapped, NatTransData({x: s.s(*x) for x in square.base.objects}))
    report += [Violation("sym-monoidal:" + v.law, v.instance) for v in validate_monoidal_nattrans(cell)]
    for f in (ten, left, right, with_unit_l, with_unit_r, swapped):
        report += [Violation("structure-functor:" + v.law, v.instance)
                   for v in validate_monoidal_functor(f)]
    return report


def check_f2_f0_monoidal(f: MonFunctor) -> list[Violation]:
    """``F2`` as a monoidal transformation ``Ten(F x F) -> F Ten`` and ``F0``
    as one ``Delta_I -> F Delta_I``."""
    a, b = f.source, f.target
    sq_a, sq_b = product_smc(a, a, check_caps=False), product_smc(b, b, check_caps=False)
    ten_a, ten_b = ten_as_functor(a, sq_a), ten_as_functor(b, sq_b)
    left = compose_monoidal(ten_b, product_functor(f, f, sq_a, sq_b))
    right = compose_monoidal(f, ten_a)
    cell = MonNatTrans(left, right, NatTransData({x: f.f2[x] for x in sq_a.base.objects}))
    report = [Violation("F2mon:" + v.law, v.instance) for v in validate_monoidal_nattrans(cell)]
    one = terminal_smc()
    delta_b = constant_unit_from_terminal(b, one)
    delta_a = constant_unit_from_terminal(a, one)
    cell = MonNatTrans(delta_b, compose_monoidal(f, delta_a), NatTransData({"*": f.f0}))
    report += [Violation("F0mon:" + v.law, v.instance) for v in validate_monoidal_nattrans(cell)]
    return report
