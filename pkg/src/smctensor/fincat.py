"""Finite categories given by explicit tables, with exhaustive validation."""

from __future__ import annotations

from dataclasses import dataclass, field
from types import MappingProxyType
from typing import Any, Hashable, Iterable, Mapping

import numpy as np

from . import kernels

MAX_OBJECTS = 64
MAX_ARROWS = 512


class CategoryError(ValueError):
    """Malformed input: dangling ids, missing components, wrong endpoints."""


class CompositionError(CategoryError):
    """Raised when composing arrows whose endpoints do not match."""


class CapacityError(RuntimeError):
    """A size cap was exceeded."""


@dataclass(frozen=True)
class Violation:
    law: str
    instance: tuple
    detail: str = ""

    def __str__(self):
        text = f"{self.law} at {self.instance!r}"
        return f"{text}: {self.detail}" if self.detail else text


def laws(report: Iterable[Violation]) -> set[str]:
    return {v.law for v in report}


class FinCat:
    """A finite category.

    ``arrows`` is a list of ``(arrow_id, dom, cod)``; ``comp`` maps
    ``(g, f)`` to ``g . f``.  Ids may be any hashable values.
    """

    def __init__(self, objects: Iterable[Hashable], arrows: Iterable[tuple],
                 identity: Mapping, comp: Mapping, name: str | None = None,
                 check_caps: bool = True):
        self.name = name
        self.objects = tuple(objects)
        arrows = tuple(tuple(a) for a in arrows)
        if check_caps and len(self.objects) > MAX_OBJECTS:
            raise CapacityError(f"{len(self.objects)} objects exceeds cap {MAX_OBJECTS}")
        if check_caps and len(arrows) > MAX_ARROWS:
            raise CapacityError(f"{len(arrows)} arrows exceeds cap {MAX_ARROWS}")
        if len(set(self.objects)) != len(self.objects):
            raise CategoryError("duplicate object id")
        self.obj_index = {x: i for i, x in enumerate(self.objects)}
        self.arrows = tuple(a for a, _, _ in arrows)
        if len(set(self.arrows)) != len(self.arrows):
            raise CategoryError("duplicate arrow id")
        self.arr_index = {a: i for i, a in enumerate(self.arrows)}
        self._dom = {}
        self._cod = {}
        for a, d, c in arrows:
            for end in (d, c):
                if end not in self.obj_index:
                    raise CategoryError(f"arrow {a!r} has dangling endpoint {end!r}")
            self._dom[a] = d
            self._cod[a] = c
        self.identity = MappingProxyType(dict(identity))
        for x in self.objects:
            if x not in self.identity:
                raise CategoryError(f"no identity for object {x!r}")
        for x, a in self.identity.items():
            if x not in self.obj_index or a not in self.arr_index:
                raise CategoryError(f"identity entry {x!r} -> {a!r} is dangling")
        self.comp = MappingProxyType(dict(comp))
        for (g, f), h in self.comp.items():
            for a in (g, f, h):
                if a not in self.arr_index:
                    raise CategoryError(f"comp entry ({g!r}, {f!r}) -> {h!r} is dangling")
        self._homs = {}
        for a in self.arrows:
            self._homs.setdefault((self._dom[a], self._cod[a]), []).append(a)
        self._homs = {k: tuple(v) for k, v in self._homs.items()}
        n = len(self.arrows)
        self.dom_idx = np.array([self.obj_index[self._dom[a]] for a in self.arrows], dtype=np.int32)
        self.cod_idx = np.array([self.obj_index[self._cod[a]] for a in self.arrows], dtype=np.int32)
        self.ident_idx = np.array([self.arr_index[self.identity[x]] for x in self.objects], dtype=np.int32)
        table = np.full((n, n), -1, dtype=np.int32)
        for (g, f), h in self.comp.items():
            table[self.arr_index[g], self.arr_index[f]] = self.arr_index[h]
        self.comp_idx = table

    def __repr__(self):
        label = self.name or "FinCat"
        return f"<{label}: {len(self.objects)} objects, {len(self.arrows)} arrows>"

    def dom(self, f):
        return self._dom[f]

    def cod(self, f):
        return self._cod[f]

    def hom(self, x, y) -> tuple:
        return self._homs.get((x, y), ())

    def compose(self, g, f):
        """``g . f``; raises CompositionError unless ``cod f == dom g``."""
        if self._cod[f] != self._dom[g]:
            raise CompositionError(f"cannot compose {g!r} after {f!r}")
        return self.comp[(g, f)]

    def compose_all(self, *arrows):
        """Compose right to left: ``compose_all(h, g, f) == h . g . f``."""
        out = arrows[-1]
        for g in reversed(arrows[:-1]):
            out = self.compose(g, out)
        return out

    def is_iso(self, f) -> bool:
        return self.inverse(f) is not None

    def inverse(self, f):
        d, c = self._dom[f], self._cod[f]
        for g in self.hom(c, d):
            if self.comp.get((g, f)) == self.identity[d] and self.comp.get((f, g)) == self.identity[c]:
                return g
        return None

    def is_discrete(self) -> bool:
        return len(self.arrows) == len(self.objects)

    def signature(self) -> tuple:
        """Hashable summary used to compare categories table for table."""
        return (self.objects, tuple((a, self._dom[a], self._cod[a]) for a in self.arrows),
                tuple(sorted(self.identity.items(), key=repr)),
                tuple(sorted(self.comp.items(), key=repr)))


@dataclass(frozen=True)
class FunctorData:
    obj_map: Mapping = field(hash=False)
    arr_map: Mapping = field(hash=False)

    def __post_init__(self):
        object.__setattr__(self, "obj_map", MappingProxyType(dict(self.obj_map)))
        object.__setattr__(self, "arr_map", MappingProxyType(dict(self.arr_map)))

    def key(self, dom: FinCat) -> tuple:
        return (tuple(self.obj_map[x] for x in dom.objects),
                tuple(self.arr_map[a] for a in dom.arrows))


@dataclass(frozen=True)
class NatTransData:
    components: Mapping = field(hash=False)

    def __post_init__(self):
        object.__setattr__(self, "components", MappingProxyType(dict(self.components)))


def identity_functor(c: FinCat) -> FunctorData:
    return FunctorData({x: x for x in c.objects}, {a: a for a in c.arrows})


def compose_functors(g: FunctorData, f: FunctorData) -> FunctorData:
    return FunctorData({x: g.obj_map[y] for x, y in f.obj_map.items()},
                       {a: g.arr_map[b] for a, b in f.arr_map.items()})


def validate_category(c: FinCat) -> list[Violation]:
    report = []
    for x in c.objects:
        a = c.identity[x]
        if c.dom(a) != x or c.cod(a) != x:
            report.append(Violation("identity-endpoints", (x,), f"identity {a!r}"))
    table_ok = True
    for g in c.arrows:
        for f in c.arrows:
            composable = c.cod(f) == c.dom(g)
            present = (g, f) in c.comp
            if composable and not present:
                report.append(Violation("comp-missing", (g, f)))
                table_ok = False
            elif present and not composable:
                report.append(Violation("comp-extra", (g, f)))
                table_ok = False
            elif present:
                h = c.comp[(g, f)]
                if c.dom(h) != c.dom(f) or c.cod(h) != c.cod(g):
                    report.append(Violation("comp-endpoints", (g, f), f"result {h!r}"))
                    table_ok = False
    if report or not table_ok:
        return report
    for f, side in kernels.identity_violations(c.comp_idx, c.ident_idx, c.dom_idx, c.cod_idx):
        law = "left-identity" if side == 0 else "right-identity"
        report.append(Violation(law, (c.arrows[f],)))
    for h, g, f in kernels.assoc_violations(c.comp_idx, c.dom_idx, c.cod_idx):
        report.append(Violation("associativity", (c.arrows[h], c.arrows[g], c.arrows[f])))
    return report


def compose(c: FinCat, g, f):
    return c.compose(g, f)


def product_category(c: FinCat, d: FinCat, name: str | None = None, check_caps: bool = True):
    """Return ``(c x d, first projection, second projection)``.

    Products built internally for validation pass ``check_caps=False``.
    """
    objects = [(x, y) for x in c.objects for y in d.objects]
    arrows = [((f, g), (c.dom(f), d.dom(g)), (c.cod(f), d.cod(g)))
              for f in c.arrows for g in d.arrows]
    identity = {(x, y): (c.identity[x], d.identity[y]) for x, y in objects}
    comp = {}
    for (g, f), h in c.comp.items():
        for (g2, f2), h2 in d.comp.items():
            comp[((g, g2), (f, f2))] = (h, h2)
    prod = FinCat(objects, arrows, identity, comp, name=name, check_caps=check_caps)
    p1 = FunctorData({o: o[0] for o in objects}, {a: a[0] for a, _, _ in arrows})
    p2 = FunctorData({o: o[1] for o in objects}, {a: a[1] for a, _, _ in arrows})
    return prod, p1, p2


def _check_functor_structure(f: FunctorData, dom: FinCat, cod: FinCat):
    for x in dom.objects:
        if x not in f.obj_map:
            raise CategoryError(f"object map undefined at {x!r}")
        if f.obj_map[x] not in cod.obj_index:
            raise CategoryError(f"object {x!r} sent to dangling {f.obj_map[x]!r}")
    for a in dom.arrows:
        if a not in f.arr_map:
            raise CategoryError(f"arrow map undefined at {a!r}")
        if f.arr_map[a] not in cod.arr_index:
            raise CategoryError(f"arrow {a!r} sent to dangling {f.arr_map[a]!r}")


def arr_map_indices(f: FunctorData, dom: FinCat, cod: FinCat) -> np.ndarray:
    return np.array([cod.arr_index[f.arr_map[a]] for a in dom.arrows], dtype=np.int32)


def obj_map_indices(f: FunctorData, dom: FinCat, cod: FinCat) -> np.ndarray:
    return np.array([cod.obj_index[f.obj_map[x]] for x in dom.objects], dtype=np.int32)


def validate_functor(f: FunctorData, dom: FinCat, cod: FinCat) -> list[Violation]:
    _check_functor_structure(f, dom, cod)
    report = []
    for a in dom.arrows:
        b = f.arr_map[a]
        want = (f.obj_map[dom.dom(a)], f.obj_map[dom.cod(a)])
        if (cod.dom(b), cod.cod(b)) != want:
            report.append(Violation("endpoints", (a,), f"image {b!r}"))
    for x in dom.objects:
        if f.arr_map[dom.identity[x]] != cod.identity[f.obj_map[x]]:
            report.append(Violation("identity", (x,)))
    if report:
        return report
    amap = arr_map_indices(f, dom, cod)
    for g, h in kernels.functor_violations(dom.comp_idx, cod.comp_idx, amap, dom.dom_idx, dom.cod_idx):
        report.append(Violation("composition", (dom.arrows[g], dom.arrows[h])))
    return report


def validate_nattrans(t: NatTransData, f: FunctorData, g: FunctorData,
                      dom: FinCat, cod: FinCat) -> list[Violation]:
    for x in dom.objects:
        if x not in t.components:
            raise CategoryError(f"no component at {x!r}")
        a = t.components[x]
        if a not in cod.arr_index:
            raise CategoryError(f"component at {x!r} is dangling {a!r}")
        if cod.dom(a) != f.obj_map[x] or cod.cod(a) != g.obj_map[x]:
            raise CategoryError(
                f"component at {x!r} is {cod.dom(a)!r} -> {cod.cod(a)!r}, "
                f"expected {f.obj_map[x]!r} -> {g.obj_map[x]!r}")
    comps = np.array([cod.arr_index[t.components[x]] for x in dom.objects], dtype=np.int32)
    bad = kernels.naturality_violations(cod.comp_idx, arr_map_indices(f, dom, cod),
                                        arr_map_indices(g, dom, cod), comps,
                                        dom.dom_idx, dom.cod_idx)
    return [Violation("naturality", (dom.arrows[a],)) for a in bad]


def discrete_category(objects: Iterable, name: str | None = None) -> FinCat:
    """Discrete category; the identity of ``x`` is named ``x``."""
    objects = list(objects)
    return FinCat(objects, [(x, x, x) for x in objects], {x: x for x in objects},
                  {(x, x): x for x in objects}, name=name)


def monoid_category(elements: list, mult: Any, unit, obj=0, name: str | None = None) -> FinCat:
    """One-object category of a finite monoid; ``mult(g, f)`` is ``g . f``."""
    return FinCat([obj], [(e, obj, obj) for e in elements], {obj: unit},
                  {(g, f): mult(g, f) for g in elements for f in elements}, name=name)
