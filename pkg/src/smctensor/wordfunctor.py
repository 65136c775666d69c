"""Strict symmetric monoidal functors out of presented categories.

A :class:`WordFunctor` is fixed by its value on leaves and on the non-canonical
generator edges; everything else follows by structural induction, which is
what makes it strict.  The target is any :class:`~smctensor.monoidal.SmcOps`.
"""

from __future__ import annotations

from typing import Callable

from .monoidal import SmcOps
from .words import (Assoc, AssocInv, LUnit, LUnitInv, Path, RUnit, RUnitInv, Sym, Tensor,
                    Whisker, Word, I, identity, tensor_paths)


class WordOps(SmcOps):
    """Tensor, unit and canonical arrows on words, with paths as arrows.

    ``same`` is literal path equality; subclasses refine it.
    """
    unit = I

    def id(self, x):
        return identity(x)

    def compose(self, g: Path, f: Path) -> Path:
        return f.then(g)

    def dom(self, p: Path):
        return p.dom

    def cod(self, p: Path):
        return p.cod

    def tensor_obj(self, x, y):
        return Tensor(x, y)

    def tensor_arr(self, p: Path, q: Path) -> Path:
        return tensor_paths(p, q)

    def a(self, x, y, z):
        return Path.of(Assoc(x, y, z))

    def a_inv(self, x, y, z):
        return Path.of(AssocInv(x, y, z))

    def l(self, x):
        return Path.of(LUnit(x))

    def l_inv(self, x):
        return Path.of(LUnitInv(x))

    def r(self, x):
        return Path.of(RUnit(x))

    def r_inv(self, x):
        return Path.of(RUnitInv(x))

    def s(self, x, y):
        return Path.of(Sym(x, y))


class WordFunctor:
    def __init__(self, source, target, leaf: Callable, generator: Callable, name: str | None = None):
        self.source = source
        self.target = target
        self._leaf = leaf
        self._generator = generator
        self.name = name or "F"
        self._obj = {}
        self._edge = {}

    def __repr__(self):
        return f"<WordFunctor {self.name}>"

    def obj(self, x: Word):
        out = self._obj.get(x)
        if out is None:
            t = self.target
            if x is I:
                out = t.unit
            elif isinstance(x, Tensor):
                out = t.tensor_obj(self.obj(x.left), self.obj(x.right))
            else:
                out = self._leaf(x)
            self._obj[x] = out
        return out

    def edge(self, e):
        out = self._edge.get(e)
        if out is None:
            out = self._eval_edge(e)
            self._edge[e] = out
        return out

    def _eval_edge(self, e):
        t = self.target
        o = self.obj
        if isinstance(e, Whisker):
            inner = self.edge(e.inner)
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
        return self._generator(e)

    def unit_cell(self):
        return self.target.id(self.target.unit)

    def tensor_cell(self, x: Word, y: Word):
        return self.target.id(self.obj(Tensor(x, y)))

    def path(self, p: Path):
        t = self.target
        out = t.id(self.obj(p.dom))
        for e in p.edges:
            out = t.compose(self.edge(e), out)
        return out

    __call__ = path

    def same(self, p: Path, q: Path) -> bool:
        return self.target.same(self.path(p), self.path(q))

    def then(self, g: "WordFunctor", name: str | None = None) -> "WordFunctor":
        """``g . self``, valid when ``g`` is a WordFunctor on this functor's target."""
        f = self
        return WordFunctor(
            f.source, g.target,
            lambda x: g.obj(f.obj(x)),
            lambda e: g.path(_as_path(f.target, f.edge(e))),
            name=name or f"{g.name}.{f.name}")


def _as_path(target, arrow) -> Path:
    if isinstance(arrow, Path):
        return arrow
    raise TypeError("composition of word functors needs a presented middle category")
