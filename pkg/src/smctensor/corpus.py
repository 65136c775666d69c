"""The small symmetric monoidal categories used throughout the tests."""

from __future__ import annotations

from functools import lru_cache

from .fincat import FinCat, discrete_category, monoid_category
from .monoidal import SmcStructure, make_smc, product_smc, terminal_smc


@lru_cache(maxsize=None)
def terminal() -> SmcStructure:
    return terminal_smc()


@lru_cache(maxsize=None)
def z2() -> SmcStructure:
    """Discrete category on {0, 1} with xor; the identity of x is named x."""
    base = discrete_category([0, 1], name="Z2")
    return make_smc(base, lambda x, y: x ^ y, lambda f, g: f ^ g, 0, name="Z2")


@lru_cache(maxsize=None)
def z3() -> SmcStructure:
    """One object, arrows 0, 1, 2 under addition mod 3; tensor = composition."""
    base = monoid_category([0, 1, 2], lambda g, f: (g + f) % 3, 0, obj="*", name="Z3")
    return make_smc(base, lambda x, y: "*", lambda f, g: (f + g) % 3, "*", name="Z3")


@lru_cache(maxsize=None)
def monoid_e() -> SmcStructure:
    """One object, arrows 1 and e with e.e = e; tensor = composition."""
    mult = lambda g, f: "e" if "e" in (g, f) else "1"
    base = monoid_category(["1", "e"], mult, "1", obj="*", name="E")
    return make_smc(base, lambda x, y: "*", mult, "*", name="E")


@lru_cache(maxsize=None)
def ord2() -> SmcStructure:
    """The poset 0 <= 1 with max as tensor and unit 0."""
    arrows = [("0", 0, 0), ("1", 1, 1), ("<", 0, 1)]
    ident = {0: "0", 1: "1"}
    comp = {("0", "0"): "0", ("1", "1"): "1", ("<", "0"): "<", ("1", "<"): "<"}
    base = FinCat([0, 1], arrows, ident, comp, name="Ord2")
    ends = {a: (d, c) for a, d, c in arrows}

    def tarr(f, g):
        d = max(ends[f][0], ends[g][0])
        c = max(ends[f][1], ends[g][1])
        return ident[d] if d == c else "<"

    return make_smc(base, max, tarr, 0, name="Ord2")


@lru_cache(maxsize=None)
def sline() -> SmcStructure:
    """Parity objects 0, 1 with automorphisms +/-1 and the Koszul sign rule.

    The only corpus member whose symmetry is not an identity:
    ``s_{1,1} = -1``.  Arrow names are ``"<parity><sign>"``.
    """
    objs = [0, 1]
    arrows = [(f"{x}{e}", x, x) for x in objs for e in "+-"]
    mul = lambda g, f: "+" if g[1] == f[1] else "-"
    comp = {(g, f): f"{g[0]}{mul(g, f)}" for g, _, _ in arrows for f, _, _ in arrows if g[0] == f[0]}
    base = FinCat(objs, arrows, {x: f"{x}+" for x in objs}, comp, name="SLine")
    tarr = lambda f, g: f"{int(f[0]) ^ int(g[0])}{mul(f, g)}"
    sym = lambda x, y: f"{x ^ y}{'-' if x and y else '+'}"
    return make_smc(base, lambda x, y: x ^ y, tarr, 0, sym=sym, name="SLine")


@lru_cache(maxsize=None)
def z2xz3() -> SmcStructure:
    return product_smc(z2(), z3(), name="Z2xZ3")


CORPUS = {
    "terminal": terminal,
    "z2": z2,
    "z3": z3,
    "monoid_e": monoid_e,
    "ord2": ord2,
    "sline": sline,
    "z2xz3": z2xz3,
}


def corpus() -> dict[str, SmcStructure]:
    return {k: f() for k, f in CORPUS.items()}
