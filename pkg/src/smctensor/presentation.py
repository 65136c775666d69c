"""Text files describing finite SMCs, and the word/path grammar.

A presentation file has ``key value`` header lines followed by
``[section]`` blocks, one row per line, ``#`` starting a comment::

    name Z2
    unit 0
    [objects]
    0
    1
    [arrows]        # id dom cod
    0 0 0
    1 1 1
    [id]            # object arrow
    ...
    [comp]          # g f g.f
    [tensor_obj]    # x y x(x)y
    [tensor_arr]    # f g f(x)g
    [assoc]         # x y z a_{x,y,z}
    [lunit]         # x l_x
    [runit]         # x r_x
    [sym]           # x y s_{x,y}

Structure tables that are left out default to identity components.
Tokens are integers, bare names, quoted strings or tuples
``(a,b)`` without spaces.
"""

from __future__ import annotations

import ast
import json
import re
from pathlib import Path as FilePath

from .fincat import FinCat, laws
from .monoidal import SmcStructure, make_smc, validate_smc
from .words import (STAR, Assoc, AssocInv, LUnit, LUnitInv,
                    PairLeaf, Path, PathError, RUnit, RUnitInv, Sym, Tensor, Whisker,
                    Word, I)

SECTIONS = ("objects", "arrows", "id", "comp", "tensor_obj", "tensor_arr", "assoc", "lunit", "runit", "sym")
ROW_WIDTH = {"objects": 1, "arrows": 3, "id": 2, "comp": 3, "tensor_obj": 3, "tensor_arr": 3,
             "assoc": 4, "lunit": 2, "runit": 2, "sym": 3}
_BARE = re.compile(r"[A-Za-z0-9_+\-<>*'.]+")
_INT = re.compile(r"-?[0-9]+")


class PresentationError(ValueError):
    """A parse error; ``line`` is 1-based, 0 when not tied to a line."""

    def __init__(self, message: str, line: int = 0, source: str = "<text>"):
        self.line = line
        self.source = source
        where = f"{source}:{line}: " if line else f"{source}: "
        super().__init__(where + message)


# ---------------------------------------------------------------- tokens

def format_atom(v) -> str:
    if isinstance(v, bool):
        raise TypeError("booleans are not valid identifiers")
    if isinstance(v, int):
        return str(v)
    if isinstance(v, tuple):
        return "(" + ",".join(format_atom(x) for x in v) + ")"
    if isinstance(v, str):
        if _BARE.fullmatch(v) and not _INT.fullmatch(v) and v != "I":
            return v
        return json.dumps(v)
    raise TypeError(f"cannot write identifier {v!r}")


def parse_atom(text: str):
    """Inverse of :func:`format_atom`."""
    value, rest = _atom(text.strip())
    if rest:
        raise ValueError(f"trailing text {rest!r} after identifier")
    return value


def _atom(s: str):
    if not s:
        raise ValueError("missing identifier")
    if s[0] == "(":
        items = []
        s = s[1:]
        while True:
            v, s = _atom(s)
            items.append(v)
            if s[:1] == ",":
                s = s[1:]
            elif s[:1] == ")":
                return tuple(items), s[1:]
            else:
                raise ValueError("unterminated tuple")
    if s[0] in "'\"":
        end = s.find(s[0], 1)
        if end < 0:
            raise ValueError("unterminated string")
        return ast.literal_eval(s[:end + 1]), s[end + 1:]
    m = _BARE.match(s)
    if not m:
        raise ValueError(f"bad identifier at {s!r}")
    tok = m.group(0)
    return (int(tok) if _INT.fullmatch(tok) else tok), s[m.end():]


# ---------------------------------------------------------------- files

def parse_presentation_text(text: str, source: str = "<text>") -> SmcStructure:
    header = {}
    rows = {k: [] for k in SECTIONS}
    section = None
    for n, raw in enumerate(text.splitlines(), 1):
        line = _strip_comment(raw)
        if not line:
            continue
        if line.startswith("["):
            if not line.endswith("]") or line[1:-1] not in rows:
                raise PresentationError(f"unknown section {line}", n, source)
            section = line[1:-1]
            continue
        parts = line.split()
        if section is None:
            if len(parts) != 2 or parts[0] not in ("name", "unit"):
                raise PresentationError(f"expected 'name X' or 'unit X', got {line!r}", n, source)
            header[parts[0]] = (parts[1], n)
            continue
        if len(parts) != ROW_WIDTH[section]:
            raise PresentationError(f"[{section}] rows have {ROW_WIDTH[section]} fields, got {len(parts)}",
                                    n, source)
        try:
            rows[section].append(([parse_atom(p) for p in parts], n))
        except ValueError as exc:
            raise PresentationError(str(exc), n, source) from None
    return _build(header, rows, source)


def _strip_comment(raw: str) -> str:
    out, quote = [], None
    for ch in raw:
        if quote is None and ch in "'\"":
            quote = ch
        elif ch == quote:
            quote = None
        elif ch == "#" and quote is None:
            break
        out.append(ch)
    return "".join(out).strip()


def _build(header: dict, rows: dict, source: str) -> SmcStructure:
    def fail(msg, line=0):
        raise PresentationError(msg, line, source)

    if "unit" not in header:
        fail("missing 'unit' line")
    objects = [r[0] for r, _ in rows["objects"]]
    if not objects:
        fail("no objects")
    known = set(objects)
    arrows = []
    for (f, d, c), n in rows["arrows"]:
        if d not in known or c not in known:
            fail(f"arrow {format_atom(f)} has an endpoint that is not an object", n)
        arrows.append((f, d, c))
    named = {f for f, _, _ in arrows}
    ident = {}
    for (x, a), n in rows["id"]:
        if x not in known or a not in named:
            fail(f"identity row ({format_atom(x)}, {format_atom(a)}) names an unknown object or arrow", n)
        if x in ident:
            fail(f"second identity for {format_atom(x)}", n)
        ident[x] = a
    comp = {}
    for (g, f, h), n in rows["comp"]:
        if not {g, f, h} <= named:
            fail("comp row names an unknown arrow", n)
        if (g, f) in comp:
            fail(f"composite of ({format_atom(g)}, {format_atom(f)}) given twice", n)
        comp[(g, f)] = h
    name = header.get("name", (None, 0))[0]
    try:
        base = FinCat(objects, arrows, ident, comp, name=name)
    except ValueError as exc:
        fail(str(exc))
    ends = {a: (d, c) for a, d, c in arrows}
    for (g, f, h), n in rows["comp"]:
        if ends[g][0] != ends[f][1] or ends[h] != (ends[f][0], ends[g][1]):
            fail(f"comp row ({format_atom(g)}, {format_atom(f)}) -> {format_atom(h)} has the wrong endpoints", n)
    tobj = {(x, y): z for (x, y, z), _ in rows["tensor_obj"]}
    tarr = {(f, g): h for (f, g, h), _ in rows["tensor_arr"]}
    tables = {k: {tuple(r[:-1]) if len(r) > 2 else r[0]: r[-1] for r, _ in rows[k]}
              for k in ("assoc", "lunit", "runit", "sym")}
    unit = parse_atom(header["unit"][0])
    if unit not in known:
        fail(f"unit {format_atom(unit)} is not an object", header["unit"][1])

    def lookup(table, label):
        def get(*key):
            k = key if len(key) > 1 else key[0]
            if k not in table:
                fail(f"[{label}] has no entry for {format_atom(k)}")
            return table[k]
        return get

    opt = lambda k: lookup(tables[k], k) if rows[k] else None
    try:
        return make_smc(base, lookup(tobj, "tensor_obj"), lookup(tarr, "tensor_arr"), unit,
                        assoc=opt("assoc"), runit=opt("runit"), lunit=opt("lunit"), sym=opt("sym"),
                        name=name)
    except PresentationError:
        raise
    except ValueError as exc:
        fail(str(exc))


class AxiomError(PresentationError):
    """The tables parse but break SMC axioms; ``report`` lists the violations."""

    def __init__(self, report, source: str):
        self.report = report
        super().__init__("fails SMC axioms: " + ", ".join(sorted(laws(report))), 0, source)


def parse_presentation(path, validate: bool = True) -> SmcStructure:
    path = FilePath(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise PresentationError(f"cannot read file ({exc.strerror})", 0, str(path)) from None
    s = parse_presentation_text(text, str(path))
    if validate:
        report = validate_smc(s)
        if report:
            raise AxiomError(report, str(path))
    return s


def emit_presentation(s: SmcStructure) -> str:
    """Text that :func:`parse_presentation_text` reads back to the same tables."""
    b = s.base
    a = format_atom
    out = []
    if s.name:
        out.append(f"name {a(s.name) if _BARE.fullmatch(str(s.name)) else json.dumps(s.name)}")
    out.append(f"unit {a(s.unit)}")
    out.append("[objects]")
    out += [a(x) for x in b.objects]
    out.append("[arrows]")
    out += [f"{a(f)} {a(b.dom(f))} {a(b.cod(f))}" for f in b.arrows]
    out.append("[id]")
    out += [f"{a(x)} {a(b.identity[x])}" for x in b.objects]
    out.append("[comp]")
    out += [f"{a(g)} {a(f)} {a(b.comp[(g, f)])}" for g in b.arrows for f in b.arrows if (g, f) in b.comp]
    out.append("[tensor_obj]")
    out += [f"{a(x)} {a(y)} {a(s.tensor_obj(x, y))}" for x in b.objects for y in b.objects]
    out.append("[tensor_arr]")
    out += [f"{a(f)} {a(g)} {a(s.tensor_arr(f, g))}" for f in b.arrows for g in b.arrows]
    out.append("[assoc]")
    out += [f"{a(x)} {a(y)} {a(z)} {a(s.assoc[(x, y, z)])}"
            for x in b.objects for y in b.objects for z in b.objects]
    out.append("[lunit]")
    out += [f"{a(x)} {a(s.lunit[x])}" for x in b.objects]
    out.append("[runit]")
    out += [f"{a(x)} {a(s.runit[x])}" for x in b.objects]
    out.append("[sym]")
    out += [f"{a(x)} {a(y)} {a(s.sym[(x, y)])}" for x in b.objects for y in b.objects]
    return "\n".join(out) + "\n"


def same_tables(s: SmcStructure, t: SmcStructure) -> bool:
    """Identical objects, arrows and structure tables, in the same order."""
    b, c = s.base, t.base
    return (b.objects == c.objects and b.arrows == c.arrows
            and all(b.dom(f) == c.dom(f) and b.cod(f) == c.cod(f) for f in b.arrows)
            and dict(b.identity) == dict(c.identity) and dict(b.comp) == dict(c.comp)
            and s.unit == t.unit and s.tensor.obj_map == t.tensor.obj_map
            and s.tensor.arr_map == t.tensor.arr_map and s.assoc == t.assoc
            and s.lunit == t.lunit and s.runit == t.runit and s.sym == t.sym)


# ---------------------------------------------------------------- words and paths

def _split_args(s: str) -> list:
    """Split at top-level commas."""
    out, depth, cur = [], 0, []
    for ch in s:
        if ch in "([":
            depth += 1
        elif ch in ")]":
            depth -= 1
        if ch == "," and depth == 0:
            out.append("".join(cur))
            cur = []
        else:
            cur.append(ch)
    out.append("".join(cur))
    return [x.strip() for x in out]


class WordParser:
    """``I``, ``*``, ``(a,b)``, ``[X*Y]`` and ``X*Y`` (left nested)."""

    def __init__(self, text: str):
        self.s = text.replace(" ", "")
        self.i = 0

    def parse(self) -> Word:
        w = self.expr()
        if self.i != len(self.s):
            raise PathError(f"unexpected {self.s[self.i:]!r} in word {self.s!r}")
        return w

    def expr(self) -> Word:
        w = self.term()
        while self.peek() == "*" and self.i + 1 < len(self.s) and self.s[self.i + 1] not in ")],;":
            self.i += 1
            w = Tensor(w, self.term())
        return w

    def peek(self):
        return self.s[self.i] if self.i < len(self.s) else ""

    def term(self) -> Word:
        c = self.peek()
        if c == "I":
            self.i += 1
            return I
        if c == "*":
            self.i += 1
            return STAR
        if c == "[":
            self.i += 1
            w = self.expr()
            if self.peek() != "]":
                raise PathError(f"missing ']' in word {self.s!r}")
            self.i += 1
            return w
        if c == "(":
            end = _matching(self.s, self.i)
            inner = self.s[self.i + 1:end]
            self.i = end + 1
            parts = _split_args(inner)
            if len(parts) != 2:
                raise PathError(f"a leaf needs two components: ({inner})")
            try:
                return PairLeaf(parse_atom(parts[0]), parse_atom(parts[1]))
            except ValueError as exc:
                raise PathError(str(exc)) from None
        raise PathError(f"expected a word at {self.s[self.i:]!r}")


def _matching(s: str, i: int) -> int:
    depth = 0
    for j in range(i, len(s)):
        if s[j] in "([":
            depth += 1
        elif s[j] in ")]":
            depth -= 1
            if depth == 0:
                return j
    raise PathError(f"unbalanced brackets in {s!r}")


def parse_word(text: str) -> Word:
    return WordParser(text).parse()


def parse_edge(text: str, tp):
    """One edge; ``tp`` is the :class:`~smctensor.tenspres.TenSmc` for H2/H3 edges."""
    s = text.strip().replace(" ", "")
    if s[:2] in ("L[", "R["):
        end = _matching(s, 1)
        return Whisker(s[0], parse_word(s[2:end]), parse_edge(s[end + 1:], tp))
    m = re.fullmatch(r"([a-z_]+)(~?)\((.*)\)", s)
    if not m:
        raise PathError(f"cannot read edge {text!r}")
    name, inv, body = m.groups()
    args = _split_args(body)
    words = lambda: [parse_word(x) for x in args]
    atoms = lambda: [parse_atom(x) for x in args]

    def arity(k):
        if len(args) != k:
            raise PathError(f"{name} takes {k} arguments, got {len(args)}")

    if name == "assoc":
        arity(3)
        return (AssocInv if inv else Assoc)(*words())
    if name == "lunit":
        arity(1)
        return (LUnitInv if inv else LUnit)(*words())
    if name == "runit":
        arity(1)
        return (RUnitInv if inv else RUnit)(*words())
    if name == "sym":
        arity(2)
        x, y = words()
        return Sym(y, x) if inv else Sym(x, y)
    if inv:
        raise PathError(f"{name} has no inverse")
    if tp is None:
        raise PathError(f"{name} needs a tensor presentation")
    try:
        if name == "alpha":
            arity(1)
            return tp.alpha(*atoms())
        if name == "beta":
            arity(1)
            return tp.beta(*atoms())
        if name == "gamma":
            arity(3)
            return tp.gamma(*atoms())
        if name == "delta":
            arity(3)
            return tp.delta(*atoms())
        if name == "tens_l":
            arity(2)
            return tp.tens_l(*atoms())
        if name == "tens_r":
            arity(2)
            return tp.tens_r(*atoms())
    except (KeyError, ValueError) as exc:
        raise PathError(f"bad arguments in {text!r}: {exc}") from None
    raise PathError(f"unknown edge {name!r}")


def parse_path(text: str, tp=None) -> Path:
    """``e1;e2;...`` or ``id(X)``."""
    s = text.strip()
    m = re.fullmatch(r"id\((.*)\)", s.replace(" ", ""))
    if m:
        return Path(parse_word(m.group(1)), [])
    edges = [parse_edge(e, tp) for e in _split_path(s)]
    if not edges:
        raise PathError("empty path")
    return Path(edges[0].dom, edges)


def _split_path(s: str) -> list:
    out, depth, cur = [], 0, []
    for ch in s:
        if ch in "([":
            depth += 1
        elif ch in ")]":
            depth -= 1
        if ch == ";" and depth == 0:
            out.append("".join(cur))
            cur = []
        else:
            cur.append(ch)
    out.append("".join(cur))
    return [x for x in (y.strip() for y in out) if x]
