"""Words, generator edges and paths shared by every presented category.

All nodes are hash-consed: constructing the same node twice returns the
same Python object, so equality is identity and hashing is cheap.  That
matters because the rewriting search hashes millions of paths.

Edges go from ``dom`` to ``cod``.  Paths list edges in the order they are
traversed (first edge first).
"""

from __future__ import annotations

from typing import Iterable, Sequence

_TABLE: dict = {}


class Node:
    __slots__ = ("_key", "__weakref__")

    def __new__(cls, *args):
        key = (cls, *args)
        node = _TABLE.get(key)
        if node is None:
            node = object.__new__(cls)
            node._key = key
            node._setup(*args)
            _TABLE[key] = node
        return node

    def _setup(self, *args):
        pass

    def __reduce__(self):
        return (type(self), self._key[1:])

    def __copy__(self):
        return self

    def __deepcopy__(self, memo):
        return self


# ---------------------------------------------------------------- objects

class Word(Node):
    __slots__ = ("size", "leaves")

    def __mul__(self, other):
        return Tensor(self, other)


class UnitLeaf(Word):
    __slots__ = ()

    def _setup(self):
        self.size = 0
        self.leaves = ()

    def __repr__(self):
        return "I"


class PairLeaf(Word):
    """The leaf ``(a, b)``; ``a`` and ``b`` are objects of the two factors."""
    __slots__ = ("a", "b")

    def _setup(self, a, b):
        self.a, self.b = a, b
        self.size = 1
        self.leaves = (self,)

    def __repr__(self):
        return f"({self.a!r},{self.b!r})"


class StarLeaf(Word):
    __slots__ = ()

    def _setup(self):
        self.size = 1
        self.leaves = (self,)

    def __repr__(self):
        return "*"


class Tensor(Word):
    __slots__ = ("left", "right")

    def _setup(self, left, right):
        self.left, self.right = left, right
        self.size = left.size + right.size
        self.leaves = left.leaves + right.leaves

    def __repr__(self):
        return f"[{self.left!r}*{self.right!r}]"


I = UnitLeaf()
STAR = StarLeaf()


def is_leaf(x: Word) -> bool:
    return isinstance(x, (PairLeaf, StarLeaf))


def subterms(x: Word, ctx: tuple = ()) -> list:
    """Every ``(context, subword)`` of ``x``, outermost first.

    A context is a tuple of ``(side, other)`` frames read from the outside
    in: ``("L", X)`` means the hole sits to the right of ``X``.
    """
    out = [(ctx, x)]
    if isinstance(x, Tensor):
        out += subterms(x.left, ctx + (("R", x.right),))
        out += subterms(x.right, ctx + (("L", x.left),))
    return out


def plug(ctx: tuple, x: Word) -> Word:
    for side, other in reversed(ctx):
        x = Tensor(other, x) if side == "L" else Tensor(x, other)
    return x


def substitute(x: Word, leaf_map) -> Word:
    """Replace every leaf by ``leaf_map(leaf)``; ``I`` stays ``I``."""
    if isinstance(x, Tensor):
        return Tensor(substitute(x.left, leaf_map), substitute(x.right, leaf_map))
    if x is I:
        return I
    return leaf_map(x)


# ---------------------------------------------------------------- edges

class Edge(Node):
    __slots__ = ("dom", "cod")
    kind = ""


class Assoc(Edge):
    """``x(yz) -> (xy)z``."""
    __slots__ = ("x", "y", "z")
    kind = "H1"

    def _setup(self, x, y, z):
        self.x, self.y, self.z = x, y, z
        self.dom = Tensor(x, Tensor(y, z))
        self.cod = Tensor(Tensor(x, y), z)

    def __repr__(self):
        return f"assoc({self.x!r},{self.y!r},{self.z!r})"


class AssocInv(Edge):
    __slots__ = ("x", "y", "z")
    kind = "H1"

    def _setup(self, x, y, z):
        self.x, self.y, self.z = x, y, z
        self.dom = Tensor(Tensor(x, y), z)
        self.cod = Tensor(x, Tensor(y, z))

    def __repr__(self):
        return f"assoc~({self.x!r},{self.y!r},{self.z!r})"


class LUnit(Edge):
    """``I x -> x``."""
    __slots__ = ("x",)
    kind = "H1"

    def _setup(self, x):
        self.x = x
        self.dom, self.cod = Tensor(I, x), x

    def __repr__(self):
        return f"lunit({self.x!r})"


class LUnitInv(Edge):
    __slots__ = ("x",)
    kind = "H1"

    def _setup(self, x):
        self.x = x
        self.dom, self.cod = x, Tensor(I, x)

    def __repr__(self):
        return f"lunit~({self.x!r})"


class RUnit(Edge):
    """``x I -> x``."""
    __slots__ = ("x",)
    kind = "H1"

    def _setup(self, x):
        self.x = x
        self.dom, self.cod = Tensor(x, I), x

    def __repr__(self):
        return f"runit({self.x!r})"


class RUnitInv(Edge):
    __slots__ = ("x",)
    kind = "H1"

    def _setup(self, x):
        self.x = x
        self.dom, self.cod = x, Tensor(x, I)

    def __repr__(self):
        return f"runit~({self.x!r})"


class Sym(Edge):
    """``xy -> yx``."""
    __slots__ = ("x", "y")
    kind = "H1"

    def _setup(self, x, y):
        self.x, self.y = x, y
        self.dom, self.cod = Tensor(x, y), Tensor(y, x)

    def __repr__(self):
        return f"sym({self.x!r},{self.y!r})"


class Alpha(Edge):
    """``I -> (I_A, b)``; ``unit_a`` is the unit of the first factor."""
    __slots__ = ("b", "unit_a")
    kind = "H2"

    def _setup(self, b, unit_a):
        self.b, self.unit_a = b, unit_a
        self.dom, self.cod = I, PairLeaf(unit_a, b)

    def __repr__(self):
        return f"alpha({self.b!r})"


class Beta(Edge):
    """``I -> (a, I_B)``."""
    __slots__ = ("a", "unit_b")
    kind = "H2"

    def _setup(self, a, unit_b):
        self.a, self.unit_b = a, unit_b
        self.dom, self.cod = I, PairLeaf(a, unit_b)

    def __repr__(self):
        return f"beta({self.a!r})"


class Gamma(Edge):
    """``(a,b)(a2,b) -> (a a2, b)``; ``aa`` is the tensor ``a a2`` in A."""
    __slots__ = ("a", "a2", "b", "aa")
    kind = "H2"

    def _setup(self, a, a2, b, aa):
        self.a, self.a2, self.b, self.aa = a, a2, b, aa
        self.dom = Tensor(PairLeaf(a, b), PairLeaf(a2, b))
        self.cod = PairLeaf(aa, b)

    def __repr__(self):
        return f"gamma({self.a!r},{self.a2!r},{self.b!r})"


class Delta(Edge):
    """``(a,b)(a,b2) -> (a, b b2)``."""
    __slots__ = ("a", "b", "b2", "bb")
    kind = "H2"

    def _setup(self, a, b, b2, bb):
        self.a, self.b, self.b2, self.bb = a, b, b2, bb
        self.dom = Tensor(PairLeaf(a, b), PairLeaf(a, b2))
        self.cod = PairLeaf(a, bb)

    def __repr__(self):
        return f"delta({self.a!r},{self.b!r},{self.b2!r})"


class ArrTensObj(Edge):
    """``f (x) b: (a, b) -> (a', b)`` for ``f: a -> a'`` in the first factor."""
    __slots__ = ("f", "b", "fdom", "fcod")
    kind = "H3"

    def _setup(self, f, b, fdom, fcod):
        self.f, self.b, self.fdom, self.fcod = f, b, fdom, fcod
        self.dom, self.cod = PairLeaf(fdom, b), PairLeaf(fcod, b)

    def __repr__(self):
        return f"tens_l({self.f!r},{self.b!r})"


class ObjTensArr(Edge):
    """``a (x) g: (a, b) -> (a, b')`` for ``g: b -> b'`` in the second factor."""
    __slots__ = ("a", "g", "gdom", "gcod")
    kind = "H3"

    def _setup(self, a, g, gdom, gcod):
        self.a, self.g, self.gdom, self.gcod = a, g, gdom, gcod
        self.dom, self.cod = PairLeaf(a, gdom), PairLeaf(a, gcod)

    def __repr__(self):
        return f"tens_r({self.a!r},{self.g!r})"


class Whisker(Edge):
    """``L``: ``X (x) e``; ``R``: ``e (x) X``."""
    __slots__ = ("side", "x", "inner")

    def _setup(self, side, x, inner):
        self.side, self.x, self.inner = side, x, inner
        if side == "L":
            self.dom, self.cod = Tensor(x, inner.dom), Tensor(x, inner.cod)
        elif side == "R":
            self.dom, self.cod = Tensor(inner.dom, x), Tensor(inner.cod, x)
        else:
            raise ValueError(f"whisker side must be 'L' or 'R', not {side!r}")

    @property
    def kind(self):
        return self.inner.kind

    def __repr__(self):
        return f"{self.side}[{self.x!r}]{self.inner!r}"


H1_TYPES = (Assoc, AssocInv, LUnit, LUnitInv, RUnit, RUnitInv, Sym)
H2_TYPES = (Alpha, Beta, Gamma, Delta)
H3_TYPES = (ArrTensObj, ObjTensArr)


def L(x: Word, e: Edge) -> Whisker:
    return Whisker("L", x, e)


def R(x: Word, e: Edge) -> Whisker:
    return Whisker("R", x, e)


def wrap(ctx: tuple, e: Edge) -> Edge:
    """Whisker ``e`` by a context of frames, outermost first."""
    for side, other in reversed(ctx):
        e = Whisker(side, other, e)
    return e


def core(e: Edge) -> Edge:
    while isinstance(e, Whisker):
        e = e.inner
    return e


def is_canonical(e: Edge) -> bool:
    return isinstance(core(e), H1_TYPES)


def inverse_edge(e: Edge) -> Edge:
    """Inverse of a canonical edge (whiskers included)."""
    if isinstance(e, Whisker):
        return Whisker(e.side, e.x, inverse_edge(e.inner))
    if isinstance(e, Assoc):
        return AssocInv(e.x, e.y, e.z)
    if isinstance(e, AssocInv):
        return Assoc(e.x, e.y, e.z)
    if isinstance(e, LUnit):
        return LUnitInv(e.x)
    if isinstance(e, LUnitInv):
        return LUnit(e.x)
    if isinstance(e, RUnit):
        return RUnitInv(e.x)
    if isinstance(e, RUnitInv):
        return RUnit(e.x)
    if isinstance(e, Sym):
        return Sym(e.y, e.x)
    raise TypeError(f"{e!r} is not a canonical edge")


# ---------------------------------------------------------------- paths

class PathError(ValueError):
    """Edges that do not chain, or parallel paths with different endpoints."""


class Path:
    """A composable edge sequence; the empty sequence is the identity at ``dom``."""
    __slots__ = ("dom", "cod", "edges", "_hash")

    def __init__(self, dom: Word, edges: Iterable[Edge] = (), check: bool = True):
        edges = tuple(edges)
        if check:
            cur = dom
            for e in edges:
                if e.dom is not cur:
                    raise PathError(f"edge {e!r} does not start at {cur!r}")
                cur = e.cod
        self.dom = dom
        self.edges = edges
        self.cod = edges[-1].cod if edges else dom
        self._hash = hash((dom, edges))

    @classmethod
    def of(cls, *edges: Edge) -> "Path":
        if not edges:
            raise PathError("use Path(dom) for an identity")
        return cls(edges[0].dom, edges)

    def __hash__(self):
        return self._hash

    def __eq__(self, other):
        return (isinstance(other, Path) and self._hash == other._hash
                and self.dom is other.dom and self.edges == other.edges)

    def __len__(self):
        return len(self.edges)

    def __iter__(self):
        return iter(self.edges)

    def __repr__(self):
        if not self.edges:
            return f"id({self.dom!r})"
        return "; ".join(map(repr, self.edges))

    def then(self, other: "Path") -> "Path":
        if other.dom is not self.cod:
            raise PathError(f"cannot follow a path ending at {self.cod!r} by one starting at {other.dom!r}")
        return Path(self.dom, self.edges + other.edges, check=False)

    def is_identity(self) -> bool:
        return not self.edges


def identity(x: Word) -> Path:
    return Path(x, (), check=False)


def concat(*paths: Path) -> Path:
    out = paths[0]
    for p in paths[1:]:
        out = out.then(p)
    return out


def whisker_path(side: str, x: Word, p: Path) -> Path:
    dom = Tensor(x, p.dom) if side == "L" else Tensor(p.dom, x)
    return Path(dom, tuple(Whisker(side, x, e) for e in p.edges), check=False)


def tensor_paths(p: Path, q: Path) -> Path:
    """``p (x) q`` as ``(p (x) cod q) . (dom p (x) q)``."""
    first = whisker_path("L", p.dom, q)
    second = whisker_path("R", q.cod, p)
    return Path(Tensor(p.dom, q.dom), first.edges + second.edges, check=False)


def inverse_path(p: Path) -> Path:
    return Path(p.cod, tuple(inverse_edge(e) for e in reversed(p.edges)), check=False)


# ---------------------------------------------------------------- coherence

def edge_permutation(e: Edge) -> tuple:
    """For a canonical edge, ``perm[i]`` = index in ``dom.leaves`` of the
    leaf that ends up at position ``i`` of ``cod.leaves``."""
    if isinstance(e, Whisker):
        inner = edge_permutation(e.inner)
        n = e.x.size
        if e.side == "L":
            return tuple(range(n)) + tuple(n + i for i in inner)
        return inner + tuple(len(inner) + i for i in range(n))
    if isinstance(e, Sym):
        nx, ny = e.x.size, e.y.size
        return tuple(nx + i for i in range(ny)) + tuple(range(nx))
    if isinstance(e, H1_TYPES):
        return tuple(range(e.dom.size))
    raise CoherenceError(f"{e!r} is not a canonical edge")


class CoherenceError(TypeError):
    """A non-canonical edge reached the coherence decision procedure."""


def path_permutation(p: Path) -> tuple:
    perm = tuple(range(p.dom.size))
    for e in p.edges:
        step = edge_permutation(e)
        perm = tuple(perm[j] for j in step)
    return perm


def canonical_decide(p: Path, q: Path) -> bool:
    """Equality of parallel canonical paths: compare leaf permutations."""
    if p.dom is not q.dom or p.cod is not q.cod:
        raise PathError("canonical_decide needs parallel paths")
    for e in p.edges + q.edges:
        if not is_canonical(e):
            raise CoherenceError(f"{e!r} is not a canonical edge")
    return path_permutation(p) == path_permutation(q)


def _normalize(x: Word) -> tuple:
    """Path from ``x`` to its unit-free right-nested form, and that form."""
    if not isinstance(x, Tensor):
        return identity(x), x
    px, nx = _normalize(x.left)
    py, ny = _normalize(x.right)
    path = concat(whisker_path("R", x.right, px), whisker_path("L", nx, py))
    if nx is I:
        return path.then(Path(path.cod, (LUnit(ny),), check=False)), ny
    if ny is I:
        return path.then(Path(path.cod, (RUnit(nx),), check=False)), nx
    merge, nf = _merge(nx, ny)
    return path.then(merge), nf


def _merge(nx: Word, ny: Word) -> tuple:
    """``nx ny`` with both right-nested and unit-free, to right-nested form."""
    if not isinstance(nx, Tensor):
        return identity(Tensor(nx, ny)), Tensor(nx, ny)
    head, rest = nx.left, nx.right
    step = Path(Tensor(nx, ny), (AssocInv(head, rest, ny),), check=False)
    inner, nf = _merge(rest, ny)
    return step.then(whisker_path("L", head, inner)), Tensor(head, nf)


def normal_form(x: Word) -> Word:
    return _normalize(x)[1]


def normalizing_path(x: Word) -> Path:
    return _normalize(x)[0]


def _right_nest(leaves: Sequence[Word]) -> Word:
    if not leaves:
        return I
    out = leaves[-1]
    for leaf in reversed(leaves[:-1]):
        out = Tensor(leaf, out)
    return out


def _adjacent_swap(leaves: Sequence[Word], i: int) -> Path:
    """Swap positions ``i, i+1`` of a right-nested unit-free word."""
    n = len(leaves)
    x, y = leaves[i], leaves[i + 1]
    if i + 2 == n:
        e = Path(Tensor(x, y), (Sym(x, y),), check=False)
    else:
        rest = _right_nest(leaves[i + 2:])
        e = Path(Tensor(x, Tensor(y, rest)),
                 (Assoc(x, y, rest), R(rest, Sym(x, y)), AssocInv(y, x, rest)), check=False)
    for j in range(i - 1, -1, -1):
        e = whisker_path("L", leaves[j], e)
    return e


def canonical_path(dom: Word, cod: Word, perm: Sequence[int] | None = None) -> Path:
    """The deterministic canonical path ``dom -> cod`` realizing ``perm``.

    ``perm[i]`` is the index in ``dom.leaves`` of the leaf placed at
    position ``i`` of ``cod.leaves``.  When omitted, the leaves are matched
    stably by equality.
    """
    if perm is None:
        perm = match_leaves(dom, cod)
    perm = list(perm)
    if sorted(perm) != list(range(dom.size)) or len(perm) != cod.size:
        raise PathError("not a permutation of the leaves")
    for i, j in enumerate(perm):
        if cod.leaves[i] is not dom.leaves[j]:
            raise PathError("permutation does not match the leaves")
    down = normalizing_path(dom)
    up = inverse_path(normalizing_path(cod))
    # bubble sort the current order into perm
    order = list(range(dom.size))
    leaves = list(dom.leaves)
    middle = identity(down.cod)
    target = perm
    for k in range(len(target)):
        pos = order.index(target[k])
        for i in range(pos - 1, k - 1, -1):
            middle = middle.then(_adjacent_swap(leaves, i))
            order[i], order[i + 1] = order[i + 1], order[i]
            leaves[i], leaves[i + 1] = leaves[i + 1], leaves[i]
    return _cancel_inverse_pairs(concat(down, middle, up))


def _cancel_inverse_pairs(p: Path) -> Path:
    out = []
    for e in p.edges:
        if out and inverse_edge(out[-1]) is e:
            out.pop()
        else:
            out.append(e)
    return Path(p.dom, out, check=False)


def match_leaves(dom: Word, cod: Word) -> list:
    """Stable matching of equal leaves; raises if the multisets differ."""
    used = [False] * dom.size
    perm = []
    for leaf in cod.leaves:
        for j, other in enumerate(dom.leaves):
            if not used[j] and other is leaf:
                used[j] = True
                perm.append(j)
                break
        else:
            raise PathError(f"leaf {leaf!r} of the codomain has no partner")
    if not all(used):
        raise PathError("the domain has unmatched leaves")
    return perm


def middle_four_path(w: Word, x: Word, y: Word, z: Word) -> Path:
    """``(wx)(yz) -> (wy)(xz)`` in five canonical steps."""
    return Path(Tensor(Tensor(w, x), Tensor(y, z)), (
        AssocInv(w, x, Tensor(y, z)),
        L(w, Assoc(x, y, z)),
        L(w, R(z, Sym(x, y))),
        L(w, AssocInv(y, x, z)),
        Assoc(w, y, Tensor(x, z)),
    ))
