import pytest

from smctensor.adjoin import extension
from smctensor.corpus import sline, terminal, z2, z3, z2xz3
from smctensor.presentation import parse_path, parse_word
from smctensor.suite import all_extensions, unit_collapse_waypoints, witness_holds
from smctensor.tenspres import (RELATIONS, Distinct, Equal, TenSmc, Unknown, decide_chain, decide_equal,
                                enumerate_instances, neighbors, normalize, replay)
from smctensor.words import (Assoc, CoherenceError, PairLeaf, Path, PathError, Sym, Tensor, canonical_decide,
                             identity, tensor_paths)


def path(text, tp):
    return parse_path(text, tp)


@pytest.fixture(scope="module")
def z2z3():
    return TenSmc(z2(), z3())


def test_unit_generators_agree_at_budget_one(z2z3):
    v = decide_equal(path("beta(0)", z2z3), path("alpha(*)", z2z3), 1, tp=z2z3)
    assert isinstance(v, Equal)
    assert [s.rule for s in v.witness.steps] == ["alpha-beta-unit"]
    assert replay(v.witness, z2z3)


def test_budget_zero():
    tp = TenSmc(z2(), z3())
    p = path("beta(0)", tp)
    assert isinstance(decide_equal(p, p, 0, tp=tp), Equal)
    assert isinstance(decide_equal(p, path("alpha(*)", tp), 0, tp=tp), Unknown)


def test_nonparallel_paths_are_rejected(z2z3):
    with pytest.raises(PathError):
        decide_equal(path("beta(0)", z2z3), path("id((1,*))", z2z3), 4, tp=z2z3)


def test_symmetry_pair_neighbors_identity(z2z3):
    p = path("sym((0,*),(1,*)); sym((1,*),(0,*))", z2z3)
    assert identity(p.dom) in neighbors(p, z2z3)


def test_gamma_sym_square():
    tp = TenSmc(sline(), terminal())
    p = path("sym((1,*),(1,*)); gamma(1,1,*)", tp)
    target = path("gamma(1,1,*); tens_l('0-',*)", tp)
    steps = {s.target: s.rule for s in neighbors(p, tp, with_steps=True)}
    assert steps[target] == "gamma-sym"


def test_interchange_of_whiskered_arrows():
    tp = TenSmc(z3(), z3())
    f = Path.of(tp.tens_l(1, "*"))
    g = Path.of(tp.tens_r("*", 2))
    one = tensor_paths(f, identity(g.dom)).then(tensor_paths(identity(f.cod), g))
    two = tensor_paths(identity(f.dom), g).then(tensor_paths(f, identity(g.cod)))
    v = decide_equal(one, two, 4, tp=tp)
    assert isinstance(v, Equal) and replay(v.witness, tp)


def test_canonical_decide():
    x, y, z = (PairLeaf(i, "*") for i in range(3))
    assert canonical_decide(Path.of(Sym(x, y), Sym(y, x)), identity(Tensor(x, y)))
    assert not canonical_decide(Path.of(Sym(x, x)), identity(Tensor(x, x)))
    # the two legs of a hexagon, x(yz) to (zx)y
    left = Path.of(Assoc(x, y, z), Sym(Tensor(x, y), z), Assoc(z, x, y))
    right = parse_path("L[(0,'*')]sym((1,'*'),(2,'*')); assoc((0,'*'),(2,'*'),(1,'*')); "
                       "R[(1,'*')]sym((0,'*'),(2,'*'))")
    assert left.dom is right.dom and left.cod is right.cod
    assert canonical_decide(left, right)
    with pytest.raises(CoherenceError):
        tp = TenSmc(z3(), terminal())
        p = path("tens_l(1,*)", tp)
        canonical_decide(p, p)


def test_hand_made_extension_separates_a_transposition():
    # on canonical arrows, leaves to the odd object of sline: s_{1,1} = -1
    tp = TenSmc(sline(), terminal())
    s = sline()
    odd = extension(tp, s, leaf=lambda a, b: 1, alpha=None, beta=None, gamma=None, delta=None,
                    tens_l=None, tens_r=None, name="odd")
    x = PairLeaf(1, "*")
    v = decide_equal(Path.of(Sym(x, x)), identity(Tensor(x, x)), 64, [odd], tp)
    assert isinstance(v, Distinct)
    assert (v.name, v.left, v.right) == ("odd", "0-", "0+")


def test_corpus_extensions_do_not_separate_z3_unit_collapse():
    tp, exts = all_extensions(z3(), terminal(), z3())
    assert len(exts) == 3
    p, q = path("tens_l(1,*)", tp), path("tens_l(2,*)", tp)
    assert all(e.target.same(e.path(p), e.path(q)) for e in exts)


def test_z3_unit_collapse_through_waypoints():
    tp, exts = all_extensions(z3(), terminal(), z3())
    for f in (1, 2):
        chain = unit_collapse_waypoints(tp, f)
        v = decide_chain(chain, 8, exts, tp)
        assert isinstance(v, Equal)
        assert replay(v.witness, tp) and witness_holds(v.witness, exts)


def test_normalize_is_sound(z2z3):
    p = path("sym((0,*),(1,*)); sym((1,*),(0,*)); R[(1,*)]tens_r(0,1); R[(1,*)]tens_r(0,2)", z2z3)
    q, steps = normalize(p, z2z3)
    assert len(q.edges) < len(p.edges)
    v = decide_equal(p, q, 64, tp=z2z3, normalize_first=True)
    assert isinstance(v, Equal) and replay(v.witness, z2z3)


def test_every_relation_family_has_instances():
    tp = TenSmc(z2(), z3())
    found = {rel for rel, _, _ in enumerate_instances(tp, 4)}
    assert found >= set(RELATIONS) - {"gamma-interchange", "delta-interchange"}


def test_instances_hold_under_extensions():
    tp, exts = all_extensions(z2(), z3(), z2xz3())
    for rel, lhs, rhs in enumerate_instances(tp, 3):
        for e in exts:
            assert e.target.same(e.path(lhs), e.path(rhs)), rel


def test_parse_word_shapes():
    w = parse_word("(0,*)*I*(1,*)")
    assert w is Tensor(Tensor(PairLeaf(0, "*"), parse_word("I")), PairLeaf(1, "*"))
