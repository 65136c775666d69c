import pytest

from smctensor.adjoin import (agree_on_generators, check_universal, counit_epsilon, counit_report, eta,
                              en_extend, en_extend_2cell, generating_words, generator_paths, kelly_check,
                              naturality_report, post_compose, rn_restrict, sample_words, ten_map,
                              triangle_report)
from smctensor.corpus import corpus, monoid_e, sline, terminal, z2, z3
from smctensor.homcat import build_hom_smc, enumerate_smc_functors
from smctensor.monoidal import identity_monoidal, identity_monoidal_nattrans
from smctensor.tenspres import Equal, TenSmc, decide_equal
from smctensor.wordfunctor import WordFunctor
from smctensor.words import PairLeaf, Path, identity

TRIPLES = [("z2", "z2", "z2"), ("z3", "terminal", "z3"), ("monoid_e", "monoid_e", "monoid_e"),
           ("terminal", "z2", "z3"), ("z2", "z3", "z2xz3"), ("sline", "terminal", "sline")]


def setup(names):
    a, b, c = (corpus()[n] for n in names)
    hbc = build_hom_smc(b, c)
    tp = TenSmc(a, b)
    return a, hbc, tp, enumerate_smc_functors(a, hbc.smc)


def test_eta_generators():
    e = eta(z2(), z3())
    assert e.obj(1, "*") is PairLeaf(1, "*")
    tp = e.tp
    assert e.unit_cell(0) == Path.of(tp.beta(0))
    v = decide_equal(e.unit_cell(0), e.unit("*"), 1, tp=tp)
    assert isinstance(v, Equal)
    # eta of an identity is an identity up to the congruence
    one = e.arrow(0, "*")
    v = decide_equal(one, identity(one.dom), 2, tp=tp)
    assert isinstance(v, Equal)


def test_unit_functor_extension_is_trivial():
    a, hbc, tp, fs = setup(("z2", "z2", "z2"))
    unit = next(f for f in fs if all(i == hbc.smc.unit for i in f.under.obj_map.values()))
    bar = en_extend(unit, hbc, tp)
    for p in generator_paths(tp):
        assert hbc.target.is_identity(bar.path(p))


def test_z3_over_terminal_extensions_forget_arrows():
    # every functor Z3 -> [1, Z3] sends arrows to identities, so tens_l(n, *) |-> 0
    a, hbc, tp, fs = setup(("z3", "terminal", "z3"))
    assert len(fs) == 3
    for f in fs:
        bar = en_extend(f, hbc, tp)
        assert [bar.path(Path.of(tp.tens_l(n, "*"))) for n in range(3)] == [0, 0, 0]


@pytest.mark.parametrize("names", TRIPLES)
def test_restriction_inverts_extension(names):
    a, hbc, tp, fs = setup(names)
    for f in fs:
        assert rn_restrict(en_extend(f, hbc, tp), hbc, a).key() == f.key()


@pytest.mark.parametrize("names", TRIPLES)
def test_universal_property(names):
    a, hbc, tp, fs = setup(names)
    hac = build_hom_smc(a, corpus()[names[2]])
    for f in fs:
        assert check_universal(f, en_extend(f, hbc, tp), hbc, hac) == []


def test_mutated_extension_is_rejected():
    a, hbc, tp, fs = setup(("z2", "z2", "z2"))
    f = fs[-1]
    bar = en_extend(f, hbc, tp)
    bent = WordFunctor(tp, bar.target, lambda x: 0, lambda e: 0, name="bent")
    assert bar.obj(PairLeaf(1, 1)) == 1
    assert check_universal(f, bent, hbc)
    assert agree_on_generators(bar, bent, tp)


@pytest.mark.parametrize("names", TRIPLES)
def test_triangle_and_counit(names):
    a, hbc, tp, fs = setup(names)
    words = sample_words(tp, 2)
    paths = generator_paths(tp)
    for f in fs:
        bar = en_extend(f, hbc, tp)
        assert triangle_report(f, hbc, words) == []
        eps = counit_epsilon(bar)
        assert all(hbc.target.is_identity(eps(w)) for w in words)
        for h in enumerate_smc_functors(hbc.target, hbc.target):
            assert counit_report(post_compose(h, bar), hbc, words, paths, a) == []


def test_counit_of_strong_functor_is_invertible():
    a, hbc, tp, fs = setup(("sline", "terminal", "sline"))
    s = sline()
    for f in fs:
        bar = en_extend(f, hbc, tp)
        for h in enumerate_smc_functors(s, s):
            g = post_compose(h, bar)
            eps = counit_epsilon(g)
            assert all(s.base.is_iso(eps(w)) for w in sample_words(tp, 2))


@pytest.mark.parametrize("names", [("z2", "terminal", "z2"), ("monoid_e", "terminal", "monoid_e"),
                                   ("z2", "z2", "z2"), ("sline", "terminal", "sline")])
def test_kelly(names):
    assert kelly_check(*(corpus()[n] for n in names)) == []


def test_identity_2cell_extends_to_identities():
    a, hbc, tp, fs = setup(("z2", "z3", "z2xz3"))
    for f in fs:
        comp = en_extend_2cell(identity_monoidal_nattrans(f), hbc)
        assert all(hbc.target.is_identity(comp(w)) for w in generating_words(tp))
        assert naturality_report(comp, comp.source, comp.target, generator_paths(tp)) == []


def test_tensor_actions():
    tp = TenSmc(z2(), terminal())
    ident = ten_map("F(x)B", identity_monoidal(z2()), tp, tp)
    for p in generator_paths(tp):
        assert ident.path(p) == p
    const = enumerate_smc_functors(z2(), z2())[0]
    assert const.on_obj(1) == 0
    moved = ten_map("F(x)B", const, tp, tp)
    assert moved.obj(PairLeaf(1, "*")) is PairLeaf(0, "*")
    with pytest.raises(ValueError):
        ten_map("nonsense")


def test_monoid_e_hom_has_only_identities():
    hbc = build_hom_smc(monoid_e(), monoid_e())
    assert len(hbc.functors) == len(hbc.trans) == 2
    assert hbc.smc.base.is_discrete()
