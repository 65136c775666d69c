import pytest

from smctensor.corpus import corpus, sline, z2, z3
from smctensor.homcat import build_hom_smc, enumerate_smc_functors, unit_functor
from smctensor.monoidal import identity_monoidal, validate_monoidal_functor
from smctensor.unitfree import (counit_report, ev_star, ev_star_arrow, ev_vstar_report, post_compose,
                                star_words, strict_unit_functor, unit_counit, unit_smc, v_arrow, v_functor,
                                v_monfunctor, v_star)
from smctensor.words import STAR, PairLeaf, PathError, Sym, Tensor, I, Path, canonical_path, identity

SS = Tensor(STAR, STAR)


def sample_paths():
    out = [Path.of(Sym(STAR, STAR))]
    for w in star_words(3):
        for v in star_words(3):
            if w.size == v.size and w is not v:
                out.append(canonical_path(w, v))
    return out


def test_free_smc_hom_sets():
    u = unit_smc()
    assert u.same(Path.of(Sym(STAR, STAR), Sym(STAR, STAR)), identity(SS))
    assert not u.same(Path.of(Sym(STAR, STAR)), identity(SS))
    assert len(u.hom(SS, SS)) == 2
    assert u.hom(STAR, SS) == []
    with pytest.raises(PathError):
        u.hom(PairLeaf(0, 0), STAR)


def test_v_on_generators():
    a = z2()
    haa = build_hom_smc(a, a)
    v = v_functor(a, haa)
    assert v.star == haa.index_of(identity_monoidal(a))
    assert v.obj(I) == haa.smc.unit
    assert v.obj(SS) == haa.smc.tensor_obj(v.star, v.star)
    assert haa.functors[v.obj(SS)].key() == haa.functors[haa.smc.unit].key()


@pytest.mark.parametrize("name", ["z2", "z3", "monoid_e", "sline"])
def test_v_values_are_strong_and_valid(name):
    a = corpus()[name]
    for x in star_words(1) + star_words(2) + star_words(3):
        f = v_monfunctor(a, x)
        assert validate_monoidal_functor(f) == []
        assert f.kind != "lax"
    assert v_monfunctor(a, I).key() == unit_functor(a, a).key()
    doubled = v_monfunctor(a, SS)
    assert all(doubled.on_obj(y) == a.tensor_obj(y, y) for y in a.base.objects)


def test_v_on_arrows():
    a = sline()
    haa = build_hom_smc(a, a)
    j = v_arrow(a, haa, Path.of(Sym(STAR, STAR)))
    # the swap on * (x) * evaluated at the odd object is the sign
    assert haa.trans[j].at(1) == "0-"
    assert haa.trans[j].at(0) == "0+"


def test_v_star_and_evaluation():
    a = z3()
    vs = v_star(a)
    assert vs.at("*").obj(STAR) == "*"
    assert vs.at("*").obj(SS) == "*"
    assert all(vs.on_arr(f, STAR) == f for f in a.base.arrows)
    assert ev_star(vs.at("*")) == "*"
    assert ev_star_arrow(lambda x: a.id("*")) == 0
    for name in ("terminal", "z2", "z3", "monoid_e", "sline", "z2xz3"):
        assert ev_vstar_report(corpus()[name]) == []


@pytest.mark.parametrize("name", ["z2", "z3", "sline"])
def test_counit_of_v_star_is_identity(name):
    a = corpus()[name]
    vs = v_star(a)
    words = star_words(1) + star_words(2) + star_words(3)
    for y in a.base.objects:
        f = strict_unit_functor(vs.at(y))
        eps = unit_counit(f)
        assert all(a.is_identity(eps(w)) for w in words)
        assert counit_report(f, words, sample_paths()) == []
        assert a.is_identity(ev_star_arrow(eps))


@pytest.mark.parametrize("name", ["z2", "monoid_e", "sline"])
def test_counit_of_composites_is_invertible(name):
    a = corpus()[name]
    vs = v_star(a)
    words = star_words(2) + star_words(3)
    for h in enumerate_smc_functors(a, a):
        for y in a.base.objects:
            f = post_compose(h, vs.at(y))
            eps = unit_counit(f)
            assert counit_report(f, words, sample_paths()) == []
            if h.kind != "lax":
                assert all(a.base.is_iso(eps(w)) for w in words)
