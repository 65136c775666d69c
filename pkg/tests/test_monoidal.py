import pytest

from smctensor.corpus import corpus, monoid_e, sline, terminal, z2, z3, z2xz3
from smctensor.fincat import CategoryError, FunctorData, NatTransData, laws
from smctensor.monoidal import (LAX, STRICT, STRONG, MonFunctor, MonNatTrans, check_f2_f0_monoidal,
                                compose_monoidal, constant_unit, identity_monoidal,
                                identity_monoidal_nattrans, make_smc, pairing, product_smc,
                                projections, structure_cells_report, ten_as_functor, validate_monoidal_functor,
                                validate_monoidal_nattrans, validate_smc)


def doubling():
    return MonFunctor(z3(), z3(), FunctorData({"*": "*"}, {n: 2 * n % 3 for n in range(3)}), 0,
                      {("*", "*"): 0})


@pytest.mark.parametrize("name", sorted(corpus()))
def test_corpus_members_are_smcs(name):
    assert validate_smc(corpus()[name]) == []


def test_noncommutative_tensor_is_caught():
    t = lambda x, y: 0 if (x, y) == (0, 1) else x ^ y
    s = make_smc(z2().base, t, t, 0)
    found = laws(validate_smc(s))
    assert "smcaxiom3" in found
    assert "sym-naturality" in found


def test_sline_symmetry_is_a_sign():
    s = sline()
    assert s.s(1, 1) == "0-"
    assert s.s(0, 1) == "1+"


def test_identity_and_doubling_are_strict():
    for f in (identity_monoidal(z2()), doubling()):
        assert f.kind == STRICT
        assert validate_monoidal_functor(f) == []
        assert check_f2_f0_monoidal(f) == []


def test_doubling_breaks_if_arrow_map_is_not_additive():
    bad = MonFunctor(z3(), z3(), FunctorData({"*": "*"}, {0: 0, 1: 2, 2: 2}), 0, {("*", "*"): 0})
    assert validate_monoidal_functor(bad)


def test_constant_unit_composite():
    f = constant_unit(z2(), z3())
    assert f.kind in (STRICT, STRONG)
    assert validate_monoidal_functor(f) == []
    assert check_f2_f0_monoidal(f) == []
    assert set(f.under.arr_map.values()) == {0}


def test_lax_classification():
    e = monoid_e()
    f = MonFunctor(e, e, FunctorData({"*": "*"}, {"1": "1", "e": "e"}), "e", {("*", "*"): "e"})
    assert f.kind == LAX


def test_identity_transformation():
    f = doubling()
    assert validate_monoidal_nattrans(identity_monoidal_nattrans(f)) == []


def test_idempotent_component_fails_unit_law():
    # e commutes with everything, so naturality and monat6 hold; F0 = 1 forces monat7
    e = monoid_e()
    ident = identity_monoidal(e)
    t = MonNatTrans(ident, ident, NatTransData({"*": "e"}))
    assert laws(validate_monoidal_nattrans(t)) == {"monat7"}


def test_compose_with_identity():
    f = doubling()
    assert compose_monoidal(identity_monoidal(z3()), f) == f
    assert compose_monoidal(f, identity_monoidal(z3())) == f
    g = compose_monoidal(f, f)
    assert g.kind == STRICT
    assert g.under.arr_map == {0: 0, 1: 1, 2: 2}


def test_compose_rejects_mismatch():
    with pytest.raises(CategoryError):
        compose_monoidal(doubling(), identity_monoidal(z2()))


def test_product_arithmetic():
    p = z2xz3()
    assert p.unit == (0, "*")
    assert p.tensor_arr((1, 2), (1, 1)) == (0, 0)
    assert validate_smc(p) == []
    one = product_smc(terminal(), terminal())
    assert len(one.base.objects) == len(one.base.arrows) == 1


def test_pairing_and_projection():
    s = z2()
    ident = identity_monoidal(s)
    diag = pairing(ident, ident)
    assert diag.kind == STRICT
    assert validate_monoidal_functor(diag) == []
    assert diag.on_obj(1) == (1, 1)
    p = product_smc(s, z3(), check_caps=False)
    first, _ = projections(p, s, z3())
    paired = pairing(ident, constant_unit(s, z3()), p)
    assert compose_monoidal(first, paired) == ident


@pytest.mark.parametrize("name", ["terminal", "z2", "sline"])
def test_tensor_functor(name):
    s = corpus()[name]
    ten = ten_as_functor(s)
    assert validate_monoidal_functor(ten) == []
    if name != "sline":
        assert ten.kind == STRICT


@pytest.mark.parametrize("name", ["terminal", "z2", "z3", "monoid_e", "sline"])
def test_structure_cells_are_monoidal(name):
    assert structure_cells_report(corpus()[name]) == []
