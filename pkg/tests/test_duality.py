import pytest

from smctensor.corpus import corpus, terminal, z2, z3
from smctensor.duality import (Duality, chardualq_report, dualize_functor, dualize_nattrans, evdual_report,
                               involution_report, unit_dual_report)
from smctensor.monoidal import identity_monoidal_nattrans, validate_monoidal_functor

TRIPLES = [("z2", "z2", "z2"), ("terminal", "z2", "z2"), ("z3", "z2", "z2"), ("z2", "terminal", "z3"),
           ("monoid_e", "terminal", "monoid_e"), ("z2", "sline", "sline")]


def duality(names):
    return Duality(*(corpus()[n] for n in names))


@pytest.mark.parametrize("names", TRIPLES)
def test_involution(names):
    assert involution_report(duality(names)) == []


@pytest.mark.parametrize("names", TRIPLES)
def test_dual_of_unit(names):
    assert unit_dual_report(*(corpus()[n] for n in names)) == []


@pytest.mark.parametrize("names", TRIPLES[:4])
def test_evaluation_commutes(names):
    assert evdual_report(duality(names)) == []


def test_characterisation_through_q():
    assert chardualq_report(duality(("z2", "z2", "z2"))) == []
    assert chardualq_report(duality(("z3", "z2", "z2"))) == []


def test_double_dual_is_field_by_field():
    d = duality(("z3", "z2", "z2"))
    for f in d.h_a_bc.functors:
        fs = dualize_functor(f, d.hbc, d.hac)
        assert validate_monoidal_functor(fs) == []
        back = dualize_functor(fs, d.hac, d.hbc)
        assert back.key() == f.key()


def test_dual_of_identity_transformation():
    d = duality(("z2", "z2", "z2"))
    for f in d.h_a_bc.functors:
        t = identity_monoidal_nattrans(f)
        ts = dualize_nattrans(t, d.hbc, d.hac)
        assert all(d.hac.smc.is_identity(c) for c in ts.under.components.values())


def test_forward_is_strict_and_valid():
    d = Duality(terminal(), z2(), z3())
    assert validate_monoidal_functor(d.forward()) == []
    assert validate_monoidal_functor(d.backward()) == []
