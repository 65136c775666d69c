import pytest

from smctensor.corpus import corpus, monoid_e, ord2, sline, terminal, z2, z3
from smctensor.fincat import discrete_category
from smctensor.homcat import enumerate_smc_functors
from smctensor.monoidal import identity_monoidal
from smctensor.quotient import (check_closed_structure, composition_report, connected_components, pi_functoriality_report,
                                pi_map, piquo_post_report, piquo_report, quotient_homset)
from smctensor.suite import hand_partitions


@pytest.mark.parametrize("label,cat,expected", hand_partitions())
def test_hand_partitions(label, cat, expected):
    assert connected_components(cat).classes == expected


def test_class_ids_follow_first_member():
    p = connected_components(discrete_category(["b", "a", "c"]))
    assert p.class_of == {"b": 0, "a": 1, "c": 2}
    assert p.same("a", "a") and not p.same("a", "b")


@pytest.mark.parametrize("a,b,classes", [
    ("z2", "z2", 2), ("monoid_e", "monoid_e", 2), ("ord2", "ord2", 1), ("z3", "z3", 3),
    ("sline", "sline", 4), ("terminal", "z3", 1),
])
def test_quotient_sizes(a, b, classes):
    assert len(quotient_homset(corpus()[a], corpus()[b])) == classes


@pytest.mark.parametrize("name", sorted(corpus()))
def test_into_terminal_has_one_class(name):
    assert len(quotient_homset(corpus()[name], terminal())) == 1


def test_classes_are_zigzag_closed():
    q = quotient_homset(z3(), z3())
    for t in q.hom.trans:
        assert q.class_of(t.source) == q.class_of(t.target)
    rep = q.representative(q.class_of(identity_monoidal(z3())))
    assert q.class_of(rep) == q.class_of(identity_monoidal(z3()))


def test_composition_on_classes():
    for a, b in ((z2(), sline()), (monoid_e(), monoid_e()), (ord2(), ord2())):
        assert composition_report(quotient_homset(a, a), quotient_homset(a, b), quotient_homset(a, b)) == []


@pytest.mark.parametrize("names", [("z2", "z3", "z2"), ("z3", "z3", "z3"), ("sline", "sline", "sline"),
                                   ("ord2", "ord2", "ord2")])
def test_pi_is_functorial(names):
    assert pi_functoriality_report(*(corpus()[n] for n in names)) == []


def test_pi_of_identity():
    assert pi_map(identity_monoidal(sline()), sline().base, sline().base) == {0: 0, 1: 1}


def test_pre_and_post_composition_respect_classes():
    x, y = sline(), sline()
    qxy = quotient_homset(x, y)
    for g in enumerate_smc_functors(z2(), x):
        assert piquo_report(g, qxy, quotient_homset(z2(), y)) == []
    for g in enumerate_smc_functors(y, z2()):
        assert piquo_post_report(g, qxy, quotient_homset(x, z2())) == []


def test_closed_structure_small():
    res = check_closed_structure([(z2(), terminal(), z2()), (monoid_e(), monoid_e(), monoid_e())])
    assert res.clean, res.violations[:3]
    assert res.checked["triples"] == 2
    assert res.checked["functors"] >= 2
