import pytest

from smctensor.corpus import corpus, monoid_e, sline, terminal, z2, z3
from smctensor.fincat import CapacityError, CategoryError
from smctensor.homcat import (box_functor, build_hom_smc, enumerate_monoidal_nattrans, enumerate_smc_functors,
                              ev_at, hom_map, hom_map_2cell, q_embed, unit_functor)
from smctensor.monoidal import (STRICT, check_f2_f0_monoidal, identity_monoidal, identity_monoidal_nattrans,
                                validate_monoidal_functor, validate_monoidal_nattrans, validate_smc)


def test_terminal_into_z2():
    fs = enumerate_smc_functors(terminal(), z2())
    assert len(fs) == 1
    assert fs[0].on_obj("*") == 0 and fs[0].kind == STRICT


def test_z2_endofunctors():
    fs = enumerate_smc_functors(z2(), z2())
    assert [dict(f.under.obj_map) for f in fs] == [{0: 0, 1: 0}, {0: 0, 1: 1}]
    assert all(f.kind == STRICT for f in fs)


@pytest.mark.parametrize("name", sorted(corpus()))
def test_into_terminal_is_unique(name):
    assert len(enumerate_smc_functors(corpus()[name], terminal())) == 1
    h = build_hom_smc(corpus()[name], terminal())
    assert len(h.smc.base.objects) == len(h.smc.base.arrows) == 1


def test_enumeration_is_deterministic_and_valid():
    one = enumerate_smc_functors(sline(), sline())
    two = enumerate_smc_functors(sline(), sline())
    assert [f.key() for f in one] == [f.key() for f in two]
    assert len({f.key() for f in one}) == len(one) == 8
    for f in one:
        assert validate_monoidal_functor(f) == []
        assert check_f2_f0_monoidal(f) == []


def test_cap_is_enforced():
    with pytest.raises(CapacityError):
        enumerate_smc_functors(z3(), z3(), cap=2)


def test_nattrans_counts():
    ident, const = enumerate_smc_functors(z2(), z2())[::-1]
    assert len(enumerate_monoidal_nattrans(ident, ident)) == 1
    assert enumerate_monoidal_nattrans(ident, const) == []
    e = identity_monoidal(monoid_e())
    ts = enumerate_monoidal_nattrans(e, e)
    assert [t.at("*") for t in ts] == ["1"]
    for t in ts:
        assert validate_monoidal_nattrans(t) == []


@pytest.mark.parametrize("a,b,objs,arrs", [
    ("terminal", "z2", 1, 1), ("z2", "z2", 2, 2), ("terminal", "z3", 3, 9),
    ("z3", "z3", 9, 27), ("monoid_e", "monoid_e", 2, 2), ("z2", "sline", 4, 16),
])
def test_hom_sizes(a, b, objs, arrs):
    h = build_hom_smc(corpus()[a], corpus()[b])
    assert (len(h.functors), len(h.trans)) == (objs, arrs)
    assert validate_smc(h.smc) == []


def test_z2_hom_structure():
    h = build_hom_smc(z2(), z2())
    assert h.smc.base.is_discrete()
    const = h.index_of(unit_functor(z2(), z2()))
    ident = h.index_of(identity_monoidal(z2()))
    assert h.smc.unit == const
    assert h.smc.tensor_obj(ident, ident) == const
    assert h.smc.tensor_obj(ident, const) == ident
    assert box_functor(h.functors[ident], h.functors[ident]).key() == h.functors[const].key()


def test_index_of_unknown_functor():
    h = build_hom_smc(z2(), z2())
    with pytest.raises(CategoryError):
        h.index_of(enumerate_smc_functors(z2(), sline())[-1])


def test_evaluation():
    h = build_hom_smc(terminal(), z2())
    ev = ev_at(h, "*")
    assert ev.on_obj(0) == 0
    h = build_hom_smc(z2(), z2())
    ev = ev_at(h, 1)
    assert ev.on_obj(h.index_of(identity_monoidal(z2()))) == 1
    assert validate_monoidal_functor(ev) == []


def test_q_embed():
    q, double = q_embed(z2(), z2())
    assert validate_monoidal_functor(q) == []
    assert len(set(q.under.obj_map.values())) == 2


@pytest.mark.parametrize("a,b", [("z2", "z2"), ("terminal", "z3"), ("sline", "sline")])
def test_hom_map_identity(a, b):
    sa, sb = corpus()[a], corpus()[b]
    h = build_hom_smc(sa, sb)
    m = hom_map(identity_monoidal(sa), identity_monoidal(sb), h, h)
    assert m.key() == identity_monoidal(h.smc).key()
    s, t = identity_monoidal_nattrans(identity_monoidal(sa)), identity_monoidal_nattrans(identity_monoidal(sb))
    cell = hom_map_2cell(s, t, h, h)
    assert all(h.smc.is_identity(c) for c in cell.under.components.values())


def test_hom_map_composes():
    a, b = z2(), sline()
    hab = build_hom_smc(a, b)
    fs, gs = enumerate_smc_functors(a, a), enumerate_smc_functors(b, b)
    for f in fs:
        for g in gs[:3]:
            m = hom_map(f, g, hab, hab)
            assert validate_monoidal_functor(m) == []
