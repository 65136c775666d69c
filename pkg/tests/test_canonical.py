import pytest

from smctensor.canonical import (DIAGRAMS, build_canonical, build_s, check_diagram, compare_strict, default_grid,
                                 lax_inverse, t_composite, t_composites_agree, tensor, two_naturality,
                                 validate_cell)
from smctensor.corpus import corpus, sline, terminal, z2, z3
from smctensor.homcat import enumerate_smc_functors
from smctensor.words import I, PairLeaf, Path


def c(*names):
    return tuple(corpus()[n] for n in names)


def test_s_swaps_pair_leaves():
    s = build_s(z2(), z3())
    assert s.obj(PairLeaf(1, "*")) is PairLeaf("*", 1)


@pytest.mark.parametrize("cats", [("z2", "sline"), ("z3", "z2"), ("sline", "terminal")])
def test_s_unfolds_generators_to_short_paths(cats):
    f = build_canonical("S", *c(*cats))
    for e in default_grid(f.source, 2).edges:
        assert len(f.path(Path.of(e)).edges) <= 2


def test_build_canonical_rejects_bad_arity():
    with pytest.raises(ValueError):
        build_canonical("S", z2())
    with pytest.raises(ValueError):
        build_canonical("Q", z2())
    with pytest.raises(ValueError):
        check_diagram("nonsense", (z2(),))


def test_s_twice_is_identity_on_z2_square():
    res = check_diagram("waxiom3", c("z2", "z2"))
    assert res and all(r.ok for r in res)
    words = {r.sample for r in res}
    assert any(w.size == 3 for w in words if hasattr(w, "size"))


def test_pentagon_on_two_leaf_samples():
    res = check_diagram("waxiom12", c("z2", "z2", "terminal", "terminal"))
    assert res and all(r.ok for r in res)


@pytest.mark.parametrize("name", ["z2", "z3", "monoid_e", "sline"])
def test_r_after_r_prime_is_literally_identity(name):
    for diagram in ("Rinverse", "ev-vstar"):
        res = check_diagram(diagram, c(name), literal=True)
        assert res and all(r.ok for r in res)


@pytest.mark.parametrize("diagram,cats", [("SRpLp", ("sline",)), ("waxiom5", ("z2",)),
                                          ("waxiom22", ("z3", "z2")), ("waxiom42", ("z2", "terminal", "z2")),
                                          ("waxiom4", ("z2", "z3", "z2")), ("AandAprel", ("z2", "terminal", "z2"))])
def test_lemma_diagrams(diagram, cats):
    assert diagram in DIAGRAMS
    res = check_diagram(diagram, c(*cats))
    assert res and all(r.ok for r in res), [str(r.verdict) for r in res if not r.ok][:3]


def test_broken_leg_is_reported():
    s = build_s(z2(), z2())
    grid = default_grid(tensor(z2(), z2()), 2)
    res = compare_strict("S vs SS", s, s.then(s), grid, 8)
    assert any(not r.ok for r in res)


@pytest.mark.parametrize("kind,cats", [("AA'->1", ("z2", "terminal", "terminal")),
                                       ("A'A->1", ("z2", "z3", "z2")), ("unit-R", ("sline",))])
def test_lax_inverse_cells(kind, cats):
    cells, grid = lax_inverse(kind, *c(*cats))
    for cell in cells:
        assert validate_cell(cell, grid) == []


def test_aa_prime_components_are_identities_away_from_unit_leaves():
    cells, grid = lax_inverse("AA'->1", *c("z2", "terminal", "terminal"))
    for w in grid.words:
        if any(leaf.a is I for leaf in w.leaves if isinstance(leaf, PairLeaf)):
            continue
        assert cells[0].component(w).is_identity()


def test_delta_of_identity():
    tp = tensor(z2(), z3())
    cells, grid = lax_inverse("delta-id", tp)
    assert all(cells[0].component(w).is_identity() for w in grid.words)
    assert validate_cell(cells[0], grid) == []


def test_t_both_ways():
    assert t_composites_agree(z2(), z3(), z2()) == []
    t = t_composite(z2(), terminal(), z3())
    w = tensor(tensor(z2(), terminal()), z3())
    x = PairLeaf(PairLeaf(1, "*"), 0)
    assert t.obj(x) is PairLeaf(0, PairLeaf("*", 1))
    assert w.sa.sa is z2()


@pytest.mark.parametrize("kind,cats", [("S", ("z2",)), ("A'", ("z2", "terminal")), ("A", ("terminal", "z2")),
                                       ("R'", ()), ("L'", ())])
def test_two_naturality_against_corpus_functors(kind, cats):
    for f in enumerate_smc_functors(sline(), sline())[:4]:
        assert two_naturality(kind, f, c(*cats)) == []
