import os
import subprocess
import sys

import pytest

from smctensor import kernels
from smctensor.corpus import monoid_e, terminal, z2, z3, z2xz3
from smctensor.fincat import (CapacityError, CategoryError, CompositionError, FinCat, FunctorData,
                              NatTransData, compose, discrete_category, identity_functor, laws,
                              monoid_category, product_category, validate_category, validate_functor,
                              validate_nattrans)


def two_element_monoid(mult):
    return monoid_category(["1", "e"], mult, "1", obj="*")


def idem(g, f):
    return "e" if "e" in (g, f) else "1"


def test_terminal_category_valid():
    assert validate_category(terminal().base) == []


def test_discrete_valid():
    assert validate_category(discrete_category([0, 1])) == []


def test_mutated_associativity_reported():
    # {1, a, b} with x.y = y (right zero), then b.b skewed to a
    elems = ["1", "a", "b"]
    table = {("1", x): x for x in elems} | {(x, "1"): x for x in elems}
    table |= {("a", "a"): "a", ("a", "b"): "b", ("b", "a"): "a", ("b", "b"): "b"}
    c = monoid_category(elems, lambda g, f: table[(g, f)], "1", obj="*")
    assert validate_category(c) == []
    table[("b", "b")] = "a"
    bad = monoid_category(elems, lambda g, f: table[(g, f)], "1", obj="*")
    report = validate_category(bad)
    assert "associativity" in laws(report)
    # brute force agrees on which triples fail
    brute = {(h, g, f) for h in elems for g in elems for f in elems
             if table[(h, table[(g, f)])] != table[(table[(h, g)], f)]}
    assert {v.instance for v in report if v.law == "associativity"} == brute


def test_compose_examples():
    e = two_element_monoid(idem)
    assert compose(e, "e", "e") == "e"
    assert compose(z3().base, 1, 2) == 0
    c = z2().base
    assert compose(c, c.identity[1], 1) == 1


def test_compose_rejects_mismatch():
    c = discrete_category([0, 1])
    with pytest.raises(CompositionError):
        c.compose(0, 1)


def test_identity_laws_missing_comp_entry():
    c = FinCat([0], [("i", 0, 0), ("f", 0, 0)], {0: "i"},
               {("i", "i"): "i", ("i", "f"): "f", ("f", "i"): "f"})
    assert laws(validate_category(c)) == {"comp-missing"}


def test_dangling_endpoint():
    with pytest.raises(CategoryError):
        FinCat([0], [("f", 0, 1)], {0: "f"}, {})


def test_capacity():
    with pytest.raises(CapacityError):
        discrete_category(range(65))


def test_product_sizes():
    one = terminal().base
    p, _, _ = product_category(one, one)
    assert (len(p.objects), len(p.arrows)) == (1, 1)
    p, _, _ = product_category(z2().base, z2().base)
    assert (len(p.objects), len(p.arrows)) == (4, 4)
    assert validate_category(p) == []


def test_projections_are_functors():
    p, p1, p2 = product_category(z2().base, z3().base)
    assert validate_functor(p1, p, z2().base) == []
    assert validate_functor(p2, p, z3().base) == []


def test_functor_examples():
    for c in (z2().base, z3().base, monoid_e().base):
        assert validate_functor(identity_functor(c), c, c) == []
    # constant at the unit object
    c, d = z3().base, z2().base
    const = FunctorData({x: 0 for x in c.objects}, {f: d.identity[0] for f in c.arrows})
    assert validate_functor(const, c, d) == []
    e = monoid_e().base
    collapse = FunctorData({"*": "*"}, {"1": "1", "e": "1"})
    assert validate_functor(collapse, e, e) == []


def test_non_functor_detected():
    c = z3().base
    bad = FunctorData({"*": "*"}, {0: 0, 1: 1, 2: 1})
    assert "composition" in laws(validate_functor(bad, c, c))


def test_nattrans_examples():
    e = monoid_e().base
    ident = identity_functor(e)
    assert validate_nattrans(NatTransData({"*": "1"}), ident, ident, e, e) == []
    assert validate_nattrans(NatTransData({"*": "e"}), ident, ident, e, e) == []


def test_nattrans_without_candidate_component():
    d = discrete_category([0, 1])
    one = terminal().base
    f = FunctorData({"*": 0}, {"*": 0})
    g = FunctorData({"*": 1}, {"*": 1})
    with pytest.raises(CategoryError):
        validate_nattrans(NatTransData({"*": 0}), f, g, one, d)


def test_signature_distinguishes_tables():
    assert z2().base.signature() != z3().base.signature()
    assert z2xz3().base.signature() == z2xz3().base.signature()


def test_backend_reported():
    assert kernels.BACKEND in ("compiled", "python")


def test_pure_python_switch():
    code = "from smctensor import kernels; from smctensor.corpus import z3; " \
           "from smctensor.monoidal import validate_smc; print(kernels.BACKEND, len(validate_smc(z3())))"
    env = dict(os.environ, SMCTENSOR_PURE_PYTHON="1")
    out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True, check=True)
    assert out.stdout.split() == ["python", "0"]
