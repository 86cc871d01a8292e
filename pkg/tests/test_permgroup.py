from __future__ import annotations

import math

import pytest

from weylgraph.errors import DomainError
from weylgraph.permgroup import (Perm, PermGroup, alternating_group, center, centralizer,
                                 conjugacy_class, cyclic_group, falling_factorial,
                                 involution_census, orbit, stabilizer, symmetric_group,
                                 symmetric_involution_class_size)

from conftest import closure_order


def test_parse_and_cycle_string_roundtrip():
    p = Perm.parse("(1 2 3)(4 5)", 6)
    assert p.cycle_string() == "(1 2 3)(4 5)"
    assert p.order() == 6
    assert Perm.parse("()", 3).is_identity()


def test_product_is_left_to_right():
    a = Perm.parse("(1 2)", 3)
    b = Perm.parse("(2 3)", 3)
    # apply a then b: 1 -> 2 -> 3
    assert (a * b)(0) == 2


def test_conjugation_matches_power_syntax():
    h = Perm.parse("(1 2)", 4)
    g = Perm.parse("(1 3)(2 4)", 4)
    assert h ** g == g.inverse() * h * g == h.conj(g)
    assert (h ** g).cycle_string() == "(3 4)"


def test_parse_rejects_repeated_point():
    with pytest.raises(DomainError):
        Perm.parse("(1 2 1)", 3)


def test_restrict_requires_invariant_set():
    p = Perm.parse("(1 2)(3 4)", 5)
    assert p.restrict([2, 3]).cycle_string() == "(1 2)"
    with pytest.raises(DomainError):
        p.restrict([0, 2])


@pytest.mark.parametrize("n", range(1, 7))
def test_symmetric_order_matches_closure(n):
    g = symmetric_group(n)
    assert g.order() == math.factorial(n)
    if n > 1:
        assert closure_order(list(g.generators)) == math.factorial(n)


@pytest.mark.parametrize("n", range(3, 7))
def test_alternating_order(n):
    assert alternating_group(n).order() == math.factorial(n) // 2


def test_membership():
    a5 = alternating_group(5)
    assert Perm.parse("(1 2 3)", 5) in a5
    assert Perm.parse("(1 2)", 5) not in a5


def test_orbit_stabilizer_theorem():
    g = symmetric_group(6)
    for x in (0, 3):
        assert len(orbit(g, x)) * stabilizer(g, x).order() == g.order()
    pair = frozenset({0, 1})
    assert len(orbit(g, pair, "sets")) == 15
    assert stabilizer(g, pair, "sets").order() == 48


def test_conjugation_orbit_is_class():
    g = symmetric_group(5)
    t = Perm.parse("(1 2)", 5)
    assert len(conjugacy_class(g, t)) == 10
    assert centralizer(g, t).order() == 12


def test_center():
    assert center(symmetric_group(5)).order() == 1
    assert center(cyclic_group(7)).order() == 7
    # the signed permutation group of rank 3 has center {±1}
    b3 = PermGroup([Perm.parse("(1 2)(4 5)", 6), Perm.parse("(2 3)(5 6)", 6),
                    Perm.parse("(3 6)", 6)])
    assert b3.order() == 48
    assert center(b3).order() == 2


def test_known_order_shortcut_agrees():
    gens = list(symmetric_group(6).generators)
    assert PermGroup(gens, known_order=720).order() == 720


def test_falling_factorial_and_class_sizes():
    assert falling_factorial(6, 2) == 30
    assert [symmetric_involution_class_size(6, k) for k in (1, 2, 3)] == [15, 45, 15]
    census = involution_census(symmetric_group(6))
    assert sorted(census.values()) == [15, 15, 45]
