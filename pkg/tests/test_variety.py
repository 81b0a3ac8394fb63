"""Variety calculus: normalization, lattice operations, saturation, poset."""

import itertools
import random
from fractions import Fraction

import pytest

from supertt.poly import Poly, sigma_act
from supertt.variety import (
    BasicVariety,
    CoordinatePoset,
    Variety,
    admissible_stp,
    elementary_symmetric_z,
    equal,
    sigma_saturate,
    symmetrize_y_set,
    v_stp,
    y_set_polynomials,
)


def Zv(m, *names):
    """Z(...) from names like "X1", "Y2"."""
    cx = [int(n[1:]) for n in names if n[0] == "X"]
    cy = [int(n[1:]) for n in names if n[0] == "Y"]
    return Variety(m, [BasicVariety(m, cx, cy)])


def test_bihomogeneity_enforced():
    m = 1
    p = Poly.x_var(m, 1) + Poly.x_var(m, 1) * Poly.x_var(m, 1)
    with pytest.raises(ValueError):
        BasicVariety(m, (), (), [p])
    q = Poly.x_var(m, 1) + Poly.y_var(m, 1)
    with pytest.raises(ValueError):
        BasicVariety(m, (), (), [q])
    BasicVariety(m, (), (), [q], check_torus=False)


def test_v_stp_examples():
    assert v_stp(2, 1, 1, 0) == Zv(2, "X1", "Y2")
    assert v_stp(2, 2, 1, 1) == Zv(2, "X1", "X2", "Y2")
    assert v_stp(2, 2, 2, 2) == Zv(2, "X1", "X2", "Y1", "Y2")
    assert v_stp(2, 2, 2, 2).is_proj_empty()
    with pytest.raises(ValueError):
        v_stp(2, 2, 2, 0)


def test_intersect_examples():
    m = 1
    assert Zv(m, "X1").intersect(Zv(m, "Y1")) == Zv(m, "X1", "Y1")
    m = 2
    a = Zv(m, "X1").union(Zv(m, "X2"))
    b = Zv(m, "Y1").union(Zv(m, "Y2"))
    got = a.intersect(b)
    assert len(got.components) == 4
    assert got.contains(Zv(m, "X1", "Y2"))
    assert Zv(m, "X1").intersect(Variety.whole_space(m)) == Zv(m, "X1")


def test_union_examples():
    m = 1
    a = Zv(m, "X1")
    assert a.union(Variety.empty(m)) == a
    assert Zv(m, "X1", "Y1").union(Zv(m, "X1")) == Zv(m, "X1")
    b = Zv(m, "Y1")
    assert a.union(b) == b.union(a)


def test_sigma_saturate_examples():
    m = 2
    sat = Zv(m, "X1").sigma_saturate()
    assert sat == Zv(m, "X1").union(Zv(m, "X2"))
    zdiff = Variety.from_generators(m, [Poly.z_var(m, 1) - Poly.z_var(m, 2)])
    assert zdiff.sigma_saturate().equal(zdiff)
    assert sat.sigma_saturate() == sat


def test_sigma_saturate_is_sigma_stable():
    m = 3
    v = v_stp(m, 2, 1, 1).union(
        Variety.from_generators(m, [Poly.z_var(m, 1) - Poly.z_var(m, 3)])
    )
    sat = v.sigma_saturate()
    for perm in itertools.permutations(range(1, m + 1)):
        assert sat.apply_permutation(perm) == sat


def test_contains_examples():
    m = 1
    assert Zv(m, "X1").contains(Zv(m, "X1", "Y1"))
    assert not Zv(m, "Y1").contains(Zv(m, "X1"))
    m = 2
    # Both pieces of U = SV(s,t-1,0) n SV(0,t,0) land inside U, and the two
    # pieces are incomparable (distinct 2-dim coordinate subspaces).
    u = sigma_saturate(v_stp(m, 1, 0, 0)).intersect(sigma_saturate(v_stp(m, 0, 1, 0)))
    p110 = sigma_saturate(v_stp(m, 1, 1, 0))
    p111 = sigma_saturate(v_stp(m, 1, 1, 1))
    assert u.contains(p110) and u.contains(p111)
    assert u.contains(p111, method="groebner")
    assert not p110.contains(p111)
    assert not p111.contains(p110)
    assert not p110.contains(p111, method="groebner")


def test_equal_normalization_and_saturation():
    m = 2
    v = v_stp(m, 1, 1, 0)
    assert v.equal(Variety.from_generators(m, [Poly.x_var(m, 1), Poly.y_var(m, 2)]))
    lhs = sigma_saturate(v_stp(m, 1, 0, 0)).intersect(sigma_saturate(v_stp(m, 0, 1, 0)))
    rhs = sigma_saturate(v_stp(m, 1, 1, 0)).union(sigma_saturate(v_stp(m, 1, 1, 1)))
    assert lhs.equal(rhs)
    assert Zv(m, "Y1").union(Zv(m, "Y2")).equal(sigma_saturate(v_stp(m, 0, 1, 0)))


def test_monomial_generator_splits():
    m = 2
    prod = Poly.z_var(m, 1) * Poly.z_var(m, 2)
    v = Variety.from_generators(m, [prod])
    expect = Zv(m, "X1").union(Zv(m, "Y1")).union(Zv(m, "X2")).union(Zv(m, "Y2"))
    assert v == expect


def test_elementary_symmetric_reduction_inside_coordinates():
    # Z(X1, e_1(Z)) at m=2: e_1 reduces to Z_2 mod X1 and splits
    m = 2
    e1 = elementary_symmetric_z(m, 1)
    v = Variety.from_generators(m, [Poly.x_var(m, 1), e1])
    assert v == Zv(m, "X1", "X2").union(Zv(m, "X1", "Y2"))
    # Z(X1, e_2(Z)) collapses to Z(X1) since Z1 vanishes on X1 = 0
    e2 = elementary_symmetric_z(m, 2)
    assert Variety.from_generators(m, [Poly.x_var(m, 1), e2]) == Zv(m, "X1")


def test_lattice_laws_random_coordinate():
    rng = random.Random(23)
    m = 3
    pool = [sigma_saturate(v_stp(m, *stp)) for stp in admissible_stp(m)]
    for _ in range(25):
        a, b, c = (rng.choice(pool) for _ in range(3))
        assert a.intersect(b).equal(b.intersect(a))
        assert a.union(b).equal(b.union(a))
        assert a.intersect(b.intersect(c)).equal(a.intersect(b).intersect(c))
        assert a.union(b.union(c)).equal(a.union(b).union(c))
        assert a.intersect(a.union(b)).equal(a)
        assert a.union(a.intersect(b)).equal(a)


def test_component_landing_for_irreducible_coordinate():
    m = 2
    a = Zv(m, "X1").union(Zv(m, "Y2"))
    b = Zv(m, "X1", "X2")
    assert a.contains(b)
    assert any(
        all(g.set_vars_zero(b.components[0].coord_indices()).is_zero() for g in comp.generators())
        for comp in a.components
    )
    # cross-check against the radical product-ideal criterion
    assert a._contains_by_product(b.components[0], None)


def test_point_membership():
    m = 2
    v = Zv(m, "X2", "Y1")
    assert v.contains_point([1, 0, 0, 1])
    assert not v.contains_point([1, 1, 0, 1])
    zdiff = Variety.from_generators(m, [Poly.z_var(m, 1) - Poly.z_var(m, 2)])
    assert zdiff.contains_point([1, 1, 1, 1])
    origin = [0, 0, 0, 0]
    for var in (v, zdiff, Variety.whole_space(m)):
        assert var.contains_point(origin)
    assert not Variety.empty(m).contains_point(origin)


def test_point_grid_consistency_with_set_ops():
    rng = random.Random(31)
    m = 1
    vals = [Fraction(-1), Fraction(0), Fraction(1)]
    grid = [(a, b) for a in vals for b in vals]
    pool = [
        Zv(m, "X1"),
        Zv(m, "Y1"),
        Zv(m, "X1", "Y1"),
        Variety.whole_space(m),
        Variety.from_generators(m, [Poly.x_var(m, 1) - Poly.y_var(m, 1)], check_torus=False),
    ]
    for _ in range(20):
        a, b = rng.choice(pool), rng.choice(pool)
        inter, uni = a.intersect(b), a.union(b)
        for pt in grid:
            assert inter.contains_point(pt) == (a.contains_point(pt) and b.contains_point(pt))
            assert uni.contains_point(pt) == (a.contains_point(pt) or b.contains_point(pt))


def test_coordinate_poset_m1():
    poset = CoordinatePoset(1)
    assert len(poset.classes) == 4
    origin, xline, yline, whole = (1, 1, 1), (1, 0, 0), (0, 1, 0), (0, 0, 0)
    assert poset.leq(origin, xline) and poset.leq(origin, yline)
    assert poset.leq(xline, whole) and poset.leq(yline, whole)
    assert not poset.leq(xline, yline)


def test_coordinate_poset_m2():
    poset = CoordinatePoset(2)
    # SV(1,1,1) and SV(1,1,0) are incomparable unions of 2-dim subspaces;
    # the covers of SV(1,1,1) are the coordinate hyperplane classes.
    assert not poset.leq((1, 1, 1), (1, 1, 0))
    assert not poset.leq((1, 1, 0), (1, 1, 1))
    assert ((1, 1, 1), (1, 0, 0)) in poset.hasse_edges
    assert ((1, 1, 1), (0, 1, 0)) in poset.hasse_edges
    # the poset order agrees with the variety-level containment oracle
    for a in poset.classes:
        for b in poset.classes:
            assert poset.leq(a, b) == poset.saturations[b].contains(
                poset.saturations[a]
            )
    dot = poset.to_dot()
    assert "SV(1,1,0)" in dot


def test_y_set_realizes_saturation_m2():
    m = 2
    rng = random.Random(5)
    for _ in range(3):
        g = Poly.from_z_terms(
            m,
            {
                (1, 0): Fraction(rng.randint(1, 3)),
                (0, 1): Fraction(rng.randint(-3, -1)),
            },
        )
        yset = y_set_polynomials(m, [g])
        lhs = Variety.from_generators(m, yset)
        rhs = sigma_saturate(Variety.from_generators(m, [g]))
        assert lhs.equal(rhs)
        sym = symmetrize_y_set(m, yset)
        assert Variety.from_generators(m, sym).equal(lhs)
        for p in sym:
            for perm in itertools.permutations(range(1, m + 1)):
                assert sigma_act(perm, p).monic() == p.monic()


def test_json_round_trip():
    m = 2
    v = Zv(m, "X1", "Y2").union(
        Variety.from_generators(m, [Poly.z_var(m, 1) - Poly.z_var(m, 2)])
    )
    assert Variety.from_json(v.to_json()) == v
