import json
from fractions import Fraction

import abel3py as ab


def test_pairing_and_discriminant():
    assert ab.euler_pairing((1, 0, 0, 0), (0, 0, 0, 1)) == 1
    assert ab.euler_pairing((2, 3, 5, 7), (2, 3, 5, 7)) == 0
    assert ab.discriminant((1, 0, 0, -1)) == -1


def test_sl2_action_preserves_invariants():
    g = (1, 1, 0, 1)
    v = (2, -1, 3, 5)
    w = (0, 4, 1, -2)
    gv, gw = ab.sl2_act(g, v), ab.sl2_act(g, w)
    assert ab.euler_pairing(gv, gw) == ab.euler_pairing(v, w)
    assert ab.discriminant(gv) == ab.discriminant(v)


def test_decompose():
    assert ab.decompose((2, 1, 1, 1)) == ((1, 0, 1), (1, 1, 1))
    assert ab.decompose((1, 0, -1, -1)) is None
    assert ab.in_c((8, 4, 2, 1)) == (2, 1, 1)


def test_wall_crossing_term():
    assert ab.wall_crossing_term((1, 0, 0, -1)) == 1
    assert ab.wall_crossing_term((1, 0, 0, -2)) == Fraction(-5, 2)


def test_conj_dt():
    assert ab.conj_dt(1, 1) == 8
    assert ab.conj_dt(0, 2) == Fraction(-5, 2)
    assert ab.conj_dt(-1, 3) == 0


def test_a_coefficients():
    a = ab.a_coefficients(8)
    assert a[-1] == -1
    assert a[0] == 2
    assert a[3] == -8
    assert a[1] == 0 and a[2] == 0


def test_fm_orbit():
    sols = ab.cubic_unit_solutions(1, 1, 3)
    assert (1, 2) in sols
    assert ab.fm_image(1, 1, 1, 2) == (7, 37)
    assert ab.reconstruct_g(1, 1, 1, 2) == (3, 5, 1, 2)
    assert ab.conj_dt(7, 37) == ab.conj_dt(1, 1)


def test_spin_quartic():
    assert ab.delta_ppav((1, 0, 0, -1)) == -1
    assert ab.delta_ppav((2, -1, 3, 5)) == ab.discriminant((2, -1, 3, 5))
    # product abelian variety with a pure exponential class
    assert ab.delta_e3(1, 2, 2, 2, 4, 4, 4, 8) == 0


def test_eps_product():
    terms = ab.eps_product(2, [[1, 1]], [[1, -1]])
    assert len(terms) == 1
    coeff, basis = terms[0]
    assert coeff == 2
    assert basis == []  # rank-zero intersection
    assert ab.eps_product(3, [[1, 0, 0]], [[0, 1, 0]]) == []


def test_walls():
    walls = json.loads(ab.walls_json((2, 1, 1, 1)))
    circles = [w for w in walls["walls"] if w["kind"] == "circle"]
    assert circles and circles[0]["center_beta"] == "1/2"
    assert ab.on_wall(0.5, 3 ** 0.5 / 6, (2, 1, 1, 1))
    assert not ab.on_wall(-5.0, 1.0, (2, 1, 1, 1))
    svg = ab.walls_svg((2, 1, 1, 1), -1.0, 2.0, 1.5)
    assert "<circle" in svg
