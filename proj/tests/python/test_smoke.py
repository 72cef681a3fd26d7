from fractions import Fraction

import pytest

import bkk

PENTAGON = [[0, 0], [2, 0], [0, 1], [7, 5], [6, 7]]


def box(a, b):
    return [[0, 0], [a, 0], [0, b], [a, b]]


def test_hermite_factorization():
    e = [[1, 7, 7, 4], [6, 4, 9, 6], [2, 3, 2, 6], [6, 4, 8, 5]]
    f = bkk.hermite_factorization(e)
    assert f["H"] == [[1, 0, 0, 62], [0, 1, 0, 175], [0, 0, 1, 1], [0, 0, 0, 215]]
    assert f["pivot_product"] == 215
    u = f["U"]
    assert [[sum(u[i][k] * e[k][j] for k in range(4)) for j in range(4)] for i in range(4)] == f["H"]
    assert bkk.count_torus_roots(e) == 215


def test_binomial_roots():
    e = [[2, 1], [0, 3]]
    roots = bkk.solve_binomial(e, [2 + 0j, -1 + 0.5j])
    assert len(roots) == 6
    for x, y in roots:
        assert abs(x**2 * y - 2) < 1e-9
        assert abs(y**3 - (-1 + 0.5j)) < 1e-9
    assert bkk.count_torus_roots([[1, 2], [2, 4]]) is None


def test_volumes_and_hulls():
    assert bkk.normalized_volume(PENTAGON) == 35
    assert bkk.euclidean_volume(PENTAGON) == Fraction(35, 2)
    assert sorted(map(tuple, bkk.convex_hull(PENTAGON + [[1, 1]]))) == sorted(map(tuple, PENTAGON))


def test_big_integers_are_exact():
    big = 2**59
    assert bkk.normalized_volume([[0, 0], [big, 0], [0, big]]) == big * big
    assert bkk.determinant([[10**30, 1], [0, 10**30]]) == 10**60


def test_mixed_volume_methods_agree():
    pair = [box(2, 3), box(5, 7)]
    for method in ("auto", "cells", "ie", "planar"):
        assert bkk.mixed_volume(pair, method=method)["value"] == 29
    assert bkk.mixed_volume(pair)["closed_form"] == "bricks"
    assert bkk.permanent([[1, 2], [3, 4]]) == 10


def test_subdivision_with_explicit_lifts():
    s = bkk.subdivide([PENTAGON], lifts=[[1, 0, 0, 0, 1]])
    assert [c["witness"] for c in s["cells"]] == [[0, 0, 1], [1, 2, 2], [4, -7, 18]]
    volumes = [bkk.normalized_volume(c["parts"][0]) for c in s["cells"]]
    assert volumes == [15, 2, 18]


def test_random_subdivision_is_mixed_and_reproducible():
    a = bkk.subdivide([box(2, 3), box(5, 7)], seed=4)
    b = bkk.subdivide([box(2, 3), box(5, 7)], seed=4)
    assert a == b
    assert all(sum(c["type"]) == 2 for c in a["cells"])


def test_toric_ideal():
    t = bkk.toric_ideal(PENTAGON)
    assert t["degree"] == 1
    assert t["relations"] == [([15, 0, 0, 2, 0], [0, 7, 10, 0, 0]), ([9, 0, 0, 0, 1], [0, 3, 7, 0, 0])]


def test_bounds():
    f1 = {(0, 0): -2, (2, 0): 1, (0, 1): -3, (7, 5): 5, (6, 7): 4}
    f2 = {(0, 0): 3, (2, 0): 2, (0, 1): "1/2", (7, 5): (4, 1), (6, 7): Fraction(2, 3)}
    r = bkk.bounds(2, [f1, f2])
    assert (r["bezout"], r["multigraded"], r["kushnirenko"], r["bkk"]) == (169, 98, 35, 35)
    under = bkk.bounds(2, [{(2, 1): 1, (0, 0): -1}])
    assert under["bezout"] is None
    assert under["components"] == 3


def test_errors():
    with pytest.raises(bkk.DimensionError):
        bkk.mixed_volume([[[0, 0], [1, 0]], [[0, 0, 0]]])
    with pytest.raises(bkk.PreconditionError):
        bkk.solve_binomial([[1, 2], [2, 4]], [1, 1])
    with pytest.raises(bkk.BkkError):
        bkk.bounds(1, [{(1,): 0.5}])
    with pytest.raises(ValueError):
        bkk.mixed_volume([box(1, 1), box(1, 1)], method="magic")
