"""Unit tests for the multivariate polynomial layer."""

from fractions import Fraction

import pytest

from conic_census.field import I, ONE, SQRT2, ZERO, kelem
from conic_census.poly import (
    DEGREVLEX,
    LEX,
    Poly,
    PolyRing,
    block_order,
    compress_variables,
    divide_exact,
    poly_from_uni,
    ring_map,
    specialize,
    substitute_linear,
    uni_coeffs,
    uni_gcd,
    uni_lcm,
    uni_squarefree,
)


@pytest.fixture
def xyz():
    ring = PolyRing(("x", "y", "z"))
    return (ring,) + tuple(ring.gens())


def test_ring_equality_includes_order():
    a = PolyRing(("x", "y"))
    b = PolyRing(("x", "y"), LEX)
    assert a == PolyRing(("x", "y"), DEGREVLEX)
    assert a != b
    assert a.with_order(LEX) == b


def test_arithmetic(xyz):
    ring, x, y, z = xyz
    p = (x + y) ** 2
    assert p == x**2 + 2 * x * y + y**2
    assert p - p == ring.zero()
    assert (x - y) * (x + y) == x**2 - y**2
    assert 3 * x == x + x + x
    assert (x + ring.const(Fraction(1, 2))) * 2 == 2 * x + 1


def test_coefficients_live_in_k(xyz):
    ring, x, y, z = xyz
    p = SQRT2 * x + I * y
    assert p * p == 2 * x**2 + 2 * I * SQRT2 * x * y - y**2


def test_degrevlex_leading_monomial(xyz):
    # degree first, then smaller exponents on later variables win
    ring, x, y, z = xyz
    assert (x**2 * z + x * y * z).lead_monomial() == (2, 0, 1)
    assert (x * y**2 + x**2 * y).lead_monomial() == (2, 1, 0)
    assert (z**3 + x * y).lead_monomial() == (0, 0, 3)


def test_lex_leading_monomial():
    ring = PolyRing(("x", "y", "z"), LEX)
    x, y, z = ring.gens()
    assert (x * y**3 + y * z**5).lead_monomial() == (1, 3, 0)
    assert (x + y**9).lead_monomial() == (1, 0, 0)


def test_block_order_separates_blocks():
    ring = PolyRing(("x", "y"), block_order(1))
    x, y = ring.gens()
    assert (x + y**5).lead_monomial() == (1, 0)


def test_str_rendering(xyz):
    ring, x, y, z = xyz
    p = x**2 - 2 * y + ring.const(Fraction(1, 2)) * z
    assert str(p) == "x^2 - 2*y + 1/2*z"
    assert str(ring.zero()) == "0"


def test_degree_queries(xyz):
    ring, x, y, z = xyz
    p = x**3 * y + z**2
    assert p.total_degree() == 4
    assert p.degree_in(0) == 3
    assert p.degree_in(2) == 2
    assert not p.is_homogeneous()
    assert (x**2 + y * z).is_homogeneous()


def test_substitute_and_evaluate(xyz):
    ring, x, y, z = xyz
    p = x**2 + y * z
    assert p.substitute(0, kelem(2)) == ring.const(kelem(4)) + y * z
    assert p.evaluate([kelem(2), kelem(3), kelem(5)]) == kelem(19)
    assert p.evaluate([SQRT2, ZERO, ONE]) == kelem(2)


def test_partial_derivative(xyz):
    ring, x, y, z = xyz
    p = x**3 + x * y**2 + 4 * z
    assert p.partial_derivative(0) == 3 * x**2 + y**2
    assert p.partial_derivative(1) == 2 * x * y
    assert p.partial_derivative(2) == ring.const(kelem(4))


def test_monic(xyz):
    ring, x, y, z = xyz
    p = 2 * x**2 + 4 * y
    assert p.monic() == x**2 + 2 * y
    assert p.monic().lead_coeff() == ONE


def test_ring_map(xyz):
    ring, x, y, z = xyz
    target = PolyRing(("u", "v"))
    u, v = target.gens()
    image = ring_map(x**2 + y * z, target, [u, v, target.const(ONE)])
    assert image == u**2 + v


def test_substitute_linear_permutation(xyz):
    ring, x, y, z = xyz
    # swap x and y, negate z
    rows = [
        [ZERO, ONE, ZERO],
        [ONE, ZERO, ZERO],
        [ZERO, ZERO, -ONE],
    ]
    p = x**2 + x * z + y
    assert substitute_linear(p, rows) == y**2 - y * z + x


def test_specialize(xyz):
    ring, x, y, z = xyz
    q = specialize(x**2 + y * z, {1: kelem(3)})
    assert q == x**2 + 3 * z


def test_divide_exact(xyz):
    ring, x, y, z = xyz
    assert divide_exact(x**2 + x * y, x) == x + y
    assert divide_exact((x + y) * (x - y), x + y) == x - y
    assert divide_exact(x**2 + y, x) is None


def test_compress_variables(xyz):
    ring, x, y, z = xyz
    polys, small, vmap = compress_variables([x**2 + x, x * z])
    assert small.names == ("x", "z")
    assert vmap == {0: 0, 2: 1}
    u, w = small.gens()
    assert polys == [u**2 + u, u * w]


def test_compress_variables_extra_keep(xyz):
    ring, x, y, z = xyz
    polys, small, vmap = compress_variables([x**2], extra_keep=(2,))
    assert set(small.names) == {"x", "z"}


def test_uni_round_trip():
    ring = PolyRing(("t",))
    t, = ring.gens()
    p = t**3 - 2 * t + 5
    cs = uni_coeffs(p, 0)
    assert [str(c) for c in cs] == ["5", "-2", "0", "1"]
    assert poly_from_uni(ring, 0, cs) == p


def test_uni_gcd_and_friends():
    ring = PolyRing(("t",))
    t, = ring.gens()
    g = uni_gcd((t**2 - 1) * (t + 2) * 3, (t**2 - 1) * 7, 0)
    assert g == t**2 - 1
    assert uni_squarefree((t - 1) ** 2 * (t + 1), 0) == t**2 - 1
    assert uni_lcm(t**2 - 1, (t - 1) * t, 0) == t**3 - t


def test_poly_equality_requires_same_order():
    a = PolyRing(("x", "y"))
    b = PolyRing(("x", "y"), LEX)
    xa, ya = a.gens()
    xb, yb = b.gens()
    assert xa + ya != xb + yb
    assert str(xa + ya) == str(xb + yb)
