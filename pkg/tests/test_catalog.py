"""Checks that the fixed census inputs are internally consistent."""

from conic_census import catalog
from conic_census.field import ONE, SQRT2, SQRT5, I, ZERO, kelem
from conic_census.geometry import Conic, ZRING
from conic_census.group import GroupMatrix
from conic_census.poly import substitute_linear, uni_squarefree


def test_surface_shape():
    f = catalog.surface()
    assert f.is_homogeneous()
    assert f.total_degree() == 4
    # even in every variable
    for mono in f.terms:
        assert all(e % 2 == 0 for e in mono)


def test_generators_preserve_surface():
    f = catalog.surface()
    for m in catalog.symmetry_generators():
        assert substitute_linear(f, m.rows) == f


def test_seed_conics_lie_on_surface():
    f = catalog.surface()
    for c in catalog.seed_conics():
        assert c.is_irreducible()
        assert c.on_surface(f)


def test_seed_pair_is_residual():
    f = catalog.surface()
    c1, c2, c3 = catalog.seed_conics()
    assert c1.residual(f) == c2
    assert c1.key[10:] == c2.key[10:]  # same plane
    assert c3.key[10:] != c1.key[10:]


def test_kummer_generators_preserve_surface():
    f = catalog.surface()
    for m in catalog.kummer_generators():
        assert substitute_linear(f, m.rows) == f


def test_kummer_generator_orders():
    g1, g2, g3, g4 = catalog.kummer_generators()
    e = GroupMatrix.identity()
    assert g1 * g1 == e
    assert g3 * g3 == e
    assert g4 * g4 == e
    assert g2 * g2 != e
    assert (g2 * g2) * (g2 * g2) == e


def test_degeneration_polynomial():
    g = catalog.degeneration_polynomial()
    assert g.total_degree() == 12
    assert g.lead_coeff() == ONE
    assert uni_squarefree(g, 0).monic() == g
    prod = catalog.nodal_parameter_polynomial() * catalog.split_parameter_polynomial()
    assert prod.monic() == g


def test_parameter_values_are_roots():
    nodal = catalog.nodal_parameter_polynomial()
    split = catalog.split_parameter_polynomial()
    assert len(catalog.nodal_parameters()) == 4
    assert len(catalog.split_parameters()) == 8
    for a in catalog.nodal_parameters():
        assert nodal.evaluate([a]) == ZERO
    for a in catalog.split_parameters():
        assert split.evaluate([a]) == ZERO
    assert len(set(catalog.nodal_parameters() + catalog.split_parameters())) == 12


def test_fiber_at_is_a_plane_quartic():
    q = catalog.fiber_at(kelem(0))
    assert q.ring.names == ("z0", "z1", "z3")
    assert q.is_homogeneous()
    assert q.total_degree() == 4
    # the seed parameter of C3 gives the fiber containing it
    a = catalog.split_parameters()[0]
    c3 = catalog.seed_conics()[2]
    assert c3.plane_coeffs()[3] == a


def test_component_generators_shape():
    comps = catalog.singular_component_generators()
    assert len(comps) == 7
    labels = [label for label, _ in comps]
    assert len(set(labels)) == 7
    for _, gens in comps:
        assert gens
        for g in gens:
            assert g.ring.names == ("z0", "z1", "z3", "t")


def test_ansatz_matches_reference_expansion():
    # symbolic expansion against the independently transcribed systems
    for case in ("i", "ii", "iii"):
        ring, eqs = catalog.ansatz_equations(case)
        ref = catalog.reference_case_equations(case)
        assert len(eqs) == 15
        assert {str(p) for p in eqs} == {str(p) for p in ref}
        got = {p.ring for p in eqs}
        assert got == {ring}


def test_gauge_fixed_system_shape():
    for case in ("i", "ii", "iii"):
        polys, cring, vmap, subs, ring = catalog.gauge_fixed_system(case)
        assert polys
        # the free parameters survive the compression
        for name in catalog.CASE_PARAMS[case]:
            assert name in cring.names
        assert "T0" not in cring.names
        assert "a4" not in cring.names
        for poly in polys:
            assert poly.ring == cring


def test_conic_from_solution_rebuilds_seed():
    a = I * (SQRT5 + 1) / 2
    values = {
        "a1": ONE,
        "a2": ZERO,
        "a3": 3 * (SQRT5 + 1) / 2,
        "a4": ONE,
        "a5": ZERO,
        "a6": 2 * SQRT2,
        "a": a,
    }
    plane, quadric = catalog.conic_from_solution("iii", values)
    assert Conic(plane, quadric) == catalog.seed_conics()[2]


def test_expected_parameter_polynomial_degrees():
    from conic_census.poly import PolyRing

    ring = PolyRing(("u",))
    want = {"i": None, "ii": 15, "iii": 8}
    for case in ("ii", "iii"):
        p = catalog.expected_parameter_polynomial(case, ring, 0)
        assert p.lead_coeff() == ONE
        assert p.total_degree() == want[case]


def test_solver_hints_are_quartic_factors():
    for case in ("i", "ii", "iii"):
        hints = catalog.solver_hints(case)
        assert hints
        for cs in hints:
            assert len(cs) > 2


def test_census_constants():
    assert catalog.GROUP_ORDER == 7680
    assert catalog.PROJECTIVE_ORDER == 1920
    assert catalog.SEED_ORBIT_LENGTHS == (160, 160, 480)
    assert sum(catalog.SEED_ORBIT_LENGTHS) == catalog.CENSUS_SIZE
    assert sum(catalog.PLANE_SUPPORT_HISTOGRAM.values()) == catalog.PLANE_COUNT
    assert catalog.EXPECTED_CONICS == {"i": 720, "ii": 64, "iii": 16}
    assert catalog.EXPECTED_PLANES == {"i": 360, "ii": 32, "iii": 8}
