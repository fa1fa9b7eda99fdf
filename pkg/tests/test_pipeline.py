"""Pipeline stages on small inputs, plus negative controls.

The expensive full-census paths run in test_acceptance; here the focus is
that each stage reports honestly: good inputs pass, corrupted inputs fail
with the offending check named.
"""

import pytest

from conic_census import catalog, pipeline, reference_data
from conic_census.certificates import make_certificate, read_certificate
from conic_census.errors import VerificationFailed
from conic_census.field import ONE, ZERO, kelem
from conic_census.geometry import Conic, ZRING
from conic_census.groebner import Budget
from conic_census.poly import ring_map


def test_report_bookkeeping():
    rep = pipeline.Report("demo")
    assert rep.add("first", True, "fine")
    assert not rep.add("second", False, "broken")
    assert not rep.ok
    assert rep.first_failure() == "second"
    text = rep.render()
    assert "pass" in text and "FAIL" in text
    with pytest.raises(VerificationFailed) as err:
        rep.require()
    assert "second" in str(err.value)
    assert err.value.report is rep


def test_report_as_dict():
    rep = pipeline.Report("demo")
    rep.add("check", True, "ok")
    doc = rep.as_dict()
    assert doc["title"] == "demo"
    assert doc["ok"] is True
    assert doc["checks"][0]["name"] == "check"


def test_parallel_map_matches_serial():
    conics = list(catalog.seed_conics())
    serial = pipeline.parallel_map(pipeline._conic_valid, conics, jobs=1)
    forked = pipeline.parallel_map(pipeline._conic_valid, conics, jobs=2)
    assert serial == forked == [True, True, True]


def test_singular_parameter_locus():
    locus = pipeline.singular_parameter_locus()
    assert locus == catalog.degeneration_polynomial()


def test_singular_parameter_locus_smooth_family():
    # a pencil with smooth total space in these charts: constant fiber x^4+y^4+z^4
    from conic_census.catalog import FIBER_RING
    from conic_census.poly import PolyRing

    ring = PolyRing(("x", "y", "z"))
    x, y, z = ring.gens()
    z0, z1, z3, t = FIBER_RING.gens()
    fam = ring_map(x**4 + y**4 + z**4, FIBER_RING, [z0, z1, z3])
    locus = pipeline.singular_parameter_locus(fam)
    assert locus == pipeline.XRING.one


def test_verify_components():
    rep = pipeline.verify_components()
    assert rep.ok
    names = [name for name, _, _ in rep.checks]
    assert sum("contain" in n for n in names) == 7


def test_verify_components_detects_wrong_component():
    z0, z1, z3, t = catalog.FIBER_RING.gens()
    comps = catalog.singular_component_generators()
    # flip a sign: t^2 + 2t - 1 becomes t^2 + 2t + 1, not a branch
    broken = [("branch-1", [z0, z1, t**2 + 2 * t + 1])] + comps[1:]
    with pytest.raises(VerificationFailed):
        pipeline.verify_components(components=broken)


def test_factor_fiber_split():
    alpha = catalog.split_parameters()[0]
    fac = pipeline.factor_fiber(alpha)
    assert fac.kind == "split"
    assert len(fac.conics) == 2
    f = catalog.surface()
    for c in fac.conics:
        assert c.is_irreducible()
        assert c.on_surface(f)
    assert fac.conics[0].residual(f) == fac.conics[1]
    assert catalog.seed_conics()[2] in fac.conics


def test_factor_fiber_nodal_and_smooth():
    assert pipeline.factor_fiber(catalog.nodal_parameters()[0]).kind == "nodal"
    assert pipeline.factor_fiber(ZERO).kind == "smooth"
    assert pipeline.factor_fiber(ONE).kind == "smooth"


def test_analyze_nodal_fiber():
    rep = pipeline.analyze_nodal_fiber(catalog.nodal_parameters()[1])
    assert rep.ok
    names = [name for name, _, _ in rep.checks]
    assert any("node" in n for n in names)


def test_analyze_nodal_fiber_rejects_smooth_parameter():
    with pytest.raises(VerificationFailed):
        pipeline.analyze_nodal_fiber(ZERO)


def test_plane_census_on_residual_pair():
    c1, c2, _ = catalog.seed_conics()
    cert = make_certificate("demo", [("A-1", c1), ("A-2", c2)])
    rep = pipeline.plane_census(cert)
    assert rep.ok


def test_plane_census_rejects_uncovered_plane():
    c1, _, c3 = catalog.seed_conics()
    cert = make_certificate("demo", [("A-1", c1), ("B-1", c3)])
    with pytest.raises(VerificationFailed):
        pipeline.plane_census(cert)


def test_enumerate_case_iv():
    rep, conics = pipeline.enumerate_case("iv")
    assert rep.ok
    assert conics == []


def test_gram_report_on_packaged_basis():
    rep, rows = pipeline.gram_report()
    assert rep.ok
    assert len(rows) == 20
    for i in range(20):
        assert rows[i][i] == -2
    assert rows == [list(r) for r in reference_data.expected_ns_gram()]


def test_gram_report_rejects_wrong_conics():
    conics = list(reference_data.ns_basis_conics())
    conics[5] = conics[4]  # duplicate row: diagonal stays -2, pattern breaks
    with pytest.raises(VerificationFailed):
        pipeline.gram_report(conics=conics)


def test_permutation_match():
    want = [r[:] if isinstance(r, list) else list(r) for r in reference_data.expected_ns_gram()]
    got = [row[:] for row in want]
    got[0], got[1] = got[1], got[0]
    for row in got:
        row[0], row[1] = row[1], row[0]
    perm = pipeline._permutation_match(got, want)
    assert perm is not None
    broken = [row[:] for row in want]
    broken[2][3] = 1 - broken[2][3]
    broken[3][2] = broken[2][3]
    assert pipeline._permutation_match(broken, want) is None


def test_dot_graph():
    rows = [[-2, 1, 0], [1, -2, 0], [0, 0, -2]]
    text = pipeline.dot_graph(rows, name="demo")
    assert "graph demo" in text
    assert "1 -- 2" in text
    assert "--" in text and "3 -- " not in text


def test_kummer_report_on_packaged_configuration():
    rep = pipeline.kummer_report()
    assert rep.ok


def test_kummer_report_detects_intersecting_conic():
    conics = list(reference_data.kummer_conics())
    conics[0] = catalog.seed_conics()[0]  # C1 meets the configuration
    with pytest.raises(VerificationFailed):
        pipeline.kummer_report(conics=conics)


def test_verify_certificate_accepts_shipped_files(census):
    rep = pipeline.verify_certificate(str(census.path))
    assert rep.ok


def test_verify_certificate_rejects_tamper(census, tmp_path):
    lines = census.path.read_text().splitlines()
    idx = next(i for i, ln in enumerate(lines) if ln.startswith("conic "))
    toks = lines[idx].split(" ")
    # shift a non-leading quadric coefficient: still canonical, wrong conic
    from conic_census.field import KElem

    toks[11] = (KElem.from_text(toks[11]) + ONE).to_text()
    lines[idx] = " ".join(toks)
    bad = tmp_path / "tampered.cert"
    bad.write_text("\n".join(lines) + "\n")
    with pytest.raises(VerificationFailed) as err:
        pipeline.verify_certificate(str(bad))
    assert not err.value.report.ok


def test_orbit_census_report_lines(census):
    rep = census.report
    assert rep.ok
    names = [name for name, _, _ in rep.checks]
    assert any("group order" in n for n in names)
    assert any("stabilizer" in n for n in names)
