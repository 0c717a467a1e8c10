import pytest

from degdiam import FamilySpec, InputError, Verdict
from degdiam.formulas import moore
from degdiam.tables import (
    DEFAULT_SIZE_CAP,
    certify,
    cross_table_mismatches,
    load_reference,
    producing_family,
    render_table,
)


def cell(rendered, delta, k):
    return next(c for c in rendered.cells if (c.delta, c.k) == (delta, k))


def test_planar_table_examples():
    t = render_table("planar")
    assert t.diff == ()
    c = cell(t, 8, 9)
    assert (c.value, c.attribution, c.computed) == (11124, "Z", True)
    assert load_reference()[("planar", 8, 9)].old_value == 10977
    assert not cell(t, 3, 2).computed


def test_toroidal_table_examples():
    t = render_table("toroidal")
    assert t.diff == ()
    assert (cell(t, 6, 6).value, cell(t, 6, 6).attribution, cell(t, 6, 6).computed) == (280, "p", False)
    assert (cell(t, 3, 2).value, cell(t, 3, 2).attribution) == (10, "r")
    assert (cell(t, 10, 9).value, cell(t, 10, 9).attribution) == (38276, "Q")


def test_rows_format():
    lines = render_table("toroidal").rows().splitlines()
    assert len(lines) == 8 * 9
    assert "toroidal,9,9,23044,Q,computed" in lines
    assert "toroidal,6,6,280,p,static" in lines
    for line in lines:
        table, d, k, value, attribution, how = line.split(",")
        assert table == "toroidal" and how in ("computed", "static")
        int(d), int(k), int(value)


def test_text_mentions_diff_status():
    assert "diff against reference: empty" in render_table("planar").text()


def test_records_stay_under_moore():
    ref = load_reference()
    for (t, d, k), c in ref.items():
        assert c.value <= moore(d, k), (t, d, k)


def test_cross_table_consistency():
    assert cross_table_mismatches() == []


def test_producing_family_assignment():
    ref = load_reference()
    computed = {key for key, c in ref.items() if producing_family(c)}
    assert len([k for k in computed if k[0] == "planar"]) == 15
    assert all(producing_family(ref[k]) in ("P", "Q") for k in computed if k[0] == "toroidal")


def test_diff_catches_a_corrupted_reference():
    ref = dict(load_reference())
    from dataclasses import replace
    ref[("toroidal", 5, 7)] = replace(ref[("toroidal", 5, 7)], value=401)
    t = render_table("toroidal", ref)
    assert t.diff == ("delta=5 k=7: computed 400, reference 401",)


def test_reference_coverage_is_checked():
    text = "table,delta,k,value,attribution,underlined,bold,old_value\nplanar,3,2,7,,0,0,\n"
    with pytest.raises(InputError, match="does not cover"):
        load_reference(text)
    with pytest.raises(InputError):
        render_table("spherical")


def test_certify_q99():
    cert = certify(FamilySpec("Q", 9, 9), threads=2)
    assert cert.order == 23044 and cert.diameter == 9 and cert.max_degree == 9
    assert cert.euler_genus_traced == 2 and cert.orientable
    assert cert.checker_verdict in (Verdict.PASS, Verdict.PASS_RELAXED)
    assert cert.passed
    assert any("7(delta-4)" in n for n in cert.notes)


def test_certify_y65_and_p33():
    y = certify(FamilySpec("Y", 6, 5))
    assert (y.order, y.diameter, y.euler_genus_traced, y.passed) == (117, 5, 0, True)
    p = certify(FamilySpec("P", 3, 3))
    assert (p.order, p.diameter, p.euler_genus_traced, p.passed) == (15, 3, 2, True)
    assert p.checker_verdict is Verdict.PASS


def test_size_cap_leaves_a_note_in_the_diameter():
    cert = certify(FamilySpec("P", 5, 7), size_cap=100)
    assert cert.diameter == "not verified (size cap 100)"
    assert not cert.diameter_verified and cert.passed
    assert "diameter: not verified (size cap 100)" in cert.to_text()
    assert DEFAULT_SIZE_CAP == 31000


def test_missing_reconstruction_certificate():
    cert = certify(FamilySpec("Z", 11, 7))
    assert cert.order is None and not cert.passed
    assert cert.notes[0].startswith("reconstruction unavailable")
    text = cert.to_text()
    assert "order: absent" in text and "passed: false" in text


def test_certificate_text_layout():
    text = certify(FamilySpec("P", 4, 6)).to_text()
    keys = [line.split(":")[0] for line in text.splitlines()]
    assert keys[:12] == ["family", "delta", "k", "order", "expected_order", "formula_match", "max_degree",
                         "diameter", "euler_genus_traced", "orientable", "checker_verdict", "passed"]
    assert "order: 90\n" in text and "passed: true\n" in text
