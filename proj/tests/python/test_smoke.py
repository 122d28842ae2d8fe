import pytest

smashhom = pytest.importorskip("smashhom")


def test_catalog_contains_the_expected_groups():
    names = smashhom.catalog_names()
    for name in ("trivial-1", "c2-line", "q8", "s3-sumzero", "q8-doubled"):
        assert name in names
    entries = {e["name"]: e for e in smashhom.catalog()}
    assert entries["q8"]["order"] == 8
    assert entries["q8"]["classes"] == 5
    assert entries["q8"]["in_SL"] is True
    assert entries["s3-sumzero"]["in_SL"] is False


def test_sign_action_tables():
    hom = smashhom.homology("catalog:c2-line", trunc=4)
    rows = {r["n"]: r for r in hom["series"]["rows"]}
    assert rows[0]["coeffs"] == [2, 0, 1, 0, 1]
    assert rows[1]["coeffs"] == [0, 0, 1, 0, 1]

    coh = smashhom.cohomology("catalog:c2-line", trunc=4)
    rows = {r["n"]: r for r in coh["series"]["rows"]}
    assert rows[1]["offset"] == -1
    assert rows[1]["coeffs"] == [0, 1, 0, 1, 0, 1]


def test_duality_verdicts():
    q8 = smashhom.duality("catalog:q8", trunc=8)
    assert q8["exit_code"] == 0
    assert q8["duality"]["twisted_all"] is True
    assert q8["duality"]["untwisted_all"] is True

    c2 = smashhom.duality("catalog:c2-line", trunc=6)
    assert c2["exit_code"] == 0  # twisted duality is the conformance bar
    assert c2["duality"]["twisted_all"] is True
    assert c2["duality"]["untwisted_all"] is False


def test_oracle_check_smoke():
    report = smashhom.oracle_check("catalog:c2-line", trunc=4)
    assert report["exit_code"] == 0
    assert report["oracle_check"]["homology_match"] is True
    assert report["oracle_check"]["cohomology_match"] is True


def test_bar_check_smoke():
    report = smashhom.bar_check("catalog:c2-line")
    assert report["exit_code"] == 0
    assert report["bar_check"]["match"] is True


def test_double_flag():
    report = smashhom.duality("catalog:s3-sumzero", double=True)
    assert report["group"]["in_SL"] is True
    assert report["duality"]["untwisted_all"] is True


def test_errors_surface_as_python_exceptions():
    with pytest.raises(ValueError):
        smashhom.homology("catalog:no-such-group")


def test_render_table_roundtrip():
    import json

    report = smashhom.homology("catalog:q8", trunc=4)
    report.pop("exit_code")
    text = smashhom.render_table(json.dumps(report))
    assert "q8" in text
