import pathlib

import pytest

plumbstein = pytest.importorskip("plumbstein")

FIXTURES = pathlib.Path(__file__).resolve().parents[1] / "fixtures"


def fixture(name):
    return (FIXTURES / name).read_text()


def test_fused_cycles_census_and_count():
    text = fixture("fused_cycles.plumb")
    assert len(plumbstein.torus_classes(text)) == 7
    assert plumbstein.lower_bound(text) == 2880


def test_wrap_and_diagram():
    text = fixture("three_loops.plumb")
    assert len(plumbstein.wrap(text)["curved"]) == 3
    assert len(plumbstein.assemble(text)["one_handles"]) == 3


def test_twisting_bounds():
    text = fixture("family_y.plumb")
    assert plumbstein.mintwist_upper_bound(text) == 4
    assert all(plumbstein.torsion_upper_bound(text, m) == 2 for m in range(1, 11))


def test_continued_fractions():
    assert plumbstein.ncf_expand("7/3") == "[3,2,2]"
    assert plumbstein.ncf_eval("[3,2]") == "5/2"
    assert plumbstein.transform_slope("[3,2]", "1") == "3/2"
    with pytest.raises(plumbstein.DivisionByZero):
        plumbstein.ncf_eval("[2,1,1]")


def test_errors_map_to_exceptions():
    with pytest.raises(plumbstein.ParseError):
        plumbstein.validate("vertex a\n")
    with pytest.raises(plumbstein.UnsupportedShape):
        plumbstein.wrap(fixture("k33.plumb"))
    assert not plumbstein.validate(fixture("bad.plumb"))["ok"]


def test_cli_in_process():
    code, out, _ = plumbstein.run_cli(["count", str(FIXTURES / "fused_cycles.plumb")])
    assert code == 0
    assert out.startswith("2880")
