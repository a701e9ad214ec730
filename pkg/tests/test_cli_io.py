import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cat0kit.cli import main
from cat0kit.cplx import canonical, parse_complex, serialize_complex
from cat0kit.disks import make_disk, minimal_spanning_disk
from cat0kit.errors import (
    BadParams,
    ComplexSyntaxError,
    DeclaredCat0Contradiction,
    DisconnectedComplex,
    SingularDisk,
    TooHighDimension,
)
from cat0kit.fixtures import fixture, fixture_names, generate_fixture, parse_fixture_spec
from cat0kit.svg import export_disk_svg

from conftest import ids


def test_parse_tetrahedron():
    doc = parse_complex("version 1\nsimplex a b c d\n")
    assert doc.complex.f_vector() == (4, 6, 4, 1)
    assert not doc.declared_cat0


def test_parse_disconnected():
    with pytest.raises(DisconnectedComplex):
        parse_complex("simplex a b\nsimplex c d\n")


def test_syntax_errors_carry_line_numbers():
    with pytest.raises(ComplexSyntaxError) as info:
        parse_complex("# header\nversion 1\nsimplx a b\n")
    assert info.value.line == 3
    with pytest.raises(ComplexSyntaxError):
        parse_complex("simplex a a\n")
    with pytest.raises(ComplexSyntaxError):
        parse_complex("version 2\nsimplex a\n")
    with pytest.raises(ComplexSyntaxError):
        parse_complex("declared-cat0 maybe\nsimplex a\n")


def test_dimension_override():
    text = "simplex a b c d e f\n"
    with pytest.raises(TooHighDimension):
        parse_complex(text)
    doc = parse_complex("dim-unrestricted true\n" + text)
    assert doc.complex.dim == 5
    assert "dim-unrestricted true" in serialize_complex(doc)


def test_names_are_case_sensitive():
    doc = parse_complex("simplex a A\n")
    assert len(doc.complex.vertices) == 2


def test_declared_contradiction_is_an_error():
    text = serialize_complex(fixture("pentagon_join", 4).complex, declared_cat0=True)
    with pytest.raises(DeclaredCat0Contradiction):
        parse_complex(text)
    assert parse_complex(text, check_declared=False).declared_cat0


def test_canonical_round_trip():
    text = "# c\nsimplex d c b\nsimplex b a c\ndeclared-cat0 true\n"
    canon = canonical(text)
    assert canon == "version 1\ndeclared-cat0 true\nsimplex a b c\nsimplex b c d\n"
    assert serialize_complex(parse_complex(canon)) == canon


@pytest.mark.parametrize("name", fixture_names())
def test_fixture_round_trip(name):
    f = fixture(name)
    text = serialize_complex(f.complex, declared_cat0=f.declared_cat0)
    doc = parse_complex(text)
    assert doc.complex.f_vector() == f.complex.f_vector()
    assert serialize_complex(doc) == text


@settings(max_examples=60, deadline=None)
@given(st.lists(st.lists(st.sampled_from("abcdefg"), min_size=1, max_size=4, unique=True), min_size=1, max_size=8))
def test_round_trip_law(simplices):
    simplices = simplices + [["a", x] for x in "bcdefg"]
    body = "".join("simplex " + " ".join(s) + "\n" for s in simplices)
    canon = canonical(body)
    assert serialize_complex(parse_complex(canon)) == canon
    assert canonical(canon) == canon


def test_generator_examples():
    K = generate_fixture("pentagon_join", 3)
    assert len(K.vertices) == 7 and len(K.tetrahedra) == 5
    K = generate_fixture("hex_disk")
    assert len(K.vertices) == 7 and len(K.triangles) == 6
    assert max(len(K.neighbors(v)) for v in K.vertices) == 6
    K = generate_fixture("narwhal", 3)
    assert K.has_simplex(ids(K, "v2 v3 u"))
    with pytest.raises(BadParams):
        generate_fixture("pentagon_join", 2)
    with pytest.raises(BadParams):
        generate_fixture("nope")
    with pytest.raises(BadParams):
        parse_fixture_spec("strip:x")
    with pytest.raises(BadParams):
        generate_fixture("octahedron", 3)


# -- svg -----------------------------------------------------------------------


def test_svg_single_triangle():
    svg = export_disk_svg(make_disk([(0, 1, 2)], (0, 1, 2, 0), [0, 1, 2]))
    assert svg.count("<circle") == 3
    assert svg.count("<polygon points") == 1
    assert svg == export_disk_svg(make_disk([(0, 1, 2)], (0, 1, 2, 0), [0, 1, 2]))


def test_svg_hexagon(hexd):
    (D,) = minimal_spanning_disk(hexd, ids(hexd, "v0 v1 v2 v3 v4 v5 v0"))
    svg = export_disk_svg(D, hexd.name)
    assert svg.count("<circle") == 7 and svg.count('class="interior"') == 1
    assert svg.count("<polygon points") == 6
    assert ">o</text>" in svg


def test_svg_pentagon_filling():
    K = fixture("pentagon_join", 4).complex
    D = minimal_spanning_disk(K, ids(K, "v0 v1 v2 v3 v4 v0"))[0]
    svg = export_disk_svg(D, K.name)
    assert svg.count('class="boundary"') == 6  # five vertices plus the outline
    assert svg.count('class="interior"') == 1


def test_svg_rejects_singular_disk():
    D = make_disk([(0, 1, 2), (0, 3, 4)], (0, 1, 2, 0, 3, 4, 0), [0, 1, 2, 3, 4])
    with pytest.raises(SingularDisk):
        export_disk_svg(D)


# -- command line ------------------------------------------------------------


def test_cli_curvature_reports_empty_pentagon(capsys):
    assert main(["curvature", "--fixture", "pentagon_join:4"]) == 1
    out = capsys.readouterr().out
    assert "EMPTY_5GON: v0 v1 v2 v3 v4" in out and "RESULT: fail" in out


def test_cli_fellow_travel(capsys):
    assert main(["fellow-travel", "2", "1", "--fixture", "hex_disk", "--system", "gs"]) == 0
    assert "RESULT: pass" in capsys.readouterr().out


def test_cli_unknown_vertex(tmp_path, capsys):
    path = tmp_path / "f.cplx"
    path.write_text("version 1\nsimplex a b c\n")
    assert main(["distance", "a", "q", "--complex", str(path)]) == 2
    assert "unknown vertex" in capsys.readouterr().err
    assert main(["distance", "a", "c", "--complex", str(path)]) == 0
    assert "DISTANCE: 1" in capsys.readouterr().out


def test_cli_usage_errors(tmp_path, capsys):
    assert main(["bogus"]) == 2
    assert main(["validate"]) == 2
    assert main(["validate", "--fixture", "nope"]) == 2
    assert main(["validate", "--complex", str(tmp_path / "missing.cplx")]) == 2
    bad = tmp_path / "bad.cplx"
    bad.write_text("simplx a\n")
    assert main(["validate", "--complex", str(bad)]) == 2
    assert "line 1" in capsys.readouterr().err


def test_cli_span_disk(capsys):
    assert main(["span-disk", "v0", "v1", "v2", "v3", "v4", "--fixture", "pentagon_join:4"]) == 0
    out = capsys.readouterr().out
    assert "AREA: 5" in out and "COUNT: 3" in out


def test_cli_straighten_and_gs(capsys):
    assert main(["straighten", "v0", "v1", "v2", "v3", "--target", "v0", "o", "v3", "--fixture", "hex_disk"]) == 0
    out = capsys.readouterr().out
    assert "FINAL: v0 o v3" in out and "triangle_triangle@1" in out
    assert main(["gs-geodesic", "b0", "t3", "--fixture", "strip"]) == 0
    assert "GS_GEODESIC:" in capsys.readouterr().out
    assert main(["verify-gs", "--fixture", "strip"]) == 0
    assert main(["verify-gs", "--fixture", "narwhal"]) == 1


def test_cli_other_commands(tmp_path, capsys):
    assert main(["validate", "--fixture", "octahedron"]) == 0
    assert main(["geodesics", "--fixture", "octahedron", "--", "+x", "-x"]) == 0
    assert "COUNT: 4" in capsys.readouterr().out
    assert main(["fsa", "--fixture", "strip", "--format", "dot"]) == 0
    assert "digraph" in capsys.readouterr().out
    out_svg = tmp_path / "d.svg"
    assert main(["export-svg", "v0", "v1", "v2", "v3", "v4", "v5", "--fixture", "hex_disk", "-o", str(out_svg)]) == 0
    assert out_svg.read_text().startswith("<?xml")
    capsys.readouterr()
    assert main(["generate", "strip:2"]) == 0
    text = capsys.readouterr().out
    assert parse_complex(text).complex.f_vector() == fixture("strip", 2).complex.f_vector()


def test_cli_generated_file_validates(tmp_path, capsys):
    for name in fixture_names():
        assert main(["generate", name]) == 0
        path = tmp_path / f"{name}.cplx"
        path.write_text(capsys.readouterr().out)
        assert main(["validate", "--complex", str(path)]) == 0
        capsys.readouterr()
