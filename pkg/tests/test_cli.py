"""Command-line interface: subcommands, formats, exit codes, diagnostics."""

import json

import pytest

from quasigalois import catalog, curve_to_json
from quasigalois.cli import main


@pytest.fixture()
def fermat_file(tmp_path):
    inst = catalog.make("fermat_quartic")
    path = tmp_path / "fermat.json"
    path.write_text(json.dumps(curve_to_json(inst.curve)))
    return str(path)


@pytest.fixture()
def singular_file(tmp_path):
    # the diagonal quartic family degenerates at a = 2
    data = {
        "field": {"conductor": 8},
        "degree": 4,
        "terms": [
            {"exps": [4, 0, 0], "coeff": {"conductor": 8, "coords": ["1", "0", "0", "0"]}},
            {"exps": [0, 4, 0], "coeff": {"conductor": 8, "coords": ["1", "0", "0", "0"]}},
            {"exps": [0, 0, 4], "coeff": {"conductor": 8, "coords": ["1", "0", "0", "0"]}},
            {"exps": [2, 2, 0], "coeff": {"conductor": 8, "coords": ["2", "0", "0", "0"]}},
        ],
    }
    path = tmp_path / "singular.json"
    path.write_text(json.dumps(data))
    return str(path)


def test_smooth_passes_on_smooth_curve(fermat_file, capsys):
    assert main(["smooth", "--curve", fermat_file]) == 0
    assert capsys.readouterr().out.strip() == "smooth"


def test_smooth_flags_singular_curve(singular_file, capsys):
    assert main(["smooth", "--curve", singular_file]) == 1
    assert capsys.readouterr().out.strip() == "singular"


def test_smooth_json_format(fermat_file, capsys):
    assert main(["smooth", "--curve", fermat_file, "--format", "json"]) == 0
    assert json.loads(capsys.readouterr().out) == {"smooth": True}


def test_malformed_json_file_is_a_usage_error(tmp_path, capsys):
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    assert main(["smooth", "--curve", str(bad)]) == 2
    assert "error" in capsys.readouterr().err.lower()


def test_missing_file_is_a_usage_error(tmp_path, capsys):
    assert main(["smooth", "--curve", str(tmp_path / "nope.json")]) == 2


def test_schema_violation_reports_path(tmp_path, capsys):
    data = {"field": {"conductor": 8}, "degree": 4, "terms": [{"exps": [4, 0], "coeff": {"conductor": 8, "coords": ["1", "0", "0", "0"]}}]}
    path = tmp_path / "broken.json"
    path.write_text(json.dumps(data))
    assert main(["smooth", "--curve", str(path), "--format", "json"]) == 2
    err = json.loads(capsys.readouterr().out)
    assert set(err["error"]) == {"type", "message", "path"}
    assert "exps" in err["error"]["path"]


def test_point_classification_text(fermat_file, capsys):
    assert main(["point", "--curve", fermat_file, "--point", "1,0,0"]) == 0
    out = capsys.readouterr().out
    assert "order 4" in out
    assert "outer" in out


def test_point_classification_json(fermat_file, capsys):
    assert main(
        ["point", "--curve", fermat_file, "--point", "1,1,0", "--format", "json"]
    ) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["order"] == 2
    assert data["locus"] == "outer"


def test_point_literal_with_powers_of_zeta(fermat_file, capsys):
    assert main(
        ["point", "--curve", fermat_file, "--point", "1, z^2, 0", "--format", "json"]
    ) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["order"] == 2


def test_bad_point_literal_is_a_usage_error(fermat_file, capsys):
    assert main(["point", "--curve", fermat_file, "--point", "1,2"]) == 2


def test_profile_of_coordinate_line(fermat_file, capsys):
    assert main(
        ["profile", "--curve", fermat_file, "--line", "0,0,1", "--format", "json"]
    ) == 0
    data = json.loads(capsys.readouterr().out)
    assert sorted(data["profile"]) == [1, 1, 1, 1]


def element(k):
    return {"conductor": 8, "coords": [str(k), "0", "0", "0"]}


def test_analyze_reports_census(fermat_file, tmp_path, capsys):
    seeds = {
        "points": [
            [element(1), element(0), element(0)],
            [element(0), element(1), element(0)],
        ]
    }
    spath = tmp_path / "seeds.json"
    spath.write_text(json.dumps(seeds))
    assert main(
        [
            "analyze",
            "--curve",
            fermat_file,
            "--seeds",
            str(spath),
            "--format",
            "json",
        ]
    ) == 0
    report = json.loads(capsys.readouterr().out)
    # the two vertex seeds close up to exactly themselves
    assert report["delta_prime"]["4"] == 2
    assert report["certification"] in ("certified", "theory_table_only")
    assert all(p["locus"] == "outer" for p in report["points"])
    assert len(report["pairs"]) == 1


def test_analyze_default_seeds_are_vertices(fermat_file, capsys):
    assert main(["analyze", "--curve", fermat_file, "--format", "json"]) == 0
    report = json.loads(capsys.readouterr().out)
    assert report["delta_prime"]["4"] == 3


def test_analyze_cap_exceeded_is_a_verification_failure(fermat_file, capsys):
    assert main(["analyze", "--curve", fermat_file, "--cap", "2"]) == 1


def generator_file(tmp_path, matrices):
    from quasigalois import field_to_json, matrix_to_json

    data = {
        "field": field_to_json(matrices[0].context),
        "matrices": [matrix_to_json(m) for m in matrices],
    }
    path = tmp_path / "gens.json"
    path.write_text(json.dumps(data))
    return str(path)


def test_closure_command(fermat_file, tmp_path, capsys):
    inst = catalog.make("fermat_quartic")
    ctx = inst.context
    from quasigalois import ProjMatrix

    i4 = ctx.root_of_unity(4)
    one, zero = ctx.one(), ctx.zero()
    gpath = generator_file(
        tmp_path,
        [
            ProjMatrix(ctx, ((i4, zero, zero), (zero, one, zero), (zero, zero, one))),
            ProjMatrix(ctx, ((one, zero, zero), (zero, i4, zero), (zero, zero, one))),
        ],
    )
    assert main(
        [
            "closure",
            "--curve",
            fermat_file,
            "--generators",
            gpath,
            "--format",
            "json",
        ]
    ) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["order"] == 16
    assert data["histogram"] == {"1": 1, "2": 3, "4": 12}


def test_closure_respects_cap(fermat_file, tmp_path, capsys):
    inst = catalog.make("fermat_quartic")
    ctx = inst.context
    from quasigalois import ProjMatrix

    i4 = ctx.root_of_unity(4)
    one, zero = ctx.one(), ctx.zero()
    g = ProjMatrix(ctx, ((i4, zero, zero), (zero, one, zero), (zero, zero, one)))
    gpath = generator_file(tmp_path, [g])
    assert main(
        ["closure", "--curve", fermat_file, "--generators", gpath, "--cap", "2"]
    ) == 1


def test_oracle_census_command(fermat_file, capsys):
    assert main(
        [
            "oracle-census",
            "--curve",
            fermat_file,
            "--order",
            "4",
            "--starts",
            "150",
            "--format",
            "json",
        ]
    ) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["count"] == 3
    assert data["diagnostics"]["order"] == 4
    assert len(data["centers"]) == 3


def test_verify_paper_list(capsys):
    assert main(["verify-paper", "--list"]) == 0
    out = capsys.readouterr().out
    names = out.split()
    assert len(names) == 11
    assert "hessian_sextic" in names
    assert "quartic_xy_fermat_a6" in names


def test_verify_paper_unknown_case(capsys):
    assert main(["verify-paper", "--case", "not_a_case"]) == 2


def test_verify_paper_single_case_text(capsys):
    assert main(["verify-paper", "--case", "hessian_sextic", "--no-oracle"]) == 0
    out = capsys.readouterr().out
    assert "PASS" in out
    assert "216" in out


def test_verify_paper_json_is_reproducible(capsys):
    assert main(
        ["verify-paper", "--case", "quartic_5family", "--no-oracle", "--format", "json", "--seed", "5"]
    ) == 0
    first = capsys.readouterr().out
    assert main(
        ["verify-paper", "--case", "quartic_5family", "--no-oracle", "--format", "json", "--seed", "5"]
    ) == 0
    second = capsys.readouterr().out
    assert first == second
    payload = json.loads(first)
    assert payload["passed"] is True
    assert all(case["passed"] for case in payload["cases"])
    assert payload["seed"] == 5


def test_conductor_ceiling_from_environment(fermat_file, monkeypatch, capsys):
    monkeypatch.setenv("QGP_MAX_CONDUCTOR", "6")
    assert main(["smooth", "--curve", fermat_file]) == 2
    err = capsys.readouterr().err
    assert "conductor" in err.lower()


def test_invalid_conductor_ceiling_is_reported(fermat_file, monkeypatch):
    monkeypatch.setenv("QGP_MAX_CONDUCTOR", "many")
    assert main(["smooth", "--curve", fermat_file]) == 2
