"""Command-line surface: subcommands, exit codes, JSON output."""

import json

import pytest

from nsqs import catalog_get, serialize_base_spec, serialize_design
from nsqs.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


@pytest.fixture
def sqs10_file(tmp_path):
    path = tmp_path / "sqs10.nsqs"
    path.write_text(serialize_design(catalog_get("sqs10").design()))
    return str(path)


def test_expand_classify_pipe_equivalent(capsys, tmp_path):
    code, out, _ = run(capsys, "expand", "--catalog", "ro20")
    assert code == 0
    path = tmp_path / "ro20.nsqs"
    path.write_text(out)
    code, out, _ = run(capsys, "classify", str(path))
    assert code == 0
    assert out.splitlines()[0] == "complete-uniform M=190 mu=3"


def test_expand_unknown_catalog_is_usage_error(capsys):
    code, _, err = run(capsys, "expand", "--catalog", "nosuch")
    assert code == 2
    assert "available" in err


def test_verify_pass(capsys, sqs10_file):
    code, out, _ = run(capsys, "verify", sqs10_file)
    assert code == 0
    assert out.strip() == "ok v=10 blocks=30"


def test_verify_truncated_file(capsys, sqs10_file, tmp_path):
    lines = open(sqs10_file).read().splitlines()
    truncated = tmp_path / "trunc.nsqs"
    truncated.write_text("\n".join(lines[:-5]) + "\n")
    code, out, _ = run(capsys, "verify", str(truncated))
    assert code == 1
    assert "FAIL triple" in out


def test_census_json(capsys, sqs10_file):
    code, out, _ = run(capsys, "census", sqs10_file, "--json")
    assert code == 0
    payload = json.loads(out)
    assert payload == {
        "v": 10,
        "nd_pairs": 30,
        "min_mult": 2,
        "max_mult": 2,
        "total": 60,
        "histogram": {"2": 30},
    }


def test_classify_json(capsys, sqs10_file):
    code, out, _ = run(capsys, "classify", sqs10_file, "--json")
    assert code == 0
    payload = json.loads(out)
    assert payload["kind"] == "uniform"
    assert payload["nd_pairs"] == 30
    assert payload["mu_min"] == payload["mu_max"] == 2


def test_bounds_json(capsys):
    code, out, _ = run(capsys, "bounds", "--v", "10", "--json")
    assert code == 0
    payload = json.loads(out)
    assert payload["min_nd_pairs"] == 25
    assert payload["max_mult"] == 4


def test_bounds_inadmissible_order(capsys):
    code, _, err = run(capsys, "bounds", "--v", "12")
    assert code == 2
    assert "error" in err


def test_table_json_matches_survey_slice(capsys):
    code, out, _ = run(capsys, "table", "--min", "8", "--max", "16", "--json")
    assert code == 0
    rows = json.loads(out)
    assert [r["v"] for r in rows] == [8, 10, 14, 16]
    v10 = rows[1]
    assert [(c["nd_pairs"], c["mu"]) for c in v10["candidates"]] == [(30, 2)]
    assert {e["nd_pairs"] for e in v10["exclusions"]} == {20, 45}


def test_construct_boolean_pipe(capsys, tmp_path):
    code, out, _ = run(capsys, "construct", "boolean", "--n", "4")
    assert code == 0
    path = tmp_path / "b16.nsqs"
    path.write_text(out)
    code, out, _ = run(capsys, "verify", str(path))
    assert code == 0
    assert "ok v=16 blocks=140" in out


def test_construct_boolean_needs_n(capsys):
    code, _, err = run(capsys, "construct", "boolean")
    assert code == 2
    assert "--n" in err


def test_construct_doubling_a(capsys, tmp_path):
    d8 = tmp_path / "d8.nsqs"
    d8.write_text(serialize_design(catalog_get("sqs8uniform").design()))
    code, out, _ = run(capsys, "construct", "doubling-a", "--input", str(d8))
    assert code == 0
    path = tmp_path / "d16.nsqs"
    path.write_text(out)
    code, out, _ = run(capsys, "classify", str(path))
    assert code == 0
    assert out.splitlines()[0] == "minimum-uniform M=56 mu=5"


def test_construct_doubling_b_precondition(capsys, sqs10_file):
    code, _, err = run(capsys, "construct", "doubling-b", "--input", sqs10_file)
    assert code == 2
    assert "ND-pair" in err


def test_search_refused(capsys, sqs10_file):
    code, _, err = run(
        capsys, "search", sqs10_file, "--target", "uniform", "--mu", "3"
    )
    assert code == 1
    assert "refused" in err
    assert "v^2/4" in err


def test_search_found_writes_design(capsys, sqs10_file, tmp_path):
    code, out, err = run(
        capsys, "search", sqs10_file, "--target", "uniform", "--mu", "2"
    )
    assert code == 0
    assert "status=found" in err
    path = tmp_path / "found.nsqs"
    path.write_text(out)
    code, out, _ = run(capsys, "classify", str(path))
    assert out.splitlines()[0] == "uniform M=30 mu=2"


def test_search_rotational_base_file(capsys, tmp_path):
    spec = catalog_get("ro20").payload
    from nsqs import alternative_splits, block_points, rotational_spec

    stripped = rotational_spec(
        spec.p,
        [alternative_splits(block_points(b))[0] for b in spec.base_blocks],
        spec.multipliers,
    )
    base = tmp_path / "ro20.base"
    base.write_text(serialize_base_spec(stripped))
    code, out, err = run(
        capsys, "search", str(base), "--target", "complete-uniform"
    )
    assert code == 0
    assert out.startswith("nsqs-base p=19")
    found = tmp_path / "found.base"
    found.write_text(out)
    code, out, _ = run(capsys, "expand", "--base", str(found))
    assert code == 0
    assert out.startswith("nsqs v=20 blocks=285")


def test_cosets(capsys):
    code, out, _ = run(capsys, "cosets", "--mod", "7")
    assert code == 0
    assert out == "{1, 2, 4}\n{3, 6, 5}\n"


def test_usage_error_exit_code():
    with pytest.raises(SystemExit) as exc:
        main(["no-such-command"])
    assert exc.value.code == 2


def test_stdin_default(capsys, monkeypatch):
    import io

    text = serialize_design(catalog_get("sqs10").design())
    monkeypatch.setattr("sys.stdin", io.StringIO(text))
    code, out, _ = run(capsys, "classify")
    assert code == 0
    assert out.splitlines()[0] == "uniform M=30 mu=2"
