"""Tests for the command-line interface: flags, JSON, exit codes."""

import json

import pytest

from zeuthen.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def run_json(capsys, *argv):
    code, out, err = run(capsys, *argv)
    assert code == 0, err
    return json.loads(out)


def test_count_one_line(capsys):
    doc = run_json(capsys, "count", "--degree", "2", "--edges", "h")
    assert doc["schema"] == "tz/1"
    assert doc["degree"] == 2
    assert doc["edges"] == ["h"]
    assert doc["total_complex"] == 2
    assert doc["known_total"] == 2
    assert doc["unverified"] is False
    assert "total_real" not in doc
    assert "selections" not in doc


def test_count_theorem_signs(capsys):
    doc = run_json(capsys, "count", "--degree", "3", "--edges", "h,v", "--signs", "theorem")
    assert doc["total_complex"] == 16
    assert doc["total_real"] == 16
    assert doc["sign_sequence"].startswith("-+,++")


def test_count_three_lines_is_unverified(capsys):
    doc = run_json(capsys, "count", "--degree", "2", "--edges", "h,v,b")
    assert doc["total_complex"] == 4
    assert doc["known_total"] is None
    assert doc["unverified"] is True


def test_count_per_path_breakdown_sums_to_totals(capsys):
    doc = run_json(
        capsys,
        "count", "--degree", "4", "--edges", "h,v", "--signs", "theorem", "--per-path",
    )
    assert doc["total_complex"] == sum(s["mu"] for s in doc["selections"])
    assert doc["total_real"] == sum(s["mu_real"] for s in doc["selections"])
    assert all(len(s["marked"]) == 2 for s in doc["selections"])


def test_count_literal_signs(capsys):
    doc = run_json(
        capsys, "count", "--degree", "2", "--edges", "h", "--signs", "++,++,++,++"
    )
    assert doc["total_real"] == 2
    assert doc["sign_sequence"] == "++,++,++,++"


def test_count_ronga_vertical(capsys):
    doc = run_json(capsys, "count", "--degree", "4", "--edges", "v", "--signs", "ronga")
    assert doc["total_real"] == 6
    assert doc["sign_sequence"].startswith("++,-+,++")


def test_count_json_round_trips(capsys):
    code, out, _ = run(capsys, "count", "--degree", "3", "--edges", "h,v",
                       "--signs", "theorem", "--per-path")
    assert code == 0
    doc = json.loads(out)
    assert json.loads(json.dumps(doc)) == doc


def test_count_is_byte_identical_across_runs(capsys):
    _, first, _ = run(capsys, "count", "--degree", "5", "--edges", "h,v", "--signs", "theorem")
    _, second, _ = run(capsys, "count", "--degree", "5", "--edges", "h,v", "--signs", "theorem")
    assert first == second


@pytest.mark.parametrize(
    "argv",
    [
        ("count", "--degree", "2", "--edges", "z"),
        ("count", "--degree", "2", "--edges", "h,h"),
        ("count", "--degree", "1", "--edges", "h"),
        ("count", "--degree", "2", "--edges", "h", "--signs", "xx"),
        ("count", "--degree", "2", "--edges", "h", "--signs", "++,++"),  # bad length
        ("count", "--degree", "2", "--edges", "b", "--signs", "ronga"),
        ("count", "--degree", "2", "--edges", "h,v", "--signs", "ronga"),
        ("count", "--degree", "2", "--edges", "h", "--signs", "theorem"),
    ],
)
def test_count_argument_errors_exit_2(capsys, argv):
    code, out, err = run(capsys, *argv)
    assert code == 2
    assert err.strip()


def test_internal_inconsistency_exits_1(capsys, monkeypatch):
    import zeuthen.cli
    from zeuthen.signs import PhaseDispatchError

    def boom(*args, **kwargs):
        raise PhaseDispatchError("forced phase missing")

    monkeypatch.setattr(zeuthen.cli, "real_count", boom)
    code, _, err = run(capsys, "count", "--degree", "2", "--edges", "h",
                       "--signs", "ronga")
    assert code == 1
    assert "inconsistency" in err


def test_render_ascii_to_stdout(capsys):
    code, out, err = run(
        capsys, "render", "--degree", "2", "--marked", "1,1", "--format", "ascii"
    )
    assert code == 0
    assert out.splitlines()[:5] == ["o", "|", "o x", "|", "o-o-o"]


def test_render_svg_to_file(tmp_path, capsys):
    target = tmp_path / "picture.svg"
    code, out, _ = run(
        capsys,
        "render", "--degree", "4", "--marked", "2,2;0,2", "--out", str(target),
    )
    assert code == 0
    assert out == ""
    assert target.read_text().startswith("<svg ")


@pytest.mark.parametrize("marked", ["5,5", "1;1", "a,b", "1,1;2,2"])
def test_render_bad_marked_points_exit_2(capsys, marked):
    code, _, err = run(capsys, "render", "--degree", "2", "--marked", marked)
    assert code == 2
    assert err.strip()


def test_verify_table_small(capsys):
    code, out, err = run(capsys, "verify", "--max-degree", "2")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0].startswith("degree,")
    assert lines[1] == "2,2,2,4,4,4,yes"


def test_verify_table_to_degree_5(capsys):
    code, out, _ = run(capsys, "verify", "--max-degree", "5")
    assert code == 0
    assert out.strip().splitlines()[-1] == "5,8,8,64,64,64,yes"


def test_verify_full_default_range(capsys):
    code, out, err = run(capsys, "verify", "--max-degree", "8")
    assert code == 0
    assert err == ""
    lines = out.strip().splitlines()
    assert len(lines) == 8  # header plus degrees 2..8
    assert lines[-1] == "8,14,14,196,196,196,yes"
