import io
import json

import pytest

from tests.helpers import GOLDEN
from toricbrauer.cli import CliConfig, ReportModel, parse_report, run
from toricbrauer.cli.formatting import format_report, group_notation
from toricbrauer.config import settings
from toricbrauer.main import main
from toricbrauer.toric import cech as cech_module

P2_REPORT = """Units rank 0
Cl = Z
Pic = Z
H2(K/X) = 0
B(X~) = 0
H2(X) = 0
"""

TORUS2_REPORT = """Units rank 2
Cl = 0
Pic = 0
H2(K/X) = 0
B(X~) = Q/Z
H2(X) = Q/Z
"""

QUOTIENT_REPORT = """Units rank 0
Cl = Z/2
Pic = 0
H2(K/X) = 0
B(X~) = 0
H2(X) = 0
"""

P2_STRUCTURED = """{
  "units_rank": 0,
  "class_group": {
    "rank": 1,
    "torsion": []
  },
  "picard": {
    "rank": 1,
    "torsion": []
  },
  "relative_brauer": {
    "rank": 0,
    "torsion": []
  },
  "desing_brauer": {
    "qz": 0,
    "torsion": []
  },
  "h2": {
    "qz": 0,
    "rank": 0,
    "torsion": []
  }
}
"""

QUOTIENT_STRUCTURED = """{
  "units_rank": 0,
  "class_group": {
    "rank": 0,
    "torsion": [
      2
    ]
  },
  "picard": {
    "rank": 0,
    "torsion": []
  },
  "relative_brauer": {
    "rank": 0,
    "torsion": []
  },
  "desing_brauer": {
    "qz": 0,
    "torsion": []
  },
  "h2": {
    "qz": 0,
    "rank": 0,
    "torsion": []
  }
}
"""

TORUS2_STRUCTURED = """{
  "units_rank": 2,
  "class_group": {
    "rank": 0,
    "torsion": []
  },
  "picard": {
    "rank": 0,
    "torsion": []
  },
  "relative_brauer": {
    "rank": 0,
    "torsion": []
  },
  "desing_brauer": {
    "qz": 1,
    "torsion": []
  },
  "h2": {
    "qz": 1,
    "rank": 0,
    "torsion": []
  }
}
"""


def _generate(capsys, *args) -> str:
    assert main(["gen", *args]) == 0
    return capsys.readouterr().out


def _pipe(monkeypatch, capsys, text: str, *args) -> tuple[int, str, str]:
    monkeypatch.setattr("sys.stdin", io.StringIO(text))
    code = main(list(args))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


# =============================================================================
# Notation
# =============================================================================

@pytest.mark.parametrize(
    "args, expected",
    [
        ((0, (), 0), "0"),
        ((1, (), 0), "Z"),
        ((2, (2, 4), 0), "Z^2 (+) Z/2 (+) Z/4"),
        ((0, (3,), 1), "Z/3 (+) Q/Z"),
        ((0, (), 3), "(Q/Z)^3"),
    ],
)
def test_group_notation(args, expected):
    assert group_notation(*args) == expected


# =============================================================================
# compute / gen / validate
# =============================================================================

@pytest.mark.parametrize(
    "gen_args, expected",
    [
        (["projective", "2"], P2_REPORT),
        (["torus", "2"], TORUS2_REPORT),
        (["quotient_cone", "1", "2"], QUOTIENT_REPORT),
    ],
)
def test_gen_then_compute(monkeypatch, capsys, gen_args, expected):
    fan_text = _generate(capsys, *gen_args)
    code, out, _ = _pipe(monkeypatch, capsys, fan_text, "compute", "-")
    assert code == 0
    assert out == expected


def test_compute_file(tmp_path, capsys):
    path = tmp_path / "p2.json"
    path.write_text('{"rank": 2, "rays": [[1,0],[0,1],[-1,-1]], "max_cones": [[0,1],[1,2],[0,2]]}')
    assert main(["compute", str(path)]) == 0
    assert capsys.readouterr().out == P2_REPORT


@pytest.mark.parametrize(
    "gen_args, golden, expected",
    [
        (["projective", "2"], "P2", P2_STRUCTURED),
        (["torus", "2"], "torus2", TORUS2_STRUCTURED),
        (["quotient_cone", "1", "2"], "A2/mu2", QUOTIENT_STRUCTURED),
    ],
)
def test_structured_output(monkeypatch, capsys, gen_args, golden, expected):
    monkeypatch.setattr(settings, "json_indent", 2)
    fan_text = _generate(capsys, *gen_args)
    code, out, _ = _pipe(monkeypatch, capsys, fan_text, "compute", "-", "--format", "structured")
    assert code == 0
    assert out == expected
    assert parse_report(out) == GOLDEN[golden][1]


def test_groups_filter(monkeypatch, capsys):
    fan_text = _generate(capsys, "quotient_cone", "1", "2")
    code, out, _ = _pipe(monkeypatch, capsys, fan_text, "compute", "-", "--groups", "h2,cl")
    assert code == 0
    assert out == "Cl = Z/2\nH2(X) = 0\n"

    code, out, _ = _pipe(monkeypatch, capsys, fan_text, "compute", "-", "--groups", "pic", "--format", "structured")
    assert json.loads(out) == {"picard": {"rank": 0, "torsion": []}}


def test_gen_then_validate(monkeypatch, capsys):
    fan_text = _generate(capsys, "hirzebruch", "2")
    code, out, _ = _pipe(monkeypatch, capsys, fan_text, "validate", "-")
    assert code == 0
    assert out == "ok: no findings\n"


def test_validate_reports_findings(monkeypatch, capsys):
    text = '{"rank": 2, "rays": [[2, 0], [0, 1]], "max_cones": [[0, 1], [0]]}'
    code, out, _ = _pipe(monkeypatch, capsys, text, "validate", "-")
    assert code == 2
    assert "violation: non_primitive_ray" in out
    assert "violation: non_maximal_cone" in out

    code, out, _ = _pipe(monkeypatch, capsys, text, "validate", "-", "--normalize-rays")
    assert code == 2
    assert "non_primitive_ray" not in out


def test_validate_lists_repeated_indices_with_other_violations(monkeypatch, capsys):
    text = '{"rank": 2, "rays": [[1, 0], [0, 1], [3, 0]], "max_cones": [[0, 1, 0], [2]]}'
    code, out, err = _pipe(monkeypatch, capsys, text, "validate", "-")
    assert code == 2
    assert err == ""
    assert out == (
        "violation: duplicate_index: cone 0 [0, 1, 0] lists ray(s) [0] more than once\n"
        "violation: non_primitive_ray: ray 2 = [3, 0] is not primitive (gcd 3)\n"
        "violation: duplicate_ray: ray 2 spans the same ray as ray 0\n"
    )


def test_normalize_rays_flag(monkeypatch, capsys):
    text = '{"rank": 2, "rays": [[2, 0], [0, 1]], "max_cones": [[0, 1]]}'
    code, _, err = _pipe(monkeypatch, capsys, text, "compute", "-")
    assert code == 2
    assert err.startswith("error: invalid fan:")
    code, out, _ = _pipe(monkeypatch, capsys, text, "compute", "-", "--normalize-rays")
    assert code == 0
    assert out.startswith("Units rank 0\nCl = 0\n")


# =============================================================================
# Exit codes
# =============================================================================

@pytest.mark.parametrize(
    "argv",
    [
        [],
        ["frobnicate"],
        ["gen", "grassmannian"],
        ["gen", "projective", "0"],
        ["gen", "projective", "two"],
        ["compute", "/nonexistent/fan.json"],
        ["compute", "x.json", "--groups", "everything"],
        ["compute", "x.json", "--groups", ","],
    ],
)
def test_usage_errors_exit_one(argv, capsys):
    assert main(argv) == 1
    assert capsys.readouterr().err.startswith("error:")


def test_malformed_json_exits_one(monkeypatch, capsys):
    code, out, err = _pipe(monkeypatch, capsys, "{rank: 2", "compute", "-")
    assert code == 1
    assert out == ""
    assert "malformed JSON" in err


def test_invalid_fan_exits_two(monkeypatch, capsys):
    text = '{"rank": 2, "rays": [[1, 0], [0, 1]], "max_cones": [[0, 1], [0]]}'
    code, out, _ = _pipe(monkeypatch, capsys, text, "compute", "-")
    assert code == 2
    assert out == ""


def test_inconsistency_exits_three(monkeypatch, capsys):
    original = cech_module.restriction_matrix

    def doubled(big, small):
        R = original(big, small)
        return 2 * R if big.cone.ray_indices == (0, 1) else R

    fan_text = _generate(capsys, "projective", "2")
    monkeypatch.setattr(cech_module, "restriction_matrix", doubled)
    code, out, err = _pipe(monkeypatch, capsys, fan_text, "compute", "-")
    assert code == 3
    assert out == ""
    assert "internal inconsistency" in err


# =============================================================================
# Library surface of the CLI
# =============================================================================

def test_run_with_explicit_streams(tmp_path):
    path = tmp_path / "a2.json"
    path.write_text('{"rank": 2, "rays": [[1, 0], [0, 1]], "max_cones": [[0, 1]]}')
    out, err = io.StringIO(), io.StringIO()
    config = CliConfig(command="compute", input_path=str(path), groups="units")
    assert run(config, out=out, err=err) == 0
    assert out.getvalue() == "Units rank 0\n"
    assert err.getvalue() == ""


def test_cli_config_validation():
    with pytest.raises(ValueError):
        CliConfig(command="gen")
    with pytest.raises(ValueError):
        CliConfig(command="compute")
    assert CliConfig(command="compute", input_path="-", groups="all").groups == CliConfig(command="compute", input_path="-").groups
    assert CliConfig(command="compute", input_path="-", groups="h2, units").groups == ("units", "h2")


@pytest.mark.parametrize("name", sorted(GOLDEN))
def test_structured_report_parses_back(name):
    report = GOLDEN[name][1]
    assert parse_report(ReportModel.from_report(report).to_json()) == report


def test_partial_report_does_not_parse_back():
    partial = ReportModel.from_report(GOLDEN["P2"][1], groups=("units",)).to_json()
    with pytest.raises(ValueError):
        parse_report(partial)


def test_text_report_respects_order():
    report = GOLDEN["torus3"][1]
    assert format_report(report, ("h2", "units")) == "Units rank 3\nH2(X) = (Q/Z)^3"
