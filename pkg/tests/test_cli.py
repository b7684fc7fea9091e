import json
import subprocess
import sys

import numpy as np
import pytest

from coherence_bounds.bounds import BoundReport
from coherence_bounds.cli import (
    EXIT_INVARIANT,
    EXIT_IO,
    EXIT_OK,
    EXIT_PARSE,
    EXIT_VALIDATION,
    main,
    parse_basis,
)
from coherence_bounds.errors import ParseError
from coherence_bounds.states import save_state_file, werner

FIG1_HEADER = "p,lb_berta_coh,lb_pati_coh,lb_adabi_coh"


def run(argv):
    return main(argv)


class TestParseBasis:
    def test_pauli_selectors(self):
        for sel in ("sigma1", "sigma2", "sigma3"):
            assert parse_basis(sel).label == sel

    def test_computational_selector(self):
        assert parse_basis("computational").dim == 2

    def test_bloch_selector(self):
        basis = parse_basis("bloch:1.5707963:0")
        gram = basis.vectors.conj().T @ basis.vectors
        assert np.max(np.abs(gram - np.eye(2))) < 1e-12

    def test_rejects_unknown_selectors(self):
        for sel in ("sigma4", "hadamard", "bloch:1", "bloch:a:b", ""):
            with pytest.raises(ParseError):
                parse_basis(sel)


class TestFigure:
    def test_figure1_shape_and_header(self, tmp_path):
        out = tmp_path / "fig1.csv"
        assert run(["figure", "1", "--out", str(out)]) == EXIT_OK
        lines = out.read_text().splitlines()
        assert lines[0] == FIG1_HEADER
        assert len(lines) == 102
        ps = [float(line.split(",")[0]) for line in lines[1:]]
        assert ps[0] == 0.0 and ps[-1] == 1.0
        assert ps == pytest.approx(list(np.linspace(0, 1, 101)), abs=1e-12)

    def test_figure_output_is_byte_identical_across_runs(self, tmp_path):
        a, b = tmp_path / "a.csv", tmp_path / "b.csv"
        assert run(["figure", "4", "--out", str(a)]) == EXIT_OK
        assert run(["figure", "4", "--out", str(b)]) == EXIT_OK
        assert a.read_bytes() == b.read_bytes()

    def test_figure2_endpoint_row(self, tmp_path):
        out = tmp_path / "fig2.csv"
        assert run(["figure", "2", "--out", str(out)]) == EXIT_OK
        lines = out.read_text().splitlines()
        assert lines[0] == "p,ub_purity,ub_holevo,lhs_coherence"
        last = lines[-1].split(",")
        assert float(last[0]) == 1.0
        assert float(last[1]) == pytest.approx(4.0, abs=1e-9)

    def test_steps_override(self, tmp_path):
        out = tmp_path / "f.csv"
        assert run(["figure", "3", "--out", str(out), "--steps", "11"]) == EXIT_OK
        assert len(out.read_text().splitlines()) == 12

    def test_single_step_grid_rejected(self, tmp_path):
        out = tmp_path / "f.csv"
        assert run(["figure", "1", "--out", str(out), "--steps", "1"]) == EXIT_VALIDATION
        assert not out.exists()

    def test_inverted_grid_rejected(self, tmp_path):
        out = tmp_path / "f.csv"
        rc = run(["figure", "1", "--out", str(out), "--pmin", "0.8", "--pmax", "0.2"])
        assert rc == EXIT_VALIDATION

    def test_unknown_figure_number_is_usage_error(self, tmp_path):
        with pytest.raises(SystemExit) as exc:
            run(["figure", "5", "--out", str(tmp_path / "f.csv")])
        assert exc.value.code == EXIT_PARSE

    def test_unwritable_path(self):
        rc = run(["figure", "1", "--out", "/nonexistent-dir/f.csv"])
        assert rc == EXIT_IO


class TestEval:
    @pytest.fixture()
    def bell_file(self, tmp_path):
        path = tmp_path / "bell.txt"
        save_state_file(werner(1.0), path)
        return str(path)

    def test_bell_state_report(self, bell_file, capsys):
        assert run(["eval", "--state", bell_file, "--x", "sigma1", "--z", "sigma3"]) == EXIT_OK
        payload = json.loads(capsys.readouterr().out)
        assert set(payload) == set(BoundReport.__dataclass_fields__)
        assert payload["lhs_eur"] == pytest.approx(0.0, abs=1e-9)
        assert payload["eur_berta"] == pytest.approx(0.0, abs=1e-9)
        assert payload["q_mu"] == pytest.approx(1.0, abs=1e-9)
        assert payload["ub_purity"] == pytest.approx(4.0, abs=1e-9)

    def test_bloch_selectors_accepted(self, bell_file):
        rc = run(["eval", "--state", bell_file, "--x", "bloch:1.5707963267948966:0", "--z", "sigma3"])
        assert rc == EXIT_OK

    def test_missing_file(self, tmp_path):
        rc = run(["eval", "--state", str(tmp_path / "gone.txt"), "--x", "sigma1", "--z", "sigma3"])
        assert rc == EXIT_IO

    def test_malformed_file(self, tmp_path, capsys):
        path = tmp_path / "bad.txt"
        path.write_text("dims: 2 2\n0 0 what 0\n")
        rc = run(["eval", "--state", str(path), "--x", "sigma1", "--z", "sigma3"])
        assert rc == EXIT_PARSE
        assert "line 2" in capsys.readouterr().err

    def test_invalid_state_names_broken_invariant(self, tmp_path, capsys):
        path = tmp_path / "trace.txt"
        path.write_text("dims: 2 1\n0 0 0.5 0\n1 1 0.4 0\n")
        rc = run(["eval", "--state", str(path), "--x", "sigma1", "--z", "sigma3"])
        assert rc == EXIT_VALIDATION
        assert "trace" in capsys.readouterr().err

    def test_bad_selector(self, bell_file):
        rc = run(["eval", "--state", bell_file, "--x", "sigma9", "--z", "sigma3"])
        assert rc == EXIT_PARSE

    def test_unsupported_side_a_dimension(self, tmp_path):
        path = tmp_path / "qutrit.txt"
        path.write_text("dims: 3 1\n0 0 0.4 0\n1 1 0.3 0\n2 2 0.3 0\n")
        rc = run(["eval", "--state", str(path), "--x", "sigma1", "--z", "sigma3"])
        assert rc == EXIT_VALIDATION


class TestCheck:
    def test_small_corpus_passes(self, capsys):
        assert run(["check", "--seed", "3", "--cases", "5"]) == EXIT_OK
        out = capsys.readouterr().out
        for name in ("linalg", "entropy", "bounds"):
            assert f"{name}" in out
        assert out.count("passed") >= 7

    def test_single_case(self, capsys):
        assert run(["check", "--seed", "9", "--cases", "1"]) == EXIT_OK
        assert "1/1" in capsys.readouterr().out

    def test_corruption_reports_margin_and_fails(self, capsys):
        rc = run(["check", "--seed", "3", "--cases", "4", "--corrupt", "coherence"])
        assert rc == EXIT_INVARIANT
        err = capsys.readouterr().err
        assert "VIOLATION" in err
        assert "margin" in err

    def test_verdicts_deterministic(self, capsys):
        run(["check", "--seed", "11", "--cases", "3"])
        first = capsys.readouterr().out
        run(["check", "--seed", "11", "--cases", "3"])
        assert capsys.readouterr().out == first

    def test_reference_corpus_passes(self, capsys):
        # the default seed over a large corpus: slow but pins the advertised
        # contract that stock invariants hold at scale
        assert run(["check", "--seed", "42", "--cases", "1000"]) == EXIT_OK
        assert "1000" in capsys.readouterr().out


def test_installed_entry_point_runs():
    proc = subprocess.run(
        [sys.executable, "-m", "coherence_bounds.cli", "check", "--seed", "2", "--cases", "2"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert "passed" in proc.stdout
