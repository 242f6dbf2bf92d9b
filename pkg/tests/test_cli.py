import json
from fractions import Fraction

import pytest

from symquartic.cli import (
    CHOI_LAM_P_VECTOR,
    FormFileError,
    bundled_choi_lam,
    load_form_file,
    main,
    parse_rational,
)
from symquartic.symfunc import LIMIT


def write_form(tmp_path, data, name="form.form"):
    path = tmp_path / name
    path.write_text(json.dumps(data))
    return str(path)


def p_form(coeffs, scope=4, **extra):
    data = {
        "description": "test form",
        "degree": 4,
        "basis": "p",
        "scope": scope,
        "coefficients": coeffs,
    }
    data.update(extra)
    return data


class TestParsing:
    def test_parse_rational_variants(self):
        assert parse_rational("3/4") == Fraction(3, 4)
        assert parse_rational("-2") == Fraction(-2)
        assert parse_rational("−5/8") == Fraction(-5, 8)
        with pytest.raises(FormFileError):
            parse_rational("1.5.2")

    def test_unknown_field_rejected(self, tmp_path):
        path = write_form(tmp_path, p_form({"4": "1"}, extra_field=1))
        with pytest.raises(FormFileError):
            load_form_file(path)
        assert main(["check", "nonneg", "--n", "4", path]) == 2

    def test_bad_rational_rejected(self, tmp_path):
        path = write_form(tmp_path, p_form({"4": "one"}))
        assert main(["check", "nonneg", "--n", "4", path]) == 2

    def test_bad_partition_key_rejected(self, tmp_path):
        for key in ("1,3", "2,2,1", "0", "a"):
            path = write_form(tmp_path, p_form({key: "1"}))
            assert main(["check", "nonneg", "--n", "4", path]) == 2

    def test_bad_monomial_entry_rejected(self, tmp_path):
        base = {
            "description": "bad",
            "degree": 4,
            "basis": "monomial",
            "scope": 4,
            "monomials": [{"exponents": [2, 2, 0, 0]}],
        }
        path = write_form(tmp_path, base)
        assert main(["check", "nonneg", "--n", "4", path]) == 2
        base["monomials"] = [
            {"exponents": [2, 1, 0, 0], "coefficient": "1"}  # degree mismatch
        ]
        path = write_form(tmp_path, base)
        assert main(["check", "nonneg", "--n", "4", path]) == 2

    def test_limit_scope_round_trip(self, tmp_path):
        path = write_form(tmp_path, p_form({"2,2": "1"}, scope="limit"))
        ff = load_form_file(path)
        assert ff.scope is LIMIT


class TestCheckCommand:
    def test_in_and_out_exit_codes(self, tmp_path):
        inside = write_form(tmp_path, p_form({"4": "1", "2,2": "-1"}), "in.form")
        outside = write_form(tmp_path, p_form({"2,2": "1", "4": "-1"}), "out.form")
        assert main(["check", "nonneg", "--n", "4", inside]) == 0
        assert main(["check", "sos", "--n", "4", inside]) == 0
        assert main(["check", "nonneg", "--n", "4", outside]) == 1
        assert main(["check", "sos", "--n", "4", outside]) == 1

    def test_scope_override(self, tmp_path):
        path = write_form(tmp_path, p_form({"4": "1"}, scope="limit"))
        assert main(["check", "nonneg", "--limit", path]) == 0
        assert main(["check", "nonneg", "--n", "6", path]) == 0

    def test_bundled_nonneg_not_sos_form(self):
        from importlib.resources import files

        path = str(files("symquartic").joinpath("data/choi_lam.form"))
        assert main(["check", "nonneg", "--n", "4", path]) == 0
        assert main(["check", "sos", "--n", "4", path]) == 1

    def test_bundled_form_p_vector(self):
        from symquartic.cli import form_to_p

        f = form_to_p(bundled_choi_lam(), 4)
        assert f.coeffs == CHOI_LAM_P_VECTOR


class TestConvertCommand:
    def test_round_trip_p_to_m_to_p(self, tmp_path, capsys):
        src = write_form(tmp_path, p_form({"4": "1", "3,1": "-1/2", "2,1,1": "2"}))
        assert main(["convert", "--to", "m", "--n", "4", src]) == 0
        m_text = capsys.readouterr().out
        m_path = tmp_path / "m.form"
        m_data = json.loads(m_text)
        m_data["description"] = "round trip"
        m_path.write_text(json.dumps(m_data))
        assert main(["convert", "--to", "p", "--n", "4", str(m_path)]) == 0
        p_data = json.loads(capsys.readouterr().out)
        assert p_data["coefficients"] == {"4": "1", "3,1": "-1/2", "2,1,1": "2"}

    def test_deterministic_output(self, tmp_path, capsys):
        src = write_form(tmp_path, p_form({"4": "1", "2,2": "-1"}))
        outputs = []
        for _ in range(2):
            assert main(["convert", "--to", "m", "--n", "4", src]) == 0
            outputs.append(capsys.readouterr().out)
        assert outputs[0] == outputs[1]
        assert json.loads(outputs[0])["coefficients"] == {"4": "3/4", "2,2": "-3/4"}

    def test_limit_conversion_requires_limit_existence(self, tmp_path):
        src = write_form(tmp_path, p_form({"4": "1"}, scope="limit"))
        assert main(["convert", "--to", "m", "--limit", src]) == 0


class TestPlotdataCommand:
    EX = {
        "description": "boundary family member",
        "degree": 4,
        "basis": "p",
        "scope": "limit",
        "coefficients": {
            "4": "1",
            "3,1": "-13/5",
            "2,1,1": "179/100",
            "1,1,1,1": "-51/400",
        },
    }

    def test_disc_values(self, tmp_path, capsys):
        path = write_form(tmp_path, self.EX)
        assert main(["plotdata", "--what", "disc", "--samples", "4", "--limit", path]) == 0
        rows = [
            line.split("\t")
            for line in capsys.readouterr().out.strip().splitlines()
            if not line.startswith("#")
        ]
        assert len(rows) == 5
        assert Fraction(rows[0][1]) == 0  # alpha = 0
        assert Fraction(rows[-1][1]) == 0  # alpha = 1

    def test_disc_of_square_is_zero(self, tmp_path, capsys):
        path = write_form(tmp_path, p_form({"2,2": "1"}, scope="limit"))
        assert main(["plotdata", "--what", "disc", "--samples", "8", "--limit", path]) == 0
        rows = [
            line.split("\t")
            for line in capsys.readouterr().out.strip().splitlines()
            if not line.startswith("#")
        ]
        assert all(Fraction(r[1]) == 0 for r in rows)

    def test_minval_endpoint(self, tmp_path, capsys):
        path = write_form(tmp_path, p_form({"2,2": "1"}, scope="limit"))
        assert main(["plotdata", "--what", "minval", "--samples", "4", "--limit", path]) == 0
        rows = [
            line.split("\t")
            for line in capsys.readouterr().out.strip().splitlines()
            if not line.startswith("#")
        ]
        # the alpha-section of p_(2,2) at y = 1 is (alpha x^2 + (1-alpha))^2,
        # whose minimum over x is (1-alpha)^2, attained at x = 0
        expected = ["1", "9/16", "1/4", "1/16", "0"]
        assert [r[1] for r in rows] == expected
        assert rows[0][0] == "0"

    def test_zero_samples_rejected(self, tmp_path):
        path = write_form(tmp_path, self.EX)
        assert main(["plotdata", "--what", "disc", "--samples", "0", "--limit", path]) == 2


class TestReproCommands:
    @pytest.mark.parametrize(
        "name",
        ["choi-lam", "example-6-10", "q-blocks", "disc-factorization"],
    )
    def test_quick_repros_pass(self, name):
        assert main(["repro", name]) == 0
