"""
Tester for kommandolinjen.
"""

import json

import pytest
from ctcodes.cli import EXIT_CLAIM_FAILURE, EXIT_OK, EXIT_USAGE, build_parser, main
from ctcodes.gf2core import BitMatrix


class TestParser:
    """Test klasse for argumentparseren."""

    def test_requires_command(self):
        """Test at en underkommando kreves."""
        with pytest.raises(SystemExit):
            build_parser().parse_args([])

    def test_defaults(self):
        """Test standardverdier."""
        args = build_parser().parse_args(["verify-all"])
        assert args.m == 4
        assert args.pair == "all"
        assert args.format is None
        assert args.threads == 1
        assert not args.heavy
        assert args.log_level == "WARNING"

    def test_exit_codes(self):
        """Test avslutningskodene."""
        assert (EXIT_OK, EXIT_CLAIM_FAILURE, EXIT_USAGE) == (0, 1, 2)


class TestConstruct:
    """Test klasse for construct."""

    def test_text_output(self, capsys):
        """Test matrise og sammendrag på standard ut."""
        assert main(["construct", "-m", "4", "--pair", "0,1"]) == EXIT_OK
        out = capsys.readouterr().out
        assert out.splitlines()[0] == "5 15"
        assert "C{0,1}: [15,10,3]" in out

    def test_json_output(self, capsys):
        """Test JSON-sammendrag for alle par."""
        assert main(["construct", "--format", "json"]) == EXIT_OK
        data = json.loads(capsys.readouterr().out)
        assert len(data) == 6
        summaries = {item["pair"]: item["summary"] for item in data}
        assert summaries["1,3"] == "[15,11,3] (Hamming)"
        assert summaries["0,2"] == "[15,10,4]"

    def test_out_directory(self, tmp_path, capsys):
        """Test matrisefiler i utdatakatalogen."""
        assert main(["construct", "--pair", "1,2", "--extended", "--out", str(tmp_path)]) == EXIT_OK
        matrix = BitMatrix.from_text((tmp_path / "C12ext_m4.txt").read_text())
        assert matrix.shape == (6, 16)
        assert "C{1,2}*: [16,10,4]" in capsys.readouterr().out

    def test_unsupported_format(self, capsys):
        """Test at feil format gir bruksfeil."""
        assert main(["construct", "--format", "dot"]) == EXIT_USAGE
        assert "ctcodes:" in capsys.readouterr().err


class TestValidation:
    """Test klasse for feil i argumentene."""

    def test_odd_m(self, capsys):
        """Test odde m."""
        assert main(["construct", "-m", "5"]) == EXIT_USAGE
        assert "partall" in capsys.readouterr().err

    def test_invalid_pair(self, capsys):
        """Test ugyldig par."""
        assert main(["cosets", "--pair", "7,1"]) == EXIT_USAGE
        assert capsys.readouterr().err

    def test_gl_check_requires_m4(self):
        """Test at GL-sjekken krever m = 4."""
        assert main(["verify-all", "-m", "6", "--gl-check"]) == EXIT_USAGE

    def test_seed_is_accepted(self, monkeypatch, capsys):
        """Test at CT_CODES_SEED ikke påvirker resultatet."""
        monkeypatch.setenv("CT_CODES_SEED", "42")
        assert main(["--log-level", "DEBUG", "construct", "--pair", "0,3"]) == EXIT_OK
        assert "C{0,3}: [15,10,3]" in capsys.readouterr().out


class TestCosetsAndGraph:
    """Test klasse for cosets og graph."""

    def test_cosets_json(self, capsys):
        """Test sideklasseprofil som JSON."""
        assert main(["cosets", "--pair", "1,2"]) == EXIT_OK
        data = json.loads(capsys.readouterr().out)
        assert data["rho"] == 3
        assert data["intersection_array"]["text"] == "(15, 8, 1; 1, 8, 15)"

    def test_cosets_text(self, capsys):
        """Test tekstformen."""
        assert main(["cosets", "--pair", "0,1", "--extended", "--format", "text"]) == EXIT_OK
        assert "ikke regulær" in capsys.readouterr().out

    def test_cosets_to_file(self, tmp_path):
        """Test skriving til fil."""
        target = tmp_path / "profil.json"
        assert main(["cosets", "--pair", "0,2", "--out", str(target)]) == EXIT_OK
        assert json.loads(target.read_text())["intersection_array"]["text"] == "(15, 14, 1; 1, 14, 15)"

    def test_graph_dot(self, capsys):
        """Test DOT på standard ut."""
        assert main(["graph", "--pair", "0,1"]) == EXIT_OK
        assert capsys.readouterr().out.startswith("graph C01 {")

    def test_graph_json(self, capsys):
        """Test klassifisering som JSON."""
        assert main(["graph", "--pair", "1,2", "--format", "json"]) == EXIT_OK
        data = json.loads(capsys.readouterr().out)
        assert data["cover"] == {"quotient_vertices": 16, "fibre_size": 2, "c2": 8}
        assert data["q_polynomial"] is True

    def test_graph_out_directory(self, tmp_path, capsys):
        """Test eksport og klassifisering i katalog."""
        assert main(["graph", "--pair", "1,2", "--extended", "--format", "adjlist",
                     "--out", str(tmp_path)]) == EXIT_OK
        assert (tmp_path / "C12ext_m4.adjlist").exists()
        classification = json.loads((tmp_path / "C12ext_m4.classification.json").read_text())
        assert classification["hadamard_order"] == 16
        assert json.loads(capsys.readouterr().out)["vertex_count"] == 64


class TestGroup:
    """Test klasse for group."""

    def test_group_m4(self, capsys):
        """Test lukning og baner for m = 4."""
        assert main(["group", "--pair", "1,2"]) == EXIT_OK
        data = json.loads(capsys.readouterr().out)
        assert data["order"] == 720
        assert data["extended_order"] == 11520
        assert data["orbits"]["count"] == 4
        assert data["extended_orbits"]["count"] == 5

    def test_dump(self, tmp_path, capsys):
        """Test heksdump av lukningen."""
        target = tmp_path / "sp4.hex"
        assert main(["group", "--pair", "0,1", "--dump", str(target)]) == EXIT_OK
        assert len(target.read_text().splitlines()) == 720
        assert json.loads(capsys.readouterr().out)["extended_orbits"] is None

    def test_dump_requires_closure(self, tmp_path):
        """Test at dump uten lukning gir bruksfeil."""
        assert main(["group", "-m", "6", "--dump", str(tmp_path / "x.hex")]) == EXIT_USAGE

    def test_text_format_rejected(self):
        """Test at group bare støtter JSON."""
        assert main(["group", "--format", "text"]) == EXIT_USAGE


class TestVerifyAll:
    """Test klasse for verify-all."""

    def test_skip_group(self, capsys):
        """Test kjøring uten gruppepåstander."""
        assert main(["verify-all", "--skip-group"]) == EXIT_OK
        data = json.loads(capsys.readouterr().out)
        assert data["failed"] == 0
        assert data["skipped"] > 0

    def test_text_report(self, tmp_path):
        """Test tekstrapport til fil."""
        target = tmp_path / "rapport.txt"
        assert main(["verify-all", "--skip-group", "--format", "text", "--out", str(target)]) == EXIT_OK
        assert "failed=0" in target.read_text()
