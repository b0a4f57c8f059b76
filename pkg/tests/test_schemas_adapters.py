"""
Tester for skjemaer og API-adaptere.
"""

import json

import pytest
from pydantic import ValidationError
from ctcodes.api.adapters import (
    CodeAdapter, CosetAdapter, GraphAdapter, GroupAdapter, VerificationAdapter, dump, dump_many,
)
from ctcodes.construct import CodeFactory, WeightClassPair
from ctcodes.cosets import coset_profile, dual_coset_histogram
from ctcodes.graphs import classify, coset_graph
from ctcodes.schemas import (
    ClaimStatus, GraphClassificationOutput, HistogramOutput, RunConfig, Task, TheoremReport,
    VerificationReport,
)
from ctcodes.symplectic import all_transvections, group_closure


class TestRunConfig:
    """Test klasse for RunConfig."""

    def test_defaults(self):
        """Test standardverdier."""
        config = RunConfig()
        assert config.m == 4
        assert config.pair == "all"
        assert config.tasks == [Task.VERIFY_ALL]
        assert config.closure_allowed()

    def test_odd_m(self):
        """Test at odde m gir melding om partall."""
        with pytest.raises(ValidationError, match="partall"):
            RunConfig(m=3)

    def test_m_range(self):
        """Test området for m."""
        with pytest.raises(ValidationError, match="4..12"):
            RunConfig(m=14, tasks=[Task.CONSTRUCT])
        with pytest.raises(ValidationError):
            RunConfig(m=2, tasks=[Task.CONSTRUCT])
        assert RunConfig(m=12, tasks=[Task.CONSTRUCT]).m == 12

    def test_task_limits(self):
        """Test grensene for gruppeoppgaver og verify-all."""
        with pytest.raises(ValidationError):
            RunConfig(m=8)
        with pytest.raises(ValidationError):
            RunConfig(m=10, tasks=[Task.GROUP])
        with pytest.raises(ValidationError):
            RunConfig(m=8, heavy=True, tasks=[Task.GROUP])
        with pytest.raises(ValidationError):
            RunConfig(m=6, gl_check=True)

    def test_invalid_pair_and_threads(self):
        """Test ugyldig par og trådantall."""
        with pytest.raises(ValidationError):
            RunConfig(pair="1,7")
        with pytest.raises(ValidationError):
            RunConfig(threads=0)

    def test_closure_allowed(self):
        """Test når full lukning kjøres."""
        assert not RunConfig(m=6).closure_allowed()
        assert RunConfig(m=6, heavy=True).closure_allowed()
        assert not RunConfig(m=4, skip_group=True).closure_allowed()


class TestReports:
    """Test klasse for påstandsrapporter."""

    def test_compare_exact_types(self):
        """Test at sammenligningen krever samme type."""
        assert TheoremReport.compare("a", "kilde", 3, 3).passed
        assert TheoremReport.compare("a", "kilde", True, True).passed
        assert not TheoremReport.compare("a", "kilde", 1, True).passed
        assert not TheoremReport.compare("a", "kilde", "[15,10,3]", "[15,10,4]").passed
        assert TheoremReport.compare("a", "kilde", [16, 2, 6], [16, 2, 6]).passed

    def test_status_must_match(self):
        """Test at status må stemme med verdiene."""
        with pytest.raises(ValidationError):
            TheoremReport(claim="a", source="kilde", expected=1, computed=2, status=ClaimStatus.PASS)

    def test_skipped(self):
        """Test hoppede påstander."""
        report = TheoremReport.skipped("group.sp.order", "kilde", 720)
        assert report.status == ClaimStatus.SKIPPED
        assert report.computed is None

    def test_from_claims(self):
        """Test tellingene i den samlede rapporten."""
        claims = [
            TheoremReport.compare("a", "kilde", 1, 1),
            TheoremReport.compare("b", "kilde", 1, 2),
            TheoremReport.skipped("c", "kilde", 1),
        ]
        report = VerificationReport.from_claims(4, False, False, claims, ["notat"])
        assert (report.passed, report.failed, report.skipped) == (1, 1, 1)
        assert not report.all_passed
        data = json.loads(dump(report))
        assert data["schema"] == 1
        assert data["notes"] == ["notat"]
        assert VerificationReport.model_validate_json(dump(report)) == report

    def test_histogram_total(self):
        """Test at totalen må stemme."""
        with pytest.raises(ValidationError):
            HistogramOutput(length=4, total=3, counts=[{"weight": 0, "count": 1}])

    def test_taylor_flag(self):
        """Test at Taylor-flagget krever diameter 3."""
        with pytest.raises(ValidationError):
            GraphClassificationOutput(vertex_count=8, valency=3, diameter=2,
                                      distance_regular=True, primitive=True, taylor=True)


class TestAdapters:
    """Test klasse for adapterne."""

    def test_code_output(self):
        """Test kodesammendrag."""
        output = CodeAdapter.to_output(CodeFactory.weight_class_code(4, "0,1"), WeightClassPair(0, 1))
        assert output.summary == "[15,10,3]"
        assert output.pair == "0,1"
        assert output.parity_rows == 5
        assert output.parity_rank == 5
        assert not output.is_hamming

    def test_hamming_output(self):
        """Test at C_{1,3} gjenkjennes som Hamming-koden."""
        output = CodeAdapter.to_output(CodeFactory.weight_class_code(4, "1,3"))
        assert output.is_hamming
        assert output.summary == "[15,11,3] (Hamming)"
        assert output.parity_rank == 4

    def test_coset_output(self):
        """Test sideklasseprofil som JSON."""
        output = CosetAdapter.to_output(coset_profile(CodeFactory.weight_class_code(4, "1,2")))
        assert output.rho == 3
        assert output.level_sizes == [1, 15, 15, 1]
        assert output.intersection_array.text == "(15, 8, 1; 1, 8, 15)"

    def test_histogram_output(self):
        """Test vektfordeling som JSON."""
        output = CosetAdapter.histogram_output(dual_coset_histogram(4, "1,2"))
        assert [item.weight for item in output.counts] == [6, 10]
        assert output.total == 32

    def test_graph_output(self):
        """Test grafklassifisering som JSON."""
        output = GraphAdapter.to_output(classify(coset_graph(CodeFactory.weight_class_code(4, "0,1"))))
        assert output.cover.quotient_vertices == 16
        assert output.cover.c2 == 6
        assert output.taylor

    def test_hadamard_graph_output(self):
        """Test at Taylor er False (ikke None) ved diameter 4."""
        graph = coset_graph(CodeFactory.extended_weight_class_code(4, "1,2"))
        output = GraphAdapter.to_output(classify(graph))
        assert output.diameter == 4
        assert output.taylor is False
        assert output.hadamard_order == 16
        assert json.loads(dump(output))["taylor"] is False

    def test_group_output(self):
        """Test gruppesammendrag."""
        closure = group_closure(all_transvections(4))
        output = GroupAdapter.to_output(4, 15, closure)
        assert output.order == 720
        assert output.expected_order == 720
        assert output.layers[0] == [0, 1]
        assert output.extended_order is None

    def test_dump_many(self):
        """Test JSON-lister."""
        assert dump_many([]) == "[]\n"
        outputs = [CodeAdapter.to_output(CodeFactory.weight_class_code(4, p)) for p in ("0,1", "0,2")]
        data = json.loads(dump_many(outputs))
        assert [item["summary"] for item in data] == ["[15,10,3]", "[15,10,4]"]
        assert data[0]["schema"] == 1

    def test_report_text(self):
        """Test tekstformen av rapporten."""
        claims = [TheoremReport.compare("graph.gamma01.vertices", "kilde", 32, 32)]
        text = VerificationAdapter.to_text(VerificationReport.from_claims(4, False, False, claims))
        assert "graph.gamma01.vertices" in text
        assert "passed=1 failed=0 skipped=0" in text
