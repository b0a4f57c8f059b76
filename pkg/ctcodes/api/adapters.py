"""
API-adaptere for ctcodes - kobler Pydantic-skjemaer til kjernefunksjonaliteten

Adapterne oversetter mellom:
- JSON-rapporter (Pydantic-modeller)
- Interne Python-objekter (Code, CosetProfile, GraphClassification, ...)

Kommandolinjen og testene bruker adapterne slik at alle rapporter har
samme form og byte-identisk serialisering.
"""

from typing import List, Optional

import pandas as pd
from pydantic import BaseModel, TypeAdapter

from ..construct import Code, CodeFactory, WeightClassPair
from ..cosets import CosetProfile, IntersectionArray, WeightHistogram
from ..graphs import GraphClassification
from ..schemas.report_schemas import (
    CodeParameters, CodeSummaryOutput, CosetProfileOutput, CoverOutput,
    GraphClassificationOutput, GroupOutput, HistogramOutput, IntersectionArrayOutput,
    OrbitTableOutput, RunConfig, VerificationReport, WeightCount,
)
from ..symplectic import ExtendedGroup, GroupClosure, OrbitTable, symplectic_group_order
from ..verification import VerificationSuite


def dump(model: BaseModel) -> str:
    """Deterministisk JSON med skjemaalias."""
    return model.model_dump_json(indent=2, by_alias=True) + "\n"


def dump_many(models: List[BaseModel]) -> str:
    """JSON-liste av modeller, samme form som dump."""
    if not models:
        return "[]\n"
    adapter = TypeAdapter(List[type(models[0])])
    return adapter.dump_json(models, indent=2, by_alias=True).decode("utf-8") + "\n"


class CodeAdapter:
    """
    Adapter for koder.
    """

    @staticmethod
    def parameters(code: Code) -> CodeParameters:
        return CodeParameters(n=code.length, k=code.dimension, d=code.min_distance)

    @staticmethod
    def to_output(code: Code, pair: Optional[WeightClassPair] = None) -> CodeSummaryOutput:
        """
        Konverterer en kode til sammendrag.

        Args:
            code: Koden
            pair: Vektklasseparet koden er bygget fra

        Returns:
            CodeSummaryOutput
        """
        m = code.length.bit_length()
        is_hamming = code.length == 2 ** m - 1 and code.same_code(CodeFactory.hamming(m))
        summary = code.summary() + (" (Hamming)" if is_hamming else "")
        return CodeSummaryOutput(
            name=code.name,
            pair=pair.label if pair else None,
            code=CodeAdapter.parameters(code),
            packing_radius=code.packing_radius,
            parity_rows=code.parity.n_rows,
            parity_rank=code.parity.rank,
            summary=summary,
            is_hamming=is_hamming,
        )


class CosetAdapter:
    """
    Adapter for sideklasseprofiler og vektfordelinger.
    """

    @staticmethod
    def array_output(array: Optional[IntersectionArray]) -> Optional[IntersectionArrayOutput]:
        if array is None:
            return None
        b, c = array.as_lists()
        return IntersectionArrayOutput(b=b, c=c, text=str(array))

    @staticmethod
    def orbit_output(table: Optional[OrbitTable]) -> Optional[OrbitTableOutput]:
        if table is None:
            return None
        return OrbitTableOutput(
            count=table.count,
            action_size=table.action_size,
            orbit_sizes=table.orbit_sizes,
            leader_weights=[list(w) for w in table.leader_weights],
            refines_leader_weights=table.refines_leader_weights(),
        )

    @staticmethod
    def to_output(profile: CosetProfile, orbits: Optional[OrbitTable] = None) -> CosetProfileOutput:
        return CosetProfileOutput(
            code=CodeAdapter.parameters(profile.code),
            rho=profile.covering_radius,
            level_sizes=list(profile.level_sizes),
            completely_regular=profile.completely_regular,
            intersection_array=CosetAdapter.array_output(profile.intersection_array),
            orbits=CosetAdapter.orbit_output(orbits),
        )

    @staticmethod
    def histogram_output(histogram: WeightHistogram) -> HistogramOutput:
        return HistogramOutput(
            length=histogram.length,
            total=histogram.total,
            counts=[WeightCount(weight=w, count=c) for w, c in histogram.counts.items()],
        )


class GraphAdapter:
    """
    Adapter for grafklassifisering.
    """

    @staticmethod
    def to_output(classification: GraphClassification) -> GraphClassificationOutput:
        cover = None
        if classification.cover is not None:
            quotient, fibre, c2 = classification.cover
            cover = CoverOutput(quotient_vertices=quotient, fibre_size=fibre, c2=c2)
        return GraphClassificationOutput(
            vertex_count=classification.vertex_count,
            valency=classification.valency,
            diameter=classification.diameter,
            distance_regular=classification.distance_regular,
            intersection_array=CosetAdapter.array_output(classification.intersection_array),
            antipodal=classification.antipodal,
            primitive=classification.primitive,
            taylor=classification.taylor,
            hadamard_order=classification.hadamard_order,
            q_polynomial=classification.q_polynomial,
            cover=cover,
        )


class GroupAdapter:
    """
    Adapter for grupper og baner.
    """

    @staticmethod
    def to_output(m: int, generator_count: int, closure: Optional[GroupClosure] = None,
                  extended: Optional[ExtendedGroup] = None, orbits: Optional[OrbitTable] = None,
                  extended_orbits: Optional[OrbitTable] = None,
                  gl_orbits: Optional[OrbitTable] = None) -> GroupOutput:
        return GroupOutput(
            m=m,
            generator_count=generator_count,
            order=closure.order if closure is not None else None,
            expected_order=symplectic_group_order(m),
            layers=[list(entry) for entry in closure.generator_log] if closure is not None else [],
            extended_order=extended.order if extended is not None else None,
            extended_enumerated=extended.enumerated if extended is not None else None,
            orbits=CosetAdapter.orbit_output(orbits),
            extended_orbits=CosetAdapter.orbit_output(extended_orbits),
            gl_orbits=CosetAdapter.orbit_output(gl_orbits),
        )


class VerificationAdapter:
    """
    Adapter for verifikasjonsrapporter.
    """

    @staticmethod
    def to_json(report: VerificationReport) -> str:
        return dump(report)

    @staticmethod
    def to_text(report: VerificationReport) -> str:
        """Påstandstabell som tekst via pandas."""
        frame = pd.DataFrame(
            [
                {
                    "claim": claim.claim,
                    "expected": str(claim.expected),
                    "computed": "" if claim.computed is None else str(claim.computed),
                    "status": claim.status.value,
                }
                for claim in report.claims
            ],
            columns=["claim", "expected", "computed", "status"],
        )
        footer = f"\npassed={report.passed} failed={report.failed} skipped={report.skipped}\n"
        return frame.to_string(index=False) + footer

    @staticmethod
    def verify_from_json(config_json: str) -> str:
        """
        Kjører verifikasjon fra JSON-konfigurasjon.

        Args:
            config_json: JSON-streng med RunConfig

        Returns:
            JSON-streng med VerificationReport
        """
        config = RunConfig.model_validate_json(config_json)
        report = VerificationSuite(config).run()
        return dump(report)
