"""Pydantic schemas for kjørekonfigurasjon og verifikasjonsrapporter."""
from enum import Enum
from typing import List, Optional, Union

from pydantic import BaseModel, Field, model_validator

from ..construct import WeightClassPair

SCHEMA_VERSION = 1

ClaimValue = Union[bool, int, str, List[int]]


class Task(str, Enum):
    """Oppgaver som kan kjøres fra kommandolinjen."""
    CONSTRUCT = "construct"
    COSETS = "cosets"
    GRAPH = "graph"
    GROUP = "group"
    VERIFY_ALL = "verify-all"


class OutputFormat(str, Enum):
    """Utdataformat."""
    JSON = "json"
    TEXT = "text"
    DOT = "dot"
    ADJLIST = "adjlist"


class RunConfig(BaseModel):
    """Konfigurasjon for en kjøring."""

    m: int = Field(4, description="Antall rader i H_m (partall, 4 ≤ m ≤ 12)")
    pair: str = Field("all", description="Vektklassepar 'i,j' eller 'all'")
    tasks: List[Task] = Field(default_factory=lambda: [Task.VERIFY_ALL], description="Oppgaver")
    extended: bool = Field(False, description="Bruk den utvidede koden")
    format: OutputFormat = Field(OutputFormat.JSON, description="Utdataformat")
    out: Optional[str] = Field(None, description="Utdatafil eller katalog")
    threads: int = Field(1, description="Antall arbeidstråder", ge=1)
    heavy: bool = Field(False, description="Tillat full gruppelukning for m = 6")
    skip_group: bool = Field(False, description="Hopp over gruppepåstander")
    gl_check: bool = Field(False, description="Kjør banesjekk under hele GL(4,2)")
    dump: Optional[str] = Field(None, description="Fil for heksdump av gruppeelementer")

    @model_validator(mode='after')
    def validate_ranges(self):
        """Validerer m, paret og grensene for gruppeoppgaver."""
        if self.m % 2:
            raise ValueError(f"m må være partall, fikk m = {self.m}")
        if not 4 <= self.m <= 12:
            raise ValueError(f"m må ligge i 4..12, fikk m = {self.m}")
        WeightClassPair.parse_selection(self.pair)
        if Task.GROUP in self.tasks and self.m > 8:
            raise ValueError("Baneopptelling med generatorer krever m ≤ 8")
        if self.heavy and self.m > 6:
            raise ValueError("Full gruppelukning krever m ≤ 6")
        if self.gl_check and self.m != 4:
            raise ValueError("GL-sjekken krever m = 4")
        if Task.VERIFY_ALL in self.tasks and self.m not in (4, 6):
            raise ValueError("verify-all støtter m = 4 og m = 6")
        return self

    def closure_allowed(self) -> bool:
        """Full lukning kjøres alltid for m = 4 og for m = 6 med heavy."""
        return not self.skip_group and (self.m == 4 or (self.m == 6 and self.heavy))


class CodeParameters(BaseModel):
    """[n, k, d] for en kode."""

    n: int = Field(..., description="Lengde")
    k: int = Field(..., description="Dimensjon")
    d: int = Field(..., description="Minimumsavstand")


class CodeSummaryOutput(BaseModel):
    """Sammendrag av en konstruert kode."""

    schema_version: int = Field(SCHEMA_VERSION, alias="schema", description="Skjemaversjon")
    name: Optional[str] = Field(None, description="Kodens navn")
    pair: Optional[str] = Field(None, description="Vektklassepar")
    code: CodeParameters
    packing_radius: int = Field(..., description="e = floor((d-1)/2)")
    parity_rows: int = Field(..., description="Rader i paritetsmatrisen")
    parity_rank: int = Field(..., description="Rang av paritetsmatrisen")
    summary: str = Field(..., description="Tekstlig sammendrag, f.eks. '[15,10,3]'")
    is_hamming: bool = Field(False, description="Lik Hamming-koden som mengde")

    model_config = {"populate_by_name": True}


class IntersectionArrayOutput(BaseModel):
    """Skjæringsmatrise."""

    b: List[int] = Field(..., description="b_0, ..., b_{ρ-1}")
    c: List[int] = Field(..., description="c_1, ..., c_ρ")
    text: str = Field(..., description="Format '(b; c)'")


class OrbitTableOutput(BaseModel):
    """Baner av sideklasser."""

    count: int = Field(..., description="Antall baner")
    action_size: int = Field(..., description="Antall permutasjoner i handlingen")
    orbit_sizes: List[int] = Field(..., description="Størrelse på hver bane")
    leader_weights: List[List[int]] = Field(..., description="Ledervekter per bane")
    refines_leader_weights: bool = Field(..., description="Hver bane har én ledervekt")


class CosetProfileOutput(BaseModel):
    """Sideklasseprofil."""

    schema_version: int = Field(SCHEMA_VERSION, alias="schema", description="Skjemaversjon")
    code: CodeParameters
    rho: int = Field(..., description="Overdekningsradius", ge=0)
    level_sizes: List[int] = Field(..., description="Antall sideklasser per ledervekt")
    completely_regular: bool = Field(..., description="Fullstendig regulær")
    intersection_array: Optional[IntersectionArrayOutput] = None
    orbits: Optional[OrbitTableOutput] = None

    model_config = {"populate_by_name": True}


class WeightCount(BaseModel):
    """Antall ord av én vekt."""

    weight: int = Field(..., ge=0)
    count: int = Field(..., ge=0)


class HistogramOutput(BaseModel):
    """Vektfordeling."""

    schema_version: int = Field(SCHEMA_VERSION, alias="schema", description="Skjemaversjon")
    length: int = Field(..., description="Ordlengde", gt=0)
    total: int = Field(..., description="Antall ord", ge=0)
    counts: List[WeightCount] = Field(..., description="Vekt og antall")

    model_config = {"populate_by_name": True}

    @model_validator(mode='after')
    def validate_total(self):
        """Validerer at antallene summerer til totalen."""
        if sum(item.count for item in self.counts) != self.total:
            raise ValueError("Summen av antallene må være lik totalen")
        return self


class CoverOutput(BaseModel):
    """Parametrene (V/r, r, c_2) for en antipodal overdekning."""

    quotient_vertices: int
    fibre_size: int
    c2: int


class GraphClassificationOutput(BaseModel):
    """Klassifisering av en sideklassegraf."""

    schema_version: int = Field(SCHEMA_VERSION, alias="schema", description="Skjemaversjon")
    vertex_count: int = Field(..., gt=0)
    valency: int = Field(..., ge=0)
    diameter: int = Field(..., ge=0)
    distance_regular: bool
    intersection_array: Optional[IntersectionArrayOutput] = None
    antipodal: Optional[bool] = Field(None, description="None for diameter ≤ 2")
    primitive: bool
    taylor: Optional[bool] = Field(
        None, description="None for diameter ≤ 2 (ikke anvendelig); False for diameter ≥ 4"
    )
    hadamard_order: Optional[int] = None
    q_polynomial: Optional[bool] = Field(None, description="Kriteriet gjelder bare diameter 3")
    cover: Optional[CoverOutput] = None

    model_config = {"populate_by_name": True}

    @model_validator(mode='after')
    def validate_flags(self):
        """Taylor krever diameter 3 og V = 2(k+1); Hadamard krever diameter 4 og V = 4·orden."""
        if self.taylor and (self.diameter != 3 or self.vertex_count != 2 * (self.valency + 1)):
            raise ValueError("Taylor-flagg krever diameter 3 og V = 2(k+1)")
        if self.hadamard_order is not None and (
            self.diameter != 4 or self.vertex_count != 4 * self.hadamard_order
        ):
            raise ValueError("Hadamard-orden krever diameter 4 og V = 4·orden")
        return self


class GraphExportOutput(BaseModel):
    """Graf som kantliste."""

    schema_version: int = Field(SCHEMA_VERSION, alias="schema", description="Skjemaversjon")
    vertex_count: int = Field(..., gt=0)
    valency: int = Field(..., ge=0)
    edges: List[List[int]] = Field(..., description="Kanter (u, v) med u < v")

    model_config = {"populate_by_name": True}


class GroupOutput(BaseModel):
    """Resultat av gruppelukning og utvidet gruppe."""

    schema_version: int = Field(SCHEMA_VERSION, alias="schema", description="Skjemaversjon")
    m: int
    generator_count: int
    order: Optional[int] = Field(None, description="Orden fra lukning (None hvis hoppet over)")
    expected_order: int = Field(..., description="Ordensformelen for Sp(m,2)")
    layers: List[List[int]] = Field(default_factory=list, description="(lag, nye elementer)")
    extended_order: Optional[int] = None
    extended_enumerated: Optional[bool] = None
    orbits: Optional[OrbitTableOutput] = None
    extended_orbits: Optional[OrbitTableOutput] = None
    gl_orbits: Optional[OrbitTableOutput] = None

    model_config = {"populate_by_name": True}


class ClaimStatus(str, Enum):
    """Status for en påstand."""
    PASS = "pass"
    FAIL = "fail"
    SKIPPED = "skipped"


class TheoremReport(BaseModel):
    """Én verifisert påstand: forventet verdi, beregnet verdi og status."""

    claim: str = Field(..., description="Påstandens id, f.eks. 'graph.gamma01.vertices'")
    source: str = Field(..., description="Påstanden som sertifiseres")
    expected: ClaimValue
    computed: Optional[ClaimValue] = None
    status: ClaimStatus

    @model_validator(mode='after')
    def validate_status(self):
        """Bestått hvis og bare hvis forventet er lik beregnet."""
        if self.status == ClaimStatus.SKIPPED:
            return self
        matches = type(self.expected) is type(self.computed) and self.expected == self.computed
        if matches != (self.status == ClaimStatus.PASS):
            raise ValueError(f"Status {self.status.value} stemmer ikke med verdiene for {self.claim}")
        return self

    @classmethod
    def compare(cls, claim: str, source: str, expected: ClaimValue,
                computed: ClaimValue) -> "TheoremReport":
        """Lager rapport med status fra eksakt sammenligning."""
        matches = type(expected) is type(computed) and expected == computed
        return cls(claim=claim, source=source, expected=expected, computed=computed,
                   status=ClaimStatus.PASS if matches else ClaimStatus.FAIL)

    @classmethod
    def skipped(cls, claim: str, source: str, expected: ClaimValue) -> "TheoremReport":
        return cls(claim=claim, source=source, expected=expected, status=ClaimStatus.SKIPPED)

    @property
    def passed(self) -> bool:
        return self.status == ClaimStatus.PASS


class VerificationReport(BaseModel):
    """Samlet rapport fra verify-all."""

    schema_version: int = Field(SCHEMA_VERSION, alias="schema", description="Skjemaversjon")
    m: int
    heavy: bool
    skip_group: bool
    claims: List[TheoremReport]
    passed: int = Field(..., ge=0)
    failed: int = Field(..., ge=0)
    skipped: int = Field(..., ge=0)
    notes: List[str] = Field(default_factory=list)

    model_config = {"populate_by_name": True}

    @classmethod
    def from_claims(cls, m: int, heavy: bool, skip_group: bool, claims: List[TheoremReport],
                    notes: Optional[List[str]] = None) -> "VerificationReport":
        counts = {status: 0 for status in ClaimStatus}
        for claim in claims:
            counts[claim.status] += 1
        return cls(
            m=m, heavy=heavy, skip_group=skip_group, claims=claims,
            passed=counts[ClaimStatus.PASS], failed=counts[ClaimStatus.FAIL],
            skipped=counts[ClaimStatus.SKIPPED], notes=notes or [],
        )

    @property
    def all_passed(self) -> bool:
        return self.failed == 0


# Eksporterte skjemaer
__all__ = [
    "SCHEMA_VERSION",
    "Task",
    "OutputFormat",
    "RunConfig",
    "CodeParameters",
    "CodeSummaryOutput",
    "IntersectionArrayOutput",
    "OrbitTableOutput",
    "CosetProfileOutput",
    "WeightCount",
    "HistogramOutput",
    "CoverOutput",
    "GraphClassificationOutput",
    "GraphExportOutput",
    "GroupOutput",
    "ClaimStatus",
    "TheoremReport",
    "VerificationReport",
]
