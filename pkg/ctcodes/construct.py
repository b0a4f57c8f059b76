"""
Konstruksjon av paritetsmatriser og koder.

Modulet bygger alle matrisene arbeidsbenken trenger:
- H_m: Hamming-paritetsmatrisen med alle ikke-null kolonner
- v_{i1,i2}: vektklasseraden og den utvidede matrisen H_m(v)
- H*_m: utvidet Hamming-matrise og utvidede koder
- Stjernekonstruksjonen (C*)_{i1+1,i2+1}

Kolonnerekkefølgen er stigende heltallsverdi: kolonne j (0-indeksert) i H_m
er binærrepresentasjonen av j + 1, med rad 0 som mest signifikante bit.
Koden avhenger bare av kolonnemengden, så rekkefølgen gir ekvivalente koder.
"""

import itertools
import logging
from collections import Counter, defaultdict
from functools import cached_property
from typing import Dict, List, Optional, Tuple

import numpy as np

from .gf2core import BitMatrix, BitVec, popcount, weight

logger = logging.getLogger(__name__)

# Grense for minimumsavstand ved kodeordopplisting
ENUMERATION_MAX_DIMENSION = 12
# Største vekt som søkes ved lineær avhengighet mellom kolonner
DEPENDENCY_SEARCH_MAX_WEIGHT = 5


class WeightClassPair:
    """
    Uordnet par {i1, i2} av vektklasser modulo 4.

    Paret lagres kanonisk med i1 < i2. Fortegnet ε er 1 nøyaktig når
    0 ∈ {i1, i2}; alle formler leser ε herfra.
    """

    def __init__(self, i1: int, i2: int):
        """
        Initialiserer paret.

        Args:
            i1: Vektklasse i {0, 1, 2, 3}
            i2: Vektklasse i {0, 1, 2, 3}, ulik i1

        Raises:
            ValueError: Hvis klassene er like eller utenfor 0..3
        """
        for value in (i1, i2):
            if value not in (0, 1, 2, 3):
                raise ValueError(f"Vektklasse må være i 0..3, fikk {value}")
        if i1 == i2:
            raise ValueError(f"Vektklassene må være ulike, fikk {i1} to ganger")
        self._i1, self._i2 = min(i1, i2), max(i1, i2)

    @classmethod
    def parse(cls, text: str) -> "WeightClassPair":
        """
        Leser et par på formen "i,j".

        Examples:
            >>> WeightClassPair.parse("2,1")
            WeightClassPair(1, 2)
        """
        parts = [p.strip() for p in text.replace("{", "").replace("}", "").split(",")]
        if len(parts) != 2 or not all(p.isdigit() for p in parts):
            raise ValueError(f"Ugyldig vektklassepar: {text!r} (forventet 'i,j')")
        return cls(int(parts[0]), int(parts[1]))

    @classmethod
    def parse_selection(cls, text: str) -> List["WeightClassPair"]:
        """Leser "i,j" eller "all" til en liste av par."""
        if text.strip().lower() == "all":
            return cls.all_pairs()
        return [cls.parse(text)]

    @classmethod
    def all_pairs(cls) -> List["WeightClassPair"]:
        """Alle seks par i kanonisk rekkefølge."""
        return [cls(a, b) for a, b in itertools.combinations(range(4), 2)]

    @classmethod
    def odd_pairs(cls) -> List["WeightClassPair"]:
        """De fire parene med odde differanse: {0,1}, {0,3}, {1,2}, {2,3}."""
        return [p for p in cls.all_pairs() if p.parity_flag]

    @property
    def i1(self) -> int:
        return self._i1

    @property
    def i2(self) -> int:
        return self._i2

    @property
    def classes(self) -> Tuple[int, int]:
        return (self._i1, self._i2)

    @property
    def parity_flag(self) -> bool:
        """Sann når i1 - i2 er odde (de kvadratiske tilfellene)."""
        return (self._i2 - self._i1) % 2 == 1

    @property
    def epsilon(self) -> int:
        return 1 if 0 in self.classes else 0

    @property
    def label(self) -> str:
        return f"{self._i1},{self._i2}"

    def shifted(self) -> "WeightClassPair":
        """Paret {i1 + 1, i2 + 1} modulo 4."""
        return WeightClassPair((self._i1 + 1) % 4, (self._i2 + 1) % 4)

    def contains(self, residue: int) -> bool:
        return residue % 4 in self.classes

    def mask(self, weights: np.ndarray) -> np.ndarray:
        """Elementvis indikator for vekter med rest i paret (uint8)."""
        residues = np.asarray(weights) % 4
        return ((residues == self._i1) | (residues == self._i2)).astype(np.uint8)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, WeightClassPair):
            return NotImplemented
        return self.classes == other.classes

    def __hash__(self) -> int:
        return hash(self.classes)

    def __repr__(self) -> str:
        return f"WeightClassPair({self._i1}, {self._i2})"


def _require_even(m: int) -> None:
    if m % 2:
        raise ValueError(f"m må være partall, fikk m = {m}")
    if m < 4:
        raise ValueError(f"m må være minst 4, fikk m = {m}")


def _coerce_pair(pair) -> WeightClassPair:
    if isinstance(pair, WeightClassPair):
        return pair
    if isinstance(pair, str):
        return WeightClassPair.parse(pair)
    i1, i2 = pair
    return WeightClassPair(i1, i2)


class Code:
    """
    Binær lineær kode gitt ved en paritetsmatrise.

    Koden beholder den oppgitte matrisen og avleder i tillegg en
    kontrollmatrise av uavhengige rader. Syndromrommet har da nøyaktig
    2^(n-k) elementer også når den oppgitte matrisen har rangmangel.
    """

    def __init__(self, parity: BitMatrix, name: Optional[str] = None):
        """
        Initialiserer koden.

        Args:
            parity: Paritetsmatrise r×n (kan ha rangmangel)
            name: Valgfritt navn for rapporter

        Raises:
            ValueError: Hvis matrisen er null eller har null kolonner
        """
        if parity.n_cols == 0:
            raise ValueError("Paritetsmatrisen må ha minst én kolonne")
        if not parity.array.any():
            raise ValueError("Paritetsmatrisen kan ikke være nullmatrisen")
        self.parity = parity
        self.name = name

    @property
    def length(self) -> int:
        return self.parity.n_cols

    @property
    def redundancy(self) -> int:
        """n - k, lik rangen til paritetsmatrisen."""
        return self.parity.rank

    @property
    def dimension(self) -> int:
        return self.length - self.parity.rank

    @cached_property
    def check_matrix(self) -> BitMatrix:
        """Uavhengige rader av paritetsmatrisen i opprinnelig rekkefølge."""
        if self.parity.rank == self.parity.n_rows:
            return self.parity
        return self.parity.independent_rows()

    @cached_property
    def generator(self) -> BitMatrix:
        """Generatormatrise (basis for nullrommet til paritetsmatrisen)."""
        return self.parity.nullspace()

    def contains(self, word: BitVec) -> bool:
        """Sjekker om vektoren er et kodeord."""
        return not self.parity.multiply_vector(word).bits.any()

    def codewords(self) -> np.ndarray:
        """
        Alle 2^k kodeord som uint8-array.

        Raises:
            ValueError: Hvis k > 20
        """
        return self.generator.span()

    @cached_property
    def min_distance(self) -> int:
        """
        Eksakt minimumsavstand.

        For k ≤ 12 listes alle kodeord. Ellers søkes minste antall kolonner
        i kontrollmatrisen som summerer til null, opp til vekt 5.

        Raises:
            ValueError: Hvis koden bare inneholder nullordet
            RuntimeError: Hvis ingen avhengighet finnes opp til vekt 5
        """
        if self.dimension == 0:
            raise ValueError("Nullkoden har ingen minimumsavstand")
        if self.dimension <= ENUMERATION_MAX_DIMENSION:
            words = self.codewords()
            weights = words.sum(axis=1)
            return int(weights[weights > 0].min())
        distance = _dependency_search(self.check_matrix.column_ints)
        if distance is None:
            raise RuntimeError(
                f"Fant ingen kodeord med vekt ≤ {DEPENDENCY_SEARCH_MAX_WEIGHT} "
                f"for [{self.length},{self.dimension}]-koden"
            )
        return distance

    @property
    def packing_radius(self) -> int:
        return (self.min_distance - 1) // 2

    def is_even(self) -> bool:
        """Sann hvis alle kodeord har like vekt."""
        return all(weight(row) % 2 == 0 for row in self.generator.rows())

    def same_code(self, other: "Code") -> bool:
        """
        Mengdelikhet: lik lengde og dimensjon, og hver generatorrad i den
        andre koden ligger i denne.
        """
        if self.length != other.length or self.dimension != other.dimension:
            return False
        return all(self.contains(row) for row in other.generator.rows())

    @property
    def parameters(self) -> Tuple[int, int, int]:
        return (self.length, self.dimension, self.min_distance)

    def summary(self) -> str:
        n, k, d = self.parameters
        return f"[{n},{k},{d}]"

    def __repr__(self) -> str:
        label = f" {self.name}" if self.name else ""
        return f"Code{label}[{self.length},{self.dimension}]"


def _dependency_search(columns: Tuple[int, ...]) -> Optional[int]:
    """
    Minste antall kolonner som summerer til null, opp til vekt 5.

    Kolonnene er heltall. Når ingen kortere avhengighet finnes, er alle
    treff i par- og trippelsøket automatisk disjunkte.
    """
    if any(c == 0 for c in columns):
        return 1
    counts = Counter(columns)
    if any(c > 1 for c in counts.values()):
        return 2
    values = set(columns)
    n = len(columns)
    for i, j in itertools.combinations(range(n), 2):
        if columns[i] ^ columns[j] in values:
            return 3
    pair_sums: Dict[int, int] = defaultdict(int)
    for i, j in itertools.combinations(range(n), 2):
        key = columns[i] ^ columns[j]
        pair_sums[key] += 1
        if pair_sums[key] > 1:
            return 4
    for i, j, k in itertools.combinations(range(n), 3):
        if columns[i] ^ columns[j] ^ columns[k] in pair_sums:
            return 5
    return None


def hamming_parity(m: int) -> BitMatrix:
    """
    Hamming-paritetsmatrisen H_m.

    Args:
        m: Antall rader, 2 ≤ m ≤ 16

    Returns:
        m×(2^m - 1) matrise der kolonne j er binærrepresentasjonen av j + 1

    Raises:
        ValueError: Hvis m er utenfor 2..16

    Examples:
        >>> hamming_parity(2).column_ints
        (1, 2, 3)
    """
    if not 2 <= m <= 16:
        raise ValueError(f"m må være i 2..16, fikk m = {m}")
    values = np.arange(1, 2 ** m, dtype=np.int64)
    shifts = np.arange(m - 1, -1, -1, dtype=np.int64)
    return BitMatrix(((values[np.newaxis, :] >> shifts[:, np.newaxis]) & 1).astype(np.uint8))


def column_weight_census(matrix: BitMatrix) -> Dict[int, int]:
    """Antall kolonner av hver vekt, sortert etter vekt."""
    weights = matrix.array.sum(axis=0)
    return dict(sorted(Counter(int(w) for w in weights).items()))


def weight_class_vector(m: int, pair) -> BitVec:
    """
    Vektklasseraden v_{i1,i2}.

    Bit i er satt når vekten av kolonne h_i i H_m er kongruent med i1
    eller i2 modulo 4.

    Args:
        m: Partall, m ≥ 4
        pair: WeightClassPair eller "i,j"

    Raises:
        ValueError: Hvis m er odde eller mindre enn 4
    """
    _require_even(m)
    pair = _coerce_pair(pair)
    weights = hamming_parity(m).array.sum(axis=0)
    return BitVec(pair.mask(weights))


def augmented_parity(m: int, pair) -> BitMatrix:
    """H_m med v_{i1,i2} lagt til som siste rad, (m+1)×(2^m - 1)."""
    return hamming_parity(m).stack(weight_class_vector(m, pair))


def code_from_parity(parity: BitMatrix, name: Optional[str] = None) -> Code:
    """Lager en kode fra paritetsmatrisen; dimensjonen beregnes fra rangen."""
    return Code(parity, name=name)


def extend_vector(vector: BitVec) -> BitVec:
    """Legger til paritetsbit i posisjon 0 slik at vekten blir like."""
    parity_bit = weight(vector) % 2
    return BitVec(np.concatenate([[parity_bit], vector.bits]))


def extend_code(code: Code) -> Code:
    """
    Utvidet kode med total paritetsbit i ny posisjon 0.

    Paritetsmatrisen er den opprinnelige matrisen med en nullkolonne foran
    og en alle-enere-rad lagt til nederst.
    """
    parity = code.parity
    bordered = np.hstack([np.zeros((parity.n_rows, 1), dtype=np.uint8), parity.array])
    ones = np.ones((1, parity.n_cols + 1), dtype=np.uint8)
    name = f"{code.name}*" if code.name else None
    return Code(BitMatrix(np.vstack([bordered, ones])), name=name)


def extended_hamming_parity(m: int) -> BitMatrix:
    """
    Utvidet Hamming-matrise H*_m, (m+1)×2^m.

    Posisjon x (0 ≤ x < 2^m) har kolonnen (x | 1); posisjon 0 er paritets-
    posisjonen med kolonnen (0,...,0,1).
    """
    if not 2 <= m <= 16:
        raise ValueError(f"m må være i 2..16, fikk m = {m}")
    values = np.arange(0, 2 ** m, dtype=np.int64)
    shifts = np.arange(m - 1, -1, -1, dtype=np.int64)
    top = ((values[np.newaxis, :] >> shifts[:, np.newaxis]) & 1).astype(np.uint8)
    return BitMatrix(np.vstack([top, np.ones((1, 2 ** m), dtype=np.uint8)]))


def full_domain_vector(m: int, pair) -> BitVec:
    """Raden w med w_x = 1 når vekten av x er i1 eller i2 modulo 4, for alle x i F_2^m."""
    pair = _coerce_pair(pair)
    weights = np.array([popcount(x) for x in range(2 ** m)], dtype=np.int64)
    return BitVec(pair.mask(weights))


def star_construction(m: int, pair) -> Code:
    """
    Koden med paritetsmatrise H*_m utvidet med raden w for paret.

    Args:
        m: Partall, m ≥ 4
        pair: Paret {j1, j2} som brukes direkte i w
    """
    _require_even(m)
    pair = _coerce_pair(pair)
    parity = extended_hamming_parity(m).stack(full_domain_vector(m, pair))
    return Code(parity, name=f"S{{{pair.label}}}")


class CodeFactory:
    """
    Factory for kodene i arbeidsbenken.
    """

    @staticmethod
    def hamming(m: int) -> Code:
        return Code(hamming_parity(m), name="H")

    @staticmethod
    def extended_hamming(m: int) -> Code:
        return Code(extended_hamming_parity(m), name="H*")

    @staticmethod
    def weight_class_code(m: int, pair) -> Code:
        """Koden C_{i1,i2} med paritetsmatrise H_m(v_{i1,i2})."""
        pair = _coerce_pair(pair)
        return Code(augmented_parity(m, pair), name=f"C{{{pair.label}}}")

    @staticmethod
    def extended_weight_class_code(m: int, pair) -> Code:
        return extend_code(CodeFactory.weight_class_code(m, pair))

    @staticmethod
    def even_part(m: int) -> Code:
        """Jevn del av Hamming-koden, lik C_{0,2}."""
        return CodeFactory.weight_class_code(m, WeightClassPair(0, 2))
