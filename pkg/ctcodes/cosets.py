"""
Syndromromanalyse for lineære koder.

Modulet beregner:
- Sideklasseledervekter ved bredde-først-søk i syndromgrafen
- Overdekningsradius ρ og fordelingen C(0), ..., C(ρ)
- Skjæringstall (a, b, c) per syndrom og avgjørelse om fullstendig regularitet
- Vektfordelinger for sideklasser via MacWilliams-transformasjonen
- Vektfordelinger for sideklasser av den duale koden til H*_m

Syndromer indekseres som heltall 0..2^r - 1 der rad 0 i kontrollmatrisen
er mest signifikante bit. All aritmetikk er eksakt heltallsaritmetikk.
"""

import logging
import warnings
from concurrent.futures import ThreadPoolExecutor
from functools import cached_property
from typing import Dict, List, Optional, Sequence, Set, Tuple

import numpy as np

from .construct import (
    Code, WeightClassPair, _coerce_pair, _require_even, extend_vector,
    extended_hamming_parity, weight_class_vector,
)
from .gf2core import BitMatrix, BitVec, bits_to_int, krawtchouk_table

logger = logging.getLogger(__name__)

# Største duale dimensjon for MacWilliams-opplisting
MACWILLIAMS_MAX_REDUNDANCY = 24
# Største lengde for uttømmende oppramsing av F_2^n
EXHAUSTIVE_MAX_LENGTH = 24
# Antall rader som listes samlet i hver blokk av dualkoden
_LOW_BLOCK_ROWS = 12


class IntersectionArray:
    """
    Skjæringsmatrise (b_0, ..., b_{ρ-1}; c_1, ..., c_ρ).

    Brukes både for fullstendig regulære koder og avstandsregulære grafer.
    """

    def __init__(self, b: Sequence[int], c: Sequence[int]):
        """
        Args:
            b: b_0, ..., b_{ρ-1}
            c: c_1, ..., c_ρ

        Raises:
            ValueError: Hvis listene har ulik lengde
        """
        if len(b) != len(c):
            raise ValueError(f"b og c må ha lik lengde, fikk {len(b)} og {len(c)}")
        self.b = tuple(int(x) for x in b)
        self.c = tuple(int(x) for x in c)

    @classmethod
    def parse(cls, text: str) -> "IntersectionArray":
        """Leser '(15, 6, 1; 1, 6, 15)'."""
        body = text.strip().strip("()")
        try:
            left, right = body.split(";")
            b = [int(t) for t in left.split(",") if t.strip()]
            c = [int(t) for t in right.split(",") if t.strip()]
        except ValueError:
            raise ValueError(f"Ugyldig skjæringsmatrise: {text!r}") from None
        return cls(b, c)

    @property
    def diameter(self) -> int:
        return len(self.b)

    @property
    def valency(self) -> int:
        return self.b[0] if self.b else 0

    def as_lists(self) -> Tuple[List[int], List[int]]:
        return list(self.b), list(self.c)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, IntersectionArray):
            return NotImplemented
        return self.b == other.b and self.c == other.c

    def __hash__(self) -> int:
        return hash((self.b, self.c))

    def __str__(self) -> str:
        return f"({', '.join(map(str, self.b))}; {', '.join(map(str, self.c))})"

    def __repr__(self) -> str:
        return f"IntersectionArray{self}"


class WeightHistogram:
    """Vektfordeling: antall ord av hver vekt, og totalen."""

    def __init__(self, counts: Dict[int, int], length: int):
        """
        Args:
            counts: vekt -> antall (nuller utelates)
            length: Ordlengde

        Raises:
            ValueError: Ved negative antall eller vekter utenfor 0..length
        """
        cleaned = {}
        for w, count in sorted(counts.items()):
            if not 0 <= w <= length:
                raise ValueError(f"Vekt {w} utenfor 0..{length}")
            if count < 0:
                raise ValueError(f"Negativt antall {count} for vekt {w}")
            if count:
                cleaned[int(w)] = int(count)
        self.counts = cleaned
        self.length = length

    @classmethod
    def from_weights(cls, weights: np.ndarray, length: int) -> "WeightHistogram":
        bins = np.bincount(np.asarray(weights, dtype=np.int64), minlength=length + 1)
        return cls({w: int(count) for w, count in enumerate(bins)}, length)

    @property
    def total(self) -> int:
        return sum(self.counts.values())

    @property
    def weights(self) -> Set[int]:
        return set(self.counts)

    @property
    def min_weight(self) -> int:
        return min(self.counts)

    def __getitem__(self, w: int) -> int:
        return self.counts.get(w, 0)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, WeightHistogram):
            return NotImplemented
        return self.length == other.length and self.counts == other.counts

    def __hash__(self) -> int:
        return hash((self.length, tuple(self.counts.items())))

    def __repr__(self) -> str:
        return f"WeightHistogram({self.counts}, total={self.total})"


def syndrome(parity: BitMatrix, x: BitVec) -> BitVec:
    """
    Syndromet H·xᵀ som r-bit vektor.

    Raises:
        ValueError: Ved lengdeavvik
    """
    return parity.multiply_vector(x)


def syndrome_int(parity: BitMatrix, x: BitVec) -> int:
    """Syndromet lest som heltall (rad 0 er mest signifikante bit)."""
    return bits_to_int(syndrome(parity, x).bits)


def _check_simple_columns(columns: Tuple[int, ...]) -> None:
    if any(c == 0 for c in columns):
        raise ValueError("Kontrollmatrisen har en nullkolonne; sideklassegrafen blir ikke enkel")
    if len(set(columns)) != len(columns):
        raise ValueError("Kontrollmatrisen har gjentatte kolonner; sideklassegrafen blir ikke enkel")


class CosetProfile:
    """
    Sideklasseprofil for en lineær kode.

    Holder ledervekt og (a, b, c) for hvert syndrom, overdekningsradius og
    avgjørelsen om fullstendig regularitet.
    """

    def __init__(self, code: Code, leader_weight: np.ndarray, parent: np.ndarray,
                 parent_column: np.ndarray, a: np.ndarray, b: np.ndarray, c: np.ndarray):
        self.code = code
        self.leader_weight = leader_weight
        self._parent = parent
        self._parent_column = parent_column
        self.a = a
        self.b = b
        self.c = c

    @property
    def length(self) -> int:
        return self.code.length

    @property
    def syndrome_count(self) -> int:
        return int(self.leader_weight.size)

    @property
    def covering_radius(self) -> int:
        return int(self.leader_weight.max())

    @cached_property
    def level_sizes(self) -> Tuple[int, ...]:
        """|C(l)| målt i sideklasser, for l = 0..ρ."""
        return tuple(int(x) for x in np.bincount(self.leader_weight))

    def syndromes_at(self, level: int) -> np.ndarray:
        return np.flatnonzero(self.leader_weight == level)

    def triple(self, s: int) -> Tuple[int, int, int]:
        """(a, b, c) for syndrom s."""
        return (int(self.a[s]), int(self.b[s]), int(self.c[s]))

    def leader_positions(self, s: int) -> Tuple[int, ...]:
        """Støtten til en sideklasseleder for syndrom s (0-indekserte posisjoner)."""
        positions: List[int] = []
        while s:
            positions.append(int(self._parent_column[s]))
            s = int(self._parent[s])
        return tuple(sorted(positions))

    def leader(self, s: int) -> BitVec:
        return BitVec.from_support(self.length, self.leader_positions(s))

    @cached_property
    def _level_parameters(self) -> Optional[Tuple[Tuple[int, ...], Tuple[int, ...]]]:
        b_values: List[int] = []
        c_values: List[int] = []
        for level in range(self.covering_radius + 1):
            members = self.syndromes_at(level)
            b_set = np.unique(self.b[members])
            c_set = np.unique(self.c[members])
            if b_set.size != 1 or c_set.size != 1:
                return None
            b_values.append(int(b_set[0]))
            c_values.append(int(c_set[0]))
        return tuple(b_values), tuple(c_values)

    @property
    def completely_regular(self) -> bool:
        return self._level_parameters is not None

    @property
    def intersection_array(self) -> Optional[IntersectionArray]:
        """Skjæringsmatrisen når koden er fullstendig regulær, ellers None."""
        params = self._level_parameters
        if params is None:
            return None
        b_values, c_values = params
        return IntersectionArray(b_values[:-1], c_values[1:])

    def __repr__(self) -> str:
        return (f"CosetProfile(rho={self.covering_radius}, "
                f"completely_regular={self.completely_regular})")


def coset_profile(code: Code) -> CosetProfile:
    """
    Beregner sideklasseprofilen ved bredde-først-søk i syndromgrafen.

    Naboene til syndrom s er s + h_j for hver kolonne h_j i kontroll-
    matrisen. For et syndrom på nivå l er c antall naboer på nivå l - 1,
    b antall naboer på nivå l + 1 og a = n - b - c.

    Args:
        code: Koden som analyseres

    Returns:
        CosetProfile med ledervekter, (a, b, c) og avgjørelse

    Raises:
        ValueError: Ved null- eller gjentatte kolonner i kontrollmatrisen

    Examples:
        >>> from ctcodes.construct import CodeFactory
        >>> str(coset_profile(CodeFactory.weight_class_code(4, "0,1")).intersection_array)
        '(15, 6, 1; 1, 6, 15)'
    """
    check = code.check_matrix
    columns = np.array(check.column_ints, dtype=np.int64)
    _check_simple_columns(check.column_ints)
    n = code.length
    size = 1 << check.n_rows

    leader_weight = np.full(size, -1, dtype=np.int64)
    parent = np.zeros(size, dtype=np.int64)
    parent_column = np.full(size, -1, dtype=np.int64)
    leader_weight[0] = 0
    frontier = np.array([0], dtype=np.int64)
    level = 0
    while frontier.size:
        neighbours = (frontier[:, np.newaxis] ^ columns[np.newaxis, :]).ravel()
        fresh = leader_weight[neighbours] < 0
        targets, first = np.unique(neighbours[fresh], return_index=True)
        origin = np.flatnonzero(fresh)[first]
        level += 1
        leader_weight[targets] = level
        parent[targets] = frontier[origin // n]
        parent_column[targets] = origin % n
        logger.debug("BFS nivå %d: %d nye syndromer", level, targets.size)
        frontier = targets

    b = np.empty(size, dtype=np.int64)
    c = np.empty(size, dtype=np.int64)
    step = max(1, (1 << 22) // max(n, 1))
    for start in range(0, size, step):
        block = np.arange(start, min(size, start + step), dtype=np.int64)
        own = leader_weight[block][:, np.newaxis]
        around = leader_weight[block[:, np.newaxis] ^ columns[np.newaxis, :]]
        c[block] = (around == own - 1).sum(axis=1)
        b[block] = (around == own + 1).sum(axis=1)
    a = n - b - c
    profile = CosetProfile(code, leader_weight, parent, parent_column, a, b, c)
    logger.info("Sideklasseprofil for %r: ρ=%d, nivåer %s",
                code, profile.covering_radius, profile.level_sizes)
    return profile


def covering_radius(code: Code) -> int:
    """Overdekningsradius ρ = største ledervekt."""
    return coset_profile(code).covering_radius


def _parity(values: np.ndarray) -> np.ndarray:
    """Paritet av antall satte bit for hvert element (int64, ikke-negative)."""
    v = values.copy()
    for shift in (32, 16, 8, 4, 2, 1):
        v ^= v >> shift
    return v & 1


def dual_weights(check: BitMatrix, threads: int = 1) -> np.ndarray:
    """
    Vektene til alle 2^r ord i radrommet til kontrollmatrisen.

    Indeks y gir ordet Σ y_i·rad_i der rad 0 er mest signifikante bit i y,
    samme konvensjon som for syndromer.

    Args:
        check: Kontrollmatrise med uavhengige rader
        threads: Antall tråder for blokkvis opplisting

    Raises:
        ValueError: Hvis r > 24
    """
    r, n = check.shape
    if r > MACWILLIAMS_MAX_REDUNDANCY:
        raise ValueError(f"Dual dimensjon {r} er over grensen {MACWILLIAMS_MAX_REDUNDANCY}")
    if r > 20:
        warnings.warn(f"Oppramsing av 2^{r} duale kodeord kan ta lang tid", UserWarning)
    rows = check.array
    low_count = min(r, _LOW_BLOCK_ROWS)
    high_rows, low_rows = rows[: r - low_count], rows[r - low_count:]

    # siste rad blir minst signifikante bit
    low_words = np.zeros((1, n), dtype=np.uint8)
    for row in low_rows[::-1]:
        low_words = np.vstack([low_words, low_words ^ row])

    high_count = 1 << (r - low_count)
    block = low_words.shape[0]
    result = np.empty(high_count * block, dtype=np.int64)

    def fill(h: int) -> None:
        offset = np.zeros(n, dtype=np.uint8)
        for i, row in enumerate(high_rows):
            if (h >> (len(high_rows) - 1 - i)) & 1:
                offset ^= row
        result[h * block:(h + 1) * block] = (low_words ^ offset).sum(axis=1)

    if threads > 1 and high_count > 1:
        with ThreadPoolExecutor(max_workers=threads) as executor:
            list(executor.map(fill, range(high_count)))
    else:
        for h in range(high_count):
            fill(h)
    return result


def _signed_weight_counts(weights: np.ndarray, s: int, n: int) -> np.ndarray:
    """N[w] = Σ_y (-1)^{y·s} [wt(y) = w] som heltallsarray."""
    index = np.arange(weights.size, dtype=np.int64)
    negative = _parity(index & s).astype(bool)
    plus = np.bincount(weights[~negative], minlength=n + 1)
    minus = np.bincount(weights[negative], minlength=n + 1)
    return plus.astype(np.int64) - minus.astype(np.int64)


def _macwilliams_from_signed(signed: np.ndarray, n: int, r: int) -> Dict[int, int]:
    table = krawtchouk_table(n)
    scale = 1 << r
    counts: Dict[int, int] = {}
    support = [w for w in range(n + 1) if signed[w]]
    for j in range(n + 1):
        total = sum(int(signed[w]) * table[j][w] for w in support)
        if total % scale:
            raise RuntimeError(f"Ikke-heltallig MacWilliams-koeffisient A_{j} = {total}/{scale}")
        value = total // scale
        if value < 0:
            raise RuntimeError(f"Negativ MacWilliams-koeffisient A_{j} = {value}")
        if value:
            counts[j] = value
    return counts


def coset_weights_macwilliams(code: Code, x: BitVec, threads: int = 1) -> WeightHistogram:
    """
    Vektfordelingen til sideklassen x + C via MacWilliams-transformasjonen.

    A_j(x + C) = 2^{-r} Σ_{u i dualkoden} (-1)^{u·x} K_j(wt(u); n).

    Args:
        code: Koden (dual dimensjon r ≤ 24)
        x: Representant for sideklassen
        threads: Antall tråder for opplisting av dualkoden

    Raises:
        ValueError: Ved lengdeavvik eller for stor dual dimensjon
        RuntimeError: Ved ikke-heltallige eller negative koeffisienter
    """
    check = code.check_matrix
    s = syndrome_int(check, x)
    weights = dual_weights(check, threads=threads)
    signed = _signed_weight_counts(weights, s, code.length)
    return WeightHistogram(_macwilliams_from_signed(signed, code.length, check.n_rows), code.length)


def macwilliams_coset_histograms(code: Code, threads: int = 1) -> Dict[int, WeightHistogram]:
    """MacWilliams-histogram for hver sideklasse, nøklet på syndrom."""
    check = code.check_matrix
    n, r = code.length, check.n_rows
    weights = dual_weights(check, threads=threads)

    def compute(s: int) -> WeightHistogram:
        signed = _signed_weight_counts(weights, s, n)
        return WeightHistogram(_macwilliams_from_signed(signed, n, r), n)

    syndromes = range(1 << r)
    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as executor:
            histograms = list(executor.map(compute, syndromes))
    else:
        histograms = [compute(s) for s in syndromes]
    return dict(zip(syndromes, histograms))


def _enumerate_space(code: Code) -> Tuple[np.ndarray, np.ndarray]:
    n = code.length
    if n > EXHAUSTIVE_MAX_LENGTH:
        raise ValueError(f"Uttømmende oppramsing krever n ≤ {EXHAUSTIVE_MAX_LENGTH}, fikk n = {n}")
    columns = code.check_matrix.column_ints
    syndromes = np.zeros(1, dtype=np.int64)
    weights = np.zeros(1, dtype=np.int64)
    for column in columns:
        syndromes = np.concatenate([syndromes, syndromes ^ column])
        weights = np.concatenate([weights, weights + 1])
    return syndromes, weights


def exhaustive_coset_histograms(code: Code) -> Dict[int, WeightHistogram]:
    """
    Vektfordeling for hver sideklasse ved å binne alle 2^n vektorer etter syndrom.

    Raises:
        ValueError: Hvis n > 24
    """
    n = code.length
    size = 1 << code.check_matrix.n_rows
    syndromes, weights = _enumerate_space(code)
    table = np.bincount(syndromes * (n + 1) + weights, minlength=size * (n + 1)).reshape(size, n + 1)
    return {s: WeightHistogram({w: int(v) for w, v in enumerate(table[s])}, n) for s in range(size)}


def exhaustive_leader_weights(code: Code) -> np.ndarray:
    """Minste vekt i hver sideklasse funnet ved uttømmende søk."""
    size = 1 << code.check_matrix.n_rows
    syndromes, weights = _enumerate_space(code)
    result = np.full(size, np.iinfo(np.int64).max, dtype=np.int64)
    np.minimum.at(result, syndromes, weights)
    return result


def expected_dual_weights(m: int, pair) -> Set[int]:
    """
    Vektmengden for den lineære halvdelen av sideklassen v* + dualkoden.

    Odde differanse gir {2^{m-1} ± 2^{m/2-1}}, {1,3} gir {0, 2^{m-1}} og
    {0,2} gir {2^{m-1}, 2^m}.
    """
    _require_even(m)
    pair = _coerce_pair(pair)
    half = 2 ** (m - 1)
    if pair.parity_flag:
        return {half - 2 ** (m // 2 - 1), half + 2 ** (m // 2 - 1)}
    if pair == WeightClassPair(1, 3):
        return {0, half}
    return {half, 2 ** m}


def dual_coset_histogram(m: int, pair, include_complements: bool = True) -> WeightHistogram:
    """
    Vektfordelingen til v* + u der u løper over radrommet til H*_m.

    Args:
        m: Partall, m ≥ 4
        pair: Vektklassepar
        include_complements: Sann gir alle 2^{m+1} ord; usann gir halvdelen
            der alle-enere-raden ikke inngår (2^m ord)

    Returns:
        WeightHistogram over lengde 2^m

    Examples:
        >>> dual_coset_histogram(4, "1,2").counts
        {6: 16, 10: 16}
    """
    _require_even(m)
    v_star = extend_vector(weight_class_vector(m, pair))
    parity = extended_hamming_parity(m)
    rows = parity if include_complements else BitMatrix(parity.array[:m])
    words = rows.span() ^ v_star.bits[np.newaxis, :]
    return WeightHistogram.from_weights(words.sum(axis=1), 2 ** m)
