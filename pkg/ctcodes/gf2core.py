"""
Bitpakket lineær algebra over GF(2).

Dette modulet inneholder byggesteinene som alle andre moduler bruker:
- BitVec: binær vektor med fast lengde
- BitMatrix: binær matrise med radrom, rang og nullrom
- Vekter, Hamming-avstand og Krawtchouk-polynomer

Konvensjoner:
- Koordinatposisjoner er 0-indeksert internt; rapporter skriver 1-indeksert.
- En kolonne eller et syndrom leses ovenfra og ned som et binært tall
  (rad 0 er mest signifikante bit).
- Alle objekter er uforanderlige etter konstruksjon. Operasjoner returnerer
  nye objekter og endrer aldri input.
"""

from functools import cached_property, lru_cache
from typing import Dict, Iterable, Iterator, List, Optional, Sequence, Tuple, Union

import numpy as np
from scipy.special import comb


ArrayLike = Union[Sequence[int], np.ndarray]


def popcount(value: int) -> int:
    """Antall satte bit i et ikke-negativt heltall."""
    return bin(value).count("1")


def int_to_bits(value: int, length: int) -> np.ndarray:
    """Heltall til bitarray med mest signifikante bit først."""
    if value < 0 or value >> length:
        raise ValueError(f"Verdien {value} får ikke plass i {length} bit")
    shifts = np.arange(length - 1, -1, -1, dtype=np.int64)
    return ((value >> shifts) & 1).astype(np.uint8) if length else np.zeros(0, dtype=np.uint8)


def bits_to_int(bits: ArrayLike) -> int:
    """Bitarray (mest signifikante bit først) til heltall."""
    value = 0
    for bit in np.asarray(bits, dtype=np.uint8):
        value = (value << 1) | int(bit & 1)
    return value


def _frozen(array: np.ndarray) -> np.ndarray:
    array.setflags(write=False)
    return array


class BitVec:
    """
    Binær vektor med fast lengde over GF(2).

    Vektoren har verdisemantikk: lengden kan ikke endres, og addisjon
    returnerer en ny vektor.
    """

    def __init__(self, bits: ArrayLike):
        """
        Initialiserer vektoren.

        Args:
            bits: Sekvens av 0/1-verdier (reduseres modulo 2)

        Raises:
            ValueError: Hvis input ikke er endimensjonal
        """
        array = np.array(bits, dtype=np.int64)
        if array.ndim != 1:
            raise ValueError(f"BitVec krever endimensjonal input, fikk form {array.shape}")
        self._bits = _frozen((array % 2).astype(np.uint8))

    @classmethod
    def zeros(cls, length: int) -> "BitVec":
        return cls(np.zeros(length, dtype=np.uint8))

    @classmethod
    def ones(cls, length: int) -> "BitVec":
        return cls(np.ones(length, dtype=np.uint8))

    @classmethod
    def unit(cls, length: int, position: int) -> "BitVec":
        """Enhetsvektor e_i med 1 i posisjon `position`."""
        if not 0 <= position < length:
            raise ValueError(f"Posisjon {position} utenfor 0..{length - 1}")
        bits = np.zeros(length, dtype=np.uint8)
        bits[position] = 1
        return cls(bits)

    @classmethod
    def from_support(cls, length: int, support: Iterable[int]) -> "BitVec":
        """Lager vektor fra mengden av satte posisjoner."""
        bits = np.zeros(length, dtype=np.uint8)
        for position in support:
            if not 0 <= position < length:
                raise ValueError(f"Posisjon {position} utenfor 0..{length - 1}")
            bits[position] ^= 1
        return cls(bits)

    @classmethod
    def from_int(cls, value: int, length: int) -> "BitVec":
        return cls(int_to_bits(value, length))

    @classmethod
    def from_string(cls, text: str) -> "BitVec":
        """Leser en streng som '01101'."""
        text = text.strip()
        if any(ch not in "01" for ch in text):
            raise ValueError(f"Ugyldig bitstreng: {text!r}")
        return cls([int(ch) for ch in text])

    @property
    def bits(self) -> np.ndarray:
        """Skrivebeskyttet uint8-array med 0/1-verdier."""
        return self._bits

    @property
    def length(self) -> int:
        return int(self._bits.size)

    def __len__(self) -> int:
        return self.length

    def __getitem__(self, position: int) -> int:
        return int(self._bits[position])

    def __iter__(self) -> Iterator[int]:
        return (int(bit) for bit in self._bits)

    def _check_length(self, other: "BitVec") -> None:
        if other.length != self.length:
            raise ValueError(f"Ulik lengde: {self.length} og {other.length}")

    def __add__(self, other: "BitVec") -> "BitVec":
        self._check_length(other)
        return BitVec(self._bits ^ other._bits)

    __xor__ = __add__

    def dot(self, other: "BitVec") -> int:
        """Indreprodukt over GF(2)."""
        self._check_length(other)
        return int(np.count_nonzero(self._bits & other._bits) & 1)

    def support(self) -> Tuple[int, ...]:
        return tuple(int(i) for i in np.flatnonzero(self._bits))

    def to_int(self) -> int:
        return bits_to_int(self._bits)

    def to_string(self) -> str:
        return "".join(str(int(bit)) for bit in self._bits)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, BitVec):
            return NotImplemented
        return self.length == other.length and bool(np.array_equal(self._bits, other._bits))

    def __hash__(self) -> int:
        return hash((self.length, self._bits.tobytes()))

    def __repr__(self) -> str:
        return f"BitVec('{self.to_string()}')"


class BitMatrix:
    """
    Binær r×n matrise over GF(2).

    Radredusert form (RREF) beregnes ved første behov og caches, slik at
    rang, radromstest og nullrom deler samme eliminasjon.
    """

    def __init__(self, rows: Union[ArrayLike, Sequence[BitVec]], n_cols: Optional[int] = None):
        """
        Initialiserer matrisen.

        Args:
            rows: 2D-array eller liste av BitVec/lister med lik lengde
            n_cols: Antall kolonner når `rows` er tom

        Raises:
            ValueError: Ved rader med ulik lengde
        """
        if isinstance(rows, np.ndarray):
            array = np.array(rows, dtype=np.int64)
        else:
            row_list = [r.bits if isinstance(r, BitVec) else np.asarray(r) for r in rows]
            if not row_list:
                array = np.zeros((0, n_cols or 0), dtype=np.int64)
            else:
                lengths = {len(r) for r in row_list}
                if len(lengths) != 1:
                    raise ValueError(f"Alle rader må ha lik lengde, fikk {sorted(lengths)}")
                array = np.array(row_list, dtype=np.int64)
        if array.ndim != 2:
            raise ValueError(f"BitMatrix krever todimensjonal input, fikk form {array.shape}")
        self._array = _frozen((array % 2).astype(np.uint8))

    @classmethod
    def identity(cls, n: int) -> "BitMatrix":
        return cls(np.eye(n, dtype=np.uint8))

    @classmethod
    def zeros(cls, n_rows: int, n_cols: int) -> "BitMatrix":
        return cls(np.zeros((n_rows, n_cols), dtype=np.uint8))

    @classmethod
    def from_columns(cls, columns: Sequence[int], n_rows: int) -> "BitMatrix":
        """Lager matrise fra kolonner gitt som heltall (rad 0 = mest signifikante bit)."""
        if not len(columns):
            return cls(np.zeros((n_rows, 0), dtype=np.uint8))
        return cls(np.stack([int_to_bits(c, n_rows) for c in columns], axis=1))

    @classmethod
    def from_text(cls, text: str) -> "BitMatrix":
        """
        Leser tekstformatet: første linje "r n", deretter r rader med '0'/'1'.

        Raises:
            ValueError: Ved feil format eller dimensjoner
        """
        lines = [line.strip() for line in text.strip().splitlines() if line.strip()]
        if not lines:
            raise ValueError("Tom matrisefil")
        try:
            n_rows, n_cols = (int(token) for token in lines[0].split())
        except ValueError:
            raise ValueError(f"Ugyldig header i matrisefil: {lines[0]!r}") from None
        body = lines[1:]
        if len(body) != n_rows or any(len(line) != n_cols for line in body):
            raise ValueError(f"Matrisefilen stemmer ikke med header {n_rows}×{n_cols}")
        return cls([BitVec.from_string(line) for line in body], n_cols=n_cols)

    def to_text(self) -> str:
        lines = [f"{self.n_rows} {self.n_cols}"]
        lines.extend("".join(str(int(b)) for b in row) for row in self._array)
        return "\n".join(lines) + "\n"

    @property
    def array(self) -> np.ndarray:
        """Skrivebeskyttet uint8-array med form (r, n)."""
        return self._array

    @property
    def shape(self) -> Tuple[int, int]:
        return (int(self._array.shape[0]), int(self._array.shape[1]))

    @property
    def n_rows(self) -> int:
        return self.shape[0]

    @property
    def n_cols(self) -> int:
        return self.shape[1]

    def row(self, index: int) -> BitVec:
        return BitVec(self._array[index])

    def rows(self) -> List[BitVec]:
        return [BitVec(r) for r in self._array]

    def column(self, index: int) -> BitVec:
        return BitVec(self._array[:, index])

    @cached_property
    def column_ints(self) -> Tuple[int, ...]:
        """Kolonnene som heltall, lest ovenfra og ned."""
        weights = np.array([1 << (self.n_rows - 1 - i) for i in range(self.n_rows)], dtype=object)
        return tuple(int(x) for x in weights.dot(self._array.astype(object))) if self.n_rows else (0,) * self.n_cols

    def stack(self, *others: Union["BitMatrix", BitVec]) -> "BitMatrix":
        """Stabler flere rader/matriser under denne."""
        blocks = [self._array]
        for other in others:
            block = other.array if isinstance(other, BitMatrix) else other.bits[np.newaxis, :]
            if block.shape[1] != self.n_cols:
                raise ValueError(f"Ulikt antall kolonner: {self.n_cols} og {block.shape[1]}")
            blocks.append(block)
        return BitMatrix(np.vstack(blocks))

    def permute_columns(self, permutation: Sequence[int]) -> "BitMatrix":
        """
        Flytter kolonne i til posisjon permutation[i].

        Args:
            permutation: Bijeksjon på 0..n-1
        """
        if sorted(permutation) != list(range(self.n_cols)):
            raise ValueError("Ugyldig permutasjon av kolonner")
        result = np.empty_like(self._array)
        result[:, list(permutation)] = self._array
        return BitMatrix(result)

    def transpose(self) -> "BitMatrix":
        return BitMatrix(self._array.T)

    def multiply_vector(self, vector: BitVec) -> BitVec:
        """Beregner M·vᵀ over GF(2)."""
        if vector.length != self.n_cols:
            raise ValueError(f"Vektorlengde {vector.length} passer ikke med {self.n_cols} kolonner")
        return BitVec(self._array.astype(np.int64) @ vector.bits.astype(np.int64))

    def __matmul__(self, other: "BitMatrix") -> "BitMatrix":
        if self.n_cols != other.n_rows:
            raise ValueError(f"Dimensjonsfeil: {self.shape} · {other.shape}")
        return BitMatrix(self._array.astype(np.int64) @ other.array.astype(np.int64))

    @cached_property
    def _rref(self) -> Tuple[np.ndarray, Tuple[int, ...]]:
        """Redusert trappeform og pivotkolonner (Gauss-Jordan med XOR)."""
        mat = self._array.copy()
        n_rows, n_cols = mat.shape
        pivots: List[int] = []
        row = 0
        for col in range(n_cols):
            if row == n_rows:
                break
            candidates = np.flatnonzero(mat[row:, col])
            if candidates.size == 0:
                continue
            pivot = row + int(candidates[0])
            if pivot != row:
                mat[[row, pivot]] = mat[[pivot, row]]
            hits = np.flatnonzero(mat[:, col])
            hits = hits[hits != row]
            mat[hits] ^= mat[row]
            pivots.append(col)
            row += 1
        return _frozen(mat[: len(pivots)].copy()), tuple(pivots)

    @property
    def rank(self) -> int:
        return len(self._rref[1])

    def reduce(self, vector: BitVec) -> BitVec:
        """Reduserer vektoren mot radrommet; resultatet er null hvis og bare hvis v ligger i radrommet."""
        if vector.length != self.n_cols:
            raise ValueError(f"Vektorlengde {vector.length} passer ikke med {self.n_cols} kolonner")
        basis, pivots = self._rref
        work = vector.bits.copy()
        for row, col in enumerate(pivots):
            if work[col]:
                work ^= basis[row]
        return BitVec(work)

    def contains(self, vector: BitVec) -> bool:
        """Sjekker om vektoren er en GF(2)-kombinasjon av radene."""
        return not self.reduce(vector).bits.any()

    def row_space_basis(self) -> "BitMatrix":
        return BitMatrix(self._rref[0], n_cols=self.n_cols)

    def independent_rows(self) -> "BitMatrix":
        """
        Grådig delmengde av radene som er lineært uavhengig.

        Radene beholdes i opprinnelig rekkefølge; en rad hoppes over når den
        ligger i spennet av radene som allerede er valgt.
        """
        chosen: List[np.ndarray] = []
        for row in self._array:
            candidate = chosen + [row]
            if BitMatrix(np.array(candidate)).rank == len(candidate):
                chosen.append(row)
        return BitMatrix(np.array(chosen, dtype=np.uint8).reshape(len(chosen), self.n_cols))

    def nullspace(self) -> "BitMatrix":
        """Basis for {x : M·xᵀ = 0}, én basisvektor per fri kolonne."""
        basis, pivots = self._rref
        free = [c for c in range(self.n_cols) if c not in set(pivots)]
        vectors = np.zeros((len(free), self.n_cols), dtype=np.uint8)
        for index, col in enumerate(free):
            vectors[index, col] = 1
            for row, pivot in enumerate(pivots):
                if basis[row, col]:
                    vectors[index, pivot] = 1
        return BitMatrix(vectors, n_cols=self.n_cols)

    def span(self) -> np.ndarray:
        """
        Alle 2^rank vektorer i radrommet som uint8-array.

        Raises:
            ValueError: Hvis rangen er over 20 (for stort til å liste)
        """
        basis = self._rref[0]
        if basis.shape[0] > 20:
            raise ValueError(f"Radrom av dimensjon {basis.shape[0]} er for stort til å listes")
        words = np.zeros((1, self.n_cols), dtype=np.uint8)
        for row in basis:
            words = np.vstack([words, words ^ row])
        return words

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, BitMatrix):
            return NotImplemented
        return self.shape == other.shape and bool(np.array_equal(self._array, other._array))

    def __hash__(self) -> int:
        return hash((self.shape, self._array.tobytes()))

    def __repr__(self) -> str:
        return f"BitMatrix({self.n_rows}×{self.n_cols}, rank={self.rank})"


def weight(v: BitVec) -> int:
    """Hamming-vekt: antall satte posisjoner."""
    return int(np.count_nonzero(v.bits))


def weight_mod(v: BitVec, i: int) -> int:
    """
    Vekten redusert modulo i.

    Raises:
        ValueError: Hvis i < 2
    """
    if i < 2:
        raise ValueError(f"Modulus må være minst 2, fikk {i}")
    return weight(v) % i


def hamming_distance(x: BitVec, y: BitVec) -> int:
    """Antall posisjoner der x og y er ulike; lik weight(x + y)."""
    return weight(x + y)


def rank(matrix: BitMatrix) -> int:
    """Radrangen over GF(2)."""
    return matrix.rank


def in_row_space(matrix: BitMatrix, v: BitVec) -> bool:
    """Sann hvis v er en GF(2)-kombinasjon av radene i matrisen."""
    return matrix.contains(v)


def _check_krawtchouk_args(j: int, w: int, n: int) -> None:
    if n < 1:
        raise ValueError(f"Lengden n må være positiv, fikk {n}")
    if not (0 <= j <= n and 0 <= w <= n):
        raise ValueError(f"Krawtchouk-argumenter utenfor område: j={j}, w={w}, n={n}")


def krawtchouk(j: int, w: int, n: int) -> int:
    """
    Binær Krawtchouk-verdi K_j(w; n).

    Beregnes eksakt med tretermsrekursjonen
    (t+1)·K_{t+1} = (n - 2w)·K_t - (n - t + 1)·K_{t-1}.

    Args:
        j: Grad (0 ≤ j ≤ n)
        w: Vekt (0 ≤ w ≤ n)
        n: Lengde

    Returns:
        Heltallsverdien av K_j(w; n)

    Raises:
        ValueError: Ved argumenter utenfor området

    Examples:
        >>> krawtchouk(2, 1, 15)
        77
    """
    _check_krawtchouk_args(j, w, n)
    previous, current = 1, n - 2 * w
    if j == 0:
        return previous
    for t in range(1, j):
        numerator = (n - 2 * w) * current - (n - t + 1) * previous
        if numerator % (t + 1):
            raise RuntimeError(f"Ikke-heltallig Krawtchouk-rekursjon ved t={t}, w={w}, n={n}")
        previous, current = current, numerator // (t + 1)
    return current


def krawtchouk_direct(j: int, w: int, n: int) -> int:
    """K_j(w; n) fra binomialsummen Σ_t (-1)^t C(w,t) C(n-w, j-t)."""
    _check_krawtchouk_args(j, w, n)
    return sum(
        (-1) ** t * int(comb(w, t, exact=True)) * int(comb(n - w, j - t, exact=True))
        for t in range(0, j + 1)
    )


@lru_cache(maxsize=None)
def krawtchouk_table(n: int) -> Tuple[Tuple[int, ...], ...]:
    """Tabell T[j][w] = K_j(w; n) for 0 ≤ j, w ≤ n."""
    return tuple(tuple(krawtchouk(j, w, n) for w in range(n + 1)) for j in range(n + 1))


def binomial_census(length: int) -> Dict[int, int]:
    """Antall vektorer av hver vekt i F_2^length."""
    return {w: int(comb(length, w, exact=True)) for w in range(length + 1)}
