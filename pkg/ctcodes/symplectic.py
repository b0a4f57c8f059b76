"""
Automorfigrupper for vektklassekodene.

Innhold:
- Boolske vektklassefunksjoner f_{i1,i2} og de kvadratiske identitetene
- Den symplektiske formen B og Gram-matrisen
- Transveksjoner og lukning av Sp(m,2) ved bredde-først-søk
- Indusert virkning på koordinatposisjoner og sideklasser
- Aut(C*) = Aut(C) ⋉ F_2^m for de utvidede kodene
- Baneopptelling som sertifiserer fullstendig transitivitet

Vektorer i F_2^m representeres som heltall med samme bitkonvensjon som
kolonnene i H_m. B avhenger bare av vekter og felles støtte, så
bitrekkefølgen påvirker ikke formen.
"""

import itertools
import logging
from concurrent.futures import ThreadPoolExecutor
from functools import cached_property
from typing import Callable, Dict, Iterable, Iterator, List, Optional, Sequence, Set, Tuple, Union

import numpy as np

from .construct import (
    Code, CodeFactory, WeightClassPair, _coerce_pair, _require_even, extend_code,
)
from .cosets import CosetProfile, coset_profile
from .gf2core import BitMatrix, BitVec, bits_to_int, popcount

logger = logging.getLogger(__name__)

# Største m for full gruppelukning
MAX_CLOSURE_M = 6
DEFAULT_CLOSURE_CAP = 2_000_000
DEFAULT_EXTENDED_CAP = 200_000
# Antall generatorer som behandles samlet i hvert lukningslag
_GENERATOR_BATCH = 8


def _as_int(x: Union[int, BitVec]) -> int:
    return x.to_int() if isinstance(x, BitVec) else int(x)


def symplectic_form_int(u: int, v: int) -> int:
    """B(u, v) = u(J + I)vᵀ = wt(u)·wt(v) + |supp(u) ∩ supp(v)| modulo 2."""
    return (popcount(u) & popcount(v) & 1) ^ (popcount(u & v) & 1)


def symplectic_group_order(m: int) -> int:
    """|Sp(m,2)| = 2^{(m/2)^2} · Π_{i=1}^{m/2} (2^{2i} - 1)."""
    if m % 2:
        raise ValueError(f"m må være partall, fikk m = {m}")
    half = m // 2
    order = 2 ** (half * half)
    for i in range(1, half + 1):
        order *= 2 ** (2 * i) - 1
    return order


def boolean_f(m: int, pair, x: Union[int, BitVec]) -> int:
    """
    f_{i1,i2}(x) = 1 når wt(x) ≡ i1 eller i2 modulo 4.

    Definert på hele F_2^m, også x = 0.

    Raises:
        ValueError: Ved odde m eller feil lengde på x

    Examples:
        >>> boolean_f(4, "0,1", 0)
        1
    """
    if m % 2:
        raise ValueError(f"m må være partall, fikk m = {m}")
    if isinstance(x, BitVec) and x.length != m:
        raise ValueError(f"x må ha lengde {m}, fikk {x.length}")
    value = _as_int(x)
    if value >> m:
        raise ValueError(f"x = {value} ligger ikke i F_2^{m}")
    return int(_coerce_pair(pair).contains(popcount(value)))


class QuadraticFormSpec:
    """
    Q (alle-enere strengt øvre triangulær), L (alle-enere) og ε = 1.

    Identitetene som sjekkes er
    f_{2,3} = xQxᵀ, f_{1,2} = xQxᵀ + Lxᵀ, f_{0,1} = xQxᵀ + ε og
    f_{0,3} = xQxᵀ + Lxᵀ + ε.
    """

    def __init__(self, m: int):
        self.m = m
        self.Q = BitMatrix(np.triu(np.ones((m, m), dtype=np.uint8), k=1))
        self.L = BitVec.ones(m)
        self.epsilon = 1

    def quadratic(self, points: np.ndarray) -> np.ndarray:
        """xQxᵀ for hver rad i points (N×m)."""
        x = points.astype(np.int64)
        return ((x @ self.Q.array.astype(np.int64)) * x).sum(axis=1) % 2

    def linear(self, points: np.ndarray) -> np.ndarray:
        return (points.astype(np.int64) @ self.L.bits.astype(np.int64)) % 2

    def right_hand_sides(self, points: np.ndarray) -> Dict[str, np.ndarray]:
        q = self.quadratic(points)
        lin = self.linear(points)
        return {
            "2,3": q,
            "1,2": (q + lin) % 2,
            "0,1": (q + self.epsilon) % 2,
            "0,3": (q + lin + self.epsilon) % 2,
        }


def _all_points(m: int) -> np.ndarray:
    values = np.arange(2 ** m, dtype=np.int64)
    shifts = np.arange(m - 1, -1, -1, dtype=np.int64)
    return ((values[:, np.newaxis] >> shifts[np.newaxis, :]) & 1).astype(np.uint8)


def verify_quadratic_identities(m: int) -> Dict[str, bool]:
    """
    Sjekker de fire kvadratiske identitetene i alle 2^m punkter.

    Returns:
        Parets etikett -> bestått
    """
    _require_even(m)
    spec = QuadraticFormSpec(m)
    points = _all_points(m)
    weights = points.sum(axis=1)
    result = {}
    for label, rhs in spec.right_hand_sides(points).items():
        f_values = WeightClassPair.parse(label).mask(weights)
        result[label] = bool(np.array_equal(f_values, rhs))
    return result


def symplectic_form(m: int, pair) -> Callable[[Union[int, BitVec], Union[int, BitVec]], int]:
    """
    B(u, v) = f(u + v) + f(u) + f(v) + ε for et par med odde differanse.

    Raises:
        ValueError: Hvis paret har like differanse
    """
    pair = _coerce_pair(pair)
    if not pair.parity_flag:
        raise ValueError(f"Paret {{{pair.label}}} har like differanse og gir ingen symplektisk form")

    def form(u: Union[int, BitVec], v: Union[int, BitVec]) -> int:
        a, b = _as_int(u), _as_int(v)
        return boolean_f(m, pair, a ^ b) ^ boolean_f(m, pair, a) ^ boolean_f(m, pair, b) ^ pair.epsilon

    return form


def gram_matrix(m: int, pair) -> BitMatrix:
    """G[i][j] = B(b_i, b_j) for standardbasisen."""
    form = symplectic_form(m, pair)
    basis = [1 << (m - 1 - i) for i in range(m)]
    return BitMatrix([[form(u, v) for v in basis] for u in basis])


def verify_nondegenerate(m: int, pair) -> bool:
    """
    Sann når Gram-matrisen har rang m.

    Raises:
        ValueError: Ved odde m (J + I er singulær for odde m)
    """
    if m % 2:
        raise ValueError(f"m må være partall, fikk m = {m}")
    return gram_matrix(m, pair).rank == m


class GroupElement:
    """
    Inverterbar m×m matrise K over GF(2).

    Lagres som bildene K·b_i av basisvektorene b_i = 1 << i.
    """

    def __init__(self, m: int, images: Sequence[int]):
        """
        Args:
            m: Dimensjon
            images: K·(1 << i) for i = 0..m-1

        Raises:
            ValueError: Hvis matrisen ikke er inverterbar
        """
        if len(images) != m:
            raise ValueError(f"Forventet {m} bilder, fikk {len(images)}")
        self.m = m
        self.images = tuple(int(x) for x in images)
        if BitMatrix.from_columns(self.images, m).rank != m:
            raise ValueError("Matrisen K er ikke inverterbar")

    @classmethod
    def identity(cls, m: int) -> "GroupElement":
        return cls(m, [1 << i for i in range(m)])

    @classmethod
    def from_key(cls, m: int, key: int) -> "GroupElement":
        mask = (1 << m) - 1
        return cls(m, [(key >> (m * i)) & mask for i in range(m)])

    @classmethod
    def from_matrix(cls, matrix: BitMatrix) -> "GroupElement":
        """Fra m×m matrise med rad 0 som mest signifikante bit."""
        m = matrix.n_rows
        if matrix.shape != (m, m):
            raise ValueError(f"Forventet kvadratisk matrise, fikk {matrix.shape}")
        columns = matrix.column_ints
        return cls(m, [columns[m - 1 - i] for i in range(m)])

    @property
    def key(self) -> int:
        """Pakket nøkkel Σ bilde_i << (m·i)."""
        return sum(image << (self.m * i) for i, image in enumerate(self.images))

    @cached_property
    def table(self) -> np.ndarray:
        """K·x for alle x i F_2^m."""
        table = np.zeros(1, dtype=np.int64)
        for image in self.images:
            table = np.concatenate([table, table ^ image])
        table.setflags(write=False)
        return table

    @property
    def matrix(self) -> BitMatrix:
        return BitMatrix.from_columns([self.images[self.m - 1 - c] for c in range(self.m)], self.m)

    def apply(self, x: Union[int, BitVec]) -> int:
        return int(self.table[_as_int(x)])

    def compose(self, other: "GroupElement") -> "GroupElement":
        """(self ∘ other)(x) = self(other(x))."""
        return GroupElement(self.m, [self.apply(image) for image in other.images])

    def __mul__(self, other: "GroupElement") -> "GroupElement":
        return self.compose(other)

    def inverse(self) -> "GroupElement":
        inverse = np.empty_like(self.table)
        inverse[self.table] = np.arange(self.table.size)
        return GroupElement(self.m, [int(inverse[1 << i]) for i in range(self.m)])

    def is_identity(self) -> bool:
        return self.images == tuple(1 << i for i in range(self.m))

    def column_permutation(self, columns: Sequence[int]) -> Tuple[int, ...]:
        """
        Posisjon i går til posisjonen j der kolonne j er K·(kolonne i).

        Raises:
            ValueError: Hvis bildet av en kolonne ikke finnes blant kolonnene
        """
        position = {value: j for j, value in enumerate(columns)}
        try:
            return tuple(position[int(self.table[c])] for c in columns)
        except KeyError:
            raise ValueError("Kolonnemengden er ikke invariant under K") from None

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, GroupElement):
            return NotImplemented
        return self.m == other.m and self.images == other.images

    def __hash__(self) -> int:
        return hash((self.m, self.images))

    def __repr__(self) -> str:
        return f"GroupElement(m={self.m}, key={self.key:#x})"


def transvection(m: int, a: Union[int, BitVec]) -> GroupElement:
    """
    Transveksjonen T_a: x ↦ x + B(x, a)·a.

    Raises:
        ValueError: Hvis a = 0
    """
    value = _as_int(a)
    if value == 0:
        raise ValueError("Transveksjon krever a ≠ 0")
    if value >> m:
        raise ValueError(f"a = {value} ligger ikke i F_2^{m}")
    images = []
    for i in range(m):
        x = 1 << i
        images.append(x ^ value if symplectic_form_int(x, value) else x)
    return GroupElement(m, images)


def all_transvections(m: int) -> List[GroupElement]:
    """Alle 2^m - 1 transveksjoner, ordnet etter a."""
    return [transvection(m, a) for a in range(1, 2 ** m)]


def preserves_form(element: GroupElement) -> bool:
    """B(Ku, Kv) = B(u, v) for alle basispar (tilstrekkelig ved bilinearitet)."""
    m = element.m
    for i, j in itertools.combinations_with_replacement(range(m), 2):
        u, v = 1 << i, 1 << j
        if symplectic_form_int(element.apply(u), element.apply(v)) != symplectic_form_int(u, v):
            return False
    return True


class UnionFind:
    """Disjunkte mengder med stikomprimering og rang."""

    def __init__(self, items: Iterable[int]):
        self.parent = {x: x for x in items}
        self.rank = {x: 0 for x in self.parent}

    def find(self, x: int) -> int:
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, x: int, y: int) -> None:
        x, y = self.find(x), self.find(y)
        if x == y:
            return
        if self.rank[x] < self.rank[y]:
            x, y = y, x
        elif self.rank[x] == self.rank[y]:
            self.rank[x] += 1
        self.parent[y] = x

    def groups(self) -> List[Tuple[int, ...]]:
        """Klassene sortert etter minste element."""
        classes: Dict[int, List[int]] = {}
        for x in sorted(self.parent):
            classes.setdefault(self.find(x), []).append(x)
        return sorted((tuple(c) for c in classes.values()), key=lambda c: c[0])


class GroupClosure:
    """
    Endelig matrisegruppe lagret som sortert array av pakkede nøkler.
    """

    def __init__(self, m: int, keys: np.ndarray, generators: Sequence[GroupElement],
                 generator_log: Sequence[Tuple[int, int]]):
        self.m = m
        self.keys = keys
        self.generators = list(generators)
        self.generator_log = list(generator_log)

    @property
    def order(self) -> int:
        return int(self.keys.size)

    def __len__(self) -> int:
        return self.order

    def __contains__(self, element: GroupElement) -> bool:
        key = element.key
        index = int(np.searchsorted(self.keys, key))
        return index < self.keys.size and int(self.keys[index]) == key

    def __iter__(self) -> Iterator[GroupElement]:
        return (GroupElement.from_key(self.m, int(key)) for key in self.keys)

    def dump_hex(self) -> str:
        """Én pakket nøkkel per linje i heksadesimal, sortert."""
        width = -(-self.m * self.m // 4)
        return "".join(f"{int(key):0{width}x}\n" for key in self.keys)

    def __repr__(self) -> str:
        return f"GroupClosure(m={self.m}, order={self.order})"


def _apply_left(table: np.ndarray, keys: np.ndarray, m: int) -> np.ndarray:
    """Nøklene til g·x for alle x, gitt tabellen til g."""
    mask = (1 << m) - 1
    result = np.zeros_like(keys)
    for i in range(m):
        result |= table[(keys >> (m * i)) & mask] << (m * i)
    return result


def _not_in_sorted(sorted_keys: np.ndarray, candidates: np.ndarray) -> np.ndarray:
    index = np.searchsorted(sorted_keys, candidates)
    index = np.minimum(index, max(sorted_keys.size - 1, 0))
    return candidates[sorted_keys[index] != candidates]


def group_closure(generators: Sequence[GroupElement], cap: int = DEFAULT_CLOSURE_CAP,
                  threads: int = 1) -> GroupClosure:
    """
    Lukning av generatorene under multiplikasjon, ved bredde-først-søk.

    Hvert lag multipliseres med alle generatorer fra venstre; nye nøkler
    finnes mot den sorterte mengden av kjente elementer.

    Args:
        generators: Inverterbare elementer med felles m
        cap: Største tillatte gruppeorden
        threads: Antall tråder for generatorblokker

    Returns:
        GroupClosure

    Raises:
        ValueError: Ved tom generatorliste, ulik m eller m > 6
        RuntimeError: Hvis ordenen overstiger cap
    """
    if not generators:
        raise ValueError("Generatorlisten er tom")
    m = generators[0].m
    if any(g.m != m for g in generators):
        raise ValueError("Alle generatorer må ha samme m")
    if m > MAX_CLOSURE_M:
        raise ValueError(f"Full lukning er begrenset til m ≤ {MAX_CLOSURE_M}, fikk m = {m}")
    tables = [g.table for g in generators]
    batches = [tables[i:i + _GENERATOR_BATCH] for i in range(0, len(tables), _GENERATOR_BATCH)]

    known = np.array([GroupElement.identity(m).key], dtype=np.int64)
    frontier = known.copy()
    log: List[Tuple[int, int]] = [(0, 1)]
    layer = 0

    def expand(batch: List[np.ndarray]) -> np.ndarray:
        images = np.unique(np.concatenate([_apply_left(t, frontier, m) for t in batch]))
        return _not_in_sorted(known, images)

    while frontier.size:
        if threads > 1 and len(batches) > 1:
            with ThreadPoolExecutor(max_workers=threads) as executor:
                parts = list(executor.map(expand, batches))
        else:
            parts = [expand(batch) for batch in batches]
        fresh = np.unique(np.concatenate(parts))
        layer += 1
        if fresh.size:
            log.append((layer, int(fresh.size)))
            logger.debug("Lukning lag %d: %d nye elementer", layer, fresh.size)
        known = np.union1d(known, fresh)
        if known.size > cap:
            raise RuntimeError(f"Gruppelukningen overstiger grensen {cap} elementer")
        frontier = fresh
    logger.info("Lukning ferdig: orden %d etter %d lag", known.size, layer - 1)
    return GroupClosure(m, known, generators, log)


def _top_columns(parity: BitMatrix, m: int) -> Tuple[int, ...]:
    return BitMatrix(parity.array[:m]).column_ints


def induced_permutation(element: GroupElement, parity: BitMatrix) -> Optional[Tuple[int, ...]]:
    """
    Koordinatpermutasjonen indusert av K på en utvidet paritetsmatrise.

    De m øverste radene må være H_m (alle ikke-null kolonner). Permutasjonen
    π sender posisjon i til posisjonen j med h_j = K·h_i. Permutasjonen
    godtas når hver rad i den permuterte matrisen ligger i radrommet til
    den opprinnelige.

    Returns:
        π som tuple, eller None når K ikke gir en automorfi

    Raises:
        ValueError: Hvis de øverste radene ikke inneholder alle ikke-null kolonner
    """
    m = element.m
    columns = _top_columns(parity, m)
    if sorted(columns) != list(range(1, 2 ** m)):
        raise ValueError("De øverste m radene må inneholde hver ikke-null kolonne nøyaktig én gang")
    permutation = element.column_permutation(columns)
    moved = parity.permute_columns(permutation)
    if all(parity.contains(row) for row in moved.rows()):
        return permutation
    return None


def _permuted_generator_ok(permutation: Sequence[int], code: Code) -> bool:
    generator = code.generator.array
    moved = np.empty_like(generator)
    moved[:, list(permutation)] = generator
    product = code.check_matrix.array.astype(np.int64) @ moved.T.astype(np.int64)
    return not (product % 2).any()


class OrbitTable:
    """Baner av sideklasser (syndromer) med ledervekter per bane."""

    def __init__(self, orbits: List[Tuple[int, ...]], profile: CosetProfile, action_size: int):
        self.orbits = orbits
        self.profile = profile
        self.action_size = action_size

    @property
    def count(self) -> int:
        return len(self.orbits)

    @property
    def leader_weights(self) -> List[Tuple[int, ...]]:
        """Mengden av ledervekter i hver bane, sortert."""
        lw = self.profile.leader_weight
        return [tuple(sorted({int(lw[s]) for s in orbit})) for orbit in self.orbits]

    @property
    def orbit_sizes(self) -> List[int]:
        return [len(orbit) for orbit in self.orbits]

    def refines_leader_weights(self) -> bool:
        return all(len(weights) == 1 for weights in self.leader_weights)

    def orbit_of(self, s: int) -> Tuple[int, ...]:
        for orbit in self.orbits:
            if s in orbit:
                return orbit
        raise ValueError(f"Ukjent syndrom {s}")

    def __repr__(self) -> str:
        return f"OrbitTable(count={self.count}, sizes={self.orbit_sizes})"


def _leader_position_matrix(profile: CosetProfile) -> np.ndarray:
    n = profile.length
    depth = max(profile.covering_radius, 1)
    matrix = np.full((profile.syndrome_count, depth), n, dtype=np.int64)
    for s in range(profile.syndrome_count):
        positions = profile.leader_positions(s)
        matrix[s, :len(positions)] = positions
    return matrix


def syndrome_permutation(permutation: Sequence[int], columns: np.ndarray,
                         leader_positions: np.ndarray) -> np.ndarray:
    """Syndromet til π anvendt på lederen, for hvert syndrom."""
    padded = np.append(columns[np.asarray(permutation)], 0)
    return np.bitwise_xor.reduce(padded[leader_positions], axis=1)


def orbit_count(action: Iterable[Sequence[int]], code: Code,
                profile: Optional[CosetProfile] = None) -> OrbitTable:
    """
    Baner av sideklassene under en mengde koordinatpermutasjoner.

    Banene til en gruppe er banene til enhver generatormengde, så
    handlingen kan være hele gruppen eller bare generatorene.

    Args:
        action: Koordinatpermutasjoner (π[i] = bildet av posisjon i)
        code: Koden
        profile: Ferdig sideklasseprofil (beregnes ellers)

    Raises:
        ValueError: Hvis en permutasjon ikke avbilder koden på seg selv
    """
    profile = profile or coset_profile(code)
    columns = np.array(code.check_matrix.column_ints, dtype=np.int64)
    leaders = _leader_position_matrix(profile)
    union = UnionFind(range(profile.syndrome_count))
    size = 0
    for permutation in action:
        if not _permuted_generator_ok(permutation, code):
            raise ValueError(f"Permutasjon nr. {size} avbilder ikke koden på seg selv")
        images = syndrome_permutation(permutation, columns, leaders)
        for s, t in enumerate(images.tolist()):
            union.union(s, t)
        size += 1
    table = OrbitTable(union.groups(), profile, size)
    logger.info("Baneopptelling for %r: %d baner under %d permutasjoner", code, table.count, size)
    return table


def induced_action(elements: Iterable[GroupElement], parity: BitMatrix) -> List[Tuple[int, ...]]:
    """
    Induserte permutasjoner for elementene.

    Raises:
        ValueError: Hvis et element blir avvist som automorfi
    """
    result = []
    for element in elements:
        permutation = induced_permutation(element, parity)
        if permutation is None:
            raise ValueError(f"{element!r} er ikke en automorfi av koden")
        result.append(permutation)
    return result


class AffineElement:
    """Affin avbildning x ↦ Kx + v på F_2^m, dvs. posisjonene til utvidet kode."""

    def __init__(self, linear: GroupElement, shift: int = 0):
        self.linear = linear
        self.shift = int(shift)

    @property
    def m(self) -> int:
        return self.linear.m

    def apply(self, x: int) -> int:
        return self.linear.apply(x) ^ self.shift

    def compose(self, other: "AffineElement") -> "AffineElement":
        """(K1, v1)∘(K2, v2) = (K1K2, K1v2 + v1)."""
        return AffineElement(self.linear.compose(other.linear), self.linear.apply(other.shift) ^ self.shift)

    def inverse(self) -> "AffineElement":
        inverse = self.linear.inverse()
        return AffineElement(inverse, inverse.apply(self.shift))

    @property
    def permutation(self) -> Tuple[int, ...]:
        return tuple(int(x) for x in self.linear.table ^ self.shift)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, AffineElement):
            return NotImplemented
        return self.linear == other.linear and self.shift == other.shift

    def __hash__(self) -> int:
        return hash((self.linear, self.shift))

    def __repr__(self) -> str:
        return f"AffineElement({self.linear!r}, shift={self.shift})"


def translation(m: int, v: int) -> AffineElement:
    """T_v: x ↦ x + v."""
    return AffineElement(GroupElement.identity(m), v)


class ExtendedGroup:
    """
    Aut(C*) som affin gruppe på de 2^m posisjonene til den utvidede koden.

    Når gruppen er liten nok listes alle elementer; ellers sertifiseres
    ordenen strukturelt.
    """

    def __init__(self, m: int, base_order: int, generators: List[AffineElement],
                 elements: Optional[List[Tuple[int, ...]]], enumerated: bool):
        self.m = m
        self.base_order = base_order
        self.generators = generators
        self.elements = elements
        self.enumerated = enumerated

    @property
    def order(self) -> int:
        if self.elements is not None:
            return len(self.elements)
        return self.base_order * 2 ** self.m

    def generator_permutations(self) -> List[Tuple[int, ...]]:
        return [g.permutation for g in self.generators]

    def __repr__(self) -> str:
        return f"ExtendedGroup(m={self.m}, order={self.order}, enumerated={self.enumerated})"


def _compose_permutations(p: Tuple[int, ...], q: Tuple[int, ...]) -> Tuple[int, ...]:
    """(p∘q)[x] = p[q[x]]."""
    return tuple(p[x] for x in q)


def translations_normal(m: int, elements: Sequence[GroupElement],
                        shifts: Optional[Iterable[int]] = None) -> bool:
    """φ T_v φ⁻¹ = T_{φ(v)} for alle gitte φ og v (standard: alle v)."""
    shifts = list(range(2 ** m)) if shifts is None else list(shifts)
    for element in elements:
        lifted = AffineElement(element)
        for v in shifts:
            conjugate = lifted.compose(translation(m, v)).compose(lifted.inverse())
            if conjugate != translation(m, element.apply(v)):
                return False
    return True


def translations_preserve(m: int, pair) -> bool:
    """Sann når alle 2^m translasjoner T_v er automorfier av den utvidede koden."""
    code = CodeFactory.extended_weight_class_code(m, pair)
    return all(_permuted_generator_ok(translation(m, v).permutation, code) for v in range(2 ** m))


def _certify_semidirect(m: int, base_generators: Sequence[GroupElement]) -> None:
    images = {translation(m, v).apply(0) for v in range(2 ** m)}
    if len(images) != 2 ** m:
        raise RuntimeError("Translasjonene virker ikke regulært")
    if any(generator.apply(0) != 0 for generator in base_generators):
        raise RuntimeError("Et basiselement flytter paritetsposisjonen")
    if not translations_normal(m, base_generators, [1 << i for i in range(m)]):
        raise RuntimeError("Translasjonene er ikke normale i den utvidede gruppen")


def extended_group(m: int, base: GroupClosure, cap: int = DEFAULT_EXTENDED_CAP) -> ExtendedGroup:
    """
    Gruppen generert av løftede basiselementer h ↦ Kh og translasjonene T_{e_i}.

    Ordenen skal være |base|·2^m. Under cap listes alle affine par (K, v)
    og lukning under generatorene kontrolleres; ellers sertifiseres
    ordenen ved at translasjonene er normale og virker regulært.

    Raises:
        RuntimeError: Ved avvik i orden eller lukning
    """
    generators = [AffineElement(g) for g in base.generators]
    generators += [translation(m, 1 << i) for i in range(m)]
    expected = base.order * 2 ** m
    if expected > cap:
        _certify_semidirect(m, base.generators)
        logger.info("Utvidet gruppe sertifisert strukturelt: orden %d", expected)
        return ExtendedGroup(m, base.order, generators, None, enumerated=False)

    elements = {
        tuple(int(x) for x in element.table ^ v)
        for element in base
        for v in range(2 ** m)
    }
    if len(elements) != expected:
        raise RuntimeError(f"Utvidet gruppe har orden {len(elements)}, forventet {expected}")
    generator_perms = [g.permutation for g in generators]
    for element in elements:
        for g in generator_perms:
            if _compose_permutations(g, element) not in elements:
                raise RuntimeError("Den utvidede gruppen er ikke lukket under generatorene")
    logger.info("Utvidet gruppe listet: orden %d", expected)
    return ExtendedGroup(m, base.order, generators, sorted(elements), enumerated=True)


def _check_extended_pair(pair: WeightClassPair) -> None:
    if not pair.parity_flag or 0 in pair.classes:
        raise ValueError(f"Paret {{{pair.label}}} må ha odde differanse og ikke inneholde 0")


def orbit_count_extended(m: int, pair, base: Optional[GroupClosure] = None) -> OrbitTable:
    """
    Baner av de 2^{m+2} sideklassene til den utvidede koden under Aut(C*).

    Uten base brukes transveksjonene som generatorer for Sp(m,2).

    Raises:
        ValueError: Hvis 0 ∈ paret eller paret har like differanse
    """
    _require_even(m)
    pair = _coerce_pair(pair)
    _check_extended_pair(pair)
    code = CodeFactory.extended_weight_class_code(m, pair)
    linear = base.generators if base is not None else all_transvections(m)
    action = [AffineElement(g).permutation for g in linear]
    action += [translation(m, 1 << i).permutation for i in range(m)]
    return orbit_count(action, code)


def general_linear_group(m: int) -> List[GroupElement]:
    """
    Alle elementer i GL(m,2), ved å velge ordnede baser.

    Raises:
        ValueError: Hvis m > 4
    """
    if not 1 <= m <= 4:
        raise ValueError(f"GL(m,2) listes bare for m ≤ 4, fikk m = {m}")
    elements: List[GroupElement] = []

    def extend(chosen: List[int], span: Set[int]) -> None:
        if len(chosen) == m:
            elements.append(GroupElement(m, chosen))
            return
        for candidate in range(1, 2 ** m):
            if candidate not in span:
                extend(chosen + [candidate], span | {s ^ candidate for s in span})

    extend([], {0})
    return elements


def gl_orbit_check_even_part(m: int = 4) -> OrbitTable:
    """
    Baner av sideklassene til C_{0,2} under hele GL(4,2).

    Raises:
        ValueError: Hvis m ≠ 4
    """
    if m != 4:
        raise ValueError(f"GL-sjekken er bare definert for m = 4, fikk m = {m}")
    code = CodeFactory.even_part(m)
    columns = _top_columns(code.parity, m)
    action = (element.column_permutation(columns) for element in general_linear_group(m))
    return orbit_count(action, code)


def count_aut_in_gl(m: int, pair, closure: Optional[GroupClosure] = None) -> Dict[str, int]:
    """
    Teller elementer i GL(m,2) som godtas som automorfier og som bevarer B.

    Returns:
        {"gl_order", "accepted", "form_preserving", "agree", "in_closure"}
    """
    parity = CodeFactory.weight_class_code(m, pair).parity
    accepted: Set[int] = set()
    preserving: Set[int] = set()
    group = general_linear_group(m)
    for element in group:
        if induced_permutation(element, parity) is not None:
            accepted.add(element.key)
        if preserves_form(element):
            preserving.add(element.key)
    result = {
        "gl_order": len(group),
        "accepted": len(accepted),
        "form_preserving": len(preserving),
        "agree": int(accepted == preserving),
    }
    if closure is not None:
        result["in_closure"] = int({int(k) for k in closure.keys} == preserving)
    return result


class WeightTwoReport:
    """Resultat av sjekken for sideklasser av vekt 2."""

    def __init__(self, pair_count: int, form_condition: bool, transitive: bool):
        self.pair_count = pair_count
        self.form_condition = form_condition
        self.transitive = transitive

    @property
    def holds(self) -> bool:
        return self.form_condition and self.transitive


def weight_two_coset_check(m: int, pair, profile: Optional[CosetProfile] = None) -> WeightTwoReport:
    """
    Sjekker at e_{j1} + e_{j2} ligger i en sideklasse av vekt 2 nøyaktig når
    B(h_{j1}, h_{j2}) ≠ ε, og at transveksjonene virker transitivt på
    slike kolonnepar.
    """
    _require_even(m)
    pair = _coerce_pair(pair)
    if not pair.parity_flag:
        raise ValueError(f"Paret {{{pair.label}}} har like differanse")
    code = CodeFactory.weight_class_code(m, pair)
    profile = profile or coset_profile(code)
    check_columns = code.check_matrix.column_ints
    h = _top_columns(code.parity, m)
    form_condition = True
    targets: Set[Tuple[int, int]] = set()
    for j1, j2 in itertools.combinations(range(code.length), 2):
        s = check_columns[j1] ^ check_columns[j2]
        in_weight_two = int(profile.leader_weight[s]) == 2
        if in_weight_two != (symplectic_form_int(h[j1], h[j2]) != pair.epsilon):
            form_condition = False
        if in_weight_two:
            targets.add((min(h[j1], h[j2]), max(h[j1], h[j2])))

    transitive = bool(targets)
    if targets:
        generators = all_transvections(m)
        start = min(targets)
        orbit = {start}
        frontier = [start]
        while frontier:
            nxt = []
            for a, b in frontier:
                for g in generators:
                    x, y = g.apply(a), g.apply(b)
                    image = (min(x, y), max(x, y))
                    if image not in orbit:
                        orbit.add(image)
                        nxt.append(image)
            frontier = nxt
        transitive = orbit == targets
    return WeightTwoReport(len(targets), form_condition, transitive)


class TranslationWitness:
    """T_{h_i} flytter (0|v) + C* til (1|v'') + C* med samme ledervekt."""

    def __init__(self, weight: int, source: Tuple[int, ...], shift: int, image: Tuple[int, ...],
                 source_weight: int, image_weight: int):
        self.weight = weight
        self.source = source
        self.shift = shift
        self.image = image
        self.source_weight = source_weight
        self.image_weight = image_weight

    @property
    def holds(self) -> bool:
        return (0 in self.image and len(self.image) == self.weight
                and self.source_weight == self.image_weight == self.weight)


def translation_witness(m: int, pair) -> List[TranslationWitness]:
    """
    For hver ledervekt r ∈ {1, 2, 3} i C: velger leder v med i ∈ supp(v) og
    sjekker at T_{h_i} gir (1|v'') med supp(v'') = {j + i : j ∈ supp(v) \\ {i}}
    og at sideklassene i C* har samme ledervekt r.
    """
    _require_even(m)
    pair = _coerce_pair(pair)
    _check_extended_pair(pair)
    base_code = CodeFactory.weight_class_code(m, pair)
    base_profile = coset_profile(base_code)
    extended = extend_code(base_code)
    ext_profile = coset_profile(extended)
    check = extended.check_matrix
    witnesses = []
    for r in range(1, base_profile.covering_radius + 1):
        s = int(base_profile.syndromes_at(r)[0])
        # posisjon p i C er posisjon p + 1 (= h_p) i C*
        source = tuple(p + 1 for p in base_profile.leader_positions(s))
        shift = source[0]
        image = tuple(sorted(x ^ shift for x in source))
        source_syndrome = bits_to_int(check.multiply_vector(BitVec.from_support(2 ** m, source)).bits)
        image_syndrome = bits_to_int(check.multiply_vector(BitVec.from_support(2 ** m, image)).bits)
        witnesses.append(TranslationWitness(
            r, source, shift, image,
            int(ext_profile.leader_weight[source_syndrome]),
            int(ext_profile.leader_weight[image_syndrome]),
        ))
    return witnesses
