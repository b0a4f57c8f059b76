"""
Sideklassegrafer og strukturklassifisering.

Sideklassegrafen til en lineær kode har syndromene som hjørner; s og
s + h_j er naboer for hver kolonne h_j i kontrollmatrisen. Grafen er
dermed en Cayley-graf på syndromgruppen.

Modulet beregner avstandsmatrise, avstandsregularitet og
skjæringsmatrise, antipodalitet, primitivitet og gjenkjenning av
Taylor-grafer, Hadamard-grafer og Q-polynomialkriteriet for diameter 3.

Avstandstransitivitet avgjøres ikke her; den følger av fullstendig
transitivitet for koden (se symplectic) sammen med at sideklassegrafen
arver skjæringsmatrisen til koden.
"""

import logging
import warnings
from concurrent.futures import ThreadPoolExecutor
from functools import cached_property
from typing import Dict, List, Optional, Tuple

import networkx as nx
import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import shortest_path

from .construct import Code
from .cosets import IntersectionArray
from .gf2core import BitMatrix

logger = logging.getLogger(__name__)

# Største antall hjørner (m ≤ 12); avstandsmatrisen lagres med én byte per element
MAX_VERTICES = 1 << 14
# Hjørnetall der grafbygging gir advarsel
WARN_VERTICES = 1 << 11
# Antall BFS-kilder per blokk; uavhengig av trådtallet
DISTANCE_CHUNK = 1024

EXPORT_FORMATS = ("dot", "adjlist", "json")


class CosetGraph:
    """
    Sideklassegraf på 2^r syndromer.

    Nabolisten lagres som en (V, k)-matrise: rad s inneholder s ^ h_j.
    Avstandsmatrisen beregnes ved første behov.
    """

    def __init__(self, connection_set: Tuple[int, ...], redundancy: int, threads: int = 1,
                 name: Optional[str] = None):
        """
        Initialiserer grafen.

        Args:
            connection_set: Kolonnene i kontrollmatrisen som heltall
            redundancy: r, antall bit i et syndrom
            threads: Antall tråder for BFS i avstandsmatrisen
            name: Valgfritt navn

        Raises:
            ValueError: Ved null- eller gjentatte kolonner, eller for mange hjørner
        """
        if any(c == 0 for c in connection_set) or len(set(connection_set)) != len(connection_set):
            raise ValueError("Sideklassegrafen krever d ≥ 3 (ulike kolonner forskjellig fra null)")
        size = 1 << redundancy
        if size > MAX_VERTICES:
            raise ValueError(f"For mange hjørner: {size} > {MAX_VERTICES}")
        if size >= WARN_VERTICES:
            warnings.warn(f"Sideklassegraf med {size} hjørner er kostbar", UserWarning)
        self.connection_set = tuple(int(c) for c in connection_set)
        self.redundancy = redundancy
        self.threads = max(1, int(threads))
        self.name = name
        vertices = np.arange(size, dtype=np.int64)
        self.adjacency = vertices[:, np.newaxis] ^ np.array(self.connection_set, dtype=np.int64)
        self.adjacency.setflags(write=False)

    @property
    def vertex_count(self) -> int:
        return int(self.adjacency.shape[0])

    @property
    def valency(self) -> int:
        return int(self.adjacency.shape[1])

    @property
    def edge_count(self) -> int:
        return self.vertex_count * self.valency // 2

    def neighbours(self, vertex: int) -> Tuple[int, ...]:
        return tuple(sorted(int(u) for u in self.adjacency[vertex]))

    def edges(self) -> List[Tuple[int, int]]:
        """Alle kanter (u, v) med u < v, sortert."""
        result = []
        for u in range(self.vertex_count):
            result.extend((u, int(v)) for v in sorted(self.adjacency[u]) if u < v)
        return result

    def to_networkx(self) -> nx.Graph:
        graph = nx.Graph()
        graph.add_nodes_from(range(self.vertex_count))
        graph.add_edges_from(self.edges())
        return graph

    def _sparse(self) -> csr_matrix:
        size = self.vertex_count
        rows = np.repeat(np.arange(size), self.valency)
        data = np.ones(rows.size, dtype=np.int8)
        return csr_matrix((data, (rows, self.adjacency.ravel())), shape=(size, size))

    @cached_property
    def distance_matrix(self) -> np.ndarray:
        """
        Avstander i antall kanter, V×V uint8.

        Raises:
            ValueError: Hvis grafen ikke er sammenhengende
        """
        sparse = self._sparse()
        size = self.vertex_count
        result = np.empty((size, size), dtype=np.uint8)
        starts = list(range(0, size, DISTANCE_CHUNK))

        def bfs(start: int) -> bool:
            stop = min(size, start + DISTANCE_CHUNK)
            block = shortest_path(sparse, directed=False, unweighted=True,
                                  indices=np.arange(start, stop))
            if np.isinf(block).any():
                return False
            result[start:stop] = block
            return True

        if self.threads > 1:
            with ThreadPoolExecutor(max_workers=self.threads) as executor:
                connected = list(executor.map(bfs, starts))
        else:
            connected = [bfs(start) for start in starts]
        if not all(connected):
            raise ValueError("Grafen er ikke sammenhengende")
        result.setflags(write=False)
        logger.debug("Avstandsmatrise %d×%d beregnet", size, size)
        return result

    @property
    def diameter(self) -> int:
        return int(self.distance_matrix.max())

    def distance_graph(self, i: int) -> nx.Graph:
        """Grafen Γ_i: kanter mellom hjørner i avstand i."""
        graph = nx.Graph()
        graph.add_nodes_from(range(self.vertex_count))
        us, vs = np.nonzero(np.triu(self.distance_matrix == i))
        graph.add_edges_from(zip(us.tolist(), vs.tolist()))
        return graph

    def __repr__(self) -> str:
        return f"CosetGraph(V={self.vertex_count}, k={self.valency})"


class GraphClassification:
    """
    Strukturflagg for en sideklassegraf.

    Flagg som ikke gir mening (for eksempel antipodalitet ved diameter ≤ 2)
    er None.
    """

    def __init__(self, vertex_count: int, valency: int, diameter: int, distance_regular: bool,
                 intersection_array: Optional[IntersectionArray], antipodal: Optional[bool],
                 primitive: bool, taylor: Optional[bool], hadamard_order: Optional[int],
                 q_polynomial: Optional[bool],
                 cover: Optional[Tuple[int, int, int]] = None):
        self.vertex_count = vertex_count
        self.valency = valency
        self.diameter = diameter
        self.distance_regular = distance_regular
        self.intersection_array = intersection_array
        self.antipodal = antipodal
        self.primitive = primitive
        self.taylor = taylor
        self.hadamard_order = hadamard_order
        self.q_polynomial = q_polynomial
        self.cover = cover

    def as_dict(self) -> Dict[str, object]:
        return {
            "vertex_count": self.vertex_count,
            "valency": self.valency,
            "diameter": self.diameter,
            "distance_regular": self.distance_regular,
            "intersection_array": str(self.intersection_array) if self.intersection_array else None,
            "antipodal": self.antipodal,
            "primitive": self.primitive,
            "taylor": self.taylor,
            "hadamard_order": self.hadamard_order,
            "q_polynomial": self.q_polynomial,
            "cover": self.cover,
        }

    def __repr__(self) -> str:
        return f"GraphClassification({self.as_dict()})"


def coset_graph(code: Code, threads: int = 1) -> CosetGraph:
    """
    Bygger sideklassegrafen til koden.

    Args:
        code: Kode med d ≥ 3
        threads: Antall tråder for avstandsberegning

    Raises:
        ValueError: Hvis d < 3 eller grafen blir for stor
    """
    check = code.check_matrix
    return CosetGraph(check.column_ints, check.n_rows, threads=threads, name=code.name)


def distance_matrix(graph: CosetGraph) -> np.ndarray:
    return graph.distance_matrix


def check_distance_regular(graph: CosetGraph) -> Tuple[bool, Optional[IntersectionArray]]:
    """
    Sjekker avstandsregularitet.

    For hvert par (γ, δ) i avstand i telles naboene til δ i avstand i - 1
    og i + 1 fra γ. Grafen er avstandsregulær når antallene bare avhenger
    av i.

    Returns:
        (True, skjæringsmatrise) eller (False, None)
    """
    dist = graph.distance_matrix
    diameter = graph.diameter
    size, k = graph.vertex_count, graph.valency
    adjacency = graph.adjacency
    b_seen: List[set] = [set() for _ in range(diameter + 1)]
    c_seen: List[set] = [set() for _ in range(diameter + 1)]
    chunk = max(1, (1 << 24) // max(1, size * k))
    for start in range(0, size, chunk):
        rows = dist[start:start + chunk].astype(np.int16)
        around = rows[:, adjacency]
        toward = (around == rows[:, :, np.newaxis] - 1).sum(axis=2)
        away = (around == rows[:, :, np.newaxis] + 1).sum(axis=2)
        for i in range(diameter + 1):
            mask = rows == i
            b_seen[i].update(np.unique(away[mask]).tolist())
            c_seen[i].update(np.unique(toward[mask]).tolist())
    if any(len(s) != 1 for s in b_seen + c_seen):
        return False, None
    b = [next(iter(b_seen[i])) for i in range(diameter)]
    c = [next(iter(c_seen[i])) for i in range(1, diameter + 1)]
    return True, IntersectionArray(b, c)


def antipodal_classes(graph: CosetGraph) -> Optional[List[Tuple[int, ...]]]:
    """
    Klassene {γ} ∪ Γ_d(γ) når relasjonen "avstand 0 eller d" er en
    ekvivalensrelasjon, ellers None.
    """
    dist = graph.distance_matrix
    related = (dist == graph.diameter) | np.eye(graph.vertex_count, dtype=bool)
    classes = []
    seen = set()
    for v in range(graph.vertex_count):
        members = np.flatnonzero(related[v])
        if not (related[members] == related[v]).all():
            return None
        key = tuple(int(u) for u in members)
        if key not in seen:
            seen.add(key)
            classes.append(key)
    return classes


def check_antipodal(graph: CosetGraph) -> Optional[bool]:
    """
    Antipodalitet: Γ_d er en disjunkt union av klikker.

    Returns:
        None for diameter ≤ 2 (ikke anvendelig), ellers True/False
    """
    if graph.diameter <= 2:
        return None
    return antipodal_classes(graph) is not None


def check_primitive(graph: CosetGraph) -> bool:
    """
    Sann når alle avstandsgrafer Γ_1, ..., Γ_d er sammenhengende.

    Γ_i er Cayley-grafen til S_i = {s : d(0, s) = i}, og den er
    sammenhengende nøyaktig når S_i utspenner hele syndromrommet.
    """
    from_zero = graph.distance_matrix[0]
    for i in range(1, graph.diameter + 1):
        spread = np.flatnonzero(from_zero == i).tolist()
        if BitMatrix.from_columns(spread, graph.redundancy).rank < graph.redundancy:
            logger.debug("Γ_%d er ikke sammenhengende", i)
            return False
    return True


def _is_taylor_pattern(array: IntersectionArray) -> bool:
    if array.diameter != 3:
        return False
    k, mu, one = array.b
    return one == 1 and array.c == (1, mu, k)


def hadamard_order_of(array: IntersectionArray, vertex_count: int) -> Optional[int]:
    """k når V = 4k og matrisen er (k, k-1, k/2, 1; 1, k/2, k-1, k), ellers None."""
    if array.diameter != 4:
        return None
    k = array.valency
    if k % 2 or vertex_count != 4 * k:
        return None
    if array.b == (k, k - 1, k // 2, 1) and array.c == (1, k // 2, k - 1, k):
        return k
    return None


def classify(graph: CosetGraph) -> GraphClassification:
    """
    Klassifiserer en sideklassegraf.

    Taylor: diameter 3, V = 2(k+1) og matrise (k, μ, 1; 1, μ, k).
    Q-polynomial (kriteriet for diameter 3): antipodal og samme mønster.
    Hadamard: diameter 4, V = 4k og matrise (k, k-1, k/2, 1; 1, k/2, k-1, k).
    """
    regular, array = check_distance_regular(graph)
    diameter = graph.diameter
    antipodal = check_antipodal(graph)
    primitive = check_primitive(graph)
    taylor: Optional[bool] = None
    q_polynomial: Optional[bool] = None
    hadamard_order: Optional[int] = None
    cover: Optional[Tuple[int, int, int]] = None
    if diameter >= 3:
        taylor = bool(regular and array is not None and _is_taylor_pattern(array)
                      and graph.vertex_count == 2 * (graph.valency + 1))
    if diameter == 3:
        q_polynomial = bool(antipodal and regular and array is not None
                            and _is_taylor_pattern(array))
    if regular and array is not None:
        hadamard_order = hadamard_order_of(array, graph.vertex_count)
        if antipodal:
            classes = antipodal_classes(graph)
            r = len(classes[0]) if classes else 1
            cover = (graph.vertex_count // r, r, array.c[1] if diameter >= 2 else 0)
    result = GraphClassification(
        vertex_count=graph.vertex_count, valency=graph.valency, diameter=diameter,
        distance_regular=regular, intersection_array=array, antipodal=antipodal,
        primitive=primitive, taylor=taylor, hadamard_order=hadamard_order,
        q_polynomial=q_polynomial, cover=cover,
    )
    logger.info("Klassifisering av %r: %s", graph, result.as_dict())
    return result


def vertex_transitivity_witness(graph: CosetGraph) -> bool:
    """
    Sjekker at hver translasjon x ↦ x + g av syndromgruppen er en automorfi.

    Dette dekker alle par (s, t) med g = s + t.
    """
    adjacency = np.sort(graph.adjacency, axis=1)
    vertices = np.arange(graph.vertex_count, dtype=np.int64)
    for g in range(graph.vertex_count):
        moved = np.sort(adjacency ^ g, axis=1)
        if not np.array_equal(moved, adjacency[vertices ^ g]):
            return False
    return True


def distance_partition_sizes(graph: CosetGraph) -> np.ndarray:
    """|Γ_i(γ)| for hvert hjørne γ og avstand i, som (V, d+1)-matrise."""
    dist = graph.distance_matrix.astype(np.int64)
    counts = np.zeros((graph.vertex_count, graph.diameter + 1), dtype=np.int64)
    for i in range(graph.diameter + 1):
        counts[:, i] = (dist == i).sum(axis=1)
    return counts


def _export_dot(graph: CosetGraph) -> str:
    name = "G" if not graph.name else "".join(ch for ch in graph.name if ch.isalnum()) or "G"
    lines = [f"graph {name} {{"]
    lines.extend(f"  {v};" for v in range(graph.vertex_count))
    lines.extend(f"  {u} -- {v};" for u, v in graph.edges())
    lines.append("}")
    return "\n".join(lines) + "\n"


def _export_adjlist(graph: CosetGraph) -> str:
    return "\n".join(nx.generate_adjlist(graph.to_networkx())) + "\n"


def _export_json(graph: CosetGraph) -> str:
    from .schemas.report_schemas import GraphExportOutput

    export = GraphExportOutput(
        vertex_count=graph.vertex_count,
        valency=graph.valency,
        edges=[list(edge) for edge in graph.edges()],
    )
    return export.model_dump_json(indent=2, by_alias=True) + "\n"


def export_graph(graph: CosetGraph, fmt: str) -> bytes:
    """
    Eksporterer grafen deterministisk med syndromheltall som hjørnenavn.

    Args:
        graph: Sideklassegrafen
        fmt: "dot", "adjlist" eller "json"

    Raises:
        ValueError: Ved ukjent format
    """
    exporters = {"dot": _export_dot, "adjlist": _export_adjlist, "json": _export_json}
    if fmt not in exporters:
        raise ValueError(f"Ukjent eksportformat: {fmt!r}. Gyldige: {', '.join(EXPORT_FORMATS)}")
    return exporters[fmt](graph).encode("utf-8")


def parse_adjacency_list(data: bytes) -> nx.Graph:
    """Leser nabolisteformatet tilbake til en networkx-graf med heltallshjørner."""
    lines = data.decode("utf-8").splitlines()
    return nx.parse_adjlist(lines, nodetype=int)
