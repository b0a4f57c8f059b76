"""
ctcodes - Verifikasjon av fullstendig transitive binære koder
=============================================================

Biblioteket bygger lineære koder fra vektklasser av kolonnene i
Hamming-matrisen, beregner sideklasseprofiler og skjæringsmatriser,
klassifiserer sideklassegrafer og teller baner under den symplektiske
gruppen.

Hovedmoduler:
- gf2core: Bitvektorer, matriser over GF(2) og Krawtchouk-polynomer
- construct: Konstruksjon av kodene C_{i1,i2} og utvidelser
- cosets: Sideklasseprofiler, MacWilliams-transform og skjæringsmatriser
- graphs: Sideklassegrafer og avstandsregularitet
- symplectic: Symplektisk form, transveksjoner og baneopptelling
- verification: Påstandssuiten bak verify-all
"""

__version__ = "0.1.0"

from .gf2core import BitVec, BitMatrix, krawtchouk, weight
from .construct import Code, CodeFactory, WeightClassPair, extend_code, hamming_parity
from .cosets import CosetProfile, IntersectionArray, WeightHistogram, coset_profile
from .graphs import CosetGraph, GraphClassification, classify, coset_graph
from .symplectic import GroupElement, OrbitTable, group_closure, orbit_count, transvection

__all__ = [
    "BitVec",
    "BitMatrix",
    "krawtchouk",
    "weight",
    "Code",
    "CodeFactory",
    "WeightClassPair",
    "extend_code",
    "hamming_parity",
    "CosetProfile",
    "IntersectionArray",
    "WeightHistogram",
    "coset_profile",
    "CosetGraph",
    "GraphClassification",
    "classify",
    "coset_graph",
    "GroupElement",
    "OrbitTable",
    "group_closure",
    "orbit_count",
    "transvection",
]
