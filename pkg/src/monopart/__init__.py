"""Monochromatic partitions of 2-edge-coloured complete graphs into bounded-degree family copies."""

from monopart.certificate import CertPiece, PartitionCertificate, verify_certificate
from monopart.cylinders import find_mono_clique, find_regular_cylinder
from monopart.embedding import Embedding, balance_weights, cover_cylinder, greedy_bipartite_extend
from monopart.equitable import equitable_color
from monopart.errors import (
    BudgetError, CoverFailure, FormatError, MonopartError, PreconditionError, SizeError, StuckError,
)
from monopart.families import (
    GraphFamily, builtin, doubled_family, family_from_spec, family_minus_class, lower_bound_family,
)
from monopart.generate import adversarial_search, gen_coloring
from monopart.graph import BLUE, RED, Color, ColoredCompleteGraph, Cylinder, Graph
from monopart.kernels import BACKEND
from monopart.oracle import enumerate_mono_copies, min_partition_exact
from monopart.params import PipelineParams
from monopart.pipeline import classify_good, partition, partition_bipartite
from monopart.ramsey import cover_most, find_mono_copy
from monopart.regularity import VertexPair, check_regularity, check_regularity_exact, check_super_regular

__version__ = "0.1.0"

__all__ = [
    "CertPiece",
    "PartitionCertificate",
    "verify_certificate",
    "find_mono_clique",
    "find_regular_cylinder",
    "Embedding",
    "balance_weights",
    "cover_cylinder",
    "greedy_bipartite_extend",
    "equitable_color",
    "BudgetError",
    "CoverFailure",
    "FormatError",
    "MonopartError",
    "PreconditionError",
    "SizeError",
    "StuckError",
    "GraphFamily",
    "builtin",
    "doubled_family",
    "family_from_spec",
    "family_minus_class",
    "lower_bound_family",
    "adversarial_search",
    "gen_coloring",
    "BLUE",
    "RED",
    "Color",
    "ColoredCompleteGraph",
    "Cylinder",
    "Graph",
    "BACKEND",
    "enumerate_mono_copies",
    "min_partition_exact",
    "PipelineParams",
    "classify_good",
    "partition",
    "partition_bipartite",
    "cover_most",
    "find_mono_copy",
    "VertexPair",
    "check_regularity",
    "check_regularity_exact",
    "check_super_regular",
]
