"""Self-dual binary codes via circulant constructions over F2, F2+uF2, F4+uF4."""

from .rings import RingElement, RingId
from .circulant import CirculantKind, CirculantSpec, RingMatrix, back_diagonal, build
from .constructions import (
    RingGenerator,
    build_from_rows,
    czero_perturb,
    four_circulant,
    generalized_four_circulant,
    modified_four_circulant,
    symmetric_variant,
)
from .gray import phi_f2u, phi_f4u, psi_f4, psi_f4u, to_binary
from .bincode import (
    PackedBinaryCode,
    WeightDistribution,
    from_ring_generator,
    is_self_dual,
    min_distance,
    standard_form,
    weight_distribution,
)
from .enumerators import EnumeratorParams, extract_params, known_params_registry
from .extend_neighbor import ExtensionSpec, extend, neighbor
from .search import ResultRecord, SearchConfig, SearchStats, run_search

__all__ = [
    "RingElement",
    "RingId",
    "CirculantKind",
    "CirculantSpec",
    "RingMatrix",
    "back_diagonal",
    "build",
    "RingGenerator",
    "build_from_rows",
    "czero_perturb",
    "four_circulant",
    "generalized_four_circulant",
    "modified_four_circulant",
    "symmetric_variant",
    "phi_f2u",
    "phi_f4u",
    "psi_f4",
    "psi_f4u",
    "to_binary",
    "PackedBinaryCode",
    "WeightDistribution",
    "from_ring_generator",
    "is_self_dual",
    "min_distance",
    "standard_form",
    "weight_distribution",
    "EnumeratorParams",
    "extract_params",
    "known_params_registry",
    "ExtensionSpec",
    "extend",
    "neighbor",
    "ResultRecord",
    "SearchConfig",
    "SearchStats",
    "run_search",
]
