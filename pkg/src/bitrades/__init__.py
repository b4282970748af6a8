"""Perfect and spherical bitrades in Hamming graphs.

Constructions (permutation parity, MDS code differences and cosets,
tensor combination, the perfect lift), independent verification against
the equivalent characterizations, and exhaustive or local search for
minimum-volume bitrades.
"""

from .construct import (
    KINDS,
    PERFECT,
    SPHERICAL,
    Bitrade,
    alt_bitrade,
    lift_to_perfect,
    mds_bitrade,
    tensor_combine,
    tensor_power,
)
from .fields import FieldSpec, FieldTable, build_field
from .hamming import (
    Code,
    Face,
    HammingParams,
    Word,
    all_words,
    ball,
    code_distance,
    concat,
    face_words,
    hamming_distance,
    min_distance,
    sphere,
)
from .linear import ParityCheckCode, coset, rs_mds_code, sum_zero_code, verify_mds
from .search import (
    SearchConfig,
    SearchResult,
    find_spherical,
    min_perfect_volume,
)
from .serialize import (
    FORMAT_VERSION,
    dumps_json,
    dumps_text,
    from_document,
    load_bitrade,
    loads_json,
    loads_text,
    save_bitrade,
    to_document,
)
from .verify import (
    SignedFunction,
    VerificationReport,
    bitrade_delsarte_order,
    definition_check,
    delsarte_face_check,
    delsarte_order,
    dist2_count_check,
    dist2_pair_check,
    eigen_check,
    min_distance_check,
    verify_perfect,
    verify_spherical,
)

__version__ = "0.1.0"

__all__ = [
    "Bitrade",
    "Code",
    "Face",
    "FieldSpec",
    "FieldTable",
    "FORMAT_VERSION",
    "HammingParams",
    "KINDS",
    "ParityCheckCode",
    "PERFECT",
    "SearchConfig",
    "SearchResult",
    "SignedFunction",
    "SPHERICAL",
    "VerificationReport",
    "Word",
    "all_words",
    "alt_bitrade",
    "ball",
    "bitrade_delsarte_order",
    "build_field",
    "code_distance",
    "concat",
    "coset",
    "definition_check",
    "delsarte_face_check",
    "delsarte_order",
    "dist2_count_check",
    "dist2_pair_check",
    "dumps_json",
    "dumps_text",
    "eigen_check",
    "face_words",
    "find_spherical",
    "from_document",
    "hamming_distance",
    "lift_to_perfect",
    "load_bitrade",
    "loads_json",
    "loads_text",
    "mds_bitrade",
    "min_distance",
    "min_distance_check",
    "min_perfect_volume",
    "rs_mds_code",
    "save_bitrade",
    "sphere",
    "sum_zero_code",
    "tensor_combine",
    "tensor_power",
    "to_document",
    "verify_mds",
    "verify_perfect",
    "verify_spherical",
    "__version__",
]
