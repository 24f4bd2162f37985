"""Classical Reed-Muller codes, the quantum codes built from their dual pairs,
and the error-rate model used to compare them."""

from qrm.css import (
    CssCode,
    SparseState,
    coset_leaders,
    css_from_rm,
    encode_basis1,
    encode_basis2,
    hadamard_amplitude,
    quantum_table,
)
from qrm.error_analysis import (
    CodePoint,
    CurvePoint,
    block_error_bound,
    monte_carlo_block_error,
    performance_curve,
    qubit_error_rate,
)
from qrm.gf2 import (
    BitMatrix,
    LinearCode,
    WeightEnumerator,
    enumerate_codewords,
    macwilliams_transform,
    min_weight_bruteforce,
    nullspace_generator,
    rank_and_rref,
    weight_enumerator,
)
from qrm.reed_muller import (
    Partition,
    RmSpec,
    check_dual_partition_orthogonality,
    check_nesting,
    classical_table,
    partition,
    rm_code,
    rm_dual_spec,
    rm_generator,
    squaring_construct,
)

__version__ = "0.1.0"
