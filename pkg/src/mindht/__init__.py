"""mindht: fixed-size fast discrete Hartley transforms with minimal multiplications.

Fast kernels exist for block lengths 4, 8, 12 and 24; they use 8, 22, 52 and
138 real additions and 0, 2, 4 and 12 real multiplications respectively, the
multiplication counts being the known lower bounds for these lengths.  A
direct-summation oracle, DHT<->DFT bridging, operation-count auditing and
factorization verification tooling accompany the kernels.
"""

from .counting import (
    CountingScalar,
    EXPECTED_COUNTS,
    OpCount,
    audit_report,
    count_ops,
    mu_lower_bound,
)
from .derivation import (
    balance_split,
    balance_stages,
    entry_alphabet,
    kernel_plan,
    pre_addition_matrix,
    residual_matrix,
    verify_decomposition,
)
from .kernels import fast_dht, fast_dht4, fast_dht8, fast_dht12, fast_dht24
from .layers import (
    SUPPORTED_SIZES,
    UnsupportedLengthError,
    pre_addition_state,
)
from .reference import (
    cas,
    cas_prime,
    dft_to_dht,
    dht_matrix,
    dht_to_dft,
    naive_dft,
    naive_dht,
    naive_idht,
    walsh_hadamard,
)

__version__ = "0.1.0"

__all__ = [
    "SUPPORTED_SIZES",
    "UnsupportedLengthError",
    "cas",
    "cas_prime",
    "dht_matrix",
    "naive_dht",
    "naive_idht",
    "naive_dft",
    "dht_to_dft",
    "dft_to_dht",
    "walsh_hadamard",
    "fast_dht",
    "fast_dht4",
    "fast_dht8",
    "fast_dht12",
    "fast_dht24",
    "pre_addition_state",
    "OpCount",
    "CountingScalar",
    "EXPECTED_COUNTS",
    "count_ops",
    "mu_lower_bound",
    "audit_report",
    "pre_addition_matrix",
    "residual_matrix",
    "entry_alphabet",
    "balance_split",
    "balance_stages",
    "kernel_plan",
    "verify_decomposition",
    "__version__",
]
