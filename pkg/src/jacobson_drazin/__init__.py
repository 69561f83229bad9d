"""Exact Drazin inverses, gnsD witnesses and Jacobson-type transfers over Q."""

from .drazin import (
    CoreNilpotentDecomposition,
    core_nilpotent,
    drazin_index,
    drazin_inverse,
    spectral_idempotent,
    spectral_idempotent_at_one,
)
from .exact_linalg import (
    NotInvertible,
    RatMatrix,
    RatPoly,
    char_poly,
    commutant_basis,
    inverse,
    is_nilpotent,
    mat_pow,
    rank,
)
from .extensions import (
    ConstraintViolated,
    one_sided_transfer,
    power_gsd_equivalence,
    reference_example,
    triple_transfer,
    two_sided_transfer,
)
from .gnsd import GnsdWitness, NotGnsd, gnsd_check, gnsd_check_poly, gnsd_check_spectral, gsd_check
from .instance_gen import GenConfig, GenerationExhausted, Structure
from .jacobson import (
    InternalContradiction,
    TransferCertificate,
    block_embed,
    lower_c,
    power_transfer,
    transfer_witness,
)

__version__ = "0.1.0"
