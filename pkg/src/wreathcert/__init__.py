"""Exact arithmetic over Z[zeta_p] with orbit congruence checks and
maximality certificates for the iterated map (z - 1)^p + 2 - zeta."""

from .certificate import (
    INDETERMINATE,
    MAXIMAL,
    SCHEMA,
    WITNESS_FOUND,
    CertificateFormatError,
    LevelRecord,
    MaximalityCertificate,
    build_certificate,
    certificate_from_json,
    certificate_problems,
    certificate_to_json,
    group_order,
    level_witness,
    verify_certificate,
)
from .congruence import (
    CongruenceItem,
    CongruenceReport,
    WiefEquivalenceReport,
    expected_residue,
    general_congruence_check,
    is_pth_power_mod_p2,
    is_pth_power_mod_p2_bruteforce,
    norm_congruence_check,
    pth_power_residues_mod_p2,
    wief_equivalence_check,
    wieferich_check,
    wieferich_scan,
)
from .cyclotomic import (
    MAX_RING_PRIME,
    CycInt,
    one_minus_zeta,
    require_odd_prime,
    require_ring_prime,
    zeta,
)
from .dynamics import (
    DEFAULT_MAX_COEFF_BITS,
    DEFAULT_MAX_POLY_COEFFS,
    CycPoly,
    StructureReport,
    eisenstein_check,
    fixed_point_check,
    iterate_point,
    iterate_poly,
    max_feasible_poly_level,
    orbit_congruence_check,
    orbit_points,
    phi,
)
from .errors import RingMismatchError, SizeLimitError
from .factoring import (
    COMPOSITE_UNFACTORED,
    DETERMINISTIC_LIMIT,
    PRIME_PENDING,
    UNIT,
    FactorConfig,
    Factorization,
    factor,
    is_prime,
    is_prime_certain,
)

__version__ = "0.1.0"
