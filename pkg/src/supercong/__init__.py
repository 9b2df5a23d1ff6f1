"""Exact verification of truncated hypergeometric supercongruences.

Everything is computed in exact rational arithmetic. Congruences are
decided as p-adic valuation bounds, Gamma_p values as residues at an
explicit precision, and claims come back as structured reports.
"""

from .congruence_suite import (
    DEFAULT_SEED,
    TERM_GUARD,
    THEOREM_ROWS,
    CongruenceClaim,
    Family,
    LemmaCheck,
    ResourceGuardError,
    VerificationReport,
    admissible_primes,
    canonical_sort,
    probe_conjecture_7_1,
    reproduce_table_1,
    run_lemma_batch,
    run_telescope_fuzz,
    run_theorem_batch,
    run_wz_fuzz,
    telescope_cases,
    theorem_grid,
    verify_corollary,
    verify_family,
    verify_lemma,
    verify_theorem,
    wz_fuzz_cases,
)
from .dwork import (
    DashOrbit,
    DashParams,
    dash,
    dash_closed_form,
    dash_iter,
    dash_orbit,
    dash_period,
    least_residue,
)
from .exact_core import (
    INFINITE,
    NonInvertibleError,
    PAdicContext,
    PadicDenominatorError,
    PrimeRequiredError,
    Rational,
    Valuation,
    congruent,
    is_prime,
    mod_inverse,
    residue,
    valuation,
)
from .hyper_wz import (
    HarmonicSpec,
    PochhammerPoleError,
    WZTermSpec,
    half_pole_index,
    harmonic,
    pochhammer,
    sum_F,
    sum_G_boundary,
    term_F,
    term_G,
    wz_residual,
)
from .padic_gamma import (
    PRECISION_CAP,
    GammaValue,
    PrecisionCapError,
    gamma_p,
    gamma_p_int,
    gamma_ratio,
    pochhammer_factorization,
)

__version__ = "0.1.0"

__all__ = [
    "CongruenceClaim",
    "DashOrbit",
    "DashParams",
    "DEFAULT_SEED",
    "Family",
    "GammaValue",
    "HarmonicSpec",
    "INFINITE",
    "LemmaCheck",
    "NonInvertibleError",
    "PAdicContext",
    "PadicDenominatorError",
    "PochhammerPoleError",
    "PRECISION_CAP",
    "PrimeRequiredError",
    "PrecisionCapError",
    "Rational",
    "ResourceGuardError",
    "TERM_GUARD",
    "THEOREM_ROWS",
    "Valuation",
    "VerificationReport",
    "WZTermSpec",
    "admissible_primes",
    "canonical_sort",
    "congruent",
    "dash",
    "dash_closed_form",
    "dash_iter",
    "dash_orbit",
    "dash_period",
    "gamma_p",
    "gamma_p_int",
    "gamma_ratio",
    "half_pole_index",
    "harmonic",
    "is_prime",
    "least_residue",
    "mod_inverse",
    "pochhammer",
    "pochhammer_factorization",
    "probe_conjecture_7_1",
    "reproduce_table_1",
    "residue",
    "run_lemma_batch",
    "run_telescope_fuzz",
    "run_theorem_batch",
    "run_wz_fuzz",
    "sum_F",
    "sum_G_boundary",
    "telescope_cases",
    "term_F",
    "term_G",
    "theorem_grid",
    "valuation",
    "verify_corollary",
    "verify_family",
    "verify_lemma",
    "verify_theorem",
    "wz_fuzz_cases",
    "wz_residual",
]
