"""Irrationality exponent module"""
from hankel.irrationality.iteration import IteratedEquation, iterate_equation
from hankel.irrationality.enclosure import (
    EnclosureCache,
    XiEnclosure,
    get_enclosure_cache,
    xi_enclosure,
)
from hankel.irrationality.convergents import (
    Sandwich,
    build_convergent,
    check_composed_error,
    convergent_polynomials,
    error_bracket,
    m0_threshold,
    majorant_radius,
    pade_error_series,
    predicted_sandwich,
    tail_bound,
    tail_constant,
    TailBound,
)
from hankel.irrationality.exponents import EffectiveExponent, effective_exponent
from hankel.irrationality.bounds import (
    DenominatorGrowth,
    DirectAdmissibility,
    Lemma4Result,
    ResidueAdmissibility,
    bound_ladder,
    denominator_growth,
    lemma3_bound,
    lemma4_ratio,
    merged_bound,
    paperfolding_admissibility,
    rho_delta,
    theorem1_single_l_bound,
)

__all__ = [
    "IteratedEquation",
    "iterate_equation",
    "EnclosureCache",
    "XiEnclosure",
    "get_enclosure_cache",
    "xi_enclosure",
    "Sandwich",
    "build_convergent",
    "check_composed_error",
    "convergent_polynomials",
    "error_bracket",
    "m0_threshold",
    "majorant_radius",
    "pade_error_series",
    "predicted_sandwich",
    "tail_bound",
    "tail_constant",
    "TailBound",
    "EffectiveExponent",
    "effective_exponent",
    "DenominatorGrowth",
    "DirectAdmissibility",
    "Lemma4Result",
    "ResidueAdmissibility",
    "bound_ladder",
    "denominator_growth",
    "lemma3_bound",
    "lemma4_ratio",
    "merged_bound",
    "paperfolding_admissibility",
    "rho_delta",
    "theorem1_single_l_bound",
]
