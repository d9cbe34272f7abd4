"""Bordered Hankel determinant families module"""
from hankel.families.builder import (
    GENERATOR_LAYOUTS,
    family_direct,
    family_direct_mod2,
    family_matrices,
    family_table,
    family_table_mod2,
    generator_matrix,
    hankel_minors_exact,
    required_prefix,
)
from hankel.families.recurrences import (
    IDENTITIES,
    IDENTITY_BY_NUMBER,
    NEGATED,
    PRINTED,
    PROOF,
    Identity,
    RecurrencePrediction,
    family_recurrence,
    mod2_table_by_recurrence,
)
from hankel.families.verification import (
    IdentityResolution,
    Lemma1Report,
    NonvanishingReport,
    Prop2Report,
    StarReport,
    conjugation_check,
    nonvanishing_check,
    star_check,
    verify_lemma1,
    verify_prop2,
)

__all__ = [
    "GENERATOR_LAYOUTS",
    "family_direct",
    "family_direct_mod2",
    "family_matrices",
    "family_table",
    "family_table_mod2",
    "generator_matrix",
    "hankel_minors_exact",
    "required_prefix",
    "IDENTITIES",
    "IDENTITY_BY_NUMBER",
    "NEGATED",
    "PRINTED",
    "PROOF",
    "Identity",
    "RecurrencePrediction",
    "family_recurrence",
    "mod2_table_by_recurrence",
    "IdentityResolution",
    "Lemma1Report",
    "NonvanishingReport",
    "Prop2Report",
    "StarReport",
    "conjugation_check",
    "nonvanishing_check",
    "star_check",
    "verify_lemma1",
    "verify_prop2",
]
