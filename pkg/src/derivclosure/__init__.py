"""Return words, derived words and closure under derivation for fixed
points of primitive substitutions."""

from .analysis import (
    AncestorReport,
    Kind,
    SpecialClass,
    ancestors,
    bispecial_factors,
    classify_special,
    phi_map,
    right_special_prefixes,
)
from .closure import ClosureParams, ClosureReport, check_closed, derived_representatives, verify_family_theorem
from .derivation import (
    DerivationCertificate,
    LinkMorphism,
    Renaming,
    check_semiconjugacy,
    conjugacy_renaming,
    durand_substitution,
    fixed_up_to_renaming,
    link_morphism,
)
from .episturmian import cyc, epi_morphism, family, generator
from .errors import AlphabetMismatch, DecompositionError, InsufficientData, NotAFactor, NotPrimitive, WordError
from .morphism import (
    Morphism,
    PrefixOracle,
    Substitution,
    apply,
    compose,
    fixed_point_prefix,
    is_injective,
    is_primitive,
    primitivity_exponent,
)
from .returns import ReturnStructure, ScanPolicy, complete_return_words, derived_word, return_words
from .words import Alphabet, Word, extensions, factors, occurrences

__version__ = "0.1.0"

__all__ = [
    "Alphabet",
    "AlphabetMismatch",
    "AncestorReport",
    "ClosureParams",
    "ClosureReport",
    "DecompositionError",
    "DerivationCertificate",
    "InsufficientData",
    "Kind",
    "LinkMorphism",
    "Morphism",
    "NotAFactor",
    "NotPrimitive",
    "PrefixOracle",
    "Renaming",
    "ReturnStructure",
    "ScanPolicy",
    "SpecialClass",
    "Substitution",
    "Word",
    "WordError",
    "ancestors",
    "apply",
    "bispecial_factors",
    "check_closed",
    "check_semiconjugacy",
    "classify_special",
    "complete_return_words",
    "compose",
    "conjugacy_renaming",
    "cyc",
    "derived_representatives",
    "derived_word",
    "durand_substitution",
    "epi_morphism",
    "extensions",
    "factors",
    "family",
    "fixed_point_prefix",
    "fixed_up_to_renaming",
    "generator",
    "is_injective",
    "is_primitive",
    "link_morphism",
    "occurrences",
    "phi_map",
    "primitivity_exponent",
    "return_words",
    "right_special_prefixes",
    "verify_family_theorem",
]
