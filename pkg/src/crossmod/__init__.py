"""Exact computations with crossed and 2-crossed modules of commutative algebras over F_p."""

from .algebra import (
    AlgebraAction,
    AlgebraMorphism,
    FiniteAlgebra,
    Ideal,
    check_action,
    check_algebra,
    check_morphism,
    direct_product,
    identity,
    kernel_image,
    mk_action,
    mk_algebra,
    mk_ideal,
    mk_morphism,
    multiplier_algebra,
    prime_field,
    quotient_by_ideal,
    zero_algebra,
)
from .catcheck import (
    HomSet,
    TestFamily,
    check_adjunction_g1,
    check_adjunction_pullback_induced,
    check_cartesian,
    check_cocartesian,
    check_free_2xmod,
    check_free_module,
    check_induced_naturality,
    check_pullback_naturality,
    enum_2x_morphisms,
    enum_alg_morphisms,
    find_vertical_isomorphism,
)
from .constructions import induced_2xmod_epi, nonmono_witness, pullback_2xmod
from .errors import AlgebraInputError, CrossmodError, InternalMathError, SearchSpaceTooLarge
from .report import Report, Violation
from .x2mod import (
    PeifferLifting,
    TwoCrossedModule,
    TwoCrossedMorphism,
    check_2morphism,
    check_2xmod,
    derived_action,
    functor_alpha,
    functor_beta,
    functor_sk,
    functor_tr,
    sk_obstruction,
    trivial_lifting_report,
)
from .xmod import (
    CrossedModule,
    PreCrossedModule,
    check_crossed,
    check_precrossed,
    functor_delta,
    functor_gamma,
    ideal_pair,
)

__version__ = "0.1.0"


__all__ = [
    "AlgebraAction",
    "AlgebraInputError",
    "AlgebraMorphism",
    "CrossedModule",
    "CrossmodError",
    "FiniteAlgebra",
    "HomSet",
    "Ideal",
    "InternalMathError",
    "PeifferLifting",
    "PreCrossedModule",
    "Report",
    "SearchSpaceTooLarge",
    "TestFamily",
    "TwoCrossedModule",
    "TwoCrossedMorphism",
    "Violation",
    "check_2morphism",
    "check_2xmod",
    "check_action",
    "check_adjunction_g1",
    "check_adjunction_pullback_induced",
    "check_algebra",
    "check_cartesian",
    "check_cocartesian",
    "check_crossed",
    "check_free_2xmod",
    "check_free_module",
    "check_induced_naturality",
    "check_morphism",
    "check_precrossed",
    "check_pullback_naturality",
    "derived_action",
    "direct_product",
    "enum_2x_morphisms",
    "enum_alg_morphisms",
    "find_vertical_isomorphism",
    "functor_alpha",
    "functor_beta",
    "functor_delta",
    "functor_gamma",
    "functor_sk",
    "functor_tr",
    "ideal_pair",
    "identity",
    "induced_2xmod_epi",
    "kernel_image",
    "mk_action",
    "mk_algebra",
    "mk_ideal",
    "mk_morphism",
    "multiplier_algebra",
    "nonmono_witness",
    "prime_field",
    "pullback_2xmod",
    "quotient_by_ideal",
    "sk_obstruction",
    "trivial_lifting_report",
    "zero_algebra",
]
