"""posetlab: exact arithmetic on locally finite posets.

Mobius functions by their defining recursion, incidence-algebra
convolution and inversion, zeta/Mobius transforms of finite-support
functions, and search tools (witness streams, support censuses, pair
searches) for probing when a function and its transform can both have
finite support. All scalars are Gaussian rationals; nothing is ever
rounded.
"""

from .errors import (
    BoundTooLarge,
    CyclicCovers,
    DomainError,
    DuplicateElement,
    ElementOutsideWindow,
    InsufficientWitnesses,
    InvalidElement,
    InvalidInput,
    NoClosedForm,
    NotComparable,
    NotInverses,
    NotInvertible,
    NotStrictlyAbove,
    NoUniqueBottom,
    PosetLabError,
    PosetMismatch,
    UnknownElementInCover,
    UsageError,
    WindowNotNested,
    ZeroFunction,
)
from .functions import (
    EvaluableFunction,
    FiniteSupportFunction,
    alpha_transform,
    function_from_document,
    function_to_document,
    materialize,
    mobius_inversion,
    zeta_transform,
)
from .incidence import (
    IntervalFunction,
    classical_mobius,
    closed_form_mobius,
    convolve,
    custom_function,
    delta_function,
    evaluate,
    invert,
    mobius_function,
    mobius_value,
    zeta_function,
)
from .lab import (
    ConjectureReport,
    PairSearchResult,
    SupportCensus,
    WitnessCertificate,
    check_witness_conditions,
    conjecture_experiment,
    finite_support_pair_search,
    support_census,
    verify_uncertainty_witnesses,
    witnesses,
)
from .posets import (
    ChainPoset,
    DivisibilityPoset,
    ExplicitPoset,
    MultisetPoset,
    Poset,
    SubsetPoset,
    Window,
    bottom,
    enumerate_window,
    get_poset,
    ideal,
    integer_to_multiset,
    interval,
    leq,
    load_explicit_poset,
    multiset_to_integer,
)
from .scalars import GaussianRational

__all__ = [
    "BoundTooLarge",
    "ChainPoset",
    "ConjectureReport",
    "CyclicCovers",
    "DivisibilityPoset",
    "DomainError",
    "DuplicateElement",
    "ElementOutsideWindow",
    "EvaluableFunction",
    "ExplicitPoset",
    "FiniteSupportFunction",
    "GaussianRational",
    "InsufficientWitnesses",
    "IntervalFunction",
    "InvalidElement",
    "InvalidInput",
    "MultisetPoset",
    "NoClosedForm",
    "NoUniqueBottom",
    "NotComparable",
    "NotInverses",
    "NotInvertible",
    "NotStrictlyAbove",
    "PairSearchResult",
    "Poset",
    "PosetLabError",
    "PosetMismatch",
    "SubsetPoset",
    "SupportCensus",
    "UnknownElementInCover",
    "UsageError",
    "Window",
    "WindowNotNested",
    "WitnessCertificate",
    "ZeroFunction",
    "alpha_transform",
    "bottom",
    "check_witness_conditions",
    "classical_mobius",
    "closed_form_mobius",
    "conjecture_experiment",
    "convolve",
    "custom_function",
    "delta_function",
    "enumerate_window",
    "evaluate",
    "finite_support_pair_search",
    "function_from_document",
    "function_to_document",
    "get_poset",
    "ideal",
    "integer_to_multiset",
    "interval",
    "invert",
    "leq",
    "load_explicit_poset",
    "materialize",
    "mobius_function",
    "mobius_inversion",
    "mobius_value",
    "multiset_to_integer",
    "support_census",
    "verify_uncertainty_witnesses",
    "witnesses",
    "zeta_function",
    "zeta_transform",
]
