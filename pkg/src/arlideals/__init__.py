"""Almost reverse lexicographic monomial ideals: structure, Hilbert functions,
synthesis from a Hilbert function, and Fröberg sequences."""

__version__ = "0.1.0"

from .arl import (
    AugmentationPlan,
    augment,
    check_arl_criterion,
    check_arl_definition,
    corollary_inequalities_hold,
    is_arl,
)
from .froberg import FroebergSpec, classify_tail, froberg_to_ideal, froberg_values, normalize
from .hilbert import hilbert_function, hilbert_values
from .ideal import (
    INF,
    MonomialIdeal,
    enumerate_index_sets,
    f_eval,
    is_strongly_stable,
    last_generator,
    make_ideal,
    reconstruct_generators,
)
from .sequences import (
    EventuallyConstant,
    EventuallyZero,
    HilbertSeq,
    SeriesBacked,
    derived,
    is_unimodal_at_each_tail,
    tail_analysis,
)
from .synthesis import synthesize

__all__ = [
    "INF",
    "AugmentationPlan",
    "EventuallyConstant",
    "EventuallyZero",
    "FroebergSpec",
    "HilbertSeq",
    "MonomialIdeal",
    "SeriesBacked",
    "augment",
    "check_arl_criterion",
    "check_arl_definition",
    "classify_tail",
    "corollary_inequalities_hold",
    "derived",
    "enumerate_index_sets",
    "f_eval",
    "froberg_to_ideal",
    "froberg_values",
    "hilbert_function",
    "hilbert_values",
    "is_arl",
    "is_strongly_stable",
    "is_unimodal_at_each_tail",
    "last_generator",
    "make_ideal",
    "normalize",
    "reconstruct_generators",
    "synthesize",
    "tail_analysis",
]
