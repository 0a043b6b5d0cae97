"""Homology and cohomology algebras of regular quotient rings.

Exact symbolic computation over even-graded coefficient rings: regular
sequences and Koszul homology, conormal modules with their bilinear
forms, Clifford and exterior algebra presentations of quotient
homology, Bockstein derivations on the cohomology side, and ready-made
Morava K-theory scenarios.  The ``regquot`` command line runs one JSON
job document per invocation.
"""
__version__ = "0.1.0"

from .clifford import (
    AlgebraPresentation,
    CliffordAlgebra,
    TensorAlgebra,
    antipode,
    brute_force_presentation,
    homology_presentation,
    induced_algebra_map,
    orthogonal_split,
    presentation_of,
    tau,
)
from .conormal import (
    BilinearFormData,
    ProductToken,
    QuotientRingSpec,
    base_change_form,
    characteristic_form_diagonal,
    conormal_module,
    zero_form,
)
from .derivations import (
    bockstein,
    cohomology_presentation,
    compose,
    duality_square_commutes,
    leibniz_check,
    theta,
    theta_rank,
)
from .ideals import (
    check_condition_ii,
    check_regular_sequence,
    decompose_conormal,
    tor,
    tor1_equals_intersection_over_product,
)
from .morava import MoravaScenario, build_scenario, kn_form, minimum_window
from .pairs import AdmissiblePair, PairMorphism, make_pair, naturality_suite
from .ring import GradedRing, Generator, QuotientRing
from .scalars import BaseRing

__all__ = [
    "AdmissiblePair",
    "AlgebraPresentation",
    "BaseRing",
    "BilinearFormData",
    "CliffordAlgebra",
    "Generator",
    "GradedRing",
    "MoravaScenario",
    "PairMorphism",
    "ProductToken",
    "QuotientRing",
    "QuotientRingSpec",
    "TensorAlgebra",
    "antipode",
    "base_change_form",
    "bockstein",
    "brute_force_presentation",
    "build_scenario",
    "characteristic_form_diagonal",
    "check_condition_ii",
    "check_regular_sequence",
    "cohomology_presentation",
    "compose",
    "conormal_module",
    "decompose_conormal",
    "duality_square_commutes",
    "homology_presentation",
    "induced_algebra_map",
    "kn_form",
    "leibniz_check",
    "make_pair",
    "minimum_window",
    "naturality_suite",
    "orthogonal_split",
    "presentation_of",
    "tau",
    "theta",
    "theta_rank",
    "tor",
    "tor1_equals_intersection_over_product",
    "zero_form",
]
