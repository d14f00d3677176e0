"""Exact-arithmetic toolkit for cocycle-twisted group-graded Frobenius algebras.

The library covers:

* exact scalars (prime fields and the rationals) and dense linear algebra;
* finite groups by multiplication table and finite coefficient modules;
* the cochain complex in degrees 0..4 with cohomology in degrees 0..3;
* the twisted-Frobenius axiom verifier with per-axiom reporting;
* constructions: one-dimensional algebras from scalar pairs, pair
  extraction, coboundary transformations, and the two classical
  degenerate families;
* the classification group of scalar pairs and the resulting census of
  simple algebras;
* a JSON instance format and the ``tfa`` command line driver.
"""

from .algebra import AlgebraContext, TFAlgebra, mu, z_rescale
from .cochains import (
    Cochain,
    coboundary,
    is_cocycle,
    is_normalized,
    normalize_cocycle,
)
from .cohomology import CohomologyGroup, brute_force_cohomology, cohomology_group
from .constructions import (
    build_simple,
    coboundary_transform,
    extract_kappa_pair,
    from_a_frobenius,
    from_crossed_frobenius,
)
from .fields import PrimeField, RationalField
from .gmodule import GModule, cyclic_module, trivial_module
from .groups import (
    FiniteGroup,
    cyclic_group,
    direct_product,
    group_from_table,
    symmetric_group,
    trivial_group,
)
from .isomorphism import UNDECIDED, GradedIsomorphism, is_isomorphic
from .linalg import Matrix
from .pairs import (
    KappaPair,
    PairClassGroup,
    classify_simple,
    coboundary_pair,
    enumerate_pairs,
    is_kappa_pair,
    pairs_equivalent,
)
from .verify import VerificationReport, verify

__all__ = [
    "AlgebraContext",
    "Cochain",
    "CohomologyGroup",
    "FiniteGroup",
    "GModule",
    "GradedIsomorphism",
    "KappaPair",
    "Matrix",
    "PairClassGroup",
    "PrimeField",
    "RationalField",
    "TFAlgebra",
    "UNDECIDED",
    "VerificationReport",
    "brute_force_cohomology",
    "build_simple",
    "classify_simple",
    "coboundary",
    "coboundary_pair",
    "coboundary_transform",
    "cohomology_group",
    "cyclic_group",
    "cyclic_module",
    "direct_product",
    "enumerate_pairs",
    "extract_kappa_pair",
    "from_a_frobenius",
    "from_crossed_frobenius",
    "group_from_table",
    "is_cocycle",
    "is_isomorphic",
    "is_kappa_pair",
    "is_normalized",
    "mu",
    "normalize_cocycle",
    "pairs_equivalent",
    "symmetric_group",
    "trivial_group",
    "trivial_module",
    "verify",
    "z_rescale",
]

__version__ = "0.1.0"
