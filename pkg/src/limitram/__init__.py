"""Limit linear systems and limit ramification divisors for planar degenerations.

A family G = q_1 ... q_t + t*h of plane curves degenerates to the nodal
curve q_1 ... q_t = 0.  Given a linear system of degree-k plane forms, the
package finds the associated extension for each component, the connecting
numbers, and the limit of the ramification (inflection or Weierstrass)
divisors, all in exact rational arithmetic.
"""

from .catalog import example, load_example
from .errors import (IdentityCheckError, IterationBoundExceeded, LimitramError,
                     LinearDependenceError, NonHomogeneousError, ParseError, PrecisionExhausted,
                     PreconditionError, ValidationError)
from .fibre import (ComponentSpec, FamilyModel, Node, ValidationReport, canonical_twist,
                    decompose_twist, multidegree, normalize_twist, restrict_section,
                    same_twist_class, validate_family, valuation)
from .io import family_from_json, family_to_json, load_family
from .lattice import (ExtensionRecord, LatticeBasis, LimitSystem, associated_extension,
                      associated_extensions, connecting_matrix, connecting_number,
                      connecting_vector, limit_at_twist, saturate_lattice)
from .pipeline import with_retries
from .ramification import (RamificationReport, WeightedPoint, case12_check,
                           component_ram_divisor, cor9_predicate, limit_divisor, node_weight,
                           vanishing_sequence)

__version__ = "0.1.0"

__all__ = [
    "example",
    "load_example",
    "IdentityCheckError",
    "IterationBoundExceeded",
    "LimitramError",
    "LinearDependenceError",
    "NonHomogeneousError",
    "ParseError",
    "PrecisionExhausted",
    "PreconditionError",
    "ValidationError",
    "ComponentSpec",
    "FamilyModel",
    "Node",
    "ValidationReport",
    "canonical_twist",
    "decompose_twist",
    "multidegree",
    "normalize_twist",
    "restrict_section",
    "same_twist_class",
    "validate_family",
    "valuation",
    "family_from_json",
    "family_to_json",
    "load_family",
    "ExtensionRecord",
    "LatticeBasis",
    "LimitSystem",
    "associated_extension",
    "associated_extensions",
    "connecting_matrix",
    "connecting_number",
    "connecting_vector",
    "limit_at_twist",
    "saturate_lattice",
    "with_retries",
    "RamificationReport",
    "WeightedPoint",
    "case12_check",
    "component_ram_divisor",
    "cor9_predicate",
    "limit_divisor",
    "node_weight",
    "vanishing_sequence",
]
