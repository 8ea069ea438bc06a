"""Fuzzy quantifier-based fuzzy rough sets.

Core pieces: fuzzy sets and connectives (``fuzzy_core``), OWA and Choquet
aggregation (``aggregation``), RIM quantifiers (``rim``), the quantification
models (``quantifiers``, ``qfm``) and the approximation operators (``frs``).
"""

from fqfrs.errors import (
    CapacityError,
    ConfigurationError,
    DimensionError,
    DomainError,
    FQFRSError,
    ParseError,
    UndefinedStatisticError,
)
from fqfrs.fuzzy_core import FuzzyRelation, FuzzySet, kd_implicator, minimum
from fqfrs.frs import ApproximationSpec, lower_approximation, named_model, upper_approximation
from fqfrs.qfm import fowa_binary_q2, mcx_binary_q2
from fqfrs.quantifiers import wowa_binary, yager_implication_binary, ywi_binary
from fqfrs.rim import EXISTENTIAL, IDENTITY, UNIVERSAL, ZadehS, parse_rim

__version__ = "0.1.0"
