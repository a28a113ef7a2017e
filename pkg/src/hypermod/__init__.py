"""Finite Krasner (m,n)-hyperrings, (m,n)-hypermodules and the multiplication property."""

from .core import (Carrier, HyperOperation, Hypermodule, KrasnerHyperring, Operation,
                   validate_hypermodule, validate_krasner_hyperring)
from .errors import (ArityError, CapacityError, HypermodError, ParseError, StructureViolation,
                     TotalityError, WellDefinednessError)

__all__ = [
    "Carrier", "HyperOperation", "Hypermodule", "KrasnerHyperring", "Operation",
    "validate_hypermodule", "validate_krasner_hyperring",
    "ArityError", "CapacityError", "HypermodError", "ParseError", "StructureViolation",
    "TotalityError", "WellDefinednessError",
]
