"""Exception hierarchy shared by every layer of the package."""


class HypermodError(Exception):
    """Base class for all package errors."""


class CapacityError(HypermodError):
    """A configured size or table budget would be exceeded."""


class ArityError(HypermodError):
    pass


class StructureViolation(HypermodError):
    """A derived object the theory promises to be a substructure is not one."""


class WellDefinednessError(StructureViolation):
    """Quotient operations depend on the choice of coset representatives."""


class InternalAssertError(HypermodError):
    pass


class StructureFileError(HypermodError):
    """Raised by the structure-file parser; carries positioned diagnostics."""

    def __init__(self, message, diagnostics=()):
        super().__init__(message)
        self.diagnostics = list(diagnostics)


class ParseError(StructureFileError):
    pass


class TotalityError(StructureFileError):
    pass
