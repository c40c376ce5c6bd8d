"""Exception types shared across the toolkit."""


class DimensionError(ValueError):
    """Matrix shapes are incompatible with the requested operation."""


class ContractError(ValueError):
    """An input violates a documented precondition (symmetry, monicity, ...)."""


class DomainError(ValueError):
    """A numeric parameter lies outside the supported range."""


class UnknownNameError(KeyError):
    """A singularity name or curve label is not recognised."""

    def __str__(self) -> str:
        return str(self.args[0]) if self.args else "unknown name"
