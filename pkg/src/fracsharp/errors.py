"""Exception hierarchy shared across the package."""


class FracsharpError(Exception):
    """Base class for all package-specific errors."""


class DomainError(FracsharpError, ValueError):
    """An argument lies outside the mathematical domain of an operation."""


class UnsupportedOrderError(DomainError):
    """A Bessel order (or similar index) outside the supported range."""


class RegistryError(FracsharpError, KeyError):
    """An unknown constant or check identifier."""


class ParameterError(DomainError):
    """Named-parameter validation failure; carries the violated predicates."""

    def __init__(self, name, violations):
        self.name = name
        self.violations = list(violations)
        msg = "; ".join(self.violations)
        super().__init__(f"{name}: requires {msg}")


class DivergenceError(FracsharpError, ArithmeticError):
    """A requested integral or moment is divergent for the given inputs."""


class ConsistencyError(FracsharpError, ArithmeticError):
    """Two independent evaluation routes disagree beyond tolerance."""


class ConvergenceError(FracsharpError, ArithmeticError):
    """A numerical transform failed to converge within its budget."""
