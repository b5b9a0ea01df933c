from typing import Any, Dict, Optional


# Custom exception for numerical faults raised by the simulator
class SimulationError(Exception):
    def __init__(
        self,
        message: str,
        operation: Optional[str] = None,
        details: Optional[Dict[str, Any]] = None,
    ):
        super().__init__(message)
        self.operation = operation
        self.details = details

    def __str__(self):
        base_message = super().__str__()
        extras = []
        if self.operation:
            extras.append(f"Operation: {self.operation}")
        if self.details:
            extras.append(
                "Details: " + ", ".join(f"{k}={v}" for k, v in self.details.items())
            )
        if not extras:
            return f"{type(self).__name__}: {base_message}"
        return f"{type(self).__name__}: {base_message} ({'; '.join(extras)})"


class DimensionMismatchError(SimulationError):
    """Operands whose dimensions do not fit together."""


class DomainError(SimulationError):
    """Inputs outside the domain where an operation is defined."""


class UndefinedResultError(SimulationError):
    """A statistic that cannot be formed, e.g. every trial was rejected."""
