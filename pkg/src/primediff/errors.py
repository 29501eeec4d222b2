"""Exception types shared across the package."""


class PrimeDiffError(Exception):
    """Base class for package-specific errors."""


class Infeasible(PrimeDiffError):
    """The requested structure provably does not exist for these parameters."""

    def __init__(self, message: str, **detail):
        super().__init__(message)
        self.detail = detail


class NonEdge(PrimeDiffError):
    """The given vertex pair is not an edge: its difference is not prime."""


class NotFound(PrimeDiffError):
    """A bounded search exhausted its limit without an answer."""


class OrderCapExceeded(PrimeDiffError):
    """A brute-force query was asked about a graph above the configured cap."""

    def __init__(self, order: int, cap: int):
        super().__init__(f"order {order} exceeds brute-force cap {cap}")
        self.order = order
        self.cap = cap


class ConstructionError(PrimeDiffError):
    """A constructor produced a witness that failed its own verifier."""
