"""Exception types shared across the package."""


class GensembleError(Exception):
    """Base class for all package-specific errors."""


class InvalidSwap(GensembleError):
    """Edge swap whose preconditions do not hold against the target graph."""


class CompleteGraph(GensembleError):
    """A non-edge was requested but the graph has none."""


class SeedViolation(GensembleError):
    """Seed graph does not satisfy the generation constraints."""

    def __init__(self, reasons):
        self.reasons = list(reasons)
        super().__init__("; ".join(self.reasons))


class TooFewNodes(GensembleError):
    """Not enough nodes to build the requested number of layers."""


class InfeasibleEdgeCount(GensembleError):
    """Requested edge count exceeds the available edge universe."""


class LengthMismatch(GensembleError):
    """Spectra of different lengths cannot be compared."""


class TooFewGraphs(GensembleError):
    """Ensemble diversity needs at least two graphs."""


class ConvergenceFailure(GensembleError):
    """Eigensolver did not converge within its iteration cap."""


class NoSeedFound(GensembleError):
    """The constructive search exhausted its budget without a valid graph."""


class ConfigError(GensembleError):
    """Invalid experiment configuration."""
