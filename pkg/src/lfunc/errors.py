"""Exception hierarchy shared by every subpackage."""


class LFuncError(Exception):
    """Base class for all library errors."""


class NotInvertibleError(LFuncError, ZeroDivisionError):
    pass


class InsufficientPrecisionError(LFuncError):
    pass


class NoSolutionError(LFuncError):
    """Raised when a series is not rational within the requested degree bounds."""


class ReconstructionError(LFuncError):
    """Per-component reconstruction failure; carries the component index."""

    def __init__(self, component, cause):
        super().__init__(f"component {component}: {cause}")
        self.component = component
        self.cause = cause


class NotIrreducibleError(LFuncError):
    pass


class ResourceLimitError(LFuncError):
    pass


class CacheCorruptionError(LFuncError):
    pass


class BranchLocusError(LFuncError):
    pass


class PositiveTwistError(LFuncError):
    pass


class MalformedAlgebraError(LFuncError):
    pass


class DescentError(MalformedAlgebraError):
    pass


class ZeroComponentError(LFuncError):
    pass


class NonDivisibleError(LFuncError):
    pass


class RelationError(LFuncError):
    pass


class IndeterminateDegreeError(LFuncError):
    pass


class NotIntegralError(LFuncError):
    pass


class ComplexError(LFuncError):
    """A chain complex or chain map failed its structural checks."""


class SemisimplicityError(LFuncError):
    pass


class ScenarioError(LFuncError):
    """Malformed scenario file; ``line``/``column`` point at the offending text when known."""

    def __init__(self, message, line=None, column=None):
        where = f" (line {line}, column {column})" if line is not None else ""
        super().__init__(message + where)
        self.line = line
        self.column = column


class ComponentInsufficientPrecision(ReconstructionError, InsufficientPrecisionError):
    pass


class ComponentNoSolution(ReconstructionError, NoSolutionError):
    pass
