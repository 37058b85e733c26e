"""
Exception hierarchy shared by the physics modules, handlers and the CLI.
"""


class PlanckCheckError(Exception):
    """Root of every error raised deliberately by this project."""


class DomainError(PlanckCheckError, ValueError):
    """A physical parameter is outside its domain (|beta| >= 1, amplitude <= 0, ...)."""


class ConfigurationError(PlanckCheckError, ValueError):
    """A plan, grid, sweep config or config file is invalid."""


class ConsistencyError(PlanckCheckError):
    """Two inputs that must describe the same object disagree."""


class DegenerateFitError(PlanckCheckError):
    """Proportionality cannot be tested from the given samples."""


class EvaluationError(PlanckCheckError):
    """A profile produced non-finite values."""
