"""Exception hierarchy shared by all modules.

Degenerate inputs are recoverable: callers resample and retry.  Everything
else signals either a configuration problem or a genuine verification
failure.
"""


class CurveConesError(Exception):
    """Base class for all package errors."""


class ConfigError(CurveConesError):
    """Invalid configuration value; message names the offending field."""


class InconsistentSystem(CurveConesError):
    """Linear system M x = rhs has no solution."""


class GenerationFailed(CurveConesError):
    """Curve generation exhausted its retry budget for this (prime, seed)."""


class InsufficientPoints(CurveConesError):
    """Point sampling ran out of slice budget before reaching the target."""


class SingularPoint(CurveConesError):
    """Jacobian rank dropped at a point that was expected to be smooth."""


class RankDeficiency(CurveConesError):
    """A point panel failed to separate a graded piece of the ring."""


class RankDeficientW(CurveConesError):
    """Supplied net matrix does not have rank 3."""


class AmbiguousFit(CurveConesError):
    """Plane-curve fit kernel is not one-dimensional."""


class DegenerateInput(CurveConesError):
    """Recoverable precondition failure; resample the offending input."""


class InVertex(DegenerateInput):
    """Probe point lies on the vertex of the net."""


class OnGammaFiber(DegenerateInput):
    """Probe point projects onto the plane image of the curve."""


class InadmissiblePencil(DegenerateInput):
    """Pencil has a base point or its multiplication image has wrong codim."""


class CorankJump(DegenerateInput):
    """Cup-product Gram matrix has corank other than 2."""


class UnderdeterminedReconstruction(CurveConesError):
    """Quartic reconstruction still ambiguous after the pencil cap."""


class InconsistentReconstruction(CurveConesError):
    """Quartic reconstruction system has no nonzero solution."""


class VerificationFailed(CurveConesError):
    """A certificate check on a reconstructed form failed."""


class NonGenericD(CurveConesError):
    """Degenerate-locus net whose restriction kernel is not one-dimensional."""


class SigmaPoint(CurveConesError):
    """Curve point whose tangent line meets the vertex."""


class SplittingViolation(CurveConesError):
    """Restricted quartic is not divisible by the square of the vertex form."""


class NodeFiber(CurveConesError):
    """Fiber over a singular point of the plane image; Steinerian undefined."""


class NonGenericCoordinates(CurveConesError):
    """Singular points collide in the chosen chart; retry with a new frame."""
