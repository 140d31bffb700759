"""Exception types shared across the package."""


class TorsionLabError(Exception):
    """Base class for all computational errors raised by this package."""


class DimensionError(TorsionLabError):
    """Matrix or complex dimensions are incompatible."""


class NotAcyclic(TorsionLabError):
    """Torsion requested for a complex with nonzero cohomology."""


class OnSigma(TorsionLabError):
    """Some combinatorial Laplacian is singular (the complex lies on the singular locus)."""


class SplitTooClose(TorsionLabError):
    """An eigenvalue sits too close to the spectral splitting circle."""


class InvalidRepresentation(TorsionLabError):
    """Evaluation at the given representation does not yield a cochain complex (d*d != 0)."""


class AdmissibilityError(TorsionLabError):
    """Shape/Betti data violates the admissibility inequalities."""


class SingularSample(TorsionLabError):
    """A path sample hit a zero or pole of the function being integrated."""


class PathResolution(TorsionLabError):
    """Adaptive refinement could not bring the per-step log increment below pi/2."""


class ZeroFactor(TorsionLabError):
    """A zeta product factor is singular."""


class NotNCT(TorsionLabError):
    """The toral automorphism is not hyperbolic (degenerate closed trajectories)."""


class FormatError(TorsionLabError):
    """A JSON input file violates its schema."""
