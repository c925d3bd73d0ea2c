"""Exception hierarchy shared by all rotopt modules."""


class RotoptError(Exception):
    """Base class for all toolkit errors."""


class ConfigError(RotoptError):
    """Invalid or inconsistent run configuration."""


# --- driving cycle ---------------------------------------------------------

class CycleFormatError(RotoptError):
    """Malformed row or header in a driving-cycle file."""


class NonMonotoneTimeError(CycleFormatError):
    """Cycle time stamps are not strictly increasing."""


class NegativeSpeedError(CycleFormatError):
    """Cycle contains a negative vehicle speed."""


# --- clustering ------------------------------------------------------------

class EmptyInputError(RotoptError):
    """No points supplied to the clusterer."""


class TooManyClustersError(RotoptError):
    """Requested more clusters than distinct points."""


class SingleClusterError(RotoptError):
    """Inter-cluster metrics are undefined for a single cluster."""


class InvalidRangeError(RotoptError):
    """Cluster-count search range is empty or inverted."""


class ZeroTotalPowerError(RotoptError):
    """Representative-point weights undefined: total electrical power is zero."""


# --- geometry / decoding ---------------------------------------------------

class GeometryInvalidError(RotoptError):
    """Candidate geometry fails validity checks (intersections, bounds)."""


class MeshFailureError(RotoptError):
    """Mesh generation failed or produced a degenerate mesh."""


class LengthMismatchError(RotoptError):
    """Genome length does not match the design-variable count."""


class NonSimplePocketError(RotoptError):
    """Air pocket boundary is not a single simple closed loop."""


# --- mesh deformation ------------------------------------------------------

class ElementInversionError(RotoptError):
    """Deformed mesh contains inverted (non-positive-area) elements."""

    def __init__(self, elements):
        self.elements = list(elements)
        super().__init__(f"{len(self.elements)} inverted elements: "
                         f"{self.elements[:8]}{'...' if len(self.elements) > 8 else ''}")


class NoPathFoundError(RotoptError):
    """No auxiliary-line node chain could be constructed."""


# --- field / stress solvers ------------------------------------------------

class SingularSystemError(RotoptError):
    """FE system singular (insufficient constraints or floating region)."""


class NonConvergenceError(RotoptError):
    """Newton iteration failed to reach the residual tolerance."""

    def __init__(self, message, residual=None, iterations=None):
        self.residual = residual
        self.iterations = iterations
        super().__init__(message)


class TorqueUnreachableError(RotoptError):
    """Torque target exceeds capability at the current limit."""


# --- flux maps / demagnetization -------------------------------------------

class TraceLeavesMapError(RotoptError):
    """Short-circuit transient currents left the flux-map grid."""

    def __init__(self, step, point):
        self.step = step
        self.point = point
        super().__init__(f"transient left flux-map grid at step {step}: psi={point}")


# --- objective / GA --------------------------------------------------------

class NonPositiveReferenceError(RotoptError):
    """Soft objective term needs a strictly positive reference value."""


class EvaluatorFailureError(RotoptError):
    """Candidate evaluation raised; the GA assigns the invalid-geometry objective."""
