"""Exception hierarchy shared by every module of the package."""


class ClusterColorError(Exception):
    """Base class for all package errors."""


# -- plane graph construction and surgery ---------------------------------

class PlaneGraphError(ClusterColorError, ValueError):
    pass


class AsymmetricRotation(PlaneGraphError):
    pass


class LoopOrMultiEdge(PlaneGraphError):
    pass


class Disconnected(PlaneGraphError):
    pass


class GenusPositive(PlaneGraphError):
    pass


class InvalidDart(PlaneGraphError):
    pass


class EmptySelection(PlaneGraphError):
    pass


class NotConnectedSet(PlaneGraphError):
    pass


class VerticesNotOnFace(PlaneGraphError):
    pass


class EdgeExists(PlaneGraphError):
    pass


class NoSuchEdge(PlaneGraphError):
    pass


# -- coloring engines -------------------------------------------------------

class HypothesisViolation(ClusterColorError):
    """An input does not satisfy the hypotheses of a coloring lemma.

    ``hypothesis`` names the failed condition so callers can report it.
    """

    def __init__(self, hypothesis: str, detail: str = ""):
        self.hypothesis = hypothesis
        self.detail = detail
        msg = hypothesis if not detail else f"{hypothesis}: {detail}"
        super().__init__(msg)


class InternalInvariantViolation(ClusterColorError):
    """A postcondition the construction guarantees was observed to fail."""


class NotNearTriangulated(ClusterColorError):
    pass


class InteriorDisconnected(ClusterColorError):
    pass


class PrescribedEdgeNotOuter(ClusterColorError):
    pass


class AttachmentShapeViolation(ClusterColorError):
    pass


class NonUniqueNeighborInX0(ClusterColorError):
    pass


class PartialColoring(ClusterColorError, ValueError):
    pass


class InvalidColor(ClusterColorError, ValueError):
    pass
