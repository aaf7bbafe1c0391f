"""Exception hierarchy.

Everything derives from :class:`ThetaLabError`.  Input problems that the CLI
maps to exit code 2 also derive from :class:`InputError`.
"""


class ThetaLabError(Exception):
    pass


class InputError(ThetaLabError, ValueError):
    pass


class LoopEdge(InputError):
    pass


class DuplicateEdge(InputError):
    pass


class Disconnected(InputError):
    pass


class GraphSyntaxError(InputError):
    """Malformed graph file; ``lineno`` is 1-based."""

    def __init__(self, message, lineno=None):
        self.lineno = lineno
        if lineno is not None:
            message = f"line {lineno}: {message}"
        super().__init__(message)


class ConsistencyError(InputError):
    pass


class EulerViolation(InputError):
    pass


class FamilyMismatch(InputError):
    pass


class NotBipartite(ThetaLabError):
    pass


class NotInTheta(ThetaLabError):
    pass


class NotPartialCube(ThetaLabError):
    pass


class ClassRemovalNotTwoComponents(ThetaLabError):
    """Internal consistency failure in the cut method; indicates a bug."""


class GroundSetMismatch(ThetaLabError):
    pass


class NotFullerene(FamilyMismatch):
    pass


class NotTriangulation(FamilyMismatch):
    pass


class NotChordal(FamilyMismatch):
    pass


class Not2Connected(FamilyMismatch):
    pass
