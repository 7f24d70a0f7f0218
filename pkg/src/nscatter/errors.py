"""Exception types shared across the package."""


class NsnError(Exception):
    """Base class for all package-specific errors."""


class InputError(NsnError, ValueError):
    """Invalid caller input: bad vertex ids, malformed files, violated preconditions."""


class DisconnectedGraphError(InputError):
    """An operation that requires a connected graph was given a disconnected one."""


class SizeLimitError(NsnError):
    """An exponential-time operation was asked to exceed its configured bound."""


class NotAnIntervalGraphError(NsnError):
    """A computation that needs an interval graph got one that failed recognition.

    ``reason`` is one of ``"not-chordal"`` or ``"no-consecutive-ordering"``.
    """

    def __init__(self, reason: str):
        super().__init__(f"not an interval graph: {reason}")
        self.reason = reason


class CharacterizationGapError(NsnError):
    """A connected non-complete piece has no single-vertex cut-strategy that
    leaves a nonempty survival graph, so the single-vertex recursion cannot
    proceed.  Carries the piece identity."""

    def __init__(self, l: int, r: int):
        super().__init__(
            f"piece ({l},{r}): no single-vertex cut-strategy with nonempty survival graph"
        )
        self.l = l
        self.r = r


class NoAdmissibleStrategyError(NsnError):
    """Every cut-strategy of the graph empties it, leaving the value undefined."""


class PieceMismatchError(NsnError):
    """A survival component does not equal the piece spanned by its clique indices."""

    def __init__(self, l: int, r: int, component=None, piece=None):
        if component is not None and piece is not None:
            message = (
                f"component {sorted(component)} is not piece ({l},{r}) = {sorted(piece)}"
            )
        else:
            message = f"survival component does not match piece ({l},{r})"
        super().__init__(message)
        self.l = l
        self.r = r
        self.component = component
        self.piece = piece
