"""Exception types shared across the package."""


class SkewwalkError(Exception):
    """Base class for all package errors."""


class EmptyGraphError(SkewwalkError):
    """Operation requires at least one vertex."""


class TwoCycleError(SkewwalkError):
    """Edge set contains an anti-parallel pair (u,v),(v,u)."""


class LoopError(SkewwalkError):
    """Edge set contains a loop (v,v)."""


class EdgeListParseError(SkewwalkError):
    """Malformed edge-list file; carries the offending line number."""

    def __init__(self, line_no, message):
        super().__init__(f"line {line_no}: {message}")
        self.line_no = line_no


class InvalidDegreeError(SkewwalkError):
    """Degree parameter outside [1, n-1]."""


class KTooSmallError(SkewwalkError):
    """Threshold computation requires k >= 7."""


class NotDivisibleError(SkewwalkError):
    """Winding requires the base length to divide the target length."""


class GcdNotDividingError(SkewwalkError):
    """gcd(2*l1, l2) does not divide the target length."""


class NegativeWindingError(SkewwalkError):
    """Direct composition formula produced a negative multiplicity."""

    def __init__(self, u, v):
        super().__init__(f"negative winding multiplicities u={u}, v={v}")
        self.u = u
        self.v = v


class NotSkewError(SkewwalkError):
    """Mixed closed walk has equally many forward and backward steps."""


class InvalidWalkError(SkewwalkError):
    """Walk fails validation against its host graph."""

    def __init__(self, index, message="walk step not an edge of the host"):
        super().__init__(f"{message} (step {index})")
        self.index = index


class ConnectorMismatchError(SkewwalkError):
    """Connector endpoints disagree with the walk's backward segments."""


class CannotReachLengthError(SkewwalkError):
    """No nonnegative winding pair realises the requested total length."""

    def __init__(self, l1, l2, ell, cause):
        super().__init__(
            f"no nonnegative (u, v) with u*{l1} + v*{l2} = {ell} ({cause})"
        )
        self.cause = cause


class NotBipartiteError(SkewwalkError):
    """Underlying graph has an odd cycle; carries a witness mixed walk."""

    def __init__(self, witness):
        super().__init__(f"underlying graph has an odd cycle of length {witness.length}")
        self.witness = witness


class NoPathError(SkewwalkError):
    """No directed path between the requested vertices."""


class SkewWalkNotFoundError(SkewwalkError):
    """Layered search found no usable collision from any start vertex."""

    def __init__(self, diagnostics=None):
        super().__init__("no skew-walk collision found from any start vertex")
        self.diagnostics = diagnostics or {}


class DirectedShortWalkError(SkewwalkError):
    """Layered search found only a short closed directed walk.

    Signals a violated girth precondition; the witness walk is attached so
    the caller can fall back to winding.
    """

    def __init__(self, walk):
        super().__init__(f"search found a closed directed walk of length {walk.length}")
        self.walk = walk


class PipelineNotFoundError(SkewwalkError):
    """Pipeline could not produce a walk expression; carries diagnostics."""

    def __init__(self, stage, reason, diagnostics=None):
        super().__init__(f"stage {stage}: {reason}")
        self.stage = stage
        self.reason = reason
        self.diagnostics = diagnostics or {}


class EvenOrderError(SkewwalkError):
    """Regular tournaments exist only on an odd number of vertices."""


class GlueSpecError(SkewwalkError):
    """Glue parameters violate their invariants."""


class CannotSatisfyError(SkewwalkError):
    """Generator could not satisfy its advertised guarantees."""


class EnumerationBudgetError(SkewwalkError):
    """Cycle enumeration exceeded its node budget."""
