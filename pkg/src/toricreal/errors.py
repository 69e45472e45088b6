"""Exception hierarchy.

Domain errors signal violated preconditions of an otherwise valid request
(exit code 3 in the CLI); parse errors signal malformed input (exit code 2).
"""


class ToricRealError(Exception):
    """Base class for all library errors."""


class ParseError(ToricRealError):
    """Malformed file or literal."""


class DomainError(ToricRealError):
    """A precondition of the requested operation does not hold."""


class NoSolution(DomainError):
    """The linear system is inconsistent."""


class EmptyPolytope(DomainError):
    """The halfspace system is infeasible."""


class UnboundedPolyhedron(DomainError):
    """The halfspace system has a recession direction."""


class LowerDimensional(DomainError):
    """The polytope is not full-dimensional in its ambient space."""


class InconsistentRelations(DomainError):
    """Primitive relations do not determine rays of the expected rank."""


class NotComplete(DomainError):
    """The fan does not cover the ambient space."""


class NotSimplicial(DomainError):
    """The fan has a non-simplicial maximal cone."""


class TorsionClassGroup(DomainError):
    """The divisor class group has torsion; chamber machinery requires it free."""


class NotBig(DomainError):
    """The divisor has an empty (or otherwise degenerate) moment polytope."""


class NotCartier(DomainError):
    """The divisor is not Cartier."""


class NotFano(DomainError):
    """The anticanonical divisor is not ample."""


class SameChamber(DomainError):
    """Wall classification requested for combinatorially equivalent polytopes."""


class OutOfRange(DomainError):
    """A weight parameter lies outside the admissible interval."""


class ExhaustedAttempts(DomainError):
    """A randomized search hit its attempt cap."""


class NoSuchM(DomainError):
    """The ampleness scan exceeded its cap without success."""
