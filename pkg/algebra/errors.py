"""
Exceptions raised by the algebra package.

All of them derive from AlgebraError so callers can map any algebra failure
to a single exit path.
"""

from typing import Any, Optional, Tuple


class AlgebraError(Exception):
    """Base class for algebra failures."""
    pass


class AxiomViolation(AlgebraError):
    """Exception raised when operation tables fail a ring or group axiom."""

    def __init__(self, axiom: str, witness: Tuple[int, ...], label: str = ""):
        self.axiom = axiom
        self.witness = tuple(int(w) for w in witness)
        self.label = label
        where = f" in '{label}'" if label else ""
        super().__init__(f"axiom '{axiom}' fails{where} at {self.witness}")


class SizeOverflow(AlgebraError):
    """Exception raised when a construction would exceed a configured cap."""

    def __init__(self, what: str, size: int, cap: int):
        self.what = what
        self.size = size
        self.cap = cap
        super().__init__(f"{what}: size {size} exceeds cap {cap}")


class NonCommutativeBase(AlgebraError):
    """Exception raised when a polynomial quotient is requested over a non-commutative ring."""
    pass


class NotAGroupRing(AlgebraError):
    """Exception raised when group-ring structure is required but absent."""
    pass


class ParentMismatch(AlgebraError):
    """Exception raised when lattice operations mix submodules of different modules."""
    pass


class SideMismatch(AlgebraError):
    """Exception raised when modules of the wrong side (or ring) are combined."""
    pass


class NotJointlyInjective(AlgebraError):
    """Exception raised when a tuple of maps has a nonzero common kernel."""

    def __init__(self, message: str, witness: Optional[Any] = None):
        self.witness = witness
        super().__init__(message)


class ActionMismatch(AlgebraError):
    """Exception raised when a map's source does not carry the expected restricted action."""
    pass


class InvariantViolation(AlgebraError):
    """Exception raised when two independent computations of the same quantity disagree."""
    pass


class NotAHomomorphism(AlgebraError):
    """Exception raised when a value table is not additive or not action-compatible."""

    def __init__(self, message: str, witness: Optional[Tuple[int, ...]] = None):
        self.witness = witness
        super().__init__(message)
