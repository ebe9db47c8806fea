"""Exception hierarchy shared by every stage of the pipeline."""

from __future__ import annotations


class VpgError(Exception):
    """Base class for all errors raised by :mod:`vpg0`."""


class GraphError(VpgError, ValueError):
    """Malformed graph or poset value (duplicate labels, self-loops, ...)."""


class CycleError(VpgError, ValueError):
    def __init__(self, cycle):
        self.cycle = tuple(cycle)
        super().__init__(f"cover relation contains a directed cycle: {self.cycle!r}")


class NotTransitive(VpgError, ValueError):
    def __init__(self, triple, message=None):
        self.triple = tuple(triple)
        super().__init__(message or f"orientation is not transitive at {self.triple!r}")


class ConditionIViolated(VpgError):
    """Two vertices of one induced C4 are diamond related; no reduced dd-minor exists."""

    def __init__(self, witness):
        self.witness = witness
        super().__init__(f"induced C4 {witness.c4!r} has diamond related vertices "
                         f"{witness.u!r} and {witness.v!r}")


class NotAdjacent(VpgError, ValueError):
    def __init__(self, i, j):
        super().__init__(f"branch sets {i!r} and {j!r} are not adjacent in the quotient")


class NotBipartite(VpgError):
    def __init__(self, cycle):
        self.cycle = tuple(cycle)
        super().__init__(f"quotient graph has an odd cycle through {self.cycle!r}")


class TwoPlusTwo(VpgError):
    """The poset restricted to a vertex set contains a 2+2 and so is not an interval order."""

    def __init__(self, quad):
        self.quad = tuple(quad)
        a, x, b, y = self.quad
        super().__init__(f"2+2 found: {a!r}<{x!r} and {b!r}<{y!r} with no other relations")


class EmptyCliqueRegion(VpgError):
    def __init__(self, branch, neighbor, members):
        self.members = tuple(members)
        super().__init__(f"intervals of {self.members!r} share no point "
                         f"(branch {branch}, neighbor {neighbor})")


class PinOrderMismatch(VpgError, ValueError):
    pass


class InvalidPoset(VpgError, ValueError):
    pass


class InvalidSigma(VpgError, ValueError):
    pass


class SizeLimit(VpgError, ValueError):
    pass


class ParseError(VpgError, ValueError):
    def __init__(self, message, line=None):
        self.line = line
        where = f"line {line}: " if line is not None else ""
        super().__init__(where + message)
