"""Exception hierarchy shared by all cactuscount modules."""


class CactusCountError(Exception):
    """Base class for every error raised by this package."""


# --- DIMACS parsing -------------------------------------------------------

class DimacsError(CactusCountError):
    """Malformed DIMACS input."""


class MissingHeader(DimacsError):
    """No `p cnf <n> <m>` line before the first clause (or at all)."""


class MalformedHeader(DimacsError):
    """A `p` line that is not exactly `p cnf <n> <m>` with n, m >= 0."""


class LiteralOutOfRange(DimacsError):
    """A literal whose variable index exceeds the declared variable count."""


class Not2CNF(DimacsError):
    """A clause with three or more literals."""


class EmptyClause(DimacsError):
    """A clause with no literals (a bare `0`); the formula is unsatisfiable."""


class UnterminatedClause(DimacsError):
    """Input ended in the middle of a clause, before its closing `0`."""


class ClauseCountWarning(UserWarning):
    """Actual clause count differs from the header's m; parsing proceeds."""


# --- preprocessing --------------------------------------------------------

class UnsupportedParallelPair(CactusCountError):
    """Two clauses on the same variable pair with both signs flipped.

    The pair encodes an XOR/equivalence constraint; reducing it would
    require merging variables, which this counter does not do.
    """

    def __init__(self, var_u, var_v, combos):
        self.var_u = var_u
        self.var_v = var_v
        self.combos = combos
        super().__init__(
            f"clauses on variables ({var_u}, {var_v}) differ in both signs "
            f"(sign combinations {combos}); XOR-shaped parallel pairs are "
            f"not supported"
        )


# --- spanning forest / cactus check ---------------------------------------

class NotCactus(CactusCountError):
    """The constraint graph has an edge lying on two cycles."""


class InternalCrossEdge(CactusCountError):
    """A non-tree edge whose endpoints are not in ancestor relation.

    Impossible for a correct undirected depth-first search; raised only to
    surface implementation bugs loudly.
    """


# --- counting -------------------------------------------------------------

class NegativeCount(CactusCountError):
    """A cycle-closing subtraction went below zero; upstream logic bug."""


# --- oracle ---------------------------------------------------------------

class TooLarge(CactusCountError):
    """Formula exceeds the brute-force enumeration limit."""


# --- generator ------------------------------------------------------------

class InvalidParams(CactusCountError, ValueError):
    """Generator parameters outside their documented domain."""


# --- benchmark ------------------------------------------------------------

class SpawnFailed(CactusCountError):
    """External counter process could not be started."""


class ParseCountFailed(CactusCountError):
    """External counter ran but produced no recognizable count line."""

    def __init__(self, message, seconds):
        self.seconds = seconds
        super().__init__(message)
