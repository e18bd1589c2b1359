"""Exception types shared across the package."""


class PlanarOracleError(Exception):
    """Base class for all errors raised by this package."""


class AsymmetricAdjacency(PlanarOracleError):
    """A rotation system lists u as a neighbour of v but not vice versa."""


class SelfLoop(PlanarOracleError):
    """A rotation system contains a vertex adjacent to itself."""


class ParallelEdge(PlanarOracleError):
    """A rotation system lists the same neighbour twice at one vertex."""


class EulerViolation(PlanarOracleError):
    """Face count is inconsistent with a genus-zero embedding.

    Signals a non-planar or corrupted rotation system.
    """


class EmptySet(PlanarOracleError):
    """A canonical vertex was requested for an empty vertex set."""


class ZeroDimension(PlanarOracleError):
    """A grid generator was asked for zero rows or columns."""


class DisconnectedInput(PlanarOracleError):
    """An operation requiring a connected graph received a disconnected one."""


class NonDecreasingSchedule(PlanarOracleError):
    """A recursive division schedule is not strictly decreasing."""


class UnreachableComponent(PlanarOracleError):
    """Inside-hole assignment met a component with no attachment to the region."""


class EntryOutOfRange(PlanarOracleError):
    """A pattern entry fell outside {-1, 0, +1}.

    Consecutive walk vertices share a unit-length edge, so distance
    differences along a walk cannot leave that range; seeing one means the
    walk (or the distances fed in) is corrupted.
    """


class EpsilonOutOfRange(PlanarOracleError):
    """Schedule construction received epsilon outside (0, 1]."""


class Mismatch(PlanarOracleError):
    """An oracle disagreed with the brute-force baseline.

    Attributes carry the first failing query so the report is actionable.
    """

    def __init__(self, s, t, got, want, trace=None):
        self.s = s
        self.t = t
        self.got = got
        self.want = want
        self.trace = trace
        msg = f"query ({s}, {t}) returned {got}, brute force says {want}"
        if trace is not None:
            msg += f"; trace: {trace}"
        super().__init__(msg)
