"""Exception hierarchy shared by every module of the package."""


class MonomialError(Exception):
    """Base class for all errors raised by monogp."""


class CompositionError(MonomialError, ValueError):
    """Two paths (or arrows) do not compose."""


class DomainError(MonomialError, ValueError):
    """An object refers to vertices or arrows outside the quiver at hand."""


class PreconditionError(MonomialError, ValueError):
    pass


class EmptyQuiver(MonomialError, ValueError):
    pass


class NotAdmissible(MonomialError, ValueError):
    """The relations leave infinitely many nonzero paths.

    ``cycle`` is a list of arrow names (traversal order) which can be
    repeated forever without ever meeting a relation.
    """

    def __init__(self, cycle):
        self.cycle = list(cycle)
        super().__init__(
            "ideal is not admissible: the cycle %s never dies" % " ".join(self.cycle)
        )


class NotApplicable(MonomialError, ValueError):
    pass


class QuadraticRequired(MonomialError, ValueError):
    pass


class NotNakayama(MonomialError, ValueError):
    pass


class InvalidKupisch(MonomialError, ValueError):
    def __init__(self, index, message):
        self.index = index
        super().__init__("invalid Kupisch series at index %d: %s" % (index, message))


class GenerationExhausted(MonomialError, RuntimeError):
    pass


class OracleInconsistency(MonomialError, AssertionError):
    """The linear-algebra model disagrees with the combinatorial one."""
