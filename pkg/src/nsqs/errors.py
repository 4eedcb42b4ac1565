"""Exception types shared across the package."""


class NsqsError(ValueError):
    """Base class for all domain errors raised by this package."""


class InvalidPairError(NsqsError):
    pass


class InvalidBlockError(NsqsError):
    pass


class InvalidSplitError(NsqsError):
    pass


class InvalidOrderError(NsqsError):
    """Raised for a v that cannot carry the requested structure."""


class InvalidFieldError(NsqsError):
    pass


class InvalidModulusError(NsqsError):
    pass


class InconsistentSpecError(NsqsError):
    """A rotational spec whose expansion does not form a quadruple system."""


class PreconditionError(NsqsError):
    """An operation was handed an input violating its stated precondition."""


class ParseError(NsqsError):
    pass
