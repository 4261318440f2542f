"""Exception hierarchy shared by every module of the package."""

from __future__ import annotations


class AtlasError(Exception):
    """Base class for all domain errors raised by cubic_atlas."""


class NotARoot(AtlasError, ValueError):
    pass


class SameLine(AtlasError, ValueError):
    pass


class NotSkew(AtlasError, ValueError):
    pass


class NotClosed(AtlasError, ValueError):
    pass


class NotSimpleSystem(AtlasError, ValueError):
    pass


class NotAnOrbit(AtlasError, ValueError):
    pass


class LabelError(AtlasError, ValueError):
    """A configuration label does not match the ``k?TYPE(+k?TYPE)*`` grammar."""


class NotEmbeddable(AtlasError):
    """No sub-root system of the requested type exists inside E6."""


class RankTooLarge(NotEmbeddable):
    pass


class InternalError(AtlasError, RuntimeError):
    """A verification that should be unreachable inside E6 failed."""


class UnrecognizedDiagram(InternalError):
    pass


class NoIsomorphism(InternalError):
    pass


class NotIsometry(InternalError):
    pass
