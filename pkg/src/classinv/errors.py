"""Exception types shared across the package."""


class ShapeError(ValueError):
    """A partition or tableau does not have the required shape."""


class SizeLimitError(ValueError):
    """An enumeration request exceeds the configured size limit."""


class MalformedDiagramError(ValueError):
    """An arc diagram is structurally incompatible with the requested group."""


class UnsupportedGroupError(ValueError):
    """The requested operation is not defined for this group."""
