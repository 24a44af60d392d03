"""Exception types shared across the package."""


class LinkboundError(Exception):
    """Base class for user-facing errors (bad input, bad options)."""


class PDSyntaxError(LinkboundError, ValueError):
    def __init__(self, message, position):
        super().__init__(f"{message} at position {position}")
        self.position = position


class DiagramError(LinkboundError, ValueError):
    """A diagram violates one or more structural invariants."""

    def __init__(self, violations):
        self.violations = list(violations)
        super().__init__("invalid diagram: " + ", ".join(str(v) for v in self.violations))


class InadmissibleMapError(LinkboundError, ValueError):
    pass


class CatalogLookupError(LinkboundError, KeyError):
    def __str__(self):
        return self.args[0]


class IngestError(LinkboundError, ValueError):
    def __init__(self, path, line, cause):
        super().__init__(f"{path}:{line}: {cause}")
        self.path = path
        self.line = line
        self.cause = cause


class InconsistencyError(RuntimeError):
    """An internal cross-check failed; this signals a bug, never valid output."""
