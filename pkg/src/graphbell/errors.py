"""Exception types shared across the package."""


class InvalidGraphError(ValueError):
    """Graph construction or vertex argument violates an invariant."""


class EdgeListParseError(ValueError):
    """Malformed edge-list or graph6 input."""


class CapExceededError(RuntimeError):
    """Problem size exceeds a configured enumeration or search cap."""
