"""Exception types shared across the package."""


class DomainError(ValueError):
    """Input outside the domain of an operation (bad rank, wrong degree, ...)."""


class ResourceError(RuntimeError):
    """A configured size or work budget was exceeded."""


class ParseError(DomainError):
    """Malformed input text; names the offending token and its position."""

    def __init__(self, msg: str, token: str, position: int):
        super().__init__(f"{msg}: {token!r} at position {position}")
        self.token = token
        self.position = position
