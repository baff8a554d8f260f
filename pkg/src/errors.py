"""
Error types raised by the calculator and their process exit codes
"""


class ToolError(Exception):
    """Base class for every error the CLI reports as a structured failure"""

    exit_code = 1
    kind = "error"

    def __init__(self, message: str, *, details: dict | None = None):
        super().__init__(message)
        self.message = message
        self.details = details or {}

    def to_dict(self) -> dict:
        """Serializable form used by the JSON renderer"""
        payload = {"error": self.kind, "message": self.message}
        if self.details:
            payload["details"] = self.details
        return payload


class ParseError(ToolError):
    """Malformed ring file or polynomial text"""

    exit_code = 2
    kind = "parse_error"

    def __init__(self, message: str, *, line: int | None = None, column: int | None = None):
        location = {}
        if line is not None:
            location["line"] = line
        if column is not None:
            location["column"] = column
        if location:
            where = ", ".join(f"{key} {value}" for key, value in location.items())
            message = f"{message} ({where})"
        super().__init__(message, details=location)
        self.line = line
        self.column = column


class UnsupportedInputError(ToolError):
    """Input is valid but outside what an algorithm can decide"""

    exit_code = 3
    kind = "unsupported"


class ResourceCapExceeded(ToolError):
    """A configured step, size or length ceiling was hit"""

    exit_code = 4
    kind = "resource_cap"

    def __init__(self, what: str, cap: int):
        super().__init__(f"{what} exceeded the configured cap of {cap}", details={"cap": cap})
        self.cap = cap


class CertificateError(ToolError):
    """An internal exactness check failed; results cannot be trusted"""

    exit_code = 4
    kind = "internal"
