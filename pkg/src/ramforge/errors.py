"""Error taxonomy shared by the library and the command line tool.

Each class carries the process exit code the CLI maps it to.  Library code
raises these directly; nothing else in the package raises bare ValueError
for a user-visible condition.
"""


class RamforgeError(Exception):
    exit_code = 1


class ParseError(RamforgeError):
    """Malformed text input (polynomial, place, divisor, element)."""

    exit_code = 2


class PreconditionError(RamforgeError):
    """A documented precondition of an operation was violated by the caller."""

    exit_code = 3


class SizeBoundError(RamforgeError):
    """A size guardrail (field order, cover degree) was exceeded."""

    exit_code = 4


class InternalCheckError(RamforgeError):
    """A mathematical identity the engine guarantees failed to verify.

    This is always a bug report, never a normal outcome; payloads attached
    by the raiser are printed rather than swallowed.
    """

    exit_code = 5

    def __init__(self, message, payload=None):
        super().__init__(message)
        self.payload = payload
