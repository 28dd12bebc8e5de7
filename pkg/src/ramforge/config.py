"""Package-wide size limits and defaults, collected in one frozen config."""

import dataclasses


@dataclasses.dataclass(frozen=True)
class Limits:
    # largest field order p**m that field_create accepts
    max_field_size: int = 2**64
    # exp/log tables are only built up to this order; larger extension
    # fields fall back to digit arithmetic
    table_limit: int = 2**16
    # guardrail on the q**r - 1 degree of the one-three-point constructions;
    # the RAMFORGE_MAX_DEGREE environment variable overrides it
    max_cover_degree: int = 2**16
    # extra terms appended to the default Laurent precision
    laurent_margin: int = 8


DEFAULT_LIMITS = Limits()

MAX_DEGREE_ENV = "RAMFORGE_MAX_DEGREE"
