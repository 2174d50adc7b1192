"""Look-compute-move robot simulator and bounded verifier."""

from ._core import (
    InvariantError,
    ParseError,
    bundled_scenario,
    report,
    simulate,
    verify,
)

__all__ = ["InvariantError", "ParseError", "bundled_scenario", "report", "simulate", "verify"]
