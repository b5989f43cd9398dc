"""Shared numerical defaults."""

# Relative tolerance used by root finding, recursion checks and point matching.
# The CLI overrides it per run through ``--tol``.
DEFAULT_TOL = 1e-11

# ||w| - 1| threshold for calling a point "on the unit circle".
ON_CIRCLE_TOL = 1e-7

TOL_RANGE = (1e-14, 1e-4)
