"""
Status lines on standard error

Standard output is reserved for reports, so progress messages never change
the bytes a script reads.
"""

import sys

_verbose = False


def set_verbose(enabled: bool) -> None:
    global _verbose
    _verbose = enabled


def step(message: str) -> None:
    """Announce a long-running step, e.g. "[Computing Jacobian ideal...]" """
    if _verbose:
        print(f"[{message}...]", file=sys.stderr)


def success(message: str) -> None:
    if _verbose:
        print(f"✓ {message}", file=sys.stderr)


def warning(message: str) -> None:
    if _verbose:
        print(f"⚠ {message}", file=sys.stderr)


def failure(message: str) -> None:
    # errors are always shown
    print(f"✗ {message}", file=sys.stderr)
