from typing import Optional, Sequence


class DlchiError(Exception):
    """Base error; exit_code is what the CLI returns for it"""

    exit_code = 2

    def __init__(self, message: str):
        super().__init__(message)
        self.message = message


class UsageError(DlchiError):
    """Bad input: weight mismatch, malformed partition, unknown field, ..."""


class ResourceError(DlchiError):
    """Flag enumeration would exceed the budget"""

    def __init__(self, message: str, flag_count: Optional[int] = None,
                 feasible: Optional[Sequence[int]] = None):
        super().__init__(message)
        self.flag_count = flag_count
        self.feasible = list(feasible) if feasible is not None else None


class DegreeBoundError(DlchiError):
    """A held-out point count disagrees with the interpolated polynomial"""

    exit_code = 1

    def __init__(self, message: str, degree_bound: int):
        super().__init__(message)
        self.degree_bound = degree_bound


class ConsistencyError(DlchiError):
    """An internal invariant failed; indicates a bug, never bad input"""

    exit_code = 1
