"""Exception types shared across the separator modules."""


class NoSeparatorError(Exception):
    """No separator can exist for the query (e.g. the terminals are adjacent,
    or the source side reaches into the target's closed neighborhood).

    Distinct from the empty separator: when the terminals are already
    disconnected, the empty set *is* the unique minimal separator.
    """


class InternalConsistencyError(RuntimeError):
    """A result failed a validation that the algorithm's guarantees promise.

    Raised instead of returning a silently wrong answer; signals an
    implementation bug or a violated input assumption (e.g. a graph that is
    not AT-free in fast mode).
    """
