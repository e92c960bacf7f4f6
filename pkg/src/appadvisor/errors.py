"""Exception hierarchy for the advisor engine."""


class AdvisorError(Exception):
    """Base class for all domain errors."""


class EmptyInput(AdvisorError):
    pass


class DuplicateAppId(AdvisorError):
    pass


class MetricOutOfRange(AdvisorError):
    pass


class EmptySubset(AdvisorError):
    pass


class UnknownContext(AdvisorError):
    pass


class NonPositiveLoad(AdvisorError):
    pass


class ShapeMismatch(AdvisorError):
    pass


class SearchSpaceTooLarge(AdvisorError):
    def __init__(self, size: int, cap: int):
        self.size = size
        self.cap = cap
        super().__init__(
            f"search space has {size:,} combinations, above the enumeration cap "
            f"of {cap:,}; use the evolutionary solver (nsga2) instead"
        )


class InstanceMismatch(AdvisorError):
    pass


class EmptyFront(AdvisorError):
    pass


class UnknownObjective(AdvisorError):
    pass


class UnknownCategory(AdvisorError):
    pass


class CutOutOfRange(AdvisorError):
    pass


class ParseError(AdvisorError):
    def __init__(self, message: str, row: int | None = None, column: str | None = None):
        self.row = row
        self.column = column
        where = ""
        if row is not None:
            where = f" (row {row}" + (f", column {column!r})" if column else ")")
        super().__init__(message + where)


class ValidationError(AdvisorError):
    pass
