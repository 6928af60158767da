"""Exception hierarchy."""


class WreathlabError(Exception):
    pass


class DimensionMismatch(WreathlabError, ValueError):
    pass


class NotIdempotent(WreathlabError, ValueError):
    pass


class NoSolution(WreathlabError, ValueError):
    pass


class InternalInconsistency(WreathlabError, RuntimeError):
    """Two computations that must agree did not."""


class BadIdempotent(WreathlabError, ValueError):
    pass


class IllDefinedSection(WreathlabError, ValueError):
    pass


class SchemaError(WreathlabError, ValueError):
    def __init__(self, pointer, message):
        self.pointer = pointer
        self.message = message
        super().__init__(f"{pointer or '/'}: {message}")


class CheckFailed(WreathlabError):
    """Raised when a construction's certification report contains failures."""

    def __init__(self, report):
        self.report = report
        failed = [c.name for c in report.failures()]
        super().__init__(f"{report.subject}: failed checks {failed}")
