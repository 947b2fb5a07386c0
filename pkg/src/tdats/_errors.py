"""Exception hierarchy.

Every error raised on bad input is a ``ValueError`` subclass carrying the
name of the module it came from, so the command line can prefix messages.
"""


class TdaTsError(ValueError):
    module = "tdats"

    def __str__(self):
        return f"{self.module}: {super().__str__()}"


class SeriesError(TdaTsError):
    module = "series"


class PersistenceError(TdaTsError):
    module = "persistence"


class CurveError(TdaTsError):
    module = "curves"


class DistanceError(TdaTsError):
    module = "distances"


class EnsembleError(TdaTsError):
    module = "ensemble"


class BenchError(TdaTsError):
    module = "bench"
