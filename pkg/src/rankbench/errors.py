"""Exception types raised by validation and computation."""


class RankbenchError(ValueError):
    """Base class for all rankbench validation and domain errors."""


class EmptyMatrix(RankbenchError):
    pass


class BadValue(RankbenchError):
    pass


class ShapeMismatch(RankbenchError):
    pass


class LengthMismatch(RankbenchError):
    pass


class WeightInvalid(RankbenchError):
    pass


class BadGrid(RankbenchError):
    pass


class NonPositiveSigma(RankbenchError):
    pass


class NonPositiveSigmaFloor(RankbenchError):
    pass


class TooFewAlgorithms(RankbenchError):
    pass


class TooFewBenchmarks(RankbenchError):
    pass


class AllZeroDifferences(RankbenchError):
    pass
