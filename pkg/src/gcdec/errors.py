"""Exception hierarchy shared by all gcdec modules."""


class GCDecError(Exception):
    pass


class DegreeOutOfRange(GCDecError, ValueError):
    pass


class NonPrimitiveModulus(GCDecError, ValueError):
    pass


class LengthMismatch(GCDecError, ValueError):
    pass


class RankDeficient(GCDecError, ValueError):
    pass


class DistanceMismatch(GCDecError, ValueError):
    pass


class NonMonotoneDistances(GCDecError, ValueError):
    pass


class ConstraintViolated(GCDecError, ValueError):
    pass


class HeterogeneousLength(GCDecError, ValueError):
    pass


class DimensionMismatch(GCDecError, ValueError):
    pass


class InvalidParams(GCDecError, ValueError):
    pass


class ParamsTooLarge(GCDecError, ValueError):
    pass


class WeightOutOfRange(GCDecError, ValueError):
    pass


class InvalidRange(GCDecError, ValueError):
    pass


class ConfigError(GCDecError):
    pass
