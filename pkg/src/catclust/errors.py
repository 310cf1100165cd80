"""Exception types shared across the package."""


class CatclustError(Exception):
    """Base class for all catclust errors."""


class DataFormatError(CatclustError, ValueError):
    """Malformed input data: ragged CSV rows, non-finite numerics, bad shapes."""


class MissingValueError(DataFormatError):
    """An empty cell was found; missing values are not supported."""


class EmptyInputError(DataFormatError):
    """The input contains no data."""


class ConfigError(CatclustError, ValueError):
    """Invalid parameter or configuration value."""


class DegenerateClusterError(CatclustError, ValueError):
    """An operation that needs a nonempty cluster received an empty one."""


class UnobservedCategoryError(CatclustError, ValueError):
    """A category with zero observed frequency where a positive one is required."""
