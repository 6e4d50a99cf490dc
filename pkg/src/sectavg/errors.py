"""Exception types raised across the package."""


class GeometryError(ValueError):
    """Base class for invalid geometric input."""


class DegenerateInput(GeometryError):
    """The points do not span the ambient dimension."""


class NonGenericCut(GeometryError):
    """A vertex lies on the cutting plane."""


class NonGenericLevel(NonGenericCut):
    """A vertex lies on the slicing level."""


class EmptySide(GeometryError):
    """The cutting plane misses the polytope."""


class ZeroDirection(GeometryError):
    """The zero vector was given where a direction is required."""


class ZeroWidth(GeometryError):
    """The polytope has zero width in the given direction."""


class UnsupportedDimension(GeometryError):
    pass


class RankDeficient(GeometryError):
    """Generators span fewer than three dimensions."""


class TooManyGenerators(GeometryError):
    pass


class UnknownExample(KeyError):
    pass


class PopulationCapExceeded(RuntimeError):
    pass


class NoTiles(GeometryError):
    """The plane does not produce any tile inside the window."""
