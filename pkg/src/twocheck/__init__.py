"""twocheck: exhaustive verification for finite 2-categories, 2-monads,
weak algebra morphisms and limit lifting, at desk scale.

All data is explicit finite tables; every operation is a pure function on
immutable validated values, safe for concurrent read access.
"""

__version__ = "0.1.0"

from . import catlim, catvalued, elements, errors, fincat, fixtures, lifting, limits, monad, twocat

__all__ = [
    "__version__", "catlim", "catvalued", "elements", "errors", "fincat",
    "fixtures", "lifting", "limits", "monad", "twocat",
]
