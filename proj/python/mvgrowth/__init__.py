"""Growth functionals and theorem checks for entire functions on C^m."""

try:
    from ._mvgrowth import *  # noqa: F401,F403
    from ._mvgrowth import __doc__ as _doc
except ImportError:  # in-build-tree layout: extension on PYTHONPATH, not in package
    from _mvgrowth import *  # noqa: F401,F403
    from _mvgrowth import __doc__ as _doc

__doc__ = _doc
