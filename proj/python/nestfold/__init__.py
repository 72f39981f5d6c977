"""Dependently typed folds for nested data types.

The heavy lifting lives in the C++ extension; this package re-exports it.
"""

try:
    from nestfold._nestfold import *  # noqa: F401,F403  (installed layout)
    from nestfold._nestfold import __doc__  # noqa: F401
except ImportError:  # in-tree layout: the module sits on PYTHONPATH directly
    from _nestfold import *  # noqa: F401,F403
    from _nestfold import __doc__  # noqa: F401
