"""Exact invariants of canonical toric manifolds of simplicial complexes."""

try:
    # installed layout: the extension lives inside the package
    from ._torbord import *  # noqa: F401,F403
except ImportError:
    # build-tree layout: the extension sits next to the package on sys.path
    from _torbord import *  # noqa: F401,F403
