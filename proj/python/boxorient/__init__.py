"""Strong orientations of strong products of graphs.

Thin wrapper over the C++ core: tree products via the bipartition rules,
even-cycle products, the shortest-path-tree pipeline for general factors,
directed-diameter certification, and the exhaustive small-instance oracle.
"""

try:
    from ._boxorient import *  # noqa: F401,F403
    from ._boxorient import __doc__ as _core_doc  # noqa: F401
except ImportError:  # in-tree builds put the module next to the package
    from _boxorient import *  # noqa: F401,F403
