"""Exact workbench for dual pre-Poisson structures."""

try:
    from ._dppw import *  # noqa: F401,F403
    from ._dppw import __version__, default_lybe_sign  # noqa: F401
except ImportError:  # running against a bare build tree
    from _dppw import *  # noqa: F401,F403
    from _dppw import __version__, default_lybe_sign  # noqa: F401
