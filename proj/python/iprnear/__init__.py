"""Matrix families and finite-scale image partition regularity."""

try:
    from ._iprnear import *  # noqa: F401,F403
    from ._iprnear import IprError  # noqa: F401
except ImportError:  # development layout: extension built next to the CLI
    from _iprnear import *  # noqa: F401,F403
    from _iprnear import IprError  # noqa: F401

__version__ = "0.1.0"
