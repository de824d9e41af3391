"""Extension spaces of string modules over gentle surface algebras.

The compiled core exposes one entry point, :class:`Surface`, built from a
triangulation document.  All reports come back as plain dicts and lists,
mirroring the JSON emitted by the command-line tool.
"""

from _arcext import InternalFault, Surface, ValidationError

__all__ = ["Surface", "ValidationError", "InternalFault"]
