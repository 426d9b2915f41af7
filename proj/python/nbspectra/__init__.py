"""Non-backtracking graphs, non-backtracking Laplacians and their spectra.

Thin Python layer over the C++ core.  Graphs are passed as graph6 strings
or generator specs such as ``"petal:2,3"``, ``"complete:4"``, ``"cycle:6"``;
exact rationals travel as ``"p/q"`` strings.
"""

from ._core import (
    CapabilityError,
    DomainError,
    ParseError,
    are_isomorphic,
    char_poly,
    char_poly_key,
    degrees,
    from_edges,
    gap,
    generate,
    independence,
    nb_eigenvalues,
    nb_fraction,
    nb_info,
    partite,
    petal_eigenvalues,
    scan_csv,
    verify,
)

__all__ = [
    "CapabilityError",
    "DomainError",
    "ParseError",
    "are_isomorphic",
    "char_poly",
    "char_poly_key",
    "degrees",
    "from_edges",
    "gap",
    "generate",
    "independence",
    "nb_eigenvalues",
    "nb_fraction",
    "nb_info",
    "partite",
    "petal_eigenvalues",
    "scan_csv",
    "verify",
]
