"""Shared exception types."""

from __future__ import annotations


class InvalidGroupError(ValueError):
    """A multiplication table (or group JSON file) violates the group axioms."""


class BoundExceeded(ValueError):
    """A resource bound (group order, search radius, matrix size) was exceeded."""


class AxiomError(ValueError):
    """An ordering/cocycle axiom failed.

    `kind` names the failed axiom ("normalization", "inverse-pair", "cocycle",
    "vanishing", "invariance", "value-range", "trichotomy", "closure", ...)
    and `witness` is a minimal tuple of element indices exhibiting the failure.
    """

    def __init__(self, kind: str, witness: tuple, message: str = ""):
        self.kind = kind
        self.witness = witness
        text = f"{kind} failure at {witness}"
        if message:
            text += f": {message}"
        super().__init__(text)
