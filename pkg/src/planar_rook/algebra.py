"""The planar rook algebra with exact rational coefficients.

Elements are finite linear combinations of planar diagrams.  Besides the
diagram basis this module provides the inclusion-exclusion basis ``x_d``
(the signed sum over all edge-subsets of ``d``), whose elements multiply
like matrix units.
"""
from __future__ import annotations

from collections import defaultdict
from fractions import Fraction
from numbers import Rational
from typing import Iterable, Mapping

import numpy as np

from .diagram import (
    PlanarDiagram,
    compose,
    diagram_index,
    enumerate_diagrams,
    from_json as diagram_from_json,
    from_sets,
    identity,
    subdiagrams,
    to_json as diagram_to_json,
)

__all__ = [
    "AlgebraElement",
    "add",
    "scale",
    "multiply",
    "x_of",
    "x_unit",
    "to_x_coords",
    "from_x_coords",
    "x_transition_matrix",
    "element_to_json",
    "element_from_json",
]


def _canonical(terms: Mapping[PlanarDiagram, object]) -> dict[PlanarDiagram, Fraction]:
    return {d: Fraction(c) for d, c in sorted(terms.items()) if c != 0}


class AlgebraElement:
    """A linear combination ``sum(c_d * d)`` in the algebra of ``P_n``.

    Zero coefficients are never stored, so two elements are equal exactly
    when their term maps are equal.  Instances are treated as immutable.
    """

    __slots__ = ("n", "_terms", "_hash")

    def __init__(self, n: int, terms: Mapping[PlanarDiagram, object] | None = None):
        terms = terms or {}
        for d in terms:
            if d.n != n:
                raise ValueError(f"diagram of size {d.n} in element of size {n}")
        self.n = n
        self._terms = _canonical(terms)
        self._hash = None

    @classmethod
    def from_diagram(cls, d: PlanarDiagram, coeff=1) -> "AlgebraElement":
        return cls(d.n, {d: coeff})

    @classmethod
    def zero(cls, n: int) -> "AlgebraElement":
        return cls(n)

    @classmethod
    def one(cls, n: int) -> "AlgebraElement":
        return cls(n, {identity(n): 1})

    @property
    def terms(self) -> dict[PlanarDiagram, Fraction]:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def coeff(self, d: PlanarDiagram) -> Fraction:
        return self._terms.get(d, Fraction(0))

    def is_zero(self) -> bool:
        return not self._terms

    def __len__(self):
        return len(self._terms)

    def __eq__(self, other):
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        return self.n == other.n and self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.n, tuple(self._terms.items())))
        return self._hash

    def __add__(self, other):
        if isinstance(other, AlgebraElement):
            return add(self, other)
        return NotImplemented

    def __neg__(self):
        return scale(-1, self)

    def __sub__(self, other):
        if isinstance(other, AlgebraElement):
            return add(self, scale(-1, other))
        return NotImplemented

    def __mul__(self, other):
        if isinstance(other, AlgebraElement):
            return multiply(self, other)
        if isinstance(other, PlanarDiagram):
            return multiply(self, AlgebraElement.from_diagram(other))
        if isinstance(other, Rational):
            return scale(other, self)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, PlanarDiagram):
            return multiply(AlgebraElement.from_diagram(other), self)
        if isinstance(other, Rational):
            return scale(other, self)
        return NotImplemented

    def __repr__(self):
        if not self._terms:
            return f"AlgebraElement({self.n}, 0)"
        body = " + ".join(f"({c})*[{d}]" for d, c in self._terms.items())
        return f"AlgebraElement({self.n}, {body})"


def _check_same_size(a: AlgebraElement, b: AlgebraElement):
    if a.n != b.n:
        raise ValueError(f"size mismatch: {a.n} != {b.n}")


def add(a: AlgebraElement, b: AlgebraElement) -> AlgebraElement:
    _check_same_size(a, b)
    out = defaultdict(Fraction, a.items())
    for d, c in b.items():
        out[d] += c
    return AlgebraElement(a.n, out)


def scale(c, a: AlgebraElement) -> AlgebraElement:
    c = Fraction(c)
    if c == 0:
        return AlgebraElement(a.n)
    return AlgebraElement(a.n, {d: c * v for d, v in a.items()})


def multiply(a: AlgebraElement, b: AlgebraElement) -> AlgebraElement:
    """Bilinear extension of diagram composition."""
    _check_same_size(a, b)
    out = defaultdict(Fraction)
    for d1, c1 in a.items():
        for d2, c2 in b.items():
            out[compose(d1, d2)] += c1 * c2
    return AlgebraElement(a.n, out)


def x_of(d: PlanarDiagram) -> AlgebraElement:
    """``x_d``: sum over edge-subsets ``d'`` of ``d`` of ``(-1)**|d - d'| * d'``."""
    return AlgebraElement(d.n, {sub: (-1) ** gap for sub, gap in subdiagrams(d)})


def x_unit(n: int, top, bottom) -> AlgebraElement:
    """``x_{S,T}`` for top set ``S`` and bottom set ``T`` (masks or vertex lists)."""
    return x_of(from_sets(n, top, bottom))


def to_x_coords(a: AlgebraElement) -> dict[PlanarDiagram, Fraction]:
    """Coordinates of ``a`` in the x-basis.

    Uses ``d = sum(x_{d'} for d' a subdiagram of d)``, the Moebius inverse of
    the defining sum over the Boolean lattice of edges.
    """
    out = defaultdict(Fraction)
    for d, c in a.items():
        for sub, _ in subdiagrams(d):
            out[sub] += c
    return _canonical(out)


def from_x_coords(n: int, coords: Mapping[PlanarDiagram, object]) -> AlgebraElement:
    out = defaultdict(Fraction)
    for d, c in coords.items():
        if d.n != n:
            raise ValueError(f"diagram of size {d.n} in coordinates of size {n}")
        for sub, gap in subdiagrams(d):
            out[sub] += (-1) ** gap * Fraction(c)
    return AlgebraElement(n, out)


def x_transition_matrix(n: int) -> np.ndarray:
    """Integer matrix whose column ``j`` expands ``x_{d_j}`` in the diagram basis.

    Rows and columns follow :func:`enumerate_diagrams`, which orders by rank,
    so the matrix comes out upper unitriangular.
    """
    index = diagram_index(n)
    m = np.zeros((len(index), len(index)), dtype=np.int64)
    for d, j in index.items():
        for sub, gap in subdiagrams(d):
            m[index[sub], j] = (-1) ** gap
    return m


def element_to_json(a: AlgebraElement) -> dict:
    return {
        "n": a.n,
        "terms": [{"coeff": str(c), "diagram": diagram_to_json(d)} for d, c in a.items()],
    }


def element_from_json(obj: dict) -> AlgebraElement:
    if not isinstance(obj, dict) or "n" not in obj or "terms" not in obj:
        raise ValueError("element JSON needs keys 'n' and 'terms'")
    n = obj["n"]
    out = defaultdict(Fraction)
    for term in obj["terms"]:
        try:
            c = Fraction(term["coeff"])
        except (KeyError, ValueError, TypeError, ZeroDivisionError):
            raise ValueError(f"bad coefficient in term {term!r}") from None
        d = diagram_from_json(term["diagram"])
        if d.n != n:
            raise ValueError(f"diagram of size {d.n} in element of size {n}")
        out[d] += c
    return AlgebraElement(n, out)


def basis_elements(n: int) -> Iterable[AlgebraElement]:
    return (AlgebraElement.from_diagram(d) for d in enumerate_diagrams(n))
