"""Characters of the planar rook algebra, its center and tensor products.

Every trace on ``P_n`` depends only on the number ``ell`` of vertical edges
of a diagram, so characters are recorded as functions of ``ell`` evaluated
at the diagrams ``pi(n, ell)``.
"""
from __future__ import annotations

import csv
import io
from collections import defaultdict
from dataclasses import dataclass
from itertools import combinations
from math import comb, factorial

from . import linalg
from .algebra import AlgebraElement, multiply, x_of, x_unit
from .diagram import (
    PlanarDiagram,
    apply,
    compose,
    diagram_index,
    elements,
    enumerate_diagrams,
    k_subsets,
    pi,
)
from .reprs import rho_algebra

__all__ = [
    "CharacterTable",
    "MultiplicityVector",
    "chi",
    "character_table",
    "regular_trace",
    "chi_on_x",
    "center_basis",
    "is_central",
    "centralizer_dimension",
    "tensor_multiplicities",
    "decompose_character",
]


@dataclass(frozen=True)
class CharacterTable:
    """``values[k][ell]`` is the character of ``V^n_k`` at ``pi(n, ell)``."""

    n: int
    values: tuple[tuple[int, ...], ...]

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow([f"l={ell}" for ell in range(self.n + 1)])
        w.writerows(self.values)
        return buf.getvalue()

    def to_json(self) -> dict:
        return {"n": self.n, "values": [list(r) for r in self.values]}


@dataclass(frozen=True)
class MultiplicityVector:
    """Multiplicities ``m[k]`` of ``V^n_k`` in some module."""

    n: int
    m: tuple[int, ...]

    def to_json(self) -> dict:
        return {"n": self.n, "m": list(self.m)}


def _check_range(n: int, k: int, name: str = "k"):
    if not 0 <= k <= n:
        raise ValueError(f"{name}={k} out of range 0..{n}")


def chi(n: int, k: int, d: PlanarDiagram) -> int:
    """Character of ``V^n_k`` at ``d``: the number of ``k``-subsets that ``d`` fixes."""
    _check_range(n, k)
    if d.n != n:
        raise ValueError(f"diagram has size {d.n}, expected {n}")
    domain = [1 << (i - 1) for i in elements(d.bottom)]
    fixed = 0
    for c in combinations(domain, k):
        s = sum(c)
        if apply(d, s) == s:
            fixed += 1
    return fixed


def character_table(n: int) -> CharacterTable:
    if n < 0:
        raise ValueError("n must be non-negative")
    points = [pi(n, ell) for ell in range(n + 1)]
    return CharacterTable(n, tuple(tuple(chi(n, k, p) for p in points) for k in range(n + 1)))


def regular_trace(n: int, d: PlanarDiagram) -> int:
    """Trace of left multiplication by ``d`` on the algebra: ``#{b : d b = b}``."""
    if d.n != n:
        raise ValueError(f"diagram has size {d.n}, expected {n}")
    return sum(1 for b in enumerate_diagrams(n) if compose(d, b) == b)


def chi_on_x(n: int, k: int, d: PlanarDiagram) -> int:
    """Character of ``V^n_k`` at the basis element ``x_d``."""
    _check_range(n, k)
    m = rho_algebra(n, k, x_of(d))
    t = sum(m[i, i] for i in range(m.shape[0]))
    assert t.denominator == 1
    return int(t)


def center_basis(n: int) -> list[AlgebraElement]:
    """``z_ell`` for ``ell = 0..n``: the sum of ``x_{S,S}`` over ``ell``-subsets ``S``."""
    out = []
    for ell in range(n + 1):
        z = AlgebraElement.zero(n)
        for s in k_subsets(n, ell):
            z = z + x_unit(n, s, s)
        out.append(z)
    return out


def is_central(a: AlgebraElement) -> bool:
    """Whether ``a`` commutes with every diagram (the diagrams span the algebra)."""
    for d in enumerate_diagrams(a.n):
        e = AlgebraElement.from_diagram(d)
        if multiply(e, a) != multiply(a, e):
            return False
    return True


def centralizer_dimension(n: int) -> int:
    """Dimension of the center, by solving ``d a = a d`` for all diagrams ``d`` exactly."""
    index = diagram_index(n)
    size = len(index)
    rows = []
    for d in index:
        # coefficient of each diagram e in d*a - a*d, as a linear form in a
        eqs = defaultdict(lambda: [0] * size)
        for b, j in index.items():
            eqs[compose(d, b)][j] += 1
            eqs[compose(b, d)][j] -= 1
        rows.extend(r for r in eqs.values() if any(r))
    return linalg.nullity(rows, size)


def tensor_multiplicities(n: int, i: int, j: int) -> MultiplicityVector:
    """Multiplicity of each ``V^n_k`` in ``V^n_i (x) V^n_j``."""
    _check_range(n, i, "i")
    _check_range(n, j, "j")
    m = [0] * (n + 1)
    for k in range(max(i, j), min(i + j, n) + 1):
        m[k] = factorial(k) // (factorial(i + j - k) * factorial(k - i) * factorial(k - j))
    return MultiplicityVector(n, tuple(m))


def decompose_character(n: int, f) -> MultiplicityVector:
    """Multiplicities ``m`` with ``f(ell) = sum_k m[k] * C(ell, k)``.

    ``f`` lists the character values at ``pi(n, 0), ..., pi(n, n)``.  The
    character table is unitriangular, so the answer is given by binomial
    inversion.
    """
    f = list(f)
    if len(f) != n + 1:
        raise ValueError(f"expected {n + 1} values, got {len(f)}")
    m = tuple(
        sum((-1) ** (k - ell) * comb(k, ell) * f[ell] for ell in range(k + 1))
        for k in range(n + 1)
    )
    return MultiplicityVector(n, m)
