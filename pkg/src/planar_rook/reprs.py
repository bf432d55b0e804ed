"""Irreducible modules ``V^n_k``, restriction, Wedderburn blocks and the Bratteli graph.

``V^n_k`` has basis ``v_S`` over the ``k``-subsets ``S`` of ``1..n``, ordered
by ascending bit mask.  A diagram ``d`` sends ``v_S`` to ``v_{d(S)}`` when
``S`` lies in the bottom vertex set of ``d`` and to zero otherwise.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import comb

import numpy as np

from . import linalg
from .algebra import AlgebraElement, from_x_coords, to_x_coords
from .diagram import (
    PlanarDiagram,
    apply,
    compose,
    diagram_index,
    embed,
    enumerate_diagrams,
    from_sets,
    k_subsets,
)

__all__ = [
    "SubsetIndex",
    "subset_index",
    "rho",
    "rho_algebra",
    "RestrictionReport",
    "restriction_blocks",
    "irreducibility_dimension",
    "wedderburn_map",
    "wedderburn_inv",
    "RegularAction",
    "regular_rep_matrix",
    "BratteliGraph",
    "bratteli",
    "irrep_to_json",
]


@dataclass(frozen=True)
class SubsetIndex:
    """Bijection between the ``k``-subsets of ``1..n`` and ``0..C(n,k)-1``."""

    n: int
    k: int
    masks: tuple[int, ...]
    positions: dict = field(repr=False, compare=False)

    def __len__(self):
        return len(self.masks)

    def rank(self, subset: int) -> int:
        try:
            return self.positions[subset]
        except KeyError:
            raise ValueError(f"mask {subset:#b} is not a {self.k}-subset of 1..{self.n}") from None

    def unrank(self, i: int) -> int:
        return self.masks[i]


@lru_cache(maxsize=None)
def subset_index(n: int, k: int) -> SubsetIndex:
    masks = k_subsets(n, k)
    return SubsetIndex(n, k, masks, {m: i for i, m in enumerate(masks)})


def _check_rep_args(n: int, k: int, d: PlanarDiagram):
    if not 0 <= k <= n:
        raise ValueError(f"k={k} out of range 0..{n}")
    if d.n != n:
        raise ValueError(f"diagram has size {d.n}, expected {n}")


def rho(n: int, k: int, d: PlanarDiagram) -> np.ndarray:
    """Matrix of ``d`` acting on ``V^n_k``; column ``S`` holds the image of ``v_S``."""
    _check_rep_args(n, k, d)
    idx = subset_index(n, k)
    m = np.zeros((len(idx), len(idx)), dtype=np.int64)
    for j, s in enumerate(idx.masks):
        image = apply(d, s)
        if image is not None:
            m[idx.positions[image], j] = 1
    return m


def rho_algebra(n: int, k: int, a: AlgebraElement) -> np.ndarray:
    """Linear extension of :func:`rho` to algebra elements (exact entries)."""
    if a.n != n:
        raise ValueError(f"element has size {a.n}, expected {n}")
    if not 0 <= k <= n:
        raise ValueError(f"k={k} out of range 0..{n}")
    idx = subset_index(n, k)
    m = linalg.zeros(len(idx))
    for d, c in a.items():
        for j, s in enumerate(idx.masks):
            image = apply(d, s)
            if image is not None:
                m[idx.positions[image], j] += c
    return m


@dataclass
class RestrictionReport:
    n: int
    k: int
    block_sizes: tuple[int, ...]
    checked: int = 0
    failures: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures


def restriction_blocks(n: int, k: int) -> tuple[list[int], RestrictionReport]:
    """Basis reordering that splits ``V^n_k`` into ``V^{n-1}_{k-1} + V^{n-1}_k``.

    The returned permutation lists the old positions of subsets containing
    ``n`` first, then the rest.  The report records, for every ``d`` in
    ``P_{n-1}``, whether conjugating ``rho(n, k, embed(d))`` by it gives
    exactly ``rho(n-1, k-1, d)`` and ``rho(n-1, k, d)`` on the diagonal.
    """
    if n < 1:
        raise ValueError("restriction needs n >= 1")
    if not 0 <= k <= n:
        raise ValueError(f"k={k} out of range 0..{n}")
    top_bit = 1 << (n - 1)
    masks = subset_index(n, k).masks
    with_n = [i for i, s in enumerate(masks) if s & top_bit]
    without_n = [i for i, s in enumerate(masks) if not s & top_bit]
    perm = with_n + without_n
    split = len(with_n)
    sizes = tuple(s for s in (len(with_n), len(without_n)) if s)
    report = RestrictionReport(n, k, sizes)

    for d in enumerate_diagrams(n - 1):
        m = rho(n, k, embed(d))[np.ix_(perm, perm)]
        expected = np.zeros_like(m)
        if k >= 1:
            expected[:split, :split] = rho(n - 1, k - 1, d)
        if k <= n - 1:
            expected[split:, split:] = rho(n - 1, k, d)
        report.checked += 1
        if not np.array_equal(m, expected):
            report.failures.append(d)
    return perm, report


def irreducibility_dimension(n: int, k: int) -> int:
    """Dimension of the span of all ``rho(n, k, d)``, by exact row reduction.

    Equal to ``C(n,k)**2`` exactly when ``V^n_k`` is irreducible.
    """
    rows = {tuple(rho(n, k, d).ravel().tolist()) for d in enumerate_diagrams(n)}
    return linalg.rank(sorted(rows, reverse=True))


# -- Wedderburn decomposition ----------------------------------------------

def wedderburn_map(a: AlgebraElement) -> list[np.ndarray]:
    """Blocks of ``a`` under ``x_{S,T} -> E_{S,T}``, one ``C(n,k)``-square block per ``k``."""
    n = a.n
    blocks = [linalg.zeros(comb(n, k)) for k in range(n + 1)]
    for d, c in to_x_coords(a).items():
        idx = subset_index(n, d.rank)
        blocks[d.rank][idx.positions[d.top], idx.positions[d.bottom]] = c
    return blocks


def wedderburn_inv(n: int, blocks) -> AlgebraElement:
    if len(blocks) != n + 1:
        raise ValueError(f"expected {n + 1} blocks, got {len(blocks)}")
    coords = {}
    for k, block in enumerate(blocks):
        block = np.asarray(block, dtype=object)
        size = comb(n, k)
        if block.shape != (size, size):
            raise ValueError(f"block {k} has shape {block.shape}, expected {(size, size)}")
        masks = subset_index(n, k).masks
        for (i, j), c in np.ndenumerate(block):
            if c != 0:
                coords[from_sets(n, masks[i], masks[j])] = Fraction(c)
    return from_x_coords(n, coords)


# -- regular representation -------------------------------------------------

@dataclass(frozen=True)
class RegularAction:
    """Left multiplication by a diagram on the diagram basis of the algebra.

    ``targets[i]`` is the enumeration position of ``d * b_i``.
    """

    diagram: PlanarDiagram
    targets: tuple[int, ...]

    def trace(self) -> int:
        return sum(1 for i, t in enumerate(self.targets) if i == t)


def regular_rep_matrix(n: int, d: PlanarDiagram) -> RegularAction:
    if d.n != n:
        raise ValueError(f"diagram has size {d.n}, expected {n}")
    index = diagram_index(n)
    return RegularAction(d, tuple(index[compose(d, b)] for b in index))


# -- Bratteli graph ---------------------------------------------------------

@dataclass(frozen=True)
class BratteliGraph:
    """Levels ``0..rows`` of nodes ``(n, k)`` labelled by ``dim V^n_k``.

    Edges go from ``(n, k)`` down to each ``(n-1, j)`` occurring in the
    restriction of ``V^n_k``.
    """

    rows: int
    dims: dict
    edges: tuple

    def level(self, n: int) -> list[int]:
        return [self.dims[n, k] for k in range(n + 1)]

    def parents(self, n: int, k: int) -> list[tuple[int, int]]:
        return [dst for src, dst in self.edges if src == (n, k)]

    def to_dot(self) -> str:
        lines = ["digraph bratteli {", "  rankdir=TB;"]
        for n in range(self.rows + 1):
            names = " ".join(f'"{n}_{k}";' for k in range(n + 1))
            lines.append(f"  {{ rank=same; {names} }}")
        for (n, k), dim in self.dims.items():
            lines.append(f'  "{n}_{k}" [label="{dim}"];')
        for (n, k), (m, j) in self.edges:
            lines.append(f'  "{n}_{k}" -> "{m}_{j}";')
        lines.append("}")
        return "\n".join(lines) + "\n"

    def to_json(self) -> dict:
        return {
            "rows": self.rows,
            "nodes": [{"n": n, "k": k, "dim": dim} for (n, k), dim in self.dims.items()],
            "edges": [{"from": [n, k], "to": [m, j]} for (n, k), (m, j) in self.edges],
        }


def bratteli(rows: int) -> BratteliGraph:
    if rows < 0:
        raise ValueError("rows must be non-negative")
    # Labels come from the restriction rule alone: dim V^n_k is the sum of
    # the dimensions of the summands it restricts to.
    dims = {(0, 0): 1}
    edges = []
    for n in range(1, rows + 1):
        for k in range(n + 1):
            below = []
            if k >= 1:
                below.append((n - 1, k - 1))
            if k <= n - 1:
                below.append((n - 1, k))
            edges.extend(((n, k), b) for b in below)
            dims[n, k] = sum(dims[b] for b in below)
    return BratteliGraph(rows, dims, tuple(edges))


def irrep_to_json(n: int, k: int, m) -> dict:
    m = np.asarray(m, dtype=object)
    return {"n": n, "k": k, "rows": [[str(Fraction(x)) for x in row] for row in m.tolist()]}


def irrep_from_json(obj: dict) -> np.ndarray:
    n, k = obj["n"], obj["k"]
    size = comb(n, k)
    rows = obj["rows"]
    if len(rows) != size or any(len(r) != size for r in rows):
        raise ValueError(f"expected a {size}x{size} matrix")
    return linalg.as_exact([[Fraction(x) for x in r] for r in rows])
