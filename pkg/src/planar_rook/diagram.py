"""Planar rook diagrams.

A planar rook diagram on ``n`` vertices per row is fully determined by the
set of top vertices and the set of bottom vertices that carry an edge: there
is exactly one non-crossing way to join two equal-size vertex sets, namely
the order-preserving one.  Both sets are stored as ``n``-bit integer masks,
bit ``i - 1`` standing for vertex ``i``.  Vertices are 1-based everywhere
outside this module's internals.
"""
from __future__ import annotations

import json
import random
from dataclasses import dataclass
from functools import lru_cache, total_ordering
from itertools import combinations
from math import comb
from typing import Iterable, Iterator

import numpy as np

__all__ = [
    "PlanarDiagram",
    "to_mask",
    "elements",
    "popcount",
    "k_subsets",
    "from_sets",
    "identity",
    "edgeless",
    "compose",
    "apply",
    "rank",
    "vertical_edge_count",
    "pi",
    "p_drop",
    "embed",
    "enumerate_diagrams",
    "diagram_index",
    "to_matrix",
    "from_matrix",
    "subdiagrams",
    "random_diagram",
    "to_json",
    "from_json",
    "to_compact",
    "from_compact",
    "parse_diagram",
    "count",
]


# -- subset masks -----------------------------------------------------------

def popcount(mask: int) -> int:
    return bin(mask).count("1")


def to_mask(items: Iterable[int], n: int) -> int:
    """Encode a collection of vertices in ``1..n`` as a bit mask.

    Raises ``ValueError`` on duplicates or out-of-range vertices.
    """
    mask = 0
    for i in items:
        if isinstance(i, bool) or not isinstance(i, int):
            raise ValueError(f"vertex {i!r} is not an integer")
        if not 1 <= i <= n:
            raise ValueError(f"vertex {i} out of range 1..{n}")
        bit = 1 << (i - 1)
        if mask & bit:
            raise ValueError(f"duplicate vertex {i}")
        mask |= bit
    return mask


def elements(mask: int) -> list[int]:
    """Vertices of ``mask`` in ascending order (1-based)."""
    out = []
    i = 1
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return out


@lru_cache(maxsize=None)
def k_subsets(n: int, k: int) -> tuple[int, ...]:
    """All ``k``-subsets of ``1..n`` as masks, ascending by numeric value."""
    if not 0 <= k <= n:
        raise ValueError(f"k={k} out of range 0..{n}")
    masks = [sum(1 << i for i in c) for c in combinations(range(n), k)]
    return tuple(sorted(masks))


def _image(mask: int, src: int, dst: int) -> int:
    # Order-preserving transport of mask (a submask of src) onto dst:
    # the j-th lowest bit of src goes to the j-th lowest bit of dst.
    out = 0
    while src:
        sb = src & -src
        db = dst & -dst
        if mask & sb:
            out |= db
        src ^= sb
        dst ^= db
    return out


# -- diagrams ---------------------------------------------------------------

@total_ordering
@dataclass(frozen=True)
class PlanarDiagram:
    """An element of the planar rook monoid ``P_n``.

    ``top`` and ``bottom`` are the vertex masks incident to an edge.  Viewed
    as a partial function, the diagram sends the i-th smallest bottom vertex
    to the i-th smallest top vertex.

    Diagrams sort by ``(n, rank, bottom, top)``, which is also the
    enumeration order of :func:`enumerate_diagrams`.
    """

    n: int
    top: int
    bottom: int

    def __post_init__(self):
        if self.n < 0:
            raise ValueError(f"size must be non-negative, got {self.n}")
        full = (1 << self.n) - 1
        if self.top & ~full or self.bottom & ~full or self.top < 0 or self.bottom < 0:
            raise ValueError(f"vertex mask out of range for n={self.n}")
        if popcount(self.top) != popcount(self.bottom):
            raise ValueError(
                f"top and bottom have different sizes "
                f"({popcount(self.top)} != {popcount(self.bottom)})"
            )

    @property
    def rank(self) -> int:
        return popcount(self.bottom)

    @property
    def sort_key(self) -> tuple[int, int, int, int]:
        return (self.n, self.rank, self.bottom, self.top)

    def __lt__(self, other):
        if not isinstance(other, PlanarDiagram):
            return NotImplemented
        return self.sort_key < other.sort_key

    def edges(self) -> list[tuple[int, int]]:
        """``(bottom, top)`` vertex pairs, left to right."""
        return list(zip(elements(self.bottom), elements(self.top)))

    def mapping(self) -> dict[int, int]:
        return dict(self.edges())

    def __call__(self, i: int) -> int:
        return self.mapping()[i]

    def __mul__(self, other):
        if isinstance(other, PlanarDiagram):
            return compose(self, other)
        return NotImplemented

    def __str__(self):
        return to_compact(self)


def from_sets(n: int, top: int | Iterable[int], bottom: int | Iterable[int]) -> PlanarDiagram:
    """The unique planar diagram with the given top and bottom vertex sets.

    The sets may be masks or iterables of 1-based vertices.
    """
    if not isinstance(top, int):
        top = to_mask(top, n)
    if not isinstance(bottom, int):
        bottom = to_mask(bottom, n)
    return PlanarDiagram(n, top, bottom)


def identity(n: int) -> PlanarDiagram:
    full = (1 << n) - 1
    return PlanarDiagram(n, full, full)


def edgeless(n: int) -> PlanarDiagram:
    return PlanarDiagram(n, 0, 0)


def _check_same_size(a: PlanarDiagram, b: PlanarDiagram):
    if a.n != b.n:
        raise ValueError(f"size mismatch: {a.n} != {b.n}")


def compose(d1: PlanarDiagram, d2: PlanarDiagram) -> PlanarDiagram:
    """The product ``d1 d2``: ``d1`` stacked on top of ``d2``.

    As partial functions, ``(d1 d2)(j) = d1(d2(j))``.
    """
    _check_same_size(d1, d2)
    middle = d2.top & d1.bottom
    return PlanarDiagram(
        d1.n,
        _image(middle, d1.bottom, d1.top),
        _image(middle, d2.top, d2.bottom),
    )


def apply(d: PlanarDiagram, subset: int) -> int | None:
    """Image ``d(S)`` of a subset mask, or ``None`` unless ``S`` lies in the domain."""
    if subset < 0 or subset >> d.n:
        raise ValueError(f"subset mask out of range for n={d.n}")
    if subset & ~d.bottom:
        return None
    return _image(subset, d.bottom, d.top)


def rank(d: PlanarDiagram) -> int:
    return d.rank


def vertical_edge_count(d: PlanarDiagram) -> int:
    return sum(1 for b, t in d.edges() if b == t)


def pi(n: int, ell: int) -> PlanarDiagram:
    """Diagram whose edges are the vertical edges at vertices ``1..ell``."""
    if not 0 <= ell <= n:
        raise ValueError(f"ell={ell} out of range 0..{n}")
    mask = (1 << ell) - 1
    return PlanarDiagram(n, mask, mask)


def p_drop(n: int, i: int) -> PlanarDiagram:
    """The identity with its edge at vertex ``i`` removed."""
    if not 1 <= i <= n:
        raise ValueError(f"vertex {i} out of range 1..{n}")
    mask = ((1 << n) - 1) & ~(1 << (i - 1))
    return PlanarDiagram(n, mask, mask)


def embed(d: PlanarDiagram) -> PlanarDiagram:
    """Image of ``d`` under ``P_{n-1} -> P_n``: add a vertical edge on the right."""
    bit = 1 << d.n
    return PlanarDiagram(d.n + 1, d.top | bit, d.bottom | bit)


def enumerate_diagrams(n: int, rank: int | None = None) -> Iterator[PlanarDiagram]:
    """Every diagram of ``P_n`` once, ordered by rank, then bottom mask, then top mask.

    With ``rank`` given, only that rank slice is produced.
    """
    if n < 0:
        raise ValueError(f"size must be non-negative, got {n}")
    ranks = range(n + 1) if rank is None else [rank]
    for k in ranks:
        if not 0 <= k <= n:
            return
        masks = k_subsets(n, k)
        for bottom in masks:
            for top in masks:
                yield PlanarDiagram(n, top, bottom)


@lru_cache(maxsize=16)
def diagram_index(n: int) -> dict[PlanarDiagram, int]:
    """Position of each diagram in the enumeration order of ``P_n``."""
    return {d: i for i, d in enumerate(enumerate_diagrams(n))}


def subdiagrams(d: PlanarDiagram) -> Iterator[tuple[PlanarDiagram, int]]:
    """Yield ``(d', rank(d) - rank(d'))`` for each of the ``2**rank(d)`` edge subsets ``d'`` of ``d``."""
    bottom = d.bottom
    r = d.rank
    sub = bottom
    while True:
        yield PlanarDiagram(d.n, _image(sub, bottom, d.top), sub), r - popcount(sub)
        if sub == 0:
            break
        sub = (sub - 1) & bottom


def random_diagram(n: int, rng: random.Random) -> PlanarDiagram:
    """A uniformly random element of ``P_n``.

    Choosing ``n`` of the ``2n`` vertices is a bijection with ``P_n``: the
    chosen top vertices are joined to the unchosen bottom vertices.
    """
    chosen = rng.sample(range(2 * n), n)
    top = bottom_chosen = 0
    for c in chosen:
        if c < n:
            top |= 1 << c
        else:
            bottom_chosen |= 1 << (c - n)
    return PlanarDiagram(n, top, ((1 << n) - 1) & ~bottom_chosen)


# -- 0/1 matrix oracle ------------------------------------------------------

def to_matrix(d: PlanarDiagram) -> np.ndarray:
    """Rook matrix of ``d``: entry ``(i, j)`` is 1 iff top vertex ``i`` is joined to bottom ``j``."""
    m = np.zeros((d.n, d.n), dtype=np.int64)
    for b, t in d.edges():
        m[t - 1, b - 1] = 1
    return m


def from_matrix(m) -> PlanarDiagram | None:
    """Planar diagram of a rook matrix, or ``None`` if its matching crosses.

    Raises ``ValueError`` if ``m`` is not a square 0/1 matrix with at most
    one 1 in each row and column.
    """
    m = np.asarray(m)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise ValueError(f"rook matrix must be square, got shape {m.shape}")
    if not np.isin(m, (0, 1)).all():
        raise ValueError("rook matrix entries must be 0 or 1")
    if (m.sum(axis=0) > 1).any() or (m.sum(axis=1) > 1).any():
        raise ValueError("rook matrix has two 1s in a row or column")
    n = m.shape[0]
    pairs = sorted((int(j) + 1, int(i) + 1) for i, j in zip(*np.nonzero(m)))
    tops = [t for _, t in pairs]
    if tops != sorted(tops):
        return None
    return from_sets(n, tops, [b for b, _ in pairs])


# -- encodings --------------------------------------------------------------

def to_json(d: PlanarDiagram) -> dict:
    return {"n": d.n, "top": elements(d.top), "bottom": elements(d.bottom)}


def _vertex_list(value, name: str) -> list[int]:
    if not isinstance(value, list):
        raise ValueError(f"{name!r} must be a list of vertices")
    return value


def from_json(obj: dict) -> PlanarDiagram:
    if not isinstance(obj, dict) or not {"n", "top", "bottom"} <= obj.keys():
        raise ValueError("diagram JSON needs keys 'n', 'top' and 'bottom'")
    n = obj["n"]
    if isinstance(n, bool) or not isinstance(n, int) or n < 0:
        raise ValueError(f"bad size {n!r}")
    top = to_mask(_vertex_list(obj["top"], "top"), n)
    bottom = to_mask(_vertex_list(obj["bottom"], "bottom"), n)
    return PlanarDiagram(n, top, bottom)


def to_compact(d: PlanarDiagram) -> str:
    """Text form ``"n:bottom->top"``, e.g. ``"5:1,2,5->2,3,4"``."""
    bottom = ",".join(map(str, elements(d.bottom)))
    top = ",".join(map(str, elements(d.top)))
    return f"{d.n}:{bottom}->{top}"


def _parse_vertices(text: str) -> list[int]:
    text = text.strip()
    if not text:
        return []
    try:
        return [int(tok) for tok in text.split(",")]
    except ValueError:
        raise ValueError(f"bad vertex list {text!r}") from None


def from_compact(text: str) -> PlanarDiagram:
    head, sep, body = text.strip().partition(":")
    if not sep or "->" not in body:
        raise ValueError(f"expected 'n:bottom->top', got {text!r}")
    try:
        n = int(head)
    except ValueError:
        raise ValueError(f"bad size {head!r}") from None
    if n < 0:
        raise ValueError(f"bad size {n}")
    bottom, top = body.split("->", 1)
    return PlanarDiagram(n, to_mask(_parse_vertices(top), n), to_mask(_parse_vertices(bottom), n))


def parse_diagram(text: str) -> PlanarDiagram:
    """Decode either the JSON object form or the compact text form."""
    text = text.strip()
    if text.startswith("{"):
        try:
            obj = json.loads(text)
        except json.JSONDecodeError as e:
            raise ValueError(f"bad diagram JSON: {e}") from None
        return from_json(obj)
    return from_compact(text)


def count(n: int, rank: int | None = None) -> int:
    """Size of ``P_n`` (or of its rank slice) without enumerating."""
    if rank is None:
        return comb(2 * n, n)
    return comb(n, rank) ** 2 if 0 <= rank <= n else 0
