"""Self-contained invariant sweeps used by ``planar-rook verify``.

Each check rebuilds what it needs from scratch and returns ``None`` on
success or a short witness string describing the first violation found.

Work tiers for a given ``n_max``:
  * exhaustive over pairs for ``n <= min(n_max, 4)``,
  * exhaustive over triples for ``n <= min(n_max, 3)``,
  * seeded random samples at ``n = n_max``.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import product
from math import comb
from typing import Callable

import numpy as np

from . import characters as ch
from .algebra import AlgebraElement, from_x_coords, multiply, to_x_coords, x_of, x_unit
from .diagram import (
    compose,
    edgeless,
    embed,
    enumerate_diagrams,
    from_matrix,
    from_sets,
    identity,
    k_subsets,
    pi,
    random_diagram,
    to_compact,
    to_matrix,
    vertical_edge_count,
    apply,
)
from .reprs import (
    irreducibility_dimension,
    regular_rep_matrix,
    restriction_blocks,
    rho,
    rho_algebra,
    wedderburn_inv,
    wedderburn_map,
)

SUITES = ("monoid", "algebra", "repr", "chars", "wedderburn")
DEFAULT_SEED = 20080917
MAX_N = 6
RANDOM_SAMPLES = 200


@dataclass(frozen=True)
class CheckResult:
    suite: str
    name: str
    passed: bool
    witness: str = ""

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        text = f"{status} {self.suite}.{self.name}"
        return text if self.passed else f"{text}: {self.witness}"


_CHECKS: list[tuple[str, str, Callable]] = []


def check(suite: str):
    def register(fn):
        _CHECKS.append((suite, fn.__name__.removeprefix("check_"), fn))
        return fn
    return register


def _c(*ds) -> str:
    return " ".join(to_compact(d) for d in ds)


def _pairs(n, n_max, rng, exhaustive_to=4):
    if n <= exhaustive_to:
        ds = list(enumerate_diagrams(n))
        return product(ds, ds)
    return ((random_diagram(n, rng), random_diagram(n, rng)) for _ in range(RANDOM_SAMPLES))


def _sizes(n_max, cap):
    sizes = list(range(min(n_max, cap) + 1))
    if n_max > cap:
        sizes.append(n_max)
    return sizes


# -- monoid -----------------------------------------------------------------

@check("monoid")
def check_counting(n_max, rng):
    for n in range(n_max + 1):
        by_rank = [0] * (n + 1)
        for d in enumerate_diagrams(n):
            by_rank[d.rank] += 1
        if sum(by_rank) != comb(2 * n, n):
            return f"n={n}: |P_n|={sum(by_rank)}"
        for k, c in enumerate(by_rank):
            if c != comb(n, k) ** 2:
                return f"n={n} rank {k}: {c} diagrams"


@check("monoid")
def check_associativity(n_max, rng):
    for n in range(min(n_max, 3) + 1):
        ds = list(enumerate_diagrams(n))
        for a, b, c in product(ds, repeat=3):
            if compose(a, compose(b, c)) != compose(compose(a, b), c):
                return _c(a, b, c)
    for _ in range(RANDOM_SAMPLES):
        a, b, c = (random_diagram(n_max, rng) for _ in range(3))
        if compose(a, compose(b, c)) != compose(compose(a, b), c):
            return _c(a, b, c)


@check("monoid")
def check_matrix_oracle(n_max, rng):
    for n in _sizes(n_max, 4):
        for a, b in _pairs(n, n_max, rng):
            prod = to_matrix(a) @ to_matrix(b)
            if not np.array_equal(to_matrix(compose(a, b)), prod):
                return _c(a, b)
            if from_matrix(prod) != compose(a, b):
                return f"planarity closure: {_c(a, b)}"


@check("monoid")
def check_identity_and_zero(n_max, rng):
    for n in range(n_max + 1):
        e, z = identity(n), edgeless(n)
        for d in enumerate_diagrams(n):
            if not compose(e, d) == compose(d, e) == d:
                return f"identity: {_c(d)}"
            if not compose(z, d) == compose(d, z) == z:
                return f"zero: {_c(d)}"


@check("monoid")
def check_rank_monotone_and_functorial(n_max, rng):
    for n in _sizes(n_max, 4):
        for a, b in _pairs(n, n_max, rng):
            ab = compose(a, b)
            if ab.rank > min(a.rank, b.rank):
                return f"rank: {_c(a, b)}"
            for s in range(1 << n):
                inner = apply(b, s)
                rhs = None if inner is None else apply(a, inner)
                if apply(ab, s) != rhs:
                    return f"apply: {_c(a, b)} S={s:#b}"


# -- algebra ----------------------------------------------------------------

def _random_element(n, rng, terms=3):
    out = AlgebraElement.zero(n)
    for _ in range(terms):
        c = rng.randint(-3, 3)
        out = out + AlgebraElement.from_diagram(random_diagram(n, rng), c)
    return out


@check("algebra")
def check_ring_axioms(n_max, rng):
    for n in range(min(n_max, 5) + 1):
        one = AlgebraElement.one(n)
        for _ in range(RANDOM_SAMPLES // 4):
            a, b, c = (_random_element(n, rng) for _ in range(3))
            if a * (b * c) != (a * b) * c:
                return f"associativity n={n}: {a!r}, {b!r}, {c!r}"
            if a * (b + c) != a * b + a * c or (a + b) * c != a * c + b * c:
                return f"distributivity n={n}: {a!r}, {b!r}, {c!r}"
            if one * a != a or a * one != a:
                return f"unit n={n}: {a!r}"


@check("algebra")
def check_x_basis_round_trip(n_max, rng):
    for n in range(min(n_max, 5) + 1):
        for d in enumerate_diagrams(n):
            e = AlgebraElement.from_diagram(d)
            if from_x_coords(n, to_x_coords(e)) != e:
                return _c(d)
            if to_x_coords(x_of(d)) != {d: 1}:
                return f"x_of: {_c(d)}"


@check("algebra")
def check_left_action_on_x(n_max, rng):
    for n in range(min(n_max, 4) + 1):
        ds = list(enumerate_diagrams(n))
        xs = {a: x_of(a) for a in ds}
        for d, a in product(ds, ds):
            got = multiply(AlgebraElement.from_diagram(d), xs[a])
            if a.top & ~d.bottom:
                want = AlgebraElement.zero(n)
            else:
                want = x_of(compose(d, a))
            if got != want:
                return _c(d, a)


@check("algebra")
def check_matrix_units(n_max, rng):
    for n in range(min(n_max, 4) + 1):
        ds = list(enumerate_diagrams(n))
        xs = {a: x_of(a) for a in ds}
        for a, b in product(ds, ds):
            got = multiply(xs[a], xs[b])
            if a.bottom == b.top:
                want = xs[from_sets(n, a.top, b.bottom)]
            else:
                want = AlgebraElement.zero(n)
            if got != want:
                return _c(a, b)


# -- representations --------------------------------------------------------

@check("repr")
def check_homomorphism(n_max, rng):
    for n in _sizes(n_max, 3):
        for a, b in _pairs(n, n_max, rng, exhaustive_to=3):
            for k in range(n + 1):
                if not np.array_equal(rho(n, k, compose(a, b)), rho(n, k, a) @ rho(n, k, b)):
                    return f"k={k}: {_c(a, b)}"


@check("repr")
def check_pi_annihilation(n_max, rng):
    for n in range(n_max + 1):
        for ell in range(n + 1):
            for k in range(n + 1):
                m = rho(n, k, pi(n, ell))
                if k > ell and m.any():
                    return f"n={n} k={k} ell={ell}"
            m = rho(n, ell, pi(n, ell))
            if not (np.array_equal(m @ m, m) and m.sum() == 1):
                return f"rank-one idempotent n={n} ell={ell}"


@check("repr")
def check_irreducibility(n_max, rng):
    for n in range(min(n_max, 5) + 1):
        for k in range(n + 1):
            dim = irreducibility_dimension(n, k)
            if dim != comb(n, k) ** 2:
                return f"n={n} k={k}: span dimension {dim}"


@check("repr")
def check_restriction(n_max, rng):
    for n in range(1, n_max + 1):
        for k in range(n + 1):
            _, report = restriction_blocks(n, k)
            if not report.ok:
                return f"n={n} k={k}: {_c(report.failures[0])}"


@check("repr")
def check_regular_decomposition(n_max, rng):
    # span{x_{S,T} : |S| = |T|} for fixed T is a copy of V^n_k via x_{S,T} <-> v_S
    for n in range(min(n_max, 4) + 1):
        for k in range(n + 1):
            masks = k_subsets(n, k)
            for t in masks:
                for d in enumerate_diagrams(n):
                    m = rho(n, k, d)
                    e = AlgebraElement.from_diagram(d)
                    for j, s in enumerate(masks):
                        got = multiply(e, x_unit(n, s, t))
                        want = AlgebraElement.zero(n)
                        for i, s2 in enumerate(masks):
                            if m[i, j]:
                                want = want + x_unit(n, s2, t)
                        if got != want:
                            return f"T={t:#b} S={s:#b} d={_c(d)}"


# -- characters -------------------------------------------------------------

@check("chars")
def check_character_values(n_max, rng):
    for n in range(min(n_max, 5) + 1):
        for d in enumerate_diagrams(n):
            ell = vertical_edge_count(d)
            for k in range(n + 1):
                fixed = ch.chi(n, k, d)
                trace = int(np.trace(rho(n, k, d)))
                if not fixed == trace == comb(ell, k):
                    return f"k={k} {_c(d)}: fixed={fixed} trace={trace}"


@check("chars")
def check_regular_trace(n_max, rng):
    for n in range(min(n_max, 5) + 1):
        for d in enumerate_diagrams(n):
            ell = vertical_edge_count(d)
            psi = regular_rep_matrix(n, d).trace()
            from_irreps = sum(comb(n, k) * ch.chi(n, k, d) for k in range(n + 1))
            if not psi == comb(n + ell, ell) == from_irreps:
                return f"{_c(d)}: psi={psi}"


@check("chars")
def check_chi_on_x(n_max, rng):
    for n in range(min(n_max, 5) + 1):
        for d in enumerate_diagrams(n):
            only_vertical = d.top == d.bottom
            for k in range(n + 1):
                want = int(only_vertical and d.rank == k)
                if ch.chi_on_x(n, k, d) != want:
                    return f"k={k} {_c(d)}"


@check("chars")
def check_center(n_max, rng):
    for n in range(min(n_max, 4) + 1):
        for ell, z in enumerate(ch.center_basis(n)):
            if not ch.is_central(z):
                return f"z_{ell} not central for n={n}"
    for n in range(min(n_max, 3) + 1):
        dim = ch.centralizer_dimension(n)
        if dim != n + 1:
            return f"n={n}: center has dimension {dim}"


@check("chars")
def check_tensor_identity(n_max, rng):
    for n in range(max(n_max, 10) + 1):
        for i, j in product(range(n + 1), repeat=2):
            m = ch.tensor_multiplicities(n, i, j).m
            if any(x < 0 for x in m):
                return f"n={n} i={i} j={j}: negative multiplicity"
            for ell in range(n + 1):
                if comb(ell, i) * comb(ell, j) != sum(mk * comb(ell, k) for k, mk in enumerate(m)):
                    return f"n={n} i={i} j={j} ell={ell}"


# -- Wedderburn -------------------------------------------------------------

def _blockwise_equal(xs, ys):
    return all(np.array_equal(x, y) for x, y in zip(xs, ys))


@check("wedderburn")
def check_wedderburn(n_max, rng):
    for n in _sizes(n_max, 3):
        if sum(comb(n, k) ** 2 for k in range(n + 1)) != comb(2 * n, n):
            return f"dimension mismatch n={n}"
        cache = {}

        def w(d):
            if d not in cache:
                cache[d] = wedderburn_map(AlgebraElement.from_diagram(d))
            return cache[d]

        for a, b in _pairs(n, n_max, rng, exhaustive_to=3):
            wa, wb = w(a), w(b)
            if not _blockwise_equal(w(compose(a, b)), [x @ y for x, y in zip(wa, wb)]):
                return f"multiplicative: {_c(a, b)}"
            if wedderburn_inv(n, wa) != AlgebraElement.from_diagram(a):
                return f"inverse: {_c(a)}"
            for k in range(n + 1):
                if not np.array_equal(wa[k], rho_algebra(n, k, AlgebraElement.from_diagram(a))):
                    return f"block {k} differs from rho: {_c(a)}"


def run(n_max: int, suites=SUITES, seed: int = DEFAULT_SEED) -> list[CheckResult]:
    if not 0 <= n_max <= MAX_N:
        raise ValueError(f"--n-max must be in 0..{MAX_N}")
    unknown = set(suites) - set(SUITES)
    if unknown:
        raise ValueError(f"unknown suite(s): {', '.join(sorted(unknown))}")
    results = []
    for suite, name, fn in _CHECKS:
        if suite not in suites:
            continue
        rng = random.Random(f"{seed}:{suite}.{name}")
        try:
            witness = fn(n_max, rng)
        except Exception as e:  # a crash is reported as a failed invariant
            witness = f"{type(e).__name__}: {e}"
        results.append(CheckResult(suite, name, witness is None, witness or ""))
    return results
