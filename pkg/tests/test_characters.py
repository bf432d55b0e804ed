from itertools import product
from math import comb

import numpy as np
import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import as_map, compose_maps, fixed_subsets, planar_maps
from planar_rook.algebra import AlgebraElement, x_of
from planar_rook.characters import (
    center_basis,
    centralizer_dimension,
    character_table,
    chi,
    chi_on_x,
    decompose_character,
    is_central,
    regular_trace,
    tensor_multiplicities,
)
from planar_rook.diagram import edgeless, enumerate_diagrams, from_sets, identity, pi, vertical_edge_count
from planar_rook.reprs import rho, rho_algebra
from strategies import diagrams


class TestChi:
    def test_values(self):
        assert chi(5, 2, pi(5, 4)) == 6
        for k in range(6):
            assert chi(5, k, identity(5)) == comb(5, k)
        for ell in range(6):
            for k in range(ell + 1, 6):
                assert chi(5, k, pi(5, ell)) == 0

    @pytest.mark.parametrize("n", range(6))
    def test_count_trace_binomial(self, n):
        for d in enumerate_diagrams(n):
            ell = vertical_edge_count(d)
            for k in range(n + 1):
                c = chi(n, k, d)
                assert c == int(np.trace(rho(n, k, d))) == comb(ell, k)
                assert c == fixed_subsets(n, k, as_map(d))
                assert c == chi(n, k, pi(n, ell))

    def test_errors(self):
        with pytest.raises(ValueError):
            chi(3, 4, identity(3))
        with pytest.raises(ValueError):
            chi(3, 1, identity(4))


class TestCharacterTable:
    def test_n2(self):
        assert character_table(2).values == ((1, 1, 1), (0, 1, 2), (0, 0, 1))

    def test_n0(self):
        assert character_table(0).values == ((1,),)

    def test_shape_and_determinant(self):
        t = character_table(7)
        for k, row in enumerate(t.values):
            assert row[:k] == (0,) * k and row[k] == 1
        assert sympy.Matrix(t.values).det() == 1

    def test_pascal_n10(self):
        t = character_table(10)
        assert t.values == tuple(tuple(comb(ell, k) for ell in range(11)) for k in range(11))

    def test_csv_and_json(self):
        t = character_table(2)
        assert t.to_csv() == "l=0,l=1,l=2\n1,1,1\n0,1,2\n0,0,1\n"
        assert t.to_json() == {"n": 2, "values": [[1, 1, 1], [0, 1, 2], [0, 0, 1]]}


class TestRegularTrace:
    def test_values(self):
        assert regular_trace(2, pi(2, 1)) == 3
        for n in range(5):
            assert regular_trace(n, identity(n)) == comb(2 * n, n)

    def test_edgeless(self):
        for n in range(5):
            maps = planar_maps(n)
            fixed = [b for b in maps if compose_maps({}, b) == b]
            assert fixed == [{}]
            assert regular_trace(n, edgeless(n)) == 1

    @pytest.mark.parametrize("n", range(6))
    def test_formula(self, n):
        for d in enumerate_diagrams(n):
            ell = vertical_edge_count(d)
            psi = regular_trace(n, d)
            assert psi == comb(n + ell, ell)
            assert psi == sum(comb(n, k) * chi(n, k, d) for k in range(n + 1))


class TestChiOnX:
    def test_indicator(self):
        for n in range(6):
            for d in enumerate_diagrams(n):
                only_vertical = all(b == t for b, t in d.edges())
                for k in range(n + 1):
                    assert chi_on_x(n, k, d) == int(only_vertical and d.rank == k)

    def test_examples(self):
        for ell in range(5):
            assert chi_on_x(4, ell, pi(4, ell)) == 1
        assert chi_on_x(3, 0, edgeless(3)) == 1
        assert chi_on_x(3, 1, from_sets(3, [1, 2], [1, 3])) == 0

    def test_is_trace_of_x(self):
        d = from_sets(4, [1, 3], [1, 3])
        m = rho_algebra(4, 2, x_of(d))
        assert chi_on_x(4, 2, d) == sum(m[i, i] for i in range(m.shape[0]))


def _centralizer_oracle(n):
    maps = planar_maps(n)
    keys = [frozenset(m.items()) for m in maps]
    pos = {k: i for i, k in enumerate(keys)}
    rows = []
    for d in maps:
        block = sympy.zeros(len(maps), len(maps))
        for j, b in enumerate(maps):
            block[pos[frozenset(compose_maps(d, b).items())], j] += 1
            block[pos[frozenset(compose_maps(b, d).items())], j] -= 1
        rows.append(block)
    return len(sympy.Matrix.vstack(*rows).nullspace())


class TestCenter:
    def test_size(self):
        for n in range(5):
            assert len(center_basis(n)) == n + 1

    @pytest.mark.parametrize("n", range(5))
    def test_central(self, n):
        for z in center_basis(n):
            assert is_central(z)

    def test_sum_is_identity(self):
        for n in range(4):
            total = AlgebraElement.zero(n)
            for z in center_basis(n):
                total = total + z
            assert total == AlgebraElement.one(n)
            assert center_basis(n)[n] == x_of(identity(n))

    def test_not_central(self):
        a = from_sets(2, [1], [2])
        witnesses = [d for d in enumerate_diagrams(2) if d * AlgebraElement.from_diagram(a) != AlgebraElement.from_diagram(a) * d]
        assert witnesses
        assert not is_central(AlgebraElement.from_diagram(a))

    @pytest.mark.parametrize("n", range(4))
    def test_centralizer_dimension(self, n):
        assert _centralizer_oracle(n) == n + 1
        assert centralizer_dimension(n) == n + 1

    def test_linear_independence(self):
        for n in range(5):
            zs = center_basis(n)
            support = set()
            for z in zs:
                support |= set(z.terms)
            support = sorted(support)
            rows = [[z.coeff(d) for d in support] for z in zs]
            assert sympy.Matrix(rows).rank() == n + 1


class TestTensor:
    def test_one_one(self):
        for n in range(2, 6):
            m = tensor_multiplicities(n, 1, 1).m
            assert m[1] == 1 and m[2] == 2 and sum(m) == 3
            for ell in range(n + 1):
                assert ell * ell == ell + 2 * comb(ell, 2)

    def test_trivial_factor(self):
        for j in range(5):
            m = tensor_multiplicities(4, 0, j).m
            assert m == tuple(int(k == j) for k in range(5))

    def test_truncation(self):
        assert tensor_multiplicities(2, 2, 2).m == (0, 0, 1)
        for ell in range(3):
            assert comb(ell, 2) ** 2 == comb(ell, 2)

    def test_errors(self):
        with pytest.raises(ValueError):
            tensor_multiplicities(3, 4, 0)

    @pytest.mark.parametrize("n", range(11))
    def test_pointwise_identity(self, n):
        for i, j in product(range(n + 1), repeat=2):
            m = tensor_multiplicities(n, i, j).m
            assert all(isinstance(x, int) and x >= 0 for x in m)
            for ell in range(n + 1):
                assert comb(ell, i) * comb(ell, j) == sum(mk * comb(ell, k) for k, mk in enumerate(m))

    def test_tensor_module_trace(self):
        # V_i (x) V_j as an actual module: trace of the Kronecker product
        n = 4
        for i, j in product(range(n + 1), repeat=2):
            m = tensor_multiplicities(n, i, j).m
            for d in enumerate_diagrams(n):
                t = int(np.trace(np.kron(rho(n, i, d), rho(n, j, d))))
                assert t == sum(mk * chi(n, k, d) for k, mk in enumerate(m))


class TestDecompose:
    def test_table_rows(self):
        t = character_table(5)
        for k, row in enumerate(t.values):
            assert decompose_character(5, row).m == tuple(int(i == k) for i in range(6))

    def test_regular_character(self):
        for n in range(8):
            f = [comb(n + ell, ell) for ell in range(n + 1)]
            assert decompose_character(n, f).m == tuple(comb(n, k) for k in range(n + 1))

    def test_square_of_standard(self):
        n = 5
        assert decompose_character(n, [ell * ell for ell in range(n + 1)]).m == (0, 1, 2, 0, 0, 0)
        assert decompose_character(n, [ell * ell for ell in range(n + 1)]) == tensor_multiplicities(n, 1, 1)

    def test_length_check(self):
        with pytest.raises(ValueError):
            decompose_character(3, [1, 2])

    @settings(max_examples=100)
    @given(st.integers(0, 8).flatmap(lambda n: st.lists(st.integers(-50, 50), min_size=n + 1, max_size=n + 1)))
    def test_inverts_table(self, f):
        n = len(f) - 1
        m = decompose_character(n, f).m
        assert [sum(mk * comb(ell, k) for k, mk in enumerate(m)) for ell in range(n + 1)] == f


@settings(max_examples=100, deadline=None)
@given(diagrams(max_n=7))
def test_trace_reduction(d):
    ell = vertical_edge_count(d)
    for k in range(d.n + 1):
        assert chi(d.n, k, d) == chi(d.n, k, pi(d.n, ell))
