from __future__ import annotations

import random
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from flagtop import (
    ContainmentError,
    IntegerLattice,
    QuotientGroup,
    ScaledLattice,
    build_root_system,
    hnf,
    member,
    parse_kind,
    quotient,
    quotient_scaled,
    snf,
)
from flagtop.lattices import det

from .oracles import rational_member_oracle

small_matrices = st.integers(1, 4).flatmap(
    lambda n: st.integers(1, 4).flatmap(
        lambda m: st.lists(
            st.lists(st.integers(-9, 9), min_size=n, max_size=n),
            min_size=m,
            max_size=m,
        )
    )
)


def mat_mul(a, b):
    return [
        [sum(a[i][k] * b[k][j] for k in range(len(b))) for j in range(len(b[0]))]
        for i in range(len(a))
    ]


class TestHnf:
    def test_identity(self):
        h, u = hnf([[1, 0], [0, 1]])
        assert h == [[1, 0], [0, 1]]

    def test_already_diagonal(self):
        h, _ = hnf([[2, 0], [0, 3]])
        assert h == [[2, 0], [0, 3]]

    def test_small_reduction(self):
        # The canonical (fully reduced) form of the row span of [[1,2],[3,4]].
        h, u = hnf([[1, 2], [3, 4]])
        assert h == [[1, 0], [0, 2]]
        assert mat_mul(u, [[1, 2], [3, 4]]) == h

    @given(small_matrices)
    def test_h_equals_u_times_input(self, rows):
        h, u = hnf(rows)
        assert mat_mul(u, rows) == h
        assert abs(det(u)) == 1

    @given(small_matrices, st.randoms(use_true_random=False))
    def test_canonical_under_row_permutation(self, rows, rng):
        shuffled = rows[:]
        rng.shuffle(shuffled)
        assert hnf(rows)[0] == hnf(shuffled)[0]

    @given(small_matrices)
    def test_idempotent(self, rows):
        h, _ = hnf(rows)
        again, _ = hnf(h)
        assert again == h


class TestSnf:
    def test_cartan_a2(self):
        d, _, _ = snf([[2, -1], [-1, 2]])
        assert [d[0][0], d[1][1]] == [1, 3]

    def test_cartan_d4(self):
        cartan = build_root_system(parse_kind("D4")).cartan
        d, _, _ = snf([list(r) for r in cartan])
        assert [d[i][i] for i in range(4)] == [1, 1, 2, 2]

    def test_zero_matrix(self):
        d, _, _ = snf([[0, 0], [0, 0]])
        assert d == [[0, 0], [0, 0]]

    @given(small_matrices)
    def test_decomposition_and_chain(self, rows):
        d, u, v = snf(rows)
        assert mat_mul(mat_mul(u, rows), v) == d
        assert abs(det(u)) == 1
        assert abs(det(v)) == 1
        diag = [d[i][i] for i in range(min(len(d), len(d[0])))]
        for i in range(len(d)):
            for j in range(len(d[0])):
                if i != j:
                    assert d[i][j] == 0
        nonzero = [x for x in diag if x]
        assert all(x > 0 for x in nonzero)
        for a, b in zip(nonzero, nonzero[1:]):
            assert b % a == 0

    @given(
        st.integers(1, 4).flatmap(
            lambda n: st.lists(
                st.lists(st.integers(-9, 9), min_size=n, max_size=n),
                min_size=n,
                max_size=n,
            )
        )
    )
    def test_determinant_preserved(self, rows):
        d, _, _ = snf(rows)
        diag = [d[i][i] for i in range(len(rows))]
        prod = 1
        for x in diag:
            prod *= x
        assert prod == abs(det(rows))


class TestMembership:
    def test_zero_vector(self):
        lat = IntegerLattice.from_generators(2, [[1, 2]])
        assert member(lat, [0, 0])

    def test_coordinate_mismatch(self):
        lat = IntegerLattice.from_generators(2, [[1, 0]])
        assert not member(lat, [0, 1])

    def test_g2_dual_isotropy_example(self, g2):
        # Dual of the height-2 root minus the dual of the long simple is not
        # a multiple of the dual short simple.
        diff = [a - b for a, b in zip(g2.dual_coords((1, 1)), g2.dual_coords((0, 1)))]
        lat = IntegerLattice.from_generators(2, [[1, 0]])
        assert diff == [Fraction(1), Fraction(2)]
        assert not member(lat, diff)

    def test_rational_vectors(self):
        lat = IntegerLattice.from_generators(2, [[2, 0], [0, 1]])
        assert not member(lat, [Fraction(1), Fraction(0)])
        assert member(lat, [Fraction(4), Fraction(3)])

    def test_dimension_mismatch(self):
        lat = IntegerLattice.from_generators(2, [[1, 0]])
        with pytest.raises(ValueError):
            member(lat, [1, 0, 0])

    def test_dependent_basis_rejected(self):
        with pytest.raises(ValueError):
            IntegerLattice(2, ((1, 1), (2, 2)))

    @given(
        st.integers(2, 4).flatmap(
            lambda n: st.tuples(
                st.lists(
                    st.lists(st.integers(-6, 6), min_size=n, max_size=n),
                    min_size=1,
                    max_size=n,
                ),
                st.lists(st.integers(-40, 40), min_size=n, max_size=n),
            )
        )
    )
    def test_agrees_with_rational_solve(self, data):
        gens, vec = data
        lat = IntegerLattice.from_generators(len(vec), gens)
        assert member(lat, vec) == rational_member_oracle(gens, vec)

    def test_randomized_against_oracle_bulk(self):
        rng = random.Random(20240809)
        for _ in range(50):
            n = rng.randint(2, 4)
            gens = [[rng.randint(-5, 5) for _ in range(n)] for _ in range(rng.randint(1, n))]
            lat = IntegerLattice.from_generators(n, gens)
            for _ in range(20):
                style = rng.random()
                if style < 0.4 and lat.rank:
                    vec = [0] * n
                    for row in lat.basis:
                        c = rng.randint(-3, 3)
                        vec = [a + c * b for a, b in zip(vec, row)]
                elif style < 0.7:
                    vec = [rng.randint(-8, 8) for _ in range(n)]
                else:
                    vec = [Fraction(rng.randint(-8, 8), rng.choice([1, 2, 3])) for _ in range(n)]
                assert member(lat, vec) == rational_member_oracle(gens, vec)


class TestQuotient:
    def test_equal_lattices(self):
        lat = IntegerLattice.from_generators(2, [[1, 0], [0, 1]])
        q = quotient(lat, lat)
        assert q == QuotientGroup(0, ())

    def test_index_two(self):
        big = IntegerLattice.from_generators(1, [[1]])
        small = IntegerLattice.from_generators(1, [[2]])
        assert quotient(big, small) == QuotientGroup(0, (2,))

    def test_free_rank_difference(self):
        big = IntegerLattice.from_generators(3, [[1, 0, 0], [0, 1, 0], [0, 0, 1]])
        small = IntegerLattice.from_generators(3, [[0, 1, 0]])
        assert quotient(big, small) == QuotientGroup(2, ())

    def test_containment_checked(self):
        big = IntegerLattice.from_generators(2, [[2, 0], [0, 2]])
        small = IntegerLattice.from_generators(2, [[1, 1]])
        with pytest.raises(ContainmentError):
            quotient(big, small)

    def test_invariant_factor_chain_validation(self):
        with pytest.raises(ValueError):
            QuotientGroup(0, (3, 2))
        with pytest.raises(ValueError):
            QuotientGroup(0, (1,))

    def test_scaled_quotient_scale_invariance(self):
        big = ScaledLattice.from_rational_generators(
            2, [[Fraction(1, 3), 0], [0, Fraction(1, 3)]]
        )
        small = ScaledLattice.from_rational_generators(2, [[1, 0], [0, 1]])
        assert quotient_scaled(big, small) == QuotientGroup(0, (3, 3))

    def test_scaled_membership(self):
        half = ScaledLattice.from_rational_generators(1, [[Fraction(1, 2)]])
        assert half.member([Fraction(3, 2)])
        assert not half.member([Fraction(1, 3)])
