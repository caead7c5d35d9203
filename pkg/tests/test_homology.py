import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from posethom.fields import GF
from posethom.homology import (
    FieldHomologyEngine, HomologyEngine, chain_complex, reduced_cohomology,
)
from posethom.linalg import AbelianGroup, IntMatrix, rank_mod
from posethom.simplicial import (
    cycle, from_facets, mask_of, random_complex, simplex, skeleton,
)

TWO_POINTS = from_facets(2, [{1}, {2}])


def test_chain_complex_c3_incidence():
    C = chain_complex(cycle(3), None, reduced=False)
    d1 = C.boundary_matrix(1)
    assert d1.shape == (3, 3)
    # edges sorted by mask: {1,2}, {1,3}, {2,3}; vertices 1,2,3
    assert d1.data == [[-1, -1, 0], [1, 0, -1], [0, 1, 1]]


def test_chain_complex_empty_subset():
    C = chain_complex(cycle(3), 0, reduced=True)
    assert C.basis_of(-1) == [0]
    assert C.boundary_matrix(0).shape == (1, 0)
    Cu = chain_complex(cycle(3), 0, reduced=False)
    assert Cu.degrees() == []


def test_chain_complex_augmentation():
    C = chain_complex(TWO_POINTS, None, reduced=True)
    assert C.boundary_matrix(0).data == [[1, 1]]


@settings(max_examples=40, deadline=None)
@given(st.integers(2, 6), st.integers(0, 500), st.booleans())
def test_boundary_squares_to_zero(m, seed, reduced):
    K, _ = random_complex(m, min(2, m - 1), 0.55, seed)
    full = (1 << m) - 1
    J = random.Random(seed).randrange(0, full + 1)
    C = chain_complex(K, J, reduced)
    for q in C.degrees():
        assert (C.boundary_matrix(q) @ C.boundary_matrix(q + 1)).is_zero()


def test_based_homology_two_isolated_vertices():
    E = HomologyEngine(cycle(4))
    H = E.homology(mask_of([1, 3]), 0, reduced=True)
    assert H.group == AbelianGroup(1)
    assert H.basis_faces == [mask_of([1]), mask_of([3])]
    assert H.representatives == [[-1, 1]]  # [v3] - [v1]


def test_based_homology_circle():
    E = HomologyEngine(cycle(4))
    for reduced in (False, True):
        H = E.homology((1 << 4) - 1, 1, reduced)
        assert H.group == AbelianGroup(1)


def test_based_homology_empty_set_degree_minus_one():
    E = HomologyEngine(cycle(4))
    H = E.homology(0, -1, reduced=True)
    assert H.group == AbelianGroup(1) and H.representatives == [[1]]
    assert E.homology(0b11, -1, reduced=True).group.is_zero()
    with pytest.raises(ValueError):
        E.homology(0, -1, reduced=False)


def test_unreduced_h0_counts_components():
    K, _ = random_complex(6, 1, 0.4, 11)
    E = HomologyEngine(K)
    for J in range(1 << 6):
        c = len(E.components(J)[0])
        assert E.homology(J, 0, False).group == AbelianGroup(c)
        expect_reduced = AbelianGroup(max(c - 1, 0))
        assert E.homology(J, 0, True).group == expect_reduced
    assert E.homology(0, 0, False).group.is_zero()


def test_reduced_unreduced_agree_above_zero():
    for K in [cycle(5), simplex(4), skeleton(5, 1)]:
        E = HomologyEngine(K)
        full = (1 << K.m) - 1
        for q in (1, 2):
            Hr = E.homology(full, q, True)
            Hu = E.homology(full, q, False)
            assert Hr.group == Hu.group
            assert Hr.representatives == Hu.representatives


def test_free_rank_matches_rational_betti():
    K, _ = random_complex(5, 2, 0.6, 3)
    E = HomologyEngine(K)
    full = (1 << 5) - 1
    for q in (0, 1, 2):
        H = E.homology(full, q, False)
        C = chain_complex(K, full, False)
        n = C.space_dim(q)
        betti = (n - rank_mod(C.boundary_matrix(q), "Q")
                 - rank_mod(C.boundary_matrix(q + 1), "Q"))
        assert H.group.free_rank == betti


def test_representatives_are_cycles():
    K, _ = random_complex(6, 2, 0.5, 19)
    E = HomologyEngine(K)
    full = (1 << 6) - 1
    for q in (0, 1, 2):
        H = E.homology(full, q, False)
        C = chain_complex(K, full, False)
        d = C.boundary_matrix(q)
        for rep in H.representatives:
            assert all(v == 0 for v in (d @ rep))


def test_induced_identity_and_zero():
    E = HomologyEngine(cycle(5))
    J = mask_of([1, 3])
    assert E.induced_matrix(J, J, 0, True) == IntMatrix.identity(1)
    assert E.induced_matrix(0, J, -1, True).shape == (0, 1)


def test_induced_pair_blocks():
    # disconnected pair: components {1}, {3} inside K_{1,3}
    E = HomologyEngine(cycle(4))
    M1 = E.induced_matrix(mask_of([1]), mask_of([1, 3]), 0, False)
    M3 = E.induced_matrix(mask_of([3]), mask_of([1, 3]), 0, False)
    assert M1.data == [[1], [0]] and M3.data == [[0], [1]]
    # connected pair {1,2}: single component
    N1 = E.induced_matrix(mask_of([1]), mask_of([1, 2]), 0, False)
    N2 = E.induced_matrix(mask_of([2]), mask_of([1, 2]), 0, False)
    assert N1.data == [[1]] and N2.data == [[1]]


@settings(max_examples=30, deadline=None)
@given(st.integers(3, 7), st.integers(0, 400), st.data())
def test_induced_functoriality_sampled(m, seed, data):
    K, _ = random_complex(m, min(2, m - 1), 0.5, seed)
    E = HomologyEngine(K)
    full = (1 << m) - 1
    N = data.draw(st.integers(0, full))
    L = data.draw(st.integers(0, full)) & N
    J = data.draw(st.integers(0, full)) & L
    q = data.draw(st.sampled_from([0, 0, 1]))
    reduced = data.draw(st.booleans())
    f = E.induced(J, L, q, reduced)
    g = E.induced(L, N, q, reduced)
    assert f.then(g) == E.induced(J, N, q, reduced)


def test_general_induced_on_circle_inclusion():
    # the 4-cycle inside the cone over it (apex 5): H_1 dies
    facets = [[1, 2, 5], [2, 3, 5], [3, 4, 5], [1, 4, 5]]
    K = from_facets(5, facets)
    E = HomologyEngine(K)
    rim = mask_of([1, 2, 3, 4])
    H_rim = E.homology(rim, 1, False)
    assert H_rim.group == AbelianGroup(1)
    M = E.induced_matrix(rim, (1 << 5) - 1, 1, False)
    assert M.shape == (0, 1)


def test_reduced_cohomology_oracle_values():
    circle = reduced_cohomology(cycle(6))
    assert circle[0].is_zero() and circle[1] == AbelianGroup(1)
    ball = reduced_cohomology(simplex(5))
    assert all(g.is_zero() for g in ball.values())
    points = reduced_cohomology(skeleton(4, 0))
    assert points[0] == AbelianGroup(3)
    sphere = reduced_cohomology(skeleton(4, 2))  # boundary of the 3-simplex
    assert sphere[2] == AbelianGroup(1) and sphere[1].is_zero()


def test_field_engine_matches_integer_free_rank_torsion_free():
    K, _ = random_complex(6, 2, 0.5, 23)
    E = HomologyEngine(K)
    F = FieldHomologyEngine(K, GF(5))
    full = (1 << 6) - 1
    rng = random.Random(5)
    for _ in range(40):
        J = rng.randrange(full + 1)
        q = rng.choice([0, 1, 2])
        H = E.homology(J, q, False)
        dim, reps, _ = F.homology(J, q, False)
        # graphs/2-complexes may carry torsion; compare via universal
        # coefficients: dim_p = free + #{d_i : p | d_i} + #{d_i : p | d_i}
        # in adjacent degree; here we just check dim >= free rank
        assert dim >= H.group.free_rank
        assert len(reps) == dim


def test_field_engine_induced_functoriality():
    K, _ = random_complex(5, 2, 0.6, 7)
    F = FieldHomologyEngine(K, GF(3))
    from posethom.fields import matmul
    full = (1 << 5) - 1
    rng = random.Random(1)
    for _ in range(25):
        N = rng.randrange(full + 1)
        L = rng.randrange(full + 1) & N
        J = rng.randrange(full + 1) & L
        q = rng.choice([0, 1])
        a = F.induced_matrix(J, L, q)
        b = F.induced_matrix(L, N, q)
        direct = F.induced_matrix(J, N, q)
        comp = [[v % 3 for v in row] for row in matmul(b, a, GF(3))]
        target = [[v % 3 for v in row] for row in direct]
        if not a or not b:
            continue
        assert comp == target


RP2 = from_facets(6, [(1, 2, 3), (1, 3, 4), (1, 4, 5), (1, 5, 6), (1, 2, 6),
                      (2, 3, 5), (3, 5, 6), (3, 4, 6), (2, 4, 6), (2, 4, 5)])


def test_projective_plane_torsion():
    E = HomologyEngine(RP2)
    full = (1 << 6) - 1
    assert E.homology(full, 0, False).group == AbelianGroup(1)
    H1 = E.homology(full, 1, False)
    assert H1.group == AbelianGroup(0, (2,))
    # the torsion representative is a cycle that doubles to a boundary
    C = chain_complex(RP2, full, False)
    rep = H1.representatives[0]
    assert all(v == 0 for v in (C.boundary_matrix(1) @ rep))
    assert E.homology(full, 2, False).group.is_zero()
    assert reduced_cohomology(RP2)[2] == AbelianGroup(0, (2,))


def test_projective_plane_field_dimensions():
    # universal coefficients: mod 2 picks up the torsion in two degrees
    F2 = FieldHomologyEngine(RP2, GF(2))
    F5 = FieldHomologyEngine(RP2, GF(5))
    full = (1 << 6) - 1
    assert [F2.homology(full, q, False)[0] for q in (0, 1, 2)] == [1, 1, 1]
    assert [F5.homology(full, q, False)[0] for q in (0, 1, 2)] == [1, 0, 0]


def test_engine_against_classical_formula():
    # free rank and torsion straight from the boundary matrices
    from posethom.linalg import sparse_invariant_factors, sparse_rank_over_Q
    for seed in (1, 4, 9):
        K, _ = random_complex(6, 2, 0.55, seed)
        E = HomologyEngine(K)
        rng = random.Random(seed)
        full = (1 << 6) - 1
        for _ in range(12):
            J = rng.randrange(full + 1)
            q = rng.choice([0, 1, 2])
            C = chain_complex(K, J, False)
            n = C.space_dim(q)
            r_out = sparse_rank_over_Q(C.boundary_matrix(q).triplets())
            r_in, chain = sparse_invariant_factors(
                C.boundary_matrix(q + 1).triplets())
            expect = AbelianGroup(n - r_out - r_in,
                                  [f for f in chain if f > 1])
            assert E.homology(J, q, False).group == expect, (seed, J, q)


def test_ghost_vertex_degenerate_complex():
    # skeleton(m, -1) is the complex {∅} with only ghost vertices: every
    # full subcomplex is {∅}, so reduced degree -1 homology is constant Z
    # with identity induced maps, and degree 0 vanishes everywhere
    K = skeleton(3, -1)
    E = HomologyEngine(K)
    for J in range(8):
        assert E.homology(J, -1, True).group == AbelianGroup(1)
        assert E.homology(J, 0, False).group.is_zero()
    assert E.induced_matrix(0b001, 0b011, -1, True).data == [[1]]
    from posethom.cochain import cone_acyclicity_check, poset_cohomology
    from posethom.functors import functor_H
    F = functor_H(K, -1, True)
    assert cone_acyclicity_check(F).certified
    assert all(g.is_zero() for g in poset_cohomology(F, "Z"))
    # with all vertices present, the value is Z at the empty set alone
    E2 = HomologyEngine(cycle(4))
    assert E2.induced_matrix(0, 0b101, -1, True).shape == (0, 1)
