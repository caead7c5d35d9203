import pytest

from posethom.cochain import (
    assemble, cone_acyclicity_check, epsilon, poset_cohomology,
)
from posethom.fields import GF
from posethom.functors import (
    BasedFunctor, NonFunctorialError, RegimeError, constant_functor,
    functor_A, functor_face, functor_H,
)
from posethom.homology import chain_complex, reduced_cohomology
from posethom.linalg import AbelianGroup
from posethom.simplicial import cycle, from_facets, simplex, skeleton


def test_epsilon_examples():
    assert epsilon(0, 5) == 0
    assert epsilon(0b101, 2) == 1           # J = {1,3}, x = 2
    assert epsilon(0b1011, 3) == 2          # J = {1,2,4}, x = 3
    with pytest.raises(ValueError):
        epsilon(0b1, 1)


def test_epsilon_sign_identity_exhaustive():
    # for x < y not in J the two insertion orders differ in parity;
    # this is what makes the assembled differential square to zero
    for m in range(1, 11):
        for J in range(1 << m):
            free = [x for x in range(1, m + 1) if not J >> (x - 1) & 1]
            for i, x in enumerate(free):
                for y in free[i + 1:]:
                    a = epsilon(J, x) + epsilon(J | (1 << (x - 1)), y)
                    b = epsilon(J, y) + epsilon(J | (1 << (y - 1)), x)
                    assert (a + b) % 2 == 1


def test_assemble_constant_m2_matrices():
    # frozen from expanding the construction by hand at m = 2
    C = assemble(constant_functor(2))
    assert C.d_matrix(0).data == [[1], [1]]
    assert C.d_matrix(1).data == [[-1, 1]]
    assert (C.d_matrix(1) @ C.d_matrix(0)).is_zero()


def test_assemble_zero_maps():
    dims = {J: 1 for J in range(1 << 3)}
    F = BasedFunctor(3, dims, {})
    C = assemble(F)
    for l in range(3):
        assert C.d_matrix(l).is_zero()


def test_assemble_reports_offending_square():
    # break one square of the constant functor on m = 2
    F = constant_functor(2)
    F.maps[(0, 1)] = [[2]]
    with pytest.raises(NonFunctorialError) as exc:
        assemble(F)
    assert exc.value.square == (0, 1, 2)


def test_dd_zero_across_library():
    for K in [cycle(4), simplex(3), skeleton(4, 1),
              from_facets(2, [{1}, {2}])]:
        functors = [constant_functor(K.m), functor_A(K.m), functor_face(K),
                    functor_H(K, -1, True), functor_H(K, 0, True),
                    functor_H(K, 0, False)]
        for F in functors:
            C = assemble(F)
            for l in range(K.m):
                assert (C.d_matrix(l + 1) @ C.d_matrix(l)).is_zero(), \
                    (K, F.name, l)


def test_constant_functor_acyclic():
    for m in range(1, 9):
        groups = poset_cohomology(constant_functor(m), "Z", check=False)
        assert all(g.is_zero() for g in groups), m


def test_functor_A_cohomology():
    for m in (1, 2, 3, 5):
        groups = poset_cohomology(functor_A(m), "Z")
        assert groups[1] == AbelianGroup(1)
        assert all(g.is_zero() for l, g in enumerate(groups) if l != 1)


def test_functor_A_composes_to_identity():
    F = functor_A(4)
    # along any chain of covers the maps stay the 1x1 identity
    assert F.map_rows(0b0001, 2) == [[1]]
    assert F.map_rows(0b0011, 3) == [[1]]
    assert F.map_rows(0b0111, 4) == [[1]]


def test_face_functor_matches_reduced_coboundary():
    # strict matrix equality, including block order and signs
    for K in [cycle(3), cycle(5), simplex(3)]:
        C = assemble(functor_face(K))
        ch = chain_complex(K, None, reduced=True)
        for l in range(K.m):
            assert C.d_matrix(l) == ch.boundary_matrix(l).transpose()


def test_face_functor_cohomology_oracle():
    # H^l of the face functor is reduced simplicial cohomology, shifted
    cases = [cycle(3), cycle(6), simplex(4), skeleton(4, 0),
             from_facets(2, [{1}, {2}])]
    for K in cases:
        got = poset_cohomology(functor_face(K), "Z")
        oracle = reduced_cohomology(K)
        for l in range(K.m + 1):
            expect = oracle.get(l - 1, AbelianGroup(0))
            assert got[l] == expect, (K, l)


def test_face_functor_two_points_value():
    F = functor_face(from_facets(2, [{1}, {2}]))
    assert F.dim(0b11) == 0 and F.dim(0b01) == 1


def test_cone_certificate():
    assert cone_acyclicity_check(constant_functor(3)).certified
    assert cone_acyclicity_check(constant_functor(3)).direction == 1
    assert not cone_acyclicity_check(functor_A(3)).certified
    # H_0 of a simplex: maps out of the empty set are 0 -> Z, not iso
    F = functor_H(simplex(3), 0, False)
    assert not cone_acyclicity_check(F).certified


def test_cone_certificate_implies_acyclic():
    for m in (2, 3, 4):
        F = constant_functor(m, rank=2)
        cert = cone_acyclicity_check(F)
        assert cert.certified
        assert all(g.is_zero() for g in poset_cohomology(F, "Z", check=False))


def test_regime_violation():
    with pytest.raises(RegimeError):
        functor_H(cycle(4), 1, False, "Z")
    # but field coefficients are fine
    functor_H(cycle(4), 1, False, "Q")
    functor_H(cycle(4), 1, False, GF(2))


def test_field_coefficients_of_integer_functor():
    # scalar extension of the face complex of the 3-cycle: circle Betti
    F = functor_face(cycle(3))
    dims_q = poset_cohomology(F, "Q")
    assert dims_q == [0, 0, 1, 0]
    dims_2 = poset_cohomology(F, GF(2))
    assert dims_2 == [0, 0, 1, 0]


def test_poset_cohomology_field_matches_free_rank():
    for K in [cycle(4), cycle(5)]:
        F = functor_H(K, 0, True)
        z = poset_cohomology(F, "Z")
        q = poset_cohomology(F, "Q")
        assert [g.free_rank for g in z] == q


def test_unreduced_degree_minus_one_is_zero_functor():
    F = functor_H(cycle(4), -1, False)
    assert not F.dims
    assert all(d == 0 for d in poset_cohomology(F, "Q", check=False))
