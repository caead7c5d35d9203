import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from posethom.simplicial import (
    SimplicialComplex, as_mask, cycle, enumerate_complexes, from_facets,
    from_json, from_text, generate, mask_of, random_complex, simplex,
    skeleton, vertices_of,
)


def test_mask_round_trip():
    assert mask_of([1, 3]) == 0b101
    assert vertices_of(0b101) == [1, 3]
    assert mask_of([]) == 0


def test_from_facets_triangle_boundary_is_3_cycle():
    K = from_facets(3, [{1, 2}, {2, 3}, {1, 3}])
    assert K == cycle(3)
    assert sorted(K.faces) == [0, 0b001, 0b010, 0b011, 0b100, 0b101, 0b110]


def test_from_facets_two_points():
    K = from_facets(2, [{1}, {2}])
    assert sorted(K.faces) == [0, 0b01, 0b10]


def test_from_facets_full_simplex():
    K = from_facets(3, [{1, 2, 3}])
    assert len(K.faces) == 8
    assert K == simplex(3)


def test_from_facets_rejects_ghost_vertex():
    with pytest.raises(ValueError, match="appear in no facet"):
        from_facets(3, [{1, 2}])


def test_from_facets_rejects_out_of_range():
    with pytest.raises(ValueError):
        from_facets(2, [{1, 3}])
    with pytest.raises(ValueError):
        SimplicialComplex(0, [0])
    with pytest.raises(ValueError):
        SimplicialComplex(25, [0])


def test_full_subcomplex_of_cycle_diagonal():
    K = cycle(4)
    sub = K.full_subcomplex({1, 3})
    assert sorted(sub.faces) == [0, 0b001, 0b100]


def test_full_subcomplex_empty_and_identity():
    K = cycle(5)
    assert sorted(K.full_subcomplex(0).faces) == [0]
    assert K.full_subcomplex((1 << 5) - 1) == K


def test_neighbourliness_of_cycles():
    assert cycle(3).is_neighbourly()
    assert not cycle(5).is_neighbourly()
    assert simplex(4).is_neighbourly()


def test_p_neighbourly():
    assert cycle(4).is_p_neighbourly(0)
    assert not cycle(4).is_p_neighbourly(1)
    assert simplex(4).is_p_neighbourly(2)
    with pytest.raises(ValueError):
        cycle(4).is_p_neighbourly(-1)


def test_neighbourly_matches_1_neighbourly():
    for K in [cycle(3), cycle(4), simplex(3), skeleton(4, 1)]:
        assert K.is_neighbourly() == K.is_p_neighbourly(1)


def test_generate_cycle_4():
    K, facets = generate("cycle:4")
    assert sorted(K.facets) == sorted(
        [mask_of(e) for e in ([1, 2], [2, 3], [3, 4], [1, 4])])
    assert facets == [mask_of(e) for e in ([1, 2], [2, 3], [3, 4], [1, 4])]


def test_generate_skeleton_points():
    K, _ = generate("skeleton:4,0")
    assert K.facets == (0b0001, 0b0010, 0b0100, 0b1000)
    assert K.dim == 0


def test_generate_rejects_small_cycle():
    with pytest.raises(ValueError):
        generate("cycle:2")
    with pytest.raises(ValueError):
        generate("dodecahedron:3")


def test_random_complex_is_deterministic_and_closed():
    K1, f1 = random_complex(6, 2, 0.5, 1)
    K2, f2 = random_complex(6, 2, 0.5, 1)
    assert K1 == K2 and f1 == f2
    K1.validate()
    assert K1.vertex_support == (1 << 6) - 1
    K3, _ = random_complex(6, 2, 0.5, 2)
    assert K3 != K1  # astronomically unlikely to collide


def test_json_round_trip():
    K = cycle(5)
    text = K.to_json()
    assert from_json(text) == K
    gen_text = generate("cycle:5")
    K2, facets = gen_text
    assert K2.to_json(facets) == \
        '{"m":5,"facets":[[1,2],[2,3],[3,4],[4,5],[1,5]]}'


def test_text_format():
    K = from_text("1 2\n2 3\n1 3\n")
    assert K == cycle(3)
    with pytest.raises(ValueError):
        from_text("   \n")


def test_from_json_rejects_malformed():
    with pytest.raises(ValueError):
        from_json("{not json")
    with pytest.raises(ValueError):
        from_json('{"m": "three", "facets": []}')


def test_validate_catches_closure_violation():
    K = cycle(3)
    broken = object.__new__(SimplicialComplex)
    object.__setattr__  # noqa: B018  (slots assignment below)
    broken.m = 3
    broken.faces = frozenset([0, 0b001, 0b010, 0b011, 0b110])
    broken._by_card = {0: [0], 1: [1, 2], 2: [3, 6]}
    broken._facets = None
    with pytest.raises(ValueError, match="not downward closed"):
        broken.validate()


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 6), st.data())
def test_full_subcomplex_composes(m, data):
    K, _ = random_complex(m, min(2, m - 1), 0.6, data.draw(st.integers(0, 99)))
    full = (1 << m) - 1
    L = data.draw(st.integers(0, full))
    J = data.draw(st.integers(0, full)) & L
    assert K.full_subcomplex(L).full_subcomplex(J) == K.full_subcomplex(J)


@settings(max_examples=40, deadline=None)
@given(st.integers(2, 7), st.integers(0, 999))
def test_random_generator_invariants(m, seed):
    K, _ = random_complex(m, min(2, m - 1), 0.4, seed)
    K.validate()
    assert 0 in K.faces
    assert K.vertex_support == (1 << m) - 1


def test_enumerate_complexes_small_counts():
    # m=1: only the point. m=2: two points or an edge. m=3: edge count
    # 0..3 plus the filled triangle.
    assert len(enumerate_complexes(1)) == 1
    assert len(enumerate_complexes(2)) == 2
    assert len(enumerate_complexes(3)) == 5
    labeled = enumerate_complexes(3, up_to_iso=False)
    assert len(labeled) == 9  # 2^3 edge sets, +1 for the filled triangle
    for K in labeled:
        K.validate()


def test_enumerate_complexes_m4_all_valid():
    reps = enumerate_complexes(4)
    assert len(reps) == len({K.faces for K in reps})
    for K in reps:
        K.validate()
        assert K.vertex_support == 0b1111
    # representatives are pairwise non-isomorphic by construction; spot
    # check the extremes are present
    assert any(K == skeleton(4, 0) for K in reps)
    assert any(K == simplex(4) for K in reps)


def test_as_mask_accepts_mask_and_iterable():
    assert as_mask(4, 0b101) == 0b101
    assert as_mask(4, [1, 3]) == 0b101
    with pytest.raises(ValueError):
        as_mask(2, 0b100)
