import pytest

from veronese import (
    CircularComposition,
    DomainError,
    classify_composition,
    distinct_types,
    enumerate_facets_circular,
    facet_count,
    is_cross_polytope,
    is_cyclic_type,
    is_k_neighbourly,
    is_simplex,
    is_stacked_family,
    vertex_set,
)


def test_is_simplex():
    assert is_simplex(CircularComposition(3, (1, 1, 2)))
    assert is_simplex(CircularComposition(4, (1, 1, 1, 4)))
    assert is_simplex(CircularComposition(4, (5,), dividers=0))
    assert not is_simplex(CircularComposition(4, (3, 4)))


def test_is_cross_polytope():
    c = CircularComposition(4, (2, 3, 2, 3))
    assert is_cross_polytope(c)
    assert len(enumerate_facets_circular(c).facets) == 16
    assert is_cross_polytope(CircularComposition(3, (2, 2, 2)))
    assert not is_cross_polytope(CircularComposition(3, (1, 2, 2)))
    assert not is_cross_polytope(CircularComposition(4, (3, 4)))


def test_cross_polytope_structure():
    # whenever recognized: 2^d facets on 2d vertices
    for d, arcs in [(3, (2, 2, 3)), (4, (2, 2, 2, 2)), (5, (2, 3, 2, 2, 4))]:
        c = CircularComposition(d, arcs)
        assert is_cross_polytope(c)
        assert facet_count(c) == 2 ** d
        assert len(vertex_set(c)) == 2 * d


def test_is_stacked_family():
    assert is_stacked_family(CircularComposition(4, (1, 9)))
    assert is_stacked_family(CircularComposition(4, (9, 1)))
    assert facet_count(CircularComposition(4, (1, 9))) == 20
    assert not is_stacked_family(CircularComposition(4, (10,), dividers=0))
    assert not is_stacked_family(CircularComposition(4, (2, 8)))
    with pytest.raises(DomainError):
        is_stacked_family(CircularComposition(2, (5,), dividers=0))


def test_stacked_facet_counts():
    # the family hits the lower-bound facet count (d-1)n - (d+1)(d-2)
    from veronese import SignedDecomposition, induce_composition

    for d in (3, 4, 5, 6):
        for n in range(d + 2, 13):
            sizes = (1,) * (d - 3) + (n - (d - 3),)
            c = induce_composition(SignedDecomposition(sizes, 1, d))
            assert is_stacked_family(c)
            assert facet_count(c) == (d - 1) * n - (d + 1) * (d - 2)


def test_is_k_neighbourly():
    assert is_k_neighbourly(CircularComposition(4, (9,), dividers=0), 2)
    assert is_k_neighbourly(CircularComposition(5, (9,)), 2)
    assert not is_k_neighbourly(CircularComposition(4, (3, 4)), 2)
    assert is_k_neighbourly(CircularComposition(4, (2, 4)), 2)
    with pytest.raises(DomainError):
        is_k_neighbourly(CircularComposition(4, (3, 4)), 3)
    with pytest.raises(DomainError):
        is_k_neighbourly(CircularComposition(4, (3, 4)), 0)


def test_two_even_arcs_not_neighbourly():
    # d even >= 4, two arcs, n > d+2: never neighbourly
    for d in (4, 6):
        for n in range(d + 3, d + 7):
            for first in range(1, n // 2 + 1):
                c = CircularComposition(d, (first, n - first))
                assert not is_k_neighbourly(c, d // 2)


def test_is_cyclic_type():
    assert is_cyclic_type(CircularComposition(3, (7,)))
    assert is_cyclic_type(CircularComposition(3, (1, 2, 2)))
    assert is_cyclic_type(CircularComposition(4, (2, 4)))
    assert not is_cyclic_type(CircularComposition(4, (3, 3)))
    assert not is_cyclic_type(CircularComposition(3, (2, 2, 2)))


def test_three_dimensional_dichotomy():
    for n in range(4, 11):
        for _, c in distinct_types(3, n):
            assert is_cyclic_type(c) or is_cross_polytope(c)


def test_simplex_facet_count():
    for d, arcs in [(3, (1, 1, 4)), (4, (1, 1, 1, 3)), (5, (1, 1, 1, 1, 2))]:
        c = CircularComposition(d, arcs)
        if is_simplex(c):
            assert facet_count(c) == d + 1


def test_classify_output_shape():
    out = classify_composition(CircularComposition(4, (3, 4)))
    assert out == {
        "vertices": 7,
        "facets": 12,
        "simplex": False,
        "cross": False,
        "stacked_family": False,
        "cyclic": False,
        "neighbourly": False,
    }
