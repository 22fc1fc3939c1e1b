import random

import pytest
from hypothesis import given, settings, strategies as st

from veronese import (
    CircularComposition,
    DegenerateComplexError,
    FacetComplex,
    SignedDecomposition,
    certificate,
    complex_invariant,
    count_types,
    distinct_types,
    enumerate_compositions,
    enumerate_facets_circular,
    induce_composition,
    table_report,
)

from helpers import brute_force_isomorphic, random_composition


def _relabel(fc: FacetComplex, perm):
    return FacetComplex(
        fc.n_labels, fc.d,
        tuple(tuple(perm[v] for v in f) for f in fc.facets),
    )


def test_certificate_relabeling_invariance():
    rng = random.Random(5)
    for _ in range(15):
        c = random_composition(rng, rng.randint(2, 5), rng.randint(6, 9))
        fc = enumerate_facets_circular(c).restrict_to_vertices()
        perm = list(range(fc.n_labels))
        rng.shuffle(perm)
        assert certificate(fc) == certificate(_relabel(fc, perm))


def test_certificate_empty_complex():
    with pytest.raises(DegenerateComplexError):
        certificate(FacetComplex(3, 2, ()))


def test_certificate_merged_intervals():
    a = induce_composition(SignedDecomposition((2, 7), 1, 4))
    b = induce_composition(SignedDecomposition((3, 2, 4), 1, 4))
    ca = certificate(enumerate_facets_circular(a).restrict_to_vertices())
    cb = certificate(enumerate_facets_circular(b).restrict_to_vertices())
    assert ca == cb


def test_certificate_six_vertices_dimension_four():
    l0 = enumerate_facets_circular(CircularComposition(4, (6,), dividers=0))
    even = enumerate_facets_circular(CircularComposition(4, (2, 4)))
    odd = enumerate_facets_circular(CircularComposition(4, (3, 3)))
    assert certificate(l0) == certificate(even)
    assert certificate(l0) != certificate(odd)


@settings(max_examples=25, deadline=None)
@given(st.integers(0, 10 ** 6))
def test_certificate_soundness_small(seed):
    rng = random.Random(seed)
    c1 = random_composition(rng, rng.randint(2, 4), rng.randint(5, 8))
    c2 = random_composition(rng, c1.d, rng.randint(5, 8))
    f1 = enumerate_facets_circular(c1).restrict_to_vertices()
    f2 = enumerate_facets_circular(c2).restrict_to_vertices()
    if f1.n_labels > 9 or f2.n_labels > 9:
        return
    assert (certificate(f1) == certificate(f2)) == brute_force_isomorphic(f1, f2)


def test_vertex_reduction_soundness():
    # when every point is a divider endpoint, growing an arc beyond 2
    # only adds non-vertices
    for d, arcs, grown in [
        (3, (2, 2, 2), (2, 5, 2)),
        (4, (2, 2, 1, 2), (2, 3, 1, 4)),
        (4, (1, 2, 1, 2), (1, 2, 1, 6)),
    ]:
        a = enumerate_facets_circular(CircularComposition(d, arcs))
        b = enumerate_facets_circular(CircularComposition(d, grown))
        assert certificate(a.restrict_to_vertices()) \
            == certificate(b.restrict_to_vertices())


def test_complex_invariant_is_invariant():
    rng = random.Random(9)
    for _ in range(10):
        c = random_composition(rng, rng.randint(2, 5), rng.randint(6, 10))
        fc = enumerate_facets_circular(c).restrict_to_vertices()
        perm = list(range(fc.n_labels))
        rng.shuffle(perm)
        assert complex_invariant(fc) == complex_invariant(_relabel(fc, perm))


def test_enumerate_compositions_examples():
    d3 = enumerate_compositions(3, 6)
    assert sorted(c.arcs for c in d3) == [(1, 1, 4), (1, 2, 3), (2, 2, 2), (6,)]
    d4 = enumerate_compositions(4, 5)
    assert sorted((c.dividers, c.arcs) for c in d4) == [
        (0, (5,)), (2, (1, 4)), (2, (2, 3)), (4, (1, 1, 1, 2)),
    ]


def test_count_types_examples():
    assert count_types(4, 8) == 6
    assert count_types(3, 6) == 2
    assert all(count_types(3, n) == 1 for n in range(7, 13))


def test_stacked_uniqueness_small():
    from veronese import is_stacked_family

    for d in (4, 5):
        for n in range(d + 1, d + 5):
            stacked = [
                c for _, c in distinct_types(d, n) if is_stacked_family(c)
            ]
            assert len(stacked) == 1


def test_table_report_shape():
    rows = table_report([3], [4, 5, 6])
    assert [r["count"] for r in rows] == [1, 1, 2]
    row = rows[-1]
    assert row["d"] == 3 and row["n"] == 6
    for t in row["types"]:
        assert set(t) == {"arcs", "dividers", "certificate", "flags"}
        bytes.fromhex(t["certificate"])
