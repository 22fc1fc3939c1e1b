"""Recognizers for named combinatorial types of a composition."""

from __future__ import annotations

from itertools import combinations

from .canonical import certificate
from .circular import (
    CircularComposition,
    canonical_arcs,
    enumerate_facets_circular,
    induce_composition,
    vertex_set,
)
from .errors import DomainError
from .geometry import SignedDecomposition


def is_simplex(c: CircularComposition) -> bool:
    return len(vertex_set(c)) == c.d + 1


def is_cross_polytope(c: CircularComposition) -> bool:
    """Cross-polytope iff every point is a divider endpoint shared with
    no other divider: d dividers, all arcs of size at least 2."""
    return c.l == c.d and min(c.arcs) >= 2


def is_stacked_family(c: CircularComposition) -> bool:
    """Membership in the one known stacked family: all but one interval
    a singleton on the line.  Not a general stackedness test.

    Compared by certificate so the answer depends only on the
    combinatorial type, with the arc pattern as a fast path.
    """
    if c.d < 3:
        raise DomainError(f"stacked types need d >= 3, got d={c.d}")
    d = c.d
    nv = len(vertex_set(c))
    sizes = (1,) * (d - 3) + (nv - (d - 3),)
    reference = induce_composition(SignedDecomposition(sizes, 1, d))
    if canonical_arcs(c) == canonical_arcs(reference):
        return True
    mine = certificate(enumerate_facets_circular(c).restrict_to_vertices())
    ref = certificate(enumerate_facets_circular(reference).restrict_to_vertices())
    return mine == ref


def is_cyclic_type(c: CircularComposition) -> bool:
    """Compare certificates with the cyclic polytope on the same number
    of vertices (dividerless for even d, one divider for odd d)."""
    nv = len(vertex_set(c))
    if c.d % 2 == 0:
        reference = CircularComposition(c.d, (nv,), dividers=0)
    else:
        reference = CircularComposition(c.d, (nv,))
    mine = certificate(enumerate_facets_circular(c).restrict_to_vertices())
    ref = certificate(enumerate_facets_circular(reference))
    return mine == ref


def is_k_neighbourly(c: CircularComposition, k: int) -> bool:
    """Every k-subset of vertices lies in some facet."""
    if not 1 <= k <= c.d // 2:
        raise DomainError(f"k must be in 1..{c.d // 2}, got {k}")
    facets = [set(f) for f in enumerate_facets_circular(c).facets]
    verts = vertex_set(c)
    return all(
        any(set(sub) <= f for f in facets)
        for sub in combinations(verts, k)
    )


def classify_composition(c: CircularComposition) -> dict:
    fc = enumerate_facets_circular(c)
    return {
        "vertices": len(vertex_set(c)),
        "facets": len(fc.facets),
        "simplex": is_simplex(c),
        "cross": is_cross_polytope(c),
        "stacked_family": is_stacked_family(c) if c.d >= 3 else False,
        "cyclic": is_cyclic_type(c),
        "neighbourly": is_k_neighbourly(c, c.d // 2) if c.d >= 2 else True,
    }
