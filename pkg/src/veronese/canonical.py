"""Canonical certificates and combinatorial-type enumeration.

A certificate is a relabeling-invariant encoding of a facet complex:
two complexes get equal certificates exactly when some bijection of
their labels maps one facet set onto the other.  It is computed by
iterated partition refinement on the vertex-facet incidence structure,
with backtracking individualization on the residual symmetric cells.
"""

from __future__ import annotations

from itertools import combinations

from .circular import (
    CircularComposition,
    canonical_arcs,
    enumerate_facets_circular,
    vertex_set,
)
from .errors import DegenerateComplexError
from .facets import FacetComplex


def _refine(facets, colors):
    """Refine vertex colors by incident-facet fingerprints to a fixpoint.

    A facet's fingerprint is the sorted color multiset of its vertices;
    a vertex signature keeps its old color first, so each round refines
    the previous partition.
    """
    n = len(colors)
    while True:
        prints = [tuple(sorted(colors[v] for v in f)) for f in facets]
        incident = [[] for _ in range(n)]
        for f, fp in zip(facets, prints):
            for v in f:
                incident[v].append(fp)
        sigs = [(colors[v], tuple(sorted(incident[v]))) for v in range(n)]
        order = {s: i for i, s in enumerate(sorted(set(sigs)))}
        new = [order[s] for s in sigs]
        if new == colors:
            return new
        colors = new


def _encode(facets, colors):
    relabeled = sorted(tuple(sorted(colors[v] for v in f)) for f in facets)
    return tuple(relabeled)


def certificate(fc: FacetComplex) -> bytes:
    """Canonical byte encoding of a vertex-reduced facet complex."""
    if not fc.facets:
        raise DegenerateComplexError("empty facet complex has no certificate")
    fc = fc.restrict_to_vertices()
    n = fc.n_labels
    facets = [tuple(f) for f in fc.facets]
    best = [None]

    def search(colors):
        counts = {}
        for color in colors:
            counts[color] = counts.get(color, 0) + 1
        target = next((c for c in sorted(counts) if counts[c] > 1), None)
        if target is None:
            enc = _encode(facets, colors)
            if best[0] is None or enc < best[0]:
                best[0] = enc
            return
        for v in range(n):
            if colors[v] != target:
                continue
            branched = [(c, 1) if u != v else (c, 0) for u, c in enumerate(colors)]
            order = {s: i for i, s in enumerate(sorted(set(branched)))}
            search(_refine(facets, [order[s] for s in branched]))

    search(_refine(facets, [0] * n))
    body = ";".join("-".join(map(str, f)) for f in best[0])
    return f"{n}:{fc.d}:{body}".encode("ascii")


def complex_invariant(fc: FacetComplex) -> tuple:
    """Cheap relabeling-invariant filter used before full certificates."""
    fc = fc.restrict_to_vertices()
    degrees = [0] * fc.n_labels
    for f in fc.facets:
        for v in f:
            degrees[v] += 1
    sets = [set(f) for f in fc.facets]
    intersections = sorted(
        len(a & b) for a, b in combinations(sets, 2)
    )
    return (
        fc.n_labels,
        len(fc.facets),
        tuple(sorted(degrees)),
        tuple(intersections),
    )


def _positive_compositions(total, parts):
    if parts == 1:
        if total >= 1:
            yield (total,)
        return
    for first in range(1, total - parts + 2):
        for rest in _positive_compositions(total - first, parts - 1):
            yield (first,) + rest


def enumerate_compositions(d: int, n_generators: int):
    """All compositions of n points with l = d, d-2, ... dividers (down
    to 0 or 1 by parity), one representative per dihedral class."""
    out = []
    for l in range(d % 2, d + 1, 2):
        if l == 0:
            out.append(CircularComposition(d, (n_generators,), dividers=0))
            continue
        seen = set()
        for arcs in _positive_compositions(n_generators, l):
            canon = canonical_arcs(CircularComposition(d, arcs))
            if canon.arcs not in seen:
                seen.add(canon.arcs)
                out.append(canon)
    return out


def _type_candidates(d: int, n_vertices: int):
    """Compositions covering every combinatorial type on n vertices:
    fewer than d dividers at full size (all points are vertices), plus
    d dividers with arcs capped at 2 (larger arcs add no vertices)."""
    candidates = [
        c for c in enumerate_compositions(d, n_vertices) if c.l < d
    ]
    if d < n_vertices <= 2 * d:
        seen = set()
        for arcs in _positive_compositions(n_vertices, d):
            if max(arcs) > 2:
                continue
            canon = canonical_arcs(CircularComposition(d, arcs))
            if canon.arcs not in seen:
                seen.add(canon.arcs)
                candidates.append(canon)
    return candidates


def distinct_types(d: int, n_vertices: int):
    """One representative composition per combinatorial type, each with
    its certificate, sorted by certificate bytes."""
    groups = {}
    for c in _type_candidates(d, n_vertices):
        fc = enumerate_facets_circular(c).restrict_to_vertices()
        groups.setdefault(complex_invariant(fc), []).append((c, fc))
    found = {}
    for members in groups.values():
        for c, fc in members:
            cert = certificate(fc)
            if cert not in found:
                found[cert] = c
    return sorted(found.items())


def count_types(d: int, n_vertices: int) -> int:
    return len(distinct_types(d, n_vertices))


def table_report(d_values, n_values):
    """Rows of (d, n, count, types) with per-type classification flags."""
    from .classify import classify_composition

    rows = []
    for d in d_values:
        for n in n_values:
            if n < d + 1:
                continue
            types = [
                {
                    "arcs": list(c.arcs),
                    "dividers": c.dividers,
                    "certificate": cert.hex(),
                    "flags": classify_composition(c),
                }
                for cert, c in distinct_types(d, n)
            ]
            rows.append({"d": d, "n": n, "count": len(types), "types": types})
    return rows
