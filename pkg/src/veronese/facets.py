"""Combinatorial facet characterizations on the line.

Two equivalent descriptions of the facets of a polytope generated along
a chart curve, both phrased purely in terms of the signed decomposition
of the parameter set:

* complements of facets are exactly the sign/parity-alternating index
  sequences (``is_sigma_pa`` / ``enumerate_facets_line``),
* a d-subset is a facet iff it splits uniquely into boundary choices,
  extreme endpoints and consecutive pairs (``s123_decompose``).

Positions are 1-based internally (the parity conditions are stated for
1-based sequences); everything exported through JSON is 0-based.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import accumulate

from .errors import (
    DimensionMismatchError,
    UnderdeterminedInstanceError,
)


@dataclass(frozen=True)
class FacetComplex:
    """A set of d-subsets of {0,...,n_labels-1}, stored canonically."""

    n_labels: int
    d: int
    facets: tuple

    def __post_init__(self):
        canon = tuple(sorted(set(tuple(sorted(f)) for f in self.facets)))
        for f in canon:
            if len(f) != self.d or len(set(f)) != self.d:
                raise DimensionMismatchError(
                    f"facet {f} does not have {self.d} distinct elements"
                )
            if f and (f[0] < 0 or f[-1] >= self.n_labels):
                raise IndexError(f"facet {f} out of label range")
        object.__setattr__(self, "facets", canon)

    @property
    def vertex_labels(self):
        """Sorted labels that appear in at least one facet."""
        return tuple(sorted(set().union(*map(set, self.facets)) if self.facets else set()))

    def restrict_to_vertices(self) -> "FacetComplex":
        """Relabel onto 0..m-1 where m is the number of used labels."""
        verts = self.vertex_labels
        new = {v: i for i, v in enumerate(verts)}
        return FacetComplex(
            len(verts), self.d,
            tuple(tuple(new[v] for v in f) for f in self.facets),
        )


class _Indexing:
    """Interval bookkeeping for 1-based positions of a decomposition."""

    def __init__(self, decomposition):
        self.D = decomposition
        self.sizes = decomposition.sizes
        self.n = sum(self.sizes)
        self.k = len(self.sizes) - 1
        # ends[j] = last position of interval j (1-based intervals)
        self.ends = list(accumulate(self.sizes))
        self.starts = [e - s + 1 for e, s in zip(self.ends, self.sizes)]

    def interval_of(self, pos: int) -> int:
        for j, end in enumerate(self.ends, start=1):
            if pos <= end:
                return j
        raise IndexError(f"position {pos} out of range 1..{self.n}")

    def sign_at(self, pos: int) -> int:
        j = self.interval_of(pos)
        return self.D.first_sign * (-1) ** (j - 1)


def is_sigma_pa(decomposition, positions) -> bool:
    """Test the alternation condition for an increasing 1-based sequence:
    consecutive entries carry equal decomposition signs iff their
    positions have different parities."""
    idx = _Indexing(decomposition)
    seq = list(positions)
    if any(not 1 <= p <= idx.n for p in seq):
        raise IndexError(f"positions out of range 1..{idx.n}: {seq}")
    if any(a >= b for a, b in zip(seq, seq[1:])):
        raise IndexError(f"positions not strictly increasing: {seq}")
    for a, b in zip(seq, seq[1:]):
        same_sign = idx.sign_at(a) == idx.sign_at(b)
        same_parity = (a - b) % 2 == 0
        if same_sign == same_parity:
            return False
    return True


def enumerate_facets_line(decomposition) -> FacetComplex:
    """All facets of the polytope whose chart induces the decomposition,
    found as complements of alternating sequences of length n-d."""
    idx = _Indexing(decomposition)
    d = decomposition.d
    n = idx.n
    if n <= d:
        raise UnderdeterminedInstanceError(
            f"need more than d={d} generating points, got {n}"
        )
    target = n - d
    complements = []

    def extend(seq, nxt):
        if len(seq) == target:
            complements.append(tuple(seq))
            return
        # feasibility: enough positions left to finish the sequence
        for p in range(nxt, n - (target - len(seq)) + 2):
            if seq:
                a = seq[-1]
                same_sign = idx.sign_at(a) == idx.sign_at(p)
                same_parity = (a - p) % 2 == 0
                if same_sign == same_parity:
                    continue
            seq.append(p)
            extend(seq, p + 1)
            seq.pop()

    extend([], 1)
    full = set(range(1, n + 1))
    facets = [tuple(q - 1 for q in sorted(full.difference(c))) for c in complements]
    return FacetComplex(n, d, tuple(facets))


@dataclass(frozen=True)
class S123:
    """Facet certificate: boundary picks, extreme endpoints, pairs."""

    s1: tuple
    s2: tuple
    s3: tuple  # tuple of (a, a+1) position pairs


def _maximal_runs(positions):
    runs = []
    for p in positions:
        if runs and runs[-1][-1] == p - 1:
            runs[-1].append(p)
        else:
            runs.append([p])
    return runs


def _decompose_run(idx: _Indexing, run) -> tuple:
    """Split one maximal run J of S into (J1 dict, J2 set, J3 set).

    J1 picks, per sign change j touched by the run, one of the two
    positions flanking the change; J2 may absorb an extreme endpoint of
    the whole ground set; J3 is the rest, which must pair up later.
    """
    jset = set(run)
    k = idx.k
    touched = [
        j for j in range(1, k + 1)
        if idx.ends[j - 1] in jset or idx.starts[j] in jset
    ]
    j1 = {}
    if 1 in jset:
        # run starts at the very first point: resolve picks right-to-left
        nxt = None
        for j in reversed(touched):
            upper = jset.intersection(
                range(idx.starts[j], idx.ends[j] + 1)
            ).difference({nxt})
            j1[j] = idx.starts[j] if len(upper) % 2 == 1 else idx.ends[j - 1]
            nxt = j1[j]
        j2 = set()
        used = set(j1.values())
        first_int = jset.intersection(range(idx.starts[0], idx.ends[0] + 1))
        if len(first_int.difference(used)) % 2 == 1:
            j2.add(1)
    else:
        prev = None
        for j in touched:
            lower = jset.intersection(
                range(idx.starts[j - 1], idx.ends[j - 1] + 1)
            ).difference({prev})
            j1[j] = idx.ends[j - 1] if len(lower) % 2 == 1 else idx.starts[j]
            prev = j1[j]
        j2 = set()
        used = set(j1.values())
        last_int = jset.intersection(range(idx.starts[k], idx.ends[k] + 1))
        if idx.n in jset and len(last_int.difference(used)) % 2 == 1:
            j2.add(idx.n)
    j3 = jset.difference(j1.values()).difference(j2)
    return j1, j2, j3


def s123_decompose(decomposition, positions):
    """Decompose a candidate facet S (1-based positions) into the three
    certifying parts, or return None when S is not a facet.

    The construction is per maximal run of S, followed by a validation
    of the global conditions; validation failure is exactly non-facetness.
    """
    idx = _Indexing(decomposition)
    d = decomposition.d
    s = sorted(set(positions))
    if len(s) != d or len(set(positions)) != len(list(positions)):
        raise DimensionMismatchError(f"expected {d} distinct positions")
    if any(not 1 <= p <= idx.n for p in s):
        raise IndexError(f"positions out of range 1..{idx.n}")
    k = idx.k

    s1, s2, s3 = {}, set(), set()
    for run in _maximal_runs(s):
        j1, j2, j3 = _decompose_run(idx, run)
        for j, pick in j1.items():
            if j in s1 or pick not in set(run):
                return None
            s1[j] = pick
        s2 |= j2
        s3 |= j3

    # one pick per sign change, all distinct
    if sorted(s1) != list(range(1, k + 1)) or len(set(s1.values())) != k:
        return None
    if not s2 <= {1, idx.n} or (d - k - len(s2)) % 2 != 0:
        return None
    # the rest must tile into consecutive pairs inside single intervals
    rest = sorted(s3)
    if len(rest) != d - k - len(s2):
        return None
    pairs = []
    for a, b in zip(rest[0::2], rest[1::2]):
        if b != a + 1 or idx.interval_of(a) != idx.interval_of(b):
            return None
        pairs.append((a, b))
    if 2 * len(pairs) != len(rest):
        return None
    return S123(
        tuple(s1[j] for j in sorted(s1)),
        tuple(sorted(s2)),
        tuple(pairs),
    )
