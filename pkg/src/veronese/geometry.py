"""Chart curves, the two geometric facet tests, and the correspondence
between charts and signed decompositions of the parameter set.

A chart xi defines the denominator polynomial q(t) = sum xi_i t^i and
the curve t -> (1,t,...,t^d)/q(t).  The polytope generated by the curve
points over a finite parameter set T is simplicial, and its facets can
be read off the signs of either the rational functions lambda_S or the
determinants of curve-point matrices; both tests live here and share no
code beyond rational arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, groupby

from .errors import (
    DimensionMismatchError,
    InvalidChartError,
    InvalidDecompositionError,
    InvalidInstanceError,
    PointAtInfinityError,
    UnderdeterminedInstanceError,
)
from .exact import elementary_symmetric, sign, sign_det
from .facets import FacetComplex


@dataclass(frozen=True)
class GroundSet:
    """Strictly increasing finite parameter set T."""

    params: tuple

    def __post_init__(self):
        ts = tuple(Fraction(t) for t in self.params)
        if any(a >= b for a, b in zip(ts, ts[1:])):
            raise InvalidInstanceError("parameters must be strictly increasing")
        object.__setattr__(self, "params", ts)

    @property
    def n(self) -> int:
        return len(self.params)


@dataclass(frozen=True)
class Chart:
    """Coefficient vector xi of the denominator polynomial, length d+1."""

    coords: tuple

    def __post_init__(self):
        cs = tuple(Fraction(x) for x in self.coords)
        if not cs or all(x == 0 for x in cs):
            raise InvalidChartError("chart must be nonzero")
        object.__setattr__(self, "coords", cs)

    @property
    def d(self) -> int:
        return len(self.coords) - 1


@dataclass(frozen=True)
class SignedDecomposition:
    """Maximal constant-sign intervals of q over T: sizes and the sign
    of the first interval.  Signs alternate, so one sign determines all."""

    sizes: tuple
    first_sign: int
    d: int

    def __post_init__(self):
        sizes = tuple(int(s) for s in self.sizes)
        if not sizes or any(s < 1 for s in sizes):
            raise InvalidDecompositionError(f"interval sizes must be positive: {sizes}")
        if self.first_sign not in (1, -1):
            raise InvalidDecompositionError(f"first_sign must be +-1: {self.first_sign}")
        if len(sizes) - 1 > self.d:
            raise InvalidDecompositionError(
                f"{len(sizes) - 1} sign changes exceed dimension {self.d}"
            )
        object.__setattr__(self, "sizes", sizes)

    @property
    def k(self) -> int:
        """Number of sign changes."""
        return len(self.sizes) - 1

    @property
    def n(self) -> int:
        return sum(self.sizes)


def q_eval(xi: Chart, t) -> Fraction:
    t = Fraction(t)
    acc = Fraction(0)
    for c in reversed(xi.coords):
        acc = acc * t + c
    return acc


def curve_point(xi: Chart, t) -> tuple:
    """The generating point (1,t,...,t^d)/q(t)."""
    t = Fraction(t)
    q = q_eval(xi, t)
    if q == 0:
        raise PointAtInfinityError(f"denominator vanishes at t={t}")
    return tuple(t ** i / q for i in range(xi.d + 1))


def lambda_eval(xi: Chart, s_values, t) -> Fraction:
    """prod_{s in S}(t-s) / q(t)."""
    t = Fraction(t)
    q = q_eval(xi, t)
    if q == 0:
        raise PointAtInfinityError(f"denominator vanishes at t={t}")
    p = Fraction(1)
    for s in s_values:
        p *= t - Fraction(s)
    return p / q


def _check_instance(xi: Chart, t_set: GroundSet):
    for t in t_set.params:
        if q_eval(xi, t) == 0:
            raise InvalidInstanceError(f"chart vanishes at parameter t={t}")


def facet_test_lambda(xi: Chart, t_set: GroundSet, s_values) -> bool:
    """Facet iff lambda_S has one constant nonzero sign on T minus S."""
    s = set(Fraction(v) for v in s_values)
    if len(s) != xi.d:
        raise DimensionMismatchError(f"expected a {xi.d}-subset, got {len(s)} values")
    _check_instance(xi, t_set)
    signs = set(
        sign(lambda_eval(xi, s, t)) for t in t_set.params if t not in s
    )
    return len(signs) == 1 and 0 not in signs


def facet_test_determinant(xi: Chart, t_set: GroundSet, s_values) -> bool:
    """Independent oracle: the hyperplane through the curve points of S
    keeps all remaining generating points strictly on one side."""
    s = sorted(set(Fraction(v) for v in s_values))
    if len(s) != xi.d:
        raise DimensionMismatchError(f"expected a {xi.d}-subset, got {len(s)} values")
    _check_instance(xi, t_set)
    base = [list(curve_point(xi, v)) for v in s]
    signs = set()
    for t in t_set.params:
        if t in s:
            continue
        signs.add(sign_det(base + [list(curve_point(xi, t))]))
    return len(signs) == 1 and 0 not in signs


def enumerate_facets_geometric(xi: Chart, t_set: GroundSet) -> FacetComplex:
    d = xi.d
    if t_set.n <= d:
        raise UnderdeterminedInstanceError(
            f"need more than d={d} generating points, got {t_set.n}"
        )
    _check_instance(xi, t_set)
    facets = [
        idxs
        for idxs in combinations(range(t_set.n), d)
        if facet_test_lambda(xi, t_set, [t_set.params[i] for i in idxs])
    ]
    return FacetComplex(t_set.n, d, tuple(facets))


def decompose_chart(xi: Chart, t_set: GroundSet) -> SignedDecomposition:
    """Group parameters into maximal runs of constant sign of q."""
    signs = []
    for t in t_set.params:
        s = sign(q_eval(xi, t))
        if s == 0:
            raise InvalidInstanceError(f"chart vanishes at parameter t={t}")
        signs.append(s)
    sizes = tuple(len(list(g)) for _, g in groupby(signs))
    # a degree-d polynomial has at most d sign changes
    assert len(sizes) - 1 <= xi.d
    return SignedDecomposition(sizes, signs[0], xi.d)


def chart_from_decomposition(dec: SignedDecomposition, t_set: GroundSet) -> Chart:
    """A chart realizing the decomposition: q has one root at each gap
    midpoint between consecutive intervals, scaled by a global sign."""
    if dec.n != t_set.n:
        raise InvalidDecompositionError(
            f"decomposition covers {dec.n} points, ground set has {t_set.n}"
        )
    roots = []
    pos = 0
    for size in dec.sizes[:-1]:
        pos += size
        roots.append((t_set.params[pos - 1] + t_set.params[pos]) / 2)
    # q(t) = c * prod(t - root): expand via elementary symmetric sums
    k = len(roots)
    coeffs = [Fraction(0)] * (dec.d + 1)
    for i in range(k + 1):
        coeffs[k - i] = (-1) ** i * elementary_symmetric(roots, i)
    q_first = Fraction(0)
    t1 = t_set.params[0]
    for c in reversed(coeffs):
        q_first = q_first * t1 + c
    if sign(q_first) != dec.first_sign:
        coeffs = [-c for c in coeffs]
    return Chart(tuple(coeffs))


def vertices_geometric(xi: Chart, t_set: GroundSet) -> tuple:
    """0-based indices of parameters whose generating point is a vertex:
    exactly those contained in some facet."""
    fc = enumerate_facets_geometric(xi, t_set)
    return fc.vertex_labels
