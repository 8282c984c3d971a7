"""Numeric kernel for alignment analytics.

Every function here is a pure function of its arguments, uses only the
standard library, and is safe to call concurrently. All results are
64-bit floats. Sums use ``math.fsum`` so results are independent of
input ordering, which several callers rely on (e.g. an artist whose song
set equals the era's must get a contrast ratio of exactly 1.0).
"""

from __future__ import annotations

import math
from enum import Enum
from typing import NamedTuple, Sequence


class MetricError(ValueError):
    """Base class for kernel input violations."""


class BadAvgRank(MetricError):
    pass


class LengthMismatch(MetricError):
    pass


class DegenerateVector(MetricError):
    pass


class EmptyInput(MetricError):
    pass


class ZeroEraDispersion(MetricError):
    pass


class TooFewPoints(MetricError):
    pass


class ConstantInput(MetricError):
    pass


class Quadrant(str, Enum):
    """Quadrant of the (shape similarity, contrast ratio) plane.

    High/low shape is relative to a median boundary supplied by the
    caller; high/low contrast is relative to the fixed boundary 1.0.
    """

    AMPLIFIED_CONFORMIST = "amplified_conformist"  # high shape, high contrast
    SMOOTHED_CONFORMIST = "smoothed_conformist"    # high shape, low contrast
    POLARIZED_MAVERICK = "polarized_maverick"      # low shape, high contrast
    MUTED_MAVERICK = "muted_maverick"              # low shape, low contrast


class SongContribution(NamedTuple):
    """A song's weight in the scoring formulas: weeks on chart per rank point."""

    weeks: int
    avg_rank: float
    value: float


class CorrelationResult(NamedTuple):
    r: float
    p_two_sided: float
    n: int


class AlignmentMetrics(NamedTuple):
    """Position of one artist-decade pair against its era baseline.

    ``quadrant`` is None until the owning bundle's median shape boundary
    is known; classification is a second pass over all profiles.
    """

    shape_similarity: float
    contrast_ratio: float
    quadrant: Quadrant | None


def song_contribution(weeks: int, avg_rank: float) -> float:
    """weeks / avg_rank; zero weeks contribute zero."""
    if avg_rank < 1.0:
        raise BadAvgRank(f"avg_rank must be >= 1, got {avg_rank}")
    return weeks / avg_rank


def artist_rank_score(contributions: Sequence[float], distinct_songs: int) -> float:
    """Sum of per-song contributions scaled by ln(1 + distinct song count)."""
    if distinct_songs != len(contributions):
        raise LengthMismatch(
            f"distinct_songs={distinct_songs} but {len(contributions)} contributions"
        )
    return math.fsum(contributions) * math.log1p(distinct_songs)


def decade_performance_score(
    contributions: Sequence[float], distinct_songs_in_decade: int
) -> float:
    """Sum of per-song contributions times the decade's distinct song count."""
    if distinct_songs_in_decade != len(contributions):
        raise LengthMismatch(
            f"distinct_songs_in_decade={distinct_songs_in_decade} "
            f"but {len(contributions)} contributions"
        )
    return math.fsum(contributions) * distinct_songs_in_decade


def _centered(v: Sequence[float]) -> list[float]:
    mean = math.fsum(v) / len(v)
    return [x - mean for x in v]


def centered_cosine(a: Sequence[float], b: Sequence[float]) -> float:
    """Cosine similarity after subtracting each vector's own component mean.

    Centering makes the result invariant under adding a constant to every
    component, so it measures the direction of a profile's ups and downs,
    not its overall level. A constant vector has no direction: it centers
    to zero and raises DegenerateVector.
    """
    if len(a) != len(b):
        raise LengthMismatch(f"vector lengths differ: {len(a)} vs {len(b)}")
    if not a:
        raise EmptyInput("empty vectors")
    if max(a) == min(a) or max(b) == min(b):
        raise DegenerateVector("constant vector centers to zero")
    ac = _centered(a)
    bc = _centered(b)
    norm_a = math.sqrt(math.fsum(x * x for x in ac))
    norm_b = math.sqrt(math.fsum(y * y for y in bc))
    if norm_a == 0.0 or norm_b == 0.0:
        raise DegenerateVector("centered vector has zero norm")
    cos = math.fsum(x * y for x, y in zip(ac, bc)) / (norm_a * norm_b)
    return max(-1.0, min(1.0, cos))


def dispersion(song_features: Sequence[Sequence[float]]) -> float:
    """Mean over features of the per-feature population standard deviation.

    Population (divide by N) rather than sample, so a one-song set has
    dispersion 0 and a set compared against itself gets ratio exactly 1.
    A feature column whose values are all identical contributes exactly
    0.0, making dispersion zero iff all vectors are identical.
    """
    if not song_features:
        raise EmptyInput("no feature vectors")
    width = len(song_features[0])
    for v in song_features:
        if len(v) != width:
            raise LengthMismatch("feature vectors differ in length")
    n = len(song_features)
    sigmas = []
    for i in range(width):
        column = [v[i] for v in song_features]
        first = column[0]
        if all(x == first for x in column):
            sigmas.append(0.0)
            continue
        mean = math.fsum(column) / n
        ss = math.fsum((x - mean) ** 2 for x in column)
        sigmas.append(math.sqrt(ss / n))
    return math.fsum(sigmas) / width


def contrast_ratio(sigma_artist: float, sigma_era: float) -> float:
    """sigma_artist / sigma_era; >1 means more spread than the era norm."""
    if sigma_era <= 0.0:
        raise ZeroEraDispersion(f"era dispersion must be positive, got {sigma_era}")
    return sigma_artist / sigma_era


def classify_quadrant(shape: float, contrast: float, median_shape: float) -> Quadrant:
    """Total classification; both boundaries are closed on the high side."""
    if shape >= median_shape:
        if contrast >= 1.0:
            return Quadrant.AMPLIFIED_CONFORMIST
        return Quadrant.SMOOTHED_CONFORMIST
    if contrast >= 1.0:
        return Quadrant.POLARIZED_MAVERICK
    return Quadrant.MUTED_MAVERICK


def deviation(
    subject: Sequence[float], era_centroid: Sequence[float]
) -> tuple[float, ...]:
    """Component-wise subject minus centroid (signed)."""
    if len(subject) != len(era_centroid):
        raise LengthMismatch(
            f"vector lengths differ: {len(subject)} vs {len(era_centroid)}"
        )
    return tuple(s - c for s, c in zip(subject, era_centroid))


def pearson(xs: Sequence[float], ys: Sequence[float]) -> CorrelationResult:
    """Sample Pearson r with a two-sided Student-t p-value (n-2 df)."""
    if len(xs) != len(ys):
        raise LengthMismatch(f"series lengths differ: {len(xs)} vs {len(ys)}")
    n = len(xs)
    if n < 3:
        raise TooFewPoints(f"need at least 3 points, got {n}")
    mx = math.fsum(xs) / n
    my = math.fsum(ys) / n
    dx = [x - mx for x in xs]
    dy = [y - my for y in ys]
    sxx = math.fsum(d * d for d in dx)
    syy = math.fsum(d * d for d in dy)
    if sxx == 0.0:
        raise ConstantInput("xs has zero variance")
    if syy == 0.0:
        raise ConstantInput("ys has zero variance")
    sxy = math.fsum(a * b for a, b in zip(dx, dy))
    r = sxy / (math.sqrt(sxx) * math.sqrt(syy))
    r = max(-1.0, min(1.0, r))
    return CorrelationResult(r=r, p_two_sided=correlation_p_value(r, n), n=n)


def correlation_p_value(r: float, n: int) -> float:
    """Two-sided p for a sample correlation r over n points.

    t = r*sqrt((n-2)/(1-r^2)) is Student-t with n-2 df under the null, so
    2*P(T >= |t|) = I_x(df/2, 1/2) with x = df/(df + t^2).
    """
    if n < 3:
        raise TooFewPoints(f"need at least 3 points, got {n}")
    if not -1.0 <= r <= 1.0:
        raise MetricError(f"correlation must lie in [-1, 1], got {r}")
    df = n - 2
    rr = r * r
    if rr >= 1.0:
        return 0.0
    t = r * math.sqrt(df / (1.0 - rr))
    x = df / (df + t * t)
    return regularized_incomplete_beta(df / 2.0, 0.5, x)


def regularized_incomplete_beta(a: float, b: float, x: float) -> float:
    """I_x(a, b) evaluated via the continued fraction (modified Lentz).

    Converges to well below 1e-12 absolute error for the (a, b) ranges a
    t-test produces; the symmetry relation keeps the fraction in its
    fast-converging region.
    """
    if a <= 0.0 or b <= 0.0:
        raise MetricError(f"beta parameters must be positive, got a={a}, b={b}")
    if x <= 0.0:
        return 0.0
    if x >= 1.0:
        return 1.0
    ln_front = (
        math.lgamma(a + b)
        - math.lgamma(a)
        - math.lgamma(b)
        + a * math.log(x)
        + b * math.log1p(-x)
    )
    front = math.exp(ln_front)
    if x < (a + 1.0) / (a + b + 2.0):
        return front * _beta_continued_fraction(a, b, x) / a
    return 1.0 - front * _beta_continued_fraction(b, a, 1.0 - x) / b


_CF_EPS = 1e-15
_CF_TINY = 1e-300
_CF_MAX_ITER = 300


def _beta_continued_fraction(a: float, b: float, x: float) -> float:
    qab = a + b
    qap = a + 1.0
    qam = a - 1.0
    c = 1.0
    d = 1.0 - qab * x / qap
    if abs(d) < _CF_TINY:
        d = _CF_TINY
    d = 1.0 / d
    h = d
    for m in range(1, _CF_MAX_ITER + 1):
        m2 = 2 * m
        coeff = m * (b - m) * x / ((qam + m2) * (a + m2))
        d = 1.0 + coeff * d
        if abs(d) < _CF_TINY:
            d = _CF_TINY
        c = 1.0 + coeff / c
        if abs(c) < _CF_TINY:
            c = _CF_TINY
        d = 1.0 / d
        h *= d * c
        coeff = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2))
        d = 1.0 + coeff * d
        if abs(d) < _CF_TINY:
            d = _CF_TINY
        c = 1.0 + coeff / c
        if abs(c) < _CF_TINY:
            c = _CF_TINY
        d = 1.0 / d
        delta = d * c
        h *= delta
        if abs(delta - 1.0) < _CF_EPS:
            return h
    raise MetricError(
        f"incomplete beta continued fraction failed to converge for "
        f"a={a}, b={b}, x={x}"
    )
