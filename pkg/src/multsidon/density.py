"""Certified approximation of the maximum triple-case density.

The maximum density of a set avoiding ax = by and ax = cy splits over the
component types of the divisibility graph relative to a height cutoff d:

  * complete components contribute the closed form
        delta_C = (a-1)(b-1)c^3 / (a b (c-1)^2 (c+1)),
  * incomplete components of height p <= d contribute the exact sum
        delta_S(d) = K * sum_p sum_r f(p, r) / (r (r+1)),
    with K = (a-1)(b-1)(c-1)/(abc) and r running over [a^p, c^p - 1],
  * incomplete components of height p > d contribute at most
        tail(d) = K * sum_{p >= d} p^2 / a^p,
    which has the exact closed form used here and shrinks geometrically.

So [delta_C + delta_S(d), delta_C + delta_S(d) + tail(d)] is a certified
enclosure of the true density, of width tail(d) <= eps once d is large
enough.  The inner sum over r is evaluated by telescoping 1/(r(r+1))
across the plateaus of the step function f, never term by term.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .components import TripleParams, _f_arrays, admissible_density
from .rational import truncated_decimal

MAX_CONVERGENCE_DIGITS = 12
_MAX_CONVERGENCE_CUTOFF = 400


def beta(params: TripleParams) -> Fraction:
    """The tail constant (b-1)(c-1)/(bc), strictly between 0 and 1."""
    return Fraction((params.b - 1) * (params.c - 1), params.b * params.c)


def delta_complete(params: TripleParams) -> Fraction:
    """Exact density contribution of the complete components."""
    a, b, c = params.a, params.b, params.c
    return Fraction((a - 1) * (b - 1) * c**3, a * b * (c - 1) ** 2 * (c + 1))


@lru_cache(maxsize=None)
def _height_contribution(params: TripleParams, height: int) -> Fraction:
    """K * sum over r in [a^p, c^p - 1] of f(p, r)/(r(r+1)), telescoped.

    f is constant between consecutive component values v_k < v_{k+1}, and
    sum_{r=v_k}^{v_{k+1}-1} 1/(r(r+1)) = 1/v_k - 1/v_{k+1}, so the double
    sum collapses to one term per breakpoint.  Height 0 has a single
    breakpoint and contributes nothing (the r-range [1, 0] is empty).
    """
    values, plateaus = _f_arrays(params, height)
    total = Fraction(0)
    for k in range(len(values) - 1):
        total += plateaus[k] * (Fraction(1, values[k]) - Fraction(1, values[k + 1]))
    return admissible_density(params) * total


def delta_small(params: TripleParams, cutoff: int) -> Fraction:
    """Exact density contribution of incomplete components of height <= cutoff."""
    if cutoff < 0:
        raise ValueError(f"cutoff must be >= 0, got {cutoff}")
    return sum(
        (_height_contribution(params, p) for p in range(cutoff + 1)), Fraction(0)
    )


def tail_bound(params: TripleParams, cutoff: int) -> Fraction:
    """Upper bound on the density contribution of heights above the cutoff.

    Exact value of K * sum_{p >= cutoff} p^2 / a^p; valid for every
    cutoff >= 0 because a height-p component truncated below its top
    vertex has independence number at most p^2.
    """
    if cutoff < 0:
        raise ValueError(f"cutoff must be >= 0, got {cutoff}")
    a, d = params.a, cutoff
    poly = (a - 1) ** 2 * d * d + 2 * (a - 1) * d + a + 1
    return admissible_density(params) * Fraction(poly * a, a**d * (a - 1) ** 3)


def exact_tail_within_simplified(params: TripleParams, cutoff: int) -> bool:
    """Check tail_bound(d) <= beta * a**(-d/2) without leaving the rationals.

    Both sides are positive, so the inequality is equivalent to its square:
    tail(d)^2 * a^d <= beta^2.
    """
    t = tail_bound(params, cutoff)
    return t * t * params.a**cutoff <= beta(params) ** 2


def choose_cutoff(params: TripleParams, eps: Fraction) -> int:
    """Smallest cutoff whose tail bound is at most eps.

    Seeded at max(ceil(2 log_a(beta/eps)), 22), then refined in both
    directions against the exact tail bound, which is cheaper to satisfy
    than the simplified bound behind the seed formula.
    """
    eps = Fraction(eps)
    if not 0 < eps < 1:
        raise ValueError(f"eps must lie strictly between 0 and 1, got {eps}")
    ratio = beta(params) / eps
    seed = 22
    if ratio > 1:
        # ceil(2 log_a r) = smallest s with a**s >= r**2, found exactly
        target = ratio * ratio
        s, power = 0, Fraction(1)
        while power < target:
            power *= params.a
            s += 1
        seed = max(s, 22)
    d = seed
    while tail_bound(params, d) > eps:
        d += 1
    while d > 0 and tail_bound(params, d - 1) <= eps:
        d -= 1
    return d


@dataclass(frozen=True)
class DensityInterval:
    """Certified enclosure [lower, upper] of the maximum density."""

    params: TripleParams
    epsilon: Fraction
    cutoff: int
    delta_complete: Fraction
    delta_small: Fraction
    tail_bound: Fraction
    lower: Fraction
    upper: Fraction

    @property
    def width(self) -> Fraction:
        return self.upper - self.lower


def approximate_density(
    params: TripleParams,
    eps: Fraction | None = None,
    cutoff: int | None = None,
) -> DensityInterval:
    """Enclose the maximum density to within eps (or at a forced cutoff).

    Exactly one of eps and cutoff may drive the computation: given eps,
    the cheapest sufficient cutoff is chosen and the interval width is at
    most eps; given a cutoff, the achieved tail bound is reported as the
    precision.  The upper end is clamped to 1 since densities are proper.
    """
    if cutoff is None:
        if eps is None:
            raise ValueError("either eps or cutoff is required")
        eps = Fraction(eps)
        cutoff = choose_cutoff(params, eps)
    else:
        if cutoff < 0:
            raise ValueError(f"cutoff must be >= 0, got {cutoff}")
        if eps is None:
            eps = tail_bound(params, cutoff)
        else:
            eps = Fraction(eps)
    dc = delta_complete(params)
    ds = delta_small(params, cutoff)
    tail = tail_bound(params, cutoff)
    lower = dc + ds
    upper = min(lower + tail, Fraction(1))
    return DensityInterval(
        params=params,
        epsilon=eps,
        cutoff=cutoff,
        delta_complete=dc,
        delta_small=ds,
        tail_bound=tail,
        lower=lower,
        upper=upper,
    )


@dataclass(frozen=True)
class ConvergenceEstimate:
    """Heuristic point estimate: lower endpoint stabilised to fixed decimals."""

    params: TripleParams
    digits: int
    cutoff: int
    value: Fraction
    decimal: str


def convergence_estimate(
    params: TripleParams, digits: int, stable_steps: int = 4
) -> ConvergenceEstimate:
    """Raise the cutoff until the printed decimal stops moving.

    Increments the cutoff and compares the truncated rendering of
    delta_complete + delta_small across consecutive cutoffs, reporting the
    value once it has survived `stable_steps` increments unchanged.  A
    single-step comparison stops too early when the limit sits just past a
    digit boundary; four steps reproduce the reference table at four
    digits.  This mode carries no certificate; use approximate_density for
    certified output.
    """
    if not 1 <= digits <= MAX_CONVERGENCE_DIGITS:
        raise ValueError(f"digits must be in [1, {MAX_CONVERGENCE_DIGITS}]")
    if stable_steps < 1:
        raise ValueError("stable_steps must be positive")
    dc = delta_complete(params)
    previous = truncated_decimal(dc, digits)
    value = dc
    streak = 0
    for d in range(1, _MAX_CONVERGENCE_CUTOFF + 1):
        value = dc + delta_small(params, d)
        current = truncated_decimal(value, digits)
        streak = streak + 1 if current == previous else 0
        if streak >= stable_steps:
            return ConvergenceEstimate(
                params=params, digits=digits, cutoff=d, value=value, decimal=current
            )
        previous = current
    raise RuntimeError("no stabilisation within the cutoff limit")
