"""Local and global norms for the five space variants.

Variants and their per-ball quantities (B always concentric with the test
function, |B| its measure, with growth function g and Young function Y):

* ``nakai``      inf{b : g(|B|)/|B| * int_B Y(|f|/b) <= 1}
* ``sst``        g(|B|) * inf{b : (1/|B|) int_B Y(|f|/b) <= 1}
* ``weak-nakai`` inf{b : sup_t Y(t) g(|B|) |{|f|/b > t}| / |B| <= 1}
* ``weak-sst``   g(|B|) * inf{b : sup_t Y(t) |{|f|/b > t}| / |B| <= 1}
* ``guliyev``    (1/g(|B|**(1/n))) * Y^{-1}(1/|B|) * inf{b : int_B Y(|f|/b) <= 1}

The global norm is the supremum of the per-ball quantity over a radius
grid. For ball indicators with class-validated growth the supremum is
attained at the indicator's own radius and has a closed form; global_norm
returns that closed form (exact=True) after checking the grid sweep agrees
within 1e-9. All other grid results are certified lower bounds of the true
supremum over all radii (exact=False).

Weak suprema over the level t are computed exactly: on each interval
between consecutive distinct function values the distribution is constant
and Y nondecreasing, so the supremum is the left limit at the next value,
which continuity of Y turns into max_j Y(v_j/b) * |{f >= v_j}|.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .errors import DomainError, HypothesisError, OmlabError
from .geometry import Ball, annulus_weights, ball_volume
from .grids import default_radii
from .growth import (
    ClassMembershipReport,
    GrowthFunction,
    validate_g1,
    validate_g2,
    validate_g_theta,
)
from .rootfind import DEFAULT_RTOL, least_feasible
from .young import YoungFunction, _finite_real

__all__ = [
    "VARIANTS",
    "SpaceSpec",
    "NormResult",
    "luxemburg_local",
    "luxemburg_unnormalized",
    "nakai_local",
    "weak_local",
    "char_norm_closed",
    "global_norm",
    "guliyev_global",
]

VARIANTS = ("nakai", "sst", "weak-nakai", "weak-sst", "guliyev")

_CLOSED_FORM_RTOL = 1e-9


@dataclass(frozen=True)
class SpaceSpec:
    """A space variant together with its Young and growth functions.

    Construction validates the growth function against the class matching
    the variant (G1 for nakai/weak-nakai, G2 for sst/weak-sst, GTheta for
    guliyev) and fails unless `override` is set; counterexample studies set
    override and get `validated=False` recorded instead.
    """

    variant: str
    young: YoungFunction
    growth: GrowthFunction
    dimension: int
    override: bool = False
    membership: ClassMembershipReport = field(init=False, compare=False, repr=False)

    def __post_init__(self):
        if self.variant not in VARIANTS:
            raise DomainError(f"unknown variant {self.variant!r}; expected one of {VARIANTS}")
        if not isinstance(self.young, YoungFunction) or not isinstance(self.growth, GrowthFunction):
            raise DomainError("SpaceSpec needs a YoungFunction and a GrowthFunction")
        if not isinstance(self.dimension, int) or isinstance(self.dimension, bool) or self.dimension < 1:
            raise DomainError("dimension must be a positive integer")
        if self.variant in ("nakai", "weak-nakai"):
            report = validate_g1(self.growth)
        elif self.variant in ("sst", "weak-sst"):
            report = validate_g2(self.growth, self.young, self.dimension)
        else:
            report = validate_g_theta(self.growth, self.young, self.dimension)
        if not report.member and not self.override:
            raise HypothesisError(
                f"growth {self.growth.describe()} is not in {report.class_id} "
                f"for variant {self.variant!r}: {report.violation}"
            )
        object.__setattr__(self, "membership", report)

    @property
    def validated(self) -> bool:
        return self.membership.member

    @property
    def required_class(self) -> str:
        return self.membership.class_id

    def describe(self) -> str:
        return (
            f"{self.variant}[n={self.dimension}, "
            f"{self.young.describe()}, {self.growth.describe()}]"
        )


@dataclass(frozen=True)
class NormResult:
    """Global norm value with provenance.

    exact=True only for closed-form indicator norms (grid-verified);
    exact=False values are certified lower bounds of the supremum over all
    radii. `attained_at` is the smallest grid radius achieving the max.
    """

    value: float
    exact: bool
    radii: tuple[float, ...]
    attained_at: float | None


def _safe_div(num: float, den: float) -> float:
    try:
        return num / den
    except (OverflowError, ZeroDivisionError):
        return math.inf


def _positive_levels(f, ball):
    """Distinct positive values of f inside the ball with their measures."""
    agg: dict[float, float] = {}
    for value, w in annulus_weights(f, ball):
        if value > 0.0:
            agg[value] = agg.get(value, 0.0) + w
    return sorted(agg.items())


def _tail_measures(levels):
    """(value, measure of {f >= value}) pairs, values ascending."""
    out = []
    tail = 0.0
    for value, w in reversed(levels):
        tail += w
        out.append((value, tail))
    out.reverse()
    return out


def _check_method(method, allowed):
    if method not in allowed:
        raise DomainError(f"method must be one of {allowed}, got {method!r}")


def _gauge(levels, young, target, method, rtol):
    # least b with sum_j young(c_j/b) * w_j <= target
    if not levels:
        return 0.0
    if method == "auto" and len(levels) == 1:
        c, w = levels[0]
        return c / young.inverse(target / w)

    def g(b):
        return math.fsum(young._eval(_safe_div(c, b)) * w for c, w in levels)

    return least_feasible(g, target, seed=levels[-1][0], rtol=rtol)


def luxemburg_local(f, Psi, ball, *, method="auto", rtol=DEFAULT_RTOL):
    """inf{b > 0 : (1/|B|) int_B Psi(|f|/b) <= 1}; 0 when f vanishes on B.

    Functions with a single distinct positive value on B solve in closed
    form via the generalized inverse; otherwise the constraint is bisected.
    method="bisect" forces the bisection path (engine cross-checks).
    """
    _check_method(method, ("auto", "bisect"))
    return _gauge(_positive_levels(f, ball), Psi, ball.measure, method, rtol)


def luxemburg_unnormalized(f, Theta, ball, *, method="auto", rtol=DEFAULT_RTOL):
    """inf{b > 0 : int_B Theta(|f|/b) <= 1} (no 1/|B| factor)."""
    _check_method(method, ("auto", "bisect"))
    return _gauge(_positive_levels(f, ball), Theta, 1.0, method, rtol)


def nakai_local(f, phi, Phi, ball, *, method="auto", rtol=DEFAULT_RTOL):
    """inf{b > 0 : phi(|B|)/|B| * int_B Phi(|f|/b) <= 1}.

    Reduces to the plain Luxemburg gauge when phi(|B|) = 1.
    """
    _check_method(method, ("auto", "bisect"))
    target = ball.measure / phi(ball.measure)
    return _gauge(_positive_levels(f, ball), Phi, target, method, rtol)


def weak_local(f, spec, ball, *, method="levels", rtol=DEFAULT_RTOL):
    """Weak per-ball gauge for the weak-nakai and weak-sst variants.

    weak-nakai solves inf{b : sup_t Phi(t) phi(|B|) |{|f|/b > t}|/|B| <= 1};
    weak-sst is the same with the growth factor left out (it is applied by
    the global assembler). method="levels" (default) solves per level via
    the generalized inverse; method="bisect" bisects the sup directly.
    """
    _check_method(method, ("levels", "bisect"))
    if spec.variant not in ("weak-nakai", "weak-sst"):
        raise DomainError(f"weak_local needs a weak variant, got {spec.variant!r}")
    levels = _tail_measures(_positive_levels(f, ball))
    if not levels:
        return 0.0
    measure = ball.measure
    factor = spec.growth(measure) if spec.variant == "weak-nakai" else 1.0
    target = measure / factor
    if method == "levels":
        return max(v / spec.young.inverse(target / m) for v, m in levels)

    def g(b):
        return max(spec.young._eval(_safe_div(v, b)) * m for v, m in levels)

    return least_feasible(g, target, seed=levels[-1][0], rtol=rtol)


def char_norm_closed(spec, r0):
    """Closed-form global norm of the indicator of a ball of radius r0.

    nakai / weak-nakai: 1 / Yinv(1 / g(|B0|))
    sst / weak-sst:     g(|B0|) / Yinv(1)
    guliyev:            1 / g(|B0|**(1/n))

    The formulas assume the growth function belongs to its class; for
    class-violating (override) specs the grid sweep may exceed them.
    """
    if not _finite_real(r0) or r0 <= 0:
        raise DomainError(f"indicator radius must be a finite positive real, got {r0!r}")
    u = ball_volume(spec.dimension, r0)
    if spec.variant in ("nakai", "weak-nakai"):
        return 1.0 / spec.young.inverse(1.0 / spec.growth(u))
    if spec.variant in ("sst", "weak-sst"):
        return spec.growth(u) / spec.young.inverse(1.0)
    return 1.0 / spec.growth(u ** (1.0 / spec.dimension))


def _local_quantity(f, spec, r, method, rtol):
    ball = Ball(f.center, r)
    strong_method = "auto" if method == "auto" else "bisect"
    weak_method = "levels" if method == "auto" else "bisect"
    if spec.variant == "nakai":
        return nakai_local(f, spec.growth, spec.young, ball, method=strong_method, rtol=rtol)
    if spec.variant == "sst":
        return spec.growth(ball.measure) * luxemburg_local(
            f, spec.young, ball, method=strong_method, rtol=rtol
        )
    if spec.variant == "weak-nakai":
        return weak_local(f, spec, ball, method=weak_method, rtol=rtol)
    if spec.variant == "weak-sst":
        return spec.growth(ball.measure) * weak_local(
            f, spec, ball, method=weak_method, rtol=rtol
        )
    # guliyev
    n = spec.dimension
    lux = luxemburg_unnormalized(f, spec.young, ball, method=strong_method, rtol=rtol)
    return (
        spec.young.inverse(1.0 / ball.measure) / spec.growth(ball.measure ** (1.0 / n)) * lux
    )


def _resolve_radii(f, radii):
    if radii is None:
        merged = set(default_radii()) | set(f.breakpoints)
    else:
        merged = {float(r) for r in radii}
    if not merged:
        raise DomainError("radius grid is empty")
    if any(not _finite_real(r) or r <= 0 for r in merged):
        raise DomainError("radii must be finite positive reals")
    return tuple(sorted(merged))


def global_norm(f, spec, radii=None, *, method="auto", rtol=DEFAULT_RTOL) -> NormResult:
    """Supremum of the variant's per-ball quantity over concentric balls.

    `radii` defaults to the dyadic sweep 2**-6..2**6 plus the function's
    own breakpoints; a caller grid is used verbatim. For ball indicators
    with validated growth (and the indicator radius on the grid) the closed
    form is returned with exact=True after checking the sweep agrees with
    it to 1e-9 relative; any other result is a lower bound (exact=False).
    """
    _check_method(method, ("auto", "bisect"))
    if f.dimension != spec.dimension:
        raise DomainError(
            f"function lives in dimension {f.dimension}, space in {spec.dimension}"
        )
    grid = _resolve_radii(f, radii)
    best = -1.0
    attained = None
    for r in grid:
        q = _local_quantity(f, spec, r, method, rtol)
        if q > best:
            best, attained = q, r
    if f.is_characteristic and spec.validated:
        r0 = f.breakpoints[0]
        if r0 in grid:
            closed = char_norm_closed(spec, r0)
            if abs(best - closed) > _CLOSED_FORM_RTOL * max(1.0, closed, best):
                raise OmlabError(
                    f"grid sweep ({best!r}) and closed form ({closed!r}) disagree "
                    f"for {spec.describe()} at r0={r0!r}"
                )
            return NormResult(closed, True, grid, r0)
    return NormResult(max(best, 0.0), False, grid, attained)


def guliyev_global(f, theta, Theta, radii=None, *, method="auto", rtol=DEFAULT_RTOL) -> NormResult:
    """Raw sweep of the guliyev quantity for the given theta and Theta.

    Builds an override spec (no class gate), so this works for arbitrary
    decreasing weights; the result is exact only when theta happens to pass
    the GTheta validation.
    """
    spec = SpaceSpec("guliyev", Theta, theta, f.dimension, override=True)
    return global_norm(f, spec, radii, method=method, rtol=rtol)
