"""Balls in R^n, radially simple test functions, and their exact integrals.

Everything here is exact arithmetic over finitely many annuli: a simple
radial function takes value c_j on the half-open annulus rho_{j-1} <= |x-x0|
< rho_j (rho_0 = 0) and vanishes outside the last breakpoint. Boundary
spheres have measure zero, so the half-open convention affects point
evaluation only, never a measure.

Integrals are computed only over balls concentric with the function's own
center; any other configuration raises UnsupportedGeometryError rather than
falling back to approximate quadrature.
"""

from __future__ import annotations

import math
from bisect import bisect_right
from dataclasses import dataclass

from .errors import DomainError, UnsupportedGeometryError
from .young import YoungFunction, _finite_real

__all__ = [
    "Ball",
    "SimpleRadialFunction",
    "unit_ball_volume",
    "ball_volume",
    "concentric_intersection",
    "characteristic",
    "annulus_weights",
    "mean_integral",
    "distribution",
    "pointwise_leq",
]


def unit_ball_volume(n: int) -> float:
    """Volume of the unit ball in R^n: pi**(n/2) / Gamma(n/2 + 1).

    Computed by the half-integer recursion v_n = 2*pi*v_{n-2}/n from
    v_0 = 1, v_1 = 2, so no gamma-function evaluation is involved.
    """
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise DomainError(f"dimension must be a positive integer, got {n!r}")
    prev2, prev1 = 1.0, 2.0  # v_0, v_1
    if n == 1:
        return prev1
    for k in range(2, n + 1):
        prev2, prev1 = prev1, 2.0 * math.pi * prev2 / k
    return prev1


def ball_volume(n: int, r: float) -> float:
    """Lebesgue measure of a ball of radius r in R^n."""
    if not _finite_real(r) or r <= 0:
        raise DomainError(f"radius must be a finite positive real, got {r!r}")
    return unit_ball_volume(n) * float(r) ** n


def concentric_intersection(n: int, r: float, r0: float) -> float:
    """Measure of the intersection of two concentric balls: v_n * min(r, r0)**n."""
    if not _finite_real(r0) or r0 <= 0:
        raise DomainError(f"radius must be a finite positive real, got {r0!r}")
    return ball_volume(n, min(float(r), float(r0)))


def _as_point(coords, what):
    try:
        pt = tuple(float(x) for x in coords)
    except (TypeError, ValueError):
        raise DomainError(f"{what} must be a sequence of reals") from None
    if not pt or any(not math.isfinite(x) for x in pt):
        raise DomainError(f"{what} must be a nonempty tuple of finite reals")
    return pt


@dataclass(frozen=True)
class Ball:
    """Open ball: center in R^n plus positive radius."""

    center: tuple[float, ...]
    radius: float

    def __post_init__(self):
        object.__setattr__(self, "center", _as_point(self.center, "ball center"))
        if not _finite_real(self.radius) or self.radius <= 0:
            raise DomainError(f"radius must be a finite positive real, got {self.radius!r}")
        object.__setattr__(self, "radius", float(self.radius))

    @property
    def dimension(self) -> int:
        return len(self.center)

    @property
    def measure(self) -> float:
        return ball_volume(self.dimension, self.radius)


@dataclass(frozen=True)
class SimpleRadialFunction:
    """Nonnegative simple function built from concentric annuli.

    `values[j]` is taken on the annulus breakpoints[j-1] <= |x - center| <
    breakpoints[j] (with an implicit leading breakpoint 0); the function is
    zero beyond the last breakpoint.
    """

    center: tuple[float, ...]
    breakpoints: tuple[float, ...]
    values: tuple[float, ...]

    def __post_init__(self):
        object.__setattr__(self, "center", _as_point(self.center, "function center"))
        try:
            bps = tuple(float(x) for x in self.breakpoints)
            vals = tuple(float(x) for x in self.values)
        except (TypeError, ValueError):
            raise DomainError("breakpoints and values must be sequences of reals") from None
        if not bps or len(bps) != len(vals):
            raise DomainError("need equally many breakpoints and values, at least one each")
        if any(not math.isfinite(x) or x <= 0 for x in bps) or list(bps) != sorted(set(bps)):
            raise DomainError("breakpoints must be strictly increasing positive reals")
        if any(not math.isfinite(v) or v < 0 for v in vals):
            raise DomainError("values must be finite nonnegative reals")
        object.__setattr__(self, "breakpoints", bps)
        object.__setattr__(self, "values", vals)

    @property
    def dimension(self) -> int:
        return len(self.center)

    @property
    def support_radius(self) -> float:
        return self.breakpoints[-1]

    @property
    def is_characteristic(self) -> bool:
        """True for the indicator of a single ball (one annulus, value 1)."""
        return len(self.values) == 1 and self.values[0] == 1.0

    def value_at_radius(self, rho: float) -> float:
        """Function value at distance rho from the center (half-open annuli)."""
        if not _finite_real(rho) or rho < 0:
            raise DomainError(f"distance must be a finite nonnegative real, got {rho!r}")
        idx = bisect_right(self.breakpoints, rho)
        return self.values[idx] if idx < len(self.values) else 0.0

    def scaled(self, factor: float) -> "SimpleRadialFunction":
        """Pointwise multiple factor * f with factor >= 0."""
        if not _finite_real(factor) or factor < 0:
            raise DomainError(f"scale factor must be a finite nonnegative real, got {factor!r}")
        return SimpleRadialFunction(
            self.center, self.breakpoints, tuple(factor * v for v in self.values)
        )

    def annuli(self):
        """Yield (inner_radius, outer_radius, value) triples."""
        inner = 0.0
        for outer, value in zip(self.breakpoints, self.values):
            yield inner, outer, value
            inner = outer


def characteristic(center, r0: float) -> SimpleRadialFunction:
    """Indicator of the ball of radius r0 about the given center."""
    return SimpleRadialFunction(tuple(center), (r0,), (1.0,))


def _require_aligned(f: SimpleRadialFunction, ball: Ball):
    if f.center != ball.center:
        raise UnsupportedGeometryError(
            "exact integration needs the ball concentric with the function "
            f"(function center {f.center}, ball center {ball.center})"
        )


def annulus_weights(f: SimpleRadialFunction, ball: Ball) -> tuple[tuple[float, float], ...]:
    """(value, measure) per annulus clipped to the ball; zero-measure annuli dropped."""
    _require_aligned(f, ball)
    n = ball.dimension
    vn = unit_ball_volume(n)
    r = ball.radius
    out = []
    for inner, outer, value in f.annuli():
        w = vn * (min(outer, r) ** n - min(inner, r) ** n)
        if w > 0.0:
            out.append((value, w))
    return tuple(out)


def mean_integral(f: SimpleRadialFunction, phi: YoungFunction, b: float, ball: Ball) -> float:
    """(1/|B|) * integral over B of phi(f(x)/b) dx, evaluated exactly.

    Annuli with value 0 contribute nothing since phi(0) = 0.
    """
    if not _finite_real(b) or b <= 0:
        raise DomainError(f"divisor b must be a finite positive real, got {b!r}")
    total = math.fsum(
        phi._eval(value / b) * w for value, w in annulus_weights(f, ball) if value > 0.0
    )
    return total / ball.measure


def distribution(f: SimpleRadialFunction, ball: Ball, s: float) -> float:
    """Measure of {x in B : f(x) > s} (strict inequality), evaluated exactly."""
    if not _finite_real(s) or s < 0:
        raise DomainError(f"level must be a finite nonnegative real, got {s!r}")
    return math.fsum(w for value, w in annulus_weights(f, ball) if value > s)


def pointwise_leq(f: SimpleRadialFunction, g: SimpleRadialFunction) -> bool:
    """True when f <= g everywhere, decided on the merged annulus structure."""
    if f.center != g.center:
        raise UnsupportedGeometryError("pointwise comparison needs a common center")
    cuts = sorted(set(f.breakpoints) | set(g.breakpoints))
    inner = 0.0
    for cut in cuts:
        probe = 0.5 * (inner + cut)
        if f.value_at_radius(probe) > g.value_at_radius(probe):
            return False
        inner = cut
    return True  # both vanish beyond the last cut
