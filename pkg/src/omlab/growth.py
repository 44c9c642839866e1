"""Growth functions (weights applied to ball measures) and their classes.

Three admissibility classes gate the space variants:

* G1 - nondecreasing with t -> value(t)/t nonincreasing (weight-inside
  variant and its weak version);
* G2 - nondecreasing with the shifted ratio against a partner Young
  inverse nonincreasing in the first argument for every shift (mean-
  Luxemburg variant and its weak version);
* GTheta - nonincreasing with the ratio inverse(t**-n)/value(t) almost
  decreasing up to a caller-supplied constant.

`inv_power` exists only because GTheta needs genuinely decreasing members;
it is never admissible for G1/G2. "Almost decreasing" means decrease up to
a multiplicative constant (default 1); monotonicity comparisons allow a
1e-9 relative slack to absorb solver tolerance inside the partner inverse.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Iterable

from .errors import DomainError
from .grids import log_grid
from .young import RelationReport, YoungFunction, _finite_real, _param, _prepare_grids

__all__ = [
    "GrowthFunction",
    "ClassMembershipReport",
    "Violation",
    "ApproxReport",
    "power",
    "power_capped",
    "power_log",
    "constant",
    "scale",
    "inv_power",
    "validate_g1",
    "validate_g2",
    "validate_g_theta",
    "check_preceq",
    "check_approx",
]

_KINDS = ("power", "power-capped", "power-log", "constant", "scale", "inv-power")

_MONOTONE_RTOL = 1e-9


@dataclass(frozen=True)
class GrowthFunction:
    """One member of the growth-function family: positive and finite on (0, inf)."""

    kind: str
    a: float | None = None
    c: float | None = None
    k: float | None = None
    inner: "GrowthFunction | None" = None

    def __post_init__(self):
        if self.kind not in _KINDS:
            raise DomainError(f"unknown growth family {self.kind!r}")
        if self.kind in ("power", "power-capped", "power-log", "inv-power"):
            object.__setattr__(self, "a", _param(self.a, "a", 0.0, strict=True))
        elif self.kind == "constant":
            object.__setattr__(self, "c", _param(self.c, "c", 0.0, strict=True))
        elif self.kind == "scale":
            object.__setattr__(self, "k", _param(self.k, "k", 0.0, strict=True))
            if not isinstance(self.inner, GrowthFunction):
                raise DomainError("scale needs an inner growth function")

    def __call__(self, t: float) -> float:
        if not _finite_real(t) or t <= 0:
            raise DomainError(f"growth argument must be a finite positive real, got {t!r}")
        return self._eval(float(t))

    def _eval(self, t: float) -> float:
        try:
            if self.kind == "power":
                return t ** self.a
            if self.kind == "power-capped":
                return min(t ** self.a, 1.0)
            if self.kind == "power-log":
                return t ** self.a * (1.0 + math.log1p(t))
            if self.kind == "constant":
                return self.c
            if self.kind == "scale":
                return self.k * self.inner._eval(t)
            return t ** -self.a  # inv-power
        except OverflowError:
            return math.inf

    def describe(self) -> str:
        if self.kind == "constant":
            return f"constant(c={self.c:g})"
        if self.kind == "scale":
            return f"scale(k={self.k:g}, {self.inner.describe()})"
        return f"{self.kind}(a={self.a:g})"


def power(a) -> GrowthFunction:
    """t -> t**a with a > 0."""
    return GrowthFunction("power", a=a)


def power_capped(a) -> GrowthFunction:
    """t -> min(t**a, 1) with a > 0."""
    return GrowthFunction("power-capped", a=a)


def power_log(a) -> GrowthFunction:
    """t -> t**a * (1 + ln(1 + t)) with a > 0."""
    return GrowthFunction("power-log", a=a)


def constant(c) -> GrowthFunction:
    """t -> c with c > 0."""
    return GrowthFunction("constant", c=c)


def scale(k, inner: GrowthFunction) -> GrowthFunction:
    """t -> k * inner(t) with k > 0."""
    return GrowthFunction("scale", k=k, inner=inner)


def inv_power(a) -> GrowthFunction:
    """t -> t**(-a) with a > 0; decreasing, for GTheta fixtures only."""
    return GrowthFunction("inv-power", a=a)


@dataclass(frozen=True)
class Violation:
    """A recomputable witness that a class condition fails.

    `quantity` names the violated condition; the recorded values are the
    raw quantities at the grid pair (r1, r2), with the shift parameter for
    G2 where one applies.
    """

    quantity: str
    r1: float
    r2: float
    value1: float
    value2: float
    shift: float | None = None


@dataclass(frozen=True)
class ClassMembershipReport:
    class_id: str
    member: bool
    violation: Violation | None = None
    partner_young: YoungFunction | None = None


def _check_grid(grid, minimum_points=2):
    pts = tuple(grid)
    if len(pts) < minimum_points:
        raise DomainError(f"grid needs at least {minimum_points} points")
    if any(not _finite_real(t) or t <= 0 for t in pts) or list(pts) != sorted(set(pts)):
        raise DomainError("grid must be strictly increasing positive reals")
    return pts


def validate_g1(phi: GrowthFunction, grid: Iterable[float] | None = None) -> ClassMembershipReport:
    """Membership in G1: phi nondecreasing, phi(r)/r nonincreasing.

    Both conditions are checked on consecutive grid pairs.
    """
    pts = _check_grid(grid if grid is not None else log_grid(-6.0, 6.0, 200))
    vals = [phi(t) for t in pts]
    for t1, t2, v1, v2 in zip(pts, pts[1:], vals, vals[1:]):
        if v1 > v2 * (1.0 + _MONOTONE_RTOL):
            return ClassMembershipReport(
                "G1", False, Violation("phi nondecreasing", t1, t2, v1, v2)
            )
        q1, q2 = v1 / t1, v2 / t2
        if q2 > q1 * (1.0 + _MONOTONE_RTOL):
            return ClassMembershipReport(
                "G1", False, Violation("phi(r)/r nonincreasing", t1, t2, q1, q2)
            )
    return ClassMembershipReport("G1", True)


def validate_g2(
    psi: GrowthFunction,
    partner: YoungFunction,
    n: int,
    r_grid: Iterable[float] | None = None,
    s_grid: Iterable[float] | None = None,
) -> ClassMembershipReport:
    """Membership in G2 for the given partner Young function and dimension.

    Checks psi nondecreasing on the r grid and, for every shift s in the s
    grid, the map r -> psi((r+s)**n) / inverse(((r+s)/s)**n) nonincreasing
    on consecutive r pairs. Monotonicity is read in r with s as a
    parameter.
    """
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise DomainError("dimension must be a positive integer")
    rs = _check_grid(r_grid if r_grid is not None else log_grid(-3.0, 3.0, 96))
    shifts = _check_grid(s_grid if s_grid is not None else log_grid(-2.0, 2.0, 9), 1)

    vals = [psi(r) for r in rs]
    for r1, r2, v1, v2 in zip(rs, rs[1:], vals, vals[1:]):
        if v1 > v2 * (1.0 + _MONOTONE_RTOL):
            return ClassMembershipReport(
                "G2", False, Violation("psi nondecreasing", r1, r2, v1, v2), partner
            )
    for s in shifts:
        ratios = [
            psi((r + s) ** n) / partner.inverse(((r + s) / s) ** n) for r in rs
        ]
        for r1, r2, q1, q2 in zip(rs, rs[1:], ratios, ratios[1:]):
            if q2 > q1 * (1.0 + _MONOTONE_RTOL):
                return ClassMembershipReport(
                    "G2",
                    False,
                    Violation("shifted ratio nonincreasing in r", r1, r2, q1, q2, shift=s),
                    partner,
                )
    return ClassMembershipReport("G2", True, partner_young=partner)


def validate_g_theta(
    theta: GrowthFunction,
    partner: YoungFunction,
    n: int,
    grid: Iterable[float] | None = None,
    almost_const: float = 1.0,
) -> ClassMembershipReport:
    """Membership in GTheta for the given partner Young function.

    Checks theta nonincreasing on the grid ("decreasing" is read weakly so
    constants qualify) and inverse(t**-n)/theta(t) almost decreasing with
    the given constant: value(t2) <= almost_const * value(t1) for every
    grid pair t1 < t2.
    """
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise DomainError("dimension must be a positive integer")
    if not _finite_real(almost_const) or almost_const < 1.0:
        raise DomainError("almost_const must be a finite real >= 1")
    pts = _check_grid(grid if grid is not None else log_grid(-3.0, 3.0, 96))

    vals = [theta(t) for t in pts]
    for t1, t2, v1, v2 in zip(pts, pts[1:], vals, vals[1:]):
        if v2 > v1 * (1.0 + _MONOTONE_RTOL):
            return ClassMembershipReport(
                "GTheta", False, Violation("theta decreasing", t1, t2, v1, v2), partner
            )
    ratios = [partner.inverse(t ** -n) / v for t, v in zip(pts, vals)]
    for i in range(len(pts)):
        for j in range(i + 1, len(pts)):
            if ratios[j] > almost_const * ratios[i] * (1.0 + _MONOTONE_RTOL):
                return ClassMembershipReport(
                    "GTheta",
                    False,
                    Violation(
                        "inverse(t**-n)/theta(t) almost decreasing",
                        pts[i],
                        pts[j],
                        ratios[i],
                        ratios[j],
                    ),
                    partner,
                )
    return ClassMembershipReport("GTheta", True, partner_young=partner)


def check_preceq(
    phi1: GrowthFunction | Callable[[float], float],
    phi2: GrowthFunction | Callable[[float], float],
    t_grid: Iterable[float] | None = None,
    c_grid: Iterable[float] | None = None,
) -> RelationReport:
    """Smallest C on the grid with phi1(t) <= C * phi2(t) at every grid t."""
    ts, cs = _prepare_grids(t_grid, c_grid)
    lhs = [phi1(t) for t in ts]
    rhs = [phi2(t) for t in ts]
    last_bad = None
    for cand in cs:
        bad = None
        for t, v1, v2 in zip(ts, lhs, rhs):
            if v1 > cand * v2:
                bad = t
                break
        if bad is None:
            return RelationReport(True, cand, None, ts, cs)
        last_bad = bad
    return RelationReport(False, None, last_bad, ts, cs)


@dataclass(frozen=True)
class ApproxReport:
    """Two-sided domination check: phi1 <= C*phi2 and phi2 <= C'*phi1."""

    forward: RelationReport
    reverse: RelationReport

    @property
    def holds(self) -> bool:
        return self.forward.holds and self.reverse.holds


def check_approx(phi1, phi2, t_grid=None, c_grid=None) -> ApproxReport:
    """Conjunction of check_preceq in both directions."""
    return ApproxReport(
        forward=check_preceq(phi1, phi2, t_grid, c_grid),
        reverse=check_preceq(phi2, phi1, t_grid, c_grid),
    )
