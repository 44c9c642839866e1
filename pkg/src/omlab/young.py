"""Young functions from a closed parametric family.

A Young function here is convex, continuous, vanishes at zero, and grows
without bound, so every Orlicz-style gauge built on it is well defined.
The family (powers, powers with a log factor, exp(t)-1, ramps, finite sums,
argument scalings) is closed under the constructions the norm and inclusion
engines need, and every member is finite-valued on [0, inf): evaluation is
exact arithmetic and the generalized inverse is computable.

The generalized inverse uses the strict-inequality convention
inf{r >= 0 : value(r) > s}, which resolves plateaus (ramps and sums of
ramps) to their right edge. Families with a closed-form inverse (power,
ramp, exp-minus-one, and argument scalings thereof) use it; the rest fall
back to bracketing bisection with the invariant value(lo) <= s < value(hi).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Iterable

from .errors import DomainError
from .grids import DEFAULT_C_GRID, DEFAULT_T_GRID, log_grid
from .rootfind import invert_nondecreasing

__all__ = [
    "YoungFunction",
    "RelationReport",
    "ValidationReport",
    "power",
    "power_log",
    "exp_minus_one",
    "ramp",
    "sum_of",
    "arg_scale",
    "validate_young",
    "check_prec",
]

_KINDS = ("power", "power-log", "exp-minus-one", "ramp", "sum", "arg-scale")

# slack for midpoint-convexity and monotonicity checks on exact evaluations
_CONVEXITY_RTOL = 1e-12


def _finite_real(x) -> bool:
    return isinstance(x, (int, float)) and not isinstance(x, bool) and math.isfinite(x)


def _param(value, name, minimum, strict=False):
    if not _finite_real(value):
        raise DomainError(f"{name} must be a finite real, got {value!r}")
    value = float(value)
    if value < minimum or (strict and value == minimum):
        op = ">" if strict else ">="
        raise DomainError(f"{name} must be {op} {minimum}, got {value}")
    return value


@dataclass(frozen=True)
class YoungFunction:
    """One member of the parametric Young-function family.

    Build instances through the module factories (`power`, `power_log`,
    `exp_minus_one`, `ramp`, `sum_of`, `arg_scale`); the raw constructor
    validates but does not document the field conventions.
    """

    kind: str
    p: float | None = None
    t0: float | None = None
    c: float | None = None
    parts: tuple["YoungFunction", ...] = ()

    def __post_init__(self):
        if self.kind not in _KINDS:
            raise DomainError(f"unknown Young family {self.kind!r}")
        if self.kind in ("power", "power-log"):
            object.__setattr__(self, "p", _param(self.p, "p", 1.0))
        elif self.kind == "ramp":
            object.__setattr__(self, "t0", _param(self.t0, "t0", 0.0, strict=True))
        elif self.kind == "sum":
            if len(self.parts) < 2 or not all(isinstance(q, YoungFunction) for q in self.parts):
                raise DomainError("sum needs at least two Young-function parts")
        elif self.kind == "arg-scale":
            object.__setattr__(self, "c", _param(self.c, "c", 0.0, strict=True))
            if len(self.parts) != 1 or not isinstance(self.parts[0], YoungFunction):
                raise DomainError("arg-scale needs exactly one inner Young function")

    def __call__(self, t: float) -> float:
        """Evaluate at t >= 0.

        Values beyond float range saturate to +inf, which keeps the
        monotone solvers consistent.
        """
        if not _finite_real(t) or t < 0:
            raise DomainError(f"Young argument must be a finite nonnegative real, got {t!r}")
        return self._eval(float(t))

    def _eval(self, t: float) -> float:
        # internal path: also accepts +inf (maps to +inf)
        try:
            if self.kind == "power":
                return t ** self.p
            if self.kind == "power-log":
                return t ** self.p * math.log(math.e + t)
            if self.kind == "exp-minus-one":
                return math.expm1(t)
            if self.kind == "ramp":
                return max(0.0, t - self.t0)
            if self.kind == "sum":
                return math.fsum(part._eval(t) for part in self.parts)
            return self.parts[0]._eval(self.c * t)  # arg-scale
        except OverflowError:
            return math.inf

    def inverse(self, s: float) -> float:
        """Generalized inverse inf{r >= 0 : value(r) > s}.

        Nondecreasing in s, with value(inverse(s)) <= s <= inverse(value(s))
        up to solver tolerance. Note that inverse(0) is the right edge of
        the zero plateau: 0 for members positive on (0, inf), t0 for ramps.
        """
        if not _finite_real(s) or s < 0:
            raise DomainError(f"inverse argument must be a finite nonnegative real, got {s!r}")
        return self._inverse(float(s))

    def _inverse(self, s: float) -> float:
        if self.kind == "power":
            return s ** (1.0 / self.p)
        if self.kind == "exp-minus-one":
            return math.log1p(s)
        if self.kind == "ramp":
            return self.t0 + s
        if self.kind == "arg-scale":
            return self.parts[0]._inverse(s) / self.c
        return invert_nondecreasing(self._eval, s)

    @property
    def strictly_positive(self) -> bool:
        """True when the function is positive everywhere on (0, inf).

        Ramps (and sums consisting only of ramps) vanish on an initial
        interval, so their generalized inverse at 0 is positive.
        """
        if self.kind == "ramp":
            return False
        if self.kind == "sum":
            return any(part.strictly_positive for part in self.parts)
        if self.kind == "arg-scale":
            return self.parts[0].strictly_positive
        return True

    def describe(self) -> str:
        if self.kind == "power":
            return f"power(p={self.p:g})"
        if self.kind == "power-log":
            return f"power-log(p={self.p:g})"
        if self.kind == "exp-minus-one":
            return "exp-minus-one"
        if self.kind == "ramp":
            return f"ramp(t0={self.t0:g})"
        if self.kind == "sum":
            return "sum(" + ", ".join(part.describe() for part in self.parts) + ")"
        return f"arg-scale(c={self.c:g}, {self.parts[0].describe()})"


def power(p) -> YoungFunction:
    """t -> t**p with p >= 1."""
    return YoungFunction("power", p=p)


def power_log(p) -> YoungFunction:
    """t -> t**p * ln(e + t) with p >= 1."""
    return YoungFunction("power-log", p=p)


def exp_minus_one() -> YoungFunction:
    """t -> exp(t) - 1."""
    return YoungFunction("exp-minus-one")


def ramp(t0) -> YoungFunction:
    """t -> max(0, t - t0) with t0 > 0; vanishes on [0, t0]."""
    return YoungFunction("ramp", t0=t0)


def sum_of(*parts: YoungFunction) -> YoungFunction:
    """Pointwise sum of two or more family members."""
    return YoungFunction("sum", parts=tuple(parts))


def arg_scale(c, inner: YoungFunction) -> YoungFunction:
    """t -> inner(c * t) with c > 0."""
    return YoungFunction("arg-scale", c=c, parts=(inner,))


@dataclass(frozen=True)
class ValidationReport:
    """Outcome of an axiom sweep; carries the first violation found."""

    passed: bool
    failure: str | None = None
    where: tuple[float, ...] = ()


def validate_young(phi: YoungFunction, grid: Iterable[float] | None = None) -> ValidationReport:
    """Check the defining axioms on a sample grid.

    Verifies value(0) = 0, monotonicity on consecutive grid points, midpoint
    convexity on every grid pair (relative tolerance 1e-12), and growth from
    the first to the last grid point. Continuity is automatic for this
    family, so left-continuity needs no separate check.
    """
    pts = tuple(grid) if grid is not None else log_grid(-6.0, 6.0, 60)
    if not pts:
        raise DomainError("validation grid must be nonempty")
    if any(not _finite_real(t) or t <= 0 for t in pts) or list(pts) != sorted(set(pts)):
        raise DomainError("validation grid must be strictly increasing positive reals")

    if phi(0.0) != 0.0:
        return ValidationReport(False, "value at zero is not 0", (0.0,))
    vals = [phi(t) for t in pts]
    for t1, t2, v1, v2 in zip(pts, pts[1:], vals, vals[1:]):
        if v1 > v2 * (1.0 + _CONVEXITY_RTOL):
            return ValidationReport(False, "not nondecreasing", (t1, t2))
    for i in range(len(pts)):
        for j in range(i + 1, len(pts)):
            mid = 0.5 * (pts[i] + pts[j])
            bound = 0.5 * (vals[i] + vals[j])
            if phi(mid) > bound * (1.0 + _CONVEXITY_RTOL):
                return ValidationReport(False, "midpoint convexity fails", (pts[i], pts[j]))
    if not vals[-1] > vals[0]:
        return ValidationReport(False, "no growth across the grid", (pts[0], pts[-1]))
    return ValidationReport(True)


@dataclass(frozen=True)
class RelationReport:
    """Outcome of a grid-certified order check between two gauge shapes.

    `holds` means a witness constant on the C grid makes the inequality true
    at every t-grid point; otherwise `counterexample_t` records the point
    that defeated the largest candidate C. Either way this is evidence on
    the sampled grids, not a proof.
    """

    holds: bool
    witness_c: float | None
    counterexample_t: float | None
    t_grid: tuple[float, ...]
    c_grid: tuple[float, ...]

    @property
    def searched_c_range(self) -> tuple[float, float]:
        return (self.c_grid[0], self.c_grid[-1])


def _prepare_grids(t_grid, c_grid):
    ts = tuple(t_grid) if t_grid is not None else DEFAULT_T_GRID
    cs = tuple(c_grid) if c_grid is not None else DEFAULT_C_GRID
    if not ts or not cs:
        raise DomainError("relation grids must be nonempty")
    return ts, cs


def check_prec(
    phi1: YoungFunction | Callable[[float], float],
    phi2: YoungFunction | Callable[[float], float],
    t_grid: Iterable[float] | None = None,
    c_grid: Iterable[float] | None = None,
) -> RelationReport:
    """Smallest C on the grid with phi1(t) <= phi2(C*t) at every grid t.

    Arguments may be YoungFunction instances or plain callables, so the same
    checker serves order relations between generalized inverses. Candidates
    are scanned in increasing order; on failure the report keeps the t that
    defeated the largest C.
    """
    ts, cs = _prepare_grids(t_grid, c_grid)
    lhs = [phi1(t) for t in ts]
    last_bad = None
    for cand in cs:
        bad = None
        for t, v in zip(ts, lhs):
            if v > phi2(cand * t):
                bad = t
                break
        if bad is None:
            return RelationReport(True, cand, None, ts, cs)
        last_bad = bad
    return RelationReport(False, None, last_bad, ts, cs)
