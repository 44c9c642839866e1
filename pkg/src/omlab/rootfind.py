"""Bracketing bisection for monotone scalar problems.

Two primitives cover every solver in the package: the generalized inverse of
a nondecreasing function (strict-inequality convention, bracket invariant
f(lo) <= s < f(hi)) and the least feasible point of a nonincreasing
constraint g(b) <= target (bracket invariant g(lo) > target >= g(hi)).
Both converge to mixed absolute/relative width 1e-12 by default, two orders
of magnitude tighter than any assertion made on their results.
"""

from .errors import OmlabError

DEFAULT_RTOL = 1e-12

# enough doublings/halvings to walk 1.0 out to float max or down to denormals
_MAX_STEPS = 4200


def invert_nondecreasing(f, s, rtol=DEFAULT_RTOL):
    """inf{r >= 0 : f(r) > s} for continuous nondecreasing f with f(0) <= s.

    Returns the lower bracket endpoint, so f(result) <= s always holds and
    plateaus of f resolve to their right edge.
    """
    lo = 0.0
    hi = 1.0
    steps = 0
    while f(hi) <= s:
        hi *= 2.0
        steps += 1
        if steps > _MAX_STEPS:
            raise OmlabError(f"no finite upper bracket: function never exceeds {s!r}")
    # width relative to hi keeps tiny roots accurate too; when the true
    # inverse is 0 the loop runs the bracket down to denormals and the
    # midpoint-collapse guard ends it with lo = 0 exactly
    while hi - lo > rtol * hi:
        mid = 0.5 * (lo + hi)
        if not lo < mid < hi:
            break
        if f(mid) > s:
            hi = mid
        else:
            lo = mid
    return lo


def least_feasible(g, target, seed, rtol=DEFAULT_RTOL):
    """Least b > 0 with g(b) <= target, for continuous nonincreasing g.

    g must blow up as b -> 0+ and vanish as b -> inf (every gauge constraint
    in this package does). Returns the upper bracket endpoint, so the
    constraint g(result) <= target holds at the returned point.
    """
    if seed <= 0.0:
        raise OmlabError("bracket seed must be positive")
    hi = seed
    steps = 0
    while g(hi) > target:
        hi *= 2.0
        steps += 1
        if steps > _MAX_STEPS:
            raise OmlabError("constraint stays infeasible while expanding upward")
    lo = 0.5 * hi
    steps = 0
    while g(lo) <= target:
        hi = lo
        lo *= 0.5
        steps += 1
        if lo < 1e-300 or steps > _MAX_STEPS:
            return hi  # the infimum is numerically zero
    while hi - lo > rtol * hi:
        mid = 0.5 * (lo + hi)
        if not lo < mid < hi:
            break
        if g(mid) <= target:
            hi = mid
        else:
            lo = mid
    return hi
