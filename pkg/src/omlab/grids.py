"""Log-spaced default grids shared by the relation checkers and norm sweeps."""

from .errors import DomainError


def log_grid(lo_exp: float, hi_exp: float, count: int) -> tuple[float, ...]:
    """`count` points 10**e with e equally spaced in [lo_exp, hi_exp].

    Exponents are built as exact index ratios, so a symmetric range with an
    odd count contains 10**0 == 1.0 exactly; relation checks against the
    default grids can then certify reflexivity with witness constant 1.
    """
    if count < 1:
        raise DomainError("grid needs at least one point")
    if count == 1:
        return (10.0 ** lo_exp,)
    span = hi_exp - lo_exp
    return tuple(10.0 ** (lo_exp + span * i / (count - 1)) for i in range(count))


# t-grid for order checks: spans the scale range of every built-in fixture.
DEFAULT_T_GRID = log_grid(-6.0, 6.0, 200)

# 101 points (odd) so that C = 1 lies on the grid exactly.
DEFAULT_C_GRID = log_grid(-4.0, 4.0, 101)


def default_radii() -> tuple[float, ...]:
    """Dyadic radius sweep 2**k, k = -6..6 (exactly representable floats)."""
    return tuple(2.0 ** k for k in range(-6, 7))
