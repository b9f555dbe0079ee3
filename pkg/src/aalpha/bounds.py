"""Closed-form spectral-radius lower bounds and their exact comparison.

Two bounds on lambda1 of the alpha matrix of a graph with maximum degree
Delta and minimum degree delta:

    g(Delta, alpha)        = (alpha*(Delta+1) + sqrt(S)) / 2
    f(delta, Delta, alpha) = (alpha*(Delta+delta)
                              + sqrt(alpha^2*(Delta-delta)^2
                                     + 4*Delta*(1-alpha)^2)) / 2

where S = alpha^2*(Delta+1)^2 + 4*Delta*(1-2*alpha), which is identically
equal to alpha^2*(Delta-1)^2 + 4*Delta*(1-alpha)^2, a sum of squares. The
code evaluates g through that second form so rounding can never push the
square-root argument negative; sqrt_arg_identity exposes both forms for
verification.

Which bound wins is decided exactly, by integer and endpoint tests alone
(classify); floating comparison of f and g exists only as a consistency
check on the symbolic answer (compare_numeric).
"""

import enum
import math
import operator
from dataclasses import dataclass

from .errors import ConsistencyError, InputError

DEFAULT_EPSILON = 1e-9


class Ordering(enum.Enum):
    """Relation of f to g at one (delta, Delta, alpha) point."""

    GREATER = "Greater"
    EQUAL = "Equal"
    LESS = "Less"


class Witness(enum.Enum):
    """Which condition of the trichotomy fired. Values are plain ASCII and
    comma-free so they survive CSV untouched."""

    ALPHA_ZERO = "alpha=0"
    ALPHA_ONE = "alpha=1 & Delta>=1"
    DELTA_MIN_ONE = "delta=1"
    INTERIOR_GREATER = "delta>=2 & alpha!=0 & alpha!=1"
    ISOLATED_LESS = "delta=0 & alpha!=0 & alpha!=1"
    EDGELESS_LESS = "Delta=0 & alpha!=0"


@dataclass(frozen=True)
class BoundInputs:
    """Validated (delta, Delta, alpha) argument triple: degrees are integers
    with 0 <= delta <= Delta, alpha lies in [0, 1] (or just alpha >= 0 when
    permissive)."""

    delta: int
    Delta: int
    alpha: float
    permissive: bool = False

    def __post_init__(self):
        try:
            d = operator.index(self.delta)
            dd = operator.index(self.Delta)
        except TypeError:
            raise InputError(
                f"degrees must be integers, got delta={self.delta!r}, "
                f"Delta={self.Delta!r}")
        object.__setattr__(self, "delta", d)
        object.__setattr__(self, "Delta", dd)
        if not 0 <= d <= dd:
            raise InputError(f"need 0 <= delta <= Delta, got ({d}, {dd})")
        a = float(self.alpha)
        if not math.isfinite(a):
            raise InputError(f"alpha must be finite, got {a}")
        hi = math.inf if self.permissive else 1.0
        if not 0.0 <= a <= hi:
            cap = "alpha >= 0" if self.permissive else "alpha in [0, 1]"
            raise InputError(f"need {cap}, got {a}")
        object.__setattr__(self, "alpha", a)


@dataclass(frozen=True)
class BoundComparison:
    """f and g at one point together with the agreed ordering."""

    f_value: float
    g_value: float
    difference: float
    ordering: Ordering
    witness: Witness


def _g_kernel(Delta: int, alpha: float) -> float:
    # sqrt argument in the sum-of-squares form: never negative.
    s = alpha * alpha * (Delta - 1) ** 2 + 4.0 * Delta * (1.0 - alpha) ** 2
    return 0.5 * (alpha * (Delta + 1) + math.sqrt(s))


def _f_kernel(delta: int, Delta: int, alpha: float) -> float:
    s = alpha * alpha * (Delta - delta) ** 2 + 4.0 * Delta * (1.0 - alpha) ** 2
    return 0.5 * (alpha * (Delta + delta) + math.sqrt(s))


def bound_g(Delta: int, alpha: float, permissive: bool = False) -> float:
    """The one-parameter bound g(Delta, alpha); alpha in [0, 1] unless
    permissive (then any alpha >= 0).

    At delta = 1 it coincides with f bit-for-bit, since both evaluate the
    same sum-of-squares expression.
    """
    try:
        Delta = operator.index(Delta)
    except TypeError:
        raise InputError(f"Delta must be an integer, got {Delta!r}")
    if Delta < 0:
        raise InputError(f"Delta must be nonnegative, got {Delta}")
    v = BoundInputs(0, Delta, alpha, permissive)
    return _g_kernel(v.Delta, v.alpha)


def bound_f(delta: int, Delta: int, alpha: float,
            permissive: bool = False) -> float:
    """The two-parameter bound f(delta, Delta, alpha); needs
    0 <= delta <= Delta, alpha in [0, 1] unless permissive."""
    v = BoundInputs(delta, Delta, alpha, permissive)
    return _f_kernel(v.delta, v.Delta, v.alpha)


def sqrt_arg_identity(Delta: int, alpha: float) -> tuple[float, float]:
    """Both closed forms of g's square-root argument:

        lhs = alpha^2*(Delta+1)^2 + 4*Delta*(1-2*alpha)
        rhs = alpha^2*(Delta-1)^2 + 4*Delta*(1-alpha)^2

    They are equal as polynomials; rhs is a sum of squares, so it is the
    form safe to put under a square root. Defined for Delta >= 0, alpha >= 0.
    """
    try:
        Delta = operator.index(Delta)
    except TypeError:
        raise InputError(f"Delta must be an integer, got {Delta!r}")
    if Delta < 0:
        raise InputError(f"Delta must be nonnegative, got {Delta}")
    alpha = float(alpha)
    if not math.isfinite(alpha) or alpha < 0.0:
        raise InputError(f"alpha must be a finite nonnegative real, got {alpha}")
    lhs = alpha * alpha * (Delta + 1) ** 2 + 4.0 * Delta * (1.0 - 2.0 * alpha)
    rhs = alpha * alpha * (Delta - 1) ** 2 + 4.0 * Delta * (1.0 - alpha) ** 2
    return lhs, rhs


def _classify_kernel(delta: int, Delta: int,
                     alpha: float) -> tuple[Ordering, Witness]:
    if alpha == 0.0:
        return Ordering.EQUAL, Witness.ALPHA_ZERO
    if alpha == 1.0:
        if Delta >= 1:
            return Ordering.EQUAL, Witness.ALPHA_ONE
        return Ordering.LESS, Witness.EDGELESS_LESS
    # 0 < alpha < 1 from here on.
    if delta == 1:
        return Ordering.EQUAL, Witness.DELTA_MIN_ONE
    if delta >= 2:
        return Ordering.GREATER, Witness.INTERIOR_GREATER
    # delta = 0: f falls below g; report the sharper witness when the
    # graph parameters force Delta = 0 as well.
    if Delta == 0:
        return Ordering.LESS, Witness.EDGELESS_LESS
    if delta == 0:
        return Ordering.LESS, Witness.ISOLATED_LESS
    raise AssertionError(f"classify missed ({delta}, {Delta}, {alpha})")


def classify(delta: int, Delta: int, alpha: float) -> tuple[Ordering, Witness]:
    """Exact trichotomy for f vs g, decided symbolically (no floating
    comparison of the bound values):

        Equal    iff alpha = 0, or (alpha = 1 and Delta >= 1), or delta = 1
        Greater  iff delta >= 2 and alpha not in {0, 1}
        Less     iff (delta = 0 and alpha not in {0, 1})
                     or (Delta = 0 and alpha != 0)

    The three cases partition 0 <= delta <= Delta, alpha in [0, 1]. alpha
    outside [0, 1] is refused: the trichotomy is only established there.
    """
    v = BoundInputs(delta, Delta, alpha)
    return _classify_kernel(v.delta, v.Delta, v.alpha)


def numeric_ordering(f_value: float, g_value: float,
                     epsilon: float = DEFAULT_EPSILON) -> Ordering:
    """Ordering read off the sign of f - g with a dead zone of epsilon."""
    diff = f_value - g_value
    if diff > epsilon:
        return Ordering.GREATER
    if diff < -epsilon:
        return Ordering.LESS
    return Ordering.EQUAL


def compare_numeric(delta: int, Delta: int, alpha: float,
                    epsilon: float = DEFAULT_EPSILON) -> BoundComparison:
    """Evaluate f and g and check the numeric sign against classify.

    A disagreement raises ConsistencyError carrying both verdicts; it would
    mean either the formulas or the trichotomy is implemented wrong, so it
    is a test oracle rather than a recoverable condition.
    """
    if not epsilon > 0.0:
        raise InputError(f"epsilon must be positive, got {epsilon}")
    v = BoundInputs(delta, Delta, alpha)
    f = _f_kernel(v.delta, v.Delta, v.alpha)
    g = _g_kernel(v.Delta, v.alpha)
    symbolic, witness = _classify_kernel(v.delta, v.Delta, v.alpha)
    numeric = numeric_ordering(f, g, epsilon)
    if numeric is not symbolic:
        raise ConsistencyError(
            f"numeric ordering {numeric.value} contradicts symbolic "
            f"{symbolic.value} at (delta={v.delta}, Delta={v.Delta}, "
            f"alpha={v.alpha})",
            numeric=numeric, symbolic=symbolic, f_value=f, g_value=g)
    return BoundComparison(f, g, f - g, symbolic, witness)
