"""Big Witt vectors over Q at finite precision.

A Witt vector is a truncated power series with constant term 1.  Ring
addition is the series product; ring multiplication is transported
through ghost coordinates, which is valid because the coefficients live
in a Q-algebra.
"""

from fractions import Fraction

from .errors import PrecisionMismatch
from .series import TruncatedSeries, series_exp, series_log


class WittVector:
    __slots__ = ("series",)

    def __init__(self, series: TruncatedSeries):
        if series.coeffs[0] != 1:
            raise ValueError("Witt vector series must have constant term 1")
        self.series = series

    @classmethod
    def zero(cls, precision):
        """Additive identity: the constant series 1."""
        return cls(TruncatedSeries.one(precision))

    @classmethod
    def one(cls, precision):
        """Multiplicative identity: 1/(1-t), all ghost components 1."""
        return cls(TruncatedSeries.geometric(1, precision))

    @classmethod
    def from_coefficients(cls, coeffs, precision=None):
        return cls(TruncatedSeries(coeffs, precision))

    @property
    def precision(self):
        return self.series.precision

    def __eq__(self, other):
        return isinstance(other, WittVector) and self.series == other.series

    def __hash__(self):
        return hash(self.series)

    def __repr__(self):
        return f"WittVector({[str(c) for c in self.series.coeffs]})"


class GhostVector:
    """Ghost coordinates gh_1..gh_N of a Witt vector."""

    __slots__ = ("components",)

    def __init__(self, components):
        self.components = tuple(Fraction(c) for c in components)

    @property
    def precision(self):
        return len(self.components)

    def __eq__(self, other):
        return isinstance(other, GhostVector) and self.components == other.components

    def __repr__(self):
        return f"GhostVector({[str(c) for c in self.components]})"


def ghost(w: WittVector) -> GhostVector:
    """gh_n = n * [t^n] log(series); i.e. t d/dt log(series) = sum gh_n t^n."""
    logs = series_log(w.series)
    return GhostVector([n * logs.coeffs[n] for n in range(1, w.precision + 1)])


def unghost(g: GhostVector) -> WittVector:
    """Inverse of ghost: exp(sum gh_n t^n / n)."""
    n = g.precision
    body = TruncatedSeries(
        [Fraction(0)] + [g.components[k - 1] / k for k in range(1, n + 1)], n
    )
    return WittVector(series_exp(body))


def _check_precision(a: WittVector, b: WittVector):
    if a.precision != b.precision:
        raise PrecisionMismatch(f"precision {a.precision} vs {b.precision}")


def witt_add(a: WittVector, b: WittVector) -> WittVector:
    _check_precision(a, b)
    return WittVector(a.series * b.series)


def witt_neg(a: WittVector) -> WittVector:
    return WittVector(a.series.inverse())

def witt_mul(a: WittVector, b: WittVector) -> WittVector:
    _check_precision(a, b)
    ga, gb = ghost(a), ghost(b)
    return unghost(GhostVector([x * y for x, y in zip(ga.components, gb.components)]))
