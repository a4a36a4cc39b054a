"""Truncated formal power series over Q with exact coefficients.

A series stores exactly precision+1 coefficients a_0..a_N.  Precision is
never extended or truncated silently: combining two series of different
precision raises PrecisionMismatch.
"""

from fractions import Fraction

from .errors import NotRational, PrecisionMismatch
from .poly import Polynomial, RationalFunction


class TruncatedSeries:
    __slots__ = ("coeffs", "precision")

    def __init__(self, coeffs, precision=None):
        cs = [Fraction(c) for c in coeffs]
        if precision is None:
            precision = len(cs) - 1
        if precision < 0:
            raise ValueError("precision must be >= 0")
        if len(cs) != precision + 1:
            raise ValueError(f"need {precision + 1} coefficients, got {len(cs)}")
        self.coeffs = tuple(cs)
        self.precision = precision

    @classmethod
    def one(cls, precision):
        return cls([1] + [0] * precision, precision)

    @classmethod
    def zero(cls, precision):
        return cls([0] * (precision + 1), precision)

    @classmethod
    def geometric(cls, ratio, precision):
        """Expansion of 1/(1 - ratio*t)."""
        ratio = Fraction(ratio)
        return cls([ratio**n for n in range(precision + 1)], precision)

    @classmethod
    def from_polynomial(cls, p: Polynomial, precision):
        return cls([p[k] for k in range(precision + 1)], precision)

    def __getitem__(self, k):
        return self.coeffs[k]

    def __eq__(self, other):
        return (
            isinstance(other, TruncatedSeries)
            and self.precision == other.precision
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"TruncatedSeries({[str(c) for c in self.coeffs]})"

    def _check(self, other):
        if not isinstance(other, TruncatedSeries):
            raise TypeError("expected TruncatedSeries")
        if self.precision != other.precision:
            raise PrecisionMismatch(
                f"precision {self.precision} vs {other.precision}"
            )

    def __add__(self, other):
        self._check(other)
        return TruncatedSeries(
            [a + b for a, b in zip(self.coeffs, other.coeffs)], self.precision
        )

    def __sub__(self, other):
        self._check(other)
        return TruncatedSeries(
            [a - b for a, b in zip(self.coeffs, other.coeffs)], self.precision
        )

    def __neg__(self):
        return TruncatedSeries([-a for a in self.coeffs], self.precision)

    def scale(self, c):
        c = Fraction(c)
        return TruncatedSeries([c * a for a in self.coeffs], self.precision)

    def __mul__(self, other):
        self._check(other)
        n = self.precision
        out = [Fraction(0)] * (n + 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j in range(n + 1 - i):
                    b = other.coeffs[j]
                    if b:
                        out[i + j] += a * b
        return TruncatedSeries(out, n)

    def inverse(self):
        """Multiplicative inverse; requires a_0 != 0."""
        if self.coeffs[0] == 0:
            raise ZeroDivisionError("series has zero constant term")
        n = self.precision
        inv0 = 1 / self.coeffs[0]
        out = [inv0] + [Fraction(0)] * n
        for k in range(1, n + 1):
            acc = Fraction(0)
            for i in range(1, k + 1):
                acc += self.coeffs[i] * out[k - i]
            out[k] = -inv0 * acc
        return TruncatedSeries(out, n)

    def truncate(self, precision):
        if precision > self.precision:
            raise ValueError("cannot extend precision")
        return TruncatedSeries(self.coeffs[: precision + 1], precision)


def series_exp(s: TruncatedSeries) -> TruncatedSeries:
    """exp of a series with zero constant term, to the same precision.

    Uses the recurrence n*e_n = sum_{k=1..n} k*s_k*e_{n-k} coming from
    e' = s'*e.
    """
    if s.coeffs[0] != 0:
        raise ValueError("series_exp requires zero constant term")
    n = s.precision
    e = [Fraction(1)] + [Fraction(0)] * n
    for m in range(1, n + 1):
        acc = Fraction(0)
        for k in range(1, m + 1):
            if s.coeffs[k]:
                acc += k * s.coeffs[k] * e[m - k]
        e[m] = acc / m
    return TruncatedSeries(e, n)


def series_log(s: TruncatedSeries) -> TruncatedSeries:
    """log of a series with constant term 1, to the same precision.

    Uses the recurrence n*l_n = n*s_n - sum_{k=1..n-1} k*l_k*s_{n-k}
    coming from l' * s = s'.
    """
    if s.coeffs[0] != 1:
        raise ValueError("series_log requires constant term 1")
    n = s.precision
    l = [Fraction(0)] * (n + 1)
    for m in range(1, n + 1):
        acc = m * s.coeffs[m]
        for k in range(1, m):
            if l[k] and s.coeffs[m - k]:
                acc -= k * l[k] * s.coeffs[m - k]
        l[m] = acc / m
    return TruncatedSeries(l, n)


def _solve_linear(rows, rhs):
    """Solve A x = b exactly over Q; returns one solution (free vars = 0)
    or None when inconsistent."""
    nrows = len(rows)
    ncols = len(rows[0]) if nrows else 0
    a = [[Fraction(x) for x in row] + [Fraction(b)] for row, b in zip(rows, rhs)]
    pivots = []
    r = 0
    for c in range(ncols):
        pivot = next((i for i in range(r, nrows) if a[i][c] != 0), None)
        if pivot is None:
            continue
        a[r], a[pivot] = a[pivot], a[r]
        inv = 1 / a[r][c]
        a[r] = [x * inv for x in a[r]]
        for i in range(nrows):
            if i != r and a[i][c] != 0:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    for i in range(r, nrows):
        if a[i][ncols] != 0:
            return None
    x = [Fraction(0)] * ncols
    for i, c in enumerate(pivots):
        x[c] = a[i][ncols]
    return x


def pade_reconstruct(s: TruncatedSeries, max_deg: int) -> RationalFunction:
    """Reconstruct p/q with deg p, deg q <= max_deg matching every stored
    coefficient of s.

    Searches denominator degree first, then numerator degree, so the
    minimal-degree representative is returned.  Raises NotRational when no
    pair of degrees fits all precision+1 coefficients.
    """
    if s.coeffs[0] != 1:
        raise ValueError("pade_reconstruct requires constant term 1")
    if max_deg < 0:
        raise ValueError("max_deg must be >= 0")
    if s.precision < 2 * max_deg:
        raise ValueError("precision must be at least 2*max_deg")
    n = s.precision
    a = s.coeffs
    for dden in range(max_deg + 1):
        for dnum in range(max_deg + 1):
            # Unknowns q_1..q_dden with q_0 = 1; require (s*q)_j = 0 for
            # j = dnum+1..n, then p = s*q truncated at dnum.
            rows = []
            rhs = []
            for j in range(dnum + 1, n + 1):
                rows.append([a[j - i] if j - i >= 0 else Fraction(0) for i in range(1, dden + 1)])
                rhs.append(-a[j])
            if rows:
                sol = _solve_linear(rows, rhs)
                if sol is None:
                    continue
            else:
                sol = [Fraction(0)] * dden
            q = Polynomial([Fraction(1)] + sol)
            p_coeffs = []
            for j in range(dnum + 1):
                p_coeffs.append(sum(a[j - i] * q[i] for i in range(min(j, dden) + 1)))
            p = Polynomial(p_coeffs)
            return RationalFunction(p, q)
    raise NotRational(
        f"no rational function of degree <= {max_deg} matches all "
        f"{n + 1} coefficients"
    )
