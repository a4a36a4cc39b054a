"""Exact univariate polynomials and rational functions over Q.

Polynomials are coefficient lists indexed by degree, with no trailing
zeros (the zero polynomial is the empty list).  Rational functions are
kept in lowest terms with denominator constant term 1.
"""

from fractions import Fraction


class Polynomial:
    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        cs = [Fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)

    @classmethod
    def constant(cls, c):
        return cls([c])

    @classmethod
    def t(cls):
        return cls([0, 1])

    @property
    def degree(self):
        """Degree, or -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self):
        return not self.coeffs

    def __getitem__(self, k):
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else Fraction(0)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Polynomial([other])
        return isinstance(other, Polynomial) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Polynomial([other])
        n = max(len(self.coeffs), len(other.coeffs))
        return Polynomial([self[k] + other[k] for k in range(n)])

    __radd__ = __add__

    def __neg__(self):
        return Polynomial([-c for c in self.coeffs])

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Polynomial([other])
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return Polynomial([other * c for c in self.coeffs])
        if self.is_zero() or other.is_zero():
            return Polynomial()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return Polynomial(out)

    __rmul__ = __mul__

    def __pow__(self, n):
        if n < 0:
            raise ValueError("negative power")
        result = Polynomial([1])
        for _ in range(n):
            result = result * self
        return result

    def __divmod__(self, other):
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        quo = [Fraction(0)] * max(len(rem) - len(other.coeffs) + 1, 0)
        dlead = other.coeffs[-1]
        dn = len(other.coeffs)
        while len(rem) >= dn and any(rem):
            while rem and rem[-1] == 0:
                rem.pop()
            if len(rem) < dn:
                break
            factor = rem[-1] / dlead
            shift = len(rem) - dn
            quo[shift] = factor
            for i in range(dn):
                rem[shift + i] -= factor * other.coeffs[i]
            rem.pop()
        return Polynomial(quo), Polynomial(rem)

    def __mod__(self, other):
        return divmod(self, other)[1]

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def evaluate(self, x):
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def shift(self, n):
        """Multiply by t^n."""
        if self.is_zero():
            return self
        return Polynomial([Fraction(0)] * n + list(self.coeffs))

    def reversed_scaled(self, c=Fraction(1)):
        """t^deg * p(1/(c*t)) for a nonzero polynomial: coefficient k becomes
        p[deg-k] / c^(deg-k)."""
        if self.is_zero():
            return self
        d = self.degree
        c = Fraction(c)
        return Polynomial([self.coeffs[d - k] / c ** (d - k) for k in range(d + 1)])

    def monic(self):
        if self.is_zero():
            return self
        lead = self.coeffs[-1]
        return Polynomial([c / lead for c in self.coeffs])

    def __repr__(self):
        return f"Polynomial({[str(c) for c in self.coeffs]})"

    def __str__(self):
        if self.is_zero():
            return "0"
        parts = []
        for k, c in enumerate(self.coeffs):
            if c == 0:
                continue
            mag = abs(c)
            if k == 0:
                body = str(mag)
            else:
                var = "t" if k == 1 else f"t^{k}"
                body = var if mag == 1 else f"{mag}*{var}"
            if not parts:
                parts.append(("-" if c < 0 else "") + body)
            else:
                parts.append(("- " if c < 0 else "+ ") + body)
        return " ".join(parts)


def poly_gcd(a: Polynomial, b: Polynomial) -> Polynomial:
    """Monic gcd over Q (Euclidean algorithm)."""
    while not b.is_zero():
        a, b = b, a % b
    return a.monic()


class RationalFunction:
    """p/q in lowest terms, normalized so q(0) = 1."""

    __slots__ = ("num", "den")

    def __init__(self, num: Polynomial, den: Polynomial):
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        g = poly_gcd(num, den)
        if not g.is_zero() and g.degree > 0:
            num = num // g
            den = den // g
        c0 = den[0]
        if c0 == 0:
            raise ValueError("denominator vanishes at 0 after reduction")
        inv = 1 / c0
        self.num = num * inv
        self.den = den * inv

    @classmethod
    def constant(cls, c):
        return cls(Polynomial([c]), Polynomial([1]))

    def __eq__(self, other):
        return (
            isinstance(other, RationalFunction)
            and self.num == other.num
            and self.den == other.den
        )

    def __hash__(self):
        return hash((self.num, self.den))

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return RationalFunction(self.num * other, self.den)
        return RationalFunction(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    @property
    def degree_gap(self):
        """deg(den) - deg(num); the zero numerator is rejected upstream."""
        return self.den.degree - self.num.degree

    def series(self, precision):
        """Truncated power series expansion to the given precision."""
        from .series import TruncatedSeries

        num = TruncatedSeries([self.num[k] for k in range(precision + 1)], precision)
        den = TruncatedSeries([self.den[k] for k in range(precision + 1)], precision)
        return num * den.inverse()

    def __repr__(self):
        return f"RationalFunction({self.num!r}, {self.den!r})"

    def __str__(self):
        if self.den == Polynomial([1]):
            return str(self.num)
        return f"({self.num}) / ({self.den})"


def fractions_equal(num_a, den_a, num_b, den_b):
    """Equality of two formal fractions of polynomials by cross-multiplication.

    Used where intermediate fractions (Laurent shifts, reciprocal
    substitutions) do not satisfy the q(0)=1 normalization.
    """
    return num_a * den_b == num_b * den_a
