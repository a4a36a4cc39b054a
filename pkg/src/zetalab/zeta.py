"""Zeta functions of endomorphisms from Z/2-graded matrix realizations.

A SuperRealization is a pair of square rational matrices acting on the
even and odd parts of a graded vector space.  Its zeta function is
computed two independent ways: as exp of the supertrace series, and as a
ratio of reverse characteristic polynomials; the package verifies the two
agree, reconstructs the rational form, and checks the degree and
functional-equation identities.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .errors import NoSignWorks, NotInvertible, NotRational, SingularBlock
from .matrices import Matrix, block_diag, kronecker, reverse_charpoly
from .poly import Polynomial, RationalFunction, fractions_equal
from .series import TruncatedSeries, pade_reconstruct, series_exp
from .witt import WittVector

DEFAULT_PRECISION = 12


@dataclass(frozen=True)
class SuperRealization:
    t_plus: Matrix
    t_minus: Matrix
    label: str = ""

    def __post_init__(self):
        if not self.t_plus.is_square or not self.t_minus.is_square:
            raise ValueError("realization matrices must be square")

    @property
    def dim_plus(self):
        return self.t_plus.rows

    @property
    def dim_minus(self):
        return self.t_minus.rows


@dataclass(frozen=True)
class SuperDimension:
    plus: int
    minus: int

    @property
    def trace_of_identity(self):
        return self.plus - self.minus


@dataclass(frozen=True)
class SemisimpleBlockData:
    blocks: tuple  # of (Matrix, int multiplicity)


@dataclass(frozen=True)
class FunctionalEquationResult:
    sign: int
    det: Fraction
    holds: bool


@dataclass(frozen=True)
class ZetaReport:
    series: TruncatedSeries
    rational: Optional[RationalFunction]
    degree_gap: Optional[int]
    super_trace_id: SuperDimension
    functional_eq: Optional[FunctionalEquationResult]


def supertrace_sequence(r: SuperRealization, N: int):
    """a_n = tr(t_plus^n) - tr(t_minus^n) for n = 1..N."""
    if N < 1:
        raise ValueError("N must be >= 1")
    plus = r.t_plus.power_traces(N) if r.dim_plus else [Fraction(0)] * N
    minus = r.t_minus.power_traces(N) if r.dim_minus else [Fraction(0)] * N
    return [Fraction(p) - Fraction(m) for p, m in zip(plus, minus)]


def zeta_from_traces(traces, N: int) -> TruncatedSeries:
    """exp(sum_{n>=1} a_n t^n / n) truncated at N."""
    if len(traces) < N:
        raise ValueError("need at least N trace values")
    body = TruncatedSeries(
        [Fraction(0)] + [Fraction(traces[n - 1]) / n for n in range(1, N + 1)], N
    )
    return series_exp(body)


def zeta_series(r: SuperRealization, N: int) -> TruncatedSeries:
    return zeta_from_traces(supertrace_sequence(r, N), N)


def zeta_det(r: SuperRealization) -> RationalFunction:
    """det(I - t*t_minus) / det(I - t*t_plus), in lowest terms."""
    num = reverse_charpoly(r.t_minus) if r.dim_minus else Polynomial([1])
    den = reverse_charpoly(r.t_plus) if r.dim_plus else Polynomial([1])
    return RationalFunction(num, den)


def verify_series_equals_det(r: SuperRealization, N: int) -> bool:
    """Check the exp-trace series against the determinant-ratio expansion
    through degree N; the two pipelines share no code path."""
    if N < 1:
        raise ValueError("N must be >= 1")
    return zeta_det(r).series(N) == zeta_series(r, N)


def rationality_report(s: TruncatedSeries, max_deg: int):
    """Pade reconstruction with the degree gap deg(den) - deg(num)."""
    rational = pade_reconstruct(s, max_deg)
    return rational, rational.degree_gap


def super_trace_identity(r: SuperRealization) -> SuperDimension:
    return SuperDimension(r.dim_plus, r.dim_minus)


def euler_supertrace_class(dims) -> SuperDimension:
    """Graded dimension from a vector of cohomological dimensions
    b_0..b_{2d}: even degrees contribute to the plus part, odd to minus."""
    if any(b < 0 for b in dims):
        raise ValueError("dimensions must be nonnegative")
    plus = sum(b for i, b in enumerate(dims) if i % 2 == 0)
    minus = sum(b for i, b in enumerate(dims) if i % 2 == 1)
    return SuperDimension(int(plus), int(minus))


def determinant(b: SemisimpleBlockData) -> Fraction:
    """Product over blocks of det(matrix)^mu (split reduced norms)."""
    result = Fraction(1)
    for matrix, mu in b.blocks:
        d = matrix.det()
        if d == 0:
            raise SingularBlock("block matrix has determinant zero")
        result *= Fraction(d) ** mu
    return result


def realization_determinant(r: SuperRealization) -> Fraction:
    """det(f) = det(t_plus) / det(t_minus); both must be invertible."""
    dp = Fraction(r.t_plus.det()) if r.dim_plus else Fraction(1)
    dm = Fraction(r.t_minus.det()) if r.dim_minus else Fraction(1)
    if dp == 0 or dm == 0:
        raise NotInvertible("realization matrix is singular")
    return dp / dm


def invert_realization(r: SuperRealization) -> SuperRealization:
    try:
        plus = r.t_plus.inverse() if r.dim_plus else r.t_plus
        minus = r.t_minus.inverse() if r.dim_minus else r.t_minus
    except NotInvertible as exc:
        raise NotInvertible("realization matrix is singular") from exc
    return SuperRealization(plus, minus, label=r.label + "^-1" if r.label else "")


def _reciprocal_substitution(rf: RationalFunction, c=Fraction(1)):
    """R(1/(c*t)) as an unnormalized (num, den) polynomial pair."""
    p, q = rf.num, rf.den
    dp, dq = p.degree, q.degree
    num = p.reversed_scaled(c).shift(dq)
    den = q.reversed_scaled(c).shift(dp)
    return num, den


def functional_equation_check(r: SuperRealization, N: int = DEFAULT_PRECISION):
    """Check Z(f^{-1}; t^{-1}) = (-t)^{tr(id)} det(f) Z(f; t) as an exact
    identity of rational functions."""
    det_f = realization_determinant(r)
    tr_id = r.dim_plus - r.dim_minus
    z = zeta_det(r)
    z_inv = zeta_det(invert_realization(r))
    lhs_num, lhs_den = _reciprocal_substitution(z_inv)
    sign = Fraction(-1) ** (tr_id % 2)
    rhs_num = z.num * (sign * det_f)
    rhs_den = z.den
    if tr_id >= 0:
        rhs_num = rhs_num.shift(tr_id)
    else:
        rhs_den = rhs_den.shift(-tr_id)
    holds = fractions_equal(lhs_num, lhs_den, rhs_num, rhs_den)
    return FunctionalEquationResult(sign=1 if tr_id % 2 == 0 else -1, det=det_f, holds=holds)


def scheme_functional_equation(z: RationalFunction, q: int, d: int, e: int) -> int:
    """Find the sign s with Z(1/(q^d t)) = s * t^E * q^{dE/2} * Z(t).

    Returns +1 or -1; raises NoSignWorks when neither sign satisfies the
    identity (the input is not the zeta of a smooth proper scheme with the
    stated dimension and Euler characteristic).
    """
    c = Fraction(q) ** d
    lhs_num, lhs_den = _reciprocal_substitution(z, c)
    if (d * e) % 2 == 0:
        factor = Fraction(q) ** ((d * e) // 2)
    else:
        root = _exact_sqrt(Fraction(q))
        if root is None:
            raise NoSignWorks(f"q^(d*E/2) = {q}^({d * e}/2) is irrational")
        factor = root ** (d * e)
    base_num = z.num * factor
    base_den = z.den
    if e >= 0:
        base_num = base_num.shift(e)
    else:
        base_den = base_den.shift(-e)
    for sign in (1, -1):
        if fractions_equal(lhs_num, lhs_den, base_num * sign, base_den):
            return sign
    raise NoSignWorks("functional equation fails for both signs")


def _exact_sqrt(x: Fraction):
    from math import isqrt

    num, den = x.numerator, x.denominator
    if num < 0:
        return None
    rn, rd = isqrt(num), isqrt(den)
    if rn * rn == num and rd * rd == den:
        return Fraction(rn, rd)
    return None


def direct_sum(a: SuperRealization, b: SuperRealization) -> SuperRealization:
    return SuperRealization(
        block_diag(a.t_plus, b.t_plus), block_diag(a.t_minus, b.t_minus)
    )


def tensor_product(a: SuperRealization, b: SuperRealization) -> SuperRealization:
    """Graded tensor product: even part (+ x +) + (- x -), odd part mixed."""
    plus = block_diag(kronecker(a.t_plus, b.t_plus), kronecker(a.t_minus, b.t_minus))
    minus = block_diag(kronecker(a.t_plus, b.t_minus), kronecker(a.t_minus, b.t_plus))
    return SuperRealization(plus, minus)


def zeta_witt(r: SuperRealization, N: int = DEFAULT_PRECISION) -> WittVector:
    """The zeta function as an element of the big Witt ring."""
    return WittVector(zeta_series(r, N))


def realization_report(r: SuperRealization, N: int = DEFAULT_PRECISION) -> ZetaReport:
    """Full report: series, rational form, degree gap, graded dimensions,
    and the functional equation when the realization is invertible."""
    series = zeta_series(r, N)
    dims = super_trace_identity(r)
    try:
        rational, gap = rationality_report(series, N // 2)
    except NotRational:
        rational, gap = None, None
    try:
        feq = functional_equation_check(r, N)
    except NotInvertible:
        feq = None
    return ZetaReport(
        series=series,
        rational=rational,
        degree_gap=gap,
        super_trace_id=dims,
        functional_eq=feq,
    )
