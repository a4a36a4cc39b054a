"""Exact-arithmetic zeta functions, big Witt vectors, Euler-pairing
lattices, and brute-force point counting over finite fields."""

from .errors import (
    BudgetExceeded,
    KernelsDisagree,
    NoSignWorks,
    NotAcyclic,
    NotInvertible,
    NotRational,
    PrecisionMismatch,
    SchemaError,
    SingularBlock,
    ZetalabError,
)
from .lattice import (
    BilinearLattice,
    KernelReport,
    NumericalQuotient,
    euler_pair,
    kernels,
    numerical_quotient,
    quiver_euler_form,
)
from .matrices import (
    Matrix,
    block_diag,
    hermite_row_basis,
    kronecker,
    reverse_charpoly,
    smith_normal_form,
)
from .poly import Polynomial, RationalFunction, poly_gcd
from .series import TruncatedSeries, pade_reconstruct, series_exp, series_log
from .witt import GhostVector, WittVector, ghost, unghost, witt_add, witt_mul, witt_neg
from .zeta import (
    SemisimpleBlockData,
    SuperDimension,
    SuperRealization,
    ZetaReport,
    determinant,
    euler_supertrace_class,
    functional_equation_check,
    rationality_report,
    realization_report,
    scheme_functional_equation,
    super_trace_identity,
    supertrace_sequence,
    verify_series_equals_det,
    zeta_det,
    zeta_from_traces,
    zeta_series,
)
from .finitefield import FieldTower, FiniteField
from .scheme import (
    CountVector,
    ProjectiveScheme,
    count_points,
    count_vector,
    hasse_weil_zeta,
)

__version__ = "0.1.0"
