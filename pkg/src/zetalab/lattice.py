"""Euler-pairing lattices and their numerical quotients.

A BilinearLattice is a finitely generated free abelian group Z^n with an
integer bilinear form chi(x, y) = x^T G y.  When the left and right
kernels of G coincide (as sublattices, not merely in rank), the quotient
by the kernel is again free and carries a nondegenerate induced form.
"""

from dataclasses import dataclass, field

from .errors import KernelsDisagree, NotAcyclic
from .matrices import (
    Matrix,
    hermite_row_basis,
    lattice_contains,
    right_kernel_basis,
    smith_normal_form,
)


@dataclass(frozen=True)
class BilinearLattice:
    rank: int
    gram: Matrix
    label: str = ""

    def __post_init__(self):
        if self.gram.rows != self.rank or self.gram.cols != self.rank:
            raise ValueError("Gram matrix must be rank x rank")
        if not self.gram.is_integer():
            raise ValueError("Gram matrix must have integer entries")


@dataclass(frozen=True)
class KernelReport:
    left_basis: list
    right_basis: list
    agree: bool


@dataclass(frozen=True)
class NumericalQuotient:
    rank: int
    projection: Matrix
    induced_gram: Matrix
    section: Matrix = field(repr=False)


def euler_pair(L: BilinearLattice, x, y):
    """chi(x, y) = x^T G y."""
    if len(x) != L.rank or len(y) != L.rank:
        raise ValueError("vector length must equal lattice rank")
    gy = L.gram.apply_vector(list(y))
    return sum(a * b for a, b in zip(x, gy))


def quiver_euler_form(adjacency: Matrix, n: int) -> BilinearLattice:
    """Euler form I - A of the path algebra of an acyclic quiver on n
    vertices with adjacency matrix A (arrow counts).

    Rejects non-acyclic quivers: their path algebras are infinite
    dimensional and carry no Euler form of this shape.
    """
    if adjacency.rows != n or adjacency.cols != n:
        raise ValueError("adjacency must be n x n")
    if any(a < 0 for a in (adjacency[i, j] for i in range(n) for j in range(n))):
        raise ValueError("adjacency entries must be nonnegative")
    power = adjacency
    for _ in range(n):
        if power == Matrix.zero(n, n):
            break
        power = power * adjacency
    else:
        if n > 0 and power != Matrix.zero(n, n):
            raise NotAcyclic("adjacency matrix is not nilpotent")
    return BilinearLattice(n, Matrix.identity(n) - adjacency, label="quiver")


def kernels(L: BilinearLattice) -> KernelReport:
    """Left and right kernels of the pairing, as Hermite-reduced bases.

    agree is decided by exact mutual sublattice membership.
    """
    right = hermite_row_basis(right_kernel_basis(L.gram))
    left = hermite_row_basis(right_kernel_basis(L.gram.transpose()))
    agree = all(lattice_contains(right, v) for v in left) and all(
        lattice_contains(left, v) for v in right
    )
    return KernelReport(left_basis=left, right_basis=right, agree=agree)


def numerical_quotient(L: BilinearLattice) -> NumericalQuotient:
    """Quotient of Z^n by Ker(chi) with the induced pairing.

    The kernel of an integer matrix is saturated, so the quotient is free
    of rank n - k.  Requires the left and right kernels to agree;
    otherwise the pairing does not descend and KernelsDisagree is raised.
    """
    report = kernels(L)
    if not report.agree:
        raise KernelsDisagree(
            "left and right kernels differ; pairing does not descend"
        )
    n = L.rank
    k = len(report.right_basis)
    if k == 0:
        proj = Matrix.identity(n)
        return NumericalQuotient(n, proj, L.gram, proj)
    # Column matrix of the kernel basis; U B V = [I_k; 0] since the kernel
    # is saturated, so the first k columns of U^{-1} span the kernel and the
    # last n-k rows of U give quotient coordinates.
    b = Matrix.from_rows(report.right_basis).transpose()
    u, d, _ = smith_normal_form(b)
    for i in range(k):
        assert d[i, i] == 1, "kernel basis is not saturated"
    u_int = Matrix(n, n, [int(x) for x in (u[i, j] for i in range(n) for j in range(n))])
    c = u_int.inverse()
    projection = Matrix(
        n - k, n, [int(u_int[i, j]) for i in range(k, n) for j in range(n)]
    )
    section = Matrix(
        n, n - k, [int(c[i, j]) for i in range(n) for j in range(k, n)]
    )
    induced = section.transpose() * L.gram * section
    if induced.rows and induced.det() == 0:
        # cannot happen when kernels agree; guard against internal bugs
        raise AssertionError("induced pairing is degenerate")
    return NumericalQuotient(n - k, projection, induced, section)


def project_class(q: NumericalQuotient, x):
    """Image of a K_0 class in the numerical quotient."""
    return q.projection.apply_vector(list(x))
