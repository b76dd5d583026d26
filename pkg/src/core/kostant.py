"""
Moment maps between the orthosymplectic space Hom(M', M) and the mirabolic
space M x sp(M), with the Kostant-slice coordinates.

M is the split symplectic space of dimension 2n and M' the split symmetric
space of dimension 2n+1 from BilinearSpace. A point of the orthosymplectic
side is (v, A) with v in M' and A: M' -> M; a point of the mirabolic side is
(u, x) with u in M and x in sp(M).
"""
import logging
from dataclasses import dataclass
from typing import List, Optional, Tuple

import sympy
from sympy import ImmutableMatrix, Rational

from src.core.linalg import (
    BilinearSpace, RatMatrix, ShapeError, adjoint_map, char_poly_coeffs,
    is_cyclic, is_in_sp, krylov_matrix, preserves_form,
)
from src.utils.validation import ValidationError


logger = logging.getLogger(__name__)


class PreconditionError(ValidationError):
    """A point is not in the domain of a map"""
    pass


def spaces_for(n: int) -> Tuple[BilinearSpace, BilinearSpace]:
    """(M, M') for half-dimension n"""
    return BilinearSpace.split_symplectic(n), BilinearSpace.split_symmetric(n)


def _resolve(A: RatMatrix, M: Optional[BilinearSpace], Mp: Optional[BilinearSpace]) -> Tuple[BilinearSpace, BilinearSpace]:
    rows, cols = A.shape
    if rows % 2 or cols != rows + 1:
        raise ShapeError(f"Hom(M', M) needs shape (2n, 2n+1), got {A.shape}")
    if M is None or Mp is None:
        default_M, default_Mp = spaces_for(rows // 2)
        M = M or default_M
        Mp = Mp or default_Mp
    if (M.dim, Mp.dim) != (rows, cols):
        raise ShapeError(f"Map of shape {A.shape} does not fit dim M = {M.dim}, dim M' = {Mp.dim}")
    return M, Mp


def _symplectic_for(x: RatMatrix, M: Optional[BilinearSpace]) -> BilinearSpace:
    if x.rows != x.cols or x.rows % 2:
        raise ShapeError(f"Endomorphism of M needs an even square shape, got {x.shape}")
    M = M or BilinearSpace.split_symplectic(x.rows // 2)
    if M.dim != x.rows:
        raise ShapeError(f"Endomorphism of shape {x.shape} on M of dim {M.dim}")
    return M


# --- moment maps --------------------------------------------------------------------

def adjoint(A: RatMatrix, M: Optional[BilinearSpace] = None, Mp: Optional[BilinearSpace] = None) -> RatMatrix:
    """A^t: M -> M' with <A v, w> = (v, A^t w)"""
    M, Mp = _resolve(A, M, Mp)
    return adjoint_map(A, Mp, M)


def moment_sp(A: RatMatrix, M: Optional[BilinearSpace] = None, Mp: Optional[BilinearSpace] = None) -> RatMatrix:
    """A A^t, an element of sp(M)"""
    M, Mp = _resolve(A, M, Mp)
    return A * adjoint(A, M, Mp)


def moment_so(A: RatMatrix, M: Optional[BilinearSpace] = None, Mp: Optional[BilinearSpace] = None) -> RatMatrix:
    """A^t A, an element of so(M')"""
    M, Mp = _resolve(A, M, Mp)
    return adjoint(A, M, Mp) * A


def _moments(x: RatMatrix, u: RatMatrix, space: BilinearSpace, count: int) -> List[Rational]:
    """[(u, x^k u) for k < count]"""
    return [space.pair(u, col) for col in _columns(krylov_matrix(x, u, count))]


def _columns(matrix: RatMatrix) -> List[RatMatrix]:
    return [matrix[:, j] for j in range(matrix.cols)]


def _check_vector(vec: RatMatrix, dim: int, label: str) -> None:
    if vec.shape != (dim, 1):
        raise ShapeError(f"{label} must be a column of length {dim}, got shape {vec.shape}")


def in_Y(v: RatMatrix, A: RatMatrix, M: Optional[BilinearSpace] = None,
         Mp: Optional[BilinearSpace] = None) -> bool:
    """
    (v, A) lies in the slice Y: v is cyclic for C = A^t A and
    (v, C^k v) vanishes for k < 2n with (v, C^{2n} v) = 1.
    """
    M, Mp = _resolve(A, M, Mp)
    _check_vector(v, Mp.dim, "v")
    n = M.dim // 2
    C = moment_so(A, M, Mp)

    moments = _moments(C, v, Mp, 2 * n + 1)
    # C is skew for a symmetric form, so odd moments vanish identically
    assert all(moments[k] == 0 for k in range(1, 2 * n + 1, 2)), "odd moment of an so(M') element"

    if not all(moments[k] == 0 for k in range(2 * n)) or moments[2 * n] != 1:
        return False
    return is_cyclic(C, v)


def in_X(u: RatMatrix, x: RatMatrix, M: Optional[BilinearSpace] = None) -> bool:
    """
    (u, x) lies in the slice X: u is cyclic for x and <u, x^k u> vanishes
    for k < 2n-1 with <u, x^{2n-1} u> = 1.
    """
    M = _symplectic_for(x, M)
    _check_vector(u, M.dim, "u")
    if not is_in_sp(x, M):
        raise PreconditionError("x is not in sp(M)")
    dim = M.dim

    moments = _moments(x, u, M, dim)
    # x is symmetric for the symplectic form, so even moments vanish
    assert all(moments[k] == 0 for k in range(0, dim, 2)), "even moment of an sp(M) element"

    if not all(moments[k] == 0 for k in range(dim - 1)) or moments[dim - 1] != 1:
        return False
    return is_cyclic(x, u)


def xi(v: RatMatrix, A: RatMatrix, M: Optional[BilinearSpace] = None,
       Mp: Optional[BilinearSpace] = None) -> Tuple[RatMatrix, RatMatrix]:
    """Y -> X: (v, A) -> (A v, A A^t)"""
    M, Mp = _resolve(A, M, Mp)
    if not in_Y(v, A, M, Mp):
        raise PreconditionError("(v, A) is not in Y")
    return A * v, moment_sp(A, M, Mp)


# --- Kostant coordinates ------------------------------------------------------------------

@dataclass(frozen=True)
class KostantCoords:
    """
    sigma_1..sigma_n with det(lambda - x) = lambda^{2n} + sum sigma_k lambda^{2n-2k}.
    sigma_k has degree 4k.
    """
    sigma: Tuple[Rational, ...]

    @property
    def n(self) -> int:
        return len(self.sigma)

    @property
    def degrees(self) -> Tuple[int, ...]:
        return tuple(4 * k for k in range(1, self.n + 1))

    def char_poly(self) -> Tuple[Rational, ...]:
        """Full coefficient list, highest power first"""
        coeffs = [Rational(1)]
        for s in self.sigma:
            coeffs.extend([Rational(0), s])
        return tuple(coeffs)

    def as_strings(self) -> List[str]:
        return [str(s) for s in self.sigma]


def kostant_coords(x: RatMatrix, M: Optional[BilinearSpace] = None) -> KostantCoords:
    """Even coefficients of the characteristic polynomial of x in sp(M)"""
    M = _symplectic_for(x, M)
    coeffs = char_poly_coeffs(x)
    # characteristic polynomials of sp elements are even
    assert all(coeffs[k] == 0 for k in range(1, len(coeffs), 2)), "odd coefficient for an sp(M) element"
    return KostantCoords(tuple(coeffs[k] for k in range(2, len(coeffs), 2)))


def eta(u: RatMatrix, x: RatMatrix, M: Optional[BilinearSpace] = None) -> Tuple[RatMatrix, KostantCoords]:
    """
    X -> Sp(M) x Kostant coordinates.

    The first n+1 columns of g are x^k u. Column n+j is the leading term
    (-1)^(n-j+1) x^{n+j} u corrected by lower x^{n+j-2i} u so that it pairs
    to 1 with column n-j-1 and to 0 with every other earlier column.
    """
    M = _symplectic_for(x, M)
    if not in_X(u, x, M):
        raise PreconditionError("(u, x) is not in X")

    n = M.dim // 2
    powers = _columns(krylov_matrix(x, u, 2 * n))
    columns = powers[: n + 1]

    for j in range(1, n):
        degree = n + j
        lead = (-1) ** (n - j + 1) * powers[degree]
        correction = [powers[degree - 2 * i] for i in range(1, degree // 2 + 1)]
        partner = n - j - 1

        rows = []
        rhs = []
        for index, earlier in enumerate(columns):
            target = 1 if index == partner else 0
            rows.append([M.pair(earlier, b) for b in correction])
            rhs.append(target - M.pair(earlier, lead))

        system = sympy.Matrix(rows)
        solution, params = system.gauss_jordan_solve(sympy.Matrix(rhs))
        solution = solution.subs({p: 0 for p in params})
        col = lead
        for coeff, b in zip(solution, correction):
            col = col + coeff * b
        columns.append(ImmutableMatrix(col))

    g = ImmutableMatrix.hstack(*columns)
    assert preserves_form(g, M), "eta produced a non-symplectic frame"
    return g, kostant_coords(x, M)


# --- GL side -------------------------------------------------------------------------------

def gl_moment(A: RatMatrix, B: RatMatrix) -> Tuple[RatMatrix, RatMatrix]:
    """(A, B) in Hom(N', N) x Hom(N, N') -> (A B, B A)"""
    if A.rows != B.cols or A.cols != B.rows:
        raise ShapeError(f"Shapes {A.shape} and {B.shape} are not of the form (N x N', N' x N)")
    return A * B, B * A


def in_Z(v: RatMatrix, A: RatMatrix, B: RatMatrix) -> bool:
    """v in N' is cyclic for B A"""
    _, BA = gl_moment(A, B)
    _check_vector(v, BA.rows, "v")
    return is_cyclic(BA, v)
