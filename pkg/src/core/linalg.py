"""Exact rational linear algebra on spaces with a bilinear form"""
import logging
from dataclasses import dataclass
from enum import Enum
from typing import List, Optional, Sequence, Tuple

import sympy
from sympy import ImmutableMatrix, Rational

from src.utils.validation import ValidationError


logger = logging.getLogger(__name__)

RatMatrix = ImmutableMatrix

_LAMBDA = sympy.Symbol("lambda")


class ShapeError(ValidationError):
    """Matrix dimensions do not fit the spaces involved"""
    pass


class FormKind(Enum):
    SYMPLECTIC = "symplectic"
    SYMMETRIC = "symmetric"


def rat_matrix(rows: Sequence[Sequence]) -> RatMatrix:
    """Immutable matrix of sympy Rationals; strings like '1/2' are accepted"""
    return ImmutableMatrix([[Rational(x) for x in row] for row in rows])


def column(entries: Sequence) -> RatMatrix:
    return ImmutableMatrix([[Rational(x)] for x in entries])


def identity(size: int) -> RatMatrix:
    return ImmutableMatrix.eye(size)


def zeros(rows: int, cols: int) -> RatMatrix:
    return ImmutableMatrix.zeros(rows, cols)


def matrix_to_strings(matrix: RatMatrix) -> List[List[str]]:
    return [[str(matrix[i, j]) for j in range(matrix.cols)] for i in range(matrix.rows)]


@dataclass(frozen=True)
class BilinearSpace:
    """Q^dim with a non-degenerate symplectic or symmetric form"""
    form: RatMatrix
    kind: FormKind

    def __post_init__(self):
        if self.form.rows != self.form.cols:
            raise ShapeError(f"Form must be square, got {self.form.shape}")
        if self.kind is FormKind.SYMPLECTIC and self.form.T != -self.form:
            raise ValidationError("Symplectic form must be antisymmetric")
        if self.kind is FormKind.SYMMETRIC and self.form.T != self.form:
            raise ValidationError("Symmetric form must be symmetric")
        if self.form.det() == 0:
            raise ValidationError(f"{self.kind.value} form is degenerate")

    @property
    def dim(self) -> int:
        return self.form.rows

    @property
    def form_inverse(self) -> RatMatrix:
        return self.form.inv()

    def pair(self, a: RatMatrix, b: RatMatrix) -> Rational:
        return (a.T * self.form * b)[0, 0]

    @classmethod
    def split_symplectic(cls, n: int) -> "BilinearSpace":
        """
        Dimension 2n, basis e_0..e_{2n-1}; <e_k, e_{2n-1-k}> = 1 for k <= n-2
        and <e_{n-1}, e_n> = (-1)^(n-1).
        """
        if n < 1:
            raise ValidationError(f"n must be at least 1, got {n}")
        dim = 2 * n
        form = sympy.zeros(dim, dim)
        for k in range(n - 1):
            form[k, dim - 1 - k] = 1
            form[dim - 1 - k, k] = -1
        middle = (-1) ** (n - 1)
        form[n - 1, n] = middle
        form[n, n - 1] = -middle
        return cls(ImmutableMatrix(form), FormKind.SYMPLECTIC)

    @classmethod
    def split_symmetric(cls, n: int) -> "BilinearSpace":
        """Dimension 2n+1, basis f_0..f_{2n}; (f_i, f_j) = (-1)^i when i + j = 2n"""
        if n < 0:
            raise ValidationError(f"n must be non-negative, got {n}")
        dim = 2 * n + 1
        form = sympy.zeros(dim, dim)
        for i in range(dim):
            form[i, dim - 1 - i] = (-1) ** i
        return cls(ImmutableMatrix(form), FormKind.SYMMETRIC)


def adjoint_map(B: RatMatrix, source: BilinearSpace, target: BilinearSpace) -> RatMatrix:
    """B^t: target -> source with (B v, w) = (v, B^t w)"""
    if B.shape != (target.dim, source.dim):
        raise ShapeError(f"Map of shape {B.shape} does not go from dim {source.dim} to dim {target.dim}")
    return source.form_inverse * B.T * target.form


def is_in_sp(x: RatMatrix, space: BilinearSpace) -> bool:
    """x preserves the symplectic form infinitesimally: Omega x is symmetric"""
    if x.shape != (space.dim, space.dim):
        raise ShapeError(f"Endomorphism of shape {x.shape} on a space of dim {space.dim}")
    product = space.form * x
    return product == product.T


def is_in_so(x: RatMatrix, space: BilinearSpace) -> bool:
    """x preserves the symmetric form infinitesimally: S x is antisymmetric"""
    if x.shape != (space.dim, space.dim):
        raise ShapeError(f"Endomorphism of shape {x.shape} on a space of dim {space.dim}")
    product = space.form * x
    return product == -product.T


def preserves_form(g: RatMatrix, space: BilinearSpace) -> bool:
    return g.T * space.form * g == space.form


def krylov_matrix(x: RatMatrix, v: RatMatrix, length: Optional[int] = None) -> RatMatrix:
    """[v | x v | x^2 v | ...]"""
    if x.rows != x.cols or v.shape != (x.rows, 1):
        raise ShapeError(f"Cannot build a Krylov matrix from {x.shape} and {v.shape}")
    length = x.rows if length is None else length
    columns = []
    current = v
    for _ in range(length):
        columns.append(current)
        current = x * current
    if not columns:
        return zeros(x.rows, 0)
    return ImmutableMatrix.hstack(*columns)


def is_cyclic(x: RatMatrix, v: RatMatrix) -> bool:
    """v generates Q^dim under x"""
    return krylov_matrix(x, v).rank() == x.rows


def char_poly_coeffs(x: RatMatrix) -> Tuple[Rational, ...]:
    """det(lambda - x), coefficients from the highest power down"""
    if x.rows != x.cols:
        raise ShapeError(f"Characteristic polynomial needs a square matrix, got {x.shape}")
    return tuple(Rational(c) for c in x.charpoly(_LAMBDA).all_coeffs())


def darboux_basis(beta: RatMatrix) -> Tuple[RatMatrix, int]:
    """
    Basis P of Q^d with P^T beta P = J_k (+) 0 for an antisymmetric beta.

    Returns P and k, where 2k is the rank of beta. Columns of P are
    p_1..p_k, q_1..q_k followed by a basis of the radical.
    """
    if beta.rows != beta.cols or beta.T != -beta:
        raise ValidationError("Darboux basis needs an antisymmetric square matrix")

    def form(a, b):
        return (a.T * beta * b)[0, 0]

    dim = beta.rows
    pending = [identity(dim)[:, i] for i in range(dim)]
    ps, qs, radical = [], [], []

    while pending:
        w = pending.pop(0)
        partner_index = next((i for i, z in enumerate(pending) if form(w, z) != 0), None)
        if partner_index is None:
            radical.append(w)
            continue
        partner = pending.pop(partner_index)
        p = w
        q = partner / form(w, partner)
        pending = [z - form(z, q) * p + form(z, p) * q for z in pending]
        ps.append(p)
        qs.append(q)

    basis = ps + qs + radical
    P = ImmutableMatrix.hstack(*basis) if basis else zeros(0, 0)
    logger.debug(f"Darboux basis: rank {2 * len(ps)}, radical dimension {len(radical)}")
    return P, len(ps)
