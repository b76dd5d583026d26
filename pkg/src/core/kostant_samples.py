"""Deterministic random points and group elements for the Kostant maps"""
import logging
import random
from dataclasses import dataclass
from typing import Optional, Sequence, Tuple, Union

import sympy
from sympy import ImmutableMatrix, Rational

from config import (
    KOSTANT_MAX_N, SAMPLER_DENOMINATORS, SAMPLER_NUMERATOR_RANGE,
    SAMPLER_WORD_LENGTH,
)
from src.core.kostant import in_Y, moment_so, spaces_for, xi
from src.core.linalg import (
    BilinearSpace, RatMatrix, darboux_basis, identity, zeros,
)
from src.utils.validation import InputValidator, ValidationError


logger = logging.getLogger(__name__)


class UnsupportedRankError(ValidationError):
    """No sampler is available for this n"""
    pass


Seed = Union[int, random.Random]


@dataclass(frozen=True)
class YPoint:
    """(v, A) in M' x Hom(M', M)"""
    v: RatMatrix
    A: RatMatrix

    @property
    def n(self) -> int:
        return self.A.rows // 2


def _rng(seed: Seed) -> random.Random:
    return seed if isinstance(seed, random.Random) else random.Random(seed)


def random_rational(rng: random.Random, allow_zero: bool = True) -> Rational:
    while True:
        value = Rational(
            rng.randint(-SAMPLER_NUMERATOR_RANGE, SAMPLER_NUMERATOR_RANGE),
            rng.choice(SAMPLER_DENOMINATORS),
        )
        if allow_zero or value != 0:
            return value


def random_vector(rng: random.Random, dim: int) -> RatMatrix:
    """Non-zero column with small rational entries"""
    while True:
        vec = ImmutableMatrix([[random_rational(rng)] for _ in range(dim)])
        if any(x != 0 for x in vec):
            return vec


def random_matrix(rng: random.Random, rows: int, cols: int) -> RatMatrix:
    return ImmutableMatrix([[random_rational(rng) for _ in range(cols)] for _ in range(rows)])


def random_hom(seed: Seed, n: int) -> RatMatrix:
    """Arbitrary A in Hom(M', M), shape (2n, 2n+1)"""
    return random_matrix(_rng(seed), 2 * n, 2 * n + 1)


# --- group elements ----------------------------------------------------------------

def symplectic_transvection(w: RatMatrix, t: Rational, M: BilinearSpace) -> RatMatrix:
    """z -> z + t <w, z> w"""
    return identity(M.dim) + t * w * (w.T * M.form)


def orthogonal_reflection(w: RatMatrix, Mp: BilinearSpace) -> RatMatrix:
    """z -> z - 2 (w, z) / (w, w) w for an anisotropic w"""
    norm = Mp.pair(w, w)
    if norm == 0:
        raise ValidationError("Cannot reflect in an isotropic vector")
    return identity(Mp.dim) - (2 / norm) * w * (w.T * Mp.form)


def random_sp_element(seed: Seed, M: BilinearSpace) -> RatMatrix:
    """Product of random symplectic transvections"""
    rng = _rng(seed)
    g = identity(M.dim)
    for _ in range(SAMPLER_WORD_LENGTH):
        g = g * symplectic_transvection(random_vector(rng, M.dim), random_rational(rng), M)
    return g


def random_so_element(seed: Seed, Mp: BilinearSpace) -> RatMatrix:
    """Product of an even number of reflections in anisotropic vectors"""
    rng = _rng(seed)
    h = identity(Mp.dim)
    reflections = 0
    while reflections < 2 * max(1, SAMPLER_WORD_LENGTH // 2):
        w = random_vector(rng, Mp.dim)
        if Mp.pair(w, w) == 0:
            continue
        h = h * orthogonal_reflection(w, Mp)
        reflections += 1
    return h


def transport(point: YPoint, g: RatMatrix, h: RatMatrix) -> YPoint:
    """Action of (g, h) in Sp(M) x SO(M'): (v, A) -> (h v, g A h^-1)"""
    return YPoint(h * point.v, g * point.A * h.inv())


# --- points of Y ----------------------------------------------------------------------

def slice_parameter_count(n: int) -> int:
    """Number of free entries of the antisymmetric K in seed_Y_point"""
    dim = 2 * n + 1
    return sum(1 for a in range(dim) for j in range(a + 1, dim) if a + j > 2 * n)


def seed_Y_point(n: int, params: Optional[Sequence] = None) -> YPoint:
    """
    Point of Y with C = A^t A = e + S^-1 K, where e shifts f_i to f_{i+1},
    S is the form of M' and K is antisymmetric, supported on entries (a, j)
    with a + j > 2n. With no params, K = 0 and C is the principal nilpotent.
    """
    if n < 1:
        raise ValidationError(f"n must be at least 1, got {n}")
    M, Mp = spaces_for(n)
    dim = 2 * n + 1

    count = slice_parameter_count(n)
    params = [Rational(0)] * count if params is None else [Rational(p) for p in params]
    if len(params) != count:
        raise ValidationError(f"seed_Y_point({n}) takes {count} slice parameters, got {len(params)}")

    K = sympy.zeros(dim, dim)
    slots = [(a, j) for a in range(dim) for j in range(a + 1, dim) if a + j > 2 * n]
    for (a, j), value in zip(slots, params):
        K[a, j] = value
        K[j, a] = -value

    shift = sympy.zeros(dim, dim)
    for i in range(dim - 1):
        shift[i + 1, i] = 1

    C = ImmutableMatrix(shift) + Mp.form_inverse * ImmutableMatrix(K)
    beta = Mp.form * C

    # A = K_M [I | 0] P^-1 with P^T beta P = J (+) 0 and K_M^T Omega K_M = J
    P, half_rank = darboux_basis(beta)
    if half_rank != n:
        raise ValidationError(f"Slice point has rank {2 * half_rank}, expected {2 * n}")
    K_M, _ = darboux_basis(M.form)
    embed = ImmutableMatrix.hstack(identity(2 * n), zeros(2 * n, 1))
    A = K_M * embed * P.inv()

    v = zeros(dim, 1).as_mutable()
    v[0, 0] = 1
    point = YPoint(ImmutableMatrix(v), ImmutableMatrix(A))

    assert moment_so(point.A, M, Mp) == C, "seed point has the wrong moment"
    return point


def check_supported_n(n: int, max_n: int = KOSTANT_MAX_N) -> int:
    try:
        return InputValidator.validate_kostant_n(n, max_n)
    except ValidationError as e:
        raise UnsupportedRankError(str(e)) from e


def random_Y_point(n: int, seed: Seed, max_n: int = KOSTANT_MAX_N) -> YPoint:
    """
    Random point of Y: a slice point with random parameters moved by a
    random element of Sp(M) x SO(M').
    """
    check_supported_n(n, max_n)
    rng = _rng(seed)
    M, Mp = spaces_for(n)

    params = [random_rational(rng) for _ in range(slice_parameter_count(n))]
    point = seed_Y_point(n, params)
    g = random_sp_element(rng, M)
    h = random_so_element(rng, Mp)
    moved = transport(point, g, h)

    if not in_Y(moved.v, moved.A, M, Mp):
        raise ValidationError(f"Transported point left Y (n = {n}); the group samplers are broken")
    logger.debug(f"Sampled Y point for n = {n} with slice parameters {params}")
    return moved


def principal_nilpotent_point(n: int) -> Tuple[RatMatrix, RatMatrix]:
    """xi of the unparameterized slice point"""
    point = seed_Y_point(n)
    return xi(point.v, point.A)
