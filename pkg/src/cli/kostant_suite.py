"""Seeded property suite for the orthosymplectic and mirabolic maps"""
import logging
import random
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Dict, List, Optional, Tuple

from config import KOSTANT_MAX_N
from src.core.kostant import (
    adjoint, eta, gl_moment, in_X, kostant_coords, moment_so, moment_sp, spaces_for, xi,
)
from src.core.kostant_samples import (
    check_supported_n, random_hom, random_matrix, random_sp_element, random_so_element,
    random_vector, random_Y_point,
)
from src.core.linalg import (
    BilinearSpace, adjoint_map, char_poly_coeffs, is_in_so, is_in_sp,
    krylov_matrix, matrix_to_strings, preserves_form,
)
from src.utils.monitoring import measure_performance
from src.utils.validation import InputValidator


logger = logging.getLogger(__name__)

# Per-sample seeds are derived as seed * SEED_STRIDE + index
SEED_STRIDE = 1_000_003


@dataclass
class SampleContext:
    n: int
    M: BilinearSpace
    Mp: BilinearSpace
    rng: random.Random
    max_n: int


Check = Callable[[SampleContext], Optional[str]]


def check_adjoint_identity(ctx: SampleContext) -> Optional[str]:
    A = random_hom(ctx.rng, ctx.n)
    At = adjoint(A, ctx.M, ctx.Mp)
    v = random_vector(ctx.rng, ctx.Mp.dim)
    w = random_vector(ctx.rng, ctx.M.dim)
    if ctx.M.pair(A * v, w) != ctx.Mp.pair(v, At * w):
        return f"<Av, w> != (v, A^t w) for A = {matrix_to_strings(A)}"
    # all basis pairs at once
    if A.T * ctx.M.form != ctx.Mp.form * At:
        return f"basis pairings disagree for A = {matrix_to_strings(A)}"
    return None


def check_double_adjoint(ctx: SampleContext) -> Optional[str]:
    A = random_hom(ctx.rng, ctx.n)
    At = adjoint(A, ctx.M, ctx.Mp)
    if adjoint_map(At, ctx.M, ctx.Mp) != -A:
        return f"(A^t)^t != -A for A = {matrix_to_strings(A)}"
    return None


def check_moment_membership(ctx: SampleContext) -> Optional[str]:
    A = random_hom(ctx.rng, ctx.n)
    if not is_in_sp(moment_sp(A, ctx.M, ctx.Mp), ctx.M):
        return f"A A^t not in sp(M) for A = {matrix_to_strings(A)}"
    if not is_in_so(moment_so(A, ctx.M, ctx.Mp), ctx.Mp):
        return f"A^t A not in so(M') for A = {matrix_to_strings(A)}"
    return None


def check_equivariance(ctx: SampleContext) -> Optional[str]:
    A = random_hom(ctx.rng, ctx.n)
    g = random_sp_element(ctx.rng, ctx.M)
    h = random_so_element(ctx.rng, ctx.Mp)
    g_inv, h_inv = g.inv(), h.inv()
    moved = g * A * h_inv

    if adjoint(moved, ctx.M, ctx.Mp) != h * adjoint(A, ctx.M, ctx.Mp) * g_inv:
        return f"(g A h^-1)^t != h A^t g^-1 for A = {matrix_to_strings(A)}"
    if moment_sp(moved, ctx.M, ctx.Mp) != g * moment_sp(A, ctx.M, ctx.Mp) * g_inv:
        return f"moment to sp(M) is not Sp(M)-equivariant for A = {matrix_to_strings(A)}"
    if moment_so(moved, ctx.M, ctx.Mp) != h * moment_so(A, ctx.M, ctx.Mp) * h_inv:
        return f"moment to so(M') is not SO(M')-equivariant for A = {matrix_to_strings(A)}"
    return None


def check_xi_lands_in_X(ctx: SampleContext) -> Optional[str]:
    point = random_Y_point(ctx.n, ctx.rng, ctx.max_n)
    u, x = xi(point.v, point.A, ctx.M, ctx.Mp)
    if not in_X(u, x, ctx.M):
        return f"xi(v, A) not in X for v = {matrix_to_strings(point.v.T)}, A = {matrix_to_strings(point.A)}"
    return None


def check_spectral_transfer(ctx: SampleContext) -> Optional[str]:
    A = random_hom(ctx.rng, ctx.n)
    so_poly = char_poly_coeffs(moment_so(A, ctx.M, ctx.Mp))
    sp_poly = char_poly_coeffs(moment_sp(A, ctx.M, ctx.Mp))
    if so_poly != sp_poly + (0,):
        return f"char(A^t A) != lambda * char(A A^t) for A = {matrix_to_strings(A)}"
    return None


def check_eta(ctx: SampleContext) -> Optional[str]:
    point = random_Y_point(ctx.n, ctx.rng, ctx.max_n)
    u, x = xi(point.v, point.A, ctx.M, ctx.Mp)
    g, sigma = eta(u, x, ctx.M)

    if not preserves_form(g, ctx.M):
        return f"g^T Omega g != Omega for u = {matrix_to_strings(u.T)}, x = {matrix_to_strings(x)}"
    powers = krylov_matrix(x, u, ctx.n + 1)
    if g[:, : ctx.n + 1] != powers:
        return "first n+1 columns of g are not x^k u"
    if sigma != kostant_coords(x, ctx.M):
        return "Kostant coordinates disagree with the characteristic polynomial"

    g0 = random_sp_element(ctx.rng, ctx.M)
    moved_g, moved_sigma = eta(g0 * u, g0 * x * g0.inv(), ctx.M)
    if moved_g != g0 * g or moved_sigma != sigma:
        return f"eta is not Sp(M)-equivariant for g0 = {matrix_to_strings(g0)}"
    return None


def check_gl_moment(ctx: SampleContext) -> Optional[str]:
    dim = 2 * ctx.n
    A = random_matrix(ctx.rng, dim, dim + 1)
    B = random_matrix(ctx.rng, dim + 1, dim)
    AB, BA = gl_moment(A, B)
    if AB.trace() != BA.trace():
        return f"tr(A B) != tr(B A) for A = {matrix_to_strings(A)}, B = {matrix_to_strings(B)}"
    if char_poly_coeffs(BA) != char_poly_coeffs(AB) + (0,):
        return f"char(B A) != lambda * char(A B) for A = {matrix_to_strings(A)}, B = {matrix_to_strings(B)}"

    # square case: A B and B A share the characteristic polynomial
    A = random_matrix(ctx.rng, dim, dim)
    B = random_matrix(ctx.rng, dim, dim)
    AB, BA = gl_moment(A, B)
    if char_poly_coeffs(AB) != char_poly_coeffs(BA):
        return f"char(A B) != char(B A) for A = {matrix_to_strings(A)}, B = {matrix_to_strings(B)}"
    return None


PROPERTIES: Tuple[Tuple[str, Check], ...] = (
    ("adjoint_identity", check_adjoint_identity),
    ("double_adjoint", check_double_adjoint),
    ("moment_membership", check_moment_membership),
    ("equivariance", check_equivariance),
    ("xi_lands_in_X", check_xi_lands_in_X),
    ("spectral_transfer", check_spectral_transfer),
    ("eta_symplectic", check_eta),
    ("gl_moment", check_gl_moment),
)


@dataclass
class SuiteResult:
    n: int
    samples: int
    seed: int
    tallies: Dict[str, Dict[str, int]] = field(default_factory=dict)
    first_counterexample: Optional[Dict[str, object]] = None

    @property
    def passed(self) -> bool:
        return all(t["failed"] == 0 for t in self.tallies.values())


def _run_sample(n: int, seed: int, index: int, max_n: int) -> List[Tuple[str, Optional[str]]]:
    M, Mp = spaces_for(n)
    outcomes = []
    for name, check in PROPERTIES:
        # each property gets its own stream so results do not depend on the others
        rng = random.Random(f"{seed * SEED_STRIDE + index}:{name}")
        ctx = SampleContext(n=n, M=M, Mp=Mp, rng=rng, max_n=max_n)
        try:
            outcome = check(ctx)
        except (AssertionError, ArithmeticError, ValueError) as e:
            outcome = f"{type(e).__name__}: {e}"
        if outcome:
            logger.debug(f"Sample {index}, {name}: {outcome}")
        outcomes.append((name, outcome))
    return outcomes


@measure_performance("kostant_suite")
def run_suite(n: int, samples: int, seed: int, workers: int = 1,
              max_n: int = KOSTANT_MAX_N) -> SuiteResult:
    """Run every property on `samples` seeded samples; identical for any worker count"""
    check_supported_n(n, max_n)
    InputValidator.validate_samples(samples)
    InputValidator.validate_workers(workers)

    indices = range(samples)
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            per_sample = list(pool.map(lambda i: _run_sample(n, seed, i, max_n), indices))
    else:
        per_sample = [_run_sample(n, seed, i, max_n) for i in indices]

    result = SuiteResult(n=n, samples=samples, seed=seed)
    result.tallies = {name: {"passed": 0, "failed": 0} for name, _ in PROPERTIES}
    for index, outcomes in enumerate(per_sample):
        for name, outcome in outcomes:
            if outcome is None:
                result.tallies[name]["passed"] += 1
                continue
            result.tallies[name]["failed"] += 1
            if result.first_counterexample is None:
                result.first_counterexample = {"property": name, "sample": index, "detail": outcome}

    logger.info(f"Kostant suite n = {n}: {'all passed' if result.passed else 'failures found'}")
    return result

