"""
Monopole formula for the Coulomb branch Hilbert series and the SL(2)
presentation of the Coulomb branch.
"""
import logging
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Dict, List, Optional, Sequence, Tuple

import sympy

from config import SHELL_CAP
from src.core.anomaly import anomaly_check, require_symplectic, sl2_monopole_number
from src.core.lie import (
    RootDatum, Vector, WeightRep, WeylElement, all_roots, dominant_shell,
    pair, weyl_elements,
)
from src.core.series import HilbertSeries, format_rational
from src.utils.monitoring import measure_performance
from src.utils.validation import InputValidator, ValidationError


logger = logging.getLogger(__name__)


class NotGoodError(Exception):
    """The monopole sum does not converge within the shell cap"""

    def __init__(self, message: str, direction: Optional[Vector] = None,
                 warnings: Optional[List[str]] = None):
        super().__init__(message)
        self.direction = direction
        self.warnings = list(warnings or [])


class PresentationError(ValidationError):
    """The SL(2) presentation is undefined for this input"""
    pass


class GroupClosureError(ValidationError):
    """A list of matrices passed as a group is not closed under multiplication"""
    pass


# --- dimension formula ---------------------------------------------------------

def _delta(roots: Sequence[Vector], rep: WeightRep, lam: Sequence[int]) -> Fraction:
    vector_part = sum(abs(pair(root, lam)) for root in roots)
    matter_part = sum(abs(pair(weight, lam)) * mult for weight, mult in rep.entries)
    return Fraction(-2 * vector_part + matter_part, 4)


def delta(datum: RootDatum, rep: WeightRep, lam: Sequence[int]) -> Fraction:
    """
    Monopole dimension of a coweight:
    -1/2 sum over roots |<alpha, lambda>| + 1/4 sum over weights |<chi, lambda>| m_chi
    """
    require_symplectic(datum, rep)
    lam = datum.check_vector(lam)
    return _delta(all_roots(datum), rep, lam)


# --- Molien series ---------------------------------------------------------------

@lru_cache(maxsize=4096)
def _det_one_minus_qw(element: WeylElement) -> Tuple[int, ...]:
    """Coefficients of det(I - q w) in increasing powers of q"""
    size = element.rank
    if size == 0:
        return (1,)
    # det(I - q w) = q^r charpoly_w(1/q): the reversed charpoly coefficients
    coeffs = sympy.Matrix(element.matrix).charpoly().all_coeffs()
    return tuple(int(c) for c in coeffs)


def check_group_closure(elements: Sequence[WeylElement]) -> None:
    members = set(elements)
    for a in elements:
        for b in elements:
            if a @ b not in members:
                raise GroupClosureError(f"Product of {a.matrix} and {b.matrix} is not in the group")


@lru_cache(maxsize=1024)
def _molien(elements: Tuple[WeylElement, ...], order: int) -> HilbertSeries:
    check_group_closure(elements)

    by_polynomial: Dict[Tuple[int, ...], int] = {}
    for w in elements:
        poly = _det_one_minus_qw(w)
        by_polynomial[poly] = by_polynomial.get(poly, 0) + 1

    total = HilbertSeries.zero(order)
    for poly, count in sorted(by_polynomial.items()):
        total = total + HilbertSeries.from_polynomial(poly, order).reciprocal().scale(count)
    return total.scale(Fraction(1, len(elements)))


def molien_series(elements: Sequence[WeylElement], order: int) -> HilbertSeries:
    """(1/|G|) sum over g of 1/det(I - q g), the invariants of the group"""
    if not elements:
        raise ValidationError("Molien series needs a non-empty group")
    if order < 0:
        raise ValidationError(f"Order must be non-negative, got {order}")
    return _molien(tuple(elements), int(order))


def stabilizer_weyl(datum: RootDatum, lam: Sequence[int]) -> List[WeylElement]:
    lam = datum.check_vector(lam)
    return [w for w in weyl_elements(datum) if w.apply(lam) == lam]


def residual_invariants(datum: RootDatum, lam: Sequence[int], order: int) -> HilbertSeries:
    """P_G(q; lambda): Molien series of the stabilizer of lambda"""
    return molien_series(stabilizer_weyl(datum, lam), order)


# --- monopole sum ------------------------------------------------------------------------

@dataclass
class MonopoleResult:
    """Hilbert series from the monopole formula plus what the summation saw"""
    series: HilbertSeries
    shells: int
    contributions: List[Tuple[Vector, Fraction]] = field(default_factory=list)
    warnings: List[str] = field(default_factory=list)
    anomaly_free: bool = True


def _primitive(vec: Sequence[int]) -> Vector:
    g = math.gcd(*vec) if any(vec) else 1
    return tuple(x // g for x in vec)


def _half_integral_warnings(seen: Sequence[Tuple[Vector, Fraction]], anomaly_free: bool) -> List[str]:
    values = sorted({d for _, d in seen if d.denominator != 1})
    if not values:
        return []
    shown = ", ".join(format_rational(d) for d in values[:3])
    message = f"Delta takes non-integral values ({shown})"
    if anomaly_free:
        message += " although the anomaly check passed"
    return [message]


def _contribution(datum: RootDatum, lam: Vector, dim: Fraction, order: int) -> HilbertSeries:
    residual = residual_invariants(datum, lam, math.floor(order - dim))
    return residual.shift(dim).with_order(order)


@measure_performance("monopole_hilbert_series")
def monopole_sum(datum: RootDatum, rep: WeightRep, order: int,
                 shell_cap: Optional[int] = None, workers: int = 1) -> MonopoleResult:
    """
    Sum q^Delta(lambda) P_G(q; lambda) over dominant coweights, shell by shell.

    Shell b holds the dominant coweights with max |coordinate| = b. Summation
    stops at the first non-empty shell in which every coweight has
    Delta > order; reaching the shell cap first raises NotGoodError.
    """
    InputValidator.validate_order(order)
    InputValidator.validate_workers(workers)
    require_symplectic(datum, rep)
    cap = InputValidator.validate_shell_cap(SHELL_CAP if shell_cap is None else shell_cap)

    warnings: List[str] = []
    verdict = anomaly_check(datum, rep)
    if not verdict.passed:
        warnings.append(f"representation is {verdict.summary()}; the series is computed anyway")

    roots = all_roots(datum)
    contributing: List[Tuple[Vector, Fraction]] = []
    radius = 0
    while True:
        shell = dominant_shell(datum, radius)
        inside = [(lam, _delta(roots, rep, lam)) for lam in shell]
        inside = [(lam, d) for lam, d in inside if d <= order]
        logger.debug(f"Shell {radius}: {len(shell)} dominant coweights, {len(inside)} contribute")

        if radius > 0 and (datum.rank == 0 or (shell and not inside)):
            break
        if radius >= cap:
            worst = min(inside, key=lambda item: item[1]) if inside else None
            direction = _primitive(worst[0]) if worst else None
            raise NotGoodError(
                f"Monopole sum for {datum.name} did not terminate within {cap} shells; "
                f"Delta stays <= {order} along {direction}. The theory is probably not good",
                direction,
                warnings + _half_integral_warnings(contributing + inside, verdict.passed),
            )
        contributing.extend(inside)
        radius += 1

    warnings.extend(_half_integral_warnings(contributing, verdict.passed))

    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            pieces = list(pool.map(lambda item: _contribution(datum, item[0], item[1], order), contributing))
    else:
        pieces = [_contribution(datum, lam, dim, order) for lam, dim in contributing]

    series = HilbertSeries.zero(order)
    for piece in pieces:
        series = series + piece

    for message in warnings:
        logger.warning(message)

    return MonopoleResult(
        series=series,
        shells=radius,
        contributions=contributing,
        warnings=warnings,
        anomaly_free=verdict.passed,
    )


def monopole_hilbert_series(datum: RootDatum, rep: WeightRep, order: int,
                            shell_cap: Optional[int] = None, workers: int = 1) -> HilbertSeries:
    return monopole_sum(datum, rep, order, shell_cap=shell_cap, workers=workers).series


# --- SL(2) presentation ------------------------------------------------------------------

@dataclass(frozen=True)
class Sl2Presentation:
    """
    C[M_C] = C[delta, eta, xi] / (relation), graded with
    deg delta = 2, deg eta = N - 2, deg xi = N - 1.
    """
    monopole_number: int

    @property
    def branch(self) -> str:
        return "N=0" if self.monopole_number == 0 else "N>0"

    @property
    def degrees(self) -> Dict[str, int]:
        n = self.monopole_number
        return {"delta": 2, "eta": n - 2, "xi": n - 1}

    @property
    def relation(self) -> str:
        if self.monopole_number == 0:
            return "xi^2 = delta*eta^2 + eta"
        power = self.monopole_number - 1
        if power == 0:
            return "xi^2 = delta*eta^2 - 1"
        if power == 1:
            return "xi^2 = delta*eta^2 - delta"
        return f"xi^2 = delta*eta^2 - delta^{power}"

    @property
    def relation_degree(self) -> int:
        return 2 * (self.monopole_number - 1)

    def is_homogeneous(self) -> bool:
        """Every monomial of the relation has the degree of xi^2"""
        n = self.monopole_number
        deg = self.degrees
        target = 2 * deg["xi"]
        if n == 0:
            return target == 2 + 2 * deg["eta"] == deg["eta"]
        return target == 2 + 2 * deg["eta"] == 2 * (n - 1)

    def __str__(self) -> str:
        return f"C[delta, eta, xi] / ({self.relation})"


def _require_sl2(datum: RootDatum) -> None:
    if datum.rank != 1 or datum.semisimple_rank != 1 or abs(datum.simple_coroots[0][0]) != 1:
        raise PresentationError(f"The SL(2) presentation needs the datum SL(2), got {datum.name}")


def sl2_presentation(datum: RootDatum, rep: WeightRep) -> Sl2Presentation:
    """Generators and relation of the Coulomb branch for G = SL(2)"""
    _require_sl2(datum)
    require_symplectic(datum, rep)

    n = sl2_monopole_number(rep, datum)
    if n.denominator != 1:
        raise PresentationError(f"Monopole number N = {format_rational(n)} must be integral")

    verdict = anomaly_check(datum, rep)
    if not verdict.passed:
        raise PresentationError(f"Representation is {verdict.summary()}")

    return Sl2Presentation(int(n))


def presentation_hilbert_series(presentation: Sl2Presentation, order: int) -> HilbertSeries:
    """(1 + q^(N-1)) / ((1 - q^2)(1 - q^(N-2))), defined for N >= 3"""
    n = presentation.monopole_number
    if n <= 2:
        raise PresentationError(
            f"N = {n}: grading not positive; Hilbert series undefined as a power series"
        )
    return HilbertSeries.from_rational({0: 1, n - 1: 1}, [2, n - 2], order)
