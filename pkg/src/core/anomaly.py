"""Trace form of a symplectic representation and the anomaly verdict"""
import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from src.core.lie import (
    IntMatrix, NotRealizableError, RootDatum, Vector, WeightRep, _sl2_values, check_rep,
    is_symplectic_weights, sl2_isotypic_decomposition, weyl_elements,
)
from src.utils.validation import ValidationError


logger = logging.getLogger(__name__)


class NotSymplecticError(ValidationError):
    """Operation needs a symplectic representation"""
    pass


@dataclass(frozen=True)
class TraceForm:
    """B(lambda, mu) = sum over weights m_chi <chi, lambda><chi, mu>"""
    gram: IntMatrix

    @property
    def array(self) -> np.ndarray:
        size = len(self.gram)
        return np.array(self.gram, dtype=object).reshape(size, size)

    def value(self, lam: Sequence[int], mu: Sequence[int]) -> int:
        return int(np.array(lam, dtype=object) @ self.array @ np.array(mu, dtype=object))

    def is_symmetric(self) -> bool:
        return bool(np.array_equal(self.array, self.array.T))

    def is_weyl_invariant(self, datum: RootDatum) -> bool:
        gram = self.array
        for w in weyl_elements(datum):
            m = w.array.astype(object)
            if not np.array_equal(m.T @ gram @ m, gram):
                return False
        return True


def trace_form(datum: RootDatum, rep: WeightRep) -> TraceForm:
    """Gram matrix of the trace form on the basis of X_*"""
    check_rep(datum, rep)
    if not rep.entries:
        return TraceForm(tuple(tuple(0 for _ in range(datum.rank)) for _ in range(datum.rank)))
    weights = np.array([w for w, _ in rep.entries], dtype=object).reshape(len(rep.entries), datum.rank)
    mults = np.array([m for _, m in rep.entries], dtype=object)
    gram = weights.T @ (weights * mults[:, None])
    return TraceForm(tuple(tuple(int(x) for x in row) for row in gram.tolist()))


@dataclass(frozen=True)
class AnomalyVerdict:
    """
    Outcome of the anomaly check.

    The representation is anomaly-free exactly when the trace form is even
    (half_integral) and B(a, a) is divisible by 4 for every simple coroot a.
    """
    half_integral: bool
    coroot_failures: Tuple[Vector, ...]
    witness: Optional[Tuple[Vector, Vector]]
    trace: TraceForm
    monopole_number: Optional[Fraction] = None
    parity_ok: Optional[bool] = None

    @property
    def passed(self) -> bool:
        return self.half_integral and not self.coroot_failures

    def summary(self) -> str:
        if self.passed:
            return "anomaly-free"
        reasons = []
        if not self.half_integral:
            lam, mu = self.witness
            reasons.append(f"B({lam}, {mu}) is odd")
        for coroot in self.coroot_failures:
            reasons.append(f"B({coroot}, {coroot}) = {self.trace.value(coroot, coroot)} is not divisible by 4")
        return "anomalous: " + "; ".join(reasons)


def require_symplectic(datum: RootDatum, rep: WeightRep) -> None:
    verdict = is_symplectic_weights(datum, rep)
    if not verdict:
        raise NotSymplecticError(
            "Representation is not symplectic: " + "; ".join(verdict.violations)
            + ". Check it with is_symplectic_weights or pass its cotangent"
        )


def _basis(rank: int, i: int) -> Vector:
    return tuple(1 if k == i else 0 for k in range(rank))


def anomaly_check(datum: RootDatum, rep: WeightRep) -> AnomalyVerdict:
    """Decide whether a symplectic representation is anomaly-free"""
    require_symplectic(datum, rep)
    form = trace_form(datum, rep)

    odd = odd_entries(form)
    witness = None
    if odd:
        i, j = odd[0]
        witness = (_basis(datum.rank, i), _basis(datum.rank, j))

    failures = tuple(
        coroot for coroot in datum.simple_coroots
        if form.value(coroot, coroot) % 4
    )

    monopole_number = None
    parity_ok = None
    if datum.rank == 1 and datum.semisimple_rank == 1:
        monopole_number = sl2_monopole_number(rep, datum)
        # the parity criterion is stated on the coroot lattice of SL(2)
        if abs(datum.simple_coroots[0][0]) == 1:
            try:
                parity_ok = sl2_parity_criterion(sl2_isotypic_decomposition(rep, datum))
            except NotRealizableError as e:
                logger.warning(f"Skipping the parity criterion: {e}")

    verdict = AnomalyVerdict(
        half_integral=witness is None,
        coroot_failures=failures,
        witness=witness,
        trace=form,
        monopole_number=monopole_number,
        parity_ok=parity_ok,
    )
    logger.info(f"Anomaly check for {datum.name}: {verdict.summary()}")
    return verdict


def sl2_monopole_number(rep: WeightRep, datum: Optional[RootDatum] = None) -> Fraction:
    """N = (1/4) sum |<chi, alpha^v>| m_chi"""
    if datum is not None:
        require_symplectic(datum, rep)
    values = _sl2_values(rep, datum)
    return Fraction(sum(abs(j) * m for j, m in values.items()), 4)


def sl2_parity_criterion(decomposition: Dict[int, int]) -> bool:
    """sum of dim M^k over k = 1 mod 4 is even"""
    return sum(m for k, m in decomposition.items() if k % 4 == 1) % 2 == 0


def odd_entries(form: TraceForm) -> List[Tuple[int, int]]:
    """Index pairs (i, j) with B(e_i, e_j) odd, row by row"""
    return [
        (i, j) for i, row in enumerate(form.gram)
        for j, value in enumerate(row) if value % 2
    ]
