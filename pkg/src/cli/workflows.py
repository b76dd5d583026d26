"""The four batch workflows; each turns parsed input into a Report"""
import logging
from typing import Any, Dict, Optional

from config import EXIT_FAIL, EXIT_NOT_GOOD, EXIT_OK
from src.cli.kostant_suite import run_suite
from src.cli.report import Report, error_report
from src.cli.spec_parser import RepSpec
from src.core.anomaly import anomaly_check
from src.core.lie import (
    NotRealizableError, WeylEnumerationError, is_symplectic_weights,
    sl2_isotypic_decomposition, sl2_symplectic_criterion, weight_level_cotangent_split, weyl_elements,
)
from src.core.monopole import (
    NotGoodError, PresentationError, delta, monopole_sum, presentation_hilbert_series,
    sl2_presentation,
)
from src.core.series import HilbertSeries, compare_series


logger = logging.getLogger(__name__)


def _spec_inputs(spec: RepSpec, **extra: Any) -> Dict[str, Any]:
    inputs = {"name": spec.name, "spec": spec.document}
    inputs.update(extra)
    return inputs


def _weights(rep) -> list:
    return [[list(w), m] for w, m in rep.entries]


def series_rows(series: HilbertSeries) -> list:
    """[[exponent, coefficient], ...] in increasing exponent"""
    return [[e, c] for e, c in series.items()]


def _group_summary(spec: RepSpec) -> Dict[str, Any]:
    datum = spec.datum
    try:
        weyl_order: Optional[int] = len(weyl_elements(datum))
    except WeylEnumerationError as e:
        logger.warning(str(e))
        weyl_order = None
    return {
        "name": datum.name,
        "rank": datum.rank,
        "cartan_matrix": datum.cartan_matrix,
        "weyl_order": weyl_order,
    }


def _is_sl2(spec: RepSpec) -> bool:
    datum = spec.datum
    return datum.rank == 1 and datum.semisimple_rank == 1 and abs(datum.simple_coroots[0][0]) == 1


def cmd_rep_info(spec: RepSpec) -> Report:
    """Dimension, weights, symplecticity, cotangent split and SL(2) decomposition"""
    rep = spec.rep
    check = is_symplectic_weights(spec.datum, rep)
    split = weight_level_cotangent_split(rep)

    results: Dict[str, Any] = {
        "group": _group_summary(spec),
        "dimension": rep.dimension,
        "weights": _weights(rep),
        "symplectic": {"ok": check.ok, "violations": list(check.violations)},
        "cotangent_split": _weights(split) if split is not None else None,
    }
    warnings = []

    if spec.datum.rank == 1:
        try:
            decomposition = sl2_isotypic_decomposition(rep, spec.datum)
            results["isotypic"] = {
                "components": decomposition,
                "sl2_symplectic": sl2_symplectic_criterion(decomposition),
            }
        except NotRealizableError as e:
            warnings.append(f"no SL(2) isotypic decomposition: {e}")

    return Report(command="rep-info", inputs=_spec_inputs(spec), results=results,
                  warnings=warnings, exit_status=EXIT_OK)


def cmd_anomaly(spec: RepSpec) -> Report:
    """Trace form and anomaly verdict; exit 1 when anomalous"""
    verdict = anomaly_check(spec.datum, spec.rep)
    results: Dict[str, Any] = {
        "trace_form": verdict.trace.gram,
        "pass": verdict.passed,
        "half_integral": verdict.half_integral,
        "witness": [list(v) for v in verdict.witness] if verdict.witness else None,
        "coroot_failures": [list(c) for c in verdict.coroot_failures],
        "summary": verdict.summary(),
        "delta_simple_coroots": [
            [list(c), delta(spec.datum, spec.rep, c)] for c in spec.datum.simple_coroots
        ],
    }
    if verdict.monopole_number is not None:
        results["monopole_number"] = verdict.monopole_number
        results["monopole_number_integral"] = verdict.monopole_number.denominator == 1
    if verdict.parity_ok is not None:
        results["parity_criterion"] = verdict.parity_ok

    return Report(command="anomaly", inputs=_spec_inputs(spec), results=results,
                  exit_status=EXIT_OK if verdict.passed else EXIT_FAIL)


def cmd_hilbert(spec: RepSpec, order: int, workers: int = 1,
                shell_cap: Optional[int] = None) -> Report:
    """Monopole series; for SL(2) with N >= 3 also the presentation cross-check"""
    inputs = _spec_inputs(spec, order=order)
    try:
        outcome = monopole_sum(spec.datum, spec.rep, order, shell_cap=shell_cap, workers=workers)
    except NotGoodError as e:
        logger.error(str(e))
        return error_report("hilbert", inputs, e, EXIT_NOT_GOOD)

    results: Dict[str, Any] = {
        "order": outcome.series.order,
        "coefficients": series_rows(outcome.series),
        "integral_exponents": outcome.series.is_integral(),
        "shells": outcome.shells,
        "contributing_coweights": len(outcome.contributions),
        "anomaly_free": outcome.anomaly_free,
    }
    warnings = list(outcome.warnings)
    status = EXIT_OK

    if _is_sl2(spec):
        try:
            presentation = sl2_presentation(spec.datum, spec.rep)
            block: Dict[str, Any] = {
                "monopole_number": presentation.monopole_number,
                "branch": presentation.branch,
                "degrees": presentation.degrees,
                "relation": presentation.relation,
            }
            if presentation.monopole_number >= 3:
                expected = presentation_hilbert_series(presentation, order)
                comparison = compare_series(outcome.series, expected)
                block["series"] = series_rows(expected)
                block["comparison"] = "MATCH" if comparison.equal else "MISMATCH"
                block["comparison_detail"] = comparison.describe()
                if not comparison.equal:
                    status = EXIT_FAIL
            results["presentation"] = block
        except PresentationError as e:
            warnings.append(f"no SL(2) presentation: {e}")

    return Report(command="hilbert", inputs=inputs, results=results,
                  warnings=warnings, exit_status=status)


def cmd_kostant_verify(n: int, samples: int, seed: int, workers: int = 1) -> Report:
    """Seeded property suite for the Kostant maps; exit 1 on any counterexample"""
    suite = run_suite(n, samples, seed, workers=workers)
    results = {
        "tallies": suite.tallies,
        "all_passed": suite.passed,
        "first_counterexample": suite.first_counterexample,
    }
    return Report(
        command="kostant-verify",
        inputs={"n": n, "samples": samples, "seed": seed},
        results=results,
        exit_status=EXIT_OK if suite.passed else EXIT_FAIL,
    )
