"""Core mathematics: root data, anomaly, monopole formula, Kostant maps"""
from .lie import (
    RootDatum, WeightRep, WeylElement, make_root_datum, product, weyl_elements,
)
from .anomaly import AnomalyVerdict, TraceForm, anomaly_check, trace_form
from .series import HilbertSeries, compare_series
from .monopole import (
    NotGoodError, Sl2Presentation, monopole_hilbert_series, molien_series,
    presentation_hilbert_series, sl2_presentation,
)
from .linalg import BilinearSpace, FormKind

__all__ = [
    'RootDatum', 'WeightRep', 'WeylElement', 'make_root_datum', 'product', 'weyl_elements',
    'AnomalyVerdict', 'TraceForm', 'anomaly_check', 'trace_form',
    'HilbertSeries', 'compare_series',
    'NotGoodError', 'Sl2Presentation', 'monopole_hilbert_series', 'molien_series',
    'presentation_hilbert_series', 'sl2_presentation',
    'BilinearSpace', 'FormKind',
]
