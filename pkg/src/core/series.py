"""Truncated Hilbert series with exact rational exponents and coefficients"""
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple, Union

from src.utils.validation import ValidationError


Number = Union[int, Fraction]


class SeriesError(ValidationError):
    """Operation not defined for the given series"""
    pass


def _as_fraction(value: Number) -> Fraction:
    return value if isinstance(value, Fraction) else Fraction(value)


def format_rational(value: Number) -> str:
    """'3' or '-1/2'"""
    value = _as_fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


class HilbertSeries:
    """
    Sum of c_e q^e, known exactly for every exponent e <= order.

    Coefficients above the order are dropped on construction. Two series
    are equal when they have the same order and the same coefficients.
    """

    __slots__ = ("_coefficients", "_order")

    def __init__(self, coefficients: Mapping[Number, Number], order: Number):
        self._order = _as_fraction(order)
        self._coefficients: Dict[Fraction, Fraction] = {}
        for exponent, coeff in coefficients.items():
            exponent = _as_fraction(exponent)
            coeff = _as_fraction(coeff)
            if coeff != 0 and exponent <= self._order:
                self._coefficients[exponent] = self._coefficients.get(exponent, Fraction(0)) + coeff
        self._coefficients = {e: c for e, c in self._coefficients.items() if c != 0}

    # --- constructors ---------------------------------------------------------

    @classmethod
    def zero(cls, order: Number) -> "HilbertSeries":
        return cls({}, order)

    @classmethod
    def one(cls, order: Number) -> "HilbertSeries":
        return cls({0: 1}, order)

    @classmethod
    def monomial(cls, exponent: Number, order: Number, coefficient: Number = 1) -> "HilbertSeries":
        return cls({exponent: coefficient}, order)

    @classmethod
    def from_polynomial(cls, coefficients: Union[Sequence[Number], Mapping[Number, Number]],
                        order: Number) -> "HilbertSeries":
        """From a list indexed by degree or a degree -> coefficient mapping"""
        if isinstance(coefficients, Mapping):
            return cls(coefficients, order)
        return cls(dict(enumerate(coefficients)), order)

    @classmethod
    def from_coefficients(cls, coefficients: Sequence[Number]) -> "HilbertSeries":
        """Series with integral exponents 0..len-1, complete up to the last one"""
        return cls(dict(enumerate(coefficients)), len(coefficients) - 1)

    @classmethod
    def geometric(cls, degree: int, order: Number) -> "HilbertSeries":
        """1 / (1 - q^degree)"""
        if degree <= 0:
            raise SeriesError(f"1/(1 - q^{degree}) has no power series expansion")
        top = math.floor(_as_fraction(order))
        return cls({k: 1 for k in range(0, top + 1, degree)}, order)

    @classmethod
    def from_rational(cls, numerator: Union[Sequence[Number], Mapping[Number, Number]],
                      denominator_degrees: Iterable[int], order: Number) -> "HilbertSeries":
        """numerator / prod (1 - q^d)"""
        result = cls.from_polynomial(numerator, order)
        for degree in denominator_degrees:
            result = result * cls.geometric(degree, order)
        return result

    # --- accessors --------------------------------------------------------------

    @property
    def order(self) -> Fraction:
        return self._order

    @property
    def exponents(self) -> List[Fraction]:
        return sorted(self._coefficients)

    def items(self) -> List[Tuple[Fraction, Fraction]]:
        return [(e, self._coefficients[e]) for e in self.exponents]

    def coefficient(self, exponent: Number) -> Fraction:
        exponent = _as_fraction(exponent)
        if exponent > self._order:
            raise SeriesError(f"Coefficient of q^{format_rational(exponent)} is beyond the order {format_rational(self._order)}")
        return self._coefficients.get(exponent, Fraction(0))

    @property
    def valuation(self) -> Fraction:
        """Lowest exponent present; the order itself for a series known to vanish"""
        return min(self._coefficients) if self._coefficients else self._order

    def is_integral(self) -> bool:
        return all(e.denominator == 1 for e in self._coefficients)

    def has_integer_coefficients(self) -> bool:
        return all(c.denominator == 1 for c in self._coefficients.values())

    def as_list(self) -> List[Fraction]:
        """Coefficients of q^0 .. q^floor(order) for a series with integral exponents"""
        if not self.is_integral():
            raise SeriesError("Series has half-integral exponents; use items()")
        if self._coefficients and min(self._coefficients) < 0:
            raise SeriesError("Series has negative exponents; use items()")
        return [self._coefficients.get(Fraction(k), Fraction(0)) for k in range(math.floor(self._order) + 1)]

    # --- arithmetic ---------------------------------------------------------------

    def truncate(self, order: Number) -> "HilbertSeries":
        order = _as_fraction(order)
        if order > self._order:
            raise SeriesError(f"Cannot extend a series of order {format_rational(self._order)} to {format_rational(order)}")
        return HilbertSeries(self._coefficients, order)

    def with_order(self, order: Number) -> "HilbertSeries":
        """
        Re-label the completeness bound of a series whose exponents lie on a
        lattice e0 + Z: no exponent exists strictly between two lattice points.
        """
        order = _as_fraction(order)
        if self._coefficients:
            base = min(self._coefficients)
            if any((e - base).denominator != 1 for e in self._coefficients):
                raise SeriesError("Exponents do not lie on a single Z-coset")
            limit = base + math.floor(self._order - base) + 1
            if order >= limit:
                raise SeriesError(f"Series is only complete below {format_rational(limit)}")
        return HilbertSeries(self._coefficients, order)

    def shift(self, exponent: Number) -> "HilbertSeries":
        """Multiply by q^exponent"""
        exponent = _as_fraction(exponent)
        return HilbertSeries(
            {e + exponent: c for e, c in self._coefficients.items()},
            self._order + exponent,
        )

    def scale(self, factor: Number) -> "HilbertSeries":
        factor = _as_fraction(factor)
        return HilbertSeries({e: c * factor for e, c in self._coefficients.items()}, self._order)

    def __add__(self, other: "HilbertSeries") -> "HilbertSeries":
        if not isinstance(other, HilbertSeries):
            return NotImplemented
        order = min(self._order, other._order)
        merged: Dict[Fraction, Fraction] = dict(self._coefficients)
        for e, c in other._coefficients.items():
            merged[e] = merged.get(e, Fraction(0)) + c
        return HilbertSeries(merged, order)

    def __neg__(self) -> "HilbertSeries":
        return self.scale(-1)

    def __sub__(self, other: "HilbertSeries") -> "HilbertSeries":
        if not isinstance(other, HilbertSeries):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other: "HilbertSeries") -> "HilbertSeries":
        if not isinstance(other, HilbertSeries):
            return NotImplemented
        order = min(self._order + other.valuation, other._order + self.valuation)
        product: Dict[Fraction, Fraction] = {}
        for ea, ca in self._coefficients.items():
            for eb, cb in other._coefficients.items():
                e = ea + eb
                if e <= order:
                    product[e] = product.get(e, Fraction(0)) + ca * cb
        return HilbertSeries(product, order)

    def reciprocal(self) -> "HilbertSeries":
        """1 / self for a series with integral exponents and non-zero constant term"""
        if not self.is_integral() or (self._coefficients and min(self._coefficients) < 0):
            raise SeriesError("Reciprocal needs non-negative integral exponents")
        a0 = self._coefficients.get(Fraction(0), Fraction(0))
        if a0 == 0:
            raise SeriesError("Reciprocal needs a non-zero constant term")

        top = math.floor(self._order)
        a = self.as_list()
        b = [Fraction(1) / a0]
        for k in range(1, top + 1):
            acc = sum((a[i] * b[k - i] for i in range(1, k + 1)), Fraction(0))
            b.append(-acc / a0)
        return HilbertSeries(dict(enumerate(b)), self._order)

    # --- comparison and display -------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, HilbertSeries):
            return NotImplemented
        return self._order == other._order and self._coefficients == other._coefficients

    def __hash__(self) -> int:
        return hash((self._order, frozenset(self._coefficients.items())))

    def terms(self) -> List[str]:
        terms = []
        for e, c in self.items():
            if e == 0:
                terms.append(format_rational(c))
                continue
            power = "q" if e == 1 else f"q^{format_rational(e)}"
            if c == 1:
                terms.append(power)
            elif c == -1:
                terms.append(f"-{power}")
            else:
                terms.append(f"{format_rational(c)}{power}")
        return terms

    def __str__(self) -> str:
        body = " + ".join(self.terms()).replace("+ -", "- ") or "0"
        return f"{body} + O(q^{format_rational(self._order + 1)})"

    def __repr__(self) -> str:
        return f"HilbertSeries({self})"

    def to_dict(self) -> Dict[str, str]:
        return {format_rational(e): format_rational(c) for e, c in self.items()}


@dataclass(frozen=True)
class SeriesComparison:
    """Outcome of comparing two series up to a common order"""
    equal: bool
    order: Fraction
    first_mismatch: Optional[Fraction] = None
    left: Optional[Fraction] = None
    right: Optional[Fraction] = None

    def describe(self) -> str:
        if self.equal:
            return f"series agree up to q^{format_rational(self.order)}"
        return (
            f"series differ at q^{format_rational(self.first_mismatch)}: "
            f"{format_rational(self.left)} != {format_rational(self.right)}"
        )


def compare_series(a: HilbertSeries, b: HilbertSeries, order: Optional[Number] = None) -> SeriesComparison:
    """Compare a and b coefficient by coefficient up to the common order"""
    common = min(a.order, b.order)
    if order is not None:
        common = min(common, _as_fraction(order))
    exponents = sorted({e for e in a.exponents + b.exponents if e <= common})
    for e in exponents:
        left, right = a.coefficient(e), b.coefficient(e)
        if left != right:
            return SeriesComparison(False, common, e, left, right)
    return SeriesComparison(True, common)
