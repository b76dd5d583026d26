"""
Parser for group/representation spec files.

A spec is a JSON document:

    {
      "schema": 1,
      "name": "SL(2) with N = 3",
      "group": {"factors": [{"preset": "SL", "size": 2}], "torus_rank": 0},
      "representation": ["scale", ["defining"], 6]
    }

Representations are prefix trees [op, arg, ...]; a list of trees is read
as their direct sum.
"""
import json
import logging
from dataclasses import dataclass, field
from functools import reduce
from pathlib import Path
from typing import Any, Dict, List, Union

from src.core.lie import (
    RootDatum, WeightRep, adjoint_rep, cotangent, defining_rep, direct_sum,
    dual, factor_datum, lift, make_root_datum, product, scale, sl2_irrep,
    tensor, weights_rep,
)
from src.utils.validation import InputValidator, ValidationError


logger = logging.getLogger(__name__)


class SpecParseError(ValidationError):
    """Malformed spec document, with the location of the offending field"""

    def __init__(self, location: str, message: str):
        super().__init__(f"{location}: {message}")
        self.location = location
        self.detail = message


@dataclass
class RepSpec:
    """A parsed spec: the resolved root datum and representation"""
    name: str
    datum: RootDatum
    rep: WeightRep
    document: Dict[str, Any] = field(default_factory=dict)


def _expect_int(value: Any, location: str, minimum: int = 0) -> int:
    if not isinstance(value, int) or isinstance(value, bool):
        raise SpecParseError(location, f"expected an integer, got {value!r}")
    if value < minimum:
        raise SpecParseError(location, f"expected an integer >= {minimum}, got {value}")
    return value


def _expect_list(value: Any, location: str) -> List[Any]:
    if not isinstance(value, list):
        raise SpecParseError(location, f"expected a list, got {type(value).__name__}")
    return value


def _parse_vectors(value: Any, location: str) -> List[List[int]]:
    rows = _expect_list(value, location)
    vectors = []
    for i, row in enumerate(rows):
        entries = _expect_list(row, f"{location}[{i}]")
        if not all(isinstance(x, int) and not isinstance(x, bool) for x in entries):
            raise SpecParseError(f"{location}[{i}]", "vector entries must be integers")
        vectors.append(entries)
    return vectors


def _parse_factor(entry: Any, location: str) -> RootDatum:
    if not isinstance(entry, dict):
        raise SpecParseError(location, "a factor must be an object")

    if "explicit" in entry:
        explicit = entry["explicit"]
        if not isinstance(explicit, dict):
            raise SpecParseError(f"{location}.explicit", "expected an object")
        roots = _parse_vectors(explicit.get("simple_roots", []), f"{location}.explicit.simple_roots")
        coroots = _parse_vectors(explicit.get("simple_coroots", []), f"{location}.explicit.simple_coroots")
        rank = explicit.get("rank")
        if rank is not None:
            rank = _expect_int(rank, f"{location}.explicit.rank")
        try:
            return make_root_datum(simple_roots=roots, simple_coroots=coroots, rank=rank,
                                   name=explicit.get("name"))
        except ValidationError as e:
            raise SpecParseError(f"{location}.explicit", str(e)) from e

    if "preset" not in entry:
        raise SpecParseError(location, "a factor needs 'preset' or 'explicit'")
    size = _expect_int(entry.get("size"), f"{location}.size")
    try:
        return make_root_datum(entry["preset"], size)
    except ValidationError as e:
        raise SpecParseError(f"{location}.preset", str(e)) from e


def parse_group(value: Any, location: str = "group") -> RootDatum:
    if not isinstance(value, dict):
        raise SpecParseError(location, "expected an object with 'factors' and optional 'torus_rank'")

    factors = [
        _parse_factor(entry, f"{location}.factors[{i}]")
        for i, entry in enumerate(_expect_list(value.get("factors", []), f"{location}.factors"))
    ]
    torus_rank = _expect_int(value.get("torus_rank", 0), f"{location}.torus_rank")
    if torus_rank:
        factors.append(make_root_datum("Torus", torus_rank))
    if not factors:
        raise SpecParseError(location, "group has no factors and no torus")

    return reduce(product, factors)


# --- representation expressions ----------------------------------------------------------

def _weights(datum: RootDatum, args: List[Any], location: str) -> WeightRep:
    pairs = []
    for i, item in enumerate(_expect_list(args[0] if args else None, f"{location}[1]")):
        where = f"{location}[1][{i}]"
        if not isinstance(item, list) or len(item) != 2:
            raise SpecParseError(where, "expected [weight, multiplicity]")
        weight = _parse_vectors([item[0]], where)[0]
        pairs.append((weight, _expect_int(item[1], f"{where}[1]")))
    return weights_rep(datum, pairs)


def _factor_index(datum: RootDatum, value: Any, location: str) -> int:
    index = _expect_int(value, location)
    if index >= len(datum.factors):
        raise SpecParseError(location, f"{datum.name} has only {len(datum.factors)} factors")
    return index


def build_rep(expr: Any, datum: RootDatum, location: str = "representation") -> WeightRep:
    """Evaluate a representation expression against a root datum"""
    if not isinstance(expr, list) or not expr:
        raise SpecParseError(location, f"expected a non-empty expression list, got {expr!r}")

    op, args = expr[0], expr[1:]
    if not isinstance(op, str):
        raise SpecParseError(f"{location}[0]", f"operator must be a string, got {op!r}")

    def sub(i: int) -> WeightRep:
        return build_rep(args[i], datum, f"{location}[{i + 1}]")

    def arity(count: int):
        if len(args) != count:
            raise SpecParseError(location, f"'{op}' takes {count} argument(s), got {len(args)}")

    try:
        if op == "defining":
            factor = _factor_index(datum, args[0], f"{location}[1]") if args else 0
            return defining_rep(datum, factor)

        if op == "adjoint":
            arity(0)
            return adjoint_rep(datum)

        if op == "sl2_irrep":
            if len(args) not in (1, 2):
                raise SpecParseError(location, "'sl2_irrep' takes k and an optional factor index")
            k = _expect_int(args[0], f"{location}[1]")
            if len(args) == 2:
                factor = _factor_index(datum, args[1], f"{location}[2]")
                return lift(sl2_irrep(k, factor_datum(datum, factor)), datum, factor)
            return sl2_irrep(k, datum)

        if op == "weights":
            arity(1)
            return _weights(datum, args, location)

        if op == "dual":
            arity(1)
            return dual(sub(0))

        if op == "cotangent":
            arity(1)
            return cotangent(sub(0))

        if op in ("scale", "times"):
            arity(2)
            return scale(sub(0), _expect_int(args[1], f"{location}[2]"))

        if op in ("tensor", "direct_sum"):
            if not args:
                raise SpecParseError(location, f"'{op}' needs at least one argument")
            reps = [sub(i) for i in range(len(args))]
            if op == "direct_sum":
                return direct_sum(*reps)
            return reduce(tensor, reps)

        if op == "factor":
            arity(2)
            factor = _factor_index(datum, args[0], f"{location}[1]")
            local = build_rep(args[1], factor_datum(datum, factor), f"{location}[2]")
            return lift(local, datum, factor)

    except SpecParseError:
        raise
    except ValidationError as e:
        raise SpecParseError(location, str(e)) from e

    raise SpecParseError(f"{location}[0]", f"unknown operator '{op}'")


def parse_representation(value: Any, datum: RootDatum, location: str = "representation") -> WeightRep:
    if isinstance(value, list) and value and isinstance(value[0], list):
        summands = [build_rep(expr, datum, f"{location}[{i}]") for i, expr in enumerate(value)]
        return direct_sum(*summands)
    return build_rep(value, datum, location)


def parse_spec(document: Any) -> RepSpec:
    try:
        InputValidator.validate_schema(document)
    except ValidationError as e:
        raise SpecParseError("schema", str(e)) from e

    datum = parse_group(document["group"])
    rep = parse_representation(document["representation"], datum)
    name = document.get("name") or f"{datum.name}, dim {rep.dimension}"
    logger.info(f"Parsed spec '{name}': {datum.name}, representation of dimension {rep.dimension}")
    return RepSpec(name=name, datum=datum, rep=rep, document=document)


def load_spec(path: Union[str, Path]) -> RepSpec:
    """Read and parse a spec file"""
    path = InputValidator.validate_file_path(path, must_exist=True)
    try:
        document = json.loads(path.read_text())
    except json.JSONDecodeError as e:
        raise SpecParseError(f"line {e.lineno} column {e.colno}", f"invalid JSON: {e.msg}") from e
    return parse_spec(document)
