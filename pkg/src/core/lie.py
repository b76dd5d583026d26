"""Root data, Weyl groups and weight-multiset representations"""
import itertools
import logging
from collections import Counter, deque
from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

import numpy as np

from config import WEYL_ENUMERATION_CAP
from src.utils.validation import InputValidator, ValidationError


logger = logging.getLogger(__name__)

# Weights are covectors on X_*, coweights are vectors; both are integer tuples
# in the fixed basis of X_* and the pairing is the dot product.
Vector = Tuple[int, ...]
IntMatrix = Tuple[Tuple[int, ...], ...]


class CartanMatrixError(ValidationError):
    """Explicit root data whose pairing matrix is not a generalized Cartan matrix"""
    pass


class RankMismatchError(ValidationError):
    """A representation or vector does not live on the lattice of the root datum"""
    pass


class NotRealizableError(ValidationError):
    """A weight multiset that is not a sum of SL(2) weight strings"""
    pass


class WeylEnumerationError(Exception):
    """Weyl group enumeration exceeded the configured cap"""
    pass


def pair(weight: Sequence[int], coweight: Sequence[int]) -> int:
    """Evaluate a weight on a coweight"""
    return sum(a * b for a, b in zip(weight, coweight))


@dataclass(frozen=True)
class FactorInfo:
    """One factor of a (possibly product) root datum"""
    preset: str  # SL, PGL, GL, Sp, SO, Torus or explicit
    size: int
    offset: int  # first coordinate of this factor in X_*
    rank: int

    @property
    def label(self) -> str:
        if self.preset == "explicit":
            return f"explicit(rank {self.rank})"
        return f"{self.preset}({self.size})"


@dataclass(frozen=True)
class RootDatum:
    """Coweight lattice X_* = Z^rank with simple roots and simple coroots"""
    rank: int
    simple_roots: Tuple[Vector, ...]
    simple_coroots: Tuple[Vector, ...]
    name: str = ""
    factors: Tuple[FactorInfo, ...] = ()

    def __post_init__(self):
        if self.rank < 0:
            raise ValidationError(f"Rank must be non-negative, got {self.rank}")

        if len(self.simple_roots) != len(self.simple_coroots):
            raise CartanMatrixError(
                f"{len(self.simple_roots)} simple roots but {len(self.simple_coroots)} simple coroots"
            )

        for vec in self.simple_roots + self.simple_coroots:
            if len(vec) != self.rank:
                raise RankMismatchError(f"Vector {vec} does not have length {self.rank}")

        cartan = self.cartan_matrix
        size = len(cartan)
        for i in range(size):
            if cartan[i][i] != 2:
                raise CartanMatrixError(f"<alpha_{i}, alpha_{i}^v> = {cartan[i][i]}, expected 2")
            for j in range(size):
                if i == j:
                    continue
                if cartan[i][j] > 0:
                    raise CartanMatrixError(
                        f"<alpha_{i}, alpha_{j}^v> = {cartan[i][j]} violates off-diagonal <= 0"
                    )
                if (cartan[i][j] == 0) != (cartan[j][i] == 0):
                    raise CartanMatrixError(
                        f"<alpha_{i}, alpha_{j}^v> = {cartan[i][j]} but <alpha_{j}, alpha_{i}^v> = "
                        f"{cartan[j][i]}; both or neither must vanish"
                    )

    @property
    def cartan_matrix(self) -> IntMatrix:
        """A[i][j] = <alpha_i, alpha_j^v>"""
        return tuple(
            tuple(pair(root, coroot) for coroot in self.simple_coroots)
            for root in self.simple_roots
        )

    @property
    def semisimple_rank(self) -> int:
        return len(self.simple_roots)

    def simple_reflection(self, i: int) -> "WeylElement":
        """s_i(lambda) = lambda - <alpha_i, lambda> alpha_i^v as an integer matrix"""
        root = np.array(self.simple_roots[i], dtype=np.int64)
        coroot = np.array(self.simple_coroots[i], dtype=np.int64)
        matrix = np.eye(self.rank, dtype=np.int64) - np.outer(coroot, root)
        return WeylElement.from_array(matrix)

    def reflect_weight(self, i: int, weight: Sequence[int]) -> Vector:
        """Action of s_i on a covector: chi - <chi, alpha_i^v> alpha_i"""
        c = pair(weight, self.simple_coroots[i])
        return tuple(w - c * a for w, a in zip(weight, self.simple_roots[i]))

    def check_vector(self, vec: Sequence[int]) -> Vector:
        if len(vec) != self.rank:
            raise RankMismatchError(f"Vector {tuple(vec)} does not have length {self.rank} ({self.name})")
        return tuple(int(x) for x in vec)

    def __str__(self) -> str:
        return self.name or f"RootDatum(rank {self.rank})"


@dataclass(frozen=True)
class WeylElement:
    """Integer matrix acting on X_*"""
    matrix: IntMatrix

    @classmethod
    def from_array(cls, array: np.ndarray) -> "WeylElement":
        return cls(tuple(tuple(int(x) for x in row) for row in array.tolist()))

    @classmethod
    def identity(cls, rank: int) -> "WeylElement":
        return cls.from_array(np.eye(rank, dtype=np.int64))

    @property
    def array(self) -> np.ndarray:
        return np.array(self.matrix, dtype=np.int64).reshape(len(self.matrix), len(self.matrix))

    @property
    def rank(self) -> int:
        return len(self.matrix)

    def apply(self, coweight: Sequence[int]) -> Vector:
        return tuple(pair(row, coweight) for row in self.matrix)

    def __matmul__(self, other: "WeylElement") -> "WeylElement":
        return WeylElement.from_array(self.array @ other.array)

    def is_identity(self) -> bool:
        return all(
            value == (1 if i == j else 0)
            for i, row in enumerate(self.matrix)
            for j, value in enumerate(row)
        )


# --- presets -----------------------------------------------------------------

def _type_a_cartan(r: int) -> List[List[int]]:
    return [[2 if i == j else (-1 if abs(i - j) == 1 else 0) for j in range(r)] for i in range(r)]


def _unit(r: int, i: int, scale: int = 1) -> List[int]:
    vec = [0] * r
    vec[i] = scale
    return vec


def _difference(r: int, i: int, j: int, sign: int = -1) -> List[int]:
    """e_i + sign * e_j"""
    vec = [0] * r
    vec[i] += 1
    vec[j] += sign
    return vec


def _preset_roots(preset: str, size: int) -> Tuple[int, List[List[int]], List[List[int]]]:
    """Return (rank, simple roots, simple coroots) for a preset group"""
    if preset == "Torus":
        return size, [], []

    if preset == "SL":
        # Simply connected: X_* is the coroot lattice, basis alpha_i^v
        r = size - 1
        cartan = _type_a_cartan(r)
        return r, [list(row) for row in cartan], [_unit(r, i) for i in range(r)]

    if preset == "PGL":
        # Adjoint: X_* is the coweight lattice, basis the fundamental coweights
        r = size - 1
        cartan = _type_a_cartan(r)
        coroots = [[cartan[i][j] for i in range(r)] for j in range(r)]
        return r, [_unit(r, i) for i in range(r)], coroots

    if preset == "GL":
        r = size
        pairs = [_difference(r, i, i + 1) for i in range(r - 1)]
        return r, pairs, [list(p) for p in pairs]

    if preset == "Sp":
        r = size // 2
        roots = [_difference(r, i, i + 1) for i in range(r - 1)] + [_unit(r, r - 1, 2)]
        coroots = [_difference(r, i, i + 1) for i in range(r - 1)] + [_unit(r, r - 1)]
        return r, roots, coroots

    if preset == "SO":
        r = size // 2
        if size % 2:
            roots = [_difference(r, i, i + 1) for i in range(r - 1)] + [_unit(r, r - 1)]
            coroots = [_difference(r, i, i + 1) for i in range(r - 1)] + [_unit(r, r - 1, 2)]
            return r, roots, coroots
        if r == 1:
            return 1, [], []
        roots = [_difference(r, i, i + 1) for i in range(r - 1)] + [_difference(r, r - 2, r - 1, sign=1)]
        return r, roots, [list(v) for v in roots]

    raise ValidationError(f"Unknown preset: {preset}")


def make_root_datum(preset: Optional[str] = None,
                    size: Optional[int] = None,
                    simple_roots: Optional[Sequence[Sequence[int]]] = None,
                    simple_coroots: Optional[Sequence[Sequence[int]]] = None,
                    rank: Optional[int] = None,
                    name: Optional[str] = None) -> RootDatum:
    """
    Build a root datum from a preset or from explicit roots and coroots

    Presets take the size of the defining matrix (SL 2, Sp 4, SO 5); Torus
    takes its rank.
    """
    if preset is not None:
        if size is None:
            raise ValidationError(f"Preset {preset} needs a size")
        InputValidator.validate_preset(preset, size)
        r, roots, coroots = _preset_roots(preset, size)
        label = name or (f"Torus({size})" if preset == "Torus" else f"{preset}({size})")
        factors = (FactorInfo(preset, size, 0, r),) if r > 0 else ()
        return RootDatum(
            rank=r,
            simple_roots=tuple(tuple(v) for v in roots),
            simple_coroots=tuple(tuple(v) for v in coroots),
            name=label,
            factors=factors,
        )

    if simple_roots is None or simple_coroots is None:
        raise ValidationError("Explicit root datum needs both simple_roots and simple_coroots")

    if rank is None:
        vectors = list(simple_roots) + list(simple_coroots)
        if not vectors:
            raise ValidationError("Explicit root datum without roots needs an explicit rank")
        rank = len(vectors[0])

    datum = RootDatum(
        rank=rank,
        simple_roots=tuple(tuple(int(x) for x in v) for v in simple_roots),
        simple_coroots=tuple(tuple(int(x) for x in v) for v in simple_coroots),
        name=name or f"explicit(rank {rank})",
        factors=(FactorInfo("explicit", rank, 0, rank),) if rank > 0 else (),
    )
    logger.debug(f"Built explicit root datum with Cartan matrix {datum.cartan_matrix}")
    return datum


def product(a: RootDatum, b: RootDatum) -> RootDatum:
    """Block direct sum of two root data"""
    if a.rank == 0:
        return b
    if b.rank == 0:
        return a

    r = a.rank + b.rank
    pad_a = (0,) * b.rank
    pad_b = (0,) * a.rank
    shifted = tuple(
        FactorInfo(f.preset, f.size, f.offset + a.rank, f.rank) for f in b.factors
    )
    return RootDatum(
        rank=r,
        simple_roots=tuple(v + pad_a for v in a.simple_roots) + tuple(pad_b + v for v in b.simple_roots),
        simple_coroots=tuple(v + pad_a for v in a.simple_coroots) + tuple(pad_b + v for v in b.simple_coroots),
        name=f"{a.name} x {b.name}",
        factors=a.factors + shifted,
    )


def factor_datum(datum: RootDatum, factor: int) -> RootDatum:
    """The root datum of one factor, cut out of its coordinate block"""
    info = _factor(datum, factor)
    start, stop = info.offset, info.offset + info.rank

    def inside(vec: Vector) -> bool:
        return all(x == 0 for k, x in enumerate(vec) if not start <= k < stop)

    roots, coroots = [], []
    for root, coroot in zip(datum.simple_roots, datum.simple_coroots):
        if inside(root) and inside(coroot):
            roots.append(root[start:stop])
            coroots.append(coroot[start:stop])

    return RootDatum(
        rank=info.rank,
        simple_roots=tuple(roots),
        simple_coroots=tuple(coroots),
        name=info.label,
        factors=(FactorInfo(info.preset, info.size, 0, info.rank),),
    )


# --- Weyl group ----------------------------------------------------------------

@lru_cache(maxsize=64)
def _weyl_closure(datum: RootDatum, cap: int) -> Tuple[WeylElement, ...]:
    generators = [datum.simple_reflection(i) for i in range(datum.semisimple_rank)]
    identity = WeylElement.identity(datum.rank)
    seen = {identity}
    ordered = [identity]
    queue = deque([identity])

    while queue:
        current = queue.popleft()
        for gen in generators:
            candidate = current @ gen
            if candidate in seen:
                continue
            seen.add(candidate)
            ordered.append(candidate)
            queue.append(candidate)
            if len(ordered) > cap:
                raise WeylEnumerationError(
                    f"Weyl group of {datum.name} exceeds {cap} elements; "
                    f"the root datum is probably not of finite type"
                )

    logger.debug(f"Enumerated {len(ordered)} Weyl group elements for {datum.name}")
    return tuple(ordered)


def weyl_elements(datum: RootDatum, cap: int = WEYL_ENUMERATION_CAP) -> List[WeylElement]:
    """All elements of the Weyl group, identity first, in breadth-first order"""
    return list(_weyl_closure(datum, cap))


@lru_cache(maxsize=64)
def _root_orbit(datum: RootDatum) -> Tuple[Vector, ...]:
    seen = set(datum.simple_roots)
    queue = deque(datum.simple_roots)
    while queue:
        root = queue.popleft()
        for i in range(datum.semisimple_rank):
            image = datum.reflect_weight(i, root)
            if image not in seen:
                seen.add(image)
                queue.append(image)
            if len(seen) > 2 * WEYL_ENUMERATION_CAP:
                raise WeylEnumerationError(f"Root system of {datum.name} is not finite")
    return tuple(sorted(seen))


def all_roots(datum: RootDatum) -> List[Vector]:
    """Full root set (covectors), the Weyl orbit of the simple roots"""
    return list(_root_orbit(datum))


def is_dominant(datum: RootDatum, coweight: Sequence[int]) -> bool:
    return all(pair(root, coweight) >= 0 for root in datum.simple_roots)


def dominant_coweights(datum: RootDatum, bound: int) -> List[Vector]:
    """Dominant coweights in the coordinate box [-bound, bound]^rank"""
    if bound < 0:
        raise ValidationError(f"Bound must be non-negative, got {bound}")
    span = range(-bound, bound + 1)
    return [lam for lam in itertools.product(span, repeat=datum.rank) if is_dominant(datum, lam)]


def dominant_shell(datum: RootDatum, radius: int) -> List[Vector]:
    """Dominant coweights with max |coordinate| exactly equal to radius"""
    if radius == 0:
        return [(0,) * datum.rank]
    if datum.rank == 0:
        return []
    return [
        lam for lam in dominant_coweights(datum, radius)
        if max(abs(x) for x in lam) == radius
    ]


# --- representations -------------------------------------------------------------

@dataclass(frozen=True)
class WeightRep:
    """Weight multiset: sorted (weight, multiplicity) pairs with distinct weights"""
    rank: int
    entries: Tuple[Tuple[Vector, int], ...] = ()

    @classmethod
    def from_pairs(cls, rank: int, pairs: Iterable[Tuple[Sequence[int], int]]) -> "WeightRep":
        merged: Counter = Counter()
        for weight, mult in pairs:
            weight = tuple(int(x) for x in weight)
            if len(weight) != rank:
                raise RankMismatchError(f"Weight {weight} does not have length {rank}")
            if int(mult) < 0:
                raise ValidationError(f"Multiplicity of {weight} cannot be negative: {mult}")
            merged[weight] += int(mult)
        return cls(rank, tuple(sorted((w, m) for w, m in merged.items() if m > 0)))

    @classmethod
    def from_counter(cls, rank: int, counter: Counter) -> "WeightRep":
        return cls.from_pairs(rank, counter.items())

    def as_counter(self) -> Counter:
        return Counter(dict(self.entries))

    def multiplicity(self, weight: Sequence[int]) -> int:
        return dict(self.entries).get(tuple(weight), 0)

    @property
    def dimension(self) -> int:
        return sum(m for _, m in self.entries)

    @property
    def weights(self) -> List[Vector]:
        return [w for w, _ in self.entries]

    def __str__(self) -> str:
        parts = [f"{w}x{m}" if m > 1 else f"{w}" for w, m in self.entries]
        return "{" + ", ".join(parts) + "}"


def check_rep(datum: RootDatum, rep: WeightRep) -> None:
    if rep.rank != datum.rank:
        raise RankMismatchError(
            f"Representation of rank {rep.rank} applied to {datum.name} of rank {datum.rank}"
        )


def is_weyl_invariant(datum: RootDatum, rep: WeightRep) -> bool:
    check_rep(datum, rep)
    counter = rep.as_counter()
    for i in range(datum.semisimple_rank):
        image = Counter()
        for weight, mult in counter.items():
            image[datum.reflect_weight(i, weight)] += mult
        if image != counter:
            return False
    return True


def weights_rep(datum: RootDatum, pairs: Iterable[Tuple[Sequence[int], int]]) -> WeightRep:
    """Explicit weight/multiplicity pairs, validated for Weyl invariance"""
    rep = WeightRep.from_pairs(datum.rank, pairs)
    if not is_weyl_invariant(datum, rep):
        raise ValidationError(f"Weight multiset {rep} is not invariant under the Weyl group of {datum.name}")
    return rep


def _rank_one_coroot(datum: RootDatum) -> int:
    if datum.rank != 1 or datum.semisimple_rank != 1:
        raise RankMismatchError(f"{datum.name} is not a rank-one datum with a root")
    return datum.simple_coroots[0][0]


def sl2_irrep(k: int, datum: Optional[RootDatum] = None) -> WeightRep:
    """V^k: weights k, k-2, ..., -k measured against the coroot"""
    if k < 0:
        raise ValidationError(f"Highest weight must be non-negative, got {k}")
    datum = datum or make_root_datum("SL", 2)
    coroot = _rank_one_coroot(datum)
    pairs = []
    for j in range(-k, k + 1, 2):
        if j % coroot:
            raise ValidationError(f"V^{k} does not descend to {datum.name}: weight {j} is not divisible by {coroot}")
        pairs.append(((j // coroot,), 1))
    return WeightRep.from_pairs(1, pairs)


def _factor_weights(factor: FactorInfo) -> List[Tuple[List[int], int]]:
    """Weights of the defining representation of a preset factor in its own basis"""
    r = factor.rank
    n = factor.size

    if factor.preset == "SL":
        weights = []
        for k in range(n):
            vec = [0] * r
            if k < r:
                vec[k] += 1
            if k >= 1:
                vec[k - 1] -= 1
            weights.append((vec, 1))
        return weights

    if factor.preset in ("GL", "Torus"):
        return [(_unit(r, k), 1) for k in range(r)]

    if factor.preset == "Sp":
        return [(_unit(r, k, s), 1) for k in range(r) for s in (1, -1)]

    if factor.preset == "SO":
        weights = [(_unit(r, k, s), 1) for k in range(r) for s in (1, -1)]
        if n % 2:
            weights.append(([0] * r, 1))
        return weights

    raise ValidationError(f"{factor.label} has no defining representation; use the adjoint representation")


def lift(rep: WeightRep, datum: RootDatum, factor: int) -> WeightRep:
    """Pad a representation of one factor to the full lattice of a product datum"""
    info = _factor(datum, factor)
    if rep.rank != info.rank:
        raise RankMismatchError(f"Representation of rank {rep.rank} does not fit factor {info.label}")
    before = (0,) * info.offset
    after = (0,) * (datum.rank - info.offset - info.rank)
    return WeightRep.from_pairs(datum.rank, ((before + w + after, m) for w, m in rep.entries))


def _factor(datum: RootDatum, factor: int) -> FactorInfo:
    if not 0 <= factor < len(datum.factors):
        raise ValidationError(f"{datum.name} has no factor {factor}")
    return datum.factors[factor]


def defining_rep(datum: RootDatum, factor: int = 0) -> WeightRep:
    """Defining (tautological) representation of one preset factor"""
    info = _factor(datum, factor)
    local = WeightRep.from_pairs(info.rank, _factor_weights(info))
    return lift(local, datum, factor)


def adjoint_rep(datum: RootDatum) -> WeightRep:
    pairs = [(root, 1) for root in all_roots(datum)]
    pairs.append(((0,) * datum.rank, datum.rank))
    return WeightRep.from_pairs(datum.rank, pairs)


def dual(rep: WeightRep) -> WeightRep:
    return WeightRep.from_pairs(rep.rank, ((tuple(-x for x in w), m) for w, m in rep.entries))


def direct_sum(*reps: WeightRep) -> WeightRep:
    if not reps:
        raise ValidationError("direct_sum needs at least one summand")
    rank = reps[0].rank
    for rep in reps:
        if rep.rank != rank:
            raise RankMismatchError(f"Cannot add representations of rank {rank} and {rep.rank}")
    return WeightRep.from_pairs(rank, (entry for rep in reps for entry in rep.entries))


def tensor(a: WeightRep, b: WeightRep) -> WeightRep:
    if a.rank != b.rank:
        raise RankMismatchError(f"Cannot tensor representations of rank {a.rank} and {b.rank}")
    return WeightRep.from_pairs(
        a.rank,
        (
            (tuple(x + y for x, y in zip(wa, wb)), ma * mb)
            for wa, ma in a.entries
            for wb, mb in b.entries
        ),
    )


def scale(rep: WeightRep, multiplicity: int) -> WeightRep:
    """V (x) C^m"""
    if multiplicity < 0:
        raise ValidationError(f"Multiplicity space dimension cannot be negative: {multiplicity}")
    return WeightRep.from_pairs(rep.rank, ((w, m * multiplicity) for w, m in rep.entries))


def cotangent(rep: WeightRep) -> WeightRep:
    """T*N = N + N*"""
    return direct_sum(rep, dual(rep))


# --- symplectic checks and splittings ------------------------------------------------

@dataclass(frozen=True)
class SymplecticCheck:
    """Weight-level symplecticity verdict with the violated conditions"""
    ok: bool
    violations: Tuple[str, ...] = ()

    def __bool__(self) -> bool:
        return self.ok


def is_symplectic_weights(datum: RootDatum, rep: WeightRep) -> SymplecticCheck:
    """Necessary weight-level conditions for a symplectic representation"""
    check_rep(datum, rep)
    counter = rep.as_counter()
    violations = []

    for weight, mult in sorted(counter.items()):
        negative = tuple(-x for x in weight)
        if weight < negative and counter.get(negative, 0) != mult:
            violations.append(f"m{weight} = {mult} but m{negative} = {counter.get(negative, 0)}")
        elif weight > negative and negative not in counter:
            violations.append(f"m{weight} = {mult} but m{negative} = 0")

    if rep.dimension % 2:
        violations.append(f"total dimension {rep.dimension} is odd")

    zero_mult = counter.get((0,) * rep.rank, 0)
    if zero_mult % 2:
        violations.append(f"zero weight has odd multiplicity {zero_mult}")

    if not is_weyl_invariant(datum, rep):
        violations.append("weight multiset is not Weyl invariant")

    return SymplecticCheck(not violations, tuple(violations))


def _sl2_values(rep: WeightRep, datum: Optional[RootDatum]) -> Counter:
    """Weights of a rank-one representation as integers <chi, alpha^v>"""
    if rep.rank != 1:
        raise RankMismatchError(f"Expected a rank-one representation, got rank {rep.rank}")
    coroot = 1
    if datum is not None:
        check_rep(datum, rep)
        if datum.semisimple_rank == 1:
            coroot = datum.simple_coroots[0][0]
    values: Counter = Counter()
    for weight, mult in rep.entries:
        values[weight[0] * coroot] += mult
    return values


def sl2_isotypic_decomposition(rep: WeightRep, datum: Optional[RootDatum] = None) -> Dict[int, int]:
    """Recover k -> dim M^k by peeling weight strings from the top"""
    remaining = _sl2_values(rep, datum)
    decomposition: Dict[int, int] = {}

    while remaining:
        top = max(remaining)
        count = remaining[top]
        if top < 0:
            raise NotRealizableError(f"Leftover weights {dict(remaining)} are all negative")
        for j in range(-top, top + 1, 2):
            if remaining[j] < count:
                raise NotRealizableError(
                    f"Cannot peel {count} copies of V^{top}: weight {j} has multiplicity {remaining[j]}"
                )
            remaining[j] -= count
        remaining = +remaining
        decomposition[top] = count

    return dict(sorted(decomposition.items()))


def reconstruct_from_isotypic(decomposition: Dict[int, int],
                              datum: Optional[RootDatum] = None) -> WeightRep:
    summands = [scale(sl2_irrep(k, datum), m) for k, m in decomposition.items() if m > 0]
    if not summands:
        return WeightRep(1)
    return direct_sum(*summands)


def sl2_symplectic_criterion(decomposition: Dict[int, int]) -> bool:
    """Exact SL(2) criterion: dim M^k is even for every even k"""
    return all(m % 2 == 0 for k, m in decomposition.items() if k % 2 == 0)


def weight_level_cotangent_split(rep: WeightRep) -> Optional[WeightRep]:
    """N with rep = N + N* as multisets, or None when no such N exists"""
    counter = rep.as_counter()
    zero = (0,) * rep.rank
    half = Counter()

    for weight, mult in counter.items():
        if weight == zero:
            if mult % 2:
                return None
            half[weight] = mult // 2
            continue
        negative = tuple(-x for x in weight)
        if counter.get(negative, 0) != mult:
            return None
        # keep the member of each +/- pair whose first non-zero coordinate is positive
        leading = next(x for x in weight if x != 0)
        if leading > 0:
            half[weight] = mult

    return WeightRep.from_counter(rep.rank, half)
