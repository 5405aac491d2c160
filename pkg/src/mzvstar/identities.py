"""Both sides of each verified identity, built through independent pipelines.

Independence discipline: the two sides of an equation never share the code
path that embodies the equation itself.  Symmetric sums go through the
regularization recursions (and, for the star-shuffle flavor, the series
conversion map); partition sums go through set-partition enumeration with the
c/c* coefficients and the characteristic factor.  They meet only at the
numeric evaluator.  Identities whose two sides are rational or free-symbolic
are compared exactly; numerics are reserved for sides containing genuinely
different zeta symbols.
"""

from __future__ import annotations

import itertools
import math
import time
from collections import Counter
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Iterator

import gmpy2

from .combinatorics import (
    bell_complete,
    bell_partial,
    bell_partial_by_shapes,
    coeff_c,
    coeff_c_star,
    disjoint_union,
    enum_set_partitions,
    partition_shape_count,
    partition_shapes,
    prop1_decomposition,
    relabel_partition,
    stirling_second,
    SetPartition,
)
from .errors import CapacityError, DomainError, MzvStarError
from .indices import Index, all_ones
from .numerics import BoundedValue, NumericPoly, ZetaEvaluator, shared_evaluator
from .regularize import (
    reg_harm,
    reg_harm_star,
    reg_poly,
    reg_shuffle,
    reg_star_shuffle,
    symbolic_a_series,
)
from .series import TPoly, rho, rho_bar_star_inverse
from .symbols import SymbolCombination, e_poly

MAX_SYMMETRIC_DEPTH = 5
MAX_PARTITION_GROUND = 8

FLAVORS = ("harm", "star-harm", "sh", "star-sh")

# Default numeric tolerances per identity (absolute, per T-coefficient).
_TOLERANCES = {
    "theorem1": 1e-7,
    "hoffman-harm": 1e-7,
    "hoffman-star-harm": 1e-7,
    "shuffle-mzv": 1e-7,
    "corollary1": 1e-8,
    "example1": 1e-8,
    "prop3-1": 1e-10,
    "remark-star": 1e-10,
    "reg-theorem": 1e-7,
    "numerics-floor": 1e-9,
}


def zeta_part(index: Index, partition: SetPartition, flavor: str = "H") -> TPoly:
    """Per-partition product of depth-one polynomials.

    Flavor "H" multiplies e(sum of entries over each block; T); flavor "S"
    additionally kills any multi-element block consisting entirely of
    1-entries (the characteristic factor of the star-shuffle identity).
    """
    if flavor not in ("H", "S"):
        raise DomainError(f"flavor must be 'H' or 'S', got {flavor!r}")
    r = index.depth
    if partition.ground != set(range(1, r + 1)):
        raise DomainError(
            f"partition ground {sorted(partition.ground)} does not match the index depth {r}"
        )
    out = TPoly([SymbolCombination.one()])
    for block in partition.blocks:
        if flavor == "S" and len(block) > 1 and all(index.parts[p - 1] == 1 for p in block):
            return TPoly()
        out = out * e_poly(sum(index.parts[p - 1] for p in block))
    return out


def symmetric_sum_symbolic(index: Index, flavor: str, *, max_depth: int = MAX_SYMMETRIC_DEPTH) -> TPoly:
    """Sum of the regularized polynomial over all permutations of the index entries."""
    if flavor not in FLAVORS:
        raise DomainError(f"flavor must be one of {FLAVORS}, got {flavor!r}")
    if index.depth > max_depth:
        raise CapacityError(
            f"depth {index.depth} exceeds the permutation-sum bound {max_depth}"
        )
    acc = TPoly()
    for perm, mult in Counter(itertools.permutations(index.parts)).items():
        acc = acc + mult * reg_poly(Index(perm), flavor)
    return acc


def partition_sum_symbolic(index: Index, flavor: str, *, max_ground: int = MAX_PARTITION_GROUND) -> TPoly:
    """Partition-weighted sum over all set partitions of the index positions."""
    if flavor not in FLAVORS:
        raise DomainError(f"flavor must be one of {FLAVORS}, got {flavor!r}")
    r = index.depth
    if r > max_ground:
        raise CapacityError(f"depth {r} exceeds the partition-sum bound {max_ground}")
    coeff_fn, part_flavor = {
        "harm": (coeff_c, "H"),
        "star-harm": (coeff_c_star, "H"),
        "sh": (coeff_c, "S"),
        "star-sh": (coeff_c_star, "S"),
    }[flavor]
    acc = TPoly()
    for partition in enum_set_partitions(range(1, r + 1)):
        term = zeta_part(index, partition, part_flavor)
        if term:
            acc = acc + coeff_fn(partition) * term
    return acc


def symmetric_sum(index: Index, flavor: str, evaluator: ZetaEvaluator | None = None) -> NumericPoly:
    evaluator = evaluator or shared_evaluator()
    return evaluator.evaluate_poly(symmetric_sum_symbolic(index, flavor))


def partition_sum(index: Index, flavor: str, evaluator: ZetaEvaluator | None = None) -> NumericPoly:
    evaluator = evaluator or shared_evaluator()
    return evaluator.evaluate_poly(partition_sum_symbolic(index, flavor))


def indices_by_weight(max_weight: int, max_depth: int) -> Iterator[Index]:
    """All indices with weight up to max_weight and depth up to max_depth."""
    def compositions(total: int, parts: int) -> Iterator[tuple[int, ...]]:
        if parts == 1:
            yield (total,)
            return
        for first in range(1, total - parts + 2):
            for rest in compositions(total - first, parts - 1):
                yield (first,) + rest

    for weight in range(1, max_weight + 1):
        for depth in range(1, min(max_depth, weight) + 1):
            for parts in compositions(weight, depth):
                yield Index(parts)


# -- reports ------------------------------------------------------------------


@dataclass
class IdentityReport:
    """Outcome of one verification: per-coefficient deviations against bounds."""

    identity: str
    params: dict
    exact: bool
    deviations: tuple[float, ...]
    allowed: tuple[float, ...]
    passed: bool
    seconds: float
    notes: tuple[str, ...] = ()

    @property
    def max_deviation(self) -> float:
        return max(self.deviations, default=0.0)

    @property
    def bound(self) -> float:
        return max(self.allowed, default=0.0)

    def to_dict(self) -> dict:
        return {
            "identity": self.identity,
            "params": self.params,
            "exact": self.exact,
            "max_deviation": self.max_deviation,
            "bound": self.bound,
            "pass": self.passed,
            "seconds": round(self.seconds, 6),
            "notes": list(self.notes),
        }

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        extent = "exact" if self.exact else f"max dev {self.max_deviation:.3e} ≤ {self.bound:.3e}"
        args = ", ".join(f"{k}={v}" for k, v in self.params.items())
        return f"{status} {self.identity}({args}): {extent} [{self.seconds:.2f}s]"


def _numeric_outcome(lhs: NumericPoly, rhs: NumericPoly, tolerance: float):
    n = max(lhs.degree, rhs.degree) + 1
    deviations = []
    allowed = []
    for i in range(n):
        dev = float(abs(lhs.value(i) - rhs.value(i)))
        cap = min(lhs.bound(i) + rhs.bound(i), tolerance)
        deviations.append(dev)
        allowed.append(cap)
    passed = all(d <= a for d, a in zip(deviations, allowed))
    return False, tuple(deviations), tuple(allowed), passed


def _exact_outcome(checks: Iterable[bool]):
    deviations = tuple(0.0 if ok else math.inf for ok in checks)
    return True, deviations, tuple(0.0 for _ in deviations), all(d == 0.0 for d in deviations)


# -- individual identities ------------------------------------------------------


def _param_index(params: dict, key: str = "index") -> Index:
    try:
        raw = params[key]
    except KeyError:
        raise DomainError(f"this identity needs the parameter {key!r}") from None
    if isinstance(raw, Index):
        return raw
    if isinstance(raw, str):
        return Index.parse(raw)
    return Index(raw)


def _param_int(params: dict, key: str, minimum: int) -> int:
    try:
        value = int(params[key])
    except KeyError:
        raise DomainError(f"this identity needs the parameter {key!r}") from None
    except (TypeError, ValueError):
        raise DomainError(f"parameter {key!r} must be an integer") from None
    if value < minimum:
        raise DomainError(f"parameter {key!r} must be at least {minimum}")
    return value


def _tol(params: dict, name: str) -> float:
    return float(params.get("tolerance", _TOLERANCES.get(name, 1e-7)))


def _two_pipelines(index: Index, flavor: str, tolerance: float, ev: ZetaEvaluator):
    lhs = ev.evaluate_poly(symmetric_sum_symbolic(index, flavor))
    rhs = ev.evaluate_poly(partition_sum_symbolic(index, flavor))
    return _numeric_outcome(lhs, rhs, tolerance)


def _id_theorem1(params, ev):
    return _two_pipelines(_param_index(params), "star-sh", _tol(params, "theorem1"), ev)


def _id_hoffman_harm(params, ev):
    return _two_pipelines(_param_index(params), "harm", _tol(params, "hoffman-harm"), ev)


def _id_hoffman_star_harm(params, ev):
    return _two_pipelines(_param_index(params), "star-harm", _tol(params, "hoffman-star-harm"), ev)


def _id_shuffle_mzv(params, ev):
    out = _two_pipelines(_param_index(params), "sh", _tol(params, "shuffle-mzv"), ev)
    return out + (("right-hand side follows the externally sourced substitution form",),)


def _id_corollary1(params, ev):
    k = _param_int(params, "k", 2)
    r = _param_int(params, "r", 1)
    lhs_sym = TPoly()
    for i in range(r):
        lhs_sym = lhs_sym + reg_star_shuffle(Index((1,) * i + (k,) + (1,) * (r - 1 - i)))
    rhs_sym = TPoly(
        [SymbolCombination.single(Index([k + r - 1 - j])) / math.factorial(j) for j in range(r)]
    )
    return _numeric_outcome(ev.evaluate_poly(lhs_sym), ev.evaluate_poly(rhs_sym), _tol(params, "corollary1"))


def _id_cor1_count(params, ev):
    r = _param_int(params, "r", 1)
    counts = [0] * (r + 1)
    for partition in enum_set_partitions(range(1, r + 1)):
        sizes = sorted((len(b) for b in partition.blocks), reverse=True)
        if len(sizes) >= 2 and sizes[1] > 1:
            continue
        first = next(b for b in partition.blocks if 1 in b)
        if all(len(b) == 1 for b in partition.blocks if b != first):
            counts[len(first)] += 1
    checks = [counts[j] == math.comb(r - 1, r - j) for j in range(1, r + 1)]
    return _exact_outcome(checks)


def _id_prop3_1(params, ev):
    r = _param_int(params, "r", 1)
    lhs = ev.evaluate_poly(partition_sum_symbolic(all_ones(r), "star-harm"))
    t_power = TPoly([SymbolCombination.zero()] * r + [SymbolCombination.one()])
    rhs = ev.evaluate_poly(rho_bar_star_inverse(t_power, symbolic_a_series(r)))
    return _numeric_outcome(lhs, rhs, _tol(params, "prop3-1"))


def _id_prop3_2(params, ev):
    r = _param_int(params, "r", 1)
    lhs = partition_sum_symbolic(all_ones(r), "star-sh")
    t_power = TPoly([SymbolCombination.zero()] * r + [SymbolCombination.one()])
    return _exact_outcome([lhs == t_power])


def _id_lemma1(params, ev):
    r = _param_int(params, "r", 1)
    lhs = partition_sum_symbolic(all_ones(r), "star-harm")
    rhs = bell_complete(r, [math.factorial(a - 1) * e_poly(a) for a in range(1, r + 1)])
    return _exact_outcome([lhs == rhs])


def _id_remark_bell(params, ev):
    r = _param_int(params, "r", 1)
    value = bell_complete(r, [math.factorial(a - 1) for a in range(1, r + 1)])
    return _exact_outcome([value == math.factorial(r)])


def _id_remark_star(params, ev):
    r = _param_int(params, "r", 1)
    lhs = ev.evaluate_poly(math.factorial(r) * reg_harm_star(all_ones(r)))
    rhs = ev.evaluate_poly(bell_complete(r, [math.factorial(a - 1) * e_poly(a) for a in range(1, r + 1)]))
    return _numeric_outcome(lhs, rhs, _tol(params, "remark-star"))


def _id_reg_theorem(params, ev):
    index = _param_index(params)
    harm = reg_harm(index)
    lhs = ev.evaluate_poly(rho(harm, symbolic_a_series(max(harm.degree, 0))))
    rhs = ev.evaluate_poly(reg_shuffle(index))
    return _numeric_outcome(lhs, rhs, _tol(params, "reg-theorem"))


def _proper_subsets(r: int, params: dict) -> list[tuple[int, ...]]:
    if "b" in params:
        subset = tuple(sorted(int(x) for x in params["b"]))
        return [subset]
    ground = list(range(1, r + 1))
    out: list[tuple[int, ...]] = []
    for size in range(r):  # proper subsets only
        out.extend(itertools.combinations(ground, size))
    return out


def _id_prop1(params, ev):
    r = _param_int(params, "r", 1)
    expected = Counter(enum_set_partitions(range(1, r + 1)))
    checks = []
    for subset in _proper_subsets(r, params):
        glued = Counter(
            disjoint_union(xi, delta) for _, xi, delta in prop1_decomposition(r, subset)
        )
        checks.append(glued == expected)
    return _exact_outcome(checks)


def _id_prop2(params, ev):
    if "index" in params:
        index = _param_index(params)
        r = index.depth
        if r == 0:
            raise DomainError("prop2 needs a nonempty index")
        ones = tuple(sorted(p for p, k in enumerate(index.parts, start=1) if k == 1))
        if len(ones) == r:
            raise DomainError("prop2(ii) requires an index with at least one entry above 1")
        subsets = [ones]
        factor_check = True
    else:
        index = None
        r = _param_int(params, "r", 1)
        subsets = _proper_subsets(r, params)
        factor_check = False

    checks = []
    for subset in subsets:
        for a, xi, delta in prop1_decomposition(r, subset):
            union = disjoint_union(xi, delta)
            checks.append(coeff_c_star(union) == coeff_c_star(xi) * coeff_c_star(delta))
            checks.append(coeff_c_star(xi) == coeff_c_star(relabel_partition(a, xi)))
            if factor_check:
                sub_index = all_ones(len(a))
                sub_partition = relabel_partition(a, xi)
                zeta_factor = SymbolCombination.one()
                for block in delta.blocks:
                    zeta_factor = zeta_factor * SymbolCombination.single(
                        Index([sum(index.parts[q - 1] for q in block)])
                    )
                scale = TPoly([zeta_factor])
                for flavor in ("H", "S"):
                    lhs = zeta_part(index, union, flavor)
                    rhs = scale * zeta_part(sub_index, sub_partition, flavor)
                    checks.append(lhs == rhs)
    return _exact_outcome(checks)


def _id_numerics_floor(params, ev):
    tolerance = _tol(params, "numerics-floor")
    with gmpy2.context(precision=ev.config.prec_bits + 32):
        pi = gmpy2.const_pi()
        z2 = ev.zeta_single(2)
        z3 = ev.zeta_single(3)
        z4 = ev.zeta_single(4)
        pairs = [
            (z2.value, pi**2 / 6, z2.bound),
            (ev.mzv(Index([1, 2])).value, z3.value, ev.mzv(Index([1, 2])).bound + z3.bound),
            (ev.mzv(Index([1, 3])).value, pi**4 / 360, ev.mzv(Index([1, 3])).bound),
            (
                ev.mzv(Index([2, 2])).value,
                (z2.value * z2.value - z4.value) / 2,
                ev.mzv(Index([2, 2])).bound + 4.0 * z2.bound + z4.bound,
            ),
        ]
        deviations = tuple(float(abs(a - b)) for a, b, _ in pairs)
    allowed = tuple(min(max(b, 1e-30), tolerance) for _, _, b in pairs)
    passed = all(d <= a for d, a in zip(deviations, allowed))
    return False, deviations, allowed, passed


def _id_bell_stirling(params, ev):
    checks = []
    # the worked partial Bell polynomial: only shapes (1,0,1) and (0,2,0), with
    # multiplicities 4 and 3
    shapes = {shape: partition_shape_count(4, 2, shape) for shape in partition_shapes(4, 2)}
    checks.append(shapes == {(1, 0, 1): 4, (0, 2, 0): 3})
    for sample in ((1, 1, 1), (2, 3, 5), (Fraction(1, 2), Fraction(1, 3), Fraction(1, 7))):
        x1, x2, x3 = sample
        checks.append(bell_partial(4, 2, sample) == 4 * x1 * x3 + 3 * x2 * x2)
        checks.append(bell_partial_by_shapes(4, 2, sample) == 4 * x1 * x3 + 3 * x2 * x2)
    max_r = int(params.get("max_r", 10))
    for r in range(1, max_r + 1):
        by_blocks = Counter(p.num_blocks for p in enum_set_partitions(range(1, r + 1)))
        for k in range(1, r + 1):
            checks.append(stirling_second(r, k) == by_blocks.get(k, 0))
    return _exact_outcome(checks)


_REGISTRY = {
    "theorem1": _id_theorem1,
    "corollary1": _id_corollary1,
    "cor1-count": _id_cor1_count,
    "hoffman-harm": _id_hoffman_harm,
    "hoffman-star-harm": _id_hoffman_star_harm,
    "shuffle-mzv": _id_shuffle_mzv,
    "prop3-1": _id_prop3_1,
    "prop3-2": _id_prop3_2,
    "lemma1": _id_lemma1,
    "remark-bell": _id_remark_bell,
    "remark-star": _id_remark_star,
    "prop1": _id_prop1,
    "prop2": _id_prop2,
    "reg-theorem": _id_reg_theorem,
    "numerics-floor": _id_numerics_floor,
    "bell-stirling": _id_bell_stirling,
}

IDENTITY_NAMES = tuple(sorted(_REGISTRY))


def verify(name: str, params: dict | None = None, evaluator: ZetaEvaluator | None = None) -> IdentityReport:
    """Verify one identity; capacity/accuracy problems surface as errors, never as silent passes."""
    fn = _REGISTRY.get(name)
    if fn is None:
        raise DomainError(f"unknown identity {name!r}; known: {', '.join(IDENTITY_NAMES)}")
    params = dict(params or {})
    evaluator = evaluator or shared_evaluator()
    started = time.perf_counter()
    outcome = fn(params, evaluator)
    exact, deviations, allowed, passed = outcome[:4]
    notes = outcome[4] if len(outcome) > 4 else ()
    return IdentityReport(
        identity=name,
        params=params,
        exact=exact,
        deviations=deviations,
        allowed=allowed,
        passed=passed,
        seconds=time.perf_counter() - started,
        notes=tuple(notes),
    )


# -- Example 1 table -------------------------------------------------------------


def _np_shift_add(base: NumericPoly, constant: BoundedValue, prec_bits: int, scale: int = 1) -> NumericPoly:
    """base + constant (in the T^0 coefficient), then times an integer scale."""
    with gmpy2.context(precision=prec_bits):
        values = list(base.values) or [gmpy2.mpfr(0)]
        bounds = list(base.bounds) or [0.0]
        values[0] = values[0] + constant.value
        bounds[0] = bounds[0] + constant.bound
        if scale != 1:
            values = [v * scale for v in values]
            bounds = [b * abs(scale) for b in bounds]
    return NumericPoly(tuple(values), tuple(bounds))


def example1_rows(k_values: Iterable[int], l_values: Iterable[int],
                  evaluator: ZetaEvaluator | None = None, tolerance: float | None = None) -> list[IdentityReport]:
    """The three displayed identities, one report per parameter choice.

    The star values on the left are evaluated directly as weak-inequality
    sums, so these rows exercise the numeric star evaluator against the
    regularization pipeline on top of the identity itself.
    """
    ev = evaluator or shared_evaluator()
    tol = float(tolerance if tolerance is not None else _TOLERANCES["example1"])
    k_values = sorted(set(int(k) for k in k_values))
    l_values = sorted(set(int(l) for l in l_values))
    if any(k < 2 for k in k_values + l_values):
        raise DomainError("Example 1 needs entries at least 2")
    reports: list[IdentityReport] = []

    def single(*parts: int) -> SymbolCombination:
        return SymbolCombination.single(Index(parts))

    def finish(display: int, params: dict, lhs: NumericPoly, rhs_sym: TPoly, started: float):
        rhs = ev.evaluate_poly(rhs_sym)
        exact, deviations, allowed, passed = _numeric_outcome(lhs, rhs, tol)
        reports.append(IdentityReport(
            identity="example1",
            params={"display": display, **params},
            exact=exact,
            deviations=deviations,
            allowed=allowed,
            passed=passed,
            seconds=time.perf_counter() - started,
        ))

    for k in k_values:
        started = time.perf_counter()
        lhs = _np_shift_add(ev.evaluate_poly(reg_star_shuffle(Index([k, 1]))), ev.mzsv(Index([1, k])), ev.config.prec_bits)
        rhs_sym = TPoly([single(k + 1), single(k)])
        finish(1, {"k": k}, lhs, rhs_sym, started)

    for k in k_values:
        for l in l_values:
            started = time.perf_counter()
            base = ev.evaluate_poly(reg_star_shuffle(Index([k, l, 1])) + reg_star_shuffle(Index([l, k, 1])))
            consts = [
                ev.mzsv(Index([1, k, l])),
                ev.mzsv(Index([1, l, k])),
                ev.mzsv(Index([k, 1, l])),
                ev.mzsv(Index([l, 1, k])),
            ]
            lhs = base
            for c in consts:
                lhs = _np_shift_add(lhs, c, ev.config.prec_bits)
            rhs_sym = TPoly([
                single(k) * single(l + 1) + single(l) * single(k + 1) + 2 * single(k + l + 1),
                single(k) * single(l) + single(k + l),
            ])
            finish(2, {"k": k, "l": l}, lhs, rhs_sym, started)

    for k in k_values:
        started = time.perf_counter()
        base = ev.evaluate_poly(reg_star_shuffle(Index([1, k, 1])) + reg_star_shuffle(Index([k, 1, 1])))
        lhs = _np_shift_add(base, ev.mzsv(Index([1, 1, k])), ev.config.prec_bits, scale=2)
        rhs_sym = TPoly([2 * single(k + 2), 2 * single(k + 1), single(k)])
        finish(3, {"k": k}, lhs, rhs_sym, started)

    return reports


# -- the verification suite -------------------------------------------------------


@dataclass
class SuiteResult:
    reports: list[IdentityReport] = field(default_factory=list)
    seconds: float = 0.0

    @property
    def passed(self) -> int:
        return sum(1 for r in self.reports if r.passed)

    @property
    def failed(self) -> int:
        return sum(1 for r in self.reports if not r.passed)

    @property
    def all_passed(self) -> bool:
        return self.failed == 0

    def to_dict(self) -> dict:
        return {
            "passed": self.passed,
            "failed": self.failed,
            "seconds": round(self.seconds, 3),
            "reports": [r.to_dict() for r in self.reports],
        }


def suite_plan(max_weight: int = 7, max_depth: int = 4) -> list[tuple[str, dict]]:
    """The full verification matrix: every identity at its acceptance ranges."""
    plan: list[tuple[str, dict]] = [("numerics-floor", {}), ("bell-stirling", {})]
    plan += [("remark-bell", {"r": r}) for r in range(1, 13)]
    plan += [("cor1-count", {"r": r}) for r in range(1, 9)]
    plan += [("prop1", {"r": r}) for r in range(1, 8)]
    plan += [("prop2", {"r": r}) for r in range(1, 8)]
    plan += [("prop2", {"index": text}) for text in ("2,1", "1,2,1", "2,1,1,3", "1,1,2,1,1")]
    plan += [("lemma1", {"r": r}) for r in range(1, 8)]
    plan += [("prop3-2", {"r": r}) for r in range(1, 9)]
    plan += [("prop3-1", {"r": r}) for r in range(1, 7)]
    plan += [("remark-star", {"r": r}) for r in range(1, 7)]
    plan += [("reg-theorem", {"index": str(ix)}) for ix in indices_by_weight(6, 3)]
    for ix in indices_by_weight(max_weight, max_depth):
        text = str(ix)
        plan.append(("theorem1", {"index": text}))
        plan.append(("hoffman-harm", {"index": text}))
        plan.append(("hoffman-star-harm", {"index": text}))
        plan.append(("shuffle-mzv", {"index": text}))
    plan += [("corollary1", {"k": k, "r": r}) for k in range(2, 6) for r in range(1, 6)]
    return plan


def run_suite(
    evaluator: ZetaEvaluator | None = None,
    *,
    max_weight: int = 7,
    max_depth: int = 4,
    k_values: Iterable[int] = (2, 3, 4),
    l_values: Iterable[int] = (2, 3),
    jobs: int = 1,
) -> SuiteResult:
    """Run the whole acceptance matrix and collect one report per check.

    Capacity/accuracy problems in an individual check become failed reports
    carrying the error text; they never abort the sweep or pass silently.
    """
    ev = evaluator or shared_evaluator()
    started = time.perf_counter()
    result = SuiteResult()

    def error_report(name: str, params: dict, exc: MzvStarError, item_started: float) -> IdentityReport:
        return IdentityReport(
            identity=name,
            params=params,
            exact=False,
            deviations=(math.inf,),
            allowed=(0.0,),
            passed=False,
            seconds=time.perf_counter() - item_started,
            notes=(f"{type(exc).__name__}: {exc}",),
        )

    table_started = time.perf_counter()
    try:
        result.reports.extend(example1_rows(k_values, l_values, ev))
    except MzvStarError as exc:
        result.reports.append(error_report("example1", {}, exc, table_started))
    plan = suite_plan(max_weight=max_weight, max_depth=max_depth)

    def run_one(entry):
        name, params = entry
        item_started = time.perf_counter()
        try:
            return verify(name, params, ev)
        except MzvStarError as exc:
            return error_report(name, params, exc, item_started)

    if jobs > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            result.reports.extend(pool.map(run_one, plan))
    else:
        result.reports.extend(run_one(entry) for entry in plan)
    result.seconds = time.perf_counter() - started
    return result
