# --------------------------------------------------
# Cyclic sieving for η on P(a,b,c), checked in exact cyclotomic arithmetic.
#
# Fixed points of η^d are read off one pass over P(a,b,c) that records
# the η-period of every partition; M_{a,b,c}(ζ^d) is evaluated from the
# census of |π| mod n and cross-checked against the product formula.
# --------------------------------------------------

import logging
from collections import Counter
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from itertools import islice

from grasscluster.config import CSP_COST_CAP, get_settings
from grasscluster.element.plane_partition import (
    _check_box_parameters,
    enumerate_flat,
    enumerate_partitions,
    eta_flat,
    gt_pattern,
    gt_weight,
    macmahon_by_product,
)
from grasscluster.element.polynomial import CyclotomicInt, IntPolynomial, cyclotomic_poly
from grasscluster.errors import InternalConsistencyError, ParameterError, ResourceCapError
from grasscluster.space.tropical import partition_point, trop_weight

logger = logging.getLogger(__name__)

CHUNK = 4096


def eval_at_root(F: IntPolynomial, n: int, d: int) -> CyclotomicInt:
    """F(ζ^d) with ζ = e^{2πi/n}: fold exponents mod n, then reduce by Φ_n."""
    if not 0 <= d < n:
        raise ParameterError(f"Need 0 <= d < n, got d={d}, n={n}.")
    folded = [0] * n
    for k, coeff in enumerate(F.coefficients):
        folded[(k * d) % n] += coeff
    return CyclotomicInt(n, folded)


def eval_census_at_root(census, n: int, d: int) -> CyclotomicInt:
    """Σ_r c_r ζ^{dr} for a census r ↦ c_r of residues mod n."""
    return eval_at_root(IntPolynomial([census.get(r, 0) for r in range(n)]), n, d)


def residue_census(a: int, b: int, c: int, n: int = None) -> Counter:
    """r ↦ #{π ∈ P(a,b,c) : |π| ≡ r mod n}; n defaults to a+b."""
    n = a + b if n is None else n
    return Counter(sum(flat) % n for flat in enumerate_flat(a, b, c))


# ---------------------------------------------------------------------
# η-periods
# ---------------------------------------------------------------------

def _period(flat, a: int, b: int, c: int) -> int:
    x = eta_flat(flat, a, b, c)
    steps = 1
    while x != flat:
        x = eta_flat(x, a, b, c)
        steps += 1
        assert steps <= a + b, "η has order a+b; a longer orbit means a broken toggle."
    return steps


def _chunks(iterable, size):
    iterator = iter(iterable)
    while True:
        chunk = list(islice(iterator, size))
        if not chunk:
            return
        yield chunk


def period_census(a: int, b: int, c: int, threads: int = None) -> Counter:
    """period ↦ number of partitions with that η-period; chunks are folded by a thread pool."""
    _check_box_parameters(a, b, c)
    threads = threads or get_settings().threads

    def work(chunk):
        return Counter(_period(flat, a, b, c) for flat in chunk)

    total = Counter()
    with ThreadPoolExecutor(max_workers=threads) as pool:
        for partial in pool.map(work, _chunks(enumerate_flat(a, b, c), CHUNK)):
            total.update(partial)
    logger.debug("period_census(%d, %d, %d) over %d worker(s): %s", a, b, c, threads, dict(total))
    return total


def _fixed_from_periods(periods: Counter, d: int) -> int:
    return sum(count for period, count in periods.items() if d % period == 0)


def fixed_points(a: int, b: int, c: int, d: int, threads: int = None) -> int:
    """#{π ∈ P(a,b,c) : η^d(π) = π}, d taken mod a+b."""
    if d < 0:
        raise ParameterError(f"Need d >= 0, got {d}.")
    return _fixed_from_periods(period_census(a, b, c, threads), d % (a + b))


def orbit_sizes(a: int, b: int, c: int, threads: int = None) -> dict:
    """orbit size ↦ number of η-orbits of that size."""
    return {period: count // period for period, count in sorted(period_census(a, b, c, threads).items())}


# ---------------------------------------------------------------------
# Reports
# ---------------------------------------------------------------------

@dataclass(frozen=True)
class CSPRow:
    d: int
    fixed_count: int
    poly_value: CyclotomicInt

    @property
    def equal(self) -> bool:
        return self.poly_value == self.fixed_count


@dataclass(frozen=True)
class CSPReport:
    a: int
    b: int
    c: int
    entries: list = field(default_factory=list)

    @property
    def n(self) -> int:
        return self.a + self.b

    @property
    def all_equal(self) -> bool:
        return all(row.equal for row in self.entries)

    def rows(self, as_float: bool = False) -> list:
        """Flat dicts (d, fixed, value, ok) for table, CSV and JSON output."""
        result = []
        for row in self.entries:
            if as_float:
                value = row.poly_value.to_complex()
                shown = f"{value.real:.6f}{value.imag:+.6f}i"
            else:
                shown = str(row.poly_value)
            result.append({"d": row.d, "fixed": row.fixed_count, "value": shown, "ok": row.equal})
        return result

    def to_json(self):
        return {
            "a": self.a, "b": self.b, "c": self.c, "n": self.n,
            "all_equal": self.all_equal,
            "rows": [
                {"d": row.d, "fixed": row.fixed_count, "value": row.poly_value.to_json(), "ok": row.equal}
                for row in self.entries
            ],
        }


def estimated_cost(a: int, b: int, c: int) -> int:
    return macmahon_by_product(a, b, c).at_one() * (a + b)


def verify_csp(a: int, b: int, c: int, cap: int = CSP_COST_CAP, threads: int = None) -> CSPReport:
    """
    Compare #Fix(η^d) with M_{a,b,c}(ζ^d) for every d in 0..n−1.

    Raises ResourceCapError when |P(a,b,c)|·n exceeds cap.
    """
    _check_box_parameters(a, b, c)
    n = a + b
    cost = estimated_cost(a, b, c)
    if cost > cap:
        raise ResourceCapError(f"verify_csp({a},{b},{c}) needs about {cost} toggle sweeps (cap {cap}).",
                               estimated_cost=cost)
    periods = period_census(a, b, c, threads)
    census = residue_census(a, b, c, n)
    product = macmahon_by_product(a, b, c)
    entries = []
    for d in range(n):
        value = eval_census_at_root(census, n, d)
        if value != eval_at_root(product, n, d):
            raise InternalConsistencyError(f"M_({a},{b},{c})(ζ^{d}) differs between census and product.")
        entries.append(CSPRow(d, _fixed_from_periods(periods, d), value))
    report = CSPReport(a, b, c, entries)
    logger.debug("verify_csp(%d, %d, %d): all_equal=%s", a, b, c, report.all_equal)
    return report


# ---------------------------------------------------------------------
# Weight census
# ---------------------------------------------------------------------

def weight_census(a: int, b: int, c: int) -> Counter:
    """μ ↦ #{π ∈ P(a,b,c) : wt(Λ_π) = μ}."""
    return Counter(gt_weight(gt_pattern(pi, c)) for pi in enumerate_partitions(a, b, c))


def trop_weight_census(a: int, b: int, c: int) -> Counter:
    """The same census through M^t of the tropical points of Q(a,b,c)."""
    return Counter(trop_weight(partition_point(pi, c)) for pi in enumerate_partitions(a, b, c))


__all__ = [
    "cyclotomic_poly", "eval_at_root", "eval_census_at_root", "residue_census",
    "period_census", "fixed_points", "orbit_sizes", "CSPRow", "CSPReport",
    "estimated_cost", "verify_csp", "weight_census", "trop_weight_census",
]
