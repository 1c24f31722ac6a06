"""Dimensions of the spaces of Spin(9)-invariant valuations on R^16.

Pipeline:
    1. b_k: trivial multiplicity in Λ^k of the so(9) spin representation.
    2. n^(i): decomposition of Λ^i(O' ⊕ O) over so(7), the stabiliser of a
       point of the unit sphere.
    3. b_{k,l} = Σ_λ n^(k)_λ n^(l)_λ.
    4. dim Val_k from the alternating sum of the b's.
"""

from __future__ import annotations

import functools
import logging
import math
import os
import threading
import time
from collections.abc import Callable, Sequence
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Any

from valspin.lie_type_b import (
    BaseRepresentation,
    Decomposition,
    HighestWeight,
    base_character,
    decompose,
    exterior_power_char,
    weyl_dim,
)

logger = logging.getLogger(__name__)

__all__ = [
    "N",
    "SPHERE_DIMENSION",
    "EXPECTED_TOTAL",
    "SO7_TABLE_WEIGHTS",
    "ValuationReport",
    "Spin9ValuationTables",
    "dimension_formula",
    "default_tables",
    "spin9_exterior_decomposition",
    "compute_bk",
    "compute_so7_table",
    "compute_bkl",
    "val_dimension",
    "full_report",
]

# Ambient dimension of O² and of the unit sphere S^15 in it
N = 16
SPHERE_DIMENSION = N - 1
EXPECTED_TOTAL = 143

SO9_RANK = 4
SO7_RANK = 3

SO7_TABLE_WEIGHTS: tuple[HighestWeight, ...] = tuple(
    HighestWeight.parse(text)
    for text in (
        "0,0,0",
        "1/2,1/2,1/2",
        "1,0,0",
        "1,1,0",
        "1,1,1",
        "3/2,1/2,1/2",
        "3/2,3/2,1/2",
        "3/2,3/2,3/2",
        "2,0,0",
        "2,1,0",
        "2,1,1",
        "2,2,0",
        "2,2,1",
        "2,2,2",
        "5/2,1/2,1/2",
        "5/2,3/2,1/2",
        "5/2,3/2,3/2",
        "3,0,0",
        "3,1,0",
        "3,1,1",
    )
)


def _workers_from_env() -> int:
    raw = os.getenv("VALSPIN_WORKERS", "1")
    try:
        workers = int(raw)
    except ValueError:
        raise ValueError(f"VALSPIN_WORKERS must be a positive integer, got {raw!r}") from None
    if workers < 1:
        raise ValueError(f"VALSPIN_WORKERS must be a positive integer, got {workers}")
    return workers


def _lookup(table: Sequence[Sequence[int]], k: int, l: int) -> int:
    if k < 0 or l < 0 or k >= len(table) or l >= len(table[k]):
        return 0
    return table[k][l]


def dimension_formula(
    b: Sequence[Sequence[int]], bk: Sequence[int], n: int
) -> list[int]:
    """dim Val_k for k = 0..n from the tables b_{k,l} and b_k.

    dim Val_k = Σ_{l=0}^{n-k-1} (-1)^{n-k-l-1} (b_{k,l} - b_{k-1,l-1}) + (-1)^{n-k} b_k

    Indices outside the given tables count as 0.

    Raises:
        ValueError: If ``n`` is negative.
    """
    if n < 0:
        raise ValueError(f"Dimension n must be non-negative, got {n}")
    dimensions = []
    for k in range(n + 1):
        total = 0
        for l in range(n - k):
            sign = -1 if (n - k - l - 1) % 2 else 1
            total += sign * (_lookup(b, k, l) - _lookup(b, k - 1, l - 1))
        top = bk[k] if k < len(bk) else 0
        total += -top if (n - k) % 2 else top
        dimensions.append(total)
    return dimensions


@dataclass(frozen=True)
class ValuationReport:
    """Everything the valuation pipeline computes, in a fixed order.

    Attributes:
        bk: b_k for k = 0..16.
        bkl: 16×16 table b_{k,l}.
        dimensions: dim Val_k for k = 0..16.
        so7_weights: Row order of the so(7) multiplicity table.
        so7_table: so7_table[r][i] is the multiplicity of so7_weights[r] in Λ^i.
        spin9_decompositions: Λ^k of the so(9) spin representation, k = 0..16.
        checks: Named self-consistency flags.
    """

    bk: tuple[int, ...]
    bkl: tuple[tuple[int, ...], ...]
    dimensions: tuple[int, ...]
    so7_weights: tuple[HighestWeight, ...]
    so7_table: tuple[tuple[int, ...], ...]
    spin9_decompositions: tuple[Decomposition, ...]
    checks: dict[str, bool] = field(default_factory=dict)

    @property
    def total(self) -> int:
        """Σ_k dim Val_k."""
        return sum(self.dimensions)

    @property
    def consistent(self) -> bool:
        """True if every self-consistency flag holds."""
        return all(self.checks.values())

    def to_dict(self) -> dict[str, Any]:
        """Serializable form with exact string weights."""
        return {
            "bk": list(self.bk),
            "bkl": [list(row) for row in self.bkl],
            "dimensions": list(self.dimensions),
            "total": self.total,
            "so7_table": [
                {"weight": w.entries(), "multiplicities": list(row)}
                for w, row in zip(self.so7_weights, self.so7_table)
            ],
            "spin9_exterior": [
                {"k": k, "summands": d.to_list()}
                for k, d in enumerate(self.spin9_decompositions)
            ],
            "checks": dict(self.checks),
        }


class Spin9ValuationTables:
    """Cached computation of b_k, n^(i), b_{k,l} and dim Val_k.

    The exterior towers and their decompositions are computed once per
    instance; independent decompositions may run on a thread pool.
    """

    def __init__(self, workers: int | None = None) -> None:
        """Create the tables.

        Args:
            workers: Worker threads for the decompositions. Defaults to the
                VALSPIN_WORKERS environment variable, then 1.
        """
        self._workers = workers if workers is not None else _workers_from_env()
        if self._workers < 1:
            raise ValueError(f"workers must be positive, got {self._workers}")
        self._spin9 = base_character(SO9_RANK, BaseRepresentation.SPIN)
        self._tangent7 = base_character(SO7_RANK, BaseRepresentation.STANDARD) + base_character(
            SO7_RANK, BaseRepresentation.SPIN
        )
        self._spin9_cache: dict[int, Decomposition] = {}
        self._so7_cache: dict[int, Decomposition] = {}
        self._lock = threading.Lock()

    @property
    def workers(self) -> int:
        """Number of worker threads."""
        return self._workers

    def _fill(
        self,
        cache: dict[int, Decomposition],
        degrees: Sequence[int],
        job: Callable[[int], Decomposition],
        label: str,
    ) -> None:
        missing = [d for d in degrees if d not in cache]
        if not missing:
            return
        started = time.perf_counter()
        if self._workers == 1:
            results = [job(d) for d in missing]
        else:
            with ThreadPoolExecutor(max_workers=self._workers) as pool:
                results = list(pool.map(job, missing))
        with self._lock:
            cache.update(zip(missing, results))
        logger.info(
            "[ValDim] %s: %d exterior powers decomposed in %.2fs",
            label, len(missing), time.perf_counter() - started,
        )

    def _spin9_job(self, k: int) -> Decomposition:
        return decompose(exterior_power_char(self._spin9, k), SO9_RANK)

    def _so7_job(self, i: int) -> Decomposition:
        return decompose(exterior_power_char(self._tangent7, i), SO7_RANK)

    def spin9_exterior_decomposition(self, k: int) -> Decomposition:
        """Decomposition of Λ^k of the so(9) spin representation, 0 <= k <= 16.

        Raises:
            ValueError: If ``k`` is out of range.
        """
        if not 0 <= k <= N:
            raise ValueError(f"Exterior degree must be in 0..{N}, got {k}")
        self._fill(self._spin9_cache, [k], self._spin9_job, "so(9) spin tower")
        return self._spin9_cache[k]

    def spin9_exterior_decompositions(self) -> list[Decomposition]:
        """Λ^k decompositions for k = 0..16."""
        self._fill(self._spin9_cache, range(N + 1), self._spin9_job, "so(9) spin tower")
        return [self._spin9_cache[k] for k in range(N + 1)]

    def compute_bk(self, k: int) -> int:
        """dim (Λ^k O²)^Spin(9); 0 outside 0..16."""
        if not 0 <= k <= N:
            return 0
        return self.spin9_exterior_decomposition(k).multiplicity(HighestWeight.zero(SO9_RANK))

    def compute_so7_table(self) -> dict[int, Decomposition]:
        """n^(i): decomposition of Λ^i(O' ⊕ O) over so(7) for i = 0..15."""
        self._fill(
            self._so7_cache, range(SPHERE_DIMENSION + 1), self._so7_job, "so(7) tangent tower"
        )
        return {i: self._so7_cache[i] for i in range(SPHERE_DIMENSION + 1)}

    def _n(self, i: int) -> Decomposition:
        # Λ^i of a 15-dimensional space vanishes above degree 15
        if not 0 <= i <= SPHERE_DIMENSION:
            return Decomposition(SO7_RANK)
        return self.compute_so7_table()[i]

    def compute_bkl(self, k: int, l: int) -> int:
        """b_{k,l} = Σ_λ n^(k)_λ n^(l)_λ; 0 for out-of-range indices."""
        left = self._n(k)
        right = self._n(l)
        return sum(mult * right.multiplicity(weight) for weight, mult in left.items())

    def bkl_table(self) -> list[list[int]]:
        """The 16×16 table b_{k,l}, 0 <= k, l <= 15."""
        size = SPHERE_DIMENSION + 1
        return [[self.compute_bkl(k, l) for l in range(size)] for k in range(size)]

    def bk_table(self) -> list[int]:
        """b_k for k = 0..16."""
        return [self.compute_bk(k) for k in range(N + 1)]

    def val_dimension(self, k: int) -> int:
        """dim Val_k^Spin(9) for 0 <= k <= 16.

        Raises:
            ValueError: If ``k`` is out of range.
        """
        if not 0 <= k <= N:
            raise ValueError(f"Degree must be in 0..{N}, got {k}")
        return self.dimensions()[k]

    def dimensions(self) -> list[int]:
        """dim Val_k for k = 0..16."""
        return dimension_formula(self.bkl_table(), self.bk_table(), N)

    def so7_multiplicity_rows(self) -> tuple[tuple[HighestWeight, ...], list[list[int]]]:
        """Row weights and the multiplicity matrix rows × columns i = 0..15.

        Rows follow SO7_TABLE_WEIGHTS; any other weight that occurs is appended
        in lexicographically decreasing order.
        """
        table = self.compute_so7_table()
        seen = {w for d in table.values() for w in d.weights()}
        extra = sorted(seen - set(SO7_TABLE_WEIGHTS), key=lambda w: w.doubled, reverse=True)
        weights = SO7_TABLE_WEIGHTS + tuple(extra)
        rows = [[table[i].multiplicity(w) for i in range(SPHERE_DIMENSION + 1)] for w in weights]
        return weights, rows

    def full_report(self) -> ValuationReport:
        """Assemble all tables and the self-consistency flags."""
        started = time.perf_counter()
        spin9 = self.spin9_exterior_decompositions()
        so7 = self.compute_so7_table()
        bk = self.bk_table()
        bkl = self.bkl_table()
        dimensions = dimension_formula(bkl, bk, N)
        weights, rows = self.so7_multiplicity_rows()
        top = SPHERE_DIMENSION

        checks = {
            "bkl_symmetric": all(
                bkl[k][l] == bkl[l][k] for k in range(top + 1) for l in range(top + 1)
            ),
            "bkl_mirror": all(
                bkl[k][l] == bkl[top - k][top - l] == bkl[k][top - l] == bkl[top - k][l]
                for k in range(top + 1)
                for l in range(top + 1)
            ),
            "so7_mirror": all(so7[i] == so7[top - i] for i in range(top + 1)),
            "so7_dimension_audit": all(
                sum(m * weyl_dim(SO7_RANK, w) for w, m in so7[i].items()) == math.comb(top, i)
                for i in range(top + 1)
            ),
            "spin9_dimension_audit": all(
                exterior_power_char(self._spin9, k).evaluate_at_one() == math.comb(N, k)
                and spin9[k].dimension() == math.comb(N, k)
                for k in range(N + 1)
            ),
            "spin9_mirror": all(spin9[k] == spin9[N - k] for k in range(N + 1)),
            "dimensions_palindromic": dimensions == dimensions[::-1],
            "total_matches": sum(dimensions) == EXPECTED_TOTAL,
        }
        failed = [name for name, ok in checks.items() if not ok]
        if failed:
            logger.warning("[ValDim] Consistency checks failed: %s", ", ".join(failed))
        logger.info(
            "[ValDim] Report assembled in %.2fs: total %d",
            time.perf_counter() - started, sum(dimensions),
        )
        return ValuationReport(
            bk=tuple(bk),
            bkl=tuple(tuple(row) for row in bkl),
            dimensions=tuple(dimensions),
            so7_weights=weights,
            so7_table=tuple(tuple(row) for row in rows),
            spin9_decompositions=tuple(spin9),
            checks=checks,
        )


@functools.lru_cache(maxsize=1)
def default_tables() -> Spin9ValuationTables:
    """Process-wide tables shared by the module-level functions."""
    return Spin9ValuationTables()


def spin9_exterior_decomposition(k: int) -> Decomposition:
    """See :meth:`Spin9ValuationTables.spin9_exterior_decomposition`."""
    return default_tables().spin9_exterior_decomposition(k)


def compute_bk(k: int) -> int:
    """See :meth:`Spin9ValuationTables.compute_bk`."""
    return default_tables().compute_bk(k)


def compute_so7_table() -> dict[int, Decomposition]:
    """See :meth:`Spin9ValuationTables.compute_so7_table`."""
    return default_tables().compute_so7_table()


def compute_bkl(k: int, l: int) -> int:
    """See :meth:`Spin9ValuationTables.compute_bkl`."""
    return default_tables().compute_bkl(k, l)


def val_dimension(k: int) -> int:
    """See :meth:`Spin9ValuationTables.val_dimension`."""
    return default_tables().val_dimension(k)


def full_report() -> ValuationReport:
    """See :meth:`Spin9ValuationTables.full_report`."""
    return default_tables().full_report()
