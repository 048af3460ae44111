"""Window verification of PDO congruence families.

A congruence here is verified over an explicit finite window of n and the
report always carries that window plus the truncation order of the table it
was checked against: a pass is evidence at that order, never a proof.

Two spec shapes exist: the internal families PDO(a n) == PDO(b n) (mod 2^e)
as :class:`CongruenceSpec`, and the Ramanujan-type divisibility families
PDO(a n + c) == 0 (mod m) as :class:`DivisibilitySpec`.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence, Union

from .etaq import PdoTable
from .padic import nu2


@dataclass(frozen=True)
class CongruenceSpec:
    """PDO(lhs_stride * n) == PDO(rhs_stride * n) (mod modulus) over n_range."""

    lhs_stride: int
    rhs_stride: int
    modulus: int
    n_range: tuple[int, int]  # half-open

    def __post_init__(self):
        if self.lhs_stride < 1 or self.rhs_stride < 1:
            raise ValueError(f"strides must be >= 1: {self.lhs_stride}, {self.rhs_stride}")
        if self.modulus < 2:
            raise ValueError(f"modulus must be >= 2, got {self.modulus}")

    def describe(self) -> str:
        return (
            f"PDO({self.lhs_stride}*n) == PDO({self.rhs_stride}*n)"
            f" (mod {self.modulus})"
        )

    def values_at(self, table: PdoTable, n: int) -> tuple[int, int]:
        return table[self.lhs_stride * n], table[self.rhs_stride * n]

    def max_index(self, n: int) -> int:
        return max(self.lhs_stride, self.rhs_stride) * n


@dataclass(frozen=True)
class DivisibilitySpec:
    """PDO(stride * n + offset) == 0 (mod modulus) over n_range."""

    stride: int
    offset: int
    modulus: int
    n_range: tuple[int, int]

    def __post_init__(self):
        if self.stride < 1 or self.offset < 0:
            raise ValueError(f"bad progression: stride {self.stride}, offset {self.offset}")
        if self.modulus < 2:
            raise ValueError(f"modulus must be >= 2, got {self.modulus}")

    def describe(self) -> str:
        return f"PDO({self.stride}*n + {self.offset}) == 0 (mod {self.modulus})"

    def values_at(self, table: PdoTable, n: int) -> tuple[int, int]:
        return table[self.stride * n + self.offset], 0

    def max_index(self, n: int) -> int:
        return self.stride * n + self.offset


AnySpec = Union[CongruenceSpec, DivisibilitySpec]


@dataclass(frozen=True)
class CongruenceReport:
    spec: AnySpec
    verdict: str  # "pass" | "fail"
    counterexample: tuple[int, int, int] | None  # (n, lhs, rhs)
    checked_count: int
    truncation_order: int

    @property
    def passed(self) -> bool:
        return self.verdict == "pass"

    def to_record(self) -> dict:
        if isinstance(self.spec, CongruenceSpec):
            record = {
                "lhs_stride": self.spec.lhs_stride,
                "rhs_stride": self.spec.rhs_stride,
            }
        else:
            record = {"stride": self.spec.stride, "offset": self.spec.offset}
        record["modulus"] = self.spec.modulus
        record["window"] = list(self.spec.n_range)
        record["verdict"] = self.verdict
        if self.counterexample is not None:
            n, lhs, rhs = self.counterexample
            record["counterexample"] = {"n": n, "lhs": str(lhs), "rhs": str(rhs)}
        else:
            record["counterexample"] = None
        record["truncation_order"] = self.truncation_order
        record["checked_count"] = self.checked_count
        return record


def report_from_record(record: dict) -> CongruenceReport:
    window = (int(record["window"][0]), int(record["window"][1]))
    if "lhs_stride" in record:
        spec: AnySpec = CongruenceSpec(
            int(record["lhs_stride"]), int(record["rhs_stride"]), int(record["modulus"]), window
        )
    else:
        spec = DivisibilitySpec(
            int(record["stride"]), int(record["offset"]), int(record["modulus"]), window
        )
    ce = record.get("counterexample")
    counterexample = (int(ce["n"]), int(ce["lhs"]), int(ce["rhs"])) if ce else None
    return CongruenceReport(
        spec=spec,
        verdict=record["verdict"],
        counterexample=counterexample,
        checked_count=int(record["checked_count"]),
        truncation_order=int(record["truncation_order"]),
    )


def verify(spec: AnySpec, table: PdoTable) -> CongruenceReport:
    """Check a spec over its window; the least counterexample is reported."""
    start, stop = spec.n_range
    if stop > start:
        needed = spec.max_index(stop - 1)
        if needed > table.max_n:
            raise ValueError(
                f"table covers n <= {table.max_n}; {spec.describe()} over "
                f"[{start}, {stop}) needs truncation order {needed + 1}"
            )
    counterexample = None
    checked = 0
    for n in range(start, stop):
        lhs, rhs = spec.values_at(table, n)
        checked += 1
        if (lhs - rhs) % spec.modulus:
            counterexample = (n, lhs, rhs)
            break
    return CongruenceReport(
        spec=spec,
        verdict="fail" if counterexample else "pass",
        counterexample=counterexample,
        checked_count=checked,
        truncation_order=table.max_n + 1,
    )


def main_family_spec(k: int, n_stop: int, n_start: int = 0) -> CongruenceSpec:
    """Level-k member of the main family:
    PDO(2^{2k+3} n) == PDO(2^{2k+1} n) (mod 2^{2k+3})."""
    if k < 0:
        raise ValueError(f"k must be >= 0, got {k}")
    m = 2 ** (2 * k + 3)
    return CongruenceSpec(m, 2 ** (2 * k + 1), m, (n_start, n_stop))


def verify_main(k: int, n_max: int, table: PdoTable) -> CongruenceReport:
    """Main family at level k over 0 <= n <= n_max."""
    return verify(main_family_spec(k, n_max + 1), table)


def verify_corollary(k: int, n_max: int, table: PdoTable) -> CongruenceReport:
    """Corollary family PDO(2^{2k+4} n) == PDO(2^{2k+2} n) (mod 2^{2k+3})
    over 0 <= n <= n_max (n = 0 included)."""
    if k < 0:
        raise ValueError(f"k must be >= 0, got {k}")
    spec = CongruenceSpec(
        2 ** (2 * k + 4), 2 ** (2 * k + 2), 2 ** (2 * k + 3), (0, n_max + 1)
    )
    return verify(spec, table)


def verify_strengthened(n_max: int, table: PdoTable) -> tuple[CongruenceReport, CongruenceReport]:
    """The two sharpened low cases, over 0 <= n <= n_max:
    PDO(32n) == PDO(8n) (mod 64) and PDO(128n) == PDO(32n) (mod 128)."""
    window = (0, n_max + 1)
    first = verify(CongruenceSpec(32, 8, 64, window), table)
    second = verify(CongruenceSpec(128, 32, 128, window), table)
    return first, second


def verify_ramanujan(alpha_max: int, n_max: int, table: PdoTable) -> list[CongruenceReport]:
    """Ramanujan-type divisibilities for 0 <= alpha <= alpha_max over n < n_max:
    PDO(2^alpha (4n+3)) == 0 (mod 4) and PDO(2^alpha (8n+7)) == 0 (mod 8)."""
    if alpha_max < 0:
        raise ValueError(f"alpha_max must be >= 0, got {alpha_max}")
    reports = []
    for alpha in range(alpha_max + 1):
        scale = 2**alpha
        window = (0, n_max)
        reports.append(verify(DivisibilitySpec(4 * scale, 3 * scale, 4, window), table))
        reports.append(verify(DivisibilitySpec(8 * scale, 7 * scale, 8, window), table))
    return reports


@dataclass(frozen=True)
class ScanResult:
    """Largest exponent e <= cap with PDO(a n) == PDO(b n) (mod 2^e) on the window."""

    pair: tuple[int, int]
    exponent: int
    n_range: tuple[int, int]
    truncation_order: int

    def to_record(self) -> dict:
        return {
            "lhs_stride": self.pair[0],
            "rhs_stride": self.pair[1],
            "max_exponent": self.exponent,
            "window": list(self.n_range),
            "truncation_order": self.truncation_order,
        }


def scan(
    table: PdoTable,
    stride_pairs: Sequence[tuple[int, int]],
    max_modulus_exponent: int,
) -> list[ScanResult]:
    """For each stride pair, the largest 2-power modulus surviving the window
    the table supports (all n with both indices covered)."""
    if max_modulus_exponent < 0:
        raise ValueError(f"max exponent must be >= 0, got {max_modulus_exponent}")
    results = []
    for a, b in stride_pairs:
        if a < 1 or b < 1:
            raise ValueError(f"strides must be >= 1: ({a}, {b})")
        n_top = table.max_n // max(a, b)
        exponent = max_modulus_exponent
        for n in range(n_top + 1):
            diff = table[a * n] - table[b * n]
            if diff:
                v = nu2(diff)
                if v < exponent:
                    exponent = int(v)
                if exponent == 0:
                    break
        results.append(ScanResult((a, b), exponent, (0, n_top + 1), table.max_n + 1))
    return results
