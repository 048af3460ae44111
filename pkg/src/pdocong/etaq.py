"""Eta-quotient expansions and the PDO counting function.

PDO(n) counts partitions of n into odd parts with designated summands: one
occurrence of each distinct part is marked, so a part repeated m times
contributes a factor m.  Its generating function is the eta quotient

    delta(q) = E(q^4) E(q^6)^2 / (E(q) E(q^3) E(q^12)),

with E(q) = prod (1 - q^n).  This module expands such quotients exactly, along
with the companion functions gamma, xi and kappa used by the polynomial tower,
and provides a brute-force combinatorial oracle for PDO(n).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .series import Series

ORACLE_BOUND = 60


@dataclass(frozen=True)
class EtaQuotientSpec:
    """A formal product prod E(q^m)^e, canonicalized by ascending dilation."""

    factors: tuple[tuple[int, int], ...]

    def __post_init__(self):
        factors = tuple(sorted((int(m), int(e)) for m, e in self.factors))
        dilations = [m for m, _ in factors]
        if any(m < 1 for m in dilations):
            raise ValueError(f"dilations must be positive: {dilations}")
        if len(set(dilations)) != len(dilations):
            raise ValueError(f"dilations must be pairwise distinct: {dilations}")
        if any(e == 0 for _, e in factors):
            raise ValueError("zero exponents are not allowed in a spec")
        object.__setattr__(self, "factors", factors)

    @classmethod
    def parse(cls, text: str) -> "EtaQuotientSpec":
        """Parse the semicolon format, e.g. ``4^1;6^2;1^-1;3^-1;12^-1``."""
        factors = []
        for chunk in text.split(";"):
            chunk = chunk.strip()
            if not chunk:
                continue
            try:
                m_text, e_text = chunk.split("^")
                factors.append((int(m_text), int(e_text)))
            except ValueError:
                raise ValueError(f"malformed eta-quotient factor {chunk!r}") from None
        if not factors:
            raise ValueError(f"empty eta-quotient spec {text!r}")
        return cls(tuple(factors))

    def spec_text(self) -> str:
        """Canonical text form; ``parse(spec_text())`` round-trips exactly."""
        return ";".join(f"{m}^{e}" for m, e in self.factors)


# The four named quotients of the tower.  kappa(q) = gamma(q^2)^2 / gamma(q)
# also happens to be the eta quotient below; kappa_series uses the defining
# quotient and the tests pin the equivalence.
DELTA = EtaQuotientSpec(((4, 1), (6, 2), (1, -1), (3, -1), (12, -1)))
GAMMA = EtaQuotientSpec(((1, 5), (2, 5), (6, 5), (3, -15)))
XI = EtaQuotientSpec(((2, 5), (6, 1), (1, -1), (3, -5)))
KAPPA = EtaQuotientSpec(((1, -5), (2, 5), (3, 15), (4, 10), (6, -35), (12, 10)))

NAMED_SPECS = {"delta": DELTA, "gamma": GAMMA, "xi": XI, "kappa": KAPPA}


@dataclass(frozen=True)
class PdoTable:
    """values[n] = PDO(n) for 0 <= n <= max_n."""

    values: tuple[int, ...]

    @property
    def max_n(self) -> int:
        return len(self.values) - 1

    def __getitem__(self, n: int) -> int:
        return self.values[n]

    def __len__(self) -> int:
        return len(self.values)


@lru_cache(maxsize=None)
def euler_series(order: int) -> Series:
    """E(q) = prod (1 - q^n), via the pentagonal-number expansion.

    Coefficient of q^m is (-1)^k exactly when m = k(3k-1)/2 or k(3k+1)/2.
    """
    if order < 1:
        raise ValueError(f"order must be >= 1, got {order}")
    coeffs = [0] * order
    coeffs[0] = 1
    k = 1
    while True:
        p1 = k * (3 * k - 1) // 2
        if p1 >= order:
            break
        sign = 1 if k % 2 == 0 else -1
        coeffs[p1] = sign
        p2 = k * (3 * k + 1) // 2
        if p2 < order:
            coeffs[p2] = sign
        k += 1
    return Series(coeffs)


@lru_cache(maxsize=None)
def expand(spec: EtaQuotientSpec, order: int) -> Series:
    """Expand an eta quotient to the requested order, exactly.

    Each factor is applied as |e| sparse multiplication or division passes,
    which keeps the cost near O(order^{3/2}) per factor instead of the dense
    O(order^2) of a generic product.
    """
    if order < 1:
        raise ValueError(f"order must be >= 1, got {order}")
    result = Series.one(order)
    for m, e in spec.factors:
        factor = euler_series(order).dilate(m)
        if e > 0:
            for _ in range(e):
                result = result * factor
        else:
            for _ in range(-e):
                result = result.div(factor)
    return result


def delta_series(order: int) -> Series:
    """The PDO generating function."""
    return expand(DELTA, order)


def gamma_series(order: int) -> Series:
    return expand(GAMMA, order)


def xi_series(order: int) -> Series:
    """The degree-one Hauptmodul the polynomial tower is written in."""
    return expand(XI, order)


@lru_cache(maxsize=None)
def kappa_series(order: int) -> Series:
    """kappa(q) = gamma(q^2)^2 / gamma(q)."""
    g = gamma_series(order)
    g2 = g.dilate(2)
    return (g2 * g2).div(g)


def pdo_series(order: int) -> PdoTable:
    """PDO(0..order-1) read off the delta expansion."""
    return PdoTable(delta_series(order).coeffs)


def pdo_bruteforce(n: int, bound: int = ORACLE_BOUND) -> int:
    """PDO(n) by direct enumeration of odd-part partitions with designations.

    Each partition contributes the product of its part multiplicities (one
    designated occurrence per distinct part).  Exponential; guarded by
    ``bound`` since it only exists to cross-check the series route.
    """
    if n < 0:
        raise ValueError(f"n must be nonnegative, got {n}")
    if n > bound:
        raise ValueError(f"oracle range exceeded: n={n} > bound={bound}")

    def count(remaining: int, largest: int) -> int:
        if remaining == 0:
            return 1
        total = 0
        part = min(largest, remaining)
        if part % 2 == 0:
            part -= 1
        while part >= 1:
            for mult in range(1, remaining // part + 1):
                total += mult * count(remaining - mult * part, part - 2)
            part -= 2
        return total

    return count(n, n)
