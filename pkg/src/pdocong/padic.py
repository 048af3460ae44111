"""2-adic valuations and valuation profiles of the zeta/phi coefficient families.

``nu2(n)`` is the largest a with 2^a | n, with nu2(0) = INFINITY.  INFINITY is
IEEE infinity: a distinguished non-integer value under which min, comparisons
and offset addition stay total; never an integer sentinel.

The profile checkers pin the shape every covered coefficient family has around
its minimal degree: odd leading coefficient, an offset-1 slot that is exactly 1
in one residue class and >= 2 otherwise, and valuation >= M+1 from offset
M >= 2 on.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .xipoly import XiPoly, phi_poly, zeta

INFINITY = math.inf

#: valuation of an integer: exact nonnegative int, or INFINITY for zero
Valuation = int | float


def nu2(n: int) -> Valuation:
    """2-adic valuation; INFINITY for 0."""
    if n == 0:
        return INFINITY
    n = abs(n)
    return (n & -n).bit_length() - 1


def d_min(i: int, j: int) -> int:
    """Minimal xi-degree of zeta_{i,j}: the coefficient there is an odd integer.

    Writing i = 2I+r and j = 2J+s: 5I+J for (r,s)=(0,0), 5I+J+1 for (0,1),
    and 5I+J+3 when i is odd.
    """
    if i < 0 or j < 0:
        raise ValueError(f"indices must be nonnegative, got ({i}, {j})")
    big_i, r = divmod(i, 2)
    big_j, s = divmod(j, 2)
    base = 5 * big_i + big_j
    if r == 1:
        return base + 3
    return base + s


def tau(k: int) -> int:
    """Minimal xi-degree of phi_poly(k); defined for k >= 3 and always integral.

    tau(2K-1) = 7*2^{2K-3} - (2/3)(4^{K-2}-1) and
    tau(2K)   = 7*2^{2K-2} - (1/3)(4^{K-1}-1).
    """
    if k < 3:
        raise ValueError(f"tau is defined for k >= 3, got {k}")
    if k % 2 == 1:
        big_k = (k + 1) // 2
        return 7 * 2 ** (2 * big_k - 3) - 2 * (4 ** (big_k - 2) - 1) // 3
    big_k = k // 2
    return 7 * 2 ** (2 * big_k - 2) - (4 ** (big_k - 1) - 1) // 3


@dataclass(frozen=True)
class ValuationProfile:
    """vals[M] = nu2(coefficient at base_degree + M) of the profiled polynomial."""

    base_degree: int
    vals: tuple[Valuation, ...]


def profile(p: XiPoly, base: int, window: int) -> ValuationProfile:
    """Valuations of ``window`` consecutive coefficients starting at degree ``base``."""
    if window < 1:
        raise ValueError(f"window must be >= 1, got {window}")
    return ValuationProfile(base, tuple(nu2(p.coeff(base + m)) for m in range(window)))


@dataclass(frozen=True)
class ProfileReport:
    """Outcome of a family profile check; vals shows the leading window only,
    while failures cover every offset up to the polynomial degree."""

    family: str  # "Z" or "F"
    i: int | None
    j: int | None
    k: int | None
    base_degree: int
    vals: tuple[Valuation, ...]
    verdict: str  # "pass" | "fail"
    failures: tuple[str, ...] = ()

    @property
    def passed(self) -> bool:
        return self.verdict == "pass"

    def to_record(self) -> dict:
        record = {"family": self.family}
        if self.family == "Z":
            record["i"] = self.i
            record["j"] = self.j
        else:
            record["k"] = self.k
        record["base_degree"] = self.base_degree
        record["vals"] = [v if v != INFINITY else "inf" for v in self.vals]
        record["verdict"] = self.verdict
        return record


def report_from_record(record: dict) -> ProfileReport:
    vals = tuple(INFINITY if v == "inf" else int(v) for v in record["vals"])
    return ProfileReport(
        family=record["family"],
        i=record.get("i"),
        j=record.get("j"),
        k=record.get("k"),
        base_degree=int(record["base_degree"]),
        vals=vals,
        verdict=record["verdict"],
    )


DEFAULT_WINDOW = 10


def _window_vals(p: XiPoly, base: int, span: int) -> tuple[Valuation, ...]:
    return profile(p, base, min(DEFAULT_WINDOW, max(span + 1, 1))).vals


def check_z_profile(i: int, j: int) -> ProfileReport:
    """Check the valuation profile of zeta_{i,j} for the covered families.

    Covered: j in {0,1} for any i (offset-1 valuation is exactly 1 when
    i == 2 mod 4 for j=0, i == 1 mod 4 for j=1), and i a power of two >= 4 for
    any j (exactly 1 when j == 2 mod 4).  Other (i, j) are refused: no profile
    shape is claimed for them.
    """
    if i < 0 or j < 0:
        raise ValueError(f"indices must be nonnegative, got ({i}, {j})")
    if j == 0:
        sharp = i % 4 == 2
    elif j == 1:
        sharp = i % 4 == 1
    elif i >= 4 and i & (i - 1) == 0:
        sharp = j % 4 == 2
    else:
        raise ValueError(
            f"no profile claim covers (i={i}, j={j}): need j in {{0, 1}} "
            "or i a power of two >= 4"
        )

    p = zeta(i, j)
    d = d_min(i, j)
    deg = p.degree()
    failures: list[str] = []
    if p.min_degree() != d:
        failures.append(f"minimal degree {p.min_degree()} != d_min {d}")
    if nu2(p.coeff(d)) != 0:
        failures.append(f"nu(coeff at {d}) = {nu2(p.coeff(d))}, expected 0")
    v1 = nu2(p.coeff(d + 1))
    if sharp:
        if v1 != 1:
            failures.append(f"offset-1 valuation {v1}, expected exactly 1")
    elif v1 < 2:
        failures.append(f"offset-1 valuation {v1}, expected >= 2")
    span = (deg - d) if deg is not None else 0
    for m in range(2, span + 1):
        v = nu2(p.coeff(d + m))
        if v < m + 1:
            failures.append(f"offset-{m} valuation {v}, expected >= {m + 1}")
    return ProfileReport(
        family="Z",
        i=i,
        j=j,
        k=None,
        base_degree=d,
        vals=_window_vals(p, d, span),
        verdict="fail" if failures else "pass",
        failures=tuple(failures),
    )


def check_f_profile(k: int, max_k: int = 5) -> ProfileReport:
    """Check the valuation bounds of phi_poly(k) for odd k = 2K+1.

    Verifies vanishing below tau(k), nu(F_k(tau_k)) >= 2K+3, and
    nu(F_k(tau_k + M)) >= 2K+M+2 for every further coefficient.  Computing
    phi_poly past k = 5 is expensive, hence the guard.
    """
    if k % 2 == 0 or k < 3:
        raise ValueError(f"profile bounds cover odd k >= 3 only, got {k}")
    if k > max_k:
        raise ValueError(f"k={k} beyond computable range (max_k={max_k})")
    big_k = (k - 1) // 2
    p = phi_poly(k)
    t = tau(k)
    failures: list[str] = []
    low = p.min_degree()
    if low is not None and low < t:
        failures.append(f"nonzero coefficient at degree {low} < tau {t}")
    v0 = nu2(p.coeff(t))
    if v0 < 2 * big_k + 3:
        failures.append(f"nu at tau = {v0}, expected >= {2 * big_k + 3}")
    deg = p.degree()
    span = (deg - t) if deg is not None else 0
    for m in range(1, span + 1):
        v = nu2(p.coeff(t + m))
        if v < 2 * big_k + m + 2:
            failures.append(f"offset-{m} valuation {v}, expected >= {2 * big_k + m + 2}")
    return ProfileReport(
        family="F",
        i=None,
        j=None,
        k=k,
        base_degree=t,
        vals=_window_vals(p, t, span),
        verdict="fail" if failures else "pass",
        failures=tuple(failures),
    )
