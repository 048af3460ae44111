"""Polynomial algebra in the Hauptmodul xi.

The degree-two unitization zeta_{i,j} = U(kappa^i xi^j) lands in Z[xi] for all
i, j >= 0.  Six initial unitizations are known exactly; everything else follows
from two linear recurrences built on the symmetric functions of alpha(q) and
alpha(-q) for alpha in {kappa, xi}:

    zeta_{i,j} = sigma_{kappa,1} * zeta_{i-1,j} - sigma_{kappa,2} * zeta_{i-2,j}   (i >= 2)
    zeta_{i,j} = sigma_{xi,1}    * zeta_{i,j-1} - sigma_{xi,2}    * zeta_{i,j-2}   (j >= 2)

On top of zeta sit two towers: lambda_poly(k) represents the slice
gamma^{2^{k-2}} * sum PDO(2^k n) q^n, and phi_poly(k) represents the internal
difference gamma^{2^k} * sum (PDO(2^{k+2} n) - PDO(2^k n)) q^n.  Every
polynomial here converts back to a q-series through poly_to_series for
cross-validation against direct unitization.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Mapping, Union

from .etaq import xi_series
from .series import Series

TermSource = Union[Mapping[int, int], Iterable[tuple[int, int]]]


class XiPoly:
    """Sparse polynomial in xi over exact integers; zero terms are never stored."""

    __slots__ = ("_terms",)

    def __init__(self, terms: TermSource = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[int, int] = {}
        for deg, coeff in items:
            if deg < 0:
                raise ValueError(f"negative degree {deg}")
            if coeff:
                total = acc.get(deg, 0) + coeff
                if total:
                    acc[deg] = total
                else:
                    acc.pop(deg, None)
        self._terms = acc

    @classmethod
    def monomial(cls, degree: int, coeff: int = 1) -> "XiPoly":
        return cls({degree: coeff})

    def terms(self) -> tuple[tuple[int, int], ...]:
        """(degree, coefficient) pairs, ascending in degree."""
        return tuple(sorted(self._terms.items()))

    def coeff(self, degree: int) -> int:
        return self._terms.get(degree, 0)

    @property
    def is_zero(self) -> bool:
        return not self._terms

    def degree(self) -> int | None:
        """Largest degree with a nonzero coefficient; None for the zero polynomial."""
        return max(self._terms) if self._terms else None

    def min_degree(self) -> int | None:
        """Smallest degree with a nonzero coefficient; None for the zero polynomial."""
        return min(self._terms) if self._terms else None

    def term_count(self) -> int:
        return len(self._terms)

    # -- ring operations ---------------------------------------------------

    def __add__(self, other: "XiPoly") -> "XiPoly":
        if not isinstance(other, XiPoly):
            return NotImplemented
        acc = dict(self._terms)
        for deg, coeff in other._terms.items():
            total = acc.get(deg, 0) + coeff
            if total:
                acc[deg] = total
            else:
                acc.pop(deg, None)
        out = XiPoly()
        out._terms = acc
        return out

    def __sub__(self, other: "XiPoly") -> "XiPoly":
        if not isinstance(other, XiPoly):
            return NotImplemented
        return self + (-other)

    def __neg__(self) -> "XiPoly":
        out = XiPoly()
        out._terms = {deg: -coeff for deg, coeff in self._terms.items()}
        return out

    def __mul__(self, other):
        if isinstance(other, int):
            out = XiPoly()
            if other:
                out._terms = {deg: coeff * other for deg, coeff in self._terms.items()}
            return out
        if not isinstance(other, XiPoly):
            return NotImplemented
        acc: dict[int, int] = {}
        for d1, c1 in self._terms.items():
            for d2, c2 in other._terms.items():
                deg = d1 + d2
                total = acc.get(deg, 0) + c1 * c2
                if total:
                    acc[deg] = total
                else:
                    acc.pop(deg, None)
        out = XiPoly()
        out._terms = acc
        return out

    __rmul__ = __mul__

    def __pow__(self, e: int) -> "XiPoly":
        if not isinstance(e, int) or e < 0:
            return NotImplemented
        result = XiPoly({0: 1})
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    # -- serialization -------------------------------------------------------

    def to_records(self) -> list[dict]:
        """Degree-ascending records; coefficients as decimal strings (they
        routinely exceed 64-bit range)."""
        return [{"degree": d, "coefficient": str(c)} for d, c in self.terms()]

    @classmethod
    def from_records(cls, records: Iterable[Mapping]) -> "XiPoly":
        return cls({int(r["degree"]): int(r["coefficient"]) for r in records})

    # -- plumbing ------------------------------------------------------------

    def __eq__(self, other) -> bool:
        return isinstance(other, XiPoly) and self._terms == other._terms

    def __hash__(self) -> int:
        return hash(self.terms())

    def __repr__(self) -> str:
        return f"XiPoly({dict(self.terms())!r})"

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for deg, coeff in self.terms():
            mag = str(abs(coeff)) if deg == 0 else (
                f"{abs(coeff)}*" if abs(coeff) != 1 else ""
            ) + (f"xi^{deg}" if deg > 1 else "xi")
            parts.append(("- " if coeff < 0 else "+ " if parts else "") + mag)
        return " ".join(parts)


ZERO = XiPoly()
ONE = XiPoly({0: 1})


@dataclass(frozen=True)
class SigmaPair:
    """sigma1 = alpha(q) + alpha(-q) and sigma2 = alpha(q) alpha(-q), as
    polynomials in xi; equivalently sigma1 = 2 U(alpha) and
    sigma2 = 2 U(alpha)^2 - U(alpha^2)."""

    sigma1: XiPoly
    sigma2: XiPoly


_SIGMA = {
    "kappa": SigmaPair(XiPoly({3: 10, 4: -40, 5: 32}), XiPoly({5: 1})),
    "xi": SigmaPair(XiPoly({1: 10, 2: -8}), XiPoly({1: 9, 2: -8})),
}


def sigma_pair(which: str) -> SigmaPair:
    try:
        return _SIGMA[which]
    except KeyError:
        raise ValueError(f"unknown sigma pair {which!r}; expected 'kappa' or 'xi'") from None


def zeta_initial() -> dict[tuple[int, int], XiPoly]:
    """The six known base unitizations U(kappa^i xi^j), (i,j) with i+j <= 2."""
    return {
        (0, 0): ONE,
        (1, 0): XiPoly({3: 5, 4: -20, 5: 16}),
        (0, 1): XiPoly({1: 5, 2: -4}),
        (2, 0): XiPoly({5: -1, 6: 50, 7: -400, 8: 1120, 9: -1280, 10: 512}),
        (1, 1): XiPoly({3: 3, 4: -18, 5: 16}),
        (0, 2): XiPoly({1: -9, 2: 58, 3: -80, 4: 32}),
    }


class ZetaTable:
    """Memoized zeta_{i,j} builder.

    Fill order follows the bootstrap the recurrences are derived for: the two
    base columns j=0 and j=1 grow in i via the kappa recurrence, then each row
    extends in j via the xi recurrence.  The kappa recurrence is never applied
    at i < 2 nor the xi recurrence at j < 2.

    Entries are immutable polynomials written once into a plain dict, so
    concurrent readers can at worst duplicate a computation, never observe a
    partial value.
    """

    def __init__(self):
        self._memo: dict[tuple[int, int], XiPoly] = zeta_initial()

    def get(self, i: int, j: int) -> XiPoly:
        if i < 0 or j < 0:
            raise ValueError(f"indices must be nonnegative, got ({i}, {j})")
        memo = self._memo
        got = memo.get((i, j))
        if got is not None:
            return got
        sk = _SIGMA["kappa"]
        for jj in (0, 1):
            ii = 2
            while (ii, jj) in memo:
                ii += 1
            while ii <= i:
                memo[(ii, jj)] = sk.sigma1 * memo[(ii - 1, jj)] - sk.sigma2 * memo[(ii - 2, jj)]
                ii += 1
        sx = _SIGMA["xi"]
        jj = 2
        while (i, jj) in memo:
            jj += 1
        while jj <= j:
            memo[(i, jj)] = sx.sigma1 * memo[(i, jj - 1)] - sx.sigma2 * memo[(i, jj - 2)]
            jj += 1
        return memo[(i, j)]


_TABLE = ZetaTable()


def zeta(i: int, j: int) -> XiPoly:
    """U(kappa^i xi^j) as an exact polynomial in xi."""
    return _TABLE.get(i, j)


def zeta_combined(i: int, j: int) -> XiPoly:
    """The four-term recurrence obtained by composing both step recurrences.

    Only valid for i, j >= 2; exists as an independent route for consistency
    checks against :func:`zeta`.
    """
    if i < 2 or j < 2:
        raise ValueError(f"combined recurrence needs i, j >= 2, got ({i}, {j})")
    sk, sx = _SIGMA["kappa"], _SIGMA["xi"]
    return (
        (sx.sigma1 * sk.sigma1) * zeta(i - 1, j - 1)
        - (sx.sigma2 * sk.sigma1) * zeta(i - 1, j - 2)
        - (sx.sigma1 * sk.sigma2) * zeta(i - 2, j - 1)
        + (sx.sigma2 * sk.sigma2) * zeta(i - 2, j - 2)
    )


def gamma6_poly() -> XiPoly:
    """gamma^6 as a degree-15 polynomial in xi (cross-checked at q-level by
    the identity suite)."""
    return XiPoly(
        {
            10: 59049,
            11: -262440,
            12: 466560,
            13: -414720,
            14: 184320,
            15: -32768,
        }
    )


@lru_cache(maxsize=None)
def lambda_poly(k: int) -> XiPoly:
    """The k-th dissection slice gamma^{2^{k-2}} sum PDO(2^k n) q^n in Z[xi].

    lambda_poly(2) = 3 xi^2 - 2 xi^3; each further level unitizes against
    kappa^{2^{k-3}}, i.e. pushes every term through zeta.
    """
    if k < 2:
        raise ValueError(f"lambda tower starts at k=2, got {k}")
    if k == 2:
        return XiPoly({2: 3, 3: -2})
    i = 2 ** (k - 3)
    acc = ZERO
    for deg, c in lambda_poly(k - 1).terms():
        acc = acc + c * zeta(i, deg)
    return acc


@lru_cache(maxsize=None)
def phi_poly(k: int) -> XiPoly:
    """The internal-difference slice gamma^{2^k} sum (PDO(2^{k+2}n) - PDO(2^k n)) q^n.

    Computed from the recurrences: the base case as lambda_poly(5) - gamma^6 *
    lambda_poly(3), and each further level by unitizing against
    kappa^{2^{k-1}}.  :func:`phi_poly_direct` gives the independent route used
    by the consistency tests.
    """
    if k < 3:
        raise ValueError(f"phi tower starts at k=3, got {k}")
    if k == 3:
        return lambda_poly(5) - gamma6_poly() * lambda_poly(3)
    i = 2 ** (k - 1)
    acc = ZERO
    for deg, c in phi_poly(k - 1).terms():
        acc = acc + c * zeta(i, deg)
    return acc


def phi_poly_direct(k: int) -> XiPoly:
    """phi via the defining difference lambda_{k+2} - (gamma^6)^{2^{k-3}} lambda_k."""
    if k < 3:
        raise ValueError(f"phi tower starts at k=3, got {k}")
    return lambda_poly(k + 2) - gamma6_poly() ** (2 ** (k - 3)) * lambda_poly(k)


@lru_cache(maxsize=None)
def _xi_power(order: int, degree: int) -> Series:
    if degree == 0:
        return Series.one(order)
    if degree == 1:
        return xi_series(order)
    return _xi_power(order, degree - 1) * xi_series(order)


def poly_to_series(p: XiPoly, order: int) -> Series:
    """Substitute the q-expansion of xi into p, exactly, truncated to order.

    Powers of xi are cached per order, so evaluating a whole family of
    polynomials (the zeta cross-validation grid) costs one series product per
    distinct degree.
    """
    if order < 1:
        raise ValueError(f"order must be >= 1, got {order}")
    acc = Series.zero(order)
    for deg, c in p.terms():
        acc = acc + _xi_power(order, deg) * c
    return acc
