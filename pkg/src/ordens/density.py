"""Exact densities of primes by the l-adic valuation of an element's order.

density_closed evaluates the closed forms; density reduces a prescribed
valuation n >= 1 to two closed evaluations via
D(a, n) = D(a**(l**n), 0) - D(a**(l**(n-1)), 0); density_series re-derives
D(a, 0) independently by summing

    sum_{i>=0} ( 1/[K(zeta_{l^i}, a**(1/l**i)) : K]
                 - 1/[K(zeta_{l^{i+1}}, a**(1/l**i)) : K] )

through the Kummer degree module, with the geometric tail closed exactly
once consecutive summands lock onto the 1/l**2 decay.  The two paths share
no formula code, which makes their agreement a meaningful cross-check.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .cyclo import cyclo_profile, cyclotomic_degree, special_case_flag
from .field import DomainError, Element
from .kummer import KummerQuery, total_degree
from .roots import Case, Decomposition, decompose, is_root_of_unity, unit_order


class InvariantError(RuntimeError):
    """An internal identity that must hold exactly has failed."""


class ShapeViolation(InvariantError):
    """A computed density does not have its mandated shape."""


Params = tuple[tuple[str, object], ...]


@dataclass(frozen=True)
class DensityValue:
    """An exact density in [0, 1] plus a note of how it was derived."""

    value: Fraction
    method: str   # "closed_form" or "series"
    branch: str
    params: Params = ()

    def __post_init__(self) -> None:
        if not 0 <= self.value <= 1:
            raise InvariantError(f"density {self.value} outside [0, 1]")


def analyze(a: Element, ell: int) -> tuple[Decomposition, "object", bool]:
    """Normal form, tower profile and halving flag for one input."""
    dec = decompose(a, ell)
    prof = cyclo_profile(a.field, ell)
    special = False
    if ell == 2 and not prof.has_zeta4 and dec.case is not Case.ROOT_OF_UNITY:
        special = special_case_flag(a.field, prof, dec.base)
    return dec, prof, special


def _closed_zeta4_free_power(d: int, s: int, eps: Fraction) -> Fraction:
    if d == 0:
        return Fraction(1, 4) + eps / 3 * Fraction(2) ** -s
    if d < s:
        return Fraction(1, 2) + eps / 3 * Fraction(2) ** (d - s)
    return 1 - eps / 6 * Fraction(2) ** (s - d)


@lru_cache(maxsize=4096)
def density_closed(a: Element, ell: int) -> DensityValue:
    """D(a) = density of primes where the order of a is coprime to l."""
    if a.is_zero:
        raise DomainError("density of zero is undefined")
    if is_root_of_unity(a):
        value = Fraction(1) if unit_order(a) % ell else Fraction(0)
        return DensityValue(value, "closed_form", "torsion", (("order", unit_order(a)),))
    dec, prof, special = analyze(a, ell)
    d, r, t = dec.depth, dec.unit_level, prof.stall
    ellf = Fraction(ell)

    if ell != 2 or prof.has_zeta4:
        if not (prof.has_zeta_ell or prof.has_zeta4):
            # the l-th roots of unity live strictly above K
            delta = Fraction(1, prof.degree)
            if d <= t:
                value = 1 - delta * (1 - Fraction(ell, ell + 1) * ellf ** (d - t))
            else:
                value = 1 - delta * Fraction(1, ell + 1) * ellf ** (t - d)
            return DensityValue(value, "closed_form", "zeta-absent",
                                (("d", d), ("t", t), ("degree", prof.degree)))
        if dec.case is Case.POWER:
            if d <= t:
                value = Fraction(ell, ell + 1) * ellf ** (d - t)
            else:
                value = 1 - Fraction(1, ell + 1) * ellf ** (t - d)
            return DensityValue(value, "closed_form", "zeta-present/power",
                                (("d", d), ("t", t)))
        value = Fraction(ell, ell + 1) * ellf ** (t - d - 2 * r)
        return DensityValue(value, "closed_form", "zeta-present/power-unit",
                            (("d", d), ("r", r), ("t", t)))

    # l = 2 and i not in K
    s = prof.zeta4_stall
    eps = Fraction(1, 2) if special else Fraction(1)
    params: Params = (("d", d), ("s", s), ("eps", eps))
    if dec.case is Case.POWER:
        value = _closed_zeta4_free_power(d, s, eps)
        return DensityValue(value, "closed_form", "zeta4-absent/power", params)
    # a = -b**(2**d), d > 0: derive from the density of -a and check the
    # equivalent closed form, so both printed shapes guard each other.
    minus = _closed_zeta4_free_power(d, s, eps)
    if d < s - 1:
        value = minus - Fraction(1, 2)
        check = eps / 3 * Fraction(2) ** (d - s)
    elif d == s - 1:
        value = minus - eps / 2
        check = 1 / (6 * eps)
    else:
        value = minus - 1 + eps / 4 * Fraction(2) ** (s - d)
        check = eps / 12 * Fraction(2) ** (s - d)
    if value != check:
        raise InvariantError(
            f"negated-power forms disagree for {a}: {value} vs {check}")
    return DensityValue(value, "closed_form", "zeta4-absent/negative", params)


def density(a: Element, ell: int, n: int = 0) -> DensityValue:
    """D(a, n) = density of primes where the order of a has l-valuation n."""
    if n < 0:
        raise DomainError("valuation must be nonnegative")
    if n == 0:
        return density_closed(a, ell)
    hi = density_closed(a ** ell ** n, ell)
    lo = density_closed(a ** ell ** (n - 1), ell)
    return DensityValue(hi.value - lo.value, "closed_form", "valuation-difference",
                        (("n", n), ("plus", hi.branch), ("minus", lo.branch)))


def density_series(a: Element, ell: int) -> DensityValue:
    """D(a) summed layer by layer from Kummer degrees, with an exact tail.

    Summands are evaluated up to M = d + r + t + s + 4, which lies past
    every breakpoint of the degree formulas; the last three must then
    decay by exactly 1/l**2 per step (anything else is a formula bug and
    raises), and the remaining tail is the geometric sum
    summand_M / (l**2 - 1).
    """
    if a.is_zero:
        raise DomainError("density of zero is undefined")
    if is_root_of_unity(a):
        raise DomainError("series evaluation expects a non-torsion element")
    dec, prof, special = analyze(a, ell)
    limit = dec.depth + dec.unit_level + prof.stall + (prof.zeta4_stall or 0) + 4

    def inv_total(m: int, n: int) -> Fraction:
        q = KummerQuery(ell, m, n, dec, prof, special)
        return Fraction(1, total_degree(q))

    terms = [1 - inv_total(1, 0)]
    for i in range(1, limit + 1):
        terms.append(inv_total(i, i) - inv_total(i + 1, i))
    ratio = Fraction(1, ell * ell)
    if terms[-1] != terms[-2] * ratio or terms[-2] != terms[-3] * ratio:
        raise InvariantError(
            f"series did not stabilize by layer {limit} for {a}: tail "
            f"{terms[-3]}, {terms[-2]}, {terms[-1]}")
    tail = terms[-1] * Fraction(1, ell * ell - 1)
    return DensityValue(sum(terms) + tail, "series", "layer-sum",
                        (("layers", limit + 1),))


@dataclass(frozen=True)
class ShapeReport:
    kind: str | None     # which structural form applied, None when neither
    value: Fraction
    detail: str


def _is_power_of(n: int, ell: int) -> bool:
    while n % ell == 0:
        n //= ell
    return n == 1


def shape_check(a: Element, ell: int) -> ShapeReport:
    """Assert the structural form the density must take for this field.

    Without l-th roots of unity in K the density must equal
    1 - (1/[K(zeta_l):K]) * l**(1-d) / (l+1); with them (or with i in K
    for l = 2) it must be 1/(l**n (l+1)) or its complement for some n >= 0.
    Violations raise ShapeViolation.
    """
    if a.is_zero or is_root_of_unity(a):
        raise DomainError("shape checks expect a non-torsion element")
    dec, prof, _ = analyze(a, ell)
    got = density_closed(a, ell).value
    if ell != 2 and not prof.has_zeta_ell and prof.stall == 1:
        expect = 1 - Fraction(1, prof.degree) * Fraction(ell) ** (1 - dec.depth) / (ell + 1)
        if got != expect:
            raise ShapeViolation(f"{a}: expected {expect}, computed {got}")
        return ShapeReport("cyclotomic-scaled", got, f"d={dec.depth}")
    if (ell != 2 and prof.has_zeta_ell) or (ell == 2 and prof.has_zeta4):
        for v in (got, 1 - got):
            if v != 0 and v.numerator == 1 and v.denominator % (ell + 1) == 0 \
                    and _is_power_of(v.denominator // (ell + 1), ell):
                return ShapeReport("pure", got, f"1/(l^n(l+1)) side={'direct' if v == got else 'complement'}")
        raise ShapeViolation(f"{a}: {got} is not 1/(l^n(l+1)) or its complement")
    return ShapeReport(None, got, "no mandated shape for this field")
