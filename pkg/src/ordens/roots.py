"""Roots of unity, exact l-th roots, and the power-times-unit normal form.

The l-th root solver works through a norm/trace resolvent: a root b of
x**l = c has rational norm eta with eta**l = norm(c), and its trace tau
satisfies the power-sum recurrence s_0 = 2, s_1 = tau,
s_k = tau*s_{k-1} - eta*s_{k-2}, with s_l(tau) = trace(c).  Rational
roots tau of that monic polynomial are recovered exactly (ratroots), the
sqrt coordinate comes from v**2 = (tau**2 - 4*eta) / (4*d), and every
candidate is verified by exact exponentiation before being returned.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from functools import lru_cache

from .field import DomainError, Element, FieldSpec, rational_nth_root
from .ratroots import rational_roots_monic

_MAX_DEPTH = 64


def unit_orders(field: FieldSpec) -> dict[Element, int]:
    """All roots of unity of the field, mapped to their multiplicative orders."""
    one = Element(field, 1)
    units = {one: 1, -one: 2}
    if field.d == -1:
        i = Element(field, 0, 1)
        units[i] = 4
        units[-i] = 4
    if field.d == -3:
        z = Element(field, Fraction(-1, 2), Fraction(1, 2))
        units[z] = 3
        units[z * z] = 3
        units[-z] = 6
        units[-(z * z)] = 6
    return units


def _canonical_units(field: FieldSpec) -> list[Element]:
    one = Element(field, 1)
    if field.d == -1:
        i = Element(field, 0, 1)
        return [one, -one, i, -i]
    if field.d == -3:
        z = Element(field, Fraction(-1, 2), Fraction(1, 2))
        return [one, z, z * z, -one, -z, -(z * z)]
    return [one, -one]


def is_root_of_unity(e: Element) -> bool:
    return e in unit_orders(e.field)


def unit_order(e: Element) -> int:
    try:
        return unit_orders(e.field)[e]
    except KeyError:
        raise DomainError(f"{e} is not a root of unity") from None


def roots_of_unity(field: FieldSpec, ell: int) -> list[Element]:
    """The l-power-order roots of unity of the field, in canonical order."""
    orders = unit_orders(field)
    out = []
    for u in _canonical_units(field):
        o = orders[u]
        while o % ell == 0:
            o //= ell
        if o == 1:
            out.append(u)
    return out


def torsion_exponent(field: FieldSpec, ell: int) -> int:
    """Greatest t such that the field contains a root of unity of order ell**t."""
    best = 0
    for u in roots_of_unity(field, ell):
        o = unit_orders(field)[u]
        t = 0
        while o > 1:
            o //= ell
            t += 1
        best = max(best, t)
    return best


def _power_sum_poly(ell: int, eta: Fraction) -> list[Fraction]:
    s0 = [Fraction(2)]
    s1 = [Fraction(0), Fraction(1)]
    for _ in range(ell - 1):
        nxt = [Fraction(0)] + s1
        for i, c in enumerate(s0):
            nxt[i] -= eta * c
        s0, s1 = s1, nxt
    return s1


def lth_roots(c: Element, ell: int) -> set[Element]:
    """All b in the field with b**ell == c, found exactly."""
    if c.is_zero:
        raise DomainError("zero has no multiplicative structure here")
    field = c.field
    if field.is_rational:
        return {Element(field, r) for r in rational_nth_root(c.x, ell)}
    roots: set[Element] = set()
    trace_c = c.trace()
    d = field.d
    for eta in rational_nth_root(c.norm(), ell):
        poly = _power_sum_poly(ell, eta)
        poly[0] -= trace_c
        for tau in rational_roots_monic(poly):
            vv = (tau * tau - 4 * eta) / (4 * d)
            for v in rational_nth_root(vv, 2):
                cand = Element(field, tau / 2, v)
                if cand ** ell == c:
                    roots.add(cand)
    return roots


def is_strongly_indivisible(a: Element, ell: int) -> bool:
    """True when a*xi has no l-th root in the field for every root of unity xi.

    Roots of unity themselves are never strongly indivisible and return
    False; use is_root_of_unity to tell that case apart.
    """
    if a.is_zero:
        raise DomainError("zero cannot be tested")
    if is_root_of_unity(a):
        return False
    return all(not lth_roots(a * xi, ell) for xi in roots_of_unity(a.field, ell))


class Case(str, Enum):
    POWER = "power"
    POWER_TIMES_UNIT = "power_times_unit"
    ROOT_OF_UNITY = "root_of_unity"


@dataclass(frozen=True)
class Decomposition:
    """Normal form element == base ** (ell ** depth) * unit.

    base is strongly indivisible, unit is a root of unity of order
    ell ** unit_level, and depth is maximal over all unit choices.  For
    root-of-unity inputs base and unit are None.
    """

    ell: int
    element: Element
    case: Case
    depth: int
    base: Element | None
    unit: Element | None
    unit_level: int

    def recompose(self) -> Element:
        if self.case is Case.ROOT_OF_UNITY:
            return self.element
        return self.base ** (self.ell ** self.depth) * self.unit


@lru_cache(maxsize=4096)
def decompose(a: Element, ell: int) -> Decomposition:
    """Maximal-depth power-times-unit normal form of a.

    Searches depth upward, carrying for each unit xi the full set of
    ell**depth-th roots of a/xi (breadth-first over lth_roots); feasibility
    is downward closed, so the first empty level is conclusive.  Among
    units reaching the maximal depth the one of minimal multiplicative
    order wins (canonical order breaks ties), which absorbs absorbable
    units into the base; the base itself is the lexicographically largest
    root by coordinates, so output is deterministic.
    """
    if a.is_zero:
        raise DomainError("cannot decompose zero")
    if is_root_of_unity(a):
        return Decomposition(ell, a, Case.ROOT_OF_UNITY, 0, None, None, 0)
    mu = roots_of_unity(a.field, ell)
    orders = unit_orders(a.field)
    level: dict[Element, set[Element]] = {xi: {a / xi} for xi in mu}
    winners = level
    depth = 0
    while True:
        nxt: dict[Element, set[Element]] = {}
        for xi, elems in level.items():
            grown: set[Element] = set()
            for z in elems:
                grown |= lth_roots(z, ell)
            if grown:
                nxt[xi] = grown
        if not nxt:
            break
        depth += 1
        if depth > _MAX_DEPTH:
            raise RuntimeError(f"power depth exceeded {_MAX_DEPTH}; input {a}")
        level = winners = nxt
    xi = min(winners, key=lambda u: (orders[u], mu.index(u)))
    base = max(winners[xi], key=lambda e: (e.x, e.y))
    r = 0
    o = orders[xi]
    while o > 1:
        o //= ell
        r += 1
    case = Case.POWER if orders[xi] == 1 else Case.POWER_TIMES_UNIT
    dec = Decomposition(ell, a, case, depth, base, xi, r)
    if dec.recompose() != a:
        raise RuntimeError(f"decomposition round-trip failed for {a}")
    return dec
