"""Exact rational roots of monic polynomials over Q.

A monic integer polynomial has all of its rational roots in Z, so after
clearing denominators the search reduces to integer roots.  Degrees one
and two are solved directly with exact integer square roots.  Higher
degrees are isolated with a Sturm chain and bisection on half-integer
sample points: a half-integer can never be a root of a monic integer
polynomial, so every sign evaluation is clean, and every width-one
interval holds exactly one integer candidate which is then accepted only
if the polynomial evaluates to exactly zero.  The Sturm chain is computed
on the squarefree part so repeated roots cannot hide from sign counts.
"""

from __future__ import annotations

from fractions import Fraction
from math import isqrt, lcm

Poly = list[Fraction]  # ascending coefficients: poly[i] multiplies x**i


def poly_eval(poly: list, x) -> Fraction:
    acc = 0
    for c in reversed(poly):
        acc = acc * x + c
    return acc


def _trim(poly: Poly) -> Poly:
    while len(poly) > 1 and poly[-1] == 0:
        poly = poly[:-1]
    return poly


def _derivative(poly: Poly) -> Poly:
    return _trim([i * c for i, c in enumerate(poly)][1:] or [Fraction(0)])


def _divmod(num: Poly, den: Poly) -> tuple[Poly, Poly]:
    num = list(num)
    dn = len(den) - 1
    lead = den[-1]
    quo = [Fraction(0)] * max(1, len(num) - dn)
    for i in range(len(num) - 1, dn - 1, -1):
        c = num[i] / lead
        quo[i - dn] = c
        if c:
            for j, dc in enumerate(den):
                num[i - dn + j] -= c * dc
    return _trim(quo), _trim(num[:dn] or [Fraction(0)])


def _gcd(a: Poly, b: Poly) -> Poly:
    a, b = _trim(list(a)), _trim(list(b))
    while not (len(b) == 1 and b[0] == 0):
        _, r = _divmod(a, b)
        a, b = b, r
    return [c / a[-1] for c in a]


def _squarefree_part(poly: Poly) -> Poly:
    g = _gcd(poly, _derivative(poly))
    if len(g) == 1:
        return poly
    q, _ = _divmod(poly, g)
    return [c / q[-1] for c in q]


def _sturm_chain(poly: Poly) -> list[Poly]:
    chain = [poly, _derivative(poly)]
    while len(chain[-1]) > 1:
        _, r = _divmod(chain[-2], chain[-1])
        r = [-c for c in r]
        if len(r) == 1 and r[0] == 0:
            break
        chain.append(r)
    return chain


def _variations(chain: list[Poly], x: Fraction) -> int:
    signs = []
    for poly in chain:
        v = poly_eval(poly, x)
        if v:
            signs.append(1 if v > 0 else -1)
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def _integer_roots(g: list[int]) -> list[int]:
    """All integer roots of a monic integer polynomial."""
    roots = []
    if g[0] == 0:
        roots.append(0)
        while g[0] == 0:
            g = g[1:]
    deg = len(g) - 1
    if deg == 0:
        return roots
    if deg == 1:
        return roots + [-g[0]]
    if deg == 2:
        disc = g[1] * g[1] - 4 * g[0]
        if disc < 0:
            return roots
        s = isqrt(disc)
        if s * s != disc:
            return roots
        cands = {(-g[1] + s) // 2, (-g[1] - s) // 2}
        return roots + [u for u in cands if poly_eval(g, u) == 0]

    sf = _squarefree_part([Fraction(c) for c in g])
    chain = _sturm_chain(sf)
    bound = 1 + max(abs(c.numerator) // c.denominator + 1 for c in sf[:-1])
    half = Fraction(1, 2)
    lo, hi = -bound - half, bound + half
    stack = [(lo, hi, _variations(chain, lo), _variations(chain, hi))]
    while stack:
        lo, hi, vlo, vhi = stack.pop()
        if vlo - vhi <= 0:
            continue
        width = int(hi - lo)
        if width == 1:
            u = int(lo + half)
            if poly_eval(g, u) == 0:
                roots.append(u)
            continue
        mid = lo + width // 2
        vm = _variations(chain, mid)
        stack.append((lo, mid, vlo, vm))
        stack.append((mid, hi, vm, vhi))
    return sorted(set(roots))


def rational_roots_monic(poly: list) -> list[Fraction]:
    """All rational roots of a monic polynomial with rational coefficients."""
    poly = _trim([Fraction(c) for c in poly])
    if poly[-1] != 1:
        raise ValueError("polynomial must be monic")
    if len(poly) == 1:
        return []
    deg = len(poly) - 1
    scale = lcm(*(c.denominator for c in poly))
    # substitute x = u/scale, clear denominators: stays monic over Z
    g = [int(c * scale ** (deg - i)) for i, c in enumerate(poly)]
    return [Fraction(u, scale) for u in _integer_roots(g)]
