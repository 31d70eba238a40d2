"""Empirical verification by scanning primes of the field.

Primes are enumerated as slots: one slot per degree-one prime (split
rational primes contribute two, one per square root of d mod p) and one
per inert prime entering at norm p**2.  Reduction of an element into the
residue field is coordinate-wise; inert slots live in F_p[T]/(T**2 - d)
with hand-rolled pair arithmetic.  A scan condenses each slot into the
pair (v, k) = (l-valuation of q - 1, l-valuation of the reduced element's
order), from which both the valuation histogram and complete-splitting
fractions are read off.  Scans are deterministic and chunk-parallel: the
merged histogram is identical for any worker count.
"""

from __future__ import annotations

import os
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import lcm
from typing import Iterator, NamedTuple

from .density import density
from .field import DomainError, Element, FieldSpec

VKCounts = Counter  # keys (v, k)


class PrimeSlot(NamedTuple):
    p: int
    kind: str            # "split" (degree one) or "inert"
    norm: int            # p or p**2
    sqrt_d: int | None   # residue of sqrt(d) mod p for split quadratic slots


@dataclass(frozen=True)
class ScanReport:
    field: FieldSpec
    a: Element
    ell: int
    bound: int
    counted: int
    excluded: tuple[int, ...]
    histogram: dict[int, int]
    empirical: dict[int, Fraction]
    exact: dict[int, Fraction]
    max_abs_error: Fraction


@lru_cache(maxsize=8)
def sieve_primes(bound: int) -> tuple[int, ...]:
    if bound < 2:
        return ()
    flags = bytearray([1]) * (bound + 1)
    flags[0] = flags[1] = 0
    for p in range(2, int(bound ** 0.5) + 1):
        if flags[p]:
            flags[p * p :: p] = bytearray(len(flags[p * p :: p]))
    return tuple(i for i, f in enumerate(flags) if f)


def _tonelli(n: int, p: int) -> int:
    """A square root of n mod an odd prime p; n must be a residue."""
    n %= p
    if n == 0:
        return 0
    if p % 4 == 3:
        return pow(n, (p + 1) // 4, p)
    q, s = p - 1, 0
    while q % 2 == 0:
        q //= 2
        s += 1
    z = 2
    while pow(z, (p - 1) // 2, p) != p - 1:
        z += 1
    m, c, t, r = s, pow(z, q, p), pow(n, q, p), pow(n, (q + 1) // 2, p)
    while t != 1:
        i, t2 = 1, t * t % p
        while t2 != 1:
            t2 = t2 * t2 % p
            i += 1
        b = pow(c, 1 << (m - i - 1), p)
        r = r * b % p
        c = b * b % p
        t = t * c % p
        m = i
    return r


@lru_cache(maxsize=64)
def _field_slots(field: FieldSpec, bound: int) -> tuple[PrimeSlot, ...]:
    primes = sieve_primes(bound)
    if field.is_rational:
        return tuple(PrimeSlot(p, "split", p, None) for p in primes)
    d = field.d
    disc = field.discriminant
    slots: list[PrimeSlot] = []
    for p in primes:
        if disc % p == 0:
            continue  # ramified
        if p == 2:
            # disc odd here, i.e. d = 1 mod 4; split iff d = 1 mod 8
            if d % 8 == 1:
                slots.append(PrimeSlot(2, "split", 2, 1))
                slots.append(PrimeSlot(2, "split", 2, 1))
            elif 4 <= bound:
                slots.append(PrimeSlot(2, "inert", 4, None))
            continue
        if pow(d % p, (p - 1) // 2, p) == 1:
            r = _tonelli(d % p, p)
            slots.append(PrimeSlot(p, "split", p, min(r, p - r)))
            slots.append(PrimeSlot(p, "split", p, max(r, p - r)))
        elif p * p <= bound:
            slots.append(PrimeSlot(p, "inert", p * p, None))
    return tuple(slots)


def enumerate_slots(field: FieldSpec, norm_bound: int,
                    exclusions: frozenset[int] = frozenset()) -> Iterator[PrimeSlot]:
    """Primes of the field with norm <= norm_bound, ramified ones skipped."""
    if norm_bound < 2:
        raise DomainError("norm bound must be at least 2")
    for slot in _field_slots(field, norm_bound):
        if slot.p not in exclusions:
            yield slot


def _valuation(n: int, ell: int) -> int:
    v = 0
    while n % ell == 0:
        n //= ell
        v += 1
    return v


def _pow_fp2(c0: int, c1: int, e: int, p: int, d: int) -> tuple[int, int]:
    r0, r1 = 1, 0
    while e:
        if e & 1:
            r0, r1 = (r0 * c0 + r1 * c1 % p * d) % p, (r0 * c1 + r1 * c0) % p
        c0, c1 = (c0 * c0 + c1 * c1 % p * d) % p, 2 * c0 * c1 % p
        e >>= 1
    return r0, r1


def _slot_vk(xn: int, xd: int, yn: int, yd: int, d: int,
             slot: PrimeSlot, ell: int) -> tuple[int, int]:
    p = slot.p
    if slot.kind == "split":
        red = (xn * pow(xd, -1, p) + yn * pow(yd, -1, p) * (slot.sqrt_d or 0)) % p
        if red == 0:
            raise DomainError(f"reduction mod {p} is not a unit")
        v = _valuation(p - 1, ell)
        w = pow(red, (p - 1) // ell ** v, p)
        k = 0
        while w != 1:
            w = pow(w, ell, p)
            k += 1
        return v, k
    c0 = xn * pow(xd, -1, p) % p
    c1 = yn * pow(yd, -1, p) % p
    if c0 == 0 and c1 == 0:
        raise DomainError(f"reduction mod {p} is not a unit")
    q = p * p
    v = _valuation(q - 1, ell)
    dm = d % p
    w0, w1 = _pow_fp2(c0, c1, (q - 1) // ell ** v, p, dm)
    k = 0
    while (w0, w1) != (1, 0):
        w0, w1 = _pow_fp2(w0, w1, ell, p, dm)
        k += 1
    return v, k


def order_valuation(a: Element, slot: PrimeSlot, ell: int) -> int:
    """l-adic valuation of the multiplicative order of a at this slot."""
    _, k = _slot_vk(a.x.numerator, a.x.denominator,
                    a.y.numerator, a.y.denominator,
                    a.field.d or 0, slot, ell)
    return k


def _bad_modulus(a: Element, ell: int) -> int:
    """Product sweeping up every prime where reduction could misbehave."""
    den = lcm(a.x.denominator, a.y.denominator)
    u, v = a.x * den, a.y * den
    if a.field.is_rational:
        nrm = int(u)
    else:
        nrm = int(u * u - v * v * a.field.d)
    return ell * abs(a.field.discriminant) * den * abs(nrm)


def _vk_chunk(args: tuple) -> Counter:
    xn, xd, yn, yd, d, ell, slots = args
    out: Counter = Counter()
    for slot in slots:
        out[_slot_vk(xn, xd, yn, yd, d, slot, ell)] += 1
    return out


def _workers_from_env() -> int:
    try:
        return max(1, int(os.environ.get("ORDENS_THREADS", "1")))
    except ValueError:
        return 1


def _scan_vk(field: FieldSpec, a: Element, ell: int, bound: int,
             workers: int | None = None) -> tuple[Counter, int, tuple[int, ...]]:
    """(v, k) counts over all good slots, plus counted and excluded primes."""
    bad = _bad_modulus(a, ell)
    excluded = tuple(p for p in sieve_primes(bound) if bad % p == 0)
    excl = frozenset(excluded)
    slots = [s for s in _field_slots(field, bound) if s.p not in excl]
    coords = (a.x.numerator, a.x.denominator, a.y.numerator, a.y.denominator,
              field.d or 0)
    workers = _workers_from_env() if workers is None else max(1, workers)
    if workers == 1 or len(slots) < 1000:
        counts = _vk_chunk((*coords, ell, slots))
    else:
        step = -(-len(slots) // workers)
        chunks = [slots[i : i + step] for i in range(0, len(slots), step)]
        counts = Counter()
        with ProcessPoolExecutor(max_workers=workers) as pool:
            for part in pool.map(_vk_chunk, [(*coords, ell, c) for c in chunks]):
                counts.update(part)
    return counts, len(slots), excluded


_VK_CACHE: dict[tuple, tuple[Counter, int, tuple[int, ...]]] = {}


def _scan_vk_cached(field: FieldSpec, a: Element, ell: int, bound: int):
    key = (field, a, ell, bound)
    if key not in _VK_CACHE:
        _VK_CACHE[key] = _scan_vk(field, a, ell, bound)
    return _VK_CACHE[key]


def empirical_density(a: Element, ell: int, bound: int = 10 ** 5,
                      workers: int | None = None) -> ScanReport:
    """Histogram the order valuations of a over all primes of norm <= bound."""
    if a.is_zero:
        raise DomainError("cannot scan the zero element")
    field = a.field
    if workers is None:
        counts, counted, excluded = _scan_vk_cached(field, a, ell, bound)
    else:
        counts, counted, excluded = _scan_vk(field, a, ell, bound, workers)
    histogram: dict[int, int] = {}
    for (_, k), c in counts.items():
        histogram[k] = histogram.get(k, 0) + c
    top = max(histogram) if histogram else 0
    empirical = {n: Fraction(histogram.get(n, 0), counted) for n in range(top + 1)}
    exact = {n: density(a, ell, n).value for n in range(top + 1)}
    err = max((abs(empirical[n] - exact[n]) for n in range(top + 1)),
              default=Fraction(0))
    return ScanReport(field, a, ell, bound, counted, excluded,
                      dict(sorted(histogram.items())), empirical, exact, err)


def split_fraction(a: Element, ell: int, m: int, n: int,
                   bound: int = 10 ** 6) -> Fraction:
    """Fraction of slots that split completely in K(zeta_{l^m}, a**(1/l**n)).

    A slot of norm q qualifies when q = 1 mod l**m and the reduction of a
    is an l**j-th power with j = min(n, v_l(q - 1)); in (v, k) terms that
    is v >= m and k <= v - j.  By Chebotarev this converges to the
    reciprocal of the total degree, giving an independent check on the
    Kummer degree formulas.
    """
    if not 0 <= n <= m:
        raise DomainError(f"need 0 <= n <= m, got n={n}, m={m}")
    if a.is_zero:
        raise DomainError("cannot scan the zero element")
    counts, counted, _ = _scan_vk_cached(a.field, a, ell, bound)
    hits = sum(c for (v, k), c in counts.items()
               if v >= m and k <= v - min(n, v))
    return Fraction(hits, counted)


def nonpower_certificate(c: Element, ell: int, bound: int = 10 ** 4) -> PrimeSlot | None:
    """A degree-one prime witnessing that c is not an l-th power in the field.

    Returns the first split slot with q = 1 mod l at which the reduction
    of c is not an l-th power, or None when no witness exists below the
    bound.  When lth_roots(c) is empty such a witness must exist for some
    bound (a nontrivial radical extension has inert primes of positive
    density), so this doubles as an independent counterexample record.
    """
    bad = _bad_modulus(c, ell)
    for slot in _field_slots(c.field, bound):
        p = slot.p
        if slot.kind != "split" or bad % p == 0 or (p - 1) % ell != 0:
            continue
        red = (c.x.numerator * pow(c.x.denominator, -1, p)
               + c.y.numerator * pow(c.y.denominator, -1, p) * (slot.sqrt_d or 0)) % p
        if pow(red, (p - 1) // ell, p) != 1:
            return slot
    return None
