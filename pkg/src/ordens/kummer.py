"""Degrees of Kummer layers over cyclotomic levels.

kummer_relative_degree computes [K(zeta_{l^m}, a**(1/l**n)) : K(zeta_{l^m})]
from scalars only: the prime l, levels m >= n, the power-times-unit normal
form (depth d, unit level r), the tower profile (stall t, zeta4_stall s)
and the halving flag.  When the tower over K is cyclic (l odd, or i in K)
the degree is l**max(0, n-d) for plain powers and l**max(0, n-d, n+r-m)
for power-times-unit, after lifting m to t (the fields coincide below the
stall).  For l = 2 without i the plain-power degree is 2**max(0, n-d),
dropping to 2**max(0, n-d-1) once m passes the halving threshold s+1; the
negated-power case equals the degree for -a except at three boundary
layers handled explicitly below.
"""

from __future__ import annotations

from dataclasses import dataclass

from .cyclo import CycloProfile, cyclotomic_degree
from .field import DomainError
from .roots import Case, Decomposition


@dataclass(frozen=True)
class KummerQuery:
    ell: int
    m: int
    n: int
    decomp: Decomposition
    profile: CycloProfile
    special: bool = False

    def __post_init__(self) -> None:
        if self.m < 1:
            raise DomainError("cyclotomic level m must be >= 1")
        if not 0 <= self.n <= self.m:
            raise DomainError(f"need 0 <= n <= m, got n={self.n}, m={self.m}")


def kummer_relative_degree(q: KummerQuery) -> int:
    if q.decomp.case is Case.ROOT_OF_UNITY:
        raise DomainError("root-of-unity inputs have no Kummer normal form")
    if q.n == 0:
        return 1
    ell, n = q.ell, q.n
    d, r = q.decomp.depth, q.decomp.unit_level

    if ell != 2 or q.profile.has_zeta4:
        if q.decomp.case is Case.POWER:
            return ell ** max(0, n - d)
        m = max(q.m, q.profile.stall)  # levels below the stall coincide
        return ell ** max(0, n - d, n + r - m)

    s = q.profile.zeta4_stall

    def power_degree(m: int) -> int:
        if q.special and m >= s + 1:
            return 2 ** max(0, n - d - 1)
        return 2 ** max(0, n - d)

    if q.decomp.case is Case.POWER:
        return power_degree(q.m)

    # a = -b**(2**d) with d > 0: compare with the degree for -a
    minus = power_degree(q.m)
    if q.m == n == 1:
        return 2  # sqrt(-a) is rational here, sqrt(a) is not
    if q.m == n >= s and minus == 1:
        return 2  # the layer only just acquired a primitive 2^n-th root of -1
    if q.special and q.m == n == s == d + 1 and minus == 2:
        return 1  # sqrt(b) and zeta_{2^{s+1}} generate the same quadratic step
    return minus


def total_degree(q: KummerQuery) -> int:
    """[K(zeta_{l^m}, a**(1/l**n)) : K]."""
    return cyclotomic_degree(q.profile, q.m) * kummer_relative_degree(q)
