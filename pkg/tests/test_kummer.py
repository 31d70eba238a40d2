"""Kummer layer degrees: formulas, boundary layers, monotonicity."""

from __future__ import annotations

from fractions import Fraction

import pytest

from ordens import (
    QQ,
    Case,
    DomainError,
    Element,
    FieldSpec,
    KummerQuery,
    analyze,
    kummer_relative_degree,
    total_degree,
)

GAUSS = FieldSpec(-1)
RT3 = FieldSpec(3)


def elem(field, x, y=0):
    return Element(field, Fraction(x), Fraction(y))


def query(a, ell, m, n):
    dec, prof, special = analyze(a, ell)
    return KummerQuery(ell, m, n, dec, prof, special)


class TestRelativeDegree:
    def test_cubic_layers_over_sqrt3(self):
        assert kummer_relative_degree(query(elem(RT3, 2), 3, 2, 2)) == 9

    def test_sqrt2_joins_the_tower_at_level_eight(self):
        q = query(elem(QQ, 2), 2, 3, 1)
        assert q.special
        assert kummer_relative_degree(q) == 1
        assert kummer_relative_degree(query(elem(QQ, 2), 2, 2, 1)) == 2

    def test_power_times_unit_over_gaussian(self):
        a = elem(GAUSS, 0, 4)  # 4i: depth 2, unit of order 4
        assert kummer_relative_degree(query(a, 2, 4, 3)) == 2

    def test_low_level_lifts_to_the_stall(self):
        # 2 = (1-i)**2 * i in Q(i); at m = n = 1 the level-2 field equals
        # the level-4 field, so the unit contributes fully
        assert kummer_relative_degree(query(elem(GAUSS, 2), 2, 1, 1)) == 2

    def test_negated_power_boundary_layers(self):
        # -a is a square at every layer but sqrt(a) needs +/-1 switched
        assert kummer_relative_degree(query(elem(QQ, -9), 2, 1, 1)) == 2
        # m = n >= s with trivial -a degree picks up the fresh root of -1
        assert kummer_relative_degree(query(elem(QQ, -16), 2, 2, 2)) == 2
        # halving case: 4th root of -4 is 1+i, already in Q(zeta_4)
        q = query(elem(QQ, -4), 2, 2, 2)
        assert q.special
        assert kummer_relative_degree(q) == 1

    def test_degree_divides_ell_power(self):
        for a, ell in [(elem(QQ, 12), 2), (elem(RT3, 2), 3), (elem(GAUSS, 2), 2)]:
            for m in range(1, 7):
                for n in range(m + 1):
                    deg = kummer_relative_degree(query(a, ell, m, n))
                    assert ell ** n % deg == 0

    def test_monotone_in_n(self):
        for a, ell in [(elem(QQ, 2), 2), (elem(QQ, -4), 2), (elem(RT3, 2), 3),
                       (elem(GAUSS, 0, 4), 2)]:
            for m in range(1, 8):
                degs = [kummer_relative_degree(query(a, ell, m, n)) for n in range(m + 1)]
                for lo, hi in zip(degs, degs[1:]):
                    assert hi % lo == 0 and hi // lo in (1, ell)

    def test_antitone_in_m_stabilizes(self):
        for a, ell in [(elem(GAUSS, 0, 4), 2), (elem(GAUSS, 2), 2), (elem(QQ, 2), 2)]:
            dec, prof, _ = analyze(a, ell)
            # past the unit's reach and past any halving layer, m stops mattering
            floor = (prof.zeta4_stall or 0) + 1
            for n in range(1, 4):
                degs = [kummer_relative_degree(query(a, ell, m, n)) for m in range(n, n + 6)]
                for lo, hi in zip(degs, degs[1:]):
                    assert lo % hi == 0 and lo // hi in (1, ell)
                stable = [d for m, d in zip(range(n, n + 6), degs)
                          if m >= max(n + dec.unit_level, floor)]
                assert len(set(stable)) <= 1

    def test_trivial_layer(self):
        assert kummer_relative_degree(query(elem(QQ, 2), 2, 5, 0)) == 1

    def test_rejects_bad_shapes(self):
        with pytest.raises(DomainError):
            query(elem(QQ, 2), 2, 1, 2)  # n > m
        with pytest.raises(DomainError):
            kummer_relative_degree(query(elem(GAUSS, 0, 1), 2, 1, 1))  # torsion


class TestTotalDegree:
    def test_classic_cubic(self):
        assert total_degree(query(elem(QQ, 2), 3, 1, 1)) == 6

    def test_sqrt2_inside_eighth_cyclotomic(self):
        assert total_degree(query(elem(QQ, 2), 2, 3, 1)) == 4

    def test_over_gaussian(self):
        assert total_degree(query(elem(GAUSS, 3), 2, 1, 1)) == 2

    def test_power_times_unit_total(self):
        assert total_degree(query(elem(GAUSS, 0, 4), 2, 4, 3)) == 8
