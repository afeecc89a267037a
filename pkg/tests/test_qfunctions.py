from fractions import Fraction
from itertools import combinations

import pytest

from schurq import linalg
from schurq.algebra import Polynomial, T_MINUS, T_PLUS, substitute
from schurq.qfunctions import (
    NotInSpan,
    NotSymmetric,
    OddCycleType,
    StrictPartition,
    char_map,
    expand_in_power_sums,
    is_supersymmetric,
    monomial_symmetric,
    odd_cycle_types,
    power_sum,
    q_series,
    q_two,
    schur_q,
    shifted_tableaux_count,
    shifted_tableaux_enumerate,
    strict_partitions,
)


class TestStrictPartition:
    def test_parse_and_str(self):
        lam = StrictPartition.parse("3,1")
        assert lam.parts == (3, 1)
        assert lam.weight == 4 and lam.length == 2
        assert str(lam) == "3,1"

    def test_rejects_non_strict(self):
        with pytest.raises(ValueError):
            StrictPartition((2, 2))
        with pytest.raises(ValueError):
            StrictPartition((1, 2))
        with pytest.raises(ValueError):
            StrictPartition((2, 0))

    def test_generator_counts(self):
        # distinct-part partition counts of 1..8: 1,1,2,2,3,4,5,6
        counts = [sum(1 for _ in strict_partitions(d)) for d in range(1, 9)]
        assert counts == [1, 1, 2, 2, 3, 4, 5, 6]


class TestOddCycleType:
    def test_rejects_even_part(self):
        with pytest.raises(ValueError):
            OddCycleType((3, 2))

    def test_sorts_parts(self):
        assert OddCycleType((1, 3)).parts == (3, 1)


class TestQSeries:
    def test_q0_is_one(self):
        for n in (1, 2, 3):
            assert q_series(n, 0)[0] == Polynomial.constant(n, 1)

    def test_n1_geometric(self):
        qs = q_series(1, 5)
        for k in range(1, 6):
            assert qs[k] == Polynomial.monomial(1, (k,), 2)

    def test_q1_n2(self):
        assert q_series(2, 1)[1] == Polynomial(2, {(1, 0): 2, (0, 1): 2})

    def test_q1_is_twice_p1(self):
        for n in (1, 2, 3):
            assert q_series(n, 1)[1] == power_sum(1, n).scale(2)


class TestQTwo:
    def test_right_zero_index(self):
        for k in (1, 2, 3):
            for n in (1, 2):
                assert q_two(k, 0, n) == q_series(n, k)[k]

    def test_q21_n2(self):
        assert q_two(2, 1, 2) == Polynomial(2, {(2, 1): 4, (1, 2): 4})

    def test_q11_n1_vanishes(self):
        assert q_two(1, 1, 1).is_zero()

    @pytest.mark.parametrize("n", [1, 2, 3, 4])
    def test_skew_symmetry(self, n):
        for k in range(0, 9):
            for l in range(0, 9):
                if k + l:
                    assert q_two(k, l, n) == -q_two(l, k, n)


class TestSchurQ:
    def test_single_row(self):
        for k in (1, 2, 3):
            assert schur_q(StrictPartition((k,)), 2) == q_series(2, k)[k]

    def test_21_n2(self):
        assert schur_q(StrictPartition((2, 1)), 2) == Polynomial(2, {(2, 1): 4, (1, 2): 4})

    def test_vanishes_beyond_length(self):
        assert schur_q(StrictPartition((2, 1)), 1).is_zero()
        assert schur_q(StrictPartition((3, 2, 1)), 2).is_zero()

    def test_homogeneous(self):
        for d in range(1, 7):
            for lam in strict_partitions(d):
                p = schur_q(lam, 3)
                assert p.is_homogeneous()
                if not p.is_zero():
                    assert p.degree() == d

    def test_stability(self):
        for d in range(1, 7):
            for lam in strict_partitions(d):
                for n in (1, 2, 3):
                    assert substitute(schur_q(lam, n + 1), {n + 1: 0}) == schur_q(lam, n)

    def test_symmetric(self):
        for lam in strict_partitions(5):
            assert schur_q(lam, 3).is_symmetric()

    @pytest.mark.parametrize("n", [2, 3, 4])
    def test_linear_independence_per_degree(self, n):
        for d in range(1, 9):
            basis = [schur_q(lam, n) for lam in strict_partitions(d, max_length=n)]
            if not basis:
                continue
            monomials = sorted({m for b in basis for m in b.terms})
            rows = [[b.terms.get(m, Fraction(0)) for b in basis] for m in monomials]
            assert linalg.rank(rows) == len(basis)


class TestCharMap:
    def test_single_cycle(self):
        assert char_map(OddCycleType((3,)), 2) == power_sum(3, 2).scale(2)

    def test_matches_q1(self):
        assert char_map(OddCycleType((1,)), 3) == q_series(3, 1)[1]

    def test_two_cycles(self):
        expected = (power_sum(3, 2) * power_sum(1, 2)).scale(4)
        assert char_map(OddCycleType((3, 1)), 2) == expected

    def test_multiplicative_on_disjoint_types(self):
        for n in (2, 3):
            for w1 in range(1, 5):
                for w2 in range(1, 5):
                    for nu in odd_cycle_types(w1):
                        for mu in odd_cycle_types(w2):
                            union = OddCycleType(nu.parts + mu.parts)
                            assert char_map(union, n) == char_map(nu, n) * char_map(mu, n)


class TestExpandInPowerSums:
    def test_q1(self):
        e = expand_in_power_sums(schur_q(StrictPartition((1,)), 2), 2, 1)
        assert e == {OddCycleType((1,)): Fraction(2)}

    def test_q2(self):
        e = expand_in_power_sums(schur_q(StrictPartition((2,)), 2), 2, 2)
        assert e == {OddCycleType((1, 1)): Fraction(2)}

    def test_q3(self):
        e = expand_in_power_sums(schur_q(StrictPartition((3,)), 3), 3, 3)
        assert e == {
            OddCycleType((1, 1, 1)): Fraction(4, 3),
            OddCycleType((3,)): Fraction(2, 3),
        }

    def test_series_oracle(self):
        # q_k is the t^k coefficient of exp(2 sum_{odd m} p_m t^m / m);
        # expand that series independently and compare coefficients.
        n, maxdeg = 3, 6
        series = [Polynomial.zero(n) for _ in range(maxdeg + 1)]
        series[0] = Polynomial.constant(n, 1)
        # exponent polynomial E(t) = sum_{odd m} 2 p_m t^m / m
        exps = {m: power_sum(m, n).scale(Fraction(2, m)) for m in range(1, maxdeg + 1, 2)}
        # exp series: s_{k} = 1/k * sum_{m} m * E_m * s_{k-m}  (log-derivative trick)
        for k in range(1, maxdeg + 1):
            acc = Polynomial.zero(n)
            for m, em in exps.items():
                if m <= k:
                    acc = acc + em.scale(m) * series[k - m]
            series[k] = acc.scale(Fraction(1, k))
        for k in range(maxdeg + 1):
            assert series[k] == q_series(n, maxdeg)[k]

    def test_not_symmetric(self):
        with pytest.raises(NotSymmetric):
            expand_in_power_sums(Polynomial.variable(2, 1), 2, 1)

    def test_not_in_span(self):
        # e_2 = x1 x2 is symmetric but outside the odd power-sum span
        with pytest.raises(NotInSpan):
            expand_in_power_sums(Polynomial.monomial(2, (1, 1)), 2, 2)


class TestSupersymmetry:
    def test_q21(self):
        assert is_supersymmetric(schur_q(StrictPartition((2, 1)), 3), 3)

    def test_elementary_symmetric_fails(self):
        e2 = Polynomial.monomial(2, (1, 1))
        assert not is_supersymmetric(e2, 2)

    def test_constant(self):
        assert is_supersymmetric(Polynomial.constant(2, 5), 2)

    def test_requires_symmetric(self):
        with pytest.raises(NotSymmetric):
            is_supersymmetric(Polynomial.variable(2, 1), 2)

    def test_all_schur_q(self):
        for d in range(1, 7):
            for lam in strict_partitions(d):
                for n in (2, 3):
                    assert is_supersymmetric(schur_q(lam, n), n)


class TestShiftedTableaux:
    def test_single_row(self):
        for k in (1, 3, 7):
            assert shifted_tableaux_count(StrictPartition((k,))) == 1

    def test_known_values(self):
        assert shifted_tableaux_count(StrictPartition((2, 1))) == 1
        assert shifted_tableaux_count(StrictPartition((3, 2, 1))) == 2

    def test_formula_matches_enumeration(self):
        for d in range(1, 9):
            for lam in strict_partitions(d):
                assert shifted_tableaux_count(lam) == shifted_tableaux_enumerate(lam)


def test_monomial_symmetric_basis():
    m = monomial_symmetric((2, 1), 3)
    assert m.is_symmetric()
    assert len(m.terms) == 6
    assert monomial_symmetric((1, 1, 1, 1), 3).is_zero()
