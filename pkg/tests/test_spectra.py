from fractions import Fraction

import pytest

from schurq.algebra import Polynomial
from schurq.qfunctions import StrictPartition, strict_partitions
from schurq.spectra import (
    Inseparable,
    NotInRn,
    RnPolynomial,
    eigen_check,
    hc_eigenvalue_omega3,
    lemma_121_sweep,
    odd_power_sum_rn,
    rn_eigenvalue,
    separation_check,
    uniqueness_sweep,
)


class TestEigenCheck:
    def test_omega3_on_2(self):
        rep = eigen_check(StrictPartition((2,)), "omega3", 2)
        assert rep.is_eigen and rep.eigenvalue == 4
        assert rep.residual.is_zero()

    def test_omega1_on_1(self):
        rep = eigen_check(StrictPartition((1,)), "omega1", 2)
        assert rep.is_eigen and rep.eigenvalue == 1

    def test_omega3_on_21(self):
        rep = eigen_check(StrictPartition((2, 1)), "omega3", 3)
        assert rep.is_eigen and rep.eigenvalue == 0

    def test_matches_formula(self):
        for d in range(1, 7):
            for lam in strict_partitions(d, max_length=3):
                rep = eigen_check(lam, "omega3", 3)
                assert rep.is_eigen
                assert rep.eigenvalue == hc_eigenvalue_omega3(lam)

    def test_partition_too_long(self):
        with pytest.raises(ValueError):
            eigen_check(StrictPartition((2, 1)), "omega3", 1)

    def test_json_shape(self):
        rep = eigen_check(StrictPartition((3,)), "omega3", 2)
        obj = rep.to_json_obj()
        assert obj == {
            "partition": "3",
            "operator": "omega3",
            "eigenvalue": "18",
            "isEigen": True,
        }


class TestHcEigenvalue:
    def test_values(self):
        assert hc_eigenvalue_omega3(StrictPartition((1,))) == 0
        assert hc_eigenvalue_omega3(StrictPartition((3,))) == 18
        assert hc_eigenvalue_omega3(StrictPartition((3, 2, 1))) == 0


class TestRnPolynomial:
    def test_odd_power_sum_accepted(self):
        r = odd_power_sum_rn(3, 2)
        assert r.n == 2

    def test_first_power_sum_accepted(self):
        # sum t_i cancels to the free remainder, which is s-free
        r = odd_power_sum_rn(1, 3)
        assert rn_eigenvalue(r, StrictPartition((3, 1)), 3) == 4

    def test_even_power_sum_rejected(self):
        with pytest.raises(NotInRn):
            RnPolynomial(Polynomial(2, {(2, 0): 1, (0, 2): 1}))  # sum t_i^2

    def test_asymmetric_rejected(self):
        with pytest.raises(NotInRn):
            RnPolynomial(Polynomial.variable(2, 1))

    def test_constant_eigenvalue(self):
        one = RnPolynomial(Polynomial.constant(3, 1))
        for parts in [(1,), (3, 2), (4, 2, 1)]:
            assert rn_eigenvalue(one, StrictPartition(parts), 3) == 1

    def test_cubes_minus_square_matches_omega3(self):
        # sum t^3 - (sum t)^2 is in the algebra and evaluates like omega3
        n = 2
        p3 = Polynomial(n, {(3, 0): 1, (0, 3): 1})
        e1 = Polynomial(n, {(1, 0): 1, (0, 1): 1})
        r = RnPolynomial(p3 - e1 * e1)
        for parts in [(2,), (2, 1), (3,)]:
            lam = StrictPartition(parts)
            assert rn_eigenvalue(r, lam, n) == hc_eigenvalue_omega3(lam)


class TestSeparation:
    def test_3_vs_21(self):
        w = separation_check(StrictPartition((3,)), StrictPartition((2, 1)), 2)
        a = rn_eigenvalue(w, StrictPartition((3,)), 2)
        b = rn_eigenvalue(w, StrictPartition((2, 1)), 2)
        assert a != b

    def test_1_vs_2(self):
        w = separation_check(StrictPartition((1,)), StrictPartition((2,)), 2)
        assert rn_eigenvalue(w, StrictPartition((1,)), 2) != rn_eigenvalue(
            w, StrictPartition((2,)), 2
        )

    def test_equal_rejected(self):
        with pytest.raises(ValueError):
            separation_check(StrictPartition((2,)), StrictPartition((2,)), 2)

    def test_bound_exhaustion_raises(self):
        with pytest.raises(Inseparable):
            # max_odd=1 cannot separate partitions with equal weight
            separation_check(StrictPartition((3,)), StrictPartition((2, 1)), 2, max_odd=1)

    def test_all_pairs_small(self):
        parts = [
            lam for d in range(1, 6) for lam in strict_partitions(d, max_length=3)
        ]
        for a in range(len(parts)):
            for b in range(a + 1, len(parts)):
                w = separation_check(parts[a], parts[b], 3)
                assert rn_eigenvalue(w, parts[a], 3) != rn_eigenvalue(w, parts[b], 3)


class TestSweeps:
    def test_uniqueness_n1(self):
        report = uniqueness_sweep(1, 5)
        assert report.passed

    def test_uniqueness_n2_d3(self):
        report = uniqueness_sweep(2, 3)
        assert report.passed and report.checked >= 3

    def test_lemma121_small(self):
        report = lemma_121_sweep(2, 4)
        assert report.passed
        assert report.checked == 4 * (1 + 1 + 2 + 2 + 3)  # partitions of 0..4, len<=2
