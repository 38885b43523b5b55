from fractions import Fraction

import pytest

from wph.core import CyclicQuotientSingularity
from wph.errors import ParameterError
from wph.families import (
    DEFAULT_VOLUME_TARGETS,
    ample_witness,
    consecutive_family,
    degree_bound_witness,
    family_constructor,
    vanishing_witness,
    verify_all,
    volume_witness,
)
from wph.hilbert import vanishing_threshold
from wph.singularity import SingularityClass, classify_quotient


class TestConsecutiveFamily:
    def test_k2_l0(self):
        rep = consecutive_family(2, 0)
        x = rep.hypersurface
        assert x.weights.entries == (2, 2, 2, 2, 3, 3, 3)
        assert x.degree == 18
        assert x.dimension == 5
        assert x.volume() == Fraction(1, 24)
        assert rep.passed

    def test_k2_l1(self):
        rep = consecutive_family(2, 1)
        assert rep.hypersurface.degree == 24
        assert rep.hypersurface.volume() == Fraction(1, 108)
        assert rep.passed

    def test_k3_l0(self):
        rep = consecutive_family(3, 0)
        assert rep.hypersurface.weights.entries == (3,) * 5 + (4,) * 5
        assert rep.hypersurface.degree == 36
        assert rep.hypersurface.volume() == Fraction(1, 6912)
        assert rep.passed

    def test_rejects_small_k(self):
        with pytest.raises(ParameterError):
            consecutive_family(1, 0)
        with pytest.raises(ParameterError):
            consecutive_family(2, -1)

    @pytest.mark.parametrize("k", range(2, 7))
    @pytest.mark.parametrize("l", range(0, 5))
    def test_grid_all_pass_with_exact_closed_form(self, k, l):
        rep = consecutive_family(k, l)
        assert rep.passed, str(rep)
        x = rep.hypersurface
        assert x.volume() == Fraction(
            l + 3, k ** (k + 1 + l) * (k + 1) ** (2 * k - 2 + l)
        )
        assert x.dimension == 3 * k + l - 1
        assert x.amplitude == 1


class TestVanishingWitness:
    def test_n5(self):
        rep = vanishing_witness(5)
        assert rep.parameters["k"] == 2 and rep.parameters["l"] == 0
        assert rep.hypersurface.degree == 18
        assert vanishing_threshold(rep.hypersurface) == 1
        assert rep.hypersurface.volume() == Fraction(1, 24)
        assert Fraction(1, 24) < Fraction(729, 1024)
        assert rep.passed

    def test_n6(self):
        rep = vanishing_witness(6)
        assert rep.parameters["k"] == 2 and rep.parameters["l"] == 1
        assert rep.hypersurface.degree == 24
        assert rep.hypersurface.volume() == Fraction(1, 108)
        assert Fraction(1, 108) < Fraction(3**7, 5**6)
        assert rep.passed

    def test_n8(self):
        rep = vanishing_witness(8)
        assert rep.parameters["k"] == 3
        x = rep.hypersurface
        assert x.plurigenus(1) == 0 and x.plurigenus(2) == 0
        assert rep.passed

    def test_rejects_small_n(self):
        with pytest.raises(ParameterError):
            vanishing_witness(4)

    @pytest.mark.parametrize("n", range(5, 31))
    def test_threshold_at_least_k_minus_one(self, n):
        rep = vanishing_witness(n)
        assert rep.passed, str(rep)
        k = rep.parameters["k"]
        assert vanishing_threshold(rep.hypersurface) >= k - 1


class TestDegreeBoundWitness:
    def test_n7(self):
        rep = degree_bound_witness(7)
        x = rep.hypersurface
        assert x.weights.entries == (2, 2, 2, 2, 3, 3, 3, 6, 6)
        assert x.degree == 30
        assert rep.parameters["obstruction_degree"] == 6
        assert Fraction(6) >= Fraction(7 * 4, 9)
        assert rep.passed

    def test_n10(self):
        rep = degree_bound_witness(10)
        assert rep.parameters["k"] == 3
        assert rep.parameters["obstruction_degree"] == 12
        assert Fraction(12) >= Fraction(10 * 7, 9)
        assert rep.passed

    def test_n9_equality_boundary(self):
        rep = degree_bound_witness(9)
        assert rep.parameters["obstruction_degree"] == 6
        assert Fraction(6) == Fraction(9 * 6, 9)
        assert rep.passed

    def test_rejects_small_n(self):
        with pytest.raises(ParameterError):
            degree_bound_witness(6)

    def test_pure_bound_arithmetic_up_to_100(self):
        for n in range(7, 101):
            k = (n - 1) // 3
            assert 9 * k * (k + 1) >= n * (n - 3)


class TestAmpleWitness:
    def test_n2(self):
        rep = ample_witness(2)
        x = rep.hypersurface
        assert x.weights.entries == (1, 1, 2, 5)
        assert x.degree == 10
        from wph.hilbert import variables_present

        for t in range(5):
            assert 3 not in variables_present(x.weights, t)
        assert rep.passed

    def test_n3(self):
        rep = ample_witness(3)
        assert rep.hypersurface.weights.entries == (1, 1, 1, 1, 5)
        assert rep.hypersurface.degree == 10
        assert rep.parameters["d"] == 5
        assert rep.passed

    def test_n4(self):
        rep = ample_witness(4)
        assert rep.hypersurface.weights.entries == (1, 1, 1, 1, 2, 7)
        assert rep.hypersurface.degree == 14
        assert rep.parameters["d"] == 7
        assert rep.passed

    def test_n1_genus_two_curve(self):
        rep = ample_witness(1)
        x = rep.hypersurface
        assert x.weights.entries == (1, 1, 3)
        assert x.degree == 6
        assert x.dimension == 1
        assert x.volume() == 2  # degree of the canonical class: 2g - 2 with g = 2
        assert any("genus 2" in note for note in rep.notes)
        assert rep.passed

    def test_rejects_nonpositive(self):
        with pytest.raises(ParameterError):
            ample_witness(0)

    @pytest.mark.parametrize("n", range(1, 21))
    def test_range_passes(self, n):
        rep = ample_witness(n)
        assert rep.passed, str(rep)
        expected_obstruction = n + 3 if n % 2 == 0 else n + 2
        assert rep.parameters["d"] == expected_obstruction


class TestVolumeWitness:
    def test_half(self):
        rep = volume_witness(1, 2)
        x = rep.hypersurface
        assert rep.parameters["b"] == 3 and rep.parameters["a"] == 5
        assert x.weights.entries == (1, 1, 1, 1, 5, 2, 3)
        assert x.degree == 15
        assert x.volume() == Fraction(1, 2)
        assert rep.passed

    def test_two_thirds(self):
        rep = volume_witness(2, 3)
        x = rep.hypersurface
        assert rep.parameters["b"] == 2 and rep.parameters["t"] == 1
        assert rep.parameters["a"] == 5
        assert x.weights.entries == (1,) * 9 + (5, 3, 2)
        assert x.degree == 20
        assert x.weights.total() == 19
        assert x.volume() == Fraction(2, 3)
        assert rep.passed

    def test_integer_volume(self):
        rep = volume_witness(3, 1)
        x = rep.hypersurface
        assert rep.parameters["b"] == 1 and rep.parameters["a"] == 2
        assert x.weights.entries == (1, 2, 1, 1)
        assert x.degree == 6
        assert x.volume() == 3
        assert rep.passed

    def test_member_point_terminal(self):
        rep = volume_witness(5, 7)
        x = rep.hypersurface
        m = rep.parameters["unit_weights"]
        s_index = m + 1
        member = x.member_type_at(s_index)
        assert member == CyclicQuotientSingularity(7, (1,) * m + (rep.parameters["b"],))
        assert classify_quotient(member) == SingularityClass.TERMINAL

    def test_rejects_non_coprime(self):
        with pytest.raises(ParameterError):
            volume_witness(2, 4)

    def test_rejects_bad_overrides(self):
        with pytest.raises(ParameterError):
            volume_witness(1, 2, b=2)  # 2*1 is not 1 mod 2
        with pytest.raises(ParameterError):
            volume_witness(1, 2, a=2, b=3)  # gcd(a, s) = 2
        with pytest.raises(ParameterError):
            volume_witness(1, 2, a=3, b=3)  # gcd(a, b) = 3

    def test_override_reproduces_other_choices(self):
        rep = volume_witness(1, 2, a=7, b=3)
        assert rep.hypersurface.volume() == Fraction(1, 2)
        assert rep.passed

    def test_idempotent(self):
        first = volume_witness(5, 7)
        second = volume_witness(5, 7)
        assert first == second

    @pytest.mark.parametrize("r,s", DEFAULT_VOLUME_TARGETS)
    def test_acceptance_targets(self, r, s):
        rep = volume_witness(r, s)
        x = rep.hypersurface
        assert rep.passed, str(rep)
        assert x.weights.total() == x.degree - 1
        assert x.volume() == Fraction(r, s)


class TestVerifyAll:
    def test_small_slice_passes(self):
        agg = verify_all(
            consecutive_ks=(2,),
            consecutive_ls=(0, 1),
            vanishing_ns=(5, 6),
            bound_ns=(7,),
            ample_ns=(1, 2, 3),
            volume_targets=((1, 2), (3, 1)),
        )
        assert agg.passed
        assert len(agg.reports) == 10

    def test_deterministic_order(self):
        a = verify_all(
            consecutive_ks=(2,),
            consecutive_ls=(0,),
            vanishing_ns=(5,),
            bound_ns=(7,),
            ample_ns=(2,),
            volume_targets=((1, 2),),
        )
        b = verify_all(
            consecutive_ks=(2,),
            consecutive_ls=(0,),
            vanishing_ns=(5,),
            bound_ns=(7,),
            ample_ns=(2,),
            volume_targets=((1, 2),),
        )
        assert [r.family for r in a.reports] == [r.family for r in b.reports]
        assert a == b

    def test_constructor_lookup(self):
        assert family_constructor("prop") is consecutive_family
        with pytest.raises(ParameterError):
            family_constructor("nonsense")
