"""Permutations, subgroup enumeration, and type recognition."""

import pytest
from hypothesis import given, strategies as st

from kleintwist.errors import NotASubgroup
from kleintwist.perm import (GroupType, PermGroup, Permutation, all_subgroups,
                             are_conjugate, as_subgroup, easy_klein, generate,
                             is_characteristic_under_inner, isomorphism_type,
                             klein_group, normalizer, subgroups_of_type,
                             symmetric_group)

S4 = symmetric_group(4)
S4_ELEMS = S4.sorted_elements()


def cyc(*cycles):
    return Permutation.from_cycles(4, cycles)


class TestPermutation:
    def test_identity_and_call(self):
        e = Permutation.identity(4)
        assert all(e(i) == i for i in range(1, 5))
        assert e.is_identity()

    def test_compose_right_to_left(self):
        a = cyc((1, 2))
        b = cyc((2, 3))
        # (a*b)(2) = a(b(2)) = a(3) = 3
        assert (a * b)(2) == 3
        assert (b * a)(2) == 1

    def test_from_cycles_roundtrip(self):
        p = cyc((1, 3, 2, 4))
        assert p.cycle_string() == "(1324)"
        assert Permutation.from_cycles(4, p.cycles()) == p

    def test_inverse_and_power(self):
        p = cyc((1, 2, 3))
        assert p * p.inverse() == Permutation.identity(4)
        assert p ** 3 == Permutation.identity(4)
        assert p ** -1 == p.inverse()

    def test_order_and_sign(self):
        assert cyc((1, 2)).order() == 2
        assert cyc((1, 2, 3)).order() == 3
        assert cyc((1, 2), (3, 4)).order() == 2
        assert cyc((1, 2, 3, 4)).order() == 4
        assert cyc((1, 2)).sign() == -1
        assert cyc((1, 2, 3)).sign() == 1
        assert cyc((1, 2, 3, 4)).sign() == -1

    def test_rejects_non_permutation(self):
        with pytest.raises(ValueError):
            Permutation([1, 1, 3])

    @given(st.sampled_from(S4_ELEMS), st.sampled_from(S4_ELEMS))
    def test_sign_multiplicative(self, a, b):
        assert (a * b).sign() == a.sign() * b.sign()

    @given(st.sampled_from(S4_ELEMS))
    def test_order_divides_group_order(self, a):
        assert 24 % a.order() == 0


class TestGroups:
    def test_symmetric_orders(self):
        for n in range(1, 6):
            import math
            assert symmetric_group(n).order == math.factorial(n)

    def test_klein_groups(self):
        diag = klein_group()
        assert diag.order == 4
        assert diag.sorted_elements() == [
            Permutation.identity(4), cyc((1, 2), (3, 4)),
            cyc((1, 3), (2, 4)), cyc((1, 4), (2, 3))]
        easy = easy_klein()
        assert easy.order == 4
        assert cyc((1, 2)) in easy and cyc((3, 4)) in easy
        assert diag != easy

    def test_generate_closure(self):
        g = generate(4, [cyc((1, 2)), cyc((1, 2, 3, 4))])
        assert g.order == 24

    def test_as_subgroup_rejects_unclosed(self):
        with pytest.raises(NotASubgroup):
            as_subgroup(S4, [Permutation.identity(4), cyc((1, 2)), cyc((1, 3))])
        with pytest.raises(NotASubgroup):
            as_subgroup(S4, [cyc((1, 2))])        # identity missing

    def test_conjugate_by(self):
        g = cyc((1, 3))
        moved = easy_klein().conjugate_by(g)
        assert cyc((2, 3)) in moved or cyc((1, 4)) in moved or moved.order == 4


class TestSubgroupCensus:
    def test_s4_census(self):
        subs = all_subgroups(S4)
        assert len(subs) == 30
        by_type = {}
        for H in subs:
            by_type[isomorphism_type(H).name] = by_type.get(isomorphism_type(H).name, 0) + 1
        assert by_type == {"Trivial": 1, "Z2": 9, "Z3": 4, "Klein": 4,
                           "Z4": 3, "S3": 4, "D4": 3, "A4": 1, "S4": 1}

    def test_klein_classification(self):
        kleins = subgroups_of_type(S4, "Klein")
        assert len(kleins) == 4
        characteristic = [H for H in kleins if is_characteristic_under_inner(S4, H)]
        assert characteristic == [klein_group()]
        rest = [H for H in kleins if H != klein_group()]
        assert len(rest) == 3
        for a in rest:
            for b in rest:
                assert are_conjugate(S4, a, b) is not None
        # the normal copy is not conjugate to a plain copy
        assert are_conjugate(S4, klein_group(), rest[0]) is None

    def test_d4_classification(self):
        d4s = subgroups_of_type(S4, "D4")
        assert len(d4s) == 3
        diag = klein_group()
        for H in d4s:
            assert all(v in H for v in diag)
        for a in d4s:
            for b in d4s:
                w = are_conjugate(S4, a, b)
                assert w is not None
                assert a.conjugate_by(w) == b

    def test_normalizers(self):
        assert normalizer(S4, klein_group()).order == 24
        n = normalizer(S4, easy_klein())
        assert n.order == 8
        assert isomorphism_type(n).name == "D4"


class TestTypeRecognition:
    def test_small_types(self):
        assert isomorphism_type(generate(4, [cyc((1, 2))])).name == "Z2"
        assert isomorphism_type(generate(4, [cyc((1, 2, 3))])).name == "Z3"
        assert isomorphism_type(generate(4, [cyc((1, 2, 3, 4))])).name == "Z4"
        assert isomorphism_type(klein_group()).name == "Klein"
        assert isomorphism_type(generate(4, [cyc((1, 2)), cyc((1, 2, 3))])).name == "S3"
        assert isomorphism_type(generate(4, [cyc((1, 2, 3)), cyc((1, 2), (3, 4))])).name == "A4"
        assert isomorphism_type(S4).name == "S4"

    def test_z4_vs_klein_distinguished(self):
        z4 = generate(4, [cyc((1, 2, 3, 4))])
        assert isomorphism_type(z4).name == "Z4"
        assert isomorphism_type(z4) != isomorphism_type(klein_group())

    def test_order_guard(self):
        with pytest.raises(ValueError):
            isomorphism_type(symmetric_group(5))

    def test_abelian_order8_types(self):
        z2z2z2 = generate(8, [Permutation.from_cycles(8, [(1, 2)]),
                              Permutation.from_cycles(8, [(3, 4)]),
                              Permutation.from_cycles(8, [(5, 6)])])
        assert isomorphism_type(z2z2z2).name == "Z2xZ2xZ2"
        z2z4 = generate(6, [Permutation.from_cycles(6, [(1, 2)]),
                            Permutation.from_cycles(6, [(3, 4, 5, 6)])])
        assert isomorphism_type(z2z4).name == "Z2xZ4"
        z8 = generate(8, [Permutation.from_cycles(8, [(1, 2, 3, 4, 5, 6, 7, 8)])])
        assert isomorphism_type(z8).name == "Z8"

    def test_grouptype_is_value(self):
        t = isomorphism_type(klein_group())
        assert t == GroupType("Klein", 4, True, ((1, 1), (2, 3)))
