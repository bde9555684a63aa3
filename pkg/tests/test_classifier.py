import pytest

from stratsys.classifier import (apq_families, compare_kronecker_enumeration,
                                 enumerate_css_kronecker, exceptional_of_dims,
                                 expected_y_postprojective,
                                 expected_y_preinjective, family5_index_zero,
                                 kronecker_css_list, kronecker_orbit_pool,
                                 kronecker_regular_selfext_check,
                                 regular_css_search, sincerity_profile,
                                 verify_family_uniqueness,
                                 y_search_postprojective, y_search_preinjective)
from stratsys.modules import ref_dims
from stratsys.quiver import Quiver, kronecker
from stratsys.systems import check_css


def test_kron_list_m2_bound3_counts():
    instances = kronecker_css_list(2, 3)
    assert len(instances) == 16  # 1 + 4 + 4 + 4 + 3
    assert all(inst.report.passed for inst in instances)


def test_kron_list_m3_instance():
    instances = kronecker_css_list(3, 1)
    wanted = [i for i in instances if i.family_id == 2 and i.params.get("i") == 1]
    assert wanted and wanted[0].report.passed


def test_kron_list_item_one_is_i2_p1():
    inst = kronecker_css_list(2, 0)[0]
    assert inst.family_id == 1
    assert inst.system.describe() == "(I_2, P_1)"


def test_kron_family5_index_zero_is_complete_system():
    inst = family5_index_zero(2)
    assert inst.report.passed
    assert inst.flags


def test_kron_orbit_pool_m3_cap13():
    pool = kronecker_orbit_pool(3, 13)
    assert {ref_dims(r) for r in pool} == {(1, 0), (3, 1), (8, 3),
                                           (0, 1), (1, 3), (3, 8)}


def test_kron_enumeration_matches_list():
    for m, cap in ((2, 9), (3, 13)):
        report = compare_kronecker_enumeration(m, cap)
        assert report.passed, report.summary()
        assert any("family 5 extends to i=0" in f for f in report.flags)


def test_kron_enumeration_instance_count_m2_cap9():
    found, _ = enumerate_css_kronecker(2, 9)
    # 1 + 4 + 4 + 4 + 3 truncated instances plus the flagged (tau I_2, I_1)
    assert len(found) == 17


def test_kron_regular_selfext():
    for m in (2, 3):
        report = kronecker_regular_selfext_check(m)
        assert report.passed, report.summary()


def test_y_post_expected_cases():
    assert expected_y_postprojective(2, 3, 0) == {0, 4}
    assert expected_y_postprojective(2, 3, 3) == {1}
    assert expected_y_postprojective(2, 3, 1) == set()
    assert expected_y_postprojective(2, 3, 6) == {0, 4}


def test_y_pre_expected_cases():
    assert expected_y_preinjective(2, 3, 0) == set()
    assert expected_y_preinjective(2, 3, 3) == {2}
    assert expected_y_preinjective(2, 3, 5) == {0, 4}


def test_y_search_small_bound():
    found, report = y_search_postprojective(2, 3, 6)
    assert report.passed, report.summary()
    assert (0, 0) in found and (0, 4) in found and (3, 1) in found
    found, report = y_search_preinjective(2, 3, 6)
    assert report.passed, report.summary()
    assert (3, 2) in found and (5, 0) in found and (5, 4) in found
    assert not any(t == 0 for t, _ in found)


def test_y_search_p_equals_one():
    _, report = y_search_postprojective(1, 2, 4)
    assert report.passed, report.summary()
    _, report = y_search_preinjective(1, 2, 4)
    assert report.passed, report.summary()


def test_sincerity_profile_2_3():
    profile = sincerity_profile(2, 3, 8)
    assert profile.report.passed, profile.report.summary()
    assert profile.minimal_preproj[0] == 2  # p - i at i = 0
    assert profile.minimal_preproj[4] == 0  # source projective already sincere
    assert profile.minimal_preinj[1] == 1   # i at i = 1
    assert profile.minimal_preinj[0] == 0
    # the catalogued long-arm ranges disagree with computation at one vertex;
    # that ends up flagged, never silently passed
    assert any("preinj minimal exponent at vertex 2" in f
               for f in profile.report.flags)


def test_apq_families_2_3():
    instances = apq_families(2, 3, 12)
    assert len(instances) == 22
    assert all(inst.report.passed for inst in instances), [
        inst.label() for inst in instances if not inst.report.passed]
    assert sorted({i.family_id for i in instances}) == [1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 12]


def test_apq_family_examples():
    instances = apq_families(2, 3, 12)
    fam1 = next(i for i in instances if i.family_id == 1)
    assert fam1.system.describe() == "(I_4, E^(inf)_1, E^(0)_2, E^(0)_1, P_0)"
    fam2 = next(i for i in instances if i.family_id == 2)
    assert fam2.listed_x.describe() == "tau^-1 P_2"  # p != q branch
    fam9 = next(i for i in instances if i.family_id == 9 and i.params["t"] == 5)
    assert fam9.listed_x.describe() == "tau^6 I_4"
    assert fam9.system.modules[-1].describe() == "tau^5 I_0"


def test_apq_family_uniqueness_spot_checks():
    instances = apq_families(2, 3, 6)
    for inst in instances[:6]:
        report = verify_family_uniqueness(2, 3, inst, exponent_bound=10)
        assert report.passed, report.summary()
        assert not any("uniqueness violated" in f for f in report.flags)


def test_apq_families_1_2():
    instances = apq_families(1, 2, 4)
    assert instances
    assert all(inst.report.passed for inst in instances), [
        (i.label(), i.report.summary()) for i in instances if not i.report.passed]


def test_apq_families_equal_arms():
    # p = q engages the other branch of the first-member formulas
    for p, bound in ((2, 8), (3, 6)):
        instances = apq_families(p, p, bound)
        assert instances
        assert all(inst.report.passed for inst in instances), [
            (i.label(), i.report.summary()) for i in instances if not i.report.passed]
        fam2 = next(i for i in instances if i.family_id == 2)
        assert fam2.listed_x.describe() == f"tau^-{p - 1} P_0"


def test_y_search_2_2_full_period():
    found, report = y_search_postprojective(2, 2, 8)
    assert report.passed, report.summary()
    found, report = y_search_preinjective(2, 2, 8)
    assert report.passed, report.summary()


def test_family_instances_agree_with_fully_structural_check():
    # materialize every member of mid-size instances and re-run the axioms
    # with no symbolic shortcuts at all
    from stratsys.modules import materialize, ref_plain
    from stratsys.systems import StratSystem

    instances = apq_families(2, 3, 6)
    big = [i for i in instances if i.params.get("t") == 6] + instances[:2]
    assert big
    for inst in big:
        plain = StratSystem(inst.system.quiver,
                            tuple(ref_plain(materialize(m)) for m in inst.system.modules))
        structural = check_css(plain)
        assert structural.passed == inst.report.passed
        assert structural.passed


WILD3 = Quiver.make([1, 2, 3], [(2, 1, "b1"), (2, 1, "b2"),
                                (3, 2, "c1"), (3, 2, "c2")])


def test_regular_css_search_preconditions():
    with pytest.raises(ValueError):
        regular_css_search(kronecker(3), 4)  # two vertices only
    from stratsys.quiver import canonical_apq

    with pytest.raises(ValueError):
        regular_css_search(canonical_apq(2, 3), 4)  # Euclidean


def test_regular_css_search_cap6_none():
    witness, report = regular_css_search(WILD3, 6)
    assert witness is None
    assert any(v.axiom == "no-witness" for v in report.violations)


def test_regular_css_search_cap8_witness():
    witness, report = regular_css_search(WILD3, 8)
    assert witness is not None
    assert check_css(witness).passed
    assert witness.size == 3


def test_exceptional_of_dims_unit_root():
    rep = exceptional_of_dims(WILD3, (2, 1, 0))
    assert rep is not None
    assert rep.dims == (2, 1, 0)
    assert exceptional_of_dims(WILD3, (1, 1, 1)) is None  # <d,d> != 1
