import pytest

from stratsys.modules import materialize, pair_hom, ref_preinj, ref_preproj
from stratsys.reps import direct_sum, make_rep, projective
from stratsys.systems import (CandidatePool, NotOrderableError, StratSystem,
                              check_css, check_ss, extend_to_complete,
                              filtration_multiplicity, is_basic_tilting,
                              is_filtration_finite, system_from, tilting_order)
from stratsys.tubes import fg_system


def _kron_refs(q):
    return (ref_preproj(q, 1, 0), ref_preproj(q, 2, 0),
            ref_preinj(q, 1, 0), ref_preinj(q, 2, 0))


def test_check_ss_passes_i2_p1(kron2):
    p1, p2, i1, i2 = _kron_refs(kron2)
    assert check_ss(StratSystem(kron2, (i2, p1))).passed


def test_check_ss_reversed_fails_with_named_violation(kron2):
    p1, p2, i1, i2 = _kron_refs(kron2)
    report = check_ss(StratSystem(kron2, (p1, i2)))
    assert not report.passed
    violation = report.violations[0]
    assert violation.axiom.startswith("ext-vanishing")
    assert violation.subject == (2, 1)
    assert violation.value == 2


def test_check_ss_fg_with_p0():
    fg = fg_system(2, 3)
    quiv = fg.quiver
    extended = StratSystem(quiv, (ref_preinj(quiv, 4, 0),) + fg.modules
                           + (ref_preproj(quiv, 0, 0),))
    assert check_css(extended).passed


def test_check_css_incomplete(kron2):
    fg = fg_system(2, 3)
    report = check_css(fg)
    assert not report.passed
    assert any(v.note == "incomplete" for v in report.violations)


def test_check_css_repeated_module_fails(kron2):
    p1, p2, _, _ = _kron_refs(kron2)
    report = check_css(StratSystem(kron2, (p1, p2, p1)))
    assert not report.passed


def test_order_reversal_sanity(kron2):
    # any reordering that breaks a nonzero Hom pair must fail
    p1, p2, _, _ = _kron_refs(kron2)
    good = StratSystem(kron2, (p1, p2))
    assert check_ss(good).passed
    assert pair_hom(p1, p2) != 0
    assert not check_ss(StratSystem(kron2, (p2, p1))).passed


def test_incli_bound_over_generated_systems(kron2):
    # every passing system in sight respects size <= vertex count
    systems = [StratSystem(kron2, (_kron_refs(kron2)[3], _kron_refs(kron2)[0])),
               fg_system(2, 3), fg_system(3, 3)]
    for s in systems:
        if check_ss(s).passed:
            assert s.size <= s.quiver.n


def test_tilting_order_projectives(kron2):
    ordered = tilting_order([ref_preproj(kron2, 1, 0), ref_preproj(kron2, 2, 0)])
    assert [m.describe() for m in ordered.modules] == ["P_1", "P_2"]
    assert check_css(ordered).passed


def test_tilting_order_mixed(kron2):
    ordered = tilting_order([ref_preproj(kron2, 2, 0), ref_preproj(kron2, 1, 1)])
    assert [m.describe() for m in ordered.modules] == ["P_2", "tau^-1 P_1"]
    assert check_css(ordered).passed


def test_tilting_order_loop_rejected(kron2):
    p1 = ref_preproj(kron2, 1, 0)
    with pytest.raises(NotOrderableError):
        tilting_order([p1, p1])


def test_is_basic_tilting(kron2):
    good = is_basic_tilting([ref_preproj(kron2, 1, 0), ref_preproj(kron2, 2, 0)])
    assert good.passed
    bad = is_basic_tilting([ref_preproj(kron2, 1, 0), ref_preinj(kron2, 2, 0)])
    assert not bad.passed  # Ext^1(I_2, P_1) != 0


def test_filtration_composition_factors(kron2):
    system = StratSystem(kron2, (ref_preinj(kron2, 2, 0), ref_preproj(kron2, 1, 0)))
    assert filtration_multiplicity(projective(kron2, 2), system) == (1, 2)


def test_filtration_of_member_is_unit(kron2):
    system = StratSystem(kron2, (ref_preinj(kron2, 2, 0), ref_preproj(kron2, 1, 0)))
    assert filtration_multiplicity(projective(kron2, 1), system) == (0, 1)


def test_filtration_regular_not_filtered(kron2):
    r = make_rep(kron2, (1, 1), {"a1": [[1]], "a2": [[1]]})
    system = StratSystem(kron2, (ref_preproj(kron2, 1, 0), ref_preproj(kron2, 2, 0)))
    assert filtration_multiplicity(r, system) is None


def test_filtration_dimension_identity(kron2):
    system = StratSystem(kron2, (ref_preproj(kron2, 1, 0), ref_preproj(kron2, 2, 0)))
    m = direct_sum([projective(kron2, 1), projective(kron2, 2), projective(kron2, 2)])
    mults = filtration_multiplicity(m, system)
    assert mults is not None
    total = [0, 0]
    for mult, ref in zip(mults, system.modules):
        dims = materialize(ref).dims
        total = [t + mult * d for t, d in zip(total, dims)]
    assert tuple(total) == m.dims


def test_filtration_finite_matches_corollary(kron2):
    p1, p2, i1, i2 = _kron_refs(kron2)
    assert not is_filtration_finite(StratSystem(kron2, (i2, p1)))
    assert is_filtration_finite(StratSystem(kron2, (p1, p2)))
    assert is_filtration_finite(StratSystem(kron2, (ref_preproj(kron2, 1, 1),
                                                    ref_preproj(kron2, 2, 1))))


def test_extend_single_slot_front_and_back(kron2):
    p1 = ref_preproj(kron2, 1, 0)
    before, report = extend_to_complete(StratSystem(kron2, (p1,)), positions=[0])
    assert before is not None and before.describe() == "(I_2, P_1)"
    assert not report.flags  # unique completion, no inconsistency
    after, report = extend_to_complete(StratSystem(kron2, (p1,)), positions=[1])
    assert after is not None and after.describe() == "(P_1, P_2)"


def test_extend_fg_outer_finds_family_one():
    fg = fg_system(2, 3)
    completion, report = extend_to_complete(fg, pool=CandidatePool(exponent_bound=4),
                                            positions="outer")
    assert completion is not None
    assert check_css(completion).passed
    # the listed (S_{p+q-1}, F, G, P_0) completion is among the valid ones
    quiv = fg.quiver
    listed = StratSystem(quiv, (ref_preinj(quiv, 4, 0),) + fg.modules
                         + (ref_preproj(quiv, 0, 0),))
    assert check_css(listed).passed


def test_extend_already_complete_returns_input(kron2):
    s = StratSystem(kron2, (ref_preinj(kron2, 2, 0), ref_preproj(kron2, 1, 0)))
    out, report = extend_to_complete(s)
    assert out is s


def test_extend_unique_slot_after_fixing_y():
    fg = fg_system(2, 3)
    quiv = fg.quiver
    with_y = StratSystem(quiv, fg.modules + (ref_preproj(quiv, 0, 0),))
    completion, report = extend_to_complete(with_y, positions=[0],
                                            pool=CandidatePool(exponent_bound=6))
    assert completion is not None
    assert completion.modules[0].describe() == "I_4"  # S_{p+q-1} at the source
    assert not any("uniqueness" in f for f in report.flags)


def test_system_from_mixed_inputs(kron2):
    s = system_from(kron2, [projective(kron2, 1), ref_preproj(kron2, 2, 0)])
    assert s.size == 2
    assert check_css(s).passed
