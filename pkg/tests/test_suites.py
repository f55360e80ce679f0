import pytest

from coxverify import reflection as refl
from coxverify import suites
from coxverify.errors import CoxeterInputError, PreconditionError
from coxverify.report import PASS
from helpers import group


def _all_pass(report):
    return all(c.status == PASS for c in report.checks)


def test_classify_suite_contents():
    rep = suites.classify_suite("affA1", group("affA1"))
    assert rep.suite == "classify" and _all_pass(rep)
    by_id = {c.id: c for c in rep.checks}
    assert by_id["classification"].witness["classification"] == "affine"
    assert by_id["irreducible"].witness["irreducible"] is True
    assert by_id["diameter"].witness["diameter"] == 1


def test_power_reduced_infinite_groups():
    rep = suites.power_reduced_suite("affA1", group("affA1"), (1, 2), 50)
    assert _all_pass(rep) and len(rep.checks) == 50
    assert rep.parameters["lengths"] == [2 * k for k in range(1, 51)]
    rep = suites.power_reduced_suite("affA2", group("affA2"), (1, 2, 3), 10)
    assert _all_pass(rep)
    assert rep.parameters["lengths"] == [3 * k for k in range(1, 11)]


def test_power_reduced_hypothesis_gate():
    with pytest.raises(PreconditionError, match="infinite"):
        suites.power_reduced_suite("A2", group("A2"), (1, 2), 5)
    with pytest.raises(PreconditionError, match="finite"):
        suites.power_reduced_suite("affA1", group("affA1"), (1, 2), 5,
                                   negative_control=True)
    with pytest.raises(CoxeterInputError):
        suites.power_reduced_suite("affA1", group("affA1"), (1, 1), 5)
    reducible = group("affA1")  # irreducible; build a reducible one instead
    from coxverify.context import CoxeterMatrix, build_context
    ctx = build_context(CoxeterMatrix.decode([[1, 2, 2], [2, 1, 0], [2, 0, 1]]))
    with pytest.raises(PreconditionError, match="irreducible"):
        suites.power_reduced_suite("x", ctx, (1, 2, 3), 5)


def test_negative_control_first_failure():
    rep = suites.power_reduced_suite("A2", group("A2"), (1, 2), 10,
                                     negative_control=True)
    assert _all_pass(rep)
    witness = rep.checks[0].witness
    assert witness["first_unreduced_k"] == 2
    assert witness["coxeter_element_order"] == 3


def test_admissible_reduced_suite():
    rep = suites.admissible_reduced_suite("affA1", group("affA1"), (1, 2), 12)
    assert _all_pass(rep)
    assert rep.parameters["census"] == {str(k): 1 for k in range(1, 13)}
    # triangle diagrams are tournaments: exactly one sink per orientation,
    # hence exactly one playable sequence per length
    rep = suites.admissible_reduced_suite("tri334", group("tri334"), (1, 2, 3), 7)
    assert _all_pass(rep)
    assert rep.parameters["census"] == {str(k): 1 for k in range(1, 8)}
    # the labelled path branches: the middle orientations expose two sinks
    rep = suites.admissible_reduced_suite("affC2", group("affC2"), (1, 2, 3), 7)
    assert _all_pass(rep)
    assert sum(rep.parameters["census"].values()) > 7


def test_no_coverage_warning_on_empty_budget():
    rep = suites.admissible_reduced_suite("affA1", group("affA1"), (1, 2), 0)
    assert rep.checks[0].witness == {"warning": "no coverage"}
    assert rep.checks[0].status == PASS
    rep = suites.power_reduced_suite("affA1", group("affA1"), (1, 2), 0)
    assert rep.checks[0].witness == {"warning": "no coverage"}
    rep = suites.growth_suite("affA1", group("affA1"), (1, 2), 0)
    assert rep.checks[0].witness == {"warning": "no coverage"}


def test_prop_mt_suite_on_catalog():
    for name in ("A2", "B2", "affA1"):
        rep = suites.prop_mt_suite(name, group(name), suites.default_coxeter_word(group(name)), 8)
        assert _all_pass(rep)
        witness = rep.checks[0].witness
        assert witness["classes"] >= 2
        if name != "affA1":
            # finite groups absorb letters, so classes collide; in the
            # affine rank-2 group every playable prefix is distinct
            assert witness["sequences"] > witness["classes"]
    # no finiteness or irreducibility gate
    from coxverify.context import CoxeterMatrix, build_context
    ctx = build_context(CoxeterMatrix.decode([[1, 2], [2, 1]]))
    assert _all_pass(suites.prop_mt_suite("A1xA1", ctx, (1, 2), 4))


def test_growth_suite_monotone():
    rep = suites.growth_suite("affA1", group("affA1"), (1, 2), 20)
    assert _all_pass(rep)
    lengths = rep.parameters["lengths"]
    assert lengths == sorted(lengths) and len(set(lengths)) == 20
    assert all(lengths[k - 1] >= k for k in range(1, 21))


def test_growth_control_stabilizes_at_longest():
    rep = suites.growth_suite("A2", group("A2"), (1, 2), 10, negative_control=True)
    assert _all_pass(rep)
    witness = rep.checks[0].witness
    assert witness["stabilized_at_k"] == 2
    assert witness["length"] == 3


def test_w0_suite_examples():
    for name, expected in (("A1", 1), ("A2", 3), ("B2", 4)):
        ctx = group(name)
        rep = suites.w0_suite(name, ctx, suites.default_coxeter_word(ctx))
        assert _all_pass(rep)
        witness = rep.checks[0].witness
        assert witness["length_of_longest_element"] == expected
        assert len(witness["sequence"]) == expected
    a2 = group("A2")
    rep = suites.w0_suite("A2", a2, (1, 2))
    assert rep.checks[0].witness["sequence"] == [1, 2, 1]
    b2 = group("B2")
    rep = suites.w0_suite("B2", b2, (1, 2))
    seq = rep.checks[0].witness["sequence"]
    assert refl.demazure_product(b2, seq) == refl.longest_element(b2)
    with pytest.raises(PreconditionError, match="finite"):
        suites.w0_suite("affA1", group("affA1"), (1, 2))


def test_w0_found_sequences_are_reduced_words_for_w0():
    for name in ("G2", "A3", "H3"):
        ctx = group(name)
        rep = suites.w0_suite(name, ctx, suites.default_coxeter_word(ctx))
        assert _all_pass(rep)
        seq = tuple(rep.checks[0].witness["sequence"])
        assert refl.is_reduced(ctx, seq)
        assert refl.word_to_element(ctx, seq) == refl.longest_element(ctx)


def test_census_checks_clean_on_catalog_sample():
    ctx = group("affC2")
    checked, violations = suites.b_preservation_check(ctx, 50, 12, seed=3)
    assert checked == 50 and not violations
    checked, violations = suites.reduced_agreement_check(group("B2"), 6)
    assert checked == 1 + 2 + 4 + 8 + 16 + 32 + 64 and not violations
    checked, violations = suites.omega_equivariance_all(ctx)
    assert checked == 6 * 3 * 9 and not violations
    checked, violations, notes = suites.omega_initial_final_all(ctx, 6)
    assert not violations and notes  # strict-iff counterexamples exist here
    checked, violations = suites.omega_order_census(ctx, (1, 2, 3), 8)
    assert checked > 0 and not violations
    checked, violations = suites.alternation_census(ctx, 7)
    assert checked > 0 and not violations
    checked, violations = suites.adjacent_phi_census(ctx, (1, 2, 3), 7)
    assert checked > 0 and not violations
    checked, violations = suites.poset_cross_check(group("affA2"), (1, 2, 3), 5)
    assert checked > 0 and not violations
    checked, violations = suites.phi_injectivity_census(ctx, (1, 2, 3), 6)
    assert checked > 0 and not violations
    checked, violations = suites.orientation_roundtrip_check(ctx)
    assert checked == 6 and not violations


def test_verify_all_single_group_passes():
    rep = suites.verify_all_suite([("B2", group("B2"))], words=40)
    assert rep.suite == "verify-all" and rep.group == "B2"
    assert _all_pass(rep)
    ids = [c.id for c in rep.checks]
    assert any("w0:c=21" in i for i in ids)       # every Coxeter word covered
    assert any("prop-mt" in i for i in ids)
    assert not any("power-reduced" in i for i in ids)  # finite: no power suite


def test_verify_all_budget_zero_flags_no_coverage():
    rep = suites.verify_all_suite([("affA1", group("affA1"))], k_max=0, n_max=0,
                                  words=1)
    warned = [c for c in rep.checks if (c.witness or {}).get("warning") == "no coverage"]
    assert warned and _all_pass(rep)
