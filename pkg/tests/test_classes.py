"""Trace classes, coverings, periods, and robust independent sets."""

import itertools

import pytest
from hypothesis import given

import oracles
from conftest import graph_of, seq_of
from strategies import KINDS, sequences
from tempnet.classes import (
    CLASS_NAMES,
    ClassReport,
    bounded_realization_delta,
    classify,
    find_robust_mis,
    finite_class_membership,
    is_robust_mis,
    smallest_period,
    verify_covering,
)
from tempnet.core import StaticGraph
from tempnet.errors import ContractError, InputError


def test_journey_fig_memberships(journey_fig):
    assert finite_class_membership(journey_fig, "J1A") == (True, "a")
    assert finite_class_membership(journey_fig, "JA1") == (True, "c")
    assert finite_class_membership(journey_fig, "TC") == (False, None)
    assert finite_class_membership(journey_fig, "TCrt") == (False, None)
    assert finite_class_membership(journey_fig, "E1A") == (True, "c")
    assert finite_class_membership(journey_fig, "K") == (False, None)


def test_membership_rejects_unknowns(journey_fig):
    with pytest.raises(InputError):
        finite_class_membership(journey_fig, "XYZ")
    with pytest.raises(InputError):
        finite_class_membership(journey_fig, "TC", kind="loose")


@given(sequences(max_n=5, max_delta=4), KINDS)
def test_class_implications(seq, kind):
    member = {
        name: finite_class_membership(seq, name, kind)[0] for name in CLASS_NAMES
    }
    if member["K"]:
        assert member["TC"]  # a shared edge is a one-hop journey
    if member["E1A"]:
        assert member["J1A"] and member["JA1"]
    if member["TCrt"]:
        assert member["TC"]
    if member["TC"]:
        assert member["J1A"] and member["JA1"]


@given(sequences(max_n=4, max_delta=4))
def test_strict_membership_implies_nonstrict(seq):
    for name in CLASS_NAMES:
        if finite_class_membership(seq, name, "strict")[0]:
            assert finite_class_membership(seq, name, "nonstrict")[0]


def test_smallest_period(weekly_line):
    assert smallest_period(seq_of("abc", ["ab"], ["bc"], ["ab"], ["bc"])) == 2
    assert smallest_period(seq_of("ab", ["ab"], ["ab"], ["ab"])) == 1
    assert smallest_period(seq_of("abc", ["ab"], ["bc"], ["bc"])) is None
    assert smallest_period(weekly_line) == 7


def test_bounded_realization_examples(weekly_line):
    assert bounded_realization_delta(seq_of("abc", ["ab"], ["bc"], ["ab"], ["bc"])) == 2
    assert bounded_realization_delta(seq_of("ab", ["ab"], [], [], ["ab"])) == 3
    assert bounded_realization_delta(seq_of("ab", ["ab"], ["ab"])) == 1
    assert bounded_realization_delta(weekly_line) == 7


@given(sequences(max_n=4, max_delta=6))
def test_period_bounds_realization(seq):
    p = smallest_period(seq)
    if p is not None:
        # p consecutive snapshots hit every residue, so they union everything
        assert bounded_realization_delta(seq) <= p


def test_verify_covering_modes(covering_fig):
    assert verify_covering(covering_fig, {"d"}, "temporal")
    assert not verify_covering(covering_fig, {"a"}, "temporal")
    assert verify_covering(
        covering_fig, [{"a", "d"}, {"b", "d"}, {"b", "c"}], "evolving"
    )
    # a sits isolated in the first snapshot, so it must be selected there
    assert not verify_covering(
        covering_fig, [{"d"}, {"b", "d"}, {"b", "c"}], "evolving"
    )
    assert verify_covering(covering_fig, {"a", "b", "d"}, "permanent")
    assert not verify_covering(covering_fig, {"d"}, "permanent")


def test_verify_covering_input_errors(covering_fig):
    with pytest.raises(InputError):
        verify_covering(covering_fig, {"z"}, "temporal")
    with pytest.raises(InputError):
        verify_covering(covering_fig, [{"a"}], "evolving")  # wrong stage count
    with pytest.raises(InputError):
        verify_covering(covering_fig, {"d"}, "sometimes")


def test_robust_mis_fixtures(triangle, square, bull):
    assert find_robust_mis(triangle) is None
    assert find_robust_mis(square) == frozenset("ac")
    assert is_robust_mis(square, {"b", "d"})
    assert find_robust_mis(bull) == frozenset("ade")
    assert not is_robust_mis(bull, {"a", "c"})


def test_robust_mis_rejects_bad_inputs(square):
    with pytest.raises(InputError):
        is_robust_mis(graph_of("abcd", ["ab", "cd"]), {"a"})
    with pytest.raises(InputError):
        is_robust_mis(square, {"z"})
    with pytest.raises(ContractError):
        find_robust_mis(square, limit_n=2)


def test_robust_mis_non_mis_candidates(square):
    assert not is_robust_mis(square, {"a", "b"})  # not independent
    assert not is_robust_mis(square, {"a"})  # not maximal


def test_robust_check_matches_literal_oracle_on_all_4_node_graphs():
    nodes = "abcd"
    pairs = list(itertools.combinations(nodes, 2))
    for bits in range(1 << len(pairs)):
        edges = frozenset(p for i, p in enumerate(pairs) if bits >> i & 1)
        g = StaticGraph(frozenset(nodes), edges)
        if not g.is_connected():
            continue
        for k in range(1, 5):
            for cand in itertools.combinations(nodes, k):
                assert is_robust_mis(g, cand) == oracles.robust_mis_literal_oracle(
                    g, set(cand)
                )


def test_classify_report_shape(journey_fig):
    report = classify(journey_fig)
    assert isinstance(report, ClassReport)
    data = report.to_json()
    assert set(data) == set(CLASS_NAMES) | {
        "delta", "period", "tinterval", "tdiam", "rtdiam", "alpha"
    }
    assert data["J1A"] == {"strict": True, "nonstrict": True, "witness": "a"}
    assert data["TC"]["strict"] is False
    assert data["delta"] == 4  # only the full trace accumulates the footprint
    assert data["period"] is None
    assert data["tinterval"] is None  # some snapshot is already disconnected


def test_classify_continuous_goes_through_discretization(distance_fig):
    report = classify(distance_fig)
    assert report.classes["TC"]["strict"] is False  # nothing ever reaches a
    assert report.classes["J1A"]["strict"] is True
