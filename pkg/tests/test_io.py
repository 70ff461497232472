"""Serialization round-trips and golden text formats."""

from fractions import Fraction

import pytest
from hypothesis import given

from conftest import seq_of
from strategies import interval_graphs, sequences
from tempnet.closure import strict_closure
from tempnet.errors import InputError
from tempnet.io import (
    closure_to_dot,
    closure_to_json,
    dump_graph,
    dump_linkstream,
    format_time,
    journey_from_json,
    journey_to_json,
    load_graph,
    load_linkstream,
    static_to_dot,
)
from tempnet.journeys import Journey


def test_format_time_spellings():
    assert format_time(None) is None
    assert format_time(float("inf")) == "inf"
    assert format_time(3) == 3
    assert format_time(Fraction(6, 2)) == 3
    assert format_time(Fraction(501, 100)) == "501/100"


@given(sequences())
def test_snapshot_json_roundtrip(seq):
    assert load_graph(dump_graph(seq)) == seq


@given(interval_graphs())
def test_interval_json_roundtrip(ig):
    import json

    payload = dump_graph(ig)
    assert load_graph(json.dumps(payload)) == ig


@given(interval_graphs())
def test_linkstream_roundtrip_keeps_presence(ig):
    back = load_linkstream(dump_linkstream(ig), latency=ig.latency)
    # the CSV carries no span and drops isolated nodes; compare presences
    assert back.edges == {e: ivs for e, ivs in ig.edges.items()}


def test_linkstream_rejects_bad_header_and_rows():
    with pytest.raises(InputError):
        load_linkstream("a,b,c\n")
    with pytest.raises(InputError):
        load_linkstream("u,v,start,end\na,b,0\n")


def test_linkstream_canonicalizes_endpoint_order():
    g = load_linkstream("u,v,start,end\nb,a,0,2\n")
    assert ("a", "b") in g.edges


@pytest.mark.parametrize(
    "payload",
    ["not json", "[]", '{"format":"nope"}', '{"format":"snapshots"}'],
)
def test_load_graph_rejects_malformed(payload):
    with pytest.raises(InputError):
        load_graph(payload)


def test_lifetime_key_restores_span():
    dumped = dump_graph(
        load_graph(
            '{"format":"intervals","latency":1,"nodes":["a","b"],'
            '"edges":[{"u":"a","v":"b","intervals":[[2,3]]}],"lifetime":[0,9]}'
        )
    )
    assert dumped["lifetime"] == [0, 9]


def test_closure_dot_is_stable(journey_fig):
    c = strict_closure(journey_fig)
    dot = closure_to_dot(c)
    assert dot == closure_to_dot(c)
    assert dot.startswith("digraph closure {\n")
    assert '"a" -> "b";' in dot


def test_closure_json_shape(journey_fig):
    data = closure_to_json(strict_closure(journey_fig))
    assert data["nodes"] == ["a", "b", "c", "d", "e"]
    assert ["a", "b"] in data["arcs"]


def test_static_dot(journey_fig):
    from tempnet.core import footprint

    dot = static_to_dot(footprint(journey_fig))
    assert dot.startswith("graph g {\n")
    assert '"a" -- "b";' in dot


def test_journey_json_roundtrip_discrete():
    j = Journey((("a", "b", 1), ("b", "c", 2)), "strict", None)
    assert journey_from_json(journey_to_json(j)) == j


def test_journey_json_roundtrip_continuous():
    z = Fraction(1, 100)
    j = Journey((("a", "b", Fraction(3, 2)),), "nonstrict", z)
    back = journey_from_json(journey_to_json(j), latency=z)
    assert back == j
    assert back.hops[0][2] == Fraction(3, 2)


def test_journey_json_rejects_bad_kind():
    with pytest.raises(InputError):
        journey_from_json({"hops": [], "kind": "loose"})
