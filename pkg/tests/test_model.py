import copy
import random

import pytest
from hypothesis import given, strategies as st

from helpers import graph_from_edges
from profilelink import (
    DuplicateProfile, InvalidId, InvalidPair, UserProfile, build_snapshot, mutual_communities,
    mutual_friends, out_neighbors,
)

A, B, C, U, V, W = "1", "2", "3", "10", "20", "30"


def test_reciprocal_pair():
    g = build_snapshot([UserProfile(A, friends=(B,)), UserProfile(B, friends=(A,))])
    assert out_neighbors(g, A) == [B]
    assert out_neighbors(g, B) == [A]
    assert g.n_edges == 2


def test_duplicate_profile_rejected():
    with pytest.raises(DuplicateProfile) as exc:
        build_snapshot([UserProfile(A), UserProfile(A)])
    assert exc.value.profile_id == A
    assert A in str(exc.value)


def test_stub_has_no_out_edges():
    g = graph_from_edges([(A, B)])
    assert out_neighbors(g, A) == [B]
    assert out_neighbors(g, B) == []
    assert B not in g
    assert g.stubs() == [B]


def test_out_neighbors_preserves_order():
    g = graph_from_edges([(A, C), (A, B)])
    assert out_neighbors(g, A) == [C, B]


def test_unknown_id_has_no_neighbors():
    assert out_neighbors(graph_from_edges([]), "99") == []


@pytest.mark.parametrize("bad", ["", "12a", "-1", "+1", "1" * 21, "１２", 12])
def test_profile_id_must_be_ascii_digits(bad):
    with pytest.raises(InvalidId):
        UserProfile(bad)


def test_ids_are_text_not_numbers():
    g = build_snapshot([UserProfile("007"), UserProfile("7")])
    assert len(g) == 2
    UserProfile("1" * 20)


@pytest.mark.parametrize("kwargs", [
    {"friends": (B, B)},
    {"friends": (A,)},
    {"communities": ("5", "5")},
    {"fields": {"city": ""}},
])
def test_profile_invariants(kwargs):
    with pytest.raises(ValueError):
        UserProfile(A, **kwargs)


def test_unknown_field_key_rejected():
    with pytest.raises(ValueError):
        UserProfile(A, fields={"favorite_color": "red"})


def test_snapshot_is_immutable():
    g = graph_from_edges([(A, B)])
    with pytest.raises(TypeError):
        g.profiles[C] = UserProfile(C)
    with pytest.raises(AttributeError):
        g.profiles[A].friends.append(C)
    with pytest.raises(TypeError):
        g.profiles[A].fields["city"] = "x"
    assert copy.deepcopy(g) is g


def test_mutual_friends_directional():
    assert mutual_friends(graph_from_edges([(U, W), (W, V)]), U, V) == {W}
    assert mutual_friends(graph_from_edges([(U, W), (V, W)]), U, V) == set()


def test_mutual_friends_same_node():
    with pytest.raises(InvalidPair):
        mutual_friends(graph_from_edges([]), U, U)


def _scan_oracle(edges, nodes, u, v):
    return {w for w in nodes if (u, w) in edges and (w, v) in edges}


def test_mutual_friends_matches_exhaustive_scan():
    rng = random.Random(7)
    nodes = [str(i) for i in range(1, 11)]
    for _ in range(200):
        edges = {(a, b) for a in nodes for b in nodes if a != b and rng.random() < 0.3}
        g = graph_from_edges(sorted(edges), nodes=nodes)
        for u in nodes:
            for v in nodes:
                if u != v:
                    assert mutual_friends(g, u, v) == _scan_oracle(edges, nodes, u, v)


def test_mutual_communities():
    g = graph_from_edges([(U, V)], communities={U: ["18034370", "8312468"], V: ["8312468"]})
    assert mutual_communities(g, U, V) == {"8312468"}
    g = graph_from_edges([], communities={U: ["1"], V: ["2"]})
    assert mutual_communities(g, U, V) == set()
    g = graph_from_edges([(U, V)], communities={U: ["1"]})
    assert V not in g
    assert mutual_communities(g, U, V) == set()
    with pytest.raises(InvalidPair):
        mutual_communities(g, U, U)



@st.composite
def digraphs(draw, reciprocal=False):
    nodes = [str(i) for i in range(1, draw(st.integers(2, 8)) + 1)]
    pairs = [(a, b) for a in nodes for b in nodes if a < b] if reciprocal else \
        [(a, b) for a in nodes for b in nodes if a != b]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    edges = list(chosen)
    if reciprocal:
        edges += [(b, a) for a, b in chosen]
    comms = {n: draw(st.lists(st.sampled_from("123456"), unique=True)) for n in nodes}
    return graph_from_edges(edges, nodes=nodes, communities=comms), nodes


@given(digraphs())
def test_round_trips_friend_lists(data):
    g, nodes = data
    rebuilt = build_snapshot(g.profiles.values())
    for n in nodes:
        assert out_neighbors(rebuilt, n) == list(g.profiles[n].friends)


@given(digraphs())
def test_mutual_friends_subset_and_community_symmetry(data):
    g, nodes = data
    for u in nodes:
        for v in nodes:
            if u != v:
                assert mutual_friends(g, u, v) <= set(out_neighbors(g, u))
                assert mutual_communities(g, u, v) == mutual_communities(g, v, u)


@given(digraphs(reciprocal=True))
def test_mutual_friends_symmetric_on_reciprocal_graphs(data):
    g, nodes = data
    for u in nodes:
        for v in nodes:
            if u != v:
                assert mutual_friends(g, u, v) == mutual_friends(g, v, u)
