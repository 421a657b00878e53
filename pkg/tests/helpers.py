"""Small graph builders shared by the tests."""

import itertools
import random
from pathlib import Path

from oracles import (
    adjacency_stack, as_distance, digraph_classes, edge_slots, floyd_warshall, level_distances,
)
from profilelink import UserProfile, backward_distance, build_snapshot, forward_deleted_distance

FIXTURES = Path(__file__).parent / "fixtures"
EXPERIMENT_DIR = FIXTURES / "experiment"


def experiment_dumps():
    return sorted(EXPERIMENT_DIR.glob("*.txt"))


def graph_from_edges(edges, nodes=(), communities=None, fields=None):
    """Snapshot where every node in ``nodes`` or on an edge tail is ingested."""
    communities = communities or {}
    fields = fields or {}
    friends = {}
    for n in nodes:
        friends.setdefault(n, [])
    for u, v in edges:
        friends.setdefault(u, []).append(v)
    for n in list(communities) + list(fields):
        friends.setdefault(n, [])
    return build_snapshot(
        UserProfile(n, fields=fields.get(n, {}), friends=tuple(fs),
                    communities=tuple(communities.get(n, ())))
        for n, fs in friends.items()
    )


def check_distances_exhaustive(n, up_to_isomorphism=True):
    """Check both distances on every ordered pair of every digraph on ``n`` nodes.

    With ``up_to_isomorphism`` one graph per isomorphism class is used; since
    every ordered pair of each class representative is checked, this covers
    every labeled (graph, pair) combination. Returns the number of checks.
    """
    if up_to_isomorphism:
        masks = digraph_classes(n)
    else:
        masks = list(range(1 << (n * (n - 1))))
    labels = [str(1000 + i) for i in range(n)]
    slots = edge_slots(n)
    graphs = [
        graph_from_edges([(labels[a], labels[b]) for bit, (a, b) in enumerate(slots) if int(m) >> bit & 1],
                         nodes=labels)
        for m in masks
    ]
    A = adjacency_stack(masks, n)
    plain = [level_distances(A, s) for s in range(n)]
    checks = 0
    for u, v in itertools.permutations(range(n), 2):
        cut = A.copy()
        cut[:, u, v] = False
        forward = level_distances(cut, u)[:, v]
        backward = plain[v][:, u]
        for g, f, b in zip(graphs, forward.tolist(), backward.tolist()):
            assert forward_deleted_distance(g, labels[u], labels[v]) == (None if f < 0 else f)
            assert backward_distance(g, labels[u], labels[v]) == (None if b < 0 else b)
            checks += 1
    return checks


def check_distances_random(n_graphs, max_nodes, seed):
    """Compare both distances with Floyd-Warshall on random digraphs."""
    rng = random.Random(seed)
    checks = 0
    for _ in range(n_graphs):
        n = rng.randint(2, max_nodes)
        nodes = [str(rng.randrange(10**6)) for _ in range(n)]
        nodes = list(dict.fromkeys(nodes))
        density = rng.uniform(0.05, 0.5)
        edges = {(a, b) for a in nodes for b in nodes if a != b and rng.random() < density}
        g = graph_from_edges(sorted(edges), nodes=nodes)
        full = floyd_warshall(nodes, edges)
        for u, v in itertools.permutations(nodes, 2):
            cut = floyd_warshall(nodes, edges - {(u, v)}) if (u, v) in edges else full
            assert forward_deleted_distance(g, u, v) == as_distance(cut[u, v])
            assert backward_distance(g, u, v) == as_distance(full[v, u])
            checks += 1
    return checks
