"""Structural and interest features for an ordered pair of users.

Distances are hop counts along directed edges; ``None`` stands for
unreachable and is written as ``inf`` in CSV output.
"""

from __future__ import annotations

import enum
import math
from collections import deque
from dataclasses import astuple, dataclass, fields
from fractions import Fraction
from typing import Sequence

from .errors import InvalidPath
from .model import SocialGraph, mutual_friends, out_neighbors, profile_items
from .validation import check_distinct
from .weights import CATEGORY_FIELDS, Category


class InterestSource(str, enum.Enum):
    COMMUNITIES = "communities"
    FIELDS = "fields"
    BOTH = "both"


def degrees(g: SocialGraph, u: str) -> tuple[int, int]:
    """``(in_degree, out_degree)``; stubs have out-degree 0."""
    return len(g.in_pointers(u)), len(out_neighbors(g, u))


def _bfs(g: SocialGraph, src: str, dst: str, skip_edge=None) -> int | None:
    if src == dst:
        return 0
    dist = {src: 0}
    queue = deque([src])
    while queue:
        x = queue.popleft()
        for y in out_neighbors(g, x):
            if y in dist or (x, y) == skip_edge:
                continue
            if y == dst:
                return dist[x] + 1
            dist[y] = dist[x] + 1
            queue.append(y)
    return None


def shortest_path(g: SocialGraph, u: str, v: str) -> list[str] | None:
    """One shortest directed path from ``u`` to ``v`` (inclusive), or None."""
    parent = {u: None}
    queue = deque([u])
    while queue:
        x = queue.popleft()
        if x == v:
            path = []
            while x is not None:
                path.append(x)
                x = parent[x]
            return path[::-1]
        for y in out_neighbors(g, x):
            if y not in parent:
                parent[y] = x
                queue.append(y)
    return None


def forward_deleted_distance(g: SocialGraph, u: str, v: str) -> int | None:
    """Shortest ``u -> v`` distance once the direct edge ``(u, v)`` is removed."""
    check_distinct(u, v)
    return _bfs(g, u, v, skip_edge=(u, v))


def backward_distance(g: SocialGraph, u: str, v: str) -> int | None:
    """Shortest ``v -> u`` distance in the unmodified graph."""
    check_distinct(u, v)
    return _bfs(g, v, u)


def interest_items(g: SocialGraph, u: str,
                   source: InterestSource = InterestSource.COMMUNITIES) -> set[str]:
    source = InterestSource(source)
    items: set[str] = set()
    if source in (InterestSource.COMMUNITIES, InterestSource.BOTH):
        items.update(f"community:{c}" for c in g.communities_of(u))
    p = g.profiles.get(u)
    if p is not None and source in (InterestSource.FIELDS, InterestSource.BOTH):
        for f in CATEGORY_FIELDS[Category.INTEREST]:
            if f in p.fields:
                items.add(f"{f.value}:{p.fields[f]}")
    return items


def _ratio(num: int, den: int) -> Fraction:
    return Fraction(num, den) if den else Fraction(0)


def interest_features(g: SocialGraph, u: str, v: str,
                      source: InterestSource = InterestSource.COMMUNITIES):
    """``(mutual, n_u, n_v, mutual / n_u, mutual / n_v)``; empty lists give ratio 0."""
    check_distinct(u, v)
    iu, iv = interest_items(g, u, source), interest_items(g, v, source)
    mutual = len(iu & iv)
    return mutual, len(iu), len(iv), _ratio(mutual, len(iu)), _ratio(mutual, len(iv))


def path_metrics(path: Sequence[str], g: SocialGraph | None = None) -> tuple[int, int]:
    """``(path_length, hop_count)``: edges along the path and users strictly inside it.

    When ``g`` is given every consecutive pair must be an edge of ``g``.
    """
    if not path:
        raise InvalidPath("path needs at least one node")
    if g is not None:
        for a, b in zip(path, path[1:]):
            if b not in out_neighbors(g, a):
                raise InvalidPath(f"no edge {a} -> {b}")
    n = len(path)
    return n - 1, max(n - 2, 0)


@dataclass(frozen=True)
class FeatureVector:
    in_u: int
    in_v: int
    out_u: int
    out_v: int
    mutual_friends_count: int
    forward_deleted_distance: int | None
    backward_distance: int | None
    mutual_interests: int
    interests_u: int
    interests_v: int
    ratio_u: Fraction
    ratio_v: Fraction

    def as_floats(self) -> list[float]:
        return [math.inf if x is None else float(x) for x in astuple(self)]


FEATURE_NAMES = tuple(f.name for f in fields(FeatureVector))


def feature_vector(g: SocialGraph, u: str, v: str,
                   source: InterestSource = InterestSource.COMMUNITIES) -> FeatureVector:
    check_distinct(u, v)
    in_u, out_u = degrees(g, u)
    in_v, out_v = degrees(g, v)
    return FeatureVector(
        in_u, in_v, out_u, out_v,
        len(mutual_friends(g, u, v)),
        forward_deleted_distance(g, u, v),
        backward_distance(g, u, v),
        *interest_features(g, u, v, source),
    )


def uniqueness_similarity(g: SocialGraph, a: str, b: str) -> float:
    """Sum of ``1 / ln(frequency)`` over items both profiles hold.

    Items are community memberships and field values tagged with their key.
    Rare shared items count for more; any shared item has frequency >= 2.
    """
    check_distinct(a, b)
    pa, pb = g.profiles.get(a), g.profiles.get(b)
    if pa is None or pb is None:
        return 0.0
    freq = g.item_frequency
    shared = sorted(profile_items(pa) & profile_items(pb))
    return math.fsum(1.0 / math.log(freq[item]) for item in shared)
