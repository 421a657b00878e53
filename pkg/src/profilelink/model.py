"""Profiles, the immutable snapshot graph and elementary neighbourhood queries."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from functools import cached_property
from types import MappingProxyType
from typing import Iterable, Mapping

from .errors import DuplicateProfile
from .validation import check_distinct, check_id
from .weights import FieldKey


@dataclass(frozen=True)
class UserProfile:
    """One user: identity, canonical field values and outgoing links.

    ``fields`` only holds provided values; a missing key means the user left
    the field blank or hid it.
    """

    id: str
    display_name: str = ""
    fields: Mapping[FieldKey, str] = field(default_factory=dict)
    friends: tuple[str, ...] = ()
    communities: tuple[str, ...] = ()

    def __post_init__(self):
        check_id(self.id)
        friends = tuple(check_id(f, "friend id") for f in self.friends)
        communities = tuple(check_id(c, "community id") for c in self.communities)
        if len(set(friends)) != len(friends):
            raise ValueError(f"profile {self.id} lists a friend twice")
        if self.id in friends:
            raise ValueError(f"profile {self.id} lists itself as a friend")
        if len(set(communities)) != len(communities):
            raise ValueError(f"profile {self.id} lists a community twice")
        fields = {}
        for k, v in self.fields.items():
            if not isinstance(v, str) or not v:
                raise ValueError(f"profile {self.id}: field {k} must be a nonempty string")
            fields[FieldKey(k)] = v
        object.__setattr__(self, "fields", MappingProxyType(fields))
        object.__setattr__(self, "friends", friends)
        object.__setattr__(self, "communities", communities)

    def __hash__(self):
        return hash((self.id, self.display_name, self.friends, self.communities,
                     frozenset(self.fields.items())))

    def get(self, f: FieldKey | str) -> str | None:
        return self.fields.get(FieldKey(f))


@dataclass(frozen=True, eq=False)
class SocialGraph:
    """Immutable snapshot of ingested profiles.

    Edge ``u -> v`` exists iff ``v`` is in ``profiles[u].friends``. Friend ids
    with no ingested profile are stubs: they receive edges, have no out-edges
    and carry no fields or communities.
    """

    profiles: Mapping[str, UserProfile]

    def __post_init__(self):
        object.__setattr__(self, "profiles", MappingProxyType(dict(self.profiles)))

    def __eq__(self, other):
        if not isinstance(other, SocialGraph):
            return NotImplemented
        return dict(self.profiles) == dict(other.profiles)

    def __hash__(self):
        return hash(frozenset(self.profiles.values()))

    # Snapshots never change, so copies can share the instance.
    def __copy__(self):
        return self

    def __deepcopy__(self, memo):
        return self

    def __contains__(self, u) -> bool:
        return u in self.profiles

    def __len__(self) -> int:
        return len(self.profiles)

    def __repr__(self):
        return f"SocialGraph(profiles={len(self.profiles)}, edges={self.n_edges})"

    @cached_property
    def _in_pointers(self) -> Mapping[str, tuple[str, ...]]:
        incoming: dict[str, list[str]] = {}
        for u, p in self.profiles.items():
            for v in p.friends:
                incoming.setdefault(v, []).append(u)
        return MappingProxyType({v: tuple(us) for v, us in incoming.items()})

    @cached_property
    def item_frequency(self) -> Mapping[str, int]:
        """How many ingested profiles hold each item (see :func:`profile_items`)."""
        counts = Counter()
        for p in self.profiles.values():
            counts.update(profile_items(p))
        return MappingProxyType(dict(counts))

    @property
    def n_edges(self) -> int:
        return sum(len(p.friends) for p in self.profiles.values())

    def nodes(self) -> list[str]:
        """Ingested ids followed by stub ids, each in first-seen order."""
        seen = dict.fromkeys(self.profiles)
        for p in self.profiles.values():
            seen.update(dict.fromkeys(p.friends))
        return list(seen)

    def stubs(self) -> list[str]:
        return [n for n in self.nodes() if n not in self.profiles]

    def in_pointers(self, v: str) -> tuple[str, ...]:
        return self._in_pointers.get(v, ())

    def communities_of(self, u: str) -> tuple[str, ...]:
        p = self.profiles.get(u)
        return p.communities if p is not None else ()


def profile_items(p: UserProfile) -> set[str]:
    """Items a profile can share with others: communities and tagged field values.

    Field values are tagged with their key, so a city and a hometown of the
    same name are different items.
    """
    items = {f"community:{c}" for c in p.communities}
    items.update(f"{k.value}:{v}" for k, v in p.fields.items())
    return items


def build_snapshot(records: Iterable[UserProfile]) -> SocialGraph:
    profiles: dict[str, UserProfile] = {}
    for rec in records:
        if rec.id in profiles:
            raise DuplicateProfile(rec.id)
        profiles[rec.id] = rec
    return SocialGraph(profiles)


def out_neighbors(g: SocialGraph, u: str) -> list[str]:
    p = g.profiles.get(u)
    return list(p.friends) if p is not None else []


def mutual_friends(g: SocialGraph, u: str, v: str) -> set[str]:
    """Profiles ``w`` with edges ``u -> w`` and ``w -> v``."""
    check_distinct(u, v)
    pointers = set(g.in_pointers(v))
    return {w for w in out_neighbors(g, u) if w in pointers}


def mutual_communities(g: SocialGraph, u: str, v: str) -> set[str]:
    check_distinct(u, v)
    return set(g.communities_of(u)) & set(g.communities_of(v))

