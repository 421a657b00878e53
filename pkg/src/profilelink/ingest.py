"""Dump parsing, canonicalization and the line-delimited snapshot format.

Raw dumps are the text files an extractor saves per profile: ``key=value``
lines for profile information plus hyperlinks to friends and communities,
e.g. ``...Main#FriendsList.aspx?uid=12760208310579966367``. Only those token
conventions are understood; everything else in a dump is ignored.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Mapping

from .errors import ConfigError, DuplicateProfile, MissingUserId, ParseError
from .model import SocialGraph, UserProfile, build_snapshot
from .validation import dedupe
from .weights import FieldKey

FRIEND_TOKEN = "FriendsList.aspx?uid="
COMMUNITY_TOKEN = "Community.aspx?cmm="
_FRIEND_RE = re.compile(re.escape(FRIEND_TOKEN) + r"([0-9]+)")
_COMMUNITY_RE = re.compile(re.escape(COMMUNITY_TOKEN) + r"([0-9]+)")
_DIGITS_RE = re.compile(r"[0-9]+")

# Raw key spellings seen in extractor output, after case folding and
# whitespace collapsing. Canonical key names map to themselves.
FIELD_ALIASES: Mapping[str, FieldKey] = {
    **{f.value: f for f in FieldKey},
    "college": FieldKey.COLLEGE_UNIVERSITY,
    "college/university": FieldKey.COLLEGE_UNIVERSITY,
    "college university": FieldKey.COLLEGE_UNIVERSITY,
    "university": FieldKey.COLLEGE_UNIVERSITY,
    "company/organization": FieldKey.COMPANY,
    "organization": FieldKey.COMPANY,
    "job description": FieldKey.OCCUPATION,
    "sex": FieldKey.GENDER,
    "lan.speak": FieldKey.LANGUAGE,
    "languages": FieldKey.LANGUAGE,
    "language speak": FieldKey.LANGUAGE,
    "languages speak": FieldKey.LANGUAGE,
    "languages i speak": FieldKey.LANGUAGE,
    "status": FieldKey.RELATIONSHIP_STATUS,
    "relationship status": FieldKey.RELATIONSHIP_STATUS,
    "activity": FieldKey.ACTIVITIES,
    "home town": FieldKey.HOMETOWN,
    "area code": FieldKey.PIN_CODE,
    "pin code": FieldKey.PIN_CODE,
    "pin postal code": FieldKey.PIN_CODE,
    "postal code": FieldKey.PIN_CODE,
    "zip": FieldKey.PIN_CODE,
    "zip code": FieldKey.PIN_CODE,
    "zip/postal code": FieldKey.PIN_CODE,
}


@dataclass(frozen=True)
class RawRecord:
    self_id: str | None = None
    display_name: str | None = None
    raw_fields: tuple[tuple[str, str], ...] = ()
    friend_ids: tuple[str, ...] = ()
    community_ids: tuple[str, ...] = ()


def extract_tokens(dump_text: str) -> RawRecord:
    """Scan one dump for link tokens and ``key=value`` lines.

    Lines carrying a link token are link lines and never parsed as
    ``key=value``. Repeated ids and keys keep their first occurrence.
    """
    friends = dedupe(_FRIEND_RE.findall(dump_text))
    communities = dedupe(_COMMUNITY_RE.findall(dump_text))
    self_id = display_name = None
    fields: dict[str, str] = {}
    seen_keys = set()
    for line in dump_text.splitlines():
        if FRIEND_TOKEN in line or COMMUNITY_TOKEN in line or "=" not in line:
            continue
        key, _, value = line.partition("=")
        key, value = key.strip().casefold(), value.strip()
        if not key or key in seen_keys:
            continue
        seen_keys.add(key)
        if key == "userid":
            if _DIGITS_RE.fullmatch(value):
                self_id = value
        elif key == "name":
            display_name = value
        else:
            fields[key] = value
    return RawRecord(self_id, display_name, tuple(fields.items()), tuple(friends), tuple(communities))


def canonical_text(value: str) -> str:
    """Trim, collapse whitespace runs to one space and case-fold."""
    return " ".join(value.split()).casefold()


def canonical_field_key(raw_key: str) -> FieldKey | None:
    return FIELD_ALIASES.get(" ".join(raw_key.split()).casefold())


def canonicalize(raw: RawRecord, aliases: Mapping[tuple[FieldKey, str], str] | None = None) -> UserProfile:
    """Map a raw record onto the 20 canonical fields.

    Unknown keys are dropped, as are values that canonicalize to the empty
    string. ``aliases`` maps ``(field, variant)`` to a canonical value, as
    loaded by :func:`load_aliases`. A raw key that maps onto an already
    filled field is ignored (first wins).
    """
    if raw.self_id is None:
        raise MissingUserId("dump has no userid")
    aliases = aliases or {}
    fields: dict[FieldKey, str] = {}
    for key, value in raw.raw_fields:
        f = canonical_field_key(key)
        if f is None or f in fields:
            continue
        value = canonical_text(value)
        value = aliases.get((f, value), value)
        if value:
            fields[f] = value
    friends = tuple(f for f in dedupe(raw.friend_ids) if f != raw.self_id)
    return UserProfile(
        id=raw.self_id,
        display_name=(raw.display_name or "").strip(),
        fields=fields,
        friends=friends,
        communities=tuple(dedupe(raw.community_ids)),
    )


def to_raw(p: UserProfile) -> RawRecord:
    """Inverse view of :func:`canonicalize`, used to re-run it on its own output."""
    return RawRecord(
        self_id=p.id,
        display_name=p.display_name,
        raw_fields=tuple((k.value, v) for k, v in p.fields.items()),
        friend_ids=p.friends,
        community_ids=p.communities,
    )


def parse_aliases(text: str, source=None) -> dict[tuple[FieldKey, str], str]:
    """Parse ``field_key<TAB>variant<TAB>canonical`` lines.

    Chains (a -> b, b -> c) are resolved to their final value so that
    canonicalization stays idempotent; cycles are rejected.
    """
    table: dict[tuple[FieldKey, str], str] = {}
    for lineno, line in enumerate(text.splitlines(), 1):
        if not line.strip() or line.lstrip().startswith("#"):
            continue
        parts = line.split("\t")
        if len(parts) != 3:
            raise ConfigError("expected field_key<TAB>variant<TAB>canonical_value", lineno, source)
        key, variant, canon = parts
        try:
            f = FieldKey(key.strip())
        except ValueError:
            raise ConfigError(f"unknown field key {key.strip()!r}", lineno, source) from None
        variant, canon = canonical_text(variant), canonical_text(canon)
        if not variant or not canon:
            raise ConfigError("empty alias value", lineno, source)
        if variant != canon:
            table.setdefault((f, variant), canon)
    resolved = {}
    for (f, variant), canon in table.items():
        seen = {variant}
        while (f, canon) in table:
            if canon in seen:
                raise ConfigError(f"alias cycle through {canon!r} for {f.value}", source=source)
            seen.add(canon)
            canon = table[(f, canon)]
        resolved[(f, variant)] = canon
    return resolved


def load_aliases(path) -> dict[tuple[FieldKey, str], str]:
    with open(path, encoding="utf-8") as fh:
        return parse_aliases(fh.read(), source=str(path))


def read_dump(path, aliases=None) -> UserProfile:
    with open(path, encoding="utf-8") as fh:
        return canonicalize(extract_tokens(fh.read()), aliases)


def ingest_dumps(paths: Iterable, aliases=None) -> SocialGraph:
    return build_snapshot(read_dump(p, aliases) for p in paths)


# -- normalized snapshot format ---------------------------------------------

_MEMBERS = ("id", "name", "fields", "friends", "communities")


def profile_to_json(p: UserProfile) -> str:
    doc = {
        "id": p.id,
        "name": p.display_name,
        "fields": {k.value: v for k, v in p.fields.items()},
        "friends": list(p.friends),
        "communities": list(p.communities),
    }
    return json.dumps(doc, ensure_ascii=False, separators=(",", ":"))


def dumps_snapshot(g: SocialGraph) -> str:
    return "".join(profile_to_json(g.profiles[k]) + "\n" for k in sorted(g.profiles))


def _string_list(value, member, lineno, source):
    if not isinstance(value, list) or not all(isinstance(x, str) for x in value):
        raise ParseError(f"{member!r} must be an array of strings", lineno, source)
    return tuple(value)


def profile_from_json(line: str, lineno=None, source=None) -> UserProfile:
    try:
        doc = json.loads(line)
    except json.JSONDecodeError as e:
        raise ParseError(f"invalid JSON: {e.msg}", lineno, source) from None
    if not isinstance(doc, dict):
        raise ParseError("record must be a JSON object", lineno, source)
    unknown = set(doc) - set(_MEMBERS)
    if unknown:
        raise ParseError(f"unknown members {sorted(unknown)}", lineno, source)
    if not isinstance(doc.get("id"), str):
        raise ParseError("record needs a string 'id'", lineno, source)
    name = doc.get("name", "")
    if not isinstance(name, str):
        raise ParseError("'name' must be a string", lineno, source)
    raw_fields = doc.get("fields", {})
    if not isinstance(raw_fields, dict):
        raise ParseError("'fields' must be an object", lineno, source)
    fields = {}
    for k, v in raw_fields.items():
        try:
            f = FieldKey(k)
        except ValueError:
            raise ParseError(f"unknown field key {k!r}", lineno, source) from None
        if not isinstance(v, str) or not v or canonical_text(v) != v:
            raise ParseError(f"field {k!r} must be a nonempty canonical string", lineno, source)
        fields[f] = v
    friends = _string_list(doc.get("friends", []), "friends", lineno, source)
    communities = _string_list(doc.get("communities", []), "communities", lineno, source)
    try:
        return UserProfile(doc["id"], name, fields, friends, communities)
    except ValueError as e:
        raise ParseError(str(e), lineno, source) from None


def loads_snapshot(text: str, source=None) -> SocialGraph:
    profiles: dict[str, UserProfile] = {}
    for lineno, line in enumerate(text.splitlines(), 1):
        if not line.strip():
            continue
        p = profile_from_json(line, lineno, source)
        if p.id in profiles:
            raise DuplicateProfile(p.id)
        profiles[p.id] = p
    return build_snapshot(profiles.values())


def write_snapshot(g: SocialGraph, path) -> None:
    Path(path).write_text(dumps_snapshot(g), encoding="utf-8")


def read_snapshot(path) -> SocialGraph:
    return loads_snapshot(Path(path).read_text(encoding="utf-8"), source=str(path))
