"""Category matching matrices, mutual-connection weights and closeness ranking.

All scores are integers: field weights are integral and WAF scaling rounds
half up, so no floating point enters the totals.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from types import MappingProxyType
from typing import Mapping

from .errors import DegenerateBase, UnknownProfile
from .model import SocialGraph, mutual_communities, mutual_friends, out_neighbors
from .weights import CATEGORY_FIELDS, Category, FieldKey, SchemeKind, WeightScheme


class MutualMode(str, enum.Enum):
    RAW = "raw"
    WAF = "waf"


@dataclass(frozen=True)
class MutualWeightConfig:
    """How mutual-friend and mutual-community counts become weights.

    ``RAW`` uses the plain count. ``WAF`` scales the shared fraction of the
    base's friends (or communities) to at most ``waf``.
    """

    mode: MutualMode = MutualMode.RAW
    waf: int = 10

    def __post_init__(self):
        object.__setattr__(self, "mode", MutualMode(self.mode))
        if isinstance(self.waf, bool) or not isinstance(self.waf, int) or self.waf < 1:
            raise ValueError(f"waf must be a positive integer, got {self.waf!r}")


RAW_COUNTS = MutualWeightConfig()


@dataclass(frozen=True)
class MatchRow:
    candidate: str
    indicators: Mapping[FieldKey, int]
    weighted_total: int

    def __post_init__(self):
        object.__setattr__(self, "indicators", MappingProxyType(dict(self.indicators)))


@dataclass(frozen=True)
class MatchingMatrix:
    category: Category
    scheme_kind: SchemeKind
    rows: tuple[MatchRow, ...]

    @property
    def fields(self) -> tuple[FieldKey, ...]:
        return CATEGORY_FIELDS[self.category]

    @property
    def totals(self) -> list[int]:
        return [r.weighted_total for r in self.rows]


REPORT_COLUMNS = (
    "candidate", "contact", "personal", "interest", "education_professional",
    "mutual_friends", "mutual_communities", "total",
)


@dataclass(frozen=True)
class SimilarityReport:
    candidate: str
    contact: int
    personal: int
    interest: int
    education_professional: int
    mutual_friend_weight: int
    mutual_community_weight: int
    total: int = field(init=False)

    def __post_init__(self):
        object.__setattr__(self, "total", sum(self.components()))

    def components(self) -> tuple[int, ...]:
        return (self.contact, self.personal, self.interest, self.education_professional,
                self.mutual_friend_weight, self.mutual_community_weight)

    def as_row(self) -> dict[str, object]:
        return dict(zip(REPORT_COLUMNS, (self.candidate, *self.components(), self.total)))


def field_match(a: str | None, b: str | None) -> int:
    """1 for an exact match of two provided values, else 0.

    Two missing values do not match.
    """
    return int(a is not None and b is not None and a == b)


def _require(g: SocialGraph, base: str):
    try:
        return g.profiles[base]
    except KeyError:
        raise UnknownProfile(base) from None


def category_row(g: SocialGraph, base: str, cand: str, cat: Category,
                 scheme: WeightScheme) -> MatchRow:
    base_p = _require(g, base)
    cand_p = g.profiles.get(cand)
    indicators = {}
    for f in CATEGORY_FIELDS[Category(cat)]:
        theirs = cand_p.get(f) if cand_p is not None else None
        indicators[f] = field_match(base_p.get(f), theirs)
    total = sum(hit * scheme.weight_of(f) for f, hit in indicators.items())
    return MatchRow(cand, indicators, total)


def matching_matrix(g: SocialGraph, base: str, cat: Category,
                    scheme: WeightScheme) -> MatchingMatrix:
    _require(g, base)
    rows = tuple(category_row(g, base, c, cat, scheme) for c in out_neighbors(g, base))
    return MatchingMatrix(Category(cat), scheme.kind, rows)


def _scaled(count: int, of: int, waf: int) -> int:
    # round(count / of * waf), halves rounded up, in integer arithmetic
    return (2 * count * waf + of) // (2 * of)


def mutual_friend_weight(g: SocialGraph, base: str, cand: str,
                         cfg: MutualWeightConfig = RAW_COUNTS) -> int:
    base_p = _require(g, base)
    count = len(mutual_friends(g, base, cand))
    if cfg.mode is MutualMode.RAW:
        return count
    if not base_p.friends:
        raise DegenerateBase(f"profile {base} has no friends to scale mutual friends by")
    return _scaled(count, len(base_p.friends), cfg.waf)


def mutual_community_weight(g: SocialGraph, base: str, cand: str,
                            cfg: MutualWeightConfig = RAW_COUNTS) -> int:
    base_p = _require(g, base)
    count = len(mutual_communities(g, base, cand))
    if cfg.mode is MutualMode.RAW:
        return count
    if not base_p.communities:
        raise DegenerateBase(f"profile {base} has no communities to scale mutual communities by")
    return _scaled(count, len(base_p.communities), cfg.waf)


def total_similarity(g: SocialGraph, base: str, cand: str, scheme: WeightScheme,
                     cfg: MutualWeightConfig = RAW_COUNTS) -> SimilarityReport:
    cat = {c: category_row(g, base, cand, c, scheme).weighted_total for c in Category}
    return SimilarityReport(
        candidate=cand,
        contact=cat[Category.CONTACT],
        personal=cat[Category.PERSONAL],
        interest=cat[Category.INTEREST],
        education_professional=cat[Category.EDUCATION_PROFESSIONAL],
        mutual_friend_weight=mutual_friend_weight(g, base, cand, cfg),
        mutual_community_weight=mutual_community_weight(g, base, cand, cfg),
    )


def score_friends(g: SocialGraph, base: str, scheme: WeightScheme,
                  cfg: MutualWeightConfig = RAW_COUNTS) -> list[SimilarityReport]:
    """One report per friend of ``base``, in friend-list order."""
    _require(g, base)
    return [total_similarity(g, base, c, scheme, cfg) for c in out_neighbors(g, base)]


def rank_candidates(g: SocialGraph, base: str, scheme: WeightScheme,
                    cfg: MutualWeightConfig = RAW_COUNTS) -> list[SimilarityReport]:
    """Friends of ``base`` by descending total; ties go to the smaller id text."""
    reports = score_friends(g, base, scheme, cfg)
    return sorted(reports, key=lambda r: (-r.total, r.candidate))
