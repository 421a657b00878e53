"""Field catalog, categories and the two built-in weight schemes."""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from types import MappingProxyType
from typing import Mapping

from .errors import ConfigError


class Category(str, enum.Enum):
    EDUCATION_PROFESSIONAL = "education_professional"
    PERSONAL = "personal"
    INTEREST = "interest"
    CONTACT = "contact"


class FieldKey(str, enum.Enum):
    # educational & professional
    EDUCATION = "education"
    DEGREE = "degree"
    COLLEGE_UNIVERSITY = "college_university"
    INDUSTRY = "industry"
    OCCUPATION = "occupation"
    COMPANY = "company"
    # personal
    GENDER = "gender"
    LANGUAGE = "language"
    RELIGION = "religion"
    ETHNICITY = "ethnicity"
    RELATIONSHIP_STATUS = "relationship_status"
    # interest
    SPORTS = "sports"
    ACTIVITIES = "activities"
    SMOKING = "smoking"
    DRINKING = "drinking"
    # contact
    HOMETOWN = "hometown"
    PIN_CODE = "pin_code"
    CITY = "city"
    STATE = "state"
    COUNTRY = "country"

    @property
    def category(self) -> Category:
        return _CATEGORY_OF[self]


_F = FieldKey
CATEGORY_FIELDS: Mapping[Category, tuple[FieldKey, ...]] = MappingProxyType({
    Category.EDUCATION_PROFESSIONAL: (
        _F.EDUCATION, _F.DEGREE, _F.COLLEGE_UNIVERSITY, _F.INDUSTRY, _F.OCCUPATION, _F.COMPANY,
    ),
    Category.PERSONAL: (
        _F.GENDER, _F.LANGUAGE, _F.RELIGION, _F.ETHNICITY, _F.RELATIONSHIP_STATUS,
    ),
    Category.INTEREST: (_F.SPORTS, _F.ACTIVITIES, _F.SMOKING, _F.DRINKING),
    Category.CONTACT: (_F.HOMETOWN, _F.PIN_CODE, _F.CITY, _F.STATE, _F.COUNTRY),
})
_CATEGORY_OF = {f: cat for cat, fields in CATEGORY_FIELDS.items() for f in fields}

# Depth-ordered weights for the three categories that form a hierarchy.
# Hometown sits at 3 alongside city, as printed in the weight table.
HIERARCHY_WEIGHTS: Mapping[FieldKey, int] = MappingProxyType({
    _F.HOMETOWN: 3, _F.PIN_CODE: 4, _F.CITY: 3, _F.STATE: 2, _F.COUNTRY: 1,
    _F.EDUCATION: 1, _F.DEGREE: 2, _F.COLLEGE_UNIVERSITY: 3,
    _F.INDUSTRY: 1, _F.OCCUPATION: 2, _F.COMPANY: 3,
})


def category_of(f: FieldKey | str) -> Category:
    return _CATEGORY_OF[FieldKey(f)]


class SchemeKind(str, enum.Enum):
    BINARY = "binary"
    HIERARCHY = "hierarchy"
    CUSTOM = "custom"


@dataclass(frozen=True)
class WeightScheme:
    """Non-negative integer weight for every one of the 20 fields.

    ``BINARY`` schemes only hold 0/1 weights. ``HIERARCHY`` holds exactly the
    built-in hierarchy table. Anything else produced by overrides is
    ``CUSTOM``.
    """

    kind: SchemeKind
    weights: Mapping[FieldKey, int] = field(repr=False)

    def __post_init__(self):
        weights = {FieldKey(k): v for k, v in self.weights.items()}
        missing = set(FieldKey) - weights.keys()
        if missing:
            raise ValueError(f"weight scheme is missing {sorted(m.value for m in missing)}")
        for f, w in weights.items():
            if isinstance(w, bool) or not isinstance(w, int) or w < 0:
                raise ValueError(f"weight for {f.value} must be a non-negative integer, got {w!r}")
        kind = SchemeKind(self.kind)
        if kind is SchemeKind.BINARY and any(w not in (0, 1) for w in weights.values()):
            raise ValueError("binary scheme weights must be 0 or 1")
        if kind is SchemeKind.HIERARCHY and weights != _hierarchy_table():
            raise ValueError("hierarchy scheme must carry the built-in hierarchy weights")
        ordered = {f: weights[f] for f in FieldKey}
        object.__setattr__(self, "kind", kind)
        object.__setattr__(self, "weights", MappingProxyType(ordered))

    def weight_of(self, f: FieldKey | str) -> int:
        return self.weights[FieldKey(f)]

    def with_overrides(self, overrides: Mapping[FieldKey | str, int]) -> WeightScheme:
        """Return a scheme with some field weights replaced.

        A binary scheme stays binary while every weight is 0/1; every other
        combination becomes ``CUSTOM``.
        """
        weights = dict(self.weights)
        weights.update({FieldKey(k): v for k, v in overrides.items()})
        if self.kind is SchemeKind.BINARY and all(w in (0, 1) for w in weights.values()):
            kind = SchemeKind.BINARY
        elif self.kind is SchemeKind.HIERARCHY and weights == _hierarchy_table():
            kind = SchemeKind.HIERARCHY
        else:
            kind = SchemeKind.CUSTOM
        return WeightScheme(kind, weights)


def _hierarchy_table() -> dict[FieldKey, int]:
    # Personal and interest fields form no hierarchy and weigh 1.
    return {f: HIERARCHY_WEIGHTS.get(f, 1) for f in FieldKey}


def binary_scheme(mask: Mapping[FieldKey | str, int] | None = None) -> WeightScheme:
    """0/1 mask over the fields; unmentioned fields weigh 1."""
    weights = {f: 1 for f in FieldKey}
    for k, v in (mask or {}).items():
        weights[FieldKey(k)] = v
    return WeightScheme(SchemeKind.BINARY, weights)


def hierarchy_scheme() -> WeightScheme:
    return WeightScheme(SchemeKind.HIERARCHY, _hierarchy_table())


def scheme_by_name(name: str) -> WeightScheme:
    if name == "binary":
        return binary_scheme()
    if name == "hierarchy":
        return hierarchy_scheme()
    raise ValueError(f"unknown weight scheme {name!r}; expected 'binary' or 'hierarchy'")


def parse_weights(text: str, source=None) -> dict[FieldKey, int]:
    """Parse ``field_key=integer`` lines. Blank lines and ``#`` comments are skipped."""
    out: dict[FieldKey, int] = {}
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        key, sep, value = line.partition("=")
        if not sep:
            raise ConfigError("expected field_key=integer", lineno, source)
        key, value = key.strip(), value.strip()
        try:
            f = FieldKey(key)
        except ValueError:
            raise ConfigError(f"unknown field key {key!r}", lineno, source) from None
        if not value.isascii() or not value.isdigit():
            raise ConfigError(f"weight for {key} must be a non-negative integer", lineno, source)
        if f in out:
            raise ConfigError(f"field {key} given twice", lineno, source)
        out[f] = int(value)
    return out


def load_weights(path, base: WeightScheme) -> WeightScheme:
    with open(path, encoding="utf-8") as fh:
        overrides = parse_weights(fh.read(), source=str(path))
    return base.with_overrides(overrides)
