"""Input validation helpers shared by the functional API and the estimators."""

from __future__ import annotations

import re
from typing import Iterable

import numpy as np

from .errors import InvalidId, InvalidPair

_ID_RE = re.compile(r"[0-9]{1,20}")


def check_id(value, what="profile id") -> str:
    """Return ``value`` if it is 1-20 ASCII digits, else raise :class:`InvalidId`.

    Ids are opaque text: ``"007"`` and ``"7"`` are different ids.
    """
    if not isinstance(value, str) or _ID_RE.fullmatch(value) is None:
        raise InvalidId(f"invalid {what}: {value!r}")
    return value


def check_distinct(u: str, v: str) -> None:
    if u == v:
        raise InvalidPair(f"pair must join two different profiles, got {u} twice")


def check_pairs(X) -> list[tuple[str, str]]:
    """Coerce an array-like of ordered ``(u, v)`` id pairs to a list of tuples.

    Accepts lists of tuples, ``(n, 2)`` object arrays and two-column
    DataFrames. Every id is validated; self-pairs raise :class:`InvalidPair`.
    """
    if hasattr(X, "to_numpy"):
        X = X.to_numpy(dtype=object)
    arr = np.asarray(X, dtype=object)
    if arr.size == 0:
        return []
    if arr.ndim != 2 or arr.shape[1] != 2:
        raise ValueError(f"expected an array of shape (n_pairs, 2), got shape {arr.shape}")
    pairs = []
    for u, v in arr:
        pair = (check_id(u), check_id(v))
        check_distinct(*pair)
        pairs.append(pair)
    return pairs


def dedupe(items: Iterable[str]) -> list[str]:
    """Drop repeats, keeping the first occurrence."""
    return list(dict.fromkeys(items))
