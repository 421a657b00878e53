"""scikit-learn compatible wrappers over a snapshot graph.

Both estimators take ``(n_pairs, 2)`` arrays of ordered id pairs, so pair
features can feed a downstream classifier inside a ``Pipeline``.
"""

from __future__ import annotations

import numpy as np
from sklearn.base import BaseEstimator, TransformerMixin
from sklearn.utils.validation import check_is_fitted

from .linkanalysis import FEATURE_NAMES, InterestSource, feature_vector
from .matcher import REPORT_COLUMNS, MutualWeightConfig, rank_candidates, total_similarity
from .model import SocialGraph
from .validation import check_id, check_pairs
from .weights import scheme_by_name


def _check_graph(graph) -> SocialGraph:
    if not isinstance(graph, SocialGraph):
        raise TypeError(f"graph must be a SocialGraph, got {type(graph).__name__}")
    return graph


class PairFeatureTransformer(TransformerMixin, BaseEstimator):
    """Structural and interest features for ordered ``(u, v)`` pairs.

    Unreachable distances come out as ``np.inf``.
    """

    def __init__(self, graph=None, interest_source="communities"):
        self.graph = graph
        self.interest_source = interest_source

    def fit(self, X=None, y=None):
        _check_graph(self.graph)
        self.interest_source_ = InterestSource(self.interest_source)
        if X is not None:
            check_pairs(X)
        self.n_features_in_ = 2
        return self

    def transform(self, X):
        check_is_fitted(self, "interest_source_")
        pairs = check_pairs(X)
        rows = [feature_vector(self.graph, u, v, self.interest_source_).as_floats() for u, v in pairs]
        return np.asarray(rows, dtype=float).reshape(len(rows), len(FEATURE_NAMES))

    def get_feature_names_out(self, input_features=None):
        return np.asarray(FEATURE_NAMES, dtype=object)


class ClosenessScorer(TransformerMixin, BaseEstimator):
    """Closeness components of candidate ``v`` relative to base ``u`` per pair.

    ``transform`` returns integer rows of the six components followed by the
    total. ``weights`` optionally overrides individual field weights.
    """

    def __init__(self, graph=None, scheme="binary", weights=None, mutual="raw", waf=10):
        self.graph = graph
        self.scheme = scheme
        self.weights = weights
        self.mutual = mutual
        self.waf = waf

    def fit(self, X=None, y=None):
        _check_graph(self.graph)
        scheme = scheme_by_name(self.scheme)
        if self.weights:
            scheme = scheme.with_overrides(self.weights)
        self.scheme_ = scheme
        self.mutual_config_ = MutualWeightConfig(self.mutual, self.waf)
        if X is not None:
            check_pairs(X)
        self.n_features_in_ = 2
        return self

    def transform(self, X):
        check_is_fitted(self, "scheme_")
        rows = []
        for base, cand in check_pairs(X):
            r = total_similarity(self.graph, base, cand, self.scheme_, self.mutual_config_)
            rows.append((*r.components(), r.total))
        return np.asarray(rows, dtype=np.int64).reshape(len(rows), len(REPORT_COLUMNS) - 1)

    def get_feature_names_out(self, input_features=None):
        return np.asarray(REPORT_COLUMNS[1:], dtype=object)

    def rank(self, base):
        """Friends of ``base`` ordered by descending total."""
        check_is_fitted(self, "scheme_")
        return rank_candidates(self.graph, check_id(base), self.scheme_, self.mutual_config_)
