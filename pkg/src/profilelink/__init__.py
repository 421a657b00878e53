"""Profile closeness and link analysis over social-network profile dumps."""

from .errors import (
    ConfigError, DegenerateBase, DuplicateProfile, InvalidId, InvalidPair, InvalidPath,
    MissingUserId, ParseError, ProfileLinkError, UnknownProfile,
)
from .estimators import ClosenessScorer, PairFeatureTransformer
from .ingest import (
    RawRecord, canonicalize, extract_tokens, ingest_dumps, load_aliases, read_snapshot,
    write_snapshot,
)
from .linkanalysis import (
    FeatureVector, InterestSource, backward_distance, degrees, feature_vector,
    forward_deleted_distance, interest_features, path_metrics, shortest_path,
    uniqueness_similarity,
)
from .matcher import (
    MatchingMatrix, MatchRow, MutualMode, MutualWeightConfig, SimilarityReport, category_row,
    field_match, matching_matrix, mutual_community_weight, mutual_friend_weight,
    rank_candidates, score_friends, total_similarity,
)
from .model import (
    SocialGraph, UserProfile, build_snapshot, mutual_communities, mutual_friends, out_neighbors,
)
from .weights import (
    Category, FieldKey, SchemeKind, WeightScheme, binary_scheme, category_of, hierarchy_scheme,
)

__version__ = "0.1.0"
