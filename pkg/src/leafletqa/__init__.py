"""Question answering over medication package inserts.

The vocabulary of an insert is clustered with a word-distance adaptation
of subtractive mountain clustering; questions are answered by matching
cluster-membership profiles between the query and every paragraph.
"""

from .clustering import (
    ClusterModel,
    SmcParams,
    accept_center,
    initial_potentials,
    memberships,
    run_smc,
    select_center,
    subtract_potential,
)
from .config import ModelConfig, load_config
from .distances import (
    DistanceParams,
    build_cooccurrence_matrix,
    build_distance_matrix,
    export_distance_csv,
    occurrence_distance,
)
from .errors import (
    EmptyCorpusError,
    EmptyVocabularyError,
    LeafletQAError,
    ModelFormatError,
    NoAnswerError,
    NoKnownWordsError,
    ShapeError,
)
from .model import InsertModel, build_model, load_model, save_model
from .preprocessing import (
    Corpus,
    Position,
    RawText,
    Token,
    Vocabulary,
    build_vocabulary,
    load_stoplist,
    preprocess_query,
    remove_stopwords,
    segment,
)
from .retrieval import (
    QueryResult,
    RankedAnswer,
    answer,
    profile_document,
    profile_query,
    rank_answers,
)
from .stemming import stem

__version__ = "0.1.0"

__all__ = [
    "ClusterModel",
    "Corpus",
    "DistanceParams",
    "EmptyCorpusError",
    "EmptyVocabularyError",
    "InsertModel",
    "LeafletQAError",
    "ModelConfig",
    "ModelFormatError",
    "NoAnswerError",
    "NoKnownWordsError",
    "Position",
    "QueryResult",
    "RankedAnswer",
    "RawText",
    "ShapeError",
    "SmcParams",
    "Token",
    "Vocabulary",
    "accept_center",
    "answer",
    "build_cooccurrence_matrix",
    "build_distance_matrix",
    "build_model",
    "build_vocabulary",
    "export_distance_csv",
    "initial_potentials",
    "load_config",
    "load_model",
    "load_stoplist",
    "memberships",
    "occurrence_distance",
    "preprocess_query",
    "profile_document",
    "profile_query",
    "rank_answers",
    "remove_stopwords",
    "run_smc",
    "save_model",
    "segment",
    "select_center",
    "stem",
    "subtract_potential",
]
