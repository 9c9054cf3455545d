"""Exception types raised by the leafletqa pipeline and services."""


class LeafletQAError(Exception):
    """Base class for all leafletqa errors."""


class EmptyCorpusError(LeafletQAError):
    """Input text contains no usable paragraphs."""


class EmptyVocabularyError(LeafletQAError):
    """No word survived the relevance criterion (frequency > 2, length > 2)."""


class NoKnownWordsError(LeafletQAError):
    """No query word maps to the model vocabulary."""


class NoAnswerError(LeafletQAError):
    """Every document scored zero against the query profile."""


class ShapeError(LeafletQAError):
    """Matrix dimensions do not agree."""


class ModelFormatError(LeafletQAError):
    """Persisted model file is missing, corrupt, or of an unknown version."""
