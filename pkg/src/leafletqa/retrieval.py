"""Cluster-profile matching: score paragraphs against a question.

A profile is the L2-normalized sum of membership rows over the distinct
relevant words of a paragraph or question.  Paragraphs are scored by
cosine similarity between profiles and reported with relative relevance,
i.e. score divided by the best score, so the top answer always reads
1.00.  Cosine is scale invariant, which is exactly the normalization the
relative-relevance convention wants.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import NoAnswerError, NoKnownWordsError
from .preprocessing import Vocabulary, preprocess_query


@dataclass(frozen=True)
class RankedAnswer:
    doc_index: int
    text: str
    relative_relevance: float


@dataclass(frozen=True)
class QueryResult:
    """Either a non-empty answer list or a fallback message."""

    answers: tuple[RankedAnswer, ...] = ()
    fallback: str | None = None


def _normalized(weights: np.ndarray) -> np.ndarray:
    norm = float(np.linalg.norm(weights))
    return weights / norm if norm > 0.0 else weights


def profile_from_codes(codes, U: np.ndarray) -> np.ndarray:
    """Sum the membership rows of the distinct codes, then L2 normalize."""
    distinct = sorted(set(codes))
    if not distinct:
        return np.zeros(U.shape[1])
    return _normalized(U[distinct].sum(axis=0))


def profile_document(doc_index: int, vocab: Vocabulary, U: np.ndarray) -> np.ndarray:
    """Cluster profile of one paragraph; zero vector when it has no relevant word."""
    return profile_from_codes(vocab.codes_in_document(doc_index), U)


def profile_query(codes, U: np.ndarray) -> np.ndarray:
    """Cluster profile of a preprocessed question."""
    if not codes:
        raise NoKnownWordsError("cannot profile an empty code list")
    return profile_from_codes(codes, U)


def rank_answers(
    query_profile: np.ndarray,
    documents,
    doc_profiles: np.ndarray,
    top_k: int = 3,
) -> list[RankedAnswer]:
    """Top paragraphs by cosine similarity, scaled to relative relevance.

    ``documents`` is a sequence of objects with ``index`` and ``text``
    aligned row-for-row with ``doc_profiles``.  Zero-scoring paragraphs
    are never returned; ties rank the lower paragraph index first.
    Raises NoAnswerError when every paragraph scores zero.
    """
    scores = doc_profiles @ query_profile
    best = float(scores.max()) if len(scores) else 0.0
    if best <= 0.0:
        raise NoAnswerError("every document scored zero")
    order = sorted(range(len(scores)), key=lambda i: (-scores[i], documents[i].index))
    answers = []
    for i in order[: max(top_k, 0)]:
        if scores[i] <= 0.0:
            break
        answers.append(
            RankedAnswer(
                doc_index=documents[i].index,
                text=documents[i].text,
                relative_relevance=float(scores[i] / best),
            )
        )
    return answers


def answer(question: str, model, top_k: int | None = None) -> QueryResult:
    """End-to-end question answering against a built model.

    Unanswerable questions (no known word, or nothing scores above zero)
    return the model's fallback message instead of raising.
    """
    k = top_k if top_k is not None else model.config.top_k
    try:
        codes = preprocess_query(question, model.vocabulary, model.stoplist)
        query = profile_query(codes, model.membership)
        ranked = rank_answers(query, model.documents, model.doc_profiles, top_k=k)
    except (NoKnownWordsError, NoAnswerError):
        return QueryResult(fallback=model.config.fallback_text)
    return QueryResult(answers=tuple(ranked))
