"""Positional word distances and sentence/paragraph co-occurrence counts.

The distance between two word occurrences depends on how the positions
relate:

* same sentence: the word gap ``|j - i|``
* same paragraph, different sentences: ``|j - i| * S_n * a`` with ``S_n``
  the number of sentence boundaries crossed
* different paragraphs: ``P_n * b`` with ``P_n`` the number of paragraph
  boundaries crossed (adjacent paragraphs count 1)

Words occur many times, so the pair distance D(r, s) is the minimum over
all occurrence pairs.  The co-occurrence factor B(r, s) is one plus the
number of sentences plus the number of paragraphs containing both words,
so it is always at least one and never annihilates a potential.

Everything here is a pure function of exact integer positions and the
two scale parameters, so results are bitwise reproducible.
"""

from __future__ import annotations

import csv
import logging
from dataclasses import dataclass

import numpy as np

from .preprocessing import Position, Vocabulary

logger = logging.getLogger(__name__)

_CHUNK = 512


@dataclass(frozen=True)
class DistanceParams:
    """Cross-sentence scale a and cross-paragraph scale b."""

    a: float = 10.0
    b: float = 20.0

    def __post_init__(self):
        if self.a <= 0 or self.b <= 0:
            raise ValueError("distance scales a and b must be positive")


def occurrence_distance(p: Position, q: Position, params: DistanceParams) -> float:
    """Distance between two single occurrences (three-case rule)."""
    if p.doc_index != q.doc_index:
        return abs(p.doc_index - q.doc_index) * params.b
    if p.sentence_index != q.sentence_index:
        word_gap = abs(p.word_index - q.word_index)
        boundaries = abs(p.sentence_index - q.sentence_index)
        return word_gap * boundaries * params.a
    return float(abs(p.word_index - q.word_index))


def _occurrence_arrays(vocab: Vocabulary):
    codes, docs, sents, words = [], [], [], []
    for entry in vocab.entries:
        for pos in entry.occurrences:
            codes.append(entry.code)
            docs.append(pos.doc_index)
            sents.append(pos.sentence_index)
            words.append(pos.word_index)
    return (
        np.asarray(codes, dtype=np.int64),
        np.asarray(docs, dtype=np.int64),
        np.asarray(sents, dtype=np.int64),
        np.asarray(words, dtype=np.int64),
    )


def build_distance_matrix(vocab: Vocabulary, params: DistanceParams) -> np.ndarray:
    """Symmetric N x N matrix of minimum occurrence distances, zero diagonal."""
    n = vocab.size
    codes, docs, sents, words = _occurrence_arrays(vocab)
    total = len(codes)
    D = np.full((n, n), np.inf)
    # Occurrence pairs are reduced blockwise; min is order independent,
    # so chunking cannot change the result.
    for start in range(0, total, _CHUNK):
        stop = min(start + _CHUNK, total)
        doc_gap = np.abs(docs[start:stop, None] - docs[None, :])
        sent_gap = np.abs(sents[start:stop, None] - sents[None, :])
        word_gap = np.abs(words[start:stop, None] - words[None, :])
        dist = np.where(
            doc_gap > 0,
            doc_gap * params.b,
            np.where(
                sent_gap > 0,
                word_gap * sent_gap * params.a,
                word_gap.astype(np.float64),
            ),
        )
        rows = np.broadcast_to(codes[start:stop, None], dist.shape)
        cols = np.broadcast_to(codes[None, :], dist.shape)
        np.minimum.at(D, (rows, cols), dist)
    np.fill_diagonal(D, 0.0)
    return D


def build_cooccurrence_matrix(vocab: Vocabulary) -> np.ndarray:
    """B(r, s) = 1 + shared sentences + shared paragraphs; diagonal 1."""
    n = vocab.size
    codes, docs, sents, _ = _occurrence_arrays(vocab)
    sentence_ids = np.unique(np.stack([docs, sents], axis=1), axis=0)
    sent_lookup = {tuple(row): i for i, row in enumerate(sentence_ids)}
    doc_ids = np.unique(docs)
    doc_lookup = {d: i for i, d in enumerate(doc_ids)}

    sent_inc = np.zeros((len(sentence_ids), n), dtype=np.int64)
    doc_inc = np.zeros((len(doc_ids), n), dtype=np.int64)
    for code, doc, sent in zip(codes, docs, sents):
        sent_inc[sent_lookup[(doc, sent)], code] = 1
        doc_inc[doc_lookup[doc], code] = 1

    B = 1 + sent_inc.T @ sent_inc + doc_inc.T @ doc_inc
    np.fill_diagonal(B, 1)
    return B.astype(np.float64)


def export_distance_csv(D: np.ndarray, path) -> None:
    """Write D as a plain N x N CSV in vocabulary code order."""
    with open(path, "w", encoding="utf-8", newline="") as fh:
        writer = csv.writer(fh)
        for row in D:
            writer.writerow([repr(float(x)) for x in row])


def triangle_violations(D: np.ndarray) -> int:
    """Count (i, j, k) triples with D(i,k) > D(i,j) + D(j,k) + 1e-9.

    The three-case distance is not guaranteed to be a metric across
    cases; this is an audit helper, not an enforced invariant.
    """
    through = D[:, :, None] + D[None, :, :]
    direct = D[:, None, :]
    return int(np.sum(direct > through + 1e-9))


def audit_triangle_inequality(D: np.ndarray, limit: int = 120) -> None:
    """Log the triangle-inequality audit for small matrices."""
    n = D.shape[0]
    if n > limit:
        logger.debug("triangle audit skipped for n=%d (> %d)", n, limit)
        return
    bad = triangle_violations(D)
    if bad:
        logger.info("distance matrix violates the triangle inequality for %d triples", bad)
    else:
        logger.info("distance matrix satisfies the triangle inequality on all triples")
