"""Build, persist and reload the complete question-answering model.

A built model bundles everything a query needs: the paragraph texts, the
coded vocabulary, the cluster centers with their membership matrix, one
profile per paragraph, and the resolved stoplist.  Persistence is a
versioned JSON document; floats survive the round trip exactly, so a
reloaded model answers byte-for-byte like the original.
"""

from __future__ import annotations

import datetime
import json
from dataclasses import dataclass

import numpy as np

from .clustering import ClusterModel, SmcParams, run_smc
from .config import ModelConfig, config_from_dict
from .distances import (
    DistanceParams,
    audit_triangle_inequality,
    build_cooccurrence_matrix,
    build_distance_matrix,
)
from .errors import ModelFormatError
from .preprocessing import (
    Position,
    RawText,
    Vocabulary,
    VocabEntry,
    build_vocabulary,
    load_stoplist,
    remove_stopwords,
    segment,
)
from .retrieval import QueryResult, answer, profile_document

FORMAT_VERSION = 1


@dataclass(frozen=True)
class DocumentText:
    """A paragraph kept as an answer candidate."""

    index: int
    text: str


@dataclass(frozen=True)
class ModelStats:
    documents: int
    tokens: int
    relevant_terms: int
    relevant_fraction: float
    clusters: int


@dataclass(frozen=True)
class InsertModel:
    config: ModelConfig
    documents: tuple[DocumentText, ...]
    vocabulary: Vocabulary
    clusters: ClusterModel
    doc_profiles: np.ndarray
    stoplist: frozenset[str]
    stats: ModelStats

    @property
    def membership(self) -> np.ndarray:
        return self.clusters.U

    def answer(self, question: str, top_k: int | None = None) -> QueryResult:
        return answer(question, self, top_k=top_k)

    def cluster_report(self, threshold: float = 0.5) -> list[dict]:
        """Per cluster: center stem, potential, members above the threshold."""
        report = []
        U = self.clusters.U
        for k, (code, potential) in enumerate(
            zip(self.clusters.centers, self.clusters.center_potentials)
        ):
            member_codes = np.flatnonzero(U[:, k] > threshold)
            members = sorted(
                (
                    {"stem": self.vocabulary.stem_of(int(i)), "membership": float(U[i, k])}
                    for i in member_codes
                ),
                key=lambda m: (-m["membership"], m["stem"]),
            )
            report.append(
                {
                    "index": k,
                    "center_stem": self.vocabulary.stem_of(code),
                    "potential": float(potential),
                    "members": members,
                }
            )
        return report


def build_model(text: str | RawText, config: ModelConfig | None = None) -> InsertModel:
    """Run the whole pipeline on raw insert text."""
    config = config or ModelConfig()
    corpus = segment(text)
    stoplist = load_stoplist(config.stoplist_path)
    filtered = remove_stopwords(corpus, stoplist)
    vocab = build_vocabulary(filtered)

    D = build_distance_matrix(vocab, DistanceParams(a=config.a, b=config.b))
    audit_triangle_inequality(D)
    B = build_cooccurrence_matrix(vocab)
    clusters = run_smc(
        D, B, SmcParams(r_a=config.r_a, r_b=config.r_b, epsilon=config.epsilon, m=config.m)
    )

    documents = tuple(DocumentText(d.index, d.text) for d in corpus.documents)
    doc_profiles = np.vstack(
        [profile_document(d.index, vocab, clusters.U) for d in documents]
    )
    tokens = corpus.token_count
    stats = ModelStats(
        documents=len(documents),
        tokens=tokens,
        relevant_terms=vocab.size,
        relevant_fraction=vocab.size / tokens,
        clusters=clusters.n_clusters,
    )
    return InsertModel(
        config=config,
        documents=documents,
        vocabulary=vocab,
        clusters=clusters,
        doc_profiles=doc_profiles,
        stoplist=stoplist,
        stats=stats,
    )


def _model_payload(model: InsertModel) -> dict:
    return {
        "format_version": FORMAT_VERSION,
        "config": model.config.to_dict(),
        "stoplist": sorted(model.stoplist),
        "documents": [{"index": d.index, "text": d.text} for d in model.documents],
        "vocabulary": [
            {
                "stem": e.stem,
                "code": e.code,
                "frequency": e.frequency,
                "occurrences": [
                    [p.doc_index, p.sentence_index, p.word_index] for p in e.occurrences
                ],
            }
            for e in model.vocabulary.entries
        ],
        "centers": list(model.clusters.centers),
        "center_potentials": list(model.clusters.center_potentials),
        "membership": model.clusters.U.tolist(),
        "doc_profiles": model.doc_profiles.tolist(),
        "stats": {
            "documents": model.stats.documents,
            "tokens": model.stats.tokens,
            "relevant_terms": model.stats.relevant_terms,
            "relevant_fraction": model.stats.relevant_fraction,
            "clusters": model.stats.clusters,
        },
    }


def save_model(model: InsertModel, path) -> None:
    """Write the model as canonical (sorted-key) JSON plus a timestamp."""
    payload = _model_payload(model)
    payload["created_at"] = (
        datetime.datetime.now(datetime.timezone.utc).isoformat(timespec="seconds")
    )
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(payload, fh, sort_keys=True, indent=1)
        fh.write("\n")


def load_model(path) -> InsertModel:
    """Reload a persisted model; raises ModelFormatError when unreadable."""
    try:
        with open(path, encoding="utf-8") as fh:
            payload = json.load(fh)
    except json.JSONDecodeError as exc:
        raise ModelFormatError(f"model file {path} is not valid JSON: {exc}") from exc
    if not isinstance(payload, dict):
        raise ModelFormatError("model file must contain a JSON object")
    version = payload.get("format_version")
    if version != FORMAT_VERSION:
        raise ModelFormatError(f"unsupported model format version: {version!r}")
    try:
        config = config_from_dict(payload["config"])
        entries = [
            VocabEntry(
                stem=e["stem"],
                code=e["code"],
                occurrences=tuple(Position(*pos) for pos in e["occurrences"]),
            )
            for e in payload["vocabulary"]
        ]
        vocab = Vocabulary(entries)
        clusters = ClusterModel(
            centers=tuple(int(c) for c in payload["centers"]),
            center_potentials=tuple(float(x) for x in payload["center_potentials"]),
            U=np.asarray(payload["membership"], dtype=np.float64),
        )
        documents = tuple(
            DocumentText(d["index"], d["text"]) for d in payload["documents"]
        )
        stats = ModelStats(**payload["stats"])
        model = InsertModel(
            config=config,
            documents=documents,
            vocabulary=vocab,
            clusters=clusters,
            doc_profiles=np.asarray(payload["doc_profiles"], dtype=np.float64),
            stoplist=frozenset(payload["stoplist"]),
            stats=stats,
        )
    except (KeyError, TypeError, ValueError) as exc:
        raise ModelFormatError(f"model file {path} is malformed: {exc}") from exc
    if model.doc_profiles.shape[0] != len(documents):
        raise ModelFormatError("document profiles do not match the document list")
    return model
