"""Text pipeline: segmentation, stopword removal, and the coded vocabulary.

Raw insert text is segmented into paragraphs (the answer unit), sentences
and positioned word tokens.  Paragraph boundaries are one or more blank
lines; sentence boundaries are '.', '?' or '!' followed by whitespace or
end of text.  Sentence-terminal marks steer segmentation and are counted
in the token statistic, but are never emitted as word tokens.  All
comparisons happen on lowercased text.

Positions are never renumbered after stopword removal: the gaps left by
removed words still separate the survivors, so word distances keep the
original layout geometry.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from importlib import resources

from .errors import EmptyCorpusError, EmptyVocabularyError, NoKnownWordsError
from .stemming import stem

_WORD_RE = re.compile(r"[^\W_]+", re.UNICODE)
_TERMINATORS = ".?!"


@dataclass(frozen=True)
class RawText:
    """Unprocessed input text plus a label identifying where it came from."""

    content: str
    source_id: str = "insert"


@dataclass(frozen=True)
class Position:
    """Location of a word token: paragraph, sentence within it, word within the paragraph.

    word_index counts words within the whole paragraph, increasing across
    its sentences, so same-sentence and cross-sentence word gaps share one
    index space.
    """

    doc_index: int
    sentence_index: int
    word_index: int


@dataclass(frozen=True)
class Token:
    surface: str
    stem: str
    position: Position


@dataclass(frozen=True)
class Sentence:
    tokens: tuple[Token, ...]
    terminator: str | None = None


@dataclass(frozen=True)
class Document:
    index: int
    text: str
    sentences: tuple[Sentence, ...]


@dataclass(frozen=True)
class Corpus:
    documents: tuple[Document, ...]

    def iter_tokens(self):
        for doc in self.documents:
            for sentence in doc.sentences:
                yield from sentence.tokens

    @property
    def word_token_count(self) -> int:
        return sum(len(s.tokens) for d in self.documents for s in d.sentences)

    @property
    def terminator_count(self) -> int:
        return sum(
            1
            for d in self.documents
            for s in d.sentences
            if s.terminator is not None
        )

    @property
    def token_count(self) -> int:
        """Word tokens plus sentence-terminal punctuation marks."""
        return self.word_token_count + self.terminator_count


@dataclass(frozen=True)
class VocabEntry:
    stem: str
    code: int
    occurrences: tuple[Position, ...]

    @property
    def frequency(self) -> int:
        return len(self.occurrences)


class Vocabulary:
    """Relevant stems with integer codes assigned in first-occurrence order.

    A stem is relevant when it appears more than twice and has more than
    two letters.  Codes are a bijection onto range(size).
    """

    def __init__(self, entries: list[VocabEntry]):
        self.entries: tuple[VocabEntry, ...] = tuple(entries)
        self.by_stem: dict[str, VocabEntry] = {e.stem: e for e in self.entries}
        self._doc_codes: dict[int, tuple[int, ...]] | None = None

    @property
    def size(self) -> int:
        return len(self.entries)

    def stem_of(self, code: int) -> str:
        return self.entries[code].stem

    def codes_in_document(self, doc_index: int) -> tuple[int, ...]:
        """Distinct codes occurring in a paragraph, ascending."""
        if self._doc_codes is None:
            mapping: dict[int, set[int]] = {}
            for entry in self.entries:
                for pos in entry.occurrences:
                    mapping.setdefault(pos.doc_index, set()).add(entry.code)
            self._doc_codes = {
                doc: tuple(sorted(codes)) for doc, codes in mapping.items()
            }
        return self._doc_codes.get(doc_index, ())


def _split_paragraphs(text: str) -> list[str]:
    text = text.replace("\r\n", "\n").replace("\r", "\n")
    return [p for p in re.split(r"\n\s*\n", text) if p.strip()]


def _split_sentences(paragraph: str) -> list[tuple[str, str | None]]:
    """Split on '.', '?' or '!' followed by whitespace/end; keep the mark."""
    sentences: list[tuple[str, str | None]] = []
    start = 0
    n = len(paragraph)
    for i, ch in enumerate(paragraph):
        if ch in _TERMINATORS and (i + 1 == n or paragraph[i + 1].isspace()):
            sentences.append((paragraph[start:i], ch))
            start = i + 1
    tail = paragraph[start:]
    if tail.strip():
        sentences.append((tail, None))
    return sentences


def segment(raw: RawText | str) -> Corpus:
    """Segment raw text into positioned, stemmed word tokens.

    Empty paragraphs are removed before indexing, and paragraphs or
    sentences that yield no word tokens are dropped as well.  Raises
    EmptyCorpusError when nothing survives.
    """
    content = raw.content if isinstance(raw, RawText) else raw
    if not content.strip():
        raise EmptyCorpusError("input text is empty")
    documents: list[Document] = []
    for para in _split_paragraphs(content):
        sentences: list[Sentence] = []
        word_counter = 0
        for sent_text, terminator in _split_sentences(para):
            tokens = []
            for match in _WORD_RE.finditer(sent_text):
                surface = match.group()
                position = Position(
                    doc_index=len(documents),
                    sentence_index=len(sentences),
                    word_index=word_counter,
                )
                tokens.append(Token(surface, stem(surface.lower()), position))
                word_counter += 1
            if tokens:
                sentences.append(Sentence(tuple(tokens), terminator))
        if sentences:
            documents.append(
                Document(index=len(documents), text=para.strip(), sentences=tuple(sentences))
            )
    if not documents:
        raise EmptyCorpusError("input text contains no word tokens")
    return Corpus(tuple(documents))


def remove_stopwords(corpus: Corpus, stoplist: frozenset[str] | set[str]) -> Corpus:
    """Drop tokens whose lowercased surface is in the stoplist.

    Surviving tokens keep their original positions, and documents keep
    their original indices; paragraphs left without any token are dropped.
    """
    documents = []
    for doc in corpus.documents:
        sentences = []
        for sentence in doc.sentences:
            kept = tuple(
                t for t in sentence.tokens if t.surface.lower() not in stoplist
            )
            if kept:
                sentences.append(Sentence(kept, sentence.terminator))
        if sentences:
            documents.append(Document(doc.index, doc.text, tuple(sentences)))
    return Corpus(tuple(documents))


def build_vocabulary(corpus: Corpus) -> Vocabulary:
    """Collect relevant stems (frequency > 2 and more than 2 letters).

    Codes are assigned in order of first occurrence in reading order.
    Raises EmptyVocabularyError when no stem qualifies.
    """
    occurrences: dict[str, list[Position]] = {}
    for token in corpus.iter_tokens():
        occurrences.setdefault(token.stem, []).append(token.position)
    entries = []
    for stem_, positions in occurrences.items():
        if len(positions) > 2 and len(stem_) > 2:
            entries.append(
                VocabEntry(stem=stem_, code=len(entries), occurrences=tuple(positions))
            )
    if not entries:
        raise EmptyVocabularyError("no stem passes the relevance criterion")
    return Vocabulary(entries)


def preprocess_query(
    question: str, vocab: Vocabulary, stoplist: frozenset[str] | set[str]
) -> list[int]:
    """Map a free-text question to vocabulary codes.

    Tokenizes, filters stopwords and stems with the same rules as the
    corpus, keeps each known stem once (first-seen order) and drops the
    rest.  Raises NoKnownWordsError when nothing maps.
    """
    codes: list[int] = []
    for surface in _WORD_RE.findall(question.lower()):
        if surface in stoplist:
            continue
        entry = vocab.by_stem.get(stem(surface))
        if entry is not None and entry.code not in codes:
            codes.append(entry.code)
    if not codes:
        raise NoKnownWordsError("no question word maps to the vocabulary")
    return codes


def load_stoplist(path: str | None = None) -> frozenset[str]:
    """Read a stoplist file (one lowercase word per line, UTF-8).

    With no path, the bundled default English stoplist is used.
    """
    if path is None:
        text = (
            resources.files("leafletqa.data")
            .joinpath("default_stoplist.txt")
            .read_text(encoding="utf-8")
        )
    else:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    return frozenset(line.strip() for line in text.splitlines() if line.strip())
