import random
from importlib import resources

import pytest

from leafletqa.config import ModelConfig
from leafletqa.model import build_model
from leafletqa.preprocessing import (
    build_vocabulary,
    load_stoplist,
    remove_stopwords,
    segment,
)

_LETTERS = "bcdfghjklmnpqrstvwz"
_VOWELS = "aeiou"


def random_word(rng: random.Random) -> str:
    length = rng.randint(3, 7)
    chars = []
    for i in range(length):
        chars.append(rng.choice(_LETTERS) if i % 2 == 0 else rng.choice(_VOWELS))
    return "".join(chars)


def random_corpus_text(rng: random.Random) -> str:
    """Small random corpus with paragraph/sentence structure and fillers."""
    pool = list({random_word(rng) for _ in range(rng.randint(4, 12))})
    paragraphs = []
    for _ in range(rng.randint(1, 5)):
        sentences = []
        for _ in range(rng.randint(1, 4)):
            words = []
            for _ in range(rng.randint(2, 8)):
                roll = rng.random()
                if roll < 0.15:
                    words.append(rng.choice(["the", "and", "of", "to"]))
                elif roll < 0.2:
                    words.append(rng.choice(["ab", "io", "um"]))
                else:
                    words.append(rng.choice(pool))
            sentences.append(" ".join(words) + rng.choice([".", ".", ".", "?"]))
        paragraphs.append(" ".join(sentences))
    return "\n\n".join(paragraphs)


def pipeline_vocabulary(text: str, stoplist):
    """Segment, filter and code a corpus; None when nothing is relevant."""
    from leafletqa.errors import EmptyVocabularyError

    corpus = segment(text)
    filtered = remove_stopwords(corpus, stoplist)
    try:
        return corpus, build_vocabulary(filtered)
    except EmptyVocabularyError:
        return corpus, None


def random_vocabulary(rng: random.Random, stoplist, max_words: int = 30):
    """Keep generating corpora until one yields a usable vocabulary."""
    while True:
        text = random_corpus_text(rng)
        corpus, vocab = pipeline_vocabulary(text, stoplist)
        if vocab is not None and vocab.size <= max_words:
            return text, corpus, vocab


def occurrences_as_lists(vocab):
    """Vocabulary occurrences as plain (doc, sentence, word) triples."""
    return [
        [(p.doc_index, p.sentence_index, p.word_index) for p in entry.occurrences]
        for entry in vocab.entries
    ]


@pytest.fixture(scope="session")
def stoplist():
    return load_stoplist()


@pytest.fixture(scope="session")
def sample_text():
    return (
        resources.files("leafletqa.data")
        .joinpath("sample_insert.txt")
        .read_text(encoding="utf-8")
    )


@pytest.fixture(scope="session")
def two_topic_text():
    return (
        resources.files("leafletqa.data")
        .joinpath("two_topic_insert.txt")
        .read_text(encoding="utf-8")
    )


@pytest.fixture(scope="session")
def sample_model(sample_text):
    return build_model(sample_text, ModelConfig())


@pytest.fixture(scope="session")
def two_topic_model(two_topic_text):
    return build_model(two_topic_text, ModelConfig())
