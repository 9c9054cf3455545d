"""Walk through the text pipeline: paragraphs, sentences, stems, codes.

Run:  python demos/01_text_pipeline.py
"""

from leafletqa import (
    build_vocabulary,
    load_stoplist,
    preprocess_query,
    remove_stopwords,
    segment,
    stem,
)

TEXT = """\
The tablets reduce the risk of bleeding. Bleeding risks rise with the dose.

Take one tablet each morning. A missed tablet raises the risk of a clot.

Bleeding that does not stop needs a doctor. Ask the doctor about the dose.
"""

# 1. Segmentation: paragraphs are documents, sentences end at . ? !
corpus = segment(TEXT)
print(f"{len(corpus.documents)} documents, "
      f"{corpus.word_token_count} word tokens, "
      f"{corpus.terminator_count} sentence marks")
for doc in corpus.documents:
    print(f"  doc {doc.index}: {len(doc.sentences)} sentences")

# Every token knows exactly where it sits; the word index runs through
# the whole paragraph so distances can be taken across sentences.
first = corpus.documents[0].sentences[0].tokens[1]
print(f"\ntoken {first.surface!r} -> stem {first.stem!r} at {first.position}")

# 2. Stemming conflates inflected forms.
for word in ("bleeding", "bleeds", "risks", "tablets"):
    print(f"  stem({word!r}) = {stem(word)!r}")

# 3. Stopword removal keeps positions intact (gaps still count).
stoplist = load_stoplist()
filtered = remove_stopwords(corpus, stoplist)
print(f"\nafter stopwords: {filtered.word_token_count} word tokens")

# 4. The vocabulary keeps stems seen 3+ times with 3+ letters.
vocab = build_vocabulary(filtered)
print(f"vocabulary ({vocab.size} relevant stems):")
for entry in vocab.entries:
    print(f"  code {entry.code}: {entry.stem!r} x{entry.frequency}")

# 5. Questions go through the same pipeline and come out as codes.
codes = preprocess_query("What are the risks of bleeding?", vocab, stoplist)
print(f"\nquery codes: {codes} -> stems {[vocab.stem_of(c) for c in codes]}")
