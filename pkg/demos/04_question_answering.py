"""Ask the bundled sample insert some questions, end to end.

Run:  python demos/04_question_answering.py
"""

from importlib import resources

from leafletqa import build_model

text = (
    resources.files("leafletqa.data")
    .joinpath("sample_insert.txt")
    .read_text(encoding="utf-8")
)
model = build_model(text)

QUESTIONS = [
    "What are the risks of bleeding?",
    "What is the usual dose?",
    "What should I do if I forget a tablet?",
    "How should the tablets be stored?",
    "Is the medicine safe during pregnancy?",
    "How do I keep the blood flowing in my legs when travelling?",
    "Thanks, that is all, goodbye!",
]

# A question is reduced to vocabulary codes, turned into a cluster
# profile, and matched against every paragraph profile by cosine; the
# best match is scaled to relative relevance 1.00.
for question in QUESTIONS:
    print(f"\nQ: {question}")
    result = model.answer(question, top_k=2)
    if result.fallback is not None:
        print(f"   (fallback) {result.fallback}")
        continue
    for ans in result.answers:
        text_short = ans.text if len(ans.text) <= 110 else ans.text[:107] + "..."
        print(f"   {ans.relative_relevance:.2f}  [{ans.doc_index:3d}] {text_short}")
