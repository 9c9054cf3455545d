"""How word distances and co-occurrence counts are computed.

Run:  python demos/02_word_distances.py
"""

import numpy as np

from leafletqa import (
    DistanceParams,
    Position,
    build_cooccurrence_matrix,
    build_distance_matrix,
    build_vocabulary,
    occurrence_distance,
    segment,
)

params = DistanceParams(a=10.0, b=20.0)

# The three cases of the occurrence distance.
print("same sentence, word gap 4:      ",
      occurrence_distance(Position(0, 0, 3), Position(0, 0, 7), params))
print("same doc, 2 sentences, gap 5:   ",
      occurrence_distance(Position(0, 0, 2), Position(0, 2, 7), params))
print("documents 2 and 5 (b = 20):     ",
      occurrence_distance(Position(2, 0, 0), Position(5, 1, 4), params))

# A toy corpus: two tight topics in separate paragraphs.
TEXT = """\
alpha beta alpha beta. alpha beta gamma.

gamma delta gamma. delta gamma delta.
"""
vocab = build_vocabulary(segment(TEXT))
stems = [e.stem for e in vocab.entries]
print(f"\nvocabulary: {stems}")

# D takes the minimum over every occurrence pair, so one close meeting
# beats many distant ones.
D = build_distance_matrix(vocab, params)
np.set_printoptions(precision=1, suppress=True)
print("\ndistance matrix D (code order):")
print(D)

# B counts shared sentences and shared paragraphs on top of a floor of 1.
B = build_cooccurrence_matrix(vocab)
print("\nco-occurrence matrix B:")
print(B)

print("\nnote: alpha-beta sit one word apart and share sentences, so they")
print("are near and strongly coupled; alpha-delta never co-occur (B = 1)")
print("and only meet across the paragraph boundary.")
