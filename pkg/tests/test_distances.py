import random

import numpy as np
import pytest

from leafletqa.distances import (
    DistanceParams,
    build_cooccurrence_matrix,
    build_distance_matrix,
    export_distance_csv,
    occurrence_distance,
    triangle_violations,
)
from leafletqa.preprocessing import Position, Vocabulary, VocabEntry, build_vocabulary, segment

import oracle
from conftest import occurrences_as_lists, random_vocabulary

PARAMS = DistanceParams(a=10.0, b=20.0)


class TestOccurrenceDistance:
    def test_same_sentence_is_word_gap(self):
        p = Position(0, 0, 3)
        q = Position(0, 0, 7)
        assert occurrence_distance(p, q, PARAMS) == 4

    def test_same_document_different_sentence(self):
        p = Position(0, 0, 2)
        q = Position(0, 2, 7)
        assert occurrence_distance(p, q, PARAMS) == 5 * 2 * 10

    def test_different_documents(self):
        p = Position(2, 0, 0)
        q = Position(5, 3, 9)
        assert occurrence_distance(p, q, PARAMS) == 3 * 20

    def test_symmetry(self):
        rng = random.Random(17)
        for _ in range(200):
            p = Position(rng.randint(0, 4), rng.randint(0, 3), rng.randint(0, 40))
            q = Position(rng.randint(0, 4), rng.randint(0, 3), rng.randint(0, 40))
            assert occurrence_distance(p, q, PARAMS) == occurrence_distance(q, p, PARAMS)

    def test_invalid_params_rejected(self):
        with pytest.raises(ValueError):
            DistanceParams(a=0.0)
        with pytest.raises(ValueError):
            DistanceParams(b=-1.0)


class TestDistanceMatrix:
    def test_minimum_rule_on_crafted_occurrences(self):
        # distances between the pairs are {4, 100, 60}; min must win
        entries = [
            VocabEntry("aaa", 0, (Position(0, 0, 3), Position(0, 1, 2), Position(1, 0, 0))),
            VocabEntry("bbb", 1, (Position(0, 0, 7), Position(4, 0, 5))),
        ]
        D = build_distance_matrix(Vocabulary(entries), PARAMS)
        assert D[0, 1] == 4.0
        assert D[1, 0] == 4.0

    def test_single_word_vocabulary(self):
        entries = [VocabEntry("aaa", 0, (Position(0, 0, 0), Position(0, 0, 2), Position(1, 0, 1)))]
        D = build_distance_matrix(Vocabulary(entries), PARAMS)
        assert D.shape == (1, 1)
        assert D[0, 0] == 0.0

    def test_matches_bruteforce_on_random_corpora(self, stoplist):
        rng = random.Random(41)
        for _ in range(15):
            _, _, vocab = random_vocabulary(rng, stoplist)
            D = build_distance_matrix(vocab, PARAMS)
            expected = oracle.distance_matrix(occurrences_as_lists(vocab), 10.0, 20.0)
            assert np.allclose(D, np.asarray(expected), atol=1e-9, rtol=0.0)

    def test_structural_invariants(self, stoplist):
        rng = random.Random(43)
        for _ in range(15):
            _, _, vocab = random_vocabulary(rng, stoplist)
            D = build_distance_matrix(vocab, PARAMS)
            assert np.array_equal(D, D.T)
            assert np.all(np.diag(D) == 0.0)
            assert np.all(D >= 0.0)
            off_diagonal = D[~np.eye(vocab.size, dtype=bool)]
            if off_diagonal.size:
                assert np.all(off_diagonal >= 1.0)

    def test_extra_occurrence_never_increases_distances(self, stoplist):
        rng = random.Random(47)
        for _ in range(10):
            _, _, vocab = random_vocabulary(rng, stoplist)
            D = build_distance_matrix(vocab, PARAMS)
            target = rng.randrange(vocab.size)
            # adding one more occurrence in a fresh trailing paragraph
            entries = list(vocab.entries)
            extra = Position(doc_index=99, sentence_index=0, word_index=0)
            entry = entries[target]
            entries[target] = VocabEntry(entry.stem, entry.code, entry.occurrences + (extra,))
            D2 = build_distance_matrix(Vocabulary(entries), PARAMS)
            assert np.all(D2[target] <= D[target] + 1e-12)
            assert np.all(D2[:, target] <= D[:, target] + 1e-12)
            untouched = [i for i in range(vocab.size) if i != target]
            assert np.array_equal(D2[np.ix_(untouched, untouched)], D[np.ix_(untouched, untouched)])


class TestCooccurrenceMatrix:
    def test_never_cooccurring_pair_is_one(self):
        corpus = segment("aaa aaa aaa.\n\nbbb bbb bbb.")
        vocab = build_vocabulary(corpus)
        B = build_cooccurrence_matrix(vocab)
        assert B[0, 1] == 1.0

    def test_two_shared_sentences_one_shared_document(self):
        corpus = segment("aaa bbb. aaa bbb. aaa bbb zzz zzz zzz.")
        vocab = build_vocabulary(corpus)
        a, b = vocab.by_stem["aaa"].code, vocab.by_stem["bbb"].code
        B = build_cooccurrence_matrix(vocab)
        # 1 + 3 shared sentences + 1 shared document
        assert B[a, b] == 5.0

    def test_counting_oracle_on_random_corpora(self, stoplist):
        rng = random.Random(53)
        for _ in range(15):
            _, _, vocab = random_vocabulary(rng, stoplist)
            B = build_cooccurrence_matrix(vocab)
            expected = oracle.cooccurrence_matrix(occurrences_as_lists(vocab))
            assert np.array_equal(B, np.asarray(expected))

    def test_symmetric_unit_diagonal_and_floor(self, stoplist):
        rng = random.Random(59)
        for _ in range(15):
            _, _, vocab = random_vocabulary(rng, stoplist)
            B = build_cooccurrence_matrix(vocab)
            assert np.array_equal(B, B.T)
            assert np.all(np.diag(B) == 1.0)
            assert np.all(B >= 1.0)


class TestExportAndAudit:
    def test_csv_round_trips(self, tmp_path):
        D = np.array([[0.0, 4.0], [4.0, 0.0]])
        path = tmp_path / "distance.csv"
        export_distance_csv(D, path)
        back = np.loadtxt(path, delimiter=",")
        assert np.array_equal(back, D)

    def test_triangle_violation_counter(self):
        ok = np.array(
            [[0.0, 1.0, 2.0], [1.0, 0.0, 1.0], [2.0, 1.0, 0.0]]
        )
        assert triangle_violations(ok) == 0
        bad = np.array(
            [[0.0, 1.0, 9.0], [1.0, 0.0, 1.0], [9.0, 1.0, 0.0]]
        )
        assert triangle_violations(bad) > 0
