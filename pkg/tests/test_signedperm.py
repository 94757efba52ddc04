import random

import numpy as np
import pytest

from rainbowlab import (
    Graph,
    SignedMatrix,
    find_isomorphism,
    fold_permutation,
    integrate,
    is_integration,
    permutation_blocks,
    rainbow_double,
    seidel_of_graph,
    switch_subset,
    switching_witness,
)

from conftest import random_graph

# the worked 4x4 example: a signed half-permutation and one of its integrations
HALF_EXAMPLE = SignedMatrix.from_values(
    [[0, -0.5, 0, 0.5],
     [-0.5, -0.5, 0, 0],
     [0, 0, -1, 0],
     [0.5, 0, 0, 0.5]]
)
INTEGRATED_EXAMPLE = SignedMatrix.from_values(
    [[0, -1, 0, 0],
     [-1, 0, 0, 0],
     [0, 0, -1, 0],
     [0, 0, 0, 1]]
)


def perm_matrix(images) -> np.ndarray:
    p = np.zeros((len(images), len(images)), dtype=np.int64)
    for i, j in enumerate(images):
        p[i, j] = 1
    return p


def random_perm_matrix(rng: random.Random, m: int) -> np.ndarray:
    images = list(range(m))
    rng.shuffle(images)
    return perm_matrix(images)


class TestSignedMatrix:
    def test_rejects_out_of_range(self):
        with pytest.raises(ValueError):
            SignedMatrix([[3]])
        with pytest.raises(ValueError):
            SignedMatrix.from_values([[0.25]])

    def test_predicates(self):
        assert SignedMatrix.identity(3).is_signed_permutation()
        assert SignedMatrix.identity(3).is_signed_half_permutation()
        assert HALF_EXAMPLE.is_signed_half_permutation()
        assert not HALF_EXAMPLE.is_signed_permutation()
        assert not SignedMatrix([[2, 2], [2, 2]]).is_signed_half_permutation()

    def test_signed_permutation_is_orthogonal(self, rng):
        for _ in range(50):
            m = rng.randint(1, 6)
            p = random_perm_matrix(rng, 2 * m)
            q = integrate(fold_permutation(p))
            d = q.doubled
            assert np.array_equal(d @ d.T, 4 * np.eye(m, dtype=np.int64))

    def test_json_round_trip(self):
        assert SignedMatrix.from_json(HALF_EXAMPLE.to_json()) == HALF_EXAMPLE


class TestPermutationBlocks:
    def test_identity(self):
        p1, p2, p3, p4 = permutation_blocks(np.eye(4, dtype=np.int64))
        assert np.array_equal(p1, np.eye(2)) and np.array_equal(p4, np.eye(2))
        assert not p2.any() and not p3.any()

    def test_block_swap(self):
        z = np.zeros((2, 2), dtype=np.int64)
        e = np.eye(2, dtype=np.int64)
        p1, p2, p3, p4 = permutation_blocks(np.block([[z, e], [e, z]]))
        assert not p1.any() and not p4.any()
        assert np.array_equal(p2, e) and np.array_equal(p3, e)

    def test_transposition(self):
        blocks = permutation_blocks(perm_matrix([1, 0]))
        assert [b.tolist() for b in blocks] == [[[0]], [[1]], [[1]], [[0]]]

    def test_rejects_bad_input(self):
        with pytest.raises(ValueError):
            permutation_blocks(np.eye(3, dtype=np.int64))  # odd dimension
        with pytest.raises(ValueError):
            permutation_blocks(np.ones((4, 4), dtype=np.int64))

    def test_block_identities_random(self, rng):
        for _ in range(1000):
            n = rng.randint(1, 10)
            p = random_perm_matrix(rng, 2 * n)
            p1, p2, p3, p4 = permutation_blocks(p)
            eye = np.eye(n, dtype=np.int64)
            assert not (p1 @ p3.T).any()
            assert not (p2 @ p4.T).any()
            assert not (p3 @ p1.T).any()
            assert not (p4 @ p2.T).any()
            assert np.array_equal(p1 @ p1.T + p2 @ p2.T, eye)
            assert np.array_equal(p3 @ p3.T + p4 @ p4.T, eye)


class TestFoldPermutation:
    def test_identity_folds_to_identity(self):
        assert fold_permutation(np.eye(8, dtype=np.int64)) == SignedMatrix.identity(4)

    def test_block_swap_folds_to_minus_identity(self):
        z = np.zeros((3, 3), dtype=np.int64)
        e = np.eye(3, dtype=np.int64)
        folded = fold_permutation(np.block([[z, e], [e, z]]))
        assert np.array_equal(folded.doubled, -2 * e)

    def test_transposition(self):
        assert fold_permutation(perm_matrix([1, 0])).doubled.tolist() == [[-2]]

    def test_always_half_permutation(self, rng):
        for _ in range(1000):
            n = rng.randint(1, 10)
            folded = fold_permutation(random_perm_matrix(rng, 2 * n))
            assert folded.is_signed_half_permutation()


class TestIntegration:
    def test_worked_example(self):
        assert is_integration(HALF_EXAMPLE, INTEGRATED_EXAMPLE)

    def test_integrate_passes_checker(self):
        got = integrate(HALF_EXAMPLE)
        assert is_integration(HALF_EXAMPLE, got)

    def test_identity_integrates_to_itself(self):
        assert integrate(SignedMatrix.identity(4)) == SignedMatrix.identity(4)

    def test_halves_never_survive(self):
        assert is_integration(HALF_EXAMPLE, HALF_EXAMPLE) is False

    def test_sign_flip_is_not_an_integration(self):
        eye = SignedMatrix.identity(2)
        assert is_integration(eye, SignedMatrix(-eye.doubled)) is False

    def test_two_by_two_all_halves(self):
        s = SignedMatrix.from_values([[0.5, 0.5], [0.5, -0.5]])
        assert is_integration(s, integrate(s))

    def test_every_row_and_column_single_signed_one(self, rng):
        for _ in range(500):
            n = rng.randint(1, 8)
            s = fold_permutation(random_perm_matrix(rng, 2 * n))
            t = integrate(s)
            assert t.is_signed_permutation()
            assert is_integration(s, t)

    def test_rejects_non_half_permutation(self):
        with pytest.raises(ValueError):
            integrate(SignedMatrix([[2, 2], [2, 2]]))

    def test_dimension_mismatch(self):
        with pytest.raises(ValueError):
            is_integration(SignedMatrix.identity(2), SignedMatrix.identity(3))


class TestSwitchingWitness:
    def test_trivial_identity(self):
        a = seidel_of_graph(Graph.empty(1))
        q = switching_witness(a, a, np.eye(2, dtype=np.int64))
        assert q.doubled.tolist() == [[2]]

    def test_trivial_swap(self):
        a = seidel_of_graph(Graph.empty(1))
        q = switching_witness(a, a, perm_matrix([1, 0]))
        assert q.doubled.tolist() == [[-2]]
        assert np.array_equal(q.doubled @ a.entries @ q.doubled.T, 4 * a.entries)

    def test_rejects_non_isomorphism(self):
        a = seidel_of_graph(Graph.complete(2))
        b = seidel_of_graph(Graph.empty(2))
        with pytest.raises(ValueError):
            switching_witness(a, b, np.eye(4, dtype=np.int64))

    def test_pipeline_on_random_switches(self, rng):
        # doubled graphs of a graph and a relabeled switch are isomorphic;
        # the witness must conjugate one edge-sign matrix onto the other
        done = 0
        while done < 200:
            n = rng.randint(1, 6)
            g = random_graph(rng, n)
            subset = [v for v in range(n) if rng.random() < 0.5]
            relabel = list(range(n))
            rng.shuffle(relabel)
            h = switch_subset(g, subset).relabel(relabel)
            iso = find_isomorphism(rainbow_double(h).graph, rainbow_double(g).graph)
            assert iso is not None
            p = np.zeros((2 * n, 2 * n), dtype=np.int64)
            for i, j in enumerate(iso):
                p[j, i] = 1
            a, b = seidel_of_graph(g), seidel_of_graph(h)
            q = switching_witness(a, b, p)
            assert q.is_signed_permutation()
            assert np.array_equal(q.doubled @ b.entries @ q.doubled.T, 4 * a.entries)
            done += 1

    def test_fold_transports_shifted_matrices(self, rng):
        # whenever the precondition holds, Z(B-I)Z^T must equal A-I exactly,
        # and Z(B-I) must have all entries +-1; exercised via the public
        # pipeline, which raises if either identity fails
        for _ in range(50):
            n = rng.randint(1, 5)
            g = random_graph(rng, n)
            h = switch_subset(g, [0] if n else [])
            iso = find_isomorphism(rainbow_double(h).graph, rainbow_double(g).graph)
            p = np.zeros((2 * n, 2 * n), dtype=np.int64)
            for i, j in enumerate(iso):
                p[j, i] = 1
            switching_witness(seidel_of_graph(g), seidel_of_graph(h), p)
