import sys
import os
sys.path.insert(0, os.path.abspath(os.path.join(os.path.dirname(__file__), '..')))

import logging
import numpy as np
import pytest
from data.bit_vector import BinaryMatrix, BitVector
from data.linear_code import LinearCode, parse_matrix
from data.permutation import Permutation
from data.weight_tally import WeightTally
from services.code_constructions import (
    bch, even_subcode, extend, hamming, puncture, random_linear_code, reed_muller, zero_code,
)
from services.zero_neighbor import (
    DecompCategory, classify, decomposition_profile, is_zero_neighbor, is_zero_neighbor_by_scan,
    local_weight_distribution, lwd_from_weights_only, minimum_distance, only_odd_counts, sweep,
    weight_block, weight_distribution,
)
from utility.errors import EnumerationCapError, NotInCodeError, PreconditionError
from utility.gf2 import gray_block

TOY = "1000\n0111\n"


def small_random_code(seed):
    rng = np.random.default_rng(seed)
    n = int(rng.integers(1, 15))
    k = int(rng.integers(0, min(n, 8) + 1))
    return random_linear_code(n, k, seed=seed)


STRUCTURED = [
    hamming(3),
    hamming(4),
    reed_muller(1, 3),
    reed_muller(1, 4),
    reed_muller(2, 4),
    bch(4, 5),
    bch(4, 2),
    bch(5, 7),
    parse_matrix(TOY, name='toy'),
]
SMALL_STRUCTURED = [code for code in STRUCTURED if code.k <= 11]


def nonzero_words(code):
    return [BitVector(code.n, w) for w in gray_block(code.rows, 1, 1 << code.k)]


def zero_neighbors_by_support_scan(code):
    words = np.fromiter(gray_block(code.rows, 1, 1 << code.k), dtype=np.uint64)
    # a zero neighbor is the only nonzero codeword supported inside itself
    return {int(word) for word in words if np.count_nonzero((words & ~word) == 0) == 1}


@pytest.mark.parametrize("code", STRUCTURED, ids=lambda c: c.describe())
def test_rank_test_agrees_with_scan_on_structured_codes(code):
    minimal = zero_neighbors_by_support_scan(code)
    for v in nonzero_words(code):
        assert is_zero_neighbor(code, v) == (v.bits in minimal)


@pytest.mark.parametrize("code", SMALL_STRUCTURED, ids=lambda c: c.describe())
def test_support_scan_agrees_with_codeword_scan(code):
    minimal = zero_neighbors_by_support_scan(code)
    assert minimal == {v.bits for v in nonzero_words(code) if is_zero_neighbor_by_scan(code, v)}


@pytest.mark.parametrize("seed", range(200))
def test_rank_test_agrees_with_scan_on_random_codes(seed):
    code = small_random_code(seed)
    for v in nonzero_words(code):
        assert is_zero_neighbor(code, v) == is_zero_neighbor_by_scan(code, v)


def test_neighbors_of_hamming():
    code = hamming(3)
    assert is_zero_neighbor(code, BitVector.from_string('1110000'))
    assert not is_zero_neighbor(code, BitVector.ones(7))


def test_all_ones_of_rm13_is_decomposable():
    assert not is_zero_neighbor(reed_muller(1, 3), BitVector.ones(8))


def test_neighborship_preconditions():
    code = hamming(3)
    with pytest.raises(NotInCodeError):
        is_zero_neighbor(code, BitVector.from_string('1000000'))
    with pytest.raises(PreconditionError):
        is_zero_neighbor(code, BitVector.zeros(7))


@pytest.mark.parametrize("text, word, expected", [
    (TOY, '1111', DecompCategory.ONLY_ODD_DECOMPOSABLE),
    ("100\n011\n", '111', DecompCategory.DECOMPOSABLE_ODD_WEIGHT),
    (TOY, '1000', DecompCategory.INDECOMPOSABLE),
])
def test_classify(text, word, expected):
    assert classify(parse_matrix(text), BitVector.from_string(word)) is expected


def test_classify_rm13_all_ones():
    assert classify(reed_muller(1, 3), BitVector.ones(8)) is DecompCategory.EVEN_DECOMPOSABLE


def test_classify_support_subcode_cap(caplog):
    caplog.set_level(logging.WARNING)
    with pytest.raises(EnumerationCapError):
        classify(reed_muller(1, 3), BitVector.ones(8), cap=8)
    assert "exceeds cap 8" in caplog.text
    assert classify(reed_muller(1, 3), BitVector.ones(8), cap=8, force=True) is DecompCategory.EVEN_DECOMPOSABLE


@pytest.mark.parametrize("code, expected", [
    (hamming(3), {0: 1, 3: 7, 4: 7, 7: 1}),
    (reed_muller(1, 3), {0: 1, 4: 14, 8: 1}),
    (zero_code(6), {0: 1}),
])
def test_weight_distribution(code, expected):
    assert weight_distribution(code) == WeightTally(code.n, expected)


@pytest.mark.parametrize("code, expected", [
    (hamming(3), {3: 7, 4: 7}),
    (reed_muller(1, 3), {4: 14}),
    (parse_matrix(TOY), {1: 1, 3: 1}),
    (zero_code(3), {}),
])
def test_local_weight_distribution(code, expected):
    for use_shortcuts in (True, False):
        assert local_weight_distribution(code, use_shortcuts) == WeightTally(code.n, expected)


@pytest.mark.parametrize("code, expected", [
    (parse_matrix(TOY), {4: 1}),
    (hamming(3), {}),
    (reed_muller(1, 3), {}),
])
def test_only_odd_counts(code, expected):
    assert only_odd_counts(code) == WeightTally(code.n, expected)


def test_only_odd_counts_vanish_when_extended_weights_divisible_by_four():
    # every weight of RM(1,3), RM(1,4) and RM(2,5) is a multiple of four
    for r, m in ((1, 3), (1, 4), (2, 5)):
        punctured = puncture(reed_muller(r, m), (1 << m) - 1)
        assert only_odd_counts(punctured).total() == 0


@pytest.mark.parametrize("code", STRUCTURED, ids=lambda c: c.describe())
def test_distance_bounds_on_computed_codes(code):
    A = weight_distribution(code)
    L = local_weight_distribution(code, use_shortcuts=False)
    d = minimum_distance(A)
    for w in range(1, code.n + 1):
        if w < 2 * d:
            assert L[w] == A[w]
        if w > code.n - code.k + 1:
            assert L[w] == 0


def test_weights_only_sufficiency():
    assert lwd_from_weights_only(weight_distribution(hamming(3)), 7, 4)
    assert lwd_from_weights_only(weight_distribution(reed_muller(2, 4)), 16, 11)
    assert not lwd_from_weights_only(weight_distribution(parse_matrix(TOY)), 4, 2)


def test_shortcut_skips_rank_tests_when_weights_suffice(mocker):
    spy = mocker.spy(sys.modules['services.zero_neighbor'], 'neighbor_block')
    assert local_weight_distribution(hamming(3)) == WeightTally(7, {3: 7, 4: 7})
    spy.assert_not_called()


@pytest.mark.parametrize("code", SMALL_STRUCTURED, ids=lambda c: c.describe())
def test_partitioning_and_workers_do_not_change_tallies(code):
    reference = local_weight_distribution(code, use_shortcuts=False, partitions=1, workers=1)
    for partitions, workers in ((2, 1), (2, 2), (8, 8), (3, 2)):
        assert local_weight_distribution(code, partitions=partitions, workers=workers) == reference
        assert local_weight_distribution(code, False, partitions=partitions, workers=workers) == reference
    assert only_odd_counts(code, partitions=8, workers=8) == only_odd_counts(code, partitions=1)


def test_sweep_splits_the_message_range():
    blocks = []

    def recording_block(C, start, stop):
        blocks.append((start, stop))
        return weight_block(C, start, stop)
    recording_block.__name__ = 'recording_block'

    tally = sweep(hamming(3), recording_block, partitions=3, workers=1)
    assert sorted(blocks) == [(0, 6), (6, 11), (11, 16)]
    assert tally.total() == 16


def test_sweep_cap():
    with pytest.raises(EnumerationCapError):
        weight_distribution(bch(4, 5), cap=6)


def test_decomposition_profile_accounts_for_every_word():
    code = reed_muller(2, 4)
    profile = decomposition_profile(code)
    total = WeightTally(code.n)
    for tally in profile.values():
        total = total + tally
    assert total == weight_distribution(code).restricted(lambda w: w > 0)
    assert profile[DecompCategory.INDECOMPOSABLE] == local_weight_distribution(code)
    assert profile[DecompCategory.ONLY_ODD_DECOMPOSABLE] == only_odd_counts(code)
    assert all(w % 2 for w in profile[DecompCategory.DECOMPOSABLE_ODD_WEIGHT].weights())


def test_extension_and_even_subcode_lengths():
    code = parse_matrix(TOY)
    assert local_weight_distribution(extend(code)) == WeightTally(5, {2: 1, 4: 2})
    assert local_weight_distribution(even_subcode(code)) == WeightTally(4, {4: 1})


@pytest.mark.parametrize("code", [bch(4, 5), reed_muller(2, 4), random_linear_code(12, 6, seed=8)],
                         ids=lambda c: c.describe())
def test_spectra_do_not_depend_on_coordinate_order(code):
    rng = np.random.default_rng(21)
    p = Permutation(tuple(int(i) for i in rng.permutation(code.n)))
    shuffled = LinearCode(BinaryMatrix.from_bits(code.n, [p.apply_bits(r) for r in code.rows]))
    assert local_weight_distribution(shuffled) == local_weight_distribution(code)
    assert only_odd_counts(shuffled) == only_odd_counts(code)


if __name__ == "__main__":
    pytest.main()
