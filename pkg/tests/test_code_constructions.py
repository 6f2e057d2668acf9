import sys
import os
sys.path.insert(0, os.path.abspath(os.path.join(os.path.dirname(__file__), '..')))

import pytest
from data.bit_vector import BinaryMatrix
from data.linear_code import LinearCode, parse_matrix
from services.code_constructions import (
    bch, bch_generator_polynomial, build_family, even_subcode, extend, hamming, null_space_bits, puncture,
    random_linear_code, reed_muller, zero_code,
)
from services.zero_neighbor import minimum_distance, weight_distribution
from utility.errors import PreconditionError, PunctureRankError
from utility.gf2m_field import Gf2mField, poly_mul


def weights(code):
    return set(weight_distribution(code).weights())


@pytest.mark.parametrize("r, n, k, d", [
    (2, 3, 1, 3),
    (3, 7, 4, 3),
    (4, 15, 11, 3),
])
def test_hamming(r, n, k, d):
    code = hamming(r)
    assert (code.n, code.k) == (n, k)
    assert minimum_distance(weight_distribution(code)) == d


def test_hamming_needs_two_checks():
    with pytest.raises(PreconditionError):
        hamming(1)


def test_reed_muller_first_order():
    code = reed_muller(1, 3)
    assert (code.n, code.k) == (8, 4)
    assert weights(code) == {0, 4, 8}
    assert code.transitive_invariant


@pytest.mark.parametrize("r, m, k", [
    (0, 3, 1),
    (3, 3, 8),
    (2, 4, 11),
    (1, 4, 5),
    (2, 5, 16),
])
def test_reed_muller_dimensions(r, m, k):
    code = reed_muller(r, m)
    assert (code.n, code.k) == (1 << m, k)


def test_reed_muller_nesting():
    assert reed_muller(2, 4).contains_code(reed_muller(1, 4))
    assert reed_muller(1, 4).contains_code(reed_muller(0, 4))


def test_reed_muller_bad_order():
    with pytest.raises(PreconditionError):
        reed_muller(4, 3)


def test_gf16_tables():
    field = Gf2mField(4)
    assert len(set(field.antilog)) == 15
    assert field.alpha_pow(15) == 1
    assert field.minimal_polynomial(1) == 0b10011
    assert field.minimal_polynomial(3) == 0b11111
    assert field.cyclotomic_coset(3) == [3, 6, 9, 12]


def test_non_primitive_polynomial_rejected():
    # x^4 + x^3 + x^2 + x + 1 divides x^5 + 1
    with pytest.raises(PreconditionError):
        Gf2mField(4, 0b11111)


def test_bch_15_7_generator():
    g = bch_generator_polynomial(Gf2mField(4), 5)
    assert g == 0b111010001
    code = bch(4, 5)
    assert (code.n, code.k) == (15, 7)
    assert code.cyclic
    assert minimum_distance(weight_distribution(code)) == 5


@pytest.mark.parametrize("m, d, k", [
    (4, 2, 11),
    (4, 5, 7),
    (5, 7, 16),
    (3, 3, 4),
])
def test_bch_dimensions(m, d, k):
    assert bch(m, d).k == k


def parity_check_columns(code):
    columns = [sum((r >> j & 1) << i for i, r in enumerate(code.rows)) for j in range(code.n)]
    checks = null_space_bits(columns)
    return [sum((h >> j & 1) << i for i, h in enumerate(checks)) for j in range(code.n)]


@pytest.mark.parametrize("m, d", [(m, d) for m in range(2, 6) for d in range(2, 1 << m)])
def test_bch_minimum_distance_reaches_designed_distance(m, d):
    code = bch(m, d)
    if code.k <= 21:
        assert minimum_distance(weight_distribution(code)) >= d
    else:
        # distance 3 means nonzero, pairwise distinct parity-check columns
        columns = parity_check_columns(code)
        assert d <= 3
        assert 0 not in columns and len(set(columns)) == code.n


def test_poly_mul_is_carry_less():
    assert poly_mul(0b11, 0b11) == 0b101


def test_extend_hamming_matches_rm13_weights():
    ext = extend(hamming(3))
    assert (ext.n, ext.k) == (8, 4)
    assert weight_distribution(ext) == weight_distribution(reed_muller(1, 3))
    assert ext.extended_of == 7


def test_extend_repetition():
    ext = extend(hamming(2))
    assert ext.G.to_strings() == ['1111']


def test_extend_even_code_appends_zero_column():
    code = reed_muller(1, 3)
    assert all(s.endswith('0') for s in extend(code).G.to_strings())


@pytest.mark.parametrize("code", [hamming(3), bch(4, 5), reed_muller(1, 3), parse_matrix("1000\n0111\n")])
def test_puncture_undoes_extend(code):
    assert puncture(extend(code), code.n).G == code.G


def test_puncture_rm13_gives_hamming_weights():
    code = puncture(reed_muller(1, 3), 7)
    assert (code.n, code.k) == (7, 4)
    assert weights(code) == {0, 3, 4, 7}


def test_puncture_repetition():
    four = LinearCode(BinaryMatrix.from_strings(['1111']))
    assert puncture(four, 0).G.to_strings() == ['111']


def test_puncture_rank_drop():
    code = parse_matrix("1000\n0111\n")
    with pytest.raises(PunctureRankError, match="puncture destroys dimension"):
        puncture(code, 0)


def test_even_subcode():
    even = even_subcode(hamming(3))
    assert (even.n, even.k) == (7, 3)
    assert weights(even) == {0, 4}
    assert even_subcode(reed_muller(1, 3)) == reed_muller(1, 3)
    assert even_subcode(hamming(2)).k == 0


def test_random_code_reproducible():
    a = random_linear_code(10, 5, seed=1)
    b = random_linear_code(10, 5, seed=1)
    assert a.G == b.G
    assert a.k == 5


def test_random_code_universe_and_single_row():
    assert random_linear_code(4, 4, seed=9).k == 4
    single = random_linear_code(6, 1, seed=7)
    assert single.k == 1 and single.rows[0] != 0


def test_zero_code():
    assert weight_distribution(zero_code(5)).items() == [(0, 1)]


def test_build_family(mocker):
    spy = mocker.spy(sys.modules['services.code_constructions'], 'reed_muller')
    code = build_family('rm', [1, 3])
    assert code.k == 4
    spy.assert_called_once_with(1, 3)
    with pytest.raises(PreconditionError):
        build_family('rm', [1])
    with pytest.raises(PreconditionError):
        build_family('golay', [])


if __name__ == "__main__":
    pytest.main()
