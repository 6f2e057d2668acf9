import sys
import os
sys.path.insert(0, os.path.abspath(os.path.join(os.path.dirname(__file__), '..')))

import pytest
from data.bit_vector import BitVector, BinaryMatrix
from data.linear_code import LinearCode, format_matrix, load_matrix, parse_matrix, save_matrix
from utility.errors import LengthMismatchError, MatrixFormatError, PreconditionError


def test_parse_matrix_ignores_comments_and_blanks():
    code = parse_matrix("# a comment\n\n 1000 \n0111\n", name='toy')
    assert (code.n, code.k) == (4, 2)
    assert code.describe() == 'toy (4,2)'


def test_parse_matrix_empty_with_length_header():
    code = parse_matrix("# n = 6\n")
    assert (code.n, code.k) == (6, 0)


@pytest.mark.parametrize("text", [
    "",
    "# only a comment\n",
    "101\n10\n",
    "1021\n",
    "# n = 5\n1010\n",
])
def test_parse_matrix_rejects_malformed_text(text):
    with pytest.raises(MatrixFormatError) as excinfo:
        parse_matrix(text)
    assert excinfo.value.exit_code == 2


def test_dependent_rows_are_a_precondition_failure():
    with pytest.raises(PreconditionError) as excinfo:
        parse_matrix("110\n011\n101\n")
    assert excinfo.value.exit_code == 3


def test_membership():
    code = parse_matrix("1000\n0111\n")
    assert code.contains(BitVector.from_string('1111'))
    assert code.contains(BitVector.zeros(4))
    assert not code.contains(BitVector.from_string('1100'))
    with pytest.raises(LengthMismatchError):
        code.contains(BitVector.from_string('111'))


def test_contains_code_and_tags():
    big = parse_matrix("1000\n0111\n")
    small = parse_matrix("1111\n")
    assert big.contains_code(small)
    assert not small.contains_code(big)
    tagged = big.with_tags(transitive_invariant=True, name='tagged')
    assert tagged.transitive_invariant
    assert tagged.rows == big.rows


def test_save_and_load_round_trip(tmp_path):
    code = LinearCode(BinaryMatrix.from_strings(['1110000', '1001100']), name='pair')
    path = tmp_path / 'pair.txt'
    save_matrix(code, path)
    loaded = load_matrix(path)
    assert loaded.G == code.G
    assert format_matrix(code).splitlines()[1] == '# n = 7'


def test_save_and_load_zero_code(tmp_path):
    code = LinearCode(BinaryMatrix(5, ()), name='zero')
    path = tmp_path / 'zero.txt'
    save_matrix(code, path)
    assert load_matrix(path).n == 5


if __name__ == "__main__":
    pytest.main()
