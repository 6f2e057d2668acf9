"""
This module provides the code families and code transforms the spectra are
computed on.

Functions:
- hamming(r): The (2^r-1, 2^r-1-r) Hamming code.
- reed_muller(r, m): The r-th order Reed-Muller code RM(r, m) of length 2^m.
- bch(m, designed_d): The primitive narrow-sense BCH code of length 2^m-1.
- extend(C): Append an overall parity bit as the last coordinate.
- puncture(C, pos): Delete one coordinate without losing dimension.
- even_subcode(C): The subcode of even-weight codewords.
- random_linear_code(n, k, seed): A reproducible random full-rank code.
- zero_code(n): The (n, 0) code.
- build_family(family, params, seed): Dispatch by family name (CLI helper).

Attributes:
    logger (Logger): The logger object used for construction events.
"""

from itertools import combinations

import numpy as np

from config import Config
from data.bit_vector import BinaryMatrix
from data.linear_code import LinearCode
from utility.errors import PreconditionError, PunctureRankError
from utility.gf2 import reduce_by, xor_basis, rank_of_bits
from utility.gf2m_field import Gf2mField, poly_degree, poly_mul
from utility.logger import setup_logger

logger = setup_logger('code_constructions_log')

FAMILIES = ('hamming', 'rm', 'bch', 'random')


def _check_length(n):
    if n > Config.LENGTH_CAP:
        raise PreconditionError(f"length {n} exceeds the length cap {Config.LENGTH_CAP}")


def null_space_bits(columns):
    """
    Return a basis of {x : XOR of columns[j] over Supp(x) = 0}.

    Columns are scanned left to right; a column that is a combination of
    earlier pivot columns closes one kernel vector, so the result is a
    standard-form completion of the parity checks.
    """
    pivots = []  # (value, combination), values with distinct leading bits
    kernel = []
    for j, value in enumerate(columns):
        combination = 1 << j
        for pv, pc in pivots:
            if value ^ pv < value:
                value ^= pv
                combination ^= pc
        if value:
            pivots.append((value, combination))
            pivots.sort(key=lambda p: -p[0])
        else:
            kernel.append(combination)
    return kernel


def zero_code(n):
    return LinearCode(BinaryMatrix(n, ()), name=f"zero({n})")


def hamming(r):
    """
    Build the Hamming code with r parity checks.

    The parity-check matrix has the nonzero r-bit columns 1, 2, ..., 2^r - 1
    in ascending order; the generator spans its null space.

    Raises:
        PreconditionError: If r < 2 or the length is above the cap.
    """
    if r < 2:
        raise PreconditionError(f"Hamming codes need r >= 2, got {r}")
    n = (1 << r) - 1
    _check_length(n)
    rows = null_space_bits(range(1, n + 1))
    code = LinearCode(BinaryMatrix.from_bits(n, rows), name=f"Hamming({n},{n - r})")
    logger.debug("Built %s", code.describe())
    return code


def reed_muller(r, m):
    """
    Build RM(r, m).

    Rows are the evaluation vectors of the monomials of degree <= r, lowest
    degree first, over the 2^m points in lexicographic order: point p assigns
    x_j the bit m-1-j of p.

    Raises:
        PreconditionError: Unless 0 <= r <= m, or if 2^m is above the length cap.
    """
    if m < 0 or not 0 <= r <= m:
        raise PreconditionError(f"RM(r, m) needs 0 <= r <= m, got r={r}, m={m}")
    n = 1 << m
    _check_length(n)

    # Evaluate each variable on every point
    points = np.arange(n)
    variables = np.array([(points >> (m - 1 - j)) & 1 for j in range(m)], dtype=np.uint8)
    # One row per monomial, lowest degree first
    rows = []
    for degree in range(r + 1):
        for monomial in combinations(range(m), degree):
            evaluation = np.ones(n, dtype=np.uint8)
            for j in monomial:
                evaluation &= variables[j]
            rows.append(evaluation)
    G = BinaryMatrix.from_array(np.array(rows))
    code = LinearCode(G, name=f"RM({r},{m})", transitive_invariant=True)
    logger.debug("Built %s", code.describe())
    return code


def bch_generator_polynomial(field, designed_d):
    """lcm of the minimal polynomials of alpha, ..., alpha^(designed_d - 1)."""
    seen = set()
    g = 1
    for i in range(1, designed_d):
        coset = tuple(field.cyclotomic_coset(i))
        if coset in seen:
            continue
        seen.add(coset)
        g = poly_mul(g, field.minimal_polynomial(i))
    return g


def bch(m, designed_d, primitive_poly=None):
    """
    Build the primitive narrow-sense binary BCH code of length 2^m - 1.

    The generator matrix holds the k = n - deg g cyclic shifts of g(x).

    Raises:
        PreconditionError: If designed_d is outside 2..n or n is above the cap.
    """
    n = (1 << m) - 1
    _check_length(n)
    if not 2 <= designed_d <= n:
        raise PreconditionError(f"designed distance must lie in 2..{n}, got {designed_d}")
    field = Gf2mField(m, primitive_poly)
    g = bch_generator_polynomial(field, designed_d)
    k = n - poly_degree(g)
    G = BinaryMatrix.from_bits(n, [g << i for i in range(k)])
    code = LinearCode(G, name=f"BCH({n},{k})", cyclic=True)
    logger.debug("Built %s with g(x) = %s", code.describe(), bin(g))
    return code


def extend(C):
    """
    Append an overall parity bit at position n to every generator row.

    Every codeword of the result has even weight, since parity is linear.
    """
    n = C.n
    rows = [r | ((r.bit_count() & 1) << n) for r in C.rows]
    code = LinearCode(
        BinaryMatrix.from_bits(n + 1, rows), name=f"ext {C.name}".strip(), extended_of=n
    )
    logger.debug("Extended %s to %s", C.describe(), code.describe())
    return code


def _delete_bit(word, pos):
    low = word & ((1 << pos) - 1)
    return low | ((word >> (pos + 1)) << pos)


def puncture(C, pos):
    """
    Delete coordinate pos.

    Raises:
        PreconditionError: If pos is not a coordinate.
        PunctureRankError: If deleting the column lowers the dimension.
    """
    if not 0 <= pos < C.n:
        raise PreconditionError(f"position {pos} outside 0..{C.n - 1}")
    rows = [_delete_bit(r, pos) for r in C.rows]

    # Check that no two codewords collapse
    if rank_of_bits(rows) != C.k:
        logger.error("Puncturing %s at %s drops its dimension", C.describe(), pos)
        raise PunctureRankError("puncture destroys dimension")
    name = C.name[4:] if C.extended_of == pos and C.name.startswith('ext ') else f"punc {C.name}"
    code = LinearCode(BinaryMatrix.from_bits(C.n - 1, rows), name=name.strip())
    logger.debug("Punctured %s at %s", C.describe(), pos)
    return code


def even_subcode(C):
    """
    Return the even-weight subcode.

    One odd-weight row is used as pivot and added to every other odd-weight
    row; a code without odd-weight rows is returned unchanged.
    """
    odd = [i for i, r in enumerate(C.rows) if r.bit_count() & 1]
    if not odd:
        return C
    pivot = C.rows[odd[0]]
    rows = [r ^ pivot if r.bit_count() & 1 else r
            for i, r in enumerate(C.rows) if i != odd[0]]
    code = LinearCode(BinaryMatrix.from_bits(C.n, rows), name=f"even {C.name}".strip())
    logger.debug("Even subcode of %s is %s", C.describe(), code.describe())
    return code


def random_linear_code(n, k, seed=None):
    """
    Draw a random (n, k) code, reproducibly for a fixed seed.

    Each row is redrawn until it is independent of the rows before it.

    Raises:
        PreconditionError: Unless 0 <= k <= n.
    """
    if not 0 <= k <= n:
        raise PreconditionError(f"random code needs 0 <= k <= n, got n={n}, k={k}")
    _check_length(n)
    seed = Config.DEFAULT_SEED if seed is None else seed
    rng = np.random.default_rng(seed)
    rows = []
    basis = []
    while len(rows) < k:
        row = sum(int(b) << i for i, b in enumerate(rng.integers(0, 2, size=n)))
        if row and reduce_by(basis, row):
            rows.append(row)
            basis = xor_basis(rows)
    return LinearCode(BinaryMatrix.from_bits(n, rows), name=f"random({n},{k},seed={seed})")


def build_family(family, params, seed=None):
    """
    Build a code from a family name and integer parameters.

    Args:
        family (str): One of hamming (r), rm (r m), bch (m d), random (n k).
        params (list): The integer parameters.
        seed (int): Seed for the random family.

    Raises:
        PreconditionError: On an unknown family or a wrong parameter count.
    """
    arity = {'hamming': 1, 'rm': 2, 'bch': 2, 'random': 2}
    if family not in arity:
        raise PreconditionError(f"unknown family {family!r}; choose from {', '.join(FAMILIES)}")
    if len(params) != arity[family]:
        raise PreconditionError(f"{family} takes {arity[family]} parameter(s), got {len(params)}")
    if family == 'hamming':
        return hamming(*params)
    if family == 'rm':
        return reed_muller(*params)
    if family == 'bch':
        return bch(*params)
    return random_linear_code(*params, seed=seed)

# End of services/code_constructions.py
