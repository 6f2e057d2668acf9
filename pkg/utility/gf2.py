"""
This module provides the GF(2) arithmetic every sweep is built on.

Vectors are packed into Python ints (bit i = coordinate i), so a row XOR is a
single int operation and popcount is int.bit_count().

Functions:
- weight(v): Hamming weight of a BitVector.
- is_strict_subsupport(a, b): Whether Supp(a) is a proper subset of Supp(b).
- xor_basis(rows): Echelon basis of a list of packed rows.
- reduced_basis(rows): Fully reduced echelon basis.
- reduce_by(basis, v): Residue of v modulo the span of an echelon basis.
- rank(M): Row rank of a BinaryMatrix.
- support_subcode_dim(G, S): Dimension of the codewords supported inside S.
- support_subcode_basis(rows, support, n): Basis of that subcode.
- gray_block(rows, start, stop): Codewords for Gray indices start..stop-1.
- enumerate_codewords(G): All 2^k codewords in Gray order.
- check_cap(k, cap, force): Refuse sweeps above the enumeration cap.

Attributes:
    logger (Logger): The logger object used for gf2 events.
"""

from bisect import insort

from config import Config
from data.bit_vector import BitVector
from utility.errors import EnumerationCapError, LengthMismatchError, PreconditionError
from utility.logger import setup_logger

logger = setup_logger('gf2_log')


def weight(v):
    """
    Return the Hamming weight of v.

    Args:
        v (BitVector): The word.

    Returns:
        int: The number of nonzero coordinates.
    """
    return v.bits.bit_count()


def is_strict_subsupport(a, b):
    """
    Decide Supp(a) ⊊ Supp(b).

    Raises:
        LengthMismatchError: If the lengths differ.
    """
    if a.length != b.length:
        raise LengthMismatchError(f"length mismatch: {a.length} vs {b.length}")
    return a.bits & ~b.bits == 0 and a.bits != b.bits


def xor_basis(rows):
    """
    Return an echelon basis of the span of rows.

    The result is sorted in decreasing order and its elements have distinct
    leading bits, which is what reduce_by relies on.
    """
    basis = []
    for r in rows:
        for b in basis:
            r = min(r, r ^ b)
        if r:
            insort(basis, r, key=lambda x: -x)
    return basis


def reduced_basis(rows):
    """Return the fully reduced echelon basis of the span of rows."""
    basis = xor_basis(rows)
    for i in range(len(basis) - 1, -1, -1):
        lead = 1 << (basis[i].bit_length() - 1)
        for j in range(i):
            if basis[j] & lead:
                basis[j] ^= basis[i]
    return basis


def reduce_by(basis, v):
    """Residue of v modulo an echelon basis (0 iff v lies in its span)."""
    for b in basis:
        v = min(v, v ^ b)
    return v


def rank_of_bits(rows):
    return len(xor_basis(rows))


def rank(M):
    """
    Return the GF(2) row rank of M.

    Args:
        M (BinaryMatrix): The matrix; it is not modified.

    Returns:
        int: The rank.
    """
    return rank_of_bits(M.row_bits)


def support_subcode_basis(rows, support, n):
    """
    Return a basis of {c in span(rows) : Supp(c) ⊆ support}.

    The rows must be linearly independent. Elimination runs on the rows masked
    to the coordinates outside the support while tracking the full rows; every
    full combination whose masked part cancels lies in the subcode.

    Args:
        rows (list): Packed, independent generator rows.
        support (int): Packed support set S.
        n (int): Code length.

    Returns:
        list: Packed basis vectors of the support subcode.
    """
    outside = ((1 << n) - 1) & ~support
    pivots = []  # (masked, full), masked parts with distinct leading bits
    kernel = []
    for r in rows:
        masked, full = r & outside, r
        for pm, pf in pivots:
            if masked ^ pm < masked:
                masked ^= pm
                full ^= pf
        if masked:
            insort(pivots, (masked, full), key=lambda p: -p[0])
        else:
            kernel.append(full)
    return kernel


def support_subcode_dim_bits(rows, support, n):
    outside = ((1 << n) - 1) & ~support
    return len(rows) - rank_of_bits([r & outside for r in rows])


def support_subcode_dim(G, S):
    """
    Return dim{c in rowspace(G) : Supp(c) ⊆ Supp(S)}.

    Computed as k minus the rank of the columns of G outside Supp(S).

    Args:
        G (BinaryMatrix): A k×n generator matrix with independent rows.
        S (BitVector): The support set, length n.

    Raises:
        LengthMismatchError: If S does not have n coordinates.
        PreconditionError: If the rows of G are dependent.
    """
    if S.length != G.n_cols:
        raise LengthMismatchError(f"support of length {S.length} for {G.n_cols} columns")
    if rank(G) != G.n_rows:
        logger.error("support_subcode_dim called with dependent rows (k=%s)", G.n_rows)
        raise PreconditionError("generator rows are linearly dependent; pass a basis")
    return support_subcode_dim_bits(G.row_bits, S.bits, G.n_cols)


def combine(rows, message):
    """XOR of the rows selected by the bits of message."""
    word = 0
    j = 0
    while message:
        if message & 1:
            word ^= rows[j]
        message >>= 1
        j += 1
    return word


def gray_block(rows, start, stop, offset=0):
    """
    Yield codewords for Gray indices start..stop-1.

    The word for index i is offset plus the combination of rows selected by
    gray(i) = i ^ (i >> 1); consecutive words differ by one row.
    """
    if start >= stop:
        return
    word = offset ^ combine(rows, start ^ (start >> 1))
    yield word
    for i in range(start + 1, stop):
        word ^= rows[(i & -i).bit_length() - 1]
        yield word


def check_cap(k, cap=None, force=False):
    """
    Refuse a 2^k sweep above the enumeration cap.

    Raises:
        EnumerationCapError: If k exceeds the cap and force is not set.
    """
    cap = Config.ENUMERATION_CAP if cap is None else cap
    if k > cap and not force:
        logger.warning("Refusing 2^%s sweep above cap %s", k, cap)
        raise EnumerationCapError(
            f"dimension {k} exceeds the enumeration cap {cap}; use force to override"
        )


def enumerate_codewords(G, cap=None, force=False):
    """
    Yield all 2^k codewords of rowspace(G) exactly once, in Gray order.

    The all-zero word comes first.

    Args:
        G (BinaryMatrix): A k×n basis.
        cap (int): Override of Config.ENUMERATION_CAP.
        force (bool): Lift the cap.

    Raises:
        EnumerationCapError: If k is above the cap.
    """
    check_cap(G.n_rows, cap, force)
    n = G.n_cols
    for word in gray_block(G.row_bits, 0, 1 << G.n_rows):
        yield BitVector(n, word)

# End of utility/gf2.py
