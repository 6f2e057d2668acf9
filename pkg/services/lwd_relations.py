"""
This module relates the local weight distribution of a code to those of its
extended code and its even weight subcode, and checks those relations on
computed spectra and on published tables.

Notation: L is a local weight distribution, N counts only-odd-decomposable
codewords, A is a weight distribution, all as WeightTally. C_ex has length
n + 1 and carries the overall parity bit last.

Functions:
- extend_lwd(L_C, N_C): L(C_ex) from L(C) and N(C).
- even_subcode_lwd(L_C, N_C): L(C_even) from L(C) and N(C).
- parity_split(L_ex): Split L(C_ex) by the parity bit of a transitive invariant C_ex.
- puncture_lwd_transitive(L_ex, N_C): L(C) from L(C_ex) when C_ex is transitive invariant.
- weights_multiple_of_four(A_ex): Whether N(C) = 0 is guaranteed.
- table_ratio_check(L, n): Odd/even neighbor ratios of a punctured transitive invariant code.
- check_distance_bounds(A, L, n, k): L_w = A_w below 2d and L_w = 0 above n - k + 1.
- compare_tallies(name, expected, actual): Weight-by-weight report.
- published_extended_lwd(table_id): L(C_ex) rebuilt from a published column.
- published_even_subcode_lwd(table_id): L(C_even) from a published column.
- verify_all_relations(C): Every relation checked on C by enumeration.

Attributes:
    logger (Logger): The logger object used for relation events.
"""

from data.lwd_report import RelationReport
from data.published_lwd import PUBLISHED_LENGTH, get_published
from data.weight_tally import WeightTally
from services.code_constructions import even_subcode, extend, puncture
from services.zero_neighbor import (
    DecompCategory, classify_bits, is_minimal_bits, local_weight_distribution,
    minimum_distance, only_odd_counts, weight_distribution,
)
from utility.errors import (
    IdentityViolationError, LengthMismatchError, PreconditionError, PunctureRankError,
)
from utility.gf2 import check_cap, gray_block
from utility.logger import setup_logger

logger = setup_logger('lwd_relations_log')


def _check_even_support(N_C):
    odd = [w for w in N_C.weights() if w & 1]
    if odd:
        raise PreconditionError(f"only-odd-decomposable counts at odd weights {odd}")


def _check_pair(L_C, N_C):
    if L_C.n != N_C.n:
        raise LengthMismatchError(f"L has length {L_C.n} but N has length {N_C.n}")
    _check_even_support(N_C)


def _exact_div(numerator, denominator, what):
    quotient, remainder = divmod(numerator, denominator)
    if remainder:
        logger.warning("Non-integral %s: %s / %s", what, numerator, denominator)
        raise IdentityViolationError(
            f"{what}: {numerator}/{denominator} is not an integer; "
            "not consistent with transitive invariance"
        )
    return quotient


def extend_lwd(L_C, N_C):
    """
    Return L(C_ex) with L_2i(C_ex) = L_2i-1(C) + L_2i(C) + N_2i(C).

    Args:
        L_C (WeightTally): Local weight distribution of C, length n.
        N_C (WeightTally): Only-odd-decomposable counts of C, length n.

    Returns:
        WeightTally: Length n + 1, zero at every odd weight.

    Raises:
        LengthMismatchError: If the tallies have different lengths.
        PreconditionError: If N_C has an odd-weight entry.
    """
    _check_pair(L_C, N_C)
    n = L_C.n
    result = WeightTally(n + 1)
    for w in range(2, n + 2, 2):
        result.add(w, L_C[w - 1] + L_C[w] + N_C[w])
    return result


def even_subcode_lwd(L_C, N_C):
    """
    Return L(C_even) with L_2i(C_even) = L_2i(C) + N_2i(C).

    Raises:
        LengthMismatchError, PreconditionError: As extend_lwd.
    """
    _check_pair(L_C, N_C)
    result = WeightTally(L_C.n)
    for w in range(2, L_C.n + 1, 2):
        result.add(w, L_C[w] + N_C[w])
    return result


def parity_split(L_ex):
    """
    Split the zero neighbors of a transitive invariant extended code by their
    parity bit.

    A transitive group spreads the w ones of the weight-w neighbors evenly
    over the n + 1 coordinates, so w L_w / (n + 1) of them end in a one.

    Returns:
        tuple: (parity-bit-one tally, parity-bit-zero tally), both of length n + 1.

    Raises:
        IdentityViolationError: If a share is not an integer.
    """
    length = L_ex.n
    ones, zeros = WeightTally(length), WeightTally(length)
    for w, count in L_ex.items():
        one = _exact_div(w * count, length, f"parity-one share at weight {w}")
        ones.add(w, one)
        zeros.add(w, count - one)
    return ones, zeros


def puncture_lwd_transitive(L_ex, N_C):
    """
    Recover L(C) from L(C_ex) for a transitive invariant C_ex.

    Odd w: L_w(C) = (w + 1) L_w+1(C_ex) / (n + 1).
    Even w: L_w(C) = (n + 1 - w) L_w(C_ex) / (n + 1) - N_w(C).

    Args:
        L_ex (WeightTally): Local weight distribution of C_ex, length n + 1.
        N_C (WeightTally): Only-odd-decomposable counts of C, length n; all
            zero when every weight of C_ex is a multiple of four.

    Raises:
        LengthMismatchError: If N_C does not have length n.
        IdentityViolationError: On a non-integral share or a negative count.
    """
    length = L_ex.n
    n = length - 1
    if N_C.n != n:
        raise LengthMismatchError(f"N has length {N_C.n}, expected {n}")
    _check_even_support(N_C)
    result = WeightTally(n)
    for w in range(1, n + 1):
        if w & 1:
            count = _exact_div((w + 1) * L_ex[w + 1], length, f"weight {w}")
        else:
            count = _exact_div((length - w) * L_ex[w], length, f"weight {w}") - N_C[w]
            if count < 0:
                logger.warning("Negative punctured count at weight %s", w)
                raise IdentityViolationError(f"negative count {count} at weight {w}")
        result.add(w, count)
    return result


def weights_multiple_of_four(A_ex):
    """True iff every weight with a nonzero count is divisible by four."""
    return all(w % 4 == 0 for w in A_ex.weights())


def table_ratio_check(L, n):
    """
    Check L_w+1 (w + 1) = L_w (n + 1 - (w + 1)) for every odd w where both
    counts are nonzero.

    This holds for the punctured code of a transitive invariant extended code
    without only-odd-decomposable codewords; mismatches become failed entries.

    Returns:
        RelationReport: One entry per (w, w + 1) pair.
    """
    report = RelationReport(f"odd/even neighbor ratios (n={n})")
    for w in L.weights():
        if w & 1 and L[w] and L[w + 1]:
            report.add(f"w={w},{w + 1}", L[w] * (n - w), L[w + 1] * (w + 1))
    if not report.passed:
        logger.warning("Ratio check failed at %s", [e.label for _, e in report.failures()])
    return report


def compare_tallies(name, expected, actual):
    """Return a report with one entry per weight present in either tally."""
    report = RelationReport(name)
    for w in sorted(set(expected.weights()) | set(actual.weights())):
        report.add(f"w={w}", expected[w], actual[w])
    return report


def check_distance_bounds(A, L, n, k):
    """
    Check L_w = A_w for 0 < w < 2d and L_w = 0 for w > n - k + 1.

    Args:
        A (WeightTally): Weight distribution.
        L (WeightTally): Local weight distribution of the same code.
    """
    report = RelationReport("minimum distance bounds")
    d = minimum_distance(A)
    if d is None:
        report.add("nonzero neighbors", 0, L.total())
        return report
    for w in range(1, n + 1):
        if w < 2 * d:
            if A[w] or L[w]:
                report.add(f"w={w} below 2d", A[w], L[w])
        elif w > n - k + 1 and L[w]:
            report.add(f"w={w} above n-k+1", 0, L[w])
    return report


def published_extended_lwd(table_id):
    """
    Rebuild L(C_ex) of length 128 from a published length-127 column.

    Each odd-weight count gives L_w+1(C_ex) = 128 L_w / (w + 1); the result is
    punctured again and must reproduce the column.

    Raises:
        KeyError: If the column is unknown.
        IdentityViolationError: If the column is not consistent with transitive invariance.
    """
    L = get_published(table_id)
    length = PUBLISHED_LENGTH + 1
    L_ex = WeightTally(length)
    for w, count in L.items():
        if w & 1:
            L_ex.add(w + 1, _exact_div(length * count, w + 1, f"{table_id} weight {w}"))
        elif not L[w - 1]:
            L_ex.add(w, _exact_div(length * count, length - w, f"{table_id} weight {w}"))
    if puncture_lwd_transitive(L_ex, WeightTally(PUBLISHED_LENGTH)) != L:
        raise IdentityViolationError(f"{table_id} is not reproduced by its extended spectrum")
    return L_ex


def published_even_subcode_lwd(table_id):
    """L(C_even) of a published column; N = 0 because every extended weight is a multiple of four."""
    L = get_published(table_id)
    return even_subcode_lwd(L, WeightTally(L.n))


def _per_codeword_report(C, C_ex, C_even, subcode_cap, force):
    n = C.n
    report = RelationReport("per-codeword neighborship")
    neighbors = kept = flipped_odd = only_odd_mismatch = even_mismatch = 0
    for word in gray_block(C.rows, 1, 1 << C.k):
        w = word.bit_count()
        extended = word | (w & 1) << n
        in_c = is_minimal_bits(C.rows, n, word)
        in_ex = is_minimal_bits(C_ex.rows, n + 1, extended)
        if in_c:
            neighbors += 1
            kept += in_ex
        elif w & 1:
            flipped_odd += in_ex
        if w & 1:
            continue
        only_odd = (not in_c and classify_bits(C, word, subcode_cap, force)
                    is DecompCategory.ONLY_ODD_DECOMPOSABLE)
        if not in_c:
            only_odd_mismatch += in_ex != only_odd
        even_mismatch += is_minimal_bits(C_even.rows, n, word) != (in_c or only_odd)
    report.add("zero neighbors whose extension is a zero neighbor", neighbors, kept)
    report.add("odd-weight non-neighbors whose extension is a zero neighbor", 0, flipped_odd)
    report.add("even non-neighbors: extension is a neighbor iff only-odd-decomposable",
               0, only_odd_mismatch)
    report.add("even words: neighbor of C_even iff neighbor or only-odd-decomposable in C",
               0, even_mismatch)
    return report


def _punctured_report(C, sweep_args, subcode_cap):
    # C plays the extended code; every weight must be even for the last bit to be a parity bit
    try:
        punctured = puncture(C, C.n - 1)
    except PunctureRankError:
        return None
    L_C = local_weight_distribution(C, **sweep_args)
    L_p = local_weight_distribution(punctured, **sweep_args)
    N_p = only_odd_counts(punctured, subcode_cap=subcode_cap, **sweep_args)
    return compare_tallies(
        "punctured transitive code identity", L_p, puncture_lwd_transitive(L_C, N_p),
    )


def verify_all_relations(C, workers=None, cap=None, force=False, subcode_cap=None):
    """
    Check every relation on C by enumerating C, C_ex and C_even independently.

    Covered: the extended code identity, the even weight subcode identity,
    N = 0 when every extended weight is a multiple of four, the minimum
    distance bounds, agreement of the shortcut and plain LWD sweeps, and the
    per-codeword neighborship statements behind the identities. A code tagged
    transitive_invariant whose weights are all even is also punctured at its
    last coordinate and checked against the puncture formula.

    Args:
        C (LinearCode): The code.
        workers (int): Processes per sweep.
        cap (int): Bound on the dimension of every swept code.
        force (bool): Lift both caps.
        subcode_cap (int): Bound on the support subcodes enumerated while
            classifying (Config.SUPPORT_SUBCODE_CAP).

    Returns:
        RelationReport: One child report per relation.

    Raises:
        EnumerationCapError: If C or a support subcode is too large to enumerate.
    """
    check_cap(C.k, cap, force)

    # Build the derived codes
    C_ex = extend(C)
    C_even = even_subcode(C)

    # Enumerate every code on its own
    sweep_args = {'workers': workers, 'cap': cap, 'force': force}
    A_C = weight_distribution(C, **sweep_args)
    L_C = local_weight_distribution(C, use_shortcuts=False, **sweep_args)
    N_C = only_odd_counts(C, subcode_cap=subcode_cap, **sweep_args)
    A_ex = weight_distribution(C_ex, **sweep_args)
    L_ex = local_weight_distribution(C_ex, **sweep_args)
    L_even = local_weight_distribution(C_even, **sweep_args)

    # Compare each formula with the enumerated tallies
    report = RelationReport(f"relations for {C.describe()}")
    report.children.append(compare_tallies("extended code identity", L_ex, extend_lwd(L_C, N_C)))
    report.children.append(
        compare_tallies("even weight subcode identity", L_even, even_subcode_lwd(L_C, N_C))
    )
    if weights_multiple_of_four(A_ex):
        four = RelationReport("extended weights divisible by four leave N empty")
        four.add("only-odd-decomposable codewords", 0, N_C.total())
        report.children.append(four)
    report.children.append(check_distance_bounds(A_C, L_C, C.n, C.k))
    report.children.append(compare_tallies(
        "shortcut sweep agrees with plain sweep",
        L_C, local_weight_distribution(C, use_shortcuts=True, **sweep_args),
    ))
    if C.transitive_invariant and C.k and all(w % 2 == 0 for w in A_C.weights()):
        punctured = _punctured_report(C, sweep_args, subcode_cap)
        if punctured is not None:
            report.children.append(punctured)
    report.children.append(_per_codeword_report(C, C_ex, C_even, subcode_cap, force))

    # Log the outcome
    if report.passed:
        logger.info("All relations hold for %s", C.describe())
    else:
        logger.warning("Relations failing for %s: %s", C.describe(),
                       sorted({name for name, _ in report.failures()}))
    return report

# End of services/lwd_relations.py
