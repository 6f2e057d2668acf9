"""
This module decides zero neighborship and decomposability of codewords and
computes weight distributions, local weight distributions and only-odd-
decomposable counts by exhaustive Gray-code sweeps.

A nonzero codeword v is a zero neighbor iff no other nonzero codeword has a
support strictly inside Supp(v). That holds iff the subcode supported inside
Supp(v) is {0, v}, i.e. iff the generator columns outside Supp(v) have rank
k - 1. The sweeps use that rank test instead of a pairwise scan.

Classes:
    DecompCategory: The four neighborship/decomposability categories.

Functions:
- is_zero_neighbor(C, v): Rank-based neighborship test.
- is_zero_neighbor_by_scan(C, v): Direct scan over all codewords (reference check).
- classify(C, v): Category of a nonzero codeword.
- weight_distribution(C): A_w over all 2^k codewords.
- minimum_distance(A): Smallest nonzero weight of a weight distribution.
- lwd_from_weights_only(A, n, k): Whether A alone determines the LWD.
- local_weight_distribution(C, use_shortcuts): L_w.
- only_odd_counts(C): N_w.
- decomposition_profile(C): Per-category tallies of all nonzero codewords.
- sweep(C, block, ...): Partitioned sweep, optionally on a process pool, with merged tallies.

Attributes:
    logger (Logger): The logger object used for sweep events.
"""

from bisect import insort
from concurrent.futures import ProcessPoolExecutor
from enum import Enum
from functools import partial

from config import Config
from data.weight_tally import WeightTally
from utility.errors import EnumerationCapError, NotInCodeError, PreconditionError
from utility.gf2 import check_cap, gray_block, support_subcode_basis
from utility.logger import setup_logger

logger = setup_logger('zero_neighbor_log')


class DecompCategory(Enum):
    INDECOMPOSABLE = 'indecomposable'
    DECOMPOSABLE_ODD_WEIGHT = 'decomposable odd weight'
    ONLY_ODD_DECOMPOSABLE = 'only-odd-decomposable'
    EVEN_DECOMPOSABLE = 'even-decomposable'


def _negated(x):
    return -x


def is_minimal_bits(rows, n, word):
    """
    Rank test on packed data: True iff the nonzero codeword word is a zero neighbor.

    The rank of the rows masked to the complement of Supp(word) is at most
    k - 1 (word itself is a dependency); a second dependency ends the test.
    """
    outside = ((1 << n) - 1) ^ word
    basis = []
    dependencies = 0
    for r in rows:
        r &= outside
        for b in basis:
            r = min(r, r ^ b)
        if r:
            insort(basis, r, key=_negated)
        else:
            dependencies += 1
            if dependencies > 1:
                return False
    return True


def _check_codeword(C, v):
    if not C.contains(v):
        raise NotInCodeError(f"{v} is not a codeword of {C.describe()}")
    if not v.bits:
        raise PreconditionError("the all-zero word has no neighborship")


def is_zero_neighbor(C, v):
    """
    Decide whether v is a zero neighbor of C.

    Args:
        C (LinearCode): The code.
        v (BitVector): A nonzero codeword.

    Returns:
        bool: True iff the support subcode of v has dimension 1.

    Raises:
        NotInCodeError: If v is not a codeword.
        PreconditionError: If v is the all-zero word.
    """
    _check_codeword(C, v)
    return is_minimal_bits(C.rows, C.n, v.bits)


def is_zero_neighbor_by_scan(C, v, cap=None, force=False):
    """Decide neighborship by scanning every codeword for a smaller support."""
    _check_codeword(C, v)
    check_cap(C.k, cap, force)
    word = v.bits
    for c in gray_block(C.rows, 1, 1 << C.k):
        if c & ~word == 0 and c != word:
            return False
    return True


def classify_bits(C, word, cap, force):
    kernel = support_subcode_basis(C.rows, word, C.n)
    if len(kernel) == 1:
        return DecompCategory.INDECOMPOSABLE
    if word.bit_count() & 1:
        return DecompCategory.DECOMPOSABLE_ODD_WEIGHT
    size = 1 << len(kernel)
    cap = Config.SUPPORT_SUBCODE_CAP if cap is None else cap
    if size > cap and not force:
        logger.warning("Support subcode of size %s exceeds cap %s", size, cap)
        raise EnumerationCapError(
            f"support subcode has {size} elements, above the cap {cap}"
        )
    # a disjoint split v = c + (v + c) has both parts even iff c is even
    for c in gray_block(kernel, 1, size):
        if c != word and not c.bit_count() & 1:
            return DecompCategory.EVEN_DECOMPOSABLE
    return DecompCategory.ONLY_ODD_DECOMPOSABLE


def classify(C, v, cap=None, force=False):
    """
    Return the decomposability category of a nonzero codeword.

    Even-weight non-neighbors are split by enumerating the subcode supported
    inside Supp(v): every decomposition v = v1 + v2 has v1 in that subcode,
    and v1, v2 share parity because v has even weight.

    Args:
        C (LinearCode): The code.
        v (BitVector): A nonzero codeword.
        cap (int): Element cap for the support subcode (Config.SUPPORT_SUBCODE_CAP).
        force (bool): Lift the cap.

    Raises:
        NotInCodeError, PreconditionError: As is_zero_neighbor.
        EnumerationCapError: If the support subcode is above the cap.
    """
    _check_codeword(C, v)
    return classify_bits(C, v.bits, cap, force)


def _blocks(k, partitions):
    total = 1 << k
    partitions = max(1, min(partitions, total))
    step, extra = divmod(total, partitions)
    bounds = []
    start = 0
    for i in range(partitions):
        stop = start + step + (1 if i < extra else 0)
        bounds.append((start, stop))
        start = stop
    return bounds


def sweep(C, block, partitions=None, workers=None, cap=None, force=False, **kwargs):
    """
    Run block(C, start, stop, **kwargs) over contiguous ranges of message
    indices and merge the private tallies by addition.

    With more than one worker the ranges go to a process pool, so block must
    be a module-level function and C picklable. The merged tally does not
    depend on the number of partitions or workers.

    Args:
        C (LinearCode): The code to sweep.
        block (callable): Returns a WeightTally (or a dict of them) for one range.
        partitions (int): Number of ranges (workers * Config.PARTITIONS_PER_WORKER).
        workers (int): Process count (Config.WORKERS).

    Raises:
        EnumerationCapError: If k is above the enumeration cap.
    """
    check_cap(C.k, cap, force)
    workers = Config.WORKERS if workers is None else max(1, workers)
    if partitions is None:
        partitions = workers * Config.PARTITIONS_PER_WORKER
    bounds = _blocks(C.k, partitions)
    logger.debug("Sweep %s over %s codewords: %s blocks, %s workers",
                 block.__name__, 1 << C.k, len(bounds), workers)

    run = partial(block, C, **kwargs)
    starts = [start for start, _ in bounds]
    stops = [stop for _, stop in bounds]
    if workers > 1 and len(bounds) > 1:
        with ProcessPoolExecutor(max_workers=min(workers, len(bounds))) as executor:
            results = list(executor.map(run, starts, stops))
    else:
        results = [run(start, stop) for start, stop in bounds]

    # merge in block order
    merged = results[0]
    for result in results[1:]:
        if isinstance(merged, dict):
            merged = {key: merged[key].merge(result[key]) for key in merged}
        else:
            merged = merged.merge(result)
    logger.debug("Sweep %s of %s done", block.__name__, C.describe())
    return merged


def _tally(n, counts):
    return WeightTally(n, {w: c for w, c in enumerate(counts) if c})


def weight_block(C, start, stop):
    counts = [0] * (C.n + 1)
    for word in gray_block(C.rows, start, stop):
        counts[word.bit_count()] += 1
    return _tally(C.n, counts)


def neighbor_block(C, start, stop, low=1, high=None):
    """Count zero neighbors whose weight lies in low..high."""
    n, rows = C.n, C.rows
    high = n if high is None else high
    counts = [0] * (n + 1)
    for word in gray_block(rows, start, stop):
        w = word.bit_count()
        if low <= w <= high and word and is_minimal_bits(rows, n, word):
            counts[w] += 1
    return _tally(n, counts)


def only_odd_block(C, start, stop, subcode_cap=None, lift=False):
    n, rows = C.n, C.rows
    counts = [0] * (n + 1)
    for word in gray_block(rows, start, stop):
        w = word.bit_count()
        if w and not w & 1 and not is_minimal_bits(rows, n, word):
            if classify_bits(C, word, subcode_cap, lift) is DecompCategory.ONLY_ODD_DECOMPOSABLE:
                counts[w] += 1
    return _tally(n, counts)


def profile_block(C, start, stop, subcode_cap=None, lift=False):
    counts = {category: [0] * (C.n + 1) for category in DecompCategory}
    for word in gray_block(C.rows, start, stop):
        if word:
            counts[classify_bits(C, word, subcode_cap, lift)][word.bit_count()] += 1
    return {category: _tally(C.n, c) for category, c in counts.items()}


def weight_distribution(C, partitions=None, workers=None, cap=None, force=False):
    """
    Return the weight distribution A_w of C (A_0 = 1).

    Raises:
        EnumerationCapError: If k is above the enumeration cap.
    """
    return sweep(C, weight_block, partitions, workers, cap, force)


def minimum_distance(A):
    """Smallest nonzero weight with a nonzero count, or None for the zero code."""
    weights = [w for w in A.weights() if w > 0]
    return weights[0] if weights else None


def lwd_from_weights_only(A, n, k):
    """
    True when every nonzero weight present is below 2d or above n - k + 1,
    so the local weight distribution follows from A without any rank test.
    """
    d = minimum_distance(A)
    if d is None:
        return True
    return all(w < 2 * d or w > n - k + 1 for w in A.weights() if w > 0)


def local_weight_distribution(C, use_shortcuts=True, partitions=None, workers=None,
                              cap=None, force=False):
    """
    Return the local weight distribution L_w of C; L_0 = 0.

    With shortcuts, L_w = A_w for 0 < w < 2d and L_w = 0 for w > n - k + 1 are
    read off the weight distribution and only the weights 2d..n-k+1 are tested
    codeword by codeword. Both paths return the same tally.

    Args:
        C (LinearCode): The code.
        use_shortcuts (bool): Use the minimum-distance bounds.

    Raises:
        EnumerationCapError: If k is above the enumeration cap.
    """
    if not use_shortcuts:
        return sweep(C, neighbor_block, partitions, workers, cap, force)
    A = weight_distribution(C, partitions, workers, cap, force)
    d = minimum_distance(A)
    if d is None:
        return WeightTally(C.n)
    low, high = 2 * d, C.n - C.k + 1
    below = A.restricted(lambda w: 0 < w < low)
    if lwd_from_weights_only(A, C.n, C.k) or low > high:
        logger.debug("LWD of %s read off its weight distribution", C.describe())
        return below
    tested = sweep(C, neighbor_block, partitions, workers, cap, force, low=low, high=high)
    return below.merge(tested)


def only_odd_counts(C, partitions=None, workers=None, cap=None, force=False, subcode_cap=None):
    """
    Return N_w, the number of only-odd-decomposable codewords of weight w.

    cap bounds k; subcode_cap bounds the support subcodes classify enumerates
    (Config.SUPPORT_SUBCODE_CAP).

    Raises:
        EnumerationCapError: If k or a support subcode is above its cap.
    """
    return sweep(C, only_odd_block, partitions, workers, cap, force,
                 subcode_cap=subcode_cap, lift=force)


def decomposition_profile(C, partitions=None, workers=None, cap=None, force=False,
                          subcode_cap=None):
    """Return {DecompCategory: WeightTally} over all nonzero codewords."""
    return sweep(C, profile_block, partitions, workers, cap, force,
                 subcode_cap=subcode_cap, lift=force)

# End of services/zero_neighbor.py
