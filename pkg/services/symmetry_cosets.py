"""
This module reduces local weight distribution sweeps with code symmetries.

The code C is split into the 2^(k-k') cosets of a subcode C'. Permutations
fixing both C and C' permute those cosets, and cosets in one orbit have the
same local weight subdistribution, so only one coset per orbit is swept.

Classes:
    CosetDecomposition: C split into cosets of C' with a linear label map.
    CosetClass: One orbit of cosets: representative label, size, subdistribution.

Functions:
- apply(p, v): Permute the coordinates of a word.
- is_automorphism(p, C): Whether p maps C onto itself.
- cyclic_group_generator(n): The cyclic shift i -> i + 1 mod n.
- affine_permutation(matrix, shift, m): Coordinate permutation of x -> Ax + b.
- affine_group_generators(m): Generators of the general affine group GA(m, 2).
- random_affine_permutations(m, count, seed): Seeded random affine permutations.
- group_closure(gens): All elements of the group generated by gens (small groups).
- coset_decompose(C, C_sub): Build a CosetDecomposition.
- partition_cosets(dec, gens): Orbits of the cosets under the generated group.
- coset_subdistribution(dec, label): Zero neighbors of C inside one coset.
- subdistribution_invariant(dec, p, label): Compare a coset with its image.
- lwd_via_cosets(C, C_sub, gens): Local weight distribution from the orbits.
- second_level_perms(dec, v, C_subsub, candidates): Permutations acting on (v + C')/C''.
- preserves_subcoset_family(dec, v, C_subsub, p): The same property checked by enumeration.

Attributes:
    logger (Logger): The logger object used for orbit and coset events.
"""

from collections import deque
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import partial

import numpy as np

from config import Config
from data.permutation import Permutation
from data.weight_tally import WeightTally
from utility.errors import (
    LengthMismatchError, NotAutomorphismError, NotInCodeError, PreconditionError, SubcodeError,
)
from utility.gf2 import check_cap, gray_block, reduce_by, reduced_basis
from services.zero_neighbor import is_minimal_bits
from utility.logger import setup_logger

logger = setup_logger('symmetry_cosets_log')


def apply(p, v):
    """
    Permute v: coordinate i of the result is coordinate p^-1(i) of v.

    Raises:
        LengthMismatchError: If the lengths differ.
    """
    return p.apply(v)


def is_automorphism(p, C):
    """True iff p maps every generator row of C into C."""
    if p.n != C.n:
        return False
    return all(C.contains_bits(p.apply_bits(r)) for r in C.rows)


def cyclic_group_generator(n):
    return Permutation(tuple((i + 1) % n for i in range(n)))


def _point_bits(m):
    # variable x_j sits at bit m-1-j of a point index
    return [1 << (m - 1 - j) for j in range(m)]


def affine_permutation(matrix, shift, m):
    """
    Coordinate permutation of the affine map x -> Ax + b on the 2^m points.

    Args:
        matrix (array): Invertible m×m binary matrix A acting on column vectors.
        shift (array): Translation b, length m.
        m (int): Number of variables.

    Raises:
        PreconditionError: If A is singular.
    """
    matrix = np.asarray(matrix, dtype=np.uint8) & 1
    shift = np.asarray(shift, dtype=np.uint8) & 1
    bits = _point_bits(m)
    images = []
    for p in range(1 << m):
        x = np.array([(p >> (m - 1 - j)) & 1 for j in range(m)], dtype=np.uint8)
        y = (matrix.astype(int) @ x.astype(int) + shift) % 2
        images.append(sum(bits[j] for j in range(m) if y[j]))
    try:
        return Permutation(tuple(images))
    except ValueError as e:
        raise PreconditionError("affine map with a singular matrix") from e


def affine_group_generators(m, n=None):
    """
    Generators of GA(m, 2) acting on RM point indices.

    The m cyclic elementary transvections x_i <- x_i + x_(i+1 mod m) generate
    GL(m, 2); translation by e_1 adds the translations.

    Raises:
        LengthMismatchError: If a code length n other than 2^m is given.
    """
    if n is not None and n != 1 << m:
        raise LengthMismatchError(f"affine generators need length 2^{m}, got {n}")
    gens = []
    if m >= 2:
        for i in range(m):
            matrix = np.eye(m, dtype=np.uint8)
            matrix[i, (i + 1) % m] = 1
            gens.append(affine_permutation(matrix, np.zeros(m), m))
    translation = np.zeros(m, dtype=np.uint8)
    if m >= 1:
        translation[0] = 1
    gens.append(affine_permutation(np.eye(m), translation, m))
    return gens


def random_affine_permutations(m, count, seed=None):
    """Draw count seeded random affine permutations of the 2^m points."""
    seed = Config.DEFAULT_SEED if seed is None else seed
    rng = np.random.default_rng(seed)
    perms = []
    while len(perms) < count:
        matrix = rng.integers(0, 2, size=(m, m))
        shift = rng.integers(0, 2, size=m)
        try:
            perms.append(affine_permutation(matrix, shift, m))
        except PreconditionError:
            continue
    return perms


def group_closure(gens, limit=1 << 20):
    """
    Materialize the group generated by gens by breadth-first search.

    Raises:
        PreconditionError: If the group grows beyond limit elements.
    """
    if not gens:
        return []
    identity = Permutation.identity(gens[0].n)
    seen = {identity}
    queue = deque([identity])
    while queue:
        current = queue.popleft()
        for g in gens:
            image = g.compose(current)
            if image not in seen:
                if len(seen) >= limit:
                    raise PreconditionError(f"group has more than {limit} elements")
                seen.add(image)
                queue.append(image)
    return list(seen)


@dataclass
class CosetDecomposition:
    """
    The cosets of C' in C with a linear label map.

    A word is first reduced modulo C' (the reduced echelon basis of C', pivots
    P'); the residue lies in the complement W = {c in C : c vanishes on P'}
    and its bits at the pivots of W's reduced basis form the label. The map
    is linear with kernel C', so labels are constant on cosets and distinct
    across them.

    Attributes:
        code (LinearCode): C.
        subcode (LinearCode): C'.
        sub_basis (list): Reduced echelon basis of C'.
        complement (list): Reduced echelon basis of W, k - k' rows.
        label_pivots (list): Leading bit of each complement row.
    """
    code: object
    subcode: object
    sub_basis: list = field(default_factory=list)
    complement: list = field(default_factory=list)
    label_pivots: list = field(default_factory=list)

    @property
    def count(self):
        return 1 << len(self.complement)

    def residue(self, word):
        return reduce_by(self.sub_basis, word)

    def label_bits(self, word):
        residue = self.residue(word)
        label = 0
        for j, pivot in enumerate(self.label_pivots):
            if residue & pivot:
                label |= 1 << j
        return label

    def label(self, v):
        return self.label_bits(v.bits)

    def representative(self, label):
        if not 0 <= label < self.count:
            raise PreconditionError(f"coset label {label} outside 0..{self.count - 1}")
        word = 0
        for j, row in enumerate(self.complement):
            if label >> j & 1:
                word ^= row
        return word

    def elements(self, label):
        """Yield the 2^k' words of the coset with this label."""
        return gray_block(self.subcode.rows, 0, 1 << self.subcode.k, self.representative(label))


@dataclass
class CosetClass:
    """
    One orbit of cosets.

    Attributes:
        label (int): Smallest label in the orbit; its coset represents the orbit.
        orbit_size (int): Number of cosets in the orbit.
        subdistribution (WeightTally): Filled by lwd_via_cosets.
    """
    label: int
    orbit_size: int
    subdistribution: WeightTally = None


def coset_decompose(C, C_sub):
    """
    Split C into the cosets of C_sub.

    Raises:
        SubcodeError: If C_sub is not a proper subcode of C.
    """
    if C_sub.n != C.n or not C.contains_code(C_sub):
        raise SubcodeError(f"{C_sub.describe()} is not contained in {C.describe()}")
    if C_sub.k >= C.k:
        raise SubcodeError(f"{C_sub.describe()} is not a proper subcode of {C.describe()}")
    # Reduce the rows of C modulo C'
    sub_basis = reduced_basis(C_sub.rows)
    residues = [reduce_by(sub_basis, r) for r in C.rows]
    # The nonzero residues span the label space
    complement = reduced_basis(residues)
    dec = CosetDecomposition(
        code=C,
        subcode=C_sub,
        sub_basis=sub_basis,
        complement=complement,
        label_pivots=[1 << (row.bit_length() - 1) for row in complement],
    )
    logger.debug("%s splits into %s cosets of %s", C.describe(), dec.count, C_sub.describe())
    return dec


def _check_generators(dec, gens):
    for index, g in enumerate(gens):
        if g.n != dec.code.n:
            raise NotAutomorphismError(
                f"generator {index} acts on {g.n} coordinates, code has {dec.code.n}", index
            )
        for target in (dec.code, dec.subcode):
            if not is_automorphism(g, target):
                logger.error("Generator %s is not an automorphism of %s", index, target.describe())
                raise NotAutomorphismError(
                    f"generator {index} ({g}) is not an automorphism of {target.describe()}",
                    index,
                )


def partition_cosets(dec, gens, cap=None, force=False):
    """
    Partition the cosets into orbits under the group generated by gens.

    Orbits are closed breadth-first on labels: a generator is applied to the
    coset representative and the image is relabeled. Labels are visited in
    increasing order, so each orbit is represented by its smallest label.

    Raises:
        NotAutomorphismError: If a generator does not fix both C and C'.
        EnumerationCapError: If the 2^(k-k') labels are above the enumeration cap.
    """
    check_cap(len(dec.complement), cap, force)
    _check_generators(dec, gens)
    # one byte per label
    seen = bytearray(dec.count)
    classes = []
    for label in range(dec.count):
        if seen[label]:
            continue
        seen[label] = 1
        size = 1
        frontier = deque([label])
        while frontier:
            rep = dec.representative(frontier.popleft())
            for g in gens:
                image = dec.label_bits(g.apply_bits(rep))
                if not seen[image]:
                    seen[image] = 1
                    size += 1
                    frontier.append(image)
        classes.append(CosetClass(label=label, orbit_size=size))
    logger.info("%s cosets fall into %s orbits under %s generators",
                dec.count, len(classes), len(gens))
    return classes


def coset_subdistribution(dec, label, cap=None, force=False):
    """
    Tally the zero neighbors of the full code C lying in one coset.

    Raises:
        EnumerationCapError: If k' is above the enumeration cap.
    """
    check_cap(dec.subcode.k, cap, force)
    C = dec.code
    rows, n = C.rows, C.n
    counts = [0] * (n + 1)
    for word in dec.elements(label):
        if word and is_minimal_bits(rows, n, word):
            counts[word.bit_count()] += 1
    return WeightTally(n, {w: c for w, c in enumerate(counts) if c})


def subdistribution_invariant(dec, p, label, cap=None, force=False):
    """Whether the coset with this label and its image under p have equal subdistributions."""
    image = dec.label_bits(p.apply_bits(dec.representative(label)))
    return coset_subdistribution(dec, label, cap, force) == coset_subdistribution(dec, image, cap, force)


def lwd_via_cosets(C, C_sub, gens, workers=None, cap=None, force=False):
    """
    Compute L_w(C) as the orbit-size weighted sum of representative subdistributions.

    Args:
        C (LinearCode): The code.
        C_sub (LinearCode): A proper subcode.
        gens (list): Permutations fixing both C and C_sub.
        workers (int): Processes sweeping representative cosets (Config.WORKERS).

    Raises:
        SubcodeError, NotAutomorphismError: As the steps above.
        EnumerationCapError: If k - k' or k' is above the enumeration cap.
    """
    dec = coset_decompose(C, C_sub)
    # k' bounds each coset sweep, partition_cosets bounds k - k'
    check_cap(dec.subcode.k, cap, force)
    classes = partition_cosets(dec, gens, cap, force)
    workers = Config.WORKERS if workers is None else max(1, workers)

    fill = partial(coset_subdistribution, dec, cap=cap, force=force)
    labels = [coset_class.label for coset_class in classes]
    if workers > 1 and len(classes) > 1:
        with ProcessPoolExecutor(max_workers=workers) as executor:
            subdistributions = list(executor.map(fill, labels))
    else:
        subdistributions = [fill(label) for label in labels]
    for coset_class, tally in zip(classes, subdistributions):
        coset_class.subdistribution = tally

    total = WeightTally(C.n)
    for coset_class in classes:
        total = total.merge(coset_class.subdistribution.scaled(coset_class.orbit_size))
    logger.info("LWD of %s from %s representative cosets", C.describe(), len(classes))
    return total


def _check_chain(dec, C_subsub):
    if C_subsub.n != dec.code.n or not dec.subcode.contains_code(C_subsub):
        raise SubcodeError(f"{C_subsub.describe()} is not contained in {dec.subcode.describe()}")


def second_level_perms(dec, v, C_subsub, candidates):
    """
    Keep the candidates that permute the cosets of C'' inside v + C'.

    A permutation qualifies when it is an automorphism of C, C' and C'' and
    maps v into v + C'.

    Args:
        dec (CosetDecomposition): C split into cosets of C'.
        v (BitVector): A coset representative.
        C_subsub (LinearCode): A subcode of C'.
        candidates (list): Permutations to filter.

    Raises:
        SubcodeError: If C'' is not inside C'.
        NotInCodeError: If v is not a codeword.
    """
    _check_chain(dec, C_subsub)
    if not dec.code.contains(v):
        raise NotInCodeError(f"{v} is not a codeword of {dec.code.describe()}")
    target = dec.label_bits(v.bits)
    codes = (dec.code, dec.subcode, C_subsub)
    kept = [p for p in candidates
            if p.n == v.length
            and dec.label_bits(p.apply_bits(v.bits)) == target
            and all(is_automorphism(p, c) for c in codes)]
    for p in kept[:2]:
        if not preserves_subcoset_family(dec, v, C_subsub, p):
            raise PreconditionError(f"{p} does not act on the cosets of {C_subsub.describe()}")
    logger.debug("%s of %s candidates act on the cosets below %s",
                 len(kept), len(candidates), v)
    return kept


def preserves_subcoset_family(dec, v, C_subsub, p):
    """
    Decide by enumeration whether p maps every coset of C'' inside v + C'
    onto a coset of C'' inside v + C'.
    """
    _check_chain(dec, C_subsub)
    code = dec.code
    target = dec.label_bits(v.bits)
    inner = coset_decompose(dec.subcode, C_subsub) if C_subsub.k < dec.subcode.k else None
    shifts = [inner.representative(j) for j in range(inner.count)] if inner else [0]
    subsub_basis = reduced_basis(C_subsub.rows)
    for shift in shifts:
        start = v.bits ^ shift
        image_start = p.apply_bits(start)
        if not code.contains_bits(image_start) or dec.label_bits(image_start) != target:
            return False
        for word in gray_block(C_subsub.rows, 1, 1 << C_subsub.k, start):
            image = p.apply_bits(word)
            # same C''-coset as the image of the first element
            if reduce_by(subsub_basis, image ^ image_start):
                return False
    return True

# End of services/symmetry_cosets.py
