"""
Table-driven arithmetic in GF(2^m), enough to build primitive BCH codes.

Polynomials over GF(2) are ints (bit i = coefficient of x^i), so adding two of
them is XOR. Field elements are ints below 2^m in the polynomial basis.

Classes:
    Gf2mField: GF(2^m) with log/antilog tables over a primitive polynomial.

Functions:
    poly_mul(a, b): Carry-less product of two GF(2) polynomials.
    poly_degree(p): Degree of a GF(2) polynomial.
"""

from utility.errors import PreconditionError

# x^2+x+1, x^3+x+1, x^4+x+1, x^5+x^2+1, x^6+x+1, x^7+x^3+1, ...
DEFAULT_PRIMITIVE_POLYS = {
    2: 0b111,
    3: 0b1011,
    4: 0b10011,
    5: 0b100101,
    6: 0b1000011,
    7: 0b10001001,
    8: 0b100011101,
    9: 0b1000010001,
    10: 0b10000001001,
    11: 0b100000000101,
    12: 0b1000001010011,
}


def poly_mul(a, b):
    result = 0
    while b:
        if b & 1:
            result ^= a
        a <<= 1
        b >>= 1
    return result


def poly_degree(p):
    return p.bit_length() - 1


class Gf2mField:
    """
    GF(2^m) represented through powers of a primitive element alpha.

    Attributes:
        m (int): Extension degree.
        primitive_poly (int): Degree-m primitive polynomial over GF(2).
        order (int): 2^m - 1, the period of the antilog table.
        antilog (list): antilog[i] = alpha^i for 0 <= i < order.
        log (dict): Inverse of antilog on the nonzero elements.
    """

    def __init__(self, m, primitive_poly=None):
        if m < 2:
            raise PreconditionError(f"extension degree must be at least 2, got {m}")
        if primitive_poly is None:
            if m not in DEFAULT_PRIMITIVE_POLYS:
                raise PreconditionError(f"no default primitive polynomial for m = {m}")
            primitive_poly = DEFAULT_PRIMITIVE_POLYS[m]
        if poly_degree(primitive_poly) != m:
            raise PreconditionError(f"polynomial {primitive_poly:#b} does not have degree {m}")
        self.m = m
        self.primitive_poly = primitive_poly
        self.order = (1 << m) - 1
        self.antilog = []
        self.log = {}
        element = 1
        for i in range(self.order):
            if element in self.log:
                raise PreconditionError(
                    f"{primitive_poly:#b} is not primitive: alpha has order {i}"
                )
            self.antilog.append(element)
            self.log[element] = i
            element <<= 1
            if element >> m:
                element ^= primitive_poly
        if element != 1:
            raise PreconditionError(f"{primitive_poly:#b} is not primitive")

    def alpha_pow(self, i):
        return self.antilog[i % self.order]

    def mul(self, a, b):
        if a == 0 or b == 0:
            return 0
        return self.antilog[(self.log[a] + self.log[b]) % self.order]

    def cyclotomic_coset(self, i):
        """Exponents {i * 2^j mod (2^m - 1)} of the conjugates of alpha^i."""
        coset = []
        e = i % self.order
        while e not in coset:
            coset.append(e)
            e = e * 2 % self.order
        return sorted(coset)

    def minimal_polynomial(self, i):
        """
        Minimal polynomial of alpha^i over GF(2), as an int.

        It is the product of (x + alpha^e) over the cyclotomic coset of i;
        every coefficient of that product lies in GF(2).
        """
        coeffs = [1]  # field coefficients, lowest degree first
        for e in self.cyclotomic_coset(i):
            root = self.alpha_pow(e)
            shifted = [0] + coeffs
            for j, c in enumerate(coeffs):
                shifted[j] ^= self.mul(c, root)
            coeffs = shifted
        poly = 0
        for j, c in enumerate(coeffs):
            if c not in (0, 1):
                raise PreconditionError(f"minimal polynomial of alpha^{i} left GF(2)")
            poly |= c << j
        return poly

# End of utility/gf2m_field.py
