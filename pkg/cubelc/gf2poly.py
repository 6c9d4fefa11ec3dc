"""Polynomials over GF(2) packed into Python integers.

The polynomial b_d x^d + ... + b_1 x + b_0 is stored as the integer
b_d 2^d + ... + b_1 2 + b_0, so addition is XOR and multiplication is
carry-less. The zero polynomial has degree -1.
"""

import dataclasses


@dataclasses.dataclass(frozen=True, order=True)
class Gf2Poly:
    value: int = 0

    def __post_init__(self) -> None:
        if self.value < 0:
            raise ValueError(f"packed coefficients must be non-negative, got {self.value}")

    @classmethod
    def from_exponents(cls, exponents) -> "Gf2Poly":
        value = 0
        for e in exponents:
            value ^= 1 << e
        return cls(value)

    @classmethod
    def from_terms(cls, text: str) -> "Gf2Poly":
        """Parse the ascending textual form, e.g. "1+x^3+x^5" or "0"."""
        text = "".join(text.split())
        if text == "0":
            return cls(0)
        value = 0
        for term in text.split("+"):
            if term == "1":
                bit = 1
            elif term == "x":
                bit = 2
            elif term.startswith("x^") and term[2:].isdigit():
                bit = 1 << int(term[2:])
            else:
                raise ValueError(f"ill formatted polynomial term {term!r} in {text!r}")
            if value & bit:
                raise ValueError(f"repeated term {term!r} in {text!r}")
            value |= bit
        return cls(value)

    @property
    def degree(self) -> int:
        return self.value.bit_length() - 1

    @property
    def is_zero(self) -> bool:
        return self.value == 0

    @property
    def weight(self) -> int:
        return self.value.bit_count()

    def coeff(self, i: int) -> int:
        return (self.value >> i) & 1

    def exponents(self) -> list[int]:
        return [i for i in range(self.value.bit_length()) if (self.value >> i) & 1]

    def to_terms(self) -> str:
        if self.is_zero:
            return "0"
        terms = []
        for i in self.exponents():
            terms.append("1" if i == 0 else "x" if i == 1 else f"x^{i}")
        return "+".join(terms)

    def __str__(self) -> str:
        return self.to_terms()

    def __add__(self, other: "Gf2Poly") -> "Gf2Poly":
        if not isinstance(other, Gf2Poly):
            return NotImplemented
        return Gf2Poly(self.value ^ other.value)

    __sub__ = __add__

    def __mul__(self, other: "Gf2Poly") -> "Gf2Poly":
        if not isinstance(other, Gf2Poly):
            return NotImplemented
        return Gf2Poly(_mul(self.value, other.value))

    def __divmod__(self, other: "Gf2Poly") -> tuple["Gf2Poly", "Gf2Poly"]:
        if not isinstance(other, Gf2Poly):
            return NotImplemented
        q, r = _divmod(self.value, other.value)
        return Gf2Poly(q), Gf2Poly(r)

    def __floordiv__(self, other: "Gf2Poly") -> "Gf2Poly":
        return divmod(self, other)[0]

    def __mod__(self, other: "Gf2Poly") -> "Gf2Poly":
        return divmod(self, other)[1]


ZERO = Gf2Poly(0)
ONE = Gf2Poly(1)


def _mul(a: int, b: int) -> int:
    if a < b:
        a, b = b, a
    c = 0
    while b:
        if b & 1:
            c ^= a
        a <<= 1
        b >>= 1
    return c


def _divmod(a: int, b: int) -> tuple[int, int]:
    if b == 0:
        raise ZeroDivisionError("division by zero polynomial")
    db = b.bit_length()
    q = 0
    while a.bit_length() >= db:
        shift = a.bit_length() - db
        q ^= 1 << shift
        a ^= b << shift
    return q, a


def _exact_binomial_quotient(a: int, d: int) -> int | None:
    """Quotient of a by 1 + x^d, or None when the division is not exact."""
    deg = a.bit_length() - 1
    if deg < d:
        return None
    # q_i = a_i ^ q_{i-d}: prefix XOR with stride d
    q, stride = a, d
    while stride <= deg:
        q ^= q << stride
        stride <<= 1
    q &= (1 << (deg - d + 1)) - 1
    if q ^ (q << d) != a:
        return None
    return q


def add(a: Gf2Poly, b: Gf2Poly) -> Gf2Poly:
    return a + b


def mul(a: Gf2Poly, b: Gf2Poly) -> Gf2Poly:
    return a * b


def divmod_(a: Gf2Poly, b: Gf2Poly) -> tuple[Gf2Poly, Gf2Poly]:
    """Divide a by nonzero b, returning (q, r) with a = q*b + r, deg r < deg b."""
    return divmod(a, b)


def gcd(a: Gf2Poly, b: Gf2Poly) -> Gf2Poly:
    """Greatest common divisor by Euclid; over GF(2) every nonzero result is monic."""
    if a.is_zero and b.is_zero:
        raise ValueError("gcd(0, 0) is undefined")
    x, y = a.value, b.value
    while y:
        x, y = y, _divmod(x, y)[1]
    return Gf2Poly(x)


def one_plus_x_valuation(a: Gf2Poly) -> int:
    """Largest v such that (1+x)^v divides a.

    Strips (1+x)^(2^j) = 1 + x^(2^j) for descending j, so the valuation is
    assembled bit by bit with one exact division per bit.
    """
    if a.is_zero:
        raise ValueError("the (1+x)-adic valuation of the zero polynomial is undefined")
    value, v = a.value, 0
    j = max(a.degree, 1).bit_length()
    while j >= 0:
        q = _exact_binomial_quotient(value, 1 << j)
        if q is not None:
            value = q
            v += 1 << j
        j -= 1
    return v


def one_plus_x_power(k: int) -> Gf2Poly:
    """(1+x)^k as the product of 1 + x^(2^j) over the set bits j of k."""
    if k < 0:
        raise ValueError(f"exponent must be non-negative, got {k}")
    value, j = 1, 0
    while k >> j:
        if (k >> j) & 1:
            value = _mul(value, 1 | (1 << (1 << j)))
        j += 1
    return Gf2Poly(value)
