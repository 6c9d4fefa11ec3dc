"""Binary sequences of period 2^n and their linear complexity.

One period s_0 .. s_{N-1} is packed into an integer with bit i holding s_i.
Text forms read left to right as index 0 .. N-1, so "11110000" has ones at
positions 0..3.
"""

import dataclasses
import re

import numpy as np
from absl import logging

from cubelc import gf2poly
from cubelc.gf2poly import Gf2Poly

_BITS_RE = re.compile(r"^[01]+$")
_HEX_RE = re.compile(r"^[0-9a-fA-F]+$")


def is_power_of_two(x: int) -> bool:
    return x > 0 and x & (x - 1) == 0


def two_adic_valuation(d: int) -> int:
    """Exponent y of the largest power of two dividing the nonzero integer d."""
    if d == 0:
        raise ValueError("the 2-adic valuation of 0 is undefined")
    d = abs(d)
    return (d & -d).bit_length() - 1


@dataclasses.dataclass(frozen=True)
class PeriodicSequence:
    n: int
    bits: int = 0

    def __post_init__(self) -> None:
        if self.n < 0:
            raise ValueError(f"period exponent must be non-negative, got {self.n}")
        if self.bits < 0 or self.bits >> self.period:
            raise ValueError(f"bits do not fit in one period of length {self.period}")

    @property
    def period(self) -> int:
        return 1 << self.n

    @property
    def weight(self) -> int:
        return self.bits.bit_count()

    @property
    def is_zero(self) -> bool:
        return self.bits == 0

    def __len__(self) -> int:
        return self.period

    def __getitem__(self, i: int) -> int:
        return (self.bits >> (i % self.period)) & 1

    def support(self) -> list[int]:
        return [i for i in range(self.period) if (self.bits >> i) & 1]

    def flip(self, positions) -> "PeriodicSequence":
        mask = 0
        for p in positions:
            if not 0 <= p < self.period:
                raise ValueError(f"position {p} outside [0, {self.period})")
            mask ^= 1 << p
        return PeriodicSequence(self.n, self.bits ^ mask)

    def __add__(self, other: "PeriodicSequence") -> "PeriodicSequence":
        if not isinstance(other, PeriodicSequence):
            return NotImplemented
        return sum_sequences(self, other)

    @classmethod
    def from_bitstring(cls, text: str) -> "PeriodicSequence":
        text = text.strip()
        if not _BITS_RE.match(text):
            raise ValueError(f"not a bit string: {text!r}")
        if not is_power_of_two(len(text)):
            raise ValueError(f"length {len(text)} is not a power of two")
        bits = 0
        for i, ch in enumerate(text):
            if ch == "1":
                bits |= 1 << i
        return cls(len(text).bit_length() - 1, bits)

    @classmethod
    def from_hex(cls, text: str) -> "PeriodicSequence":
        # each nibble expands most significant bit first
        text = text.strip()
        if not _HEX_RE.match(text):
            raise ValueError(f"not a hex string: {text!r}")
        return cls.from_bitstring("".join(f"{int(ch, 16):04b}" for ch in text))

    @classmethod
    def parse(cls, text: str, fmt: str = "auto") -> "PeriodicSequence":
        text = text.strip()
        if fmt == "bits":
            return cls.from_bitstring(text)
        if fmt == "hex":
            return cls.from_hex(text)
        if fmt != "auto":
            raise ValueError(f"unknown sequence format {fmt!r}")
        if _BITS_RE.match(text) and is_power_of_two(len(text)):
            return cls.from_bitstring(text)
        return cls.from_hex(text)

    def to_bitstring(self) -> str:
        return "".join(str((self.bits >> i) & 1) for i in range(self.period))

    def to_hex(self) -> str:
        if self.period < 4:
            raise ValueError(f"period {self.period} is too short for hex output")
        text = self.to_bitstring()
        return "".join(f"{int(text[i : i + 4], 2):x}" for i in range(0, len(text), 4))

    def __str__(self) -> str:
        return self.to_bitstring()


@dataclasses.dataclass(frozen=True)
class LinearComplexityReport:
    lc: int
    minimal_poly_degree: int
    valuation: int


def from_support(n: int, positions) -> PeriodicSequence:
    positions = list(positions)
    if len(set(positions)) != len(positions):
        raise ValueError(f"duplicate positions in {sorted(positions)}")
    period = 1 << n
    bits = 0
    for p in positions:
        if not 0 <= p < period:
            raise ValueError(f"position {p} outside [0, {period})")
        bits |= 1 << p
    return PeriodicSequence(n, bits)


def zero(n: int) -> PeriodicSequence:
    return PeriodicSequence(n, 0)


def to_polynomial(s: PeriodicSequence) -> Gf2Poly:
    """The finite generating function s^N(x)."""
    return Gf2Poly(s.bits)


def _halving_lc(bits: int, n: int) -> int:
    lc, half = 0, 1 << n
    while half > 1:
        half >>= 1
        left = bits & ((1 << half) - 1)
        right = bits >> half
        if left != right:
            lc += half
            bits = left ^ right
        else:
            bits = left
    return lc + (bits & 1)


def linear_complexity(s: PeriodicSequence) -> LinearComplexityReport:
    """L(s) by the halving recursion on the period.

    When the halves differ the complexity gains N/2 and the recursion continues
    on their XOR, otherwise on either half.
    """
    lc = _halving_lc(s.bits, s.n)
    return LinearComplexityReport(lc=lc, minimal_poly_degree=lc, valuation=s.period - lc)


def lc(s: PeriodicSequence) -> int:
    return _halving_lc(s.bits, s.n)


def minimal_polynomial(s: PeriodicSequence) -> Gf2Poly:
    """f_s(x) = (1+x^N) / gcd(s^N(x), 1+x^N), which is (1+x)^L(s) for N = 2^n."""
    return gf2poly.one_plus_x_power(lc(s))


def lc_oracle_gcd(s: PeriodicSequence) -> int:
    if s.is_zero:
        return 0
    modulus = Gf2Poly(1 | (1 << s.period))
    return s.period - gf2poly.gcd(to_polynomial(s), modulus).degree


def berlekamp_massey(bits) -> int:
    """Length of the shortest LFSR generating the finite binary sequence bits."""
    c, b = 1, 1
    length, m = 0, 1
    history = 0
    for i, bit in enumerate(bits):
        # history bit j holds s_{i-j}; connection bit j multiplies s_{i-j}
        history = (history << 1) | bit
        if (c & history).bit_count() & 1:
            t = c
            c ^= b << m
            if 2 * length <= i:
                length = i + 1 - length
                b = t
                m = 1
            else:
                m += 1
        else:
            m += 1
    return length


def lc_oracle_lfsr(s: PeriodicSequence) -> int:
    # two periods are enough since L(s) <= N
    return berlekamp_massey([s[i] for i in range(2 * s.period)])


def has_full_complexity(s: PeriodicSequence) -> bool:
    return s.weight % 2 == 1


def sum_sequences(s1: PeriodicSequence, s2: PeriodicSequence) -> PeriodicSequence:
    if s1.n != s2.n:
        raise ValueError(f"period mismatch: 2^{s1.n} vs 2^{s2.n}")
    return PeriodicSequence(s1.n, s1.bits ^ s2.bits)


def distance(i: int, j: int) -> int:
    if i == j:
        raise ValueError(f"distance of a position to itself ({i}) is undefined")
    return 1 << two_adic_valuation(j - i)


def impulse_pair_lc(n: int, i: int, j: int) -> int:
    """L(E_i + E_j) = 2^n - 2^r where j - i = 2^r * odd."""
    if not 0 <= i < j < (1 << n):
        raise ValueError(f"need 0 <= i < j < 2^{n}, got i={i}, j={j}")
    return (1 << n) - distance(i, j)


def linear_complexity_table(n: int) -> np.ndarray:
    """L of every sequence of period 2^n, indexed by its packed bits."""
    if not 0 <= n <= 4:
        raise ValueError(f"exhaustive tables are limited to n <= 4, got {n}")
    bits = np.arange(1 << (1 << n), dtype=np.int64)
    table = np.zeros_like(bits)
    half = 1 << n
    while half > 1:
        half >>= 1
        left = bits & ((1 << half) - 1)
        right = bits >> half
        differ = left != right
        table += differ * half
        bits = np.where(differ, left ^ right, left)
    table += bits & 1
    logging.debug(f"built linear complexity table for n={n} ({table.size} sequences)")
    return table
