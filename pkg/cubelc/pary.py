"""Sequences of period p^n over F_p.

Over F_p, 1 - x^(p^n) = (1 - x)^(p^n), so the linear complexity is p^n minus
the multiplicity of (x - 1) in s^N(x). Polynomials here are plain coefficient
lists in ascending order, reduced mod p.
"""

import dataclasses
import itertools

from absl import logging


class VerificationError(AssertionError):
    pass


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    return all(p % d for d in range(2, int(p**0.5) + 1))


@dataclasses.dataclass(frozen=True)
class PrimePeriodicSequence:
    p: int
    n: int
    elements: tuple[int, ...]

    def __post_init__(self) -> None:
        if not is_prime(self.p):
            raise ValueError(f"p={self.p} is not prime")
        if self.n < 0:
            raise ValueError(f"period exponent must be non-negative, got {self.n}")
        if len(self.elements) != self.p**self.n:
            raise ValueError(f"expected {self.p ** self.n} elements, got {len(self.elements)}")
        if any(not 0 <= e < self.p for e in self.elements):
            raise ValueError(f"elements must lie in [0, {self.p})")

    @classmethod
    def parse(cls, p: int, n: int, text: str) -> "PrimePeriodicSequence":
        try:
            elements = tuple(int(tok) for tok in text.strip().split(","))
        except ValueError as e:
            raise ValueError(f"not a comma-separated digit list: {text!r}") from e
        return cls(p, n, elements)

    @property
    def period(self) -> int:
        return self.p**self.n

    @property
    def is_zero(self) -> bool:
        return not any(self.elements)

    def to_text(self) -> str:
        return ",".join(str(e) for e in self.elements)


def _trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _poly_divmod(a: list[int], b: list[int], p: int) -> tuple[list[int], list[int]]:
    a, b = _trim([x % p for x in a]), _trim([x % p for x in b])
    if not b:
        raise ZeroDivisionError("division by zero polynomial")
    inv_lead = pow(b[-1], p - 2, p)
    q = [0] * max(len(a) - len(b) + 1, 0)
    while len(a) >= len(b):
        coeff = a[-1] * inv_lead % p
        shift = len(a) - len(b)
        q[shift] = coeff
        for i, c in enumerate(b):
            a[shift + i] = (a[shift + i] - coeff * c) % p
        _trim(a)
    return q, a


def _poly_gcd(a: list[int], b: list[int], p: int) -> list[int]:
    a, b = _trim([x % p for x in a]), _trim([x % p for x in b])
    while b:
        a, b = b, _poly_divmod(a, b, p)[1]
    if a:
        inv_lead = pow(a[-1], p - 2, p)
        a = [x * inv_lead % p for x in a]
    return a


def _x_minus_one_valuation(a: list[int], p: int) -> int:
    """Multiplicity of (x - 1) in the nonzero polynomial a, by synthetic division."""
    a, v = _trim(list(a)), 0
    while len(a) > 1 and sum(a) % p == 0:
        # Horner deflation by (x - 1)
        q, carry = [0] * (len(a) - 1), 0
        for i in range(len(a) - 1, 0, -1):
            carry = (carry + a[i]) % p
            q[i - 1] = carry
        a, v = _trim(q), v + 1
    return v


def lc_p(s: PrimePeriodicSequence) -> int:
    if s.is_zero:
        return 0
    return s.period - _x_minus_one_valuation(list(s.elements), s.p)


def lc_p_oracle_gcd(s: PrimePeriodicSequence) -> int:
    if s.is_zero:
        return 0
    modulus = [s.p - 1] + [0] * (s.period - 1) + [1]
    return s.period - (len(_poly_gcd(list(s.elements), modulus, s.p)) - 1)


def has_full_complexity_p(s: PrimePeriodicSequence) -> bool:
    return sum(s.elements) % s.p != 0


def sum_p(s1: PrimePeriodicSequence, s2: PrimePeriodicSequence) -> PrimePeriodicSequence:
    if (s1.p, s1.n) != (s2.p, s2.n):
        raise ValueError(f"mismatched sequences: p={s1.p}, n={s1.n} vs p={s2.p}, n={s2.n}")
    return PrimePeriodicSequence(
        s1.p, s1.n, tuple((a + b) % s1.p for a, b in zip(s1.elements, s2.elements))
    )


def one_error_lc_p(s: PrimePeriodicSequence) -> int:
    """Smallest complexity after changing at most one term to any other value."""
    best = lc_p(s)
    for pos, delta in itertools.product(range(s.period), range(1, s.p)):
        elements = list(s.elements)
        elements[pos] = (elements[pos] + delta) % s.p
        best = min(best, lc_p(PrimePeriodicSequence(s.p, s.n, tuple(elements))))
    return best


def lemma43_sequence(p: int, n: int, a: int, k: int, b: int, m: int) -> PrimePeriodicSequence:
    """The sequence with s^N(x) = a x^k (1 - x^l), l = b p^m."""
    if not is_prime(p):
        raise ValueError(f"p={p} is not prime")
    if a % p == 0 or b % p == 0:
        raise ValueError(f"a={a} and b={b} must be nonzero mod {p}")
    if k < 0 or m < 0 or b < 0:
        raise ValueError("k, b and m must be non-negative")
    period, l = p**n, b * p**m
    if not (l < period and k + l < period):
        raise ValueError(f"need l={l} < {period} and k + l = {k + l} < {period}")
    elements = [0] * period
    elements[k] = a % p
    elements[k + l] = -a % p
    return PrimePeriodicSequence(p, n, tuple(elements))


def lemma43_lc(p: int, n: int, a: int, k: int, b: int, m: int) -> tuple[int, int]:
    """(L, L_1) of the construction, both equal to p^n - p^m; checked against the oracles."""
    s = lemma43_sequence(p, n, a, k, b, m)
    expected = p**n - p**m
    lc, one_error = lc_p(s), one_error_lc_p(s)
    logging.debug(f"lemma43 p={p} n={n} a={a} k={k} b={b} m={m}: lc={lc} one_error={one_error}")
    if lc != expected or one_error != expected or lc_p_oracle_gcd(s) != expected:
        raise VerificationError(f"expected {expected}, got lc={lc}, one_error_lc={one_error}")
    return lc, one_error
