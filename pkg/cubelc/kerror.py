"""k-error linear complexity, stability and critical error spectra."""

import dataclasses
import itertools
import math

import numpy as np
from absl import logging

from cubelc import config as config_lib
from cubelc import seqcore
from cubelc.seqcore import PeriodicSequence


class EnumerationBudgetError(ValueError):
    pass


@dataclasses.dataclass(frozen=True)
class ErrorPattern:
    positions: frozenset[int] = frozenset()

    @property
    def weight(self) -> int:
        return len(self.positions)

    def apply(self, s: PeriodicSequence) -> PeriodicSequence:
        return s.flip(self.positions)

    def to_json(self) -> list[int]:
        return sorted(self.positions)


@dataclasses.dataclass(frozen=True)
class CelcsProfile:
    points: tuple[tuple[int, int], ...]

    def value_at(self, k: int) -> int:
        """L_k read off the profile: the value of the last critical point with k' <= k."""
        value = None
        for k_point, c in self.points:
            if k_point > k:
                break
            value = c
        if value is None:
            raise ValueError(f"profile does not start at k=0: {self.points}")
        return value

    def to_json(self) -> dict:
        return {"points": [[k, c] for k, c in self.points]}


def _check_k(s: PeriodicSequence, k: int) -> None:
    if not 0 <= k <= s.period:
        raise ValueError(f"k={k} outside [0, {s.period}]")


def kerror_lc(s: PeriodicSequence, k: int) -> int:
    """L_k(s) by the cost-propagating halving recursion.

    cost[i] is the number of changes in the original period needed to flip
    position i of the current reduced sequence. At each halving step the
    halves are forced equal when that costs at most the remaining budget;
    otherwise the complexity gains N/2 and the recursion moves to their XOR.
    """
    _check_k(s, k)
    a = [s[i] for i in range(s.period)]
    cost = [1] * s.period
    lc, half = 0, s.period
    while half > 1:
        half >>= 1
        diff = [a[i] ^ a[i + half] for i in range(half)]
        needed = sum(min(cost[i], cost[i + half]) for i in range(half) if diff[i])
        if needed <= k:
            k -= needed
            next_a, next_cost = [], []
            for i in range(half):
                c_left, c_right = cost[i], cost[i + half]
                if not diff[i]:
                    next_a.append(a[i])
                    next_cost.append(c_left + c_right)
                elif c_left <= c_right:
                    # change the left entry to match the right one
                    next_a.append(a[i + half])
                    next_cost.append(c_right - c_left)
                else:
                    next_a.append(a[i])
                    next_cost.append(c_left - c_right)
            a, cost = next_a, next_cost
        else:
            lc += half
            a = diff
            cost = [min(cost[i], cost[i + half]) for i in range(half)]
    if a[0] and cost[0] > k:
        lc += 1
    return lc


def _pattern_count(period: int, k: int) -> int:
    return sum(math.comb(period, w) for w in range(k + 1))


def _check_budget(s: PeriodicSequence, k: int, budget: int | None, force: bool) -> None:
    if budget is None:
        budget = config_lib.get_config().enumeration_budget
    count = _pattern_count(s.period, k)
    if count > budget and not force:
        logging.warning(f"refusing brute force over {count} patterns (N={s.period}, k={k})")
        raise EnumerationBudgetError(
            f"{count} pattern evaluations exceed enumeration_budget={budget}; "
            "raise the budget or pass force=True"
        )


def kerror_lc_bruteforce(
    s: PeriodicSequence, k: int, budget: int | None = None, force: bool = False
) -> int:
    """Exact L_k(s) by enumerating every error pattern of weight at most k."""
    _check_k(s, k)
    _check_budget(s, k, budget, force)
    best = seqcore.lc(s)
    for w in range(1, k + 1):
        if best == 0:
            break
        for positions in itertools.combinations(range(s.period), w):
            best = min(best, seqcore.lc(s.flip(positions)))
    return best


def kerror_witness(
    s: PeriodicSequence, k: int, budget: int | None = None, force: bool = False
) -> tuple[int, ErrorPattern]:
    """L_k(s) together with the lexicographically smallest minimising pattern."""
    _check_k(s, k)
    _check_budget(s, k, budget, force)
    best, witness = seqcore.lc(s), ()
    for w in range(1, k + 1):
        for positions in itertools.combinations(range(s.period), w):
            value = seqcore.lc(s.flip(positions))
            if value < best or (value == best and positions < witness):
                best, witness = value, positions
    return best, ErrorPattern(frozenset(witness))


def is_stable(s: PeriodicSequence, k: int) -> bool:
    return kerror_lc(s, k) == seqcore.lc(s)


def kerror_profile(s: PeriodicSequence, k_max: int) -> list[int]:
    _check_k(s, k_max)
    return [kerror_lc(s, k) for k in range(k_max + 1)]


def celcs(s: PeriodicSequence) -> CelcsProfile:
    """Critical points (k, c_k) where the k-error linear complexity drops."""
    points = [(0, seqcore.lc(s))]
    k = 0
    while points[-1][1] > 0:
        k += 1
        value = kerror_lc(s, k)
        if value < points[-1][1]:
            points.append((k, value))
    return CelcsProfile(tuple(points))


def max_1error_lc(n: int) -> int:
    if n < 1:
        raise ValueError(f"need n >= 1, got {n}")
    return (1 << n) - 1


def max_kerror_lc(n: int, k: int) -> int:
    """Largest L_k over all 2^n-periodic binary sequences: 2^n - (2^l - 1), 2^(l-1) <= k < 2^l."""
    if n < 1:
        raise ValueError(f"need n >= 1, got {n}")
    if k == 0:
        return 1 << n
    if not 0 < k < (1 << n):
        raise ValueError(f"k={k} outside [0, 2^{n})")
    l = k.bit_length()
    return (1 << n) - ((1 << l) - 1)


def kerror_table(n: int, k_max: int) -> np.ndarray:
    """L_k of every sequence of period 2^n for k = 0..k_max.

    Row k holds the minimum of the linear complexity table over the Hamming
    ball of radius k around each sequence, grown one flip at a time.
    """
    period = 1 << n
    if not 0 <= k_max <= period:
        raise ValueError(f"k_max={k_max} outside [0, {period}]")
    table = seqcore.linear_complexity_table(n)
    index = np.arange(table.size)
    rows = [table]
    for _ in range(k_max):
        prev = rows[-1]
        row = prev.copy()
        for i in range(period):
            np.minimum(row, prev[index ^ (1 << i)], out=row)
        rows.append(row)
    return np.stack(rows)
