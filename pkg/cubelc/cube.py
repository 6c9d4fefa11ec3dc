"""Cubes: supports built from two (m-1)-cubes matched at a common distance.

An m-cube with edge valuations i_1 < ... < i_m is a set of 2^m positions that
can be labelled by {0,1}^m so that the distance between two positions is
2^(i_j), j being the lowest coordinate where their labels differ. Translated
subset sums anchor + sum(d_j) are the simplest family, but the matching
between the two halves may use different odd multiples of 2^(i_m) per pair.
"""

import collections
import dataclasses

import numpy as np
from absl import logging

from cubelc import config as config_lib
from cubelc import seqcore
from cubelc.seqcore import PeriodicSequence, two_adic_valuation


@dataclasses.dataclass(frozen=True)
class Cube:
    n: int
    anchor: int
    offsets: tuple[int, ...]
    positions: tuple[int, ...]

    def __post_init__(self) -> None:
        if not self.offsets:
            raise ValueError("a cube needs at least one edge")
        if len(self.positions) != 1 << len(self.offsets):
            raise ValueError(f"{len(self.positions)} positions for {len(self.offsets)} edges")
        period = 1 << self.n
        if len(set(self.positions)) != len(self.positions):
            raise ValueError(f"cube positions repeat: {self.positions}")
        if any(not 0 <= p < period for p in self.positions):
            raise ValueError(f"cube positions outside [0, {period}): {self.positions}")
        vals = self.valuations
        if any(a >= b for a, b in zip(vals, vals[1:])):
            raise ValueError(f"edge valuations must be strictly increasing, got {vals}")

    @classmethod
    def from_offsets(cls, n: int, anchor: int, offsets) -> "Cube":
        """The cube {anchor + sum of a subset of offsets (mod 2^n)}."""
        period = 1 << n
        if not 0 <= anchor < period:
            raise ValueError(f"anchor {anchor} outside [0, {period})")
        offsets = tuple(d % period for d in offsets)
        if any(d == 0 for d in offsets):
            raise ValueError("offsets must be nonzero modulo the period")
        positions = {anchor}
        for d in offsets:
            positions |= {(p + d) % period for p in positions}
        if len(positions) != 1 << len(offsets):
            raise ValueError(f"subset sums of {offsets} collide modulo {period}")
        return cls(n=n, anchor=anchor, offsets=offsets, positions=tuple(sorted(positions)))

    @property
    def m(self) -> int:
        return len(self.offsets)

    @property
    def valuations(self) -> tuple[int, ...]:
        return tuple(two_adic_valuation(d) for d in self.offsets)

    @property
    def edges(self) -> tuple[int, ...]:
        return tuple(1 << i for i in self.valuations)

    @property
    def lc(self) -> int:
        return cube_lc(self)

    def to_sequence(self) -> PeriodicSequence:
        return seqcore.from_support(self.n, self.positions)

    def to_json(self) -> dict:
        return {
            "anchor": self.anchor,
            "edges": list(self.edges),
            "lc": self.lc,
            "n": self.n,
            "offsets": list(self.offsets),
            "support": list(self.positions),
        }


@dataclasses.dataclass(frozen=True)
class CubeDecomposition:
    n: int
    lc: int
    cubes: tuple[Cube, ...]
    residual_impulse: int | None = None
    # False when some cube came from the lifted head after the search budget ran out
    canonical: bool = True

    @property
    def complexities(self) -> tuple[int, ...]:
        return tuple(c.lc for c in self.cubes)

    def to_json(self) -> dict:
        return {
            "cubes": [c.to_json() for c in self.cubes],
            "lc": self.lc,
            "residual_impulse": self.residual_impulse,
        }


def cube_support(c: Cube) -> frozenset[int]:
    return frozenset(c.positions)


def cube_lc(c: Cube) -> int:
    return (1 << c.n) - sum(c.edges)


def _label(points: list[int], n: int) -> tuple[tuple[int, ...], dict[int, int]] | None:
    """Edge valuations and a {0,1}^m labelling of points, or None."""
    if len(points) == 1:
        return (), {points[0]: 0}
    for u in range(1, n + 1):
        if len({p % (1 << u) for p in points}) == len(points):
            break
    else:
        return None
    top = u - 1
    groups = collections.defaultdict(list)
    for p in points:
        groups[p % (1 << top)].append(p)
    if any(len(g) != 2 for g in groups.values()):
        return None
    partner = {min(g): max(g) for g in groups.values()}
    sub = _label(sorted(partner), n)
    if sub is None:
        return None
    vals, labels = sub
    for p, q in partner.items():
        labels[q] = labels[p] | (1 << len(vals))
    return vals + (top,), labels


def _pattern_holds(points: list[int], vals: tuple[int, ...], labels: dict[int, int]) -> bool:
    for i, p in enumerate(points):
        for q in points[i + 1 :]:
            diff = labels[p] ^ labels[q]
            lowest = (diff & -diff).bit_length() - 1
            if two_adic_valuation(p - q) != vals[lowest]:
                return False
    return True


def recognize_cube(n: int, positions) -> Cube | None:
    """The cube whose support is positions, or None when it is not a cube."""
    positions = list(positions)
    points = sorted(set(positions))
    if len(points) != len(positions) or len(points) < 2:
        return None
    if not seqcore.is_power_of_two(len(points)):
        return None
    if points[0] < 0 or points[-1] >= 1 << n:
        return None
    found = _label(points, n)
    if found is None:
        return None
    vals, labels = found
    if not _pattern_holds(points, vals, labels):
        return None
    anchor = points[0]
    # relabel so the anchor is the origin
    by_label = {labels[p] ^ labels[anchor]: p for p in points}
    offsets = tuple((by_label[1 << j] - anchor) % (1 << n) for j in range(len(vals)))
    return Cube(n=n, anchor=anchor, offsets=offsets, positions=tuple(points))


def _head_positions(bits: int, n: int) -> list[int]:
    if n == 0:
        return [0]
    half = 1 << (n - 1)
    left, right = bits & (half - 1), bits >> half
    if left != right:
        sub = _head_positions(left ^ right, n - 1)
        return [r if (bits >> r) & 1 else r + half for r in sub]
    sub = _head_positions(left, n - 1)
    return sub + [r + half for r in sub]


def head_cube(s: PeriodicSequence) -> Cube:
    """A cube inside the support of s with complexity L(s).

    Lifted through the halving recursion: when the halves differ, each
    position of the cube found in their XOR lifts to the unique support
    position above it; when they agree, the cube found in one half is
    doubled along an edge of length N/2.
    """
    if s.is_zero or s.weight % 2:
        raise ValueError("head cubes exist for nonzero even-weight sequences only")
    cube = recognize_cube(s.n, _head_positions(s.bits, s.n))
    assert cube is not None and cube.lc == seqcore.lc(s), "head lift is not a cube of L(s)"
    return cube


class _SearchBudgetExhausted(Exception):
    pass


def _search_head(s: PeriodicSequence, valuations: tuple[int, ...], budget: int) -> Cube | None:
    support = s.support()
    allowed = set(valuations)
    size = 1 << len(valuations)
    chosen: list[int] = []
    nodes = 0

    def dfs(start: int) -> Cube | None:
        nonlocal nodes
        if len(chosen) == size:
            cube = recognize_cube(s.n, chosen)
            if cube is not None and cube.valuations == valuations:
                return cube
            return None
        for idx in range(start, len(support) - (size - len(chosen)) + 1):
            nodes += 1
            if nodes > budget:
                raise _SearchBudgetExhausted
            p = support[idx]
            if all(two_adic_valuation(p - q) in allowed for q in chosen):
                chosen.append(p)
                found = dfs(idx + 1)
                if found is not None:
                    return found
                chosen.pop()
        return None

    return dfs(0)


def _canonical_head(s: PeriodicSequence, budget: int) -> tuple[Cube, bool]:
    deficiency = s.period - seqcore.lc(s)
    valuations = tuple(j for j in range(s.n) if (deficiency >> j) & 1)
    try:
        cube = _search_head(s, valuations, budget)
    except _SearchBudgetExhausted:
        logging.warning(f"cube search exceeded {budget} nodes on weight {s.weight}; using the lifted head")
        return head_cube(s), False
    if cube is None:
        raise RuntimeError(f"no cube of complexity {seqcore.lc(s)} inside the support of {s}")
    return cube, True


def decompose(
    s: PeriodicSequence, strip_impulse: bool = False, search_budget: int | None = None
) -> CubeDecomposition:
    """Peel disjoint cubes of strictly decreasing complexity off s.

    Each step extracts the lexicographically smallest cube of complexity L
    inside the remaining support, L being the complexity of the remainder.
    A step whose search exceeds search_budget nodes takes the lifted head
    cube instead; the result then depends on the budget and is marked
    canonical=False.
    """
    if s.is_zero:
        raise ValueError("the zero sequence has no cube decomposition")
    if search_budget is None:
        search_budget = config_lib.get_config().decompose_search_budget
    impulse = None
    rest = s
    if s.weight % 2:
        if not strip_impulse:
            raise ValueError("odd-weight sequences have L = 2^n; strip one impulse first")
        impulse = s.support()[0]
        rest = s.flip([impulse])
    cubes = []
    canonical = True
    while not rest.is_zero:
        cube, found = _canonical_head(rest, search_budget)
        canonical = canonical and found
        logging.debug(f"extracted {cube.m}-cube {cube.positions} with lc {cube.lc}")
        cubes.append(cube)
        rest = rest.flip(cube.positions)
    return CubeDecomposition(
        n=s.n, lc=seqcore.lc(s), cubes=tuple(cubes), residual_impulse=impulse, canonical=canonical
    )


def k_min(s: PeriodicSequence) -> int:
    """Fewest changes that lower L(s): 2^m, m the number of edges of the head cube."""
    if s.is_zero:
        raise ValueError("the zero sequence cannot lose complexity")
    return 1 << (s.period - seqcore.lc(s)).bit_count()


def construct_max_stable(n: int, k: int, anchor: int = 0) -> PeriodicSequence:
    """A run of 2^l ones (l = bit length of k) starting at anchor, wrapping around.

    Its complexity 2^n - (2^l - 1) is stable for every e < 2^l.
    """
    period = 1 << n
    if not 1 <= k < period:
        raise ValueError(f"k={k} outside [1, {period})")
    l = k.bit_length()
    if l > n:
        raise ValueError(f"a run of {1 << l} ones does not fit in period {period}")
    cube = Cube.from_offsets(n, anchor, [1 << j for j in range(l)])
    return cube.to_sequence()


def superpose_preserving(s: PeriodicSequence, t: PeriodicSequence) -> PeriodicSequence:
    if seqcore.lc(t) >= seqcore.lc(s):
        raise ValueError(f"superposed sequence has lc {seqcore.lc(t)} >= {seqcore.lc(s)}")
    return seqcore.sum_sequences(s, t)


def random_cube(n: int, m: int, rng: np.random.Generator, jitter: bool = False) -> Cube:
    """A random m-cube of period 2^n.

    Without jitter it is a translated subset-sum cube. With jitter every
    position of the lower half gets its own odd multiple of 2^(i_j) when the
    cube is doubled along edge j.
    """
    if not 1 <= m <= n:
        raise ValueError(f"need 1 <= m <= n, got m={m}, n={n}")
    period = 1 << n
    vals = sorted(int(v) for v in rng.choice(n, size=m, replace=False))
    anchor = int(rng.integers(period))

    def odd_multiple(i: int) -> int:
        return (2 * int(rng.integers(max(period >> (i + 1), 1))) + 1) << i

    if not jitter:
        return Cube.from_offsets(n, anchor, [odd_multiple(i) for i in vals])
    points = [anchor]
    for i in vals:
        points = points + [(p + odd_multiple(i)) % period for p in points]
    cube = recognize_cube(n, points)
    assert cube is not None, f"jittered construction {points} is not a cube"
    return cube
