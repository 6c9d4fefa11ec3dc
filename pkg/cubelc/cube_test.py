import numpy as np
from absl.testing import absltest, parameterized

from cubelc import config as config_lib
from cubelc import cube, kerror, seqcore
from cubelc.cube import Cube
from cubelc.seqcore import PeriodicSequence

S = PeriodicSequence.from_bitstring


def random_even_weight(rng: np.random.Generator, n: int, max_weight: int = 8) -> PeriodicSequence:
    weight = int(rng.choice(np.arange(2, max_weight + 1, 2)))
    positions = rng.choice(1 << n, size=weight, replace=False)
    return seqcore.from_support(n, (int(p) for p in positions))


class CubeTest(parameterized.TestCase):
    @parameterized.parameters(
        (3, [1], {0, 1}),
        (3, [1, 2], {0, 1, 2, 3}),
        (4, [1, 2, 4], set(range(8))),
    )
    def test_cube_support(self, n, offsets, expected):
        self.assertEqual(cube.cube_support(Cube.from_offsets(n, 0, offsets)), expected)

    def test_wrapping_support(self):
        c = Cube.from_offsets(3, 6, [1, 2])
        self.assertEqual(cube.cube_support(c), {6, 7, 0, 1})
        self.assertEqual(c.lc, 5)

    @parameterized.parameters(
        (4, [1, 2, 4], 9),
        (3, [1, 2], 5),
        (4, [6], 14),
        (5, [24], 24),
    )
    def test_cube_lc(self, n, offsets, expected):
        c = Cube.from_offsets(n, 0, offsets)
        self.assertEqual(cube.cube_lc(c), expected)
        self.assertEqual(seqcore.lc(c.to_sequence()), expected)

    @parameterized.parameters(
        (3, 0, [2, 6]),
        (3, 8, [1]),
        (3, 0, [8]),
        (3, 0, [4, 2]),
    )
    def test_from_offsets_rejects(self, n, anchor, offsets):
        with self.assertRaises(ValueError):
            Cube.from_offsets(n, anchor, offsets)

    def test_needs_an_edge(self):
        with self.assertRaises(ValueError):
            Cube(n=3, anchor=0, offsets=(), positions=(0,))

    @parameterized.parameters(
        ((0, 0),),
        ((0, 8),),
        ((-1, 0),),
    )
    def test_rejects_bad_positions(self, positions):
        with self.assertRaises(ValueError):
            Cube(n=3, anchor=0, offsets=(1,), positions=positions)

    def test_to_json(self):
        self.assertEqual(
            Cube.from_offsets(4, 0, [1, 2]).to_json(),
            {"anchor": 0, "edges": [1, 2], "lc": 13, "n": 4, "offsets": [1, 2], "support": [0, 1, 2, 3]},
        )


class RecognizeTest(parameterized.TestCase):
    def test_square(self):
        c = cube.recognize_cube(4, {0, 1, 2, 3})
        self.assertEqual(c.edges, (1, 2))
        self.assertEqual(c.lc, 13)

    def test_non_translate_three_cube(self):
        c = cube.recognize_cube(4, {0, 1, 2, 3, 4, 7, 13, 14})
        self.assertIsNotNone(c)
        self.assertEqual(c.edges, (1, 2, 4))
        self.assertEqual(c.lc, 9)
        self.assertEqual(c.anchor, 0)
        self.assertEqual(seqcore.lc(c.to_sequence()), 9)

    @parameterized.parameters(
        ({0, 3, 5},),
        ({0, 1, 2, 4},),
        ({0},),
        ((0, 0, 1, 1),),
        ({0, 16},),
        ({1, 5, 9, 11},),
    )
    def test_not_a_cube(self, positions):
        self.assertIsNone(cube.recognize_cube(4, positions))

    def test_accepts_generators(self):
        self.assertIsNotNone(cube.recognize_cube(3, (p for p in [0, 1])))

    @parameterized.parameters(
        ([3, 4], [1, 7], [0, 8]),
        ([7, 8], [1, 3], [0, 4]),
        ([0, 3], [1, 7], [4, 8]),
        ([0, 1], [3, 4, 7, 8]),
    )
    def test_alternative_decompositions(self, *pieces):
        s = seqcore.from_support(4, [0, 1, 3, 4, 7, 8])
        cubes = [cube.recognize_cube(4, piece) for piece in pieces]
        self.assertNotIn(None, cubes)
        total = seqcore.zero(4)
        for c in cubes:
            total = total + c.to_sequence()
        self.assertEqual(total, s)
        complexities = [c.lc for c in cubes]
        self.assertEqual(complexities[0], seqcore.lc(s))
        self.assertEqual(complexities, sorted(set(complexities), reverse=True))

    @parameterized.parameters(range(3, 11))
    def test_cube_formula_sweep(self, n):
        rng = np.random.default_rng(config_lib.get_config().seed + n)
        for i in range(200):
            m = int(rng.integers(1, n + 1))
            c = cube.random_cube(n, m, rng, jitter=bool(i % 2))
            self.assertLen(c.positions, 1 << m)
            self.assertEqual(seqcore.lc(c.to_sequence()), (1 << n) - sum(c.edges))
            found = cube.recognize_cube(n, c.positions)
            self.assertIsNotNone(found)
            self.assertEqual(found.valuations, c.valuations)

    def test_random_cube_rejects(self):
        rng = np.random.default_rng(0)
        with self.assertRaises(ValueError):
            cube.random_cube(3, 4, rng)
        with self.assertRaises(ValueError):
            cube.random_cube(3, 0, rng)


class HeadCubeTest(absltest.TestCase):
    def test_head_cube(self):
        rng = np.random.default_rng(38)
        for n in (3, 4, 5, 6):
            for _ in range(100):
                s = random_even_weight(rng, n, max_weight=min(12, 1 << n))
                head = cube.head_cube(s)
                self.assertEqual(head.lc, seqcore.lc(s))
                self.assertTrue(cube.cube_support(head) <= set(s.support()))

    def test_head_cube_rejects(self):
        with self.assertRaises(ValueError):
            cube.head_cube(S("11100000"))
        with self.assertRaises(ValueError):
            cube.head_cube(seqcore.zero(3))


class DecomposeTest(parameterized.TestCase):
    def assertValidDecomposition(self, s: PeriodicSequence, decomposition: cube.CubeDecomposition):
        self.assertEqual(decomposition.lc, seqcore.lc(s))
        total = seqcore.zero(s.n)
        if decomposition.residual_impulse is not None:
            total = seqcore.from_support(s.n, [decomposition.residual_impulse])
        seen = set()
        for c in decomposition.cubes:
            support = cube.cube_support(c)
            self.assertFalse(support & seen)
            seen |= support
            total = total + c.to_sequence()
            recognized = cube.recognize_cube(s.n, c.positions)
            self.assertIsNotNone(recognized)
            self.assertEqual(recognized.lc, c.lc)
        self.assertEqual(total, s)
        complexities = list(decomposition.complexities)
        self.assertEqual(complexities, sorted(set(complexities), reverse=True))
        if decomposition.residual_impulse is None:
            self.assertEqual(complexities[0], seqcore.lc(s))

    def test_two_squares(self):
        s = seqcore.from_support(4, {0, 1, 2, 3, 5, 6, 9, 10})
        d = cube.decompose(s)
        self.assertEqual([c.positions for c in d.cubes], [(0, 1, 2, 3), (5, 6, 9, 10)])
        self.assertEqual(d.complexities, (13, 11))
        self.assertValidDecomposition(s, d)

    def test_single_three_cube(self):
        s = seqcore.from_support(4, {0, 1, 2, 3, 4, 7, 13, 14})
        d = cube.decompose(s)
        self.assertEqual(d.complexities, (9,))
        self.assertEqual(d.cubes[0].edges, (1, 2, 4))

    def test_single_edge(self):
        d = cube.decompose(S("1100000000000000"))
        self.assertEqual(d.complexities, (15,))

    def test_leading_edge_then_smaller_cubes(self):
        s = seqcore.from_support(4, {0, 1, 3, 4, 7, 8})
        d = cube.decompose(s)
        self.assertEqual(d.complexities, (15, 11))
        self.assertEqual(d.cubes[0].positions, (0, 1))
        self.assertValidDecomposition(s, d)

    def test_superposed_example(self):
        s = seqcore.from_support(4, {0, 1, 3, 4, 7, 8})
        t = seqcore.from_support(4, {12, 13})
        with self.assertRaises(ValueError):
            cube.superpose_preserving(s, t)
        merged = s + t
        d = cube.decompose(merged)
        self.assertEqual([c.positions for c in d.cubes], [(1, 3, 7, 13), (0, 4, 8, 12)])
        self.assertEqual(d.complexities, (10, 4))

    def test_odd_weight(self):
        s = S("11100000")
        with self.assertRaises(ValueError):
            cube.decompose(s)
        d = cube.decompose(s, strip_impulse=True)
        self.assertEqual(d.residual_impulse, 0)
        self.assertEqual([c.positions for c in d.cubes], [(1, 2)])
        self.assertEqual(d.lc, 8)
        self.assertValidDecomposition(s, d)

    def test_zero_sequence(self):
        with self.assertRaises(ValueError):
            cube.decompose(seqcore.zero(3))

    def test_json(self):
        d = cube.decompose(S("11000000"))
        self.assertEqual(
            d.to_json(),
            {
                "cubes": [{"anchor": 0, "edges": [1], "lc": 7, "n": 3, "offsets": [1], "support": [0, 1]}],
                "lc": 7,
                "residual_impulse": None,
            },
        )

    @parameterized.parameters(4, 5)
    def test_round_trip(self, n):
        rng = np.random.default_rng(config_lib.get_config().seed)
        for _ in range(500):
            s = random_even_weight(rng, n)
            self.assertValidDecomposition(s, cube.decompose(s))

    def test_search_budget_fallback(self):
        rng = np.random.default_rng(7)
        for _ in range(50):
            s = random_even_weight(rng, 5, max_weight=12)
            d = cube.decompose(s, search_budget=1)
            self.assertValidDecomposition(s, d)
            self.assertFalse(d.canonical)

    def test_canonical_within_budget(self):
        d = cube.decompose(S("11000000"))
        self.assertTrue(d.canonical)
        self.assertEqual(d.cubes[0].positions, (0, 1))
        fallback = cube.decompose(S("11000000"), search_budget=1)
        self.assertFalse(fallback.canonical)
        self.assertEqual(fallback.lc, d.lc)
        self.assertEqual(fallback.to_json().keys(), d.to_json().keys())


class KMinTest(parameterized.TestCase):
    @parameterized.parameters(("11110000", 4), ("01000100", 2), ("11100000", 1), ("1111111100000000", 8))
    def test_k_min(self, bits, expected):
        self.assertEqual(cube.k_min(S(bits)), expected)

    def test_zero_sequence(self):
        with self.assertRaises(ValueError):
            cube.k_min(seqcore.zero(4))

    def test_matches_first_drop(self):
        table = kerror.kerror_table(4, 8)
        rng = np.random.default_rng(config_lib.get_config().seed)
        for i in range(500):
            s = random_even_weight(rng, 4)
            lc = seqcore.lc(s)
            first_drop = next(k for k in range(1, 9) if table[k, s.bits] < lc)
            self.assertEqual(cube.k_min(s), first_drop, msg=str(s))
            if i < 25:
                self.assertLess(kerror.kerror_lc_bruteforce(s, first_drop), lc)
                self.assertEqual(kerror.kerror_lc_bruteforce(s, first_drop - 1), lc)


class ConstructTest(parameterized.TestCase):
    @parameterized.parameters(
        (3, 3, 0, "11110000", 5),
        (4, 4, 0, "1111111100000000", 9),
        (3, 1, 0, "11000000", 7),
        (4, 1, 0, "1100000000000000", 15),
        (3, 1, 7, "10000001", 7),
    )
    def test_examples(self, n, k, anchor, bits, lc):
        s = cube.construct_max_stable(n, k, anchor)
        self.assertEqual(s.to_bitstring(), bits)
        self.assertEqual(seqcore.lc(s), lc)
        self.assertTrue(kerror.is_stable(s, k))

    @parameterized.parameters((3, 8), (3, 0), (2, 4))
    def test_rejects(self, n, k):
        with self.assertRaises(ValueError):
            cube.construct_max_stable(n, k)

    @parameterized.parameters(range(3, 11))
    def test_maximum_stable(self, n):
        for l in (1, 2, 3):
            for k in (1 << (l - 1), (1 << l) - 1):
                s = cube.construct_max_stable(n, k)
                lc = seqcore.lc(s)
                self.assertEqual(lc, (1 << n) - ((1 << l) - 1))
                self.assertEqual(lc, kerror.max_kerror_lc(n, k))
                for e in range(1 << l):
                    self.assertEqual(kerror.kerror_lc(s, e), lc)
                    if n <= 4:
                        self.assertEqual(kerror.kerror_lc_bruteforce(s, e), lc)
                self.assertLess(kerror.kerror_lc(s, 1 << l), lc)


class SuperposeTest(absltest.TestCase):
    def test_superpose(self):
        s = S("11110000")
        with self.assertRaises(ValueError):
            cube.superpose_preserving(s, S("00000011"))
        t = seqcore.from_support(3, [2, 6])
        self.assertEqual(seqcore.lc(t), 4)
        self.assertEqual(seqcore.lc(cube.superpose_preserving(s, t)), 5)
        self.assertEqual(cube.superpose_preserving(s, seqcore.zero(3)), s)


if __name__ == "__main__":
    absltest.main()
