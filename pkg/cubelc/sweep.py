"""Exhaustive verification of the maximum k-error linear complexity."""

import dataclasses
import pathlib
from concurrent import futures

from absl import logging
from colorama import Fore, Style
from tqdm import tqdm

from cubelc import kerror
from cubelc.seqcore import PeriodicSequence
from cubelc.utils import dumps


@dataclasses.dataclass(frozen=True)
class SweepRow:
    k: int
    max_klc: int
    formula_value: int

    @property
    def match(self) -> bool:
        return self.max_klc == self.formula_value

    def to_json(self) -> dict:
        return dataclasses.asdict(self) | {"match": self.match}


def chunk_maxima(n: int, k_max: int, start: int, stop: int) -> list[int]:
    """Largest L_k for k = 1..k_max over the sequences packed as start..stop-1."""
    maxima = [0] * k_max
    for bits in range(start, stop):
        s = PeriodicSequence(n, bits)
        for k in range(1, k_max + 1):
            value = kerror.kerror_lc(s, k)
            if value > maxima[k - 1]:
                maxima[k - 1] = value
            if value == 0:
                break
    return maxima


class Sweeper:
    def __init__(self, n: int, k_max: int, workers: int = 1, chunk_size: int = 4096) -> None:
        """Enumerate every sequence of period 2^n and compare max L_k with 2^n - (2^l - 1).

        Args:
            n (int): period exponent.
            k_max (int): largest k checked, below 2^n.
            workers (int, optional): worker processes; 1 runs inline. Defaults to 1.
            chunk_size (int, optional): sequences per work unit. Defaults to 4096.
        """
        if n < 1:
            raise ValueError(f"need n >= 1, got {n}")
        if not 1 <= k_max < (1 << n):
            raise ValueError(f"k_max={k_max} outside [1, {1 << n})")
        self.n = n
        self.k_max = k_max
        self.workers = workers
        self.chunk_size = chunk_size

    @property
    def sequences(self) -> int:
        return 1 << (1 << self.n)

    def _chunks(self) -> list[tuple[int, int]]:
        return [
            (start, min(start + self.chunk_size, self.sequences))
            for start in range(0, self.sequences, self.chunk_size)
        ]

    def run(self) -> list[SweepRow]:
        logging.info(
            f"Sweeping {self.sequences} sequences (n={self.n}, k <= {self.k_max}) on {self.workers} workers"
        )
        maxima = [0] * self.k_max
        chunks = self._chunks()
        if self.workers == 1:
            results = (chunk_maxima(self.n, self.k_max, a, b) for a, b in chunks)
            for part in tqdm(results, total=len(chunks), desc="sweep"):
                maxima = [max(x, y) for x, y in zip(maxima, part)]
        else:
            with futures.ProcessPoolExecutor(max_workers=self.workers) as pool:
                pending = [pool.submit(chunk_maxima, self.n, self.k_max, a, b) for a, b in chunks]
                for done in tqdm(futures.as_completed(pending), total=len(pending), desc="sweep"):
                    maxima = [max(x, y) for x, y in zip(maxima, done.result())]

        rows = [
            SweepRow(k=k, max_klc=maxima[k - 1], formula_value=kerror.max_kerror_lc(self.n, k))
            for k in range(1, self.k_max + 1)
        ]
        for row in rows:
            verdict = f"{Fore.GREEN}match" if row.match else f"{Fore.RED}MISMATCH"
            logging.info(
                f"k: {row.k:3d} |\tmax L_k: {row.max_klc:5d} |\tformula: {row.formula_value:5d} |\t{verdict}{Style.RESET_ALL}"
            )
        return rows

    def summary(self, rows: list[SweepRow]) -> dict:
        return {
            "all_match": all(row.match for row in rows),
            "k_max": self.k_max,
            "n": self.n,
            "rows": [row.to_json() for row in rows],
            "sequences": self.sequences,
        }

    def save(self, rows: list[SweepRow], out_dir: str) -> tuple[pathlib.Path, pathlib.Path]:
        out = pathlib.Path(out_dir)
        out.mkdir(parents=True, exist_ok=True)
        tsv_path = out / f"sweep-n{self.n}.tsv"
        json_path = out / f"sweep-n{self.n}.json"
        lines = ["k\tmax_klc\tformula_value\tmatch"]
        for row in rows:
            lines.append(f"{row.k}\t{row.max_klc}\t{row.formula_value}\t{str(row.match).lower()}")
        tsv_path.write_text("\n".join(lines) + "\n")
        json_path.write_text(dumps(self.summary(rows)) + "\n")
        logging.info(f"Wrote {tsv_path} and {json_path}")
        return tsv_path, json_path
