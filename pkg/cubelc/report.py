import dataclasses

from cubelc import cube, kerror, seqcore
from cubelc.seqcore import PeriodicSequence


@dataclasses.dataclass(frozen=True)
class AnalysisReport:
    fmt: str
    n: int
    lc: int
    kerror: tuple[int, ...]
    celcs: tuple[tuple[int, int], ...]
    stable: tuple[bool, ...]
    decomposition: cube.CubeDecomposition | None = None

    def is_consistent(self) -> bool:
        """The critical points inside the table are exactly its decrease points."""
        drops = [(0, self.kerror[0])]
        for k, value in enumerate(self.kerror):
            if value < drops[-1][1]:
                drops.append((k, value))
        inside = [(k, c) for k, c in self.celcs if k < len(self.kerror)]
        return drops == inside

    def to_json(self) -> dict:
        return {
            "celcs": [[k, c] for k, c in self.celcs],
            "decomposition": self.decomposition.to_json() if self.decomposition else None,
            "format": self.fmt,
            "kerror": list(self.kerror),
            "lc": self.lc,
            "n": self.n,
            "stable": list(self.stable),
        }


def analyze(s: PeriodicSequence, fmt: str, k_max: int, with_decomposition: bool = False) -> AnalysisReport:
    lc = seqcore.lc(s)
    table = tuple(kerror.kerror_profile(s, k_max))
    decomposition = None
    if with_decomposition and not s.is_zero:
        decomposition = cube.decompose(s, strip_impulse=True)
    return AnalysisReport(
        fmt=fmt,
        n=s.n,
        lc=lc,
        kerror=table,
        celcs=kerror.celcs(s).points,
        stable=tuple(value == lc for value in table),
        decomposition=decomposition,
    )
