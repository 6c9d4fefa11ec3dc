"""
Command-line front-end for linear complexity and cube analysis of 2^n-periodic sequences.

    cubelc lc 11110000
    cubelc klc 11110000 --k 3
    cubelc celcs 11110000
    cubelc decompose 1111011001100000
    cubelc construct --n 3 --k 3 --anchor 0
    cubelc sweep --n 4 --k-max 4 --out results
    cubelc pary lc --p 3 --n 2 1,0,0,2,0,0,0,0,0
    cubelc analyze 11110000 --k_max 4 --decompose
"""

from absl import app, flags, logging
from ml_collections import config_dict, config_flags

from cubelc import config as config_lib
from cubelc import cube, kerror, pary, report, seqcore, utils
from cubelc.seqcore import PeriodicSequence
from cubelc.sweep import Sweeper

FLAGS = flags.FLAGS

config_flags.DEFINE_config_dict(
    "config",
    config_lib.get_config(),
    "Analysis configuration.",
    lock_config=True,
)

flags.DEFINE_enum("format", "auto", ["auto", "bits", "hex"], "How to read sequence inputs.")
flags.DEFINE_integer("k", 1, "Number of errors (klc, construct).")
flags.DEFINE_integer("k_max", None, "Largest k for sweep and analyze.")
flags.DEFINE_alias("k-max", "k_max")
flags.DEFINE_integer("n", None, "Period exponent.")
flags.DEFINE_integer("p", None, "Prime field size for pary.")
flags.DEFINE_integer("anchor", 0, "First position of the constructed cube.")
flags.DEFINE_multi_string("extras", [], "Comma-separated support of a cube to superpose; repeatable.")
flags.DEFINE_string("out", None, "Sweep output directory (defaults to config.out_dir).")
flags.DEFINE_integer("workers", None, "Sweep worker processes.")
flags.DEFINE_boolean("force", False, "Sweep beyond config.sweep_max_n.")
flags.DEFINE_boolean("witness", False, "Also report a minimising error pattern (klc).")
flags.DEFINE_boolean("decompose", False, "Include the cube decomposition (analyze).")
flags.DEFINE_integer("offset", 0, "Impulse offset k (pary lemma43).")
flags.DEFINE_integer("a", 1, "Impulse amplitude a (pary lemma43).")
flags.DEFINE_integer("b", 1, "Gap multiplier b, gap = b p^m (pary lemma43).")
flags.DEFINE_integer("m", 0, "Gap exponent m (pary lemma43).")

COMMANDS = ("lc", "klc", "celcs", "decompose", "construct", "sweep", "pary", "analyze")


def parse_sequence(text: str, fmt: str) -> tuple[PeriodicSequence, str]:
    text = utils.read_input(text)
    s = PeriodicSequence.parse(text, fmt)
    if fmt == "auto":
        fmt = "bits" if len(text.strip()) == s.period else "hex"
    return s, fmt


def cmd_lc(text: str, fmt: str = "auto") -> dict:
    s, _ = parse_sequence(text, fmt)
    return {"lc": seqcore.linear_complexity(s).lc, "n": s.n}


def cmd_klc(text: str, k: int, fmt: str = "auto", witness: bool = False, budget: int | None = None) -> dict:
    s, _ = parse_sequence(text, fmt)
    lc, klc = seqcore.lc(s), kerror.kerror_lc(s, k)
    result = {"k": k, "klc": klc, "lc": lc, "stable": klc == lc}
    if witness:
        _, pattern = kerror.kerror_witness(s, k, budget=budget)
        result["witness"] = pattern.to_json()
    return result


def cmd_celcs(text: str, fmt: str = "auto") -> dict:
    s, _ = parse_sequence(text, fmt)
    return kerror.celcs(s).to_json()


def cmd_decompose(text: str, fmt: str = "auto", search_budget: int | None = None) -> dict:
    s, _ = parse_sequence(text, fmt)
    if s.is_zero:
        return {"cubes": [], "lc": 0, "residual_impulse": None}
    return cube.decompose(s, strip_impulse=True, search_budget=search_budget).to_json()


def cmd_construct(n: int, k: int, anchor: int = 0, extras: list[str] | None = None) -> tuple[str, dict]:
    s = cube.construct_max_stable(n, k, anchor)
    for raw in extras or []:
        try:
            positions = [int(tok) for tok in raw.split(",")]
        except ValueError as e:
            raise ValueError(f"extras {raw!r} is not a comma-separated position list") from e
        if extra := cube.recognize_cube(n, positions):
            s = cube.superpose_preserving(s, extra.to_sequence())
        else:
            raise ValueError(f"extras {raw!r} is not a cube of period {1 << n}")
    return s.to_bitstring(), {"lc": seqcore.lc(s), "stable_through": cube.k_min(s) - 1}


def cmd_sweep(
    n: int,
    k_max: int | None,
    out_dir: str,
    workers: int,
    force: bool,
    config: config_dict.ConfigDict,
) -> tuple[dict, int]:
    if n > config.sweep_max_n and not force:
        raise ValueError(f"n={n} exceeds sweep_max_n={config.sweep_max_n}; pass --force to override")
    if k_max is None:
        k_max = (1 << n) - 1
    sweeper = Sweeper(n, k_max, workers=workers, chunk_size=config.sweep_chunk_size)
    rows = sweeper.run()
    sweeper.save(rows, out_dir)
    summary = sweeper.summary(rows)
    return summary, 0 if summary["all_match"] else 1


def cmd_pary(sub: str, p: int, n: int, args: list[str], a: int = 1, k: int = 0, b: int = 1, m: int = 0) -> dict:
    if not pary.is_prime(p):
        raise ValueError(f"p={p} is not prime")
    if sub == "lemma43":
        lc, one_error = pary.lemma43_lc(p, n, a, k, b, m)
        return {"lc": lc, "one_error_lc": one_error}
    seqs = [pary.PrimePeriodicSequence.parse(p, n, utils.read_input(raw)) for raw in args]
    if sub == "lc" and len(seqs) == 1:
        return {"lc": pary.lc_p(seqs[0])}
    if sub == "full" and len(seqs) == 1:
        return {"full": pary.has_full_complexity_p(seqs[0])}
    if sub == "sum" and len(seqs) == 2:
        total = pary.sum_p(*seqs)
        return {
            "lc1": pary.lc_p(seqs[0]),
            "lc2": pary.lc_p(seqs[1]),
            "lc_sum": pary.lc_p(total),
            "sum": total.to_text(),
        }
    raise ValueError(f"usage: pary lc|full <seq> | pary sum <seq> <seq> | pary lemma43 (got {sub!r}, {len(args)} inputs)")


def cmd_analyze(text: str, fmt: str = "auto", k_max: int | None = None, decompose: bool = False) -> dict:
    s, detected = parse_sequence(text, fmt)
    if k_max is None:
        k_max = s.weight
    return report.analyze(s, detected, k_max, with_decomposition=decompose).to_json()


def _require(value, name: str):
    if value is None:
        raise ValueError(f"--{name} is required")
    return value


def entrypoint(command: str, args: list[str], config: config_dict.ConfigDict) -> int:
    """Run one command and print its result; returns the exit code."""

    def one_input() -> str:
        if len(args) != 1:
            raise ValueError(f"{command} takes exactly one sequence, got {len(args)}")
        return args[0]

    if command == "lc":
        result = cmd_lc(one_input(), FLAGS.format)
    elif command == "klc":
        result = cmd_klc(one_input(), FLAGS.k, FLAGS.format, FLAGS.witness, config.enumeration_budget)
    elif command == "celcs":
        result = cmd_celcs(one_input(), FLAGS.format)
    elif command == "decompose":
        result = cmd_decompose(one_input(), FLAGS.format, config.decompose_search_budget)
    elif command == "analyze":
        result = cmd_analyze(one_input(), FLAGS.format, FLAGS.k_max, FLAGS.decompose)
    elif command == "construct":
        bitstring, result = cmd_construct(_require(FLAGS.n, "n"), FLAGS.k, FLAGS.anchor, FLAGS.extras)
        print(bitstring)
    elif command == "sweep":
        workers = utils.resolve_workers(FLAGS.workers or config.workers, config.workers_env)
        out_dir = FLAGS.out or config.out_dir
        result, code = cmd_sweep(_require(FLAGS.n, "n"), FLAGS.k_max, out_dir, workers, FLAGS.force, config)
        print(utils.dumps(result))
        return code
    elif command == "pary":
        if not args:
            raise ValueError("pary needs a subcommand: lc, full, sum or lemma43")
        try:
            result = cmd_pary(
                args[0], _require(FLAGS.p, "p"), _require(FLAGS.n, "n"), args[1:], FLAGS.a, FLAGS.offset, FLAGS.b, FLAGS.m
            )
        except pary.VerificationError as e:
            logging.error(f"lemma43 verification failed: {e}")
            return 1
    else:
        raise ValueError(f"unknown command {command!r}; expected one of {', '.join(COMMANDS)}")

    print(utils.dumps(result))
    return 0


def main(argv):
    if len(argv) < 2:
        raise app.UsageError(f"expected a command: {', '.join(COMMANDS)}", exitcode=2)

    config = FLAGS.config
    logging.debug(f"Using config: {config.to_dict()}")
    try:
        return entrypoint(argv[1], list(argv[2:]), config)
    except ValueError as e:
        raise app.UsageError(str(e), exitcode=2) from e


def run():
    app.run(main)


if __name__ == "__main__":
    run()
