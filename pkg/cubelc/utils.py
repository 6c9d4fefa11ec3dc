import json
import os
import pathlib

import psutil
from absl import logging


def resolve_workers(requested: int | None, env_var: str = "CUBELC_WORKERS") -> int:
    """Determine how many worker processes a sweep uses.

    Args:
        requested (int | None): explicit --workers value; None or 0 defers to the environment.
        env_var (str, optional): variable consulted next. Defaults to "CUBELC_WORKERS".

    Returns:
        int: number of workers, at least 1.
    """
    if requested:
        if requested < 0:
            raise ValueError(f"workers must be positive, got {requested}")
        return requested

    raw = os.environ.get(env_var)
    if raw:
        try:
            workers = int(raw)
        except ValueError as e:
            raise ValueError(f"{env_var}={raw!r} is not an integer") from e
        if workers < 1:
            raise ValueError(f"{env_var} must be positive, got {workers}")
        logging.info(f"Using {workers} workers from {env_var}")
        return workers

    workers = psutil.cpu_count(logical=True) or 1
    stats = psutil.virtual_memory()
    logging.info(f"Using {workers} workers (available memory: {stats.available >> 20} mb)")
    return workers


def read_input(text: str) -> str:
    """Return text, or the contents of the file it names when it starts with '@'."""
    if text.startswith("@"):
        path = pathlib.Path(text[1:])
        try:
            return path.read_text().strip()
        except OSError as e:
            raise ValueError(f"cannot read input file {path}: {e.strerror or e}") from e
    return text


def dumps(obj) -> str:
    # sorted keys and no whitespace keep outputs byte-stable
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))
