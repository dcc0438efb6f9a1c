"""Golden outputs of the command renderers on the two packaged examples.

``python -m shiftlab.golden --write DIR`` regenerates the files; the copies
shipped in ``shiftlab/data/golden`` are what ``shiftlab verify --suite
examples`` compares against.  Rendering always uses the default session
configuration, so the comparison does not depend on command line flags.
"""

from __future__ import annotations

import argparse
import difflib
from pathlib import Path

from . import cli
from .config import DEFAULT_ATTEMPTS, DEFAULT_PRIME, DEFAULT_SEED, config_context
from .formats import example_complex, example_ideal, example_path


def _renderers() -> dict:
    K, I = example_complex(), example_ideal()
    return {
        "ex_shift.txt": lambda: cli.render_shift(K),
        "ex_shift_exterior.txt": lambda: cli.render_shift(K, exterior=True),
        "ex_gin.txt": lambda: cli.render_gin(K)[0],
        "ex_btriangle.txt": lambda: cli.render_btriangle(K),
        "ex_btriangle_exterior.txt": lambda: cli.render_btriangle(K, "exterior"),
        "ex_btriangle_kalai.txt": lambda: cli.render_btriangle(K, "kalai"),
        "ex_stdpairs.txt": lambda: cli.render_stdpairs(K, "gin"),
        "ex_stdpairs_shifted.txt": lambda: cli.render_stdpairs(K, "shifted"),
        "ex_betti.txt": lambda: cli.render_betti(K),
        "ex_extremal.txt": lambda: cli.render_extremal(K),
        "ex_degrees.txt": lambda: cli.render_degrees(K),
        "ex2_gin.txt": lambda: cli.render_gin(I)[0],
        "ex2_btriangle.txt": lambda: cli.render_btriangle(I),
        "ex2_stdpairs.txt": lambda: cli.render_stdpairs(I, "gin"),
        "ex2_degrees.txt": lambda: cli.render_degrees(I),
    }


def render_all() -> dict:
    with config_context(prime=DEFAULT_PRIME, rational=False, base_seed=DEFAULT_SEED,
                        attempts=DEFAULT_ATTEMPTS, degree_bound=None):
        return {name: fn() for name, fn in _renderers().items()}


def golden_dir():
    return example_path("golden")


def compare_goldens(directory=None, diffs: dict | None = None) -> dict:
    """``{file name: rendered output equals the stored file}``.

    A missing file counts as a mismatch.  When ``diffs`` is a dict it receives
    a unified diff for every mismatch.
    """
    base = golden_dir() if directory is None else Path(directory)
    out = {}
    for name, text in render_all().items():
        f = base / name
        stored = f.read_bytes().decode("utf-8") if f.is_file() else None
        out[name] = stored == text
        if diffs is not None and stored != text:
            diffs[name] = "".join(difflib.unified_diff(
                (stored or "").splitlines(True), text.splitlines(True), f"stored/{name}", f"rendered/{name}"))
    return out


def write_goldens(directory) -> list:
    directory = Path(directory)
    directory.mkdir(parents=True, exist_ok=True)
    names = []
    for name, text in render_all().items():
        (directory / name).write_bytes(text.encode("utf-8"))
        names.append(name)
    return names


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description="regenerate or check golden files")
    ap.add_argument("--write", metavar="DIR")
    args = ap.parse_args()
    if args.write:
        for name in write_goldens(args.write):
            print("wrote", name)
    else:
        d = {}
        for name, ok in compare_goldens(diffs=d).items():
            print("PASS" if ok else "FAIL", name)
            if not ok:
                print(d[name])
