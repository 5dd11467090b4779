"""JSON Lines serialization for enumeration records, plus the on-disk cache.

Record bytes are part of the tool contract: one compact JSON object per
line, fixed key order, UTF-8.  Cache entries store the exact bytes of a
completed stream, so a cache hit is byte-identical to recomputation.
"""

from __future__ import annotations

import json
import os
from pathlib import Path

from zseq._version import __version__
from zseq.cyclic import SequenceClass
from zseq.norms import index_with_generator

RECORD_SCHEMA = 1

CACHE_ENV = "ZS_CACHE_DIR"
RESULTS_ENV = "ZS_RESULTS_DIR"
DEFAULT_RESULTS_DIR = "zs-results"


def dump_json_line(obj: dict) -> str:
    return json.dumps(obj, separators=(",", ":"))


def class_record(cls: SequenceClass, unsplittable: bool) -> dict:
    """Enumeration output record; key order is part of the format."""
    seq = cls.canonical
    norm, _ = index_with_generator(seq)
    return {
        "n": seq.group.order,
        "seq": seq.format(),
        "len": seq.length,
        "index": str(norm),
        "unsplittable": unsplittable,
        "orbit": cls.orbit_size,
    }


def class_summary(cls: SequenceClass) -> dict:
    seq = cls.canonical
    return {
        "n": seq.group.order,
        "seq": seq.format(),
        "len": seq.length,
        "orbit": cls.orbit_size,
    }


# -- enumeration cache ------------------------------------------------------


def cache_dir() -> Path | None:
    path = os.environ.get(CACHE_ENV)
    return Path(path) if path else None


def cache_path(base: Path, n: int, lmin: int, lmax: int, flt: str, include_zero: bool) -> Path:
    name = (
        f"enum-v{__version__}-s{RECORD_SCHEMA}-n{n}-L{lmin}-{lmax}-{flt}"
        f"{'-z' if include_zero else ''}.jsonl"
    )
    return base / name


def cache_load(path: Path) -> str | None:
    try:
        return path.read_text(encoding="utf-8")
    except FileNotFoundError:
        return None


def cache_store(path: Path, payload: str) -> None:
    """Atomic write; only complete streams may be stored."""
    path.parent.mkdir(parents=True, exist_ok=True)
    tmp = path.with_suffix(".tmp")
    tmp.write_text(payload, encoding="utf-8")
    os.replace(tmp, path)


def results_dir(override: str | None = None) -> Path:
    if override:
        return Path(override)
    return Path(os.environ.get(RESULTS_ENV, DEFAULT_RESULTS_DIR))


def append_report(directory: Path, target: str, line: str) -> Path:
    """Append one report line to the target's JSONL audit file."""
    directory.mkdir(parents=True, exist_ok=True)
    path = directory / f"{target}.jsonl"
    with path.open("a", encoding="utf-8") as fh:
        fh.write(line + "\n")
    return path
