"""On-disk cache of homology characters keyed by (N, d, k, code version)."""

from __future__ import annotations

import hashlib
import json
import os
import tempfile
from fractions import Fraction
from pathlib import Path
from typing import Optional

from .characters import ClassFunction
from .partitions import NPartition, Partition

# bump when anything that changes computed characters is edited
CODE_VERSION = "packsyz-homology-1"


def cache_key(N, d, k) -> str:
    payload = json.dumps({"N": list(N), "d": list(d), "k": k, "v": CODE_VERSION}, sort_keys=True)
    return hashlib.sha256(payload.encode()).hexdigest()


def load_character(cache_dir: Path, N, d, k) -> Optional[ClassFunction]:
    path = Path(cache_dir) / f"{cache_key(N, d, k)}.json"
    if not path.exists():
        return None
    try:
        with open(path) as fh:
            data = json.load(fh)
        if not isinstance(data, dict) or data.get("version") != CODE_VERSION:
            return None
        values = {
            NPartition(Partition(c) for c in item["rho"]): Fraction(item["value"]) for item in data["values"]
        }
        return ClassFunction(data["N"], values)
    except (OSError, ValueError, KeyError, TypeError):
        # unreadable or torn entry: treat as a miss and let the caller overwrite it
        return None


def store_character(cache_dir: Path, N, d, k, chi: ClassFunction) -> None:
    cache_dir = Path(cache_dir)
    cache_dir.mkdir(parents=True, exist_ok=True)
    data = {
        "version": CODE_VERSION,
        "N": list(N),
        "d": list(d),
        "k": k,
        "values": [{"rho": [list(c) for c in rho], "value": str(v)} for rho, v in chi.values.items()],
    }
    # atomic replace so concurrent writers never leave a torn file
    fd, tmp = tempfile.mkstemp(dir=cache_dir, suffix=".tmp")
    with os.fdopen(fd, "w") as fh:
        json.dump(data, fh, sort_keys=True)
    os.replace(tmp, cache_dir / f"{cache_key(N, d, k)}.json")
