"""On-disk cache of plethysm decompositions.

One text file per (lam, mu[, height bound]):

    plethysm-cache v1
    [4,2] [3,1]
    [6,6,6,6]<TAB>1
    ...

An optional third token ``h<=G`` on the second line marks a height-restricted
result.  Writes go through a temporary file and an atomic rename, so
concurrent writers never expose a half-written entry.
"""

from __future__ import annotations

import hashlib
import os
import tempfile
from pathlib import Path

from .partitions import Partition, parse_partition

HEADER = "plethysm-cache v1"
FORMAT_VERSION = 1
CACHE_ENV = "SIEGEL_POSITIVITY_CACHE"


def default_cache_dir() -> Path | None:
    root = os.environ.get(CACHE_ENV)
    return Path(root) if root else None


def _key_line(lam: Partition, mu: Partition, max_height: int | None) -> str:
    line = f"{lam} {mu}"
    if max_height is not None:
        line += f" h<={max_height}"
    return line


def serialize(lam, mu, max_height, constituents) -> str:
    lines = [HEADER, _key_line(lam, mu, max_height)]
    lines += [f"{eta}\t{m}" for eta, m in sorted(constituents)]
    return "\n".join(lines) + "\n"


def deserialize(text: str) -> tuple[str, list[tuple[Partition, int]]]:
    lines = text.split("\n")
    if not lines or lines[0] != HEADER:
        raise ValueError("not a plethysm cache file")
    if lines[-1] == "":
        lines.pop()
    key = lines[1]
    constituents = []
    for line in lines[2:]:
        eta, m = line.split("\t")
        constituents.append((parse_partition(eta), int(m)))
    return key, constituents


class PlethysmCache:
    def __init__(self, root):
        self.root = Path(root)

    def path_for(self, lam: Partition, mu: Partition, max_height: int | None) -> Path:
        key = _key_line(Partition(lam), Partition(mu), max_height)
        digest = hashlib.sha256(key.encode()).hexdigest()[:16]
        stem = key.replace(" ", "_").replace("[", "").replace("]", "").replace(",", "-").replace("<=", "le")
        return self.root / f"{stem}.{digest}.txt"

    def get(self, lam, mu, max_height=None) -> list[tuple[Partition, int]] | None:
        path = self.path_for(lam, mu, max_height)
        try:
            text = path.read_text(encoding="utf-8")
        except FileNotFoundError:
            return None
        key, constituents = deserialize(text)
        if key != _key_line(Partition(lam), Partition(mu), max_height):
            return None
        return constituents

    def put(self, lam, mu, max_height, constituents) -> Path:
        self.root.mkdir(parents=True, exist_ok=True)
        path = self.path_for(lam, mu, max_height)
        fd, tmp = tempfile.mkstemp(dir=self.root, prefix=".tmp-", suffix=".txt")
        try:
            with os.fdopen(fd, "w", encoding="utf-8", newline="\n") as fh:
                fh.write(serialize(Partition(lam), Partition(mu), max_height, constituents))
            os.replace(tmp, path)
        except BaseException:
            if os.path.exists(tmp):
                os.unlink(tmp)
            raise
        return path
