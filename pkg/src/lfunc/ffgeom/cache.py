"""Line-oriented point-count cache: one ``<variety hash> <d> <N_d>`` per line."""

import os

from ..errors import CacheCorruptionError


class PointCountCache:
    def __init__(self, path):
        self.path = path
        self.entries = {}
        if os.path.exists(path):
            with open(path) as fh:
                for lineno, line in enumerate(fh, 1):
                    line = line.strip()
                    if not line or line.startswith("#"):
                        continue
                    parts = line.split()
                    if len(parts) != 3:
                        raise CacheCorruptionError(f"{path}:{lineno}: expected 3 fields, got {len(parts)}")
                    h, d, n = parts
                    try:
                        key, val = (h, int(d)), int(n)
                    except ValueError:
                        raise CacheCorruptionError(f"{path}:{lineno}: non-integer field") from None
                    if key in self.entries and self.entries[key] != val:
                        raise CacheCorruptionError(f"{path}:{lineno}: conflicting entries for {key}")
                    self.entries[key] = val

    def get(self, h, d):
        return self.entries.get((h, d))

    def put(self, h, d, n):
        key = (h, d)
        old = self.entries.get(key)
        if old is not None:
            if old != n:
                raise CacheCorruptionError(f"cached N_{d} = {old} for {h} but recomputed {n}")
            return
        self.entries[key] = n
        with open(self.path, "a") as fh:
            fh.write(f"{h} {d} {n}\n")
