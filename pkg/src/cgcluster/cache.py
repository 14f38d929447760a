"""Content-addressed on-disk cache of seeds reached by mutation sequences."""
from __future__ import annotations

import hashlib
import json
import logging
import os
import random
import tempfile
from pathlib import Path
from typing import Callable, Sequence

from .cluster import Seed

log = logging.getLogger(__name__)

ENV_VAR = "CGCLUSTER_CACHE"


def default_cache_dir() -> Path:
    env = os.environ.get(ENV_VAR)
    if env:
        return Path(env)
    return Path(os.environ.get("XDG_CACHE_HOME", Path.home() / ".cache")) / "cgcluster"


def canonical_sequence(seq: Sequence) -> tuple:
    """Cancel adjacent repeated mutations (mutation is an involution)."""
    out: list = []
    for v in seq:
        v = tuple(v) if isinstance(v, list) else v
        if out and out[-1] == v:
            out.pop()
        else:
            out.append(v)
    return tuple(out)


def seed_digest(s: Seed) -> str:
    return hashlib.sha256(json.dumps(s.to_json(), sort_keys=True).encode()).hexdigest()


def cache_key(n: int, variant: str, seq: Sequence, base: str = "initial") -> str:
    """``base`` identifies the starting seed (``'initial'`` or a :func:`seed_digest`)."""
    payload = json.dumps({"n": n, "variant": variant, "base": base,
                          "seq": [list(v) if isinstance(v, tuple) else v for v in canonical_sequence(seq)]},
                         sort_keys=True)
    return hashlib.sha256(payload.encode()).hexdigest()


class SeedCache:
    """One JSON file per entry under ``root/<2 hex>/<sha256>.json``; writes are atomic."""

    def __init__(self, root: Path | str | None = None, *, audit_rate: float = 0.05, rng: random.Random | None = None):
        self.root = Path(root) if root is not None else default_cache_dir()
        self.audit_rate = audit_rate
        self.rng = rng or random.Random(0)
        self.hits = 0
        self.misses = 0
        self.audits = 0

    def path(self, key: str) -> Path:
        return self.root / key[:2] / f"{key}.json"

    def get(self, key: str) -> dict | None:
        p = self.path(key)
        try:
            return json.loads(p.read_text())
        except FileNotFoundError:
            return None
        except json.JSONDecodeError:
            log.warning("discarding corrupt cache entry %s", p)
            return None

    def put(self, key: str, data: dict) -> Path:
        p = self.path(key)
        p.parent.mkdir(parents=True, exist_ok=True)
        fd, tmp = tempfile.mkstemp(dir=p.parent, prefix=".tmp-", suffix=".json")
        try:
            with os.fdopen(fd, "w") as fh:
                json.dump(data, fh, sort_keys=True)
            os.replace(tmp, p)
        except BaseException:
            try:
                os.unlink(tmp)
            except FileNotFoundError:
                pass
            raise
        return p

    def seed(self, n: int, variant: str, seq: Sequence, compute: Callable[[], Seed], base: str = "initial") -> Seed:
        """Cached seed for ``seq``; a random fraction of hits is recomputed and compared."""
        key = cache_key(n, variant, seq, base)
        data = self.get(key)
        if data is None:
            self.misses += 1
            s = compute()
            self.put(key, s.to_json())
            return s
        self.hits += 1
        cached = Seed.from_json(data)
        if self.rng.random() < self.audit_rate:
            self.audits += 1
            fresh = compute()
            if not fresh.same_as(cached):
                raise RuntimeError(f"cache entry {key} disagrees with a fresh computation")
        return cached

    def stats(self) -> dict:
        return {"root": str(self.root), "hits": self.hits, "misses": self.misses, "audits": self.audits}
