"""Exhaustive enumeration of finite protomodular frames.

Theta tables are filled cell by cell with a surjectivity prune (every
theta_b must hit every element, or no alpha can satisfy the reconstruction
law).  Alpha tables are then read off the theta_b preimages rather than
enumerated freely, and the constants are fixed by the diagonal.

Work is split over prefixes of the theta table.  Results are merged and
sorted canonically, so output never depends on the number of workers.
"""
from __future__ import annotations

import logging
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import product
from typing import Iterable, Iterator, Mapping

from .errors import SearchBoundsError
from .model import ProtomodularFrame
from .protomod import PROPERTIES, PROPERTY_CHECKS

log = logging.getLogger(__name__)

# largest carrier size enumerated by default, per n
DEFAULT_BOUNDS: dict[int, int] = {1: 3, 2: 2}

CENSUS_PROPERTIES = tuple(p for p in PROPERTIES if p != "protomodular")

FrameKey = tuple  # (theta, alpha tables, constants) as nested int tuples


@dataclass(frozen=True)
class SearchSpec:
    n: int
    k: int
    required: frozenset[str] = frozenset()
    forbidden: frozenset[str] = frozenset()
    limit: int | None = None
    bounds: Mapping[int, int] = field(default_factory=lambda: dict(DEFAULT_BOUNDS), compare=False)

    def __post_init__(self):
        if self.n < 1 or self.k < 1:
            raise ValueError("n and k must be positive")
        object.__setattr__(self, "required", frozenset(self.required))
        object.__setattr__(self, "forbidden", frozenset(self.forbidden))
        bad = sorted((self.required | self.forbidden) - set(PROPERTIES))
        if bad:
            raise ValueError(f"unknown properties: {', '.join(bad)}")
        if self.limit is not None and self.limit < 0:
            raise ValueError("limit must be non-negative")

    def check_bounds(self):
        top = self.bounds.get(self.n, 1)
        if self.k > top:
            raise SearchBoundsError(
                f"n={self.n}, size={self.k} exceeds the configured bound (size <= {top})"
            )


def _theta_tables(n: int, k: int, prefix: tuple[int, ...]) -> Iterator[tuple[int, ...]]:
    cells = k ** (n + 1)
    per_column = k**n
    counts = [[0] * k for _ in range(k)]  # counts[b][v]
    filled = [0] * k  # cells filled per column
    table = [0] * cells

    def place(idx, v):
        b = idx % k
        table[idx] = v
        counts[b][v] += 1
        filled[b] += 1

    def unplace(idx, v):
        b = idx % k
        counts[b][v] -= 1
        filled[b] -= 1

    def feasible(b):
        missing = sum(1 for c in counts[b] if c == 0)
        return missing <= per_column - filled[b]

    for idx, v in enumerate(prefix):
        place(idx, v)
    if not all(feasible(b) for b in range(k)):
        return

    def extend(idx):
        if idx == cells:
            yield tuple(table)
            return
        b = idx % k
        for v in range(k):
            place(idx, v)
            if feasible(b):
                yield from extend(idx + 1)
            unplace(idx, v)

    yield from extend(len(prefix))


def _frames_for_theta(n: int, k: int, theta: tuple[int, ...]) -> Iterator[FrameKey]:
    tuples = list(product(range(k), repeat=n))
    rows = [theta[r * k : (r + 1) * k] for r in range(len(tuples))]
    identity = tuple(range(k))
    preimage = {(a, b): [] for a in range(k) for b in range(k)}
    for r, t in enumerate(tuples):
        for b in range(k):
            preimage[(rows[r][b], b)].append(t)
    off_diag = [(a, b) for a in range(k) for b in range(k) if a != b]
    for r, es in enumerate(tuples):
        if rows[r] != identity:
            continue
        for choice in product(*(preimage[cell] for cell in off_diag)):
            picked = dict(zip(off_diag, choice))
            alphas = tuple(
                tuple(es[i] if a == b else picked[(a, b)][i] for a in range(k) for b in range(k))
                for i in range(n)
            )
            yield theta, alphas, es


def _to_frame(n: int, k: int, key: FrameKey) -> ProtomodularFrame:
    theta, alphas, es = key
    return ProtomodularFrame.from_tables(k, n, theta, alphas, es)


def _profile(frame: ProtomodularFrame, props: Iterable[str]) -> frozenset[str]:
    return frozenset(p for p in props if PROPERTY_CHECKS[p](frame).holds)


def _matches(frame, required, forbidden) -> bool:
    if any(not PROPERTY_CHECKS[p](frame).holds for p in sorted(required)):
        return False
    return not any(PROPERTY_CHECKS[p](frame).holds for p in sorted(forbidden))


def _partition_frames(args) -> list[FrameKey]:
    n, k, prefix, required, forbidden = args
    out = []
    for theta in _theta_tables(n, k, prefix):
        for key in _frames_for_theta(n, k, theta):
            if _matches(_to_frame(n, k, key), required, forbidden):
                out.append(key)
    return out


def _partition_census(args) -> Counter:
    n, k, prefix, required, forbidden, props = args
    counts: Counter = Counter()
    for theta in _theta_tables(n, k, prefix):
        for key in _frames_for_theta(n, k, theta):
            frame = _to_frame(n, k, key)
            if _matches(frame, required, forbidden):
                counts[tuple(sorted(_profile(frame, props), key=props.index))] += 1
    return counts


def _prefixes(n: int, k: int, workers: int) -> list[tuple[int, ...]]:
    cells = k ** (n + 1)
    depth = 0
    while depth < cells and k**depth < 4 * max(workers, 1):
        depth += 1
    return list(product(range(k), repeat=depth))


def _run(func, tasks: list, workers: int) -> list:
    if workers <= 1:
        return [func(t) for t in tasks]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(func, tasks))


def enumerate_frames(spec: SearchSpec, workers: int = 1) -> Iterator[ProtomodularFrame]:
    spec.check_bounds()
    tasks = [
        (spec.n, spec.k, prefix, spec.required, spec.forbidden)
        for prefix in _prefixes(spec.n, spec.k, workers)
    ]
    keys = [key for part in _run(_partition_frames, tasks, workers) for key in part]
    keys.sort()
    log.debug("enumerated %d frames for n=%d k=%d", len(keys), spec.n, spec.k)
    if spec.limit is not None:
        keys = keys[: spec.limit]
    for key in keys:
        yield _to_frame(spec.n, spec.k, key)


def census(
    spec: SearchSpec, workers: int = 1, props: tuple[str, ...] = CENSUS_PROPERTIES
) -> dict[tuple[str, ...], int]:
    """Number of matching frames for each combination of holding properties."""
    spec.check_bounds()
    tasks = [
        (spec.n, spec.k, prefix, spec.required, spec.forbidden, props)
        for prefix in _prefixes(spec.n, spec.k, workers)
    ]
    total: Counter = Counter()
    for part in _run(_partition_census, tasks, workers):
        total.update(part)
    return dict(sorted(total.items(), key=lambda kv: (-len(kv[0]), kv[0])))


def render_census(spec: SearchSpec, counts: Mapping[tuple[str, ...], int]) -> str:
    lines = [f"census n={spec.n} size={spec.k}"]
    if spec.required:
        lines.append("require " + ",".join(sorted(spec.required)))
    if spec.forbidden:
        lines.append("forbid " + ",".join(sorted(spec.forbidden)))
    lines.append(f"total {sum(counts.values())}")
    for combo, count in counts.items():
        lines.append(f"{count:>8}  {','.join(combo) if combo else '-'}")
    return "\n".join(lines) + "\n"
