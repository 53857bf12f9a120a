"""Translations b -> theta(a_1,..,a_n,b) and the group they form."""
from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Sequence

from .errors import InvariantViolation, ModelError, NotRightCancellable
from .groups import GroupTable, identify_small_group  # noqa: F401  (re-export)
from .model import ProtomodularFrame
from .protomod import check_right_cancellable


@dataclass(frozen=True)
class Translation:
    rep: tuple[int, ...]
    map: tuple[int, ...]

    def __call__(self, b: int) -> int:
        return self.map[b]


@dataclass(frozen=True)
class TranslationGroup:
    elements: tuple[Translation, ...]
    cayley: tuple[int, ...]  # cayley[g * m + h] = index of g after h, i.e. g(h(x))
    unit_index: int
    inverse: tuple[int, ...]

    @property
    def order(self) -> int:
        return len(self.elements)

    def as_group_table(self) -> GroupTable:
        return GroupTable(self.order, self.cayley, self.unit_index, self.inverse)


def _check_tuple(frame: ProtomodularFrame, tup: Sequence[int]) -> tuple[int, ...]:
    tup = tuple(tup)
    if len(tup) != frame.n or any(not 0 <= a < frame.k for a in tup):
        raise ModelError(f"{tup} is not an element of A^{frame.n}")
    return tup


def translation_of(frame: ProtomodularFrame, tup: Sequence[int]) -> Translation:
    tup = _check_tuple(frame, tup)
    return Translation(tup, tuple(frame.th(tup, b) for b in range(frame.k)))


def distinct_translations(frame: ProtomodularFrame) -> list[Translation]:
    seen: dict[tuple[int, ...], Translation] = {}
    for tup in product(range(frame.k), repeat=frame.n):
        t = translation_of(frame, tup)
        seen.setdefault(t.map, t)
    return list(seen.values())


def kernel_partition(frame: ProtomodularFrame, b: int) -> list[list[tuple[int, ...]]]:
    """Preimage classes of theta_b on A^n, blocks ordered by first member."""
    if not 0 <= b < frame.k:
        raise ModelError(f"element {b} out of range")
    blocks: dict[int, list[tuple[int, ...]]] = {}
    for tup in product(range(frame.k), repeat=frame.n):
        blocks.setdefault(frame.th(tup, b), []).append(tup)
    return list(blocks.values())


def partition_key(blocks) -> frozenset:
    return frozenset(frozenset(block) for block in blocks)


def require_right_cancellable(frame: ProtomodularFrame):
    # frames are immutable, so the verdict is cached on the instance
    report = frame._cache.get("rc")
    if report is None:
        report = frame._cache["rc"] = check_right_cancellable(frame)
    if not report:
        raise NotRightCancellable(f"frame is not right-cancellable ({report.describe_witness()})")


def is_principal(maps: Sequence[Sequence[int]], k: int) -> bool:
    return all(sum(1 for m in maps if m[x] == y) == 1 for x, y in product(range(k), repeat=2))


def translation_group(frame: ProtomodularFrame) -> TranslationGroup:
    require_right_cancellable(frame)
    k = frame.k
    elements = distinct_translations(frame)
    index = {t.map: i for i, t in enumerate(elements)}
    cayley = []
    for g, h in product(elements, repeat=2):
        composite = tuple(g.map[h.map[x]] for x in range(k))
        if composite not in index:
            raise InvariantViolation("translations not closed under composition")
        cayley.append(index[composite])
    identity = tuple(range(k))
    if identity not in index:
        raise InvariantViolation("identity map is not a translation")
    unit = index[identity]
    inverse = []
    for g in elements:
        inv = [0] * k
        for x, y in enumerate(g.map):
            inv[y] = x
        inv = tuple(inv)
        if inv not in index:
            raise InvariantViolation("translation inverse is not a translation")
        inverse.append(index[inv])
    group = TranslationGroup(tuple(elements), tuple(cayley), unit, tuple(inverse))
    group.as_group_table().validate()
    if not is_principal([t.map for t in elements], k):
        raise InvariantViolation("translation group does not act principally")
    return group


def compose_tuple_formula(
    frame: ProtomodularFrame, a: Sequence[int], b: Sequence[int], u: int
) -> tuple[int, ...]:
    """A tuple c whose translation is theta^a composed after theta^b, computed at point u."""
    require_right_cancellable(frame)
    a, b = _check_tuple(frame, a), _check_tuple(frame, b)
    n = frame.n
    tb_u = frame.th(b, u)
    inner = frame.th(tuple(frame.al(j, u, tb_u) for j in range(n)), u)
    ta_u = frame.th(a, u)
    return tuple(frame.al(i, ta_u, inner) for i in range(n))


def inverse_tuple_formula(frame: ProtomodularFrame, a: Sequence[int], u: int) -> tuple[int, ...]:
    require_right_cancellable(frame)
    a = _check_tuple(frame, a)
    ta_u = frame.th(a, u)
    return tuple(frame.al(i, u, ta_u) for i in range(frame.n))
