"""Finite groups as Cayley tables, and identification of groups of order at most 8."""
from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Sequence

from .errors import InvariantViolation, ModelError


@dataclass(frozen=True)
class GroupTable:
    size: int
    op: tuple[int, ...]  # op[a * size + b] = a b
    unit: int
    inverse: tuple[int, ...]

    def mul(self, a: int, b: int) -> int:
        return self.op[a * self.size + b]

    def law_failure(self) -> str | None:
        """Description of the first violated group law, or None."""
        k, m = self.size, self.mul
        if len(self.op) != k * k or len(self.inverse) != k:
            return "table shape"
        if any(not 0 <= v < k for v in self.op + self.inverse) or not 0 <= self.unit < k:
            return "entry out of range"
        for a in range(k):
            if m(self.unit, a) != a or m(a, self.unit) != a:
                return f"unit law at {a}"
            if m(a, self.inverse[a]) != self.unit or m(self.inverse[a], a) != self.unit:
                return f"inverse law at {a}"
        for a, b, c in product(range(k), repeat=3):
            if m(m(a, b), c) != m(a, m(b, c)):
                return f"associativity at ({a},{b},{c})"
        return None

    def validate(self) -> GroupTable:
        failure = self.law_failure()
        if failure:
            raise InvariantViolation(f"not a group: {failure}")
        return self

    @classmethod
    def from_op(cls, size: int, op: Sequence[int]) -> GroupTable:
        """Build from a bare table, locating unit and inverses; validates."""
        op = tuple(op)
        if len(op) != size * size:
            raise ModelError("group table must have size**2 entries")
        units = [
            u for u in range(size)
            if all(op[u * size + a] == a == op[a * size + u] for a in range(size))
        ]
        if not units:
            raise InvariantViolation("not a group: no two-sided unit")
        u = units[0]
        inverse = []
        for a in range(size):
            inv = [b for b in range(size) if op[a * size + b] == u]
            if not inv:
                raise InvariantViolation(f"not a group: {a} has no inverse")
            inverse.append(inv[0])
        return cls(size, op, u, tuple(inverse)).validate()

    def element_order(self, a: int) -> int:
        x, order = a, 1
        while x != self.unit:
            x = self.mul(x, a)
            order += 1
        return order

    def element_orders(self) -> list[int]:
        return [self.element_order(a) for a in range(self.size)]

    def relabel(self, perm: Sequence[int]) -> GroupTable:
        """Image under the bijection ``a -> perm[a]``."""
        k = self.size
        inv_perm = [0] * k
        for a, pa in enumerate(perm):
            inv_perm[pa] = a
        op = tuple(perm[self.mul(inv_perm[x], inv_perm[y])] for x, y in product(range(k), repeat=2))
        inverse = tuple(perm[self.inverse[inv_perm[x]]] for x in range(k))
        return GroupTable(k, op, perm[self.unit], inverse)


def cyclic(k: int) -> GroupTable:
    return GroupTable(
        k,
        tuple((a + b) % k for a, b in product(range(k), repeat=2)),
        0,
        tuple((-a) % k for a in range(k)),
    )


def direct_product(g: GroupTable, h: GroupTable) -> GroupTable:
    """Elements (x, y) encoded as x * |h| + y."""
    m = h.size
    k = g.size * m
    op = []
    for a, b in product(range(k), repeat=2):
        op.append(g.mul(a // m, b // m) * m + h.mul(a % m, b % m))
    inverse = tuple(g.inverse[a // m] * m + h.inverse[a % m] for a in range(k))
    return GroupTable(k, tuple(op), g.unit * m + h.unit, inverse)


def _from_permutations(perms: list[tuple[int, ...]]) -> GroupTable:
    index = {p: i for i, p in enumerate(perms)}
    k = len(perms)
    op = tuple(
        index[tuple(p[q[x]] for x in range(len(q)))] for p, q in product(perms, repeat=2)
    )
    return GroupTable.from_op(k, op)


def _closure(generators: list[tuple[int, ...]]) -> list[tuple[int, ...]]:
    identity = tuple(range(len(generators[0])))
    elems = [identity]
    frontier = [identity]
    while frontier:
        nxt = []
        for p in frontier:
            for g in generators:
                q = tuple(g[p[x]] for x in range(len(p)))
                if q not in elems:
                    elems.append(q)
                    nxt.append(q)
        frontier = nxt
    return elems


def dihedral(m: int) -> GroupTable:
    """Symmetries of the m-gon, order 2m."""
    rot = tuple((x + 1) % m for x in range(m))
    ref = tuple((-x) % m for x in range(m))
    return _from_permutations(_closure([rot, ref]))


def quaternion() -> GroupTable:
    # units +-1, +-i, +-j, +-k encoded as sign * basis, basis in {1,i,j,k}
    basis_mul = {
        ("1", "1"): (1, "1"), ("1", "i"): (1, "i"), ("1", "j"): (1, "j"), ("1", "k"): (1, "k"),
        ("i", "1"): (1, "i"), ("i", "i"): (-1, "1"), ("i", "j"): (1, "k"), ("i", "k"): (-1, "j"),
        ("j", "1"): (1, "j"), ("j", "i"): (-1, "k"), ("j", "j"): (-1, "1"), ("j", "k"): (1, "i"),
        ("k", "1"): (1, "k"), ("k", "i"): (1, "j"), ("k", "j"): (-1, "i"), ("k", "k"): (-1, "1"),
    }
    elems = [(s, b) for b in "1ijk" for s in (1, -1)]
    index = {e: i for i, e in enumerate(elems)}
    op = []
    for (s1, b1), (s2, b2) in product(elems, repeat=2):
        s, b = basis_mul[(b1, b2)]
        op.append(index[(s1 * s2 * s, b)])
    return GroupTable.from_op(8, op)


def trivial_group() -> GroupTable:
    return GroupTable(1, (0,), 0, (0,))


def _catalog() -> dict[str, GroupTable]:
    z2 = cyclic(2)
    return {
        "1": trivial_group(),
        "Z2": z2,
        "Z3": cyclic(3),
        "Z4": cyclic(4),
        "V4": direct_product(z2, z2),
        "Z5": cyclic(5),
        "Z6": cyclic(6),
        "S3": dihedral(3),
        "Z7": cyclic(7),
        "Z8": cyclic(8),
        "Z4xZ2": direct_product(cyclic(4), z2),
        "Z2^3": direct_product(direct_product(z2, z2), z2),
        "D4": dihedral(4),
        "Q8": quaternion(),
    }


CATALOG: dict[str, GroupTable] = _catalog()


def order_profile(g: GroupTable) -> tuple[int, ...]:
    return tuple(sorted(g.element_orders()))


def find_isomorphism(g: GroupTable, h: GroupTable) -> tuple[int, ...] | None:
    """A bijection phi with phi(ab) = phi(a)phi(b), found by backtracking."""
    if g.size != h.size or order_profile(g) != order_profile(h):
        return None
    k = g.size
    g_orders, h_orders = g.element_orders(), h.element_orders()
    phi = [-1] * k
    used = [False] * k

    def consistent(a: int) -> bool:
        for b in range(a + 1):
            if phi[b] < 0:
                continue
            for x, y in ((a, b), (b, a)):
                img = phi[g.mul(x, y)]
                if img >= 0 and img != h.mul(phi[x], phi[y]):
                    return False
        return True

    def extend(a: int) -> bool:
        if a == k:
            return all(phi[g.mul(x, y)] == h.mul(phi[x], phi[y]) for x, y in product(range(k), repeat=2))
        for t in range(k):
            if used[t] or h_orders[t] != g_orders[a]:
                continue
            phi[a], used[t] = t, True
            if consistent(a) and extend(a + 1):
                return True
            phi[a], used[t] = -1, False
        return False

    return tuple(phi) if extend(0) else None


def identify_small_group(g: GroupTable) -> str:
    if g.size > 8:
        raise ModelError(f"identification only covers orders up to 8, got {g.size}")
    g.validate()
    profile = order_profile(g)
    candidates = [
        name for name, h in CATALOG.items()
        if h.size == g.size and order_profile(h) == profile
    ]
    for name in candidates:
        if find_isomorphism(g, CATALOG[name]) is not None:
            return name
    raise InvariantViolation("group of order <= 8 missing from catalog")
