"""Named example frames.

Each builder constructs its tables from the defining rule rather than a
hand-typed grid, except where the source is itself a grid (E32, E34 alphas).
"""
from __future__ import annotations

from importlib import resources
from itertools import product

from .model import ProtomodularFrame, parse_algebra


def e32() -> ProtomodularFrame:
    """Three-element right-cancellable left semi-loop with theta == alpha."""
    grid = [
        0, 1, 2,
        2, 0, 1,
        1, 2, 0,
    ]
    return ProtomodularFrame.from_tables(3, 1, grid, [grid], [0])


def e33() -> ProtomodularFrame:
    """Two-element V2-algebra: theta(i,j,k) = k if i != j else 1-k."""
    theta = [k if i != j else 1 - k for i, j, k in product(range(2), repeat=3)]
    alpha1 = [0] * 4
    alpha2 = [0 if i != j else 1 for i, j in product(range(2), repeat=2)]
    return ProtomodularFrame.from_tables(2, 2, theta, [alpha1, alpha2], [0, 1])


def e34_class(a1: int, a2: int, a3: int) -> int:
    """Row class t0..t3 of a triple.

    The t2 clause is read as ``a1 > 1 and not (a2 > 1 and a3 > 1)`` so the
    four classes partition A^3.
    """
    if a1 <= 1:
        return 0 if a2 <= 1 and a3 <= 1 else 1
    return 3 if a2 > 1 and a3 > 1 else 2


def e34() -> ProtomodularFrame:
    rows = {0: [0, 1, 2, 3], 1: [1, 0, 3, 2], 2: [2, 3, 0, 1], 3: [3, 2, 1, 0]}
    theta = []
    for a in product(range(4), repeat=3):
        theta.extend(rows[e34_class(*a)])
    alpha1 = [
        0, 1, 3, 2,
        1, 0, 2, 3,
        3, 2, 0, 1,
        2, 3, 1, 0,
    ]
    alpha2 = [
        0, 2, 0, 3,
        2, 0, 3, 0,
        0, 3, 0, 2,
        3, 0, 2, 0,
    ]
    alpha3 = [
        1, 1, 2, 2,
        1, 1, 2, 2,
        2, 2, 1, 1,
        2, 2, 1, 1,
    ]
    return ProtomodularFrame.from_tables(4, 3, theta, [alpha1, alpha2, alpha3], [0, 0, 1])


def bool2() -> ProtomodularFrame:
    """Two-element Boolean algebra with theta=(a or c) and b, alpha1=a and not b, alpha2=a or not b."""
    theta = [(a | c) & b for a, b, c in product(range(2), repeat=3)]
    alpha1 = [a & (1 - b) for a, b in product(range(2), repeat=2)]
    alpha2 = [a | (1 - b) for a, b in product(range(2), repeat=2)]
    return ProtomodularFrame.from_tables(2, 2, theta, [alpha1, alpha2], [0, 1])


def cyclic_frame(k: int) -> ProtomodularFrame:
    """Z_k as a V1-frame: theta = addition, alpha = subtraction, e = 0."""
    theta = [(a + b) % k for a, b in product(range(k), repeat=2)]
    alpha = [(a - b) % k for a, b in product(range(k), repeat=2)]
    return ProtomodularFrame.from_tables(k, 1, theta, [alpha], [0])


def gz3() -> ProtomodularFrame:
    return cyclic_frame(3)


def triv(n: int = 1) -> ProtomodularFrame:
    return ProtomodularFrame.from_tables(1, n, [0], [[0]] * n, [0] * n)


def triv1() -> ProtomodularFrame:
    return triv(1)


def loop6() -> ProtomodularFrame:
    """Order-6 loop whose left translations are closed under inverses but not composition.

    Strict, all translations are bijections with translation inverses, yet
    not right-cancellable.  No frame with this profile exists for n=1 below
    order 6 (the row permutations would form a sharply transitive,
    inverse-closed set that is not a group).
    """
    rows = [
        [0, 1, 2, 3, 4, 5],
        [1, 0, 3, 2, 5, 4],
        [2, 3, 4, 5, 0, 1],
        [3, 4, 5, 0, 1, 2],
        [4, 5, 0, 1, 2, 3],
        [5, 2, 1, 4, 3, 0],
    ]
    k = 6
    theta = [rows[a][b] for a, b in product(range(k), repeat=2)]
    alpha = [0] * (k * k)
    for x, b in product(range(k), repeat=2):
        alpha[rows[x][b] * k + b] = x
    return ProtomodularFrame.from_tables(k, 1, theta, [alpha], [0])


BUILDERS = {
    "e32": e32,
    "e33": e33,
    "e34": e34,
    "bool2": bool2,
    "gz3": gz3,
    "triv1": triv1,
    "loop6": loop6,
}


def load(name: str) -> ProtomodularFrame:
    """Load a bundled fixture file by name (e.g. ``"e34"``)."""
    text = resources.files("protoalg").joinpath("data", f"{name}.pmalg").read_text()
    return parse_algebra(text)


def all_fixtures() -> dict[str, ProtomodularFrame]:
    return {name: build() for name, build in BUILDERS.items()}
