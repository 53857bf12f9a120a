"""Exhaustive checkers for the named properties of a protomodular frame.

Every checker walks its argument tuples in lexicographic order and, for a
given tuple, the operation index ``i`` in increasing order; the first
failure found is returned as the witness.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product
from typing import Callable

from .errors import MalcevViolation, ModelError
from .model import ProtomodularFrame


@dataclass(frozen=True)
class CheckReport:
    property: str
    holds: bool
    witness: tuple[int, ...] | None = None
    names: tuple[str, ...] = ()
    index: int | None = None  # 1-based operation index i, when the property has one
    law: str | None = None
    info: dict = field(default_factory=dict, compare=False)

    def __post_init__(self):
        if self.holds != (self.witness is None):
            raise ValueError("witness must be present exactly when the check fails")

    def __bool__(self) -> bool:
        return self.holds

    def describe_witness(self) -> str:
        if self.witness is None:
            return ""
        parts = []
        if self.index is not None:
            parts.append(f"i={self.index}")
        parts += [f"{name}={value}" for name, value in zip(self.names, self.witness)]
        return " ".join(parts)


def _passed(prop: str, **info) -> CheckReport:
    return CheckReport(prop, True, info=info)


def _failed(prop, witness, names, index=None, law=None, **info) -> CheckReport:
    return CheckReport(prop, False, tuple(witness), tuple(names), index, law, info)


def _vec_names(stem: str, n: int) -> list[str]:
    return [f"{stem}{j}" for j in range(1, n + 1)]


def translation_maps(frame: ProtomodularFrame) -> list[tuple[int, ...]]:
    """Row r is the map b -> theta(t_r, b), t_r the r-th n-tuple in lex order."""
    k, th = frame.k, frame.theta
    return [th[r * k : (r + 1) * k] for r in range(k**frame.n)]


def _tuples(frame: ProtomodularFrame):
    return list(product(range(frame.k), repeat=frame.n))


# -- defining identities -----------------------------------------------------


def check_protomodular(frame: ProtomodularFrame) -> CheckReport:
    k, n, es = frame.k, frame.n, frame.es
    for a in range(k):
        for i in range(n):
            if frame.al(i, a, a) != es[i]:
                return _failed("protomodular", (a,), ("a",), i + 1, "alpha_i(a,a) = e_i")
    for a, b in product(range(k), repeat=2):
        if frame.th(frame.alpha_tuple(a, b), b) != a:
            return _failed(
                "protomodular", (a, b), ("a", "b"), None,
                "theta(alpha_1(a,b),..,alpha_n(a,b),b) = a",
            )
    return _passed("protomodular")


def check_right_cancellable(frame: ProtomodularFrame) -> CheckReport:
    k, n = frame.k, frame.n
    maps = translation_maps(frame)
    tuples = _tuples(frame)
    names = _vec_names("a", n) + _vec_names("a'", n) + ["b", "b'"]
    for r, s in product(range(len(maps)), repeat=2):
        m, m2 = maps[r], maps[s]
        first = frame.alpha_tuple(m[0], m2[0])
        for b2 in range(1, k):
            other = frame.alpha_tuple(m[b2], m2[b2])
            if other != first:
                i = next(j for j in range(n) if other[j] != first[j])
                return _failed(
                    "right-cancellable", tuples[r] + tuples[s] + (0, b2), names, i + 1
                )
    return _passed("right-cancellable")


def check_strict(frame: ProtomodularFrame) -> CheckReport:
    k, n = frame.k, frame.n
    tuples = _tuples(frame)
    bijective = k**n == k and all(
        len({frame.th(t, b) for t in tuples}) == k for b in range(k)
    )
    for t in tuples:
        for b in range(k):
            c = frame.th(t, b)
            for i in range(n):
                if frame.al(i, c, b) != t[i]:
                    return _failed(
                        "strict", t + (b,), _vec_names("a", n) + ["b"], i + 1,
                        theta_b_bijective=bijective,
                    )
    return _passed("strict", theta_b_bijective=bijective)


def check_one_associative(frame: ProtomodularFrame) -> CheckReport:
    k, n = frame.k, frame.n
    th = frame.th
    for xs in product(range(k), repeat=2 * n + 1):
        ref = None
        for j in range(n + 1):
            inner = th(xs[j : j + n], xs[j + n])
            outer_args = xs[:j] + (inner,) + xs[j + n + 1 :]
            v = th(outer_args[:n], outer_args[n])
            if ref is None:
                ref = v
            elif v != ref:
                return _failed(
                    "1-assoc", xs, _vec_names("x", 2 * n + 1), None, None, placement=j
                )
    return _passed("1-assoc")


def check_consociative(frame: ProtomodularFrame) -> CheckReport:
    k, n = frame.k, frame.n
    th = frame.th
    names = _vec_names("a", n) + _vec_names("b", n) + ["c"]
    for xs in product(range(k), repeat=2 * n + 1):
        a, bs, c = xs[:n], xs[n : 2 * n], xs[2 * n]
        lhs = th(a, th(bs, c))
        rhs = th(tuple(th(a, bj) for bj in bs), c)
        if lhs != rhs:
            return _failed("consociative", xs, names)
    return _passed("consociative")


def _b_independence(frame, prop, value) -> CheckReport:
    k, n = frame.k, frame.n
    names = _vec_names("a", n) + ["b", "b'"]
    for t in _tuples(frame):
        first = value(t, 0)
        for b2 in range(1, k):
            other = value(t, b2)
            if other != first:
                i = next(j for j in range(n) if other[j] != first[j])
                return _failed(prop, t + (0, b2), names, i + 1)
    return _passed(prop)


def check_simplified_rc(frame: ProtomodularFrame) -> tuple[CheckReport, CheckReport]:
    """Reports for the two one-sided weakenings of right-cancellability.

    ``simplified-ii``: alpha_i(b, theta(a, b)) does not depend on b.
    ``simplified-iii``: alpha_i(theta(a, b), b) does not depend on b.
    """
    th, at = frame.th, frame.alpha_tuple
    ii = _b_independence(frame, "simplified-ii", lambda t, b: at(b, th(t, b)))
    iii = _b_independence(frame, "simplified-iii", lambda t, b: at(th(t, b), b))
    return ii, iii


# -- consequences of the defining identities --------------------------------


def check_alpha_separates(frame: ProtomodularFrame) -> CheckReport:
    """alpha_i(a,c) = alpha_i(b,c) for all i implies a = b."""
    k = frame.k
    for c in range(k):
        seen: dict[tuple[int, ...], int] = {}
        for a in range(k):
            key = frame.alpha_tuple(a, c)
            if key in seen:
                return _failed("alpha-separates", (seen[key], a, c), ("a", "b", "c"))
            seen[key] = a
    return _passed("alpha-separates")


def check_alpha_unit_detects_equality(frame: ProtomodularFrame) -> CheckReport:
    """alpha_i(a,b) = e_i for all i implies a = b."""
    es = frame.es
    for a, b in product(range(frame.k), repeat=2):
        if a != b and frame.alpha_tuple(a, b) == es:
            return _failed("alpha-unit", (a, b), ("a", "b"))
    return _passed("alpha-unit")


def check_constants_act_trivially(frame: ProtomodularFrame) -> CheckReport:
    """theta(e_1,..,e_n,a) = a."""
    for a in range(frame.k):
        if frame.th(frame.es, a) != a:
            return _failed("theta-unit", (a,), ("a",))
    return _passed("theta-unit")


# -- Mal'cev operation -----------------------------------------------------


@dataclass(frozen=True)
class TernaryTable:
    size: int
    table: tuple[int, ...]

    def __post_init__(self):
        if len(self.table) != self.size**3:
            raise ModelError("ternary table must have size**3 entries")
        if any(not 0 <= v < self.size for v in self.table):
            raise ModelError("ternary table entry out of range")

    def __call__(self, a: int, b: int, c: int) -> int:
        k = self.size
        return self.table[(a * k + b) * k + c]


def malcev_table(frame: ProtomodularFrame) -> TernaryTable:
    """p(a,b,c) = theta(alpha_1(a,b),..,alpha_n(a,b),c), without law checks."""
    k = frame.k
    table = tuple(
        frame.th(frame.alpha_tuple(a, b), c) for a, b, c in product(range(k), repeat=3)
    )
    return TernaryTable(k, table)


def malcev_law_failure(p: TernaryTable) -> tuple[int, int] | None:
    for a, b in product(range(p.size), repeat=2):
        if p(a, b, b) != a or p(a, a, b) != b:
            return a, b
    return None


def derive_malcev(frame: ProtomodularFrame) -> TernaryTable:
    p = malcev_table(frame)
    bad = malcev_law_failure(p)
    if bad is not None:
        a, b = bad
        raise MalcevViolation(
            f"p(a,b,b)=a or p(a,a,b)=b fails at a={a}, b={b}; frame is not protomodular"
        )
    return p


def check_malcev_associative(p: TernaryTable) -> CheckReport:
    for x, t, s, y, z in product(range(p.size), repeat=5):
        if p(x, t, p(s, y, z)) != p(p(x, t, s), y, z):
            return _failed("malcev-assoc", (x, t, s, y, z), ("x", "t", "s", "y", "z"))
    return _passed("malcev-assoc")


# -- n = 1 classification --------------------------------------------------


def _is_associative(k, op) -> bool:
    return all(op(op(a, b), c) == op(a, op(b, c)) for a, b, c in product(range(k), repeat=3))


def classify_n1(frame: ProtomodularFrame) -> frozenset[str]:
    if frame.n != 1:
        raise ModelError("classification is defined for n = 1 only")
    k, e = frame.k, frame.es[0]

    def mul(a, b):
        return frame.th((a,), b)

    labels = set()
    if check_strict(frame):
        labels.add("left-semi-loop")
        latin = all(len({mul(a, b) for a in range(k)}) == k for b in range(k)) and all(
            len({mul(a, b) for b in range(k)}) == k for a in range(k)
        )
        two_sided = all(mul(a, e) == a == mul(e, a) for a in range(k))
        if latin and two_sided:
            labels.add("loop")
    unit = all(mul(a, e) == a == mul(e, a) for a in range(k))
    inverses = all(any(mul(a, b) == e == mul(b, a) for b in range(k)) for a in range(k))
    if unit and inverses and _is_associative(k, mul):
        labels.add("group-under-theta")
    return frozenset(labels)


# -- registry ----------------------------------------------------------------


def _malcev_assoc_of(frame: ProtomodularFrame) -> CheckReport:
    return check_malcev_associative(malcev_table(frame))


PROPERTY_CHECKS: dict[str, Callable[[ProtomodularFrame], CheckReport]] = {
    "protomodular": check_protomodular,
    "right-cancellable": check_right_cancellable,
    "strict": check_strict,
    "consociative": check_consociative,
    "1-assoc": check_one_associative,
    "malcev-assoc": _malcev_assoc_of,
    "simplified-ii": lambda f: check_simplified_rc(f)[0],
    "simplified-iii": lambda f: check_simplified_rc(f)[1],
}

PROPERTIES: tuple[str, ...] = tuple(PROPERTY_CHECKS)


def run_checks(frame: ProtomodularFrame, props=PROPERTIES) -> list[CheckReport]:
    unknown = [p for p in props if p not in PROPERTY_CHECKS]
    if unknown:
        raise ValueError(f"unknown properties: {', '.join(unknown)}")
    return [PROPERTY_CHECKS[p](frame) for p in props]
