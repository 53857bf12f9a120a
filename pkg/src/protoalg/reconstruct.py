"""Group structures carried by right-cancellable frames, and the two equivalent presentations.

A right-cancellable frame is interchangeable with

* a principal action quadruple ``(A, G, epsilon, mu)``: a group G acting
  principally on A with maps ``epsilon: A^n -> G`` and ``mu: G -> A^n`` such
  that ``epsilon(mu(g)) = g``;
* a group triple ``(A, sigma, rho)``: a group structure on A itself with maps
  ``sigma: A^n -> A`` and ``rho: A -> A^n`` such that ``sigma(rho(a)) = a``.

Conversions are object-level and exact: round trips reproduce the frame
table-for-table.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Sequence

from .errors import FormatError, InvariantViolation, MalcevViolation, ModelError
from .groups import GroupTable
from .model import LineReader, ProtomodularFrame, flat_index, format_rows, read_header
from .protomod import (
    TernaryTable,
    check_malcev_associative,
    check_protomodular,
    check_right_cancellable,
    malcev_law_failure,
)
from .translations import require_right_cancellable, translation_group


def _all_tuples(k: int, n: int):
    return list(product(range(k), repeat=n))


def group_at(frame: ProtomodularFrame, u: int) -> GroupTable:
    """a . b = theta(alpha_1(a,u),..,alpha_n(a,u), b) with unit u."""
    require_right_cancellable(frame)
    k = frame.k
    op = tuple(frame.th(frame.alpha_tuple(a, u), b) for a, b in product(range(k), repeat=2))
    inverse = tuple(frame.th(frame.alpha_tuple(u, a), u) for a in range(k))
    g = GroupTable(k, op, u, inverse)
    failure = g.law_failure()
    if failure:
        raise InvariantViolation(f"extracted operation at u={u} is not a group: {failure}")
    return g


def right_division(frame: ProtomodularFrame, u: int) -> tuple[int, ...]:
    """Table of a /_u b = theta(alpha_1(a,b),..,alpha_n(a,b), u)."""
    require_right_cancellable(frame)
    k = frame.k
    return tuple(frame.th(frame.alpha_tuple(a, b), u) for a, b in product(range(k), repeat=2))


# -- principal action quadruples ------------------------------------------


@dataclass(frozen=True)
class ActionQuadruple:
    size: int
    n: int
    group: GroupTable
    action: tuple[int, ...]  # action[g * size + x] = g x
    epsilon: tuple[int, ...]  # indexed by flat n-tuple
    mu: tuple[tuple[int, ...], ...]  # mu[g] in A^n

    def act(self, g: int, x: int) -> int:
        return self.action[g * self.size + x]

    def validate(self) -> ActionQuadruple:
        k, G = self.size, self.group
        m = G.size
        failure = G.law_failure()
        if failure:
            raise InvariantViolation(f"acting group is not a group: {failure}")
        if len(self.action) != m * k or any(not 0 <= v < k for v in self.action):
            raise InvariantViolation("malformed action table")
        if len(self.epsilon) != k**self.n or any(not 0 <= g < m for g in self.epsilon):
            raise InvariantViolation("malformed epsilon table")
        if len(self.mu) != m or any(
            len(t) != self.n or any(not 0 <= a < k for a in t) for t in self.mu
        ):
            raise InvariantViolation("malformed mu table")
        for x in range(k):
            if self.act(G.unit, x) != x:
                raise InvariantViolation(f"unit does not fix {x}")
        for g, h, x in product(range(m), range(m), range(k)):
            if self.act(G.mul(g, h), x) != self.act(g, self.act(h, x)):
                raise InvariantViolation(f"action law fails at g={g}, h={h}, x={x}")
        for x, y in product(range(k), repeat=2):
            movers = sum(1 for g in range(m) if self.act(g, x) == y)
            if movers != 1:
                raise InvariantViolation(f"action not principal: {movers} elements send {x} to {y}")
        for g in range(m):
            if self.epsilon[flat_index(self.mu[g], k)] != g:
                raise InvariantViolation(f"epsilon(mu({g})) != {g}")
        return self


def to_action_quadruple(frame: ProtomodularFrame, u: int = 0) -> ActionQuadruple:
    tg = translation_group(frame)
    k, n = frame.k, frame.n
    index = {t.map: i for i, t in enumerate(tg.elements)}
    epsilon = tuple(index[tuple(frame.th(t, b) for b in range(k))] for t in _all_tuples(k, n))
    action = tuple(t.map[x] for t in tg.elements for x in range(k))
    mu = tuple(frame.alpha_tuple(t.map[u], u) for t in tg.elements)
    return ActionQuadruple(k, n, tg.as_group_table(), action, epsilon, mu).validate()


def from_action_quadruple(q: ActionQuadruple, n: int | None = None) -> ProtomodularFrame:
    if n is not None and n != q.n:
        raise ModelError(f"quadruple has n={q.n}, requested n={n}")
    q.validate()
    k, n = q.size, q.n
    theta = [q.act(q.epsilon[flat_index(t, k)], b) for t in _all_tuples(k, n) for b in range(k)]
    mover = {}
    for g in range(q.group.size):
        for b in range(k):
            mover[(q.act(g, b), b)] = g
    alphas = [[q.mu[mover[(a, b)]][i] for a, b in product(range(k), repeat=2)] for i in range(n)]
    es = list(q.mu[q.group.unit])
    return _validated(ProtomodularFrame.from_tables(k, n, theta, alphas, es))


def _validated(frame: ProtomodularFrame) -> ProtomodularFrame:
    for check in (check_protomodular, check_right_cancellable):
        report = check(frame)
        if not report:
            raise InvariantViolation(
                f"constructed frame fails {report.property}: {report.describe_witness()}"
            )
    return frame


# -- group triples -----------------------------------------------------------


@dataclass(frozen=True)
class GroupTriple:
    n: int
    group: GroupTable
    sigma: tuple[int, ...]  # indexed by flat n-tuple
    rho: tuple[tuple[int, ...], ...]

    @property
    def size(self) -> int:
        return self.group.size

    def validate(self) -> GroupTriple:
        k = self.size
        failure = self.group.law_failure()
        if failure:
            raise InvariantViolation(f"not a group: {failure}")
        if len(self.sigma) != k**self.n or any(not 0 <= v < k for v in self.sigma):
            raise InvariantViolation("malformed sigma table")
        if len(self.rho) != k or any(
            len(t) != self.n or any(not 0 <= v < k for v in t) for t in self.rho
        ):
            raise InvariantViolation("malformed rho table")
        for a in range(k):
            if self.sigma[flat_index(self.rho[a], k)] != a:
                raise InvariantViolation(f"sigma(rho({a})) != {a}")
        return self


def to_group_triple(frame: ProtomodularFrame, u: int) -> GroupTriple:
    group = group_at(frame, u)
    k, n = frame.k, frame.n
    sigma = tuple(frame.th(t, u) for t in _all_tuples(k, n))
    rho = tuple(frame.alpha_tuple(a, u) for a in range(k))
    return GroupTriple(n, group, sigma, rho).validate()


def from_group_triple(t: GroupTriple, n: int | None = None) -> ProtomodularFrame:
    if n is not None and n != t.n:
        raise ModelError(f"triple has n={t.n}, requested n={n}")
    t.validate()
    G, k, n = t.group, t.size, t.n
    theta = [G.mul(t.sigma[flat_index(tup, k)], b) for tup in _all_tuples(k, n) for b in range(k)]
    alphas = [
        [t.rho[G.mul(a, G.inverse[b])][i] for a, b in product(range(k), repeat=2)]
        for i in range(n)
    ]
    es = list(t.rho[G.unit])
    return _validated(ProtomodularFrame.from_tables(k, n, theta, alphas, es))


def identity_triple(group: GroupTable) -> GroupTriple:
    """The triple with sigma = rho = identity, n = 1."""
    k = group.size
    return GroupTriple(1, group, tuple(range(k)), tuple((a,) for a in range(k)))


# -- associative Mal'cev operations <-> groups -----------------------------


def group_to_malcev(g: GroupTable) -> TernaryTable:
    k = g.size
    return TernaryTable(
        k, tuple(g.mul(g.mul(a, g.inverse[b]), c) for a, b, c in product(range(k), repeat=3))
    )


def malcev_to_group(p: TernaryTable, u: int) -> GroupTable:
    if malcev_law_failure(p) is not None:
        raise MalcevViolation("operation does not satisfy the Mal'cev laws")
    report = check_malcev_associative(p)
    if not report:
        raise MalcevViolation(f"Mal'cev operation is not associative ({report.describe_witness()})")
    k = p.size
    g = GroupTable(
        k,
        tuple(p(a, u, b) for a, b in product(range(k), repeat=2)),
        u,
        tuple(p(u, a, u) for a in range(k)),
    )
    failure = g.law_failure()
    if failure:
        raise InvariantViolation(f"associative Mal'cev operation gave a non-group: {failure}")
    return g


# -- pmgrp / pmact text formats ---------------------------------------------


def _read_int_line(r: LineReader, keyword: str, minimum: int = 1) -> int:
    lineno, (tok,) = r.expect(keyword, 1)
    v = r.int_token(tok, lineno)
    if v < minimum:
        raise FormatError(f"{keyword} must be at least {minimum}", lineno)
    return v


def _chunks(values: Sequence[int], width: int) -> tuple[tuple[int, ...], ...]:
    return tuple(tuple(values[i : i + width]) for i in range(0, len(values), width))


def parse_group_triple(text: str) -> GroupTriple:
    """``pmgrp 1`` format: n, size, group table, sigma rows (theta layout), rho rows."""
    r = LineReader(text)
    read_header(r, "pmgrp")
    n = _read_int_line(r, "n")
    k = _read_int_line(r, "size")
    r.expect("group", 0)
    op = r.rows(k, k, k, "group")
    r.expect("sigma", 0)
    sigma = r.rows(k ** (n - 1), k, k, "sigma")
    r.expect("rho", 0)
    rho = _chunks(r.rows(k, n, k, "rho"), n)
    r.finish()
    try:
        group = GroupTable.from_op(k, op)
        return GroupTriple(n, group, tuple(sigma), rho).validate()
    except InvariantViolation as exc:
        raise FormatError(str(exc)) from None


def serialize_group_triple(t: GroupTriple) -> str:
    k = t.size
    lines = ["pmgrp 1", f"n {t.n}", f"size {k}", "group"]
    lines += format_rows(t.group.op, k)
    lines.append("sigma")
    lines += format_rows(t.sigma, k)
    lines.append("rho")
    lines += [" ".join(map(str, row)) for row in t.rho]
    return "\n".join(lines) + "\n"


def parse_action_quadruple(text: str) -> ActionQuadruple:
    """``pmact 1`` format: n, size, order, group, action, epsilon rows (theta layout), mu rows."""
    r = LineReader(text)
    read_header(r, "pmact")
    n = _read_int_line(r, "n")
    k = _read_int_line(r, "size")
    m = _read_int_line(r, "order")
    r.expect("group", 0)
    op = r.rows(m, m, m, "group")
    r.expect("action", 0)
    action = r.rows(m, k, k, "action")
    r.expect("epsilon", 0)
    epsilon = r.rows(k ** (n - 1), k, m, "epsilon")
    r.expect("mu", 0)
    mu = _chunks(r.rows(m, n, k, "mu"), n)
    r.finish()
    try:
        group = GroupTable.from_op(m, op)
        return ActionQuadruple(k, n, group, tuple(action), tuple(epsilon), mu).validate()
    except InvariantViolation as exc:
        raise FormatError(str(exc)) from None


def serialize_action_quadruple(q: ActionQuadruple) -> str:
    k, m = q.size, q.group.size
    lines = ["pmact 1", f"n {q.n}", f"size {k}", f"order {m}", "group"]
    lines += format_rows(q.group.op, m)
    lines.append("action")
    lines += format_rows(q.action, k)
    lines.append("epsilon")
    lines += format_rows(q.epsilon, k)
    lines.append("mu")
    lines += [" ".join(map(str, row)) for row in q.mu]
    return "\n".join(lines) + "\n"
