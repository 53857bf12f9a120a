"""A small equational-theory language and exhaustive identity checking over finite models.

Theory files are line oriented::

    theory v1
    op theta 2
    op alpha 2
    const e
    axiom alpha(a, a) = e
    axiom theta(alpha(a, b), b) = a

Identifiers that are not declared operations are variables.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from importlib import resources
from itertools import product
from typing import Callable, Mapping, Union

from .errors import EvaluationError, TheoryError
from .model import FiniteModel, Signature, flat_index


@dataclass(frozen=True)
class Var:
    name: str

    def __str__(self):
        return self.name


@dataclass(frozen=True)
class App:
    symbol: str
    args: tuple[Term, ...] = ()

    def __str__(self):
        if not self.args:
            return self.symbol
        return f"{self.symbol}({', '.join(map(str, self.args))})"


Term = Union[Var, App]


def term_variables(term: Term, out: list[str] | None = None) -> list[str]:
    """Variables in order of first occurrence."""
    out = [] if out is None else out
    if isinstance(term, Var):
        if term.name not in out:
            out.append(term.name)
    else:
        for arg in term.args:
            term_variables(arg, out)
    return out


@dataclass(frozen=True)
class Identity:
    lhs: Term
    rhs: Term

    @property
    def variables(self) -> tuple[str, ...]:
        return tuple(term_variables(self.rhs, term_variables(self.lhs)))

    def __str__(self):
        return f"{self.lhs} = {self.rhs}"


@dataclass(frozen=True)
class Theory:
    name: str
    signature: Signature
    axioms: tuple[Identity, ...]


# -- parsing -----------------------------------------------------------------

_TOKEN = re.compile(r"\s*(?:([A-Za-z_][A-Za-z0-9_']*)|(\d+)|(.))")


def _tokenize(text: str, line: int, col0: int):
    """Yield (kind, value, column) with kind in {'ident', 'int', 'punct'}; columns are 1-based."""
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m.group(0).strip() == "":
            break
        start = m.start(m.lastindex)
        kind = ("ident", "int", "punct")[m.lastindex - 1]
        yield kind, m.group(m.lastindex), col0 + start + 1
        pos = m.end()


class _TermParser:
    def __init__(self, tokens, line: int, arities: Mapping[str, int], end_col: int):
        self.toks = list(tokens)
        self.pos = 0
        self.line = line
        self.arities = arities
        self.end_col = end_col

    def peek(self):
        return self.toks[self.pos] if self.pos < len(self.toks) else (None, None, self.end_col)

    def take(self, value=None, kind=None):
        tok = self.peek()
        if tok[0] is None or (value is not None and tok[1] != value) or (kind and tok[0] != kind):
            want = repr(value) if value else (kind or "token")
            found = "end of line" if tok[0] is None else repr(tok[1])
            raise TheoryError(f"expected {want}, found {found}", self.line, tok[2])
        self.pos += 1
        return tok

    def term(self) -> Term:
        _, name, col = self.take(kind="ident")
        if self.peek()[1] == "(":
            self.take("(")
            args = [self.term()]
            while self.peek()[1] == ",":
                self.take(",")
                args.append(self.term())
            self.take(")")
            if name not in self.arities:
                raise TheoryError(f"undeclared operation symbol {name!r}", self.line, col)
            if self.arities[name] != len(args):
                raise TheoryError(
                    f"arity mismatch: {name} takes {self.arities[name]} argument(s), given {len(args)}",
                    self.line, col,
                )
            return App(name, tuple(args))
        if name in self.arities:
            if self.arities[name] != 0:
                raise TheoryError(
                    f"arity mismatch: {name} takes {self.arities[name]} argument(s), given 0",
                    self.line, col,
                )
            return App(name)
        return Var(name)


def parse_term(text: str, arities: Mapping[str, int], line: int = 1) -> Term:
    p = _TermParser(_tokenize(text, line, 0), line, arities, len(text) + 1)
    t = p.term()
    if p.pos != len(p.toks):
        raise TheoryError(f"unexpected {p.peek()[1]!r}", line, p.peek()[2])
    return t


def parse_theory(text: str) -> Theory:
    name = None
    symbols: list[tuple[str, int]] = []
    axiom_lines: list[tuple[int, str, int]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        body = raw.split("#", 1)[0]
        stripped = body.strip()
        if not stripped:
            continue
        head, _, rest = stripped.partition(" ")
        rest = rest.strip()
        col = body.index(head) + 1
        if head == "theory":
            if name is not None:
                raise TheoryError("duplicate 'theory' line", lineno, col)
            if not re.fullmatch(r"[A-Za-z_][A-Za-z0-9_\-]*", rest):
                raise TheoryError("'theory' needs a name", lineno, col)
            name = rest
        elif head in ("op", "const"):
            parts = rest.split()
            want = 2 if head == "op" else 1
            if len(parts) != want or not re.fullmatch(r"[A-Za-z_][A-Za-z0-9_]*", parts[0]):
                usage = "op <name> <arity>" if head == "op" else "const <name>"
                raise TheoryError(f"expected '{usage}'", lineno, col)
            if head == "op" and not parts[1].isdigit():
                raise TheoryError(f"arity must be a non-negative integer, found {parts[1]!r}", lineno, col)
            arity = int(parts[1]) if head == "op" else 0
            if any(s == parts[0] for s, _ in symbols):
                raise TheoryError(f"duplicate operation {parts[0]!r}", lineno, col)
            symbols.append((parts[0], arity))
        elif head == "axiom":
            axiom_lines.append((lineno, body, body.index("axiom") + len("axiom")))
        else:
            raise TheoryError(f"unknown directive {head!r}", lineno, col)
    if name is None:
        raise TheoryError("missing 'theory <name>' line")

    arities = dict(symbols)
    axioms = []
    for lineno, body, offset in axiom_lines:
        p = _TermParser(_tokenize(body[offset:], lineno, offset), lineno, arities, len(body) + 1)
        lhs = p.term()
        p.take("=")
        rhs = p.term()
        if p.pos != len(p.toks):
            _, value, col = p.peek()
            raise TheoryError(f"unexpected {value!r} after identity", lineno, col)
        axioms.append(Identity(lhs, rhs))
    return Theory(name, Signature(tuple(symbols)), tuple(axioms))


# -- evaluation ----------------------------------------------------------------


def _compile(model: FiniteModel, term: Term, slots: Mapping[str, int]) -> Callable[[tuple], int]:
    if isinstance(term, Var):
        if term.name not in slots:
            raise EvaluationError(f"unbound variable {term.name!r}")
        slot = slots[term.name]
        return lambda env: env[slot]
    if term.symbol not in model.signature:
        raise EvaluationError(f"unknown symbol {term.symbol!r}")
    arity = model.signature.arity(term.symbol)
    if arity != len(term.args):
        raise EvaluationError(f"{term.symbol} has arity {arity} in the model, used with {len(term.args)}")
    table = model.table(term.symbol)
    if arity == 0:
        value = table[0]
        return lambda env: value
    k = model.size
    subs = [_compile(model, a, slots) for a in term.args]
    if arity == 1:
        (f,) = subs
        return lambda env: table[f(env)]
    if arity == 2:
        f, g = subs
        return lambda env: table[f(env) * k + g(env)]
    return lambda env: table[flat_index((s(env) for s in subs), k)]


def eval_term(model: FiniteModel, term: Term, assignment: Mapping[str, int]) -> int:
    names = term_variables(term)
    for v in names:
        if v not in assignment:
            raise EvaluationError(f"unbound variable {v!r}")
        if not 0 <= assignment[v] < model.size:
            raise EvaluationError(f"value {assignment[v]} for {v} outside the carrier")
    slots = {v: i for i, v in enumerate(names)}
    return _compile(model, term, slots)(tuple(assignment[v] for v in names))


@dataclass(frozen=True)
class Verdict:
    holds: bool
    counterexample: dict[str, int] | None = None

    def __bool__(self):
        return self.holds


def check_identity(model: FiniteModel, identity: Identity) -> Verdict:
    names = identity.variables
    slots = {v: i for i, v in enumerate(names)}
    lhs = _compile(model, identity.lhs, slots)
    rhs = _compile(model, identity.rhs, slots)
    for env in product(range(model.size), repeat=len(names)):
        if lhs(env) != rhs(env):
            return Verdict(False, dict(zip(names, env)))
    return Verdict(True)


def check_theory(model: FiniteModel, theory: Theory) -> list[tuple[Identity, Verdict]]:
    return [(ax, check_identity(model, ax)) for ax in theory.axioms]


# -- bundled presets -----------------------------------------------------------


def _names(n: int):
    if n == 1:
        return "theta", ["alpha"], ["e"]
    return "theta", [f"alpha{i}" for i in range(1, n + 1)], [f"e{i}" for i in range(1, n + 1)]


def _app(f: str, *args: str) -> str:
    return f"{f}({', '.join(args)})"


def _header(name: str, n: int) -> list[str]:
    theta, alphas, es = _names(n)
    lines = [f"theory {name}", f"op {theta} {n + 1}"]
    lines += [f"op {a} 2" for a in alphas]
    lines += [f"const {e}" for e in es]
    return lines


def _vn_axioms(n: int) -> list[str]:
    theta, alphas, es = _names(n)
    lines = [f"axiom {_app(a, 'a', 'a')} = {e}" for a, e in zip(alphas, es)]
    lines.append(f"axiom {_app(theta, *[_app(a, 'a', 'b') for a in alphas], 'b')} = a")
    return lines


def _vec(stem: str, n: int, suffix: str = "") -> list[str]:
    return [f"{stem}{i}{suffix}" for i in range(1, n + 1)]


def preset_text(kind: str, n: int) -> str:
    """Source text of a bundled theory; ``kind`` is one of PRESET_KINDS."""
    theta, alphas, _ = _names(n)
    a, a2, bs = _vec("a", n), _vec("a", n, "'"), _vec("b", n)
    lines = _header(f"{kind}{n}", n)
    if kind != "malcev":
        lines += _vn_axioms(n)
    if kind == "rc":
        for al in alphas:
            left = _app(al, _app(theta, *a, "b"), _app(theta, *a2, "b"))
            right = _app(al, _app(theta, *a, "b'"), _app(theta, *a2, "b'"))
            lines.append(f"axiom {left} = {right}")
    elif kind == "strict":
        for al, ai in zip(alphas, a):
            lines.append(f"axiom {_app(al, _app(theta, *a, 'b'), 'b')} = {ai}")
    elif kind == "consoc":
        left = _app(theta, *a, _app(theta, *bs, "c"))
        right = _app(theta, *[_app(theta, *a, bj) for bj in bs], "c")
        lines.append(f"axiom {left} = {right}")
    elif kind == "oneassoc":
        xs = _vec("x", 2 * n + 1)

        def placement(j):
            inner = _app(theta, *xs[j : j + n + 1])
            return _app(theta, *xs[:j], inner, *xs[j + n + 1 :])

        for j in range(n):
            lines.append(f"axiom {placement(n)} = {placement(j)}")
    elif kind == "malcev":
        def p(x, y, z):
            return _app(theta, *[_app(al, x, y) for al in alphas], z)

        lines.append(f"axiom {p('a', 'b', 'b')} = a")
        lines.append(f"axiom {p('a', 'a', 'b')} = b")
        lines.append(f"axiom {p('x', 't', p('s', 'y', 'z'))} = {p(p('x', 't', 's'), 'y', 'z')}")
    elif kind == "groupterm":
        def shift(x, y, z):
            return _app(theta, *[_app(al, x, y) for al in alphas], z)

        left = shift("a", "b", shift("c", "d", "s"))
        right = _app(theta, *[_app(al, shift("a", "b", "c"), "d") for al in alphas], "s")
        lines.append(f"axiom {left} = {right}")
    elif kind != "v":
        raise ValueError(f"unknown preset kind {kind!r}")
    return "\n".join(lines) + "\n"


PRESET_KINDS = ("v", "rc", "strict", "consoc", "oneassoc", "malcev", "groupterm")


def preset_catalog() -> dict[str, str]:
    out = {}
    for kind in PRESET_KINDS:
        top = 2 if kind == "groupterm" else 4
        for n in range(1, top + 1):
            out[f"{kind}{n}"] = preset_text(kind, n)
    return out


def load_preset(name: str) -> Theory:
    text = resources.files("protoalg").joinpath("presets", f"{name}.thy").read_text()
    return parse_theory(text)
