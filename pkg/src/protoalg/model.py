"""Finite algebras stored as flat operation tables, and the ``pmalg`` text format."""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Sequence

from .errors import FormatError, ModelError

Table = tuple[int, ...]


@dataclass(frozen=True)
class Signature:
    symbols: tuple[tuple[str, int], ...]

    def __post_init__(self):
        names = [name for name, _ in self.symbols]
        if len(set(names)) != len(names):
            raise ModelError(f"duplicate symbol in signature: {names}")
        for name, arity in self.symbols:
            if arity < 0:
                raise ModelError(f"negative arity for {name}")

    @cached_property
    def arities(self) -> dict[str, int]:
        return dict(self.symbols)

    def arity(self, name: str) -> int:
        try:
            return self.arities[name]
        except KeyError:
            raise ModelError(f"unknown symbol {name!r}") from None

    def __contains__(self, name: str) -> bool:
        return name in self.arities


@dataclass(frozen=True)
class FiniteModel:
    """Carrier ``{0..size-1}`` with one flat table per symbol.

    The table of an m-ary symbol has ``size**m`` entries in lexicographic
    argument order, first argument most significant.
    """

    size: int
    signature: Signature
    tables: tuple[Table, ...]

    def __post_init__(self):
        if self.size < 1:
            raise ModelError("carrier size must be positive")
        if len(self.tables) != len(self.signature.symbols):
            raise ModelError("one table per symbol required")
        for (name, arity), table in zip(self.signature.symbols, self.tables):
            if len(table) != self.size**arity:
                raise ModelError(
                    f"table for {name} has length {len(table)}, expected {self.size ** arity}"
                )
            for v in table:
                if not 0 <= v < self.size:
                    raise ModelError(f"entry {v} of {name} outside carrier of size {self.size}")

    @cached_property
    def _index(self) -> dict[str, int]:
        return {name: i for i, (name, _) in enumerate(self.signature.symbols)}

    def table(self, sym: str) -> Table:
        try:
            return self.tables[self._index[sym]]
        except KeyError:
            raise ModelError(f"unknown symbol {sym!r}") from None


def flat_index(args: Iterable[int], k: int) -> int:
    idx = 0
    for a in args:
        idx = idx * k + a
    return idx


def eval_op(model: FiniteModel, sym: str, args: Sequence[int]) -> int:
    arity = model.signature.arity(sym)
    if len(args) != arity:
        raise ModelError(f"{sym} expects {arity} arguments, got {len(args)}")
    for a in args:
        if not 0 <= a < model.size:
            raise ModelError(f"element {a} out of range for carrier of size {model.size}")
    return model.table(sym)[flat_index(args, model.size)]


def frame_symbol_names(n: int) -> tuple[str, tuple[str, ...], tuple[str, ...]]:
    """Canonical symbol names: ``theta, alpha, e`` for n=1, numbered otherwise."""
    if n == 1:
        return "theta", ("alpha",), ("e",)
    return (
        "theta",
        tuple(f"alpha{i}" for i in range(1, n + 1)),
        tuple(f"e{i}" for i in range(1, n + 1)),
    )


@dataclass(frozen=True)
class ProtomodularFrame:
    model: FiniteModel
    n: int
    theta_sym: str
    alpha_syms: tuple[str, ...]
    e_syms: tuple[str, ...]
    # caches are excluded from equality so frames compare table-for-table
    _cache: dict = field(default_factory=dict, compare=False, repr=False, hash=False)

    def __post_init__(self):
        if self.n < 1:
            raise ModelError("n must be positive")
        sig = self.model.signature
        if sig.arity(self.theta_sym) != self.n + 1:
            raise ModelError(f"{self.theta_sym} must have arity {self.n + 1}")
        if len(self.alpha_syms) != self.n or len(self.e_syms) != self.n:
            raise ModelError(f"need exactly {self.n} alpha and e symbols")
        for s in self.alpha_syms:
            if sig.arity(s) != 2:
                raise ModelError(f"{s} must be binary")
        for s in self.e_syms:
            if sig.arity(s) != 0:
                raise ModelError(f"{s} must be a constant")

    @classmethod
    def from_tables(
        cls,
        k: int,
        n: int,
        theta: Sequence[int],
        alphas: Sequence[Sequence[int]],
        es: Sequence[int],
    ) -> ProtomodularFrame:
        tname, anames, enames = frame_symbol_names(n)
        if len(alphas) != n or len(es) != n:
            raise ModelError(f"need exactly {n} alpha tables and {n} constants")
        symbols = ((tname, n + 1),) + tuple((a, 2) for a in anames) + tuple((e, 0) for e in enames)
        tables = (tuple(theta),) + tuple(tuple(a) for a in alphas) + tuple((v,) for v in es)
        model = FiniteModel(k, Signature(symbols), tables)
        return cls(model, n, tname, anames, enames)

    @property
    def k(self) -> int:
        return self.model.size

    @property
    def theta(self) -> Table:
        return self.model.table(self.theta_sym)

    @property
    def alphas(self) -> tuple[Table, ...]:
        if "alphas" not in self._cache:
            self._cache["alphas"] = tuple(self.model.table(s) for s in self.alpha_syms)
        return self._cache["alphas"]

    @property
    def es(self) -> tuple[int, ...]:
        if "es" not in self._cache:
            self._cache["es"] = tuple(self.model.table(s)[0] for s in self.e_syms)
        return self._cache["es"]

    def th(self, args: Sequence[int], b: int) -> int:
        """theta(args..., b)."""
        return self.theta[flat_index(args, self.k) * self.k + b]

    def al(self, i: int, a: int, b: int) -> int:
        """alpha_{i+1}(a, b), with ``i`` zero-based."""
        return self.alphas[i][a * self.k + b]

    def alpha_tuple(self, a: int, b: int) -> tuple[int, ...]:
        k = self.k
        return tuple(t[a * k + b] for t in self.alphas)

    def with_constants(self, es: Sequence[int]) -> ProtomodularFrame:
        return ProtomodularFrame.from_tables(self.k, self.n, self.theta, self.alphas, es)


# -- pmalg text format ------------------------------------------------------


class LineReader:
    """Iterates the non-empty, comment-stripped lines of a sectioned text file."""

    def __init__(self, text: str):
        self._lines = []
        for lineno, raw in enumerate(text.splitlines(), start=1):
            body = raw.split("#", 1)[0].split()
            if body:
                self._lines.append((lineno, body))
        self._pos = 0

    @property
    def last_line(self) -> int:
        return self._lines[-1][0] if self._lines else 0

    def next(self, what: str) -> tuple[int, list[str]]:
        if self._pos >= len(self._lines):
            raise FormatError(f"unexpected end of input, expected {what}", self.last_line)
        item = self._lines[self._pos]
        self._pos += 1
        return item

    def at_end(self) -> bool:
        return self._pos >= len(self._lines)

    def expect(self, keyword: str, nargs: int) -> tuple[int, list[str]]:
        lineno, toks = self.next(f"'{keyword}'")
        if toks[0] != keyword:
            raise FormatError(f"expected '{keyword}', found '{toks[0]}'", lineno)
        if len(toks) != nargs + 1:
            raise FormatError(f"'{keyword}' takes {nargs} argument(s)", lineno)
        return lineno, toks[1:]

    def int_token(self, tok: str, lineno: int, bound: int | None = None) -> int:
        try:
            v = int(tok)
        except ValueError:
            raise FormatError(f"not an integer: {tok!r}", lineno) from None
        if v < 0 or (bound is not None and v >= bound):
            raise FormatError(f"entry {v} out of range", lineno)
        return v

    def rows(self, count: int, width: int, bound: int, section: str) -> list[int]:
        out: list[int] = []
        for _ in range(count):
            lineno, toks = self.next(f"row of section '{section}'")
            if len(toks) != width:
                raise FormatError(
                    f"section '{section}' rows need {width} entries, found {len(toks)}", lineno
                )
            out.extend(self.int_token(t, lineno, bound) for t in toks)
        return out

    def finish(self):
        if not self.at_end():
            lineno, toks = self._lines[self._pos]
            raise FormatError(f"unexpected content '{' '.join(toks)}'", lineno)


def read_header(reader: LineReader, magic: str):
    lineno, toks = reader.next(f"'{magic} 1' header")
    if toks != [magic, "1"]:
        raise FormatError(f"expected header '{magic} 1'", lineno)


def parse_algebra(text: str) -> ProtomodularFrame:
    r = LineReader(text)
    read_header(r, "pmalg")
    lineno, (tok,) = r.expect("n", 1)
    n = r.int_token(tok, lineno)
    if n < 1:
        raise FormatError("n must be positive", lineno)
    lineno, (tok,) = r.expect("size", 1)
    k = r.int_token(tok, lineno)
    if k < 1:
        raise FormatError("size must be positive", lineno)

    r.expect("theta", 0)
    theta = r.rows(k**n, k, k, "theta")
    alphas = []
    for i in range(1, n + 1):
        lineno, (tok,) = r.expect("alpha", 1)
        if r.int_token(tok, lineno) != i:
            raise FormatError(f"expected section 'alpha {i}'", lineno)
        alphas.append(r.rows(k, k, k, f"alpha {i}"))
    es = []
    for i in range(1, n + 1):
        lineno, (idx, val) = r.expect("e", 2)
        if r.int_token(idx, lineno) != i:
            raise FormatError(f"expected 'e {i}'", lineno)
        es.append(r.int_token(val, lineno, k))
    r.finish()
    return ProtomodularFrame.from_tables(k, n, theta, alphas, es)


def format_rows(values: Sequence[int], width: int) -> list[str]:
    return [
        " ".join(str(v) for v in values[start : start + width])
        for start in range(0, len(values), width)
    ]


def serialize_algebra(frame: ProtomodularFrame) -> str:
    k, n = frame.k, frame.n
    lines = ["pmalg 1", f"n {n}", f"size {k}", "theta"]
    lines += format_rows(frame.theta, k)
    for i, table in enumerate(frame.alphas, start=1):
        lines.append(f"alpha {i}")
        lines += format_rows(table, k)
    lines += [f"e {i} {v}" for i, v in enumerate(frame.es, start=1)]
    return "\n".join(lines) + "\n"
