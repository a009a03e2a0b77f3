"""Named graph families and a small expression language for them.

Expressions look like ``P(7)``, ``Km(2,2,2)`` or ``join(K(1),C(5))``.  Tags
are case-sensitive and whitespace is ignored.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import reduce
from typing import Union

from . import ops
from .errors import FamilyError, ParseError
from .graph import Graph, complement, new_graph

# tag -> (description, arity or None for variadic, minimum per parameter)
FAMILIES: dict[str, tuple[str, int | None, int]] = {
    "P": ("path P_n", 1, 1),
    "C": ("cycle C_n (n >= 3)", 1, 3),
    "W": ("wheel W_n of order n, hub 0 (n >= 4)", 1, 4),
    "K": ("complete graph K_n", 1, 1),
    "S": ("star K_{1,n}, center 0", 1, 1),
    "Kb": ("complete bipartite K_{m,n}", 2, 1),
    "Km": ("complete multipartite K_{a,b,...} (>= 2 parts)", None, 1),
    "CP": ("cocktail party graph CP(n)", 1, 1),
    "F": ("friendship graph F_n, center 0", 1, 1),
    "B": ("book graph B_n = K_{1,n} x P_2, spine 0 and 1", 1, 1),
    "E": ("empty graph on n vertices", 1, 1),
    "M": ("matching m K_2", 1, 1),
}

OPERATORS: dict[str, tuple[str, int]] = {
    "join": ("join A v B", 2),
    "corona": ("corona A o B", 2),
    "cart": ("Cartesian product A x B", 2),
    "union": ("disjoint union", 2),
    "comp": ("complement", 1),
}


@dataclass(frozen=True)
class Named:
    tag: str
    params: tuple[int, ...]

    def __str__(self):
        return f"{self.tag}({','.join(map(str, self.params))})"


@dataclass(frozen=True)
class Op:
    tag: str
    operands: tuple[FamilySpec, ...]

    def __str__(self):
        return f"{self.tag}({','.join(map(str, self.operands))})"


FamilySpec = Union[Named, Op]


def Path(n):  # noqa: N802 - constructor-style helpers
    return Named("P", (n,))


def Cycle(n):  # noqa: N802
    return Named("C", (n,))


def Wheel(n):  # noqa: N802
    return Named("W", (n,))


def Complete(n):  # noqa: N802
    return Named("K", (n,))


def Star(n):  # noqa: N802
    return Named("S", (n,))


def CompleteBipartite(m, n):  # noqa: N802
    return Named("Kb", (m, n))


def CompleteMultipartite(*sizes):  # noqa: N802
    return Named("Km", tuple(sizes))


def CocktailParty(n):  # noqa: N802
    return Named("CP", (n,))


def Friendship(n):  # noqa: N802
    return Named("F", (n,))


def Book(n):  # noqa: N802
    return Named("B", (n,))


def Empty(n):  # noqa: N802
    return Named("E", (n,))


def Matching(m):  # noqa: N802
    return Named("M", (m,))


def validate(spec: FamilySpec) -> None:
    if isinstance(spec, Op):
        if spec.tag not in OPERATORS:
            raise FamilyError(f"unknown operator {spec.tag!r}")
        arity = OPERATORS[spec.tag][1]
        if len(spec.operands) != arity:
            raise FamilyError(f"{spec.tag} takes {arity} operand(s), got {len(spec.operands)}")
        for sub in spec.operands:
            validate(sub)
        return
    if spec.tag not in FAMILIES:
        raise FamilyError(f"unknown family {spec.tag!r}")
    desc, arity, lo = FAMILIES[spec.tag]
    if arity is None:
        if len(spec.params) < 2:
            raise FamilyError(f"{spec.tag} needs at least 2 parts, got {len(spec.params)}")
    elif len(spec.params) != arity:
        raise FamilyError(f"{spec.tag} takes {arity} parameter(s), got {len(spec.params)}")
    for p in spec.params:
        if not isinstance(p, int) or p < lo:
            raise FamilyError(f"{spec}: parameters of {spec.tag} must be >= {lo} ({desc})")


def _multipartite(sizes) -> Graph:
    total = sum(sizes)
    part = [i for i, s in enumerate(sizes) for _ in range(s)]
    edges = [(u, v) for u in range(total) for v in range(u + 1, total) if part[u] != part[v]]
    return new_graph(total, edges)


def _named(tag: str, p: tuple[int, ...]) -> Graph:
    if tag == "P":
        n = p[0]
        return new_graph(n, [(i, i + 1) for i in range(n - 1)])
    if tag == "C":
        n = p[0]
        return new_graph(n, [(i, (i + 1) % n) for i in range(n)])
    if tag == "W":
        return ops.join(new_graph(1), _named("C", (p[0] - 1,)))
    if tag == "K":
        n = p[0]
        return new_graph(n, [(u, v) for u in range(n) for v in range(u + 1, n)])
    if tag == "S":
        return new_graph(p[0] + 1, [(0, i) for i in range(1, p[0] + 1)])
    if tag in ("Kb", "Km"):
        return _multipartite(p)
    if tag == "CP":
        return _multipartite([2] * p[0])
    if tag == "F":
        n = p[0]
        edges = []
        for i in range(n):
            a, b = 2 * i + 1, 2 * i + 2
            edges += [(0, a), (0, b), (a, b)]
        return new_graph(2 * n + 1, edges)
    if tag == "B":
        return ops.cartesian(_named("S", p), _named("P", (2,)))
    if tag == "E":
        return new_graph(p[0])
    if tag == "M":
        return new_graph(2 * p[0], [(2 * i, 2 * i + 1) for i in range(p[0])])
    raise FamilyError(f"unknown family {tag!r}")


_BINARY = {"join": ops.join, "corona": ops.corona, "cart": ops.cartesian, "union": ops.disjoint_union}


def build(spec: FamilySpec) -> Graph:
    validate(spec)
    return _build(spec)


def _build(spec: FamilySpec) -> Graph:
    if isinstance(spec, Named):
        return _named(spec.tag, spec.params)
    if spec.tag == "comp":
        return complement(_build(spec.operands[0]))
    return reduce(_BINARY[spec.tag], [_build(s) for s in spec.operands])


# -- expression parser -----------------------------------------------------

_TOKEN = re.compile(r"\s*(?:(?P<num>\d+)|(?P<name>[A-Za-z_]+)|(?P<sym>[(),]))")


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    tokens = []
    pos = 0
    while pos < len(text):
        while pos < len(text) and text[pos].isspace():
            pos += 1
        if pos == len(text):
            break
        m = _TOKEN.match(text, pos)
        if not m:
            raise ParseError(f"unexpected character {text[pos]!r}", position=pos)
        kind = m.lastgroup
        tokens.append((kind, m.group(kind), m.start(kind)))
        pos = m.end()
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self):
        if self.i < len(self.tokens):
            return self.tokens[self.i]
        return ("eof", "", len(self.text))

    def expect(self, kind, value=None):
        tok = self.peek()
        if tok[0] != kind or (value is not None and tok[1] != value):
            want = value or kind
            got = tok[1] or "end of input"
            raise ParseError(f"expected {want!r}, got {got!r}", position=tok[2])
        self.i += 1
        return tok

    def expr(self) -> FamilySpec:
        _, name, pos = self.expect("name")
        self.expect("sym", "(")
        if name in OPERATORS:
            args = [self.expr()]
            while self.peek()[1] == ",":
                self.i += 1
                args.append(self.expr())
            self.expect("sym", ")")
            return Op(name, tuple(args))
        if name not in FAMILIES:
            raise ParseError(f"unknown tag {name!r}", position=pos)
        nums = [int(self.expect("num")[1])]
        while self.peek()[1] == ",":
            self.i += 1
            nums.append(int(self.expect("num")[1]))
        self.expect("sym", ")")
        return Named(name, tuple(nums))


def parse_family(text: str) -> FamilySpec:
    """Parse and validate a family expression."""
    p = _Parser(text)
    spec = p.expr()
    tok = p.peek()
    if tok[0] != "eof":
        raise ParseError(f"trailing input {tok[1]!r}", position=tok[2])
    validate(spec)
    return spec


def describe() -> list[tuple[str, str]]:
    rows = [(f"{tag}(...)", desc) for tag, (desc, _, _) in FAMILIES.items()]
    rows += [(f"{tag}(...)", desc) for tag, (desc, _) in OPERATORS.items()]
    return rows
