"""Finite sets and total functions, the fully decidable oracle instance.

Objects are finite sets with ordered element labels; arrows are index
tables. Derived objects use fixed lexicographic encodings, stable across
versions (``ENCODINGS_VERSION``):

* product: the pair ``(i, j)`` in ``l×r`` has index ``i·|r| + j``;
* coproduct: left element ``i`` keeps index ``i``, right element ``j``
  gets ``|l| + j``;
* exponential ``t^b``: a table ``d₀…d₍|b|−1₎`` of target indices is the
  big-endian base-``|t|`` numeral ``((d₀·|t| + d₁)·|t| + …)``, with the
  empty table (``|b| = 0``) numbered 0, so ``|t^b| = |t|^|b|`` and
  ``0^0 = 1``.

Every brute-force oracle in this module computes with these encodings
by direct index arithmetic and never goes through the categorical
combinators it is meant to check.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from functools import cached_property
from typing import Any, Iterator, Mapping

from . import typeexpr
from .core import (
    BicartesianClosedCategory,
    CategoryError,
    CompositionMismatch,
    NoSuchArrow,
    NotACoproduct,
    NotAnExponential,
    NotAProduct,
)

ENCODINGS_VERSION = "lex/1"

DEFAULT_ENUMERATION_CAP = 10**6


class EnumerationCapExceeded(CategoryError):
    """An arrow-space enumeration would exceed the configured cap."""

    def __init__(self, count: int, cap: int):
        super().__init__(f"arrow space has {count} tables, more than the cap of {cap}")
        self.count = count
        self.cap = cap


# ---------------------------------------------------------------------------
# Encodings
# ---------------------------------------------------------------------------


def pair_index(i: int, j: int, right_size: int) -> int:
    """Index of the pair ``(i, j)`` in a product with ``|r| = right_size``."""
    return i * right_size + j


def unpair_index(idx: int, right_size: int) -> tuple[int, int]:
    return divmod(idx, right_size)


def fun_index(digits: tuple[int, ...], target_size: int) -> int:
    """Numeral of a function table, read big-endian over the base set."""
    idx = 0
    for d in digits:
        idx = idx * target_size + d
    return idx


def fun_digits(idx: int, target_size: int, length: int) -> tuple[int, ...]:
    digits = [0] * length
    for pos in range(length - 1, -1, -1):
        idx, digits[pos] = divmod(idx, target_size)
    return tuple(digits)


# ---------------------------------------------------------------------------
# Objects and arrows
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class FinSetObj:
    """A finite set: a size plus an origin telling how it was formed.

    The origin is one of ``("base", name, labels)``, ``("terminal",)``,
    ``("initial",)``, ``("product", l, r)``, ``("coproduct", l, r)`` or
    ``("exponential", base, target)``; equality and hashing are
    structural over it.
    """

    size: int
    origin: tuple

    @cached_property
    def labels(self) -> tuple[str, ...]:
        kind = self.origin[0]
        if kind == "base":
            return self.origin[2]
        if kind == "terminal":
            return ("*",)
        if kind == "initial":
            return ()
        if kind == "product":
            l, r = self.origin[1], self.origin[2]
            return tuple(
                f"({a},{b})" for a in l.labels for b in r.labels
            )
        if kind == "coproduct":
            l, r = self.origin[1], self.origin[2]
            return tuple(f"inl {a}" for a in l.labels) + tuple(
                f"inr {b}" for b in r.labels
            )
        if kind == "exponential":
            base, target = self.origin[1], self.origin[2]
            return tuple(
                "[" + ",".join(str(d) for d in fun_digits(i, target.size, base.size)) + "]"
                for i in range(self.size)
            )
        raise ValueError(f"unknown origin {kind!r}")

    def __repr__(self) -> str:
        return f"FinSetObj({object_label(self)}, size={self.size})"


@dataclass(frozen=True)
class FunTable:
    """A total function between finite sets as an index table."""

    dom: FinSetObj
    cod: FinSetObj
    map: tuple[int, ...]

    def __post_init__(self):
        if len(self.map) != self.dom.size:
            raise CategoryError(
                f"table has {len(self.map)} entries for a domain of size {self.dom.size}"
            )
        if self.map and (min(self.map) < 0 or max(self.map) >= self.cod.size):
            raise CategoryError("table entry outside the codomain")

    def __call__(self, i: int) -> int:
        return self.map[i]

    def __repr__(self) -> str:
        return f"FunTable({object_label(self.dom)} → {object_label(self.cod)}, {list(self.map)})"


def make_set(name: str, size: int | None = None, labels: tuple[str, ...] | None = None) -> FinSetObj:
    """A named base set, with default labels ``e0 … e(n-1)``."""
    if labels is None:
        if size is None:
            raise ValueError("give a size or explicit labels")
        labels = tuple(f"e{i}" for i in range(size))
    else:
        labels = tuple(labels)
        if size is not None and size != len(labels):
            raise ValueError("size disagrees with the number of labels")
    if len(set(labels)) != len(labels):
        raise ValueError(f"labels of {name!r} are not unique")
    return FinSetObj(size=len(labels), origin=("base", name, labels))


def object_type(x: FinSetObj) -> typeexpr.TypeExpr:
    """The shape of an object as a type expression over base-set names."""
    kind = x.origin[0]
    if kind == "base":
        return typeexpr.Base(x.origin[1])
    if kind == "terminal":
        return typeexpr.One()
    if kind == "initial":
        return typeexpr.Zero()
    if kind == "product":
        return typeexpr.Prod(object_type(x.origin[1]), object_type(x.origin[2]))
    if kind == "coproduct":
        return typeexpr.Sum(object_type(x.origin[1]), object_type(x.origin[2]))
    if kind == "exponential":
        return typeexpr.Exp(
            base=object_type(x.origin[1]), target=object_type(x.origin[2])
        )
    raise ValueError(f"unknown origin {kind!r}")


def object_label(x: FinSetObj) -> str:
    return typeexpr.format_type(object_type(x))


# ---------------------------------------------------------------------------
# The category
# ---------------------------------------------------------------------------


class FinSet(BicartesianClosedCategory[FinSetObj, FunTable]):
    """Finite sets and total functions with the lexicographic encodings."""

    def identity(self, x: FinSetObj) -> FunTable:
        return FunTable(x, x, tuple(range(x.size)))

    def compose(self, g: FunTable, f: FunTable) -> FunTable:
        if f.cod != g.dom:
            raise CompositionMismatch(
                f"cannot compose: {object_label(f.cod)} != {object_label(g.dom)}"
            )
        return FunTable(f.dom, g.cod, tuple(map(g.map.__getitem__, f.map)))

    def arrows_equal(self, f: FunTable, g: FunTable) -> bool:
        return f.dom == g.dom and f.cod == g.cod and f.map == g.map

    def terminal(self) -> FinSetObj:
        return FinSetObj(1, ("terminal",))

    def bang(self, x: FinSetObj) -> FunTable:
        return FunTable(x, self.terminal(), (0,) * x.size)

    def initial(self) -> FinSetObj:
        return FinSetObj(0, ("initial",))

    def absurd(self, x: FinSetObj) -> FunTable:
        return FunTable(self.initial(), x, ())

    def product(self, x: FinSetObj, y: FinSetObj) -> FinSetObj:
        return FinSetObj(x.size * y.size, ("product", x, y))

    def proj1(self, x: FinSetObj, y: FinSetObj) -> FunTable:
        dom = self.product(x, y)
        entries: list[int] = []
        for i in range(x.size):
            entries.extend([i] * y.size)
        return FunTable(dom, x, tuple(entries))

    def proj2(self, x: FinSetObj, y: FinSetObj) -> FunTable:
        dom = self.product(x, y)
        return FunTable(dom, y, tuple(range(y.size)) * x.size)

    def pair(self, f: FunTable, g: FunTable) -> FunTable:
        if f.dom != g.dom:
            raise CompositionMismatch("pairing needs a shared domain")
        cod = self.product(f.cod, g.cod)
        width = g.cod.size
        return FunTable(
            f.dom, cod, tuple(fv * width + gv for fv, gv in zip(f.map, g.map))
        )

    def coproduct(self, x: FinSetObj, y: FinSetObj) -> FinSetObj:
        return FinSetObj(x.size + y.size, ("coproduct", x, y))

    def inj1(self, x: FinSetObj, y: FinSetObj) -> FunTable:
        return FunTable(x, self.coproduct(x, y), tuple(range(x.size)))

    def inj2(self, x: FinSetObj, y: FinSetObj) -> FunTable:
        return FunTable(y, self.coproduct(x, y), tuple(x.size + j for j in range(y.size)))

    def copair(self, f: FunTable, g: FunTable) -> FunTable:
        if f.cod != g.cod:
            raise CompositionMismatch("copairing needs a shared codomain")
        dom = self.coproduct(f.dom, g.dom)
        return FunTable(dom, f.cod, f.map + g.map)

    def exponential(self, base: FinSetObj, target: FinSetObj) -> FinSetObj:
        return FinSetObj(target.size**base.size, ("exponential", base, target))

    def eval(self, base: FinSetObj, target: FinSetObj) -> FunTable:
        exp = self.exponential(base, target)
        dom = self.product(exp, base)
        entries = []
        for f_idx in range(exp.size):
            entries.extend(fun_digits(f_idx, target.size, base.size))
        return FunTable(dom, target, tuple(entries))

    def curry(self, f: FunTable, left: FinSetObj, right: FinSetObj) -> FunTable:
        if f.dom != self.product(left, right):
            raise NotAProduct(
                f"domain {object_label(f.dom)} is not the product of the given factors"
            )
        cod = self.exponential(right, f.cod)
        rows = []
        for a in range(left.size):
            row = f.map[a * right.size : (a + 1) * right.size]
            rows.append(fun_index(tuple(row), f.cod.size))
        return FunTable(left, cod, tuple(rows))

    def product_factors(self, x: FinSetObj) -> tuple[FinSetObj, FinSetObj]:
        if x.origin[0] != "product":
            raise NotAProduct(f"{object_label(x)} is not a registered product")
        return x.origin[1], x.origin[2]

    def coproduct_summands(self, x: FinSetObj) -> tuple[FinSetObj, FinSetObj]:
        if x.origin[0] != "coproduct":
            raise NotACoproduct(f"{object_label(x)} is not a registered coproduct")
        return x.origin[1], x.origin[2]

    def exponential_parts(self, x: FinSetObj) -> tuple[FinSetObj, FinSetObj]:
        if x.origin[0] != "exponential":
            raise NotAnExponential(f"{object_label(x)} is not a registered exponential")
        return x.origin[1], x.origin[2]

    def object_label(self, x: FinSetObj) -> str:
        return object_label(x)


# ---------------------------------------------------------------------------
# Oracles and arrow-space utilities
# ---------------------------------------------------------------------------


def oracle_distrib(cat: FinSet, a: FinSetObj, b: FinSetObj, c: FinSetObj) -> FunTable:
    """The retagging bijection (a×b)+(a×c) → a×(b+c) by index arithmetic."""
    dom = cat.coproduct(cat.product(a, b), cat.product(a, c))
    cod = cat.product(a, cat.coproduct(b, c))
    bc = b.size + c.size
    entries = []
    for i in range(a.size * b.size):
        ai, bi = unpair_index(i, b.size)
        entries.append(pair_index(ai, bi, bc))
    for i in range(a.size * c.size):
        ai, ci = unpair_index(i, c.size)
        entries.append(pair_index(ai, b.size + ci, bc))
    return FunTable(dom, cod, tuple(entries))


def oracle_partial_apply(cat: FinSet, a: FinSetObj, b: FinSetObj, c: FinSetObj) -> FunTable:
    """a^(b×c) × c → a^b as a table, by decoding and re-encoding numerals:
    (g, z) goes to the code of y ↦ g(y, z)."""
    bc = cat.product(b, c)
    e = cat.exponential(bc, a)
    dom = cat.product(e, c)
    cod = cat.exponential(b, a)
    entries = []
    for g_idx in range(e.size):
        g = fun_digits(g_idx, a.size, bc.size)
        for z in range(c.size):
            row = tuple(g[pair_index(y, z, c.size)] for y in range(b.size))
            entries.append(fun_index(row, a.size))
    return FunTable(dom, cod, tuple(entries))


def oracle_exp_curry(cat: FinSet, a: FinSetObj, b: FinSetObj, c: FinSetObj) -> FunTable:
    """a^(b×c) → (a^b)^c as a table: g ↦ the code of z ↦ (y ↦ g(y, z))."""
    bc = cat.product(b, c)
    dom = cat.exponential(bc, a)
    ab = cat.exponential(b, a)
    cod = cat.exponential(c, ab)
    entries = []
    for g_idx in range(dom.size):
        g = fun_digits(g_idx, a.size, bc.size)
        outer = tuple(
            fun_index(tuple(g[pair_index(y, z, c.size)] for y in range(b.size)), a.size)
            for z in range(c.size)
        )
        entries.append(fun_index(outer, ab.size))
    return FunTable(dom, cod, tuple(entries))


def oracle_exp_uncurry(cat: FinSet, a: FinSetObj, b: FinSetObj, c: FinSetObj) -> FunTable:
    """(a^b)^c → a^(b×c) as a table: h ↦ the code of (y, z) ↦ h(z)(y)."""
    ab = cat.exponential(b, a)
    dom = cat.exponential(c, ab)
    bc = cat.product(b, c)
    cod = cat.exponential(bc, a)
    entries = []
    for h_idx in range(dom.size):
        outer = fun_digits(h_idx, ab.size, c.size)
        inner = [fun_digits(code, a.size, b.size) for code in outer]
        flat = tuple(
            inner[z][y] for y in range(b.size) for z in range(c.size)
        )
        entries.append(fun_index(flat, a.size))
    return FunTable(dom, cod, tuple(entries))


def oracle_mediator(
    cat: FinSet,
    a: FinSetObj,
    b: FinSetObj,
    c: FinSetObj,
    q1: FunTable,
    q2: FunTable,
) -> FunTable:
    """The unique table a×(b+c) → d commuting with both legs of a cocone.

    Every element ``(x, s)`` of the domain is hit by exactly one of
    ``id×inj₁`` and ``id×inj₂``, so the commuting conditions force every
    entry; this computes that forced table directly by index arithmetic.
    """
    if q1.cod != q2.cod:
        raise CompositionMismatch("cocone legs must share a codomain")
    dom = cat.product(a, cat.coproduct(b, c))
    bc = b.size + c.size
    entries = []
    for i in range(dom.size):
        x, s = unpair_index(i, bc)
        if s < b.size:
            entries.append(q1.map[pair_index(x, s, b.size)])
        else:
            entries.append(q2.map[pair_index(x, s - b.size, c.size)])
    return FunTable(dom, q1.cod, tuple(entries))


def enumerate_arrows(
    x: FinSetObj, y: FinSetObj, cap: int = DEFAULT_ENUMERATION_CAP
) -> Iterator[FunTable]:
    """All ``|y|^|x|`` tables x → y, once each, in numeral order."""
    count = y.size**x.size
    if count > cap:
        raise EnumerationCapExceeded(count, cap)
    for idx in range(count):
        yield FunTable(x, y, fun_digits(idx, y.size, x.size))


def random_arrow(x: FinSetObj, y: FinSetObj, seed: int) -> FunTable:
    """A uniformly random table x → y, deterministic in the seed."""
    if y.size == 0 and x.size > 0:
        raise NoSuchArrow(f"no arrows {object_label(x)} → {object_label(y)}")
    rng = random.Random(seed)
    return FunTable(x, y, tuple(rng.randrange(y.size) for _ in range(x.size)))


# ---------------------------------------------------------------------------
# JSON interchange
# ---------------------------------------------------------------------------


def sets_from_json(data: Mapping[str, Any]) -> dict[str, FinSetObj]:
    """Read ``{"sets": {"A": ["a0", "a1"], …}}`` into named base sets."""
    try:
        declared = data["sets"]
    except KeyError:
        raise ValueError('missing top-level "sets" key') from None
    out = {}
    for name, labels in declared.items():
        out[name] = make_set(name, labels=tuple(str(v) for v in labels))
    return out


def table_to_json(t: FunTable) -> dict[str, Any]:
    return {
        "dom": object_label(t.dom),
        "cod": object_label(t.cod),
        "map": list(t.map),
    }


def table_from_json(data: Mapping[str, Any], sets: Mapping[str, FinSetObj]) -> FunTable:
    """Read a serialized table, resolving object names over ``sets``."""
    cat = FinSet()
    dom = typeexpr.object_of(cat, typeexpr.parse_type(data["dom"]), sets)
    cod = typeexpr.object_of(cat, typeexpr.parse_type(data["cod"]), sets)
    return FunTable(dom, cod, tuple(int(v) for v in data["map"]))
