"""Object-shape expressions over named bases: 1, 0, ×, +, and exponentials.

These trees name the shape of an object independently of any instance.
The free syntactic category uses them directly as its objects; the
finite-set instance uses them to label derived objects and to resolve
the object names appearing in serialized tables.

Concrete syntax (used by ``format_type``/``parse_type``): base names are
identifiers, ``1`` and ``0`` are the terminal and initial objects, and
the binary forms are ``l×r``, ``l+r`` and ``target^base``. The binary
operators do not associate; nested occurrences are always
parenthesized, so formatting and parsing are mutually inverse.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Any, Mapping, Union


class TypeSyntaxError(ValueError):
    """Raised when a type expression cannot be parsed."""


@dataclass(frozen=True)
class Base:
    name: str


@dataclass(frozen=True)
class One:
    pass


@dataclass(frozen=True)
class Zero:
    pass


@dataclass(frozen=True)
class Prod:
    left: "TypeExpr"
    right: "TypeExpr"


@dataclass(frozen=True)
class Sum:
    left: "TypeExpr"
    right: "TypeExpr"


@dataclass(frozen=True)
class Exp:
    """Object of arrows ``base → target``, written ``target^base``."""

    base: "TypeExpr"
    target: "TypeExpr"


TypeExpr = Union[Base, One, Zero, Prod, Sum, Exp]

_IDENT = re.compile(r"[A-Za-z_][A-Za-z0-9_']*")


def base_names(t: TypeExpr) -> set[str]:
    if isinstance(t, Base):
        return {t.name}
    if isinstance(t, (One, Zero)):
        return set()
    if isinstance(t, (Prod, Sum)):
        return base_names(t.left) | base_names(t.right)
    if isinstance(t, Exp):
        return base_names(t.base) | base_names(t.target)
    raise TypeError(f"not a type expression: {t!r}")


def format_type(t: TypeExpr) -> str:
    if isinstance(t, Base):
        return t.name
    if isinstance(t, One):
        return "1"
    if isinstance(t, Zero):
        return "0"
    if isinstance(t, Prod):
        return f"{_atom(t.left)}×{_atom(t.right)}"
    if isinstance(t, Sum):
        return f"{_atom(t.left)}+{_atom(t.right)}"
    if isinstance(t, Exp):
        return f"{_atom(t.target)}^{_atom(t.base)}"
    raise TypeError(f"not a type expression: {t!r}")


def _atom(t: TypeExpr) -> str:
    text = format_type(t)
    if isinstance(t, (Prod, Sum, Exp)):
        return f"({text})"
    return text


def parse_type(text: str) -> TypeExpr:
    expr, rest = _parse(text.strip())
    if rest.strip():
        raise TypeSyntaxError(f"trailing input after type: {rest.strip()!r}")
    return expr


def _parse(text: str) -> tuple[TypeExpr, str]:
    left, rest = _parse_atom(text.lstrip())
    rest = rest.lstrip()
    if rest[:1] in {"×", "+", "^"}:
        op, rest = rest[0], rest[1:]
        right, rest = _parse_atom(rest.lstrip())
        rest = rest.lstrip()
        if rest[:1] in {"×", "+", "^"}:
            raise TypeSyntaxError(
                f"chained {rest[0]!r} needs parentheses near {rest!r}"
            )
        if op == "×":
            return Prod(left, right), rest
        if op == "+":
            return Sum(left, right), rest
        return Exp(base=right, target=left), rest
    return left, rest


def _parse_atom(text: str) -> tuple[TypeExpr, str]:
    if not text:
        raise TypeSyntaxError("unexpected end of type expression")
    if text[0] == "(":
        inner, rest = _parse(text[1:])
        rest = rest.lstrip()
        if not rest.startswith(")"):
            raise TypeSyntaxError(f"missing ')' near {rest!r}")
        return inner, rest[1:]
    if text[0] == "1":
        return One(), text[1:]
    if text[0] == "0":
        return Zero(), text[1:]
    m = _IDENT.match(text)
    if not m:
        raise TypeSyntaxError(f"cannot read a type at {text!r}")
    return Base(m.group()), text[m.end():]


def object_of(cat: Any, t: TypeExpr, bases: Mapping[str, Any]) -> Any:
    """Realize a type expression as an object of any instance category."""
    if isinstance(t, Base):
        try:
            return bases[t.name]
        except KeyError:
            raise KeyError(f"no object assigned to base {t.name!r}") from None
    if isinstance(t, One):
        return cat.terminal()
    if isinstance(t, Zero):
        return cat.initial()
    if isinstance(t, Prod):
        return cat.product(object_of(cat, t.left, bases), object_of(cat, t.right, bases))
    if isinstance(t, Sum):
        return cat.coproduct(object_of(cat, t.left, bases), object_of(cat, t.right, bases))
    if isinstance(t, Exp):
        return cat.exponential(object_of(cat, t.base, bases), object_of(cat, t.target, bases))
    raise TypeError(f"not a type expression: {t!r}")
