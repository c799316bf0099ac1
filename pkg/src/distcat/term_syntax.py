"""Concrete syntax for term arrows: a deterministic printer and the
matching reader.

A term document carries the domain and codomain types plus one
expression line::

    dom: (A×B)+(A×C)
    cod: A×(B+C)
    term: [⟨id_A∘π₁, inj₁{B+C}∘π₂⟩, ⟨id_A∘π₁, inj₂{B+C}∘π₂⟩]

Types flow top-down from the declared domain while codomains flow back
up, so parsing needs no unification; the constructors whose types are
not forced by their position (identities, injections, the empty-case
arrow and curried bodies) carry a ``{…}`` type annotation, which the
printer always emits. Parsing a printed term reproduces the original
tree exactly.
"""

from __future__ import annotations

from typing import Optional

from . import terms as tm
from .typeexpr import (
    Exp,
    Prod,
    Sum,
    TypeExpr,
    TypeSyntaxError,
    Zero,
    format_type,
    parse_type,
)


class TermSyntaxError(ValueError):
    """Raised when a term expression or document cannot be read."""


# ---------------------------------------------------------------------------
# Printing
# ---------------------------------------------------------------------------


def _id_suffix(t: TypeExpr) -> str:
    text = format_type(t)
    if isinstance(t, (Prod, Sum, Exp)):
        return "{" + text + "}"
    return text


def format_term(t: tm.TermArrow) -> str:
    if isinstance(t, tm.Id):
        return f"id_{_id_suffix(t.ob)}"
    if isinstance(t, tm.Comp):
        left = format_term(t.after)
        if isinstance(t.after, tm.Comp):
            left = f"({left})"
        return f"{left}∘{format_term(t.first)}"
    if isinstance(t, tm.Proj1):
        return "π₁"
    if isinstance(t, tm.Proj2):
        return "π₂"
    if isinstance(t, tm.Pair):
        return f"⟨{format_term(t.fst)}, {format_term(t.snd)}⟩"
    if isinstance(t, tm.Bang):
        return "!"
    if isinstance(t, tm.Inj1):
        return "inj₁{" + format_type(Sum(t.left, t.right)) + "}"
    if isinstance(t, tm.Inj2):
        return "inj₂{" + format_type(Sum(t.left, t.right)) + "}"
    if isinstance(t, tm.Copair):
        return f"[{format_term(t.onl)}, {format_term(t.onr)}]"
    if isinstance(t, tm.Absurd):
        return "absurd{" + format_type(t.ob) + "}"
    if isinstance(t, tm.Eval):
        return "eval"
    if isinstance(t, tm.Curry):
        body_dom = t.body.dom
        assert isinstance(body_dom, Prod)
        return "Λ{" + format_type(body_dom.right) + "}(" + format_term(t.body) + ")"
    raise TypeError(f"not a term arrow: {t!r}")


def format_term_document(t: tm.TermArrow) -> str:
    return (
        f"dom: {format_type(t.dom)}\n"
        f"cod: {format_type(t.cod)}\n"
        f"term: {format_term(t)}\n"
    )


# ---------------------------------------------------------------------------
# Reading: raw syntax first, then type-directed elaboration
# ---------------------------------------------------------------------------

_RAW_LEAVES = {"π₁": "proj1", "π₂": "proj2", "!": "bang", "eval": "eval"}


def _scan_braced(text: str, i: int) -> tuple[TypeExpr, int]:
    if text[i : i + 1] != "{":
        raise TermSyntaxError(f"expected '{{' at position {i}")
    end = text.find("}", i)
    if end < 0:
        raise TermSyntaxError("unclosed '{' in type annotation")
    try:
        return parse_type(text[i + 1 : end]), end + 1
    except TypeSyntaxError as exc:
        raise TermSyntaxError(str(exc)) from None


def _skip_ws(text: str, i: int) -> int:
    while i < len(text) and text[i].isspace():
        i += 1
    return i


def _parse_raw(text: str, i: int):
    """One composition chain; returns a raw node (tuple-tagged)."""
    left, i = _parse_raw_atom(text, i)
    i = _skip_ws(text, i)
    if text[i : i + 1] == "∘":
        rest, i = _parse_raw(text, i + 1)
        return ("comp", left, rest), i
    return left, i


def _parse_raw_atom(text: str, i: int):
    i = _skip_ws(text, i)
    if i >= len(text):
        raise TermSyntaxError("unexpected end of term")
    ch = text[i]
    if ch == "(":
        inner, i = _parse_raw(text, i + 1)
        i = _skip_ws(text, i)
        if text[i : i + 1] != ")":
            raise TermSyntaxError(f"missing ')' at position {i}")
        return inner, i + 1
    if ch == "⟨":
        fst, i = _parse_raw(text, i + 1)
        i = _skip_ws(text, i)
        if text[i : i + 1] != ",":
            raise TermSyntaxError("pairing needs two components")
        snd, i = _parse_raw(text, i + 1)
        i = _skip_ws(text, i)
        if text[i : i + 1] != "⟩":
            raise TermSyntaxError(f"missing '⟩' at position {i}")
        return ("pair", fst, snd), i + 1
    if ch == "[":
        onl, i = _parse_raw(text, i + 1)
        i = _skip_ws(text, i)
        if text[i : i + 1] != ",":
            raise TermSyntaxError("copairing needs two components")
        onr, i = _parse_raw(text, i + 1)
        i = _skip_ws(text, i)
        if text[i : i + 1] != "]":
            raise TermSyntaxError(f"missing ']' at position {i}")
        return ("copair", onl, onr), i + 1
    if ch == "Λ":
        ann, i = _scan_braced(text, i + 1)
        i = _skip_ws(text, i)
        if text[i : i + 1] != "(":
            raise TermSyntaxError("Λ needs a parenthesized body")
        body, i = _parse_raw(text, i + 1)
        i = _skip_ws(text, i)
        if text[i : i + 1] != ")":
            raise TermSyntaxError("unclosed Λ body")
        return ("curry", ann, body), i + 1
    for sym, tag in _RAW_LEAVES.items():
        if text.startswith(sym, i):
            return (tag,), i + len(sym)
    if text.startswith("inj₁", i):
        ann, i = _scan_braced(text, i + len("inj₁"))
        return ("inj1", ann), i
    if text.startswith("inj₂", i):
        ann, i = _scan_braced(text, i + len("inj₂"))
        return ("inj2", ann), i
    if text.startswith("absurd", i):
        ann, i = _scan_braced(text, i + len("absurd"))
        return ("absurd", ann), i
    if text.startswith("id_", i):
        i += len("id_")
        if text[i : i + 1] == "{":
            ann, i = _scan_braced(text, i)
            return ("id", ann), i
        j = i
        while j < len(text) and (text[j].isalnum() or text[j] in "_'"):
            j += 1
        if j == i:
            raise TermSyntaxError(f"id_ needs a type at position {i}")
        try:
            return ("id", parse_type(text[i:j])), j
        except TypeSyntaxError as exc:
            raise TermSyntaxError(str(exc)) from None
    raise TermSyntaxError(f"cannot read a term at position {i}: {text[i:i+12]!r}")


def _elaborate(raw, dom: TypeExpr) -> tm.TermArrow:
    tag = raw[0]
    if tag == "id":
        if raw[1] != dom:
            raise TermSyntaxError(
                f"id_{format_type(raw[1])} used at domain {format_type(dom)}"
            )
        return tm.Id(dom)
    if tag == "comp":
        first = _elaborate(raw[2], dom)
        after = _elaborate(raw[1], first.cod)
        return tm.Comp(after, first)
    if tag == "pair":
        return tm.Pair(_elaborate(raw[1], dom), _elaborate(raw[2], dom))
    if tag == "copair":
        if not isinstance(dom, Sum):
            raise TermSyntaxError(f"copairing needs a sum domain, got {format_type(dom)}")
        onl = _elaborate(raw[1], dom.left)
        onr = _elaborate(raw[2], dom.right)
        if onl.cod != onr.cod:
            raise TermSyntaxError("copairing components disagree on the codomain")
        return tm.Copair(onl, onr)
    if tag == "curry":
        body = _elaborate(raw[2], Prod(dom, raw[1]))
        return tm.Curry(body)
    if tag == "proj1":
        if not isinstance(dom, Prod):
            raise TermSyntaxError(f"π₁ needs a product domain, got {format_type(dom)}")
        return tm.Proj1(dom.left, dom.right)
    if tag == "proj2":
        if not isinstance(dom, Prod):
            raise TermSyntaxError(f"π₂ needs a product domain, got {format_type(dom)}")
        return tm.Proj2(dom.left, dom.right)
    if tag == "bang":
        return tm.Bang(dom)
    if tag == "eval":
        if (
            not isinstance(dom, Prod)
            or not isinstance(dom.left, Exp)
            or dom.left.base != dom.right
        ):
            raise TermSyntaxError(
                f"eval needs a domain of shape (t^b)×b, got {format_type(dom)}"
            )
        return tm.Eval(dom.left.base, dom.left.target)
    if tag == "inj1":
        ann = raw[1]
        if not isinstance(ann, Sum) or ann.left != dom:
            raise TermSyntaxError(
                f"inj₁ annotation {format_type(ann)} does not extend {format_type(dom)}"
            )
        return tm.Inj1(ann.left, ann.right)
    if tag == "inj2":
        ann = raw[1]
        if not isinstance(ann, Sum) or ann.right != dom:
            raise TermSyntaxError(
                f"inj₂ annotation {format_type(ann)} does not extend {format_type(dom)}"
            )
        return tm.Inj2(ann.left, ann.right)
    if tag == "absurd":
        if not isinstance(dom, Zero):
            raise TermSyntaxError("absurd needs domain 0")
        return tm.Absurd(raw[1])
    raise TermSyntaxError(f"unknown raw node {tag!r}")


def parse_term(text: str, dom: TypeExpr, cod: Optional[TypeExpr] = None) -> tm.TermArrow:
    """Read one term expression against a declared domain (and check the
    codomain when given)."""
    raw, i = _parse_raw(text, 0)
    if text[_skip_ws(text, i):]:
        raise TermSyntaxError(f"trailing input after term: {text[i:].strip()!r}")
    try:
        out = _elaborate(raw, dom)
    except tm.TermTypeError as exc:
        raise TermSyntaxError(str(exc)) from None
    if cod is not None and out.cod != cod:
        raise TermSyntaxError(
            f"term has codomain {format_type(out.cod)}, expected {format_type(cod)}"
        )
    return out


def parse_term_document(text: str) -> tm.TermArrow:
    """Read a dom/cod/term document, ignoring blank and ``#`` lines."""
    fields: dict[str, str] = {}
    for line in text.splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        key, sep, value = line.partition(":")
        if not sep:
            raise TermSyntaxError(f"expected 'key: value', got {line!r}")
        fields[key.strip()] = value.strip()
    missing = {"dom", "cod", "term"} - fields.keys()
    if missing:
        raise TermSyntaxError(f"term document is missing {sorted(missing)}")
    try:
        dom = parse_type(fields["dom"])
        cod = parse_type(fields["cod"])
    except TypeSyntaxError as exc:
        raise TermSyntaxError(str(exc)) from None
    return parse_term(fields["term"], dom, cod)
