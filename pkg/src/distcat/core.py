"""Kernel for bicartesian closed categories with chosen structure.

A category instance doubles as a workspace: it constructs objects and
arrows, owns every value it hands out, and decides arrow equality. An
arrow is any instance-specific record exposing ``dom`` and ``cod``; the
kernel never inspects an arrow beyond those two ends, so each instance
is free to pick its own payload (index tables, order witnesses, syntax
trees).

Everything here is immutable after construction and every operation is
pure, so values can be shared freely between concurrent test workers.
"""

from __future__ import annotations

import functools
from abc import ABC, abstractmethod
from dataclasses import dataclass, field
from typing import Any, Generic, Protocol, TypeVar


class CategoryError(Exception):
    """Base class for structural errors raised by category operations."""


class CompositionMismatch(CategoryError):
    """Composite requested for arrows whose ends do not meet."""


class WorkspaceMismatch(CategoryError):
    """Values from two different workspaces were mixed in one operation."""


class NotAProduct(CategoryError):
    """The object does not record a product decomposition."""


class NotACoproduct(CategoryError):
    """The object does not record a coproduct decomposition."""


class NotAnExponential(CategoryError):
    """The object does not record an exponential decomposition."""


class NoSuchArrow(CategoryError):
    """The requested hom-set is empty."""


class ArrowLike(Protocol):
    @property
    def dom(self) -> Any: ...

    @property
    def cod(self) -> Any: ...


Ob = TypeVar("Ob")
Ar = TypeVar("Ar", bound=ArrowLike)


class BicartesianClosedCategory(ABC, Generic[Ob, Ar]):
    """Operation set an instance must provide: finite products, finite
    coproducts and exponentials, all with chosen (not merely existing)
    structure.

    Conventions, fixed once for every instance:

    * ``compose(g, f)`` is "g after f" and requires ``cod(f) == dom(g)``.
    * ``exponential(base, target)`` is the object of arrows base → target.
    * ``eval(base, target)`` has type ``exponential(base, target) × base →
      target``; currying happens over the *second* factor, so ``curry(f,
      left, right)`` turns ``f : left × right → t`` into ``left →
      exponential(right, t)``.
    """

    # -- identities, composition, equality ------------------------------
    @abstractmethod
    def identity(self, x: Ob) -> Ar: ...

    @abstractmethod
    def compose(self, g: Ar, f: Ar) -> Ar: ...

    @abstractmethod
    def arrows_equal(self, f: Ar, g: Ar) -> bool:
        """Instance-provided decision procedure for arrow equality.

        Implementations must guarantee that equal arrows share dom and cod.
        """

    # -- terminal and initial objects ------------------------------------
    @abstractmethod
    def terminal(self) -> Ob: ...

    @abstractmethod
    def bang(self, x: Ob) -> Ar:
        """The unique arrow x → 1."""

    @abstractmethod
    def initial(self) -> Ob: ...

    @abstractmethod
    def absurd(self, x: Ob) -> Ar:
        """The unique arrow 0 → x."""

    # -- products ---------------------------------------------------------
    @abstractmethod
    def product(self, x: Ob, y: Ob) -> Ob: ...

    @abstractmethod
    def proj1(self, x: Ob, y: Ob) -> Ar: ...

    @abstractmethod
    def proj2(self, x: Ob, y: Ob) -> Ar: ...

    @abstractmethod
    def pair(self, f: Ar, g: Ar) -> Ar:
        """⟨f, g⟩ : dom(f) → cod(f) × cod(g), for f, g with equal domains."""

    # -- coproducts -------------------------------------------------------
    @abstractmethod
    def coproduct(self, x: Ob, y: Ob) -> Ob: ...

    @abstractmethod
    def inj1(self, x: Ob, y: Ob) -> Ar: ...

    @abstractmethod
    def inj2(self, x: Ob, y: Ob) -> Ar: ...

    @abstractmethod
    def copair(self, f: Ar, g: Ar) -> Ar:
        """[f, g] : dom(f) + dom(g) → cod(f), for f, g with equal codomains."""

    # -- exponentials -----------------------------------------------------
    @abstractmethod
    def exponential(self, base: Ob, target: Ob) -> Ob: ...

    @abstractmethod
    def eval(self, base: Ob, target: Ob) -> Ar: ...

    @abstractmethod
    def curry(self, f: Ar, left: Ob, right: Ob) -> Ar:
        """Exponential transpose of ``f : left × right → t`` over the
        second factor. The factorisation is explicit because objects of a
        thin instance do not determine it."""

    # -- structure recovery (optional per instance) -----------------------
    def product_factors(self, x: Ob) -> tuple[Ob, Ob]:
        raise NotAProduct(f"{self.object_label(x)} does not record product factors")

    def coproduct_summands(self, x: Ob) -> tuple[Ob, Ob]:
        raise NotACoproduct(f"{self.object_label(x)} does not record coproduct summands")

    def exponential_parts(self, x: Ob) -> tuple[Ob, Ob]:
        """Return ``(base, target)`` for an exponential object."""
        raise NotAnExponential(f"{self.object_label(x)} does not record exponential parts")

    def object_label(self, x: Ob) -> str:
        return str(x)


@dataclass(frozen=True)
class Iso(Generic[Ar]):
    """A forward/backward arrow pair whose two composites are identities."""

    fwd: Ar
    bwd: Ar


def verify_iso(cat: BicartesianClosedCategory[Ob, Ar], iso: Iso[Ar]) -> bool:
    """Check the ends match and both round trips are identities."""
    if iso.fwd.dom != iso.bwd.cod or iso.fwd.cod != iso.bwd.dom:
        return False
    back = cat.compose(iso.bwd, iso.fwd)
    forth = cat.compose(iso.fwd, iso.bwd)
    return cat.arrows_equal(back, cat.identity(iso.fwd.dom)) and cat.arrows_equal(
        forth, cat.identity(iso.bwd.dom)
    )


@dataclass
class TraceStep(Generic[Ar]):
    label: str
    arrow: Ar


@dataclass
class ConstructionTrace(Generic[Ar]):
    """Ordered log of the named intermediate arrows of a construction.

    Consumers (the dot emitter, reports) read it as (label, dom, cod)
    triples; the arrows themselves stay available for re-checking.
    """

    steps: list[TraceStep[Ar]] = field(default_factory=list)

    def record(self, label: str, arrow: Ar) -> Ar:
        self.steps.append(TraceStep(label, arrow))
        return arrow

    def as_tuples(self, cat: BicartesianClosedCategory[Ob, Ar]) -> list[tuple[str, str, str]]:
        return [
            (s.label, cat.object_label(s.arrow.dom), cat.object_label(s.arrow.cod))
            for s in self.steps
        ]


def compose_chain(cat: BicartesianClosedCategory[Ob, Ar], *arrows: Ar) -> Ar:
    """Compose ``arrows[0] ∘ arrows[1] ∘ … ∘ arrows[-1]`` (outermost first)."""
    if not arrows:
        raise ValueError("compose_chain needs at least one arrow")
    return functools.reduce(cat.compose, arrows)


# ---------------------------------------------------------------------------
# Structural arrows. Concrete instances encode iterated products in
# different ways, so reassociations and unit insertions are real arrows
# here, never silent relabellings.
# ---------------------------------------------------------------------------


def product_map(cat: BicartesianClosedCategory[Ob, Ar], f: Ar, g: Ar) -> Ar:
    """f × g : dom(f)×dom(g) → cod(f)×cod(g), as ⟨f∘π₁, g∘π₂⟩."""
    p1 = cat.proj1(f.dom, g.dom)
    p2 = cat.proj2(f.dom, g.dom)
    return cat.pair(cat.compose(f, p1), cat.compose(g, p2))


def swap(cat: BicartesianClosedCategory[Ob, Ar], x: Ob, y: Ob) -> Ar:
    """The braiding x×y → y×x, as ⟨π₂, π₁⟩."""
    return cat.pair(cat.proj2(x, y), cat.proj1(x, y))


def assoc_right(cat: BicartesianClosedCategory[Ob, Ar], x: Ob, y: Ob, z: Ob) -> Ar:
    """(x×y)×z → x×(y×z)."""
    xy = cat.product(x, y)
    outer1 = cat.proj1(xy, z)
    outer2 = cat.proj2(xy, z)
    return cat.pair(
        cat.compose(cat.proj1(x, y), outer1),
        cat.pair(cat.compose(cat.proj2(x, y), outer1), outer2),
    )


def assoc_left(cat: BicartesianClosedCategory[Ob, Ar], x: Ob, y: Ob, z: Ob) -> Ar:
    """x×(y×z) → (x×y)×z."""
    yz = cat.product(y, z)
    outer1 = cat.proj1(x, yz)
    outer2 = cat.proj2(x, yz)
    return cat.pair(
        cat.pair(outer1, cat.compose(cat.proj1(y, z), outer2)),
        cat.compose(cat.proj2(y, z), outer2),
    )


def unit_iso(cat: BicartesianClosedCategory[Ob, Ar], a: Ob) -> Iso[Ar]:
    """a ≅ 1×a with forward ⟨!, id⟩ and backward π₂."""
    one = cat.terminal()
    fwd = cat.pair(cat.bang(a), cat.identity(a))
    bwd = cat.proj2(one, a)
    return Iso(fwd=fwd, bwd=bwd)
