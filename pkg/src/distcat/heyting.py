"""Finite Heyting algebras viewed as thin bicartesian closed categories.

An arrow a → b is the (unique) witness that a ≤ b; products are meets,
coproducts are joins, the terminal and initial objects are top and
bottom, and the exponential b^a is the relative pseudocomplement a⇒b.
Implication tables are always computed by brute force — the join of
every candidate — and then validated against the adjunction
``c ≤ (a⇒b)  iff  c∧a ≤ b``; a lattice that fails the adjunction is
rejected with a concrete failing triple before any categorical
construction can run, which is exactly what happens for the
non-distributive lattices M3 and N5.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Any, Iterable, Iterator, Mapping, NamedTuple, Sequence

from .core import (
    BicartesianClosedCategory,
    CategoryError,
    CompositionMismatch,
    NoSuchArrow,
    WorkspaceMismatch,
)


class LatticeError(CategoryError):
    """The input does not describe a finite lattice."""


class NotAPoset(LatticeError):
    """The input relation's closure is not antisymmetric."""


class NotHeyting(LatticeError):
    """The lattice fails the implication adjunction; carries a witness."""

    def __init__(self, witness: tuple[str, str, str]):
        super().__init__(
            "implication adjunction fails at (a={}, b={}, c={})".format(*witness)
        )
        self.witness = witness


@dataclass(frozen=True, eq=False)
class FiniteLattice:
    """A finite lattice with element labels and full operation tables.

    ``leq``, ``meet``, ``join`` and ``impl`` are dense tables indexed by
    element position; ``top`` and ``bottom`` are element indices.
    Identity is workspace identity: two structurally equal lattices are
    still distinct workspaces.
    """

    elements: tuple[str, ...]
    leq: tuple[tuple[bool, ...], ...]
    meet: tuple[tuple[int, ...], ...]
    join: tuple[tuple[int, ...], ...]
    impl: tuple[tuple[int, ...], ...]
    top: int
    bottom: int

    @property
    def size(self) -> int:
        return len(self.elements)

    def index_of(self, label: str) -> int:
        try:
            return self.elements.index(label)
        except ValueError:
            raise KeyError(f"no element labelled {label!r}") from None

    def __repr__(self) -> str:
        return f"FiniteLattice({self.size} elements)"


class HeytingValidation(NamedTuple):
    """Outcome of the adjunction check: ok, or a failing triple of labels."""

    ok: bool
    witness: tuple[str, str, str] | None


class LeqWitness(NamedTuple):
    """The unique arrow dom → cod of a thin category; payload-free."""

    dom: int
    cod: int
    lattice: FiniteLattice


def validate_heyting(candidate: FiniteLattice) -> HeytingValidation:
    """Check ``c ≤ (a⇒b)  iff  c∧a ≤ b`` over all element triples."""
    leq, meet, impl = candidate.leq, candidate.meet, candidate.impl
    for a in range(candidate.size):
        for b in range(candidate.size):
            target = impl[a][b]
            for c in range(candidate.size):
                if leq[c][target] != leq[meet[c][a]][b]:
                    labels = candidate.elements
                    return HeytingValidation(False, (labels[a], labels[b], labels[c]))
    return HeytingValidation(True, None)


# ---------------------------------------------------------------------------
# Builders
# ---------------------------------------------------------------------------


def _implication_table(
    leq: Sequence[Sequence[bool]], meet: Sequence[Sequence[int]], join: Sequence[Sequence[int]], bottom: int
) -> tuple[tuple[int, ...], ...]:
    # Fold-join of every candidate c with c∧a ≤ b; the adjunction check
    # afterwards is what detects non-Heyting inputs.
    n = len(leq)
    out = []
    for a in range(n):
        row = []
        for b in range(n):
            acc = bottom
            for c in range(n):
                if leq[meet[c][a]][b]:
                    acc = join[acc][c]
            row.append(acc)
        out.append(tuple(row))
    return tuple(out)


def lattice_from_leq(elements: Sequence[str], leq: Sequence[Sequence[bool]]) -> FiniteLattice:
    """Build the full table set from an order relation.

    Raises :class:`LatticeError` if the relation is not a partial order
    or some pair lacks a meet or join. The result still has to pass
    :func:`validate_heyting` before it can back a category.
    """
    n = len(elements)
    if len(set(elements)) != n:
        raise LatticeError("element labels are not unique")
    if len(leq) != n or any(len(row) != n for row in leq):
        raise LatticeError("leq must be a square matrix over the elements")
    rel = tuple(tuple(bool(v) for v in row) for row in leq)
    for i in range(n):
        if not rel[i][i]:
            raise LatticeError(f"order not reflexive at {elements[i]!r}")
        for j in range(n):
            if rel[i][j] and rel[j][i] and i != j:
                raise NotAPoset(f"cycle between {elements[i]!r} and {elements[j]!r}")
            for k in range(n):
                if rel[i][j] and rel[j][k] and not rel[i][k]:
                    raise LatticeError("order not transitive")

    def bound(i: int, j: int, below: bool) -> int:
        side = (lambda c, x: rel[c][x]) if below else (lambda c, x: rel[x][c])
        candidates = [c for c in range(n) if side(c, i) and side(c, j)]
        best = [
            c
            for c in candidates
            if all(side(o, c) for o in candidates)
        ]
        if len(best) != 1:
            kind = "meet" if below else "join"
            raise LatticeError(f"no {kind} for ({elements[i]!r}, {elements[j]!r})")
        return best[0]

    meet = tuple(tuple(bound(i, j, True) for j in range(n)) for i in range(n))
    join = tuple(tuple(bound(i, j, False) for j in range(n)) for i in range(n))
    tops = [i for i in range(n) if all(rel[j][i] for j in range(n))]
    bottoms = [i for i in range(n) if all(rel[i][j] for j in range(n))]
    if len(tops) != 1 or len(bottoms) != 1:
        raise LatticeError("lattice needs a unique top and bottom")
    impl = _implication_table(rel, meet, join, bottoms[0])
    return FiniteLattice(
        elements=tuple(elements),
        leq=rel,
        meet=meet,
        join=join,
        impl=impl,
        top=tops[0],
        bottom=bottoms[0],
    )


def build_divisor_lattice(n: int) -> FiniteLattice:
    """Divisors of ``n`` under divisibility: meet = gcd, join = lcm."""
    if n < 1:
        raise LatticeError("need n >= 1")
    divisors = [d for d in range(1, n + 1) if n % d == 0]
    index = {d: i for i, d in enumerate(divisors)}
    k = len(divisors)
    leq = tuple(tuple(divisors[j] % divisors[i] == 0 for j in range(k)) for i in range(k))
    meet = tuple(
        tuple(index[math.gcd(divisors[i], divisors[j])] for j in range(k)) for i in range(k)
    )
    join = tuple(
        tuple(index[math.lcm(divisors[i], divisors[j])] for j in range(k)) for i in range(k)
    )
    impl = _implication_table(leq, meet, join, 0)
    lattice = FiniteLattice(
        elements=tuple(str(d) for d in divisors),
        leq=leq,
        meet=meet,
        join=join,
        impl=impl,
        top=k - 1,
        bottom=0,
    )
    check = validate_heyting(lattice)
    if not check.ok:
        raise NotHeyting(check.witness)  # divisor lattices are distributive
    return lattice


def build_downset_lattice(
    points: Sequence[str], relation: Iterable[tuple[str, str]]
) -> FiniteLattice:
    """Down-closed subsets of a finite poset, ordered by inclusion.

    ``relation`` lists pairs (x, y) meaning x ≤ y; its reflexive and
    transitive closure must be antisymmetric, otherwise the input is not
    a poset and :class:`NotAPoset` is raised.
    """
    points = list(points)
    if len(set(points)) != len(points):
        raise LatticeError("poset points are not unique")
    n = len(points)
    idx = {p: i for i, p in enumerate(points)}
    below = [[i == j for j in range(n)] for i in range(n)]
    for x, y in relation:
        if x not in idx or y not in idx:
            raise LatticeError(f"relation mentions unknown point in ({x!r}, {y!r})")
        below[idx[x]][idx[y]] = True
    for k in range(n):
        for i in range(n):
            if below[i][k]:
                for j in range(n):
                    if below[k][j]:
                        below[i][j] = True
    for i in range(n):
        for j in range(n):
            if i != j and below[i][j] and below[j][i]:
                raise NotAPoset(f"cycle between {points[i]!r} and {points[j]!r}")

    downsets = []
    for mask in range(1 << n):
        closed = True
        for j in range(n):
            if mask >> j & 1:
                for i in range(n):
                    if below[i][j] and not (mask >> i & 1):
                        closed = False
                        break
            if not closed:
                break
        if closed:
            downsets.append(mask)
    downsets.sort()

    def label(mask: int) -> str:
        members = [points[i] for i in range(n) if mask >> i & 1]
        return "{" + ",".join(members) + "}"

    pos = {mask: i for i, mask in enumerate(downsets)}
    k = len(downsets)
    leq = tuple(
        tuple(downsets[i] & ~downsets[j] == 0 for j in range(k)) for i in range(k)
    )
    meet = tuple(
        tuple(pos[downsets[i] & downsets[j]] for j in range(k)) for i in range(k)
    )
    join = tuple(
        tuple(pos[downsets[i] | downsets[j]] for j in range(k)) for i in range(k)
    )
    impl = _implication_table(leq, meet, join, pos[0])
    lattice = FiniteLattice(
        elements=tuple(label(m) for m in downsets),
        leq=leq,
        meet=meet,
        join=join,
        impl=impl,
        top=pos[(1 << n) - 1],
        bottom=pos[0],
    )
    check = validate_heyting(lattice)
    if not check.ok:
        raise NotHeyting(check.witness)  # down-set lattices are distributive
    return lattice


def lattice_from_json(data: Mapping[str, Any]) -> FiniteLattice:
    """Read ``{"elements": […], "leq": [[…], …]}``; tables are derived."""
    try:
        elements = [str(e) for e in data["elements"]]
        leq = data["leq"]
    except KeyError as missing:
        raise LatticeError(f"missing key {missing} in lattice description") from None
    return lattice_from_leq(elements, leq)


def lattice_to_json(lattice: FiniteLattice) -> dict[str, Any]:
    """Echo a lattice with its derived tables included."""
    return {
        "elements": list(lattice.elements),
        "leq": [list(row) for row in lattice.leq],
        "meet": [list(row) for row in lattice.meet],
        "join": [list(row) for row in lattice.join],
        "impl": [list(row) for row in lattice.impl],
        "top": lattice.top,
        "bottom": lattice.bottom,
    }


# ---------------------------------------------------------------------------
# Poset enumeration (for sweeps)
# ---------------------------------------------------------------------------


def enumerate_posets(points: int) -> Iterator[tuple[tuple[str, ...], tuple[tuple[str, str], ...]]]:
    """All distinct labelled posets on exactly ``points`` points.

    Candidate relations are enumerated over the off-diagonal pairs,
    closed reflexively and transitively, deduplicated by closure, and
    kept only when antisymmetric; the order of results is deterministic.
    """
    names = tuple(f"p{i}" for i in range(points))
    pairs = [(i, j) for i in range(points) for j in range(points) if i != j]
    seen = set()
    for mask in range(1 << len(pairs)):
        rel = [[i == j for j in range(points)] for i in range(points)]
        for bit, (i, j) in enumerate(pairs):
            if mask >> bit & 1:
                rel[i][j] = True
        for k in range(points):
            for i in range(points):
                if rel[i][k]:
                    for j in range(points):
                        if rel[k][j]:
                            rel[i][j] = True
        if any(rel[i][j] and rel[j][i] for i, j in pairs):
            continue
        key = tuple(tuple(row) for row in rel)
        if key in seen:
            continue
        seen.add(key)
        yield names, tuple(
            (names[i], names[j]) for i, j in pairs if rel[i][j]
        )


# ---------------------------------------------------------------------------
# The category
# ---------------------------------------------------------------------------


class HeytingCategory(BicartesianClosedCategory[int, LeqWitness]):
    """A validated finite Heyting algebra as a thin category.

    Objects are element indices of the backing lattice. Every operation
    returns the unique order witness without search; asking for an
    arrow between unrelated elements raises :class:`NoSuchArrow`.
    """

    def __init__(self, lattice: FiniteLattice):
        check = validate_heyting(lattice)
        if not check.ok:
            raise NotHeyting(check.witness)
        self.lattice = lattice

    # -- internal helpers ------------------------------------------------
    def _check_object(self, x: int) -> None:
        if not isinstance(x, int) or not 0 <= x < self.lattice.size:
            raise WorkspaceMismatch(f"{x!r} is not an element index of this lattice")

    def _check_arrow(self, f: LeqWitness) -> None:
        if not isinstance(f, LeqWitness) or f.lattice is not self.lattice:
            raise WorkspaceMismatch("arrow belongs to a different lattice workspace")

    def _witness(self, x: int, y: int) -> LeqWitness:
        if not self.lattice.leq[x][y]:
            raise NoSuchArrow(
                f"{self.lattice.elements[x]} ≤ {self.lattice.elements[y]} does not hold"
            )
        return LeqWitness(x, y, self.lattice)

    def witness(self, x: int, y: int) -> LeqWitness:
        """The unique arrow x → y, or :class:`NoSuchArrow` if x ≰ y."""
        self._check_object(x)
        self._check_object(y)
        return self._witness(x, y)

    # -- signature --------------------------------------------------------
    def identity(self, x: int) -> LeqWitness:
        self._check_object(x)
        return self._witness(x, x)

    def compose(self, g: LeqWitness, f: LeqWitness) -> LeqWitness:
        self._check_arrow(f)
        self._check_arrow(g)
        if f.cod != g.dom:
            raise CompositionMismatch("cannot compose: ends do not meet")
        return self._witness(f.dom, g.cod)

    def arrows_equal(self, f: LeqWitness, g: LeqWitness) -> bool:
        self._check_arrow(f)
        self._check_arrow(g)
        return f.dom == g.dom and f.cod == g.cod

    def terminal(self) -> int:
        return self.lattice.top

    def bang(self, x: int) -> LeqWitness:
        self._check_object(x)
        return self._witness(x, self.lattice.top)

    def initial(self) -> int:
        return self.lattice.bottom

    def absurd(self, x: int) -> LeqWitness:
        self._check_object(x)
        return self._witness(self.lattice.bottom, x)

    def product(self, x: int, y: int) -> int:
        self._check_object(x)
        self._check_object(y)
        return self.lattice.meet[x][y]

    def proj1(self, x: int, y: int) -> LeqWitness:
        return self._witness(self.product(x, y), x)

    def proj2(self, x: int, y: int) -> LeqWitness:
        return self._witness(self.product(x, y), y)

    def pair(self, f: LeqWitness, g: LeqWitness) -> LeqWitness:
        self._check_arrow(f)
        self._check_arrow(g)
        if f.dom != g.dom:
            raise CompositionMismatch("pairing needs a shared domain")
        return self._witness(f.dom, self.lattice.meet[f.cod][g.cod])

    def coproduct(self, x: int, y: int) -> int:
        self._check_object(x)
        self._check_object(y)
        return self.lattice.join[x][y]

    def inj1(self, x: int, y: int) -> LeqWitness:
        return self._witness(x, self.coproduct(x, y))

    def inj2(self, x: int, y: int) -> LeqWitness:
        return self._witness(y, self.coproduct(x, y))

    def copair(self, f: LeqWitness, g: LeqWitness) -> LeqWitness:
        self._check_arrow(f)
        self._check_arrow(g)
        if f.cod != g.cod:
            raise CompositionMismatch("copairing needs a shared codomain")
        return self._witness(self.lattice.join[f.dom][g.dom], f.cod)

    def exponential(self, base: int, target: int) -> int:
        self._check_object(base)
        self._check_object(target)
        return self.lattice.impl[base][target]

    def eval(self, base: int, target: int) -> LeqWitness:
        return self._witness(
            self.lattice.meet[self.exponential(base, target)][base], target
        )

    def curry(self, f: LeqWitness, left: int, right: int) -> LeqWitness:
        self._check_arrow(f)
        if f.dom != self.product(left, right):
            raise CompositionMismatch(
                "domain is not the meet of the given factors"
            )
        return self._witness(left, self.lattice.impl[right][f.cod])

    def object_label(self, x: int) -> str:
        self._check_object(x)
        return self.lattice.elements[x]
