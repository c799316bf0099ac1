"""The free bicartesian closed category over named base types.

Arrows are formal composites (syntax trees) whose dom/cod types are
computed and checked at construction. Arrow equality is decided
semantically, by interpreting both sides into finite sets under a batch
of environments: a mismatch yields a distinguishing environment, and
agreement is reported as "indistinguishable under trials" — finite
interpretations are sound for distinctness, and no claim of syntactic
completeness is made.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Mapping, Optional, Sequence, Union

from . import finset as fs
from .core import BicartesianClosedCategory, CategoryError, NotAnExponential, NotAProduct
from .typeexpr import Base, Exp, One, Prod, Sum, TypeExpr, Zero, base_names, format_type


class TermTypeError(CategoryError):
    """A term constructor was applied to arrows of the wrong types."""


def _ends(node, dom: TypeExpr, cod: TypeExpr) -> None:
    object.__setattr__(node, "dom", dom)
    object.__setattr__(node, "cod", cod)


@dataclass(frozen=True)
class Id:
    ob: TypeExpr
    dom: TypeExpr = field(init=False, compare=False, repr=False)
    cod: TypeExpr = field(init=False, compare=False, repr=False)

    def __post_init__(self):
        _ends(self, self.ob, self.ob)


@dataclass(frozen=True)
class Comp:
    after: "TermArrow"
    first: "TermArrow"
    dom: TypeExpr = field(init=False, compare=False, repr=False)
    cod: TypeExpr = field(init=False, compare=False, repr=False)

    def __post_init__(self):
        if self.first.cod != self.after.dom:
            raise TermTypeError(
                f"cannot compose: {format_type(self.first.cod)} != {format_type(self.after.dom)}"
            )
        _ends(self, self.first.dom, self.after.cod)


@dataclass(frozen=True)
class Proj1:
    left: TypeExpr
    right: TypeExpr
    dom: TypeExpr = field(init=False, compare=False, repr=False)
    cod: TypeExpr = field(init=False, compare=False, repr=False)

    def __post_init__(self):
        _ends(self, Prod(self.left, self.right), self.left)


@dataclass(frozen=True)
class Proj2:
    left: TypeExpr
    right: TypeExpr
    dom: TypeExpr = field(init=False, compare=False, repr=False)
    cod: TypeExpr = field(init=False, compare=False, repr=False)

    def __post_init__(self):
        _ends(self, Prod(self.left, self.right), self.right)


@dataclass(frozen=True)
class Pair:
    fst: "TermArrow"
    snd: "TermArrow"
    dom: TypeExpr = field(init=False, compare=False, repr=False)
    cod: TypeExpr = field(init=False, compare=False, repr=False)

    def __post_init__(self):
        if self.fst.dom != self.snd.dom:
            raise TermTypeError("pairing needs a shared domain")
        _ends(self, self.fst.dom, Prod(self.fst.cod, self.snd.cod))


@dataclass(frozen=True)
class Bang:
    ob: TypeExpr
    dom: TypeExpr = field(init=False, compare=False, repr=False)
    cod: TypeExpr = field(init=False, compare=False, repr=False)

    def __post_init__(self):
        _ends(self, self.ob, One())


@dataclass(frozen=True)
class Inj1:
    left: TypeExpr
    right: TypeExpr
    dom: TypeExpr = field(init=False, compare=False, repr=False)
    cod: TypeExpr = field(init=False, compare=False, repr=False)

    def __post_init__(self):
        _ends(self, self.left, Sum(self.left, self.right))


@dataclass(frozen=True)
class Inj2:
    left: TypeExpr
    right: TypeExpr
    dom: TypeExpr = field(init=False, compare=False, repr=False)
    cod: TypeExpr = field(init=False, compare=False, repr=False)

    def __post_init__(self):
        _ends(self, self.right, Sum(self.left, self.right))


@dataclass(frozen=True)
class Copair:
    onl: "TermArrow"
    onr: "TermArrow"
    dom: TypeExpr = field(init=False, compare=False, repr=False)
    cod: TypeExpr = field(init=False, compare=False, repr=False)

    def __post_init__(self):
        if self.onl.cod != self.onr.cod:
            raise TermTypeError("copairing needs a shared codomain")
        _ends(self, Sum(self.onl.dom, self.onr.dom), self.onl.cod)


@dataclass(frozen=True)
class Absurd:
    ob: TypeExpr
    dom: TypeExpr = field(init=False, compare=False, repr=False)
    cod: TypeExpr = field(init=False, compare=False, repr=False)

    def __post_init__(self):
        _ends(self, Zero(), self.ob)


@dataclass(frozen=True)
class Eval:
    base: TypeExpr
    target: TypeExpr
    dom: TypeExpr = field(init=False, compare=False, repr=False)
    cod: TypeExpr = field(init=False, compare=False, repr=False)

    def __post_init__(self):
        _ends(self, Prod(Exp(self.base, self.target), self.base), self.target)


@dataclass(frozen=True)
class Curry:
    body: "TermArrow"
    dom: TypeExpr = field(init=False, compare=False, repr=False)
    cod: TypeExpr = field(init=False, compare=False, repr=False)

    def __post_init__(self):
        if not isinstance(self.body.dom, Prod):
            raise TermTypeError(
                f"currying needs a product domain, got {format_type(self.body.dom)}"
            )
        _ends(
            self,
            self.body.dom.left,
            Exp(base=self.body.dom.right, target=self.body.cod),
        )


TermArrow = Union[
    Id, Comp, Proj1, Proj2, Pair, Bang, Inj1, Inj2, Copair, Absurd, Eval, Curry
]


def children(t: TermArrow) -> tuple[TermArrow, ...]:
    if isinstance(t, Comp):
        return (t.after, t.first)
    if isinstance(t, Pair):
        return (t.fst, t.snd)
    if isinstance(t, Copair):
        return (t.onl, t.onr)
    if isinstance(t, Curry):
        return (t.body,)
    return ()


def term_bases(t: TermArrow) -> set[str]:
    names = base_names(t.dom) | base_names(t.cod)
    for sub in children(t):
        names |= term_bases(sub)
    return names


class FreeCategory(BicartesianClosedCategory[TypeExpr, TermArrow]):
    """Syntax trees as arrows; equality via finite interpretations.

    ``arrows_equal`` applies :func:`semantic_equal` with this category's
    default trial policy; a "true" answer therefore means
    indistinguishable under those trials, not a syntactic theorem.
    """

    def __init__(self, trials: int = 8, max_base_size: int = 2, seed: int = 0x5EED):
        self.trials = trials
        self.max_base_size = max_base_size
        self.seed = seed

    def identity(self, x: TypeExpr) -> TermArrow:
        return Id(x)

    def compose(self, g: TermArrow, f: TermArrow) -> TermArrow:
        return Comp(g, f)

    def arrows_equal(self, f: TermArrow, g: TermArrow) -> bool:
        return semantic_equal(
            f, g, trials=self.trials, max_base_size=self.max_base_size, seed=self.seed
        ).equal

    def terminal(self) -> TypeExpr:
        return One()

    def bang(self, x: TypeExpr) -> TermArrow:
        return Bang(x)

    def initial(self) -> TypeExpr:
        return Zero()

    def absurd(self, x: TypeExpr) -> TermArrow:
        return Absurd(x)

    def product(self, x: TypeExpr, y: TypeExpr) -> TypeExpr:
        return Prod(x, y)

    def proj1(self, x: TypeExpr, y: TypeExpr) -> TermArrow:
        return Proj1(x, y)

    def proj2(self, x: TypeExpr, y: TypeExpr) -> TermArrow:
        return Proj2(x, y)

    def pair(self, f: TermArrow, g: TermArrow) -> TermArrow:
        return Pair(f, g)

    def coproduct(self, x: TypeExpr, y: TypeExpr) -> TypeExpr:
        return Sum(x, y)

    def inj1(self, x: TypeExpr, y: TypeExpr) -> TermArrow:
        return Inj1(x, y)

    def inj2(self, x: TypeExpr, y: TypeExpr) -> TermArrow:
        return Inj2(x, y)

    def copair(self, f: TermArrow, g: TermArrow) -> TermArrow:
        return Copair(f, g)

    def exponential(self, base: TypeExpr, target: TypeExpr) -> TypeExpr:
        return Exp(base=base, target=target)

    def eval(self, base: TypeExpr, target: TypeExpr) -> TermArrow:
        return Eval(base, target)

    def curry(self, f: TermArrow, left: TypeExpr, right: TypeExpr) -> TermArrow:
        if f.dom != Prod(left, right):
            raise TermTypeError("domain is not the product of the given factors")
        return Curry(f)

    def product_factors(self, x: TypeExpr) -> tuple[TypeExpr, TypeExpr]:
        if not isinstance(x, Prod):
            raise NotAProduct(f"{format_type(x)} is not a product type")
        return x.left, x.right

    def coproduct_summands(self, x: TypeExpr) -> tuple[TypeExpr, TypeExpr]:
        if not isinstance(x, Sum):
            raise CategoryError(f"{format_type(x)} is not a sum type")
        return x.left, x.right

    def exponential_parts(self, x: TypeExpr) -> tuple[TypeExpr, TypeExpr]:
        if not isinstance(x, Exp):
            raise NotAnExponential(f"{format_type(x)} is not an exponential type")
        return x.base, x.target

    def object_label(self, x: TypeExpr) -> str:
        return format_type(x)


# ---------------------------------------------------------------------------
# Interpretation into finite sets
# ---------------------------------------------------------------------------

Interpretation = Mapping[str, fs.FinSetObj]


def interpret_type(t: TypeExpr, env: Interpretation, cat: Optional[fs.FinSet] = None) -> fs.FinSetObj:
    cat = cat or fs.FinSet()
    if isinstance(t, Base):
        try:
            return env[t.name]
        except KeyError:
            raise KeyError(f"environment has no set for base {t.name!r}") from None
    if isinstance(t, One):
        return cat.terminal()
    if isinstance(t, Zero):
        return cat.initial()
    if isinstance(t, Prod):
        return cat.product(interpret_type(t.left, env, cat), interpret_type(t.right, env, cat))
    if isinstance(t, Sum):
        return cat.coproduct(interpret_type(t.left, env, cat), interpret_type(t.right, env, cat))
    if isinstance(t, Exp):
        return cat.exponential(interpret_type(t.base, env, cat), interpret_type(t.target, env, cat))
    raise TypeError(f"not a type expression: {t!r}")


def interpret(t: TermArrow, env: Interpretation) -> fs.FunTable:
    """Structural recursion sending each constructor to its finite-set
    counterpart; functorial in composition by construction."""
    cat = fs.FinSet()

    def obj(x: TypeExpr) -> fs.FinSetObj:
        return interpret_type(x, env, cat)

    def go(node: TermArrow) -> fs.FunTable:
        if isinstance(node, Id):
            return cat.identity(obj(node.ob))
        if isinstance(node, Comp):
            return cat.compose(go(node.after), go(node.first))
        if isinstance(node, Proj1):
            return cat.proj1(obj(node.left), obj(node.right))
        if isinstance(node, Proj2):
            return cat.proj2(obj(node.left), obj(node.right))
        if isinstance(node, Pair):
            return cat.pair(go(node.fst), go(node.snd))
        if isinstance(node, Bang):
            return cat.bang(obj(node.ob))
        if isinstance(node, Inj1):
            return cat.inj1(obj(node.left), obj(node.right))
        if isinstance(node, Inj2):
            return cat.inj2(obj(node.left), obj(node.right))
        if isinstance(node, Copair):
            return cat.copair(go(node.onl), go(node.onr))
        if isinstance(node, Absurd):
            return cat.absurd(obj(node.ob))
        if isinstance(node, Eval):
            return cat.eval(obj(node.base), obj(node.target))
        if isinstance(node, Curry):
            body_dom = node.body.dom
            assert isinstance(body_dom, Prod)
            return cat.curry(go(node.body), obj(body_dom.left), obj(body_dom.right))
        raise TypeError(f"not a term arrow: {node!r}")

    return go(t)


# ---------------------------------------------------------------------------
# Semantic comparison
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class SemanticComparison:
    """Outcome of comparing two terms under a batch of environments.

    ``equal`` means indistinguishable under the trials that ran; a
    ``witness`` (base name → set size) is returned when some
    environment separates the two interpretations.
    """

    equal: bool
    trials_run: int
    witness: Optional[dict[str, int]]
    seed: int

    @property
    def verdict(self) -> str:
        return "indistinguishable-under-trials" if self.equal else "distinct"


def environments(
    bases: Sequence[str], trials: int, max_base_size: int, seed: int
) -> list[dict[str, int]]:
    """The canonical degenerate size assignments (all 0, all 1, all 2)
    followed by seeded random ones."""
    canonical = [dict.fromkeys(bases, s) for s in (0, 1, 2)]
    rng = random.Random(seed)
    seeded = [
        {name: rng.randint(0, max_base_size) for name in bases} for _ in range(trials)
    ]
    return canonical + seeded


def semantic_equal(
    f: TermArrow,
    g: TermArrow,
    trials: int = 10,
    max_base_size: int = 3,
    seed: int = 0,
) -> SemanticComparison:
    """Interpret both terms under the canonical and seeded environments
    and compare tables; any mismatch returns the distinguishing
    environment."""
    if f.dom != g.dom or f.cod != g.cod:
        raise TermTypeError(
            "terms have different types: {} → {} vs {} → {}".format(
                format_type(f.dom), format_type(f.cod), format_type(g.dom), format_type(g.cod)
            )
        )
    bases = sorted(term_bases(f) | term_bases(g))
    envs = environments(bases, trials, max_base_size, seed)
    for sizes in envs:
        env = {name: fs.make_set(name, size) for name, size in sizes.items()}
        if interpret(f, env).map != interpret(g, env).map:
            return SemanticComparison(False, len(envs), dict(sizes), seed)
    return SemanticComparison(True, len(envs), None, seed)


# ---------------------------------------------------------------------------
# Seeded generation of well-typed terms
# ---------------------------------------------------------------------------


def random_term(
    seed: int,
    steps: int = 12,
    bases: Sequence[str] = ("X", "Y", "Z"),
) -> TermArrow:
    """A seeded random well-typed term, grown by combining a pool of
    primitive arrows with whatever constructors type-check."""
    rng = random.Random(seed)

    def small_type(depth: int = 2) -> TypeExpr:
        kinds = ["base", "one", "zero"]
        if depth > 0:
            kinds += ["prod", "sum", "exp"]
        kind = rng.choice(kinds)
        if kind == "base":
            return Base(rng.choice(list(bases)))
        if kind == "one":
            return One()
        if kind == "zero":
            return Zero()
        left, right = small_type(depth - 1), small_type(depth - 1)
        if kind == "prod":
            return Prod(left, right)
        if kind == "sum":
            return Sum(left, right)
        return Exp(base=left, target=right)

    pool: list[TermArrow] = []
    for _ in range(4):
        t = small_type()
        pool.append(Id(t))
        pool.append(Bang(t))
        pool.append(Absurd(t))
        u = small_type()
        pool.append(Proj1(t, u))
        pool.append(Proj2(t, u))
        pool.append(Inj1(t, u))
        pool.append(Inj2(t, u))
        pool.append(Eval(t, u))

    for _ in range(steps):
        kind = rng.choice(["comp", "pair", "copair", "curry"])
        candidates: list[TermArrow] = []
        if kind == "comp":
            f = rng.choice(pool)
            candidates = [g for g in pool if g.dom == f.cod]
            if candidates:
                pool.append(Comp(rng.choice(candidates), f))
        elif kind == "pair":
            f = rng.choice(pool)
            candidates = [g for g in pool if g.dom == f.dom]
            if candidates:
                pool.append(Pair(f, rng.choice(candidates)))
        elif kind == "copair":
            f = rng.choice(pool)
            candidates = [g for g in pool if g.cod == f.cod]
            if candidates:
                pool.append(Copair(f, rng.choice(candidates)))
        else:
            f = rng.choice(pool)
            if isinstance(f.dom, Prod):
                pool.append(Curry(f))
    return pool[-1]
