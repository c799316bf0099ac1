"""The explicit arrows: distributivity, the currying isomorphism, and
the product/exponential hom-set bijection.

Everything is generic over a :class:`BicartesianClosedCategory`; the
same code produces index tables in finite sets, order witnesses in a
Heyting algebra, and syntax trees in the free instance. Structural
reassociations and unit insertions are real arrows here, built
explicitly and recorded in the construction trace when one is supplied.
"""

from __future__ import annotations

from typing import Optional

from .core import (
    Ar,
    BicartesianClosedCategory,
    CategoryError,
    ConstructionTrace,
    Iso,
    Ob,
    assoc_right,
    compose_chain,
    product_map,
    swap,
    unit_iso,
)

Cat = BicartesianClosedCategory


def distrib_forward(
    cat: Cat[Ob, Ar], a: Ob, b: Ob, c: Ob, trace: Optional[ConstructionTrace[Ar]] = None
) -> Ar:
    """(a×b)+(a×c) → a×(b+c), the copairing [id×inj₁, id×inj₂].

    Needs no exponentials: both legs are the product functor applied to
    an injection.
    """
    left = product_map(cat, cat.identity(a), cat.inj1(b, c))
    right = product_map(cat, cat.identity(a), cat.inj2(b, c))
    out = cat.copair(left, right)
    if trace is not None:
        trace.record("id×inj₁", left)
        trace.record("id×inj₂", right)
        trace.record("[id×inj₁, id×inj₂]", out)
    return out


def partial_apply(cat: Cat[Ob, Ar], a: Ob, b: Ob, c: Ob) -> Ar:
    """a^(b×c) × c → a^b, sending (g, z) to g(−, z).

    Transpose of ``eval ∘ σ`` where σ : (a^(b×c)×c)×b → a^(b×c)×(b×c)
    is the structural arrow ⟨π₁∘π₁, ⟨π₂, π₂∘π₁⟩⟩.
    """
    bc = cat.product(b, c)
    e = cat.exponential(bc, a)
    ec = cat.product(e, c)
    outer1 = cat.proj1(ec, b)
    outer2 = cat.proj2(ec, b)
    sigma = cat.pair(
        cat.compose(cat.proj1(e, c), outer1),
        cat.pair(outer2, cat.compose(cat.proj2(e, c), outer1)),
    )
    return cat.curry(cat.compose(cat.eval(bc, a), sigma), ec, b)


def exp_uncurry(cat: Cat[Ob, Ar], a: Ob, b: Ob, c: Ob) -> Ar:
    """(a^b)^c → a^(b×c), sending h to (y, z) ↦ h(z)(y).

    Transpose of ``eval ∘ (eval × id) ∘ ρ`` with the structural arrow
    ρ : (a^b)^c × (b×c) → ((a^b)^c × c) × b.
    """
    ab = cat.exponential(b, a)
    h = cat.exponential(c, ab)
    bc = cat.product(b, c)
    outer1 = cat.proj1(h, bc)
    outer2 = cat.proj2(h, bc)
    rho = cat.pair(
        cat.pair(outer1, cat.compose(cat.proj2(b, c), outer2)),
        cat.compose(cat.proj1(b, c), outer2),
    )
    mid = product_map(cat, cat.eval(c, ab), cat.identity(b))
    return cat.curry(compose_chain(cat, cat.eval(b, a), mid, rho), h, bc)


def exp_curry(cat: Cat[Ob, Ar], a: Ob, b: Ob, c: Ob) -> Ar:
    """a^(b×c) → (a^b)^c, the transpose of :func:`partial_apply`."""
    e = cat.exponential(cat.product(b, c), a)
    return cat.curry(partial_apply(cat, a, b, c), e, c)


def curry_iso(cat: Cat[Ob, Ar], a: Ob, b: Ob, c: Ob) -> Iso[Ar]:
    """a^(b×c) ≅ (a^b)^c, with :func:`exp_curry` forward and
    :func:`exp_uncurry` backward."""
    return Iso(fwd=exp_curry(cat, a, b, c), bwd=exp_uncurry(cat, a, b, c))


def product_functor_map(cat: Cat[Ob, Ar], a: Ob, f: Ar) -> Ar:
    """The action of a×− on arrows: f ↦ id×f."""
    return product_map(cat, cat.identity(a), f)


def exp_functor_map(cat: Cat[Ob, Ar], a: Ob, f: Ar) -> Ar:
    """The action of (−)^a on arrows: f : x → y ↦ x^a → y^a, the
    transpose of f ∘ eval."""
    xa = cat.exponential(a, f.dom)
    return cat.curry(cat.compose(f, cat.eval(a, f.dom)), xa, a)


def exp_contramap(cat: Cat[Ob, Ar], f: Ar, target: Ob) -> Ar:
    """The contravariant action on the exponent: f : x → y gives
    target^y → target^x by precomposition, as the transpose of
    ``eval ∘ (id × f)``."""
    ty = cat.exponential(f.cod, target)
    step = product_map(cat, cat.identity(ty), f)
    return cat.curry(cat.compose(cat.eval(f.cod, target), step), ty, f.dom)


def hom_transpose(
    cat: Cat[Ob, Ar], g: Ar, factors: Optional[tuple[Ob, Ob]] = None
) -> Ar:
    """One side of Hom(a×b, c) ≅ Hom(a, c^b): transpose g : a×b → c.

    ``factors`` names (a, b) explicitly; when omitted it is recovered
    from the domain, which must be a registered product.
    """
    if factors is None:
        factors = cat.product_factors(g.dom)
    left, right = factors
    return cat.curry(g, left, right)


def hom_untranspose_direct(
    cat: Cat[Ob, Ar], f: Ar, parts: Optional[tuple[Ob, Ob]] = None
) -> Ar:
    """The inverse side as the counit composite eval ∘ (f × id).

    ``parts`` names (base, target) of the exponential codomain; when
    omitted it is recovered from the codomain.
    """
    if parts is None:
        parts = cat.exponential_parts(f.cod)
    base, target = parts
    return cat.compose(cat.eval(base, target), product_map(cat, f, cat.identity(base)))


def hom_untranspose_via_unit(
    cat: Cat[Ob, Ar],
    f: Ar,
    parts: Optional[tuple[Ob, Ob]] = None,
    trace: Optional[ConstructionTrace[Ar]] = None,
) -> Ar:
    """The inverse side built the long way round, through 1×a and the
    currying isomorphism; equal to :func:`hom_untranspose_direct` in
    every instance (a tested invariant, not an assumption).

    For f : a → c^b the composite is

        a×b → (1×a)×b → 1×(a×b) → c^(a×b) × (a×b) → c

    where the constant leg 1 → c^(a×b) is the transpose of f∘π₂ pushed
    through (c^b)^a → c^(b×a) → c^(a×b) (uncurrying, then swapping the
    exponent).
    """
    if parts is None:
        parts = cat.exponential_parts(f.cod)
    b, c = parts
    a = f.dom
    one = cat.terminal()
    u = unit_iso(cat, a)
    named = cat.compose(f, u.bwd)  # 1×a → c^b
    point = cat.curry(named, one, a)  # 1 → (c^b)^a
    uncurried = exp_uncurry(cat, c, b, a)  # (c^b)^a → c^(b×a)
    flip_exponent = exp_contramap(cat, swap(cat, a, b), c)  # c^(b×a) → c^(a×b)
    constant = compose_chain(cat, flip_exponent, uncurried, point)  # 1 → c^(a×b)
    ab = cat.product(a, b)
    widen = product_map(cat, u.fwd, cat.identity(b))  # a×b → (1×a)×b
    reassoc = assoc_right(cat, one, a, b)  # (1×a)×b → 1×(a×b)
    main = product_map(cat, constant, cat.identity(ab))  # 1×(a×b) → c^(a×b) × (a×b)
    out = compose_chain(cat, cat.eval(ab, c), main, reassoc, widen)
    if trace is not None:
        trace.record("⟨!,id⟩×id", widen)
        trace.record("assoc", reassoc)
        trace.record("(uncurry∘Λ(f∘π₂))×id", main)
        trace.record("eval", cat.eval(ab, c))
        trace.record("untranspose(f)", out)
    return out


def mediator(
    cat: Cat[Ob, Ar],
    a: Ob,
    b: Ob,
    c: Ob,
    q1: Ar,
    q2: Ar,
    trace: Optional[ConstructionTrace[Ar]] = None,
) -> Ar:
    """The arrow a×(b+c) → d induced by a cocone q1 : a×b → d,
    q2 : a×c → d over the two product-functor images of the injections.

    The legs are transposed over the a factor (after an explicit swap,
    since currying is over the second factor), copaired into
    r : b+c → d^a, and the result is the counit composite of r adapted
    by another swap so its domain is a×(b+c). It commutes with id×inj₁
    and id×inj₂ and is the unique such arrow.
    """
    if q1.cod != q2.cod:
        raise CategoryError("mediator legs must share a codomain")
    if q1.dom != cat.product(a, b) or q2.dom != cat.product(a, c):
        raise CategoryError("mediator legs must start from a×b and a×c")
    d = q1.cod
    t1 = cat.curry(cat.compose(q1, swap(cat, b, a)), b, a)  # b → d^a
    t2 = cat.curry(cat.compose(q2, swap(cat, c, a)), c, a)  # c → d^a
    r = cat.copair(t1, t2)  # b+c → d^a
    bc = cat.coproduct(b, c)
    flip = swap(cat, a, bc)  # a×(b+c) → (b+c)×a
    widen = product_map(cat, r, cat.identity(a))  # (b+c)×a → d^a × a
    out = compose_chain(cat, cat.eval(a, d), widen, flip)
    if trace is not None:
        trace.record("Λ(q₁∘swap)", t1)
        trace.record("Λ(q₂∘swap)", t2)
        trace.record("[Λ(q₁∘swap), Λ(q₂∘swap)]", r)
        trace.record("swap", flip)
        trace.record("r×id", widen)
        trace.record("mediator", out)
    return out


def distrib_backward(
    cat: Cat[Ob, Ar], a: Ob, b: Ob, c: Ob, trace: Optional[ConstructionTrace[Ar]] = None
) -> Ar:
    """a×(b+c) → (a×b)+(a×c): the mediator of the coproduct injections.

    This is the direction that needs exponentiation; it witnesses that
    a×(b+c) is itself a coproduct of a×b and a×c.
    """
    d_left = cat.product(a, b)
    d_right = cat.product(a, c)
    q1 = cat.inj1(d_left, d_right)
    q2 = cat.inj2(d_left, d_right)
    return mediator(cat, a, b, c, q1, q2, trace=trace)


def distrib_iso(cat: Cat[Ob, Ar], a: Ob, b: Ob, c: Ob) -> Iso[Ar]:
    """(a×b)+(a×c) ≅ a×(b+c); both composites are identities."""
    return Iso(fwd=distrib_forward(cat, a, b, c), bwd=distrib_backward(cat, a, b, c))
