"""Shared law checkers driven by the instance tests."""

from __future__ import annotations

import itertools

from distcat.core import product_map


def assert_identity_laws(cat, f):
    assert cat.arrows_equal(cat.compose(f, cat.identity(f.dom)), f)
    assert cat.arrows_equal(cat.compose(cat.identity(f.cod), f), f)


def assert_associativity(cat, h, g, f):
    assert cat.arrows_equal(
        cat.compose(cat.compose(h, g), f), cat.compose(h, cat.compose(g, f))
    )


def assert_product_laws(cat, f, g):
    """Universal property of the product for a span f : z → x, g : z → y."""
    paired = cat.pair(f, g)
    assert cat.arrows_equal(cat.compose(cat.proj1(f.cod, g.cod), paired), f)
    assert cat.arrows_equal(cat.compose(cat.proj2(f.cod, g.cod), paired), g)


def assert_pair_eta(cat, h, x, y):
    """h : z → x×y is recovered from its two projections."""
    rebuilt = cat.pair(
        cat.compose(cat.proj1(x, y), h), cat.compose(cat.proj2(x, y), h)
    )
    assert cat.arrows_equal(rebuilt, h)


def assert_coproduct_laws(cat, f, g):
    """Universal property of the coproduct for a cospan f : x → z, g : y → z."""
    copaired = cat.copair(f, g)
    assert cat.arrows_equal(cat.compose(copaired, cat.inj1(f.dom, g.dom)), f)
    assert cat.arrows_equal(cat.compose(copaired, cat.inj2(f.dom, g.dom)), g)


def assert_copair_eta(cat, h, x, y):
    rebuilt = cat.copair(
        cat.compose(h, cat.inj1(x, y)), cat.compose(h, cat.inj2(x, y))
    )
    assert cat.arrows_equal(rebuilt, h)


def assert_exponential_beta(cat, f, left, right):
    """eval ∘ (curry(f) × id) = f for f : left×right → t."""
    curried = cat.curry(f, left, right)
    applied = cat.compose(
        cat.eval(right, f.cod), product_map(cat, curried, cat.identity(right))
    )
    assert cat.arrows_equal(applied, f)


def assert_exponential_uniqueness(cat, f, left, right, candidates):
    """curry(f) is the only m among ``candidates`` with eval∘(m×id) = f."""
    curried = cat.curry(f, left, right)
    ev = cat.eval(right, f.cod)
    matches = [
        m
        for m in candidates
        if cat.arrows_equal(cat.compose(ev, product_map(cat, m, cat.identity(right))), f)
    ]
    assert len(matches) == 1
    assert cat.arrows_equal(matches[0], curried)


def size_triples(limit):
    rng = range(limit + 1)
    return list(itertools.product(rng, rng, rng))
