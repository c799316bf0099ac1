import itertools

import pytest

from distcat import constructions as cx
from distcat.core import (
    CategoryError,
    assoc_left,
    assoc_right,
    compose_chain,
    product_map,
    verify_iso,
)
from distcat.finset import (
    FinSet,
    enumerate_arrows,
    fun_digits,
    fun_index,
    make_set,
    oracle_distrib,
    oracle_exp_curry,
    oracle_exp_uncurry,
    oracle_mediator,
    oracle_partial_apply,
    random_arrow,
)
from distcat.heyting import HeytingCategory, build_divisor_lattice

from helpers import size_triples

cat = FinSet()


def sets(*sizes):
    return tuple(make_set(n, s) for n, s in zip("ABCD", sizes))


class TestDistribForward:
    def test_matches_oracle_at_2_1_3(self):
        a, b, c = sets(2, 1, 3)
        fwd = cx.distrib_forward(cat, a, b, c)
        assert fwd.map == (0, 4, 1, 2, 3, 5, 6, 7)
        assert cat.arrows_equal(fwd, oracle_distrib(cat, a, b, c))

    def test_matches_oracle_everywhere_small(self):
        for sizes in size_triples(3):
            a, b, c = sets(*sizes)
            assert cat.arrows_equal(
                cx.distrib_forward(cat, a, b, c), oracle_distrib(cat, a, b, c)
            )

    def test_composing_with_injections_recovers_legs(self):
        a, b, c = sets(2, 2, 3)
        fwd = cx.distrib_forward(cat, a, b, c)
        ab, ac = cat.product(a, b), cat.product(a, c)
        left = cat.compose(fwd, cat.inj1(ab, ac))
        right = cat.compose(fwd, cat.inj2(ab, ac))
        assert cat.arrows_equal(left, product_map(cat, cat.identity(a), cat.inj1(b, c)))
        assert cat.arrows_equal(right, product_map(cat, cat.identity(a), cat.inj2(b, c)))

    def test_empty_left_summand(self):
        a, b, c = sets(2, 0, 3)
        fwd = cx.distrib_forward(cat, a, b, c)
        assert fwd.dom.size == fwd.cod.size == a.size * c.size

    def test_thin_instance(self):
        lat = build_divisor_lattice(30)
        hcat = HeytingCategory(lat)
        a, b, c = (lat.index_of(v) for v in ("6", "10", "15"))
        fwd = cx.distrib_forward(hcat, a, b, c)
        assert fwd.dom == fwd.cod == lat.index_of("6")


class TestPartialApply:
    def test_constant_when_target_is_singleton(self):
        a, b, c = sets(1, 2, 2)
        got = cx.partial_apply(cat, a, b, c)
        assert got.cod.size == 1
        assert set(got.map) <= {0}

    def test_matches_oracle(self):
        for sizes in [(2, 2, 2), (2, 3, 2), (3, 2, 3)]:
            a, b, c = sets(*sizes)
            assert cat.arrows_equal(
                cx.partial_apply(cat, a, b, c), oracle_partial_apply(cat, a, b, c)
            )

    def test_empty_parameter_set(self):
        a, b, c = sets(2, 2, 0)
        assert cx.partial_apply(cat, a, b, c).map == ()


class TestCurryingTransposes:
    def test_uncurry_matches_oracle(self):
        for sizes in size_triples(2) + [(3, 2, 2), (2, 3, 2), (2, 2, 3)]:
            a, b, c = sets(*sizes)
            assert cat.arrows_equal(
                cx.exp_uncurry(cat, a, b, c), oracle_exp_uncurry(cat, a, b, c)
            )

    def test_curry_matches_oracle(self):
        for sizes in size_triples(2) + [(3, 2, 2), (2, 3, 2), (2, 2, 3)]:
            a, b, c = sets(*sizes)
            assert cat.arrows_equal(
                cx.exp_curry(cat, a, b, c), oracle_exp_curry(cat, a, b, c)
            )

    def test_uncurry_with_empty_base(self):
        a, b, c = sets(3, 0, 2)
        got = cx.exp_uncurry(cat, a, b, c)
        assert got.dom.size == got.cod.size == 1

    def test_curry_with_empty_parameter(self):
        a, b, c = sets(3, 2, 0)
        got = cx.exp_curry(cat, a, b, c)
        assert got.cod.size == 1

    def test_curry_satisfies_its_triangle(self):
        # eval ∘ (curry-transpose × id) recovers the partial application.
        a, b, c = sets(2, 2, 2)
        delta = cx.exp_curry(cat, a, b, c)
        alpha = cx.partial_apply(cat, a, b, c)
        ab = cat.exponential(b, a)
        applied = cat.compose(
            cat.eval(c, ab), product_map(cat, delta, cat.identity(c))
        )
        assert cat.arrows_equal(applied, alpha)

    def test_round_trips_at_unit_exponents(self):
        for n in range(4):
            a, b, c = sets(n, 1, 1)
            assert verify_iso(cat, cx.curry_iso(cat, a, b, c))

    def test_round_trips_vacuous(self):
        a, b, c = sets(0, 2, 2)
        iso = cx.curry_iso(cat, a, b, c)
        assert iso.fwd.dom.size == 0 and verify_iso(cat, iso)

    def test_round_trips_small(self):
        for sizes in size_triples(2):
            a, b, c = sets(*sizes)
            assert verify_iso(cat, cx.curry_iso(cat, a, b, c))

    def test_thin_instance_objects(self):
        lat = build_divisor_lattice(30)
        hcat = HeytingCategory(lat)
        for a, b, c in itertools.product(range(lat.size), repeat=3):
            gamma = cx.exp_uncurry(hcat, a, b, c)
            assert gamma.dom == lat.impl[c][lat.impl[b][a]]
            assert gamma.cod == lat.impl[lat.meet[b][c]][a]


def _reorder(cat_, x, y, z):
    """(x×y)×z → (x×z)×y."""
    xy = cat_.product(x, y)
    outer1 = cat_.proj1(xy, z)
    return cat_.pair(
        cat_.pair(cat_.compose(cat_.proj1(x, y), outer1), cat_.proj2(xy, z)),
        cat_.compose(cat_.proj2(x, y), outer1),
    )


def _rho(cat_, x, y, z):
    """x×(y×z) → (x×z)×y."""
    yz = cat_.product(y, z)
    outer2 = cat_.proj2(x, yz)
    return cat_.pair(
        cat_.pair(cat_.proj1(x, yz), cat_.compose(cat_.proj2(y, z), outer2)),
        cat_.compose(cat_.proj1(y, z), outer2),
    )


class TestTransposeChains:
    """The two equational chains proving the transposes mutually inverse,
    asserted step by step on tables with every structural arrow explicit."""

    @pytest.mark.parametrize("sizes", size_triples(2) + [(2, 2, 3), (3, 2, 2)])
    def test_chains(self, sizes):
        a, b, c = sets(*sizes)
        bc = cat.product(b, c)
        ab = cat.exponential(b, a)
        e = cat.exponential(bc, a)  # a^(b×c)
        h = cat.exponential(c, ab)  # (a^b)^c
        gamma = cx.exp_uncurry(cat, a, b, c)
        delta = cx.exp_curry(cat, a, b, c)
        alpha = cx.partial_apply(cat, a, b, c)
        ev_inner = cat.eval(b, a)  # a^b × b → a
        ev_flat = cat.eval(bc, a)  # a^(b×c) × (b×c) → a
        ev_outer = cat.eval(c, ab)  # (a^b)^c × c → a^b

        gamma_lift = product_map(cat, gamma, cat.identity(bc))  # h×(b×c) → e×(b×c)
        delta_stack = product_map(
            cat, product_map(cat, delta, cat.identity(b)), cat.identity(c)
        )  # (e×b)×c → (h×b)×c

        # One direction: the composite through every explicit step…
        t1 = compose_chain(
            cat,
            ev_inner,
            product_map(cat, ev_outer, cat.identity(b)),
            _reorder(cat, h, b, c),
            delta_stack,
            assoc_left(cat, e, b, c),
            gamma_lift,
        )
        # …after regrouping the middle two maps…
        t2 = compose_chain(
            cat,
            ev_inner,
            product_map(
                cat,
                cat.compose(ev_outer, product_map(cat, delta, cat.identity(c))),
                cat.identity(b),
            ),
            _rho(cat, e, b, c),
            gamma_lift,
        )
        # …which is evaluation after the partial application…
        t3 = compose_chain(
            cat,
            ev_inner,
            product_map(cat, alpha, cat.identity(b)),
            _rho(cat, e, b, c),
            gamma_lift,
        )
        # …which is plain evaluation after the uncurrying…
        t4 = cat.compose(ev_flat, gamma_lift)
        # …which is the square the uncurrying transposes.
        t5 = compose_chain(
            cat,
            ev_inner,
            product_map(cat, ev_outer, cat.identity(b)),
            _reorder(cat, h, b, c),
        )
        assert t1.map == t2.map == t3.map == t4.map == t5.map

        # Transpose uniqueness turns the chain into the round-trip identity.
        assert cat.arrows_equal(cat.curry(t4, h, bc), gamma)
        assert cat.arrows_equal(
            product_map(cat, cat.compose(delta, gamma), cat.identity(bc)),
            cat.identity(cat.product(h, bc)),
        )
        assert cat.arrows_equal(cat.compose(delta, gamma), cat.identity(h))

        # The opposite direction.
        delta_norm = compose_chain(
            cat, assoc_right(cat, h, b, c), delta_stack, assoc_left(cat, e, b, c)
        )  # e×(b×c) → h×(b×c)
        u1 = compose_chain(cat, ev_flat, gamma_lift, delta_norm)
        u2 = compose_chain(
            cat,
            ev_inner,
            product_map(cat, ev_outer, cat.identity(b)),
            _reorder(cat, h, b, c),
            delta_stack,
            assoc_left(cat, e, b, c),
        )
        u3 = compose_chain(
            cat,
            ev_inner,
            product_map(
                cat,
                cat.compose(ev_outer, product_map(cat, delta, cat.identity(c))),
                cat.identity(b),
            ),
            _rho(cat, e, b, c),
        )
        u4 = compose_chain(
            cat, ev_inner, product_map(cat, alpha, cat.identity(b)), _rho(cat, e, b, c)
        )
        u5 = ev_flat
        assert u1.map == u2.map == u3.map == u4.map == u5.map

        assert cat.arrows_equal(cat.curry(u5, e, bc), cat.identity(e))
        assert cat.arrows_equal(cat.compose(gamma, delta), cat.identity(e))


class TestFunctorActions:
    def test_product_action_preserves_identity(self):
        a, b = sets(2, 3)[:2]
        got = cx.product_functor_map(cat, a, cat.identity(b))
        assert cat.arrows_equal(got, cat.identity(cat.product(a, b)))

    def test_product_action_preserves_composition(self):
        a, b, c, d = sets(2, 3, 2, 3)
        for seed in range(40):
            f = random_arrow(b, c, seed)
            g = random_arrow(c, d, 1000 + seed)
            lhs = cx.product_functor_map(cat, a, cat.compose(g, f))
            rhs = cat.compose(
                cx.product_functor_map(cat, a, g), cx.product_functor_map(cat, a, f)
            )
            assert cat.arrows_equal(lhs, rhs)

    def test_product_action_on_injection_is_forward_leg(self):
        a, b, c = sets(2, 2, 2)
        leg = cx.product_functor_map(cat, a, cat.inj1(b, c))
        fwd = cx.distrib_forward(cat, a, b, c)
        ab, ac = cat.product(a, b), cat.product(a, c)
        assert cat.arrows_equal(leg, cat.compose(fwd, cat.inj1(ab, ac)))

    def test_exp_action_preserves_identity(self):
        a, b = sets(2, 3)[:2]
        got = cx.exp_functor_map(cat, a, cat.identity(b))
        assert cat.arrows_equal(got, cat.identity(cat.exponential(a, b)))

    def test_exp_action_is_postcomposition(self):
        a, b, c = sets(2, 2, 3)
        for seed in range(20):
            f = random_arrow(b, c, seed)
            lifted = cx.exp_functor_map(cat, a, f)
            ba = cat.exponential(a, b)
            expected = tuple(
                fun_index(
                    tuple(f.map[v] for v in fun_digits(g_idx, b.size, a.size)),
                    c.size,
                )
                for g_idx in range(ba.size)
            )
            assert lifted.map == expected

    def test_exp_action_preserves_composition(self):
        a, b, c, d = sets(2, 2, 3, 2)
        for seed in range(100):
            f = random_arrow(b, c, seed)
            g = random_arrow(c, d, 5000 + seed)
            lhs = cx.exp_functor_map(cat, a, cat.compose(g, f))
            rhs = cat.compose(
                cx.exp_functor_map(cat, a, g), cx.exp_functor_map(cat, a, f)
            )
            assert cat.arrows_equal(lhs, rhs)


class TestHomBijection:
    def test_transpose_of_eval_is_identity(self):
        b, c = make_set("B", 2), make_set("C", 3)
        got = cx.hom_transpose(cat, cat.eval(b, c))
        assert cat.arrows_equal(got, cat.identity(cat.exponential(b, c)))

    def test_transpose_against_manual_currying(self):
        a, b, c = sets(2, 2, 2)
        g = random_arrow(cat.product(a, b), c, seed=77)
        got = cx.hom_transpose(cat, g)
        expected = tuple(
            fun_index(tuple(g.map[x * b.size + y] for y in range(b.size)), c.size)
            for x in range(a.size)
        )
        assert got.map == expected

    def test_round_trips_on_seeded_arrows(self):
        a, b, c = sets(2, 2, 2)
        ab = cat.product(a, b)
        for seed in range(100):
            g = random_arrow(ab, c, seed)
            assert cat.arrows_equal(
                cx.hom_untranspose_direct(cat, cx.hom_transpose(cat, g)), g
            )

    def test_untranspose_of_identity_is_eval(self):
        b, c = make_set("B", 2), make_set("C", 2)
        e = cat.exponential(b, c)
        got = cx.hom_untranspose_direct(cat, cat.identity(e))
        assert cat.arrows_equal(got, cat.eval(b, c))

    def test_untranspose_on_empty_domain(self):
        a, b, c = sets(0, 2, 2)
        f = random_arrow(a, cat.exponential(b, c), seed=0)
        assert cx.hom_untranspose_direct(cat, f).map == ()

    def test_mutually_inverse_exhaustively(self):
        for sizes in size_triples(2):
            a, b, c = sets(*sizes)
            ab, cb = cat.product(a, b), cat.exponential(b, c)
            for g in enumerate_arrows(ab, c):
                assert cat.arrows_equal(
                    cx.hom_untranspose_direct(cat, cx.hom_transpose(cat, g)), g
                )
            for f in enumerate_arrows(a, cb):
                assert cat.arrows_equal(
                    cx.hom_transpose(cat, cx.hom_untranspose_direct(cat, f)), f
                )

    def test_unit_route_equals_counit_route_exhaustively(self):
        for sizes in size_triples(2):
            a, b, c = sets(*sizes)
            cb = cat.exponential(b, c)
            for f in enumerate_arrows(a, cb):
                assert cat.arrows_equal(
                    cx.hom_untranspose_via_unit(cat, f),
                    cx.hom_untranspose_direct(cat, f),
                )

    def test_unit_route_equals_counit_route_seeded_at_three(self):
        a, b, c = sets(3, 3, 3)
        cb = cat.exponential(b, c)
        for seed in range(25):
            f = random_arrow(a, cb, seed)
            assert cat.arrows_equal(
                cx.hom_untranspose_via_unit(cat, f), cx.hom_untranspose_direct(cat, f)
            )

    def test_unit_route_in_thin_instance(self):
        lat = build_divisor_lattice(12)
        hcat = HeytingCategory(lat)
        a = lat.index_of("3")
        b, c = lat.index_of("6"), lat.index_of("3")
        f = hcat.witness(a, lat.impl[b][c])
        direct = cx.hom_untranspose_direct(hcat, f, parts=(b, c))
        long_way = cx.hom_untranspose_via_unit(hcat, f, parts=(b, c))
        assert hcat.arrows_equal(direct, long_way)


class TestMediator:
    def test_identity_cocone(self):
        a, b, c = sets(2, 2, 2)
        left = product_map(cat, cat.identity(a), cat.inj1(b, c))
        right = product_map(cat, cat.identity(a), cat.inj2(b, c))
        m = cx.mediator(cat, a, b, c, left, right)
        assert cat.arrows_equal(m, cat.identity(cat.product(a, cat.coproduct(b, c))))

    def test_injection_cocone_is_backward_arrow(self):
        a, b, c = sets(2, 1, 3)
        ab, ac = cat.product(a, b), cat.product(a, c)
        m = cx.mediator(cat, a, b, c, cat.inj1(ab, ac), cat.inj2(ab, ac))
        assert cat.arrows_equal(m, cx.distrib_backward(cat, a, b, c))

    def test_codomain_mismatch_rejected(self):
        a, b, c = sets(2, 2, 2)
        q1 = cat.bang(cat.product(a, b))
        q2 = cat.identity(cat.product(a, c))
        with pytest.raises(CategoryError):
            cx.mediator(cat, a, b, c, q1, q2)

    def test_wrong_legs_rejected(self):
        a, b, c = sets(2, 2, 2)
        q = cat.bang(cat.product(a, b))
        with pytest.raises(CategoryError):
            cx.mediator(cat, a, b, c, q, q)

    def test_exhaustive_uniqueness_small(self):
        # Every cocone pair at tiny sizes: exactly one commuting table.
        for sizes in [(1, 1, 1), (2, 1, 1), (1, 2, 1), (1, 1, 2)]:
            a, b, c = sets(*sizes)
            ab, ac = cat.product(a, b), cat.product(a, c)
            d = cat.coproduct(ab, ac)
            dom = cat.product(a, cat.coproduct(b, c))
            left = product_map(cat, cat.identity(a), cat.inj1(b, c))
            right = product_map(cat, cat.identity(a), cat.inj2(b, c))
            for q1 in enumerate_arrows(ab, d):
                for q2 in enumerate_arrows(ac, d):
                    m = cx.mediator(cat, a, b, c, q1, q2)
                    commuting = [
                        t
                        for t in enumerate_arrows(dom, d)
                        if cat.arrows_equal(cat.compose(t, left), q1)
                        and cat.arrows_equal(cat.compose(t, right), q2)
                    ]
                    assert len(commuting) == 1
                    assert cat.arrows_equal(commuting[0], m)
                    assert cat.arrows_equal(m, oracle_mediator(cat, a, b, c, q1, q2))

    def test_seeded_cocones_match_forced_table(self):
        a, b, c = sets(2, 2, 2)
        d = make_set("D", 3)
        for seed in range(30):
            q1 = random_arrow(cat.product(a, b), d, seed)
            q2 = random_arrow(cat.product(a, c), d, 900 + seed)
            m = cx.mediator(cat, a, b, c, q1, q2)
            assert cat.arrows_equal(m, oracle_mediator(cat, a, b, c, q1, q2))


class TestDistribIso:
    def test_round_trips_small(self):
        for sizes in size_triples(2):
            a, b, c = sets(*sizes)
            assert verify_iso(cat, cx.distrib_iso(cat, a, b, c))

    def test_backward_at_2_1_3(self):
        a, b, c = sets(2, 1, 3)
        assert cx.distrib_backward(cat, a, b, c).map == (0, 2, 3, 4, 1, 5, 6, 7)

    def test_backward_empty(self):
        a, b, c = sets(0, 2, 2)
        assert cx.distrib_backward(cat, a, b, c).map == ()

    def test_singletons(self):
        a, b, c = sets(1, 1, 1)
        iso = cx.distrib_iso(cat, a, b, c)
        assert iso.fwd.dom.size == 2 and verify_iso(cat, iso)

    def test_thin_nontrivial_direction(self):
        lat = build_divisor_lattice(30)
        hcat = HeytingCategory(lat)
        a, b, c = (lat.index_of(v) for v in ("6", "10", "15"))
        bwd = cx.distrib_backward(hcat, a, b, c)
        assert bwd.dom == lat.index_of("6") and bwd.cod == lat.index_of("6")
