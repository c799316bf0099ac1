"""Acceptance criteria, one test per criterion, each printing a verdict
line (run with ``pytest tests/test_acceptance.py -v -s``)."""

import json
import re
import time

from click.testing import CliRunner

from distcat import checks
from distcat import constructions as cx
from distcat.cli import main as cli_main
from distcat.core import product_map
from distcat.finset import (
    FinSet,
    enumerate_arrows,
    make_set,
    oracle_distrib,
    oracle_mediator,
    random_arrow,
)
from distcat.heyting import (
    enumerate_posets,
    lattice_from_leq,
    validate_heyting,
)
from distcat.terms import FreeCategory, environments, interpret
from distcat.typeexpr import Base

from helpers import size_triples

cat = FinSet()
SEED = 20_08


def _sets(sizes):
    return tuple(make_set(n, s) for n, s in zip("ABC", sizes))


def _stamp(number, name, started):
    print(f"ACCEPTANCE {number} PASS {name} ({time.perf_counter() - started:.1f} s)")


def test_criterion_1_distributivity_round_trips():
    started = time.perf_counter()
    for sizes in size_triples(3):
        a, b, c = _sets(sizes)
        fwd = cx.distrib_forward(cat, a, b, c)
        bwd = cx.distrib_backward(cat, a, b, c)
        assert cat.compose(bwd, fwd).map == cat.identity(fwd.dom).map, sizes
        assert cat.compose(fwd, bwd).map == cat.identity(bwd.dom).map, sizes
    elapsed = time.perf_counter() - started
    assert elapsed < 60.0
    _stamp(1, "distributivity round trips on all 64 size triples", started)


def test_criterion_2_forward_equals_oracle():
    started = time.perf_counter()
    for sizes in size_triples(3):
        a, b, c = _sets(sizes)
        fwd = cx.distrib_forward(cat, a, b, c)
        oracle = oracle_distrib(cat, a, b, c)
        assert fwd.dom == oracle.dom and fwd.cod == oracle.cod, sizes
        assert fwd.map == oracle.map, sizes
    _stamp(2, "forward arrow equals the index oracle on all 64 triples", started)


def test_criterion_3_currying_isomorphism():
    started = time.perf_counter()
    for sizes in size_triples(3):
        a, b, c = _sets(sizes)
        uncurry = cx.exp_uncurry(cat, a, b, c)
        curry = cx.exp_curry(cat, a, b, c)
        assert cat.compose(curry, uncurry).map == cat.identity(uncurry.dom).map, sizes
        assert cat.compose(uncurry, curry).map == cat.identity(curry.dom).map, sizes
    elapsed = time.perf_counter() - started
    assert elapsed < 120.0
    _stamp(3, "currying transposes mutually inverse on all 64 triples", started)


def test_criterion_4_adjunction_bijection():
    started = time.perf_counter()
    # Exhaustive at sizes ≤ 2, both directions, plus the long-route equality.
    for sizes in size_triples(2):
        a, b, c = _sets(sizes)
        ab, cb = cat.product(a, b), cat.exponential(b, c)
        for g in enumerate_arrows(ab, c):
            assert cat.arrows_equal(
                cx.hom_untranspose_direct(cat, cx.hom_transpose(cat, g)), g
            )
        for f in enumerate_arrows(a, cb):
            direct = cx.hom_untranspose_direct(cat, f)
            assert cat.arrows_equal(cx.hom_transpose(cat, direct), f)
            assert cat.arrows_equal(cx.hom_untranspose_via_unit(cat, f), direct)
    # One hundred seeded arrows each way at size 3.
    a, b, c = _sets((3, 3, 3))
    ab, cb = cat.product(a, b), cat.exponential(b, c)
    for k in range(100):
        g = random_arrow(ab, c, SEED + k)
        assert cat.arrows_equal(
            cx.hom_untranspose_direct(cat, cx.hom_transpose(cat, g)), g
        )
        f = random_arrow(a, cb, SEED + 1000 + k)
        direct = cx.hom_untranspose_direct(cat, f)
        assert cat.arrows_equal(cx.hom_transpose(cat, direct), f)
        assert cat.arrows_equal(cx.hom_untranspose_via_unit(cat, f), direct)
    _stamp(4, "hom transpose bijective; both untranspose routes agree", started)


def test_criterion_5_mediator_uniqueness():
    started = time.perf_counter()
    for sizes in size_triples(2):
        a, b, c = _sets(sizes)
        dom = cat.product(a, cat.coproduct(b, c))
        left = product_map(cat, cat.identity(a), cat.inj1(b, c))
        right = product_map(cat, cat.identity(a), cat.inj2(b, c))
        # The two legs jointly hit every element, so a commuting arrow is
        # pointwise forced: at most one exists, for any cocone whatsoever.
        assert set(left.map) | set(right.map) == set(range(dom.size)), sizes

        # All cocone pairs, leg by leg: a mediator's restriction to one
        # summand only depends on that leg, so the two scans cover the
        # full cocone square (16.7M pairs at sizes (2,2,2)).
        checks.mediator_side_scan(sizes)

        # Canonical cocones plus 20 seeded cocones into |D| ≤ 3, with
        # enumeration-based uniqueness wherever the candidate space fits.
        report = checks.check_mediator_finset(sizes, trials=20, seed=SEED)
        assert report.verdict == "pass", (sizes, report.detail)

        # Literal pair-exhaustion where the whole square is tiny.
        ab, ac = cat.product(a, b), cat.product(a, c)
        d = cat.coproduct(ab, ac)
        if d.size ** (ab.size + ac.size) <= 4096:
            for q1 in enumerate_arrows(ab, d):
                for q2 in enumerate_arrows(ac, d):
                    m = cx.mediator(cat, a, b, c, q1, q2)
                    assert cat.arrows_equal(m, oracle_mediator(cat, a, b, c, q1, q2))
    _stamp(5, "exactly one commuting mediator, equal to the constructed one", started)


def test_criterion_6_heyting_instance():
    started = time.perf_counter()
    lattices = 0
    for points in range(5):
        for names, relation in enumerate_posets(points):
            spec = {"kind": "downset", "points": list(names), "relation": list(relation)}
            report = checks.check_distrib_heyting(spec, None, seed=SEED)
            assert report.verdict == "pass", (names, relation, report.detail)
            lattices += 1
    assert lattices == 1 + 1 + 3 + 19 + 219
    for n in range(1, 61):
        report = checks.check_distrib_heyting({"kind": "divisors", "n": n}, None, SEED)
        assert report.verdict == "pass", n
    # Non-distributive lattices are rejected with a concrete triple.
    m3_leq = [[i == j or i == 0 or j == 4 for j in range(5)] for i in range(5)]
    m3 = lattice_from_leq(["0", "x", "y", "z", "1"], m3_leq)
    n5_rel = {(0, 1), (0, 2), (0, 3), (0, 4), (1, 3), (1, 4), (2, 4), (3, 4)}
    n5_leq = [[i == j or (i, j) in n5_rel for j in range(5)] for i in range(5)]
    n5 = lattice_from_leq(["0", "a", "b", "c", "1"], n5_leq)
    for bad in (m3, n5):
        outcome = validate_heyting(bad)
        assert not outcome.ok
        ia, ib, ic = (bad.index_of(v) for v in outcome.witness)
        assert bad.leq[ic][bad.impl[ia][ib]] != bad.leq[bad.meet[ic][ia]][ib]
    elapsed = time.perf_counter() - started
    assert elapsed < 60.0
    _stamp(6, "243 down-set lattices and 60 divisor lattices distribute; M3/N5 rejected", started)


def test_criterion_7_term_interpretations_match():
    started = time.perf_counter()
    free = FreeCategory()
    a, b, c = Base("A"), Base("B"), Base("C")
    symbolic = {
        "forward": cx.distrib_forward(free, a, b, c),
        "backward": cx.distrib_backward(free, a, b, c),
        "uncurry": cx.exp_uncurry(free, a, b, c),
        "curry": cx.exp_curry(free, a, b, c),
    }
    direct = {
        "forward": cx.distrib_forward,
        "backward": cx.distrib_backward,
        "uncurry": cx.exp_uncurry,
        "curry": cx.exp_curry,
    }
    envs = environments(("A", "B", "C"), trials=10, max_base_size=3, seed=SEED)
    assert len(envs) == 13  # three degenerate plus ten seeded
    for sizes in envs:
        env = {name: make_set(name, size) for name, size in sizes.items()}
        for name, term in symbolic.items():
            expected = direct[name](cat, env["A"], env["B"], env["C"])
            got = interpret(term, env)
            assert got.dom == expected.dom and got.cod == expected.cod, (name, sizes)
            assert got.map == expected.map, (name, sizes)
    _stamp(7, "symbolic constructions interpret to the direct tables", started)


_TIMING = re.compile(r'"elapsed_ms": [0-9.e+-]+')


def test_criterion_8_deterministic_sweep_reports():
    started = time.perf_counter()
    runner = CliRunner()
    args = ["sweep", "--instance", "finset", "--max-size", "2", "--seed", "7", "--json"]
    first = runner.invoke(cli_main, args)
    second = runner.invoke(cli_main, args)
    assert first.exit_code == 0 and second.exit_code == 0
    assert first.output != ""
    assert _TIMING.sub("-", first.output) == _TIMING.sub("-", second.output)
    body = json.loads(first.output)
    assert body["summary"]["total"] == 108
    assert body["summary"]["passed"] == 108
    _stamp(8, "sweep reports byte-identical modulo timing fields", started)
