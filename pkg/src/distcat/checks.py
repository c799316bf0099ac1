"""Runnable verification checks with structured, reproducible reports.

Each check runs one family of equalities in one instance and returns a
:class:`CheckReport`. Failing reports always carry a full counterexample
(tables, elements or a distinguishing environment) plus the seed and the
encodings version, so a reader can replay them; inputs that cannot back
a category at all (a non-Heyting lattice, oversized objects, unreadable
terms) yield the ``rejected-input`` verdict instead of a failure.
"""

from __future__ import annotations

import itertools
import random
import time
from dataclasses import dataclass
from typing import Any, Callable, Iterable, Mapping, Optional, Sequence

from . import constructions as cx
from . import finset as fs
from . import heyting as hey
from . import terms as tm
from . import term_syntax as tsyn
from .core import product_map, verify_iso
from .typeexpr import Base, Exp

SCHEMA_VERSION = "check-report/v1"
CHECK_NAMES = ("distrib", "curry", "adjunction", "mediator")
INSTANCES = ("finset", "heyting", "terms")

# Work guards: refuse inputs whose derived objects or arrow spaces would
# dwarf desk scale instead of hanging.
MAX_OBJECT_SIZE = 10**6
ENUMERATION_BUDGET = 8192

DEFAULT_TRIALS = {"distrib": 10, "curry": 10, "adjunction": 100, "mediator": 20}


@dataclass
class CheckReport:
    check: str
    instance: str
    params: dict
    verdict: str  # pass | fail | rejected-input
    seed: int
    encodings: str = fs.ENCODINGS_VERSION
    detail: Optional[str] = None
    counterexample: Optional[dict] = None
    elapsed_ms: float = 0.0

    def to_dict(self) -> dict:
        return {
            "check": self.check,
            "instance": self.instance,
            "params": self.params,
            "verdict": self.verdict,
            "seed": self.seed,
            "encodings": self.encodings,
            "detail": self.detail,
            "counterexample": self.counterexample,
            "elapsed_ms": self.elapsed_ms,
        }


class CheckFailed(Exception):
    def __init__(self, detail: str, counterexample: Optional[dict] = None):
        super().__init__(detail)
        self.detail = detail
        self.counterexample = counterexample


class RejectedInput(Exception):
    def __init__(self, detail: str, counterexample: Optional[dict] = None):
        super().__init__(detail)
        self.detail = detail
        self.counterexample = counterexample


def _run(
    check: str,
    instance: str,
    params: dict,
    seed: int,
    body: Callable[[], str],
) -> CheckReport:
    start = time.perf_counter()
    try:
        detail = body()
        verdict, counterexample = "pass", None
    except CheckFailed as failure:
        verdict, detail, counterexample = "fail", failure.detail, failure.counterexample
    except RejectedInput as rejected:
        verdict, detail, counterexample = (
            "rejected-input",
            rejected.detail,
            rejected.counterexample,
        )
    elapsed_ms = (time.perf_counter() - start) * 1000.0
    return CheckReport(
        check=check,
        instance=instance,
        params=params,
        verdict=verdict,
        seed=seed,
        detail=detail,
        counterexample=counterexample,
        elapsed_ms=elapsed_ms,
    )


# ---------------------------------------------------------------------------
# Finite-set checks
# ---------------------------------------------------------------------------


def _finset_objects(sizes: Sequence[int]) -> tuple[fs.FinSet, fs.FinSetObj, fs.FinSetObj, fs.FinSetObj]:
    if len(sizes) != 3 or any(s < 0 for s in sizes):
        raise RejectedInput(f"sizes must be three non-negative counts, got {list(sizes)}")
    cat = fs.FinSet()
    a, b, c = (fs.make_set(n, s) for n, s in zip("ABC", sizes))
    return cat, a, b, c


def _guard_size(size: int, what: str) -> None:
    if size > MAX_OBJECT_SIZE:
        raise RejectedInput(f"{what} would have {size} elements (cap {MAX_OBJECT_SIZE})")


def _table_mismatch(expected: fs.FunTable, got: fs.FunTable, **extra: Any) -> dict:
    out = {"expected": fs.table_to_json(expected), "got": fs.table_to_json(got)}
    out.update(extra)
    return out


def check_distrib_finset(sizes: Sequence[int], seed: int) -> CheckReport:
    def body() -> str:
        cat, a, b, c = _finset_objects(sizes)
        _guard_size(a.size * (b.size + c.size), "a×(b+c)")
        iso = cx.distrib_iso(cat, a, b, c)
        oracle = fs.oracle_distrib(cat, a, b, c)
        if not cat.arrows_equal(iso.fwd, oracle):
            raise CheckFailed(
                "forward arrow disagrees with the index oracle",
                _table_mismatch(oracle, iso.fwd),
            )
        back = cat.compose(iso.bwd, iso.fwd)
        if not cat.arrows_equal(back, cat.identity(iso.fwd.dom)):
            raise CheckFailed(
                "backward∘forward is not the identity",
                _table_mismatch(cat.identity(iso.fwd.dom), back),
            )
        forth = cat.compose(iso.fwd, iso.bwd)
        if not cat.arrows_equal(forth, cat.identity(iso.bwd.dom)):
            raise CheckFailed(
                "forward∘backward is not the identity",
                _table_mismatch(cat.identity(iso.bwd.dom), forth),
            )
        return "both round trips are identities; forward equals the index oracle"

    return _run("distrib", "finset", {"sizes": list(sizes)}, seed, body)


def check_curry_finset(sizes: Sequence[int], seed: int) -> CheckReport:
    def body() -> str:
        cat, a, b, c = _finset_objects(sizes)
        _guard_size(a.size ** (b.size * c.size), "a^(b×c)")
        _guard_size((a.size**b.size) ** c.size, "(a^b)^c")
        uncurry = cx.exp_uncurry(cat, a, b, c)
        curry = cx.exp_curry(cat, a, b, c)
        for got, oracle, name in (
            (curry, fs.oracle_exp_curry(cat, a, b, c), "currying"),
            (uncurry, fs.oracle_exp_uncurry(cat, a, b, c), "uncurrying"),
        ):
            if not cat.arrows_equal(got, oracle):
                raise CheckFailed(
                    f"{name} arrow disagrees with the numeral oracle",
                    _table_mismatch(oracle, got),
                )
        back = cat.compose(curry, uncurry)
        if not cat.arrows_equal(back, cat.identity(uncurry.dom)):
            raise CheckFailed(
                "curry∘uncurry is not the identity",
                _table_mismatch(cat.identity(uncurry.dom), back),
            )
        forth = cat.compose(uncurry, curry)
        if not cat.arrows_equal(forth, cat.identity(curry.dom)):
            raise CheckFailed(
                "uncurry∘curry is not the identity",
                _table_mismatch(cat.identity(curry.dom), forth),
            )
        return "transposes match the numeral oracles and are mutually inverse"

    return _run("curry", "finset", {"sizes": list(sizes)}, seed, body)


def check_adjunction_finset(sizes: Sequence[int], trials: int, seed: int) -> CheckReport:
    def body() -> str:
        cat, a, b, c = _finset_objects(sizes)
        ab = cat.product(a, b)
        cb = cat.exponential(b, c)
        _guard_size(cb.size, "c^b")
        hom_size = c.size**ab.size
        if hom_size <= ENUMERATION_BUDGET:
            gs: Iterable[fs.FunTable] = fs.enumerate_arrows(ab, c)
            fs_iter: Iterable[fs.FunTable] = fs.enumerate_arrows(a, cb)
            mode = f"exhaustive over {hom_size} arrows each way"
        else:
            gs = (fs.random_arrow(ab, c, seed + k) for k in range(trials))
            fs_iter = (fs.random_arrow(a, cb, seed + trials + k) for k in range(trials))
            mode = f"{trials} seeded arrows each way"
        transposed = []
        for g in gs:
            f = cx.hom_transpose(cat, g)
            back = cx.hom_untranspose_direct(cat, f)
            if not cat.arrows_equal(back, g):
                raise CheckFailed(
                    "untranspose∘transpose is not the identity on hom(a×b, c)",
                    _table_mismatch(g, back),
                )
            transposed.append(f.map)
        if hom_size <= ENUMERATION_BUDGET and len(set(transposed)) != len(transposed):
            raise CheckFailed("transpose is not injective on hom(a×b, c)")
        for f in fs_iter:
            g = cx.hom_untranspose_direct(cat, f)
            back = cx.hom_transpose(cat, g)
            if not cat.arrows_equal(back, f):
                raise CheckFailed(
                    "transpose∘untranspose is not the identity on hom(a, c^b)",
                    _table_mismatch(f, back),
                )
            long_way = cx.hom_untranspose_via_unit(cat, f)
            if not cat.arrows_equal(long_way, g):
                raise CheckFailed(
                    "unit-isomorphism composite disagrees with the counit composite",
                    _table_mismatch(g, long_way, via=fs.table_to_json(f)),
                )
        return f"hom-set bijection and both untranspose routes agree ({mode})"

    return _run(
        "adjunction", "finset", {"sizes": list(sizes), "trials": trials}, seed, body
    )


def _count_commuting_mediators(
    cat: fs.FinSet,
    a: fs.FinSetObj,
    b: fs.FinSetObj,
    c: fs.FinSetObj,
    q1: fs.FunTable,
    q2: fs.FunTable,
) -> tuple[int, Optional[fs.FunTable]]:
    """Enumerate every table a×(b+c) → d and count the commuting ones."""
    dom = cat.product(a, cat.coproduct(b, c))
    left = product_map(cat, cat.identity(a), cat.inj1(b, c))
    right = product_map(cat, cat.identity(a), cat.inj2(b, c))
    count, found = 0, None
    for candidate in fs.enumerate_arrows(dom, q1.cod, cap=ENUMERATION_BUDGET):
        if cat.arrows_equal(cat.compose(candidate, left), q1) and cat.arrows_equal(
            cat.compose(candidate, right), q2
        ):
            count += 1
            found = candidate
    return count, found


def check_mediator_finset(sizes: Sequence[int], trials: int, seed: int) -> CheckReport:
    def body() -> str:
        cat, a, b, c = _finset_objects(sizes)
        dom = cat.product(a, cat.coproduct(b, c))
        _guard_size(dom.size, "a×(b+c)")
        left = product_map(cat, cat.identity(a), cat.inj1(b, c))
        right = product_map(cat, cat.identity(a), cat.inj2(b, c))

        def examine(q1: fs.FunTable, q2: fs.FunTable, label: str) -> fs.FunTable:
            m = cx.mediator(cat, a, b, c, q1, q2)
            forced = fs.oracle_mediator(cat, a, b, c, q1, q2)
            if not cat.arrows_equal(m, forced):
                raise CheckFailed(
                    f"{label}: mediator disagrees with the forced table",
                    _table_mismatch(forced, m, q1=fs.table_to_json(q1), q2=fs.table_to_json(q2)),
                )
            if not cat.arrows_equal(cat.compose(m, left), q1) or not cat.arrows_equal(
                cat.compose(m, right), q2
            ):
                raise CheckFailed(
                    f"{label}: mediator does not commute with the cocone",
                    {"mediator": fs.table_to_json(m)},
                )
            if q1.cod.size ** dom.size <= ENUMERATION_BUDGET:
                count, found = _count_commuting_mediators(cat, a, b, c, q1, q2)
                if count != 1 or not cat.arrows_equal(found, m):
                    raise CheckFailed(
                        f"{label}: {count} commuting candidates, expected exactly 1",
                        {"q1": fs.table_to_json(q1), "q2": fs.table_to_json(q2)},
                    )
            return m

        # The coproduct cocone of a×(b+c) itself mediates by the identity.
        m_id = examine(left, right, "identity cocone")
        if not cat.arrows_equal(m_id, cat.identity(dom)):
            raise CheckFailed(
                "identity cocone has a non-identity mediator",
                _table_mismatch(cat.identity(dom), m_id),
            )
        # The injection cocone mediates by the backward distributivity arrow.
        d_obj = cat.coproduct(cat.product(a, b), cat.product(a, c))
        m_inj = examine(
            cat.inj1(cat.product(a, b), cat.product(a, c)),
            cat.inj2(cat.product(a, b), cat.product(a, c)),
            "injection cocone",
        )
        if not cat.arrows_equal(m_inj, cx.distrib_backward(cat, a, b, c)):
            raise CheckFailed("injection cocone mediator is not the backward arrow")
        rng = random.Random(seed)
        ran = 0
        for k in range(trials):
            d = fs.make_set("D", rng.randint(1, 3))
            q1 = fs.random_arrow(cat.product(a, b), d, seed=rng.randrange(2**30))
            q2 = fs.random_arrow(cat.product(a, c), d, seed=rng.randrange(2**30))
            examine(q1, q2, f"seeded cocone {k}")
            ran += 1
        return (
            f"unique commuting mediator matched the transposed-copair composite on "
            f"the canonical cocones and {ran} seeded cocones into |D| ≤ 3"
        )

    return _run(
        "mediator", "finset", {"sizes": list(sizes), "trials": trials}, seed, body
    )


def mediator_side_scan(sizes: Sequence[int]) -> tuple[int, int]:
    """Exhaustively check each cocone leg separately.

    The mediator's restriction to a summand depends only on that leg, so
    scanning all legs q1 (with the other leg fixed) and all legs q2
    covers every cocone pair; returns the two side counts.
    """
    cat, a, b, c = _finset_objects(sizes)
    ab, ac = cat.product(a, b), cat.product(a, c)
    d = cat.coproduct(ab, ac)
    left = product_map(cat, cat.identity(a), cat.inj1(b, c))
    right = product_map(cat, cat.identity(a), cat.inj2(b, c))
    fixed_q1, fixed_q2 = cat.inj1(ab, ac), cat.inj2(ab, ac)
    n1 = n2 = 0
    for q1 in fs.enumerate_arrows(ab, d, cap=ENUMERATION_BUDGET + 1):
        m = cx.mediator(cat, a, b, c, q1, fixed_q2)
        assert cat.arrows_equal(cat.compose(m, left), q1)
        assert cat.arrows_equal(m, fs.oracle_mediator(cat, a, b, c, q1, fixed_q2))
        n1 += 1
    for q2 in fs.enumerate_arrows(ac, d, cap=ENUMERATION_BUDGET + 1):
        m = cx.mediator(cat, a, b, c, fixed_q1, q2)
        assert cat.arrows_equal(cat.compose(m, right), q2)
        assert cat.arrows_equal(m, fs.oracle_mediator(cat, a, b, c, fixed_q1, q2))
        n2 += 1
    return n1, n2


# ---------------------------------------------------------------------------
# Heyting checks
# ---------------------------------------------------------------------------


def resolve_lattice(spec: Mapping[str, Any]) -> tuple[str, hey.FiniteLattice]:
    """Build a lattice from a description; bad structure rejects the input."""
    kind = spec.get("kind")
    try:
        if kind == "divisors":
            n = int(spec["n"])
            return f"divisors:{n}", hey.build_divisor_lattice(n)
        if kind == "downset":
            points = [str(p) for p in spec["points"]]
            relation = [(str(x), str(y)) for x, y in spec.get("relation", [])]
            return f"downset:{len(points)}pts", hey.build_downset_lattice(points, relation)
        if kind == "explicit":
            return "explicit", hey.lattice_from_json(spec)
    except hey.NotHeyting as bad:
        raise RejectedInput(
            f"not a Heyting algebra: {bad}", {"witness": list(bad.witness)}
        ) from None
    except (hey.LatticeError, KeyError, ValueError, TypeError) as bad:
        raise RejectedInput(f"bad lattice description: {bad}") from None
    raise RejectedInput(f"unknown lattice kind {kind!r}")


def _heyting_category(lattice: hey.FiniteLattice) -> hey.HeytingCategory:
    try:
        return hey.HeytingCategory(lattice)
    except hey.NotHeyting as bad:
        raise RejectedInput(
            f"not a Heyting algebra: {bad}", {"witness": list(bad.witness)}
        ) from None


def _heyting_triples(
    lattice: hey.FiniteLattice, objects: Optional[Sequence[str]]
) -> list[tuple[int, int, int]]:
    if objects is None:
        rng = range(lattice.size)
        return list(itertools.product(rng, rng, rng))
    if len(objects) != 3:
        raise RejectedInput(f"need exactly three objects, got {list(objects)}")
    try:
        a, b, c = (lattice.index_of(str(o)) for o in objects)
    except KeyError as missing:
        raise RejectedInput(str(missing)) from None
    return [(a, b, c)]


def check_distrib_heyting(
    spec: Mapping[str, Any], objects: Optional[Sequence[str]], seed: int
) -> CheckReport:
    params = {"lattice": None, "objects": list(objects) if objects else None}

    def body() -> str:
        label, lattice = resolve_lattice(spec)
        params["lattice"] = label
        cat = _heyting_category(lattice)
        triples = _heyting_triples(lattice, objects)
        for a, b, c in triples:
            lhs = cat.product(a, cat.coproduct(b, c))
            rhs = cat.coproduct(cat.product(a, b), cat.product(a, c))
            if lhs != rhs:
                raise CheckFailed(
                    "meet does not distribute over join",
                    {
                        "triple": [lattice.elements[i] for i in (a, b, c)],
                        "a∧(b∨c)": lattice.elements[lhs],
                        "(a∧b)∨(a∧c)": lattice.elements[rhs],
                    },
                )
            if not verify_iso(cat, cx.distrib_iso(cat, a, b, c)):
                raise CheckFailed(
                    "distributivity witnesses do not round-trip",
                    {"triple": [lattice.elements[i] for i in (a, b, c)]},
                )
        if len(triples) == 1:
            a, b, c = triples[0]
            value = lattice.elements[cat.product(a, cat.coproduct(b, c))]
            return f"objects coincide: a∧(b∨c) = (a∧b)∨(a∧c) = {value}"
        return f"objects coincide for all {len(triples)} element triples"

    return _run("distrib", "heyting", params, seed, body)


def check_curry_heyting(
    spec: Mapping[str, Any], objects: Optional[Sequence[str]], seed: int
) -> CheckReport:
    params = {"lattice": None, "objects": list(objects) if objects else None}

    def body() -> str:
        label, lattice = resolve_lattice(spec)
        params["lattice"] = label
        cat = _heyting_category(lattice)
        triples = _heyting_triples(lattice, objects)
        for a, b, c in triples:
            lhs = cat.exponential(cat.product(b, c), a)  # (b∧c) ⇒ a
            rhs = cat.exponential(c, cat.exponential(b, a))  # c ⇒ (b ⇒ a)
            if lhs != rhs:
                raise CheckFailed(
                    "implication does not curry",
                    {
                        "triple": [lattice.elements[i] for i in (a, b, c)],
                        "(b∧c)⇒a": lattice.elements[lhs],
                        "c⇒(b⇒a)": lattice.elements[rhs],
                    },
                )
            if not verify_iso(cat, cx.curry_iso(cat, a, b, c)):
                raise CheckFailed(
                    "currying witnesses do not round-trip",
                    {"triple": [lattice.elements[i] for i in (a, b, c)]},
                )
        return f"(b∧c)⇒a equals c⇒(b⇒a) for all {len(triples)} element triples"

    return _run("curry", "heyting", params, seed, body)


def check_adjunction_heyting(
    spec: Mapping[str, Any], objects: Optional[Sequence[str]], seed: int
) -> CheckReport:
    params = {"lattice": None, "objects": list(objects) if objects else None}

    def body() -> str:
        label, lattice = resolve_lattice(spec)
        params["lattice"] = label
        cat = _heyting_category(lattice)
        triples = _heyting_triples(lattice, objects)
        checked = 0
        for a, b, c in triples:
            if not lattice.leq[lattice.meet[a][b]][c]:
                continue  # empty hom-set on this side of the adjunction
            g = cat.witness(lattice.meet[a][b], c)
            f = cx.hom_transpose(cat, g, factors=(a, b))
            back = cx.hom_untranspose_direct(cat, f, parts=(b, c))
            long_way = cx.hom_untranspose_via_unit(cat, f, parts=(b, c))
            if not (cat.arrows_equal(back, g) and cat.arrows_equal(long_way, g)):
                raise CheckFailed(
                    "transpose round trip failed",
                    {"triple": [lattice.elements[i] for i in (a, b, c)]},
                )
            checked += 1
        return f"transpose and both untranspose routes agree on {checked} inhabited hom-sets"

    return _run("adjunction", "heyting", params, seed, body)


def check_mediator_heyting(
    spec: Mapping[str, Any], objects: Optional[Sequence[str]], seed: int
) -> CheckReport:
    params = {"lattice": None, "objects": list(objects) if objects else None}

    def body() -> str:
        label, lattice = resolve_lattice(spec)
        params["lattice"] = label
        cat = _heyting_category(lattice)
        triples = _heyting_triples(lattice, objects)
        for a, b, c in triples:
            d = cat.coproduct(cat.product(a, b), cat.product(a, c))
            q1 = cat.witness(cat.product(a, b), d)
            q2 = cat.witness(cat.product(a, c), d)
            m = cx.mediator(cat, a, b, c, q1, q2)
            expected_dom = cat.product(a, cat.coproduct(b, c))
            if m.dom != expected_dom or m.cod != d:
                raise CheckFailed(
                    "mediator has the wrong ends",
                    {"triple": [lattice.elements[i] for i in (a, b, c)]},
                )
            left = product_map(cat, cat.identity(a), cat.inj1(b, c))
            right = product_map(cat, cat.identity(a), cat.inj2(b, c))
            if not (
                cat.arrows_equal(cat.compose(m, left), q1)
                and cat.arrows_equal(cat.compose(m, right), q2)
            ):
                raise CheckFailed(
                    "mediator does not commute with the cocone",
                    {"triple": [lattice.elements[i] for i in (a, b, c)]},
                )
        return (
            f"a∧(b∨c) ≤ (a∧b)∨(a∧c) witnessed by the mediator for all "
            f"{len(triples)} element triples"
        )

    return _run("mediator", "heyting", params, seed, body)


# ---------------------------------------------------------------------------
# Free-instance checks
# ---------------------------------------------------------------------------


def _semantic(
    f: tm.TermArrow,
    g: tm.TermArrow,
    what: str,
    trials: int,
    max_base_size: int,
    seed: int,
) -> None:
    res = tm.semantic_equal(f, g, trials=trials, max_base_size=max_base_size, seed=seed)
    if not res.equal:
        raise CheckFailed(
            f"{what}: interpretations differ",
            {
                "witness_sizes": res.witness,
                "left": tsyn.format_term_document(f),
                "right": tsyn.format_term_document(g),
            },
        )


def _interpret_matches(
    symbolic: tm.TermArrow,
    direct: Callable[[fs.FinSet, fs.FinSetObj, fs.FinSetObj, fs.FinSetObj], fs.FunTable],
    what: str,
    trials: int,
    max_base_size: int,
    seed: int,
) -> int:
    cat = fs.FinSet()
    envs = tm.environments(("A", "B", "C"), trials, max_base_size, seed)
    for sizes in envs:
        env = {name: fs.make_set(name, size) for name, size in sizes.items()}
        expected = direct(cat, env["A"], env["B"], env["C"])
        got = tm.interpret(symbolic, env)
        if not cat.arrows_equal(got, expected):
            raise CheckFailed(
                f"{what}: symbolic interpretation differs from the direct table",
                {"sizes": sizes, "expected": fs.table_to_json(expected), "got": fs.table_to_json(got)},
            )
    return len(envs)


def check_terms(check: str, trials: int, max_base_size: int, seed: int) -> CheckReport:
    a, b, c = Base("A"), Base("B"), Base("C")
    free = tm.FreeCategory()
    params = {"trials": trials, "max_base_size": max_base_size}

    def body() -> str:
        if check == "distrib":
            fwd = cx.distrib_forward(free, a, b, c)
            bwd = cx.distrib_backward(free, a, b, c)
            _semantic(
                free.compose(bwd, fwd), free.identity(fwd.dom),
                "backward∘forward vs id", trials, max_base_size, seed,
            )
            _semantic(
                free.compose(fwd, bwd), free.identity(bwd.dom),
                "forward∘backward vs id", trials, max_base_size, seed,
            )
            n = _interpret_matches(
                fwd, lambda cat, x, y, z: cx.distrib_forward(cat, x, y, z),
                "forward", trials, max_base_size, seed,
            )
            _interpret_matches(
                bwd, lambda cat, x, y, z: cx.distrib_backward(cat, x, y, z),
                "backward", trials, max_base_size, seed,
            )
            return f"indistinguishable-under-trials ({n} environments)"
        if check == "curry":
            uncurry = cx.exp_uncurry(free, a, b, c)
            curry = cx.exp_curry(free, a, b, c)
            _semantic(
                free.compose(curry, uncurry), free.identity(uncurry.dom),
                "curry∘uncurry vs id", trials, max_base_size, seed,
            )
            _semantic(
                free.compose(uncurry, curry), free.identity(curry.dom),
                "uncurry∘curry vs id", trials, max_base_size, seed,
            )
            n = _interpret_matches(
                uncurry, lambda cat, x, y, z: cx.exp_uncurry(cat, x, y, z),
                "uncurry", trials, max_base_size, seed,
            )
            _interpret_matches(
                curry, lambda cat, x, y, z: cx.exp_curry(cat, x, y, z),
                "curry", trials, max_base_size, seed,
            )
            return f"indistinguishable-under-trials ({n} environments)"
        if check == "adjunction":
            cb = Exp(base=b, target=c)
            ident = free.identity(cb)
            _semantic(
                cx.hom_untranspose_direct(free, ident), free.eval(b, c),
                "untranspose(id) vs eval", trials, max_base_size, seed,
            )
            _semantic(
                cx.hom_transpose(free, free.eval(b, c)), ident,
                "transpose(eval) vs id", trials, max_base_size, seed,
            )
            _semantic(
                cx.hom_transpose(free, cx.hom_untranspose_direct(free, ident)), ident,
                "transpose∘untranspose vs id", trials, max_base_size, seed,
            )
            # Unit-route comparisons keep a base type as the domain: for
            # f out of an exponential, c^(dom×b) outgrows any budget.
            for f in (
                free.curry(free.proj2(a, b), a, b),  # a → b^b
                free.curry(free.proj1(a, b), a, b),  # a → a^b
            ):
                g = cx.hom_untranspose_direct(free, f)
                _semantic(
                    cx.hom_transpose(free, g), f,
                    "transpose∘untranspose vs id", trials, max_base_size, seed,
                )
                _semantic(
                    cx.hom_untranspose_via_unit(free, f), g,
                    "unit-route untranspose vs counit route", trials, max_base_size, seed,
                )
            return "indistinguishable-under-trials"
        if check == "mediator":
            ab, ac = free.product(a, b), free.product(a, c)
            m = cx.mediator(free, a, b, c, free.inj1(ab, ac), free.inj2(ab, ac))
            _semantic(
                m, cx.distrib_backward(free, a, b, c),
                "injection-cocone mediator vs backward arrow", trials, max_base_size, seed,
            )
            left = product_map(free, free.identity(a), free.inj1(b, c))
            right = product_map(free, free.identity(a), free.inj2(b, c))
            m_id = cx.mediator(free, a, b, c, left, right)
            _semantic(
                m_id, free.identity(m_id.dom),
                "identity-cocone mediator vs id", trials, max_base_size, seed,
            )
            return "indistinguishable-under-trials"
        raise RejectedInput(f"unknown check {check!r}")

    return _run(check, "terms", params, seed, body)


def check_term_eq(
    left_text: str, right_text: str, trials: int, max_base_size: int, seed: int
) -> CheckReport:
    params = {"trials": trials, "max_base_size": max_base_size}

    def body() -> str:
        try:
            left = tsyn.parse_term_document(left_text)
            right = tsyn.parse_term_document(right_text)
        except tsyn.TermSyntaxError as bad:
            raise RejectedInput(f"cannot read term document: {bad}") from None
        try:
            res = tm.semantic_equal(
                left, right, trials=trials, max_base_size=max_base_size, seed=seed
            )
        except tm.TermTypeError as bad:
            raise RejectedInput(str(bad)) from None
        if not res.equal:
            env = {name: fs.make_set(name, size) for name, size in res.witness.items()}
            raise CheckFailed(
                "terms are distinct",
                {
                    "witness_sizes": res.witness,
                    "left_table": fs.table_to_json(tm.interpret(left, env)),
                    "right_table": fs.table_to_json(tm.interpret(right, env)),
                },
            )
        return f"indistinguishable-under-trials ({res.trials_run} environments)"

    return _run("term-eq", "terms", params, seed, body)


# ---------------------------------------------------------------------------
# Dispatch and sweeps
# ---------------------------------------------------------------------------


def run_check(
    check: str,
    instance: str,
    sizes: Optional[Sequence[int]] = None,
    lattice: Optional[Mapping[str, Any]] = None,
    objects: Optional[Sequence[str]] = None,
    trials: Optional[int] = None,
    max_base_size: int = 3,
    seed: int = 0,
) -> CheckReport:
    if check not in CHECK_NAMES:
        raise ValueError(f"unknown check {check!r}")
    if trials is None:
        trials = DEFAULT_TRIALS[check]
    if instance == "finset":
        sizes = sizes if sizes is not None else (2, 2, 2)
        if check == "distrib":
            return check_distrib_finset(sizes, seed)
        if check == "curry":
            return check_curry_finset(sizes, seed)
        if check == "adjunction":
            return check_adjunction_finset(sizes, trials, seed)
        return check_mediator_finset(sizes, trials, seed)
    if instance == "heyting":
        if lattice is None:
            def missing() -> str:
                raise RejectedInput("no lattice supplied (use divisors:N, a JSON file, or downset:FILE)")

            return _run(check, "heyting", {}, seed, missing)
        fn = {
            "distrib": check_distrib_heyting,
            "curry": check_curry_heyting,
            "adjunction": check_adjunction_heyting,
            "mediator": check_mediator_heyting,
        }[check]
        return fn(lattice, objects, seed)
    if instance == "terms":
        return check_terms(check, trials, max_base_size, seed)
    raise ValueError(f"unknown instance {instance!r}")


def sweep_finset(max_size: int, seed: int, trials: Optional[int] = None) -> list[CheckReport]:
    """Every check at every size triple in {0..max_size}³, in order."""
    if max_size < 0:
        raise ValueError("max_size must be non-negative")
    reports = []
    rng = range(max_size + 1)
    for sizes in itertools.product(rng, rng, rng):
        for check in CHECK_NAMES:
            reports.append(
                run_check(check, "finset", sizes=sizes, trials=trials, seed=seed)
            )
    return reports


def sweep_heyting(max_poset: int, seed: int) -> list[CheckReport]:
    """Every check on the down-set lattice of every poset on ≤ max_poset
    points (deduplicated by relation closure)."""
    if max_poset < 0:
        raise ValueError("max_poset must be non-negative")
    reports = []
    for points in range(max_poset + 1):
        for names, relation in hey.enumerate_posets(points):
            spec = {
                "kind": "downset",
                "points": list(names),
                "relation": [list(p) for p in relation],
            }
            for check in CHECK_NAMES:
                report = run_check(check, "heyting", lattice=spec, seed=seed)
                report.params["poset"] = {
                    "points": list(names),
                    "relation": [list(p) for p in relation],
                }
                reports.append(report)
    return reports


def summarize(reports: Sequence[CheckReport]) -> dict:
    verdicts = [r.verdict for r in reports]
    return {
        "total": len(reports),
        "passed": verdicts.count("pass"),
        "failed": verdicts.count("fail"),
        "rejected": verdicts.count("rejected-input"),
    }


def exit_code(reports: Sequence[CheckReport]) -> int:
    summary = summarize(reports)
    if summary["rejected"]:
        return 2
    if summary["failed"]:
        return 1
    return 0
