"""Named property suites, runnable from the CLI and from the tests.

Each suite returns per-property pass/fail counts plus replayable witnesses
for every failure.  Randomized suites derive one independent RNG stream per
trial from ``(seed, trial index)``, so reports are identical no matter how
trials are distributed over workers.
"""

from __future__ import annotations

import hashlib
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations, islice
from typing import Callable, Iterable, Optional, Sequence

from . import amalgam, generic, poset, sampling, universe
from .errors import (
    EqualSup,
    HypothesisViolated,
    NotGoodTwins,
    ScatterlabError,
    UnknownSuite,
)
from .poset import Condition
from .universe import PairFunction


def derive_seed(seed: int, index: int, salt: str = "") -> int:
    """Stable per-trial seed, independent of process layout."""
    data = f"{seed}:{index}:{salt}".encode()
    return int.from_bytes(hashlib.sha256(data).digest()[:8], "big")


@dataclass
class RunReport:
    command: str
    inputs: dict
    outcome: dict[str, dict[str, int]]
    witnesses: list[dict]
    seed: int
    notes: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return all(counts["fail"] == 0 for counts in self.outcome.values())

    def as_dict(self) -> dict:
        return {
            "command": self.command,
            "inputs": self.inputs,
            "outcome": self.outcome,
            "witnesses": self.witnesses,
            "seed": self.seed,
            "notes": self.notes,
        }


class _Tally:
    """Pass/fail bookkeeping with the witness-iff-failure invariant."""

    def __init__(self) -> None:
        self.outcome: dict[str, dict[str, int]] = {}
        self.witnesses: list[dict] = []

    def hit(self, prop: str, ok: bool, witness: Optional[dict] = None) -> None:
        slot = self.outcome.setdefault(prop, {"pass": 0, "fail": 0})
        if ok:
            slot["pass"] += 1
        else:
            slot["fail"] += 1
            self.witnesses.append({"property": prop, **(witness or {})})

    def merge_trial(self, results: Iterable[tuple[str, bool, Optional[dict]]], trial: int) -> None:
        for prop, ok, witness in results:
            payload = dict(witness or {})
            payload.setdefault("trial", trial)
            self.hit(prop, ok, payload)

    def sorted_witnesses(self) -> list[dict]:
        return sorted(self.witnesses, key=lambda w: (w.get("trial", -1), w["property"]))


def _pmap(fn: Callable, payloads: Sequence, jobs: int) -> list:
    if jobs > 1 and len(payloads) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as ex:
            chunk = max(1, len(payloads) // (4 * jobs))
            return list(ex.map(fn, payloads, chunksize=chunk))
    return [fn(p) for p in payloads]


@dataclass
class SuiteContext:
    trials: Optional[int]
    seed: int
    jobs: int
    f: Optional[PairFunction]
    kappa: int
    density: float

    def n(self, default: int) -> int:
        return self.trials if self.trials is not None else default


# star-laws ----------------------------------------------------------------

def _star_expected(x: frozenset[int], y: frozenset[int]) -> tuple[int, frozenset[int]]:
    """Independent case analysis; returns (number of applicable cases, value)."""
    cases = []
    if max(x) not in y and max(y) not in x:
        cases.append(x & y)
    if max(x) in y:
        cases.append(x - y)
    if max(y) in x:
        cases.append(y - x)
    return len(cases), cases[0] if cases else frozenset()


def run_star_laws(ctx: SuiteContext) -> tuple[_Tally, dict]:
    tally = _Tally()
    subsets = [frozenset(s) for r in range(1, 7) for s in combinations(range(6), r)]
    for x in subsets:
        for y in subsets:
            if max(x) == max(y):
                try:
                    poset.star(x, y)
                    tally.hit("equal-sup-raises", False, {"x": sorted(x), "y": sorted(y)})
                except EqualSup:
                    tally.hit("equal-sup-raises", True)
                continue
            ncases, expected = _star_expected(x, y)
            got = poset.star(x, y)
            tally.hit("exactly-one-case", ncases == 1, {"x": sorted(x), "y": sorted(y)})
            tally.hit(
                "matches-definition",
                got == expected,
                {"x": sorted(x), "y": sorted(y), "got": sorted(got)},
            )
    return tally, {}


# poset-laws ---------------------------------------------------------------

_POSET_DOMAIN = (0, 1, 2, 3, 4)
_POSET_CAP_PER_DOMAIN = 40


def _poset_laws_trial(payload: tuple) -> list[tuple[str, bool, Optional[dict]]]:
    trial, seed, f = payload
    if f is None:
        density = (0.0, 0.3, 0.6, 1.0)[trial % 4]
        f = universe.random_pair_function(len(_POSET_DOMAIN), density, derive_seed(seed, trial, "poset-f"))
    rng = random.Random(derive_seed(seed, trial, "poset-rng"))
    results: list[tuple[str, bool, Optional[dict]]] = []

    domain = _POSET_DOMAIN[: f.kappa]
    pool: list[Condition] = []
    for r in range(len(domain) + 1):
        for dom in combinations(domain, r):
            pool.extend(islice(sampling.iter_conditions(f, dom), _POSET_CAP_PER_DOMAIN))

    def note(p: Condition, **extra) -> dict:
        return {"a": list(p.a), **extra}

    for p in pool:
        results.append(("reflexive", poset.leq(p, p), note(p)))
        below = list(p.a)
        for r in range(len(below) + 1):
            for b in combinations(below, r):
                rc = poset.restrict(p, b)
                criterion = all(v <= frozenset(b) for v in rc.i.values())
                results.append(("flag-matches-criterion", rc.is_condition == criterion, note(p, b=list(b))))
                if b == tuple(below[: len(b)]):
                    results.append(("initial-segment-is-condition", rc.is_condition, note(p, b=list(b))))
                as_cond = Condition(rc.b, rc.h, rc.i)
                valid = poset.validate_condition(f, as_cond).ok
                results.append(("flag-iff-valid", rc.is_condition == valid, note(p, b=list(b))))
                if rc.is_condition:
                    results.append(("restriction-below", poset.leq(p, as_cond), note(p, b=list(b))))
                    agrees = poset.leq_restricted(poset.as_restriction(p), rc) == poset.leq(p, as_cond)
                    results.append(("leq-restricted-agrees", agrees, note(p, b=list(b))))
        # transitivity along nested restriction chains
        for _ in range(3):
            if not p.a:
                break
            b = tuple(sorted(rng.sample(below, rng.randint(0, len(below)))))
            c = tuple(sorted(rng.sample(b, rng.randint(0, len(b))))) if b else ()
            q, rr = poset.restrict(p, b), poset.restrict(p, c)
            if q.is_condition and rr.is_condition:
                qc, rrc = q.as_condition(), rr.as_condition()
                if poset.leq(p, qc) and poset.leq(qc, rrc):
                    results.append(("transitive", poset.leq(p, rrc), note(p, b=list(b), c=list(c))))

    by_domain: dict[tuple[int, ...], list[Condition]] = {}
    for p in pool:
        by_domain.setdefault(p.a, []).append(p)
    for dom, group in by_domain.items():
        sample = group if len(group) <= 12 else rng.sample(group, 12)
        for p, q in combinations(sample, 2):
            anti = not (poset.leq(p, q) and poset.leq(q, p)) or p == q
            results.append(("antisymmetric", anti, {"a": list(dom)}))
    return results


def run_poset_laws(ctx: SuiteContext) -> tuple[_Tally, dict]:
    n = ctx.n(1 if ctx.f is not None else 20)  # a fixed f makes trials identical
    payloads = [(t, ctx.seed, ctx.f) for t in range(n)]
    tally = _Tally()
    for trial, results in enumerate(_pmap(_poset_laws_trial, payloads, ctx.jobs)):
        tally.merge_trial(results, trial)
    return tally, {}


# twins-amalgam ------------------------------------------------------------

def g_well_defined(p: Condition, q: Condition) -> bool:
    """The three equivalent expressions for a shared point's merged
    neighbourhood set coincide."""
    a, a2 = frozenset(p.a), frozenset(q.a)
    d = {eta: amalgam.delta_xi(p, q, eta) for eta in a | a2}
    for xi in a & a2:
        e1 = p.h[xi] | q.h[xi]
        e2 = p.h[xi] | frozenset(
            eta for eta in a2 - a if d[eta] is not None and d[eta] in p.h[xi]
        )
        e3 = q.h[xi] | frozenset(
            eta for eta in a - a2 if d[eta] is not None and d[eta] in q.h[xi]
        )
        if not e1 == e2 == e3:
            return False
    return True


def _twins_trial(payload: tuple) -> list[tuple[str, bool, Optional[dict]]]:
    trial, seed, f, kappa, density = payload
    rng = random.Random(derive_seed(seed, trial, "twins-rng"))
    if f is None:
        kappa = rng.randint(8, kappa)
        f = universe.random_pair_function(kappa, density, derive_seed(seed, trial, "twins-f"))
    size = rng.randint(0, 6)
    f2, p, q = sampling.good_twin_pair(f, rng, size)
    results: list[tuple[str, bool, Optional[dict]]] = []
    wit = {"a": list(p.a), "a2": list(q.a)}
    results.append(("sampler-yields-good-twins", amalgam.are_good_twins(f2, p, q), wit))
    try:
        r = amalgam.amalgamate(f2, p, q)
    except NotGoodTwins as exc:
        results.append(("amalgamation-succeeds", False, {**wit, "clauses": list(exc.clauses)}))
        return results
    results.append(("amalgamation-succeeds", True, wit))
    results.append(("result-valid", poset.validate_condition(f2, r).ok, wit))
    results.append(("below-left", poset.leq(r, p), wit))
    results.append(("below-right", poset.leq(r, q), wit))
    results.append(("symmetric", amalgam.amalgamate(f2, q, p) == r, wit))
    results.append(("membership-equivalence", amalgam.verify_membership_equiv(p, q, f2), wit))
    results.append(("merged-h-well-defined", g_well_defined(p, q), wit))
    return results


def run_twins_amalgam(ctx: SuiteContext) -> tuple[_Tally, dict]:
    n = ctx.n(500)
    payloads = [(t, ctx.seed, ctx.f, ctx.kappa, ctx.density) for t in range(n)]
    tally = _Tally()
    for trial, results in enumerate(_pmap(_twins_trial, payloads, ctx.jobs)):
        tally.merge_trial(results, trial)
    return tally, {}


# insertion ----------------------------------------------------------------

def _insertion_trial(payload: tuple) -> list[tuple[str, bool, Optional[dict]]]:
    trial, seed, kappa = payload
    rng = random.Random(derive_seed(seed, trial, "insertion-rng"))
    k = rng.choice((1, 2))
    f, s, layout = sampling.insertion_instance(
        rng,
        kappa=max(kappa, 12),
        k=k,
        q_size=rng.randint(1, 3),
        extra_points=rng.randint(0, 3),
        density=rng.choice((0.2, 0.5, 0.8)),
    )
    wit = {"a": list(s.a), "k": k, "S": sorted(layout.S), "Q": sorted(layout.Q)}
    results: list[tuple[str, bool, Optional[dict]]] = []
    try:
        r = amalgam.insertion_construction(f, s, layout)
    except HypothesisViolated as exc:
        results.append(("hypotheses-accepted", False, {**wit, "reason": str(exc)}))
        return results
    results.append(("hypotheses-accepted", True, wit))
    results.append(("result-valid", poset.validate_condition(f, r).ok, wit))
    results.append(
        ("(a)-below-s-trace", poset.leq_restricted(poset.as_restriction(r), poset.restrict(s, layout.S)), wit)
    )
    results.append(
        (
            "(b)-below-qe-trace",
            poset.leq_restricted(poset.as_restriction(r), poset.restrict(s, layout.Q | layout.E)),
            wit,
        )
    )
    c_block = layout.S - poset.h_union(s, layout.Q | layout.E)
    results.append(("(c)-block-inserted", c_block <= r.h[layout.gammas[0]], {**wit, "C": sorted(c_block)}))
    se = poset.restrict(s, layout.S | layout.E).as_condition()
    results.append(("(d)-refines", poset.precedes(se, r), wit))
    return results


def run_insertion(ctx: SuiteContext) -> tuple[_Tally, dict]:
    n = ctx.n(100)
    payloads = [(t, ctx.seed, ctx.kappa) for t in range(n)]
    tally = _Tally()
    for trial, results in enumerate(_pmap(_insertion_trial, payloads, ctx.jobs)):
        tally.merge_trial(results, trial)
    return tally, {}


# closure-laws -------------------------------------------------------------

def _pair_closure_trial(payload: tuple) -> list[tuple[str, bool, Optional[dict]]]:
    trial, seed, exhaustive = payload
    density = (0.0, 0.5, 1.0)[trial % 3]
    kappa = 5
    f = universe.random_pair_function(kappa, density, derive_seed(seed, trial, "clf"))
    rng = random.Random(derive_seed(seed, trial, "clf-rng"))
    results: list[tuple[str, bool, Optional[dict]]] = []
    pool = list(range(kappa))
    all_subsets = [frozenset(s) for r in range(kappa + 1) for s in combinations(pool, r)]
    if exhaustive:
        combos = [(k, kp) for k in all_subsets for kp in all_subsets]
    else:
        combos = [(sampling.random_subset(rng, pool), sampling.random_subset(rng, pool)) for _ in range(64)]

    for base, partners in combos:
        res = universe.pair_closure(f, base, partners)
        cl = res.closure
        wit = {"K": sorted(base), "K2": sorted(partners), "density": density}
        results.append(("contains-base", base <= cl, wit))
        if base:
            results.append(("max-preserved", max(cl) == max(base), wit))
        else:
            results.append(("empty-base-empty-closure", cl == frozenset(), wit))
        closed = all(
            f.value(x, y) <= cl
            for x in cl
            for y in (cl | partners)
            if x != y
        )
        results.append(("closed-under-values", closed, wit))
        again = universe.pair_closure(f, cl, partners).closure
        results.append(("idempotent", again == cl, wit))
        extras = [e for e in pool if e not in base]
        for e in (extras if exhaustive else extras[:2]):
            bigger = universe.pair_closure(f, base | {e}, partners).closure
            results.append(("monotone", cl <= bigger, {**wit, "extra": e}))
    return results


def _toy_spaces(kappa: int) -> list[tuple[str, generic.SpaceModel]]:
    nested = {a: frozenset(range(a + 1)) for a in range(kappa)}
    singles = {a: frozenset((a,)) for a in range(kappa)}
    rng = random.Random(7)
    scrambled = {
        a: frozenset(x for x in range(kappa) if rng.random() < 0.4)
        for a in range(kappa)
    }
    indiscrete = {a: frozenset(range(kappa)) for a in range(kappa)}
    return [
        ("nested", generic.SpaceModel(kappa, nested, {})),
        ("singletons", generic.SpaceModel(kappa, singles, {})),
        ("scrambled", generic.SpaceModel(kappa, scrambled, {})),
        ("indiscrete", generic.SpaceModel(kappa, indiscrete, {})),
    ]


def run_closure_laws(ctx: SuiteContext) -> tuple[_Tally, dict]:
    n = ctx.n(150)
    payloads = [(t, ctx.seed, t < 6) for t in range(n)]
    tally = _Tally()
    for trial, results in enumerate(_pmap(_pair_closure_trial, payloads, ctx.jobs)):
        tally.merge_trial(results, trial)

    # Kuratowski laws for the induced finite topology, exhaustive at kappa 6.
    kappa = 6
    spaces = _toy_spaces(kappa)
    for idx in range(3):
        f = universe.random_pair_function(kappa, 0.6, derive_seed(ctx.seed, idx, "kur-f"))
        space, _, _ = sampling.random_space(f, derive_seed(ctx.seed, idx, "kur-s"), nbhd_goals=4)
        spaces.append((f"sampled-{idx}", space))
    subsets = [frozenset(s) for r in range(kappa + 1) for s in combinations(range(kappa), r)]
    for name, space in spaces:
        table = {ys: generic.closure(space, ys) for ys in subsets}
        wit = {"space": name}
        tally.hit("empty-set-closed", table[frozenset()] == frozenset(), wit)
        for ys in subsets:
            tally.hit("extensive", ys <= table[ys], {**wit, "Y": sorted(ys)})
            tally.hit("idempotent-topological", table[ys] == generic.closure(space, table[ys]), {**wit, "Y": sorted(ys)})
        union_ok = all(table[y | z] == table[y] | table[z] for y in subsets for z in subsets)
        tally.hit("preserves-unions", union_ok, wit)
        mono_ok = all(table[y] <= table[z] for y in subsets for z in subsets if y <= z)
        tally.hit("monotone-topological", mono_ok, wit)
    return tally, {}


# space-checks -------------------------------------------------------------

def _space_trial(payload: tuple) -> tuple[list[tuple[str, bool, Optional[dict]]], bool]:
    trial, seed, kappa_max = payload
    rng = random.Random(derive_seed(seed, trial, "space-rng"))
    kappa = rng.randint(4, kappa_max)
    density = rng.choice((0.2, 0.5, 0.8))
    f = universe.random_pair_function(kappa, density, derive_seed(seed, trial, "space-f"))
    space, sample, goals = sampling.random_space(f, derive_seed(seed, trial, "space-s"), nbhd_goals=10)
    wit = {"kappa": kappa, "density": density}
    results: list[tuple[str, bool, Optional[dict]]] = []

    results.append(("max-invariant", not generic.max_invariant_violations(space), wit))
    ok, bad = generic.check_star_containment(space)
    results.append(("star-containment", ok, {**wit, "pairs": bad}))
    loc = generic.check_loc_comp_hypothesis(space)
    results.append(("loc-comp-hypothesis", loc, wit))
    compact = all(generic.compactness_by_subbase(space, alpha) for alpha in space.carrier)
    results.append(("subbase-compactness", compact, wit))
    results.append(("loc-comp-agrees-subbase", loc == compact, wit))

    chain_ok = all(poset.leq(sample.chain[k + 1], sample.chain[k]) for k in range(len(sample.chain) - 1))
    results.append(("chain-descending", chain_ok, wit))
    final = sample.final
    stable = all(space.H[alpha] == final.h[alpha] for alpha in final.a)
    results.append(("assembled-h-stable", stable, wit))

    oldset = all(
        bool(space.nbhd(g.beta, g.b) & g.Z)
        for g in goals
        if isinstance(g, generic.NbhdGoal)
    )
    results.append(("old-set-scheduled-goals", oldset, wit))

    try:
        ranks = generic.cantor_bendixson(space)
        results.append(("cb-total", set(ranks) == set(space.carrier), wit))
        levels = generic.cb_levels(ranks)
        discrete = all(
            generic.minimal_nbhd(space, x) & frozenset(xs) == {x}
            for xs in levels.values()
            for x in xs
        )
        results.append(("cb-levels-discrete", discrete, wit))
    except ScatterlabError as exc:
        results.append(("cb-total", False, {**wit, "reason": str(exc)}))
    return results, generic.is_coherent(space)


def run_space_checks(ctx: SuiteContext) -> tuple[_Tally, dict]:
    n = ctx.n(50)
    payloads = [(t, ctx.seed, max(4, min(ctx.kappa, 16))) for t in range(n)]
    tally = _Tally()
    coherent = 0
    for trial, (results, is_coh) in enumerate(_pmap(_space_trial, payloads, ctx.jobs)):
        tally.merge_trial(results, trial)
        coherent += int(is_coh)
    notes = {"coherent-spaces-observed": coherent, "spaces": n}
    return tally, notes


# fu-laws ------------------------------------------------------------------

def _fu_exhaustive_space() -> tuple[generic.SpaceModel, int, tuple[int, ...], tuple[int, ...]]:
    H = {
        0: frozenset((0,)),
        1: frozenset((1,)),
        2: frozenset((2,)),
        3: frozenset((1, 3)),
        4: frozenset((2, 4)),
        5: frozenset((0, 1, 2, 3, 5)),
    }
    return generic.SpaceModel(6, H, {}), 5, (0, 1, 2, 3), (1, 2, 3, 4)


def run_fu_exhaustive() -> _Tally:
    """Meet equals greatest lower bound, exhaustively, via a bitmask oracle."""
    tally = _Tally()
    space, alpha, a_pool, c_pool = _fu_exhaustive_space()
    conds = [
        generic.FUCondition(frozenset(s), frozenset(c))
        for s in (frozenset(x) for r in range(len(a_pool) + 1) for x in combinations(a_pool, r))
        for c in (frozenset(x) for r in range(len(c_pool) + 1) for x in combinations(c_pool, r))
    ]
    index = {q: k for k, q in enumerate(conds)}
    nbhds = {q.C: space.nbhd(alpha, q.C) for q in conds}

    def leq_mask(q1: generic.FUCondition, q2: generic.FUCondition) -> bool:
        return q1.s >= q2.s and q1.C >= q2.C and q1.s - q2.s <= nbhds[q2.C]

    below = [0] * len(conds)  # bit r set in below[q] when conds[r] <= conds[q]
    for qi, q in enumerate(conds):
        row = 0
        for ri, r in enumerate(conds):
            if leq_mask(r, q):
                row |= 1 << ri
        below[qi] = row

    for qi, q1 in enumerate(conds):
        for qj in range(qi, len(conds)):
            q2 = conds[qj]
            common = below[qi] & below[qj]
            met = generic.fu_meet(q1, q2, space, alpha)
            wit = {
                "s1": sorted(q1.s), "C1": sorted(q1.C),
                "s2": sorted(q2.s), "C2": sorted(q2.C),
            }
            tally.hit("meet-defined-iff-compatible", (met is not None) == bool(common), wit)
            if met is not None and common:
                cand = index[met]
                is_clb = bool(common >> cand & 1)
                greatest = common & ~below[cand] == 0
                tally.hit("meet-is-common-lower-bound", is_clb, wit)
                tally.hit("meet-is-greatest", greatest, wit)
    return tally


def _fu_sim_trial(payload: tuple) -> list[tuple[str, bool, Optional[dict]]]:
    trial, seed = payload
    rng = random.Random(derive_seed(seed, trial, "fu-rng"))
    kappa = rng.randint(5, 12)
    f = universe.random_pair_function(kappa, 0.5, derive_seed(seed, trial, "fu-f"))
    space, _, _ = sampling.random_space(f, derive_seed(seed, trial, "fu-s"), nbhd_goals=6)
    alpha = rng.randrange(1, kappa)
    pool = sorted(rng.sample(range(kappa), rng.randint(1, kappa - 1)))
    a_set = frozenset(pool) | {alpha}  # alpha keeps every block satisfiable
    schedule = [
        frozenset(rng.sample(range(alpha), rng.randint(0, min(2, alpha))))
        for _ in range(rng.randint(1, 6))
    ]
    res = generic.fu_simulate(space, a_set, alpha, schedule, derive_seed(seed, trial, "fu-sim"))
    wit = {"alpha": alpha, "A": sorted(a_set), "schedule": [sorted(c) for c in schedule]}
    results: list[tuple[str, bool, Optional[dict]]] = []
    results.append(("acquired-from-A", set(res.points) <= set(a_set), wit))
    results.append(("acquired-distinct", len(set(res.points)) == len(res.points), wit))
    suffix_ok = True
    acc: list[tuple[frozenset[int], int]] = [
        (step.C, step.acquired) for step in res.steps
    ]
    for t, (block, _) in enumerate(acc):
        later = [x for _, x in acc[t:] if x is not None]
        u = space.nbhd(alpha, block)
        if not all(x in u for x in later):
            suffix_ok = False
    results.append(("suffix-convergence", suffix_ok, wit))
    return results


def run_fu_laws(ctx: SuiteContext) -> tuple[_Tally, dict]:
    tally = run_fu_exhaustive()
    n = ctx.n(50)
    payloads = [(t, ctx.seed) for t in range(n)]
    for trial, results in enumerate(_pmap(_fu_sim_trial, payloads, ctx.jobs)):
        tally.merge_trial(results, trial)
    return tally, {}


SUITES: dict[str, Callable[[SuiteContext], tuple[_Tally, dict]]] = {
    "star-laws": run_star_laws,
    "poset-laws": run_poset_laws,
    "twins-amalgam": run_twins_amalgam,
    "insertion": run_insertion,
    "closure-laws": run_closure_laws,
    "space-checks": run_space_checks,
    "fu-laws": run_fu_laws,
}


def run_suite(
    name: str,
    *,
    trials: Optional[int] = None,
    seed: int = 0,
    jobs: int = 1,
    f: Optional[PairFunction] = None,
    kappa: int = 16,
    density: float = 0.5,
    inputs: Optional[dict] = None,
) -> RunReport:
    if name not in SUITES:
        raise UnknownSuite(f"unknown suite {name!r}; available: {', '.join(sorted(SUITES))}")
    ctx = SuiteContext(trials=trials, seed=seed, jobs=jobs, f=f, kappa=kappa, density=density)
    tally, notes = SUITES[name](ctx)
    return RunReport(
        command=f"props:{name}",
        inputs=inputs or {},
        outcome=dict(sorted(tally.outcome.items())),
        witnesses=tally.sorted_witnesses(),
        seed=seed,
        notes=notes,
    )
