"""Filter sampling, space assembly, and the induced finite topology.

A genuine generic filter is replaced by a finite descending chain that hits
an explicit schedule of dense-set goals: point additions and
neighbourhood-hitting goals.  The assembled :class:`SpaceModel` carries the
family ``H`` (one right-separating neighbourhood set per carrier ordinal,
``max H(alpha) = alpha``) together with the covering index inherited from
the final condition.  The topology is the one generated by the sets ``H``
and their complements as a subbase; on a finite carrier every point has a
minimal open neighbourhood, which makes closure, free sequences and the
isolated-point hierarchy directly computable.

The convergence poset at a point ``alpha`` relative to a countable-stand-in
set ``A`` consists of pairs ``(s, C)``; stronger conditions grow both parts
while keeping new ``s``-points inside the basic neighbourhood of ``alpha``
that avoids ``C``.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence, Union

from .errors import (
    AmbientMismatch,
    DuplicatePoints,
    GoalUnsatisfiable,
    ScatterlabError,
    StuckNoFreshPoint,
)
from .poset import Condition, basic_nbhd, extend_into_neighbourhood, extend_with_point, star
from .universe import PairFunction, pair


@dataclass(frozen=True)
class PointGoal:
    """Dense requirement: the point joins the domain."""

    alpha: int


@dataclass(frozen=True)
class NbhdGoal:
    """Dense requirement: the basic neighbourhood of ``beta`` avoiding ``b``
    meets ``Z``."""

    beta: int
    b: frozenset[int]
    Z: frozenset[int]


Goal = Union[PointGoal, NbhdGoal]


@dataclass(frozen=True)
class GoalRecord:
    goal: Goal
    action: str  # "extended" or "already-met"
    chain_index: int
    chosen: Optional[int] = None


@dataclass(frozen=True)
class FilterSample:
    """Descending chain of conditions plus the log of goals it hit."""

    kappa: int
    chain: tuple[Condition, ...]
    schedule_log: tuple[GoalRecord, ...]

    @property
    def final(self) -> Condition:
        return self.chain[-1]


def sample_filter(
    f: PairFunction,
    kappa: int,
    goals: Sequence[Goal],
    seed: int,
    randomize: bool = True,
) -> FilterSample:
    """Hit each goal in order, starting from the empty condition.

    Point goals already satisfied are recorded as met; neighbourhood goals
    are met by inserting a seed-chosen eligible ordinal of ``Z`` (the least
    eligible one when ``randomize`` is off) unless the neighbourhood already
    meets ``Z``.  Unsatisfiable goals raise, they are never skipped.
    """
    if not 1 <= kappa <= f.kappa:
        raise GoalUnsatisfiable(f"kappa={kappa} not within the pair function's carrier {f.kappa}")
    rng = random.Random(seed)
    chain: list[Condition] = [Condition.empty()]
    log: list[GoalRecord] = []
    for goal in goals:
        cur = chain[-1]
        dom = set(cur.a)
        if isinstance(goal, PointGoal):
            if not 0 <= goal.alpha < kappa:
                raise GoalUnsatisfiable(f"point goal {goal.alpha} outside carrier {kappa}")
            if goal.alpha in dom:
                log.append(GoalRecord(goal, "already-met", len(chain) - 1))
                continue
            chain.append(extend_with_point(cur, goal.alpha))
            log.append(GoalRecord(goal, "extended", len(chain) - 1, goal.alpha))
        elif isinstance(goal, NbhdGoal):
            if any(z < 0 or z >= kappa for z in goal.Z) or not 0 <= goal.beta < kappa:
                raise GoalUnsatisfiable(f"goal {goal} references ordinals outside carrier {kappa}")
            if goal.beta not in dom:
                raise GoalUnsatisfiable(f"beta={goal.beta} not yet in the domain")
            if not goal.b <= {x for x in dom if x < goal.beta}:
                raise GoalUnsatisfiable(
                    f"b={sorted(goal.b)} is not a domain subset below {goal.beta}"
                )
            if basic_nbhd(cur, goal.beta, goal.b) & goal.Z:
                log.append(GoalRecord(goal, "already-met", len(chain) - 1))
                continue
            eligible = sorted(z for z in goal.Z if z not in dom and z < goal.beta)
            if not eligible:
                raise GoalUnsatisfiable(
                    f"no insertable ordinal: Z={sorted(goal.Z)} exhausted below beta={goal.beta}"
                )
            alpha = rng.choice(eligible) if randomize else eligible[0]
            chain.append(extend_into_neighbourhood(cur, goal.beta, goal.b, alpha))
            log.append(GoalRecord(goal, "extended", len(chain) - 1, alpha))
        else:
            raise GoalUnsatisfiable(f"unknown goal {goal!r}")
    return FilterSample(kappa, tuple(chain), tuple(log))


@dataclass(frozen=True)
class SpaceModel:
    """Finite carrier with the assembled family ``H`` and covering index."""

    kappa: int
    H: dict[int, frozenset[int]]
    i: dict[tuple[int, int], frozenset[int]]

    @property
    def carrier(self) -> range:
        return range(self.kappa)

    @property
    def domain(self) -> tuple[int, ...]:
        """Points carrying covering information (the final condition's
        domain, when at least two points were ever added)."""
        seen: set[int] = set()
        for x, y in self.i:
            seen.add(x)
            seen.add(y)
        return tuple(sorted(seen))

    def nbhd(self, alpha: int, b: Iterable[int]) -> frozenset[int]:
        """``H(alpha)`` minus the union of ``H`` over ``b``."""
        out = set(self.H[alpha])
        for beta in b:
            out -= self.H[beta]
        return frozenset(out)


def assemble_space(sample: FilterSample) -> SpaceModel:
    """Union of the chain's ``h`` maps; points never added stay singletons."""
    H: dict[int, frozenset[int]] = {alpha: frozenset((alpha,)) for alpha in range(sample.kappa)}
    for p in sample.chain:
        for alpha in p.a:
            H[alpha] = H[alpha] | p.h[alpha]
    return SpaceModel(sample.kappa, H, dict(sample.final.i))


def max_invariant_violations(space: SpaceModel) -> list[int]:
    """Carrier points whose neighbourhood set is not right-separating."""
    return [
        alpha
        for alpha in space.carrier
        if not space.H[alpha] or max(space.H[alpha]) != alpha or min(space.H[alpha]) < 0
    ]


def check_star_containment(space: SpaceModel) -> tuple[bool, list[tuple[int, int]]]:
    """The star of two assembled neighbourhood sets stays covered by the
    union of ``H`` over their covering index."""
    bad: list[tuple[int, int]] = []
    for (x, y), idx in sorted(space.i.items()):
        cover: set[int] = set()
        for nu in idx:
            cover |= space.H[nu]
        if not star(space.H[x], space.H[y]) <= cover:
            bad.append((x, y))
    return (not bad, bad)


def loc_comp_witnesses(space: SpaceModel) -> list[tuple[int, int]]:
    """Pairs violating the local-compactness hypothesis."""
    bad: list[tuple[int, int]] = []
    for (beta, alpha), idx in sorted(space.i.items()):
        cover: set[int] = set()
        for nu in idx:
            cover |= space.H[nu]
        if beta in space.H[alpha]:
            ok = space.H[beta] - space.H[alpha] <= cover
        else:
            ok = space.H[beta] & space.H[alpha] <= cover
        if not ok:
            bad.append((beta, alpha))
    return bad


def check_loc_comp_hypothesis(space: SpaceModel) -> bool:
    """For ``beta < alpha``: a member's surplus, or a non-member's overlap,
    is covered by the union of ``H`` over the pair's covering index."""
    return not loc_comp_witnesses(space)


def subbase_witnesses(space: SpaceModel, alpha: int) -> list[tuple[int, int]]:
    """Failures of the inductive covering step for subbase covers at
    ``alpha``: for every larger ``gamma``, the part of ``H(alpha)`` outside
    (resp. inside) ``H(gamma)`` must be covered via the pair's index."""
    bad: list[tuple[int, int]] = []
    for gamma in space.carrier:
        if gamma <= alpha:
            continue
        if alpha in space.H[gamma]:
            residue = space.H[alpha] - space.H[gamma]
        else:
            residue = space.H[alpha] & space.H[gamma]
        if not residue:
            continue
        idx = space.i.get(pair(alpha, gamma))
        if idx is None:
            bad.append((alpha, gamma))
            continue
        cover: set[int] = set()
        for nu in idx:
            cover |= space.H[nu]
        if not residue <= cover:
            bad.append((alpha, gamma))
    return bad


def compactness_by_subbase(space: SpaceModel, alpha: int) -> bool:
    """Finite-carrier check of the subbase-cover compactness argument for
    ``H(alpha)``; covers by smaller sets are handled by the induction."""
    return not subbase_witnesses(space, alpha)


def is_coherent(space: SpaceModel) -> bool:
    """Membership forces containment of neighbourhood sets everywhere."""
    for alpha in space.carrier:
        for beta in space.H[alpha]:
            if not space.H[beta] <= space.H[alpha]:
                return False
    return True


def minimal_nbhd(space: SpaceModel, x: int) -> frozenset[int]:
    """Intersection of all subbase elements containing ``x`` (each ``H`` set
    or its complement); open and minimal on a finite carrier."""
    out = set(space.carrier)
    for gamma in space.carrier:
        if x in space.H[gamma]:
            out &= space.H[gamma]
        else:
            out -= space.H[gamma]
    return frozenset(out)


def closure(space: SpaceModel, Y: Iterable[int]) -> frozenset[int]:
    """Points whose minimal open neighbourhood meets ``Y``."""
    ys = frozenset(Y)
    if any(y not in space.carrier for y in ys):
        raise AmbientMismatch(f"set {sorted(ys)} leaves the carrier {space.kappa}")
    return frozenset(x for x in space.carrier if minimal_nbhd(space, x) & ys)


def is_free_sequence(space: SpaceModel, seq: Sequence[int]) -> bool:
    """Every cut separates the closures of initial segment and tail."""
    if len(set(seq)) != len(seq):
        raise DuplicatePoints(f"sequence repeats points: {list(seq)}")
    for k in range(len(seq) + 1):
        if closure(space, seq[:k]) & closure(space, seq[k:]):
            return False
    return True


def cantor_bendixson(space: SpaceModel) -> dict[int, int]:
    """Rank of each point in the iterated isolated-point hierarchy."""
    remaining = set(space.carrier)
    nbhds = {x: minimal_nbhd(space, x) for x in space.carrier}
    ranks: dict[int, int] = {}
    stage = 0
    while remaining:
        isolated = [x for x in remaining if nbhds[x] & remaining == {x}]
        if not isolated:
            raise ScatterlabError(f"derivative stabilized on {sorted(remaining)}; not scattered")
        for x in isolated:
            ranks[x] = stage
        remaining -= set(isolated)
        stage += 1
    return ranks


def cb_levels(ranks: dict[int, int]) -> dict[int, list[int]]:
    levels: dict[int, list[int]] = {}
    for x, r in ranks.items():
        levels.setdefault(r, []).append(x)
    return {r: sorted(xs) for r, xs in sorted(levels.items())}


@dataclass(frozen=True)
class FUCondition:
    """Pair of finite sets: acquired points and avoided index set."""

    s: frozenset[int]
    C: frozenset[int]

    @staticmethod
    def make(s: Iterable[int] = (), C: Iterable[int] = ()) -> "FUCondition":
        return FUCondition(frozenset(s), frozenset(C))


def _check_ambient(space: SpaceModel, alpha: int, *conds: FUCondition) -> None:
    if alpha not in space.carrier:
        raise AmbientMismatch(f"alpha={alpha} outside carrier {space.kappa}")
    for q in conds:
        if any(c >= alpha or c < 0 for c in q.C):
            raise AmbientMismatch(f"C={sorted(q.C)} not below alpha={alpha}")
        if any(x not in space.carrier for x in q.s):
            raise AmbientMismatch(f"s={sorted(q.s)} leaves the carrier")


def fu_leq(q1: FUCondition, q2: FUCondition, space: SpaceModel, alpha: int) -> bool:
    """Convergence order: both parts grow and the new points sit inside the
    basic neighbourhood avoiding the weaker condition's index set."""
    _check_ambient(space, alpha, q1, q2)
    return (
        q1.s >= q2.s
        and q1.C >= q2.C
        and q1.s - q2.s <= space.nbhd(alpha, q2.C)
    )


def fu_meet(q1: FUCondition, q2: FUCondition, space: SpaceModel, alpha: int) -> Optional[FUCondition]:
    """Componentwise union when compatible (then it is the greatest lower
    bound); ``None`` when no common lower bound exists."""
    _check_ambient(space, alpha, q1, q2)
    cand = FUCondition(q1.s | q2.s, q1.C | q2.C)
    if fu_leq(cand, q1, space, alpha) and fu_leq(cand, q2, space, alpha):
        return cand
    return None


@dataclass(frozen=True)
class FUSimStep:
    C: frozenset[int]
    acquired: Optional[int]


@dataclass(frozen=True)
class FUSimResult:
    """Points in acquisition order plus the per-block log."""

    points: tuple[int, ...]
    steps: tuple[FUSimStep, ...]
    final: FUCondition


def fu_simulate(
    space: SpaceModel,
    A: Iterable[int],
    alpha: int,
    C_schedule: Sequence[Iterable[int]],
    seed: int,
    randomize: bool = True,
) -> FUSimResult:
    """Descending chain in the convergence poset.

    Each scheduled block joins the avoided index set; then a fresh point of
    ``A`` inside the current basic neighbourhood is acquired (seed-chosen,
    least when ``randomize`` is off).  A block whose neighbourhood retains
    no point of ``A`` at all raises; one whose usable points were already
    acquired is recorded without acquisition.
    """
    pool = frozenset(A)
    _check_ambient(space, alpha, FUCondition.make((), ()))
    if any(x not in space.carrier for x in pool):
        raise AmbientMismatch(f"A={sorted(pool)} leaves the carrier")
    rng = random.Random(seed)
    acquired: list[int] = []
    cur = FUCondition.make()
    steps: list[FUSimStep] = []
    for block in C_schedule:
        blk = frozenset(block)
        if any(c >= alpha or c < 0 for c in blk):
            raise AmbientMismatch(f"scheduled block {sorted(blk)} not below alpha={alpha}")
        new_c = cur.C | blk
        usable = space.nbhd(alpha, new_c) & pool
        if not usable:
            raise StuckNoFreshPoint(blk, f"no point of A left in the neighbourhood avoiding {sorted(new_c)}")
        fresh = sorted(usable - cur.s)
        if fresh:
            x = rng.choice(fresh) if randomize else fresh[0]
            acquired.append(x)
            cur = FUCondition(cur.s | {x}, new_c)
            steps.append(FUSimStep(blk, x))
        else:
            cur = FUCondition(cur.s, new_c)
            steps.append(FUSimStep(blk, None))
    return FUSimResult(tuple(acquired), tuple(steps), cur)
