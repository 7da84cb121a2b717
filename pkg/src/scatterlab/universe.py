"""Ground combinatorics on a finite ordinal carrier.

The carrier is ``{0, ..., kappa-1}``.  A :class:`PairFunction` assigns to
every unordered pair ``{a, b}`` of distinct carrier ordinals a finite set
``f{a,b}`` of ordinals strictly below ``min(a, b)``.  On top of it live the
good-pair predicate, the closure operator ``pair_closure`` and the
group-intersection search ``search_common_lower_bound``.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Mapping, Optional, Sequence

from .errors import BNotBelow, DisjointnessViolated, OutOfUniverse


def pair(x: int, y: int) -> tuple[int, int]:
    """Order a two-element pair as ``(lo, hi)``."""
    if x == y:
        raise ValueError(f"pair needs distinct ordinals, got {x} twice")
    return (x, y) if x < y else (y, x)


@dataclass(frozen=True, eq=True)
class PairFunction:
    """Total map from unordered carrier pairs to subsets below their minimum.

    ``values`` holds an entry for every pair ``(a, b)`` with ``a < b < kappa``;
    each value is a subset of ``{0, ..., a-1}``.
    """

    kappa: int
    values: Mapping[tuple[int, int], frozenset[int]]

    @staticmethod
    def build(kappa: int, entries: Mapping[tuple[int, int], Iterable[int]] | None = None) -> "PairFunction":
        """Normalize ``entries`` and fill every missing pair with the empty set."""
        if kappa < 1:
            raise ValueError(f"kappa must be at least 1, got {kappa}")
        values: dict[tuple[int, int], frozenset[int]] = {}
        for a in range(kappa):
            for b in range(a + 1, kappa):
                values[(a, b)] = frozenset()
        for key, val in (entries or {}).items():
            a, b = pair(*key)
            if b >= kappa:
                raise OutOfUniverse(f"pair ({a},{b}) exceeds kappa={kappa}")
            fs = frozenset(int(g) for g in val)
            if any(g < 0 or g >= a for g in fs):
                raise ValueError(f"value of pair ({a},{b}) must lie below {a}, got {sorted(fs)}")
            values[(a, b)] = fs
        return PairFunction(kappa, values)

    def value(self, x: int, y: int) -> frozenset[int]:
        return self.values[pair(x, y)]

    def updated(self, overrides: Mapping[tuple[int, int], Iterable[int]]) -> "PairFunction":
        """A copy with the given pairs replaced."""
        merged = dict(self.values)
        for key, val in overrides.items():
            merged[pair(*key)] = frozenset(val)
        return PairFunction.build(self.kappa, merged)

    def check_members(self, *sets: Iterable[int]) -> None:
        for s in sets:
            for x in s:
                if x < 0 or x >= self.kappa:
                    raise OutOfUniverse(f"ordinal {x} outside carrier of size {self.kappa}")


def random_pair_function(kappa: int, density: float, seed: int) -> PairFunction:
    """Seed-deterministic pair function; each eligible ordinal enters with
    probability ``density``, independently."""
    if kappa < 1:
        raise ValueError(f"kappa must be at least 1, got {kappa}")
    if not 0.0 <= density <= 1.0:
        raise ValueError(f"density must be in [0,1], got {density}")
    rng = random.Random(seed)
    entries: dict[tuple[int, int], frozenset[int]] = {}
    for a in range(kappa):
        for b in range(a + 1, kappa):
            entries[(a, b)] = frozenset(g for g in range(a) if rng.random() < density)
    return PairFunction.build(kappa, entries)


def good_pair_violations(f: PairFunction, x: Iterable[int], y: Iterable[int]) -> list[str]:
    """Clause-by-clause check of the good-pair predicate; empty means good.

    For ``alpha`` in the overlap, ``beta`` only in ``x`` and ``gamma`` only in
    ``y``:

    * (a) ``alpha < beta`` and ``alpha < gamma`` force ``alpha in f{beta,gamma}``,
    * (b) ``alpha < beta`` forces ``f{alpha,gamma} <= f{beta,gamma}``,
    * (c) ``alpha < gamma`` forces ``f{alpha,beta} <= f{gamma,beta}``.
    """
    xs, ys = frozenset(x), frozenset(y)
    f.check_members(xs, ys)
    out: list[str] = []
    for alpha in xs & ys:
        for beta in xs - ys:
            for gamma in ys - xs:
                if alpha < beta and alpha < gamma and alpha not in f.value(beta, gamma):
                    out.append(f"(a) at alpha={alpha}, beta={beta}, gamma={gamma}")
                if alpha < beta and not f.value(alpha, gamma) <= f.value(beta, gamma):
                    out.append(f"(b) at alpha={alpha}, beta={beta}, gamma={gamma}")
                if alpha < gamma and not f.value(alpha, beta) <= f.value(gamma, beta):
                    out.append(f"(c) at alpha={alpha}, beta={beta}, gamma={gamma}")
    return out


def is_good_pair(f: PairFunction, x: Iterable[int], y: Iterable[int]) -> bool:
    return not good_pair_violations(f, x, y)


def find_good_pair(f: PairFunction, family: Sequence[Iterable[int]]) -> Optional[tuple[int, int]]:
    """Lexicographically least index pair of ``family`` that is good for ``f``;
    ``None`` if every pair fails."""
    sets = [frozenset(s) for s in family]
    for s in sets:
        f.check_members(s)
    for i, j in combinations(range(len(sets)), 2):
        if is_good_pair(f, sets[i], sets[j]):
            return (i, j)
    return None


@dataclass(frozen=True)
class ClosureResult:
    """Fixed point of the pair-value closure plus the number of growing rounds."""

    closure: frozenset[int]
    iterations: int


def pair_closure(f: PairFunction, base: Iterable[int], partners: Iterable[int]) -> ClosureResult:
    """Least set containing ``base`` that is closed under taking ``f``-values
    against itself and against ``partners``.

    Rounds scan ordinals in ascending order; a round that adds nothing stops
    the iteration.  Values of ``f`` sit below both arguments, so the maximum
    never grows.
    """
    cur = frozenset(base)
    side = frozenset(partners)
    f.check_members(cur, side)
    rounds = 0
    while True:
        added: set[int] = set()
        for xi in sorted(cur):
            for eta in sorted(cur | side):
                if xi != eta:
                    added.update(f.value(xi, eta) - cur)
        if not added:
            return ClosureResult(cur, rounds)
        cur |= added
        rounds += 1


def search_common_lower_bound(
    f: PairFunction,
    c_list: Sequence[Iterable[int]],
    bound: Iterable[int],
    n: int,
) -> Optional[list[int]]:
    """First (lexicographic) choice of ``n`` groups whose pairwise ``f``-values
    all contain ``bound``; ``None`` when the exhaustive scan finds no witness.
    """
    groups = [frozenset(c) for c in c_list]
    b = frozenset(bound)
    f.check_members(b, *groups)
    if n < 1:
        raise ValueError(f"n must be at least 1, got {n}")
    for (i, ci), (j, cj) in combinations(enumerate(groups), 2):
        if ci & cj:
            raise DisjointnessViolated(f"groups {i} and {j} overlap on {sorted(ci & cj)}")
    if b:
        top = max(b)
        for i, ci in enumerate(groups):
            if ci and min(ci) <= top:
                raise BNotBelow(f"max(bound)={top} not below group {i} (min {min(ci)})")

    def covered(chosen: tuple[int, ...]) -> bool:
        for i, j in combinations(chosen, 2):
            for xi in groups[i]:
                for eta in groups[j]:
                    if not b <= f.value(xi, eta):
                        return False
        return True

    for chosen in combinations(range(len(groups)), n):
        if covered(chosen):
            return list(chosen)
    return None
