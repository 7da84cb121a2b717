"""The poset of finite conditions.

A condition is a triple ``(a, h, i)``: a finite ascending domain ``a``, a
neighbourhood-set map ``h`` assigning each ``xi in a`` a subset of ``a`` with
maximum ``xi``, and a covering index ``i`` assigning each unordered domain
pair a subset of ``a`` drawn from the ambient pair function.  The binding
clause is (iv): ``h(xi) * h(eta)`` must be covered by the union of ``h`` over
``i{xi,eta}``, where ``*`` is the asymmetric combinator below.

Extensions (``extend_with_point``, ``extend_into_neighbourhood``) produce
strictly stronger conditions and witness the density facts the sampler in
:mod:`scatterlab.generic` relies on.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Mapping

from .errors import (
    AlphaNotInDomain,
    AlreadyPresent,
    BNotBelowAlpha,
    DomainMismatch,
    DomainTooLarge,
    EmptyOperand,
    EqualSup,
    NotSubset,
    PreconditionViolated,
)
from .universe import PairFunction, pair


def star(x: Iterable[int], y: Iterable[int]) -> frozenset[int]:
    """Asymmetric set combinator.

    Intersection when neither maximum belongs to the other set, otherwise the
    difference that removes the set containing the other's maximum.
    """
    xs, ys = frozenset(x), frozenset(y)
    if not xs or not ys:
        raise EmptyOperand("star needs nonempty operands")
    mx, my = max(xs), max(ys)
    if mx == my:
        raise EqualSup(f"star undefined for equal maxima ({mx})")
    if mx in ys:
        return xs - ys
    if my in xs:
        return ys - xs
    return xs & ys


class Condition:
    """Immutable condition triple.

    Construction only normalizes shapes (sorted domain, frozenset values,
    ordered pair keys); whether the triple actually satisfies clauses
    (i)-(iv) is decided by :func:`validate_condition`.
    """

    __slots__ = ("a", "h", "i")

    def __init__(
        self,
        a: Iterable[int] = (),
        h: Mapping[int, Iterable[int]] | None = None,
        i: Mapping[tuple[int, int], Iterable[int]] | None = None,
    ):
        self.a: tuple[int, ...] = tuple(sorted(set(a)))
        self.h: dict[int, frozenset[int]] = {
            int(xi): frozenset(v) for xi, v in (h or {}).items()
        }
        self.i: dict[tuple[int, int], frozenset[int]] = {
            pair(*k): frozenset(v) for k, v in (i or {}).items()
        }

    @classmethod
    def empty(cls) -> "Condition":
        """The poset's top element: the condition with empty domain."""
        return cls()

    @classmethod
    def single(cls, alpha: int) -> "Condition":
        return cls((alpha,), {alpha: {alpha}}, {})

    def i_value(self, x: int, y: int) -> frozenset[int]:
        return self.i[pair(x, y)]

    def key(self):
        return (
            self.a,
            tuple(sorted((xi, tuple(sorted(v))) for xi, v in self.h.items())),
            tuple(sorted((k, tuple(sorted(v))) for k, v in self.i.items())),
        )

    def __eq__(self, other):
        if not isinstance(other, Condition):
            return NotImplemented
        return self.key() == other.key()

    def __hash__(self):
        return hash(self.key())

    def __repr__(self):
        return f"Condition(a={list(self.a)})"


def h_union(p: Condition, over: Iterable[int]) -> frozenset[int]:
    """Union of ``h`` over a subset of the domain."""
    out: set[int] = set()
    for nu in over:
        out |= p.h[nu]
    return frozenset(out)


@dataclass(frozen=True)
class Violation:
    clause: str
    at: tuple[int, ...]
    detail: str


@dataclass(frozen=True)
class ValidityReport:
    violations: tuple[Violation, ...]

    @property
    def ok(self) -> bool:
        return not self.violations

    def clauses(self) -> list[str]:
        return sorted({v.clause for v in self.violations})


def validate_condition(f: PairFunction, p: Condition) -> ValidityReport:
    """Report every violated clause; an empty report certifies membership in
    the poset over ``f``.

    * (i)  ``h`` is total on ``a`` with values inside ``a``; ``i`` is total on
      the domain pairs with values inside ``a``.
    * (ii) ``max h(xi) = xi`` for every domain point.
    * (iii) ``i{xi,eta}`` is contained in ``f{xi,eta}`` (hence in its
      intersection with ``a``).
    * (iv) ``h(xi) * h(eta)`` is covered by the union of ``h`` over
      ``i{xi,eta}``.
    """
    f.check_members(p.a)
    for v in p.h.values():
        f.check_members(v)
    for v in p.i.values():
        f.check_members(v)
    dom = frozenset(p.a)
    out: list[Violation] = []

    for xi in p.a:
        if xi not in p.h:
            out.append(Violation("i", (xi,), f"h undefined at {xi}"))
        elif not p.h[xi] <= dom:
            out.append(Violation("i", (xi,), f"h({xi}) not inside the domain"))
    for xi in p.h:
        if xi not in dom:
            out.append(Violation("i", (xi,), f"h defined outside the domain at {xi}"))
    expected_pairs = {pair(x, y) for x, y in combinations(p.a, 2)}
    for k in p.i:
        if k not in expected_pairs:
            out.append(Violation("i", k, f"i defined at non-domain pair {k}"))
    for k in expected_pairs:
        if k not in p.i:
            out.append(Violation("i", k, f"i undefined at pair {k}"))
        elif not p.i[k] <= dom:
            out.append(Violation("i", k, f"i{k} not inside the domain"))

    for xi in p.a:
        hv = p.h.get(xi)
        if hv is not None and (not hv or max(hv) != xi):
            out.append(Violation("ii", (xi,), f"max h({xi}) != {xi}"))

    for x, y in sorted(expected_pairs):
        iv = p.i.get((x, y))
        if iv is not None and not iv <= f.value(x, y):
            out.append(Violation("iii", (x, y), f"i{(x, y)} exceeds f{(x, y)}"))

    def clause_ii_holds(xi: int) -> bool:
        hv = p.h.get(xi)
        return hv is not None and bool(hv) and max(hv) == xi

    for x, y in sorted(expected_pairs):
        if not (clause_ii_holds(x) and clause_ii_holds(y)):
            continue  # already reported under (ii); star may be undefined
        iv = p.i.get((x, y), frozenset())
        cover = frozenset().union(*(p.h[nu] for nu in iv if nu in p.h)) if iv else frozenset()
        uncovered = star(p.h[x], p.h[y]) - cover
        if uncovered:
            out.append(Violation("iv", (x, y), f"star not covered at {(x, y)}: {sorted(uncovered)}"))

    return ValidityReport(tuple(out))


def leq(p: Condition, q: Condition) -> bool:
    """Extension order: ``p`` is stronger than ``q``.

    Requires the larger domain, exact trace of ``h`` on the old domain, and
    agreement of ``i`` on the old pairs.  Both arguments are assumed valid
    over the same pair function.
    """
    if not set(q.a) <= set(p.a):
        return False
    for xi in q.a:
        if p.h[xi] & frozenset(q.a) != q.h[xi]:
            return False
    for x, y in combinations(q.a, 2):
        if p.i_value(x, y) != q.i_value(x, y):
            return False
    return True


def basic_nbhd(p: Condition, alpha: int, b: Iterable[int]) -> frozenset[int]:
    """``h(alpha)`` minus the union of ``h`` over the avoidance set ``b``;
    ``b`` must be a subset of the domain below ``alpha``."""
    bs = frozenset(b)
    if alpha not in set(p.a):
        raise AlphaNotInDomain(f"{alpha} not in domain {list(p.a)}")
    if not bs <= frozenset(x for x in p.a if x < alpha):
        raise BNotBelowAlpha(f"b={sorted(bs)} is not a domain subset below {alpha}")
    return p.h[alpha] - h_union(p, bs)


@dataclass(frozen=True, eq=False)
class RestrictedCondition:
    """Trace of a condition on a domain subset.

    ``h`` values are intersected with ``b``; ``i`` values are kept whole, so
    the trace is a genuine condition exactly when every kept ``i``-value lies
    inside ``b`` (the ``is_condition`` flag).
    """

    b: tuple[int, ...]
    h: dict[int, frozenset[int]]
    i: dict[tuple[int, int], frozenset[int]]
    origin: Condition
    is_condition: bool

    def as_condition(self) -> Condition:
        if not self.is_condition:
            raise NotSubset(f"trace on {list(self.b)} keeps i-values outside the base")
        return Condition(self.b, self.h, self.i)

    def key(self):
        return (
            self.b,
            tuple(sorted((xi, tuple(sorted(v))) for xi, v in self.h.items())),
            tuple(sorted((k, tuple(sorted(v))) for k, v in self.i.items())),
        )

    def __eq__(self, other):
        if not isinstance(other, RestrictedCondition):
            return NotImplemented
        return self.key() == other.key()

    def __hash__(self):
        return hash(self.key())


def restrict(p: Condition, b: Iterable[int]) -> RestrictedCondition:
    bs = frozenset(b)
    if not bs <= set(p.a):
        raise NotSubset(f"{sorted(bs)} is not a subset of the domain {list(p.a)}")
    h = {xi: p.h[xi] & bs for xi in sorted(bs)}
    i = {k: v for k, v in p.i.items() if k[0] in bs and k[1] in bs}
    flag = all(v <= bs for v in i.values())
    return RestrictedCondition(tuple(sorted(bs)), h, i, p, flag)


def as_restriction(p: Condition) -> RestrictedCondition:
    """A condition viewed as the trace of itself on its whole domain."""
    return restrict(p, p.a)


def leq_restricted(r1: RestrictedCondition, r2: RestrictedCondition) -> bool:
    """The extension order carried over to traces; on full traces it agrees
    with :func:`leq`."""
    base2 = frozenset(r2.b)
    if not base2 <= frozenset(r1.b):
        return False
    for xi in r2.b:
        if r1.h[xi] & base2 != r2.h[xi] & base2:
            return False
    for x, y in combinations(r2.b, 2):
        if r1.i[pair(x, y)] != r2.i[pair(x, y)]:
            return False
    return True


def precedes(p: Condition, p_prime: Condition, max_domain: int = 16) -> bool:
    """Neighbourhood refinement on a fixed domain: every basic neighbourhood
    of ``p`` is contained in the matching one of ``p_prime``.

    Exhausts all avoidance subsets, so the domain size is guarded.
    """
    if p.a != p_prime.a:
        raise DomainMismatch(f"domains differ: {list(p.a)} vs {list(p_prime.a)}")
    if len(p.a) > max_domain:
        raise DomainTooLarge(f"refusing 2^{len(p.a)} subset scan (max_domain={max_domain})")
    for alpha in p.a:
        below = [x for x in p.a if x < alpha]
        for r in range(len(below) + 1):
            for b in combinations(below, r):
                if not basic_nbhd(p, alpha, b) <= basic_nbhd(p_prime, alpha, b):
                    return False
    return True


def extend_with_point(p: Condition, alpha: int) -> Condition:
    """Add an isolated new point: ``h(alpha) = {alpha}``, empty new ``i``."""
    if alpha in set(p.a):
        raise AlreadyPresent(f"{alpha} already in domain")
    h = dict(p.h)
    h[alpha] = frozenset((alpha,))
    i = dict(p.i)
    for xi in p.a:
        i[pair(alpha, xi)] = frozenset()
    return Condition(p.a + (alpha,), h, i)


def extend_into_neighbourhood(p: Condition, beta: int, b: Iterable[int], alpha: int) -> Condition:
    """Add a new point ``alpha < beta`` that lands inside the basic
    neighbourhood of ``beta`` avoiding ``b``.

    The new point joins ``h(nu)`` exactly where ``beta`` already sits, which
    keeps clause (iv) intact and pins ``alpha`` into ``basic_nbhd(q, beta, b)``.
    """
    dom = set(p.a)
    bs = frozenset(b)
    if beta not in dom:
        raise PreconditionViolated(f"beta={beta} not in domain")
    if not bs <= {x for x in dom if x < beta}:
        raise PreconditionViolated(f"b={sorted(bs)} is not a domain subset below {beta}")
    if alpha in dom or not 0 <= alpha < beta:
        raise PreconditionViolated(f"alpha={alpha} must be a fresh ordinal below {beta}")
    h: dict[int, frozenset[int]] = {}
    for nu in p.a:
        h[nu] = p.h[nu] | {alpha} if beta in p.h[nu] else p.h[nu]
    h[alpha] = frozenset((alpha,))
    i = dict(p.i)
    for nu in p.a:
        i[pair(alpha, nu)] = frozenset()
    return Condition(p.a + (alpha,), h, i)
