"""Shelling verification and search.

A shelling of a pure d-dimensional complex is an order on its facets; the
notion is recursive.  In dimension 0 every order qualifies.  In dimension
d > 0 an order (F_1, ..., F_n) qualifies iff the boundary of every closed
facet is itself shellable and, for every j > 1, the intersection of the
boundary of F_j with the union of the earlier facet boundaries is a
nonempty pure (d-1)-dimensional complex whose top faces can start a
shelling of the boundary of F_j.  An empty intersection is rejected; pass
``allow_empty_intersection=True`` to tolerate it.

Verification replays that definition step by step and produces a recursive
certificate, or a failure carrying the first bad step.  The search walks
facet orders depth-first, candidates in lexicographic id order, so its
answer is deterministic: the lexicographically first valid completion of
the requested prefix.  Completed sub-searches are memoised by the labelled
structure of the sub-lattice plus the prefix set; lattices are immutable
and the memo is a plain dict (insert-or-read is atomic under the GIL), so
concurrent readers are safe, though the search itself runs sequentially.

Each candidate placement costs one node against a budget (default 10^7
nodes).  Exhausting the budget raises :class:`BudgetExceeded` rather than
ever reporting a false negative.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Sequence, Union

from .errors import (
    BudgetExceeded,
    IndexOutOfRange,
    InternalContradiction,
    NotDiamond,
    NotPseudomanifold,
    PreconditionViolated,
)
from .lattice import (
    FaceLattice,
    Subcomplex,
    _iter_bits,
    boundary_complex,
    dualize,
    is_diamond,
    is_lattice,
    is_pseudomanifold,
    is_pure,
    sub_lattice,
)

DEFAULT_BUDGET = 10_000_000

EMPTY_INTERSECTION = "EmptyIntersection"
NOT_PURE = "NotPure"
NO_PREFIX_SHELLING = "NoPrefixShelling"


class SearchBudget:
    """Node counter shared across one search tree, including recursion."""

    __slots__ = ("limit", "spent")

    def __init__(self, limit: int = DEFAULT_BUDGET):
        self.limit = limit
        self.spent = 0

    def spend(self) -> None:
        self.spent += 1
        if self.spent > self.limit:
            raise BudgetExceeded(f"search exceeded its budget of {self.limit} nodes")


def _as_budget(budget: Union[int, SearchBudget, None]) -> SearchBudget:
    if budget is None:
        return SearchBudget()
    if isinstance(budget, SearchBudget):
        return budget
    return SearchBudget(int(budget))


@dataclass(frozen=True)
class ShellingOrder:
    """A facet order bound to its lattice; always a permutation of the facets."""

    lattice: FaceLattice
    facets: tuple[str, ...]

    def __post_init__(self):
        if sorted(self.facets) != sorted(self.lattice.facets()):
            raise PreconditionViolated("order is not a permutation of the facets")

    def __len__(self) -> int:
        return len(self.facets)

    def __iter__(self):
        return iter(self.facets)


@dataclass(frozen=True)
class ShellingStep:
    """Evidence for one step: which ridges the facet glues along, and a
    shelling of its boundary starting with exactly those ridges."""

    facet: str
    intersection_facets: tuple[str, ...]
    sub_certificate: "ShellingCertificate"

    def to_json_dict(self) -> dict:
        return {
            "facet": self.facet,
            "intersection_facets": list(self.intersection_facets),
            "sub_certificate": self.sub_certificate.to_json_dict(),
        }


@dataclass(frozen=True)
class ShellingCertificate:
    order: ShellingOrder
    steps: tuple[ShellingStep, ...]

    def to_json_dict(self) -> dict:
        return {
            "order": list(self.order.facets),
            "steps": [s.to_json_dict() for s in self.steps],
        }


@dataclass(frozen=True)
class ShellingFailure:
    """First step at which an order breaks the definition, 1-based."""

    step: int
    reason: str

    def to_json_dict(self) -> dict:
        return {"step": self.step, "reason": self.reason}


ShellingResult = Union[ShellingCertificate, ShellingFailure]


class Shape(Enum):
    SPHERE = "sphere"
    BALL = "ball"


# memo for completed searches: (fingerprint, prefix set, permissive) -> order or None
_memo: dict[tuple[str, frozenset[str], bool], Union[tuple[str, ...], None]] = {}


def clear_search_memo() -> None:
    _memo.clear()


def _order_ids(L: FaceLattice, order: Union[ShellingOrder, Sequence[str]]) -> tuple[str, ...]:
    if isinstance(order, ShellingOrder):
        if order.lattice is not L:
            raise PreconditionViolated("order belongs to a different lattice")
        return order.facets
    return tuple(str(f) for f in order)


def boundary_intersection(
    L: FaceLattice, order: Union[ShellingOrder, Sequence[str]], j: int
) -> Subcomplex:
    """The subcomplex where the boundary of the j-th facet meets the union
    of the earlier facet boundaries (j is 1-based, j >= 2).

    Always contains the empty face; it has no other member exactly when
    the j-th facet touches none of its predecessors.
    """
    seq = _order_ids(L, order)
    if not 2 <= j <= len(seq):
        raise IndexOutOfRange(f"need 2 <= j <= {len(seq)}, got {j}")
    x = L.index(seq[j - 1])
    union = 0
    for f in seq[: j - 1]:
        union |= L._down[L.index(f)]
    return Subcomplex(L, (L._down[x] & ~(1 << x)) & union)


def _pure_ridge_mask(L: FaceLattice, inter: int) -> Union[int, None]:
    """Ridge mask of an intersection that is pure of codimension 1 in L,
    or None when the intersection fails that shape."""
    ridges = inter & L._rank_masks[L.dim]
    down_union = 0
    for r in _iter_bits(ridges):
        down_union |= L._down[r]
    if down_union != inter:
        return None
    return ridges


def _step_ok(
    L: FaceLattice,
    facet: str,
    union: int,
    first: bool,
    budget: SearchBudget,
    permissive: bool,
) -> bool:
    sub = sub_lattice(L, facet)
    if first:
        return find_shelling(sub, (), budget=budget, allow_empty_intersection=permissive) is not None
    x = L.index(facet)
    inter = (L._down[x] & ~(1 << x)) & union
    if not inter & L._real_mask:
        if not permissive:
            return False
        return find_shelling(sub, (), budget=budget, allow_empty_intersection=permissive) is not None
    ridges = _pure_ridge_mask(L, inter)
    if ridges is None:
        return False
    prefix = L._ids_of(ridges)
    return (
        find_shelling(sub, prefix, budget=budget, allow_empty_intersection=permissive)
        is not None
    )


def find_shelling(
    L: FaceLattice,
    prefix: Iterable[str] = (),
    *,
    budget: Union[int, SearchBudget, None] = None,
    allow_empty_intersection: bool = False,
) -> Union[ShellingOrder, None]:
    """Search for a shelling whose first entries are exactly the given
    facet set, in some order.

    Returns the lexicographically first such order, or None when none
    exists.  Results for each (lattice, prefix) pair are memoised, so
    repeated queries from the verifier are cheap.
    """
    bud = _as_budget(budget)
    facet_list = sorted(L.facets())
    prefix_set = frozenset(str(f) for f in prefix)
    if not prefix_set <= set(facet_list):
        raise PreconditionViolated("prefix contains non-facets")
    if L.dim <= 0:
        ordered = tuple(sorted(prefix_set)) + tuple(
            f for f in facet_list if f not in prefix_set
        )
        return ShellingOrder(L, ordered)

    key = (L.fingerprint(), prefix_set, allow_empty_intersection)
    if key in _memo:
        found = _memo[key]
        return None if found is None else ShellingOrder(L, found)

    n = len(facet_list)
    chosen: list[str] = []
    chosen_set: set[str] = set()
    cond_cache: dict[tuple[str, int], bool] = {}

    def dfs(pos: int, union: int) -> bool:
        if pos == n:
            return True
        if pos < len(prefix_set):
            pool = [f for f in sorted(prefix_set) if f not in chosen_set]
        else:
            pool = [f for f in facet_list if f not in chosen_set]
        for f in pool:
            bud.spend()
            ck = (f, union)
            ok = cond_cache.get(ck)
            if ok is None:
                ok = _step_ok(L, f, union, pos == 0, bud, allow_empty_intersection)
                cond_cache[ck] = ok
            if not ok:
                continue
            chosen.append(f)
            chosen_set.add(f)
            if dfs(pos + 1, union | L._down[L.index(f)]):
                return True
            chosen.pop()
            chosen_set.discard(f)
        return False

    found = tuple(chosen) if dfs(0, 0) else None
    _memo[key] = found
    return None if found is None else ShellingOrder(L, found)


def is_shelling(
    L: FaceLattice,
    order: Union[ShellingOrder, Sequence[str]],
    *,
    budget: Union[int, SearchBudget, None] = None,
    allow_empty_intersection: bool = False,
) -> ShellingResult:
    """Replay the definition against a facet order.

    Returns a :class:`ShellingCertificate` with one step record per facet,
    or a :class:`ShellingFailure` naming the first bad step and why:
    ``EmptyIntersection``, ``NotPure``, or ``NoPrefixShelling``.
    """
    if not is_pure(L):
        raise PreconditionViolated("shellings are defined for pure complexes")
    seq = _order_ids(L, order)
    if sorted(seq) != sorted(L.facets()):
        raise PreconditionViolated("order is not a permutation of the facets")
    bud = _as_budget(budget)
    if L.dim <= 0:
        return ShellingCertificate(ShellingOrder(L, seq), ())

    def free_step(j: int, facet: str) -> Union[ShellingStep, ShellingFailure]:
        sub = sub_lattice(L, facet)
        sub_order = find_shelling(
            sub, (), budget=bud, allow_empty_intersection=allow_empty_intersection
        )
        if sub_order is None:
            return ShellingFailure(j, NO_PREFIX_SHELLING)
        return ShellingStep(facet, (), _certify(sub, sub_order))

    def _certify(sub: FaceLattice, sub_order: ShellingOrder) -> ShellingCertificate:
        cert = is_shelling(
            sub, sub_order, budget=bud, allow_empty_intersection=allow_empty_intersection
        )
        if isinstance(cert, ShellingFailure):
            raise InternalContradiction(
                f"search returned an order that fails verification at step {cert.step}"
            )
        return cert

    steps: list[ShellingStep] = []
    union = 0
    for j, facet in enumerate(seq, 1):
        x = L.index(facet)
        if j == 1:
            outcome = free_step(j, facet)
            if isinstance(outcome, ShellingFailure):
                return outcome
            steps.append(outcome)
        else:
            inter = (L._down[x] & ~(1 << x)) & union
            if not inter & L._real_mask:
                if not allow_empty_intersection:
                    return ShellingFailure(j, EMPTY_INTERSECTION)
                outcome = free_step(j, facet)
                if isinstance(outcome, ShellingFailure):
                    return outcome
                steps.append(outcome)
            else:
                ridges = _pure_ridge_mask(L, inter)
                if ridges is None:
                    return ShellingFailure(j, NOT_PURE)
                ridge_ids = L._ids_of(ridges)
                sub = sub_lattice(L, facet)
                sub_order = find_shelling(
                    sub,
                    ridge_ids,
                    budget=bud,
                    allow_empty_intersection=allow_empty_intersection,
                )
                if sub_order is None:
                    return ShellingFailure(j, NO_PREFIX_SHELLING)
                steps.append(
                    ShellingStep(facet, tuple(sorted(ridge_ids)), _certify(sub, sub_order))
                )
        union |= L._down[x]
    return ShellingCertificate(ShellingOrder(L, seq), tuple(steps))


def classify(L: FaceLattice, certificate: ShellingCertificate) -> Shape:
    """Ball or sphere, decided by whether the boundary is empty.

    The certificate is demanded as evidence that the classification
    theorem applies; it must belong to this lattice.
    """
    if not isinstance(certificate, ShellingCertificate):
        raise PreconditionViolated("classification needs a shelling certificate")
    if certificate.order.lattice is not L:
        raise PreconditionViolated("certificate belongs to a different lattice")
    if not is_pseudomanifold(L):
        raise NotPseudomanifold("classification applies to pseudomanifolds")
    bd = boundary_complex(L)
    return Shape.SPHERE if bd.mask == 0 else Shape.BALL


def is_dual_cl_shellable(
    L: FaceLattice, *, budget: Union[int, SearchBudget, None] = None
) -> bool:
    """Whether the complex carried by this diamond lattice is shellable.

    Shellability of the complex is equivalent to dual CL-shellability of
    its face lattice, which is what the name records; the search is simply
    a facet-order search on the complex itself.
    """
    if not (is_lattice(L) and is_diamond(L)):
        raise NotDiamond("dual CL-shellability is examined on diamond lattices only")
    return find_shelling(L, (), budget=budget) is not None


def is_cl_shellable(L: FaceLattice, *, budget: Union[int, SearchBudget, None] = None) -> bool:
    """CL-shellability of the lattice, tested on the order-reversed lattice."""
    if not (is_lattice(L) and is_diamond(L)):
        raise NotDiamond("CL-shellability is examined on diamond lattices only")
    return find_shelling(dualize(L), (), budget=budget) is not None
