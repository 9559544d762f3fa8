"""Face-number lower bounds for shellable spheres and balls.

The central inequality bounds f_k of a shellable d-pseudomanifold from
below by a half-integer multiple of the facet count plus half the k-th
face count of the boundary.  The multiplier is

    rho(d+1, k) = (C(ceil((d+1)/2), d-k) + C(floor((d+1)/2), d-k)) / 2,

and equality holds exactly for k = d, or for k = d - 1 on simplicial
complexes.  Everything here is verified in exact rational arithmetic
(denominators never exceed 2); no floats appear anywhere.

The verification follows the same route as the proof: split each facet
boundary into the part glued to earlier facets and the part facing later
facets or the complex boundary, bound the interior face counts of each
split, and sum without double counting.  Every identity the argument
relies on is recomputed and cross-checked; a mismatch raises
:class:`InternalContradiction` because it would mean the input lied about
being a verified shelling, or the mathematics failed.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Sequence, Union

from .errors import (
    InternalContradiction,
    InvalidSplit,
    NoSuchAtom,
    NotAShelling,
    NotDiamond,
    NotPseudomanifold,
    NotShellable,
    NotSimplicial,
    PreconditionViolated,
    RangeError,
)
from .lattice import (
    FaceLattice,
    FaceSet,
    Subcomplex,
    _iter_bits,
    atom_avoiding_coatom,
    boundary_complex,
    f_vector,
    interior,
    is_diamond,
    is_lattice,
    is_pseudomanifold,
    is_pure,
    sub_lattice,
)
from .shelling import (
    SearchBudget,
    ShellingFailure,
    ShellingOrder,
    _as_budget,
    boundary_intersection,
    find_shelling,
    is_cl_shellable,
    is_dual_cl_shellable,
    is_shelling,
)


# -- coefficients --------------------------------------------------------


@dataclass(frozen=True)
class RhoCoefficient:
    """The bound multiplier for a (d+1)-polytopal setting at dimension k."""

    d_plus_1: int
    k: int
    value: Fraction


def _halves(d_plus_1: int) -> tuple[int, int]:
    return (d_plus_1 + 1) // 2, d_plus_1 // 2


def rho(d_plus_1: int, k: int) -> RhoCoefficient:
    """Exact value of the facet-count multiplier.

    Defined for 0 <= k <= d where d = d_plus_1 - 1; takes the value 1 at
    k = d and grows as k shrinks.
    """
    d = d_plus_1 - 1
    if d < 0 or not 0 <= k <= d:
        raise RangeError(f"rho needs 0 <= k <= {d}, got k={k}")
    hi, lo = _halves(d_plus_1)
    return RhoCoefficient(d_plus_1, k, Fraction(comb(hi, d - k) + comb(lo, d - k), 2))


def _rho_doubled(d_plus_1: int, k: int) -> int:
    hi, lo = _halves(d_plus_1)
    d = d_plus_1 - 1
    return comb(hi, d - k) + comb(lo, d - k)


def binomial_split_lb(a: int, b: int, d: int, m: int) -> bool:
    """Whether C(a, m) + C(b, m) meets the balanced-split floor
    C(ceil((d+1)/2), m) + C(floor((d+1)/2), m).

    Requires a, b >= 0, a + b >= d + 1 and 1 <= m <= ceil((d+1)/2); the
    floor is attained by the most balanced split of d + 1.
    """
    hi, lo = _halves(d + 1)
    if a < 0 or b < 0 or a + b < d + 1 or not 1 <= m <= hi:
        raise PreconditionViolated(
            f"need a,b >= 0, a+b >= {d + 1}, 1 <= m <= {hi}; got a={a} b={b} m={m}"
        )
    return comb(a, m) + comb(b, m) >= comb(hi, m) + comb(lo, m)


# -- shelling-order splits ----------------------------------------------


def _verified_order(
    L: FaceLattice, order: Union[ShellingOrder, Sequence[str]], budget: SearchBudget
) -> tuple[str, ...]:
    result = is_shelling(L, order, budget=budget)
    if isinstance(result, ShellingFailure):
        raise NotAShelling(result)
    return result.order.facets


def _require_sphere(L: FaceLattice) -> None:
    if not is_pseudomanifold(L):
        raise NotPseudomanifold("a sphere pseudomanifold is required")
    if boundary_complex(L).mask != 0:
        raise PreconditionViolated("the complex has nonempty boundary; need a sphere")


@dataclass(frozen=True)
class SplitPair:
    """A shelling order cut at position j: the subcomplex spanned by the
    first j facets, the one spanned by the rest, and their interiors."""

    begin: Subcomplex
    end: Subcomplex
    begin_interior: FaceSet
    end_interior: FaceSet


def split_complexes(
    L: FaceLattice,
    order: Union[ShellingOrder, Sequence[str]],
    j: int,
    *,
    budget: Union[int, SearchBudget, None] = None,
) -> SplitPair:
    """Cut a verified sphere shelling at position j (0 <= j <= n).

    Both sides are pseudomanifolds, and the interior of each side is the
    complement of the other side; both facts are recomputed and enforced.
    """
    bud = _as_budget(budget)
    seq = _verified_order(L, order, bud)
    _require_sphere(L)
    n = len(seq)
    if not 0 <= j <= n:
        raise InvalidSplit(f"need 0 <= j <= {n}, got {j}")
    begin_mask = 0
    for f in seq[:j]:
        begin_mask |= L._down[L.index(f)]
    end_mask = 0
    for f in seq[j:]:
        end_mask |= L._down[L.index(f)]
    begin = Subcomplex(L, begin_mask)
    end = Subcomplex(L, end_mask)
    if not (is_pseudomanifold(begin) and is_pseudomanifold(end)):
        raise InternalContradiction("a side of a verified sphere split is not a pseudomanifold")
    begin_int = interior(begin)
    end_int = interior(end)
    if begin_int.mask != L._real_mask & ~end_mask or end_int.mask != L._real_mask & ~begin_mask:
        raise InternalContradiction("split interiors do not complement each other")
    return SplitPair(begin, end, begin_int, end_int)


@dataclass(frozen=True)
class SplitCountResult:
    j: int
    k: int
    lhs: int
    rhs: int
    fk_begin: int
    fk_end: int

    @property
    def ok(self) -> bool:
        return self.lhs >= self.rhs


def check_split_count(
    L: FaceLattice,
    order: Union[ShellingOrder, Sequence[str]],
    j: int,
    k: int,
    *,
    budget: Union[int, SearchBudget, None] = None,
) -> SplitCountResult:
    """Interior face counts across a split of a shellable sphere.

    For a sphere of dimension delta = d - 1 the two split interiors
    together carry at least C(ceil((d+1)/2), d-k) + C(floor((d+1)/2), d-k)
    faces of dimension k, for floor(delta/2) <= k <= delta and any cut
    position.  Returns the exact left side, the binomial right side, and
    the verdict.
    """
    delta = L.dim
    d = delta + 1
    if not (delta >= 0 and (delta // 2) <= k <= delta):
        raise RangeError(f"need {delta // 2} <= k <= {delta}, got k={k}")
    bud = _as_budget(budget)
    seq = _verified_order(L, order, bud)
    if not 0 <= j <= len(seq):
        raise RangeError(f"need 0 <= j <= {len(seq)}, got j={j}")
    pair = split_complexes(L, seq, j, budget=bud)
    fk_begin = f_vector(pair.begin_interior)[k]
    fk_end = f_vector(pair.end_interior)[k]
    return SplitCountResult(j, k, fk_begin + fk_end, _rho_doubled(d + 1, k), fk_begin, fk_end)


# -- witness pairs -------------------------------------------------------


@dataclass(frozen=True)
class WitnessPair:
    """Two faces separated by a shelling split whose dimensions sum to at
    most the complex dimension: one interior to the leading subcomplex,
    one interior to the trailing one."""

    begin_face: str
    end_face: str
    begin_dim: int
    end_dim: int
    split: int
    begin_in_interior: bool
    end_in_interior: bool

    def to_json_dict(self) -> dict:
        return {
            "C": self.begin_face,
            "D": self.end_face,
            "dim_C": self.begin_dim,
            "dim_D": self.end_dim,
            "split": self.split,
            "C_in_interior": self.begin_in_interior,
            "D_in_interior": self.end_in_interior,
        }


def _witness(L: FaceLattice, seq: tuple[str, ...], j: int, bud: SearchBudget) -> tuple[str, str]:
    d = L.dim
    if d == 0:
        return seq[0], seq[1]
    if j == 1:
        # the leading closed facet, and the least vertex outside it
        return seq[0], atom_avoiding_coatom(L, seq[0])
    facet = seq[j - 1]
    x = L.index(facet)
    pos = {f: i for i, f in enumerate(seq)}
    prefix: list[str] = []
    for ridge in _iter_bits(L._down[x] & L._rank_masks[d]):
        others = L._up[ridge] & L._rank_masks[d + 1] & ~(1 << x)
        if others.bit_count() != 1:
            raise InternalContradiction("a ridge of the sphere is not in exactly two facets")
        if pos[L.ids[others.bit_length() - 1]] < j - 1:
            prefix.append(L.ids[ridge])
    sub = sub_lattice(L, facet)
    sub_order = find_shelling(sub, prefix, budget=bud)
    if sub_order is None:
        raise InternalContradiction("a verified step lost its prefixed boundary shelling")
    inner_j = len(prefix)
    if not 1 <= inner_j < len(sub_order.facets):
        raise InternalContradiction("facet boundary split is degenerate")
    begin_face, inner_end = _witness(sub, sub_order.facets, inner_j, bud)
    try:
        end_face = atom_avoiding_coatom(L, facet, inner_end)
    except NoSuchAtom:
        raise InternalContradiction(
            "every cover of the inner witness lies inside the closed facet"
        ) from None
    return begin_face, end_face


def find_witness_pair(
    L: FaceLattice,
    order: Union[ShellingOrder, Sequence[str]],
    j: int,
    *,
    budget: Union[int, SearchBudget, None] = None,
) -> WitnessPair:
    """Construct the witness pair for a verified sphere shelling cut at j.

    Follows the inductive argument: the base cases take the leading facet
    against the least escaping vertex, and the inductive step pushes the
    split into the boundary of the j-th facet, then lifts the trailing
    witness through a cover that escapes the closed facet.  Memberships
    are verified against the split interiors before returning.
    """
    bud = _as_budget(budget)
    seq = _verified_order(L, order, bud)
    _require_sphere(L)
    n = len(seq)
    if not 1 <= j < n:
        raise InvalidSplit(f"need 1 <= j < {n}, got {j}")
    begin_face, end_face = _witness(L, seq, j, bud)
    pair = split_complexes(L, seq, j, budget=bud)
    witness = WitnessPair(
        begin_face,
        end_face,
        L.dim_of(begin_face),
        L.dim_of(end_face),
        j,
        begin_face in pair.begin_interior,
        end_face in pair.end_interior,
    )
    if not (witness.begin_in_interior and witness.end_in_interior):
        raise InternalContradiction("witness faces are not interior to their sides")
    if witness.begin_dim + witness.end_dim > L.dim:
        raise InternalContradiction("witness dimensions exceed the complex dimension")
    return witness


# -- per-facet decomposition --------------------------------------------


@dataclass(frozen=True)
class FacetSplit:
    """The boundary of one facet cut into the part glued to earlier facets
    and the part facing later facets or the complex boundary."""

    j: int
    facet: str
    before: Subcomplex
    after: Subcomplex
    before_interior: FaceSet
    after_interior: FaceSet


@dataclass(frozen=True)
class SplitDecomposition:
    lattice: FaceLattice
    order: tuple[str, ...]
    splits: tuple[FacetSplit, ...]


def facet_decomposition(
    X: FaceLattice,
    order: Union[ShellingOrder, Sequence[str]],
    *,
    budget: Union[int, SearchBudget, None] = None,
) -> SplitDecomposition:
    """Decompose every facet boundary of a verified shelling.

    For facet j, the ridges below it are split by where their second facet
    sits in the order (or whether they lie on the complex boundary); each
    side is closed off.  The identities the counting argument needs are
    recomputed here and enforced: the sides cover the facet boundary with
    disjoint ridge sets, the earlier side equals the step intersection,
    the sides meet exactly in their common boundary, and across facets no
    face is interior to two earlier sides (or an earlier side and the
    complex boundary), nor interior to two later sides.
    """
    bud = _as_budget(budget)
    seq = _verified_order(X, order, bud)
    if not is_pseudomanifold(X):
        raise NotPseudomanifold("the decomposition needs a pseudomanifold")
    d = X.dim
    if d < 1:
        raise RangeError("the decomposition needs dimension at least 1")
    bd_mask = boundary_complex(X).mask
    pos = {f: i for i, f in enumerate(seq)}
    splits: list[FacetSplit] = []
    seen_before_int = 0
    seen_after_int = 0
    for j0, facet in enumerate(seq):
        x = X.index(facet)
        before_ridges = 0
        after_ridges = 0
        for ridge in _iter_bits(X._down[x] & X._rank_masks[d]):
            others = X._up[ridge] & X._rank_masks[d + 1] & ~(1 << x)
            count = others.bit_count()
            if count == 0:
                if not (bd_mask >> ridge) & 1:
                    raise InternalContradiction(
                        "a ridge in a single facet is missing from the boundary"
                    )
                after_ridges |= 1 << ridge
            elif count == 1:
                if pos[X.ids[others.bit_length() - 1]] < j0:
                    before_ridges |= 1 << ridge
                else:
                    after_ridges |= 1 << ridge
            else:
                raise InternalContradiction("a ridge lies in more than two facets")
        if before_ridges & after_ridges:
            raise InternalContradiction("a ridge landed on both sides of its facet")
        before_mask = 0
        for r in _iter_bits(before_ridges):
            before_mask |= X._down[r]
        after_mask = 0
        for r in _iter_bits(after_ridges):
            after_mask |= X._down[r]

        cell_boundary = X._down[x] & ~(1 << x)
        if before_mask | after_mask != cell_boundary:
            raise InternalContradiction("the two sides do not cover the facet boundary")
        if j0 == 0:
            if before_mask != 0:
                raise InternalContradiction("the first facet has no earlier side")
        else:
            if before_mask != boundary_intersection(X, seq, j0 + 1).mask:
                raise InternalContradiction(
                    "the earlier side differs from the step intersection"
                )
        later_union = 0
        for f in seq[j0 + 1 :]:
            later_union |= X._down[X.index(f)]
        if after_mask != cell_boundary & (bd_mask | later_union):
            raise InternalContradiction(
                "the later side differs from its boundary description"
            )
        before = Subcomplex(X, before_mask)
        after = Subcomplex(X, after_mask)
        bd_before = boundary_complex(before).mask
        bd_after = boundary_complex(after).mask
        if not (before_mask & after_mask == bd_before == bd_after):
            raise InternalContradiction("the sides do not meet in their common boundary")
        before_int = interior(before)
        after_int = interior(after)
        if before_int.mask & (seen_before_int | bd_mask):
            raise InternalContradiction("a face is interior to two earlier sides")
        if after_int.mask & seen_after_int:
            raise InternalContradiction("a face is interior to two later sides")
        seen_before_int |= before_int.mask
        seen_after_int |= after_int.mask
        splits.append(FacetSplit(j0 + 1, facet, before, after, before_int, after_int))
    return SplitDecomposition(X, seq, tuple(splits))


# -- the main inequality -------------------------------------------------


@dataclass(frozen=True)
class PerFacetBound:
    j: int
    fk_int_C: int
    fk_int_D: int
    bound: int

    @property
    def ok(self) -> bool:
        return self.fk_int_C + self.fk_int_D >= self.bound

    def to_json_dict(self) -> dict:
        return {
            "j": self.j,
            "fk_int_C": self.fk_int_C,
            "fk_int_D": self.fk_int_D,
            "bound": self.bound,
        }


@dataclass(frozen=True)
class BoundsReport:
    """Everything checked for one k: the exact inequality, the equality
    expectation, the per-facet floors, and the double-counting ceiling."""

    k: int
    lhs: int
    rhs: Fraction
    slack: Fraction
    equality: bool
    expected_equality: bool
    per_facet: tuple[PerFacetBound, ...]
    interior_sum: int
    interior_sum_bound: int

    @property
    def ok(self) -> bool:
        return (
            self.slack >= 0
            and self.equality == self.expected_equality
            and self.interior_sum <= self.interior_sum_bound
            and all(p.ok for p in self.per_facet)
        )

    def to_json_dict(self) -> dict:
        return {
            "k": self.k,
            "lhs": self.lhs,
            "rhs_num": self.rhs.numerator,
            "rhs_den": self.rhs.denominator,
            "slack_num": self.slack.numerator,
            "slack_den": self.slack.denominator,
            "equality": self.equality,
            "expected_equality": self.expected_equality,
            "per_facet": [p.to_json_dict() for p in self.per_facet],
        }


def is_simplicial(X: FaceLattice) -> bool:
    """Whether every facet is a simplex.

    Tested by counting codimension-1 faces below each facet (d + 1 for a
    d-simplex) and cross-checked against the closed cells being Boolean
    intervals of size 2^(d+1); the two tests agree on diamond lattices.
    """
    if not is_pure(X):
        raise PreconditionViolated("simpliciality is examined on pure complexes")
    d = X.dim
    by_ridges = True
    by_interval = True
    for facet in X.facets():
        x = X.index(facet)
        if (X._down[x] & X._rank_masks[d]).bit_count() != d + 1:
            by_ridges = False
        if X._down[x].bit_count() != 2 ** (d + 1):
            by_interval = False
    if by_ridges != by_interval:
        raise InternalContradiction("ridge-count and Boolean-interval tests disagree")
    return by_ridges


def simplicial_equality_identity(X: FaceLattice) -> bool:
    """The ridge-count identity behind the simplicial equality case:
    (d+1) * f_d + f_{d-1}(boundary) = 2 * f_{d-1}."""
    if not is_simplicial(X):
        raise NotSimplicial("the identity is stated for simplicial complexes")
    if not is_pseudomanifold(X):
        raise NotPseudomanifold("the identity needs a pseudomanifold")
    d = X.dim
    f = f_vector(X)
    fbd = f_vector(boundary_complex(X))
    return (d + 1) * f[d] + fbd[d - 1] == 2 * f[d - 1]


def vandermonde_check(d: int, k: int) -> bool:
    """Split C(d+1, d-k) across the balanced halves and report whether the
    cross terms vanish (they do exactly when k >= d - 1).

    The full convolution identity is recomputed and enforced on the way.
    """
    if d < 1 or not 0 <= k <= d:
        raise RangeError(f"need d >= 1 and 0 <= k <= {d}, got k={k}")
    hi, lo = _halves(d + 1)
    m = d - k
    if comb(d + 1, m) != sum(comb(hi, i) * comb(lo, m - i) for i in range(m + 1)):
        raise InternalContradiction("binomial convolution identity failed")
    cross = sum(comb(hi, i) * comb(lo, m - i) for i in range(1, m))
    return cross == 0


def verify_lower_bound(
    X: FaceLattice,
    order: Union[ShellingOrder, Sequence[str]],
    k: int,
    *,
    budget: Union[int, SearchBudget, None] = None,
) -> BoundsReport:
    """Check f_k >= rho(d+1, k) * f_d + f_k(boundary) / 2 along its proof.

    Runs, in order: the per-facet floors from the boundary decomposition
    (each cross-checked against an independent recount through the split
    machinery of the facet boundary), the double-counting ceiling on their
    sum, the exact rational inequality, and the equality expectation
    (equality iff k = d, or k = d - 1 with X simplicial).  Admissible
    range: floor((d-1)/2) <= k <= d, dimension at least 1.
    """
    d = X.dim
    if d < 1 or not (d - 1) // 2 <= k <= d:
        raise RangeError(f"need {(d - 1) // 2} <= k <= {d}, got k={k}")
    bud = _as_budget(budget)
    seq = _verified_order(X, order, bud)
    if not is_pseudomanifold(X):
        raise NotPseudomanifold("the bound applies to pseudomanifolds")
    f = f_vector(X)
    fbd = f_vector(boundary_complex(X))

    per_facet: list[PerFacetBound] = []
    interior_sum = 0
    if k <= d - 1:
        decomp = facet_decomposition(X, seq, budget=bud)
        for split in decomp.splits:
            sub = sub_lattice(X, split.facet)
            prefix = tuple(r for r in sub.facets() if r in split.before)
            sub_order = find_shelling(sub, prefix, budget=bud)
            if sub_order is None:
                raise InternalContradiction("a facet boundary lost its prefixed shelling")
            counted = check_split_count(sub, sub_order, len(prefix), k, budget=bud)
            direct_begin = f_vector(split.before_interior)[k]
            direct_end = f_vector(split.after_interior)[k]
            if (counted.fk_begin, counted.fk_end) != (direct_begin, direct_end):
                raise InternalContradiction(
                    "split recount disagrees with the facet decomposition"
                )
            per_facet.append(PerFacetBound(split.j, counted.fk_begin, counted.fk_end, counted.rhs))
            interior_sum += counted.fk_begin + counted.fk_end

    lhs = f[k]
    rhs = rho(d + 1, k).value * f[d] + Fraction(fbd[k], 2)
    slack = lhs - rhs
    return BoundsReport(
        k=k,
        lhs=lhs,
        rhs=rhs,
        slack=slack,
        equality=slack == 0,
        expected_equality=(k == d) or (k == d - 1 and is_simplicial(X)),
        per_facet=tuple(per_facet),
        interior_sum=interior_sum,
        interior_sum_bound=2 * f[k] - fbd[k],
    )


# -- polytopal corollaries ----------------------------------------------


@dataclass(frozen=True)
class CorollaryReport:
    """Face-count floors that follow once the lattice is shellable in one
    or both directions, evaluated at a single k."""

    k: int
    dim: int
    dual_cl_shellable: bool
    cl_shellable: bool
    facet_bound: Union[Fraction, None]
    facet_bound_ok: Union[bool, None]
    vertex_bound: Union[Fraction, None]
    vertex_bound_ok: Union[bool, None]
    barany_bound: Union[int, None]
    barany_ok: Union[bool, None]

    def to_json_dict(self) -> dict:
        def frac(x):
            return None if x is None else {"num": x.numerator, "den": x.denominator}

        return {
            "k": self.k,
            "dim": self.dim,
            "dual_cl_shellable": self.dual_cl_shellable,
            "cl_shellable": self.cl_shellable,
            "facet_bound": frac(self.facet_bound),
            "facet_bound_ok": self.facet_bound_ok,
            "vertex_bound": frac(self.vertex_bound),
            "vertex_bound_ok": self.vertex_bound_ok,
            "barany_bound": self.barany_bound,
            "barany_ok": self.barany_ok,
        }


def corollary_bounds(
    L: FaceLattice, k: int, *, budget: Union[int, SearchBudget, None] = None
) -> CorollaryReport:
    """Evaluate the shellability-conditional floors at one k.

    When the lattice is dual CL-shellable, f_k is floored by rho(d+1, k)
    times the facet count on the upper half of dimensions; when it is
    CL-shellable, by rho(d+1, d-k) times the vertex count on the lower
    half; when both, by min(f_0, f_d) everywhere.  Unmet hypotheses are
    reported as absent bounds, never asserted.
    """
    if not (is_lattice(L) and is_diamond(L)):
        raise NotDiamond("the corollaries are stated for diamond lattices")
    d = L.dim
    if not 0 <= k <= d:
        raise RangeError(f"need 0 <= k <= {d}, got k={k}")
    bud = _as_budget(budget)
    dual_cl = is_dual_cl_shellable(L, budget=bud)
    cl = is_cl_shellable(L, budget=bud)
    f = f_vector(L)

    facet_bound = facet_ok = None
    if dual_cl and (d - 1) // 2 <= k <= d:
        facet_bound = rho(d + 1, k).value * f[d]
        facet_ok = f[k] >= facet_bound
    vertex_bound = vertex_ok = None
    if cl and k <= (d + 2) // 2:
        vertex_bound = rho(d + 1, d - k).value * f[0]
        vertex_ok = f[k] >= vertex_bound
    barany_bound = barany_ok = None
    if dual_cl and cl:
        barany_bound = min(f[0], f[d])
        barany_ok = f[k] >= barany_bound
    return CorollaryReport(
        k, d, dual_cl, cl, facet_bound, facet_ok, vertex_bound, vertex_ok,
        barany_bound, barany_ok,
    )


def barany_check(L: FaceLattice, *, budget: Union[int, SearchBudget, None] = None) -> bool:
    """min(f_0, f_d) floors every face count, given shellability both ways.

    Raises :class:`NotShellable` when either direction fails, since the
    statement is then silent about the lattice.
    """
    if not (is_lattice(L) and is_diamond(L)):
        raise NotDiamond("the floor is stated for diamond lattices")
    bud = _as_budget(budget)
    if not (is_dual_cl_shellable(L, budget=bud) and is_cl_shellable(L, budget=bud)):
        raise NotShellable("the lattice is not shellable in both directions")
    f = f_vector(L)
    floor_value = min(f[0], f[L.dim])
    return all(f[k] >= floor_value for k in range(L.dim + 1))
