"""Reference complexes: simplex and cube boundaries, cross polytopes,
polygons, cyclic polytope boundaries, and punctured spheres.

All generators return validated :class:`FaceLattice` objects with
deterministic face ids, so the same call always produces the same labels
in the same order.  Size guards keep the combinatorial blow-up of the
larger families within interactive reach; they raise :class:`RangeError`
rather than letting a call run away.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, product
from typing import Union

from .bounds import is_simplicial
from .errors import (
    HypothesisNotMet,
    InvalidFace,
    NotPseudomanifold,
    NotShellable,
    PreconditionViolated,
    RangeError,
)
from .lattice import (
    BOTTOM_ID,
    TOP_ID,
    FaceLattice,
    boundary_complex,
    build_lattice,
    f_vector,
    from_facets,
    is_pseudomanifold,
)
from .shelling import SearchBudget, _as_budget, find_shelling


def simplex_boundary(d: int) -> FaceLattice:
    """Boundary of the (d+1)-simplex on vertices 1..d+2, a d-sphere."""
    if not 0 <= d <= 12:
        raise RangeError(f"need 0 <= d <= 12, got {d}")
    return from_facets(combinations(range(1, d + 3), d + 1))


def cross_polytope(d: int) -> FaceLattice:
    """Boundary of the (d+1)-dimensional cross polytope, a d-sphere.

    Vertices i and i + d + 1 are antipodal; the facets pick one vertex
    from each antipodal pair.
    """
    if not 1 <= d <= 6:
        raise RangeError(f"need 1 <= d <= 6, got {d}")
    m = d + 1
    pairs = [(i, i + m) for i in range(1, m + 1)]
    return from_facets(product(*pairs))


def hypercube_boundary(d: int) -> FaceLattice:
    """Boundary of the (d+1)-cube, a d-sphere of 2^(d+1) vertices.

    Faces are words over ``{0, 1, *}`` of length d + 1 with at least one
    fixed letter; ``*`` marks a free coordinate, so the face dimension is
    the number of stars.  A cover fixes exactly one star.
    """
    if not 1 <= d <= 6:
        raise RangeError(f"need 1 <= d <= 6, got {d}")
    m = d + 1
    elements = [(BOTTOM_ID, 0), (TOP_ID, d + 2)]
    covers = []
    for word in product("01*", repeat=m):
        stars = word.count("*")
        if stars == m:
            continue
        face = "".join(word)
        elements.append((face, stars + 1))
        if stars == 0:
            covers.append((BOTTOM_ID, face))
        if stars == m - 1:
            covers.append((face, TOP_ID))
        for i, c in enumerate(word):
            if c == "*":
                for bit in "01":
                    covers.append((face[:i] + bit + face[i + 1 :], face))
    return build_lattice(elements, covers, d)


def ngon(n: int) -> FaceLattice:
    """The n-gon: vertices ``v1..vn`` and edges ``e12, e23, ..., e{n}1``."""
    if n < 3:
        raise RangeError(f"need n >= 3, got {n}")
    elements = [(BOTTOM_ID, 0), (TOP_ID, 3)]
    covers = []
    for i in range(1, n + 1):
        elements.append((f"v{i}", 1))
        covers.append((BOTTOM_ID, f"v{i}"))
    for i in range(1, n + 1):
        a, b = i, i % n + 1
        edge = f"e{a}{b}"
        elements.append((edge, 2))
        covers += [(f"v{a}", edge), (f"v{b}", edge), (edge, TOP_ID)]
    return build_lattice(elements, covers, 1)


def _gale_even(subset: tuple[int, ...], n: int) -> bool:
    # maximal runs of consecutive elements; runs touching 1 or n are exempt
    runs: list[list[int]] = [[subset[0]]]
    for v in subset[1:]:
        if v == runs[-1][-1] + 1:
            runs[-1].append(v)
        else:
            runs.append([v])
    return all(len(r) % 2 == 0 for r in runs if r[0] != 1 and r[-1] != n)


def cyclic_boundary(d: int, n: int) -> FaceLattice:
    """Boundary of the cyclic d-polytope on n vertices, a (d-1)-sphere.

    Facets are the d-subsets of 1..n passing the evenness condition:
    every maximal run of consecutive chosen elements that contains
    neither 1 nor n has even length.
    """
    if not 2 <= d <= 6:
        raise RangeError(f"need 2 <= d <= 6, got d={d}")
    if not d + 1 <= n <= 16:
        raise RangeError(f"need {d + 1} <= n <= 16, got n={n}")
    facets = [s for s in combinations(range(1, n + 1), d) if _gale_even(s, n)]
    return from_facets(facets)


def punctured(S: FaceLattice, facet_id: Union[str, None] = None) -> FaceLattice:
    """Remove one open facet from a sphere, leaving a ball with the same
    faces otherwise.  Defaults to the lexicographically least facet."""
    if not is_pseudomanifold(S):
        raise NotPseudomanifold("puncturing needs a pseudomanifold")
    if boundary_complex(S).mask != 0:
        raise PreconditionViolated("puncturing is defined on spheres")
    facets = S.facets()
    if facet_id is None:
        facet_id = facets[0]
    elif facet_id not in facets:
        raise InvalidFace(f"{facet_id!r} is not a facet")
    elements = [(i, r) for i, r in zip(S.ids, S.ranks) if i != facet_id]
    covers = [(a, b) for a, b in S.covers() if facet_id not in (a, b)]
    return build_lattice(elements, covers, S.dim)


# -- comparison against the cyclic polytope ------------------------------


@dataclass(frozen=True)
class GubtRow:
    k: int
    f_p: int
    f_c: int
    ok: bool

    def to_json_dict(self) -> dict:
        return {"k": self.k, "f_p": self.f_p, "f_c": self.f_c, "ok": self.ok}


@dataclass(frozen=True)
class GubtReport:
    """Face counts of a sphere against the cyclic polytope boundary with
    the same dimension and vertex count.  Rows that fall short are
    reported, never asserted away."""

    d: int
    n: int
    simplicial: bool
    facets_p: int
    facets_c: int
    rows: tuple[GubtRow, ...]
    all_ok: bool

    def to_json_dict(self) -> dict:
        return {
            "d": self.d,
            "n": self.n,
            "simplicial": self.simplicial,
            "facets_p": self.facets_p,
            "facets_c": self.facets_c,
            "rows": [r.to_json_dict() for r in self.rows],
            "all_ok": self.all_ok,
        }


def gubt_compare(
    P: FaceLattice, d: int, n: int, *, budget: Union[int, SearchBudget, None] = None
) -> GubtReport:
    """Compare a shellable (d-1)-sphere on n vertices against C(d, n).

    The hypothesis is that P has at least as many facets as the cyclic
    boundary; when it holds, every face count of P is expected to meet
    the cyclic one, and the report records where that happens.  A sphere
    with fewer facets raises :class:`HypothesisNotMet` since the
    comparison is silent about it.
    """
    C = cyclic_boundary(d, n)
    if P.dim != d - 1:
        raise PreconditionViolated(f"dimension {P.dim} does not match d-1={d - 1}")
    if not is_pseudomanifold(P):
        raise NotPseudomanifold("the comparison needs a pseudomanifold")
    if boundary_complex(P).mask != 0:
        raise PreconditionViolated("the comparison is stated for spheres")
    fP = f_vector(P)
    fC = f_vector(C)
    if find_shelling(P, budget=_as_budget(budget)) is None:
        raise NotShellable("no shelling order found")
    if fP[d - 1] < fC[d - 1]:
        raise HypothesisNotMet(
            f"facet count {fP[d - 1]} is below the cyclic count {fC[d - 1]}"
        )
    rows = tuple(GubtRow(k, fP[k], fC[k], fP[k] >= fC[k]) for k in range(d))
    return GubtReport(
        d, n, is_simplicial(P), fP[d - 1], fC[d - 1], rows, all(r.ok for r in rows)
    )
