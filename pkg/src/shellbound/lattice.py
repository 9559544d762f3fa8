"""Graded face lattices of strongly regular CW complexes.

A complex is modelled purely combinatorially by its face lattice: the poset
of faces ordered by containment, with an artificial minimum below the
vertices (the empty face) and an artificial maximum above the facets.

Conventions used throughout the package:

* the empty face sits at rank 0, a k-dimensional face at rank k + 1, and
  the artificial maximum at rank d + 2 for a d-dimensional complex;
* every cover step raises rank by exactly one, so maximal chains from the
  bottom to the top have length d + 2;
* the order is the transitive closure of the cover pairs, extended so that
  the bottom sits below and the top above every element (this matters only
  for non-pure complexes, whose lesser maximal faces carry no explicit
  cover up to the top);
* ties are always broken by lexicographic face id, never by insertion
  order, so every derived object is deterministic.

Up-sets and down-sets are cached as bit vectors (Python ints) over a frozen
element order fixed at construction; lattices are immutable afterwards.
"""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from math import comb
from typing import Iterable, Iterator, Sequence, Union

from .errors import (
    CyclicCovers,
    EmptyInput,
    InvalidFace,
    MixedDimensions,
    NoBottom,
    NoSuchAtom,
    NotGraded,
    NotPseudomanifold,
    NoTop,
    RankOutOfRange,
)

#: Reserved ids for the artificial extremes.  User faces may not use them.
BOTTOM_ID = "_bot"
TOP_ID = "_top"


def _iter_bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class FaceLattice:
    """Immutable graded lattice of faces of a regular CW complex.

    Build through :func:`build_lattice`, :func:`from_facets`, a generator,
    or :func:`lattice_from_json_dict`; the constructor validates gradedness,
    acyclicity and the existence of unique extremes, then freezes an element
    order and precomputes containment bit vectors.
    """

    __slots__ = (
        "dim",
        "ids",
        "ranks",
        "_index",
        "_down",
        "_up",
        "_lower",
        "_upper",
        "_rank_masks",
        "_bottom",
        "_top",
        "_real_mask",
        "_cover_pairs",
        "_fingerprint",
        "_sub_cache",
    )

    def __init__(
        self,
        elements: Iterable[tuple[str, int]],
        covers: Iterable[tuple[str, str]],
        dim: int,
    ):
        elems = [(str(i), int(r)) for i, r in elements]
        if len({i for i, _ in elems}) != len(elems):
            raise InvalidFace("duplicate element ids")
        top_rank = dim + 2
        for i, r in elems:
            if not 0 <= r <= top_rank:
                raise RankOutOfRange(f"rank {r} of {i!r} outside [0, {top_rank}]")

        bottoms = [i for i, r in elems if r == 0]
        if len(bottoms) != 1:
            raise NoBottom(f"need exactly one rank-0 element, found {len(bottoms)}")
        tops = [i for i, r in elems if r == top_rank]
        if len(tops) != 1:
            raise NoTop(f"need exactly one rank-{top_rank} element, found {len(tops)}")

        order = sorted(elems, key=lambda e: (e[1], e[0]))
        self.dim = dim
        self.ids = tuple(i for i, _ in order)
        self.ranks = tuple(r for _, r in order)
        self._index = {i: n for n, i in enumerate(self.ids)}
        n = len(self.ids)

        cover_set = set()
        for a, b in covers:
            a, b = str(a), str(b)
            if a not in self._index or b not in self._index:
                raise InvalidFace(f"cover ({a!r}, {b!r}) names an unknown element")
            cover_set.add((self._index[a], self._index[b]))

        lower: list[list[int]] = [[] for _ in range(n)]
        upper: list[list[int]] = [[] for _ in range(n)]
        for a, b in cover_set:
            lower[b].append(a)
            upper[a].append(b)

        self._check_acyclic(n, upper)

        for a, b in cover_set:
            if self.ranks[b] != self.ranks[a] + 1:
                raise NotGraded(
                    f"cover ({self.ids[a]!r}, {self.ids[b]!r}) jumps rank "
                    f"{self.ranks[a]} to {self.ranks[b]}"
                )
        bottom = self._index[bottoms[0]]
        for x in range(n):
            if x != bottom and not lower[x]:
                raise NotGraded(f"element {self.ids[x]!r} has no chain to the bottom")

        self._bottom = bottom
        self._top = self._index[tops[0]]
        # frozen order is (rank, id), so sorting cover neighbours by index
        # also sorts them lexicographically within a rank
        self._lower = tuple(tuple(sorted(c)) for c in lower)
        self._upper = tuple(tuple(sorted(c)) for c in upper)
        self._cover_pairs = tuple(sorted((self.ids[a], self.ids[b]) for a, b in cover_set))

        rank_masks = [0] * (top_rank + 1)
        for x, r in enumerate(self.ranks):
            rank_masks[r] |= 1 << x
        self._rank_masks = tuple(rank_masks)

        full = (1 << n) - 1
        down = [0] * n
        for x in sorted(range(n), key=lambda y: self.ranks[y]):
            m = 1 << x
            for c in self._lower[x]:
                m |= down[c]
            down[x] = m
        up = [0] * n
        for x in sorted(range(n), key=lambda y: -self.ranks[y]):
            m = 1 << x
            for c in self._upper[x]:
                m |= up[c]
            up[x] = m
        # the extremes bound everything, whether or not covers say so
        bot_bit, top_bit = 1 << self._bottom, 1 << self._top
        for x in range(n):
            down[x] |= bot_bit
            up[x] |= top_bit
        down[self._top] = full
        up[self._bottom] = full
        self._down = tuple(down)
        self._up = tuple(up)
        self._real_mask = full & ~bot_bit & ~top_bit
        self._fingerprint = None
        self._sub_cache = {}

    @staticmethod
    def _check_acyclic(n: int, upper: list[list[int]]) -> None:
        indeg = [0] * n
        for x in range(n):
            for y in upper[x]:
                indeg[y] += 1
        queue = [x for x in range(n) if indeg[x] == 0]
        seen = 0
        while queue:
            x = queue.pop()
            seen += 1
            for y in upper[x]:
                indeg[y] -= 1
                if indeg[y] == 0:
                    queue.append(y)
        if seen != n:
            raise CyclicCovers("cover relation contains a cycle")

    # -- basic queries ---------------------------------------------------

    def __len__(self) -> int:
        return len(self.ids)

    def __contains__(self, face_id: str) -> bool:
        return face_id in self._index

    def index(self, face_id: str) -> int:
        try:
            return self._index[face_id]
        except KeyError:
            raise InvalidFace(f"no face {face_id!r}") from None

    @property
    def bottom(self) -> str:
        return self.ids[self._bottom]

    @property
    def top(self) -> str:
        return self.ids[self._top]

    def rank_of(self, face_id: str) -> int:
        return self.ranks[self.index(face_id)]

    def dim_of(self, face_id: str) -> int:
        return self.rank_of(face_id) - 1

    def faces(self, k: int) -> tuple[str, ...]:
        """All k-dimensional faces, lexicographically sorted.

        The artificial extremes are never included, so ``faces(-1)`` and
        ``faces(dim + 1)`` are empty.
        """
        r = k + 1
        if not 0 <= r <= self.dim + 2:
            return ()
        return self._ids_of(self._rank_masks[r] & self._real_mask)

    def facets(self) -> tuple[str, ...]:
        return self.faces(self.dim)

    def face_ids(self) -> tuple[str, ...]:
        """Every face id except the artificial extremes."""
        return self._ids_of(self._real_mask)

    def covers(self) -> tuple[tuple[str, str], ...]:
        """The explicit cover pairs ``(lower, upper)``, sorted."""
        return self._cover_pairs

    def lower_covers(self, face_id: str) -> tuple[str, ...]:
        return tuple(self.ids[c] for c in self._lower[self.index(face_id)])

    def upper_covers(self, face_id: str) -> tuple[str, ...]:
        return tuple(self.ids[c] for c in self._upper[self.index(face_id)])

    def leq(self, a: str, b: str) -> bool:
        """Containment: is face ``a`` below or equal to face ``b``?"""
        return bool((1 << self.index(a)) & self._down[self.index(b)])

    def down_set(self, face_id: str, strict: bool = False) -> frozenset[str]:
        m = self._down[self.index(face_id)]
        if strict:
            m &= ~(1 << self.index(face_id))
        return frozenset(self.ids[x] for x in _iter_bits(m))

    def up_set(self, face_id: str, strict: bool = False) -> frozenset[str]:
        m = self._up[self.index(face_id)]
        if strict:
            m &= ~(1 << self.index(face_id))
        return frozenset(self.ids[x] for x in _iter_bits(m))

    def _ids_of(self, mask: int) -> tuple[str, ...]:
        return tuple(self.ids[x] for x in _iter_bits(mask))

    def _mask_of(self, face_ids: Iterable[str]) -> int:
        m = 0
        for i in face_ids:
            m |= 1 << self.index(i)
        return m

    def fingerprint(self) -> str:
        """Stable hash of the labelled structure; memoisation key material."""
        if self._fingerprint is None:
            payload = json.dumps(
                [self.dim, list(zip(self.ids, self.ranks)), self._cover_pairs],
                separators=(",", ":"),
            )
            self._fingerprint = hashlib.sha256(payload.encode()).hexdigest()
        return self._fingerprint

    def __repr__(self) -> str:
        return f"FaceLattice(dim={self.dim}, elements={len(self.ids)})"


class Subcomplex:
    """A downward-closed set of faces of a host lattice.

    Contains the bottom whenever nonempty, never the top.  Instances are
    produced by :func:`closure` and friends; :meth:`from_ids` validates
    closure for hand-built member sets.
    """

    def __init__(self, lattice: FaceLattice, mask: int):
        self.lattice = lattice
        self.mask = mask

    @classmethod
    def from_ids(cls, lattice: FaceLattice, ids: Iterable[str]) -> "Subcomplex":
        mask = lattice._mask_of(ids)
        if mask & (1 << lattice._top):
            raise InvalidFace("a subcomplex may not contain the artificial top")
        for x in _iter_bits(mask):
            if lattice._down[x] & ~mask:
                raise InvalidFace(
                    f"member set is not downward closed below {lattice.ids[x]!r}"
                )
        return cls(lattice, mask)

    @cached_property
    def members(self) -> frozenset[str]:
        return frozenset(self.lattice.ids[x] for x in _iter_bits(self.mask))

    @cached_property
    def dim(self) -> int:
        """Largest dimension of a member face; -1 when at most the bottom."""
        top = -1
        for x in _iter_bits(self.mask):
            top = max(top, self.lattice.ranks[x] - 1)
        return top

    def __contains__(self, face_id: str) -> bool:
        return face_id in self.lattice and bool(self.mask & (1 << self.lattice.index(face_id)))

    def __len__(self) -> int:
        return self.mask.bit_count()

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Subcomplex)
            and other.lattice is self.lattice
            and other.mask == self.mask
        )

    def __hash__(self) -> int:
        return hash((id(self.lattice), self.mask))

    def __repr__(self) -> str:
        return f"Subcomplex(dim={self.dim}, members={len(self)})"


class FaceSet:
    """An arbitrary set of proper faces of a host lattice (no extremes)."""

    def __init__(self, lattice: FaceLattice, mask: int):
        self.lattice = lattice
        self.mask = mask

    @classmethod
    def from_ids(cls, lattice: FaceLattice, ids: Iterable[str]) -> "FaceSet":
        mask = lattice._mask_of(ids)
        if mask & ~lattice._real_mask:
            raise InvalidFace("a face set may not contain the artificial extremes")
        return cls(lattice, mask)

    @cached_property
    def members(self) -> frozenset[str]:
        return frozenset(self.lattice.ids[x] for x in _iter_bits(self.mask))

    def __contains__(self, face_id: str) -> bool:
        return face_id in self.lattice and bool(self.mask & (1 << self.lattice.index(face_id)))

    def __len__(self) -> int:
        return self.mask.bit_count()

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, FaceSet)
            and other.lattice is self.lattice
            and other.mask == self.mask
        )

    def __hash__(self) -> int:
        return hash((id(self.lattice), self.mask))

    def __repr__(self) -> str:
        return f"FaceSet(members={len(self)})"


@dataclass(frozen=True)
class FVector:
    """Face counts ``(f_-1, f_0, ..., f_dim)``; index by dimension."""

    dim: int
    counts: tuple[int, ...]

    def __getitem__(self, k: int) -> int:
        if -1 <= k <= self.dim:
            return self.counts[k + 1]
        return 0

    @property
    def proper(self) -> tuple[int, ...]:
        """Counts from dimension 0 up, the usual display form."""
        return self.counts[1:]


Complex = Union[FaceLattice, Subcomplex]


# -- construction --------------------------------------------------------


def build_lattice(
    elements: Iterable[tuple[str, int]],
    covers: Iterable[tuple[str, str]],
    dim: int,
) -> FaceLattice:
    """Validated construction from explicit elements and cover pairs.

    ``elements`` are ``(id, rank)`` pairs including the extremes; ranks run
    from 0 for the empty face to ``dim + 2`` for the maximum.
    """
    return FaceLattice(elements, covers, dim)


def _face_token_id(tokens: frozenset[str], sep: str) -> str:
    return sep.join(sorted(tokens, key=lambda t: (len(t), t)))


def from_facets(facets: Iterable[Iterable[object]]) -> FaceLattice:
    """Face lattice of the simplicial complex generated by vertex sets.

    Every facet is a set of vertex tokens; all facets must have the same
    cardinality.  Face ids are the sorted tokens joined together; a ``-``
    separator is used throughout as soon as any vertex token has more
    than one character (keeping ids unambiguous), so a facet ``{1, 2, 3}``
    becomes the face ``"123"`` but ``{1, 2, 10}`` becomes ``"1-2-10"``.
    """
    facet_sets = {frozenset(str(t) for t in f) for f in facets}
    facet_sets.discard(frozenset())
    if not facet_sets:
        raise EmptyInput("no facets supplied")
    sizes = {len(f) for f in facet_sets}
    if len(sizes) != 1:
        raise MixedDimensions(f"facet sizes differ: {sorted(sizes)}")
    d = sizes.pop() - 1

    vocabulary = frozenset().union(*facet_sets)
    sep = "" if all(len(t) == 1 for t in vocabulary) else "-"
    if sep and any("-" in t for t in vocabulary):
        raise InvalidFace("multi-character vertex tokens may not contain '-'")

    faces: set[frozenset[str]] = set()
    for f in facet_sets:
        for k in range(1, len(f) + 1):
            faces.update(frozenset(c) for c in combinations(sorted(f), k))

    elements = [(BOTTOM_ID, 0), (TOP_ID, d + 2)]
    ids = {}
    for s in faces:
        i = _face_token_id(s, sep)
        if i in (BOTTOM_ID, TOP_ID):
            raise InvalidFace(f"vertex tokens collide with reserved id {i!r}")
        ids[s] = i
        elements.append((i, len(s)))

    covers = []
    for s in faces:
        if len(s) == 1:
            covers.append((BOTTOM_ID, ids[s]))
        else:
            for v in s:
                covers.append((ids[s - {v}], ids[s]))
        if len(s) == d + 1:
            covers.append((ids[s], TOP_ID))
    return FaceLattice(elements, covers, d)


def parse_facet_text(text: str) -> list[list[str]]:
    """Parse the facet-list format: one facet per line, tokens separated by
    whitespace, ``#`` starting a comment."""
    out = []
    for line in text.splitlines():
        line = line.split("#", 1)[0].strip()
        if line:
            out.append(line.split())
    return out


# -- order-theoretic predicates -----------------------------------------


def _unique_greatest(L: FaceLattice, mask: int) -> bool:
    for r in range(L.dim + 2, -1, -1):
        level = mask & L._rank_masks[r]
        if level:
            if level.bit_count() != 1:
                return False
            m = level.bit_length() - 1
            return not (mask & ~L._down[m])
    return False


def _unique_least(L: FaceLattice, mask: int) -> bool:
    for r in range(L.dim + 3):
        level = mask & L._rank_masks[r]
        if level:
            if level.bit_count() != 1:
                return False
            m = level.bit_length() - 1
            return not (mask & ~L._up[m])
    return False


def is_lattice(L: FaceLattice) -> bool:
    """True iff every pair of elements has a unique meet and a unique join."""
    n = len(L)
    for x in range(n):
        for y in range(x + 1, n):
            if not _unique_greatest(L, L._down[x] & L._down[y]):
                return False
            if not _unique_least(L, L._up[x] & L._up[y]):
                return False
    return True


def is_diamond(L: FaceLattice) -> bool:
    """True iff every rank-2 interval has exactly four elements.

    Only meaningful on lattices; callers are expected to have checked
    :func:`is_lattice` first.
    """
    for x in range(len(L)):
        r = L.ranks[x] + 2
        if r > L.dim + 2:
            continue
        for z in _iter_bits(L._up[x] & L._rank_masks[r]):
            if (L._up[x] & L._down[z]).bit_count() != 4:
                return False
    return True


def dualize(L: FaceLattice) -> FaceLattice:
    """The order-reversed lattice: same ids, complemented ranks, covers
    flipped.  Applying it twice reproduces the original."""
    top_rank = L.dim + 2
    elements = [(i, top_rank - r) for i, r in zip(L.ids, L.ranks)]
    covers = [(b, a) for a, b in L.covers()]
    return FaceLattice(elements, covers, L.dim)


# -- subcomplex machinery ------------------------------------------------


def closure(L: FaceLattice, face_ids: Union[FaceSet, Iterable[str]]) -> Subcomplex:
    """Smallest subcomplex containing the given faces: the union of their
    down-sets.  An empty input yields the void subcomplex."""
    if isinstance(face_ids, FaceSet):
        seed = face_ids.members
    else:
        seed = face_ids
    mask = 0
    for i in seed:
        x = L.index(i)
        if x == L._top:
            raise InvalidFace("the artificial top is not a face")
        mask |= L._down[x]
    return Subcomplex(L, mask)


def _full_subcomplex(L: FaceLattice) -> Subcomplex:
    return Subcomplex(L, L._real_mask | (1 << L._bottom))


def _as_subcomplex(x: Complex) -> Subcomplex:
    return _full_subcomplex(x) if isinstance(x, FaceLattice) else x


def is_pure(x: Complex) -> bool:
    """True iff every face lies below a face of the top dimension present."""
    sc = _as_subcomplex(x)
    if sc.mask == 0:
        return True
    L = sc.lattice
    top_mask = sc.mask & L._rank_masks[sc.dim + 1]
    union = 0
    for f in _iter_bits(top_mask):
        union |= L._down[f]
    return union == sc.mask


def is_pseudomanifold(x: Complex) -> bool:
    """Pure, and every codimension-1 face lies in at most two top faces.

    For a 0-dimensional complex the codimension-1 face is the empty face,
    so at most two vertices are allowed; the degenerate complexes with at
    most one face qualify vacuously.
    """
    if not is_pure(x):
        return False
    sc = _as_subcomplex(x)
    if sc.dim <= -1:
        return True
    L = sc.lattice
    top_rank = sc.dim + 1
    for ridge in _iter_bits(sc.mask & L._rank_masks[top_rank - 1]):
        cofaces = L._up[ridge] & sc.mask & L._rank_masks[top_rank]
        if cofaces.bit_count() > 2:
            return False
    return True


def boundary_complex(x: Complex) -> Subcomplex:
    """Closure of the codimension-1 faces lying in exactly one top face.

    Empty for a complex without boundary (a sphere); raises
    :class:`NotPseudomanifold` when the input is not a pseudomanifold.
    """
    if not is_pseudomanifold(x):
        raise NotPseudomanifold("boundary is only defined for pseudomanifolds")
    sc = _as_subcomplex(x)
    L = sc.lattice
    if sc.dim <= -1:
        return Subcomplex(L, 0)
    top_rank = sc.dim + 1
    mask = 0
    for ridge in _iter_bits(sc.mask & L._rank_masks[top_rank - 1]):
        cofaces = L._up[ridge] & sc.mask & L._rank_masks[top_rank]
        if cofaces.bit_count() == 1:
            mask |= L._down[ridge]
    return Subcomplex(L, mask)


def interior(x: Complex) -> FaceSet:
    """Faces not contained in the boundary.

    The empty face is left out of the returned set as bookkeeping: every
    consumer of interiors counts faces of dimension >= 0.
    """
    sc = _as_subcomplex(x)
    bd = boundary_complex(x)
    return FaceSet(sc.lattice, (sc.mask & ~bd.mask) & sc.lattice._real_mask)


def f_vector(x: Union[Complex, FaceSet]) -> FVector:
    """Face counts by dimension.

    For a lattice, counts every face plus the empty face; for a subcomplex
    or face set, counts exactly the members.  No closure is taken.
    """
    if isinstance(x, FaceLattice):
        counts = [1] + [len(x.faces(k)) for k in range(x.dim + 1)]
        return FVector(x.dim, tuple(counts))
    L = x.lattice
    if x.mask == 0:
        return FVector(-1, (0,))
    top = -1
    per_rank = {}
    for e in _iter_bits(x.mask):
        r = L.ranks[e]
        per_rank[r] = per_rank.get(r, 0) + 1
        top = max(top, r - 1)
    return FVector(top, tuple(per_rank.get(r, 0) for r in range(top + 2)))


def sub_lattice(L: FaceLattice, face_id: str) -> FaceLattice:
    """Face lattice of the boundary of the closed cell ``face_id``.

    The faces are exactly those strictly below the given face, which itself
    becomes the artificial maximum; for a vertex this is the empty complex
    of dimension -1.  Results are cached per host lattice.
    """
    cached = L._sub_cache.get(face_id)
    if cached is not None:
        return cached
    x = L.index(face_id)
    if x in (L._bottom, L._top):
        raise InvalidFace("the artificial extremes bound no cell")
    r = L.rank_of(face_id)
    members = L._down[x]
    elements = [(L.ids[e], L.ranks[e]) for e in _iter_bits(members & ~(1 << x))]
    elements.append((face_id, r))
    covers = [
        (a, b)
        for a, b in L.covers()
        if (members >> L.index(b)) & 1 and (members >> L.index(a)) & 1
    ]
    sub = FaceLattice(elements, covers, r - 2)
    L._sub_cache[face_id] = sub
    return sub


def upper_interval_count(L: FaceLattice, face_id: str, s: int) -> tuple[int, bool]:
    """Number of rank-``s`` elements above ``face_id``, with a flag
    asserting it meets the binomial floor for diamond lattices.

    For a diamond lattice of total rank D and a face of rank r, the count
    at rank ``s`` (with r <= s <= D - 1) is at least ``C(D - r, D - s)``.
    """
    x = L.index(face_id)
    r = L.ranks[x]
    top_rank = L.dim + 2
    if not r <= s <= top_rank - 1:
        raise RankOutOfRange(f"need rank {r} <= s <= {top_rank - 1}, got {s}")
    count = (L._up[x] & L._rank_masks[s]).bit_count()
    return count, count >= comb(top_rank - r, top_rank - s)


def atom_avoiding_coatom(
    L: FaceLattice, coatom_id: str, base_id: str | None = None
) -> str:
    """Least atom of ``[base, top]`` that is not below the given coatom.

    With no base this is the least vertex outside the closed facet
    ``coatom_id``.  In a diamond lattice of rank at least 2 such an atom
    always exists; :class:`NoSuchAtom` therefore flags a non-diamond input.
    """
    c = L.index(coatom_id)
    base = L._bottom if base_id is None else L.index(base_id)
    atoms = L._rank_masks[L.ranks[base] + 1] & L._up[base] & ~(1 << L._top)
    avoiding = atoms & ~L._down[c]
    best = None
    for x in _iter_bits(avoiding):
        if best is None or L.ids[x] < best:
            best = L.ids[x]
    if best is None:
        raise NoSuchAtom(
            f"every atom above {L.ids[base]!r} lies below {coatom_id!r}"
        )
    return best


# -- serialisation -------------------------------------------------------


def lattice_to_json_dict(L: FaceLattice) -> dict:
    """Plain-dict form of the lattice: faces and covers between them only.

    The artificial extremes and their covers are implicit and re-added on
    load.  Key order and list order are deterministic.
    """
    reserved = {L.bottom, L.top}
    faces = [
        {"id": i, "dim": r - 1}
        for i, r in zip(L.ids, L.ranks)
        if i not in reserved
    ]
    covers = [
        [a, b] for a, b in L.covers() if a not in reserved and b not in reserved
    ]
    return {"dim": L.dim, "faces": faces, "covers": covers}


def lattice_from_json_dict(data: dict) -> FaceLattice:
    """Inverse of :func:`lattice_to_json_dict`.

    Adds the bottom below every 0-dimensional face and the top above every
    face of the declared dimension, then runs full validation.
    """
    try:
        dim = int(data["dim"])
        faces = [(str(f["id"]), int(f["dim"])) for f in data["faces"]]
        covers = [(str(a), str(b)) for a, b in data["covers"]]
    except (KeyError, TypeError, ValueError) as exc:
        raise InvalidFace(f"malformed lattice data: {exc}") from None
    for i, _ in faces:
        if i in (BOTTOM_ID, TOP_ID):
            raise InvalidFace(f"face id {i!r} is reserved")
    elements = [(BOTTOM_ID, 0), (TOP_ID, dim + 2)]
    elements += [(i, k + 1) for i, k in faces]
    for i, k in faces:
        if k == 0:
            covers.append((BOTTOM_ID, i))
        if k == dim:
            covers.append((i, TOP_ID))
    return FaceLattice(elements, covers, dim)
