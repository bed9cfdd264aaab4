"""Bipartitioned ground sets and facet-represented simplicial complexes.

Vertices are numbered ``0..m-1`` for the x-side ``V`` and ``m..m+n-1`` for the
y-side ``W``.  Faces are stored as integer bitmasks over that numbering; the
helpers :func:`face` and :func:`members` convert between masks and index sets.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator, Sequence, Union

MINUS_INFINITY = -math.inf

FaceLike = Union[int, Iterable[int]]


class ComplexError(ValueError):
    """Invalid complex data or an operation undefined on the given complex."""


class VoidComplexError(ComplexError):
    """Raised by operations that have no meaning on the void complex."""


# ---------------------------------------------------------------------------
# face bitmask helpers


def face(*indices: int) -> int:
    mask = 0
    for i in indices:
        if i < 0:
            raise ComplexError(f"negative vertex index {i}")
        mask |= 1 << i
    return mask


def members(mask: int) -> tuple[int, ...]:
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return tuple(out)


def cardinality(mask: int) -> int:
    return bin(mask).count("1")


def face_key(mask: int) -> tuple[int, tuple[int, ...]]:
    """Sort key: increasing cardinality, then lexicographic on members."""
    return (cardinality(mask), members(mask))


def submasks(mask: int) -> Iterator[int]:
    """All subsets of ``mask`` (including 0 and ``mask`` itself)."""
    sub = mask
    while True:
        yield sub
        if sub == 0:
            return
        sub = (sub - 1) & mask


def sorted_submasks(mask: int) -> list[int]:
    return sorted(submasks(mask), key=face_key)


def maximal(masks: Iterable[int]) -> list[int]:
    """Drop duplicates and every mask strictly contained in another."""
    uniq = sorted(set(masks), key=cardinality, reverse=True)
    kept: list[int] = []
    for s in uniq:
        if not any(s & ~t == 0 for t in kept):
            kept.append(s)
    return sorted(kept, key=face_key)


# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class BiGround:
    """The vertex set ``V ⊔ W`` with ``|V| = m`` x-vertices and ``|W| = n``."""

    m: int
    n: int
    v_names: tuple[str, ...] = ()
    w_names: tuple[str, ...] = ()

    def __post_init__(self):
        if self.m < 0 or self.n < 0 or self.m + self.n < 1:
            raise ComplexError(f"need m, n >= 0 and m + n >= 1, got m={self.m}, n={self.n}")
        if not self.v_names:
            object.__setattr__(self, "v_names", tuple(f"v{i + 1}" for i in range(self.m)))
        if not self.w_names:
            object.__setattr__(self, "w_names", tuple(f"w{j + 1}" for j in range(self.n)))
        object.__setattr__(self, "v_names", tuple(self.v_names))
        object.__setattr__(self, "w_names", tuple(self.w_names))
        if len(self.v_names) != self.m or len(self.w_names) != self.n:
            raise ComplexError("vertex name lists must have lengths m and n")
        names = self.v_names + self.w_names
        if len(set(names)) != len(names):
            raise ComplexError("vertex names must be distinct")

    @property
    def size(self) -> int:
        return self.m + self.n

    @property
    def full(self) -> int:
        return (1 << self.size) - 1

    @property
    def V(self) -> int:
        return (1 << self.m) - 1

    @property
    def W(self) -> int:
        return ((1 << self.n) - 1) << self.m

    @property
    def names(self) -> tuple[str, ...]:
        return self.v_names + self.w_names

    def name(self, i: int) -> str:
        return self.names[i]

    def index(self, name: str) -> int:
        try:
            return self.names.index(name)
        except ValueError:
            raise ComplexError(f"unknown vertex name {name!r}") from None

    def x_vertex(self, i: int) -> int:
        return i

    def y_vertex(self, j: int) -> int:
        return self.m + j

    def check(self, mask: int) -> int:
        if mask < 0 or mask & ~self.full:
            raise ComplexError(f"face {members(mask)} not inside ground set of size {self.size}")
        return mask

    def as_face(self, f: FaceLike) -> int:
        mask = f if isinstance(f, int) else face(*f)
        return self.check(mask)

    def face_names(self, mask: int) -> list[str]:
        return [self.names[i] for i in members(mask)]

    def transpose(self) -> BiGround:
        return BiGround(self.n, self.m, self.w_names, self.v_names)

    def transpose_face(self, mask: int) -> int:
        """Image of a face under the swap ``V <-> W`` (onto ``self.transpose()``)."""
        x_part = mask & self.V
        y_part = (mask & self.W) >> self.m
        return y_part | (x_part << self.n)


class SimplicialComplex:
    """An immutable simplicial complex given by its facets.

    ``void=True`` is the complex with no faces at all; it is distinct from the
    complex ``{∅}`` whose single facet is the empty face.
    """

    __slots__ = ("ground", "facets", "void", "_hash")

    def __init__(self, ground: BiGround, facets: Iterable[FaceLike] = (), void: bool = False):
        masks = [ground.as_face(f) for f in facets]
        if void and masks:
            raise ComplexError("the void complex has no facets")
        if not void and not masks:
            raise ComplexError("facet list is empty; pass void=True for the void complex")
        object.__setattr__(self, "ground", ground)
        object.__setattr__(self, "facets", tuple(maximal(masks)))
        object.__setattr__(self, "void", void)
        object.__setattr__(self, "_hash", hash((ground, self.facets, void)))

    def __setattr__(self, key, value):
        raise AttributeError("SimplicialComplex is immutable")

    @classmethod
    def void_on(cls, ground: BiGround) -> SimplicialComplex:
        return cls(ground, (), void=True)

    @classmethod
    def empty_on(cls, ground: BiGround) -> SimplicialComplex:
        return cls(ground, [0])

    @classmethod
    def simplex(cls, ground: BiGround, f: FaceLike | None = None) -> SimplicialComplex:
        return cls(ground, [ground.full if f is None else f])

    def __eq__(self, other):
        if not isinstance(other, SimplicialComplex):
            return NotImplemented
        return (self.ground, self.facets, self.void) == (other.ground, other.facets, other.void)

    def __hash__(self):
        return self._hash

    def __repr__(self):
        if self.void:
            return f"SimplicialComplex(m={self.ground.m}, n={self.ground.n}, void)"
        fs = ", ".join("{" + ",".join(self.ground.face_names(f)) + "}" for f in self.facets)
        return f"SimplicialComplex(m={self.ground.m}, n={self.ground.n}, facets=[{fs}])"

    # -- membership and enumeration ---------------------------------------

    def __contains__(self, f: FaceLike) -> bool:
        mask = self.ground.as_face(f)
        return any(mask & ~F == 0 for F in self.facets)

    def vertices(self) -> int:
        out = 0
        for F in self.facets:
            out |= F
        return out

    def all_faces(self) -> list[int]:
        seen: set[int] = set()
        for F in self.facets:
            seen.update(submasks(F))
        return sorted(seen, key=face_key)

    def faces(self, k: int) -> list[int]:
        """All ``k``-dimensional faces, sorted lexicographically by members."""
        size = k + 1
        if self.void or size < 0:
            return []
        if size == 0:
            return [0]
        seen: set[int] = set()
        for F in self.facets:
            elts = members(F)
            if len(elts) >= size:
                seen.update(face(*c) for c in combinations(elts, size))
        return sorted(seen, key=members)

    def f_vector(self) -> dict[int, int]:
        """Map ``k -> number of k-faces`` for ``k >= -1``."""
        if self.void:
            return {}
        counts: dict[int, int] = {}
        for f in self.all_faces():
            k = cardinality(f) - 1
            counts[k] = counts.get(k, 0) + 1
        return counts

    # -- constructions -----------------------------------------------------

    def restrict(self, S: FaceLike) -> SimplicialComplex:
        S = self.ground.as_face(S)
        if self.void:
            return self
        return SimplicialComplex(self.ground, [F & S for F in self.facets])

    def restrict_W(self) -> SimplicialComplex:
        return self.restrict(self.ground.W)

    def restrict_V(self) -> SimplicialComplex:
        return self.restrict(self.ground.V)

    def star(self, f: FaceLike) -> SimplicialComplex:
        mask = self.ground.as_face(f)
        over = [F for F in self.facets if mask & ~F == 0]
        if not over:
            return SimplicialComplex.void_on(self.ground)
        return SimplicialComplex(self.ground, over)

    def link(self, f: FaceLike) -> SimplicialComplex:
        mask = self.ground.as_face(f)
        over = [F & ~mask for F in self.facets if mask & ~F == 0]
        if not over:
            return SimplicialComplex.void_on(self.ground)
        return SimplicialComplex(self.ground, over)

    def transpose(self) -> SimplicialComplex:
        """The same complex with the roles of ``V`` and ``W`` exchanged."""
        g = self.ground
        gt = g.transpose()
        if self.void:
            return SimplicialComplex.void_on(gt)
        return SimplicialComplex(gt, [g.transpose_face(F) for F in self.facets])

    def delete_vertex(self, i: int) -> SimplicialComplex:
        """Remove vertex ``i`` from the ground set (and from every face)."""
        g = self.ground
        if not 0 <= i < g.size:
            raise ComplexError(f"vertex {i} out of range")
        if i < g.m:
            ng = BiGround(g.m - 1, g.n, g.v_names[:i] + g.v_names[i + 1:], g.w_names)
        else:
            j = i - g.m
            ng = BiGround(g.m, g.n - 1, g.v_names, g.w_names[:j] + g.w_names[j + 1:])
        low = (1 << i) - 1

        def squeeze(F: int) -> int:
            return (F & low) | ((F >> (i + 1)) << i)

        if self.void:
            return SimplicialComplex.void_on(ng)
        return SimplicialComplex(ng, [squeeze(F) for F in self.facets])

    # -- numerical invariants ----------------------------------------------

    def dim(self) -> float | int:
        if self.void:
            return MINUS_INFINITY
        return max(cardinality(F) for F in self.facets) - 1

    def is_pure(self) -> bool:
        return len({cardinality(F) for F in self.facets}) <= 1

    def is_connected(self) -> bool:
        if self.void:
            raise VoidComplexError("connectedness is undefined for the void complex")
        facets = list(self.facets)
        reached = {0}
        frontier = [0]
        while frontier:
            k = frontier.pop()
            for j, G in enumerate(facets):
                if j not in reached and facets[k] & G:
                    reached.add(j)
                    frontier.append(j)
        return len(reached) == len(facets)


def require_nonvoid(delta: SimplicialComplex) -> None:
    if delta.void:
        raise VoidComplexError("operation undefined on the void complex (zero ring)")


def disjoint_union(a: SimplicialComplex, b: SimplicialComplex) -> SimplicialComplex:
    """Place ``a`` and ``b`` side by side on concatenated ground sets.

    The result has ``m = a.m + b.m`` and ``n = a.n + b.n``; ``a``'s vertices come
    first within each side.  Names are regenerated.
    """
    ga, gb = a.ground, b.ground
    g = BiGround(ga.m + gb.m, ga.n + gb.n)

    def lift(F: int, src: BiGround, v_off: int, w_off: int) -> int:
        out = 0
        for i in members(F):
            out |= 1 << (v_off + i if i < src.m else g.m + w_off + (i - src.m))
        return out

    fa = [lift(F, ga, 0, 0) for F in a.facets]
    fb = [lift(F, gb, ga.m, ga.n) for F in b.facets]
    # the union of two complexes: faces of either; {∅} parts contribute nothing new
    return SimplicialComplex(g, fa + fb)


def cone(delta: SimplicialComplex, side: str = "w") -> SimplicialComplex:
    """Cone over ``delta`` with a new apex appended to ``V`` or ``W``."""
    require_nonvoid(delta)
    g = delta.ground
    if side == "w":
        ng = BiGround(g.m, g.n + 1, g.v_names, g.w_names + (f"w{g.n + 1}*",))
        apex = 1 << (g.m + g.n)
        return SimplicialComplex(ng, [F | apex for F in delta.facets])
    if side == "v":
        ng = BiGround(g.m + 1, g.n, g.v_names + (f"v{g.m + 1}*",), g.w_names)

        def shift(F: int) -> int:
            return (F & g.V) | ((F & g.W) << 1)

        apex = 1 << g.m
        return SimplicialComplex(ng, [shift(F) | apex for F in delta.facets])
    raise ValueError("side must be 'v' or 'w'")


def subsets_of(mask: int, sizes: Sequence[int] | None = None) -> list[int]:
    """Subsets of ``mask`` in (cardinality, lexicographic) order."""
    subs = sorted_submasks(mask)
    if sizes is None:
        return subs
    return [s for s in subs if cardinality(s) in sizes]
