"""Finite posets with bitset order-ideal machinery.

Elements are dense integer indices 0..n-1; order ideals and antichains are
bitmasks over those indices.  Grid coordinates, when present, are metadata
(matrix convention: box (i, j) with i the row counted from the top), never
element identity.
"""

from __future__ import annotations

import heapq
from typing import Iterable, Iterator, Optional, Sequence

DEFAULT_IDEAL_CAP = 2_000_000


class MalformedPosetError(ValueError):
    """Cover data does not describe a finite poset (cycle, bad index, ...)."""


class CapExceededError(RuntimeError):
    """An enumeration would exceed the configured resource cap."""


class Poset:
    """Immutable finite poset given by its cover relations.

    Parameters
    ----------
    n : number of elements; elements are 0..n-1.
    covers : iterable of (lower, upper) index pairs, one per cover relation.
    coords : optional per-element grid coordinate (i, j).  When given, covers
        must be exactly the pairs of coordinate-adjacent boxes, so that
        (i, j) <= (i', j') iff i <= i' and j <= j'.
    name : optional display name.
    colors : optional per-element hashable color labels (refinement metadata).
    """

    def __init__(self, n, covers, coords=None, name=None, colors=None):
        self.n = int(n)
        if self.n < 0:
            raise MalformedPosetError("element count must be nonnegative")
        seen = set()
        cov = []
        for lo, hi in covers:
            lo, hi = int(lo), int(hi)
            if not (0 <= lo < self.n and 0 <= hi < self.n):
                raise MalformedPosetError(f"cover ({lo},{hi}) out of range")
            if lo == hi:
                raise MalformedPosetError(f"self-cover at {lo}")
            if (lo, hi) not in seen:
                seen.add((lo, hi))
                cov.append((lo, hi))
        cov.sort()
        self.covers = tuple(cov)
        self.coords = None if coords is None else tuple((int(i), int(j)) for i, j in coords)
        if self.coords is not None and len(self.coords) != self.n:
            raise MalformedPosetError("coords length must equal n")
        self.name = name
        self.colors = None if colors is None else tuple(colors)
        if self.colors is not None and len(self.colors) != self.n:
            raise MalformedPosetError("colors length must equal n")

        up = [0] * self.n   # up_covers[x]: mask of elements covering x
        down = [0] * self.n  # down_covers[y]: mask of elements covered by y
        for lo, hi in self.covers:
            up[lo] |= 1 << hi
            down[hi] |= 1 << lo
        self.up_covers = tuple(up)
        self.down_covers = tuple(down)

        self._linext = self._lex_min_extension()  # also proves acyclicity

        dset = [0] * self.n  # down_set[x]: mask of all y <= x
        for x in self._linext:
            m = 1 << x
            dm = down[x]
            while dm:
                low = dm & -dm
                m |= dset[low.bit_length() - 1]
                dm ^= low
            dset[x] = m
        uset = [0] * self.n
        for x in reversed(self._linext):
            m = 1 << x
            um = up[x]
            while um:
                low = um & -um
                m |= uset[low.bit_length() - 1]
                um ^= low
            uset[x] = m
        self.down_set = tuple(dset)
        self.up_set = tuple(uset)

        self.minimal_mask = 0
        self.maximal_mask = 0
        for x in range(self.n):
            if down[x] == 0:
                self.minimal_mask |= 1 << x
            if up[x] == 0:
                self.maximal_mask |= 1 << x

        if self.coords is not None:
            self._check_grid_consistency()

        self.rank = self._compute_rank()
        self._coord_index = (
            None if self.coords is None else {c: i for i, c in enumerate(self.coords)}
        )
        self._ideal_masks: Optional[tuple] = None
        self._ideal_index: Optional[dict] = None

    # -- construction helpers -------------------------------------------------

    def _lex_min_extension(self):
        indeg = [bin(m).count("1") for m in self.down_covers]
        heap = [x for x in range(self.n) if indeg[x] == 0]
        heapq.heapify(heap)
        order = []
        while heap:
            x = heapq.heappop(heap)
            order.append(x)
            um = self.up_covers[x]
            while um:
                low = um & -um
                y = low.bit_length() - 1
                indeg[y] -= 1
                if indeg[y] == 0:
                    heapq.heappush(heap, y)
                um ^= low
        if len(order) != self.n:
            raise MalformedPosetError("cover relation contains a cycle")
        return tuple(order)

    def _check_grid_consistency(self):
        boxes = set(self.coords)
        if len(boxes) != self.n:
            raise MalformedPosetError("duplicate grid coordinates")
        adjacent = set()
        for x, (i, j) in enumerate(self.coords):
            for nb in ((i + 1, j), (i, j + 1)):
                if nb in boxes:
                    adjacent.add((x, self._index_of_coord(nb, boxes)))
        stored = set(self.covers)
        if stored != adjacent:
            raise MalformedPosetError("covers do not match grid adjacency")

    def _index_of_coord(self, c, _boxes=None):
        for x, cc in enumerate(self.coords):
            if cc == c:
                return x
        raise KeyError(c)

    def _compute_rank(self):
        """Rank function with min rank 0 per connected component, or None."""
        if self.n == 0:
            return ()
        rank = [None] * self.n
        for start in range(self.n):
            if rank[start] is not None:
                continue
            rank[start] = 0
            comp = [start]
            stack = [start]
            while stack:
                x = stack.pop()
                for m, delta in ((self.up_covers[x], 1), (self.down_covers[x], -1)):
                    while m:
                        low = m & -m
                        y = low.bit_length() - 1
                        ry = rank[x] + delta
                        if rank[y] is None:
                            rank[y] = ry
                            comp.append(y)
                            stack.append(y)
                        elif rank[y] != ry:
                            return None
                        m ^= low
            shift = min(rank[x] for x in comp)
            for x in comp:
                rank[x] -= shift
        return tuple(rank)

    # -- basic queries ---------------------------------------------------------

    def leq(self, x, y):
        """True iff x <= y in the partial order."""
        if not (0 <= x < self.n and 0 <= y < self.n):
            raise IndexError(f"element out of range: {x}, {y}")
        return bool(self.up_set[x] >> y & 1)

    def element_at(self, coord):
        """Index of the element with grid coordinate (i, j)."""
        if self._coord_index is None:
            raise ValueError("poset has no grid coordinates")
        return self._coord_index[tuple(coord)]

    def has_coord(self, coord):
        return self._coord_index is not None and tuple(coord) in self._coord_index

    def max_rank(self):
        if self.rank is None:
            raise ValueError("poset is not ranked")
        return max(self.rank, default=0)

    def rank_mask(self, i):
        """Mask of all elements of rank i (poset must be ranked)."""
        if self.rank is None:
            raise ValueError("poset is not ranked")
        m = 0
        for x, r in enumerate(self.rank):
            if r == i:
                m |= 1 << x
        return m

    # -- mask-level order ideal machinery ---------------------------------------

    def is_ideal_mask(self, mask):
        for x in _bits(mask):
            if self.down_covers[x] & mask != self.down_covers[x]:
                return False
        return True

    def is_antichain_mask(self, mask):
        for x in _bits(mask):
            if (self.up_set[x] ^ (1 << x)) & mask:
                return False
        return True

    def max_of_ideal_mask(self, mask):
        """Mask of maximal elements of the ideal `mask`."""
        m = 0
        for x in _bits(mask):
            if self.up_covers[x] & mask == 0:
                m |= 1 << x
        return m

    def min_complement_mask(self, mask):
        """Mask of minimal elements of the complement of the ideal `mask`."""
        m = 0
        comp = ~mask
        for x in range(self.n):
            if comp >> x & 1 and self.down_covers[x] & mask == self.down_covers[x]:
                m |= 1 << x
        return m

    def generated_ideal_mask(self, antichain_mask):
        m = 0
        for x in _bits(antichain_mask):
            m |= self.down_set[x]
        return m

    def rowmotion_mask(self, mask):
        return self.generated_ideal_mask(self.min_complement_mask(mask))

    def toggle_mask(self, p, mask):
        if mask >> p & 1:
            if self.up_covers[p] & mask == 0:
                return mask ^ (1 << p)
            return mask
        if self.down_covers[p] & mask == self.down_covers[p]:
            return mask | (1 << p)
        return mask

    def ideal_masks(self, cap=DEFAULT_IDEAL_CAP):
        """All order-ideal masks, sorted by (cardinality, mask value).

        The result is cached; the canonical position of each ideal in this
        tuple indexes every statistic vector built on this poset.
        """
        if self._ideal_masks is None:
            frontier = [0]
            seen = {0}
            while frontier:
                nxt = []
                for mask in frontier:
                    add = self.min_complement_mask(mask)
                    for x in _bits(add):
                        new = mask | (1 << x)
                        if new not in seen:
                            if len(seen) >= cap:
                                raise CapExceededError(
                                    f"more than {cap} order ideals")
                            seen.add(new)
                            nxt.append(new)
                frontier = nxt
            self._ideal_masks = tuple(
                sorted(seen, key=lambda m: (_popcount(m), m)))
            self._ideal_index = {m: i for i, m in enumerate(self._ideal_masks)}
        return self._ideal_masks

    def ideal_index(self, mask):
        self.ideal_masks()
        return self._ideal_index[mask]

    # -- serialization -----------------------------------------------------------

    def to_dict(self):
        return {
            "n": self.n,
            "covers": [list(c) for c in self.covers],
            "coords": None if self.coords is None else [list(c) for c in self.coords],
            "name": self.name,
        }

    @classmethod
    def from_dict(cls, d):
        return cls(d["n"], d["covers"], coords=d.get("coords"), name=d.get("name"))

    def __repr__(self):
        label = self.name or f"poset<{self.n}>"
        return f"Poset({label}, n={self.n}, covers={len(self.covers)})"


def _bits(mask) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _popcount(mask) -> int:
    return bin(mask).count("1")


# -- element-set wrappers ---------------------------------------------------


class _ElementSet:
    __slots__ = ("poset", "mask")

    def __init__(self, poset, elements=(), *, mask=None):
        self.poset = poset
        if mask is None:
            mask = 0
            for x in elements:
                if not (0 <= x < poset.n):
                    raise IndexError(f"element {x} out of range")
                mask |= 1 << int(x)
        self.mask = mask
        self._validate()

    def _validate(self):
        raise NotImplementedError

    @classmethod
    def _make(cls, poset, mask):
        obj = cls.__new__(cls)
        obj.poset = poset
        obj.mask = mask
        return obj

    @property
    def members(self):
        return tuple(_bits(self.mask))

    @property
    def cardinality(self):
        return _popcount(self.mask)

    def __contains__(self, x):
        return bool(self.mask >> x & 1)

    def __iter__(self):
        return _bits(self.mask)

    def __len__(self):
        return self.cardinality

    def __eq__(self, other):
        return (
            type(other) is type(self)
            and other.poset is self.poset
            and other.mask == self.mask
        )

    def __hash__(self):
        return hash((id(self.poset), self.mask))

    def __repr__(self):
        return f"{type(self).__name__}{self.members}"


class OrderIdeal(_ElementSet):
    """Downward-closed element set of a fixed poset."""

    def _validate(self):
        if not self.poset.is_ideal_mask(self.mask):
            raise ValueError("element set is not downward-closed")


class Antichain(_ElementSet):
    """Pairwise-incomparable element set of a fixed poset."""

    def _validate(self):
        if not self.poset.is_antichain_mask(self.mask):
            raise ValueError("element set contains comparable elements")


class LinearExtension:
    """A listing of all elements respecting the partial order."""

    __slots__ = ("poset", "order")

    def __init__(self, poset, order):
        order = tuple(int(x) for x in order)
        if sorted(order) != list(range(poset.n)):
            raise ValueError("not a permutation of the elements")
        pos = [0] * poset.n
        for k, x in enumerate(order):
            pos[x] = k
        for lo, hi in poset.covers:
            if pos[lo] > pos[hi]:
                raise ValueError("listing violates the partial order")
        self.poset = poset
        self.order = order

    def __iter__(self):
        return iter(self.order)

    def __repr__(self):
        return f"LinearExtension{self.order}"


# -- spec-level operations ----------------------------------------------------


def leq(P: Poset, x: int, y: int) -> bool:
    """True iff x <= y in the transitive closure of the covers."""
    return P.leq(x, y)


def linear_extension(P: Poset) -> LinearExtension:
    """The lexicographically least linear extension (by element index)."""
    return LinearExtension(P, P._linext)


def minimal_complement(I: OrderIdeal) -> Antichain:
    """min(P \\ I): minimal elements of the complement of I."""
    return Antichain._make(I.poset, I.poset.min_complement_mask(I.mask))


def maximal_elements(I: OrderIdeal) -> Antichain:
    """max(I): maximal elements of I; the canonical bijection to antichains."""
    return Antichain._make(I.poset, I.poset.max_of_ideal_mask(I.mask))


def ideal_generated_by(A: Antichain) -> OrderIdeal:
    """Downward closure of A; inverse of maximal_elements."""
    return OrderIdeal._make(A.poset, A.poset.generated_ideal_mask(A.mask))


def enumerate_ideals(P: Poset, cap: int = DEFAULT_IDEAL_CAP):
    """All order ideals of P in the canonical (cardinality, bitmask) order."""
    return tuple(OrderIdeal._make(P, m) for m in P.ideal_masks(cap=cap))


def enumerate_antichains(P: Poset, cap: int = DEFAULT_IDEAL_CAP):
    """All antichains, as max(I) over the canonical ideal enumeration."""
    return tuple(
        Antichain._make(P, P.max_of_ideal_mask(m)) for m in P.ideal_masks(cap=cap)
    )


def dual(P: Poset) -> Poset:
    """The dual poset: covers reversed, grid coordinates rotated 180 degrees."""
    covers = [(hi, lo) for lo, hi in P.covers]
    coords = None
    if P.coords is not None and P.n > 0:
        ci = max(i for i, _ in P.coords) + min(i for i, _ in P.coords)
        cj = max(j for _, j in P.coords) + min(j for _, j in P.coords)
        coords = [(ci - i, cj - j) for i, j in P.coords]
    name = f"dual({P.name})" if P.name else None
    return Poset(P.n, covers, coords=coords, name=name)


def is_graded(P: Poset) -> bool:
    """True iff all maximal chains have the same length."""
    if P.n == 0:
        return True
    depth = _longest_down_chain(P)
    for lo, hi in P.covers:
        if depth[hi] != depth[lo] + 1:
            return False
    tops = {depth[x] for x in _bits(P.maximal_mask)}
    return len(tops) == 1


def rank_of(P: Poset) -> int:
    """Common maximal-chain length of a graded poset."""
    if not is_graded(P):
        raise ValueError("poset is not graded")
    if P.n == 0:
        return 0
    depth = _longest_down_chain(P)
    return max(depth)


def _longest_down_chain(P: Poset):
    depth = [0] * P.n
    for x in P._linext:
        for y in _bits(P.down_covers[x]):
            depth[x] = max(depth[x], depth[y] + 1)
    return depth


def connected_components(P: Poset):
    comp = [-1] * P.n
    c = 0
    for start in range(P.n):
        if comp[start] >= 0:
            continue
        stack = [start]
        comp[start] = c
        while stack:
            x = stack.pop()
            for y in _bits(P.up_covers[x] | P.down_covers[x]):
                if comp[y] < 0:
                    comp[y] = c
                    stack.append(y)
        c += 1
    return comp, c


def poset_isomorphic(P: Poset, Q: Poset) -> bool:
    """Exact isomorphism test by backtracking on cover digraphs."""
    if P.n != Q.n or len(P.covers) != len(Q.covers):
        return False

    def profile(R, x):
        return (
            _popcount(R.down_covers[x]),
            _popcount(R.up_covers[x]),
            _popcount(R.down_set[x]),
            _popcount(R.up_set[x]),
        )

    pprof = [profile(P, x) for x in range(P.n)]
    qprof = [profile(Q, x) for x in range(Q.n)]
    if sorted(pprof) != sorted(qprof):
        return False

    order = sorted(range(P.n), key=lambda x: (pprof[x], x))
    image = [-1] * P.n
    used = [False] * Q.n

    def extend(k):
        if k == P.n:
            return True
        x = order[k]
        for y in range(Q.n):
            if used[y] or qprof[y] != pprof[x]:
                continue
            ok = True
            for z in order[:k]:
                zx = image[z]
                if P.leq(x, z) != Q.leq(y, zx) or P.leq(z, x) != Q.leq(zx, y):
                    ok = False
                    break
                if (bool(P.up_covers[x] >> z & 1) != bool(Q.up_covers[y] >> zx & 1)
                        or bool(P.down_covers[x] >> z & 1) != bool(Q.down_covers[y] >> zx & 1)):
                    ok = False
                    break
            if ok:
                image[x] = y
                used[y] = True
                if extend(k + 1):
                    return True
                image[x] = -1
                used[y] = False
        return False

    return extend(0)
