"""Toggles, rowmotion and its rank-permuted variants, and orbit computation."""

from __future__ import annotations

from .poset import (
    Antichain,
    CapExceededError,
    LinearExtension,
    OrderIdeal,
    Poset,
    _bits,
)


class Orbit:
    """A cycle of a bijection: states in order, first state repeated nowhere."""

    __slots__ = ("states",)

    def __init__(self, states):
        self.states = tuple(states)
        if len(set(self.states)) != len(self.states):
            raise ValueError("orbit states must be distinct")

    @property
    def period(self):
        return len(self.states)

    def __iter__(self):
        return iter(self.states)

    def __len__(self):
        return len(self.states)

    def __repr__(self):
        return f"Orbit(period={self.period})"


# -- toggles and rowmotion -------------------------------------------------------


def toggle(P: Poset, p: int, I: OrderIdeal) -> OrderIdeal:
    """Add p if addable, remove p if removable, otherwise leave I alone."""
    if not (0 <= p < P.n):
        raise IndexError(f"element {p} out of range")
    return OrderIdeal._make(P, P.toggle_mask(p, I.mask))


def rowmotion(P: Poset, I: OrderIdeal) -> OrderIdeal:
    """The ideal generated by the minimal elements of the complement of I."""
    return OrderIdeal._make(P, P.rowmotion_mask(I.mask))


def rowmotion_by_toggles(P: Poset, ext: LinearExtension, I: OrderIdeal) -> OrderIdeal:
    """Toggle along a linear extension, top element first."""
    if ext.poset is not P:
        raise ValueError("extension belongs to a different poset")
    mask = I.mask
    for p in reversed(ext.order):
        mask = P.toggle_mask(p, mask)
    return OrderIdeal._make(P, mask)


def rank_toggle(P: Poset, i: int):
    """The product of toggles at all elements of rank i (they commute)."""
    elems = tuple(_bits(P.rank_mask(i)))

    def step(I: OrderIdeal) -> OrderIdeal:
        mask = I.mask
        for p in elems:
            mask = P.toggle_mask(p, mask)
        return OrderIdeal._make(P, mask)

    return step


def _check_rank_permutation(P: Poset, sigma):
    if P.rank is None:
        raise ValueError("poset is not ranked")
    top = P.max_rank()
    sigma = tuple(int(s) for s in sigma)
    if sorted(sigma) != list(range(top + 1)):
        raise ValueError(f"sigma must permute 0..{top}")
    return sigma


def rowmotion_sigma(P: Poset, sigma):
    """Rank-permuted rowmotion: rank toggles applied in reversed sigma order.

    The identity permutation recovers rowmotion (top rank toggled first).
    """
    sigma = _check_rank_permutation(P, sigma)
    rank_elems = [tuple(_bits(P.rank_mask(i))) for i in range(P.max_rank() + 1)]

    def step(I: OrderIdeal) -> OrderIdeal:
        mask = I.mask
        for i in reversed(sigma):
            for p in rank_elems[i]:
                mask = P.toggle_mask(p, mask)
        return OrderIdeal._make(P, mask)

    return step


def gyration(P: Poset):
    """Toggle all even ranks, then all odd ranks."""
    if P.rank is None:
        raise ValueError("poset is not ranked")
    top = P.max_rank()
    sigma = tuple(range(1, top + 1, 2)) + tuple(range(0, top + 1, 2))
    return rowmotion_sigma(P, sigma)


def antichain_rowmotion(P: Poset, A: Antichain) -> Antichain:
    """min of the complement of the ideal generated by A."""
    if A.poset is not P:
        raise ValueError("antichain belongs to a different poset")
    gen = P.generated_ideal_mask(A.mask)
    return Antichain._make(P, P.min_complement_mask(gen))


# -- orbits -----------------------------------------------------------------------


def orbit(step, start, cap: int = 1_000_000) -> Orbit:
    """Forward orbit of `start` under `step`, up to the first return."""
    states = [start]
    seen = {start}
    cur = start
    while True:
        cur = step(cur)
        if cur == start:
            return Orbit(states)
        if cur in seen:
            raise ValueError("map is not injective on the reachable states")
        if len(states) >= cap:
            raise CapExceededError(f"orbit exceeded {cap} states")
        seen.add(cur)
        states.append(cur)


def orbit_partition(step, space) -> list[Orbit]:
    """Partition a finite state space into orbits of the bijection `step`."""
    space = list(space)
    index = {s: k for k, s in enumerate(space)}
    if len(index) != len(space):
        raise ValueError("state space contains duplicates")
    visited = [False] * len(space)
    orbits = []
    for k, start in enumerate(space):
        if visited[k]:
            continue
        states = []
        cur = start
        while True:
            i = index.get(cur)
            if i is None:
                raise ValueError("map leaves the given state space")
            if visited[i]:
                break
            visited[i] = True
            states.append(cur)
            cur = step(cur)
        if cur != start:
            raise ValueError("map is not a bijection of the state space")
        orbits.append(Orbit(states))
    return orbits


def as_index_permutation(step, space) -> list[int]:
    """The bijection `step` on `space`, as a permutation of positions."""
    index = {s: k for k, s in enumerate(space)}
    perm = [index[step(s)] for s in space]
    if sorted(perm) != list(range(len(space))):
        raise ValueError("map is not a bijection of the state space")
    return perm


def permutation_orbits(perm) -> list[list[int]]:
    """Cycles of an index permutation, each starting at its least element."""
    n = len(perm)
    seen = [False] * n
    cycles = []
    for start in range(n):
        if seen[start]:
            continue
        cyc = []
        x = start
        while not seen[x]:
            seen[x] = True
            cyc.append(x)
            x = perm[x]
        cycles.append(cyc)
    return cycles
