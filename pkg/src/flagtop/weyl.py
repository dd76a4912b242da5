"""Simple reflections, orbits under the isotropy Weyl group, and two
constructive algorithms: the descent word connecting two congruent roots of
equal length, and the long-root neighbour of a short simple root.

All simple-root indices in this API are 1-based, matching the CLI and the
per-family index tables in docs/.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable

from .errors import (
    IsotropyRootError,
    NoConnectingWordError,
    NoLongRootError,
)
from .roots import LengthClass, Root, RootSystem


@dataclass(frozen=True)
class ThetaSubset:
    """Subset of the simple roots (1-based indices), selecting the isotropy."""

    indices: frozenset[int]
    rank: int

    def __post_init__(self):
        bad = [i for i in self.indices if not 1 <= i <= self.rank]
        if bad:
            raise ValueError(f"simple-root indices {bad} out of range 1..{self.rank}")

    @classmethod
    def of(cls, system: RootSystem, indices: Iterable[int]) -> "ThetaSubset":
        return cls(frozenset(int(i) for i in indices), system.rank)

    @property
    def is_empty(self) -> bool:
        return not self.indices

    def is_full(self) -> bool:
        return len(self.indices) == self.rank

    def zero_based(self) -> tuple[int, ...]:
        return tuple(sorted(i - 1 for i in self.indices))

    def sorted_indices(self) -> tuple[int, ...]:
        return tuple(sorted(self.indices))

    def complement(self) -> tuple[int, ...]:
        """Sorted 1-based indices outside the subset."""
        return tuple(i for i in range(1, self.rank + 1) if i not in self.indices)

    def display(self) -> str:
        return "{" + ",".join(map(str, self.sorted_indices())) + "}"


def theta_of(system: RootSystem, theta: "ThetaSubset | Iterable[int]") -> ThetaSubset:
    if isinstance(theta, ThetaSubset):
        if theta.rank != system.rank:
            raise ValueError("theta subset built for a different rank")
        return theta
    return ThetaSubset.of(system, theta)


def in_isotropy(system: RootSystem, theta: ThetaSubset, root: Root) -> bool:
    """Whether the root lies in the subsystem spanned by the selected simples."""
    system.assert_root(root)
    return system.support(root) <= theta.indices


@dataclass(frozen=True)
class ReflectionWord:
    """Word in simple reflections; letters are 1-based indices applied
    right-to-left, mapping ``source`` to ``target``."""

    letters: tuple[int, ...]
    source: Root
    target: Root

    def as_list(self) -> list[int]:
        return list(self.letters)

    def __len__(self) -> int:
        return len(self.letters)


def reflect(system: RootSystem, index: int, root: Root) -> Root:
    """Reflection in the index-th simple root (1-based), exact Cartan arithmetic."""
    if not 1 <= index <= system.rank:
        raise ValueError(f"simple-root index {index} out of range 1..{system.rank}")
    system.assert_root(root)
    return system.reflect_simple(index - 1, root)


def apply_word(system: RootSystem, word: ReflectionWord | Iterable[int], root: Root) -> Root:
    letters = word.letters if isinstance(word, ReflectionWord) else tuple(word)
    for index in reversed(letters):
        root = reflect(system, index, root)
    return root


def w_theta_orbit(system: RootSystem, theta: ThetaSubset | Iterable[int], root: Root) -> frozenset[Root]:
    """Orbit of a root under the group generated by the theta reflections,
    by breadth-first closure; the group itself is never enumerated."""
    theta = theta_of(system, theta)
    system.assert_root(root)
    seen = {root}
    queue = deque([root])
    zero_based = theta.zero_based()
    while queue:
        current = queue.popleft()
        for i in zero_based:
            image = system.reflect_simple(i, current, _checked=False)
            if image not in seen:
                seen.add(image)
                queue.append(image)
    return frozenset(seen)


def connect_word(
    system: RootSystem,
    theta: ThetaSubset | Iterable[int],
    beta1: Root,
    beta2: Root,
) -> ReflectionWord:
    """Word of theta reflections mapping beta1 to beta2, built by descent.

    Requires beta1 and beta2 to have the same length, to lie outside the
    isotropy subsystem, and to be congruent modulo the isotropy root lattice;
    otherwise no such word exists and ``NoConnectingWordError`` is raised.
    At each step the smallest eligible index j (nonzero difference coefficient
    whose sign matches the pairing with the current root) is reflected, and
    the total difference coefficient strictly decreases.
    """
    theta = theta_of(system, theta)
    system.assert_root(beta1)
    system.assert_root(beta2)
    if in_isotropy(system, theta, beta1) or in_isotropy(system, theta, beta2):
        raise IsotropyRootError("roots inside the isotropy subsystem cannot be connected")
    if system.length2(beta1) != system.length2(beta2):
        raise NoConnectingWordError(
            f"{beta1} and {beta2} have different lengths; no connecting word exists"
        )
    diff = tuple(a - b for a, b in zip(beta1, beta2))
    outside = [i for i in range(system.rank) if i + 1 not in theta.indices]
    if any(diff[i] for i in outside):
        raise NoConnectingWordError(
            f"{beta1} and {beta2} lie in different residue classes; no connecting word exists"
        )
    zero_based = theta.zero_based()
    current = beta1
    applied: list[int] = []
    potential = sum(abs(d) for d in diff)
    while current != beta2:
        coeffs = {i: current[i] - beta2[i] for i in zero_based}
        choice = None
        for i in zero_based:
            if coeffs[i] and coeffs[i] * system.pairing(current, i) > 0:
                choice = i
                break
        if choice is None:  # impossible for valid inputs
            raise NoConnectingWordError(
                f"descent stalled connecting {beta1} to {beta2} (theta {theta.display()})"
            )
        current = system.reflect_simple(choice, current)
        applied.append(choice + 1)
        new_potential = sum(abs(current[i] - beta2[i]) for i in zero_based)
        if new_potential >= potential:
            raise AssertionError(
                f"descent potential failed to decrease: {potential} -> {new_potential}"
            )
        potential = new_potential
    return ReflectionWord(tuple(reversed(applied)), source=beta1, target=beta2)


def _dynkin_neighbours(system: RootSystem) -> list[list[int]]:
    n = system.rank
    return [
        [j for j in range(n) if j != i and system.cartan[i][j] != 0]
        for i in range(n)
    ]


def long_neighbor(system: RootSystem, alpha_index: int) -> Root:
    """A long root with nonzero pairing against the given short simple root.

    Walks the shortest Dynkin-diagram path from the short simple root through
    short simples to the nearest long simple root (smallest-index tie-break)
    and reflects the long endpoint down the path.  Raises if the system is
    simply laced, the index is not a short simple root, or no long simple
    root is reachable (BC1).
    """
    if system.is_simply_laced:
        raise NoLongRootError(f"{system.kind} is simply laced; every root is long")
    if not 1 <= alpha_index <= system.rank:
        raise ValueError(f"simple-root index {alpha_index} out of range 1..{system.rank}")
    start = alpha_index - 1
    if system.length_class(system.simple_roots[start]) != LengthClass.SHORT:
        raise NoLongRootError(f"simple root {alpha_index} of {system.kind} is not short")
    neighbours = _dynkin_neighbours(system)
    is_long = [system.length2(s) == 2 for s in system.simple_roots]
    # BFS through short simples; smallest index first for determinism.
    parent: dict[int, int | None] = {start: None}
    queue = deque([start])
    goal = None
    while queue and goal is None:
        node = queue.popleft()
        for nxt in sorted(neighbours[node]):
            if nxt in parent:
                continue
            parent[nxt] = node
            if is_long[nxt]:
                goal = nxt
                break
            queue.append(nxt)
    if goal is None:
        raise NoLongRootError(f"{system.kind} has no long root (no long simple reachable)")
    path: list[int] = [goal]
    while path[-1] != start:
        path.append(parent[path[-1]])  # type: ignore[arg-type]
    if len(path) == 2:
        # Long simple directly adjacent: it already pairs nontrivially.
        return system.simple_roots[goal]
    # path = [long simple, short_n, ..., short_1, start]; reflect down the chain.
    phi = system.simple_roots[path[0]]
    for node in path[1:]:
        phi = system.reflect_simple(node, phi)
    assert system.length2(phi) == 2
    assert system.pairing(phi, start) != 0
    return phi
