"""Finite root systems (reduced families A-G and nonreduced BC) over their
simple basis, with exact rational inner products and the duality map.

Roots are integer coordinate tuples over the simple basis.  Lengths are
normalized so that long roots have squared length 2; the admissible squared
lengths are then {2} (simply laced), {1, 2} and {1, 2, 4} (doubly laced and
BC), and {2/3, 2} (triply laced).
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from functools import lru_cache
from typing import Iterable

from .errors import InvalidKindError, NotARootError

Root = tuple[int, ...]


class RootFamily(str, Enum):
    A = "A"
    B = "B"
    C = "C"
    D = "D"
    E = "E"
    F = "F"
    G = "G"
    BC = "BC"


_MIN_RANK = {
    RootFamily.A: 1,
    RootFamily.B: 2,
    RootFamily.C: 2,
    RootFamily.D: 3,
    RootFamily.BC: 1,
}


class LengthClass(str, Enum):
    SHORT = "short"
    LONG = "long"
    LONGER = "longer"


@dataclass(frozen=True)
class RootSystemKind:
    family: RootFamily
    rank: int

    def __post_init__(self):
        fam, n = self.family, self.rank
        ok = (
            n >= _MIN_RANK[fam]
            if fam in _MIN_RANK
            else (fam == RootFamily.E and n in (6, 7, 8))
            or (fam == RootFamily.F and n == 4)
            or (fam == RootFamily.G and n == 2)
        )
        if not ok:
            raise InvalidKindError(f"invalid rank {n} for family {fam.value}")

    @classmethod
    def parse(cls, text: str) -> "RootSystemKind":
        text = text.strip()
        fam_str = "BC" if text.upper().startswith("BC") else text[:1].upper()
        rest = text[len(fam_str):]
        try:
            family = RootFamily(fam_str)
            rank = int(rest)
        except (ValueError, KeyError):
            raise InvalidKindError(f"cannot parse root system kind {text!r}") from None
        return cls(family, rank)

    def __str__(self) -> str:
        return f"{self.family.value}{self.rank}"


def _dynkin_data(kind: RootSystemKind) -> tuple[list[Fraction], list[tuple[int, int]]]:
    """Symmetrizer entries d_i = <a_i, a_i>/2 and diagram edges (0-based)."""
    n = kind.rank
    one, half, third = Fraction(1), Fraction(1, 2), Fraction(1, 3)
    path = [(i, i + 1) for i in range(n - 1)]
    fam = kind.family
    if fam == RootFamily.A:
        return [one] * n, path
    if fam in (RootFamily.B, RootFamily.BC):
        return [one] * (n - 1) + [half], path
    if fam == RootFamily.C:
        return [half] * (n - 1) + [one], path
    if fam == RootFamily.D:
        edges = [(i, i + 1) for i in range(n - 3)] + [(n - 3, n - 2), (n - 3, n - 1)]
        return [one] * n, edges
    if fam == RootFamily.E:
        edges = [(0, 2), (2, 3), (3, 4), (4, 5), (1, 3)]
        edges += [(i, i + 1) for i in range(5, n - 1)]
        return [one] * n, edges
    if fam == RootFamily.F:
        return [one, one, half, half], path
    if fam == RootFamily.G:
        return [third, one], path
    raise InvalidKindError(str(kind))


class RootSystem:
    """Immutable root system: Cartan data plus the full finite set of roots.

    ``cartan[i][j]`` is the Cartan integer <a_i, a_j-dual>; ``symmetrizer[i]``
    is d_i = <a_i, a_i>/2 so that <a_i, a_j> = symmetrizer[j] * cartan[i][j].
    """

    def __init__(
        self,
        kind: RootSystemKind,
        cartan: tuple[tuple[int, ...], ...],
        symmetrizer: tuple[Fraction, ...],
        extra_seeds: tuple[Root, ...] = (),
    ):
        self.kind = kind
        self.rank = kind.rank
        self.cartan = cartan
        self.symmetrizer = symmetrizer
        self.gram = tuple(
            tuple(symmetrizer[j] * cartan[i][j] for j in range(self.rank))
            for i in range(self.rank)
        )
        self.simple_roots: tuple[Root, ...] = tuple(
            tuple(1 if j == i else 0 for j in range(self.rank)) for i in range(self.rank)
        )
        self.roots: frozenset[Root] = self._close(self.simple_roots + extra_seeds)
        positive = [r for r in self.roots if min(r) >= 0]
        positive.sort(key=lambda r: (sum(r), r))
        self.positive_roots: tuple[Root, ...] = tuple(positive)
        if 2 * len(positive) != len(self.roots) or any(
            tuple(-c for c in r) not in self.roots for r in positive
        ):
            raise AssertionError(f"root set of {kind} is not sign-symmetric")
        self._length2 = {r: self.inner(r, r) for r in self.roots}
        self.is_simply_laced = all(v == 2 for v in self._length2.values())
        self.is_reduced = kind.family is not RootFamily.BC

    def _close(self, seeds: Iterable[Root]) -> frozenset[Root]:
        found = set(seeds)
        queue = list(found)
        while queue:
            root = queue.pop()
            for i in range(self.rank):
                image = self.reflect_simple(i, root, _checked=False)
                if image not in found:
                    found.add(image)
                    queue.append(image)
        return frozenset(found)

    # -- exact geometry ----------------------------------------------------

    def inner(self, a: Root, b: Root) -> Fraction:
        g = self.gram
        return sum(
            ca * sum(cb * g[i][j] for j, cb in enumerate(b) if cb)
            for i, ca in enumerate(a)
            if ca
        ) or Fraction(0)

    def length2(self, root: Root) -> Fraction:
        """Squared length, long roots normalized to 2."""
        try:
            return self._length2[root]
        except KeyError:
            raise NotARootError(f"{root} is not a root of {self.kind}") from None

    def length_class(self, root: Root) -> LengthClass:
        l2 = self.length2(root)
        if l2 == 2:
            return LengthClass.LONG
        return LengthClass.SHORT if l2 < 2 else LengthClass.LONGER

    def pairing(self, root: Root, j: int) -> int:
        """Cartan integer <root, a_j-dual> (0-based simple index)."""
        return sum(c * self.cartan[i][j] for i, c in enumerate(root) if c)

    def reflect_simple(self, i: int, root: Root, _checked: bool = True) -> Root:
        """Simple reflection r_i applied to a root (0-based index)."""
        if _checked:
            self.assert_root(root)
        coef = self.pairing(root, i)
        return tuple(c - coef if k == i else c for k, c in enumerate(root))

    # -- duality -----------------------------------------------------------

    def dual_coords(self, root: Root) -> tuple[Fraction, ...]:
        """Coefficients of the dual root 2a/<a,a> over the dual simple basis.

        Integral for reduced systems (the dual simple roots form a Z-basis of
        the dual root lattice); halves appear for the BC 'longer' roots.
        """
        d_alpha = self.length2(root) / 2
        return tuple(c * d / d_alpha for c, d in zip(root, self.symmetrizer))

    def dual_partner(self, root: Root) -> Root:
        """The dual root expressed in the simple basis of ``dual_system(self)``."""
        if self.is_reduced:
            coords = self.dual_coords(root)
            assert all(c.denominator == 1 for c in coords)
            return tuple(int(c) for c in coords)
        # BC is self-dual on the same indivisible basis: a-dual = a / d_a there.
        d_alpha = self.length2(root) / 2
        coords = tuple(Fraction(c) / d_alpha for c in root)
        assert all(c.denominator == 1 for c in coords)
        return tuple(int(c) for c in coords)

    @property
    def dual_denominator(self) -> int:
        """Common denominator of all dual-root coordinate vectors (1 if reduced, 2 for BC)."""
        return 1 if self.is_reduced else 2

    # -- bookkeeping ---------------------------------------------------------

    def contains(self, root: Root) -> bool:
        return root in self.roots

    def assert_root(self, root: Root) -> None:
        if root not in self.roots:
            raise NotARootError(f"{root} is not a root of {self.kind}")

    def is_positive(self, root: Root) -> bool:
        self.assert_root(root)
        return min(root) >= 0

    @staticmethod
    def height(root: Root) -> int:
        return sum(root)

    def support(self, root: Root) -> frozenset[int]:
        """1-based indices of the nonzero coordinates."""
        return frozenset(i + 1 for i, c in enumerate(root) if c)

    def as_dict(self) -> dict:
        return {
            "kind": str(self.kind),
            "rank": self.rank,
            "cartan": [list(row) for row in self.cartan],
            "symmetrizer": [str(d) for d in self.symmetrizer],
            "positive_roots": [list(r) for r in self.positive_roots],
        }

    def __repr__(self) -> str:
        return f"RootSystem({self.kind}, {len(self.roots)} roots)"


@lru_cache(maxsize=None)
def build_root_system(kind: RootSystemKind) -> RootSystem:
    """Construct the full root system by closing the simple basis under
    simple reflections; BC_n additionally seeds the doubled short simple root,
    giving the union of the B_n and C_n root sets on the B_n basis."""
    d, edges = _dynkin_data(kind)
    n = kind.rank
    gram = [[Fraction(0)] * n for _ in range(n)]
    for i in range(n):
        gram[i][i] = 2 * d[i]
    for i, j in edges:
        gram[i][j] = gram[j][i] = -max(d[i], d[j])
    cartan_frac = [[gram[i][j] / d[j] for j in range(n)] for i in range(n)]
    assert all(c.denominator == 1 for row in cartan_frac for c in row)
    cartan = tuple(tuple(int(c) for c in row) for row in cartan_frac)
    extra: tuple[Root, ...] = ()
    if kind.family == RootFamily.BC:
        doubled = tuple(2 if i == n - 1 else 0 for i in range(n))
        extra = (doubled,)
    return RootSystem(kind, cartan, tuple(d), extra)


def parse_kind(text: str) -> RootSystemKind:
    return RootSystemKind.parse(text)


def length_class(system: RootSystem, root: Root) -> LengthClass:
    return system.length_class(root)


def dual(system: RootSystem, root: Root) -> tuple[Fraction, ...]:
    """Exact coefficients of the dual root over the dual simple basis."""
    return system.dual_coords(root)


_DUAL_FAMILY = {
    RootFamily.A: RootFamily.A,
    RootFamily.B: RootFamily.C,
    RootFamily.C: RootFamily.B,
    RootFamily.D: RootFamily.D,
    RootFamily.E: RootFamily.E,
    RootFamily.F: RootFamily.F,
    RootFamily.G: RootFamily.G,
    RootFamily.BC: RootFamily.BC,
}


def _dual_system_uncached(system: RootSystem) -> RootSystem:
    kind = RootSystemKind(_DUAL_FAMILY[system.kind.family], system.rank)
    if not system.is_reduced:
        # BC is self-dual as a set; reuse the indivisible simple basis.
        return build_root_system(kind)
    cartan_t = tuple(
        tuple(system.cartan[j][i] for j in range(system.rank)) for i in range(system.rank)
    )
    t = min(system.symmetrizer)
    sym = tuple(t / d for d in system.symmetrizer)
    return RootSystem(kind, cartan_t, sym)


_DUAL_CACHE: dict[int, RootSystem] = {}


def dual_system(system: RootSystem) -> RootSystem:
    """The dual root system, index-aligned: its i-th simple root is the dual
    of the i-th simple root of ``system`` (renormalized so long roots have
    squared length 2).  B and C swap; the other kinds are self-dual."""
    key = id(system)
    if key not in _DUAL_CACHE:
        _DUAL_CACHE[key] = _dual_system_uncached(system)
    return _DUAL_CACHE[key]
