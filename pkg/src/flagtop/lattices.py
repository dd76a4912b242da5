"""Exact integer-lattice arithmetic: Hermite and Smith normal forms,
sublattice membership and quotient-group invariant factors.

Everything here runs over arbitrary-precision integers and ``Fraction``;
no floating point.  Matrices are lists (or tuples) of rows.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import lcm
from typing import Iterable, Sequence

from .errors import ContainmentError

IntMatrix = list[list[int]]
Rational = int | Fraction


def _identity(n: int) -> IntMatrix:
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def hnf(basis: Sequence[Sequence[int]]) -> tuple[IntMatrix, IntMatrix]:
    """Row-style Hermite normal form.

    Returns ``(H, U)`` with ``H == U @ basis`` for a unimodular ``U``.
    ``H`` is the canonical form of the row lattice: rows in echelon order,
    pivots positive, entries above a pivot reduced into ``[0, pivot)``,
    zero rows at the bottom.  Canonicity makes ``H`` depend only on the
    lattice spanned by the input rows, not on their order.
    """
    m = [list(map(int, row)) for row in basis]
    nrows = len(m)
    ncols = len(m[0]) if nrows else 0
    u = _identity(nrows)
    row = 0
    for col in range(ncols):
        # Gcd-eliminate column `col` among rows >= row.
        while True:
            live = [i for i in range(row, nrows) if m[i][col] != 0]
            if not live:
                break
            pivot = min(live, key=lambda i: abs(m[i][col]))
            if pivot != row:
                m[row], m[pivot] = m[pivot], m[row]
                u[row], u[pivot] = u[pivot], u[row]
            if len(live) == 1:
                break
            for i in range(row + 1, nrows):
                if m[i][col]:
                    q = m[i][col] // m[row][col]
                    m[i] = [a - q * b for a, b in zip(m[i], m[row])]
                    u[i] = [a - q * b for a, b in zip(u[i], u[row])]
        if row < nrows and m[row][col] != 0:
            if m[row][col] < 0:
                m[row] = [-a for a in m[row]]
                u[row] = [-a for a in u[row]]
            for i in range(row):
                q = m[i][col] // m[row][col]
                if q:
                    m[i] = [a - q * b for a, b in zip(m[i], m[row])]
                    u[i] = [a - q * b for a, b in zip(u[i], u[row])]
            row += 1
            if row == nrows:
                break
    return m, u


def snf(matrix: Sequence[Sequence[int]]) -> tuple[IntMatrix, IntMatrix, IntMatrix]:
    """Smith normal form ``(D, U, V)`` with ``D == U @ matrix @ V``.

    ``D`` is diagonal with nonnegative entries satisfying the divisibility
    chain d1 | d2 | ...; ``U`` and ``V`` are unimodular.
    """
    d = [list(map(int, row)) for row in matrix]
    nrows = len(d)
    ncols = len(d[0]) if nrows else 0
    u = _identity(nrows)
    v = _identity(ncols)

    def swap_rows(a, b):
        d[a], d[b] = d[b], d[a]
        u[a], u[b] = u[b], u[a]

    def swap_cols(a, b):
        for r in d:
            r[a], r[b] = r[b], r[a]
        for r in v:
            r[a], r[b] = r[b], r[a]

    def addmul_row(dst, src, q):
        d[dst] = [a - q * b for a, b in zip(d[dst], d[src])]
        u[dst] = [a - q * b for a, b in zip(u[dst], u[src])]

    def addmul_col(dst, src, q):
        for r in d:
            r[dst] -= q * r[src]
        for r in v:
            r[dst] -= q * r[src]

    for t in range(min(nrows, ncols)):
        while True:
            entries = [
                (abs(d[i][j]), i, j)
                for i in range(t, nrows)
                for j in range(t, ncols)
                if d[i][j] != 0
            ]
            if not entries:
                break
            _, pi, pj = min(entries)
            if pi != t:
                swap_rows(t, pi)
            if pj != t:
                swap_cols(t, pj)
            dirty = False
            for i in range(t + 1, nrows):
                if d[i][t]:
                    addmul_row(i, t, d[i][t] // d[t][t])
                    dirty = dirty or d[i][t] != 0
            for j in range(t + 1, ncols):
                if d[t][j]:
                    q = d[t][j] // d[t][t]
                    addmul_col(j, t, q)
                    dirty = dirty or d[t][j] != 0
            if dirty:
                continue
            # Enforce the divisibility chain: fold any non-multiple into row t.
            culprit = None
            for i in range(t + 1, nrows):
                for j in range(t + 1, ncols):
                    if d[i][j] % d[t][t] != 0:
                        culprit = i
                        break
                if culprit is not None:
                    break
            if culprit is None:
                break
            addmul_row(t, culprit, -1)
        if t < nrows and t < ncols and d[t][t] < 0:
            d[t] = [-a for a in d[t]]
            u[t] = [-a for a in u[t]]
    return d, u, v


def det(matrix: Sequence[Sequence[int]]) -> int:
    """Exact determinant of a square integer matrix (fraction-free Bareiss)."""
    n = len(matrix)
    if n == 0:
        return 1
    m = [list(map(int, row)) for row in matrix]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if m[i][k] != 0), None)
            if swap is None:
                return 0
            m[k], m[swap] = m[swap], m[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
            m[i][k] = 0
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


@lru_cache(maxsize=None)
def _hnf_cached(rows: tuple[tuple[int, ...], ...]) -> tuple[tuple[tuple[int, ...], ...], tuple[tuple[int, ...], ...]]:
    h, u = hnf([list(r) for r in rows])
    return tuple(map(tuple, h)), tuple(map(tuple, u))


@dataclass(frozen=True)
class QuotientGroup:
    """Finitely generated abelian group: free part plus invariant factors d1 | d2 | ..."""

    free_rank: int
    torsion: tuple[int, ...]

    def __post_init__(self):
        if self.free_rank < 0:
            raise ValueError("free_rank must be nonnegative")
        for a, b in zip(self.torsion, self.torsion[1:]):
            if b % a != 0:
                raise ValueError(f"invariant factors must form a divisibility chain: {self.torsion}")
        if any(d < 2 for d in self.torsion):
            raise ValueError("invariant factors must be >= 2")

    @property
    def is_trivial(self) -> bool:
        return self.free_rank == 0 and not self.torsion

    @property
    def is_torsion_free(self) -> bool:
        return not self.torsion

    def as_dict(self) -> dict:
        return {"free_rank": self.free_rank, "torsion": list(self.torsion)}

    def __str__(self) -> str:
        parts = ["Z"] * self.free_rank + [f"Z{d}" for d in self.torsion]
        return " x ".join(parts) if parts else "0"


@dataclass(frozen=True)
class IntegerLattice:
    """Sublattice of Z^ambient_dim given by linearly independent basis rows."""

    ambient_dim: int
    basis: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        for row in self.basis:
            if len(row) != self.ambient_dim:
                raise ValueError("basis row has wrong length")
        h, _ = _hnf_cached(self.basis)
        if sum(1 for row in h if any(row)) != len(self.basis):
            raise ValueError("basis rows are linearly dependent")

    @classmethod
    def from_generators(cls, ambient_dim: int, gens: Iterable[Sequence[int]]) -> "IntegerLattice":
        """Lattice spanned by arbitrary (possibly dependent) integer generators."""
        rows = tuple(tuple(int(x) for x in g) for g in gens)
        for row in rows:
            if len(row) != ambient_dim:
                raise ValueError("generator has wrong length")
        h, _ = _hnf_cached(rows) if rows else ((), ())
        basis = tuple(row for row in h if any(row))
        return cls(ambient_dim, basis)

    @property
    def rank(self) -> int:
        return len(self.basis)

    def hermite_form(self) -> tuple[tuple[int, ...], ...]:
        h, _ = _hnf_cached(self.basis)
        return tuple(row for row in h if any(row))

    def coordinates(self, v: Sequence[Rational]) -> tuple[Fraction, ...] | None:
        """Coefficients of v over the basis rows (exact), or None if v is outside the span."""
        if len(v) != self.ambient_dim:
            raise ValueError(f"vector has length {len(v)}, ambient dimension is {self.ambient_dim}")
        vec = [Fraction(x) for x in v]
        h, u = _hnf_cached(self.basis)
        live = [i for i, row in enumerate(h) if any(row)]
        y = [Fraction(0)] * len(h)
        residue = vec[:]
        for i in live:
            col = next(j for j, a in enumerate(h[i]) if a)
            coef = residue[col] / h[i][col]
            y[i] = coef
            if coef:
                residue = [r - coef * a for r, a in zip(residue, h[i])]
        if any(residue):
            return None
        # y expresses v over H; pull back through U to the original basis.
        return tuple(
            sum(y[i] * u[i][k] for i in range(len(h)))
            for k in range(len(self.basis))
        )

    def member(self, v: Sequence[Rational]) -> bool:
        """True iff v (rational coordinates allowed) lies in the Z-span of the basis."""
        coords = self.coordinates(v)
        return coords is not None and all(c.denominator == 1 for c in coords)

    def __contains__(self, v) -> bool:
        return self.member(v)

    def same_lattice(self, other: "IntegerLattice") -> bool:
        return self.ambient_dim == other.ambient_dim and self.hermite_form() == other.hermite_form()


def member(lattice: IntegerLattice, v: Sequence[Rational]) -> bool:
    """Membership of a rational vector in an integer lattice (HNF back-substitution)."""
    return lattice.member(v)


def quotient(l_big: IntegerLattice, l_small: IntegerLattice) -> QuotientGroup:
    """Invariant factors of l_big / l_small; requires l_small to be a sublattice of l_big."""
    if l_big.ambient_dim != l_small.ambient_dim:
        raise ContainmentError("ambient dimensions differ")
    rows = []
    for vec in l_small.basis:
        coords = l_big.coordinates(vec)
        if coords is None or any(c.denominator != 1 for c in coords):
            raise ContainmentError(f"{vec} is not contained in the larger lattice")
        rows.append([int(c) for c in coords])
    if not rows:
        return QuotientGroup(free_rank=l_big.rank, torsion=())
    d, _, _ = snf(rows)
    diag = [d[i][i] for i in range(min(len(d), len(d[0])))]
    nonzero = [x for x in diag if x != 0]
    torsion = tuple(x for x in nonzero if x > 1)
    return QuotientGroup(free_rank=l_big.rank - len(nonzero), torsion=torsion)


@dataclass(frozen=True)
class ScaledLattice:
    """Lattice (1/den) * L for an integer lattice L: exact rational lattices
    such as coweight lattices or nonreduced dual-root lattices."""

    den: int
    lattice: IntegerLattice

    def __post_init__(self):
        if self.den < 1:
            raise ValueError("den must be positive")

    @classmethod
    def from_rational_generators(
        cls, ambient_dim: int, gens: Iterable[Sequence[Rational]]
    ) -> "ScaledLattice":
        rows = [tuple(Fraction(x) for x in g) for g in gens]
        den = lcm(1, *(x.denominator for row in rows for x in row)) if rows else 1
        scaled = [[int(x * den) for x in row] for row in rows]
        return cls(den, IntegerLattice.from_generators(ambient_dim, scaled))

    @property
    def ambient_dim(self) -> int:
        return self.lattice.ambient_dim

    @property
    def rank(self) -> int:
        return self.lattice.rank

    def member(self, v: Sequence[Rational]) -> bool:
        return self.lattice.member([Fraction(x) * self.den for x in v])

    def __contains__(self, v) -> bool:
        return self.member(v)

    def same_lattice(self, other: "ScaledLattice") -> bool:
        d = lcm(self.den, other.den)
        return self._rescaled(d).same_lattice(other._rescaled(d))

    def _rescaled(self, new_den: int) -> IntegerLattice:
        """Integer lattice representing self at denominator new_den (a multiple of den)."""
        factor = new_den // self.den
        return IntegerLattice.from_generators(
            self.ambient_dim, [[x * factor for x in row] for row in self.lattice.basis]
        )


def quotient_scaled(big: ScaledLattice, small: ScaledLattice) -> QuotientGroup:
    """Quotient of rational lattices, via a common denominator (scale-invariant)."""
    d = lcm(big.den, small.den)
    return quotient(big._rescaled(d), small._rescaled(d))
