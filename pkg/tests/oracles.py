"""Independent test oracles.

Everything here is deliberately built without the package's Hermite-form
or reflection-closure code paths: explicit e-basis coordinate models for
the classical families, and a plain Gaussian-elimination membership check
for lattices.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations


def _solve_exact(matrix, rhs):
    """Solve matrix @ x = rhs over the rationals; None if inconsistent."""
    rows = len(matrix)
    cols = len(matrix[0])
    aug = [[Fraction(matrix[i][j]) for j in range(cols)] + [Fraction(rhs[i])] for i in range(rows)]
    pivots = []
    r = 0
    for c in range(cols):
        pivot = next((i for i in range(r, rows) if aug[i][c] != 0), None)
        if pivot is None:
            continue
        aug[r], aug[pivot] = aug[pivot], aug[r]
        aug[r] = [x / aug[r][c] for x in aug[r]]
        for i in range(rows):
            if i != r and aug[i][c] != 0:
                f = aug[i][c]
                aug[i] = [a - f * b for a, b in zip(aug[i], aug[r])]
        pivots.append(c)
        r += 1
        if r == rows:
            break
    for i in range(r, rows):
        if aug[i][cols] != 0:
            return None
    x = [Fraction(0)] * cols
    for i, c in enumerate(pivots):
        x[c] = aug[i][cols]
    return x


def rational_member_oracle(basis_rows, vector) -> bool:
    """Naive membership check: solve the transposed system and test integrality."""
    if not basis_rows:
        return all(Fraction(v) == 0 for v in vector)
    n = len(vector)
    k = len(basis_rows)
    matrix = [[basis_rows[j][i] for j in range(k)] for i in range(n)]
    x = _solve_exact(matrix, list(vector))
    if x is None:
        return False
    # Verify (guards against free variables chosen badly) and test integrality.
    for i in range(n):
        if sum(Fraction(basis_rows[j][i]) * x[j] for j in range(k)) != Fraction(vector[i]):
            return False
    return all(c.denominator == 1 for c in x)


def _e(i, dim):
    return tuple(Fraction(1) if j == i else Fraction(0) for j in range(dim))


def _add(a, b):
    return tuple(x + y for x, y in zip(a, b))


def _neg(a):
    return tuple(-x for x in a)


def _sub(a, b):
    return tuple(x - y for x, y in zip(a, b))


def _scale(c, a):
    return tuple(Fraction(c) * x for x in a)


def _model(family: str, n: int):
    """(roots, simple basis) in e-coordinates for the classical families."""
    if family == "A":
        dim = n + 1
        roots = [
            _sub(_e(i, dim), _e(j, dim)) for i in range(dim) for j in range(dim) if i != j
        ]
        simples = [_sub(_e(i, dim), _e(i + 1, dim)) for i in range(n)]
        return roots, simples
    if family in ("B", "BC"):
        dim = n
        roots = []
        for i, j in combinations(range(dim), 2):
            for si in (1, -1):
                for sj in (1, -1):
                    roots.append(_add(_scale(si, _e(i, dim)), _scale(sj, _e(j, dim))))
        for i in range(dim):
            roots.append(_e(i, dim))
            roots.append(_neg(_e(i, dim)))
        if family == "BC":
            for i in range(dim):
                roots.append(_scale(2, _e(i, dim)))
                roots.append(_scale(-2, _e(i, dim)))
        simples = [_sub(_e(i, dim), _e(i + 1, dim)) for i in range(n - 1)] + [_e(n - 1, dim)]
        if n == 1:
            simples = [_e(0, dim)]
        return roots, simples
    if family == "C":
        dim = n
        roots = []
        for i, j in combinations(range(dim), 2):
            for si in (1, -1):
                for sj in (1, -1):
                    roots.append(_add(_scale(si, _e(i, dim)), _scale(sj, _e(j, dim))))
        for i in range(dim):
            roots.append(_scale(2, _e(i, dim)))
            roots.append(_scale(-2, _e(i, dim)))
        simples = [_sub(_e(i, dim), _e(i + 1, dim)) for i in range(n - 1)] + [_scale(2, _e(n - 1, dim))]
        return roots, simples
    if family == "D":
        dim = n
        roots = []
        for i, j in combinations(range(dim), 2):
            for si in (1, -1):
                for sj in (1, -1):
                    roots.append(_add(_scale(si, _e(i, dim)), _scale(sj, _e(j, dim))))
        simples = [_sub(_e(i, dim), _e(i + 1, dim)) for i in range(n - 1)] + [
            _add(_e(n - 2, dim), _e(n - 1, dim))
        ]
        return roots, simples
    raise ValueError(family)


def model_roots_in_simple_coords(family: str, n: int) -> set[tuple[int, ...]]:
    """All roots of the coordinate model, written over its simple basis."""
    roots, simples = _model(family, n)
    dim = len(simples[0])
    matrix = [[simples[j][i] for j in range(len(simples))] for i in range(dim)]
    out = set()
    for root in roots:
        x = _solve_exact(matrix, list(root))
        assert x is not None, (family, n, root)
        assert all(c.denominator == 1 for c in x), (family, n, root, x)
        out.add(tuple(int(c) for c in x))
    return out
