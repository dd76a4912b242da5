"""Partition of the positive roots (plus zero) into residue classes modulo
the isotropy root lattice, isotropy component dimensions, and the
same-invariant-geometry predicate.

Two positive roots land in the same class exactly when their difference is
an integer combination of the selected simple roots; the classes index the
irreducible isotropy components and the independent parameters of invariant
metrics.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass, field
from typing import Iterable

from .errors import IsotropyRootError
from .lattices import IntegerLattice
from .roots import LengthClass, Root, RootSystem
from .weyl import ReflectionWord, ThetaSubset, connect_word, in_isotropy, theta_of

ThetaLike = ThetaSubset | Iterable[int]


@dataclass(frozen=True)
class ResidueClass:
    """One block of the mod-isotropy partition of the positive roots.

    The zero class collects the positive isotropy roots together with the
    formal zero functional (the zero itself is implicit); its representative
    is None when the isotropy is empty.
    """

    representative: Root | None
    members: tuple[Root, ...]
    lengths_present: frozenset[LengthClass]
    is_zero_class: bool

    @property
    def size(self) -> int:
        return len(self.members)

    @property
    def single_length(self) -> bool:
        return len(self.lengths_present) <= 1

    def as_dict(self) -> dict:
        return {
            "representative": list(self.representative) if self.representative else None,
            "members": [list(m) for m in self.members],
            "lengths": sorted(lc.value for lc in self.lengths_present),
            "size": self.size,
            "zero_class": self.is_zero_class,
        }


@dataclass(frozen=True)
class IsotropyDecomposition:
    """All residue classes for one (system, theta) instance, zero class first.

    ``component_dims`` lists 2 * |class| per nonzero class for reduced
    systems; it is withheld (None) for nonreduced input, where the dimension
    formula has no compact-group meaning.
    """

    theta: ThetaSubset
    classes: tuple[ResidueClass, ...]
    component_dims: tuple[int, ...] | None
    system: RootSystem = field(compare=False, repr=False)

    @property
    def zero_class(self) -> ResidueClass:
        return self.classes[0]

    @property
    def nonzero_classes(self) -> tuple[ResidueClass, ...]:
        return self.classes[1:]

    def class_of(self, root: Root) -> ResidueClass:
        for cls in self.classes:
            if root in cls.members:
                return cls
        raise IsotropyRootError(f"{root} is not a positive root of the decomposition")

    def as_dict(self) -> dict:
        return {
            "theta": sorted(self.theta.indices),
            "classes": [c.as_dict() for c in self.classes],
            "k": len(self.nonzero_classes),
        }


def isotropy_lattice(system: RootSystem, theta: ThetaSubset) -> IntegerLattice:
    """Z-span of the isotropy roots, over the simple basis."""
    gens = [r for r in system.positive_roots if in_isotropy(system, theta, r)]
    return IntegerLattice.from_generators(system.rank, gens)


def _partition_by_coefficients(system, theta):
    zero, groups = [], {}
    outside = [i - 1 for i in theta.complement()]
    for root in system.positive_roots:
        key = tuple(root[i] for i in outside)
        if not any(key):
            zero.append(root)
        else:
            groups.setdefault(key, []).append(root)
    return zero, list(groups.values())


def _partition_by_lattice(system, theta):
    lattice = isotropy_lattice(system, theta)
    zero, groups = [], []
    for root in system.positive_roots:
        if lattice.member(root):
            zero.append(root)
            continue
        for group in groups:
            if lattice.member(tuple(a - b for a, b in zip(root, group[0]))):
                group.append(root)
                break
        else:
            groups.append([root])
    return zero, groups


def residue_classes(
    system: RootSystem,
    theta: ThetaLike,
    method: str = "coefficient",
) -> IsotropyDecomposition:
    """Equivalence classes of the positive roots (plus zero) modulo the
    isotropy root lattice.

    ``method`` selects the congruence test: "coefficient" compares the
    coordinates outside theta, "lattice" decides membership of differences
    via Hermite-form back-substitution.  The two must produce identical
    partitions; the verification suite checks exactly that.
    """
    theta = theta_of(system, theta)
    if method == "coefficient":
        zero, groups = _partition_by_coefficients(system, theta)
    elif method == "lattice":
        zero, groups = _partition_by_lattice(system, theta)
    else:
        raise ValueError(f"unknown method {method!r}")

    def make_class(members: list[Root], is_zero: bool) -> ResidueClass:
        members = sorted(members, key=lambda r: (sum(r), r))
        return ResidueClass(
            representative=members[0] if members else None,
            members=tuple(members),
            lengths_present=frozenset(system.length_class(m) for m in members),
            is_zero_class=is_zero,
        )

    classes = [make_class(zero, True)]
    nonzero = sorted(
        (make_class(g, False) for g in groups),
        key=lambda c: (sum(c.representative), c.representative),
    )
    classes.extend(nonzero)
    dims = tuple(2 * c.size for c in nonzero) if system.is_reduced else None
    return IsotropyDecomposition(
        theta=theta, classes=tuple(classes), component_dims=dims, system=system
    )


def metric_parameter_count(decomposition: IsotropyDecomposition) -> int:
    """Number of independent positive parameters of an invariant metric:
    one per nonzero residue class."""
    if not decomposition.system.is_reduced:
        warnings.warn(
            "nonreduced system: the class count is purely combinatorial and "
            "carries no invariant-metric meaning",
            stacklevel=2,
        )
    return len(decomposition.nonzero_classes)


def _require_outside_isotropy(system, theta, root):
    system.assert_root(root)
    if in_isotropy(system, theta, root):
        raise IsotropyRootError(
            f"{root} lies in the isotropy subsystem; no sphere is attached to it"
        )


def same_invariant_geometry(
    system: RootSystem, theta: ThetaLike, alpha: Root, beta: Root
) -> bool:
    """Whether the two spheres must carry the same diameter under every
    invariant metric: congruence modulo the isotropy root lattice."""
    theta = theta_of(system, theta)
    _require_outside_isotropy(system, theta, alpha)
    _require_outside_isotropy(system, theta, beta)
    outside = [i - 1 for i in theta.complement()]
    return all(alpha[i] == beta[i] for i in outside)


def isometry_witness(
    system: RootSystem, theta: ThetaLike, alpha: Root, beta: Root
) -> ReflectionWord | None:
    """A word of theta reflections carrying alpha to beta, when one exists.

    Exists precisely for same-length roots in the same residue class; the
    word is then an isometry witness for the corresponding spheres.
    """
    theta = theta_of(system, theta)
    _require_outside_isotropy(system, theta, alpha)
    _require_outside_isotropy(system, theta, beta)
    if alpha == beta:
        return ReflectionWord((), source=alpha, target=beta)
    if system.length2(alpha) != system.length2(beta):
        return None
    if not same_invariant_geometry(system, theta, alpha, beta):
        return None
    return connect_word(system, theta, alpha, beta)
