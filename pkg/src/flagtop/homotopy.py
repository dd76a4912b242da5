"""Second homotopy of a flag manifold as the dual-root lattice modulo the
isotropy dual-root lattice: sphere coordinates in the preferred basis,
the addition relation, rigidity classification, and fundamental-group
quotients for the two supported group presets.

All homotopy coordinates are computed on the dual-root side; the preferred
basis is indexed by the simple roots outside the isotropy subset.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Iterable

from .errors import EquivalenceMismatchError, IsotropyRootError, NonreducedSystemError
from .isotropy import (
    IsotropyDecomposition,
    ResidueClass,
    residue_classes,
)
from .lattices import IntegerLattice, QuotientGroup, ScaledLattice, quotient_scaled
from .roots import Root, RootSystem, dual_system
from .weyl import ThetaSubset, in_isotropy, theta_of, w_theta_orbit

ThetaLike = ThetaSubset | Iterable[int]


class GroupPreset(str, Enum):
    SIMPLY_CONNECTED = "simply_connected"
    ADJOINT = "adjoint"


@dataclass(frozen=True)
class StandardLattices:
    """The four lattices attached to a root system.

    ``root`` lives in simple-basis coordinates; the other three live in
    dual-simple-basis coordinates, where the coroot lattice is identified
    with the dual-root lattice once and for all.  ``coweight`` is None for
    nonreduced systems (no invertible Cartan pairing to dualize).
    """

    root: ScaledLattice
    dual_root: ScaledLattice
    coroot: ScaledLattice
    coweight: ScaledLattice | None


def _invert_fraction_matrix(rows: list[list[Fraction]]) -> list[list[Fraction]]:
    n = len(rows)
    aug = [row[:] + [Fraction(1 if i == j else 0) for j in range(n)] for i, row in enumerate(rows)]
    for col in range(n):
        pivot = next(i for i in range(col, n) if aug[i][col] != 0)
        aug[col], aug[pivot] = aug[pivot], aug[col]
        inv = 1 / aug[col][col]
        aug[col] = [x * inv for x in aug[col]]
        for i in range(n):
            if i != col and aug[i][col]:
                factor = aug[i][col]
                aug[i] = [a - factor * b for a, b in zip(aug[i], aug[col])]
    return [row[n:] for row in aug]


def standard_lattices(system: RootSystem) -> StandardLattices:
    """Root, dual-root, coroot and coweight lattices in fixed coordinates."""
    n = system.rank
    identity = IntegerLattice.from_generators(
        n, [tuple(1 if j == i else 0 for j in range(n)) for i in range(n)]
    )
    root = ScaledLattice(1, identity)
    dual_root = ScaledLattice.from_rational_generators(
        n, [system.dual_coords(r) for r in system.positive_roots]
    )
    coweight = None
    if system.is_reduced:
        cartan_t = [
            [Fraction(system.cartan[j][i]) for j in range(n)] for i in range(n)
        ]
        coweight = ScaledLattice.from_rational_generators(
            n, _invert_fraction_matrix(cartan_t)
        )
    return StandardLattices(root=root, dual_root=dual_root, coroot=dual_root, coweight=coweight)


def dual_isotropy_lattice(system: RootSystem, theta: ThetaLike) -> ScaledLattice:
    """Z-span of the duals of all isotropy roots, in dual-basis coordinates.

    For reduced systems this is the span of the selected dual simple roots;
    for BC the duals of divisible isotropy roots contribute halves, so the
    lattice is computed from every isotropy root.
    """
    theta = theta_of(system, theta)
    gens = [
        system.dual_coords(r)
        for r in system.positive_roots
        if in_isotropy(system, theta, r)
    ]
    return ScaledLattice.from_rational_generators(system.rank, gens)


@dataclass(frozen=True)
class SphereClass:
    """Homotopy coordinates of the 2-sphere attached to a root: the dual
    root modulo the isotropy dual lattice, in the basis indexed by the
    simple roots outside the isotropy (1-based ``basis_indices``)."""

    source_root: Root
    basis_indices: tuple[int, ...]
    coords: tuple[int | Fraction, ...]

    def as_dict(self) -> dict:
        return {
            "root": list(self.source_root),
            "basis": list(self.basis_indices),
            "coords": [c if isinstance(c, int) else str(c) for c in self.coords],
        }


def _as_int_or_fraction(x: Fraction) -> int | Fraction:
    return int(x) if x.denominator == 1 else x


def pi2_basis(system: RootSystem, theta: ThetaLike) -> tuple[Root, ...]:
    """The preferred free basis: duals of the simple roots outside theta.
    Returned as the simple roots themselves, in index order; empty when
    theta is the whole simple system (point manifold)."""
    if not system.is_reduced:
        raise NonreducedSystemError(
            "the free-basis statement requires a reduced system"
        )
    theta = theta_of(system, theta)
    return tuple(system.simple_roots[i - 1] for i in theta.complement())


def sphere_class(system: RootSystem, theta: ThetaLike, root: Root) -> SphereClass:
    """Coordinates of a sphere generator in the preferred basis.

    Integral for reduced systems.  Exposed for BC as well, where the values
    are formal (the dual simple roots are then not a Z-basis of the full
    dual-root lattice); fractional entries can appear there.
    """
    theta = theta_of(system, theta)
    system.assert_root(root)
    if in_isotropy(system, theta, root):
        raise IsotropyRootError(f"{root} lies in the isotropy; it generates no sphere class")
    coords = system.dual_coords(root)
    outside = theta.complement()
    return SphereClass(
        source_root=root,
        basis_indices=outside,
        coords=tuple(_as_int_or_fraction(coords[i - 1]) for i in outside),
    )


def same_homotopy_class(
    system: RootSystem, theta: ThetaLike, alpha: Root, beta: Root
) -> bool:
    """Whether the two sphere generators agree in the second homotopy group:
    equality of dual roots modulo the isotropy dual lattice."""
    theta = theta_of(system, theta)
    for r in (alpha, beta):
        system.assert_root(r)
        if in_isotropy(system, theta, r):
            raise IsotropyRootError(f"{r} lies in the isotropy; it generates no sphere class")
    if system.is_reduced:
        a = sphere_class(system, theta, alpha)
        b = sphere_class(system, theta, beta)
        return a.coords == b.coords
    diff = [x - y for x, y in zip(system.dual_coords(alpha), system.dual_coords(beta))]
    return dual_isotropy_lattice(system, theta).member(diff)


def sum_relation(
    system: RootSystem, theta: ThetaLike, alpha: Root, beta: Root, delta: Root
) -> bool:
    """Whether the sphere of delta is the product of the spheres of alpha
    and beta: additivity of dual roots modulo the isotropy dual lattice."""
    theta = theta_of(system, theta)
    for r in (alpha, beta, delta):
        system.assert_root(r)
        if in_isotropy(system, theta, r):
            raise IsotropyRootError(f"{r} lies in the isotropy; it generates no sphere class")
    if system.is_reduced:
        a = sphere_class(system, theta, alpha).coords
        b = sphere_class(system, theta, beta).coords
        d = sphere_class(system, theta, delta).coords
        return all(x + y == z for x, y, z in zip(a, b, d))
    residual = [
        z - x - y
        for x, y, z in zip(
            system.dual_coords(alpha), system.dual_coords(beta), system.dual_coords(delta)
        )
    ]
    return dual_isotropy_lattice(system, theta).member(residual)


@dataclass(frozen=True)
class RigidityReport:
    """Per-class verdicts: orbit transitivity, single length, and dual-class
    containment.  The three conditions are computed by independent code
    paths and are provably equivalent; ``theta_rigid`` mirrors the dual
    containment.  ``witness`` holds the lexicographically first
    (longer root, shorter root) pair when the class mixes lengths."""

    class_ref: ResidueClass
    w_theta_transitive: bool
    single_length: bool
    dual_containment: bool
    theta_rigid: bool
    witness: tuple[Root, Root] | None

    @property
    def consistent(self) -> bool:
        return self.w_theta_transitive == self.single_length == self.dual_containment

    def as_dict(self) -> dict:
        return {
            "representative": list(self.class_ref.representative),
            "size": self.class_ref.size,
            "lengths": sorted(lc.value for lc in self.class_ref.lengths_present),
            "transitive": self.w_theta_transitive,
            "single_length": self.single_length,
            "dual_containment": self.dual_containment,
            "theta_rigid": self.theta_rigid,
            "witness": [list(w) for w in self.witness] if self.witness else None,
        }


def _mixed_length_witness(system: RootSystem, members: tuple[Root, ...]) -> tuple[Root, Root] | None:
    for a in sorted(members):
        for b in sorted(members):
            if system.length2(a) > system.length2(b):
                return (a, b)
    return None


def rigidity_report(
    system: RootSystem,
    theta: ThetaLike,
    decomposition: IsotropyDecomposition | None = None,
    strict: bool = True,
) -> tuple[RigidityReport, ...]:
    """One report per nonzero residue class.

    Transitivity is decided by orbit closure, single-lengthness by a length
    scan, and the dual containment by lattice membership of dual-root
    differences.  With ``strict`` the equivalence of the three verdicts is
    enforced (a mismatch would be an internal bug, not a data property).
    """
    theta = theta_of(system, theta)
    if decomposition is None:
        decomposition = residue_classes(system, theta)
    dual_lat = dual_isotropy_lattice(system, theta)
    reports = []
    for cls in decomposition.nonzero_classes:
        rep = cls.representative
        orbit = w_theta_orbit(system, theta, rep)
        transitive = orbit == set(cls.members)
        single = cls.single_length
        rep_dual = system.dual_coords(rep)
        containment = all(
            dual_lat.member([x - y for x, y in zip(system.dual_coords(m), rep_dual)])
            for m in cls.members
        )
        report = RigidityReport(
            class_ref=cls,
            w_theta_transitive=transitive,
            single_length=single,
            dual_containment=containment,
            theta_rigid=containment,
            witness=None if single else _mixed_length_witness(system, cls.members),
        )
        if strict and not report.consistent:
            raise EquivalenceMismatchError(
                f"{system.kind} theta {theta.display()} class of {rep}: "
                f"transitive={transitive} single_length={single} containment={containment}"
            )
        reports.append(report)
    return tuple(reports)


def long_theta_criterion(system: RootSystem, theta: ThetaLike) -> bool:
    """True iff every selected simple root is long.

    For reduced systems with a proper theta this is equivalent to every
    nonzero class being single-length (hence orbit-transitive).  The
    equivalence provably fails for nonreduced BC systems, where a long
    isotropy simple still merges a long root with its doubled neighbours;
    see the verification suite for the scoped assertion.
    """
    theta = theta_of(system, theta)
    return all(
        system.length2(system.simple_roots[i - 1]) == 2 for i in theta.sorted_indices()
    )


def all_classes_rigid(system: RootSystem, theta: ThetaLike) -> bool:
    return all(r.theta_rigid for r in rigidity_report(system, theta))


def full_transitivity(system: RootSystem, theta: ThetaLike) -> bool:
    """Transitivity on every nonzero class on both the primal and the dual
    side (the dual system carries the same index subset)."""
    theta = theta_of(system, theta)
    if not all_classes_rigid(system, theta):
        return False
    dual = dual_system(system)
    return all_classes_rigid(dual, ThetaSubset(theta.indices, dual.rank))


def dual_class_equality(system: RootSystem, theta: ThetaLike) -> bool:
    """Whether dualizing carries every residue class exactly onto the
    residue class of the dual root (not just into it)."""
    theta = theta_of(system, theta)
    dual = dual_system(system)
    dual_theta = ThetaSubset(theta.indices, dual.rank)
    primal = residue_classes(system, theta)
    dualized = residue_classes(dual, dual_theta)
    for cls in primal.classes:
        image = {system.dual_partner(m) for m in cls.members}
        if cls.is_zero_class:
            target_members = set(dualized.zero_class.members)
        else:
            target = dualized.class_of(system.dual_partner(cls.representative))
            target_members = set(target.members)
        if image != target_members:
            return False
    return True


@dataclass(frozen=True)
class Pi1Report:
    """Fundamental groups of the group and the isotropy, plus the image of
    the boundary homomorphism, for one of the two group presets."""

    preset: GroupPreset
    pi1_u: QuotientGroup
    pi1_u_theta: QuotientGroup
    boundary_image: QuotientGroup
    boundary_surjective: bool

    def as_dict(self) -> dict:
        return {
            "preset": self.preset.value,
            "pi1_U": self.pi1_u.as_dict(),
            "pi1_U_theta": self.pi1_u_theta.as_dict(),
            "boundary_image": self.boundary_image.as_dict(),
            "boundary_surjective": self.boundary_surjective,
        }


def pi1_report(
    system: RootSystem, theta: ThetaLike, preset: GroupPreset = GroupPreset.SIMPLY_CONNECTED
) -> Pi1Report:
    """Fundamental-group quotients in coroot coordinates.

    The unit lattice is the coroot lattice for the simply connected preset
    and the coweight lattice for the adjoint preset; the boundary image is
    the coroot lattice modulo the isotropy coroot lattice either way.
    """
    if not system.is_reduced:
        raise NonreducedSystemError("fundamental-group reports require a reduced system")
    theta = theta_of(system, theta)
    preset = GroupPreset(preset)
    lattices = standard_lattices(system)
    coroot = lattices.coroot
    gamma = coroot if preset is GroupPreset.SIMPLY_CONNECTED else lattices.coweight
    assert gamma is not None
    coroot_theta = dual_isotropy_lattice(system, theta)
    report = Pi1Report(
        preset=preset,
        pi1_u=quotient_scaled(gamma, coroot),
        pi1_u_theta=quotient_scaled(gamma, coroot_theta),
        boundary_image=quotient_scaled(coroot, coroot_theta),
        boundary_surjective=gamma.same_lattice(coroot),
    )
    if preset is GroupPreset.SIMPLY_CONNECTED and not report.boundary_surjective:
        raise EquivalenceMismatchError("simply connected preset must have surjective boundary")
    return report
