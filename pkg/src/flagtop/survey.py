"""Exhaustive verification harness: runs every invariant of the library
over a configurable grid of (root system, isotropy subset) instances and
tallies violations.

A violation is a falsified theorem-level statement, never an expected
outcome; the checks are scoped to the domains on which the statements are
mathematically valid (see the per-check docstrings).  Instances with the
full simple system selected describe a point manifold: the per-class checks
run vacuously there and the instance-level equivalences are skipped.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations

from .errors import InvalidKindError, NoConnectingWordError
from .homotopy import (
    dual_class_equality,
    full_transitivity,
    long_theta_criterion,
    pi1_report,
    rigidity_report,
    sphere_class,
    standard_lattices,
    dual_isotropy_lattice,
    GroupPreset,
)
from .isotropy import residue_classes
from .lattices import quotient_scaled, snf
from .roots import RootFamily, RootSystem, RootSystemKind, build_root_system, dual_system
from .weyl import ThetaSubset, apply_word, connect_word, in_isotropy, theta_of, w_theta_orbit

_FAMILY_MIN = {"A": 1, "B": 2, "C": 2, "D": 3, "E": 6, "F": 4, "G": 2, "BC": 1}
_FAMILY_FIXED = {"F": (4,), "G": (2,), "E": (6, 7, 8)}

DEFAULT_FAMILIES = ("A", "B", "C", "D", "F", "G", "BC")


@dataclass(frozen=True)
class SurveyConfig:
    """Grid specification for a verification run."""

    families: tuple[str, ...] = DEFAULT_FAMILIES
    max_rank: int = 4
    theta_mode: str = "all_subsets"  # or "listed"
    thetas: tuple[tuple[int, ...], ...] = ()
    output: str | None = None
    fmt: str = "table"
    jobs: int = 1

    def __post_init__(self):
        if self.jobs < 1:
            raise ValueError("jobs must be >= 1")
        if not 1 <= self.max_rank <= 8:
            raise ValueError("max_rank must be between 1 and 8")
        if self.theta_mode not in ("all_subsets", "listed"):
            raise ValueError(f"unknown theta mode {self.theta_mode!r}")
        if self.fmt not in ("table", "json"):
            raise ValueError(f"unknown format {self.fmt!r}")


def enumerate_kinds(families: tuple[str, ...], max_rank: int) -> list[RootSystemKind]:
    """Expand family letters to every valid rank up to max_rank; explicit
    tokens such as 'G2' or 'BC3' select a single kind."""
    kinds: list[RootSystemKind] = []
    for token in families:
        token = token.strip().upper()
        if token in _FAMILY_MIN:
            ranks = _FAMILY_FIXED.get(
                token, range(_FAMILY_MIN[token], max_rank + 1)
            )
            for rank in ranks:
                if rank <= max_rank:
                    kinds.append(RootSystemKind(RootFamily(token), rank))
        else:
            kind = RootSystemKind.parse(token)
            if kind.rank <= max_rank:
                kinds.append(kind)
    seen, unique = set(), []
    for kind in kinds:
        if kind not in seen:
            seen.add(kind)
            unique.append(kind)
    unique.sort(key=lambda k: (k.family.value, k.rank))
    return unique


def enumerate_thetas(config: SurveyConfig, rank: int) -> list[tuple[int, ...]]:
    if config.theta_mode == "listed":
        return [t for t in config.thetas if all(1 <= i <= rank for i in t)]
    subsets: list[tuple[int, ...]] = []
    indices = range(1, rank + 1)
    for size in range(rank + 1):
        subsets.extend(combinations(indices, size))
    return subsets


@dataclass(frozen=True)
class Violation:
    check: str
    instance: str
    detail: str

    def as_dict(self) -> dict:
        return {"check": self.check, "instance": self.instance, "detail": self.detail}


@dataclass(frozen=True)
class InstanceResult:
    kind: str
    theta: tuple[int, ...]
    nonzero_classes: int
    max_word_length: int
    violations: tuple[Violation, ...]

    def as_dict(self) -> dict:
        return {
            "kind": self.kind,
            "theta": list(self.theta),
            "nonzero_classes": self.nonzero_classes,
            "max_word_length": self.max_word_length,
            "violations": [v.as_dict() for v in self.violations],
        }


def _instance_name(system: RootSystem, theta: ThetaSubset) -> str:
    return f"{system.kind} theta {theta.display()}"


def check_partition(system: RootSystem, theta: ThetaSubset, decomposition) -> list[Violation]:
    """Classes are disjoint, cover the positive roots, the zero class is the
    positive isotropy, and the component dimensions add up (reduced)."""
    name = _instance_name(system, theta)
    out = []
    seen: set = set()
    for cls in decomposition.classes:
        overlap = seen.intersection(cls.members)
        if overlap:
            out.append(Violation("partition", name, f"classes overlap on {sorted(overlap)}"))
        seen.update(cls.members)
    if seen != set(system.positive_roots):
        out.append(Violation("partition", name, "classes do not cover the positive roots"))
    expected_zero = {
        r for r in system.positive_roots if in_isotropy(system, theta, r)
    }
    if set(decomposition.zero_class.members) != expected_zero:
        out.append(Violation("partition", name, "zero class is not the positive isotropy"))
    if decomposition.component_dims is not None:
        total = sum(decomposition.component_dims)
        expected = 2 * (len(system.positive_roots) - len(expected_zero))
        if total != expected:
            out.append(
                Violation("partition", name, f"component dims sum {total} != {expected}")
            )
    return out


def check_class_invariance(system: RootSystem, theta: ThetaSubset, decomposition) -> list[Violation]:
    """Every isotropy reflection permutes each nonzero class and maps the
    zero class into the isotropy (up to sign)."""
    name = _instance_name(system, theta)
    out = []
    zero_based = theta.zero_based()
    for cls in decomposition.nonzero_classes:
        members = set(cls.members)
        for i in zero_based:
            image = {system.reflect_simple(i, m) for m in members}
            if image != members:
                out.append(
                    Violation(
                        "class-invariance",
                        name,
                        f"reflection {i + 1} does not preserve class of {cls.representative}",
                    )
                )
    for m in decomposition.zero_class.members:
        for i in zero_based:
            image = system.reflect_simple(i, m)
            positive = image if min(image) >= 0 else tuple(-c for c in image)
            if not in_isotropy(system, theta, positive):
                out.append(
                    Violation("class-invariance", name, f"zero class leaks at {m} under r_{i+1}")
                )
    return out


def check_triple_equivalence(system: RootSystem, theta: ThetaSubset, decomposition) -> list[Violation]:
    """Per nonzero class: orbit transitivity, single length and dual-class
    containment are computed independently and must agree."""
    name = _instance_name(system, theta)
    out = []
    for report in rigidity_report(system, theta, decomposition, strict=False):
        if not report.consistent:
            out.append(
                Violation(
                    "triple-equivalence",
                    name,
                    f"class {report.class_ref.representative}: "
                    f"transitive={report.w_theta_transitive} "
                    f"single_length={report.single_length} "
                    f"containment={report.dual_containment}",
                )
            )
    return out


def check_connect_words(
    system: RootSystem, theta: ThetaSubset, decomposition
) -> tuple[list[Violation], int]:
    """Every same-length ordered pair inside a nonzero class is connected by
    a word of isotropy reflections that maps one root to the other exactly
    (the strict coefficient descent is asserted inside the construction)."""
    name = _instance_name(system, theta)
    out = []
    max_len = 0
    for cls in decomposition.nonzero_classes:
        for b1 in cls.members:
            for b2 in cls.members:
                if system.length2(b1) != system.length2(b2):
                    continue
                try:
                    word = connect_word(system, theta, b1, b2)
                except NoConnectingWordError as exc:
                    out.append(Violation("connect-word", name, f"{b1}->{b2}: {exc}"))
                    continue
                max_len = max(max_len, len(word))
                if any(i not in theta.indices for i in word.letters):
                    out.append(
                        Violation("connect-word", name, f"{b1}->{b2}: letters leave theta")
                    )
                if apply_word(system, word, b1) != b2:
                    out.append(
                        Violation("connect-word", name, f"{b1}->{b2}: word does not map")
                    )
    return out, max_len


def check_partition_oracle(system: RootSystem, theta: ThetaSubset, decomposition) -> list[Violation]:
    """The coefficient-comparison partition and the Hermite-form membership
    partition must coincide."""
    name = _instance_name(system, theta)
    other = residue_classes(system, theta, method="lattice")
    mine = tuple((c.is_zero_class, c.members) for c in decomposition.classes)
    theirs = tuple((c.is_zero_class, c.members) for c in other.classes)
    if mine != theirs:
        return [Violation("partition-oracle", name, "membership and coefficient partitions differ")]
    return []


_PI1_ADJOINT_ORACLE = {
    "A": lambda n: (n + 1,),
    "B": lambda n: (2,),
    "C": lambda n: (2,),
    "D": lambda n: (4,) if n % 2 else (2, 2),
    "E": lambda n: {6: (3,), 7: (2,), 8: ()}[n],
    "F": lambda n: (),
    "G": lambda n: (),
}


def check_pi1(system: RootSystem, theta: ThetaSubset) -> list[Violation]:
    """Reduced systems: the boundary image is torsion-free of the expected
    free rank; the adjoint fundamental group matches both the Smith form of
    the Cartan matrix and the classical table."""
    if not system.is_reduced:
        return []
    name = _instance_name(system, theta)
    out = []
    sc = pi1_report(system, theta, GroupPreset.SIMPLY_CONNECTED)
    if not sc.boundary_image.is_torsion_free:
        out.append(Violation("pi1", name, f"boundary image has torsion {sc.boundary_image.torsion}"))
    expected_rank = system.rank - len(theta.indices)
    if sc.boundary_image.free_rank != expected_rank:
        out.append(
            Violation(
                "pi1",
                name,
                f"boundary image free rank {sc.boundary_image.free_rank} != {expected_rank}",
            )
        )
    if not sc.pi1_u.is_trivial:
        out.append(Violation("pi1", name, "simply connected preset has nontrivial pi1"))
    adj = pi1_report(system, theta, GroupPreset.ADJOINT)
    d, _, _ = snf([list(row) for row in system.cartan])
    snf_factors = tuple(
        d[i][i] for i in range(system.rank) if d[i][i] > 1
    )
    oracle = _PI1_ADJOINT_ORACLE[system.kind.family.value](system.rank)
    if adj.pi1_u.torsion != snf_factors or adj.pi1_u.free_rank != 0:
        out.append(
            Violation("pi1", name, f"adjoint pi1 {adj.pi1_u} != Smith form {snf_factors}")
        )
    if snf_factors != oracle:
        out.append(Violation("pi1", name, f"Smith form {snf_factors} != table {oracle}"))
    if adj.boundary_surjective != (not snf_factors):
        out.append(Violation("pi1", name, "adjoint surjectivity flag inconsistent"))
    return out


def check_long_theta(system: RootSystem, theta: ThetaSubset, decomposition) -> list[Violation]:
    """Instance-level long-isotropy criterion, on its mathematically valid scope.

    Always: 'every nonzero class single-length' and 'orbit-transitive on
    every nonzero class' agree (that is the per-class equivalence summed up).
    For reduced systems a long theta forces single-length classes.  For
    nonreduced BC with a proper theta the converse holds instead:
    single-length classes force a long theta.

    Neither remaining converse is a theorem.  A long theta does not force
    single-length classes in BC (the doubled roots merge squared lengths 2
    and 4: BC2, theta={1}); single-length classes do not force a long theta
    in type C (C3, theta={2,3}: every long root pairing with the short
    isotropy root e2-e3 already lies in the isotropy, so the mixed string
    sits in the zero class).
    """
    if theta.is_full():
        return []
    name = _instance_name(system, theta)
    out = []
    reports = rigidity_report(system, theta, decomposition, strict=False)
    all_single = all(r.single_length for r in reports)
    all_transitive = all(r.w_theta_transitive for r in reports)
    long_theta = long_theta_criterion(system, theta)
    if all_single != all_transitive:
        out.append(
            Violation("long-theta", name, f"single-length {all_single} != transitive {all_transitive}")
        )
    if system.is_reduced:
        if long_theta and not all_single:
            out.append(
                Violation("long-theta", name, "long theta with a mixed-length class")
            )
    elif all_single and not long_theta:
        out.append(
            Violation("long-theta", name, "single-length classes with a short isotropy root")
        )
    return out


def check_full_transitivity(system: RootSystem, theta: ThetaSubset) -> list[Violation]:
    """Instance-level classification for proper theta: transitivity on both
    sides holds exactly for simply laced systems or an empty theta, and
    exactly when dualizing is a bijection between the class partitions."""
    if theta.is_full():
        return []
    name = _instance_name(system, theta)
    out = []
    full = full_transitivity(system, theta)
    closed_form = system.is_simply_laced or theta.is_empty
    equality = dual_class_equality(system, theta)
    if full != closed_form:
        out.append(
            Violation("full-transitivity", name, f"computed {full} != closed form {closed_form}")
        )
    if equality != closed_form:
        out.append(
            Violation("full-transitivity", name, f"class equality {equality} != closed form {closed_form}")
        )
    return out


def check_sphere_basis(system: RootSystem, theta: ThetaSubset) -> list[Violation]:
    """Reduced systems: sphere coordinates of the basis simples form the
    identity, and isotropy reflections leave every sphere class fixed."""
    if not system.is_reduced:
        return []
    name = _instance_name(system, theta)
    out = []
    outside = theta.complement()
    for pos, index in enumerate(outside):
        coords = sphere_class(system, theta, system.simple_roots[index - 1]).coords
        expected = tuple(1 if k == pos else 0 for k in range(len(outside)))
        if tuple(coords) != expected:
            out.append(Violation("sphere-basis", name, f"simple {index} has coords {coords}"))
    for root in system.positive_roots:
        if in_isotropy(system, theta, root):
            continue
        base = sphere_class(system, theta, root).coords
        for i in theta.zero_based():
            image = system.reflect_simple(i, root)
            if tuple(sphere_class(system, theta, image).coords) != tuple(base):
                out.append(
                    Violation("sphere-basis", name, f"sphere class of {root} moves under r_{i+1}")
                )
    return out


def check_duality_equivariance(system: RootSystem, theta: ThetaSubset) -> list[Violation]:
    """Dualizing commutes with every simple reflection (checked on the
    index-aligned dual system)."""
    name = _instance_name(system, theta)
    dual = dual_system(system)
    out = []
    for root in system.positive_roots:
        partner = system.dual_partner(root)
        for i in range(system.rank):
            lhs = system.dual_partner(system.reflect_simple(i, root))
            rhs = dual.reflect_simple(i, partner)
            if lhs != rhs:
                out.append(
                    Violation("duality-equivariance", name, f"r_{i+1} and duality differ at {root}")
                )
    return out


def run_instance(kind: RootSystemKind, theta_indices: tuple[int, ...]) -> InstanceResult:
    """Run the full battery of checks on a single (kind, theta) instance."""
    system = build_root_system(kind)
    theta = ThetaSubset.of(system, theta_indices)
    decomposition = residue_classes(system, theta)
    violations: list[Violation] = []
    violations += check_partition(system, theta, decomposition)
    violations += check_class_invariance(system, theta, decomposition)
    violations += check_triple_equivalence(system, theta, decomposition)
    word_violations, max_len = check_connect_words(system, theta, decomposition)
    violations += word_violations
    violations += check_partition_oracle(system, theta, decomposition)
    violations += check_pi1(system, theta)
    violations += check_long_theta(system, theta, decomposition)
    violations += check_full_transitivity(system, theta)
    violations += check_sphere_basis(system, theta)
    if theta.is_empty:  # duality is theta independent; run once per kind
        violations += check_duality_equivariance(system, theta)
    return InstanceResult(
        kind=str(kind),
        theta=tuple(sorted(theta_indices)),
        nonzero_classes=len(decomposition.nonzero_classes),
        max_word_length=max_len,
        violations=tuple(violations),
    )


def _worker(args: tuple[str, tuple[int, ...]]) -> InstanceResult:
    kind_text, theta = args
    return run_instance(RootSystemKind.parse(kind_text), theta)


@dataclass(frozen=True)
class SurveyReport:
    config: SurveyConfig
    results: tuple[InstanceResult, ...]

    @property
    def violations(self) -> tuple[Violation, ...]:
        return tuple(v for r in self.results for v in r.violations)

    @property
    def max_word_length(self) -> int:
        return max((r.max_word_length for r in self.results), default=0)

    @property
    def total_classes(self) -> int:
        return sum(r.nonzero_classes for r in self.results)

    def as_dict(self) -> dict:
        return {
            "schema": "flagtop/verify-report-v1",
            "grid": {
                "families": list(self.config.families),
                "max_rank": self.config.max_rank,
                "theta_mode": self.config.theta_mode,
            },
            "totals": {
                "instances": len(self.results),
                "nonzero_classes": self.total_classes,
                "max_word_length": self.max_word_length,
                "violations": len(self.violations),
            },
            "violations": [v.as_dict() for v in self.violations],
            "instances": [r.as_dict() for r in self.results],
        }


def run_survey(config: SurveyConfig) -> SurveyReport:
    """Execute the configured grid, in parallel when jobs > 1; results are
    reduced in sorted instance order either way."""
    tasks: list[tuple[str, tuple[int, ...]]] = []
    for kind in enumerate_kinds(config.families, config.max_rank):
        for theta in enumerate_thetas(config, kind.rank):
            tasks.append((str(kind), tuple(sorted(theta))))
    tasks.sort()
    if config.jobs == 1 or len(tasks) <= 1:
        results = [_worker(t) for t in tasks]
    else:
        with ProcessPoolExecutor(max_workers=config.jobs) as pool:
            results = list(pool.map(_worker, tasks, chunksize=4))
    results.sort(key=lambda r: (r.kind, r.theta))
    return SurveyReport(config=config, results=tuple(results))
