"""Exact root-system combinatorics of flag manifolds: isotropy residue
classes, second-homotopy coordinates, and exhaustive rigidity surveys."""

from .errors import (
    ContainmentError,
    EquivalenceMismatchError,
    FlagtopError,
    InvalidKindError,
    IsotropyRootError,
    NoConnectingWordError,
    NoLongRootError,
    NonreducedSystemError,
    NotARootError,
)
from .homotopy import (
    GroupPreset,
    Pi1Report,
    RigidityReport,
    SphereClass,
    StandardLattices,
    all_classes_rigid,
    dual_class_equality,
    dual_isotropy_lattice,
    full_transitivity,
    long_theta_criterion,
    pi1_report,
    pi2_basis,
    rigidity_report,
    same_homotopy_class,
    sphere_class,
    standard_lattices,
    sum_relation,
)
from .isotropy import (
    IsotropyDecomposition,
    ResidueClass,
    isometry_witness,
    isotropy_lattice,
    metric_parameter_count,
    residue_classes,
    same_invariant_geometry,
)
from .lattices import (
    IntegerLattice,
    QuotientGroup,
    ScaledLattice,
    hnf,
    member,
    quotient,
    quotient_scaled,
    snf,
)
from .roots import (
    LengthClass,
    Root,
    RootFamily,
    RootSystem,
    RootSystemKind,
    build_root_system,
    dual,
    dual_system,
    length_class,
    parse_kind,
)
from .weyl import (
    ReflectionWord,
    ThetaSubset,
    apply_word,
    connect_word,
    in_isotropy,
    long_neighbor,
    reflect,
    theta_of,
    w_theta_orbit,
)

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
