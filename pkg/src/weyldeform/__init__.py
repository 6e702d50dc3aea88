"""Exact deformation and classification tools over the first Weyl algebra.

The package computes, in exact rational arithmetic: normal forms and
products of differential operators, extension spaces between the cyclic
modules D/Dp with their stabilized truncated dimensions, the pointed
quiver algebra that pro-represents the deformation problem of the pair
(D/Dd, D/Dt), the classification of its finite-dimensional modules in
low dimension, and certified identifications of the D-modules those
representations induce.  Every isomorphism claim is backed by an
IsoWitness whose defining identities are rechecked by multiplication.
"""

from .weyl import (
    WeylElement,
    WeylSyntaxError,
    add,
    bernstein_degree,
    nf_mul,
    parse_weyl,
    print_weyl,
    scale,
)
from .linalg import (
    QMatrix,
    inverse,
    kernel_basis,
    rank,
    rref,
    solve,
)
from .modules import (
    CyclicModule,
    DEFAULT_MAX_DEGREE,
    HARD_CAP,
    HomBasis,
    IsoWitness,
    PresentedModule,
    WeylLinearSystem,
    as_presented,
    block_decompose,
    clear_caches,
    compose_iso,
    cyclic_form,
    cyclic_identify,
    divide_left,
    hom_search,
    iso_witness,
)
from .ext import (
    Arrow,
    Ext1Result,
    Ext2Result,
    ExtTable,
    FreeResolution,
    ObstructionError,
    PointedAlgebra,
    Relation,
    ext1_dim,
    ext2_dim,
    ext_table,
    hull_trunc_dim,
    hull_unobstructed,
)
from .reps import (
    ClassificationResult,
    Family,
    QuiverForm,
    RelationViolation,
    Representation,
    UnsupportedDimensionError,
    are_conjugate,
    classify,
    evaluate_word,
    find_proper_submodule,
    intertwiners,
    is_indecomposable,
    is_simple,
    match_label,
    quiver_form,
    representative,
    satisfies,
    validate,
)
from .versal import (
    CommutativePoint,
    SpecializationReport,
    STANDARD_DIFFERENTIAL,
    VersalDifferential,
    commutative_specialize,
    cross_certify,
    identify_specialization,
    specialize,
)

__version__ = "0.1.0"

__all__ = [
    "WeylElement",
    "WeylSyntaxError",
    "add",
    "bernstein_degree",
    "nf_mul",
    "parse_weyl",
    "print_weyl",
    "scale",
    "QMatrix",
    "inverse",
    "kernel_basis",
    "rank",
    "rref",
    "solve",
    "CyclicModule",
    "DEFAULT_MAX_DEGREE",
    "HARD_CAP",
    "HomBasis",
    "IsoWitness",
    "PresentedModule",
    "WeylLinearSystem",
    "as_presented",
    "block_decompose",
    "clear_caches",
    "compose_iso",
    "cyclic_form",
    "cyclic_identify",
    "divide_left",
    "hom_search",
    "iso_witness",
    "Arrow",
    "Ext1Result",
    "Ext2Result",
    "ExtTable",
    "FreeResolution",
    "ObstructionError",
    "PointedAlgebra",
    "Relation",
    "ext1_dim",
    "ext2_dim",
    "ext_table",
    "hull_trunc_dim",
    "hull_unobstructed",
    "ClassificationResult",
    "Family",
    "QuiverForm",
    "RelationViolation",
    "Representation",
    "UnsupportedDimensionError",
    "are_conjugate",
    "classify",
    "evaluate_word",
    "find_proper_submodule",
    "intertwiners",
    "is_indecomposable",
    "is_simple",
    "match_label",
    "quiver_form",
    "representative",
    "satisfies",
    "validate",
    "CommutativePoint",
    "SpecializationReport",
    "STANDARD_DIFFERENTIAL",
    "VersalDifferential",
    "commutative_specialize",
    "cross_certify",
    "identify_specialization",
    "specialize",
    "__version__",
]
