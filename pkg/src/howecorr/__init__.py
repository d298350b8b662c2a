"""Exact computation of the Howe correspondence for finite unitary dual
pairs at the Harish-Chandra level: multiplicity tables for pairs of
series, transport of cuspidal supports, reduction of arbitrary series to
the unipotent case, and extremal image labels.  Everything is certified
against a brute-force character-theory oracle for hyperoctahedral groups.
"""

from .errors import InternalCheckError, NonUniqueExtremeError, RankBoundError
from .hyperoctahedral import (
    ClassFunction,
    build_character_table,
    conjugacy_classes,
    decompose,
    group_order,
    induce_class_function,
    linear_character,
    restrict_class_function,
    sn_character_value,
    tensor_label_map,
)
from .lusztig import (
    TRIVIAL_GL,
    CentralizerFactor,
    CuspidalPair,
    CuspidalSupport,
    EigenvalueOrbit,
    GLCuspidal,
    GenericCuspidal,
    LusztigCoordinates,
    OmegaFullDecomposition,
    SemisimpleDescriptor,
    UnipotentCuspidal,
    centralizer_decomposition,
    coordinates_in,
    coordinates_out,
    match_semisimple,
    omega_full,
    orbit_closure,
    transport_series,
    transport_support,
    trivial_descriptor,
    weyl_of_cuspidal_pair,
)
from .partitions import (
    Bipartition,
    Partition,
    bipartition,
    bipartition_dominance_leq,
    bipartitions_of,
    conjugate,
    dominance_leq,
    horizontal_strip_additions,
    partitions_of,
    vertical_strip_additions,
)
from .unipotent import (
    DEFAULT_SGN_CONVENTION,
    MultiplicityTable,
    SeriesLabel,
    TowerContext,
    extremal_images,
    omega_unipotent,
    pieri_induction,
    sgn_twist,
    theta_cuspidal,
    theta_images,
    witt_index_of_cuspidal,
)
from .verify import CheckResult, run_verification

__version__ = "0.1.0"
