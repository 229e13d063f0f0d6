__version__ = '0.1.0'

from .errors import \
    SarcError,\
    IncompatibleDegreeError,\
    MalformedCycleError,\
    OutOfRangeError,\
    ParameterError,\
    NotTransitiveError,\
    NotSubgroupError,\
    CapacityError,\
    CatalogError

from .permutations import \
    Permutation,\
    identity,\
    parse_cycles,\
    render_cycles,\
    compose,\
    inverse,\
    conjugate,\
    random_permutation

from .permgroup import \
    PermGroup,\
    build_group,\
    group_from_cycles,\
    trivial_group,\
    intersection

from .block_operations import BlockSystem

from .coset_operations import \
    GroupAction,\
    coset_action,\
    action_on_points

from .number_theory import \
    PPart,\
    InequalityInstance,\
    is_prime,\
    p_part,\
    prime_set,\
    factorial_p_part,\
    cyclotomic_value,\
    zsigmondy,\
    lemma44_exponents,\
    lemma44_holds,\
    lemma45_exponents,\
    lemma45_holds

from .inequality_tables import \
    TableRow,\
    SQUARE_BOUND_ROWS,\
    CUBE_BOUND_ROWS,\
    INLINE_CUBE_BOUND_ROWS,\
    table_contradictions

from .maximal_actions import \
    ActionFamily,\
    action_family,\
    symmetric_group,\
    alternating_group,\
    subsets_action,\
    partition_action,\
    affine_subgroup,\
    affine_action,\
    wreath_subgroup,\
    product_action,\
    enumerate_family_actions

from .catalog import \
    CatalogEntry,\
    load_catalog,\
    instantiate

from .orbital_operations import \
    OrbitalDigraph,\
    orbitals,\
    orbital_table,\
    classify_degenerate,\
    export_edge_list,\
    read_edge_list

from .sarc_operations import \
    SArcResult,\
    s_max_criterion,\
    s_max_bruteforce,\
    lemma28_cap,\
    arc_factorization

from .factorizations import \
    FactorizationResult,\
    HomogeneousFactorization,\
    is_factorization,\
    homogeneous_factorizations,\
    verify_factorization_sampling,\
    WreathContext,\
    wreath_projection_check

from .subgroup_lattice import subgroup_classes

from .verifier import Verifier
