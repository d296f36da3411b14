"""Exact-arithmetic toolkit for short rational generating functions.

Short GFs are finite sums c * t^a / prod_j (1 - t^(b_j)) with rational c and
integer exponent vectors.  The package constructs them from polyhedra and
linear-arithmetic formulas, implements the operation calculus (evaluation at
one, substitution, Hadamard products, boolean set operations, compression),
encodes boolean circuits as boxed GF pipelines, and runs number-theoretic
demonstrations -- with every operation verifiable against brute-force oracles
at desk scale.  All arithmetic is exact; there is no floating point anywhere.
"""

from .errors import (
    DegenerateDirectionError,
    FormatError,
    NonCanonicalError,
    ResourceLimitError,
    ShortGFError,
    SpecializationError,
    UnboundedPolyhedronError,
    ZeroImageError,
)
from .gfcore import (
    CoefficientTable,
    ExpansionDirection,
    GFTerm,
    LatticeBox,
    ShortGF,
    box_gf,
    canonicalize,
    concat,
    direction_for,
    format_gf,
    from_point_set,
    gf_index,
    gf_length,
    is_canonical,
    monomial,
    normalized,
    oracle_expand,
    parse_gf,
    read_gf,
    scale,
    write_gf,
    zero_gf,
)
from .barvinok import (
    Polyhedron,
    SignedCone,
    cone_gf,
    cone_index,
    enumerate_polytope_points,
    format_polyhedron,
    parse_polyhedron,
    polytope_gf,
    semigroup_gf,
    sign_decompose,
    triangulate_cone,
    vertex_cones,
)
from .calculus import (
    TauMap,
    boolean_combine,
    box_range_gf,
    choose_tau,
    coefficient,
    complement_in_box,
    compress,
    decompress,
    evaluate_at_one,
    gf_equal_on_box,
    hadamard,
    minkowski_oracle,
    multiply,
    norm,
    oracle_project,
    proj_member,
    specialize_vars,
    substitute_monomials,
    support_points,
    tau_hadamard,
)
from .presburger import (
    And,
    LinearAtom,
    Not,
    Or,
    PAFormula,
    QuantBlock,
    conj,
    disj,
    disjointify,
    eval_formula,
    formula_length,
    negate,
    parse_pa,
    qf_to_gf,
)
from .encoder import (
    AlternatingPipeline,
    BooleanCircuit,
    CNF3,
    MinkowskiGadget,
    SegmentEncoding,
    alternating_pipeline,
    and_gate,
    bit_atoms,
    circuit_to_3cnf,
    cnf_to_pa,
    compress_encoding,
    constant_false,
    count_certificates,
    encode_alternating,
    encode_segment,
    even_detector,
    format_circuit,
    format_encoding,
    minkowski_gadget,
    parity3,
    xor_detector,
    parse_circuit,
    parse_encoding,
    segment_gf,
    square_tester,
    violation_projection_by_bits,
)
from .numlab import (
    APWitness,
    Segment,
    ap_threshold,
    count_square_roots,
    count_square_roots_direct,
    divisor_sum,
    factor_semiprime_from_sigma,
    find_ap,
    prime_pi,
    r4_by_tuples,
    r4_coefficients,
    segment_set,
    sieve_primes,
    sigma_from_r4,
    signed_theta_gf,
)

__version__ = "0.1.0"
