//! Exact computational commutative algebra for graded affine algebras:
//! Groebner bases, Hilbert series, graded minimal free resolutions,
//! algorithmic Noether normalization, and mechanical verification of
//! generator-count bounds for Cohen-Macaulay ideals of height at most two.
//!
//! The girth of a class of ideals is the supremum of their minimal
//! generator counts; this crate computes the invariants the bounds are
//! stated in (dimension, depth, multiplicity e, type tau, Noether
//! normalization degree N, parameter degree) and checks every bound as an
//! exact integer inequality.

pub mod bounds;
pub mod casefile;
pub mod corpus;
pub mod error;
pub mod field;
pub mod groebner;
pub mod hilbert;
pub mod linalg;
pub mod modules;
pub mod monomial;
pub mod noether;
pub mod parse;
pub mod poly;
pub mod resolve;
pub mod ring;

pub use bounds::{
    bound_via_intermediate, forster_swan_bound, global_bound, scheme_intersection_bound,
    verify_local_bounds, BoundCheck, CheckName, LocalVerdict, SchemeVariant,
};
pub use casefile::{parse_case, CaseFile, ExpectKey};
pub use corpus::{
    evaluate_case, generate_cases, profile_algebra, run_corpus, AlgebraProfile, CaseKind,
    CaseRecord, CaseStatus, CorpusReport, CorpusSource, GeneratorSpec, RunConfig,
};
pub use error::{Error, Result};
pub use field::{Field, Scalar};
pub use groebner::{
    buchberger, eliminate, ideal_membership, membership_cofactors, normal_form, GroebnerBasis,
    Ideal,
};
pub use hilbert::{
    leading_ideal, standard_monomial_counts, standard_monomials_all, HilbertSeries, IntPoly,
    MonomialIdeal, QuotientPresentation,
};
pub use modules::{GradedFreeModule, HomogeneousMatrix, ModVec};
pub use monomial::{monomials_of_degree, Monomial, MonomialOrder};
pub use noether::{
    build_w, express_in_basis, invariant_chain, noether_position, parameter_degree_upper,
    InvariantChain, NoetherData, ParameterTrial, WData,
};
pub use parse::parse_polynomial;
pub use poly::{is_monic_in, Polynomial, Substitution};
pub use resolve::{
    cm_type, depth_and_pd, free_resolution_of_quotient, free_resolution_of_submodule,
    is_cohen_macaulay, minimal_generator_count, minimal_generators, mu_cokernel,
    mu_cokernel_by_trim, mu_in_quotient, syzygy_matrix, transpose_ext1_generators,
    GradedResolution, ResolveConfig,
};
pub use ring::{PolyRing, RingRc};
