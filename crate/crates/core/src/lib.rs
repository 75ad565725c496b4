//! Toric ideals of log-linear model matrices and the algebra of merging
//! model parameters.
//!
//! The crate is `no_std` and needs only `alloc`. All arithmetic is exact:
//! kernels are computed over arbitrary-precision integers and Gröbner bases
//! over pure binomials with unit coefficients.

#![no_std]

extern crate alloc;

pub mod binomial;
pub mod cluster;
pub mod error;
pub mod groebner;
pub mod lattice;
pub mod models;
pub mod oracle;
pub mod order;
pub mod saturation;

pub use binomial::Binomial;
pub use cluster::{
    chi2_distance, full_dendrogram, ChiSquared, Cluster, ContingencyTable, Dissimilarity,
    MergeStep, MergeTrace, Partition,
};
pub use error::{Error, Result};
pub use groebner::{
    buchberger, ideal_membership, ideal_sum, ideals_equal, linear_part, normal_form,
    IdealPresentation,
};
pub use lattice::{
    build_independence_matrix, dedupe_rows, degrees_of_freedom, integer_kernel, kernels_equal,
    merge_columns, rank, CellLabel, LatticeBasis, ModelMatrix,
};
pub use models::{
    analyze_merge, classify_binary_merge, independence_merge, independence_minors,
    linear_binomial_pairs, repeated_row_decomposition, toric_ideal, verify_merge_theorem, Axis,
    BinaryConfig, MergeReport, MonomialMap, RowDecomposition,
};
pub use oracle::{check_completeness, enumerate_kernel_vectors, OracleConfig};
pub use order::{OrderKind, TermOrder};
pub use saturation::lattice_to_toric;
