//! Path matrices, path spectra and path energies of simple graphs.
//!
//! The path matrix of a graph has, for every pair of distinct vertices, the
//! maximum number of internally vertex-disjoint paths joining them. Its
//! eigenvalues form the path spectrum and the sum of their absolute values is
//! the path energy.
//!
//! | Module | Contents |
//! |--------|----------|
//! | [`graph`], [`graph6`], [`generators`], [`blocks`] | graphs, I/O, families, block structure |
//! | [`disjoint_paths`], [`oracle`] | max-flow path counts and a brute-force cross-check |
//! | [`spectral`] | Jacobi eigensolver, spectra, energies, sign counts |
//! | [`bounds`] | closed-form family spectra and inequality checkers |
//! | [`explorer`] | conjecture scans over graph6 streams |
//! | [`enumerate`] | isomorphism-free corpora of small graphs |

pub mod blocks;
pub mod bounds;
pub mod disjoint_paths;
pub mod enumerate;
pub mod error;
pub mod explorer;
pub mod generators;
pub mod graph;
pub mod graph6;
pub mod oracle;
pub mod spectral;

pub use blocks::{block_decomposition, is_biconnected, BlockDecomposition};
pub use disjoint_paths::{max_disjoint_paths, path_matrix, PathMatrix};
pub use error::{Error, Result};
pub use generators::Family;
pub use graph::Graph;
pub use graph6::{emit_graph6, parse_graph6};
pub use oracle::brute_force_disjoint_paths;
pub use spectral::{
    adjacency_spectrum, graph_energy, path_energy, path_spectral_radius, path_spectrum, symmetric_eigenvalues,
    Spectrum,
};
