//! Bounds on the minimum (terminal) distance spectral radius of trees
//! with a given degree sequence.
//!
//! The crate builds the extremal candidate trees (greedy/BFS trees and
//! generalized Huffman trees), computes distance-based indices (Wiener,
//! terminal Wiener and their vertex-weighted variants), evaluates spectral
//! radii of distance and terminal distance matrices by power iteration,
//! and assembles the closed-form bounds for the `d(a,b)` sequence family
//! together with exhaustive scans and brute-force verification drivers.

#![forbid(unsafe_code)]

pub mod bounds;
pub mod degseq;
pub mod error;
pub mod experiments;
pub mod metrics;
pub mod spectral;
pub mod tree;

pub use bounds::{bounds_for, BoundsReport};
pub use degseq::DegreeSequence;
pub use error::Error;
pub use metrics::{DistanceMatrix, Majorization, TerminalDistanceMatrix};
pub use spectral::SpectralResult;
pub use tree::{GeneratingTuple, RootedTree, Tree, WeightedTree};

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;
