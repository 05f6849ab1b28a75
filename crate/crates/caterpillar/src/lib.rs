//! Caterpillar trees through their weighted spines.
//!
//! A caterpillar is a tree that collapses to a path once its leaves are
//! removed. Recording how many leaves hang off each interior vertex of the
//! longest path turns every caterpillar on `N` vertices into an integer
//! vector, and isomorphism into reversal of that vector. This crate walks
//! the correspondence in both directions: enumerating and counting spines,
//! building and recognizing the trees they describe, and cross-checking the
//! counts against brute force over all labeled trees.

pub mod bijections;
pub mod counting;
pub mod enumeration;
pub mod formats;
pub mod graph;
pub mod oracle;
pub mod spine;

pub use counting::{BigCount, CountReport};
pub use graph::{Classification, Graph, IsoCertificate};
pub use spine::{CanonicalSpine, GroupElement, Spine, SpineClassParams};
