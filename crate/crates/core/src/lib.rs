//! Subdivision detection for small digraph patterns.
//!
//! The library answers questions of the form "does this digraph contain a
//! subdivision of that fixed pattern?", where a subdivision replaces each
//! arc of the pattern by a directed path of length at least one, all paths
//! internally disjoint.
//!
//! It provides:
//!
//! - a strict-digraph core with the structural primitives the rest builds
//!   on ([`digraph`]);
//! - disjoint-path routines in the style of Menger's theorem, returning
//!   either the requested paths or a separation certificate ([`menger`]);
//! - polynomial-time detectors for every pattern family with a known
//!   detection procedure ([`detectors`]);
//! - a registry of named small patterns and a tractability classifier for
//!   all digraphs on four vertices ([`patterns`]);
//! - hardness gadgets that embed 2-linkage instances into pattern
//!   subdivision questions ([`gadgets`]);
//! - an exponential brute-force oracle used to cross-validate everything
//!   at small scale ([`oracle`]), and a harness that drives the
//!   cross-checks ([`harness`]).
//!
//! All public routines are deterministic: identical inputs (and seeds)
//! produce identical outputs, including when the `parallel` feature fans
//! candidate enumeration out across threads.

pub mod cli;
pub mod detectors;
pub mod digraph;
pub mod gadgets;
pub mod harness;
pub mod io;
pub mod menger;
pub mod oracle;
pub mod par;
pub mod patterns;

pub use digraph::{DiPath, Digraph, Separation, SubdivisionWitness, Vertex};
