//! Finite groups as Cayley tables, their commuting graphs, and the
//! strong-regularity and isoclinism machinery needed to classify when the
//! transversal commuting graph `T(G)` is strongly regular.
//!
//! Everything here is `no_std` with `alloc`; file formats and the command
//! line live in the `tcg` crate.

#![no_std]

extern crate alloc;

pub mod arith;
pub mod catalog;
pub mod classification;
pub mod commuting;
pub mod constructions;
pub mod graph;
pub mod graph_iso;
pub mod group;
pub mod group_iso;
pub mod isoclinism;
pub mod spec;
pub mod srg;

pub use commuting::{gamma, transversal_graph, CommutingGraph};
pub use graph::Graph;
pub use group::{ElementSubset, FiniteGroup, GroupError, Homomorphism};
pub use spec::GroupSpec;
pub use srg::SrgParams;
