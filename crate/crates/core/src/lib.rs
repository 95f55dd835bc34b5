//! Unit and disjoint unit d-interval representations of interval graphs.
//!
//! The crate covers the whole pipeline around multiple-interval models of
//! interval graphs:
//!
//! * [`graph`]: simple graphs, induced stars, maximal claws and E-claws.
//! * [`interval`]: exact closed intervals, d-interval representations,
//!   verification and normalization.
//! * [`recognition`]: interval graph recognition (PQ-tree) and proper
//!   orderings of unit interval graphs (LexBFS+).
//! * [`construction`]: the claw-splitting transform turning an interval
//!   representation of a `K_{1,2d+1}`-free graph into a unit d-interval one.
//! * [`unitizer`]: unit coordinates for a claw-free family of intervals.
//! * [`split`]: exhaustive vertex-split search deciding (disjoint) unit
//!   2-interval membership.
//! * [`generators`]: named graphs and seeded random instances.
//!
//! Everything is `no_std` with `alloc`. Coordinates are exact rationals.

#![no_std]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod construction;
pub mod generators;
pub mod graph;
pub mod interval;
pub mod rational;
pub mod recognition;
pub mod split;
pub mod unitizer;

pub use graph::{Graph, GraphError, StarWitness, Vertex};
pub use interval::{DIntervalRep, Interval, VerifyReport};
pub use rational::Rational;
