//! Simulation and analysis of generalised Langton's ants.
//!
//! A rule word over `{L, R}` of length `m` drives an ant on an unbounded
//! sparse grid of cell states `{0..m-1}`: the letter selected by the state
//! under the ant decides a quarter turn, the cell increments modulo `m`,
//! and the ant moves one step forward. The crate provides the exact
//! transition system ([`ant`]), online detection and classification of
//! highway behaviour ([`analysis`], [`catalog`]), a deterministic
//! randomized-seed experiment harness ([`experiment`]), and pattern /
//! bitmap I/O ([`pattern`], [`render`]).

pub mod analysis;
pub mod ant;
pub mod catalog;
mod error;
pub mod experiment;
pub mod grid;
pub mod pattern;
pub mod render;
pub mod rule;

pub use analysis::{canonical_rotation, primitive_period, speed, DetectorParams, HighwayReport};
pub use ant::{AntConfiguration, Recorder};
pub use catalog::{Catalog, CatalogEntry};
pub use error::Error;
pub use experiment::{ExperimentPlan, ExperimentStats, TrialOutcome};
pub use grid::{GridConfig, Heading, Point};
pub use pattern::PatternGrid;
pub use rule::{RuleWord, Turn};
