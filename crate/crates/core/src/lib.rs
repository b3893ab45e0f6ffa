pub mod caps;
pub mod certificate;
pub mod constructions;
pub mod dicolour;
pub mod error;
pub mod extraction;
pub mod format;
pub mod graph;
pub mod listcolour;
pub mod lists;
pub mod orientation;
pub mod rng;
pub mod probability;
pub mod manifest;
pub mod cli;
