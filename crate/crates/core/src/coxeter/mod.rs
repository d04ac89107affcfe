//! Exact finite Weyl group arithmetic.
//!
//! Root systems are built from Cartan matrices; group elements are integer
//! matrices acting on the root lattice in simple-root coordinates. Simple
//! root indices are 1-based throughout the public API.

mod cartan;
mod element;
mod group;
mod matrix;
mod parabolic;

pub use cartan::{CartanDatum, Component, RootType, DEFAULT_CAP};
pub use element::WeylElement;
pub use group::{ElemId, WeylGroup};
pub use matrix::IntMatrix;
pub use parabolic::{CosetSide, ParabolicSubset, RepFlavor};
