//! Combinatorics of blocks in parabolic and singular BGG category O.
//!
//! Blocks `O_λ^μ` are described by a root system together with two subsets of
//! simple roots (the singular stabilizer `B_λ` and the parabolic `B_μ`).
//! Everything computed here lives at that level: Weyl group cosets,
//! Kazhdan-Lusztig polynomials, images of indexed structural modules under
//! translation, Zuckerman, Ringel and Koszul-Ringel functors, coinvariant
//! Hilbert-Poincaré polynomials and Ext¹-quivers.

pub mod blocks;
pub mod coxeter;
pub mod error;
pub mod functor_calculus;
pub mod json;
pub mod klpoly;
pub mod poly;
pub mod quiver;

pub use blocks::{BlockDescriptor, ClassifierFactor, ClassifierSpec, RingelDual, SimpleIndexSet};
pub use coxeter::{CartanDatum, CosetSide, ParabolicSubset, RepFlavor, WeylElement, WeylGroup};
pub use error::{Error, Result};
pub use functor_calculus::{GradedMultiset, IdentityShift, IndexedModule, ModuleKind};
pub use klpoly::KLTable;
pub use poly::GradedPolynomial;
pub use quiver::{QuiverGraph, SelfDualityReport, Verdict};
