//! Combinatorial topology of orientable 3-dimensional small covers.
//!
//! A small cover over a simple 3-polytope `P` is determined by a
//! characteristic function `λ` assigning vectors of GF(2)³ to the facets.
//! This crate decides orientability, finds the orientation-preserving
//! subgroup `G`, classifies the quotient by each involution `g ∈ G` as
//! `#_{k-1} S²×S¹`, and, when some quotient is the 3-sphere, builds the
//! chord diagram and alternating chainmail diagram of the branch link.
//!
//! The crate is `no_std` and only needs `alloc`.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod catalog;
pub mod charfun;
pub mod covers;
pub mod gf2;
pub mod links;
pub mod polytope;

pub use charfun::{CharFunError, CharacteristicFunction, ImageClass, OrientationSubgroup, Side};
pub use covers::{CoverError, EdgeLabeling, InvolutionAnalysis, InvolutionReport, QuotientType, TwoFactor};
pub use gf2::{Gf2Functional, Gf2Mat3, Gf2Vec3};
pub use links::{IntersectionGraph, LinearChordDiagram, LinkDiagram, LinkError};
pub use polytope::{Cycle, Edge, PolytopeError, SimplePolytope3};
