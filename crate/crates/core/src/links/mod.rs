//! Chord diagrams of Hamiltonian cycles and the chainmail links they encode.
//!
//! Cutting a Hamiltonian cycle open at one edge numbers the vertices
//! `1..=2l` along a path. The `l` remaining edges become chords; two of them
//! interleave when exactly one endpoint of one lies between the endpoints of
//! the other. The branch link of the involution is the chainmail link of the
//! interleaving graph: one unknot per chord, clasped with each interleaving
//! partner, with linking number ±1.

mod chord;
mod diagram;

use core::fmt;

pub use chord::{
    chord_diagram, chord_diagram_from, intersection_graph, linking_matrix_from_graph, Chord,
    IntersectionGraph, LinearChordDiagram,
};
pub use diagram::{
    chainmail_diagram, verify_alternating, AlternationViolation, Crossing, GaussEntry, LinkComponent,
    LinkDiagram, PdDefect,
};

use crate::charfun::CharFunError;
use crate::polytope::Edge;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LinkError {
    EdgeNotInCycle(Edge),
    /// Two chords on the same side interleave.
    BipartitenessBreach { a: usize, b: usize },
    /// Over/under constraints are inconsistent at this crossing.
    AlternationFailure { crossing: usize },
    /// The diagram does not match the intersection graph it was built from.
    InconsistentInput,
    MalformedPd(PdDefect),
    CharFun(CharFunError),
}

impl fmt::Display for LinkError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::EdgeNotInCycle(e) => write!(f, "edge {e} does not lie on the Hamiltonian cycle"),
            Self::BipartitenessBreach { a, b } => {
                write!(f, "chords {a} and {b} interleave but lie on the same side")
            }
            Self::AlternationFailure { crossing } => {
                write!(f, "no alternating over/under choice at crossing {crossing}")
            }
            Self::InconsistentInput => write!(f, "intersection graph and chord diagram disagree"),
            Self::MalformedPd(d) => write!(f, "malformed PD code: {d}"),
            Self::CharFun(e) => e.fmt(f),
        }
    }
}

impl core::error::Error for LinkError {}

impl From<CharFunError> for LinkError {
    fn from(e: CharFunError) -> Self {
        Self::CharFun(e)
    }
}
