use std::path::PathBuf;

use smallcover_core::links::LinkError;
use smallcover_core::polytope::{EdgeDefect, FacetDefect};
use smallcover_core::{CharFunError, CoverError, Gf2Vec3, PolytopeError};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("cannot access {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("cannot parse {path}: {message}")]
    Parse { path: PathBuf, message: String },
    #[error("{0}")]
    Usage(String),
    #[error("invalid polytope: {0}")]
    Polytope(#[from] PolytopeError),
    #[error("invalid characteristic function: {0}")]
    Lambda(CharFunError),
    #[error("not orientable{}", witness_text(.witness))]
    NotOrientable { witness: Option<[usize; 3]> },
    #[error("{0} is not an involution of the orientation subgroup")]
    NotInSubgroup(Gf2Vec3),
    #[error("no involution has a Hamiltonian 2-factor")]
    NotHamiltonian,
    #[error("involution {g} has a {k}-cycle 2-factor, not a Hamiltonian cycle")]
    InvolutionNotHamiltonian { g: Gf2Vec3, k: usize },
    #[error("link construction failed: {0}")]
    Link(#[from] LinkError),
    #[error("internal invariant failed: {0}")]
    Internal(String),
}

fn witness_text(w: &Option<[usize; 3]>) -> String {
    match w {
        Some([i, j, k]) => format!(": λ{} + λ{} = λ{}", i + 1, j + 1, k + 1),
        None => String::new(),
    }
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            Self::Io { .. } | Self::Parse { .. } | Self::Usage(_) => 1,
            Self::Polytope(_) | Self::Lambda(_) | Self::NotInSubgroup(_) | Self::Link(_) | Self::Internal(_) => 2,
            Self::NotOrientable { .. } => 3,
            Self::NotHamiltonian | Self::InvolutionNotHamiltonian { .. } => 4,
        }
    }

    /// One machine-readable line naming the violation and its data.
    pub fn violation(&self) -> String {
        match self {
            Self::Io { path, .. } => format!("io path={}", path.display()),
            Self::Parse { path, .. } => format!("parse path={}", path.display()),
            Self::Usage(m) => format!("usage {m}"),
            Self::Polytope(e) => polytope_violation(e),
            Self::Lambda(e) => lambda_violation(e),
            Self::NotOrientable { witness: Some([i, j, k]) } => {
                format!("not-orientable witness={},{},{}", i + 1, j + 1, k + 1)
            }
            Self::NotOrientable { witness: None } => "not-orientable".into(),
            Self::NotInSubgroup(g) => format!("not-in-subgroup g={g}"),
            Self::NotHamiltonian => "not-hamiltonian".into(),
            Self::InvolutionNotHamiltonian { g, k } => format!("not-hamiltonian g={g} k={k}"),
            Self::Link(e) => format!("link {e}"),
            Self::Internal(m) => format!("internal {m}"),
        }
    }
}

fn polytope_violation(e: &PolytopeError) -> String {
    match e {
        PolytopeError::Empty => "empty".into(),
        PolytopeError::MalformedFacet { facet, defect: FacetDefect::TooShort } => {
            format!("malformed-facet facet={facet} too-short")
        }
        PolytopeError::MalformedFacet { facet, defect: FacetDefect::RepeatedVertex(v) } => {
            format!("malformed-facet facet={facet} repeated-vertex={v}")
        }
        PolytopeError::BadEdge { edge, defect: EdgeDefect::FacetCount(n) } => {
            format!("bad-edge edge={edge} facets={n}")
        }
        PolytopeError::BadEdge { edge, defect: EdgeDefect::Incoherent } => {
            format!("bad-edge edge={edge} incoherent")
        }
        PolytopeError::NonSimple { vertex, facets, degree } => {
            format!("non-simple vertex={vertex} facets={facets} degree={degree}")
        }
        PolytopeError::EulerViolation { vertices, edges, facets } => {
            format!("euler V={vertices} E={edges} F={facets}")
        }
        PolytopeError::DisconnectedSkeleton => "disconnected".into(),
        PolytopeError::UnknownVertex(v) => format!("unknown-vertex vertex={v}"),
    }
}

fn lambda_violation(e: &CharFunError) -> String {
    match e {
        CharFunError::LengthMismatch { expected, found } => {
            format!("length-mismatch expected={expected} found={found}")
        }
        CharFunError::ZeroVector { facet } => format!("zero-vector facet={facet}"),
        CharFunError::StarViolation { vertices } => {
            let vs: Vec<String> = vertices.iter().map(usize::to_string).collect();
            format!("star-violation vertices={}", vs.join(","))
        }
        CharFunError::NotHamiltonian => "not-hamiltonian-cycle".into(),
        other => format!("lambda {other}"),
    }
}

impl From<CharFunError> for CliError {
    fn from(e: CharFunError) -> Self {
        Self::Lambda(e)
    }
}

impl From<CoverError> for CliError {
    fn from(e: CoverError) -> Self {
        match e {
            CoverError::NotOrientable { witness } => Self::NotOrientable { witness },
            CoverError::NotInSubgroup(g) => Self::NotInSubgroup(g),
            CoverError::CharFun(c) => Self::Lambda(c),
            e @ CoverError::InternalInvariantBreach { .. } => Self::Internal(e.to_string()),
        }
    }
}
