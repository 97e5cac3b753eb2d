use thiserror::Error;

use crate::triple::Triple;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("vertex index must be 1, 2 or 3, got {0}")]
    InvalidVertex(u8),

    #[error("unknown group letter `{0}` (expected mu1, mu2, mu3, swap12, swap13 or swap23)")]
    InvalidLetter(String),

    #[error("not a permutation of {{1,2,3}}: {0:?}")]
    InvalidPermutation([u8; 3]),

    #[error("triple {0} has a negative entry; expected x, y, z >= 0")]
    NegativeEntry(Triple),

    #[error("triple {0} is cluster-acyclic and has no fundamental representative")]
    NotCyclic(Triple),

    #[error("m-/m+ need x, y >= 2, got ({x}, {y})")]
    BandDomain { x: f64, y: f64 },

    #[error("point {0:?} is a singular point of V(4)")]
    SingularPoint([f64; 3]),

    #[error("Markov constant {constant} of {point:?} is outside [0, 4]")]
    ConstantOutOfRange { point: [f64; 3], constant: f64 },

    #[error("point {0:?} lies on no connected component of V(C) for C in [0, 4]")]
    NoComponent([f64; 3]),

    #[error("arrow counts must be non-negative, got Q({r}, {s}, {t})")]
    NegativeArrowCount { r: String, s: String, t: String },

    #[error("mutation at vertex 2 needs r > 0 and s > 0, got Q({r}, {s}, {t})")]
    NoCycleAtVertexTwo { r: String, s: String, t: String },

    #[error("quiver Q({r}, {s}, {t}) is not connected")]
    Disconnected { r: String, s: String, t: String },

    #[error("malformed integer `{0}`")]
    ParseInt(String),
}

pub type Result<T> = std::result::Result<T, Error>;
