use thiserror::Error;

use crate::partition::{CrystalKind, Partition};

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("modulus must be at least 2, got {0}")]
    InvalidModulus(usize),

    #[error("rank must be at least 1, got {0}")]
    InvalidRank(usize),

    #[error("partition {partition} is not {e}-regular")]
    NotRegular { partition: Partition, e: usize },

    #[error("partition {partition} is not {f}-strict")]
    NotStrict { partition: Partition, f: usize },

    #[error("partition {partition} is not in the vertex set of the {kind} crystal")]
    OutsideClass {
        partition: Partition,
        kind: CrystalKind,
    },

    #[error("partition {0} does not have distinct parts")]
    NotDistinct(Partition),

    #[error("partition {0} is not self-conjugate")]
    NotSymmetric(Partition),

    #[error("residue {residue} out of range 0..={max}")]
    ResidueOutOfRange { residue: usize, max: usize },

    #[error("residue modulus {found} does not match crystal modulus {expected}")]
    ModulusMismatch { expected: usize, found: usize },

    #[error("malformed partition literal {0:?}")]
    Parse(String),

    #[error("internal consistency failure: {0}")]
    InternalConsistency(String),
}
