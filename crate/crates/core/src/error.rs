use crate::logic::ParseError;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("invalid atom name `{0}`")]
    InvalidAtom(String),
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error("default {index} is not normal")]
    NotNormal { index: usize },
    #[error("default {index} does not have the shape :G/conj(G)")]
    NotHatShape { index: usize },
    #[error("the world is unsatisfiable")]
    UnsatisfiableWorld,
    #[error("the family is empty")]
    EmptyFamily,
    #[error("family member {index} is listed twice")]
    DuplicateMember { index: usize },
    #[error("family member {sub} is included in member {sup}")]
    InclusionViolation { sub: usize, sup: usize },
    #[error("the default theory does not represent the given family")]
    NotRepresenting,
    #[error("no strong system of distinct representatives was found")]
    NoSsdr,
    #[error("the family contains the inconsistent theory alongside other members")]
    InconsistentMember,
    #[error("index {index} is out of range for a family of {len} members")]
    IndexOutOfRange { index: usize, len: usize },
    #[error("the atom set is empty")]
    EmptyAtomSet,
}
