use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("ruler must have at least one mark")]
    EmptyRuler,
    #[error("marks must be distinct (duplicate {0})")]
    DuplicateMark(i64),
    #[error("mark {mark} lies outside Z_{modulus}")]
    MarkOutOfRange { mark: u64, modulus: u64 },
    #[error("modulus must be positive")]
    ZeroModulus,
    #[error("modulus {modulus} is not divisible by order {k}")]
    ModulusNotDivisible { modulus: u64, k: usize },
    #[error("modulus {modulus} is smaller than 2L+1 = {required}")]
    ModulusTooSmall { modulus: u64, required: u64 },
    #[error("ruler is not a resolvable Golomb ruler")]
    NotRgr,
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("{g} is not a primitive root modulo {p}")]
    NotPrimitiveRoot { p: u64, g: u64 },
    #[error("order {0} is too small for this construction")]
    OrderTooSmall(usize),
    #[error("not a permutation of 1..={0}")]
    NotPermutation(usize),
    #[error("permutation is not a Costas permutation")]
    NotCostas,
    #[error("construction produced an invalid ruler: {0}")]
    VerificationFailed(String),
    #[error("unsupported group: {0}")]
    UnsupportedGroup(String),
    #[error("invalid group element: {0}")]
    InvalidElement(String),
    #[error("subset of size {got} given, expected |G|/|H| = {expected}")]
    SizeMismatch { expected: usize, got: usize },
    #[error("{0} is not a prime power")]
    NotPrimePower(u64),
    #[error("field order {0} exceeds the supported maximum of 1024")]
    FieldTooLarge(u64),
    #[error("requested {requested} squares but only {max} MOLS of this order exist")]
    TooManyRequested { requested: usize, max: usize },
    #[error("block size {k} exceeds field order {w}")]
    KTooLarge { k: usize, w: u64 },
    #[error("base block is not a resolvable modular Golomb ruler")]
    NotRmgr,
    #[error("subset is not a group Golomb ruler")]
    NotGgr,
    #[error("base block {block} is not a transversal of the residues mod {k}")]
    NotTransversal { block: usize, k: usize },
    #[error("pair {{{0}, {1}}} is covered more than once")]
    PairCovered(u64, u64),
    #[error("wrong parameters: {0}")]
    WrongParameters(String),
    #[error("non-collinearity is not an equivalence with classes of the expected size")]
    Nonextendable,
    #[error("configuration is not symmetric (b = {b}, v = {v})")]
    NotSymmetric { v: usize, b: usize },
    #[error("matching covered only {matched} of {blocks} blocks")]
    MatchingIncomplete { matched: usize, blocks: usize },
    #[error("invalid configuration: {0}")]
    InvalidConfiguration(String),
    #[error("(k, w) = ({k}, {w}) is outside the classified range")]
    OutOfRange { k: usize, w: u64 },
    #[error("stored data failed verification: {0}")]
    BadData(String),
    #[error(
        "node budget exhausted after {nodes} nodes; all lengths below {proven_lower} are excluded"
    )]
    BudgetExceeded {
        proven_lower: u64,
        best_known: Option<crate::rulers::Ruler>,
        nodes: u64,
    },
    #[error("no witness available: {0}")]
    NoWitness(String),
}
