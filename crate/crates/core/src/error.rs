use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("zero has no unit root")]
    ZeroRoot,
    #[error("division by zero")]
    DivisionByZero,
    #[error("no primitive {order}-th root of unity in {field}; the scenario cannot contain all e_0-th roots of 1")]
    MissingRootOfUnity { order: u64, field: String },
    #[error("invalid field: {0}")]
    InvalidField(String),
    #[error("unsupported automorphism: {0}")]
    UnsupportedAutomorphism(String),
    #[error("invalid group: {0}")]
    InvalidGroup(String),
    #[error("quotient undefined: subgroup is not normal")]
    NotNormal,
    #[error("not unit-valued: zero cocycle value at ({0}, {1})")]
    NotUnitValued(usize, usize),
    #[error("invalid cocycle: {0}")]
    InvalidCocycle(String),
    #[error("A outside ker(res): the restriction to the subgroup is not cohomologically trivial")]
    OutsideKernelOfRestriction,
    #[error("unsupported: non-cyclic A")]
    NonCyclicSubgroup,
    #[error("cocycle is not constant on A-cosets in the second argument; normalize on A first")]
    CosetConditionViolated,
    #[error("oracle out of range: {0}")]
    OracleOutOfRange(String),
    #[error("oracle supports finite fields only")]
    OracleFiniteOnly,
    #[error("tame index violated: {0} is not invertible in the field")]
    TameIndexViolated(u64),
    #[error("P is not presented with a cyclic decomposition: {0}")]
    NoCyclicDecomposition(String),
    #[error("unsupported tower height {0} (at most 3)")]
    TowerTooHigh(usize),
    #[error("algebra elements belong to different crossed products")]
    MixedParents,
    #[error("scenario invalid: {0}")]
    InvalidScenario(String),
    #[error("action on characters nontrivial: scenario outside analyzer scope")]
    ActionOnCharactersNontrivial,
    #[error("reduce each orbit separately: the permutation action is not transitive")]
    Intransitive,
    #[error("internal inconsistency: {0}")]
    Inconsistent(String),
    #[error("malformed input: {0}")]
    Parse(String),
    #[error("budget exceeded: {0}")]
    Budget(String),
}
