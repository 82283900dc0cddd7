use crate::{Coalition, Profile};
use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("input and output level counts must be at least 2 (got j={j}, k={k})")]
    InvalidLevels { j: u32, k: u32 },
    #[error("table size {size} exceeds the enumeration cap {cap}")]
    CapExceeded { size: String, cap: usize },
    #[error("table has {got} entries, expected {expected}")]
    IncompleteTable { expected: usize, got: usize },
    #[error("the all-zero profile must map to 0 (got {0})")]
    NonZeroAtOrigin(u32),
    #[error("output {level} at {profile} lies outside the output levels")]
    OutOfRangeOutput { profile: Profile, level: u32 },
    #[error("monotonicity violated: v{lower} = {lower_value} > v{upper} = {upper_value}")]
    MonotonicityViolation {
        lower: Profile,
        upper: Profile,
        lower_value: u32,
        upper_value: u32,
    },
    #[error("thresholds must be strictly increasing")]
    NonIncreasingThresholds,
    #[error("expected {expected} thresholds for {k} output levels, got {got}")]
    ThresholdCount { k: u32, expected: usize, got: usize },
    #[error("negative weights produce a non-monotone game: {0}")]
    NegativeWeightNonMonotone(Box<Error>),
    #[error("profile has {got} entries, the game has {expected} players")]
    ProfileDimensionMismatch { expected: usize, got: usize },
    #[error("level {level} is out of range (at most {max})")]
    LevelOutOfRange { level: u32, max: u32 },
    #[error("expected a (2,2) game, got a ({j},{k}) game")]
    NotBinaryGame { j: u32, k: u32 },
    #[error("expected two input levels, got j={0}")]
    NotTwoLevelInput(u32),
    #[error("unknown player {0}")]
    UnknownPlayer(usize),
    #[error("too many players for an explicit coalition table: {0}")]
    TooManyPlayers(usize),
    #[error("the empty coalition must have worth 0")]
    NonZeroEmptyCoalition,
    #[error("the empty coalition cannot be winning")]
    EmptyWinningCoalition,
    #[error("winning set is not upward closed: {winning} wins but {superset} loses")]
    NotUpwardClosed {
        winning: Coalition,
        superset: Coalition,
    },
    #[error("missing worth for coalition {0}")]
    IncompleteWorthTable(Coalition),
    #[error("oracle enumeration limited to {cap} profiles, game has {size}")]
    OracleCapExceeded { size: usize, cap: usize },
    #[error("recursive potential limited to {cap} players, game has {n}")]
    RecursionCapExceeded { n: usize, cap: usize },
    #[error("{0} is not a minimal critical vector")]
    NotMinimalCritical(Profile),
    #[error("player {player} has level 0 in {profile}")]
    ZeroLevelPlayer { player: usize, profile: Profile },
    #[error("the game is trivial (identically zero), normalization is undefined")]
    TrivialGame,
    #[error("games differ in shape: ({0}) vs ({1})")]
    DimensionMismatch(String, String),
    #[error("not a permutation of the player set: {0:?}")]
    NotAPermutation(Vec<usize>),
    #[error("games are not mergeable")]
    NotMergeable,
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
}
