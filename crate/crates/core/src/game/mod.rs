//! Game representations: (j,k) simple games, simple games and TU games,
//! together with the embeddings between them.

mod coalition;
mod jk;
mod layout;
mod profile;
mod simple;
mod tu;

pub use coalition::Coalition;
pub use jk::{JKGame, WeightedRule};
pub use layout::Layout;
pub use profile::Profile;
pub use simple::SimpleGame;
pub use tu::TUGame;

/// Largest player count accepted for coalition-indexed tables.
pub const MAX_COALITION_PLAYERS: usize = 24;
