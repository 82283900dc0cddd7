use super::{Coalition, JKGame, TUGame, MAX_COALITION_PLAYERS};
use crate::{Error, Result};

/// A monotone `{0,1}`-valued coalition function with `v(∅) = 0`.
///
/// `v(N) = 1` is not required, so the class is closed under taking subgames.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimpleGame {
    n: usize,
    winning: Vec<bool>,
}

/// Index of `x^S` in a two-level table, given the positional mask of `S`.
pub(crate) fn mask_to_profile_index(mask: u32, n: usize) -> usize {
    (0..n)
        .filter(|&p| mask & (1 << p) != 0)
        .map(|p| 1usize << (n - 1 - p))
        .sum()
}

pub(crate) fn check_players(n: usize) -> Result<()> {
    if n > MAX_COALITION_PLAYERS {
        Err(Error::TooManyPlayers(n))
    } else {
        Ok(())
    }
}

impl SimpleGame {
    /// The upward closure of the given coalitions; minimal generators are enough.
    pub fn from_winning<I: IntoIterator<Item = Coalition>>(
        n: usize,
        generators: I,
    ) -> Result<Self> {
        check_players(n)?;
        let grand = Coalition::grand(n);
        let mut winning = vec![false; 1 << n];
        for s in generators {
            if let Some(p) = s.members().into_iter().find(|&p| p > n) {
                return Err(Error::UnknownPlayer(p));
            }
            if s.is_empty() {
                return Err(Error::EmptyWinningCoalition);
            }
            debug_assert!(s.is_subset_of(grand));
            winning[s.mask() as usize] = true;
        }
        for mask in 1..winning.len() {
            if !winning[mask] {
                winning[mask] = (0..n)
                    .filter(|&p| mask & (1 << p) != 0)
                    .any(|p| winning[mask & !(1 << p)]);
            }
        }
        Ok(SimpleGame { n, winning })
    }

    /// Builds the game from its characteristic function, which must already be monotone.
    pub fn from_fn(n: usize, v: impl Fn(Coalition) -> bool) -> Result<Self> {
        check_players(n)?;
        let winning: Vec<bool> = (0..1u32 << n).map(|m| v(Coalition::from_mask(m))).collect();
        if winning[0] {
            return Err(Error::EmptyWinningCoalition);
        }
        for mask in 0..winning.len() {
            for p in 0..n {
                let sup = mask | 1 << p;
                if winning[mask] && !winning[sup] {
                    return Err(Error::NotUpwardClosed {
                        winning: Coalition::from_mask(mask as u32),
                        superset: Coalition::from_mask(sup as u32),
                    });
                }
            }
        }
        Ok(SimpleGame { n, winning })
    }

    /// Reads a `(2,2)` game as a simple game.
    pub fn from_binary_game(game: &JKGame) -> Result<Self> {
        if game.j() != 2 || game.k() != 2 {
            return Err(Error::NotBinaryGame {
                j: game.j(),
                k: game.k(),
            });
        }
        let n = game.n();
        check_players(n)?;
        let winning = (0..1u32 << n)
            .map(|mask| game.value_at(mask_to_profile_index(mask, n)) == 1)
            .collect();
        Ok(SimpleGame { n, winning })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn is_winning(&self, s: Coalition) -> bool {
        s.is_subset_of(Coalition::grand(self.n)) && self.winning[s.mask() as usize]
    }

    /// All winning coalitions, in profile-index order.
    pub fn winning_coalitions(&self) -> Vec<Coalition> {
        let mut all: Vec<Coalition> = (0..self.winning.len())
            .filter(|&m| self.winning[m])
            .map(|m| Coalition::from_mask(m as u32))
            .collect();
        all.sort_by_key(|s| s.profile_index(self.n));
        all
    }

    /// The `(2,2)` simple game with `v̂(x^S) = v(S)`.
    pub fn to_binary_game(&self) -> JKGame {
        let mut table = vec![0; 1 << self.n];
        for mask in 0..self.winning.len() {
            table[mask_to_profile_index(mask as u32, self.n)] = u32::from(self.winning[mask]);
        }
        JKGame::from_table(self.n, 2, 2, table).expect("simple games embed as valid (2,2) games")
    }

    /// The same game read as a TU game with worths 0 and 1.
    pub fn to_tu(&self) -> TUGame {
        TUGame::from_fn(self.n, |s| crate::int(u32::from(self.is_winning(s))))
            .expect("simple games are valid TU games")
    }
}
