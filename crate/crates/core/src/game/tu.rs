use std::collections::HashMap;

use num_traits::Zero;

use super::simple::{check_players, mask_to_profile_index};
use super::{Coalition, JKGame};
use crate::{Error, Rational, Result};

/// A coalition function with rational worths and `v(∅) = 0`.
///
/// Monotonicity is not required; it is detected at construction and exposed
/// through [`TUGame::is_monotone`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TUGame {
    n: usize,
    /// Indexed by positional mask (bit `p` for position `p`).
    worth: Vec<Rational>,
    labels: Vec<usize>,
    monotone: bool,
}

impl TUGame {
    pub fn from_fn(n: usize, v: impl Fn(Coalition) -> Rational) -> Result<Self> {
        check_players(n)?;
        let worth = (0..1u32 << n).map(|m| v(Coalition::from_mask(m))).collect();
        Self::from_worths(n, worth)
    }

    /// `worth[mask]` is the worth of the coalition with that bitmask.
    pub fn from_worths(n: usize, worth: Vec<Rational>) -> Result<Self> {
        check_players(n)?;
        if worth.len() != 1 << n {
            return Err(Error::IncompleteWorthTable(Coalition::from_mask(
                worth.len().min((1 << n) - 1) as u32,
            )));
        }
        Self::build(n, worth, (1..=n).collect())
    }

    /// Every nonempty coalition must be present; the empty one may be omitted.
    pub fn from_map(n: usize, worths: &HashMap<Coalition, Rational>) -> Result<Self> {
        check_players(n)?;
        if let Some(s) = worths.keys().find(|s| s.max_member() > n) {
            return Err(Error::UnknownPlayer(s.max_member()));
        }
        let mut order: Vec<Coalition> = (1..1u32 << n).map(Coalition::from_mask).collect();
        order.sort_by_key(|s| (s.len(), s.members()));
        if let Some(missing) = order.into_iter().find(|s| !worths.contains_key(s)) {
            return Err(Error::IncompleteWorthTable(missing));
        }
        let worth = (0..1u32 << n)
            .map(|m| {
                worths
                    .get(&Coalition::from_mask(m))
                    .cloned()
                    .unwrap_or_else(Rational::zero)
            })
            .collect();
        Self::build(n, worth, (1..=n).collect())
    }

    /// The TU game `v̂(S) = v(x^S)` of a `(2,k)` game.
    pub fn from_two_level(game: &JKGame) -> Result<Self> {
        if game.j() != 2 {
            return Err(Error::NotTwoLevelInput(game.j()));
        }
        let n = game.n();
        check_players(n)?;
        let worth = (0..1u32 << n)
            .map(|mask| crate::int(game.value_at(mask_to_profile_index(mask, n))))
            .collect();
        Self::build(n, worth, game.labels().to_vec())
    }

    pub(crate) fn build(n: usize, worth: Vec<Rational>, labels: Vec<usize>) -> Result<Self> {
        if !worth[0].is_zero() {
            return Err(Error::NonZeroEmptyCoalition);
        }
        let monotone = (0..worth.len()).all(|mask| {
            (0..n)
                .filter(|&p| mask & (1 << p) != 0)
                .all(|p| worth[mask & !(1 << p)] <= worth[mask])
        });
        Ok(TUGame {
            n,
            worth,
            labels,
            monotone,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn labels(&self) -> &[usize] {
        &self.labels
    }

    pub fn is_monotone(&self) -> bool {
        self.monotone
    }

    /// Worth of a coalition given by player labels. Players outside the game contribute nothing.
    pub fn worth(&self, s: Coalition) -> &Rational {
        &self.worth[self.positional_mask(s) as usize]
    }

    /// Worth by positional mask.
    pub fn worth_by_mask(&self, mask: u32) -> &Rational {
        &self.worth[mask as usize]
    }

    pub fn worths(&self) -> &[Rational] {
        &self.worth
    }

    pub fn is_zero(&self) -> bool {
        self.worth.iter().all(Zero::is_zero)
    }

    pub(crate) fn positional_mask(&self, s: Coalition) -> u32 {
        self.labels
            .iter()
            .enumerate()
            .filter(|(_, &l)| s.contains(l))
            .fold(0, |mask, (p, _)| mask | 1 << p)
    }

    /// Converts a positional mask back to a coalition of labels.
    pub fn coalition_of_mask(&self, mask: u32) -> Coalition {
        Coalition::from_members(
            (0..self.n)
                .filter(|&p| mask & (1 << p) != 0)
                .map(|p| self.labels[p]),
        )
    }

    /// Sort key matching the profile-index order of `(2,·)` games.
    pub(crate) fn mask_order_key(&self, mask: u32) -> usize {
        mask_to_profile_index(mask, self.n)
    }

    fn position(&self, label: usize) -> Result<usize> {
        self.labels
            .iter()
            .position(|&l| l == label)
            .ok_or(Error::UnknownPlayer(label))
    }

    /// Restriction to the players in `s` (labels), preserving their labels.
    pub fn subgame(&self, s: Coalition) -> Result<TUGame> {
        for label in s.members() {
            self.position(label)?;
        }
        let kept: Vec<usize> = (0..self.n)
            .filter(|&p| s.contains(self.labels[p]))
            .collect();
        Ok(self.restrict(&kept))
    }

    /// `v_{-i}`.
    pub fn remove_player(&self, label: usize) -> Result<TUGame> {
        let pos = self.position(label)?;
        let kept: Vec<usize> = (0..self.n).filter(|&p| p != pos).collect();
        Ok(self.restrict(&kept))
    }

    fn restrict(&self, kept: &[usize]) -> TUGame {
        let worth = (0..1u32 << kept.len())
            .map(|sub| {
                let mask = kept
                    .iter()
                    .enumerate()
                    .filter(|(q, _)| sub & (1 << q) != 0)
                    .fold(0u32, |m, (_, &p)| m | 1 << p);
                self.worth[mask as usize].clone()
            })
            .collect();
        TUGame::build(
            kept.len(),
            worth,
            kept.iter().map(|&p| self.labels[p]).collect(),
        )
        .expect("restriction keeps v(∅) = 0")
    }
}
