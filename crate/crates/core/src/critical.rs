//! Minimal winning coalitions, minimal critical coalitions, real gaining
//! coalitions and minimal critical vectors.
//!
//! Reported sets are ordered by table index (player 1 most significant);
//! coalitions use the index of their characteristic profile.

use crate::game::Layout;
use crate::{Coalition, Error, JKGame, Profile, Rational, Result, SimpleGame, TUGame};

/// Largest table the definitional oracle will scan (`3^9`).
pub const ORACLE_CAP: usize = 19_683;

/// A minimal critical vector together with its worth.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CriticalVector {
    pub index: usize,
    pub profile: Profile,
    pub worth: u32,
}

/// The minimal critical vectors of a game, in table-index order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct McvSet {
    n: usize,
    j: u32,
    entries: Vec<CriticalVector>,
}

impl McvSet {
    fn from_indices(game: &JKGame, indices: impl IntoIterator<Item = usize>) -> Self {
        let layout = game.layout();
        McvSet {
            n: game.n(),
            j: game.j(),
            entries: indices
                .into_iter()
                .map(|index| CriticalVector {
                    index,
                    profile: layout.profile(index),
                    worth: game.value_at(index),
                })
                .collect(),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn j(&self) -> u32 {
        self.j
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, CriticalVector> {
        self.entries.iter()
    }

    pub fn profiles(&self) -> Vec<Profile> {
        self.entries.iter().map(|e| e.profile.clone()).collect()
    }

    pub fn contains(&self, x: &Profile) -> bool {
        self.worth_of(x).is_some()
    }

    pub fn worth_of(&self, x: &Profile) -> Option<u32> {
        self.entries
            .iter()
            .find(|e| &e.profile == x)
            .map(|e| e.worth)
    }
}

impl<'a> IntoIterator for &'a McvSet {
    type Item = &'a CriticalVector;
    type IntoIter = std::slice::Iter<'a, CriticalVector>;

    fn into_iter(self) -> Self::IntoIter {
        self.entries.iter()
    }
}

/// `{S : v(S) = 1, v(T) = 0 for all T ⊊ S}`.
pub fn minimal_winning_coalitions(v: &SimpleGame) -> Vec<Coalition> {
    v.winning_coalitions()
        .into_iter()
        .filter(|&s| s.members().into_iter().all(|p| !v.is_winning(s.without(p))))
        .collect()
}

fn sorted_masks(v: &TUGame, keep: impl Fn(u32) -> bool) -> Vec<Coalition> {
    let mut masks: Vec<u32> = (1..1u32 << v.n()).filter(|&m| keep(m)).collect();
    masks.sort_by_key(|&m| v.mask_order_key(m));
    masks.into_iter().map(|m| v.coalition_of_mask(m)).collect()
}

/// Nonempty coalitions in which every member is crucial: `v(S) > v(S∖{i})`.
pub fn minimal_critical_coalitions(v: &TUGame) -> Vec<Coalition> {
    sorted_masks(v, |mask| {
        (0..v.n())
            .filter(|&p| mask & (1 << p) != 0)
            .all(|p| v.worth_by_mask(mask) > v.worth_by_mask(mask & !(1 << p)))
    })
}

/// Nonempty coalitions whose worth exceeds that of every proper subset, `∅` included.
pub fn real_gaining_coalitions(v: &TUGame) -> Vec<Coalition> {
    sorted_masks(v, |mask| {
        Coalition::from_mask(mask)
            .proper_subsets()
            .all(|t| v.worth_by_mask(mask) > v.worth_by_mask(t.mask()))
    })
}

/// Coalitions paired with their worths.
pub fn with_worths(v: &TUGame, coalitions: &[Coalition]) -> Vec<(Coalition, Rational)> {
    coalitions
        .iter()
        .map(|&s| (s, v.worth(s).clone()))
        .collect()
}

fn is_minimal_critical_at(game: &JKGame, layout: &Layout, index: usize) -> bool {
    let worth = game.value_at(index);
    worth > 0
        && (0..layout.n()).all(|i| match layout.down(index, i) {
            Some(below) => game.value_at(below) < worth,
            None => true,
        })
}

/// Profiles with `v(x) > 0` and `v(x) > v(x↓i)` for every nonzero coordinate.
pub fn minimal_critical_vectors(v: &JKGame) -> McvSet {
    let layout = v.layout();
    McvSet::from_indices(
        v,
        (0..layout.len()).filter(|&index| is_minimal_critical_at(v, layout, index)),
    )
}

/// Definitional check: `v(x) > v(x')` for every `x' ≤ x`, `x' ≠ x`, by a full
/// scan of the down-set. Limited to [`ORACLE_CAP`] profiles.
pub fn minimal_critical_vectors_oracle(v: &JKGame) -> Result<McvSet> {
    let layout = v.layout();
    if layout.len() > ORACLE_CAP {
        return Err(Error::OracleCapExceeded {
            size: layout.len(),
            cap: ORACLE_CAP,
        });
    }
    let profiles: Vec<Profile> = (0..layout.len()).map(|i| layout.profile(i)).collect();
    let found = (1..layout.len()).filter(|&index| {
        let x = &profiles[index];
        let worth = v.value_at(index);
        profiles
            .iter()
            .enumerate()
            .filter(|&(other, y)| other != index && y.le(x))
            .all(|(other, _)| worth > v.value_at(other))
    });
    Ok(McvSet::from_indices(v, found))
}

/// Whether `x ∈ MCV(v)` is critical for `player` (label) at output level `tau`:
/// `v(x) ≥ τ > v(x↓i)`.
pub fn is_critical_for(v: &JKGame, x: &Profile, player: usize, tau: u32) -> Result<bool> {
    let pos = v.position(player)?;
    let index = v.layout().index(x)?;
    if tau == 0 || tau >= v.k() {
        return Err(Error::LevelOutOfRange {
            level: tau,
            max: v.k() - 1,
        });
    }
    if !is_minimal_critical_at(v, v.layout(), index) {
        return Err(Error::NotMinimalCritical(x.clone()));
    }
    let Some(below) = v.layout().down(index, pos) else {
        return Err(Error::ZeroLevelPlayer {
            player,
            profile: x.clone(),
        });
    };
    Ok(v.value_at(index) >= tau && v.value_at(below) < tau)
}
