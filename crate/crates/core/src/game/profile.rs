use std::fmt;
use std::ops::Deref;

use serde::{Deserialize, Serialize};

/// A vector of per-player input levels, player 1 first.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Profile(Vec<u32>);

impl Profile {
    pub fn new(levels: Vec<u32>) -> Self {
        Profile(levels)
    }

    pub fn zeros(n: usize) -> Self {
        Profile(vec![0; n])
    }

    pub fn levels(&self) -> &[u32] {
        &self.0
    }

    pub fn into_levels(self) -> Vec<u32> {
        self.0
    }

    /// Componentwise `self <= other`.
    pub fn le(&self, other: &Profile) -> bool {
        self.0.len() == other.0.len() && self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// Positions (0-based) with a nonzero level.
    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.0
            .iter()
            .enumerate()
            .filter(|(_, &l)| l != 0)
            .map(|(i, _)| i)
    }

    pub fn support_size(&self) -> usize {
        self.0.iter().filter(|&&l| l != 0).count()
    }

    /// `x↓i` for a 0-based position, `None` when the level is already 0.
    pub fn down(&self, i: usize) -> Option<Profile> {
        let mut levels = self.0.clone();
        levels[i] = levels.get(i)?.checked_sub(1)?;
        Some(Profile(levels))
    }

    /// `x↑i` for a 0-based position, `None` at the top level `j-1`.
    pub fn up(&self, i: usize, j: u32) -> Option<Profile> {
        let mut levels = self.0.clone();
        let level = *levels.get(i)?;
        if level + 1 >= j {
            return None;
        }
        levels[i] = level + 1;
        Some(Profile(levels))
    }
}

impl Deref for Profile {
    type Target = [u32];

    fn deref(&self) -> &[u32] {
        &self.0
    }
}

impl From<Vec<u32>> for Profile {
    fn from(levels: Vec<u32>) -> Self {
        Profile(levels)
    }
}

impl<const N: usize> From<[u32; N]> for Profile {
    fn from(levels: [u32; N]) -> Self {
        Profile(levels.to_vec())
    }
}

impl fmt::Display for Profile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (pos, level) in self.0.iter().enumerate() {
            if pos > 0 {
                write!(f, ",")?;
            }
            write!(f, "{level}")?;
        }
        write!(f, ")")
    }
}
