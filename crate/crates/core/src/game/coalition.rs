use std::fmt;

/// A set of players from `{1,…,32}`, stored as a bitmask (bit `p-1` for player `p`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Coalition(u32);

impl Coalition {
    pub const EMPTY: Coalition = Coalition(0);

    pub fn from_mask(mask: u32) -> Self {
        Coalition(mask)
    }

    /// Panics if a member is 0 or above 32.
    pub fn from_members<I: IntoIterator<Item = usize>>(members: I) -> Self {
        Coalition(members.into_iter().fold(0, |mask, p| {
            assert!((1..=32).contains(&p), "player {p} out of range");
            mask | 1 << (p - 1)
        }))
    }

    /// The grand coalition `{1,…,n}`.
    pub fn grand(n: usize) -> Self {
        Coalition(if n >= 32 { u32::MAX } else { (1u32 << n) - 1 })
    }

    pub fn mask(self) -> u32 {
        self.0
    }

    pub fn contains(self, player: usize) -> bool {
        (1..=32).contains(&player) && self.0 & (1 << (player - 1)) != 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn members(self) -> Vec<usize> {
        (1..=32).filter(|&p| self.contains(p)).collect()
    }

    pub fn without(self, player: usize) -> Self {
        Coalition(self.0 & !(1 << (player - 1)))
    }

    pub fn with(self, player: usize) -> Self {
        Coalition(self.0 | 1 << (player - 1))
    }

    pub fn is_subset_of(self, other: Coalition) -> bool {
        self.0 & !other.0 == 0
    }

    /// Largest member, 0 for the empty coalition.
    pub fn max_member(self) -> usize {
        32 - self.0.leading_zeros() as usize
    }

    /// Index of the characteristic profile `x^S` in a `(2,·)` table on `n` players.
    pub fn profile_index(self, n: usize) -> usize {
        self.members().into_iter().map(|p| 1usize << (n - p)).sum()
    }

    /// All proper subsets, including the empty coalition.
    pub fn proper_subsets(self) -> impl Iterator<Item = Coalition> {
        let full = self.0;
        let mut sub = full;
        std::iter::from_fn(move || {
            if sub == 0 {
                return None;
            }
            sub = (sub - 1) & full;
            Some(Coalition(sub))
        })
    }
}

impl fmt::Display for Coalition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (pos, p) in self.members().into_iter().enumerate() {
            if pos > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, "}}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn members_round_trip() {
        let s = Coalition::from_members([3, 1]);
        assert_eq!(s.members(), vec![1, 3]);
        assert_eq!(s.to_string(), "{1,3}");
        assert!(s.contains(3) && !s.contains(2));
        assert_eq!(s.without(1), Coalition::from_members([3]));
        assert_eq!(s.max_member(), 3);
    }

    #[test]
    fn proper_subsets_of_pair() {
        let subs: Vec<_> = Coalition::from_members([1, 2]).proper_subsets().collect();
        assert_eq!(subs.len(), 3);
        assert!(subs.contains(&Coalition::EMPTY));
        assert_eq!(Coalition::EMPTY.proper_subsets().count(), 0);
    }

    #[test]
    fn profile_index_puts_player_one_first() {
        assert_eq!(Coalition::from_members([1]).profile_index(3), 4);
        assert_eq!(Coalition::from_members([2, 3]).profile_index(3), 3);
    }
}
