use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive};

use super::{Coalition, Layout, Profile};
use crate::{Error, Rational, Result, DEFAULT_CAP};

/// Weighted description of a (j,k) simple game: the output is the number of
/// thresholds reached by `Σ w_i x_i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightedRule {
    pub weights: Vec<Rational>,
    pub thresholds: Vec<Rational>,
}

impl WeightedRule {
    pub fn level(&self, x: &[u32]) -> u32 {
        let sum: Rational = self
            .weights
            .iter()
            .zip(x)
            .map(|(w, &l)| w * crate::int(l))
            .sum();
        self.thresholds.partition_point(|t| *t <= sum) as u32
    }
}

/// A monotone map from input profiles `{0,…,j-1}^n` to output levels
/// `{0,…,k-1}` with the all-zero profile mapped to 0.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JKGame {
    layout: Layout,
    k: u32,
    table: Vec<u32>,
    labels: Vec<usize>,
    provenance: Option<WeightedRule>,
}

impl JKGame {
    /// Builds a game from its full table, using [`DEFAULT_CAP`].
    pub fn from_table(n: usize, j: u32, k: u32, table: Vec<u32>) -> Result<Self> {
        Self::from_table_with_cap(n, j, k, table, DEFAULT_CAP)
    }

    pub fn from_table_with_cap(
        n: usize,
        j: u32,
        k: u32,
        table: Vec<u32>,
        cap: usize,
    ) -> Result<Self> {
        let layout = Self::layout_for(n, j, k, cap)?;
        let mut first = None;
        scan_violations(&layout, k, &table, |err| {
            first = Some(err);
            false
        });
        match first {
            Some(err) => Err(err),
            None => Ok(JKGame {
                labels: (1..=n).collect(),
                layout,
                k,
                table,
                provenance: None,
            }),
        }
    }

    /// Every validation failure of a candidate table, in index order.
    pub fn table_violations(n: usize, j: u32, k: u32, table: &[u32], cap: usize) -> Vec<Error> {
        let layout = match Self::layout_for(n, j, k, cap) {
            Ok(layout) => layout,
            Err(err) => return vec![err],
        };
        let mut all = Vec::new();
        scan_violations(&layout, k, table, |err| {
            all.push(err);
            true
        });
        all
    }

    fn layout_for(n: usize, j: u32, k: u32, cap: usize) -> Result<Layout> {
        if j < 2 || k < 2 {
            return Err(Error::InvalidLevels { j, k });
        }
        if n > 32 {
            return Err(Error::TooManyPlayers(n));
        }
        Layout::new(n, j, cap)
    }

    /// Builds the game `v(x) = |{ℓ : Σ w_i x_i ≥ t_ℓ}|`.
    pub fn weighted(
        weights: Vec<Rational>,
        thresholds: Vec<Rational>,
        j: u32,
        k: u32,
    ) -> Result<Self> {
        Self::weighted_with_cap(weights, thresholds, j, k, DEFAULT_CAP)
    }

    pub fn weighted_with_cap(
        weights: Vec<Rational>,
        thresholds: Vec<Rational>,
        j: u32,
        k: u32,
        cap: usize,
    ) -> Result<Self> {
        let n = weights.len();
        let layout = Self::layout_for(n, j, k, cap)?;
        if thresholds.len() != k as usize - 1 {
            return Err(Error::ThresholdCount {
                k,
                expected: k as usize - 1,
                got: thresholds.len(),
            });
        }
        if thresholds.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::NonIncreasingThresholds);
        }
        let rule = WeightedRule {
            weights,
            thresholds,
        };
        let table = weighted_table(&layout, &rule);
        let mut game = Self::from_table_with_cap(n, j, k, table, cap).map_err(|err| match err {
            Error::MonotonicityViolation { .. } if rule.weights.iter().any(|w| w.is_negative()) => {
                Error::NegativeWeightNonMonotone(Box::new(err))
            }
            other => other,
        })?;
        game.provenance = Some(rule);
        Ok(game)
    }

    /// The game with no players, `P(v_∅) = 0`.
    pub fn empty(j: u32, k: u32) -> Result<Self> {
        Self::from_table(0, j, k, vec![0])
    }

    /// The constant-0 game on `n` players.
    pub fn zero(n: usize, j: u32, k: u32) -> Result<Self> {
        let layout = Self::layout_for(n, j, k, DEFAULT_CAP)?;
        Self::from_table(n, j, k, vec![0; layout.len()])
    }

    /// Reuses this game's shape and labels for a new table. The table must be valid.
    pub(crate) fn with_table(&self, table: Vec<u32>) -> JKGame {
        debug_assert_eq!(table.len(), self.table.len());
        JKGame {
            layout: self.layout.clone(),
            k: self.k,
            table,
            labels: self.labels.clone(),
            provenance: None,
        }
    }

    pub fn n(&self) -> usize {
        self.layout.n()
    }

    pub fn j(&self) -> u32 {
        self.layout.j()
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn layout(&self) -> &Layout {
        &self.layout
    }

    pub fn table(&self) -> &[u32] {
        &self.table
    }

    /// External 1-based labels of the players, in position order.
    pub fn labels(&self) -> &[usize] {
        &self.labels
    }

    pub fn provenance(&self) -> Option<&WeightedRule> {
        self.provenance.as_ref()
    }

    pub fn shape(&self) -> (usize, u32, u32) {
        (self.n(), self.j(), self.k)
    }

    #[inline]
    pub fn value_at(&self, index: usize) -> u32 {
        self.table[index]
    }

    pub fn evaluate(&self, x: &Profile) -> Result<u32> {
        Ok(self.table[self.layout.index(x)?])
    }

    pub fn is_trivial(&self) -> bool {
        self.table.iter().all(|&v| v == 0)
    }

    /// 0-based position of the player with the given label.
    pub fn position(&self, label: usize) -> Result<usize> {
        self.labels
            .iter()
            .position(|&l| l == label)
            .ok_or(Error::UnknownPlayer(label))
    }

    /// `v_S`: players outside `S` are frozen at level 0. `S` is given in labels.
    pub fn subgame(&self, members: Coalition) -> Result<JKGame> {
        for label in members.members() {
            self.position(label)?;
        }
        let kept: Vec<usize> = (0..self.n())
            .filter(|&p| members.contains(self.labels[p]))
            .collect();
        Ok(self.restrict(&kept))
    }

    /// `v_{-i}`.
    pub fn remove_player(&self, label: usize) -> Result<JKGame> {
        let pos = self.position(label)?;
        let kept: Vec<usize> = (0..self.n()).filter(|&p| p != pos).collect();
        Ok(self.restrict(&kept))
    }

    /// Subgame on the given 0-based positions (in increasing order).
    pub(crate) fn restrict(&self, kept: &[usize]) -> JKGame {
        let sub = Layout::new(kept.len(), self.j(), usize::MAX).expect("subgame fits");
        let table = (0..sub.len())
            .map(|index| {
                let original: usize = kept
                    .iter()
                    .enumerate()
                    .map(|(q, &p)| sub.digit(index, q) as usize * self.layout.stride(p))
                    .sum();
                self.table[original]
            })
            .collect();
        JKGame {
            layout: sub,
            k: self.k,
            table,
            labels: kept.iter().map(|&p| self.labels[p]).collect(),
            provenance: self.provenance.as_ref().map(|rule| WeightedRule {
                weights: kept.iter().map(|&p| rule.weights[p].clone()).collect(),
                thresholds: rule.thresholds.clone(),
            }),
        }
    }
}

fn scan_violations(layout: &Layout, k: u32, table: &[u32], mut sink: impl FnMut(Error) -> bool) {
    if table.len() != layout.len() {
        sink(Error::IncompleteTable {
            expected: layout.len(),
            got: table.len(),
        });
        return;
    }
    if table[0] != 0 && !sink(Error::NonZeroAtOrigin(table[0])) {
        return;
    }
    let mut out_of_range = false;
    for (index, &level) in table.iter().enumerate() {
        if level >= k {
            out_of_range = true;
            let err = Error::OutOfRangeOutput {
                profile: layout.profile(index),
                level,
            };
            if !sink(err) {
                return;
            }
        }
    }
    if out_of_range {
        return;
    }
    for (index, &level) in table.iter().enumerate() {
        for i in 0..layout.n() {
            let Some(up) = layout.up(index, i) else {
                continue;
            };
            if table[up] < level {
                let err = Error::MonotonicityViolation {
                    lower: layout.profile(index),
                    upper: layout.profile(up),
                    lower_value: level,
                    upper_value: table[up],
                };
                if !sink(err) {
                    return;
                }
            }
        }
    }
}

fn weighted_table(layout: &Layout, rule: &WeightedRule) -> Vec<u32> {
    match ScaledRule::new(rule, layout.j()) {
        Some(scaled) => scaled.table(layout),
        None => (0..layout.len())
            .map(|index| rule.level(&layout.profile(index)))
            .collect(),
    }
}

/// The rule scaled to a common denominator, when all sums fit in an `i128`.
struct ScaledRule {
    weights: Vec<i128>,
    thresholds: Vec<i128>,
}

impl ScaledRule {
    fn new(rule: &WeightedRule, j: u32) -> Option<Self> {
        let denom = rule
            .weights
            .iter()
            .chain(&rule.thresholds)
            .fold(BigInt::one(), |acc, r| acc.lcm(r.denom()));
        let scale = |r: &Rational| -> BigInt { r.numer() * (&denom / r.denom()) };
        let weights: Vec<BigInt> = rule.weights.iter().map(scale).collect();
        let bound: BigInt = weights.iter().map(|w| w.abs()).sum::<BigInt>() * BigInt::from(j);
        bound.to_i128()?;
        Some(ScaledRule {
            weights: weights.iter().map(|w| w.to_i128()).collect::<Option<_>>()?,
            thresholds: rule
                .thresholds
                .iter()
                .map(|t| scale(t).to_i128())
                .collect::<Option<_>>()?,
        })
    }

    fn table(&self, layout: &Layout) -> Vec<u32> {
        let n = layout.n();
        let j = layout.j();
        let mut digits = vec![0u32; n];
        let mut sum: i128 = 0;
        let mut table = Vec::with_capacity(layout.len());
        for index in 0..layout.len() {
            if index > 0 {
                // odometer step, last player least significant
                let mut p = n;
                loop {
                    p -= 1;
                    if digits[p] + 1 < j {
                        digits[p] += 1;
                        sum += self.weights[p];
                        break;
                    }
                    sum -= self.weights[p] * i128::from(digits[p]);
                    digits[p] = 0;
                }
            }
            table.push(self.thresholds.partition_point(|&t| t <= sum) as u32);
        }
        table
    }
}
