//! Composition of games, mergeability, permutations, null players and the
//! executable axioms of the normalized surplus variant.

use std::fmt;

use crate::critical::{minimal_critical_vectors, McvSet};
use crate::indices::{normalized_variant, total_criticality};
use crate::{int, Error, JKGame, Profile, Rational, Result};

fn same_shape(v: &JKGame, w: &JKGame) -> Result<()> {
    if v.shape() == w.shape() {
        Ok(())
    } else {
        let show = |g: &JKGame| format!("n={}, j={}, k={}", g.n(), g.j(), g.k());
        Err(Error::DimensionMismatch(show(v), show(w)))
    }
}

/// `(v ⊕ w)(x) = max{v(x), w(x)}`.
pub fn oplus(v: &JKGame, w: &JKGame) -> Result<JKGame> {
    same_shape(v, w)?;
    let table = v
        .table()
        .iter()
        .zip(w.table())
        .map(|(&a, &b)| a.max(b))
        .collect();
    Ok(v.with_table(table))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum MergeClause {
    /// A vector is minimal critical in both games.
    SharedMcv,
    /// `x ≤ x'` but not `v(x) < w(x')`.
    LeNotLess,
    /// `x ≥ x'` but not `v(x) > w(x')`.
    GeNotGreater,
}

impl MergeClause {
    pub fn as_str(self) -> &'static str {
        match self {
            MergeClause::SharedMcv => "C1_shared_mcv",
            MergeClause::LeNotLess => "C2_le_not_less",
            MergeClause::GeNotGreater => "C3_ge_not_greater",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MergeViolation {
    /// Minimal critical vector of the first game.
    pub left: Profile,
    /// Minimal critical vector of the second game.
    pub right: Profile,
    pub clause: MergeClause,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MergeReport {
    pub violations: Vec<MergeViolation>,
}

impl MergeReport {
    pub fn mergeable(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Checks every pair of minimal critical vectors against the three mergeability clauses.
pub fn is_mergeable(v: &JKGame, w: &JKGame) -> Result<MergeReport> {
    same_shape(v, w)?;
    let (mv, mw) = (minimal_critical_vectors(v), minimal_critical_vectors(w));
    let mut violations = Vec::new();
    for x in &mv {
        for y in &mw {
            let mut flag = |clause| {
                violations.push(MergeViolation {
                    left: x.profile.clone(),
                    right: y.profile.clone(),
                    clause,
                })
            };
            if x.profile == y.profile {
                flag(MergeClause::SharedMcv);
            }
            if x.profile.le(&y.profile) && x.worth >= y.worth {
                flag(MergeClause::LeNotLess);
            }
            if y.profile.le(&x.profile) && x.worth <= y.worth {
                flag(MergeClause::GeNotGreater);
            }
        }
    }
    Ok(MergeReport { violations })
}

/// `(πv)(x) = v(x')` with `x'_i = x_{π(i)}`; `pi[i-1]` is `π(i)`, 1-based positions.
pub fn permute(v: &JKGame, pi: &[usize]) -> Result<JKGame> {
    let n = v.n();
    let mut seen = vec![false; n];
    let valid = pi.len() == n
        && pi
            .iter()
            .all(|&p| (1..=n).contains(&p) && !std::mem::replace(&mut seen[p - 1], true));
    if !valid {
        return Err(Error::NotAPermutation(pi.to_vec()));
    }
    let layout = v.layout();
    let table = (0..layout.len())
        .map(|index| {
            let source: usize = (0..n)
                .map(|i| layout.digit(index, pi[i] - 1) as usize * layout.stride(i))
                .sum();
            v.value_at(source)
        })
        .collect();
    Ok(v.with_table(table))
}

/// Whether the output never depends on the input level of `player` (label).
pub fn is_null_player(v: &JKGame, player: usize) -> Result<bool> {
    let pos = v.position(player)?;
    let layout = v.layout();
    Ok((0..layout.len())
        .filter(|&index| layout.digit(index, pos) == 0)
        .all(|index| {
            (1..v.j() as usize)
                .all(|level| v.value_at(index + level * layout.stride(pos)) == v.value_at(index))
        }))
}

/// The game worth `worth` on the up-set of `x` and 0 elsewhere; its only
/// minimal critical vector is `x`.
pub fn single_mcv_game(n: usize, j: u32, k: u32, x: &Profile, worth: u32) -> Result<JKGame> {
    let zero = JKGame::zero(n, j, k)?;
    let layout = zero.layout();
    let anchor = layout.index(x)?;
    if worth >= k {
        return Err(Error::LevelOutOfRange {
            level: worth,
            max: k - 1,
        });
    }
    let anchor = layout.profile(anchor);
    let table = (0..layout.len())
        .map(|index| {
            if anchor.le(&layout.profile(index)) {
                worth
            } else {
                0
            }
        })
        .collect();
    JKGame::from_table(n, j, k, table)
}

/// The single-MCV component games `v^h`, one per minimal critical vector.
pub fn component_games(v: &JKGame) -> Vec<JKGame> {
    minimal_critical_vectors(v)
        .iter()
        .map(|e| {
            let g = single_mcv_game(v.n(), v.j(), v.k(), &e.profile, e.worth)
                .expect("component of a valid game");
            v.with_table(g.table().to_vec())
        })
        .collect()
}

/// Rebuilds a table from minimal critical vectors: each profile takes the
/// largest worth among the vectors below it.
pub fn reconstruct(mcv: &McvSet, k: u32) -> Result<JKGame> {
    let zero = JKGame::zero(mcv.n(), mcv.j(), k)?;
    let layout = zero.layout();
    let mut table = vec![0u32; layout.len()];
    for e in mcv {
        table[e.index] = e.worth;
    }
    for index in 0..layout.len() {
        let best = (0..layout.n())
            .filter_map(|i| layout.down(index, i))
            .map(|below| table[below])
            .max()
            .unwrap_or(0);
        table[index] = table[index].max(best);
    }
    JKGame::from_table(mcv.n(), mcv.j(), k, table)
}

/// `MCV(v ⊕ w) = MCV(v) ⊎ MCV(w)` for a mergeable pair.
pub fn mcv_union_check(v: &JKGame, w: &JKGame) -> Result<bool> {
    if !is_mergeable(v, w)?.mergeable() {
        return Err(Error::NotMergeable);
    }
    let (mv, mw) = (minimal_critical_vectors(v), minimal_critical_vectors(w));
    let merged = minimal_critical_vectors(&oplus(v, w)?);
    let disjoint = mv.iter().all(|e| !mw.contains(&e.profile));
    let mut union: Vec<(usize, u32)> = mv.iter().chain(&mw).map(|e| (e.index, e.worth)).collect();
    union.sort_unstable();
    let merged: Vec<(usize, u32)> = merged.iter().map(|e| (e.index, e.worth)).collect();
    Ok(disjoint && union == merged)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    Pass,
    /// The axiom's premise does not apply to this game.
    Vacuous,
    Fail(String),
}

impl Verdict {
    pub fn holds(&self) -> bool {
        !matches!(self, Verdict::Fail(_))
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::Pass => write!(f, "pass"),
            Verdict::Vacuous => write!(f, "vacuous"),
            Verdict::Fail(witness) => write!(f, "FAIL: {witness}"),
        }
    }
}

/// Verdicts for the null player (A1), efficiency (A2), equal shares on
/// single-MCV games (A3) and the merge formula (A4).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AxiomReport {
    pub null_player: Verdict,
    pub efficiency: Verdict,
    pub equal_shares: Verdict,
    pub merge: Option<Verdict>,
}

impl AxiomReport {
    pub fn all_hold(&self) -> bool {
        self.verdicts().iter().all(|(_, v)| v.holds())
    }

    pub fn verdicts(&self) -> Vec<(&'static str, &Verdict)> {
        let mut all = vec![
            ("A1", &self.null_player),
            ("A2", &self.efficiency),
            ("A3", &self.equal_shares),
        ];
        if let Some(merge) = &self.merge {
            all.push(("A4", merge));
        }
        all
    }
}

/// Evaluates the axioms against the normalized surplus variant of `v`, and
/// A4 for the pair `(v, w)` when `w` is given.
pub fn axiom_report(v: &JKGame, w: Option<&JKGame>) -> Result<AxiomReport> {
    let psi = normalized_variant(v)?.player_values;
    let mut nulls = Vec::new();
    for (pos, &label) in v.labels().iter().enumerate() {
        if is_null_player(v, label)? && psi[pos] != int(0) {
            nulls.push(format!("null player {label} scores {}", psi[pos]));
        }
    }
    let null_player = if nulls.is_empty() {
        Verdict::Pass
    } else {
        Verdict::Fail(nulls.join("; "))
    };

    let total: Rational = psi.iter().sum();
    let efficiency = if total == int(1) {
        Verdict::Pass
    } else {
        Verdict::Fail(format!("values sum to {total}"))
    };

    let mcv = minimal_critical_vectors(v);
    let equal_shares = if mcv.len() != 1 {
        Verdict::Vacuous
    } else {
        let x = &mcv.iter().next().expect("one vector").profile;
        let shares: Vec<&Rational> = x.support().map(|pos| &psi[pos]).collect();
        if shares.windows(2).all(|pair| pair[0] == pair[1]) {
            Verdict::Pass
        } else {
            Verdict::Fail(format!(
                "unequal shares on the support of {x}: {}",
                shares
                    .iter()
                    .map(|s| s.to_string())
                    .collect::<Vec<_>>()
                    .join(", ")
            ))
        }
    };

    let merge = match w {
        None => None,
        Some(w) => {
            if !is_mergeable(v, w)?.mergeable() {
                return Err(Error::NotMergeable);
            }
            let psi_w = normalized_variant(w)?.player_values;
            let merged = normalized_variant(&oplus(v, w)?)?.player_values;
            let cv = int(total_criticality(v)?);
            let cw = int(total_criticality(w)?);
            let mut bad = Vec::new();
            for (pos, &label) in v.labels().iter().enumerate() {
                let expected = (&cv * &psi[pos] + &cw * &psi_w[pos]) / (&cv + &cw);
                if merged[pos] != expected {
                    bad.push(format!("player {label}: {} != {expected}", merged[pos]));
                }
            }
            Some(if bad.is_empty() {
                Verdict::Pass
            } else {
                Verdict::Fail(bad.join("; "))
            })
        }
    };

    Ok(AxiomReport {
        null_player,
        efficiency,
        equal_shares,
        merge,
    })
}
