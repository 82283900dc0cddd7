//! Public Good indices and values with their potentials.

use num_traits::{One, Zero};

use crate::critical::{
    minimal_critical_coalitions, minimal_critical_vectors, minimal_winning_coalitions,
    real_gaining_coalitions, with_worths, McvSet,
};
use crate::{int, Coalition, Error, JKGame, Rational, Result, SimpleGame, TUGame};

/// Player count beyond which the recursive potential refuses to run.
pub const RECURSION_CAP: usize = 20;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Variant {
    PotentialValue,
    SurplusVariant,
    NormalizedVariant,
    RawPgi,
    NormalizedPgi,
    TuPgv,
}

impl Variant {
    pub fn as_str(self) -> &'static str {
        match self {
            Variant::PotentialValue => "potential_value",
            Variant::SurplusVariant => "surplus_variant",
            Variant::NormalizedVariant => "normalized_variant",
            Variant::RawPgi => "raw_pgi",
            Variant::NormalizedPgi => "normalized_pgi",
            Variant::TuPgv => "tu_pgv",
        }
    }
}

/// Which coalition family the TU Public Good value sums over.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Family {
    #[default]
    Mcc,
    Rgc,
}

impl Family {
    pub fn coalitions(self, v: &TUGame) -> Vec<Coalition> {
        match self {
            Family::Mcc => minimal_critical_coalitions(v),
            Family::Rgc => real_gaining_coalitions(v),
        }
    }
}

/// The critical structure an index was computed from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Listing {
    Vectors(McvSet),
    Coalitions(Vec<(Coalition, Rational)>),
}

/// Per-player values together with the potential and the distributed total.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IndexReport {
    pub variant: Variant,
    /// Player labels, aligned with `player_values`.
    pub players: Vec<usize>,
    pub player_values: Vec<Rational>,
    pub potential: Rational,
    pub lambda_total: Rational,
    pub listing: Listing,
}

impl IndexReport {
    pub fn total(&self) -> Rational {
        self.player_values.iter().sum()
    }

    /// Value of the player with the given label.
    pub fn value_of(&self, label: usize) -> Option<&Rational> {
        self.players
            .iter()
            .position(|&p| p == label)
            .map(|pos| &self.player_values[pos])
    }
}

fn normalize(values: &[Rational]) -> Result<Vec<Rational>> {
    let total: Rational = values.iter().sum();
    if total.is_zero() {
        return Err(Error::TrivialGame);
    }
    Ok(values.iter().map(|x| x / &total).collect())
}

fn coalition_totals(
    n: usize,
    listing: &[(Coalition, Rational)],
) -> (Vec<Rational>, Rational, Rational) {
    let values = (1..=n)
        .map(|p| {
            listing
                .iter()
                .filter(|(s, _)| s.contains(p))
                .map(|(_, w)| w)
                .sum()
        })
        .collect();
    let potential = listing.iter().map(|(_, w)| w).sum();
    let lambda = listing.iter().map(|(s, w)| w * int(s.len() as u64)).sum();
    (values, potential, lambda)
}

/// Raw Public Good index: number of minimal winning coalitions containing each player.
pub fn pgi_raw(v: &SimpleGame) -> IndexReport {
    let listing: Vec<(Coalition, Rational)> = minimal_winning_coalitions(v)
        .into_iter()
        .map(|s| (s, Rational::one()))
        .collect();
    let (player_values, potential, lambda_total) = coalition_totals(v.n(), &listing);
    IndexReport {
        variant: Variant::RawPgi,
        players: (1..=v.n()).collect(),
        player_values,
        potential,
        lambda_total,
        listing: Listing::Coalitions(listing),
    }
}

/// Normalized Public Good index. Undefined when there is no winning coalition.
pub fn pgi_normalized(v: &SimpleGame) -> Result<IndexReport> {
    let mut report = pgi_raw(v);
    report.player_values = normalize(&report.player_values)?;
    report.variant = Variant::NormalizedPgi;
    Ok(report)
}

/// Public Good value of a TU game: `Σ_{S ∈ family(v), i ∈ S} v(S)`.
pub fn pgv_tu(v: &TUGame, family: Family) -> IndexReport {
    let listing = with_worths(v, &family.coalitions(v));
    let (_, potential, lambda_total) = coalition_totals(0, &listing);
    let player_values = v
        .labels()
        .iter()
        .map(|&p| {
            listing
                .iter()
                .filter(|(s, _)| s.contains(p))
                .map(|(_, w)| w)
                .sum()
        })
        .collect();
    IndexReport {
        variant: Variant::TuPgv,
        players: v.labels().to_vec(),
        player_values,
        potential,
        lambda_total,
        listing: Listing::Coalitions(listing),
    }
}

/// `P(v) = Σ_{S ∈ MCC(v)} v(S)`.
pub fn tu_potential(v: &TUGame) -> Rational {
    minimal_critical_coalitions(v)
        .into_iter()
        .map(|s| v.worth(s))
        .sum()
}

fn mcv_sum(mcv: &McvSet, weight: impl Fn(&crate::critical::CriticalVector) -> u64) -> Rational {
    int(mcv.iter().map(weight).sum::<u64>())
}

/// `P(v) = Σ_{x ∈ MCV(v)} v(x)`.
pub fn jk_potential(v: &JKGame) -> Rational {
    mcv_sum(&minimal_critical_vectors(v), |e| u64::from(e.worth))
}

/// `Λ(v) = Σ_{x ∈ MCV(v)} v(x) · |{i : x_i ≠ 0}|`.
pub fn lambda_total(v: &JKGame) -> Rational {
    mcv_sum(&minimal_critical_vectors(v), |e| {
        u64::from(e.worth) * e.profile.support_size() as u64
    })
}

/// The potential obtained from `P(v_S) = (Λ(v_S) + Σ_{i∈S} P(v_{S∖i})) / |S|`
/// with `P(v_∅) = 0`, evaluated over all subgames.
pub fn jk_potential_recursive(v: &JKGame) -> Result<Rational> {
    let n = v.n();
    if n > RECURSION_CAP {
        return Err(Error::RecursionCapExceeded {
            n,
            cap: RECURSION_CAP,
        });
    }
    // memo[mask] = P(v_S) for the positions in mask; submasks come first.
    let mut memo: Vec<Rational> = Vec::with_capacity(1 << n);
    memo.push(Rational::zero());
    for mask in 1usize..1 << n {
        let kept: Vec<usize> = (0..n).filter(|&p| mask & (1 << p) != 0).collect();
        let lambda = lambda_total(&v.restrict(&kept));
        let below: Rational = kept.iter().map(|&p| &memo[mask & !(1 << p)]).sum();
        memo.push((lambda + below) / int(kept.len() as u64));
    }
    Ok(memo.pop().expect("memo holds the grand coalition"))
}

fn jk_report(
    v: &JKGame,
    variant: Variant,
    per_vector: impl Fn(usize, usize) -> u64,
) -> IndexReport {
    let mcv = minimal_critical_vectors(v);
    let player_values = (0..v.n())
        .map(|pos| {
            int(mcv
                .iter()
                .filter(|e| e.profile[pos] != 0)
                .map(|e| per_vector(e.index, pos))
                .sum::<u64>())
        })
        .collect();
    IndexReport {
        variant,
        players: v.labels().to_vec(),
        player_values,
        potential: mcv_sum(&mcv, |e| u64::from(e.worth)),
        lambda_total: mcv_sum(&mcv, |e| {
            u64::from(e.worth) * e.profile.support_size() as u64
        }),
        listing: Listing::Vectors(mcv),
    }
}

/// `Ψ_i(v) = Σ_{x ∈ MCV(v), x_i ≠ 0} v(x)`.
pub fn public_good_value_jk(v: &JKGame) -> IndexReport {
    jk_report(v, Variant::PotentialValue, |index, _| {
        u64::from(v.value_at(index))
    })
}

/// `Ψ_i(v) = Σ_{x ∈ MCV(v), x_i ≠ 0} (v(x) − v(x↓i))`.
pub fn variant_value(v: &JKGame) -> IndexReport {
    let layout = v.layout();
    jk_report(v, Variant::SurplusVariant, |index, pos| {
        let below = layout.down(index, pos).expect("support coordinate");
        u64::from(v.value_at(index) - v.value_at(below))
    })
}

/// Number of pairs `(x, τ)` with `x ∈ MCV(v)` critical for `player` at level `τ`.
pub fn criticality_count(v: &JKGame, player: usize) -> Result<u64> {
    let pos = v.position(player)?;
    let mut count = 0;
    for e in &minimal_critical_vectors(v) {
        if e.profile[pos] == 0 {
            continue;
        }
        for tau in 1..v.k() {
            if crate::critical::is_critical_for(v, &e.profile, player, tau)? {
                count += 1;
            }
        }
    }
    Ok(count)
}

/// `c(v) = Σ_i c_i(v)`.
pub fn total_criticality(v: &JKGame) -> Result<u64> {
    v.labels().iter().map(|&p| criticality_count(v, p)).sum()
}

/// The surplus variant scaled to sum to 1. Undefined on the constant-0 game.
pub fn normalized_variant(v: &JKGame) -> Result<IndexReport> {
    let mut report = variant_value(v);
    report.player_values = normalize(&report.player_values)?;
    report.variant = Variant::NormalizedVariant;
    Ok(report)
}
