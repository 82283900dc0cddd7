//! The average game of a (j,k) simple game and its comparison with the
//! (j,k) Public Good values.

use num_traits::Zero;

use crate::indices::{pgv_tu, public_good_value_jk, variant_value, Family};
use crate::{JKGame, Rational, Result, TUGame};

/// Default bound on the work `(j+1)^n` of an average-game computation.
pub const AVERAGE_WORK_CAP: usize = 1 << 26;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AverageGameResult<'a> {
    pub tu: TUGame,
    /// `1 / (j^n (k-1))`.
    pub scale: Rational,
    pub source: &'a JKGame,
}

pub fn average_game(v: &JKGame) -> Result<AverageGameResult<'_>> {
    average_game_with_cap(v, AVERAGE_WORK_CAP)
}

/// `ṽ(S) = 1/(j^n (k-1)) · Σ_{x ∈ J^n} [v((j-1)_S, x_{-S}) − v(0_S, x_{-S})]`.
///
/// The summand ignores `x_S`, so each distinct `x_{-S}` is counted `j^|S|`
/// times; the inner loop runs over `x_{-S}` only and multiplies.
pub fn average_game_with_cap(v: &JKGame, cap: usize) -> Result<AverageGameResult<'_>> {
    let n = v.n();
    crate::game::Layout::new(n, v.j() + 1, cap)?;
    let layout = v.layout();
    let j = v.j() as usize;
    let top = v.j() - 1;
    let scale = Rational::new(
        1.into(),
        num_bigint::BigInt::from(layout.len()) * (v.k() - 1),
    );
    let worth = (0..1u32 << n)
        .map(|mask| {
            let pinned: Vec<usize> = (0..n).filter(|&p| mask & (1 << p) != 0).collect();
            let free: Vec<usize> = (0..n).filter(|&p| mask & (1 << p) == 0).collect();
            let offset: usize = pinned
                .iter()
                .map(|&p| top as usize * layout.stride(p))
                .sum();
            let mut digits = vec![0usize; free.len()];
            let mut base = 0usize;
            let mut gain: i64 = 0;
            for _ in 0..j.pow(free.len() as u32) {
                gain += i64::from(v.value_at(base + offset)) - i64::from(v.value_at(base));
                for q in (0..free.len()).rev() {
                    let stride = layout.stride(free[q]);
                    if digits[q] + 1 < j {
                        digits[q] += 1;
                        base += stride;
                        break;
                    }
                    base -= digits[q] * stride;
                    digits[q] = 0;
                }
            }
            let repeats = num_bigint::BigInt::from(j).pow(pinned.len() as u32);
            Rational::from_integer(repeats * gain) * &scale
        })
        .collect();
    let tu = TUGame::build(n, worth, v.labels().to_vec())?;
    Ok(AverageGameResult {
        tu,
        scale,
        source: v,
    })
}

impl AverageGameResult<'_> {
    /// Whether `v(j-1,…,j-1) = k-1`, the condition for `ṽ(N) = 1`.
    pub fn top_reaches_max(&self) -> bool {
        let table = self.source.table();
        table[table.len() - 1] == self.source.k() - 1
    }
}

/// Public Good value of the average game against the (j,k) values.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Comparison {
    pub players: Vec<usize>,
    pub pgv_of_average: Vec<Rational>,
    pub jk_value: Vec<Rational>,
    pub variant: Vec<Rational>,
    /// Normalized `PGV(ṽ)` equals normalized `Ψ(v)`. False when degenerate.
    pub equal_after_normalization: bool,
    /// Both value vectors vanish, so no normalization exists.
    pub degenerate: bool,
}

fn shares(values: &[Rational]) -> Option<Vec<Rational>> {
    let total: Rational = values.iter().sum();
    (!total.is_zero()).then(|| values.iter().map(|x| x / &total).collect())
}

pub fn compare_pgv_vs_jk(v: &JKGame) -> Result<Comparison> {
    let average = average_game(v)?;
    let pgv_of_average = pgv_tu(&average.tu, Family::Mcc).player_values;
    let jk_value = public_good_value_jk(v).player_values;
    let variant = variant_value(v).player_values;
    let (equal_after_normalization, degenerate) = match (shares(&pgv_of_average), shares(&jk_value))
    {
        (Some(a), Some(b)) => (a == b, false),
        _ => (false, true),
    };
    Ok(Comparison {
        players: v.labels().to_vec(),
        pgv_of_average,
        jk_value,
        variant,
        equal_after_normalization,
        degenerate,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{int, Coalition, Profile, SimpleGame};

    fn example33() -> JKGame {
        JKGame::weighted(vec![int(3), int(2), int(1)], vec![int(7), int(12)], 3, 3).unwrap()
    }

    fn r(p: i64, q: i64) -> Rational {
        Rational::new(p.into(), q.into())
    }

    fn c(members: &[usize]) -> Coalition {
        Coalition::from_members(members.iter().copied())
    }

    #[test]
    fn example_average_game() {
        let v = example33();
        let avg = average_game(&v).unwrap();
        let tu = &avg.tu;
        assert_eq!(avg.scale, r(1, 54));
        assert_eq!(tu.worth(Coalition::EMPTY), &int(0));
        assert_eq!(tu.worth(c(&[1])), &r(1, 2));
        assert_eq!(tu.worth(c(&[2])), &r(5, 18));
        assert_eq!(tu.worth(c(&[3])), &r(1, 6));
        assert_eq!(tu.worth(c(&[1, 2])), &r(2, 3));
        assert_eq!(tu.worth(c(&[1, 3])), &r(2, 3));
        assert_eq!(tu.worth(c(&[2, 3])), &r(1, 2));
        assert_eq!(tu.worth(c(&[1, 2, 3])), &int(1));
        assert!(tu.is_monotone());
        assert!(avg.top_reaches_max());
    }

    /// Literal double loop over every `x ∈ J^n` with explicit profiles.
    fn literal_average(v: &JKGame, s: Coalition) -> Rational {
        let layout = v.layout();
        let mut total = 0i64;
        for index in 0..layout.len() {
            let x = layout.profile(index);
            let pin = |level: u32| {
                Profile::new(
                    x.iter()
                        .enumerate()
                        .map(|(p, &l)| if s.contains(p + 1) { level } else { l })
                        .collect(),
                )
            };
            total += i64::from(v.evaluate(&pin(v.j() - 1)).unwrap())
                - i64::from(v.evaluate(&pin(0)).unwrap());
        }
        r(total, layout.len() as i64 * i64::from(v.k() - 1))
    }

    #[test]
    fn binary_games_match_literal_sum() {
        let simple = SimpleGame::from_winning(3, [c(&[1]), c(&[2, 3])]).unwrap();
        let v = simple.to_binary_game();
        let avg = average_game(&v).unwrap();
        for mask in 0..8 {
            let s = Coalition::from_mask(mask);
            assert_eq!(avg.tu.worth(s), &literal_average(&v, s));
        }
    }

    #[test]
    fn comparison_on_example() {
        let cmp = compare_pgv_vs_jk(&example33()).unwrap();
        assert_eq!(cmp.pgv_of_average, vec![r(51, 18), r(44, 18), r(42, 18)]);
        assert_eq!(cmp.jk_value, vec![int(6), int(5), int(4)]);
        assert_eq!(cmp.variant, vec![int(5), int(4), int(3)]);
        assert!(!cmp.equal_after_normalization);
        assert!(!cmp.degenerate);
    }

    #[test]
    fn zero_game() {
        let zero = JKGame::zero(3, 3, 3).unwrap();
        let avg = average_game(&zero).unwrap();
        assert!(avg.tu.is_zero());
        assert!(!avg.top_reaches_max());
        let cmp = compare_pgv_vs_jk(&zero).unwrap();
        assert!(cmp.degenerate);
        assert!(!cmp.equal_after_normalization);
        assert!(cmp.pgv_of_average.iter().all(Zero::is_zero));
    }

    #[test]
    fn work_cap() {
        let v = JKGame::zero(3, 3, 3).unwrap();
        assert!(matches!(
            average_game_with_cap(&v, 63),
            Err(crate::Error::CapExceeded { .. })
        ));
        assert!(average_game_with_cap(&v, 64).is_ok());
    }
}
