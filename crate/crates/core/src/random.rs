//! Random game generators for experiments and property tests.

use rand::Rng;

use crate::algebra::single_mcv_game;
use crate::game::Layout;
use crate::{int, JKGame, Profile, Rational, SimpleGame, TUGame};

/// A random monotone (j,k) simple game.
///
/// Sparse random seeds are placed on the table and closed upward with maxima,
/// so the result is monotone and zero at the origin by construction.
pub fn monotone_game<R: Rng + ?Sized>(rng: &mut R, n: usize, j: u32, k: u32) -> JKGame {
    let layout = Layout::new(n, j, crate::DEFAULT_CAP).expect("small game");
    let density: f64 = rng.gen_range(0.02..0.45);
    let mut table = vec![0u32; layout.len()];
    for index in 1..layout.len() {
        let seed = if rng.gen_bool(density) {
            rng.gen_range(1..k)
        } else {
            0
        };
        let below = (0..n)
            .filter_map(|i| layout.down(index, i))
            .map(|b| table[b])
            .max()
            .unwrap_or(0);
        table[index] = seed.max(below);
    }
    JKGame::from_table(n, j, k, table).expect("monotone by construction")
}

pub fn simple_game<R: Rng + ?Sized>(rng: &mut R, n: usize) -> SimpleGame {
    SimpleGame::from_binary_game(&monotone_game(rng, n, 2, 2)).expect("binary game")
}

fn small_rational<R: Rng + ?Sized>(rng: &mut R, max_numer: i64) -> Rational {
    Rational::new(
        rng.gen_range(0..=max_numer).into(),
        rng.gen_range(1..=6i64).into(),
    )
}

/// A monotone TU game with small nonnegative rational increments; about a
/// third of the increments are zero so ties occur.
pub fn monotone_tu<R: Rng + ?Sized>(rng: &mut R, n: usize) -> TUGame {
    let mut worth: Vec<Rational> = vec![int(0); 1 << n];
    for mask in 1..worth.len() {
        let below = (0..n)
            .filter(|&p| mask & (1 << p) != 0)
            .map(|p| worth[mask & !(1 << p)].clone())
            .max()
            .expect("nonempty coalition");
        let step = if rng.gen_bool(0.35) {
            int(0)
        } else {
            small_rational(rng, 6)
        };
        worth[mask] = below + step;
    }
    TUGame::from_worths(n, worth).expect("valid worths")
}

/// A TU game with arbitrary signed worths.
pub fn any_tu<R: Rng + ?Sized>(rng: &mut R, n: usize) -> TUGame {
    let worth = (0..1usize << n)
        .map(|mask| {
            if mask == 0 {
                int(0)
            } else {
                small_rational(rng, 12) - int(1)
            }
        })
        .collect();
    TUGame::from_worths(n, worth).expect("valid worths")
}

/// Up to `len` pairwise incomparable nonzero profiles.
pub fn antichain<R: Rng + ?Sized>(rng: &mut R, n: usize, j: u32, len: usize) -> Vec<Profile> {
    let mut chosen: Vec<Profile> = Vec::new();
    for _ in 0..len * 20 {
        if chosen.len() == len {
            break;
        }
        let x = Profile::new((0..n).map(|_| rng.gen_range(0..j)).collect());
        if x.support_size() == 0 || chosen.iter().any(|y| x.le(y) || y.le(&x)) {
            continue;
        }
        chosen.push(x);
    }
    chosen
}

/// Single-MCV games on pairwise incomparable vectors with random worths. Any
/// prefix composed with `⊕` is mergeable with the next game.
pub fn mergeable_chain<R: Rng + ?Sized>(
    rng: &mut R,
    n: usize,
    j: u32,
    k: u32,
    len: usize,
) -> Vec<JKGame> {
    antichain(rng, n, j, len)
        .into_iter()
        .map(|x| {
            let worth = rng.gen_range(1..k);
            single_mcv_game(n, j, k, &x, worth).expect("valid generator")
        })
        .collect()
}
