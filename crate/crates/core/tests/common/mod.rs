#![allow(dead_code)]

use pgindex::{Coalition, JKGame, Rational, SimpleGame};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn int(x: i64) -> Rational {
    Rational::from_integer(x.into())
}

pub fn r(p: i64, q: i64) -> Rational {
    Rational::new(p.into(), q.into())
}

pub fn c(members: &[usize]) -> Coalition {
    Coalition::from_members(members.iter().copied())
}

pub fn example33() -> JKGame {
    JKGame::weighted(vec![int(3), int(2), int(1)], vec![int(7), int(12)], 3, 3).unwrap()
}

pub fn example_simple() -> SimpleGame {
    SimpleGame::from_winning(3, [c(&[1]), c(&[2, 3])]).unwrap()
}

/// Every monotone simple game on `n` players, by filtering all boolean functions.
pub fn all_simple_games(n: usize) -> Vec<SimpleGame> {
    let size = 1usize << n;
    (0u64..1 << size)
        .filter(|bits| bits & 1 == 0)
        .filter_map(|bits| SimpleGame::from_fn(n, |s| bits >> s.mask() & 1 == 1).ok())
        .collect()
}

/// Every table for `(n, j, k)`, valid or not.
pub fn all_tables(n: usize, j: u32, k: u32) -> impl Iterator<Item = Vec<u32>> {
    let len = (j as usize).pow(n as u32);
    let total = (k as u64).pow(len as u32);
    (0..total).map(move |mut code| {
        (0..len)
            .map(|_| {
                let d = (code % k as u64) as u32;
                code /= k as u64;
                d
            })
            .collect()
    })
}

/// The shapes used by the randomized suites.
pub fn shapes() -> Vec<(usize, u32, u32)> {
    let mut all = Vec::new();
    for n in [2, 3] {
        for j in [2, 3] {
            for k in [2, 3] {
                all.push((n, j, k));
            }
        }
    }
    all
}
