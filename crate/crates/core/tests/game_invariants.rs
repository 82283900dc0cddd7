mod common;

use common::*;
use pgindex::critical::{minimal_critical_coalitions, minimal_critical_vectors};
use pgindex::game::Layout;
use pgindex::random::monotone_game;
use pgindex::{Coalition, Error, JKGame, Profile, SimpleGame, TUGame, DEFAULT_CAP};
use rand::Rng;

/// Full pairwise check `x ≤ y ⇒ v(x) ≤ v(y)` over every pair of profiles.
fn pairwise_monotone(n: usize, j: u32, table: &[u32]) -> bool {
    let layout = Layout::new(n, j, DEFAULT_CAP).unwrap();
    let profiles: Vec<Profile> = (0..layout.len()).map(|i| layout.profile(i)).collect();
    profiles.iter().enumerate().all(|(a, x)| {
        profiles
            .iter()
            .enumerate()
            .all(|(b, y)| !x.le(y) || table[a] <= table[b])
    })
}

fn agrees_with_pairwise(n: usize, j: u32, k: u32, table: Vec<u32>) {
    let fast = match JKGame::from_table(n, j, k, table.clone()) {
        Ok(_) => true,
        Err(Error::MonotonicityViolation { .. }) => false,
        Err(Error::NonZeroAtOrigin(_)) => return,
        Err(other) => panic!("unexpected {other:?}"),
    };
    assert_eq!(fast, pairwise_monotone(n, j, &table), "table {table:?}");
}

#[test]
fn successor_check_equals_pairwise_check_exhaustively() {
    for (n, j, k) in [
        (1, 3, 3),
        (2, 2, 3),
        (3, 2, 2),
        (2, 3, 2),
        (3, 2, 3),
        (2, 3, 3),
    ] {
        for table in all_tables(n, j, k).filter(|t| t[0] == 0) {
            agrees_with_pairwise(n, j, k, table);
        }
    }
}

#[test]
fn successor_check_equals_pairwise_check_on_perturbed_games() {
    let mut rng = rng(11);
    for _ in 0..2000 {
        let (j, k) = (3, rng.gen_range(2..=3));
        let mut table = monotone_game(&mut rng, 3, j, k).table().to_vec();
        for _ in 0..rng.gen_range(0..3) {
            let at = rng.gen_range(1..table.len());
            table[at] = rng.gen_range(0..k);
        }
        agrees_with_pairwise(3, j, k, table);
    }
}

#[test]
fn weighted_construction_agrees_with_table_construction() {
    let mut rng = rng(3);
    for _ in 0..300 {
        let n = rng.gen_range(1..=4);
        let j = rng.gen_range(2..=4);
        let k = rng.gen_range(2..=4u32);
        let weights: Vec<_> = (0..n)
            .map(|_| r(rng.gen_range(0..9), rng.gen_range(1..4)))
            .collect();
        let mut cuts: Vec<i64> = (0..k - 1).map(|_| rng.gen_range(1..30)).collect();
        cuts.sort_unstable();
        cuts.dedup();
        if cuts.len() != (k - 1) as usize {
            continue;
        }
        let thresholds: Vec<_> = cuts.iter().map(|&t| r(t, 2)).collect();
        let weighted = JKGame::weighted(weights.clone(), thresholds.clone(), j, k).unwrap();
        let layout = weighted.layout().clone();
        let rule = weighted.provenance().unwrap();
        let table: Vec<u32> = (0..layout.len())
            .map(|i| rule.level(&layout.profile(i)))
            .collect();
        let plain = JKGame::from_table(n, j, k, table).unwrap();
        assert_eq!(plain.table(), weighted.table());
    }
}

#[test]
fn simple_games_round_trip_exhaustively() {
    let mut count = 0;
    for n in 0..=4 {
        for v in all_simple_games(n) {
            let embedded = v.to_binary_game();
            assert_eq!(SimpleGame::from_binary_game(&embedded).unwrap(), v);
            for mask in 0..1u32 << n {
                let s = Coalition::from_mask(mask);
                let x = Profile::new((1..=n).map(|p| u32::from(s.contains(p))).collect());
                assert_eq!(embedded.evaluate(&x).unwrap(), u32::from(v.is_winning(s)));
            }
            count += 1;
        }
    }
    // Monotone Boolean functions with f(∅) = 0: Dedekind numbers minus one.
    assert_eq!(count, 1 + 2 + 5 + 19 + 167);
}

fn coalition_image(v: &JKGame) -> Vec<Coalition> {
    minimal_critical_vectors(v)
        .iter()
        .map(|e| Coalition::from_members(e.profile.support().map(|p| p + 1)))
        .collect()
}

#[test]
fn two_level_embedding_maps_mcv_to_mcc() {
    for n in 0..=4 {
        for v in all_simple_games(n) {
            let g = v.to_binary_game();
            assert_eq!(
                coalition_image(&g),
                minimal_critical_coalitions(&TUGame::from_two_level(&g).unwrap())
            );
        }
    }
    let mut rng = rng(5);
    for _ in 0..500 {
        let n = rng.gen_range(1..=4);
        let k = rng.gen_range(2..=4);
        let g = monotone_game(&mut rng, n, 2, k);
        let tu = TUGame::from_two_level(&g).unwrap();
        assert!(tu.is_monotone());
        assert_eq!(coalition_image(&g), minimal_critical_coalitions(&tu));
    }
}

#[test]
fn subgames_compose() {
    let mut rng = rng(9);
    for _ in 0..200 {
        let n = rng.gen_range(1..=4);
        let (j, k) = (rng.gen_range(2..=3), rng.gen_range(2..=3));
        let v = monotone_game(&mut rng, n, j, k);
        for s_mask in 0..1u32 << n {
            let s = Coalition::from_mask(s_mask);
            let vs = v.subgame(s).unwrap();
            for t_mask in 0..1u32 << n {
                let t = Coalition::from_mask(t_mask);
                if t.is_subset_of(s) {
                    assert_eq!(vs.subgame(t).unwrap(), v.subgame(t).unwrap());
                }
            }
        }
    }
}

#[test]
fn remove_player_is_subgame_of_the_rest() {
    let v = example33();
    for p in 1..=3 {
        let rest = Coalition::grand(3).without(p);
        assert_eq!(v.remove_player(p).unwrap(), v.subgame(rest).unwrap());
    }
}
