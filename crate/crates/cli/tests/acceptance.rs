//! One check per acceptance criterion. Run with
//! `cargo test --test acceptance -- --nocapture` to see the report.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::path::Path;
use std::process::Command;
use std::time::{Duration, Instant};

use pgindex::algebra::{
    axiom_report, component_games, is_mergeable, is_null_player, mcv_union_check, oplus, permute,
    reconstruct, single_mcv_game, Verdict,
};
use pgindex::average::average_game;
use pgindex::critical::{
    minimal_critical_coalitions, minimal_critical_vectors, minimal_critical_vectors_oracle,
    minimal_winning_coalitions, real_gaining_coalitions,
};
use pgindex::indices::{
    criticality_count, jk_potential, jk_potential_recursive, normalized_variant, pgi_raw, pgv_tu,
    public_good_value_jk, variant_value, Family,
};
use pgindex::random::{mergeable_chain, monotone_game, monotone_tu};
use pgindex::{Coalition, JKGame, Profile, Rational, SimpleGame};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Check = Result<String, String>;

fn int(x: i64) -> Rational {
    Rational::from_integer(x.into())
}

fn r(p: i64, q: i64) -> Rational {
    Rational::new(p.into(), q.into())
}

fn ints(xs: &[i64]) -> Vec<Rational> {
    xs.iter().map(|&x| int(x)).collect()
}

fn c(members: &[usize]) -> Coalition {
    Coalition::from_members(members.iter().copied())
}

fn example() -> JKGame {
    JKGame::weighted(ints(&[3, 2, 1]), ints(&[7, 12]), 3, 3).unwrap()
}

fn ensure(condition: bool, message: impl FnOnce() -> String) -> Result<(), String> {
    if condition {
        Ok(())
    } else {
        Err(message())
    }
}

fn shapes() -> Vec<(usize, u32, u32)> {
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

const PER_SHAPE: usize = 200;

/// The shared random suite: `PER_SHAPE` monotone games for every shape.
fn random_suite() -> Vec<JKGame> {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let mut games = Vec::new();
    for (n, j, k) in shapes() {
        for _ in 0..PER_SHAPE {
            games.push(monotone_game(&mut rng, n, j, k));
        }
    }
    games
}

fn criterion_1() -> Check {
    let start = Instant::now();
    let v = example();
    let mcv = minimal_critical_vectors(&v);
    let elapsed = start.elapsed();
    let found: Vec<(Vec<u32>, u32)> = mcv
        .iter()
        .map(|e| (e.profile.levels().to_vec(), e.worth))
        .collect();
    let expected = vec![
        (vec![1, 1, 2], 1),
        (vec![1, 2, 0], 1),
        (vec![2, 0, 1], 1),
        (vec![2, 1, 0], 1),
        (vec![2, 2, 2], 2),
    ];
    ensure(found == expected, || format!("got {found:?}"))?;
    ensure(elapsed < Duration::from_millis(10), || {
        format!("took {elapsed:?}")
    })?;
    Ok(format!("5 vectors, worths 1,1,1,1,2, {elapsed:?}"))
}

fn criterion_2() -> Check {
    let v = example();
    let psi = public_good_value_jk(&v).player_values;
    let variant = variant_value(&v).player_values;
    ensure(psi == ints(&[6, 5, 4]), || format!("Psi = {psi:?}"))?;
    ensure(variant == ints(&[5, 4, 3]), || {
        format!("variant = {variant:?}")
    })?;
    Ok("Psi = (6,5,4), variant = (5,4,3)".into())
}

fn criterion_3() -> Check {
    let report = public_good_value_jk(&example());
    let sum = report.total();
    ensure(report.potential == int(6), || {
        format!("P = {}", report.potential)
    })?;
    ensure(report.lambda_total == int(15), || {
        format!("Lambda = {}", report.lambda_total)
    })?;
    ensure(sum == report.lambda_total, || {
        format!("sum of values {sum}")
    })?;
    Ok("P = 6, Lambda = 15 = 6+5+4".into())
}

fn criterion_4() -> Check {
    let v = example();
    let avg = average_game(&v).map_err(|e| e.to_string())?;
    let expected = [
        (c(&[]), int(0)),
        (c(&[1]), r(1, 2)),
        (c(&[2]), r(5, 18)),
        (c(&[3]), r(1, 6)),
        (c(&[1, 2]), r(2, 3)),
        (c(&[1, 3]), r(2, 3)),
        (c(&[2, 3]), r(1, 2)),
        (c(&[1, 2, 3]), int(1)),
    ];
    for (s, worth) in &expected {
        ensure(avg.tu.worth(*s) == worth, || {
            format!("worth of {s} is {}", avg.tu.worth(*s))
        })?;
    }
    let pgv = pgv_tu(&avg.tu, Family::Mcc).player_values;
    let target = vec![r(51, 18), r(44, 18), r(42, 18)];
    ensure(pgv == target, || format!("PGV = {pgv:?}"))?;
    Ok("eight worths match, PGV = (51/18, 44/18, 42/18)".into())
}

fn criterion_5() -> Check {
    let weights = [3, 2, 1];
    let v = SimpleGame::from_fn(3, |s| {
        s.members().iter().map(|&p| weights[p - 1]).sum::<u32>() >= 3
    })
    .map_err(|e| e.to_string())?;
    let mut mwc = minimal_winning_coalitions(&v);
    mwc.sort();
    let mut expected = vec![c(&[1]), c(&[2, 3])];
    expected.sort();
    ensure(mwc == expected, || format!("MWC = {mwc:?}"))?;
    let raw = pgi_raw(&v).player_values;
    ensure(raw == ints(&[1, 1, 1]), || format!("raw PGI = {raw:?}"))?;
    let tu = pgv_tu(&v.to_tu(), Family::Mcc).player_values;
    ensure(tu == raw, || format!("TU PGV = {tu:?}"))?;
    Ok("MWC = {{1},{2,3}}, PGI = (1,1,1) on both paths".into())
}

fn criterion_6(suite: &[JKGame]) -> Check {
    let start = Instant::now();
    for v in suite {
        let psi = public_good_value_jk(v).player_values;
        let p = jk_potential(v);
        for (pos, &label) in v.labels().iter().enumerate() {
            let without = jk_potential(&v.remove_player(label).map_err(|e| e.to_string())?);
            ensure(psi[pos] == &p - &without, || {
                format!("identity fails for player {label} in {:?}", v.table())
            })?;
        }
        let recursive = jk_potential_recursive(v).map_err(|e| e.to_string())?;
        ensure(recursive == p, || {
            format!("recursive {recursive} != {p} for {:?}", v.table())
        })?;
    }
    let elapsed = start.elapsed();
    ensure(elapsed < Duration::from_secs(30), || {
        format!("took {elapsed:?}")
    })?;
    Ok(format!("{} games over 8 shapes, {elapsed:?}", suite.len()))
}

fn criterion_7(suite: &[JKGame]) -> Check {
    for v in suite {
        let oracle = minimal_critical_vectors_oracle(v).map_err(|e| e.to_string())?;
        ensure(oracle == minimal_critical_vectors(v), || {
            format!("oracle differs on {:?}", v.table())
        })?;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut tu_games = 0;
    for n in 1..=4 {
        for _ in 0..250 {
            let v = monotone_tu(&mut rng, n);
            ensure(
                minimal_critical_coalitions(&v) == real_gaining_coalitions(&v),
                || format!("MCC != RGC on {:?}", v.worths()),
            )?;
            tu_games += 1;
        }
    }
    Ok(format!(
        "{} jk games, {tu_games} monotone TU games",
        suite.len()
    ))
}

fn criterion_8() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let mut pairs = 0;
    while pairs < 120 {
        let n = rng.gen_range(2..=4);
        let (j, k) = (rng.gen_range(2..=3), rng.gen_range(2..=3));
        let len = rng.gen_range(2..=5);
        let chain = mergeable_chain(&mut rng, n, j, k, len);
        if chain.len() < 2 {
            continue;
        }
        let mut acc = chain[0].clone();
        for next in &chain[1..] {
            let report = is_mergeable(&acc, next).map_err(|e| e.to_string())?;
            ensure(report.mergeable(), || {
                "constructed pair is not mergeable".into()
            })?;
            ensure(
                mcv_union_check(&acc, next).map_err(|e| e.to_string())?,
                || "MCV of the merge is not the disjoint union".into(),
            )?;
            let merged = oplus(&acc, next).map_err(|e| e.to_string())?;
            for p in 1..=n {
                let count = |g: &JKGame| criticality_count(g, p).map_err(|e| e.to_string());
                ensure(count(&merged)? == count(&acc)? + count(next)?, || {
                    format!("criticality of player {p} is not additive")
                })?;
            }
            let verdict = axiom_report(&acc, Some(next))
                .map_err(|e| e.to_string())?
                .merge;
            ensure(verdict == Some(Verdict::Pass), || {
                format!("A4: {verdict:?}")
            })?;
            acc = merged;
            pairs += 1;
        }
    }
    let mut rebuilt = 0;
    for (n, j, k) in [
        (1, 2, 2),
        (1, 3, 3),
        (2, 2, 3),
        (2, 3, 2),
        (2, 3, 3),
        (3, 2, 2),
        (3, 3, 3),
    ] {
        for _ in 0..40 {
            let v = monotone_game(&mut rng, n, j, k);
            let from_vectors =
                reconstruct(&minimal_critical_vectors(&v), k).map_err(|e| e.to_string())?;
            ensure(from_vectors.table() == v.table(), || {
                format!("reconstruction differs on {:?}", v.table())
            })?;
            let mut folded = JKGame::zero(n, j, k).map_err(|e| e.to_string())?;
            for part in component_games(&v) {
                folded = oplus(&folded, &part).map_err(|e| e.to_string())?;
            }
            ensure(folded.table() == v.table(), || {
                format!("components do not fold back to {:?}", v.table())
            })?;
            rebuilt += 1;
        }
    }
    Ok(format!(
        "{pairs} mergeable pairs, {rebuilt} games rebuilt from components"
    ))
}

/// Permutations of `1..=n` as `pi[i-1] = pi(i)`.
fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut all = Vec::new();
    for shorter in permutations(n - 1) {
        for slot in 0..n {
            let mut p = shorter.clone();
            p.insert(slot, n);
            all.push(p);
        }
    }
    all
}

fn with_null_player(v: &JKGame) -> JKGame {
    let (n, j, k) = v.shape();
    let table = (0..v.table().len() * j as usize)
        .map(|index| v.table()[index / j as usize])
        .collect();
    JKGame::from_table(n + 1, j, k, table).unwrap()
}

fn criterion_9() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let mut checked = 0;
    for (n, j, k) in shapes() {
        for _ in 0..40 {
            let v = with_null_player(&monotone_game(&mut rng, n, j, k));
            if v.is_trivial() {
                continue;
            }
            let last = v.n();
            ensure(is_null_player(&v, last).map_err(|e| e.to_string())?, || {
                "padding is not null".into()
            })?;
            let report = axiom_report(&v, None).map_err(|e| e.to_string())?;
            ensure(report.null_player == Verdict::Pass, || {
                format!("A1: {}", report.null_player)
            })?;
            ensure(report.efficiency == Verdict::Pass, || {
                format!("A2: {}", report.efficiency)
            })?;
            let psi = normalized_variant(&v).map_err(|e| e.to_string())?;
            ensure(psi.player_values[last - 1] == int(0), || {
                "null player scores".into()
            })?;
            ensure(psi.total() == int(1), || "normalized sum is not 1".into())?;
            checked += 1;
        }
        for _ in 0..20 {
            let x = Profile::new((0..n).map(|_| rng.gen_range(0..j)).collect());
            if x.support_size() == 0 {
                continue;
            }
            let worth = rng.gen_range(1..k);
            let v = single_mcv_game(n, j, k, &x, worth).map_err(|e| e.to_string())?;
            let report = axiom_report(&v, None).map_err(|e| e.to_string())?;
            ensure(report.equal_shares == Verdict::Pass, || {
                format!("A3 on {x}: {}", report.equal_shares)
            })?;
            checked += 1;
        }
    }
    let v = example();
    let base = normalized_variant(&v)
        .map_err(|e| e.to_string())?
        .player_values;
    let perms = permutations(3);
    for pi in &perms {
        let moved = normalized_variant(&permute(&v, pi).map_err(|e| e.to_string())?)
            .map_err(|e| e.to_string())?
            .player_values;
        for i in 0..3 {
            ensure(moved[pi[i] - 1] == base[i], || {
                format!("anonymity fails for {pi:?}")
            })?;
        }
    }
    Ok(format!(
        "{checked} axiom checks, {} permutations of the example",
        perms.len()
    ))
}

/// All monotone `(3,2)` games on `n ≤ 3` players. A game is its up-set of
/// winning profiles, described by the smallest winning level of the last
/// coordinate over every prefix; those thresholds must be non-increasing.
fn all_three_two_games(n: usize) -> Vec<JKGame> {
    let prefixes = 3usize.pow(n as u32 - 1);
    let mut games = Vec::new();
    for code in 0..4usize.pow(prefixes as u32) {
        let threshold: Vec<u32> = (0..prefixes)
            .map(|p| (code >> (2 * p) & 3) as u32)
            .collect();
        if threshold[0] == 0 {
            continue;
        }
        let table: Vec<u32> = (0..prefixes * 3)
            .map(|index| u32::from(index as u32 % 3 >= threshold[index / 3]))
            .collect();
        if let Ok(v) = JKGame::from_table(n, 3, 2, table) {
            games.push(v);
        }
    }
    games
}

fn criterion_10() -> Check {
    let mut counts = Vec::new();
    for n in 1..=3 {
        let games = all_three_two_games(n);
        for v in &games {
            ensure(
                variant_value(v).player_values == public_good_value_jk(v).player_values,
                || format!("variant differs on {:?}", v.table()),
            )?;
        }
        counts.push(games.len());
    }
    // Up-sets of the 3-chain powers: 4, 20 and 980, minus the full set.
    ensure(counts == [3, 19, 979], || {
        format!("enumerated {counts:?} games")
    })?;
    Ok(format!("exhaustive over {counts:?} games for n = 1, 2, 3"))
}

fn criterion_11() -> Check {
    let root = Path::new(env!("CARGO_MANIFEST_DIR"));
    let example = root.join("tests/fixtures/example33.json");
    let golden = std::fs::read(root.join("tests/golden/analyze_example33.json"))
        .map_err(|e| e.to_string())?;
    let run = || {
        Command::new(env!("CARGO_BIN_EXE_pgindex"))
            .args(["analyze", example.to_str().unwrap(), "--format", "machine"])
            .output()
            .map_err(|e| e.to_string())
    };
    let (first, second) = (run()?, run()?);
    ensure(first.status.success(), || {
        format!("exit {:?}", first.status.code())
    })?;
    ensure(first.stdout == second.stdout, || "runs differ".into())?;
    ensure(first.stdout == golden, || {
        "output differs from the golden file".into()
    })?;
    let report: serde_json::Value = serde_json::from_slice(&golden).map_err(|e| e.to_string())?;
    ensure(
        report["values"]["potential_value"] == serde_json::json!(["6", "5", "4"]),
        || "golden file lacks the example values".into(),
    )?;
    Ok(format!(
        "{} bytes, byte-identical across runs and to the golden file",
        golden.len()
    ))
}

fn judge(id: usize, title: &str, check: impl FnOnce() -> Check) -> bool {
    let outcome = catch_unwind(AssertUnwindSafe(check)).unwrap_or_else(|panic| {
        let message = panic
            .downcast_ref::<String>()
            .cloned()
            .or_else(|| panic.downcast_ref::<&str>().map(|s| s.to_string()))
            .unwrap_or_default();
        Err(format!("panicked: {message}"))
    });
    match &outcome {
        Ok(detail) => println!("PASS  {id:>2}. {title}: {detail}"),
        Err(reason) => println!("FAIL  {id:>2}. {title}: {reason}"),
    }
    outcome.is_ok()
}

#[test]
fn acceptance() {
    let suite = random_suite();
    let results = [
        judge(1, "example minimal critical vectors", criterion_1),
        judge(2, "example values", criterion_2),
        judge(3, "example potential and lambda", criterion_3),
        judge(4, "average game and its Public Good value", criterion_4),
        judge(5, "weighted simple game", criterion_5),
        judge(6, "potential identity suite", || criterion_6(&suite)),
        judge(7, "oracle suite", || criterion_7(&suite)),
        judge(8, "mergeability suite", criterion_8),
        judge(9, "axiom suite", criterion_9),
        judge(10, "two output levels collapse", criterion_10),
        judge(11, "machine report determinism", criterion_11),
    ];
    let passed = results.iter().filter(|&&ok| ok).count();
    println!("{passed}/{} criteria pass", results.len());
    assert_eq!(passed, results.len());
}
