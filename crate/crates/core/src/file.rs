//! JSON game files.
//!
//! ```json
//! { "kind": "jk", "n": 3, "j": 3, "k": 3,
//!   "weighted": { "weights": ["3", "2", "1"], "thresholds": ["7", "12"] } }
//! { "kind": "jk", "n": 1, "j": 2, "k": 2, "table": [0, 1] }
//! { "kind": "simple", "n": 3, "winning": [[1], [2, 3]] }
//! { "kind": "tu", "n": 2, "worth": { "1": "1/2", "2": "0", "1,2": "1" } }
//! ```
//!
//! Tables list `v(x)` with player 1 as the most significant digit. Rationals
//! are strings `"p/q"` or `"p"`. Simple games may list only minimal winning
//! coalitions. TU files must give every nonempty coalition.

use std::collections::HashMap;
use std::fmt;

use serde::de::{self, MapAccess, Visitor};
use serde::ser::SerializeMap;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::{Coalition, Error, JKGame, Rational, Result, SimpleGame, TUGame, DEFAULT_CAP};

/// A loaded game of any supported class.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Game {
    Jk(JKGame),
    Simple(SimpleGame),
    Tu(TUGame),
}

impl Game {
    pub fn kind(&self) -> &'static str {
        match self {
            Game::Jk(_) => "jk",
            Game::Simple(_) => "simple",
            Game::Tu(_) => "tu",
        }
    }

    pub fn n(&self) -> usize {
        match self {
            Game::Jk(g) => g.n(),
            Game::Simple(g) => g.n(),
            Game::Tu(g) => g.n(),
        }
    }
}

/// A rational written as `"p/q"`, or `"p"` when the denominator is 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalText(pub Rational);

impl Serialize for RationalText {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(&self.0)
    }
}

impl<'de> Deserialize<'de> for RationalText {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        struct RationalVisitor;

        impl Visitor<'_> for RationalVisitor {
            type Value = RationalText;

            fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                write!(f, "a rational string \"p/q\" or an integer")
            }

            fn visit_str<E: de::Error>(self, text: &str) -> std::result::Result<RationalText, E> {
                parse_rational(text).map(RationalText).map_err(E::custom)
            }

            fn visit_i64<E: de::Error>(self, x: i64) -> std::result::Result<RationalText, E> {
                Ok(RationalText(crate::int(x)))
            }

            fn visit_u64<E: de::Error>(self, x: u64) -> std::result::Result<RationalText, E> {
                Ok(RationalText(crate::int(x)))
            }
        }

        deserializer.deserialize_any(RationalVisitor)
    }
}

pub fn parse_rational(text: &str) -> std::result::Result<Rational, String> {
    let text = text.trim();
    let bad = || format!("invalid rational {text:?}");
    let (numer, denom) = match text.split_once('/') {
        Some((p, q)) => (p.trim(), q.trim()),
        None => (text, "1"),
    };
    let numer: num_bigint::BigInt = numer.parse().map_err(|_| bad())?;
    let denom: num_bigint::BigInt = denom.parse().map_err(|_| bad())?;
    if denom == 0.into() {
        return Err(format!("zero denominator in {text:?}"));
    }
    Ok(Rational::new(numer, denom))
}

/// Coalition worths keyed by comma-separated members, in file order.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct WorthTable(pub Vec<(Coalition, Rational)>);

fn coalition_key(s: Coalition) -> String {
    s.members()
        .iter()
        .map(|p| p.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

fn parse_coalition_key(key: &str) -> std::result::Result<Coalition, String> {
    let key = key.trim();
    if key.is_empty() {
        return Ok(Coalition::EMPTY);
    }
    let mut s = Coalition::EMPTY;
    for part in key.split(',') {
        let p: usize = part
            .trim()
            .parse()
            .map_err(|_| format!("invalid coalition key {key:?}"))?;
        if !(1..=32).contains(&p) {
            return Err(format!("player {p} out of range in {key:?}"));
        }
        if s.contains(p) {
            return Err(format!("player {p} repeated in {key:?}"));
        }
        s = s.with(p);
    }
    Ok(s)
}

impl Serialize for WorthTable {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut map = serializer.serialize_map(Some(self.0.len()))?;
        for (s, w) in &self.0 {
            map.serialize_entry(&coalition_key(*s), &RationalText(w.clone()))?;
        }
        map.end()
    }
}

impl<'de> Deserialize<'de> for WorthTable {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        struct TableVisitor;

        impl<'de> Visitor<'de> for TableVisitor {
            type Value = WorthTable;

            fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                write!(f, "a map from coalitions to rationals")
            }

            fn visit_map<M: MapAccess<'de>>(
                self,
                mut access: M,
            ) -> std::result::Result<WorthTable, M::Error> {
                let mut entries: Vec<(Coalition, Rational)> = Vec::new();
                while let Some((key, value)) = access.next_entry::<String, RationalText>()? {
                    let s = parse_coalition_key(&key).map_err(de::Error::custom)?;
                    if entries.iter().any(|(t, _)| *t == s) {
                        return Err(de::Error::custom(format!("duplicate coalition {s}")));
                    }
                    entries.push((s, value.0));
                }
                Ok(WorthTable(entries))
            }
        }

        deserializer.deserialize_map(TableVisitor)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeightedSpec {
    pub weights: Vec<RationalText>,
    pub thresholds: Vec<RationalText>,
}

/// The on-disk shape of a game.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum GameFile {
    Jk {
        n: usize,
        j: u32,
        k: u32,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        table: Option<Vec<u32>>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        weighted: Option<WeightedSpec>,
    },
    Simple {
        n: usize,
        winning: Vec<Vec<usize>>,
    },
    Tu {
        n: usize,
        worth: WorthTable,
    },
}

fn parse_error(err: serde_json::Error) -> Error {
    Error::Parse {
        line: err.line(),
        column: err.column(),
        message: err.to_string(),
    }
}

fn usage(message: impl Into<String>) -> Error {
    Error::Parse {
        line: 0,
        column: 0,
        message: message.into(),
    }
}

impl GameFile {
    pub fn parse(text: &str) -> Result<GameFile> {
        serde_json::from_str(text).map_err(parse_error)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("game files serialize") + "\n"
    }

    /// Validates the file contents into a game.
    pub fn into_game(self, cap: usize) -> Result<Game> {
        match self {
            GameFile::Jk {
                n,
                j,
                k,
                table,
                weighted,
            } => match (table, weighted) {
                (Some(table), None) => {
                    JKGame::from_table_with_cap(n, j, k, table, cap).map(Game::Jk)
                }
                (None, Some(rule)) => {
                    if rule.weights.len() != n {
                        return Err(usage(format!(
                            "{} weights given for {n} players",
                            rule.weights.len()
                        )));
                    }
                    JKGame::weighted_with_cap(
                        rule.weights.into_iter().map(|w| w.0).collect(),
                        rule.thresholds.into_iter().map(|t| t.0).collect(),
                        j,
                        k,
                        cap,
                    )
                    .map(Game::Jk)
                }
                _ => Err(usage(
                    "a jk game needs exactly one of \"table\" or \"weighted\"",
                )),
            },
            GameFile::Simple { n, winning } => {
                let mut generators = Vec::with_capacity(winning.len());
                for members in winning {
                    if let Some(&p) = members.iter().find(|&&p| p == 0 || p > n) {
                        return Err(Error::UnknownPlayer(p));
                    }
                    generators.push(Coalition::from_members(members));
                }
                SimpleGame::from_winning(n, generators).map(Game::Simple)
            }
            GameFile::Tu { n, worth } => {
                let map: HashMap<Coalition, Rational> = worth.0.into_iter().collect();
                TUGame::from_map(n, &map).map(Game::Tu)
            }
        }
    }

    pub fn from_game(game: &Game) -> GameFile {
        match game {
            Game::Jk(g) => GameFile::from_jk(g),
            Game::Simple(g) => GameFile::Simple {
                n: g.n(),
                winning: crate::critical::minimal_winning_coalitions(g)
                    .into_iter()
                    .map(|s| s.members())
                    .collect(),
            },
            Game::Tu(g) => GameFile::from_tu(g),
        }
    }

    pub fn from_jk(g: &JKGame) -> GameFile {
        let weighted = g.provenance().map(|rule| WeightedSpec {
            weights: rule.weights.iter().cloned().map(RationalText).collect(),
            thresholds: rule.thresholds.iter().cloned().map(RationalText).collect(),
        });
        GameFile::Jk {
            n: g.n(),
            j: g.j(),
            k: g.k(),
            table: weighted.is_none().then(|| g.table().to_vec()),
            weighted,
        }
    }

    /// TU file with worths listed by size, then members. Positions are
    /// renumbered `1..=n`.
    pub fn from_tu(g: &TUGame) -> GameFile {
        let mut masks: Vec<u32> = (1..1u32 << g.n()).collect();
        masks.sort_by_key(|&m| {
            let s = Coalition::from_mask(m);
            (s.len(), s.members())
        });
        GameFile::Tu {
            n: g.n(),
            worth: WorthTable(
                masks
                    .into_iter()
                    .map(|m| (Coalition::from_mask(m), g.worth_by_mask(m).clone()))
                    .collect(),
            ),
        }
    }
}

/// Parses and validates a game file with the default enumeration cap.
pub fn parse_game(text: &str) -> Result<Game> {
    parse_game_with_cap(text, DEFAULT_CAP)
}

pub fn parse_game_with_cap(text: &str, cap: usize) -> Result<Game> {
    GameFile::parse(text)?.into_game(cap)
}

pub fn to_json(game: &Game) -> String {
    GameFile::from_game(game).to_json()
}
