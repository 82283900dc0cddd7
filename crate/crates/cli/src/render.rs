//! Rendering of reports as aligned tables or deterministic JSON.

use num_traits::{Signed, ToPrimitive};
use pgindex::algebra::{AxiomReport, MergeReport};
use pgindex::critical::McvSet;
use pgindex::file::GameFile;
use pgindex::{Coalition, Rational, TUGame};
use serde_json::{json, Map, Value};

use crate::Format;

/// One entry of a per-player value table. `Err` carries the reason a column
/// could not be computed.
#[derive(Debug, Clone)]
pub struct Column {
    pub name: String,
    pub values: Result<Vec<Rational>, String>,
}

/// A scalar fact attached to a report.
#[derive(Debug, Clone)]
pub enum Fact {
    Number(Rational),
    Flag(bool),
    Text(String),
}

/// A block of a report. Each block maps to one top-level key in machine
/// output and one titled section in table output.
#[derive(Debug, Clone)]
pub enum Section {
    Game {
        kind: &'static str,
        n: usize,
        shape: Option<(u32, u32)>,
        players: Vec<usize>,
    },
    Values {
        key: &'static str,
        players: Vec<usize>,
        columns: Vec<Column>,
    },
    Facts {
        key: &'static str,
        rows: Vec<(String, Fact)>,
    },
    Vectors {
        key: &'static str,
        set: McvSet,
    },
    Coalitions {
        key: &'static str,
        rows: Vec<(Coalition, Rational)>,
    },
    Merge(MergeReport),
    Axioms(AxiomReport),
    Worths {
        key: &'static str,
        game: TUGame,
    },
}

pub fn render(command: &str, sections: &[Section], format: Format) -> String {
    match format {
        Format::Machine => machine(command, sections),
        Format::Table => table(sections),
    }
}

/// Exact `p/q` text, or `p` for integers.
pub fn rational(x: &Rational) -> String {
    x.to_string()
}

/// `p/q (d.dddd)` for non-integers, `p` otherwise.
pub fn rational_with_decimal(x: &Rational) -> String {
    if x.is_integer() {
        return x.to_string();
    }
    let scaled = (x * Rational::from_integer(10_000.into()))
        .round()
        .to_integer();
    let sign = if scaled.is_negative() { "-" } else { "" };
    let digits = scaled.abs();
    let whole = &digits / 10_000u32;
    let frac = (&digits % 10_000u32).to_u32().expect("below 10^4");
    format!("{x} ({sign}{whole}.{frac:04})")
}

fn members(s: Coalition) -> Value {
    Value::from(s.members())
}

fn machine(command: &str, sections: &[Section]) -> String {
    let mut root = Map::new();
    root.insert("command".into(), command.into());
    for section in sections {
        let (key, value) = machine_section(section);
        root.insert(key.into(), value);
    }
    serde_json::to_string_pretty(&Value::Object(root)).expect("reports serialize") + "\n"
}

fn machine_section(section: &Section) -> (&'static str, Value) {
    match section {
        Section::Game {
            kind,
            n,
            shape,
            players,
        } => {
            let mut game = Map::new();
            game.insert("kind".into(), (*kind).into());
            game.insert("n".into(), (*n).into());
            if let Some((j, k)) = shape {
                game.insert("j".into(), (*j).into());
                game.insert("k".into(), (*k).into());
            }
            game.insert("players".into(), players.clone().into());
            ("game", Value::Object(game))
        }
        Section::Values { key, columns, .. } => {
            let mut values = Map::new();
            for column in columns {
                let value = match &column.values {
                    Ok(xs) => Value::from(xs.iter().map(rational).collect::<Vec<_>>()),
                    Err(reason) => json!({ "error": reason }),
                };
                values.insert(column.name.clone(), value);
            }
            (key, Value::Object(values))
        }
        Section::Facts { key, rows } => {
            let facts = rows
                .iter()
                .map(|(name, fact)| {
                    let value = match fact {
                        Fact::Number(x) => rational(x).into(),
                        Fact::Flag(b) => (*b).into(),
                        Fact::Text(t) => t.clone().into(),
                    };
                    (name.clone(), value)
                })
                .collect();
            (key, Value::Object(facts))
        }
        Section::Vectors { key, set } => {
            let rows = set
                .iter()
                .map(|cv| json!({ "profile": cv.profile.levels(), "worth": cv.worth }))
                .collect();
            (key, Value::Array(rows))
        }
        Section::Coalitions { key, rows } => {
            let rows = rows
                .iter()
                .map(|(s, w)| json!({ "coalition": members(*s), "worth": rational(w) }))
                .collect();
            (key, Value::Array(rows))
        }
        Section::Merge(report) => {
            let violations: Vec<Value> = report
                .violations
                .iter()
                .map(|v| {
                    json!({
                        "left": v.left.levels(),
                        "right": v.right.levels(),
                        "clause": v.clause.as_str(),
                    })
                })
                .collect();
            (
                "merge",
                json!({ "mergeable": report.mergeable(), "violations": violations }),
            )
        }
        Section::Axioms(report) => {
            let verdicts = report
                .verdicts()
                .into_iter()
                .map(|(name, verdict)| (name.to_string(), verdict.to_string().into()))
                .collect();
            ("axioms", Value::Object(verdicts))
        }
        Section::Worths { key, game } => {
            let file = serde_json::to_value(GameFile::from_tu(game)).expect("game files serialize");
            (key, file)
        }
    }
}

/// Left-aligned columns separated by two spaces.
fn grid(header: &[String], rows: &[Vec<String>]) -> String {
    let mut widths: Vec<usize> = header.iter().map(|h| h.chars().count()).collect();
    for row in rows {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.chars().count());
        }
    }
    let mut out = String::new();
    for row in std::iter::once(header).chain(rows.iter().map(Vec::as_slice)) {
        let line: Vec<String> = row
            .iter()
            .zip(&widths)
            .map(|(cell, w)| format!("{cell:<w$}"))
            .collect();
        out.push_str(line.join("  ").trim_end());
        out.push('\n');
    }
    out
}

fn title(key: &str) -> String {
    key.replace('_', " ")
}

fn table(sections: &[Section]) -> String {
    let blocks: Vec<String> = sections.iter().map(table_section).collect();
    blocks.join("\n")
}

fn table_section(section: &Section) -> String {
    match section {
        Section::Game {
            kind,
            n,
            shape,
            players,
        } => {
            let shape = match shape {
                Some((j, k)) => format!("  j={j}  k={k}"),
                None => String::new(),
            };
            let players: Vec<String> = players.iter().map(|p| p.to_string()).collect();
            format!(
                "game: {kind}  n={n}{shape}  players {}\n",
                players.join(",")
            )
        }
        Section::Values {
            key,
            players,
            columns,
        } => {
            let mut header = vec!["player".to_string()];
            header.extend(columns.iter().map(|c| c.name.clone()));
            let cell = |c: &Column, pos: usize| match &c.values {
                Ok(xs) => rational_with_decimal(&xs[pos]),
                Err(_) => "n/a".to_string(),
            };
            let mut rows: Vec<Vec<String>> = players
                .iter()
                .enumerate()
                .map(|(pos, p)| {
                    std::iter::once(p.to_string())
                        .chain(columns.iter().map(|c| cell(c, pos)))
                        .collect()
                })
                .collect();
            let mut total = vec!["total".to_string()];
            total.extend(columns.iter().map(|c| match &c.values {
                Ok(xs) => rational_with_decimal(&xs.iter().sum()),
                Err(_) => "n/a".to_string(),
            }));
            rows.push(total);
            let mut out = if *key == "values" {
                String::new()
            } else {
                format!("{}\n", title(key))
            };
            out.push_str(&grid(&header, &rows));
            for column in columns {
                if let Err(reason) = &column.values {
                    out.push_str(&format!("{}: {reason}\n", column.name));
                }
            }
            out
        }
        Section::Facts { key, rows } => {
            let rows: Vec<Vec<String>> = rows
                .iter()
                .map(|(name, fact)| {
                    let value = match fact {
                        Fact::Number(x) => rational_with_decimal(x),
                        Fact::Flag(b) => if *b { "yes" } else { "no" }.to_string(),
                        Fact::Text(t) => t.clone(),
                    };
                    vec![name.clone(), value]
                })
                .collect();
            format!(
                "{}\n{}",
                title(key),
                grid(&["name".into(), "value".into()], &rows)
            )
        }
        Section::Vectors { key, set } => {
            if set.is_empty() {
                return "no minimal critical vectors\n".to_string();
            }
            let rows: Vec<Vec<String>> = set
                .iter()
                .map(|cv| vec![cv.profile.to_string(), cv.worth.to_string()])
                .collect();
            format!(
                "{} ({})\n{}",
                title(key),
                set.len(),
                grid(&["profile".into(), "worth".into()], &rows)
            )
        }
        Section::Coalitions { key, rows } => {
            if rows.is_empty() {
                return format!("{}: none\n", title(key));
            }
            let rows: Vec<Vec<String>> = rows
                .iter()
                .map(|(s, w)| vec![s.to_string(), rational_with_decimal(w)])
                .collect();
            format!(
                "{} ({})\n{}",
                title(key),
                rows.len(),
                grid(&["coalition".into(), "worth".into()], &rows)
            )
        }
        Section::Merge(report) => {
            let mut out = format!(
                "mergeable: {}\n",
                if report.mergeable() { "yes" } else { "no" }
            );
            if !report.violations.is_empty() {
                let rows: Vec<Vec<String>> = report
                    .violations
                    .iter()
                    .map(|v| {
                        vec![
                            v.left.to_string(),
                            v.right.to_string(),
                            v.clause.as_str().into(),
                        ]
                    })
                    .collect();
                out.push_str(&grid(
                    &["left".into(), "right".into(), "clause".into()],
                    &rows,
                ));
            }
            out
        }
        Section::Axioms(report) => {
            let rows: Vec<Vec<String>> = report
                .verdicts()
                .into_iter()
                .map(|(name, verdict)| vec![name.to_string(), verdict.to_string()])
                .collect();
            format!(
                "axioms\n{}",
                grid(&["axiom".into(), "verdict".into()], &rows)
            )
        }
        Section::Worths { key, game } => {
            let n = game.n();
            let mut masks: Vec<u32> = (1..1u32 << n).collect();
            masks.sort_by_key(|&m| (m.count_ones(), game.coalition_of_mask(m).members()));
            let rows: Vec<Vec<String>> = masks
                .into_iter()
                .map(|m| {
                    vec![
                        game.coalition_of_mask(m).to_string(),
                        rational_with_decimal(game.worth_by_mask(m)),
                    ]
                })
                .collect();
            format!(
                "{}\n{}",
                title(key),
                grid(&["coalition".into(), "worth".into()], &rows)
            )
        }
    }
}
