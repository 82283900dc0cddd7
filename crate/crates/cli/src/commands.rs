use pgindex::algebra::{axiom_report, is_mergeable, mcv_union_check, oplus};
use pgindex::average::{average_game, compare_pgv_vs_jk};
use pgindex::critical::{
    minimal_critical_coalitions, minimal_critical_vectors, minimal_critical_vectors_oracle,
    minimal_winning_coalitions, real_gaining_coalitions, with_worths,
};
use pgindex::file::{Game, GameFile};
use pgindex::indices::{
    jk_potential, jk_potential_recursive, lambda_total, normalized_variant, pgi_normalized,
    pgi_raw, pgv_tu, public_good_value_jk, tu_potential, variant_value, IndexReport, Listing,
};
use pgindex::{Coalition, JKGame, Rational, SimpleGame, TUGame};

use crate::render::{render, Column, Fact, Section};
use crate::{load_game, AnalysisRequest, CliError, Command, Options, Outcome};

/// Loads the inputs, dispatches the command and renders its report.
pub fn run(request: &AnalysisRequest) -> Result<Outcome, CliError> {
    let games = request
        .inputs
        .iter()
        .map(|path| load_game(path, request.options.cap))
        .collect::<Result<Vec<_>, _>>()?;
    let mut report = Report::default();
    let options = &request.options;
    match request.command {
        Command::Analyze => analyze(&games[0], options, &mut report)?,
        Command::Mcv => mcv(&games[0], options, &mut report)?,
        Command::Potential => potential(&games[0], &mut report)?,
        Command::Merge => merge(&games[0], &games[1], &mut report)?,
        Command::Average => average(&games[0], &mut report)?,
        Command::Axioms => axioms(&games, &mut report)?,
        Command::Embed => {
            return Ok(Outcome {
                text: embed(&games[0])?.to_json(),
                failures: Vec::new(),
            })
        }
    }
    Ok(Outcome {
        text: render(request.command.name(), &report.sections, options.format),
        failures: report.failures,
    })
}

#[derive(Default)]
struct Report {
    sections: Vec<Section>,
    failures: Vec<String>,
}

impl Report {
    fn push(&mut self, section: Section) {
        self.sections.push(section);
    }

    /// Records a column that may have failed; failures make the run exit 1.
    fn column(&mut self, name: &str, values: pgindex::Result<Vec<Rational>>) -> Column {
        let values = values.map_err(|err| {
            self.failures.push(format!("{name}: {err}"));
            err.to_string()
        });
        Column {
            name: name.to_string(),
            values,
        }
    }

    fn fail(&mut self, message: String) {
        self.failures.push(message);
    }
}

fn header(game: &Game) -> Section {
    let (shape, players) = match game {
        Game::Jk(v) => (Some((v.j(), v.k())), v.labels().to_vec()),
        Game::Simple(v) => (None, (1..=v.n()).collect()),
        Game::Tu(v) => (None, v.labels().to_vec()),
    };
    Section::Game {
        kind: game.kind(),
        n: game.n(),
        shape,
        players,
    }
}

fn values(report: pgindex::Result<IndexReport>) -> pgindex::Result<Vec<Rational>> {
    report.map(|r| r.player_values)
}

fn totals(report: &IndexReport) -> Section {
    Section::Facts {
        key: "totals",
        rows: vec![
            ("potential".into(), Fact::Number(report.potential.clone())),
            ("lambda".into(), Fact::Number(report.lambda_total.clone())),
        ],
    }
}

fn coalitions_of(report: &IndexReport) -> Vec<(Coalition, Rational)> {
    match &report.listing {
        Listing::Coalitions(rows) => rows.clone(),
        Listing::Vectors(_) => Vec::new(),
    }
}

fn jk_oracle(v: &JKGame, report: &mut Report) {
    let fast = minimal_critical_vectors(v);
    let row = match minimal_critical_vectors_oracle(v) {
        Ok(oracle) => {
            let agree = oracle == fast;
            if !agree {
                report.fail("fast and brute-force minimal critical vectors disagree".into());
            }
            Fact::Flag(agree)
        }
        Err(err) => {
            report.fail(format!("oracle: {err}"));
            Fact::Text(err.to_string())
        }
    };
    report.push(Section::Facts {
        key: "oracle",
        rows: vec![("mcv_agrees".into(), row)],
    });
}

fn simple_oracle(v: &SimpleGame, report: &mut Report) {
    let mwc = minimal_winning_coalitions(v);
    let vectors: Vec<Coalition> = minimal_critical_vectors(&v.to_binary_game())
        .iter()
        .map(|cv| Coalition::from_members(cv.profile.support().map(|pos| pos + 1)))
        .collect();
    let agree = mwc == vectors;
    if !agree {
        report.fail("minimal winning coalitions disagree with the embedded vectors".into());
    }
    report.push(Section::Facts {
        key: "oracle",
        rows: vec![("mwc_agrees_with_mcv".into(), Fact::Flag(agree))],
    });
}

fn tu_oracle(v: &TUGame, report: &mut Report) {
    let agree = minimal_critical_coalitions(v) == real_gaining_coalitions(v);
    if v.is_monotone() && !agree {
        report.fail("MCC and RGC differ on a monotone game".into());
    }
    report.push(Section::Facts {
        key: "oracle",
        rows: vec![("mcc_equals_rgc".into(), Fact::Flag(agree))],
    });
}

fn analyze(game: &Game, options: &Options, report: &mut Report) -> Result<(), CliError> {
    report.push(header(game));
    match game {
        Game::Jk(v) => {
            let psi = public_good_value_jk(v);
            let columns = vec![
                report.column("potential_value", Ok(psi.player_values.clone())),
                report.column("surplus_variant", Ok(variant_value(v).player_values)),
                report.column("normalized_variant", values(normalized_variant(v))),
            ];
            report.push(Section::Values {
                key: "values",
                players: v.labels().to_vec(),
                columns,
            });
            report.push(totals(&psi));
            report.push(Section::Vectors {
                key: "mcv",
                set: minimal_critical_vectors(v),
            });
            if options.oracle {
                jk_oracle(v, report);
            }
        }
        Game::Simple(v) => {
            let raw = pgi_raw(v);
            let columns = vec![
                report.column("raw_pgi", Ok(raw.player_values.clone())),
                report.column("normalized_pgi", values(pgi_normalized(v))),
                report.column(
                    "tu_pgv",
                    Ok(pgv_tu(&v.to_tu(), options.family).player_values),
                ),
            ];
            report.push(Section::Values {
                key: "values",
                players: (1..=v.n()).collect(),
                columns,
            });
            report.push(totals(&raw));
            report.push(Section::Coalitions {
                key: "mwc",
                rows: coalitions_of(&raw),
            });
            if options.oracle {
                simple_oracle(v, report);
            }
        }
        Game::Tu(v) => {
            let pgv = pgv_tu(v, options.family);
            let columns = vec![report.column("tu_pgv", Ok(pgv.player_values.clone()))];
            report.push(Section::Values {
                key: "values",
                players: v.labels().to_vec(),
                columns,
            });
            report.push(totals(&pgv));
            report.push(Section::Facts {
                key: "properties",
                rows: vec![("monotone".into(), Fact::Flag(v.is_monotone()))],
            });
            report.push(Section::Coalitions {
                key: family_key(options),
                rows: coalitions_of(&pgv),
            });
            if options.oracle {
                tu_oracle(v, report);
            }
        }
    }
    Ok(())
}

fn family_key(options: &Options) -> &'static str {
    match options.family {
        pgindex::indices::Family::Mcc => "mcc",
        pgindex::indices::Family::Rgc => "rgc",
    }
}

fn mcv(game: &Game, options: &Options, report: &mut Report) -> Result<(), CliError> {
    match game {
        Game::Jk(v) => {
            report.push(Section::Vectors {
                key: "mcv",
                set: minimal_critical_vectors(v),
            });
            if options.oracle {
                jk_oracle(v, report);
            }
        }
        Game::Simple(v) => {
            let rows = minimal_winning_coalitions(v)
                .into_iter()
                .map(|s| (s, Rational::from_integer(1.into())))
                .collect();
            report.push(Section::Coalitions { key: "mwc", rows });
            if options.oracle {
                simple_oracle(v, report);
            }
        }
        Game::Tu(v) => {
            let rows = with_worths(v, &options.family.coalitions(v));
            report.push(Section::Coalitions {
                key: family_key(options),
                rows,
            });
            if options.oracle {
                tu_oracle(v, report);
            }
        }
    }
    Ok(())
}

fn potential(game: &Game, report: &mut Report) -> Result<(), CliError> {
    report.push(header(game));
    match game {
        Game::Jk(v) => {
            let direct = jk_potential(v);
            let mut rows = vec![("direct".into(), Fact::Number(direct.clone()))];
            match jk_potential_recursive(v) {
                Ok(recursive) => {
                    if recursive != direct {
                        report.fail(format!(
                            "recursive potential {recursive} differs from {direct}"
                        ));
                    }
                    rows.push(("recursive".into(), Fact::Number(recursive)));
                }
                Err(err) => {
                    report.fail(format!("recursive: {err}"));
                    rows.push(("recursive".into(), Fact::Text(err.to_string())));
                }
            }
            rows.push(("lambda".into(), Fact::Number(lambda_total(v))));
            let drops = v
                .labels()
                .iter()
                .map(|&p| Ok(&direct - jk_potential(&v.remove_player(p)?)))
                .collect::<pgindex::Result<Vec<_>>>()?;
            let columns = vec![
                report.column("potential_value", Ok(public_good_value_jk(v).player_values)),
                report.column("potential_drop", Ok(drops)),
            ];
            report.push(Section::Facts {
                key: "potential",
                rows,
            });
            report.push(Section::Values {
                key: "values",
                players: v.labels().to_vec(),
                columns,
            });
        }
        Game::Simple(_) | Game::Tu(_) => {
            let v = match game {
                Game::Simple(s) => s.to_tu(),
                Game::Tu(t) => t.clone(),
                Game::Jk(_) => unreachable!(),
            };
            let direct = tu_potential(&v);
            let drops = v
                .labels()
                .iter()
                .map(|&p| Ok(&direct - tu_potential(&v.remove_player(p)?)))
                .collect::<pgindex::Result<Vec<_>>>()?;
            let columns = vec![
                report.column("tu_pgv", Ok(pgv_tu(&v, Default::default()).player_values)),
                report.column("potential_drop", Ok(drops)),
            ];
            report.push(Section::Facts {
                key: "potential",
                rows: vec![("direct".into(), Fact::Number(direct))],
            });
            report.push(Section::Values {
                key: "values",
                players: v.labels().to_vec(),
                columns,
            });
        }
    }
    Ok(())
}

/// A `(j,k)` game for commands that only take multi-level games; simple
/// games are embedded as `(2,2)` games.
fn as_jk(game: &Game, command: &str) -> Result<JKGame, CliError> {
    match game {
        Game::Jk(v) => Ok(v.clone()),
        Game::Simple(v) => Ok(v.to_binary_game()),
        Game::Tu(_) => Err(CliError::Unsupported(format!(
            "`{command}` needs a jk or simple game"
        ))),
    }
}

fn merge(left: &Game, right: &Game, report: &mut Report) -> Result<(), CliError> {
    let (v, w) = (as_jk(left, "merge")?, as_jk(right, "merge")?);
    let merge = is_mergeable(&v, &w)?;
    let mergeable = merge.mergeable();
    report.push(Section::Merge(merge));
    if mergeable {
        let holds = mcv_union_check(&v, &w)?;
        if !holds {
            report.fail("MCV of the merged game is not the disjoint union".into());
        }
        report.push(Section::Facts {
            key: "union",
            rows: vec![("mcv_is_disjoint_union".into(), Fact::Flag(holds))],
        });
        report.push(Section::Vectors {
            key: "merged_mcv",
            set: minimal_critical_vectors(&oplus(&v, &w)?),
        });
    }
    Ok(())
}

fn average(game: &Game, report: &mut Report) -> Result<(), CliError> {
    let v = as_jk(game, "average")?;
    let result = average_game(&v)?;
    let comparison = compare_pgv_vs_jk(&v)?;
    report.push(header(game));
    report.push(Section::Worths {
        key: "average_game",
        game: result.tu.clone(),
    });
    report.push(Section::Facts {
        key: "average_properties",
        rows: vec![
            ("scale".into(), Fact::Number(result.scale.clone())),
            (
                "top_reaches_max".into(),
                Fact::Flag(result.top_reaches_max()),
            ),
        ],
    });
    let columns = vec![
        report.column("pgv_of_average", Ok(comparison.pgv_of_average.clone())),
        report.column("potential_value", Ok(comparison.jk_value.clone())),
        report.column("surplus_variant", Ok(comparison.variant.clone())),
    ];
    report.push(Section::Values {
        key: "comparison",
        players: comparison.players.clone(),
        columns,
    });
    report.push(Section::Facts {
        key: "comparison_summary",
        rows: vec![
            (
                "equal_after_normalization".into(),
                Fact::Flag(comparison.equal_after_normalization),
            ),
            ("degenerate".into(), Fact::Flag(comparison.degenerate)),
        ],
    });
    Ok(())
}

fn axioms(games: &[Game], report: &mut Report) -> Result<(), CliError> {
    let v = as_jk(&games[0], "axioms")?;
    let w = games.get(1).map(|g| as_jk(g, "axioms")).transpose()?;
    let axioms = axiom_report(&v, w.as_ref())?;
    for (name, verdict) in axioms.verdicts() {
        if !verdict.holds() {
            report.fail(format!("{name}: {verdict}"));
        }
    }
    report.push(Section::Axioms(axioms));
    Ok(())
}

/// Simple games embed as `(2,2)` games, `(2,k)` games as TU games.
fn embed(game: &Game) -> Result<GameFile, CliError> {
    match game {
        Game::Simple(v) => Ok(GameFile::from_jk(&v.to_binary_game())),
        Game::Jk(v) => Ok(GameFile::from_tu(&TUGame::from_two_level(v)?)),
        Game::Tu(_) => Err(CliError::Unsupported("TU games have no embedding".into())),
    }
}
