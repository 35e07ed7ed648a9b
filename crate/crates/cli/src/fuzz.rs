//! Seeded campaigns for check commands run without an ideal. Even trials
//! use depolarized random forests, which satisfy the hypotheses; odd trials
//! use unconstrained random ideals.

use anyhow::Result;
use monopol::random::{random_depolarization, random_forest, random_ideal, IdealShape};
use monopol::MonomialIdeal;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use crate::report::{self, Outcome};
use crate::{commands, Cli, Command};

fn check(command: &Command, ideal: &MonomialIdeal) -> Result<Outcome> {
    match command {
        Command::CheckKonig { .. } => commands::check_konig(ideal),
        Command::CheckJointRemoval { .. } => commands::check_joint_removal(ideal),
        Command::CheckLocalization { .. } => commands::check_localization(ideal, None),
        Command::CheckAppendix { .. } => commands::check_appendix(ideal),
        _ => unreachable!("only check commands fuzz"),
    }
}

pub fn campaign(cli: &Cli, command: &Command) -> Result<Outcome> {
    let mut rng = ChaCha8Rng::seed_from_u64(cli.seed);
    let shape = IdealShape {
        nvars: 4,
        max_degree: cli.max_degree.max(1),
        max_gens: 5,
    };
    let (mut pass, mut fail, mut inapplicable) = (0usize, 0usize, 0usize);
    let mut witness = Value::Null;
    for trial in 0..cli.trials {
        let ideal = if trial % 2 == 0 {
            let forest = random_forest(&mut rng, cli.max_facets.max(1));
            random_depolarization(&mut rng, &forest).ideal
        } else {
            random_ideal(&mut rng, shape)
        };
        let outcome = check(command, &ideal)?;
        match outcome.verdict.as_deref() {
            Some("pass") => pass += 1,
            Some("fail") => {
                fail += 1;
                if witness.is_null() {
                    witness = json!({
                        "trial": trial,
                        "ideal": report::ideal(&ideal),
                        "results": outcome.results,
                        "witness": outcome.witness,
                    });
                }
            }
            _ => inapplicable += 1,
        }
    }
    let inputs = json!({
        "seed": cli.seed,
        "trials": cli.trials,
        "max_facets": cli.max_facets,
        "max_degree": cli.max_degree,
    });
    let results = json!({
        "pass": pass,
        "fail": fail,
        "inapplicable": inapplicable,
    });
    let verdict = if fail > 0 {
        "fail"
    } else if pass > 0 {
        "pass"
    } else {
        "inapplicable"
    };
    Ok(Outcome::new(inputs, results)
        .verdict(verdict)
        .witness(witness))
}
