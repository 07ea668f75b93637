use std::path::Path;

use serde_json::json;

use super::{AnyScenario, CensusSpec};
use crate::error::{Error, Result};
use crate::ramification::{analyze, cross_check_inflation, validate_scenario, AnalysisReport, Choices};
use crate::reduction::{analyze_global, decomposition_group, reduce_to_local};

/// What a command prints and the process exit status.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CommandOutput {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl CommandOutput {
    fn ok(stdout: String) -> Self {
        CommandOutput { code: 0, stdout, stderr: String::new() }
    }

    fn fail(e: &Error) -> Self {
        CommandOutput { code: exit_code(e), stdout: String::new(), stderr: format!("error: {e}\n") }
    }
}

/// 2 for malformed input, 3 for exhausted budgets, 1 for everything else.
pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Parse(_) => 2,
        Error::Budget(_) | Error::OracleOutOfRange(_) => 3,
        _ => 1,
    }
}

fn read(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| Error::Parse(format!("cannot read {}: {e}", path.display())))
}

fn load(path: &Path) -> Result<AnyScenario> {
    AnyScenario::parse(&read(path)?)
}

pub fn cmd_validate(path: &Path, json_out: bool) -> CommandOutput {
    let file = match load(path) {
        Ok(f) => f,
        Err(e) => return CommandOutput::fail(&e),
    };
    let built = match &file {
        AnyScenario::Local(f) => f.build(),
        AnyScenario::Global(g) => g.build().and_then(|gs| {
            if gs.is_transitive() {
                Ok(gs.local().clone())
            } else {
                Err(Error::Intransitive)
            }
        }),
    };
    let scenario = match built {
        Ok(s) => s,
        Err(e) => return CommandOutput::fail(&e),
    };
    let report = validate_scenario(&scenario);
    let code = if report.is_valid() { 0 } else { 1 };
    let stdout = if json_out {
        serde_json::to_string_pretty(&json!({ "valid": report.is_valid(), "violations": report.violations }))
            .expect("serializable")
            + "\n"
    } else if report.is_valid() {
        "valid\n".to_string()
    } else {
        let mut lines = vec!["invalid:".to_string()];
        lines.extend(report.messages().into_iter().map(|m| format!("  - {m}")));
        lines.join("\n") + "\n"
    };
    CommandOutput { code, stdout, stderr: String::new() }
}

fn render(report: &AnalysisReport, json_out: bool) -> String {
    if json_out {
        report.to_json()
    } else {
        report.to_text()
    }
}

pub fn cmd_analyze(path: &Path, oracle: bool, json_out: bool, choices: &Choices) -> CommandOutput {
    let file = match load(path) {
        Ok(f) => f,
        Err(e) => return CommandOutput::fail(&e),
    };
    let analyzed = match &file {
        AnyScenario::Local(f) => f.build().and_then(|s| Ok((analyze(&s, choices)?, s))),
        AnyScenario::Global(g) => g.build().and_then(|gs| Ok((analyze_global(&gs, choices)?, reduce_to_local(&gs)?))),
    };
    let (mut report, scenario) = match analyzed {
        Ok(x) => x,
        Err(e) => return CommandOutput::fail(&e),
    };
    if oracle {
        match cross_check_inflation(&scenario, &mut report) {
            Ok(()) => {}
            Err(Error::OracleFiniteOnly) => {
                report.notes.push("inflation oracle skipped: oracle supports finite fields only".into());
            }
            Err(e @ Error::OracleOutOfRange(_)) => {
                return CommandOutput { code: 3, stdout: render(&report, json_out), stderr: format!("error: {e}\n") };
            }
            Err(e) => return CommandOutput::fail(&e),
        }
    }
    CommandOutput::ok(render(&report, json_out))
}

pub fn cmd_census(path: &Path, json_out: bool) -> CommandOutput {
    let result = read(path).and_then(|t| CensusSpec::parse(&t)).and_then(|s| super::run_census(&s));
    match result {
        Ok(report) => {
            let stdout = if json_out { report.to_json() } else { report.to_text() };
            let code = if report.mismatches == 0 { 0 } else { 1 };
            CommandOutput { code, stdout, stderr: String::new() }
        }
        Err(e) => CommandOutput::fail(&e),
    }
}

/// Reduces a global scenario to component 1; optionally writes the local
/// scenario file to `output`.
pub fn cmd_reduce(path: &Path, json_out: bool, choices: &Choices, output: Option<&Path>) -> CommandOutput {
    let global = match load(path) {
        Ok(AnyScenario::Global(g)) => g,
        Ok(AnyScenario::Local(_)) => {
            return CommandOutput::fail(&Error::Parse("reduce expects a global scenario file".into()))
        }
        Err(e) => return CommandOutput::fail(&e),
    };
    let result = global.build().and_then(|gs| {
        let g1 = decomposition_group(&gs, 0)?;
        let report = analyze_global(&gs, choices)?;
        Ok((gs, g1, report))
    });
    let (gs, g1, report) = match result {
        Ok(x) => x,
        Err(e) => return CommandOutput::fail(&e),
    };
    let local = global.local_file();
    let local_text = local.to_canonical_string();
    if let Some(out) = output {
        if let Err(e) = std::fs::write(out, &local_text) {
            return CommandOutput {
                code: 1,
                stdout: String::new(),
                stderr: format!("error: cannot write {}: {e}\n", out.display()),
            };
        }
    }
    let labels: Vec<&str> = g1.elements().iter().map(|&x| gs.group().label(x)).collect();
    let stdout = if json_out {
        let v = json!({
            "components": gs.components(),
            "decomposition_group": labels,
            "local": local,
            "report": report,
        });
        serde_json::to_string_pretty(&v).expect("serializable") + "\n"
    } else {
        format!(
            "components: {}; decomposition group G_1 = {{{}}}\nlocal scenario:\n{}{}",
            gs.components(),
            labels.join(", "),
            local_text,
            report.to_text()
        )
    };
    CommandOutput::ok(stdout)
}
