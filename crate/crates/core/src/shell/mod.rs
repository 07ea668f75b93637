//! Scenario files, census specifications and the command implementations
//! behind the `crossed-order` binary.
//!
//! A local scenario file:
//!
//! ```json
//! {
//!   "version": "crossed-order/1",
//!   "field": {"kind": "prime", "p": 5},
//!   "group": "cyclic:2",
//!   "action": "trivial",
//!   "ramification": {"1": 1, "a": 4},
//!   "cocycle": "cyclic:2"
//! }
//! ```
//!
//! `group` is a named group or `{"order", "table", "labels"}`; `action` is
//! `"trivial"` or `{"frobenius": {label: k}}` (unlisted elements act
//! trivially); `ramification` maps each inertia element to `x̄(σ)`, or is
//! `{"root_of_unity": {"order": n, "exponents": {label: k}}}` for
//! `x̄(σ) = ζ_n^k`. A global scenario file has `version`, `group`,
//! `components`, `permutation` (label to the 1-based images of the
//! components) and `local` (a local scenario over the stabilizer of
//! component 1, without `version`, whose group labels are labels of `group`).

mod census;
mod commands;

pub use census::{run_census, CensusEntry, CensusFamily, CensusReport, CensusRow, CensusSpec, DEFAULT_CENSUS_BUDGET};
pub use commands::{cmd_analyze, cmd_census, cmd_reduce, cmd_validate, exit_code, CommandOutput};

use std::collections::BTreeMap;
use std::sync::Arc;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::cocycles::{CocycleSpec, UnitModule};
use crate::error::{Error, Result};
use crate::exactfields::{Field, FieldDescriptor};
use crate::groupkit::{named_group, FiniteGroup, GroupAction};
use crate::ramification::{RamificationCharacter, RamifiedScenario};
use crate::reduction::GlobalScenario;

pub const FORMAT_VERSION: &str = "crossed-order/1";

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum GroupSpec {
    Named(String),
    Table(GroupTable),
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GroupTable {
    pub order: usize,
    pub table: Vec<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
}

impl GroupSpec {
    pub fn build(&self) -> Result<FiniteGroup> {
        match self {
            GroupSpec::Named(name) => named_group(name),
            GroupSpec::Table(t) => {
                if t.table.len() != t.order {
                    return Err(Error::InvalidGroup(format!("table has {} rows for order {}", t.table.len(), t.order)));
                }
                FiniteGroup::from_table(t.table.clone(), t.labels.clone())
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ActionSpec {
    Named(String),
    Frobenius(FrobeniusAction),
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FrobeniusAction {
    pub frobenius: BTreeMap<String, u32>,
}

impl Default for ActionSpec {
    fn default() -> Self {
        ActionSpec::Named("trivial".into())
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum CharacterSpec {
    RootOfUnity(RootOfUnityCharacter),
    Values(BTreeMap<String, Value>),
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RootOfUnityCharacter {
    pub root_of_unity: RootOfUnityExponents,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RootOfUnityExponents {
    pub order: u64,
    pub exponents: BTreeMap<String, u64>,
}

/// A local scenario; `version` is required at top level and absent when
/// nested in a global file.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ScenarioFile {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub version: Option<String>,
    pub field: FieldDescriptor,
    pub group: GroupSpec,
    #[serde(default)]
    pub action: ActionSpec,
    pub ramification: CharacterSpec,
    pub cocycle: Value,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GlobalFile {
    pub version: String,
    pub group: GroupSpec,
    pub components: usize,
    pub permutation: BTreeMap<String, Vec<usize>>,
    pub local: ScenarioFile,
}

#[derive(Clone, Debug, PartialEq)]
pub enum AnyScenario {
    Local(ScenarioFile),
    Global(GlobalFile),
}

fn index(group: &FiniteGroup, label: &str) -> Result<usize> {
    group.index_of(label).ok_or_else(|| Error::Parse(format!("unknown group element {label:?}")))
}

fn check_version(v: Option<&str>) -> Result<()> {
    match v {
        Some(FORMAT_VERSION) => Ok(()),
        Some(other) => Err(Error::Parse(format!("unsupported version {other:?}, expected {FORMAT_VERSION:?}"))),
        None => Err(Error::Parse("missing version".into())),
    }
}

fn canonical(v: &impl Serialize) -> String {
    serde_json::to_string_pretty(v).expect("serializable") + "\n"
}

impl AnyScenario {
    /// Parses either kind of scenario file, rejecting unknown keys.
    pub fn parse(text: &str) -> Result<Self> {
        let value: Value = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        let global = value.get("components").is_some();
        if global {
            let file: GlobalFile = serde_json::from_value(value).map_err(|e| Error::Parse(e.to_string()))?;
            check_version(Some(&file.version))?;
            if file.local.version.is_some() {
                return Err(Error::Parse("the nested local scenario takes no version".into()));
            }
            Ok(AnyScenario::Global(file))
        } else {
            let file: ScenarioFile = serde_json::from_value(value).map_err(|e| Error::Parse(e.to_string()))?;
            check_version(file.version.as_deref())?;
            Ok(AnyScenario::Local(file))
        }
    }

    /// Canonical serialization: fixed key order, two-space indentation.
    pub fn to_canonical_string(&self) -> String {
        match self {
            AnyScenario::Local(f) => canonical(f),
            AnyScenario::Global(f) => canonical(f),
        }
    }
}

impl ScenarioFile {
    pub fn parse(text: &str) -> Result<Self> {
        match AnyScenario::parse(text)? {
            AnyScenario::Local(f) => Ok(f),
            AnyScenario::Global(_) => Err(Error::Parse("expected a local scenario file".into())),
        }
    }

    pub fn to_canonical_string(&self) -> String {
        canonical(self)
    }

    /// Assembles the scenario. Violations of the scenario invariants are
    /// left for [`crate::ramification::validate_scenario`] to report.
    pub fn build(&self) -> Result<RamifiedScenario> {
        let field = Field::from_descriptor(&self.field)?;
        let group = Arc::new(self.group.build()?);
        let action = match &self.action {
            ActionSpec::Named(s) if s == "trivial" => GroupAction::trivial(&group),
            ActionSpec::Named(s) => return Err(Error::Parse(format!("unknown action {s:?}"))),
            ActionSpec::Frobenius(f) => {
                let mut powers = vec![0; group.order()];
                for (label, k) in &f.frobenius {
                    powers[index(&group, label)?] = *k;
                }
                GroupAction::new(&group, &field, &powers)?
            }
        };
        let module = UnitModule::new(field.clone(), group.clone(), action);
        let character = match &self.ramification {
            CharacterSpec::Values(map) => RamificationCharacter::Values(
                map.iter()
                    .map(|(l, v)| Ok((index(&group, l)?, field.decode(v)?)))
                    .collect::<Result<Vec<_>>>()?,
            ),
            CharacterSpec::RootOfUnity(r) => RamificationCharacter::Exponents {
                order: r.root_of_unity.order,
                exponents: r
                    .root_of_unity
                    .exponents
                    .iter()
                    .map(|(l, k)| Ok((index(&group, l)?, *k)))
                    .collect::<Result<Vec<_>>>()?,
            },
        };
        let table = CocycleSpec::parse(&self.cocycle)?.expand(&module)?;
        Ok(RamifiedScenario::new(module, character, table))
    }
}

impl GlobalFile {
    pub fn build(&self) -> Result<GlobalScenario> {
        let group = Arc::new(self.group.build()?);
        let local = self.local.build()?;
        let k = self.components;
        let mut permutation = vec![None; group.order()];
        for (label, images) in &self.permutation {
            if images.len() != k || images.iter().any(|&j| j == 0 || j > k) {
                return Err(Error::Parse(format!("permutation of {label:?} must list {k} components numbered 1..{k}")));
            }
            permutation[index(&group, label)?] = Some(images.iter().map(|j| j - 1).collect::<Vec<_>>());
        }
        let permutation = permutation
            .into_iter()
            .enumerate()
            .map(|(g, p)| p.ok_or_else(|| Error::Parse(format!("no permutation given for {:?}", group.label(g)))))
            .collect::<Result<Vec<_>>>()?;
        let embedding = GlobalScenario::embedding_by_labels(&group, local.group())?;
        GlobalScenario::new(group, permutation, local, embedding)
    }

    /// The local scenario as a standalone file.
    pub fn local_file(&self) -> ScenarioFile {
        ScenarioFile { version: Some(FORMAT_VERSION.into()), ..self.local.clone() }
    }
}

#[cfg(test)]
mod tests;
