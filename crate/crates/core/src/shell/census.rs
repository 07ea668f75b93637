use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use super::{
    check_version, ActionSpec, CharacterSpec, GroupSpec, RootOfUnityCharacter, RootOfUnityExponents, ScenarioFile,
    FORMAT_VERSION,
};
use crate::error::{Error, Result};
use crate::exactfields::finite::gcd;
use crate::exactfields::{Field, FieldDescriptor};
use crate::ramification::{analyze, Choices};

pub const DEFAULT_CENSUS_BUDGET: usize = 10_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CensusFamily {
    /// `{"cyclic": [α_1, ...]}` for every tuple of `alphas` (default: all units).
    Cyclic,
    /// `{"bimult": e}` for every upper triangular exponent matrix.
    Bimult,
    Trivial,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CensusEntry {
    pub field: FieldDescriptor,
    pub group: GroupSpec,
    #[serde(default)]
    pub action: ActionSpec,
    /// Defaults to `x̄(γ^i) = ζ_n^i` for the least generator `γ` of a cyclic tame inertia group.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub ramification: Option<CharacterSpec>,
    pub family: CensusFamily,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub alphas: Option<Vec<Value>>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CensusSpec {
    pub version: String,
    /// Largest number of scenarios the census may expand to.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub budget: Option<usize>,
    #[serde(default)]
    pub entries: Vec<CensusEntry>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CensusRow {
    pub field: String,
    pub group: String,
    pub cocycle: String,
    pub tame: Option<bool>,
    pub hereditary: Option<bool>,
    pub d: Option<u64>,
    pub pi_image: Option<usize>,
    pub h_f: Option<usize>,
    pub components: Option<usize>,
    pub oracle: Option<usize>,
    /// `None` when no count is claimed (not hereditary).
    pub agree: Option<bool>,
    pub error: Option<String>,
}

impl CensusRow {
    pub fn is_mismatch(&self) -> bool {
        self.error.is_some() || self.agree == Some(false)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CensusReport {
    pub rows: Vec<CensusRow>,
    pub total: usize,
    pub mismatches: usize,
}

fn group_name(g: &GroupSpec) -> String {
    match g {
        GroupSpec::Named(n) => n.clone(),
        GroupSpec::Table(t) => format!("table:{}", t.order),
    }
}

fn cartesian(sizes: &[usize]) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for &n in sizes {
        out = out.into_iter().flat_map(|prefix| (0..n).map(move |i| [prefix.clone(), vec![i]].concat())).collect();
    }
    out
}

impl CensusEntry {
    fn automatic_character(&self, field: &Field) -> Result<CharacterSpec> {
        let group = self.group.build()?;
        let probe = ScenarioFile {
            version: None,
            field: self.field.clone(),
            group: self.group.clone(),
            action: self.action.clone(),
            ramification: CharacterSpec::Values(Default::default()),
            cocycle: json!("trivial"),
        };
        let inertia = probe.build()?.inertia();
        let n = inertia.order();
        let p = field.characteristic() as usize;
        let gen = inertia.elements().iter().copied().find(|&x| group.element_order(x) == n);
        let (Some(gen), true) = (gen, n % p != 0) else {
            return Err(Error::InvalidScenario(
                "the automatic ramification character needs a cyclic inertia group of order prime to p".into(),
            ));
        };
        let exponents = (0..n).map(|i| (group.label(group.pow(gen, i as i64)).to_string(), i as u64)).collect();
        Ok(CharacterSpec::RootOfUnity(RootOfUnityCharacter {
            root_of_unity: RootOfUnityExponents { order: n as u64, exponents },
        }))
    }

    fn cocycles(&self, field: &Field) -> Result<Vec<Value>> {
        let group = self.group.build()?;
        let orders = match group.abelian_coords() {
            Some(c) => c.orders.clone(),
            None if self.family == CensusFamily::Trivial => Vec::new(),
            None => return Err(Error::InvalidScenario("cocycle families need an abelian group".into())),
        };
        let r = orders.len();
        Ok(match self.family {
            CensusFamily::Trivial => vec![json!("trivial")],
            CensusFamily::Cyclic => {
                let alphas: Vec<Value> = match &self.alphas {
                    Some(a) => a.clone(),
                    None => match field.units() {
                        Some(units) => units.iter().map(|u| field.encode(u)).collect(),
                        None => return Err(Error::Parse("list the alphas for an infinite field".into())),
                    },
                };
                cartesian(&vec![alphas.len(); r])
                    .into_iter()
                    .map(|ix| json!({ "cyclic": ix.iter().map(|&i| alphas[i].clone()).collect::<Vec<_>>() }))
                    .collect()
            }
            CensusFamily::Bimult => {
                let slots: Vec<(usize, usize)> = (0..r).flat_map(|i| (i..r).map(move |j| (i, j))).collect();
                let sizes: Vec<usize> = slots.iter().map(|&(i, j)| gcd(orders[i], orders[j]) as usize).collect();
                cartesian(&sizes)
                    .into_iter()
                    .map(|ix| {
                        let mut e = vec![vec![0usize; r]; r];
                        for (&(i, j), &v) in slots.iter().zip(&ix) {
                            e[i][j] = v;
                        }
                        json!({ "bimult": e })
                    })
                    .collect()
            }
        })
    }

    /// The scenario files this entry sweeps, in order.
    pub fn expand(&self) -> Result<Vec<ScenarioFile>> {
        let field = Field::from_descriptor(&self.field)?;
        let ramification = match &self.ramification {
            Some(r) => r.clone(),
            None => self.automatic_character(&field)?,
        };
        Ok(self
            .cocycles(&field)?
            .into_iter()
            .map(|cocycle| ScenarioFile {
                version: Some(FORMAT_VERSION.into()),
                field: self.field.clone(),
                group: self.group.clone(),
                action: self.action.clone(),
                ramification: ramification.clone(),
                cocycle,
            })
            .collect())
    }
}

impl CensusSpec {
    pub fn parse(text: &str) -> Result<Self> {
        let spec: CensusSpec = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        check_version(Some(&spec.version))?;
        Ok(spec)
    }

    pub fn budget(&self) -> usize {
        self.budget.unwrap_or(DEFAULT_CENSUS_BUDGET)
    }

    /// All scenarios, failing with [`Error::Budget`] if there are too many.
    pub fn expand(&self) -> Result<Vec<ScenarioFile>> {
        let mut out = Vec::new();
        for e in &self.entries {
            out.extend(e.expand()?);
            if out.len() > self.budget() {
                return Err(Error::Budget(format!("census exceeds {} scenarios", self.budget())));
            }
        }
        Ok(out)
    }
}

fn row(file: &ScenarioFile) -> CensusRow {
    let mut row = CensusRow {
        field: Field::from_descriptor(&file.field).map(|f| f.name()).unwrap_or_default(),
        group: group_name(&file.group),
        cocycle: serde_json::to_string(&file.cocycle).expect("serializable"),
        tame: None,
        hereditary: None,
        d: None,
        pi_image: None,
        h_f: None,
        components: None,
        oracle: None,
        agree: None,
        error: None,
    };
    let report = match file.build().and_then(|s| analyze(&s, &Choices::default())) {
        Ok(r) => r,
        Err(e) => {
            row.error = Some(e.to_string());
            return row;
        }
    };
    row.tame = Some(report.tame);
    row.hereditary = Some(report.hereditary);
    if let Some(s) = &report.structure {
        row.d = Some(s.d);
        row.pi_image = Some(s.pi_image_order);
        row.h_f = Some(s.h_f.len());
        row.components = Some(s.component_count);
        row.oracle = report.oracle.as_ref().and_then(|o| o.components);
        let oracle_ok = row.oracle.is_none_or(|o| o == s.component_count);
        row.agree = Some(s.component_count == s.h_f.len() && oracle_ok);
    }
    row
}

/// Analyzes every scenario of the census in parallel; rows keep entry order.
pub fn run_census(spec: &CensusSpec) -> Result<CensusReport> {
    let files = spec.expand()?;
    let rows: Vec<CensusRow> = files.par_iter().map(row).collect();
    let mismatches = rows.iter().filter(|r| r.is_mismatch()).count();
    Ok(CensusReport { total: rows.len(), rows, mismatches })
}

fn cell<T: ToString>(x: &Option<T>) -> String {
    x.as_ref().map_or("-".into(), ToString::to_string)
}

fn yes_no(x: Option<bool>) -> String {
    match x {
        Some(true) => "yes".into(),
        Some(false) => "no".into(),
        None => "-".into(),
    }
}

impl CensusReport {
    pub fn to_text(&self) -> String {
        let mut out = vec!["# | field | group | cocycle | tame | hereditary | d | |im π| | |H_f| | components | oracle | agree".to_string()];
        for (i, r) in self.rows.iter().enumerate() {
            let agree = match (&r.error, r.agree) {
                (Some(e), _) => format!("ERROR: {e}"),
                (None, Some(true)) => "agree".into(),
                (None, Some(false)) => "MISMATCH".into(),
                (None, None) => "n/a".into(),
            };
            out.push(format!(
                "{} | {} | {} | {} | {} | {} | {} | {} | {} | {} | {} | {}",
                i + 1,
                r.field,
                r.group,
                r.cocycle,
                yes_no(r.tame),
                yes_no(r.hereditary),
                cell(&r.d),
                cell(&r.pi_image),
                cell(&r.h_f),
                cell(&r.components),
                cell(&r.oracle),
                agree
            ));
        }
        out.push(format!("total: {} scenarios; mismatches: {}", self.total, self.mismatches));
        out.join("\n") + "\n"
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("serializable") + "\n"
    }
}
