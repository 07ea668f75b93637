//! Residue-level ramification data and the maximality analyzer.
//!
//! A [`RamifiedScenario`] carries the residue field `K`, the group `G` with
//! its action, the ramification character `x̄ : G_I → K*` (`σ(w) = x_σ w` for
//! a uniformizer `w`) and the reduced cocycle `f̄`. The valuation ring itself
//! never appears.

mod analysis;
mod report;

pub use analysis::{
    analyze, conductor, conductor_by_inflation, cross_check_inflation, gamma_f, heredity_verdict, inertia_split, verify_idempotent_translation,
    Choices, Conductor, GammaF, HeredityEvidence, HeredityVerdict, InertiaSplit,
};
pub use report::{AnalysisReport, EvidenceRecord, OracleSummary, Structure, TowerRecord};

use std::fmt;

use serde::Serialize;

use crate::cocycles::{validate_cocycle, CocycleViolation, TwoCocycle, UnitModule};
use crate::crossedalg::CrossedProduct;
use crate::error::{Error, Result};
use crate::exactfields::FieldElement;
use crate::groupkit::{FiniteGroup, Subgroup};

/// How the ramification character is given.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RamificationCharacter {
    /// `x̄(σ)` for each listed element.
    Values(Vec<(usize, FieldElement)>),
    /// `x̄(σ) = ζ_n^(k_σ)` with `ζ_n` the deterministic primitive `n`-th root of unity.
    Exponents { order: u64, exponents: Vec<(usize, u64)> },
}

impl RamificationCharacter {
    fn entries(&self) -> Vec<usize> {
        match self {
            RamificationCharacter::Values(v) => v.iter().map(|(g, _)| *g).collect(),
            RamificationCharacter::Exponents { exponents, .. } => exponents.iter().map(|(g, _)| *g).collect(),
        }
    }
}

#[derive(Clone, Debug)]
pub struct RamifiedScenario {
    module: UnitModule,
    character: RamificationCharacter,
    cocycle: Vec<Vec<FieldElement>>,
}

/// A failed scenario invariant.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Violation {
    Cocycle { message: String },
    CharacterDomain { missing: Vec<String>, extra: Vec<String> },
    CharacterValue { element: String, message: String },
    NotHomomorphism { s: String, t: String },
    KernelNotPGroup { kernel_order: usize, p: u32 },
    ImageOrderNotPrimeToP { e0: u64, p: u32 },
    NotEquivariant { g: String, sigma: String },
    MissingRootOfUnity { order: u64 },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::Cocycle { message } => write!(f, "invalid cocycle: {message}"),
            Violation::CharacterDomain { missing, extra } => write!(
                f,
                "ramification character must be defined exactly on the inertia group (missing [{}], extra [{}])",
                missing.join(", "),
                extra.join(", ")
            ),
            Violation::CharacterValue { element, message } => write!(f, "x̄({element}): {message}"),
            Violation::NotHomomorphism { s, t } => write!(f, "x̄ is not a homomorphism: x̄({s}·{t}) ≠ x̄({s})x̄({t})"),
            Violation::KernelNotPGroup { kernel_order, p } => {
                write!(f, "kernel of x̄ has order {kernel_order}, not a power of {p}")
            }
            Violation::ImageOrderNotPrimeToP { e0, p } => write!(f, "image order not prime to p (e_0 = {e0}, p = {p})"),
            Violation::NotEquivariant { g, sigma } => {
                write!(f, "x̄ is not G-equivariant: x̄(gσg⁻¹) ≠ g(x̄(σ)) for g = {g}, σ = {sigma}")
            }
            Violation::MissingRootOfUnity { order } => {
                write!(f, "residue field has no primitive {order}-th root of unity")
            }
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn messages(&self) -> Vec<String> {
        self.violations.iter().map(ToString::to_string).collect()
    }
}

fn is_power_of(mut n: u64, p: u64) -> bool {
    while n > 1 && n.is_multiple_of(p) {
        n /= p;
    }
    n == 1
}

impl RamifiedScenario {
    /// Bundles the data; nothing is checked until [`validate_scenario`].
    pub fn new(module: UnitModule, character: RamificationCharacter, cocycle: Vec<Vec<FieldElement>>) -> Self {
        RamifiedScenario { module, character, cocycle }
    }

    pub fn with_cocycle(module: UnitModule, character: RamificationCharacter, cocycle: &TwoCocycle) -> Self {
        Self::new(module, character, cocycle.table().to_vec())
    }

    pub fn module(&self) -> &UnitModule {
        &self.module
    }

    pub fn group(&self) -> &FiniteGroup {
        self.module.group()
    }

    pub fn character(&self) -> &RamificationCharacter {
        &self.character
    }

    pub fn inertia(&self) -> Subgroup {
        self.module.inertia()
    }

    pub fn cocycle_table(&self) -> &[Vec<FieldElement>] {
        &self.cocycle
    }

    /// The cocycle, trusted to have passed validation.
    pub fn cocycle(&self) -> TwoCocycle {
        TwoCocycle::from_table_unchecked(self.cocycle.clone())
    }

    pub fn algebra(&self) -> CrossedProduct {
        CrossedProduct::new(self.module.clone(), self.cocycle())
    }

    /// `x̄(σ)` for every `σ ∈ G_I`, indexed by group element.
    pub fn character_values(&self) -> Result<Vec<Option<FieldElement>>> {
        let field = self.module.field();
        let mut out = vec![None; self.group().order()];
        match &self.character {
            RamificationCharacter::Values(v) => {
                for (g, x) in v {
                    out[*g] = Some(x.clone());
                }
            }
            RamificationCharacter::Exponents { order, exponents } => {
                let zeta = field.primitive_root_of_unity(*order)?;
                for (g, k) in exponents {
                    out[*g] = Some(field.pow(&zeta, (*k % *order) as i64)?);
                }
            }
        }
        Ok(out)
    }

    /// `P = ker x̄` (of a valid scenario).
    pub fn second_ramification_group(&self) -> Result<Subgroup> {
        let values = self.character_values()?;
        let field = self.module.field();
        let kernel: Vec<usize> = self
            .inertia()
            .elements()
            .iter()
            .copied()
            .filter(|&g| values[g].as_ref().is_some_and(|x| field.is_one(x)))
            .collect();
        self.group().subgroup(&kernel)
    }
}

/// Checks every scenario invariant and lists each violation found.
pub fn validate_scenario(s: &RamifiedScenario) -> ValidationReport {
    let mut violations = Vec::new();
    let (field, g) = (s.module.field(), s.group());
    let label = |x: usize| g.label(x).to_string();
    let n = g.order();
    if s.cocycle.len() != n || s.cocycle.iter().any(|r| r.len() != n) {
        violations.push(Violation::Cocycle { message: format!("table must be {n}×{n}") });
    } else {
        match validate_cocycle(&s.module, &s.cocycle) {
            Err(e) => violations.push(Violation::Cocycle { message: e.to_string() }),
            Ok(r) => match r.violation {
                None => {}
                Some(CocycleViolation::NotNormalized { g: x }) => {
                    violations.push(Violation::Cocycle { message: format!("not normalized at {}", label(x)) })
                }
                Some(CocycleViolation::Identity { g: a, h: b, k: c }) => violations.push(Violation::Cocycle {
                    message: format!("cocycle identity fails at ({}, {}, {})", label(a), label(b), label(c)),
                }),
            },
        }
    }

    let inertia = s.inertia();
    let entries = s.character.entries();
    let mut sorted = entries.clone();
    sorted.sort();
    sorted.dedup();
    let missing: Vec<String> = inertia.elements().iter().filter(|x| !sorted.contains(x)).map(|&x| label(x)).collect();
    let extra: Vec<String> = sorted.iter().filter(|&&x| !inertia.contains(x)).map(|&x| label(x)).collect();
    if !missing.is_empty() || !extra.is_empty() || sorted.len() != entries.len() {
        violations.push(Violation::CharacterDomain { missing, extra });
        return ValidationReport { violations };
    }
    let p = field.characteristic();
    let elems = inertia.elements();

    // homomorphism, kernel and image order
    let kernel_order;
    match &s.character {
        RamificationCharacter::Values(v) => {
            let mut value = vec![None; n];
            for (x, y) in v {
                if !field.contains(y) || field.is_zero(y) {
                    violations.push(Violation::CharacterValue { element: label(*x), message: "not a unit".into() });
                    return ValidationReport { violations };
                }
                value[*x] = Some(y.clone());
            }
            let at = |x: usize| value[x].as_ref().unwrap();
            if let Some((a, b)) = first_failure(elems, |a, b| *at(g.mul(a, b)) == field.mul(at(a), at(b))) {
                violations.push(Violation::NotHomomorphism { s: label(a), t: label(b) });
                return ValidationReport { violations };
            }
            kernel_order = elems.iter().filter(|&&x| field.is_one(at(x))).count();
        }
        RamificationCharacter::Exponents { order, exponents } => {
            if *order == 0 {
                violations.push(Violation::CharacterValue {
                    element: label(g.identity()),
                    message: "root of unity order must be positive".into(),
                });
                return ValidationReport { violations };
            }
            let mut k = vec![0u64; n];
            for (x, e) in exponents {
                k[*x] = e % order;
            }
            if let Some((a, b)) = first_failure(elems, |a, b| k[g.mul(a, b)] == (k[a] + k[b]) % order) {
                violations.push(Violation::NotHomomorphism { s: label(a), t: label(b) });
                return ValidationReport { violations };
            }
            kernel_order = elems.iter().filter(|&&x| k[x] == 0).count();
        }
    }
    let e0 = (inertia.order() / kernel_order) as u64;
    if !is_power_of(kernel_order as u64, p as u64) {
        violations.push(Violation::KernelNotPGroup { kernel_order, p });
    }
    if e0.is_multiple_of(p as u64) {
        violations.push(Violation::ImageOrderNotPrimeToP { e0, p });
        return ValidationReport { violations };
    }
    if let RamificationCharacter::Exponents { order, .. } = &s.character {
        if field.primitive_root_of_unity(*order).is_err() {
            violations.push(Violation::MissingRootOfUnity { order: *order });
            return ValidationReport { violations };
        }
    }
    if field.primitive_root_of_unity(e0).is_err() {
        violations.push(Violation::MissingRootOfUnity { order: e0 });
    }

    let values = s.character_values().expect("roots of unity checked above");
    'scan: for x in g.elements() {
        for &sigma in elems {
            let lhs = values[g.conjugate(x, sigma)].as_ref().unwrap();
            if *lhs != s.module.act(x, values[sigma].as_ref().unwrap()) {
                violations.push(Violation::NotEquivariant { g: label(x), sigma: label(sigma) });
                break 'scan;
            }
        }
    }
    ValidationReport { violations }
}

fn first_failure(elems: &[usize], ok: impl Fn(usize, usize) -> bool) -> Option<(usize, usize)> {
    elems.iter().flat_map(|&a| elems.iter().map(move |&b| (a, b))).find(|&(a, b)| !ok(a, b))
}

/// Fails with the first violation unless the scenario is valid.
pub fn require_valid(s: &RamifiedScenario) -> Result<()> {
    match validate_scenario(s).violations.first() {
        None => Ok(()),
        Some(v) => Err(Error::InvalidScenario(v.to_string())),
    }
}

#[cfg(test)]
mod tests;
