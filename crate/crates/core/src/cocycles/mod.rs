//! Normalized 2-cocycles `G × G → K*` for a group acting on a field `K`,
//! restriction and inflation, normalization on cyclic subgroups, the map
//! `π_f : G/A → hom(A, K*)` and exhaustive cohomology oracles.

mod characters;
mod normalize;
mod oracle;
mod pi;
mod shorthand;

pub use characters::{act_on_character, character_group, cyclic_characters, Character};
pub use normalize::{normalize_on_cyclic_subgroup, normalize_with_generator, Normalized};
pub use oracle::{brute_force_is_coboundary, brute_force_is_inflated, oracle_budget, DEFAULT_ORACLE_BUDGET};
pub use pi::{check_karp, is_character_coboundary, pi_map, PiMap};
pub use shorthand::CocycleSpec;

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::exactfields::{Field, FieldElement};
use crate::groupkit::{FiniteGroup, GroupAction, Quotient, Subgroup};

/// A group acting on the units of a field.
#[derive(Clone, Debug)]
pub struct UnitModule {
    field: Field,
    group: Arc<FiniteGroup>,
    action: GroupAction,
}

impl UnitModule {
    pub fn new(field: Field, group: Arc<FiniteGroup>, action: GroupAction) -> Self {
        UnitModule { field, group, action }
    }

    pub fn with_trivial_action(field: Field, group: Arc<FiniteGroup>) -> Self {
        let action = GroupAction::trivial(&group);
        UnitModule { field, group, action }
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn group_arc(&self) -> &Arc<FiniteGroup> {
        &self.group
    }

    pub fn action(&self) -> &GroupAction {
        &self.action
    }

    /// `g(x)`.
    pub fn act(&self, g: usize, x: &FieldElement) -> FieldElement {
        self.action.apply(&self.field, g, x)
    }

    pub fn inertia(&self) -> Subgroup {
        self.action.kernel(&self.group)
    }

    /// The module restricted to a subgroup, with the embedding of its elements.
    pub fn restrict(&self, h: &Subgroup) -> (UnitModule, Vec<usize>) {
        let (g, emb) = self.group.subgroup_as_group(h);
        let action = self.action.restrict(&emb);
        (UnitModule { field: self.field.clone(), group: Arc::new(g), action }, emb)
    }

    /// The module over `G/N` for a normal `N` acting trivially.
    pub fn quotient(&self, n: &Subgroup) -> Result<(UnitModule, Quotient)> {
        if !n.is_subset_of(&self.inertia()) {
            return Err(Error::InvalidCocycle("the quotiented subgroup must act trivially on the field".into()));
        }
        let q = self.group.quotient_group(n)?;
        let action = self.action.descend(&q.representatives);
        Ok((UnitModule { field: self.field.clone(), group: Arc::new(q.group.clone()), action }, q))
    }
}

/// A 1-cochain `c : G → K*` with `c(1) = 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OneCochain {
    values: Vec<FieldElement>,
}

impl OneCochain {
    pub fn new(module: &UnitModule, values: Vec<FieldElement>) -> Result<Self> {
        let f = module.field();
        if values.len() != module.group().order() {
            return Err(Error::InvalidCocycle("cochain must have one value per element".into()));
        }
        if let Some(g) = values.iter().position(|v| f.is_zero(v)) {
            return Err(Error::NotUnitValued(g, g));
        }
        if !f.is_one(&values[module.group().identity()]) {
            return Err(Error::InvalidCocycle("cochain must take the value 1 at the identity".into()));
        }
        Ok(OneCochain { values })
    }

    pub fn value(&self, g: usize) -> &FieldElement {
        &self.values[g]
    }

    pub fn values(&self) -> &[FieldElement] {
        &self.values
    }
}

/// Where the cocycle conditions first fail.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CocycleViolation {
    /// `f(g,h) f(gh,k) ≠ g(f(h,k)) f(g,hk)`.
    Identity { g: usize, h: usize, k: usize },
    /// `f(1,g) ≠ 1` or `f(g,1) ≠ 1`.
    NotNormalized { g: usize },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CocycleReport {
    pub violation: Option<CocycleViolation>,
}

impl CocycleReport {
    pub fn is_valid(&self) -> bool {
        self.violation.is_none()
    }
}

/// Checks normalization and the twisted cocycle identity exhaustively.
pub fn validate_cocycle(module: &UnitModule, values: &[Vec<FieldElement>]) -> Result<CocycleReport> {
    let (f, g) = (module.field(), module.group());
    let n = g.order();
    if values.len() != n || values.iter().any(|r| r.len() != n) {
        return Err(Error::InvalidCocycle(format!("table must be {n}×{n}")));
    }
    for (a, row) in values.iter().enumerate() {
        if let Some(b) = row.iter().position(|v| f.is_zero(v)) {
            return Err(Error::NotUnitValued(a, b));
        }
        if row.iter().any(|v| !f.contains(v)) {
            return Err(Error::InvalidCocycle("value outside the field".into()));
        }
    }
    let e = g.identity();
    for x in g.elements() {
        if !f.is_one(&values[e][x]) || !f.is_one(&values[x][e]) {
            return Ok(CocycleReport { violation: Some(CocycleViolation::NotNormalized { g: x }) });
        }
    }
    for a in g.elements() {
        for b in g.elements() {
            let ab = g.mul(a, b);
            for c in g.elements() {
                let lhs = f.mul(&values[a][b], &values[ab][c]);
                let rhs = f.mul(&module.act(a, &values[b][c]), &values[a][g.mul(b, c)]);
                if lhs != rhs {
                    return Ok(CocycleReport { violation: Some(CocycleViolation::Identity { g: a, h: b, k: c }) });
                }
            }
        }
    }
    Ok(CocycleReport { violation: None })
}

/// A normalized 2-cocycle, stored as its full value table.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TwoCocycle {
    values: Vec<Vec<FieldElement>>,
}

impl TwoCocycle {
    /// Validates and wraps a value table.
    pub fn from_table(module: &UnitModule, values: Vec<Vec<FieldElement>>) -> Result<Self> {
        match validate_cocycle(module, &values)?.violation {
            None => Ok(TwoCocycle { values }),
            Some(CocycleViolation::NotNormalized { g }) => Err(Error::InvalidCocycle(format!(
                "not normalized at {}",
                module.group().label(g)
            ))),
            Some(CocycleViolation::Identity { g, h, k }) => {
                let l = |x| module.group().label(x).to_string();
                Err(Error::InvalidCocycle(format!("cocycle identity fails at ({}, {}, {})", l(g), l(h), l(k))))
            }
        }
    }

    pub(crate) fn from_table_unchecked(values: Vec<Vec<FieldElement>>) -> Self {
        TwoCocycle { values }
    }

    pub fn trivial(module: &UnitModule) -> Self {
        let n = module.group().order();
        TwoCocycle { values: vec![vec![module.field().one(); n]; n] }
    }

    pub fn value(&self, g: usize, h: usize) -> &FieldElement {
        &self.values[g][h]
    }

    pub fn table(&self) -> &[Vec<FieldElement>] {
        &self.values
    }

    /// Pointwise product (the sum of classes).
    pub fn product(&self, module: &UnitModule, other: &TwoCocycle) -> TwoCocycle {
        let f = module.field();
        TwoCocycle {
            values: self
                .values
                .iter()
                .zip(&other.values)
                .map(|(r, s)| r.iter().zip(s).map(|(x, y)| f.mul(x, y)).collect())
                .collect(),
        }
    }

    /// `f · ∂c`.
    pub fn twist(&self, module: &UnitModule, c: &OneCochain) -> TwoCocycle {
        self.product(module, &coboundary(module, c))
    }

    /// Cut down to `H × H` along an embedding.
    pub fn restrict(&self, embedding: &[usize]) -> TwoCocycle {
        TwoCocycle {
            values: embedding.iter().map(|&a| embedding.iter().map(|&b| self.values[a][b].clone()).collect()).collect(),
        }
    }

    /// `f(g,h) = f'(ḡ, h̄)` for a cocycle `f'` on a quotient.
    pub fn inflate(quotient_cocycle: &TwoCocycle, projection: &[usize]) -> TwoCocycle {
        TwoCocycle {
            values: projection
                .iter()
                .map(|&a| projection.iter().map(|&b| quotient_cocycle.values[a][b].clone()).collect())
                .collect(),
        }
    }

    /// Is the cocycle symmetric on the given elements?
    pub fn is_symmetric_on(&self, elements: &[usize]) -> bool {
        elements.iter().all(|&a| elements.iter().all(|&b| self.values[a][b] == self.values[b][a]))
    }
}

/// `∂c(g,h) = c(g) g(c(h)) / c(gh)`.
pub fn coboundary(module: &UnitModule, c: &OneCochain) -> TwoCocycle {
    let (f, g) = (module.field(), module.group());
    let values = g
        .elements()
        .map(|a| {
            g.elements()
                .map(|b| {
                    let num = f.mul(c.value(a), &module.act(a, c.value(b)));
                    f.div(&num, c.value(g.mul(a, b))).expect("unit cochain")
                })
                .collect()
        })
        .collect();
    TwoCocycle { values }
}

#[cfg(test)]
mod tests;
