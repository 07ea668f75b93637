use super::characters::{act_on_character, Character};
use super::{TwoCocycle, UnitModule};
use crate::error::{Error, Result};
use crate::groupkit::{Quotient, Subgroup};

/// `π_f(ḡ) = (a ↦ f(a, g))` for every coset of `A`.
#[derive(Clone, Debug)]
pub struct PiMap {
    pub subgroup: Subgroup,
    pub quotient: Quotient,
    /// One character per coset, in the quotient's element order.
    pub values: Vec<Character>,
}

impl PiMap {
    /// `π_f(ḡ)` for an element `g` of the ambient group.
    pub fn of(&self, g: usize) -> &Character {
        &self.values[self.quotient.projection[g]]
    }

    /// Distinct values, sorted.
    pub fn image(&self) -> Vec<Character> {
        let mut im = self.values.clone();
        im.sort();
        im.dedup();
        im
    }
}

/// Does `f(g, h x) = f(g, h)` hold for all `x ∈ A`?
pub fn check_karp(module: &UnitModule, f: &TwoCocycle, a: &Subgroup) -> bool {
    let g = module.group();
    g.elements()
        .all(|x| g.elements().all(|y| a.elements().iter().all(|&s| f.value(x, g.mul(y, s)) == f.value(x, y))))
}

/// Computes `π_f` and verifies that each value is a homomorphism, that it
/// does not depend on coset representatives and that
/// `π(gh) = π(g) · ḡ(π(h))`.
pub fn pi_map(module: &UnitModule, f: &TwoCocycle, a: &Subgroup) -> Result<PiMap> {
    let (field, g) = (module.field(), module.group());
    if !g.is_normal(a) {
        return Err(Error::NotNormal);
    }
    if !a.is_subset_of(&module.inertia()) {
        return Err(Error::InvalidCocycle("A must act trivially on the field".into()));
    }
    if !g.commute(a, a) {
        return Err(Error::InvalidGroup("A must be abelian".into()));
    }
    if !check_karp(module, f, a) {
        return Err(Error::CosetConditionViolated);
    }
    let quotient = g.quotient_group(a)?;
    let character = |x: usize| Character::new(a.elements().iter().map(|&s| f.value(s, x).clone()).collect());
    let values: Vec<Character> = quotient.representatives.iter().map(|&r| character(r)).collect();
    let fail = |m: &str| Err(Error::Inconsistent(format!("π_f {m}")));
    for x in g.elements() {
        if character(x) != values[quotient.projection[x]] {
            return fail("depends on the coset representative");
        }
    }
    if values.iter().any(|chi| !chi.is_homomorphism(field, g, a)) {
        return fail("value is not a homomorphism");
    }
    for &x in &quotient.representatives {
        for &y in &quotient.representatives {
            let lhs = &values[quotient.projection[g.mul(x, y)]];
            let rhs = values[quotient.projection[x]].mul(field, &act_on_character(module, x, a, &values[quotient.projection[y]]));
            if *lhs != rhs {
                return fail("violates the 1-cocycle identity");
            }
        }
    }
    Ok(PiMap { subgroup: a.clone(), quotient, values })
}

/// Is `π` of the form `ḡ ↦ φ / ḡ(φ)` for some character `φ` of `A`?
/// Returns such a `φ`, searching the given character list in order.
pub fn is_character_coboundary(module: &UnitModule, pi: &PiMap, characters: &[Character]) -> Option<Character> {
    let field = module.field();
    characters
        .iter()
        .find(|phi| {
            pi.quotient.representatives.iter().all(|&r| {
                let shifted = phi.mul(field, &act_on_character(module, r, &pi.subgroup, phi).inv(field));
                *pi.of(r) == shifted
            })
        })
        .cloned()
}
