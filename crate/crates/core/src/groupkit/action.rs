use super::{FiniteGroup, Subgroup};
use crate::error::{Error, Result};
use crate::exactfields::{Automorphism, Field, FieldElement};

/// A homomorphism from a group into the Frobenius automorphisms of a field.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupAction {
    auts: Vec<Automorphism>,
}

impl GroupAction {
    /// Checks `spec(gh) = spec(g) ∘ spec(h)` for every pair.
    pub fn new(group: &FiniteGroup, field: &Field, frobenius_powers: &[u32]) -> Result<Self> {
        if frobenius_powers.len() != group.order() {
            return Err(Error::UnsupportedAutomorphism("one automorphism per group element required".into()));
        }
        let auts: Vec<Automorphism> = frobenius_powers.iter().map(|&k| field.automorphism(k)).collect();
        if !auts[group.identity()].is_identity() {
            return Err(Error::UnsupportedAutomorphism("identity must act trivially".into()));
        }
        for g in group.elements() {
            for h in group.elements() {
                if auts[group.mul(g, h)] != field.compose(auts[g], auts[h]) {
                    return Err(Error::UnsupportedAutomorphism(format!(
                        "not a homomorphism at ({}, {})",
                        group.label(g),
                        group.label(h)
                    )));
                }
            }
        }
        Ok(GroupAction { auts })
    }

    pub fn trivial(group: &FiniteGroup) -> Self {
        GroupAction { auts: vec![Automorphism::identity(); group.order()] }
    }

    pub fn automorphism(&self, g: usize) -> Automorphism {
        self.auts[g]
    }

    pub fn apply(&self, field: &Field, g: usize, x: &FieldElement) -> FieldElement {
        field.apply_automorphism(self.auts[g], x)
    }

    /// The elements acting trivially (the inertia subgroup).
    pub fn kernel(&self, group: &FiniteGroup) -> Subgroup {
        let ids: Vec<usize> = group.elements().filter(|&g| self.auts[g].is_identity()).collect();
        group.subgroup(&ids).expect("kernel of a homomorphism")
    }

    /// Restriction along an embedding of a subgroup.
    pub fn restrict(&self, embedding: &[usize]) -> Self {
        GroupAction { auts: embedding.iter().map(|&g| self.auts[g]).collect() }
    }

    /// The action induced on `G/N` for `N` inside the kernel.
    pub fn descend(&self, representatives: &[usize]) -> Self {
        self.restrict(representatives)
    }

    pub fn is_trivial(&self) -> bool {
        self.auts.iter().all(Automorphism::is_identity)
    }
}

/// [`GroupAction::kernel`] as a free function.
pub fn kernel_of_action(group: &FiniteGroup, action: &GroupAction) -> Subgroup {
    action.kernel(group)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groupkit::named_group;

    #[test]
    fn inertia_examples() {
        let f9 = Field::extension(3, vec![1, 0, 1]).unwrap();
        let k = named_group("klein4").unwrap();
        let act = GroupAction::new(&k, &f9, &[0, 0, 1, 1]).unwrap();
        assert_eq!(act.kernel(&k).elements(), &[0, 1]);
        assert_eq!(GroupAction::trivial(&k).kernel(&k).order(), 4);
        let c2 = named_group("cyclic:2").unwrap();
        let frob = GroupAction::new(&c2, &f9, &[0, 1]).unwrap();
        assert!(kernel_of_action(&c2, &frob).is_trivial());
        assert!(GroupAction::new(&c2, &f9, &[1, 0]).is_err());
        let c3 = named_group("cyclic:3").unwrap();
        assert!(GroupAction::new(&c3, &f9, &[0, 1, 1]).is_err());
    }
}
