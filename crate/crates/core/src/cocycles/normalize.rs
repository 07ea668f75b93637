use super::{OneCochain, TwoCocycle, UnitModule};
use crate::error::{Error, Result};
use crate::exactfields::FieldElement;
use crate::groupkit::Subgroup;

/// A cocycle rewritten so that `U_{g a} = U_g U_a` for the chosen generator `a`.
#[derive(Clone, Debug)]
pub struct Normalized {
    /// `f' = f · ∂λ`.
    pub cocycle: TwoCocycle,
    pub lambda: OneCochain,
    pub generator: usize,
    /// `U_a^n` for the original cocycle.
    pub alpha: FieldElement,
    /// The chosen `n`-th root of `alpha`.
    pub beta: FieldElement,
}

/// Normalizes on a cyclic subgroup using its least-index generator.
pub fn normalize_on_cyclic_subgroup(module: &UnitModule, f: &TwoCocycle, a: &Subgroup) -> Result<Normalized> {
    let g = module.group();
    let generator = a
        .elements()
        .iter()
        .copied()
        .find(|&x| g.element_order(x) == a.order())
        .ok_or(Error::NonCyclicSubgroup)?;
    normalize_with_generator(module, f, generator)
}

/// Rescales the basis on `A = <a>` and along the minimal-index transversal of
/// `A` so that the new cocycle is trivial on `A × A` and constant on
/// `A`-cosets in its second argument:
/// `V_{t a^i} = U_t (β^-1 U_a)^i` with `β^n = U_a^n`.
pub fn normalize_with_generator(module: &UnitModule, f: &TwoCocycle, a: usize) -> Result<Normalized> {
    let (field, g) = (module.field(), module.group());
    let sub = g.subgroup_generated(&[a]);
    if !g.is_normal(&sub) {
        return Err(Error::NotNormal);
    }
    if !sub.is_subset_of(&module.inertia()) {
        return Err(Error::InvalidCocycle("A must act trivially on the field".into()));
    }
    let n = sub.order();
    // mu[i] is the scalar with U_a^i = mu[i] U_{a^i}
    let mut mu = vec![field.one(); n + 1];
    for i in 1..n {
        mu[i + 1] = field.mul(&mu[i], f.value(g.pow(a, i as i64), a));
    }
    let alpha = mu[n].clone();
    let beta = field.nth_root(&alpha, n as u64)?.ok_or(Error::OutsideKernelOfRestriction)?;
    let beta_inv = field.inv(&beta)?;
    let mut lambda = vec![field.one(); g.order()];
    for t in g.coset_representatives(&sub) {
        for i in 0..n {
            let ai = g.pow(a, i as i64);
            let scalar = field.mul(&field.pow(&beta_inv, i as i64)?, &mu[i]);
            lambda[g.mul(t, ai)] = field.mul(&module.act(t, &scalar), f.value(t, ai));
        }
    }
    let lambda = OneCochain::new(module, lambda)?;
    let cocycle = f.twist(module, &lambda);
    Ok(Normalized { cocycle, lambda, generator: a, alpha, beta })
}
