//! Is `F = K^f P` a (purely inseparable) field?
//!
//! With `P = <σ_1> × ... × <σ_r>` and `F_i = F_(i-1)[U_{σ_i}]`, each step is
//! `F_(i-1)[x]/(x^(p^m) - α_i)`, a field iff `α_i` is not a `p`-th power in
//! `F_(i-1)`. Since `F_(i-1)^p` is spanned over `K^p` by the `U_x^p`, only the
//! `x` with `x^p = 1` can contribute to a scalar, so the question becomes a
//! linear system over `K` in the coordinates with respect to `K = ⊕ K^p b_r`.

use super::{AlgebraElement, CrossedProduct};
use crate::error::{Error, Result};
use crate::exactfields::FieldElement;
use crate::groupkit::Subgroup;
use crate::linalg;

pub const MAX_TOWER_HEIGHT: usize = 3;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TowerStep {
    pub generator: usize,
    /// `p^m`, the order of the generator.
    pub order: u64,
    /// `U_σ^(p^m)`, a scalar.
    pub alpha: FieldElement,
}

#[derive(Clone, Debug)]
pub enum InseparabilityVerdict {
    /// `F` is a field, built as the listed tower over `K`.
    Field { tower: Vec<TowerStep> },
    /// Two generators whose basis elements do not commute.
    NonCommutative { pair: (usize, usize) },
    /// A nonzero `y` with `y^p = 0`, found at the given tower step.
    Nilpotent { step: usize, witness: AlgebraElement },
}

impl InseparabilityVerdict {
    pub fn is_field(&self) -> bool {
        matches!(self, InseparabilityVerdict::Field { .. })
    }
}

/// Scalar part of an element known to be a multiple of `U_1`.
fn scalar_part(alg: &CrossedProduct, x: &AlgebraElement) -> Result<FieldElement> {
    let e = alg.group().identity();
    if alg.support(x).iter().any(|&g| g != e) {
        return Err(Error::Inconsistent("expected a scalar multiple of U_1".into()));
    }
    Ok(x.coeff(e).clone())
}

pub fn purely_inseparable_field_test(alg: &CrossedProduct, p_sub: &Subgroup) -> Result<InseparabilityVerdict> {
    let (f, g) = (alg.field(), alg.group());
    let p = f.characteristic() as u64;
    if !p_sub.is_subset_of(&alg.module().inertia()) {
        return Err(Error::InvalidScenario("P must act trivially on the residue field".into()));
    }
    let (sub, emb) = g.subgroup_as_group(p_sub);
    let coords = sub
        .abelian_coords()
        .ok_or_else(|| Error::NoCyclicDecomposition("P is not abelian".into()))?;
    if coords.orders.iter().any(|&o| !is_power_of(o, p)) {
        return Err(Error::NoCyclicDecomposition(format!("P is not a {p}-group")));
    }
    let gens: Vec<usize> = coords.generators.iter().map(|&i| emb[i]).collect();
    let orders = coords.orders.clone();
    if gens.len() > MAX_TOWER_HEIGHT {
        return Err(Error::TowerTooHigh(gens.len()));
    }
    for (i, &a) in gens.iter().enumerate() {
        for &b in &gens[i + 1..] {
            if alg.cocycle().value(a, b) != alg.cocycle().value(b, a) {
                return Ok(InseparabilityVerdict::NonCommutative { pair: (a, b) });
            }
        }
    }
    let mut tower = Vec::new();
    for (i, (&sigma, &order)) in gens.iter().zip(&orders).enumerate() {
        let prev = g.subgroup_generated(&gens[..i]);
        let omega: Vec<usize> = prev.elements().iter().copied().filter(|&x| g.pow(x, p as i64) == g.identity()).collect();
        let lambdas = omega
            .iter()
            .map(|&x| scalar_part(alg, &alg.pow(&alg.basis(x), p)?))
            .collect::<Result<Vec<_>>>()?;
        let alpha = scalar_part(alg, &alg.pow(&alg.basis(sigma), order)?)?;
        let a = f.pth_power_coordinates(&alpha);
        let columns: Vec<Vec<FieldElement>> = lambdas.iter().map(|l| f.pth_power_coordinates(l)).collect();
        let matrix: linalg::Matrix = (0..a.len()).map(|r| columns.iter().map(|c| c[r].clone()).collect()).collect();
        if let Some(d) = linalg::solve(f, &matrix, &a) {
            // y = U_σ^(p^(m-1)) - Σ d_x U_x has y^p = α - Σ d_x^p λ_x = 0
            let mut y = alg.pow(&alg.basis(sigma), order / p)?;
            for (&x, dx) in omega.iter().zip(&d) {
                y = alg.sub(&y, &alg.term(dx.clone(), x))?;
            }
            if alg.is_zero(&y) || !alg.is_zero(&alg.pow(&y, p)?) {
                return Err(Error::Inconsistent("nilpotent witness failed verification".into()));
            }
            return Ok(InseparabilityVerdict::Nilpotent { step: i, witness: y });
        }
        tower.push(TowerStep { generator: sigma, order, alpha });
    }
    // every element of F has a p^M-th power in K; check on the monomial basis
    let total: u64 = orders.iter().product();
    for &x in p_sub.elements() {
        scalar_part(alg, &alg.pow(&alg.basis(x), total)?)?;
    }
    Ok(InseparabilityVerdict::Field { tower })
}

fn is_power_of(mut n: u64, p: u64) -> bool {
    while n.is_multiple_of(p) {
        n /= p;
    }
    n == 1
}
