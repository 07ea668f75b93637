use super::{AlgebraElement, CrossedProduct};
use crate::cocycles::{cyclic_characters, Character};
use crate::error::{Error, Result};
use crate::exactfields::FieldElement;
use crate::groupkit::Subgroup;

/// `ι_χ = |A|^-1 Σ_{b ∈ A} χ(b)^-1 U_b`.
pub fn iota_for_character(alg: &CrossedProduct, a: &Subgroup, chi: &Character) -> Result<AlgebraElement> {
    let f = alg.field();
    let n = f.from_int(a.order() as i64);
    let n_inv = f.inv(&n).map_err(|_| Error::TameIndexViolated(a.order() as u64))?;
    let mut x = alg.zero();
    for (&b, v) in a.elements().iter().zip(chi.values()) {
        let c = f.mul(&n_inv, &f.inv(v)?);
        x = alg.add(&x, &alg.term(c, b))?;
    }
    Ok(x)
}

/// The idempotents `ι_j = d^-1 Σ_l ζ^(-jl) U_{γ^l}`, `j = 0..d-1`, for
/// `γ` of order `d`. The cocycle must already satisfy `U_{γ^l} = U_γ^l`
/// and `U_γ^d = 1`.
pub fn iota_idempotents(alg: &CrossedProduct, gamma: usize, zeta: &FieldElement) -> Result<Vec<AlgebraElement>> {
    let (f, g) = (alg.field(), alg.group());
    let d = g.element_order(gamma);
    if d % f.characteristic() as usize == 0 {
        return Err(Error::TameIndexViolated(d as u64));
    }
    if f.multiplicative_order(zeta) != Some(d as u64) {
        return Err(Error::Inconsistent(format!("root of unity of order {d} expected")));
    }
    let u = alg.basis(gamma);
    let mut power = alg.one();
    for l in 0..=d {
        if power != alg.basis(g.pow(gamma, l as i64)) {
            return Err(Error::Inconsistent(format!(
                "cocycle is not normalized on <{}>: U_γ^{l} ≠ U_(γ^{l})",
                g.label(gamma)
            )));
        }
        power = alg.multiply(&power, &u)?;
    }
    let a = g.subgroup_generated(&[gamma]);
    cyclic_characters(f, g, gamma, zeta).iter().map(|chi| iota_for_character(alg, &a, chi)).collect()
}

/// Are the elements idempotent, pairwise orthogonal and summing to 1?
pub fn check_idempotent_set(alg: &CrossedProduct, items: &[AlgebraElement]) -> Result<bool> {
    let mut sum = alg.zero();
    for (i, x) in items.iter().enumerate() {
        for (j, y) in items.iter().enumerate() {
            let xy = alg.multiply(x, y)?;
            let ok = if i == j { xy == *x } else { alg.is_zero(&xy) };
            if !ok {
                return Ok(false);
            }
        }
        sum = alg.add(&sum, x)?;
    }
    Ok(sum == alg.one())
}
