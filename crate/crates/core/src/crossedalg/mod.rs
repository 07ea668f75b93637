//! The crossed product `K^f * G`: the `K`-algebra with basis `U_g` and
//! `s U_g · t U_h = s g(t) f(g,h) U_{gh}`.

mod idempotents;
mod inseparable;
mod oracle;

pub use idempotents::{check_idempotent_set, iota_for_character, iota_idempotents};
pub use inseparable::{purely_inseparable_field_test, InseparabilityVerdict, TowerStep};
pub use oracle::{count_simple_components_oracle, ComponentReport};

use std::collections::BTreeMap;
use std::sync::atomic::{AtomicU64, Ordering};

use serde_json::Value;

use crate::cocycles::{TwoCocycle, UnitModule};
use crate::error::{Error, Result};
use crate::exactfields::{Field, FieldElement};
use crate::groupkit::{FiniteGroup, Subgroup};
use crate::linalg;

static NEXT_ID: AtomicU64 = AtomicU64::new(1);

#[derive(Clone, Debug)]
pub struct CrossedProduct {
    id: u64,
    module: UnitModule,
    cocycle: TwoCocycle,
}

/// `Σ_g c_g U_g`, stored densely in group element order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraElement {
    parent: u64,
    coeffs: Vec<FieldElement>,
}

impl AlgebraElement {
    pub fn coeff(&self, g: usize) -> &FieldElement {
        &self.coeffs[g]
    }

    pub fn coeffs(&self) -> &[FieldElement] {
        &self.coeffs
    }
}

impl CrossedProduct {
    /// The cocycle is expected to be valid for the module.
    pub fn new(module: UnitModule, cocycle: TwoCocycle) -> Self {
        CrossedProduct { id: NEXT_ID.fetch_add(1, Ordering::Relaxed), module, cocycle }
    }

    pub fn module(&self) -> &UnitModule {
        &self.module
    }

    pub fn field(&self) -> &Field {
        self.module.field()
    }

    pub fn group(&self) -> &FiniteGroup {
        self.module.group()
    }

    pub fn cocycle(&self) -> &TwoCocycle {
        &self.cocycle
    }

    fn wrap(&self, coeffs: Vec<FieldElement>) -> AlgebraElement {
        AlgebraElement { parent: self.id, coeffs }
    }

    pub fn zero(&self) -> AlgebraElement {
        self.wrap(vec![self.field().zero(); self.group().order()])
    }

    /// `s U_g`.
    pub fn term(&self, s: FieldElement, g: usize) -> AlgebraElement {
        let mut x = self.zero();
        x.coeffs[g] = s;
        x
    }

    pub fn basis(&self, g: usize) -> AlgebraElement {
        self.term(self.field().one(), g)
    }

    pub fn one(&self) -> AlgebraElement {
        self.basis(self.group().identity())
    }

    pub fn scalar(&self, s: FieldElement) -> AlgebraElement {
        self.term(s, self.group().identity())
    }

    pub fn from_coeffs(&self, coeffs: Vec<FieldElement>) -> Result<AlgebraElement> {
        if coeffs.len() != self.group().order() || coeffs.iter().any(|c| !self.field().contains(c)) {
            return Err(Error::InvalidCocycle("coefficient vector does not match the algebra".into()));
        }
        Ok(self.wrap(coeffs))
    }

    fn check(&self, x: &AlgebraElement) -> Result<()> {
        if x.parent == self.id {
            Ok(())
        } else {
            Err(Error::MixedParents)
        }
    }

    pub fn add(&self, x: &AlgebraElement, y: &AlgebraElement) -> Result<AlgebraElement> {
        self.check(x)?;
        self.check(y)?;
        let f = self.field();
        Ok(self.wrap(x.coeffs.iter().zip(&y.coeffs).map(|(a, b)| f.add(a, b)).collect()))
    }

    pub fn sub(&self, x: &AlgebraElement, y: &AlgebraElement) -> Result<AlgebraElement> {
        self.check(x)?;
        self.check(y)?;
        let f = self.field();
        Ok(self.wrap(x.coeffs.iter().zip(&y.coeffs).map(|(a, b)| f.sub(a, b)).collect()))
    }

    /// `s · x` (scalar on the left).
    pub fn scale(&self, s: &FieldElement, x: &AlgebraElement) -> Result<AlgebraElement> {
        self.check(x)?;
        let f = self.field();
        Ok(self.wrap(x.coeffs.iter().map(|a| f.mul(s, a)).collect()))
    }

    pub fn multiply(&self, x: &AlgebraElement, y: &AlgebraElement) -> Result<AlgebraElement> {
        self.check(x)?;
        self.check(y)?;
        let (f, g) = (self.field(), self.group());
        let mut out = vec![f.zero(); g.order()];
        for (a, s) in x.coeffs.iter().enumerate() {
            if f.is_zero(s) {
                continue;
            }
            for (b, t) in y.coeffs.iter().enumerate() {
                if f.is_zero(t) {
                    continue;
                }
                let term = f.mul(&f.mul(s, &self.module.act(a, t)), self.cocycle.value(a, b));
                let ab = g.mul(a, b);
                out[ab] = f.add(&out[ab], &term);
            }
        }
        Ok(self.wrap(out))
    }

    pub fn pow(&self, x: &AlgebraElement, k: u64) -> Result<AlgebraElement> {
        let mut acc = self.one();
        for _ in 0..k {
            acc = self.multiply(&acc, x)?;
        }
        Ok(acc)
    }

    pub fn is_zero(&self, x: &AlgebraElement) -> bool {
        x.coeffs.iter().all(|c| self.field().is_zero(c))
    }

    /// Group elements with nonzero coefficient.
    pub fn support(&self, x: &AlgebraElement) -> Vec<usize> {
        (0..x.coeffs.len()).filter(|&g| !self.field().is_zero(&x.coeffs[g])).collect()
    }

    /// `U_g^-1 = g^-1(f(g, g^-1)^-1) U_{g^-1}`.
    pub fn basis_inverse(&self, g: usize) -> AlgebraElement {
        let f = self.field();
        let gi = self.group().inv(g);
        let c = f.inv(self.cocycle.value(g, gi)).expect("unit cocycle value");
        self.term(self.module.act(gi, &c), gi)
    }

    /// `U_g x U_g^-1`.
    pub fn conjugate(&self, g: usize, x: &AlgebraElement) -> Result<AlgebraElement> {
        let left = self.multiply(&self.basis(g), x)?;
        self.multiply(&left, &self.basis_inverse(g))
    }

    pub fn commutator(&self, x: &AlgebraElement, y: &AlgebraElement) -> Result<AlgebraElement> {
        self.sub(&self.multiply(x, y)?, &self.multiply(y, x)?)
    }

    /// The algebra `K^f * H` on a subgroup and the embedding of `H`.
    pub fn twisted_subalgebra(&self, h: &Subgroup) -> (CrossedProduct, Vec<usize>) {
        let (module, emb) = self.module.restrict(h);
        let cocycle = self.cocycle.restrict(&emb);
        (CrossedProduct::new(module, cocycle), emb)
    }

    /// Coordinates over the prime field, `|G| · [K:F_p]` of them, ordered by
    /// group element and then power-basis index (finite fields only).
    pub fn prime_coordinates(&self, x: &AlgebraElement) -> Result<Vec<FieldElement>> {
        let f = self.field();
        let fp = f.prime_subfield();
        let mut out = Vec::new();
        for c in &x.coeffs {
            out.extend(f.prime_coordinates(c)?.into_iter().map(|d| fp.from_int(d as i64)));
        }
        Ok(out)
    }

    pub fn from_prime_coordinates(&self, v: &[FieldElement]) -> AlgebraElement {
        let f = self.field();
        let fp = f.prime_subfield();
        let k = f.degree().expect("finite field") as usize;
        let coeffs = v
            .chunks(k)
            .map(|chunk| {
                let digits: Vec<u32> = chunk.iter().map(|d| fp.as_constant(d).unwrap()).collect();
                f.from_prime_coordinates(&digits)
            })
            .collect();
        self.wrap(coeffs)
    }

    /// A basis over the prime field of the center, in reduced echelon form
    /// with respect to [`Self::prime_coordinates`] (finite fields only).
    ///
    /// Solves `[z, U_g] = 0` for a generating set of `G` and `[z, u U_1] = 0`
    /// for a generator `u` of `K` over `F_p`.
    pub fn center(&self) -> Result<Vec<AlgebraElement>> {
        let f = self.field();
        if !f.is_finite() {
            return Err(Error::OracleFiniteOnly);
        }
        let fp = f.prime_subfield();
        let k = f.degree().unwrap() as usize;
        let n = self.group().order();
        let dim = n * k;
        let mut tests: Vec<AlgebraElement> = self.group().generators().into_iter().map(|g| self.basis(g)).collect();
        if k > 1 {
            tests.push(self.scalar(f.power_basis_generator()));
        }
        // each test contributes `dim` equations; column j is the image of basis vector j
        let mut rows: linalg::Matrix = Vec::new();
        for t in &tests {
            let images = (0..dim)
                .map(|j| {
                    let mut e = vec![fp.zero(); dim];
                    e[j] = fp.one();
                    let z = self.from_prime_coordinates(&e);
                    self.prime_coordinates(&self.commutator(&z, t)?)
                })
                .collect::<Result<Vec<_>>>()?;
            for i in 0..dim {
                rows.push(images.iter().map(|col| col[i].clone()).collect());
            }
        }
        let basis = linalg::kernel(&fp, &rows, dim);
        Ok(basis.iter().map(|v| self.from_prime_coordinates(v)).collect())
    }

    /// `{"label": coefficient}` for the nonzero coefficients.
    pub fn to_json(&self, x: &AlgebraElement) -> Value {
        let map: BTreeMap<String, Value> = self
            .support(x)
            .into_iter()
            .map(|g| (self.group().label(g).to_string(), self.field().encode(&x.coeffs[g])))
            .collect();
        serde_json::to_value(map).expect("serializable")
    }

    /// Human-readable form such as `3U_1+3U_a`.
    pub fn format(&self, x: &AlgebraElement) -> String {
        let f = self.field();
        let terms: Vec<String> = self
            .support(x)
            .into_iter()
            .map(|g| {
                let c = f.format(&x.coeffs[g]);
                let c = if c.contains('+') || c.contains('/') { format!("({c})") } else { c };
                let c = if c == "1" { String::new() } else { c };
                format!("{c}U_{}", self.group().label(g))
            })
            .collect();
        if terms.is_empty() {
            "0".into()
        } else {
            terms.join("+")
        }
    }
}

#[cfg(test)]
mod tests;
