//! Counts simple components by decomposing the center over `F_p`.
//!
//! On the commutative center `Z`, `x ↦ x^p` is `F_p`-linear. Its fixed
//! space `B` is the split semisimple part `F_p × ... × F_p`, one factor per
//! local factor of `Z`, and its kernel after enough iterations is the
//! nilradical. Primitive idempotents come from splitting `1` by the Lagrange
//! idempotents of the elements of a basis of `B`.

use super::{AlgebraElement, CrossedProduct};
use crate::error::{Error, Result};
use crate::exactfields::Field;
use crate::linalg::{self, Matrix};

#[derive(Clone, Debug)]
pub struct ComponentReport {
    pub count: usize,
    /// Dimension of the center over the prime field.
    pub center_dim: usize,
    pub nilradical_dim: usize,
    /// Primitive idempotents of the center.
    pub idempotents: Vec<AlgebraElement>,
}

fn identity(fp: &Field, n: usize) -> Matrix {
    (0..n).map(|i| (0..n).map(|j| if i == j { fp.one() } else { fp.zero() }).collect()).collect()
}

fn mat_mul(fp: &Field, a: &Matrix, b: &Matrix) -> Matrix {
    let n = a.len();
    let m = b.first().map_or(0, Vec::len);
    (0..n)
        .map(|i| {
            (0..m)
                .map(|j| (0..b.len()).fold(fp.zero(), |acc, k| fp.add(&acc, &fp.mul(&a[i][k], &b[k][j]))))
                .collect()
        })
        .collect()
}

pub fn count_simple_components_oracle(alg: &CrossedProduct) -> Result<ComponentReport> {
    let f = alg.field();
    if !f.is_finite() {
        return Err(Error::OracleFiniteOnly);
    }
    let fp = f.prime_subfield();
    let p = f.characteristic() as u64;
    let z = alg.center()?;
    let dim = z.len();
    let coords: Vec<Vec<_>> = z.iter().map(|b| alg.prime_coordinates(b)).collect::<Result<_>>()?;
    let pivots: Vec<usize> = coords
        .iter()
        .map(|v| v.iter().position(|c| !fp.is_zero(c)).expect("nonzero basis vector"))
        .collect();
    let in_center = |x: &AlgebraElement| -> Result<Vec<_>> {
        let c = alg.prime_coordinates(x)?;
        Ok(pivots.iter().map(|&i| c[i].clone()).collect())
    };
    // column i holds the coordinates of z_i^p
    let mut frob = vec![vec![fp.zero(); dim]; dim];
    for (i, b) in z.iter().enumerate() {
        let col = in_center(&alg.pow(b, p)?)?;
        for (r, v) in col.into_iter().enumerate() {
            frob[r][i] = v;
        }
    }
    let id = identity(&fp, dim);
    let fixed_eq: Matrix = frob.iter().zip(&id).map(|(r, e)| r.iter().zip(e).map(|(a, b)| fp.sub(a, b)).collect()).collect();
    let fixed = linalg::kernel(&fp, &fixed_eq, dim);
    let mut power = id.clone();
    let mut reach = 1u64;
    while reach < dim as u64 {
        power = mat_mul(&fp, &power, &frob);
        reach *= p;
    }
    let nilradical_dim = if dim == 0 { 0 } else { dim - linalg::rank(&fp, &mat_mul(&fp, &power, &frob)) };

    let to_alg = |v: &Vec<_>| -> Result<AlgebraElement> {
        let mut x = alg.zero();
        for (c, b) in v.iter().zip(&z) {
            let code = fp.as_constant(c).unwrap() as i64;
            x = alg.add(&x, &alg.scale(&f.from_int(code), b)?)?;
        }
        Ok(x)
    };
    let mut idempotents = vec![alg.one()];
    for v in &fixed {
        let b = to_alg(v)?;
        let mut next = Vec::new();
        for e in &idempotents {
            for r in 0..p as i64 {
                // Lagrange idempotent of the eigenvalue r
                let mut l = e.clone();
                for s in (0..p as i64).filter(|&s| s != r) {
                    let shifted = alg.sub(&b, &alg.scalar(f.from_int(s)))?;
                    let c = f.inv(&f.from_int(r - s))?;
                    l = alg.multiply(&l, &alg.scale(&c, &shifted)?)?;
                }
                if !alg.is_zero(&l) {
                    next.push(l);
                }
            }
        }
        idempotents = next;
    }
    if idempotents.len() != fixed.len() {
        return Err(Error::Inconsistent(format!(
            "center splitting produced {} idempotents for {} local factors",
            idempotents.len(),
            fixed.len()
        )));
    }
    Ok(ComponentReport { count: fixed.len(), center_dim: dim, nilradical_dim, idempotents })
}
