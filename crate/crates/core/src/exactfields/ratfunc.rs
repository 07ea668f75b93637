//! Rational functions over a finite field, kept as coprime `num/den` with a
//! monic denominator.

use super::finite::FiniteField;
use super::poly::{self, Poly};

pub fn normalize(f: &FiniteField, num: Poly, den: Poly) -> (Poly, Poly) {
    let (num, den) = (poly::trim(num), poly::trim(den));
    assert!(!den.is_empty(), "zero denominator");
    if num.is_empty() {
        return (Vec::new(), vec![1]);
    }
    let g = poly::gcd(f, &num, &den);
    let (mut num, _) = poly::divrem(f, &num, &g);
    let (mut den, _) = poly::divrem(f, &den, &g);
    let lc_inv = f.inv(*den.last().unwrap()).unwrap();
    num = poly::scale(f, &num, lc_inv);
    den = poly::scale(f, &den, lc_inv);
    (num, den)
}

pub fn add(f: &FiniteField, a: (&[u32], &[u32]), b: (&[u32], &[u32])) -> (Poly, Poly) {
    let num = poly::add(f, &poly::mul(f, a.0, b.1), &poly::mul(f, b.0, a.1));
    normalize(f, num, poly::mul(f, a.1, b.1))
}

pub fn mul(f: &FiniteField, a: (&[u32], &[u32]), b: (&[u32], &[u32])) -> (Poly, Poly) {
    normalize(f, poly::mul(f, a.0, b.0), poly::mul(f, a.1, b.1))
}

/// `h = sum_r a_r^p t^r` for `r < p`; returns the coefficients `a_r`.
///
/// Writing `h = N D^(p-1) / D^p` and splitting `N D^(p-1)` by residue class
/// of the exponent mod `p` gives each `a_r` as a `p`-th root over `D`.
pub fn pth_power_coordinates(f: &FiniteField, num: &[u32], den: &[u32]) -> Vec<(Poly, Poly)> {
    let p = f.characteristic() as usize;
    let m = poly::mul(f, num, &poly::pow(f, den, p as u64 - 1));
    (0..p)
        .map(|r| {
            // coefficients of t^(jp + r), shifted down by r, form a polynomial in t^p
            let part: Poly = (0..m.len())
                .map(|i| if i % p == 0 { m.get(i + r).copied().unwrap_or(0) } else { 0 })
                .collect();
            let root = poly::pth_root(f, &poly::trim(part)).expect("exponents divisible by p");
            normalize(f, root, den.to_vec())
        })
        .collect()
}
