//! Dense univariate polynomials over a [`FiniteField`], coefficients stored
//! as element codes in ascending degree. The zero polynomial is the empty
//! vector; every other polynomial has a nonzero last coefficient.

use super::finite::FiniteField;

pub type Poly = Vec<u32>;

pub fn trim(mut a: Poly) -> Poly {
    while a.last() == Some(&0) {
        a.pop();
    }
    a
}

pub fn degree(a: &[u32]) -> Option<usize> {
    a.len().checked_sub(1)
}

pub fn constant(c: u32) -> Poly {
    trim(vec![c])
}

pub fn add(f: &FiniteField, a: &[u32], b: &[u32]) -> Poly {
    let n = a.len().max(b.len());
    let out = (0..n)
        .map(|i| f.add(*a.get(i).unwrap_or(&0), *b.get(i).unwrap_or(&0)))
        .collect();
    trim(out)
}

pub fn neg(f: &FiniteField, a: &[u32]) -> Poly {
    a.iter().map(|&c| f.neg(c)).collect()
}

pub fn sub(f: &FiniteField, a: &[u32], b: &[u32]) -> Poly {
    add(f, a, &neg(f, b))
}

pub fn scale(f: &FiniteField, a: &[u32], c: u32) -> Poly {
    trim(a.iter().map(|&x| f.mul(x, c)).collect())
}

pub fn mul(f: &FiniteField, a: &[u32], b: &[u32]) -> Poly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u32; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = f.add(out[i + j], f.mul(x, y));
        }
    }
    trim(out)
}

pub fn pow(f: &FiniteField, a: &[u32], mut e: u64) -> Poly {
    let mut base = a.to_vec();
    let mut acc = vec![1u32];
    while e > 0 {
        if e & 1 == 1 {
            acc = mul(f, &acc, &base);
        }
        base = mul(f, &base, &base);
        e >>= 1;
    }
    acc
}

/// Quotient and remainder; `b` must be nonzero.
pub fn divrem(f: &FiniteField, a: &[u32], b: &[u32]) -> (Poly, Poly) {
    assert!(!b.is_empty(), "polynomial division by zero");
    let mut r = trim(a.to_vec());
    let db = b.len() - 1;
    if r.len() <= db {
        return (Vec::new(), r);
    }
    let lead_inv = f.inv(b[db]).expect("nonzero leading coefficient");
    let mut q = vec![0u32; r.len() - db];
    while r.len() > db {
        let shift = r.len() - 1 - db;
        let c = f.mul(*r.last().unwrap(), lead_inv);
        q[shift] = c;
        for (i, &bi) in b.iter().enumerate() {
            r[shift + i] = f.sub(r[shift + i], f.mul(c, bi));
        }
        r = trim(r);
    }
    (trim(q), r)
}

pub fn monic(f: &FiniteField, a: &[u32]) -> Poly {
    match a.last() {
        None => Vec::new(),
        Some(&lc) => scale(f, a, f.inv(lc).expect("nonzero leading coefficient")),
    }
}

/// Monic greatest common divisor (zero if both inputs are zero).
pub fn gcd(f: &FiniteField, a: &[u32], b: &[u32]) -> Poly {
    let (mut x, mut y) = (trim(a.to_vec()), trim(b.to_vec()));
    while !y.is_empty() {
        let (_, r) = divrem(f, &x, &y);
        x = y;
        y = r;
    }
    monic(f, &x)
}

/// Coefficientwise Frobenius power.
pub fn frobenius(f: &FiniteField, a: &[u32], k: u32) -> Poly {
    a.iter().map(|&c| f.frobenius(c, k)).collect()
}

/// The unique `p`-th root when every exponent is divisible by `p`.
pub fn pth_root(f: &FiniteField, a: &[u32]) -> Option<Poly> {
    let p = f.characteristic() as usize;
    if a.iter().enumerate().any(|(i, &c)| c != 0 && i % p != 0) {
        return None;
    }
    Some(trim(a.iter().step_by(p).map(|&c| f.pth_root(c)).collect()))
}

/// All polynomials `r` with `r^n = a` (`a` nonzero), sorted.
///
/// The `p`-part of `n` is removed by unique `p`-th roots; the remaining
/// exponent `m` is coprime to `p` and each root is recovered coefficient by
/// coefficient from the top, one branch per `m`-th root of the leading
/// coefficient.
pub fn all_nth_roots(f: &FiniteField, a: &[u32], n: u64) -> Vec<Poly> {
    assert!(n >= 1 && !a.is_empty());
    let p = f.characteristic() as u64;
    let mut base = a.to_vec();
    let mut m = n;
    while m.is_multiple_of(p) {
        match pth_root(f, &base) {
            Some(r) => base = r,
            None => return Vec::new(),
        }
        m /= p;
    }
    let deg = base.len() - 1;
    if !(deg as u64).is_multiple_of(m) {
        return Vec::new();
    }
    let rdeg = deg / m as usize;
    let m_field = f.from_int((m % p) as i64);
    let mut roots = Vec::new();
    for lead in f.all_nth_roots(*base.last().unwrap(), m) {
        let mut r = vec![0u32; rdeg + 1];
        r[rdeg] = lead;
        // coefficient of t^(m*rdeg - k) in r^m is m lead^(m-1) r_(rdeg-k) + (higher terms)
        let denom = f.mul(m_field, f.pow(lead, m as i64 - 1).unwrap());
        let denom_inv = f.inv(denom).expect("m coprime to p");
        for k in 1..=rdeg {
            let partial = pow(f, &trim(r.clone()), m);
            let idx = m as usize * rdeg - k;
            let have = partial.get(idx).copied().unwrap_or(0);
            let want = base.get(idx).copied().unwrap_or(0);
            r[rdeg - k] = f.mul(f.sub(want, have), denom_inv);
        }
        let r = trim(r);
        if pow(f, &r, m) == base {
            roots.push(r);
        }
    }
    roots.sort();
    roots.dedup();
    roots
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn divrem_and_gcd() {
        let f = FiniteField::prime(5).unwrap();
        // (t+1)(t+2) and (t+1)(t+3)
        let a = mul(&f, &[1, 1], &[2, 1]);
        let b = mul(&f, &[1, 1], &[3, 1]);
        assert_eq!(gcd(&f, &a, &b), vec![1, 1]);
        let (q, r) = divrem(&f, &a, &[1, 1]);
        assert_eq!(q, vec![2, 1]);
        assert!(r.is_empty());
    }

    #[test]
    fn roots_of_powers() {
        let f = FiniteField::prime(7).unwrap();
        let r = vec![3, 0, 2, 1];
        for n in [1u64, 2, 3, 7, 14] {
            let a = pow(&f, &r, n);
            let roots = all_nth_roots(&f, &a, n);
            assert!(roots.contains(&r), "n = {n}");
            for s in &roots {
                assert_eq!(pow(&f, s, n), a);
            }
        }
        // t is not a square
        assert!(all_nth_roots(&f, &[0, 1], 2).is_empty());
    }
}
