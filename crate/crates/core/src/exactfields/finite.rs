//! Finite fields `F_q = F_p[u]/(m)` with table-based multiplication.
//!
//! Elements are encoded as integers `sum c_i p^i` over their coefficient
//! vector in the power basis `1, u, u^2, ...`. The encoding is canonical, so
//! equality of elements is equality of codes.

use crate::error::{Error, Result};

/// Largest supported field order.
pub const MAX_ORDER: u64 = 1 << 16;

#[derive(Clone, Debug)]
pub struct FiniteField {
    p: u32,
    degree: u32,
    q: u32,
    /// Ascending coefficients of the monic modulus; `None` for prime fields.
    modulus: Option<Vec<u32>>,
    exp: Vec<u32>,
    log: Vec<u32>,
}

pub(crate) fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

pub(crate) fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

fn trim(v: &mut Vec<u32>) {
    while v.last() == Some(&0) {
        v.pop();
    }
}

/// Remainder of `a` modulo `b` over F_p (`b` nonzero, trimmed).
fn prime_poly_rem(p: u32, a: &[u32], b: &[u32]) -> Vec<u32> {
    let mut r = a.to_vec();
    trim(&mut r);
    let db = b.len() - 1;
    let lead_inv = mod_inv(b[db], p);
    while r.len() > db {
        let shift = r.len() - 1 - db;
        let c = (r[r.len() - 1] as u64 * lead_inv as u64 % p as u64) as u32;
        for (i, &bi) in b.iter().enumerate() {
            let sub = (c as u64 * bi as u64 % p as u64) as u32;
            r[shift + i] = (r[shift + i] + p - sub) % p;
        }
        trim(&mut r);
    }
    r
}

fn mod_inv(a: u32, p: u32) -> u32 {
    mod_pow(a, p - 2, p)
}

fn mod_pow(a: u32, mut e: u32, p: u32) -> u32 {
    let (mut base, mut acc) = (a as u64 % p as u64, 1u64);
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * base % p as u64;
        }
        base = base * base % p as u64;
        e >>= 1;
    }
    acc as u32
}

impl FiniteField {
    pub fn prime(p: u32) -> Result<Self> {
        if !is_prime(p as u64) {
            return Err(Error::InvalidField(format!("characteristic {p} is not prime")));
        }
        if p as u64 > MAX_ORDER {
            return Err(Error::InvalidField(format!("field order {p} exceeds {MAX_ORDER}")));
        }
        Self::build(p, 1, None)
    }

    /// `modulus` lists ascending coefficients of a monic irreducible polynomial over F_p.
    pub fn extension(p: u32, modulus: Vec<u32>) -> Result<Self> {
        if !is_prime(p as u64) {
            return Err(Error::InvalidField(format!("characteristic {p} is not prime")));
        }
        if modulus.len() < 2 {
            return Err(Error::InvalidField("modulus must have degree at least 1".into()));
        }
        if modulus.iter().any(|&c| c >= p) {
            return Err(Error::InvalidField("modulus coefficients must lie in [0, p)".into()));
        }
        if *modulus.last().unwrap() != 1 {
            return Err(Error::InvalidField("modulus must be monic".into()));
        }
        let degree = (modulus.len() - 1) as u32;
        (p as u64).checked_pow(degree).filter(|&q| q <= MAX_ORDER).ok_or_else(|| {
            Error::InvalidField(format!("field order {p}^{degree} exceeds {MAX_ORDER}"))
        })?;
        if !Self::is_irreducible(p, &modulus) {
            return Err(Error::InvalidField(format!("modulus {modulus:?} is reducible over F_{p}")));
        }
        if degree == 1 {
            // a linear modulus just presents the prime field
            return Self::build(p, 1, None).map(|mut f| {
                f.modulus = Some(modulus);
                f
            });
        }
        Self::build(p, degree, Some(modulus))
    }

    /// Trial division by every monic polynomial of degree `1..=deg/2`.
    fn is_irreducible(p: u32, modulus: &[u32]) -> bool {
        let deg = modulus.len() - 1;
        for d in 1..=deg / 2 {
            let count = (p as u64).pow(d as u32);
            for code in 0..count {
                let mut divisor = Vec::with_capacity(d + 1);
                let mut c = code;
                for _ in 0..d {
                    divisor.push((c % p as u64) as u32);
                    c /= p as u64;
                }
                divisor.push(1);
                if prime_poly_rem(p, modulus, &divisor).is_empty() {
                    return false;
                }
            }
        }
        true
    }

    fn build(p: u32, degree: u32, modulus: Option<Vec<u32>>) -> Result<Self> {
        let q = p.pow(degree);
        let mut field = FiniteField { p, degree, q, modulus, exp: Vec::new(), log: Vec::new() };
        let generator = (1..q)
            .find(|&c| field.slow_order_is_full(c))
            .ok_or_else(|| Error::Inconsistent("finite field without primitive element".into()))?;
        let mut exp = Vec::with_capacity((q - 1) as usize);
        let mut log = vec![0u32; q as usize];
        let mut x = 1u32;
        for i in 0..q - 1 {
            exp.push(x);
            log[x as usize] = i;
            x = field.slow_mul(x, generator);
        }
        field.exp = exp;
        field.log = log;
        Ok(field)
    }

    fn slow_mul(&self, a: u32, b: u32) -> u32 {
        let (da, db) = (self.digits(a), self.digits(b));
        let p = self.p as u64;
        let mut prod = vec![0u32; da.len() + db.len()];
        for (i, &x) in da.iter().enumerate() {
            for (j, &y) in db.iter().enumerate() {
                prod[i + j] = ((prod[i + j] as u64 + x as u64 * y as u64) % p) as u32;
            }
        }
        let reduced = match &self.modulus {
            Some(m) if self.degree > 1 => prime_poly_rem(self.p, &prod, m),
            _ => {
                let mut v = prod;
                trim(&mut v);
                v
            }
        };
        self.from_digits(&reduced)
    }

    fn slow_pow(&self, a: u32, mut e: u64) -> u32 {
        let (mut base, mut acc) = (a, 1u32);
        while e > 0 {
            if e & 1 == 1 {
                acc = self.slow_mul(acc, base);
            }
            base = self.slow_mul(base, base);
            e >>= 1;
        }
        acc
    }

    fn slow_order_is_full(&self, c: u32) -> bool {
        let n = (self.q - 1) as u64;
        if n == 1 {
            return c == 1;
        }
        prime_factors(n).into_iter().all(|r| self.slow_pow(c, n / r) != 1)
    }

    pub fn characteristic(&self) -> u32 {
        self.p
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn order(&self) -> u32 {
        self.q
    }

    pub fn modulus(&self) -> Option<&[u32]> {
        self.modulus.as_deref()
    }

    pub fn is_prime_field(&self) -> bool {
        self.degree == 1
    }

    /// The primitive element used for the log tables (least code of full order).
    pub fn generator(&self) -> u32 {
        if self.q == 2 {
            1
        } else {
            self.exp[1]
        }
    }

    /// Coefficients over F_p, padded to the field degree.
    pub fn digits(&self, mut a: u32) -> Vec<u32> {
        let mut d = Vec::with_capacity(self.degree as usize);
        for _ in 0..self.degree {
            d.push(a % self.p);
            a /= self.p;
        }
        d
    }

    pub fn from_digits(&self, d: &[u32]) -> u32 {
        d.iter().rev().fold(0u32, |acc, &c| acc * self.p + c % self.p)
    }

    pub fn from_int(&self, n: i64) -> u32 {
        n.rem_euclid(self.p as i64) as u32
    }

    pub fn add(&self, a: u32, b: u32) -> u32 {
        if self.degree == 1 {
            return (a + b) % self.p;
        }
        let (mut a, mut b) = (a, b);
        let (mut out, mut place) = (0u32, 1u32);
        for _ in 0..self.degree {
            out += ((a % self.p + b % self.p) % self.p) * place;
            a /= self.p;
            b /= self.p;
            place *= self.p;
        }
        out
    }

    pub fn neg(&self, a: u32) -> u32 {
        if self.degree == 1 {
            return (self.p - a) % self.p;
        }
        let mut a = a;
        let (mut out, mut place) = (0u32, 1u32);
        for _ in 0..self.degree {
            out += ((self.p - a % self.p) % self.p) * place;
            a /= self.p;
            place *= self.p;
        }
        out
    }

    pub fn sub(&self, a: u32, b: u32) -> u32 {
        self.add(a, self.neg(b))
    }

    pub fn mul(&self, a: u32, b: u32) -> u32 {
        if a == 0 || b == 0 {
            return 0;
        }
        let n = self.q - 1;
        let s = (self.log[a as usize] as u64 + self.log[b as usize] as u64) % n as u64;
        self.exp[s as usize]
    }

    pub fn inv(&self, a: u32) -> Option<u32> {
        if a == 0 {
            return None;
        }
        let n = self.q - 1;
        Some(self.exp[((n - self.log[a as usize]) % n) as usize])
    }

    /// `a^e` for any integer exponent; `None` for a negative power of zero.
    pub fn pow(&self, a: u32, e: i64) -> Option<u32> {
        if a == 0 {
            return match e {
                0 => Some(1),
                e if e > 0 => Some(0),
                _ => None,
            };
        }
        let n = (self.q - 1) as i64;
        let s = (self.log[a as usize] as i64 * e.rem_euclid(n)).rem_euclid(n);
        Some(self.exp[s as usize])
    }

    /// Discrete logarithm to the base [`FiniteField::generator`].
    pub fn log(&self, a: u32) -> Option<u32> {
        (a != 0).then(|| self.log[a as usize])
    }

    pub fn exp(&self, e: u64) -> u32 {
        self.exp[(e % (self.q - 1) as u64) as usize]
    }

    /// `a^(p^k)`.
    pub fn frobenius(&self, a: u32, k: u32) -> u32 {
        if a == 0 || self.degree == 1 {
            return a;
        }
        let n = (self.q - 1) as u64;
        let pk = (self.p as u64).pow(k % self.degree) % n;
        self.exp[((self.log[a as usize] as u64 * pk) % n) as usize]
    }

    /// The unique `p`-th root (Frobenius is bijective on a finite field).
    pub fn pth_root(&self, a: u32) -> u32 {
        self.frobenius(a, self.degree - 1)
    }

    /// Multiplicative order of a nonzero element.
    pub fn multiplicative_order(&self, a: u32) -> Option<u64> {
        let l = self.log(a)? as u64;
        let n = (self.q - 1) as u64;
        Some(n / gcd(l, n))
    }

    /// All `y` with `y^n = a` for nonzero `a`, sorted by code.
    pub fn all_nth_roots(&self, a: u32, n: u64) -> Vec<u32> {
        let Some(l) = self.log(a) else { return Vec::new() };
        let m = (self.q - 1) as u64;
        let g = gcd(n % m, m);
        let g = if g == 0 { m } else { g };
        if !(l as u64).is_multiple_of(g) {
            return Vec::new();
        }
        // y = gen^k with n k = l (mod m): k = k0 + j m/g
        let (nr, lr, mr) = ((n % m) / g, l as u64 / g, m / g);
        let k0 = if mr == 1 { 0 } else { lr * mod_inverse_u64(nr % mr, mr) % mr };
        let mut roots: Vec<u32> = (0..g).map(|j| self.exp((k0 + j * mr) % m)).collect();
        roots.sort_unstable();
        roots.dedup();
        roots
    }
}

pub(crate) fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn mod_inverse_u64(a: u64, m: u64) -> u64 {
    let (mut old_r, mut r) = (a as i128, m as i128);
    let (mut old_s, mut s) = (1i128, 0i128);
    while r != 0 {
        let quo = old_r / r;
        (old_r, r) = (r, old_r - quo * r);
        (old_s, s) = (s, old_s - quo * s);
    }
    old_s.rem_euclid(m as i128) as u64
}
