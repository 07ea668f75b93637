//! Exact arithmetic in the residue fields the analysis runs over: prime
//! fields `F_p`, extensions `F_q = F_p[u]/(m)` and rational function fields
//! `F_q(t)`.
//!
//! A [`Field`] is a cheap, shareable handle; [`FieldElement`]s are plain
//! canonical values and all arithmetic goes through the field:
//!
//! ```
//! use crossed_order::exactfields::Field;
//!
//! let f5 = Field::prime(5).unwrap();
//! let two = f5.from_int(2);
//! assert_eq!(f5.nth_root(&f5.from_int(4), 2).unwrap(), Some(two));
//! ```

pub mod finite;
pub mod poly;
pub mod ratfunc;

use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use finite::{gcd, FiniteField};
use poly::Poly;

/// Serializable description of a supported field.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase", deny_unknown_fields)]
pub enum FieldDescriptor {
    Prime { p: u32 },
    Extension { p: u32, modulus: Vec<u32> },
    Ratfunc { base: Box<FieldDescriptor>, var: String },
}

/// A field element in canonical form.
///
/// Finite field elements are codes (see [`finite`]); rational functions are
/// coprime `num/den` with monic `den`. The derived order (codes, then
/// ascending coefficient lists of numerator and denominator) is the total
/// order used to break ties between roots.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FieldElement {
    Residue(u32),
    Fraction { num: Poly, den: Poly },
}

/// `x -> x^(p^k)`, applied coefficientwise on `F_q(t)` (fixing `t`).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Automorphism {
    frobenius_power: u32,
}

impl Automorphism {
    pub fn identity() -> Self {
        Automorphism { frobenius_power: 0 }
    }

    pub fn frobenius_power(&self) -> u32 {
        self.frobenius_power
    }

    pub fn is_identity(&self) -> bool {
        self.frobenius_power == 0
    }
}

#[derive(Debug)]
enum Kind {
    Finite(FiniteField),
    Rational { base: FiniteField, var: String },
}

#[derive(Clone)]
pub struct Field {
    kind: Arc<Kind>,
}

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Field({})", self.name())
    }
}

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.kind, &other.kind) || self.descriptor() == other.descriptor()
    }
}

impl Eq for Field {}

fn decode_int(v: &Value) -> Result<i64> {
    v.as_i64().ok_or_else(|| Error::Parse(format!("expected an integer, found {v}")))
}

impl Field {
    pub fn prime(p: u32) -> Result<Self> {
        Ok(Field { kind: Arc::new(Kind::Finite(FiniteField::prime(p)?)) })
    }

    pub fn extension(p: u32, modulus: Vec<u32>) -> Result<Self> {
        Ok(Field { kind: Arc::new(Kind::Finite(FiniteField::extension(p, modulus)?)) })
    }

    /// `F_q(var)` over a finite `base`.
    pub fn rational_function(base: &Field, var: &str) -> Result<Self> {
        let Kind::Finite(b) = &*base.kind else {
            return Err(Error::InvalidField("rational function base must be finite".into()));
        };
        if var.is_empty() || !var.chars().all(|c| c.is_ascii_alphabetic()) || var == "u" {
            return Err(Error::InvalidField(format!("unusable indeterminate name {var:?}")));
        }
        Ok(Field { kind: Arc::new(Kind::Rational { base: b.clone(), var: var.to_string() }) })
    }

    pub fn from_descriptor(d: &FieldDescriptor) -> Result<Self> {
        match d {
            FieldDescriptor::Prime { p } => Field::prime(*p),
            FieldDescriptor::Extension { p, modulus } => Field::extension(*p, modulus.clone()),
            FieldDescriptor::Ratfunc { base, var } => {
                Field::rational_function(&Field::from_descriptor(base)?, var)
            }
        }
    }

    pub fn descriptor(&self) -> FieldDescriptor {
        fn finite(b: &FiniteField) -> FieldDescriptor {
            match b.modulus() {
                Some(m) => FieldDescriptor::Extension { p: b.characteristic(), modulus: m.to_vec() },
                None => FieldDescriptor::Prime { p: b.characteristic() },
            }
        }
        match &*self.kind {
            Kind::Finite(b) => finite(b),
            Kind::Rational { base, var } => {
                FieldDescriptor::Ratfunc { base: Box::new(finite(base)), var: var.clone() }
            }
        }
    }

    /// Short human-readable name such as `F_9` or `F_4(t)`.
    pub fn name(&self) -> String {
        match &*self.kind {
            Kind::Finite(b) => format!("F_{}", b.order()),
            Kind::Rational { base, var } => format!("F_{}({var})", base.order()),
        }
    }

    /// The finite field of constants (the field itself when finite).
    pub fn constants(&self) -> &FiniteField {
        match &*self.kind {
            Kind::Finite(b) | Kind::Rational { base: b, .. } => b,
        }
    }

    pub fn characteristic(&self) -> u32 {
        self.constants().characteristic()
    }

    pub fn is_finite(&self) -> bool {
        matches!(&*self.kind, Kind::Finite(_))
    }

    /// Number of elements for finite fields.
    pub fn order(&self) -> Option<u64> {
        match &*self.kind {
            Kind::Finite(b) => Some(b.order() as u64),
            Kind::Rational { .. } => None,
        }
    }

    /// Degree over the prime field for finite fields.
    pub fn degree(&self) -> Option<u32> {
        self.is_finite().then(|| self.constants().degree())
    }

    pub fn prime_subfield(&self) -> Field {
        Field::prime(self.characteristic()).expect("characteristic is prime")
    }

    pub fn zero(&self) -> FieldElement {
        self.constant(0)
    }

    pub fn one(&self) -> FieldElement {
        self.constant(1)
    }

    pub fn from_int(&self, n: i64) -> FieldElement {
        self.constant(self.constants().from_int(n))
    }

    /// Embeds a code of the constant field.
    pub fn constant(&self, code: u32) -> FieldElement {
        match &*self.kind {
            Kind::Finite(_) => FieldElement::Residue(code),
            Kind::Rational { .. } => FieldElement::Fraction { num: poly::constant(code), den: vec![1] },
        }
    }

    /// The indeterminate `t` of `F_q(t)`.
    pub fn variable(&self) -> Option<FieldElement> {
        match &*self.kind {
            Kind::Rational { .. } => Some(FieldElement::Fraction { num: vec![0, 1], den: vec![1] }),
            Kind::Finite(_) => None,
        }
    }

    /// The class of `u` in `F_p[u]/(m)`.
    pub fn power_basis_generator(&self) -> FieldElement {
        let b = self.constants();
        let mut d = vec![0u32; b.degree() as usize];
        if b.degree() > 1 {
            d[1] = 1;
        } else {
            // linear modulus u + c: u = -c
            let c = b.modulus().map(|m| m[0]).unwrap_or(0);
            d[0] = b.neg(c);
        }
        self.constant(b.from_digits(&d))
    }

    /// Builds a rational function from constant-field coefficient codes.
    pub fn fraction(&self, num: Poly, den: Poly) -> Result<FieldElement> {
        let Kind::Rational { base, .. } = &*self.kind else {
            return Err(Error::InvalidField("fractions need a rational function field".into()));
        };
        if poly::trim(den.clone()).is_empty() {
            return Err(Error::DivisionByZero);
        }
        if num.iter().chain(den.iter()).any(|&c| c >= base.order()) {
            return Err(Error::InvalidField("coefficient outside the constant field".into()));
        }
        let (num, den) = ratfunc::normalize(base, num, den);
        Ok(FieldElement::Fraction { num, den })
    }

    fn residue(&self, x: &FieldElement) -> u32 {
        match x {
            FieldElement::Residue(c) => *c,
            FieldElement::Fraction { .. } => panic!("rational function passed to finite field {}", self.name()),
        }
    }

    fn parts<'a>(&self, x: &'a FieldElement) -> (&'a [u32], &'a [u32]) {
        match x {
            FieldElement::Fraction { num, den } => (num, den),
            FieldElement::Residue(_) => panic!("residue passed to rational function field {}", self.name()),
        }
    }

    /// Is `x` a canonical element of this field?
    pub fn contains(&self, x: &FieldElement) -> bool {
        match (&*self.kind, x) {
            (Kind::Finite(b), FieldElement::Residue(c)) => *c < b.order(),
            (Kind::Rational { base, .. }, FieldElement::Fraction { num, den }) => {
                let in_range = num.iter().chain(den.iter()).all(|&c| c < base.order());
                in_range
                    && !den.is_empty()
                    && ratfunc::normalize(base, num.clone(), den.clone()) == (num.clone(), den.clone())
            }
            _ => false,
        }
    }

    pub fn is_zero(&self, x: &FieldElement) -> bool {
        match x {
            FieldElement::Residue(c) => *c == 0,
            FieldElement::Fraction { num, .. } => num.is_empty(),
        }
    }

    pub fn is_one(&self, x: &FieldElement) -> bool {
        *x == self.one()
    }

    pub fn add(&self, a: &FieldElement, b: &FieldElement) -> FieldElement {
        match &*self.kind {
            Kind::Finite(f) => FieldElement::Residue(f.add(self.residue(a), self.residue(b))),
            Kind::Rational { base, .. } => {
                let (num, den) = ratfunc::add(base, self.parts(a), self.parts(b));
                FieldElement::Fraction { num, den }
            }
        }
    }

    pub fn neg(&self, a: &FieldElement) -> FieldElement {
        match &*self.kind {
            Kind::Finite(f) => FieldElement::Residue(f.neg(self.residue(a))),
            Kind::Rational { base, .. } => {
                let (num, den) = self.parts(a);
                FieldElement::Fraction { num: poly::neg(base, num), den: den.to_vec() }
            }
        }
    }

    pub fn sub(&self, a: &FieldElement, b: &FieldElement) -> FieldElement {
        self.add(a, &self.neg(b))
    }

    pub fn mul(&self, a: &FieldElement, b: &FieldElement) -> FieldElement {
        match &*self.kind {
            Kind::Finite(f) => FieldElement::Residue(f.mul(self.residue(a), self.residue(b))),
            Kind::Rational { base, .. } => {
                let (num, den) = ratfunc::mul(base, self.parts(a), self.parts(b));
                FieldElement::Fraction { num, den }
            }
        }
    }

    pub fn inv(&self, a: &FieldElement) -> Result<FieldElement> {
        if self.is_zero(a) {
            return Err(Error::DivisionByZero);
        }
        Ok(match &*self.kind {
            Kind::Finite(f) => FieldElement::Residue(f.inv(self.residue(a)).unwrap()),
            Kind::Rational { base, .. } => {
                let (num, den) = self.parts(a);
                let (num, den) = ratfunc::normalize(base, den.to_vec(), num.to_vec());
                FieldElement::Fraction { num, den }
            }
        })
    }

    pub fn div(&self, a: &FieldElement, b: &FieldElement) -> Result<FieldElement> {
        Ok(self.mul(a, &self.inv(b)?))
    }

    pub fn pow(&self, a: &FieldElement, e: i64) -> Result<FieldElement> {
        if e < 0 {
            return self.pow(&self.inv(a)?, -e);
        }
        Ok(match &*self.kind {
            Kind::Finite(f) => FieldElement::Residue(f.pow(self.residue(a), e).unwrap()),
            Kind::Rational { base, .. } => {
                let (num, den) = self.parts(a);
                FieldElement::Fraction { num: poly::pow(base, num, e as u64), den: poly::pow(base, den, e as u64) }
            }
        })
    }

    /// Product of a slice of elements.
    pub fn product<'a>(&self, items: impl IntoIterator<Item = &'a FieldElement>) -> FieldElement {
        items.into_iter().fold(self.one(), |acc, x| self.mul(&acc, x))
    }

    /// Every element of a finite field in code order; `None` otherwise.
    pub fn elements(&self) -> Option<Vec<FieldElement>> {
        match &*self.kind {
            Kind::Finite(f) => Some((0..f.order()).map(FieldElement::Residue).collect()),
            Kind::Rational { .. } => None,
        }
    }

    pub fn units(&self) -> Option<Vec<FieldElement>> {
        self.elements().map(|v| v.into_iter().skip(1).collect())
    }

    /// The automorphism `x -> x^(p^k)` (coefficientwise on `F_q(t)`).
    pub fn automorphism(&self, k: u32) -> Automorphism {
        Automorphism { frobenius_power: k % self.constants().degree() }
    }

    /// Order of the supported automorphism group (the cyclic Frobenius group).
    pub fn automorphism_group_order(&self) -> u32 {
        self.constants().degree()
    }

    pub fn compose(&self, a: Automorphism, b: Automorphism) -> Automorphism {
        self.automorphism(a.frobenius_power + b.frobenius_power)
    }

    pub fn inverse_automorphism(&self, a: Automorphism) -> Automorphism {
        let n = self.constants().degree();
        self.automorphism(n - a.frobenius_power % n)
    }

    pub fn apply_automorphism(&self, aut: Automorphism, x: &FieldElement) -> FieldElement {
        if aut.is_identity() {
            return x.clone();
        }
        match &*self.kind {
            Kind::Finite(f) => FieldElement::Residue(f.frobenius(self.residue(x), aut.frobenius_power)),
            Kind::Rational { base, .. } => {
                let (num, den) = self.parts(x);
                FieldElement::Fraction {
                    num: poly::frobenius(base, num, aut.frobenius_power),
                    den: poly::frobenius(base, den, aut.frobenius_power),
                }
            }
        }
    }

    /// All `n`-th roots of a nonzero `x`, in ascending order.
    pub fn all_nth_roots(&self, x: &FieldElement, n: u64) -> Result<Vec<FieldElement>> {
        if self.is_zero(x) {
            return Err(Error::ZeroRoot);
        }
        assert!(n >= 1, "root order must be positive");
        Ok(match &*self.kind {
            Kind::Finite(f) => f.all_nth_roots(self.residue(x), n).into_iter().map(FieldElement::Residue).collect(),
            Kind::Rational { base, .. } => {
                // canonical forms force num = A^n and den = B^n with B monic
                let (num, den) = self.parts(x);
                let Some(den_root) = poly::all_nth_roots(base, den, n).into_iter().find(|b| b.last() == Some(&1))
                else {
                    return Ok(Vec::new());
                };
                let mut roots: Vec<FieldElement> = poly::all_nth_roots(base, num, n)
                    .into_iter()
                    .map(|a| FieldElement::Fraction { num: a, den: den_root.clone() })
                    .collect();
                roots.sort();
                roots
            }
        })
    }

    /// The least `y` (in element order) with `y^n = x`, if any.
    pub fn nth_root(&self, x: &FieldElement, n: u64) -> Result<Option<FieldElement>> {
        Ok(self.all_nth_roots(x, n)?.into_iter().next())
    }

    /// The least element of exact multiplicative order `n`.
    pub fn primitive_root_of_unity(&self, n: u64) -> Result<FieldElement> {
        let f = self.constants();
        let m = (f.order() - 1) as u64;
        let missing = || Error::MissingRootOfUnity { order: n, field: self.name() };
        if n == 0 || n.is_multiple_of(f.characteristic() as u64) || !m.is_multiple_of(n) {
            return Err(missing());
        }
        let step = m / n;
        let code = (1..=n)
            .filter(|k| gcd(*k, n) == 1)
            .map(|k| f.exp(step * k))
            .min()
            .ok_or_else(missing)?;
        Ok(self.constant(code))
    }

    /// Multiplicative order, `None` for zero and for elements of infinite order.
    pub fn multiplicative_order(&self, x: &FieldElement) -> Option<u64> {
        let code = self.as_constant(x)?;
        self.constants().multiplicative_order(code)
    }

    /// The constant-field code of `x` if `x` is a constant.
    pub fn as_constant(&self, x: &FieldElement) -> Option<u32> {
        match x {
            FieldElement::Residue(c) => Some(*c),
            FieldElement::Fraction { num, den } if den == &[1] && num.len() <= 1 => {
                Some(num.first().copied().unwrap_or(0))
            }
            _ => None,
        }
    }

    /// Generator and order of the group of roots of unity (`F_q^*` in both families).
    pub fn torsion_generator(&self) -> (FieldElement, u64) {
        let f = self.constants();
        (self.constant(f.generator()), (f.order() - 1) as u64)
    }

    /// `k` with `x = g^k` for the torsion generator `g`, if `x` is a root of unity.
    pub fn torsion_log(&self, x: &FieldElement) -> Option<u64> {
        let c = self.as_constant(x)?;
        self.constants().log(c).map(u64::from)
    }

    /// A `p`-th root of `x` if `x` is a `p`-th power (always for finite fields).
    pub fn pth_root(&self, x: &FieldElement) -> Option<FieldElement> {
        match &*self.kind {
            Kind::Finite(f) => Some(FieldElement::Residue(f.pth_root(self.residue(x)))),
            Kind::Rational { base, .. } => {
                let (num, den) = self.parts(x);
                let num = poly::pth_root(base, num)?;
                let den = poly::pth_root(base, den)?;
                Some(FieldElement::Fraction { num, den })
            }
        }
    }

    pub fn is_pth_power(&self, x: &FieldElement) -> bool {
        self.pth_root(x).is_some()
    }

    /// Coordinates of `x` over the subfield of `p`-th powers.
    ///
    /// Returns `a_0, ..., a_(r-1)` with `x = sum a_i^p b_i`, where the basis
    /// `b_i` is `1` for finite fields and `1, t, ..., t^(p-1)` for `F_q(t)`.
    pub fn pth_power_coordinates(&self, x: &FieldElement) -> Vec<FieldElement> {
        match &*self.kind {
            Kind::Finite(f) => vec![FieldElement::Residue(f.pth_root(self.residue(x)))],
            Kind::Rational { base, .. } => {
                let (num, den) = self.parts(x);
                ratfunc::pth_power_coordinates(base, num, den)
                    .into_iter()
                    .map(|(num, den)| FieldElement::Fraction { num, den })
                    .collect()
            }
        }
    }

    /// Coordinates over `F_p` in the power basis (finite fields only).
    pub fn prime_coordinates(&self, x: &FieldElement) -> Result<Vec<u32>> {
        match &*self.kind {
            Kind::Finite(f) => Ok(f.digits(self.residue(x))),
            Kind::Rational { .. } => Err(Error::OracleFiniteOnly),
        }
    }

    pub fn from_prime_coordinates(&self, d: &[u32]) -> FieldElement {
        self.constant(self.constants().from_digits(d))
    }

    /// JSON encoding: integer (prime), coefficient array (extension) or
    /// `{"num": [...], "den": [...]}` (rational functions).
    pub fn encode(&self, x: &FieldElement) -> Value {
        fn code(b: &FiniteField, c: u32) -> Value {
            if b.modulus().is_some() {
                json!(b.digits(c))
            } else {
                json!(c)
            }
        }
        match &*self.kind {
            Kind::Finite(b) => code(b, self.residue(x)),
            Kind::Rational { base, .. } => {
                let (num, den) = self.parts(x);
                let enc = |p: &[u32]| Value::Array(p.iter().map(|&c| code(base, c)).collect());
                json!({"num": enc(num), "den": enc(den)})
            }
        }
    }

    pub fn decode(&self, v: &Value) -> Result<FieldElement> {
        fn code(b: &FiniteField, v: &Value) -> Result<u32> {
            match v {
                Value::Array(items) if b.modulus().is_some() => {
                    if items.len() > b.degree() as usize {
                        return Err(Error::Parse(format!("too many coefficients in {v}")));
                    }
                    let d = items
                        .iter()
                        .map(|c| decode_int(c).map(|n| b.from_int(n)))
                        .collect::<Result<Vec<u32>>>()?;
                    Ok(b.from_digits(&d))
                }
                _ => Ok(b.from_int(decode_int(v)?)),
            }
        }
        match &*self.kind {
            Kind::Finite(b) => Ok(FieldElement::Residue(code(b, v)?)),
            Kind::Rational { base, .. } => match v {
                Value::Object(map) => {
                    if let Some(k) = map.keys().find(|k| *k != "num" && *k != "den") {
                        return Err(Error::Parse(format!("unknown key {k:?} in rational function")));
                    }
                    let coeffs = |key: &str| -> Result<Poly> {
                        match map.get(key) {
                            None => Ok(vec![1]),
                            Some(Value::Array(items)) => items.iter().map(|c| code(base, c)).collect(),
                            Some(other) => Err(Error::Parse(format!("expected coefficient array, found {other}"))),
                        }
                    };
                    let num = match map.get("num") {
                        None => return Err(Error::Parse("rational function needs \"num\"".into())),
                        Some(_) => coeffs("num")?,
                    };
                    self.fraction(num, coeffs("den")?)
                }
                other => Ok(self.constant(code(base, other)?)),
            },
        }
    }

    /// Human-readable form, e.g. `2u+1` or `(t^2+1)/(t)`.
    pub fn format(&self, x: &FieldElement) -> String {
        fn constant(b: &FiniteField, c: u32) -> String {
            if b.modulus().is_none() || b.degree() == 1 {
                return c.to_string();
            }
            format_poly(&b.digits(c), "u", |d| d.to_string(), false)
        }
        match &*self.kind {
            Kind::Finite(b) => constant(b, self.residue(x)),
            Kind::Rational { base, var } => {
                let (num, den) = self.parts(x);
                let ext = base.degree() > 1;
                let n = format_poly(num, var, |c| constant(base, c), ext);
                if den == [1] {
                    n
                } else {
                    format!("({n})/({})", format_poly(den, var, |c| constant(base, c), ext))
                }
            }
        }
    }
}

fn format_poly(coeffs: &[u32], var: &str, show: impl Fn(u32) -> String, paren: bool) -> String {
    let mut terms = Vec::new();
    for (i, &c) in coeffs.iter().enumerate().rev() {
        if c == 0 {
            continue;
        }
        let mut s = show(c);
        if paren && s.contains(|ch: char| ch == '+' || ch.is_alphabetic()) && i > 0 {
            s = format!("({s})");
        }
        let mono = match i {
            0 => String::new(),
            1 => var.to_string(),
            _ => format!("{var}^{i}"),
        };
        terms.push(match (i, s.as_str()) {
            (0, _) => s,
            (_, "1") => mono,
            _ => format!("{s}{mono}"),
        });
    }
    if terms.is_empty() {
        "0".to_string()
    } else {
        terms.join("+")
    }
}
