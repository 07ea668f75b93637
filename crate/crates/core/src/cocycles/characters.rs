use super::UnitModule;
use crate::error::{Error, Result};
use crate::exactfields::{Field, FieldElement};
use crate::groupkit::{FiniteGroup, Subgroup};

/// A homomorphism `A → K*`, values aligned with `A`'s sorted elements.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Character {
    values: Vec<FieldElement>,
}

impl Character {
    pub fn new(values: Vec<FieldElement>) -> Self {
        Character { values }
    }

    pub fn trivial(field: &Field, a: &Subgroup) -> Self {
        Character { values: vec![field.one(); a.order()] }
    }

    pub fn values(&self) -> &[FieldElement] {
        &self.values
    }

    /// `χ(x)` for an ambient element `x ∈ A`.
    pub fn at(&self, a: &Subgroup, x: usize) -> &FieldElement {
        &self.values[a.position(x).expect("element of the character's domain")]
    }

    pub fn is_trivial(&self, field: &Field) -> bool {
        self.values.iter().all(|v| field.is_one(v))
    }

    pub fn mul(&self, field: &Field, other: &Character) -> Character {
        Character { values: self.values.iter().zip(&other.values).map(|(x, y)| field.mul(x, y)).collect() }
    }

    pub fn inv(&self, field: &Field) -> Character {
        Character { values: self.values.iter().map(|x| field.inv(x).expect("unit")).collect() }
    }

    pub fn is_homomorphism(&self, field: &Field, group: &FiniteGroup, a: &Subgroup) -> bool {
        a.elements().iter().all(|&x| {
            a.elements()
                .iter()
                .all(|&y| *self.at(a, group.mul(x, y)) == field.mul(self.at(a, x), self.at(a, y)))
        })
    }

    /// Elements of `A` on which the character is 1.
    pub fn kernel(&self, field: &Field, a: &Subgroup) -> Vec<usize> {
        a.elements().iter().zip(&self.values).filter(|(_, v)| field.is_one(v)).map(|(&x, _)| x).collect()
    }
}

/// `(ḡχ)(a) = g(χ(g^-1 a g))`.
pub fn act_on_character(module: &UnitModule, g: usize, a: &Subgroup, chi: &Character) -> Character {
    let grp = module.group();
    let values = a
        .elements()
        .iter()
        .map(|&x| module.act(g, chi.at(a, grp.conjugate(grp.inv(g), x))))
        .collect();
    Character { values }
}

/// The characters `χ_j(γ^l) = ζ^(jl)` of the cyclic group `<γ>`,
/// `j = 0, ..., n-1`, where `ζ` has order `n = ord(γ)`.
pub fn cyclic_characters(field: &Field, group: &FiniteGroup, gamma: usize, zeta: &FieldElement) -> Vec<Character> {
    let a = group.subgroup_generated(&[gamma]);
    let n = a.order();
    let mut exponent = vec![0usize; group.order()];
    for l in 0..n {
        exponent[group.pow(gamma, l as i64)] = l;
    }
    (0..n)
        .map(|j| {
            let values = a
                .elements()
                .iter()
                .map(|&x| field.pow(zeta, ((j * exponent[x]) % n) as i64).expect("unit"))
                .collect();
            Character { values }
        })
        .collect()
}

/// All characters of an abelian subgroup, indexed by exponent vectors with
/// respect to its primary decomposition (first coordinate fastest) and the
/// deterministic roots of unity.
pub fn character_group(field: &Field, group: &FiniteGroup, a: &Subgroup) -> Result<Vec<Character>> {
    let (sub, emb) = group.subgroup_as_group(a);
    let coords = sub
        .abelian_coords()
        .ok_or_else(|| Error::InvalidGroup("characters need an abelian subgroup".into()))?
        .clone();
    let zetas = coords
        .orders
        .iter()
        .map(|&m| field.primitive_root_of_unity(m))
        .collect::<Result<Vec<_>>>()?;
    let total: u64 = coords.orders.iter().product();
    let mut out = Vec::with_capacity(total as usize);
    for code in 0..total {
        let mut c = code;
        let js: Vec<u64> = coords
            .orders
            .iter()
            .map(|&m| {
                let j = c % m;
                c /= m;
                j
            })
            .collect();
        let values = (0..emb.len())
            .map(|i| {
                coords.vectors[i].iter().zip(&js).zip(&zetas).zip(&coords.orders).fold(
                    field.one(),
                    |acc, (((&v, &j), z), &m)| field.mul(&acc, &field.pow(z, ((v * j) % m) as i64).unwrap()),
                )
            })
            .collect();
        out.push(Character { values });
    }
    Ok(out)
}
