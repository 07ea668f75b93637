//! Finite groups given by multiplication tables, their subgroups, quotients
//! and actions on fields.

mod action;
mod named;

pub use action::{kernel_of_action, GroupAction};
pub use named::named_group;

use std::collections::{BTreeSet, VecDeque};
use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::exactfields::finite::gcd;

pub const MAX_GROUP_ORDER: usize = 64;

/// Element indices of a subgroup, sorted ascending.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Subgroup {
    elements: Vec<usize>,
}

impl Subgroup {
    pub fn elements(&self) -> &[usize] {
        &self.elements
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn contains(&self, g: usize) -> bool {
        self.elements.binary_search(&g).is_ok()
    }

    pub fn is_trivial(&self) -> bool {
        self.elements.len() == 1
    }

    pub fn is_subset_of(&self, other: &Subgroup) -> bool {
        self.elements.iter().all(|&g| other.contains(g))
    }

    /// Position of `g` in the sorted element list.
    pub fn position(&self, g: usize) -> Option<usize> {
        self.elements.binary_search(&g).ok()
    }
}

/// Exponent coordinates of an abelian group with respect to a fixed
/// decomposition into cyclic factors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AbelianCoords {
    /// Orders of the cyclic factors.
    pub orders: Vec<u64>,
    /// Element index of each factor generator.
    pub generators: Vec<usize>,
    /// Exponent vector of every element.
    pub vectors: Vec<Vec<u64>>,
}

#[derive(Clone, Debug)]
pub struct FiniteGroup {
    table: Vec<Vec<usize>>,
    identity: usize,
    inverse: Vec<usize>,
    labels: Vec<String>,
    coords: OnceLock<Option<AbelianCoords>>,
}

impl PartialEq for FiniteGroup {
    fn eq(&self, other: &Self) -> bool {
        self.table == other.table && self.labels == other.labels
    }
}

impl Eq for FiniteGroup {}

/// `G/N` together with the projection and minimal-index coset representatives.
#[derive(Clone, Debug)]
pub struct Quotient {
    pub group: FiniteGroup,
    pub projection: Vec<usize>,
    pub representatives: Vec<usize>,
}

impl FiniteGroup {
    /// Builds a group from a multiplication table, checking the group axioms
    /// exhaustively.
    pub fn from_table(table: Vec<Vec<usize>>, labels: Option<Vec<String>>) -> Result<Self> {
        let n = table.len();
        let bad = |m: String| Err(Error::InvalidGroup(m));
        if n == 0 || n > MAX_GROUP_ORDER {
            return bad(format!("order {n} outside 1..={MAX_GROUP_ORDER}"));
        }
        if table.iter().any(|row| row.len() != n || row.iter().any(|&x| x >= n)) {
            return bad("table is not an n×n array of element indices".into());
        }
        let Some(identity) = (0..n).find(|&e| (0..n).all(|x| table[e][x] == x && table[x][e] == x)) else {
            return bad("no identity element".into());
        };
        let mut inverse = vec![0; n];
        for (x, inv) in inverse.iter_mut().enumerate() {
            let candidates: Vec<usize> = (0..n).filter(|&y| table[x][y] == identity).collect();
            match candidates.as_slice() {
                [y] if table[*y][x] == identity => *inv = *y,
                _ => return bad(format!("element {x} has no unique two-sided inverse")),
            }
        }
        for a in 0..n {
            for b in 0..n {
                let ab = table[a][b];
                for c in 0..n {
                    if table[ab][c] != table[a][table[b][c]] {
                        return bad(format!("associativity fails at ({a}, {b}, {c})"));
                    }
                }
            }
        }
        let labels = match labels {
            Some(l) => {
                let distinct: BTreeSet<&String> = l.iter().collect();
                if l.len() != n || distinct.len() != n || l.iter().any(|s| s.is_empty()) {
                    return bad("labels must be n distinct nonempty strings".into());
                }
                l
            }
            None => (0..n).map(|i| if i == identity { "1".to_string() } else { format!("g{i}") }).collect(),
        };
        Ok(FiniteGroup { table, identity, inverse, labels, coords: OnceLock::new() })
    }

    pub(crate) fn with_coords(self, coords: AbelianCoords) -> Self {
        let _ = self.coords.set(Some(coords));
        self
    }

    pub fn order(&self) -> usize {
        self.table.len()
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn table(&self) -> &[Vec<usize>] {
        &self.table
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a][b]
    }

    pub fn inv(&self, a: usize) -> usize {
        self.inverse[a]
    }

    pub fn pow(&self, a: usize, k: i64) -> usize {
        let base = if k < 0 { self.inv(a) } else { a };
        (0..k.unsigned_abs()).fold(self.identity, |acc, _| self.mul(acc, base))
    }

    /// `g a g^-1`.
    pub fn conjugate(&self, g: usize, a: usize) -> usize {
        self.mul(self.mul(g, a), self.inv(g))
    }

    pub fn label(&self, g: usize) -> &str {
        &self.labels[g]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.order()
    }

    /// Exponent coordinates for abelian groups (from the named construction
    /// or a computed primary decomposition).
    pub fn abelian_coords(&self) -> Option<&AbelianCoords> {
        self.coords.get_or_init(|| self.is_abelian().then(|| self.abelian_basis())).as_ref()
    }

    pub fn element_order(&self, a: usize) -> usize {
        let mut x = a;
        let mut k = 1;
        while x != self.identity {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }

    pub fn is_abelian(&self) -> bool {
        self.elements().all(|a| (0..a).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    pub fn whole(&self) -> Subgroup {
        Subgroup { elements: self.elements().collect() }
    }

    pub fn trivial_subgroup(&self) -> Subgroup {
        Subgroup { elements: vec![self.identity] }
    }

    /// Closure of `gens` under multiplication.
    pub fn subgroup_generated(&self, gens: &[usize]) -> Subgroup {
        let mut seen = vec![false; self.order()];
        seen[self.identity] = true;
        let mut queue: VecDeque<usize> = VecDeque::from([self.identity]);
        while let Some(x) = queue.pop_front() {
            for &g in gens {
                let y = self.mul(x, g);
                if !seen[y] {
                    seen[y] = true;
                    queue.push_back(y);
                }
            }
        }
        Subgroup { elements: (0..self.order()).filter(|&i| seen[i]).collect() }
    }

    /// Validates an element set as a subgroup.
    pub fn subgroup(&self, elements: &[usize]) -> Result<Subgroup> {
        let mut e = elements.to_vec();
        e.sort_unstable();
        e.dedup();
        if e.iter().any(|&x| x >= self.order()) {
            return Err(Error::InvalidGroup("subgroup element out of range".into()));
        }
        let s = Subgroup { elements: e };
        if !s.contains(self.identity) || !s.elements.iter().all(|&a| s.elements.iter().all(|&b| s.contains(self.mul(a, b)))) {
            return Err(Error::InvalidGroup("element set is not closed under multiplication".into()));
        }
        Ok(s)
    }

    pub fn is_normal(&self, h: &Subgroup) -> bool {
        self.elements().all(|g| h.elements.iter().all(|&a| h.contains(self.conjugate(g, a))))
    }

    pub fn intersection(&self, a: &Subgroup, b: &Subgroup) -> Subgroup {
        Subgroup { elements: a.elements.iter().copied().filter(|&x| b.contains(x)).collect() }
    }

    /// Subgroup generated by `a ∪ b`.
    pub fn join(&self, a: &Subgroup, b: &Subgroup) -> Subgroup {
        let gens: Vec<usize> = a.elements.iter().chain(&b.elements).copied().collect();
        self.subgroup_generated(&gens)
    }

    /// The left coset `gH` as a sorted list.
    pub fn left_coset(&self, g: usize, h: &Subgroup) -> Vec<usize> {
        let mut c: Vec<usize> = h.elements.iter().map(|&x| self.mul(g, x)).collect();
        c.sort_unstable();
        c
    }

    /// Minimal-index representatives of the left cosets of `h`, ascending.
    pub fn coset_representatives(&self, h: &Subgroup) -> Vec<usize> {
        let mut seen = vec![false; self.order()];
        let mut reps = Vec::new();
        for g in self.elements() {
            if !seen[g] {
                reps.push(g);
                for x in self.left_coset(g, h) {
                    seen[x] = true;
                }
            }
        }
        reps
    }

    pub fn quotient_group(&self, n: &Subgroup) -> Result<Quotient> {
        if !self.is_normal(n) {
            return Err(Error::NotNormal);
        }
        let reps = self.coset_representatives(n);
        let mut projection = vec![0; self.order()];
        for (i, &r) in reps.iter().enumerate() {
            for x in self.left_coset(r, n) {
                projection[x] = i;
            }
        }
        let table = reps.iter().map(|&a| reps.iter().map(|&b| projection[self.mul(a, b)]).collect()).collect();
        let labels = reps
            .iter()
            .map(|&r| if n.is_trivial() { self.labels[r].clone() } else { format!("[{}]", self.labels[r]) })
            .collect();
        let group = FiniteGroup::from_table(table, Some(labels))?;
        Ok(Quotient { group, projection, representatives: reps })
    }

    /// A Sylow `p`-subgroup: greedily adjoin `p`-elements of least index while
    /// the closure stays a `p`-group. `p = 0` stands for characteristic zero
    /// and gives the trivial subgroup.
    pub fn sylow_subgroup(&self, p: u64) -> Subgroup {
        let mut s = self.trivial_subgroup();
        if p < 2 {
            return s;
        }
        let is_p_power = |n: usize| {
            let mut n = n as u64;
            while n.is_multiple_of(p) {
                n /= p;
            }
            n == 1
        };
        for g in self.elements() {
            if s.contains(g) || !is_p_power(self.element_order(g)) {
                continue;
            }
            let mut gens = s.elements.clone();
            gens.push(g);
            let t = self.subgroup_generated(&gens);
            if is_p_power(t.order()) {
                s = t;
            }
        }
        s
    }

    pub fn commutator_subgroup(&self) -> Subgroup {
        let gens: Vec<usize> = self
            .elements()
            .flat_map(|a| self.elements().map(move |b| (a, b)))
            .map(|(a, b)| self.mul(self.mul(a, b), self.mul(self.inv(a), self.inv(b))))
            .collect();
        self.subgroup_generated(&gens)
    }

    /// Is `whole` the internal direct product of `a` and `b`?
    pub fn internal_direct_product_check(&self, whole: &Subgroup, a: &Subgroup, b: &Subgroup) -> bool {
        a.is_subset_of(whole)
            && b.is_subset_of(whole)
            && self.intersection(a, b).is_trivial()
            && a.order() * b.order() == whole.order()
            && a.elements.iter().all(|&x| b.elements.iter().all(|&y| self.mul(x, y) == self.mul(y, x)))
    }

    /// Is every element of `a` commuting with every element of `b`?
    pub fn commute(&self, a: &Subgroup, b: &Subgroup) -> bool {
        a.elements.iter().all(|&x| b.elements.iter().all(|&y| self.mul(x, y) == self.mul(y, x)))
    }

    /// Every subgroup, sorted by (order, elements).
    pub fn enumerate_all_subgroups(&self) -> Vec<Subgroup> {
        let mut found: BTreeSet<Subgroup> = self.elements().map(|g| self.subgroup_generated(&[g])).collect();
        let cyclic: Vec<Subgroup> = found.iter().cloned().collect();
        let mut frontier: Vec<Subgroup> = cyclic.clone();
        while !frontier.is_empty() {
            let mut next = Vec::new();
            for s in &frontier {
                for c in &cyclic {
                    let j = self.join(s, c);
                    if found.insert(j.clone()) {
                        next.push(j);
                    }
                }
            }
            frontier = next;
        }
        let mut all: Vec<Subgroup> = found.into_iter().collect();
        all.sort_by(|a, b| a.order().cmp(&b.order()).then_with(|| a.cmp(b)));
        all
    }

    /// The subgroup as a group in its own right; `embedding[i]` is the
    /// ambient index of its `i`-th element.
    pub fn subgroup_as_group(&self, h: &Subgroup) -> (FiniteGroup, Vec<usize>) {
        let emb = h.elements.clone();
        let table = emb
            .iter()
            .map(|&a| emb.iter().map(|&b| h.position(self.mul(a, b)).expect("closed")).collect())
            .collect();
        let labels = emb.iter().map(|&a| self.labels[a].clone()).collect();
        let g = FiniteGroup::from_table(table, Some(labels)).expect("subgroup of a valid group");
        (g, emb)
    }

    /// Greedy generating set: least-index elements not in the span so far.
    pub fn generators(&self) -> Vec<usize> {
        let mut gens = Vec::new();
        let mut span = self.trivial_subgroup();
        for g in self.elements() {
            if !span.contains(g) {
                gens.push(g);
                span = self.subgroup_generated(&gens);
            }
        }
        gens
    }

    /// All homomorphisms into `Z/m`, as value vectors indexed by element.
    pub fn homs_to_cyclic(&self, m: u64) -> Vec<Vec<u64>> {
        let gens = self.generators();
        let mut out = Vec::new();
        let total = (m as usize).pow(gens.len() as u32);
        for code in 0..total {
            let mut c = code;
            let images: Vec<u64> = gens
                .iter()
                .map(|_| {
                    let v = (c % m as usize) as u64;
                    c /= m as usize;
                    v
                })
                .collect();
            if let Some(h) = self.extend_to_cyclic_hom(&gens, &images, m) {
                out.push(h);
            }
        }
        out.sort();
        out
    }

    fn extend_to_cyclic_hom(&self, gens: &[usize], images: &[u64], m: u64) -> Option<Vec<u64>> {
        let mut val: Vec<Option<u64>> = vec![None; self.order()];
        val[self.identity] = Some(0);
        let mut queue = VecDeque::from([self.identity]);
        while let Some(x) = queue.pop_front() {
            for (&g, &v) in gens.iter().zip(images) {
                let y = self.mul(x, g);
                let vy = (val[x].unwrap() + v) % m;
                match val[y] {
                    None => {
                        val[y] = Some(vy);
                        queue.push_back(y);
                    }
                    Some(w) if w != vy => return None,
                    _ => {}
                }
            }
        }
        let h: Vec<u64> = val.into_iter().map(Option::unwrap).collect();
        let ok = self.elements().all(|a| self.elements().all(|b| h[self.mul(a, b)] == (h[a] + h[b]) % m));
        ok.then_some(h)
    }

    /// Basis of an abelian group as a product of cyclic groups of prime-power
    /// order (primes ascending, orders descending within each prime).
    fn abelian_basis(&self) -> AbelianCoords {
        let n = self.order() as u64;
        let mut generators = Vec::new();
        let mut orders = Vec::new();
        for p in crate::exactfields::finite::prime_factors(n) {
            let primary = Subgroup {
                elements: self.elements().filter(|&g| is_power_of(self.element_order(g) as u64, p)).collect(),
            };
            let (pg, emb) = self.subgroup_as_group(&primary);
            for (g, o) in pg.p_group_basis() {
                generators.push(emb[g]);
                orders.push(o);
            }
        }
        let mut vectors = vec![Vec::new(); self.order()];
        let mut idx = vec![0u64; orders.len()];
        loop {
            let g = generators
                .iter()
                .zip(&idx)
                .fold(self.identity, |acc, (&gen, &e)| self.mul(acc, self.pow(gen, e as i64)));
            vectors[g] = idx.clone();
            let mut i = 0;
            while i < idx.len() {
                idx[i] += 1;
                if idx[i] < orders[i] {
                    break;
                }
                idx[i] = 0;
                i += 1;
            }
            if i == idx.len() {
                break;
            }
        }
        AbelianCoords { orders, generators, vectors }
    }

    /// Basis of an abelian `p`-group: an element of maximal order, then lifts
    /// of a basis of the quotient by it.
    fn p_group_basis(&self) -> Vec<(usize, u64)> {
        if self.order() == 1 {
            return Vec::new();
        }
        let g1 = self.elements().max_by_key(|&g| (self.element_order(g), std::cmp::Reverse(g))).unwrap();
        let c = self.subgroup_generated(&[g1]);
        let q = self.quotient_group(&c).expect("abelian");
        let mut basis = vec![(g1, self.element_order(g1) as u64)];
        for (qg, o) in q.group.p_group_basis() {
            let h = q.representatives[qg];
            let hk = self.pow(h, o as i64);
            let k = (0..c.order() as i64).find(|&k| self.pow(g1, k) == hk).expect("power lies in <g1>");
            debug_assert_eq!(k % o as i64, 0);
            let lift = self.mul(h, self.pow(g1, -(k / o as i64)));
            basis.push((lift, o));
        }
        basis
    }

    /// Exponent of the group (lcm of element orders).
    pub fn exponent(&self) -> u64 {
        self.elements().fold(1u64, |acc, g| {
            let o = self.element_order(g) as u64;
            acc / gcd(acc, o) * o
        })
    }
}

fn is_power_of(mut n: u64, p: u64) -> bool {
    while n.is_multiple_of(p) {
        n /= p;
    }
    n == 1
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(name: &str) -> FiniteGroup {
        named_group(name).unwrap()
    }

    #[test]
    fn generated_subgroups() {
        let c4 = g("cyclic:4");
        let a = c4.index_of("a").unwrap();
        let a2 = c4.index_of("a^2").unwrap();
        assert_eq!(c4.subgroup_generated(&[a2]).elements(), &[c4.identity(), a2]);
        assert!(c4.subgroup_generated(&[]).is_trivial());
        assert_eq!(c4.subgroup_generated(&[a]).order(), 4);
        let s3 = g("s3");
        let gens = [s3.index_of("(12)").unwrap(), s3.index_of("(123)").unwrap()];
        assert_eq!(s3.subgroup_generated(&gens).order(), 6);
    }

    #[test]
    fn quotients() {
        let c4 = g("cyclic:4");
        let h = c4.subgroup_generated(&[c4.index_of("a^2").unwrap()]);
        let q = c4.quotient_group(&h).unwrap();
        assert_eq!(q.group.order(), 2);
        let s3 = g("s3");
        let a3 = s3.subgroup_generated(&[s3.index_of("(123)").unwrap()]);
        assert_eq!(s3.quotient_group(&a3).unwrap().group.order(), 2);
        let q1 = s3.quotient_group(&s3.trivial_subgroup()).unwrap();
        assert_eq!(q1.group.table(), s3.table());
        let t = s3.subgroup_generated(&[s3.index_of("(12)").unwrap()]);
        assert_eq!(s3.quotient_group(&t).unwrap_err(), Error::NotNormal);
        for x in s3.elements() {
            for y in s3.elements() {
                let p = &q1.projection;
                assert_eq!(q1.group.mul(p[x], p[y]), p[s3.mul(x, y)]);
            }
        }
    }

    #[test]
    fn sylow_examples() {
        let c6 = g("cyclic:6");
        assert_eq!(c6.sylow_subgroup(2).elements(), &[0, c6.index_of("a^3").unwrap()]);
        assert!(c6.sylow_subgroup(5).is_trivial());
        assert!(c6.sylow_subgroup(0).is_trivial());
        assert_eq!(g("klein4").sylow_subgroup(2).order(), 4);
        assert_eq!(g("s3").sylow_subgroup(2).order(), 2);
        assert_eq!(g("s3").sylow_subgroup(3).order(), 3);
        assert_eq!(g("dihedral:4").sylow_subgroup(2).order(), 8);
    }

    #[test]
    fn commutators_and_products() {
        let s3 = g("s3");
        assert_eq!(s3.commutator_subgroup().order(), 3);
        assert!(!s3.is_abelian());
        let c6 = g("cyclic:6");
        assert!(c6.commutator_subgroup().is_trivial());
        let p = c6.sylow_subgroup(2);
        let q = c6.sylow_subgroup(3);
        assert!(c6.internal_direct_product_check(&c6.whole(), &p, &q));
        assert!(!s3.internal_direct_product_check(&s3.whole(), &s3.sylow_subgroup(3), &s3.sylow_subgroup(2)));
    }

    #[test]
    fn subgroup_enumeration() {
        assert_eq!(g("klein4").enumerate_all_subgroups().len(), 5);
        assert_eq!(g("s3").enumerate_all_subgroups().len(), 6);
        assert_eq!(g("cyclic:12").enumerate_all_subgroups().len(), 6);
        assert_eq!(g("dihedral:4").enumerate_all_subgroups().len(), 10);
    }

    #[test]
    fn abelian_coordinates_from_table() {
        let c6 = g("cyclic:6");
        let g2 = FiniteGroup::from_table(c6.table().to_vec(), None).unwrap();
        let coords = g2.abelian_coords().unwrap();
        assert_eq!(coords.orders, vec![2, 3]);
        let k = g("product:cyclic:4,cyclic:2");
        let g3 = FiniteGroup::from_table(k.table().to_vec(), None).unwrap();
        assert_eq!(g3.abelian_coords().unwrap().orders, vec![4, 2]);
        let hom_count = g3.homs_to_cyclic(4).len();
        assert_eq!(hom_count, 8);
    }

    #[test]
    fn rejects_non_groups() {
        assert!(FiniteGroup::from_table(vec![vec![0, 1], vec![1, 1]], None).is_err());
        assert!(FiniteGroup::from_table(vec![vec![0, 1, 2], vec![1, 0, 2], vec![2, 2, 0]], None).is_err());
    }
}
