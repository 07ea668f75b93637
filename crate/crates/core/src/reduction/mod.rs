//! Global-to-local reduction.
//!
//! A semilocal scenario is modeled by `k` labeled components (the primitive
//! idempotents of the completion) permuted transitively by `G`, together
//! with the local scenario at label 0 over its stabilizer, the
//! decomposition group `G_0`. All verdicts for the global order are read off
//! the local scenario.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::groupkit::{FiniteGroup, Subgroup};
use crate::ramification::{analyze, AnalysisReport, Choices, RamifiedScenario};

#[derive(Clone, Debug)]
pub struct GlobalScenario {
    group: Arc<FiniteGroup>,
    /// `permutation[g][j]` is the label `g` sends `j` to.
    permutation: Vec<Vec<usize>>,
    local: RamifiedScenario,
    /// Local group element to ambient group element.
    embedding: Vec<usize>,
}

impl GlobalScenario {
    /// Checks that `permutation` is an action of `G` on `0..k`, that the
    /// embedding is an injective homomorphism, and that its image is the
    /// stabilizer of label 0. Transitivity is checked on reduction.
    pub fn new(
        group: Arc<FiniteGroup>,
        permutation: Vec<Vec<usize>>,
        local: RamifiedScenario,
        embedding: Vec<usize>,
    ) -> Result<Self> {
        let g = &group;
        let bad = |m: &str| Err(Error::InvalidScenario(m.to_string()));
        if permutation.len() != g.order() {
            return bad("one permutation per group element is required");
        }
        let k = permutation[0].len();
        if k == 0 {
            return bad("at least one component is required");
        }
        for p in &permutation {
            let mut sorted = p.clone();
            sorted.sort();
            if sorted != (0..k).collect::<Vec<_>>() {
                return bad("component permutations must be bijections of 0..k");
            }
        }
        if permutation[g.identity()] != (0..k).collect::<Vec<_>>() {
            return bad("the identity must fix every component");
        }
        for x in g.elements() {
            for y in g.elements() {
                let composed: Vec<usize> = (0..k).map(|j| permutation[x][permutation[y][j]]).collect();
                if composed != permutation[g.mul(x, y)] {
                    return bad("component permutations do not form an action");
                }
            }
        }
        let lg = local.group();
        if embedding.len() != lg.order() || embedding.iter().any(|&x| x >= g.order()) {
            return bad("local group does not embed in G");
        }
        for a in lg.elements() {
            for b in lg.elements() {
                if embedding[lg.mul(a, b)] != g.mul(embedding[a], embedding[b]) {
                    return bad("local group embedding is not a homomorphism");
                }
            }
        }
        let mut image = embedding.clone();
        image.sort();
        image.dedup();
        let gs = GlobalScenario { group, permutation, local, embedding };
        if image != gs.stabilizer(0).elements() {
            return bad("the local group must be the stabilizer of component 0");
        }
        Ok(gs)
    }

    /// Matches local group labels against the labels of `G`.
    pub fn embedding_by_labels(group: &FiniteGroup, local: &FiniteGroup) -> Result<Vec<usize>> {
        local
            .labels()
            .iter()
            .map(|l| {
                group
                    .index_of(l)
                    .ok_or_else(|| Error::InvalidScenario(format!("local element {l:?} is not an element of G")))
            })
            .collect()
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn components(&self) -> usize {
        self.permutation[0].len()
    }

    pub fn permutation(&self) -> &[Vec<usize>] {
        &self.permutation
    }

    pub fn local(&self) -> &RamifiedScenario {
        &self.local
    }

    pub fn embedding(&self) -> &[usize] {
        &self.embedding
    }

    fn stabilizer(&self, j: usize) -> Subgroup {
        let elems: Vec<usize> = self.group.elements().filter(|&x| self.permutation[x][j] == j).collect();
        self.group.subgroup(&elems).expect("stabilizers are subgroups")
    }

    fn carrier(&self, j: usize) -> Option<usize> {
        self.group.elements().find(|&x| self.permutation[x][0] == j)
    }

    pub fn is_transitive(&self) -> bool {
        (0..self.components()).all(|j| self.carrier(j).is_some())
    }

    /// Relabels components by `tau` (old label to new label), moving the
    /// local data to the component now labeled 0 by conjugation.
    pub fn relabel(&self, tau: &[usize]) -> Result<GlobalScenario> {
        let k = self.components();
        let mut sorted = tau.to_vec();
        sorted.sort();
        if sorted != (0..k).collect::<Vec<_>>() {
            return Err(Error::InvalidScenario("relabeling must be a bijection of the components".into()));
        }
        let mut inverse = vec![0; k];
        for (j, &t) in tau.iter().enumerate() {
            inverse[t] = j;
        }
        let permutation: Vec<Vec<usize>> =
            self.permutation.iter().map(|p| (0..k).map(|j| tau[p[inverse[j]]]).collect()).collect();
        let g = self.carrier(inverse[0]).ok_or(Error::Intransitive)?;
        let embedding = self.embedding.iter().map(|&x| self.group.conjugate(g, x)).collect();
        GlobalScenario::new(self.group.clone(), permutation, self.local.clone(), embedding)
    }
}

/// `G_j`, the stabilizer of component `j`, checked to equal
/// `g G_0 g^-1` for the least `g` carrying 0 to `j`.
pub fn decomposition_group(gs: &GlobalScenario, j: usize) -> Result<Subgroup> {
    if j >= gs.components() {
        return Err(Error::InvalidScenario(format!("no component {j}")));
    }
    let g = gs.carrier(j).ok_or(Error::Intransitive)?;
    let stab = gs.stabilizer(j);
    let grp = gs.group();
    let conj: Vec<usize> = gs.stabilizer(0).elements().iter().map(|&x| grp.conjugate(g, x)).collect();
    if grp.subgroup(&conj)? != stab {
        return Err(Error::Inconsistent(format!("stabilizer of component {j} is not conjugate to G_0")));
    }
    Ok(stab)
}

/// The local scenario at component 0; its analysis is the verdict for the
/// global order.
pub fn reduce_to_local(gs: &GlobalScenario) -> Result<RamifiedScenario> {
    if !gs.is_transitive() {
        return Err(Error::Intransitive);
    }
    Ok(gs.local.clone())
}

pub const TRANSFER_NOTE: &str =
    "global verdict read off component 0; the number of maximal two-sided ideals transfers unchanged";

/// `analyze ∘ reduce_to_local`, annotated.
pub fn analyze_global(gs: &GlobalScenario, choices: &Choices) -> Result<AnalysisReport> {
    let mut report = analyze(&reduce_to_local(gs)?, choices)?;
    report.notes.push(format!("{TRANSFER_NOTE} ({} components)", gs.components()));
    Ok(report)
}
