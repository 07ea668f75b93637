use std::collections::BTreeSet;

use super::report::{AnalysisReport, EvidenceRecord, Structure, TowerRecord};
use super::{require_valid, RamifiedScenario};
use crate::cocycles::{
    act_on_character, brute_force_is_inflated, cyclic_characters, normalize_with_generator, pi_map, Character,
    Normalized, PiMap,
};
use crate::crossedalg::{
    check_idempotent_set, count_simple_components_oracle, iota_idempotents, purely_inseparable_field_test,
    AlgebraElement, CrossedProduct, InseparabilityVerdict, TowerStep,
};
use crate::error::{Error, Result};
use crate::exactfields::finite::gcd;
use crate::exactfields::FieldElement;
use crate::groupkit::Subgroup;

/// Overrides for the deterministic choices of `σ_0` and `ζ_(e_0)`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Choices {
    /// Label of the generator `σ_0` of the tame part.
    pub sigma0: Option<String>,
    /// Use `ζ^k` instead of the least primitive root `ζ`.
    pub zeta_power: Option<u64>,
}

impl Choices {
    /// Parses a comma-separated list such as `sigma0=a^3,zeta=3`.
    pub fn parse(s: &str) -> Result<Self> {
        let mut out = Choices::default();
        for item in s.split(',').map(str::trim).filter(|x| !x.is_empty()) {
            let (k, v) = item.split_once('=').ok_or_else(|| Error::Parse(format!("bad choice {item:?}")))?;
            match k.trim() {
                "sigma0" => out.sigma0 = Some(v.trim().to_string()),
                "zeta" => {
                    let k = v.trim().parse().map_err(|_| Error::Parse(format!("bad zeta power {v:?}")))?;
                    out.zeta_power = Some(k);
                }
                other => return Err(Error::Parse(format!("unknown choice {other:?}"))),
            }
        }
        Ok(out)
    }
}

/// `G_I = P ⋊ <σ_0>` with `x̄(σ_0) = ζ`.
#[derive(Clone, Debug)]
pub struct InertiaSplit {
    pub inertia: Subgroup,
    pub p_sub: Subgroup,
    pub e0: u64,
    pub sigma0: usize,
    /// `<σ_0>`; of order `e_0` except possibly for non-abelian `G_I`.
    pub tame_part: Subgroup,
    pub zeta: FieldElement,
}

pub fn inertia_split(s: &RamifiedScenario, choices: &Choices) -> Result<InertiaSplit> {
    require_valid(s)?;
    let (field, g) = (s.module().field(), s.group());
    let values = s.character_values()?;
    let inertia = s.inertia();
    let p_sub = s.second_ramification_group()?;
    let e0 = (inertia.order() / p_sub.order()) as u64;
    let mut zeta = field.primitive_root_of_unity(e0)?;
    if let Some(k) = choices.zeta_power {
        if gcd(k, e0) != 1 {
            return Err(Error::InvalidScenario(format!("ζ^{k} is not a primitive {e0}-th root of unity")));
        }
        zeta = field.pow(&zeta, k as i64)?;
    }
    let chi = |x: usize| values[x].as_ref().expect("defined on the inertia group");
    let sigma0 = match &choices.sigma0 {
        Some(l) => {
            let x = g.index_of(l).ok_or_else(|| Error::InvalidScenario(format!("unknown element {l:?}")))?;
            if !inertia.contains(x)
                || g.element_order(x) as u64 != e0
                || field.multiplicative_order(chi(x)) != Some(e0)
            {
                return Err(Error::InvalidScenario(format!(
                    "{l} is not an order-{e0} element generating the image of x̄"
                )));
            }
            if choices.zeta_power.is_some() && *chi(x) != zeta {
                return Err(Error::InvalidScenario(format!("x̄({l}) differs from the chosen ζ")));
            }
            zeta = chi(x).clone();
            x
        }
        None => {
            let preimages: Vec<usize> = inertia.elements().iter().copied().filter(|&x| *chi(x) == zeta).collect();
            match preimages.iter().copied().find(|&x| g.element_order(x) as u64 == e0) {
                Some(x) => x,
                None if g.commute(&inertia, &inertia) => {
                    return Err(Error::Inconsistent(format!(
                        "abelian inertia group without an order-{e0} preimage of ζ"
                    )))
                }
                None => preimages[0],
            }
        }
    };
    let tame_part = g.subgroup_generated(&[sigma0]);
    Ok(InertiaSplit { inertia, p_sub, e0, sigma0, tame_part, zeta })
}

#[derive(Clone, Debug)]
pub enum HeredityEvidence {
    /// `p ∤ |G_I|`.
    Tame,
    /// `K^f P` is a purely inseparable field.
    PurelyInseparableField { tower: Vec<TowerStep> },
    Nilpotent { step: usize, witness: AlgebraElement },
    NonCommutative { pair: (usize, usize) },
    /// `P` is not abelian, so `K^f P` cannot be a field.
    NonAbelianP,
}

#[derive(Clone, Debug)]
pub struct HeredityVerdict {
    pub hereditary: bool,
    pub evidence: HeredityEvidence,
}

/// Semisimplicity of `K^f * G`: automatic in the tame case, otherwise
/// decided by whether `K^f P` is a purely inseparable field. A positive
/// verdict is cross-checked against the structure it forces on `G_I`.
pub fn heredity_verdict(s: &RamifiedScenario, split: &InertiaSplit) -> Result<HeredityVerdict> {
    let alg = s.algebra();
    let p = s.module().field().characteristic() as usize;
    let evidence = if !split.inertia.order().is_multiple_of(p) {
        HeredityEvidence::Tame
    } else {
        match purely_inseparable_field_test(&alg, &split.p_sub) {
            Ok(InseparabilityVerdict::Field { tower }) => HeredityEvidence::PurelyInseparableField { tower },
            Ok(InseparabilityVerdict::Nilpotent { step, witness }) => HeredityEvidence::Nilpotent { step, witness },
            Ok(InseparabilityVerdict::NonCommutative { pair }) => HeredityEvidence::NonCommutative { pair },
            Err(Error::NoCyclicDecomposition(_)) if !s.group().commute(&split.p_sub, &split.p_sub) => {
                HeredityEvidence::NonAbelianP
            }
            Err(e) => return Err(e),
        }
    };
    let hereditary = matches!(evidence, HeredityEvidence::Tame | HeredityEvidence::PurelyInseparableField { .. });
    if hereditary {
        check_hereditary_structure(s, split, &alg)?;
    }
    Ok(HeredityVerdict { hereditary, evidence })
}

/// `G_I = P × C_(e_0)` abelian, `U_(σ_0)` central in `K^f G_I`, and
/// `K^f G_I = F[U_(σ_0)]` commutative with `U_(σ_0)^(e_0)` a scalar.
fn check_hereditary_structure(s: &RamifiedScenario, split: &InertiaSplit, alg: &CrossedProduct) -> Result<()> {
    let g = s.group();
    let fail = |m: &str| Err(Error::Inconsistent(format!("hereditary verdict, but {m}")));
    if !g.commute(&split.inertia, &split.inertia) {
        return fail("the inertia group is not abelian");
    }
    if split.tame_part.order() as u64 != split.e0
        || !g.internal_direct_product_check(&split.inertia, &split.p_sub, &split.tame_part)
    {
        return fail("the inertia group is not P × C_(e_0)");
    }
    let u0 = alg.basis(split.sigma0);
    for &x in split.p_sub.elements() {
        if !alg.is_zero(&alg.commutator(&u0, &alg.basis(x))?) {
            return fail("U_(σ_0) is not central in the inertia subalgebra");
        }
    }
    if !s.cocycle().is_symmetric_on(split.inertia.elements()) {
        return fail("the inertia subalgebra is not commutative");
    }
    let top = alg.pow(&u0, split.e0)?;
    if alg.support(&top) != vec![g.identity()] {
        return fail("U_(σ_0)^(e_0) is not a scalar");
    }
    Ok(())
}

/// `Γ_f = <σ_0^c>`, the largest subgroup of `<σ_0>` on which `f` splits.
#[derive(Clone, Debug)]
pub struct GammaF {
    /// `U_(σ_0)^(e_0)`.
    pub alpha0: FieldElement,
    pub d: u64,
    pub c: u64,
    /// `σ_0^c`.
    pub generator: usize,
    pub subgroup: Subgroup,
    /// `ζ^c`, of order `d`.
    pub zeta_d: FieldElement,
}

pub fn gamma_f(s: &RamifiedScenario, split: &InertiaSplit) -> Result<GammaF> {
    let (field, g) = (s.module().field(), s.group());
    let f = s.cocycle();
    let (e0, sigma0) = (split.e0, split.sigma0);
    let alpha0 = field.product((1..e0).map(|i| f.value(g.pow(sigma0, i as i64), sigma0)));
    let mut d = 1;
    for n in (1..=e0).rev().filter(|n| e0 % n == 0) {
        if field.nth_root(&alpha0, n)?.is_some() {
            d = n;
            break;
        }
    }
    let c = e0 / d;
    let generator = g.pow(sigma0, c as i64);
    let zeta_d = field.pow(&split.zeta, c as i64)?;
    Ok(GammaF { alpha0, d, c, generator, subgroup: g.subgroup_generated(&[generator]), zeta_d })
}

#[derive(Clone, Debug)]
pub struct Conductor {
    /// `f` rescaled to be trivial on `Γ_f` and constant on its cosets.
    pub normalized: Normalized,
    pub pi: PiMap,
    /// The characters of `Γ_f`, `χ_j(γ^l) = ζ_d^(jl)`.
    pub characters: Vec<Character>,
    /// `im π_f`, sorted.
    pub image: Vec<Character>,
    pub h_f: Subgroup,
    pub component_count: usize,
}

/// `H_f` as the common kernel of `im π_f ⊆ hom(Γ_f, K*)`; the number of
/// simple components is the index `d / |im π_f|`.
pub fn conductor(s: &RamifiedScenario, gf: &GammaF) -> Result<Conductor> {
    let module = s.module();
    let (field, g) = (module.field(), module.group());
    let normalized = normalize_with_generator(module, &s.cocycle(), gf.generator)?;
    let pi = pi_map(module, &normalized.cocycle, &gf.subgroup)?;
    let characters = cyclic_characters(field, g, gf.generator, &gf.zeta_d);
    for x in g.elements() {
        for chi in &characters {
            if act_on_character(module, x, &gf.subgroup, chi) != *chi {
                return Err(Error::ActionOnCharactersNontrivial);
            }
        }
    }
    let image = pi.image();
    let kernel: Vec<usize> = gf
        .subgroup
        .elements()
        .iter()
        .copied()
        .filter(|&a| image.iter().all(|chi| field.is_one(chi.at(&gf.subgroup, a))))
        .collect();
    let h_f = g.subgroup(&kernel)?;
    let d = gf.d as usize;
    if !d.is_multiple_of(image.len()) || d / image.len() != h_f.order() {
        return Err(Error::Inconsistent(format!(
            "index of im π_f is {d}/{} but |H_f| = {}",
            image.len(),
            h_f.order()
        )));
    }
    let component_count = d / image.len();
    Ok(Conductor { normalized, pi, characters, image, h_f, component_count })
}

/// The largest subgroups `H ⊆ G_I`, normal in `G`, such that `f` is
/// inflated from `G/H`, found by exhaustive search over cochains.
pub fn conductor_by_inflation(s: &RamifiedScenario) -> Result<Vec<Subgroup>> {
    let module = s.module();
    let g = module.group();
    let inertia = s.inertia();
    let f = s.cocycle();
    let mut best: Vec<Subgroup> = Vec::new();
    let candidates: Vec<Subgroup> =
        g.enumerate_all_subgroups().into_iter().filter(|h| h.is_subset_of(&inertia) && g.is_normal(h)).collect();
    for h in candidates.into_iter().rev() {
        if best.first().is_some_and(|b| b.order() > h.order()) {
            break;
        }
        if brute_force_is_inflated(module, &f, &h)?.is_some() {
            best.push(h);
        }
    }
    best.sort();
    Ok(best)
}

/// Checks that the idempotents `ι_χ` attached to `Γ_f` form a complete
/// orthogonal set and that `U_g ι_χ U_g^-1 = ι_(χ·π_f(ḡ))`. Returns the
/// orbit sizes of the resulting permutation action of `G`.
pub fn verify_idempotent_translation(s: &RamifiedScenario, gf: &GammaF, cond: &Conductor) -> Result<Vec<usize>> {
    let module = s.module();
    let (field, g) = (module.field(), module.group());
    let alg = CrossedProduct::new(module.clone(), cond.normalized.cocycle.clone());
    let iotas = iota_idempotents(&alg, gf.generator, &gf.zeta_d)?;
    if iotas.len() as u64 != gf.d || !check_idempotent_set(&alg, &iotas)? {
        return Err(Error::Inconsistent("ι idempotents are not a complete orthogonal set".into()));
    }
    let mut perms: Vec<Vec<usize>> = Vec::new();
    for x in g.elements() {
        let mut perm = Vec::with_capacity(iotas.len());
        for (chi, iota) in cond.characters.iter().zip(&iotas) {
            let moved = act_on_character(module, x, &gf.subgroup, chi).mul(field, cond.pi.of(x));
            let j = cond
                .characters
                .iter()
                .position(|c| *c == moved)
                .ok_or_else(|| Error::Inconsistent("translated character is not a character of Γ_f".into()))?;
            if alg.conjugate(x, iota)? != iotas[j] {
                return Err(Error::Inconsistent(format!(
                    "conjugation by U_{} does not translate ι by π_f",
                    g.label(x)
                )));
            }
            perm.push(j);
        }
        perms.push(perm);
    }
    let mut seen = vec![false; iotas.len()];
    let mut sizes = Vec::new();
    for start in 0..iotas.len() {
        if seen[start] {
            continue;
        }
        let orbit: BTreeSet<usize> = perms.iter().map(|p| p[start]).collect();
        for &j in &orbit {
            seen[j] = true;
        }
        sizes.push(orbit.len());
    }
    Ok(sizes)
}

/// The full analysis: inertia split, heredity, and for hereditary
/// scenarios `Γ_f`, the conductor and the number of maximal orders, with
/// the component count cross-checked by the center oracle on finite fields.
pub fn analyze(s: &RamifiedScenario, choices: &Choices) -> Result<AnalysisReport> {
    let split = inertia_split(s, choices)?;
    let verdict = heredity_verdict(s, &split)?;
    let (field, g) = (s.module().field(), s.group());
    let labels = |h: &Subgroup| h.elements().iter().map(|&x| g.label(x).to_string()).collect::<Vec<_>>();
    let tame = split.inertia.order() % field.characteristic() as usize != 0;
    let alg = s.algebra();
    let evidence = match &verdict.evidence {
        HeredityEvidence::Tame => EvidenceRecord::Tame,
        HeredityEvidence::PurelyInseparableField { tower } => EvidenceRecord::PurelyInseparableField {
            tower: tower
                .iter()
                .map(|t| TowerRecord {
                    generator: g.label(t.generator).to_string(),
                    order: t.order,
                    alpha: field.encode(&t.alpha),
                    alpha_text: field.format(&t.alpha),
                })
                .collect(),
        },
        HeredityEvidence::Nilpotent { step, witness } => EvidenceRecord::Nilpotent {
            step: *step,
            witness: alg.format(witness),
            coefficients: alg.to_json(witness),
        },
        HeredityEvidence::NonCommutative { pair } => {
            EvidenceRecord::NonCommutative { pair: [g.label(pair.0).to_string(), g.label(pair.1).to_string()] }
        }
        HeredityEvidence::NonAbelianP => EvidenceRecord::NonAbelianP,
    };
    let mut report = AnalysisReport {
        field: field.name(),
        group_order: g.order(),
        inertia: labels(&split.inertia),
        tame,
        p_subgroup: labels(&split.p_sub),
        e0: split.e0,
        sigma0: g.label(split.sigma0).to_string(),
        zeta: field.encode(&split.zeta),
        hereditary: verdict.hereditary,
        evidence,
        structure: None,
        maximal: false,
        maximal_order_count: None,
        oracle: None,
        notes: Vec::new(),
    };
    if !verdict.hereditary {
        return Ok(report);
    }
    let gf = gamma_f(s, &split)?;
    let cond = conductor(s, &gf)?;
    let orbits = verify_idempotent_translation(s, &gf, &cond)?;
    let generator = cond
        .image
        .iter()
        .max_by_key(|chi| chi.values().iter().map(|v| field.multiplicative_order(v).unwrap_or(1)).max())
        .expect("π_f has a value");
    report.structure = Some(Structure {
        alpha0: field.encode(&gf.alpha0),
        c: gf.c,
        d: gf.d,
        gamma_generator: g.label(gf.generator).to_string(),
        gamma_f: labels(&gf.subgroup),
        pi_image_order: cond.image.len(),
        pi_image_generator: generator.values().iter().map(|v| field.encode(v)).collect(),
        h_f: labels(&cond.h_f),
        component_count: cond.component_count,
        idempotent_orbits: orbits,
    });
    report.maximal = cond.h_f.order() == 1;
    report.maximal_order_count = Some(cond.h_f.order());
    report
        .notes
        .push("σ_0 and ζ are fixed by a deterministic rule; Γ_f, H_f and all counts do not depend on them".into());
    if field.is_finite() {
        let oracle = count_simple_components_oracle(&alg)?;
        if oracle.count != cond.component_count {
            return Err(Error::Inconsistent(format!(
                "{} components by the index formula but {} by center decomposition",
                cond.component_count, oracle.count
            )));
        }
        report.oracle = Some(super::OracleSummary { components: Some(oracle.count), inflation_conductor: None });
    }
    Ok(report)
}

/// Compares `H_f` from a hereditary report with the exhaustive inflation
/// search and records the result in the report.
pub fn cross_check_inflation(s: &RamifiedScenario, report: &mut AnalysisReport) -> Result<()> {
    let Some(structure) = &report.structure else {
        return Ok(());
    };
    let g = s.group();
    let found = conductor_by_inflation(s)?;
    let labels: Vec<Vec<String>> =
        found.iter().map(|h| h.elements().iter().map(|&x| g.label(x).to_string()).collect()).collect();
    if labels.len() != 1 || labels[0] != structure.h_f {
        return Err(Error::Inconsistent(format!(
            "H_f = {{{}}} but the inflation search found {labels:?}",
            structure.h_f.join(", ")
        )));
    }
    let summary = report.oracle.get_or_insert_with(Default::default);
    summary.inflation_conductor = labels.into_iter().next();
    Ok(())
}
