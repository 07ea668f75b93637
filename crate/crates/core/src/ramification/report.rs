use serde::Serialize;
use serde_json::Value;

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct TowerRecord {
    pub generator: String,
    pub order: u64,
    pub alpha: Value,
    pub alpha_text: String,
}

/// Why the residue crossed product is or is not semisimple.
#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum EvidenceRecord {
    Tame,
    PurelyInseparableField { tower: Vec<TowerRecord> },
    Nilpotent { step: usize, witness: String, coefficients: Value },
    NonCommutative { pair: [String; 2] },
    NonAbelianP,
}

/// The data computed for hereditary scenarios.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Structure {
    pub alpha0: Value,
    pub c: u64,
    pub d: u64,
    pub gamma_generator: String,
    pub gamma_f: Vec<String>,
    pub pi_image_order: usize,
    /// Values on `Γ_f`, in element order, of a generator of `im π_f`.
    pub pi_image_generator: Vec<Value>,
    pub h_f: Vec<String>,
    pub component_count: usize,
    /// Orbit sizes of `G` acting on the idempotents `ι_χ` by conjugation.
    pub idempotent_orbits: Vec<usize>,
}

#[derive(Clone, Debug, Default, PartialEq, Serialize)]
pub struct OracleSummary {
    /// Simple components found by decomposing the center.
    pub components: Option<usize>,
    /// The conductor found by exhaustive inflation search.
    pub inflation_conductor: Option<Vec<String>>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct AnalysisReport {
    pub field: String,
    pub group_order: usize,
    pub inertia: Vec<String>,
    pub tame: bool,
    pub p_subgroup: Vec<String>,
    pub e0: u64,
    pub sigma0: String,
    pub zeta: Value,
    pub hereditary: bool,
    pub evidence: EvidenceRecord,
    pub structure: Option<Structure>,
    pub maximal: bool,
    pub maximal_order_count: Option<usize>,
    pub oracle: Option<OracleSummary>,
    pub notes: Vec<String>,
}

fn set(items: &[String]) -> String {
    format!("{{{}}}", items.join(", "))
}

fn value(v: &Value) -> String {
    match v {
        Value::Array(items) => {
            let parts: Vec<String> = items.iter().map(value).collect();
            format!("[{}]", parts.join(","))
        }
        other => other.to_string(),
    }
}

impl AnalysisReport {
    /// The one-line answer, e.g. `MAXIMAL; hereditary; |H_f|=1; 1 maximal order`.
    pub fn verdict_line(&self) -> String {
        match (self.hereditary, self.maximal_order_count) {
            (true, Some(n)) => {
                let head = if self.maximal { "MAXIMAL" } else { "NOT MAXIMAL" };
                let orders = if n == 1 { "1 maximal order".to_string() } else { format!("{n} maximal orders") };
                format!("{head}; hereditary; |H_f|={n}; {orders}")
            }
            _ => {
                let why = match &self.evidence {
                    EvidenceRecord::Nilpotent { .. } => "nilpotent witness shown",
                    EvidenceRecord::NonCommutative { .. } => "K^f P not commutative",
                    EvidenceRecord::NonAbelianP => "P not abelian",
                    _ => "semisimplicity fails",
                };
                format!("NOT HEREDITARY ({why}); not maximal")
            }
        }
    }

    /// `2 components (formula) = 2 (oracle): OK`, when the oracle ran.
    pub fn oracle_line(&self) -> Option<String> {
        let count = self.structure.as_ref()?.component_count;
        let oracle = self.oracle.as_ref()?.components?;
        let status = if oracle == count { "OK" } else { "MISMATCH" };
        Some(format!("{count} components (formula) = {oracle} (oracle): {status}"))
    }

    pub fn to_text(&self) -> String {
        let mut out = Vec::new();
        out.push(format!("field: {}", self.field));
        out.push(format!("group order: {}; inertia G_I = {}", self.group_order, set(&self.inertia)));
        out.push(format!(
            "ramification: {}; P = {}; e_0 = {}; σ_0 = {}; ζ = {}",
            if self.tame { "tame" } else { "wild" },
            set(&self.p_subgroup),
            self.e0,
            self.sigma0,
            value(&self.zeta)
        ));
        let evidence = match &self.evidence {
            EvidenceRecord::Tame => "hereditary (tame: p does not divide |G_I|)".to_string(),
            EvidenceRecord::PurelyInseparableField { tower } => {
                let steps: Vec<String> =
                    tower.iter().map(|t| format!("U_{}^{} = {}", t.generator, t.order, t.alpha_text)).collect();
                format!("hereditary (K^f P is a purely inseparable field: {})", steps.join(", "))
            }
            EvidenceRecord::Nilpotent { step, witness, .. } => {
                format!("not hereditary (nilpotent witness {witness} at tower step {step})")
            }
            EvidenceRecord::NonCommutative { pair } => {
                format!("not hereditary (U_{} and U_{} do not commute)", pair[0], pair[1])
            }
            EvidenceRecord::NonAbelianP => "not hereditary (P is not abelian)".to_string(),
        };
        out.push(format!("heredity: {evidence}"));
        if let Some(s) = &self.structure {
            out.push(format!(
                "Γ_f: α_0 = {}; d = {}; c = {}; Γ_f = <{}> = {}",
                value(&s.alpha0),
                s.d,
                s.c,
                s.gamma_generator,
                set(&s.gamma_f)
            ));
            let gen: Vec<String> = s.pi_image_generator.iter().map(value).collect();
            out.push(format!(
                "conductor: |im π_f| = {} (generator [{}]); H_f = {}; components = {}",
                s.pi_image_order,
                gen.join(", "),
                set(&s.h_f),
                s.component_count
            ));
            let orbits: Vec<String> = s.idempotent_orbits.iter().map(ToString::to_string).collect();
            out.push(format!("idempotent orbits: [{}]", orbits.join(", ")));
        } else {
            out.push("maximal orders: n/a (not hereditary)".into());
        }
        out.push(format!("verdict: {}", self.verdict_line()));
        if let Some(line) = self.oracle_line() {
            out.push(format!("oracle: {line}"));
        }
        if let Some(h) = self.oracle.as_ref().and_then(|o| o.inflation_conductor.as_ref()) {
            out.push(format!("oracle: inflation conductor = {} = H_f: OK", set(h)));
        }
        for note in &self.notes {
            out.push(format!("note: {note}"));
        }
        out.join("\n") + "\n"
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("serializable") + "\n"
    }
}
