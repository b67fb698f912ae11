//! Run reports: one struct holding every fact a run produced, rendered as
//! either stable JSON (schema_version 1) or human-readable text. The two
//! renderings contain identical facts; both are deterministic byte-for-byte
//! for identical inputs and options.

use serde::Serialize;

pub const SCHEMA_VERSION: u32 = 1;

/// Section status. `pass`/`fail` sections gate the exit code; `info`
/// sections report computed facts; `skipped` sections name the unmet
/// prerequisite.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Pass,
    Fail,
    Info,
    Skipped,
}

#[derive(Debug, Clone, Serialize)]
pub struct CheckEntry {
    pub name: String,
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Vec<String>>,
}

impl CheckEntry {
    pub fn new(name: &str, pass: bool, witness: Option<Vec<usize>>) -> Self {
        CheckEntry {
            name: name.to_string(),
            pass,
            witness: witness.map(|w| w.iter().map(|v| v.to_string()).collect()),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct SpecInfo {
    pub name: String,
    pub source: String,
    pub dim: usize,
    pub n: usize,
    pub params: Vec<String>,
    /// (parameter, substituted rational) pairs, sorted by name.
    pub substitutions: Vec<(String, String)>,
}

#[derive(Debug, Clone, Serialize)]
pub struct JacobiSection {
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Vec<String>>,
}

#[derive(Debug, Clone, Serialize)]
pub struct AxiomsSection {
    pub status: Status,
    pub entries: Vec<CheckEntry>,
}

#[derive(Debug, Clone, Serialize)]
pub struct AssociatedMetricSection {
    pub status: Status,
    pub symmetric: bool,
    /// (positive, negative, zero) inertia.
    pub signature: [usize; 3],
    /// Rows [i, j, value] for every nonzero component, in index order.
    pub nonzero: Vec<Vec<String>>,
}

#[derive(Debug, Clone, Serialize)]
pub struct ParaSasakiSection {
    pub status: Status,
    pub holds: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Vec<String>>,
}

#[derive(Debug, Clone, Serialize)]
pub struct RicciInfo {
    /// Rows [j, k, value] for every nonzero component, in index order.
    pub nonzero: Vec<Vec<String>>,
}

#[derive(Debug, Clone, Serialize)]
pub struct CurvatureSection {
    pub status: Status,
    pub ricci: RicciInfo,
    pub tau: String,
    pub tau_tilde: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct SimpleCheckSection {
    pub status: Status,
    pub entries: Vec<CheckEntry>,
}

#[derive(Debug, Clone, Serialize)]
pub struct BianchiSection {
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct EinsteinLikeSection {
    pub status: Status,
    /// "fit" or "no_fit".
    pub outcome: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub a: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub b: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub c: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub kind: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub unique: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Vec<String>>,
}

#[derive(Debug, Clone, Serialize)]
pub struct SolitonSection {
    pub status: Status,
    pub potential: String,
    pub outcome: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub k: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub lambda: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub mu: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub nu: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub unique: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub gauge: Option<String>,
    pub post_checks: Vec<CheckEntry>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Vec<String>>,
}

#[derive(Debug, Clone, Serialize)]
pub struct CorrespondenceSection {
    pub status: Status,
    pub fits_agree: bool,
    pub relations: Vec<CheckEntry>,
    pub special_cases: Vec<CheckEntry>,
}

#[derive(Debug, Clone, Serialize)]
pub struct NablaRhoSection {
    pub status: Status,
    /// Rows [i, j, k, value] for every nonzero component, in index order.
    pub nonzero: Vec<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub closed_form_reeb: Option<CheckEntry>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub closed_form_vertical: Option<CheckEntry>,
}

#[derive(Debug, Clone, Serialize)]
pub struct RecurrenceSection {
    pub status: Status,
    /// "verified" | "excluded_case" | "failed" | "not_applicable".
    pub outcome: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Vec<String>>,
}

#[derive(Debug, Clone, Serialize)]
pub struct VerdictEntry {
    pub holds: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Vec<String>>,
}

impl VerdictEntry {
    pub fn from_core(v: &parasol_core::Verdict) -> Self {
        VerdictEntry {
            holds: v.holds,
            witness: v
                .witness
                .as_ref()
                .map(|w| w.iter().map(|x| x.to_string()).collect()),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct OneFormEntry {
    /// "fit" | "only_zero" | "inconsistent" | "ricci_zero".
    pub outcome: String,
    pub holds: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub alpha: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub beta: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Vec<String>>,
}

#[derive(Debug, Clone, Serialize)]
pub struct ClassificationSection {
    pub status: Status,
    pub locally_ricci_symmetric: VerdictEntry,
    pub ricci_eta_parallel: VerdictEntry,
    pub ricci_parallel_along_xi: VerdictEntry,
    pub recurrence: RecurrenceSection,
    pub ricci_semi_symmetric: VerdictEntry,
    pub globally_phi_symmetric: VerdictEntry,
    pub locally_phi_symmetric: VerdictEntry,
    pub cyclic_parallel: VerdictEntry,
    pub codazzi: VerdictEntry,
    pub almost_pseudo_ricci_symmetric: OneFormEntry,
    pub special_weakly_ricci_symmetric: OneFormEntry,
    pub einstein: VerdictEntry,
    /// name → agreement with the Einstein verdict.
    pub einstein_equivalences: Vec<(String, bool)>,
}

#[derive(Debug, Clone, Serialize)]
pub struct HTensorSection {
    pub status: Status,
    pub mu: String,
    pub nu: String,
    pub lambda: String,
    pub h_xi_xi: String,
    /// Rows [i, j, value] of h.
    pub h_nonzero: Vec<Vec<String>>,
    pub parallel: VerdictEntry,
    pub lambda_relation: CheckEntry,
    pub soliton_equation: VerdictEntry,
    pub equivalence: CheckEntry,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub solver_cross_check: Option<CheckEntry>,
    pub curvature_reeb_identity: VerdictEntry,
    pub reeb_component_identity: VerdictEntry,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub multiple_of_g: Option<VerdictEntry>,
}

#[derive(Debug, Clone, Serialize)]
pub struct SkippedSection {
    pub status: Status,
    pub reason: String,
}

/// Either a computed section or a skip marker, flattened into the JSON.
#[derive(Debug, Clone, Serialize)]
#[serde(untagged)]
pub enum Section<T> {
    Ran(T),
    Skipped(SkippedSection),
}

impl<T> Section<T> {
    pub fn skipped(reason: &str) -> Self {
        Section::Skipped(SkippedSection {
            status: Status::Skipped,
            reason: reason.to_string(),
        })
    }
}

#[derive(Debug, Clone, Serialize, Default)]
pub struct Results {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub jacobi: Option<Section<JacobiSection>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub axioms: Option<Section<AxiomsSection>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub associated_metric: Option<Section<AssociatedMetricSection>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub para_sasaki: Option<Section<ParaSasakiSection>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub curvature: Option<Section<CurvatureSection>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub identities: Option<Section<SimpleCheckSection>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub bianchi: Option<Section<BianchiSection>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub einstein_like: Option<Section<EinsteinLikeSection>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub soliton_reeb: Option<Section<SolitonSection>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub soliton_collinear: Option<Section<SolitonSection>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub correspondence: Option<Section<CorrespondenceSection>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub nabla_rho: Option<Section<NablaRhoSection>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub recurrence: Option<Section<RecurrenceSection>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub classification: Option<Section<ClassificationSection>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub h_tensor: Option<Section<HTensorSection>>,
}

#[derive(Debug, Clone, Serialize)]
pub struct Summary {
    pub failed: Vec<String>,
    pub skipped: Vec<String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct RunReport {
    pub schema_version: u32,
    pub generator: String,
    pub spec: SpecInfo,
    pub checks_requested: Vec<String>,
    pub results: Results,
    pub notes: Vec<String>,
    pub summary: Summary,
}

impl RunReport {
    /// JSON rendering; stable key order (struct order) and formatting.
    pub fn to_json(&self) -> String {
        let mut out = serde_json::to_string_pretty(self).expect("serializable report");
        out.push('\n');
        out
    }

    /// Every scalar expression string the report carries, for round-trip
    /// verification against the expression parser.
    pub fn scalar_strings(&self) -> Vec<String> {
        let mut out = Vec::new();
        let push_rows = |rows: &Vec<Vec<String>>, out: &mut Vec<String>| {
            for row in rows {
                if let Some(last) = row.last() {
                    out.push(last.clone());
                }
            }
        };
        if let Some(Section::Ran(s)) = &self.results.associated_metric {
            push_rows(&s.nonzero, &mut out);
        }
        if let Some(Section::Ran(s)) = &self.results.curvature {
            push_rows(&s.ricci.nonzero, &mut out);
            out.push(s.tau.clone());
            out.push(s.tau_tilde.clone());
        }
        if let Some(Section::Ran(s)) = &self.results.einstein_like {
            for v in [&s.a, &s.b, &s.c].into_iter().flatten() {
                out.push(v.clone());
            }
        }
        for sol in [&self.results.soliton_reeb, &self.results.soliton_collinear] {
            if let Some(Section::Ran(s)) = sol {
                for v in [&s.k, &s.lambda, &s.mu, &s.nu].into_iter().flatten() {
                    out.push(v.clone());
                }
            }
        }
        if let Some(Section::Ran(s)) = &self.results.nabla_rho {
            push_rows(&s.nonzero, &mut out);
        }
        if let Some(Section::Ran(s)) = &self.results.classification {
            for one_form in [
                &s.almost_pseudo_ricci_symmetric,
                &s.special_weakly_ricci_symmetric,
            ] {
                if let Some(alpha) = &one_form.alpha {
                    out.extend(alpha.iter().cloned());
                }
                if let Some(beta) = &one_form.beta {
                    out.extend(beta.iter().cloned());
                }
            }
        }
        if let Some(Section::Ran(s)) = &self.results.h_tensor {
            out.push(s.mu.clone());
            out.push(s.nu.clone());
            out.push(s.lambda.clone());
            out.push(s.h_xi_xi.clone());
            push_rows(&s.h_nonzero, &mut out);
        }
        // substituted values are rationals, also expressions
        for (_, v) in &self.spec.substitutions {
            out.push(v.clone());
        }
        out
    }

    /// Human-readable rendering with the same facts as the JSON.
    pub fn to_text(&self) -> String {
        let mut w = String::new();
        let push = |w: &mut String, line: String| {
            w.push_str(&line);
            w.push('\n');
        };
        push(
            &mut w,
            format!("{} report (schema {})", self.generator, self.schema_version),
        );
        push(
            &mut w,
            format!(
                "spec: {} (source {}, dim {}, n {})",
                self.spec.name, self.spec.source, self.spec.dim, self.spec.n
            ),
        );
        if !self.spec.params.is_empty() {
            push(&mut w, format!("params: {}", self.spec.params.join(", ")));
        }
        if !self.spec.substitutions.is_empty() {
            let subs: Vec<String> = self
                .spec
                .substitutions
                .iter()
                .map(|(k, v)| format!("{k} = {v}"))
                .collect();
            push(&mut w, format!("substitutions: {}", subs.join(", ")));
        }
        push(
            &mut w,
            format!("checks: {}", self.checks_requested.join(", ")),
        );
        push(&mut w, String::new());

        fn status_str(s: Status) -> &'static str {
            match s {
                Status::Pass => "pass",
                Status::Fail => "FAIL",
                Status::Info => "info",
                Status::Skipped => "skipped",
            }
        }
        fn entry_line(e: &CheckEntry) -> String {
            let mut line = format!("    {} {}", if e.pass { "ok  " } else { "FAIL" }, e.name);
            if let Some(wit) = &e.witness {
                line.push_str(&format!(" [witness ({})]", wit.join(",")));
            }
            line
        }
        fn verdict_str(v: &VerdictEntry) -> String {
            match (&v.holds, &v.witness) {
                (true, _) => "true".to_string(),
                (false, Some(w)) => format!("false [witness ({})]", w.join(",")),
                (false, None) => "false".to_string(),
            }
        }
        fn rows_str(rows: &[Vec<String>]) -> String {
            if rows.is_empty() {
                return "none".to_string();
            }
            rows.iter()
                .map(|r| {
                    let (idx, val) = r.split_at(r.len() - 1);
                    format!("[{}] = {}", idx.join(","), val[0])
                })
                .collect::<Vec<_>>()
                .join(", ")
        }

        macro_rules! section {
            ($field:ident, $title:expr, $body:expr) => {
                if let Some(section) = &self.results.$field {
                    match section {
                        Section::Skipped(s) => {
                            push(
                                &mut w,
                                format!("[{}] {}: {}", status_str(s.status), $title, s.reason),
                            );
                        }
                        Section::Ran(s) => {
                            push(&mut w, format!("[{}] {}", status_str(s.status), $title));
                            #[allow(clippy::redundant_closure_call)]
                            ($body)(&mut w, s);
                        }
                    }
                }
            };
        }

        section!(jacobi, "jacobi", |w: &mut String, s: &JacobiSection| {
            if let Some(wit) = &s.witness {
                push(
                    w,
                    format!("    first violating triple: ({})", wit.join(",")),
                );
            }
        });
        section!(axioms, "axioms", |w: &mut String, s: &AxiomsSection| {
            for e in &s.entries {
                push(w, entry_line(e));
            }
        });
        section!(
            associated_metric,
            "associated-metric",
            |w: &mut String, s: &AssociatedMetricSection| {
                push(w, format!("    symmetric: {}", s.symmetric));
                push(
                    w,
                    format!(
                        "    signature: ({}, {}) with {} null directions",
                        s.signature[0], s.signature[1], s.signature[2]
                    ),
                );
                push(w, format!("    nonzero: {}", rows_str(&s.nonzero)));
            }
        );
        section!(
            para_sasaki,
            "para-sasaki",
            |w: &mut String, s: &ParaSasakiSection| {
                push(w, format!("    para-Sasaki-like: {}", s.holds));
                if let Some(wit) = &s.witness {
                    push(w, format!("    first violating pair: ({})", wit.join(",")));
                }
            }
        );
        section!(
            curvature,
            "curvature",
            |w: &mut String, s: &CurvatureSection| {
                push(
                    w,
                    format!("    ricci nonzero: {}", rows_str(&s.ricci.nonzero)),
                );
                push(w, format!("    tau: {}", s.tau));
                push(w, format!("    tau_tilde: {}", s.tau_tilde));
            }
        );
        section!(
            identities,
            "identities",
            |w: &mut String, s: &SimpleCheckSection| {
                for e in &s.entries {
                    push(w, entry_line(e));
                }
            }
        );
        section!(bianchi, "bianchi", |w: &mut String, s: &BianchiSection| {
            if let Some(wit) = &s.witness {
                push(w, format!("    violating direction: {wit}"));
            }
        });
        section!(
            einstein_like,
            "einstein-like",
            |w: &mut String, s: &EinsteinLikeSection| {
                push(w, format!("    outcome: {}", s.outcome));
                if let (Some(a), Some(b), Some(c)) = (&s.a, &s.b, &s.c) {
                    push(w, format!("    (a, b, c) = ({a}, {b}, {c})"));
                }
                if let Some(kind) = &s.kind {
                    push(w, format!("    kind: {kind}"));
                }
                if let Some(unique) = s.unique {
                    push(w, format!("    unique: {unique}"));
                }
                if let Some(wit) = &s.witness {
                    push(w, format!("    unmatchable component: ({})", wit.join(",")));
                }
            }
        );
        for (field_name, title) in [
            ("soliton_reeb", "soliton-reeb"),
            ("soliton_collinear", "soliton-collinear"),
        ] {
            let section = match field_name {
                "soliton_reeb" => &self.results.soliton_reeb,
                _ => &self.results.soliton_collinear,
            };
            if let Some(section) = section {
                match section {
                    Section::Skipped(s) => {
                        push(
                            &mut w,
                            format!("[{}] {}: {}", status_str(s.status), title, s.reason),
                        );
                    }
                    Section::Ran(s) => {
                        push(&mut w, format!("[{}] {}", status_str(s.status), title));
                        push(&mut w, format!("    potential: {}", s.potential));
                        push(&mut w, format!("    outcome: {}", s.outcome));
                        if let (Some(k), Some(l), Some(m), Some(n)) =
                            (&s.k, &s.lambda, &s.mu, &s.nu)
                        {
                            push(
                                &mut w,
                                format!("    k = {k}, (lambda, mu, nu) = ({l}, {m}, {n})"),
                            );
                        }
                        if let Some(unique) = s.unique {
                            push(&mut w, format!("    unique: {unique}"));
                        }
                        if let Some(gauge) = &s.gauge {
                            push(&mut w, format!("    gauge: {gauge}"));
                        }
                        for e in &s.post_checks {
                            push(&mut w, entry_line(e));
                        }
                        if let Some(wit) = &s.witness {
                            push(
                                &mut w,
                                format!("    unmatchable component: ({})", wit.join(",")),
                            );
                        }
                    }
                }
            }
        }
        section!(
            correspondence,
            "correspondence",
            |w: &mut String, s: &CorrespondenceSection| {
                push(w, format!("    fits agree: {}", s.fits_agree));
                for e in &s.relations {
                    push(w, entry_line(e));
                }
                for e in &s.special_cases {
                    push(w, entry_line(e));
                }
            }
        );
        section!(
            nabla_rho,
            "nabla-rho",
            |w: &mut String, s: &NablaRhoSection| {
                push(w, format!("    nonzero: {}", rows_str(&s.nonzero)));
                for entry in [&s.closed_form_reeb, &s.closed_form_vertical]
                    .into_iter()
                    .flatten()
                {
                    push(w, entry_line(entry));
                }
            }
        );
        section!(
            recurrence,
            "recurrence",
            |w: &mut String, s: &RecurrenceSection| {
                push(w, format!("    outcome: {}", s.outcome));
                if let Some(detail) = &s.detail {
                    push(w, format!("    detail: {detail}"));
                }
                if let Some(wit) = &s.witness {
                    push(w, format!("    witness: ({})", wit.join(",")));
                }
            }
        );
        section!(
            classification,
            "classification",
            |w: &mut String, s: &ClassificationSection| {
                push(
                    w,
                    format!(
                        "    locally_ricci_symmetric: {}",
                        verdict_str(&s.locally_ricci_symmetric)
                    ),
                );
                push(
                    w,
                    format!(
                        "    ricci_eta_parallel: {}",
                        verdict_str(&s.ricci_eta_parallel)
                    ),
                );
                push(
                    w,
                    format!(
                        "    ricci_parallel_along_xi: {}",
                        verdict_str(&s.ricci_parallel_along_xi)
                    ),
                );
                push(
                    w,
                    format!(
                        "    recurrence: {}{}",
                        s.recurrence.outcome,
                        s.recurrence
                            .detail
                            .as_ref()
                            .map(|d| format!(" ({d})"))
                            .unwrap_or_default()
                    ),
                );
                push(
                    w,
                    format!(
                        "    ricci_semi_symmetric: {}",
                        verdict_str(&s.ricci_semi_symmetric)
                    ),
                );
                push(
                    w,
                    format!(
                        "    globally_phi_symmetric: {}",
                        verdict_str(&s.globally_phi_symmetric)
                    ),
                );
                push(
                    w,
                    format!(
                        "    locally_phi_symmetric: {}",
                        verdict_str(&s.locally_phi_symmetric)
                    ),
                );
                push(
                    w,
                    format!("    cyclic_parallel: {}", verdict_str(&s.cyclic_parallel)),
                );
                push(w, format!("    codazzi: {}", verdict_str(&s.codazzi)));
                let one_form = |e: &OneFormEntry| -> String {
                    let mut out = format!("{} ({})", e.holds, e.outcome);
                    if let Some(alpha) = &e.alpha {
                        out.push_str(&format!(" alpha = [{}]", alpha.join(", ")));
                    }
                    if let Some(beta) = &e.beta {
                        out.push_str(&format!(" beta = [{}]", beta.join(", ")));
                    }
                    out
                };
                push(
                    w,
                    format!(
                        "    almost_pseudo_ricci_symmetric: {}",
                        one_form(&s.almost_pseudo_ricci_symmetric)
                    ),
                );
                push(
                    w,
                    format!(
                        "    special_weakly_ricci_symmetric: {}",
                        one_form(&s.special_weakly_ricci_symmetric)
                    ),
                );
                push(w, format!("    einstein: {}", verdict_str(&s.einstein)));
                for (name, consistent) in &s.einstein_equivalences {
                    push(
                        w,
                        format!("    einstein-equivalence {}: {}", name, consistent),
                    );
                }
            }
        );
        section!(
            h_tensor,
            "h-tensor",
            |w: &mut String, s: &HTensorSection| {
                push(w, format!("    (mu, nu) = ({}, {})", s.mu, s.nu));
                push(w, format!("    h nonzero: {}", rows_str(&s.h_nonzero)));
                push(w, format!("    h(xi, xi) = {}", s.h_xi_xi));
                push(w, format!("    lambda = {}", s.lambda));
                push(w, format!("    parallel: {}", verdict_str(&s.parallel)));
                push(w, entry_line(&s.lambda_relation));
                push(
                    w,
                    format!(
                        "    soliton equation holds: {}",
                        verdict_str(&s.soliton_equation)
                    ),
                );
                push(w, entry_line(&s.equivalence));
                if let Some(e) = &s.solver_cross_check {
                    push(w, entry_line(e));
                }
                push(
                    w,
                    format!(
                        "    curvature-reeb identity: {}",
                        verdict_str(&s.curvature_reeb_identity)
                    ),
                );
                push(
                    w,
                    format!(
                        "    reeb-component identity: {}",
                        verdict_str(&s.reeb_component_identity)
                    ),
                );
                if let Some(v) = &s.multiple_of_g {
                    push(w, format!("    multiple of g: {}", verdict_str(v)));
                }
            }
        );

        push(&mut w, String::new());
        for note in &self.notes {
            push(&mut w, format!("note: {note}"));
        }
        push(
            &mut w,
            format!(
                "summary: {} failed, {} skipped",
                self.summary.failed.len(),
                self.summary.skipped.len()
            ),
        );
        if !self.summary.failed.is_empty() {
            push(
                &mut w,
                format!("failed: {}", self.summary.failed.join(", ")),
            );
        }
        if !self.summary.skipped.is_empty() {
            push(
                &mut w,
                format!("skipped: {}", self.summary.skipped.join(", ")),
            );
        }
        w
    }
}
