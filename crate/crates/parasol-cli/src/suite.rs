//! Check-suite orchestration: build the structure, run the requested
//! checks in dependency order, and assemble a deterministic report.

use crate::report::*;
use crate::spec_file::{LoadError, ManifoldSpec};
use parasol_core::scalar::{parse as parse_expr, Rational, Scalar};
use parasol_core::soliton::{
    check_constant_correspondence, check_recurrence, nabla_rho, solve_einstein_like, solve_soliton,
    EinsteinLikeSolution, Potential, RecurrenceOutcome, SolitonOutcome, SolitonSolution,
};
use parasol_core::{classify, IdentityCheck, OneFormSolve, PiStructure};
use std::collections::BTreeMap;
use thiserror::Error;

/// All check names, in execution order.
pub const ALL_CHECKS: &[&str] = &[
    "jacobi",
    "axioms",
    "associated-metric",
    "para-sasaki",
    "curvature",
    "identities",
    "bianchi",
    "einstein-like",
    "soliton-reeb",
    "soliton-collinear",
    "correspondence",
    "nabla-rho",
    "recurrence",
    "classify",
    "h-tensor",
];

#[derive(Debug, Error)]
pub enum SuiteError {
    #[error("unknown check `{0}` (available: {})", ALL_CHECKS.join(", "))]
    UnknownCheck(String),
    #[error(transparent)]
    Load(#[from] LoadError),
    #[error("invalid value for {flag}: {message}")]
    BadFlag { flag: String, message: String },
}

#[derive(Debug, Clone, Default)]
pub struct SuiteOptions {
    /// Subset of [`ALL_CHECKS`] to run; `None` runs everything.
    pub checks: Option<Vec<String>>,
    /// Rational values for declared parameters.
    pub substitutions: BTreeMap<String, Rational>,
    /// Expression for a given collinearity factor k; a bare undeclared
    /// identifier extends the parameter set.
    pub collinear_k: Option<String>,
    /// Constants for the h-tensor check; default to the solved soliton
    /// constants when absent.
    pub h_mu: Option<String>,
    pub h_nu: Option<String>,
    /// Label recorded as the spec source ("builtin" or a path).
    pub source: String,
}

const NOTE_TAU_TILDE: &str = "tau_tilde is the scalar curvature of the associated metric, \
computed by the contraction g^{ij} rho(e_i, phi e_j) + rho(xi, xi); no Levi-Civita \
connection of the associated metric is constructed.";
const NOTE_ONE_FORMS: &str = "the defining equations for almost pseudo Ricci symmetry and \
special weak Ricci symmetry are read with alpha(z)*rho(x,y) as the final term, and the \
solved 1-forms have constant frame components.";
const NOTE_NABLA_RHO_SIGN: &str = "nabla_rho components carry the sign produced by the \
Leibniz-rule computation under the curvature convention R(x,y)z = nabla_x nabla_y z - \
nabla_y nabla_x z - nabla_[x,y] z; the closed-form cross-checks use the same convention, \
and reported magnitudes are the values to compare against published component tables.";

fn scalar_str(s: &Scalar) -> String {
    s.to_string()
}

fn rows_of(t: &parasol_core::FrameTensor) -> Vec<Vec<String>> {
    t.nonzero()
        .into_iter()
        .map(|(idx, v)| {
            let mut row: Vec<String> = idx.iter().map(|i| i.to_string()).collect();
            row.push(v.to_string());
            row
        })
        .collect()
}

fn entry_of(check: &IdentityCheck) -> CheckEntry {
    CheckEntry::new(check.name, check.holds, check.witness.clone())
}

/// Run the requested checks against a parsed spec.
pub fn run_suite(spec: &ManifoldSpec, options: &SuiteOptions) -> Result<RunReport, SuiteError> {
    let requested: Vec<String> = match &options.checks {
        None => ALL_CHECKS.iter().map(|s| s.to_string()).collect(),
        Some(list) => {
            for name in list {
                if !ALL_CHECKS.contains(&name.as_str()) {
                    return Err(SuiteError::UnknownCheck(name.clone()));
                }
            }
            // preserve execution order regardless of request order
            ALL_CHECKS
                .iter()
                .filter(|name| list.iter().any(|r| r == *name))
                .map(|s| s.to_string())
                .collect()
        }
    };
    let wants = |name: &str| requested.iter().any(|r| r == name);

    // A bare identifier for k that is not declared extends the parameter
    // set; anything else must parse over the declared parameters.
    let mut extra_params = Vec::new();
    if let Some(expr) = &options.collinear_k {
        let bare_ident = expr.chars().all(|c| c.is_ascii_alphanumeric() || c == '_')
            && expr
                .chars()
                .next()
                .is_some_and(|c| c.is_ascii_alphabetic() || c == '_');
        if bare_ident && !spec.params.contains(expr) {
            extra_params.push(expr.clone());
        }
    }

    let structure = spec.build(&extra_params, &options.substitutions)?;
    let params = structure.frame().params().clone();

    let collinear_k: Option<Scalar> = match &options.collinear_k {
        None => None,
        Some(expr) => Some(parse_expr(expr, &params).map_err(|e| SuiteError::BadFlag {
            flag: "--collinear-k".to_string(),
            message: e.to_string(),
        })?),
    };
    let h_mu: Option<Scalar> = match &options.h_mu {
        None => None,
        Some(expr) => Some(parse_expr(expr, &params).map_err(|e| SuiteError::BadFlag {
            flag: "--mu".to_string(),
            message: e.to_string(),
        })?),
    };
    let h_nu: Option<Scalar> = match &options.h_nu {
        None => None,
        Some(expr) => Some(parse_expr(expr, &params).map_err(|e| SuiteError::BadFlag {
            flag: "--nu".to_string(),
            message: e.to_string(),
        })?),
    };

    let mut results = Results::default();
    let mut notes: Vec<String> = Vec::new();
    let mut failed: Vec<String> = Vec::new();
    let mut skipped: Vec<String> = Vec::new();

    // ---- jacobi ----
    let jacobi = structure.frame().check_jacobi();
    if wants("jacobi") {
        let status = if jacobi.holds {
            Status::Pass
        } else {
            Status::Fail
        };
        if !jacobi.holds {
            failed.push("jacobi".to_string());
        }
        results.jacobi = Some(Section::Ran(JacobiSection {
            status,
            witness: jacobi
                .witness
                .map(|(i, j, k)| vec![i.to_string(), j.to_string(), k.to_string()]),
        }));
    }

    // ---- connection (shared prerequisite) ----
    let conn = if jacobi.holds {
        Some(structure.frame().levi_civita().expect("jacobi holds"))
    } else {
        None
    };

    // ---- axioms ----
    let axioms = structure.check_axioms(conn.as_ref());
    if wants("axioms") {
        let status = if axioms.all_pass() {
            Status::Pass
        } else {
            Status::Fail
        };
        if !axioms.all_pass() {
            failed.push("axioms".to_string());
        }
        results.axioms = Some(Section::Ran(AxiomsSection {
            status,
            entries: axioms.entries.iter().map(entry_of).collect(),
        }));
    }
    let axioms_ok = axioms.all_pass();

    // ---- associated metric ----
    if wants("associated-metric") {
        if !axioms_ok {
            results.associated_metric = Some(Section::skipped("structure axioms fail"));
            skipped.push("associated-metric".to_string());
        } else {
            let am = structure.associated_metric().expect("rational structure");
            let expect = (structure.n() + 1, structure.n(), 0);
            let ok = am.symmetric && am.signature == expect;
            if !ok {
                failed.push("associated-metric".to_string());
            }
            results.associated_metric = Some(Section::Ran(AssociatedMetricSection {
                status: if ok { Status::Pass } else { Status::Fail },
                symmetric: am.symmetric,
                signature: [am.signature.0, am.signature.1, am.signature.2],
                nonzero: rows_of(&am.tensor),
            }));
        }
    }

    // ---- para-sasaki ----
    let para_sasaki = conn
        .as_ref()
        .filter(|_| axioms_ok)
        .map(|c| structure.is_para_sasaki(c));
    let is_psl = para_sasaki.as_ref().map(|r| r.holds).unwrap_or(false);
    if wants("para-sasaki") {
        match &para_sasaki {
            None => {
                let reason = if jacobi.holds {
                    "structure axioms fail"
                } else {
                    "Jacobi identity fails"
                };
                results.para_sasaki = Some(Section::skipped(reason));
                skipped.push("para-sasaki".to_string());
            }
            Some(r) => {
                if !r.holds {
                    failed.push("para-sasaki".to_string());
                }
                results.para_sasaki = Some(Section::Ran(ParaSasakiSection {
                    status: if r.holds { Status::Pass } else { Status::Fail },
                    holds: r.holds,
                    witness: r.witness.map(|(i, j)| vec![i.to_string(), j.to_string()]),
                }));
            }
        }
    }

    // ---- curvature data (shared) ----
    let curv = conn.as_ref().map(|c| structure.frame().curvature(c));

    if wants("curvature") {
        match (&conn, &curv) {
            (Some(_), Some(curv)) => {
                notes.push(NOTE_TAU_TILDE.to_string());
                results.curvature = Some(Section::Ran(CurvatureSection {
                    status: Status::Info,
                    ricci: RicciInfo {
                        nonzero: rows_of(&curv.ricci),
                    },
                    tau: scalar_str(&curv.tau),
                    tau_tilde: scalar_str(&structure.tau_tilde(curv)),
                }));
            }
            _ => {
                results.curvature = Some(Section::skipped("Jacobi identity fails"));
                skipped.push("curvature".to_string());
            }
        }
    }

    // ---- identity list around the Reeb direction ----
    if wants("identities") {
        match (&conn, &curv) {
            (Some(conn), Some(curv)) if is_psl => {
                let checks = structure.reeb_curvature_identities(conn, curv);
                let ok = checks.iter().all(|c| c.holds);
                if !ok {
                    failed.push("identities".to_string());
                }
                results.identities = Some(Section::Ran(SimpleCheckSection {
                    status: if ok { Status::Pass } else { Status::Fail },
                    entries: checks.iter().map(entry_of).collect(),
                }));
            }
            _ => {
                let reason = if conn.is_none() {
                    "Jacobi identity fails"
                } else if !axioms_ok {
                    "structure axioms fail"
                } else {
                    "structure is not para-Sasaki-like"
                };
                results.identities = Some(Section::skipped(reason));
                skipped.push("identities".to_string());
            }
        }
    }

    // ---- contracted second Bianchi ----
    if wants("bianchi") {
        match (&conn, &curv) {
            (Some(conn), Some(curv)) => {
                let report = structure
                    .frame()
                    .second_bianchi_contracted_check(conn, curv);
                if !report.holds {
                    failed.push("bianchi".to_string());
                }
                results.bianchi = Some(Section::Ran(BianchiSection {
                    status: if report.holds {
                        Status::Pass
                    } else {
                        Status::Fail
                    },
                    witness: report.witness.map(|k| k.to_string()),
                }));
            }
            _ => {
                results.bianchi = Some(Section::skipped("Jacobi identity fails"));
                skipped.push("bianchi".to_string());
            }
        }
    }

    // ---- einstein-like ----
    let einstein_like = match (&curv, axioms_ok) {
        (Some(curv), true) => Some(solve_einstein_like(&structure, curv)),
        _ => None,
    };
    if wants("einstein-like") {
        match &einstein_like {
            Some(sol) => {
                let section = einstein_section(sol);
                if matches!(section.status, Status::Fail) {
                    failed.push("einstein-like".to_string());
                }
                results.einstein_like = Some(Section::Ran(section));
            }
            None => {
                let reason = if conn.is_none() {
                    "Jacobi identity fails"
                } else {
                    "structure axioms fail"
                };
                results.einstein_like = Some(Section::skipped(reason));
                skipped.push("einstein-like".to_string());
            }
        }
    }

    // ---- solitons ----
    let soliton_reeb = match (&conn, &curv, axioms_ok) {
        (Some(conn), Some(curv), true) => {
            Some(solve_soliton(&structure, conn, curv, Potential::Reeb))
        }
        _ => None,
    };
    if wants("soliton-reeb") {
        match &soliton_reeb {
            Some(sol) => {
                let section = soliton_section(sol, "reeb");
                if matches!(section.status, Status::Fail) {
                    failed.push("soliton-reeb".to_string());
                }
                results.soliton_reeb = Some(Section::Ran(section));
            }
            None => {
                let reason = if conn.is_none() {
                    "Jacobi identity fails"
                } else {
                    "structure axioms fail"
                };
                results.soliton_reeb = Some(Section::skipped(reason));
                skipped.push("soliton-reeb".to_string());
            }
        }
    }

    if wants("soliton-collinear") {
        match (&conn, &curv, axioms_ok) {
            (Some(conn), Some(curv), true) => {
                let (potential, label) = match &collinear_k {
                    Some(k) => (Potential::CollinearGiven(k.clone()), "collinear (given k)"),
                    None => (Potential::CollinearFree, "collinear (free k)"),
                };
                let sol = solve_soliton(&structure, conn, curv, potential);
                let section = soliton_section(&sol, label);
                if matches!(section.status, Status::Fail) {
                    failed.push("soliton-collinear".to_string());
                }
                results.soliton_collinear = Some(Section::Ran(section));
            }
            _ => {
                let reason = if conn.is_none() {
                    "Jacobi identity fails"
                } else {
                    "structure axioms fail"
                };
                results.soliton_collinear = Some(Section::skipped(reason));
                skipped.push("soliton-collinear".to_string());
            }
        }
    }

    // ---- correspondence ----
    if wants("correspondence") {
        match (&conn, &curv, axioms_ok && is_psl) {
            (Some(conn), Some(curv), true) => {
                let report = check_constant_correspondence(&structure, conn, curv);
                let ok = report.fits_agree == Some(true)
                    && report.relations.iter().all(|c| c.holds)
                    && report.special_cases.iter().all(|c| c.holds);
                if !ok {
                    failed.push("correspondence".to_string());
                }
                results.correspondence = Some(Section::Ran(CorrespondenceSection {
                    status: if ok { Status::Pass } else { Status::Fail },
                    fits_agree: report.fits_agree.unwrap_or(false),
                    relations: report.relations.iter().map(entry_of).collect(),
                    special_cases: report.special_cases.iter().map(entry_of).collect(),
                }));
            }
            _ => {
                let reason = if conn.is_none() {
                    "Jacobi identity fails"
                } else if !axioms_ok {
                    "structure axioms fail"
                } else {
                    "structure is not para-Sasaki-like"
                };
                results.correspondence = Some(Section::skipped(reason));
                skipped.push("correspondence".to_string());
            }
        }
    }

    // ---- nabla-rho ----
    if wants("nabla-rho") {
        match (&conn, &curv) {
            (Some(conn), Some(curv)) => {
                let report = nabla_rho(&structure, conn, curv);
                let closed_ok = report
                    .closed_form_reeb
                    .iter()
                    .chain(report.closed_form_vertical.iter())
                    .all(|c| c.holds);
                if !closed_ok {
                    failed.push("nabla-rho".to_string());
                }
                notes.push(NOTE_NABLA_RHO_SIGN.to_string());
                results.nabla_rho = Some(Section::Ran(NablaRhoSection {
                    status: if closed_ok {
                        if report.closed_form_reeb.is_some()
                            || report.closed_form_vertical.is_some()
                        {
                            Status::Pass
                        } else {
                            Status::Info
                        }
                    } else {
                        Status::Fail
                    },
                    nonzero: rows_of(&report.tensor),
                    closed_form_reeb: report.closed_form_reeb.as_ref().map(entry_of),
                    closed_form_vertical: report.closed_form_vertical.as_ref().map(entry_of),
                }));
            }
            _ => {
                results.nabla_rho = Some(Section::skipped("Jacobi identity fails"));
                skipped.push("nabla-rho".to_string());
            }
        }
    }

    // ---- recurrence ----
    if wants("recurrence") {
        match (&conn, &curv, &soliton_reeb, is_psl) {
            (Some(conn), Some(curv), Some(sol), true) => {
                let outcome = check_recurrence(&structure, conn, curv, sol);
                let section = recurrence_section(&outcome);
                if matches!(section.status, Status::Fail) {
                    failed.push("recurrence".to_string());
                }
                results.recurrence = Some(Section::Ran(section));
            }
            _ => {
                let reason = if conn.is_none() {
                    "Jacobi identity fails"
                } else if !axioms_ok {
                    "structure axioms fail"
                } else {
                    "structure is not para-Sasaki-like"
                };
                results.recurrence = Some(Section::skipped(reason));
                skipped.push("recurrence".to_string());
            }
        }
    }

    // ---- classification ----
    if wants("classify") {
        match (&conn, &curv) {
            (Some(conn), Some(curv)) => {
                let report = classify(&structure, conn, curv);
                notes.push(NOTE_ONE_FORMS.to_string());
                results.classification = Some(Section::Ran(classification_section(&report)));
            }
            _ => {
                results.classification = Some(Section::skipped("Jacobi identity fails"));
                skipped.push("classify".to_string());
            }
        }
    }

    // ---- h-tensor ----
    if wants("h-tensor") {
        let constants = match (&h_mu, &h_nu) {
            (Some(mu), Some(nu)) => Some((mu.clone(), nu.clone())),
            (None, None) => match &soliton_reeb {
                Some(SolitonSolution {
                    outcome: SolitonOutcome::Fit { mu, nu, .. },
                    ..
                }) => Some((mu.clone(), nu.clone())),
                _ => None,
            },
            _ => {
                return Err(SuiteError::BadFlag {
                    flag: "--mu/--nu".to_string(),
                    message: "provide both constants or neither".to_string(),
                })
            }
        };
        match (&conn, &curv, constants, axioms_ok && is_psl) {
            (Some(conn), Some(curv), Some((mu, nu)), true) => {
                let report = parasol_core::build_h_and_check(&structure, conn, curv, &mu, &nu)
                    .expect("h is symmetric by construction");
                let ok = report.lambda_relation.holds
                    && report.equivalence.holds
                    && report
                        .solver_cross_check
                        .as_ref()
                        .map(|c| c.holds)
                        .unwrap_or(true)
                    && report
                        .diagnostics
                        .multiple_of_g
                        .as_ref()
                        .map(|v| v.holds)
                        .unwrap_or(true);
                if !ok {
                    failed.push("h-tensor".to_string());
                }
                results.h_tensor = Some(Section::Ran(HTensorSection {
                    status: if ok { Status::Pass } else { Status::Fail },
                    mu: scalar_str(&mu),
                    nu: scalar_str(&nu),
                    lambda: scalar_str(&report.lambda),
                    h_xi_xi: scalar_str(&report.diagnostics.h_xi_xi),
                    h_nonzero: rows_of(&report.h),
                    parallel: VerdictEntry::from_core(&report.diagnostics.parallel),
                    lambda_relation: entry_of(&report.lambda_relation),
                    soliton_equation: VerdictEntry::from_core(&report.soliton_equation),
                    equivalence: entry_of(&report.equivalence),
                    solver_cross_check: report.solver_cross_check.as_ref().map(entry_of),
                    curvature_reeb_identity: VerdictEntry::from_core(
                        &report.diagnostics.curvature_reeb_identity,
                    ),
                    reeb_component_identity: VerdictEntry::from_core(
                        &report.diagnostics.reeb_component_identity,
                    ),
                    multiple_of_g: report
                        .diagnostics
                        .multiple_of_g
                        .as_ref()
                        .map(VerdictEntry::from_core),
                }));
            }
            (_, _, constants, _) => {
                let reason = if conn.is_none() {
                    "Jacobi identity fails"
                } else if !axioms_ok {
                    "structure axioms fail"
                } else if !is_psl {
                    "structure is not para-Sasaki-like"
                } else if constants.is_none() {
                    "no constants available (no soliton fit and no --mu/--nu)"
                } else {
                    "prerequisites unmet"
                };
                results.h_tensor = Some(Section::skipped(reason));
                skipped.push("h-tensor".to_string());
            }
        }
    }

    let substitutions: Vec<(String, String)> = options
        .substitutions
        .iter()
        .map(|(k, v)| (k.clone(), v.to_string()))
        .collect();

    Ok(RunReport {
        schema_version: SCHEMA_VERSION,
        generator: format!("parasol {}", env!("CARGO_PKG_VERSION")),
        spec: SpecInfo {
            name: spec.name.clone(),
            source: options.source.clone(),
            dim: structure.dim(),
            n: structure.n(),
            params: params.names().to_vec(),
            substitutions,
        },
        checks_requested: requested,
        results,
        notes,
        summary: Summary { failed, skipped },
    })
}

fn einstein_section(sol: &EinsteinLikeSolution) -> EinsteinLikeSection {
    match sol {
        EinsteinLikeSolution::Fit {
            a,
            b,
            c,
            kind,
            unique,
        } => EinsteinLikeSection {
            status: Status::Pass,
            outcome: "fit".to_string(),
            a: Some(scalar_str(a)),
            b: Some(scalar_str(b)),
            c: Some(scalar_str(c)),
            kind: Some(kind.name().to_string()),
            unique: Some(*unique),
            witness: None,
        },
        EinsteinLikeSolution::NoFit { witness } => EinsteinLikeSection {
            status: Status::Fail,
            outcome: "no_fit".to_string(),
            a: None,
            b: None,
            c: None,
            kind: None,
            unique: None,
            witness: Some(vec![witness.0.to_string(), witness.1.to_string()]),
        },
    }
}

fn soliton_section(sol: &SolitonSolution, potential: &str) -> SolitonSection {
    match &sol.outcome {
        SolitonOutcome::Fit {
            k,
            lambda,
            mu,
            nu,
            unique,
            gauge,
        } => {
            let post_ok = sol.post_checks.iter().all(|c| c.holds);
            SolitonSection {
                status: if post_ok { Status::Pass } else { Status::Fail },
                potential: potential.to_string(),
                outcome: "fit".to_string(),
                k: Some(scalar_str(k)),
                lambda: Some(scalar_str(lambda)),
                mu: Some(scalar_str(mu)),
                nu: Some(scalar_str(nu)),
                unique: Some(*unique),
                gauge: gauge.map(|g| g.to_string()),
                post_checks: sol.post_checks.iter().map(entry_of).collect(),
                witness: None,
            }
        }
        SolitonOutcome::NoFit { witness } => SolitonSection {
            status: Status::Fail,
            potential: potential.to_string(),
            outcome: "no_fit".to_string(),
            k: None,
            lambda: None,
            mu: None,
            nu: None,
            unique: None,
            gauge: None,
            post_checks: sol.post_checks.iter().map(entry_of).collect(),
            witness: Some(vec![witness.0.to_string(), witness.1.to_string()]),
        },
    }
}

fn recurrence_section(outcome: &RecurrenceOutcome) -> RecurrenceSection {
    match outcome {
        RecurrenceOutcome::Verified => RecurrenceSection {
            status: Status::Pass,
            outcome: "verified".to_string(),
            detail: None,
            witness: None,
        },
        RecurrenceOutcome::ExcludedCase { detail } => RecurrenceSection {
            status: Status::Info,
            outcome: "excluded_case".to_string(),
            detail: Some(detail.clone()),
            witness: None,
        },
        RecurrenceOutcome::Failed { witness } => RecurrenceSection {
            status: Status::Fail,
            outcome: "failed".to_string(),
            detail: None,
            witness: Some(witness.iter().map(|i| i.to_string()).collect()),
        },
        RecurrenceOutcome::NotApplicable { reason } => RecurrenceSection {
            status: Status::Info,
            outcome: "not_applicable".to_string(),
            detail: Some(reason.clone()),
            witness: None,
        },
    }
}

fn one_form_entry(solve: &OneFormSolve) -> OneFormEntry {
    match solve {
        OneFormSolve::Fit { alpha, beta } => OneFormEntry {
            outcome: "fit".to_string(),
            holds: true,
            alpha: Some(alpha.iter().map(scalar_str).collect()),
            beta: beta.as_ref().map(|b| b.iter().map(scalar_str).collect()),
            witness: None,
        },
        OneFormSolve::OnlyZero => OneFormEntry {
            outcome: "only_zero".to_string(),
            holds: false,
            alpha: None,
            beta: None,
            witness: None,
        },
        OneFormSolve::Inconsistent { witness } => OneFormEntry {
            outcome: "inconsistent".to_string(),
            holds: false,
            alpha: None,
            beta: None,
            witness: Some(witness.iter().map(|i| i.to_string()).collect()),
        },
        OneFormSolve::RicciZero => OneFormEntry {
            outcome: "ricci_zero".to_string(),
            holds: false,
            alpha: None,
            beta: None,
            witness: None,
        },
    }
}

fn classification_section(report: &parasol_core::ClassificationReport) -> ClassificationSection {
    ClassificationSection {
        status: Status::Info,
        locally_ricci_symmetric: VerdictEntry::from_core(&report.locally_ricci_symmetric),
        ricci_eta_parallel: VerdictEntry::from_core(&report.ricci_eta_parallel),
        ricci_parallel_along_xi: VerdictEntry::from_core(&report.ricci_parallel_along_xi),
        recurrence: recurrence_section(&report.recurrence),
        ricci_semi_symmetric: VerdictEntry::from_core(&report.ricci_semi_symmetric),
        globally_phi_symmetric: VerdictEntry::from_core(&report.globally_phi_symmetric),
        locally_phi_symmetric: VerdictEntry::from_core(&report.locally_phi_symmetric),
        cyclic_parallel: VerdictEntry::from_core(&report.cyclic_parallel),
        codazzi: VerdictEntry::from_core(&report.codazzi),
        almost_pseudo_ricci_symmetric: one_form_entry(&report.almost_pseudo_ricci_symmetric),
        special_weakly_ricci_symmetric: one_form_entry(&report.special_weakly_ricci_symmetric),
        einstein: VerdictEntry::from_core(&report.einstein),
        einstein_equivalences: report
            .einstein_equivalences
            .iter()
            .map(|(name, ok)| (name.to_string(), *ok))
            .collect(),
    }
}

/// Exit status per the documented contract. Pass/fail sections gate exit
/// code 1; in named-check mode a skipped requested check also fails.
pub fn exit_code(report: &RunReport, named_mode: bool) -> i32 {
    if !report.summary.failed.is_empty() {
        return 1;
    }
    if named_mode && !report.summary.skipped.is_empty() {
        return 1;
    }
    0
}

/// Access a structure built from a spec with default options (used by the
/// validate command and tests).
pub fn build_structure(spec: &ManifoldSpec) -> Result<PiStructure, SuiteError> {
    Ok(spec.build(&[], &BTreeMap::new())?)
}
